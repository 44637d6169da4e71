"""Exact computations with generalized V-filtrations on finite monodromic models."""

from .bfunction import RootMultiset, min_root, rescale, thom_sebastiani
from .exactq import Flag, QMat, Subspace, image, kernel, rank, rat
from .filtration import NilpotentOp, NonExistence, monodromy_filtration, relative_monodromy, splitting_dim_check
from .koszul import acyclicity_scan, build_A, build_B, cohomology, local_cohomology_filtration, sigma_shriek
from .model import MonodromicModel, Slope, delta_module_model, lv_truncation, validate
from .spectra import JumpSpectrum, cyclic_pullback, specialization_index, supported_spectrum, t_adic_generators
from .whci import WHCIInput, check_weighted_homogeneous, classify, element_order_bound, hodge_containment, parse

__version__ = "0.1.0"
