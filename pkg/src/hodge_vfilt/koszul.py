"""Koszul complexes of t-multiplications on monodromic models and their filtered cohomology."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Optional

from .exactq import Flag, QMat, Subspace, block_matrix, direct_sum_flag, kernel, rat
from .filtration import NonExistence, relative_monodromy
from .model import MonodromicModel, Slope


class WindowTooSmall(ValueError):
    def __init__(self, missing):
        self.missing = tuple(sorted(set(missing)))
        super().__init__("grades outside the model window: " + ", ".join(str(g) for g in self.missing))


class RelativeMonodromyMissing(ValueError):
    def __init__(self, grade, failure: NonExistence):
        self.grade = grade
        self.failure = failure
        super().__init__(f"no relative monodromy filtration on grade {grade} (L-degree {failure.k}, string {failure.i})")


@dataclass(frozen=True)
class Component:
    subset: tuple[int, ...]
    grade: Fraction
    dim: int


@dataclass
class KoszulComplex:
    slope: Slope
    base_index: Fraction
    kind: str
    terms: list[list[Component]]
    differentials: list[QMat]
    hodge: list[Flag]
    weight: list[Flag]

    @property
    def dims(self) -> list[int]:
        return [sum(c.dim for c in t) for t in self.terms]

    def euler_characteristic(self) -> int:
        return sum((-1) ** j * n for j, n in enumerate(self.dims))


def _subsets(r: int, j: int):
    return list(combinations(range(r), j))


def _assemble(m: MonodromicModel, lam: Fraction, kind: str, comps: list[list[Component]]) -> KoszulComplex:
    r = m.slope.r
    dims = [sum(c.dim for c in t) for t in comps]
    diffs = []
    for j in range(r):
        src, tgt = comps[j], comps[j + 1]
        index = {(c.subset, c.grade): n for n, c in enumerate(tgt)}
        blocks: list[list[Optional[QMat]]] = [[None] * len(src) for _ in tgt]
        for col, c in enumerate(src):
            for i in range(r):
                if i in c.subset:
                    continue
                s2 = tuple(sorted(c.subset + (i,)))
                row = index.get((s2, c.grade + m.slope[i]))
                if row is None:
                    continue
                mat = m.t(i, c.grade)
                sign = (-1) ** sum(1 for s in c.subset if s < i)
                blocks[row][col] = mat.scale(sign)
        diffs.append(block_matrix(blocks, [c.dim for c in tgt], [c.dim for c in src]))
    # the last differential goes to the zero space
    diffs.append(QMat.zeros(0, dims[r]))
    for j in range(r - 1):
        if not (diffs[j + 1] @ diffs[j]).is_zero():
            raise AssertionError(f"d^2 != 0 in degree {j}")
    hodge, weight = [], []
    for t in comps:
        parts = [m.piece(c.grade) for c in t if c.dim]
        hodge.append(direct_sum_flag([p.hodge.shifted(-r) for p in parts]))
        weight.append(direct_sum_flag([p.weight for p in parts]))
    return KoszulComplex(m.slope, lam, kind, comps, diffs, hodge, weight)


def build_B(m: MonodromicModel, lam) -> KoszulComplex:
    """Term j is the sum over |S| = j of the pieces at grade lam + sum_{i in S} a_i."""
    lam = rat(lam)
    r = m.slope.r
    missing = []
    comps = []
    for j in range(r + 1):
        t = []
        for S in _subsets(r, j):
            g = lam + sum(m.slope[i] for i in S)
            if not m.in_window(g):
                missing.append(g)
            t.append(Component(S, g, m.dim(g)))
        comps.append(t)
    if missing:
        raise WindowTooSmall(missing)
    return _assemble(m, lam, "B", comps)


def build_A(m: MonodromicModel, lam) -> KoszulComplex:
    """Term j is the sum over |S| = j of the grade truncation at lam + sum_S a.

    Only grades chi with chi - sum_S a <= hi - |L| are kept, so every term is
    cut at the same place and the complex splits as the sum of the B complexes
    for indices in [lam, hi - |L|].
    """
    lam = rat(lam)
    r = m.slope.r
    lo, hi = m.window
    top = hi - m.slope.weight
    missing = []
    if lam < lo:
        missing.append(lam)
    if lam > top:
        missing.append(lam + m.slope.weight)
    if missing:
        raise WindowTooSmall(missing)
    comps = []
    for j in range(r + 1):
        t = []
        for S in _subsets(r, j):
            shift = sum(m.slope[i] for i in S)
            for g in m.grades():
                if lam <= g - shift <= top:
                    t.append(Component(S, g, m.dim(g)))
        t.sort(key=lambda c: (c.subset, c.grade))
        comps.append(t)
    return _assemble(m, lam, "A", comps)


@dataclass
class CohomologyResult:
    total_dims: dict[int, int]
    hodge_dims: dict[tuple[int, int], int]
    subcomplex_dims: dict[tuple[int, int], int]
    weight_graded_dims: dict[tuple[int, int], int]
    strict: bool
    weight_strict: bool
    propagated_weight_graded_dims: dict[tuple[int, int], int] = field(default_factory=dict)

    @property
    def acyclic(self) -> bool:
        return not any(self.total_dims.values())

    @property
    def filtered_acyclic(self) -> bool:
        return self.acyclic and not any(self.subcomplex_dims.values())

    def euler_characteristic(self) -> int:
        return sum((-1) ** i * n for i, n in self.total_dims.items())


def _filtration_data(c: KoszulComplex, flags: list[Flag]):
    """Per degree i and index p: dim of the image of F_p Z in H, and dim H^i(F_p C)."""
    ker = [kernel(d) for d in c.differentials]
    bd = [Subspace.zero(c.dims[0])] + [Subspace.full(c.dims[j]).image_under(c.differentials[j]) for j in range(len(c.dims) - 1)]
    nonempty = [f for f, n in zip(flags, c.dims) if n]
    if not nonempty:
        return {}, {}, {}
    lo = min(f.low() for f in nonempty)
    hi = max(f.high() for f in nonempty)
    induced, sub = {}, {}
    for i, n in enumerate(c.dims):
        z, b = ker[i], bd[i]
        for p in range(lo, hi + 1):
            zp = z & flags[i].step(p) if n else z
            induced[(i, p)] = (zp + b).dim - b.dim
            if i == 0:
                sub[(i, p)] = zp.dim
            else:
                sub[(i, p)] = zp.dim - flags[i - 1].step(p).image_under(c.differentials[i - 1]).dim
    totals = {i: ker[i].dim - bd[i].dim for i in range(len(c.dims))}
    return totals, induced, sub


def _graded(induced: dict[tuple[int, int], int]) -> dict[tuple[int, int], int]:
    out = {}
    for (i, k), v in induced.items():
        g = v - induced.get((i, k - 1), 0)
        if g:
            out[(i, k)] = g
    return out


def cohomology(c: KoszulComplex, weight: Optional[list[Flag]] = None) -> CohomologyResult:
    """Dimensions of H^i, of the Hodge filtration on H^i, and of Gr^W H^i.

    ``strict`` compares H^i(F_p C) with the image of F_p in H^i for every (i, p).
    """
    totals, induced, sub = _filtration_data(c, c.hodge)
    if not totals:
        totals = {i: 0 for i in range(len(c.dims))}
    strict = all(induced[k] == sub[k] for k in induced)
    w_tot, w_induced, w_sub = _filtration_data(c, weight if weight is not None else c.weight)
    return CohomologyResult(
        total_dims=totals,
        hodge_dims=induced,
        subcomplex_dims=sub,
        weight_graded_dims=_graded(w_induced),
        strict=strict,
        weight_strict=all(w_induced[k] == w_sub[k] for k in w_induced),
    )


def classify_complex(c: KoszulComplex) -> str:
    res = cohomology(c)
    if res.filtered_acyclic:
        return "filtered_acyclic"
    if res.acyclic:
        return "acyclic"
    return "nonacyclic"


def candidate_indices(m: MonodromicModel) -> list[Fraction]:
    """Every lam at which some term of B^lam meets a nonzero piece."""
    r = m.slope.r
    out = set()
    for g in m.grades():
        for j in range(r + 1):
            for S in _subsets(r, j):
                out.add(g - sum(m.slope[i] for i in S))
    return sorted(out)


def acyclicity_scan(m: MonodromicModel, kind: str = "B") -> dict[Fraction, str]:
    """Status of B^lam (or A^lam) for every candidate index lam; "skipped" when it does not fit the window."""
    build = {"A": build_A, "B": build_B}[kind]
    out = {}
    for lam in candidate_indices(m):
        try:
            c = build(m, lam)
        except WindowTooSmall:
            out[lam] = "skipped"
            continue
        out[lam] = classify_complex(c)
    return out


def relative_weight_flags(m: MonodromicModel, c: KoszulComplex) -> list[Flag]:
    """On every component, W(N, M) for the nilpotent part N and the model's weight flag M."""
    flags = []
    cache: dict[Fraction, Flag] = {}
    for t in c.terms:
        parts = []
        for comp in t:
            if not comp.dim:
                continue
            if comp.grade not in cache:
                n = m.nilpotent_part(comp.grade)
                if n is None:
                    raise WindowTooSmall([comp.grade - a for a in m.slope.coeffs] + [comp.grade + a for a in m.slope.coeffs])
                w = relative_monodromy(n, m.piece(comp.grade).weight)
                if isinstance(w, NonExistence):
                    raise RelativeMonodromyMissing(comp.grade, w)
                cache[comp.grade] = w.flag
            parts.append(cache[comp.grade])
        flags.append(direct_sum_flag(parts))
    return flags


def sigma_shriek(m: MonodromicModel) -> CohomologyResult:
    """Cohomology of B^0 with the Hodge filtration and two weight bookkeepings.

    ``weight_graded_dims`` uses the relative monodromy filtration on each term.
    ``propagated_weight_graded_dims`` pushes the model's own weight flags to
    cohomology and records Gr_k H^i under the index k + i.
    """
    c = build_B(m, 0)
    res = cohomology(c, weight=relative_weight_flags(m, c))
    _, own, _ = _filtration_data(c, c.weight)
    res.propagated_weight_graded_dims = {(i, k + i): v for (i, k), v in _graded(own).items()}
    return res


def weight_ladder_mismatches(res: CohomologyResult) -> list[tuple[int, int]]:
    """Pairs (i, k) where dim Gr_k H^i of B^0 differs from dim Gr_{k+i} H^i of the restriction."""
    keys = {(i, k) for i, k in res.weight_graded_dims} | {(i, k - i) for i, k in res.propagated_weight_graded_dims}
    bad = []
    for i, k in sorted(keys):
        if res.weight_graded_dims.get((i, k), 0) != res.propagated_weight_graded_dims.get((i, k + i), 0):
            bad.append((i, k))
    return bad


def restriction_agrees(m: MonodromicModel) -> bool:
    """H^i(A^0) and H^i(B^0) have equal dimensions in every degree."""
    a = cohomology(build_A(m, 0)).total_dims
    b = cohomology(build_B(m, 0)).total_dims
    return a == b


def local_cohomology_filtration(m: MonodromicModel, p: int, ell: int) -> int:
    """dim of (F_{p+r} G ∩ ker N^(ell+1) + T) / T on the piece G at grade |L|, with T = sum_i t_i G^(|L| - a_i)."""
    if ell < 0:
        raise ValueError("ell must be non-negative")
    L = m.slope
    top = Fraction(L.weight)
    need = [top] + [top - a for a in L.coeffs]
    missing = [g for g in need if not m.in_window(g)]
    if missing:
        raise WindowTooSmall(missing)
    n = m.dim(top)
    if n == 0:
        return 0
    tsum = Subspace.zero(n)
    for i, a in enumerate(L.coeffs):
        tsum = tsum + Subspace.full(m.dim(top - a)).image_under(m.t(i, top - a))
    nil = m.nilpotent_part(top)
    if nil is None:
        raise WindowTooSmall([top + a for a in L.coeffs])
    kern = kernel(nil.power(ell + 1))
    f = m.piece(top).hodge.step(p + L.r)
    return ((f & kern) + tsum).dim - tsum.dim
