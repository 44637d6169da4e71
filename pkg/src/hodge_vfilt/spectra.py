"""Jumping spectra of decreasing, left-continuous Q-indexed filtrations and their transforms."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Any, Iterable, Optional, Sequence

from .exactq import rat
from .model import Slope


class DimensionMismatch(ValueError):
    pass


@dataclass(frozen=True)
class JumpSpectrum:
    """Sorted jump indices, each with the list of labels merged into it.

    ``periodic_above`` marks a spectrum that continues with period 1 beyond the
    given index: the jumps in [t, t + 1) repeat shifted by every positive integer.
    """

    jumps: tuple[tuple[Fraction, tuple], ...] = ()
    periodic_above: Optional[Fraction] = None

    @classmethod
    def of(cls, entries: Iterable, periodic_above=None) -> "JumpSpectrum":
        """Build from indices or (index, label) pairs; repeated indices keep every label."""
        merged: dict[Fraction, list] = {}
        for e in entries:
            if isinstance(e, tuple) and len(e) == 2:
                idx, label = rat(e[0]), e[1]
                merged.setdefault(idx, [])
                if label is not None:
                    merged[idx].append(label)
            else:
                merged.setdefault(rat(e), [])
        jumps = tuple((k, tuple(merged[k])) for k in sorted(merged))
        return cls(jumps, None if periodic_above is None else rat(periodic_above))

    @property
    def indices(self) -> tuple[Fraction, ...]:
        return tuple(k for k, _ in self.jumps)

    def labels(self, index) -> tuple:
        index = rat(index)
        for k, ls in self.jumps:
            if k == index:
                return ls
        return ()

    def shifted(self, by) -> "JumpSpectrum":
        by = rat(by)
        per = None if self.periodic_above is None else self.periodic_above + by
        return JumpSpectrum(tuple((k + by, ls) for k, ls in self.jumps), per)

    def union(self, other: "JumpSpectrum") -> "JumpSpectrum":
        pers = [p for p in (self.periodic_above, other.periodic_above) if p is not None]
        entries = [(k, l) for s in (self, other) for k, ls in s.jumps for l in ls]
        entries += [k for s in (self, other) for k, ls in s.jumps if not ls]
        return JumpSpectrum.of(entries, max(pers) if pers else None)

    def expanded(self, upto) -> "JumpSpectrum":
        """Unroll the periodic part up to ``upto`` (inclusive)."""
        if self.periodic_above is None:
            return self
        upto = rat(upto)
        t = self.periodic_above
        base = [(k, ls) for k, ls in self.jumps if t <= k < t + 1]
        entries = [(k, l) for k, ls in self.jumps for l in ls] + [k for k, ls in self.jumps if not ls]
        n = 1
        while base and base[0][0] + n <= upto:
            for k, ls in base:
                if k + n <= upto:
                    entries.extend([(k + n, l) for l in ls] or [k + n])
            n += 1
        return JumpSpectrum.of(entries)


@dataclass(frozen=True)
class GradedJumpSpectrum:
    """One spectrum per multi-index beta in the box 0 <= beta <= a - 1."""

    a: tuple[int, ...]
    components: dict = field(default_factory=dict)

    def __post_init__(self):
        box = set(product(*[range(ai) for ai in self.a]))
        if set(self.components) != box:
            raise DimensionMismatch("components do not fill the box 0 <= beta <= a - 1")

    def __getitem__(self, beta) -> JumpSpectrum:
        return self.components[tuple(beta)]


def cyclic_pullback(s: JumpSpectrum, a: Sequence[int], ell: Slope | Sequence[int]) -> GradedJumpSpectrum:
    """Spectra along the cover w -> w^a.

    ``s`` is the spectrum downstairs for the slope L with coefficients ell_i a_i.
    Component beta jumps at lam exactly when s jumps at lam + |L| - ell(beta) - |ell|.
    """
    ell = ell if isinstance(ell, Slope) else Slope(tuple(ell))
    a = tuple(a)
    if len(a) != ell.r:
        raise DimensionMismatch(f"{len(a)} cover degrees for a slope in {ell.r} variables")
    if any(not isinstance(x, int) or x < 1 for x in a):
        raise ValueError("cover degrees are positive integers")
    big = Slope(tuple(l * ai for l, ai in zip(ell.coeffs, a)))
    comps = {}
    for beta in product(*[range(ai) for ai in a]):
        comps[beta] = s.shifted(ell(beta) + ell.weight - big.weight)
    return GradedJumpSpectrum(a, comps)


def flatten(g: GradedJumpSpectrum) -> JumpSpectrum:
    out = JumpSpectrum()
    for beta in sorted(g.components):
        out = out.union(g.components[beta])
    return out


def specialization_index(lam, k: int, L: Slope | Sequence[int]) -> Fraction:
    """The index lam + |L| - k - 1 contributing to u^k in V^lam of the deformation."""
    L = L if isinstance(L, Slope) else Slope(tuple(L))
    L.require_nondegenerate()
    return rat(lam) + L.weight - k - 1


def supported_spectrum(inner: JumpSpectrum, i: int, L: Slope | Sequence[int], depth: int) -> JumpSpectrum:
    """Union over 0 <= j <= depth of ``inner`` shifted down by a_i j."""
    L = L if isinstance(L, Slope) else Slope(tuple(L))
    if not 0 <= i < L.r:
        raise IndexError(f"variable {i} out of range for {L.r} variables")
    if depth < 0:
        raise ValueError("depth must be non-negative")
    out = inner
    for j in range(1, depth + 1):
        out = out.union(inner.shifted(-L[i] * j))
    return out


def t_adic_generators(L: Slope | Sequence[int], lam, degree_cap: int) -> set[tuple[int, ...]]:
    """Multi-indices beta with |beta| <= degree_cap and L(beta + 1) >= lam."""
    L = L if isinstance(L, Slope) else Slope(tuple(L))
    L.require_nondegenerate()
    lam = rat(lam)
    return {b for b in product(range(degree_cap + 1), repeat=L.r) if sum(b) <= degree_cap and L.shifted(b) >= lam}
