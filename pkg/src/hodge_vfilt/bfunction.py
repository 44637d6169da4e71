"""b-functions stored as multisets of roots: b(w) = prod (w + gamma)^m."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .exactq import rat


class EmptyInput(ValueError):
    pass


@dataclass(frozen=True)
class RootMultiset:
    roots: tuple[tuple[Fraction, int], ...]

    def __init__(self, roots: Mapping | None = None):
        merged: Counter = Counter()
        for g, m in (roots or {}).items():
            if not isinstance(m, int) or isinstance(m, bool) or m < 1:
                raise ValueError(f"multiplicity of {g} must be a positive integer, got {m!r}")
            merged[rat(g)] += m
        object.__setattr__(self, "roots", tuple(sorted(merged.items())))

    def as_dict(self) -> dict[Fraction, int]:
        return dict(self.roots)

    @property
    def degree(self) -> int:
        return sum(m for _, m in self.roots)

    def __len__(self) -> int:
        return len(self.roots)

    def __repr__(self) -> str:
        return "RootMultiset({" + ", ".join(f"{g}: {m}" for g, m in self.roots) + "})"


def rescale(b: RootMultiset, a: int) -> RootMultiset:
    """Roots gamma -> a gamma, for the slope a s of a single function."""
    if not isinstance(a, int) or a < 1:
        raise ValueError("rescaling factor must be a positive integer")
    return RootMultiset({a * g: m for g, m in b.roots})


def thom_sebastiani(bf: RootMultiset, bg: RootMultiset) -> RootMultiset:
    """Roots alpha + beta with multiplicity the max of m_f(alpha) + m_g(beta) - 1 over such pairs."""
    if not len(bf) or not len(bg):
        raise EmptyInput("Thom-Sebastiani needs two nonempty root multisets")
    out: dict[Fraction, int] = {}
    for a, ma in bf.roots:
        for b, mb in bg.roots:
            out[a + b] = max(out.get(a + b, 0), ma + mb - 1)
    return RootMultiset(out)


def min_root(b: RootMultiset) -> Fraction:
    if not len(b):
        raise EmptyInput("no roots")
    return b.roots[0][0]


def shift(b: RootMultiset, j: int) -> RootMultiset:
    """Roots of w -> b(w + j): every root moves down by j."""
    return RootMultiset({g - j: m for g, m in b.roots})
