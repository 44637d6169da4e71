"""Seeded generator of valid monodromic models with Hodge and weight data.

Every model is built from split pieces whose basis vectors carry a Hodge level
and a weight, with all structure maps homogeneous for those labels, and is then
hidden behind a random integer change of basis on each piece.

Building blocks:

* one variable, integer eigenvalues: a vanishing part Phi (grade 0) and a nearby
  part Psi (grade a) joined by var : Phi -> Psi and can : Psi -> Phi; grades
  above a are copies of Psi along t, grades below 0 are copies of Phi along d;
* one variable, eigenvalue class gamma in (0, 1): t and d are isomorphisms;
* several variables: O tensor V (polynomial functions) and delta_0 tensor V.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction
from itertools import product
from typing import Callable, Hashable, Optional, Sequence

from .exactq import Flag, QMat, Subspace
from .model import GradedPiece, MonodromicModel, Slope, conjugate, direct_sum

Label = tuple[int, int]


def labelled_flag(levels: Sequence[int]) -> Flag:
    """F_p = span of the basis vectors with level <= p."""
    n = len(levels)
    if not n:
        return Flag(0, {0: Subspace.zero(0)})
    lo, hi = min(levels), max(levels)
    steps = {lo - 1: Subspace.zero(n)}
    for p in range(lo, hi + 1):
        steps[p] = Subspace.coordinate(n, [i for i, l in enumerate(levels) if l <= p])
    return Flag(n, steps)


def random_labels(rng: random.Random, n: int, hodge=(-1, 2), weight=(-1, 2)) -> list[Label]:
    return [(rng.randint(*hodge), rng.randint(*weight)) for _ in range(n)]


def homogeneous_matrix(rng: random.Random, src: Sequence[Label], tgt: Sequence[Label],
                       allowed: Callable[[Label, Label], bool], lo: int = -2, hi: int = 2) -> QMat:
    rows = [[rng.randint(lo, hi) if allowed(s, t) else 0 for s in src] for t in tgt]
    return QMat(len(tgt), len(src), rows)


def _piece(grade, labels: Sequence[Label]) -> GradedPiece:
    n = len(labels)
    return GradedPiece(Fraction(grade), n, labelled_flag([l[0] for l in labels]), labelled_flag([l[1] for l in labels]))


def integer_block(rng: random.Random, a: int, window: tuple[int, int],
                  phi: Sequence[Label], psi: Sequence[Label]) -> MonodromicModel:
    """One variable with slope a and integer eigenvalues.

    var keeps the Hodge level and lowers the weight by one; can raises the
    Hodge level by one and lowers the weight by one.
    """
    var = homogeneous_matrix(rng, phi, psi, lambda s, t: t == (s[0], s[1] - 1))
    can = homogeneous_matrix(rng, psi, phi, lambda s, t: t == (s[0] + 1, s[1] - 1))
    n_phi = can @ var
    n_psi = var @ can
    lo, hi = window
    g_lo, g_hi = -((-lo) // a), hi // a
    pieces, t_act, d_act = [], {}, {}
    for g in range(g_lo, g_hi + 1):
        if g <= 0:
            pieces.append(_piece(g * a, [(p - g, k) for p, k in phi]))
        else:
            pieces.append(_piece(g * a, psi))
    for g in range(g_lo, g_hi):
        if g <= -1:
            t_act[(0, g * a)] = n_phi + QMat.identity(len(phi), g)
        elif g == 0:
            t_act[(0, 0)] = var
        else:
            t_act[(0, g * a)] = QMat.identity(len(psi))
    for g in range(g_lo + 1, g_hi + 1):
        if g <= 0:
            d_act[(0, g * a)] = QMat.identity(len(phi))
        elif g == 1:
            d_act[(0, a)] = can
        else:
            d_act[(0, g * a)] = n_psi + QMat.identity(len(psi), g - 1)
    return MonodromicModel(Slope((a,)), window, pieces, t_act, d_act)


def fractional_block(rng: random.Random, a: int, gamma: Fraction, window: tuple[int, int],
                     base: Sequence[Label]) -> MonodromicModel:
    """One variable with eigenvalue class gamma in (0, 1); t is the identity in the chosen bases."""
    n = len(base)
    nil = homogeneous_matrix(rng, base, base, lambda s, t: t[1] == s[1] - 2 and t[0] in (s[0], s[0] + 1))
    lo, hi = window
    js = [j for j in range(math.floor(lo / a - gamma) - 1, math.ceil(hi / a - gamma) + 2)
          if lo <= a * (gamma + j) <= hi]
    weight = labelled_flag([k for _, k in base])
    hodge = labelled_flag([p for p, _ in base])
    eye = QMat.identity(n)
    pieces, t_act, d_act = [], {}, {}
    for j in js:
        c = gamma + j
        if j >= 0:
            f = hodge
        else:
            prod = eye
            for jj in range(j, 0):
                prod = prod @ (nil + QMat.identity(n, gamma + jj))
            f = Flag(n, {p - j: s.image_under(prod) for p, s in hodge.items()})
        pieces.append(GradedPiece(a * c, n, f, weight))
        if j + 1 in js:
            t_act[(0, a * c)] = eye
            d_act[(0, a * (c + 1))] = nil + QMat.identity(n, c)
    return MonodromicModel(Slope((a,)), window, pieces, t_act, d_act)


def _from_basis(L: Slope, window, elems: Sequence[Hashable], grade_of, level_of, weight_of,
                t_rule, d_rule) -> MonodromicModel:
    by_grade: dict[Fraction, list] = {}
    for e in elems:
        by_grade.setdefault(Fraction(grade_of(e)), []).append(e)
    index = {g: {e: n for n, e in enumerate(es)} for g, es in by_grade.items()}
    pieces = [GradedPiece(g, len(es), labelled_flag([level_of(e) for e in es]), labelled_flag([weight_of(e) for e in es]))
              for g, es in by_grade.items()]
    acts = ({}, {})
    for g, es in by_grade.items():
        for i, ai in enumerate(L.coeffs):
            for table, rule, tgt in ((acts[0], t_rule, g + ai), (acts[1], d_rule, g - ai)):
                if tgt not in by_grade:
                    continue
                rows = [[0] * len(es) for _ in by_grade[tgt]]
                for col, e in enumerate(es):
                    hit = rule(e, i)
                    if hit is not None:
                        rows[index[tgt][hit[0]]][col] = hit[1]
                table[(i, g)] = QMat(len(by_grade[tgt]), len(es), rows)
    return MonodromicModel(L, window, pieces, *acts)


def _bump(beta, i, by):
    return tuple(b + (by if j == i else 0) for j, b in enumerate(beta))


def polynomial_block(L: Slope, window, labels: Sequence[Label]) -> MonodromicModel:
    """O tensor V: t^beta v at grade L(beta) + |L|, for every such grade up to the window top."""
    hi = window[1]
    cap = int(hi - L.weight)
    betas = [b for b in product(*[range(cap // ai + 1) for ai in L.coeffs]) if L.shifted(b) <= hi] if cap >= 0 else []
    elems = [(b, v) for b in betas for v in range(len(labels))]
    return _from_basis(
        L, window, elems,
        grade_of=lambda e: L.shifted(e[0]),
        level_of=lambda e: labels[e[1]][0],
        weight_of=lambda e: labels[e[1]][1],
        t_rule=lambda e, i: ((_bump(e[0], i, 1), e[1]), 1),
        d_rule=lambda e, i: ((_bump(e[0], i, -1), e[1]), e[0][i]) if e[0][i] else None,
    )


def delta_block(L: Slope, window, labels: Sequence[Label]) -> MonodromicModel:
    """delta_0 tensor V: d^alpha v at grade -L(alpha), Hodge level of v plus |alpha|."""
    bound = int(-window[0])
    alphas = [al for al in product(*[range(bound // ai + 1) for ai in L.coeffs]) if L(al) <= bound] if bound >= 0 else []
    elems = [(al, v) for al in alphas for v in range(len(labels))]
    return _from_basis(
        L, window, elems,
        grade_of=lambda e: -L(e[0]),
        level_of=lambda e: labels[e[1]][0] + sum(e[0]),
        weight_of=lambda e: labels[e[1]][1],
        t_rule=lambda e, i: ((_bump(e[0], i, -1), e[1]), -e[0][i]) if e[0][i] else None,
        d_rule=lambda e, i: ((_bump(e[0], i, 1), e[1]), 1),
    )


def random_unimodular(rng: random.Random, n: int, steps: int = 4) -> QMat:
    rows = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    if n < 2:
        return QMat(n, n, [[rng.choice((1, -1))]] if n else [])
    for _ in range(steps):
        i, j = rng.sample(range(n), 2)
        c = rng.choice((-2, -1, 1, 2))
        rows[i] = [x + c * y for x, y in zip(rows[i], rows[j])]
    return QMat(n, n, rows)


def random_gauge(rng: random.Random, m: MonodromicModel) -> MonodromicModel:
    return conjugate(m, {g: random_unimodular(rng, p.dim) for g, p in m.pieces.items()})


def _fits(m: MonodromicModel, max_grades: int = 8, max_dim: int = 4) -> bool:
    return 0 < len(m.pieces) <= max_grades and all(p.dim <= max_dim for p in m.pieces.values())


def _chain_labels(rng: random.Random) -> tuple[list[Label], list[Label]]:
    """Labels for Phi and Psi admitting a nonzero var followed by a nonzero can."""
    p, k = rng.randint(-1, 1), rng.randint(0, 2)
    phi, psi = [(p, k)], [(p, k - 1)]
    if rng.random() < 0.6:
        phi.append((p + 1, k - 2))
    if rng.random() < 0.4:
        psi.append(random_labels(rng, 1)[0])
    return phi, psi


def _one_variable(rng: random.Random) -> MonodromicModel:
    a = rng.randint(1, 3)
    lo = -rng.randint(0, 2) * a - rng.randint(0, a - 1)
    hi = a + rng.randint(1, 2) * a
    window = (lo, hi)
    blocks = []
    if rng.random() < 0.85:
        phi, psi = _chain_labels(rng) if rng.random() < 0.6 else (random_labels(rng, rng.randint(0, 2)), random_labels(rng, rng.randint(1, 2)))
        blocks.append(integer_block(rng, a, window, phi, psi))
    if rng.random() < 0.6 or not blocks:
        q = rng.choice((2, 3, 4, 5, 6))
        gamma = Fraction(rng.randint(1, q - 1), q)
        base = random_labels(rng, rng.randint(1, 2))
        if rng.random() < 0.5:
            p, k = base[0]
            base = [(p, k), (p + rng.randint(0, 1), k - 2)]
        blocks.append(fractional_block(rng, a, gamma, window, base))
    return direct_sum(blocks) if len(blocks) > 1 else blocks[0]


def _several_variables(rng: random.Random, r: int) -> MonodromicModel:
    L = Slope(tuple(rng.randint(1, 2) for _ in range(r)))
    lo = -rng.randint(0, min(L.coeffs))
    hi = L.weight + rng.randint(1, 2)
    window = (lo, hi)
    blocks = []
    if rng.random() < 0.8:
        blocks.append(polynomial_block(L, window, random_labels(rng, rng.randint(1, 2))))
    if rng.random() < 0.7 or not blocks:
        blocks.append(delta_block(L, window, random_labels(rng, rng.randint(1, 2))))
    return direct_sum(blocks) if len(blocks) > 1 else blocks[0]


def random_model(rng: random.Random, r: Optional[int] = None, gauge: bool = True) -> MonodromicModel:
    """A model with at most 8 nonzero grades and pieces of dimension at most 4."""
    while True:
        rr = r if r is not None else rng.choices((1, 2, 3), weights=(60, 25, 15))[0]
        m = _one_variable(rng) if rr == 1 else _several_variables(rng, rr)
        if _fits(m):
            return random_gauge(rng, m) if gauge else m


def model_population(seed: int, count: int = 120) -> list[MonodromicModel]:
    rng = random.Random(seed)
    return [random_model(rng) for _ in range(count)]
