"""Finite graded models of monodromic modules over a point.

A model is a window [lo, hi] of grades chi, a finite vector space M^chi for each
grade, and matrices t_i : M^chi -> M^(chi + a_i), d_i : M^chi -> M^(chi - a_i).
Grades inside the window without a piece are zero spaces; grades outside the
window are unknown, so relations that would pass through them are not checked.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Iterable, Optional, Sequence, Union

from .exactq import Flag, QMat, Subspace, direct_sum_flag, inverse, rat


class DegenerateSlope(ValueError):
    pass


@dataclass(frozen=True)
class Slope:
    """L = sum a_i s_i with non-negative integer coefficients."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(self.coeffs)
        for a in coeffs:
            if not isinstance(a, int) or isinstance(a, bool) or a < 0:
                raise ValueError(f"slope coefficients are non-negative integers, got {a!r}")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def r(self) -> int:
        return len(self.coeffs)

    @property
    def weight(self) -> int:
        """|L|."""
        return sum(self.coeffs)

    @property
    def nondegenerate(self) -> bool:
        return all(a > 0 for a in self.coeffs)

    def require_nondegenerate(self) -> None:
        if not self.nondegenerate:
            raise DegenerateSlope(f"slope {self.coeffs} has a zero coefficient")

    def __call__(self, beta: Sequence) -> Fraction:
        if len(beta) != self.r:
            raise ValueError("multi-index length differs from the number of variables")
        return sum((a * rat(b) for a, b in zip(self.coeffs, beta)), Fraction(0))

    def shifted(self, beta: Sequence) -> Fraction:
        """L(beta + (1, ..., 1))."""
        return self(beta) + self.weight

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i]


@dataclass(frozen=True)
class GradedPiece:
    grade: Fraction
    dim: int
    hodge: Flag
    weight: Flag

    @classmethod
    def zero(cls, grade) -> "GradedPiece":
        return cls(rat(grade), 0, Flag(0, {0: Subspace.zero(0)}), Flag(0, {0: Subspace.zero(0)}))


@dataclass(frozen=True)
class Violation:
    rule: str
    grade: Fraction
    coords: tuple = ()


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...] = ()
    unchecked: tuple[tuple[str, Fraction, tuple], ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def rules(self) -> set[str]:
        return {v.rule for v in self.violations}


Key = tuple[int, Fraction]


class MonodromicModel:
    def __init__(self, slope: Slope, window: tuple, pieces: Iterable[GradedPiece] | dict,
                 t_actions: dict[Key, QMat] | None = None, d_actions: dict[Key, QMat] | None = None):
        self.slope = slope if isinstance(slope, Slope) else Slope(tuple(slope))
        lo, hi = rat(window[0]), rat(window[1])
        if lo > hi:
            raise ValueError("window lower end exceeds upper end")
        self.window = (lo, hi)
        if isinstance(pieces, dict):
            pieces = pieces.values()
        self.pieces: dict[Fraction, GradedPiece] = {}
        for p in pieces:
            if p.grade in self.pieces:
                raise ValueError(f"two pieces at grade {p.grade}")
            if p.dim:
                self.pieces[p.grade] = p
        self.pieces = dict(sorted(self.pieces.items()))
        self.t_actions = {(i, rat(g)): m for (i, g), m in (t_actions or {}).items()}
        self.d_actions = {(i, rat(g)): m for (i, g), m in (d_actions or {}).items()}

    def __repr__(self) -> str:
        dims = {str(g): p.dim for g, p in self.pieces.items()}
        return f"MonodromicModel(L={self.slope.coeffs}, window={self.window}, dims={dims})"

    def in_window(self, chi) -> bool:
        return self.window[0] <= chi <= self.window[1]

    def grades(self) -> list[Fraction]:
        return list(self.pieces)

    def dim(self, chi) -> int:
        p = self.pieces.get(rat(chi))
        return p.dim if p else 0

    def piece(self, chi) -> GradedPiece:
        chi = rat(chi)
        return self.pieces.get(chi) or GradedPiece.zero(chi)

    def _action(self, table, i: int, chi, sign: int) -> Optional[QMat]:
        chi = rat(chi)
        tgt = chi + sign * self.slope[i]
        if not (self.in_window(chi) and self.in_window(tgt)):
            return None
        m = table.get((i, chi))
        if m is None:
            return QMat.zeros(self.dim(tgt), self.dim(chi))
        return m

    def t(self, i: int, chi) -> Optional[QMat]:
        """t_i on M^chi, or None when chi or chi + a_i leaves the window."""
        return self._action(self.t_actions, i, chi, 1)

    def d(self, i: int, chi) -> Optional[QMat]:
        """d_i on M^chi, or None when chi or chi - a_i leaves the window."""
        return self._action(self.d_actions, i, chi, -1)

    def euler(self, chi, strict: bool = False) -> Optional[QMat]:
        """L(t dt) on M^chi.

        Each term a_i t_i d_i is composed through chi - a_i when possible, and
        otherwise as a_i (d_i t_i - 1) through chi + a_i (the two agree wherever
        the commutation relation holds).  With ``strict`` only the first form is
        used.  None if some term cannot be formed inside the window.
        """
        chi = rat(chi)
        n = self.dim(chi)
        total = QMat.zeros(n, n)
        for i, a in enumerate(self.slope.coeffs):
            down, up = self.d(i, chi), self.t(i, chi - a)
            if down is not None and up is not None:
                total = total + (up @ down).scale(a)
                continue
            if strict:
                return None
            up, down = self.t(i, chi), self.d(i, chi + a)
            if up is None or down is None:
                return None
            total = total + (down @ up - QMat.identity(n)).scale(a)
        return total

    def nilpotent_part(self, chi, strict: bool = False) -> Optional[QMat]:
        """N_chi = L(t dt) - (chi - |L|) on M^chi."""
        e = self.euler(chi, strict=strict)
        if e is None:
            return None
        chi = rat(chi)
        return e - QMat.identity(self.dim(chi), chi - self.slope.weight)

    def lattice(self) -> list[Fraction]:
        """Grades reachable from the pieces by adding and removing slope coefficients, inside the window."""
        out = set()
        lo, hi = self.window
        for g in self.pieces:
            for shifts in product(*[range(-_reach(a, lo, hi), _reach(a, lo, hi) + 1) for a in self.slope.coeffs]):
                c = g + sum(s * a for s, a in zip(shifts, self.slope.coeffs))
                if lo <= c <= hi:
                    out.add(c)
        return sorted(out)


def _reach(a: int, lo, hi) -> int:
    if a == 0:
        return 0
    return int((hi - lo) // a) + 1


def _flag_ok(f: Flag, dim: int) -> bool:
    return f.ambient_dim == dim and f.is_valid()


def validate(m: MonodromicModel) -> ValidationReport:
    """Check shapes, commutation relations, monodromic structure, and flag compatibility.

    All violations are collected.  Relations that would pass through a grade
    outside the window are listed as unchecked.
    """
    viol: list[Violation] = []
    unchecked: list[tuple] = []
    L = m.slope
    r = L.r
    a = L.coeffs
    lo, hi = m.window
    if not L.nondegenerate:
        viol.append(Violation("degenerate_slope", lo, a))
    for g, p in m.pieces.items():
        if not m.in_window(g):
            viol.append(Violation("outside_window", g))
        if not _flag_ok(p.hodge, p.dim):
            viol.append(Violation("hodge_flag", g))
        if not _flag_ok(p.weight, p.dim):
            viol.append(Violation("weight_flag", g))
    for name, table, sign in (("t_shape", m.t_actions, 1), ("d_shape", m.d_actions, -1)):
        for (i, g), mat in table.items():
            if not 0 <= i < r:
                viol.append(Violation(name, g, (i,)))
                continue
            tgt = g + sign * a[i]
            if not (m.in_window(g) and m.in_window(tgt)):
                if not mat.is_zero():
                    viol.append(Violation(name, g, (i, "leaves window")))
                continue
            if mat.shape != (m.dim(tgt), m.dim(g)):
                viol.append(Violation(name, g, (i, mat.shape)))
    if viol:
        return ValidationReport(tuple(viol), tuple(unchecked))

    def comp(*steps):
        # steps: sequence of (kind, i); apply right-to-left starting from chi
        def run(chi):
            cur = None
            g = chi
            for kind, i in reversed(steps):
                mat = m.t(i, g) if kind == "t" else m.d(i, g)
                if mat is None:
                    return None
                cur = mat if cur is None else mat @ cur
                g = g + (a[i] if kind == "t" else -a[i])
            return cur
        return run

    for g in m.pieces:
        n = m.dim(g)
        eye = QMat.identity(n)
        for i in range(r):
            for j in range(r):
                lhs, rhs = comp(("d", i), ("t", j))(g), comp(("t", j), ("d", i))(g)
                if lhs is None or rhs is None:
                    unchecked.append(("commute_dt", g, (i, j)))
                    continue
                diff = lhs - rhs
                if not (diff - eye if i == j else diff).is_zero():
                    viol.append(Violation("commute_dt", g, (i, j)))
            for j in range(i + 1, r):
                for kind, rule in (("t", "commute_tt"), ("d", "commute_dd")):
                    x, y = comp((kind, i), (kind, j))(g), comp((kind, j), (kind, i))(g)
                    if x is None or y is None:
                        unchecked.append((rule, g, (i, j)))
                    elif x != y:
                        viol.append(Violation(rule, g, (i, j)))
        nil = m.nilpotent_part(g, strict=True)
        if nil is None:
            unchecked.append(("monodromic", g, ()))
        elif not nil.power(n).is_zero():
            viol.append(Violation("monodromic", g, ()))
        p = m.piece(g)
        for i in range(r):
            for kind, f_rule, w_rule, shift in (("t", "hodge_t", "weight_t", 0), ("d", "hodge_d", "weight_d", 1)):
                mat = m.t(i, g) if kind == "t" else m.d(i, g)
                tgt = g + (a[i] if kind == "t" else -a[i])
                if mat is None:
                    unchecked.append((f_rule, g, (i,)))
                    continue
                q = m.piece(tgt)
                if q.dim == 0:
                    continue
                for k in p.hodge.span():
                    img = p.hodge.step(k).image_under(mat)
                    if not img <= q.hodge.step(k + shift):
                        viol.append(Violation(f_rule, g, (i, k)))
                        break
                for k in p.weight.span():
                    img = p.weight.step(k).image_under(mat)
                    if not img <= q.weight.step(k):
                        viol.append(Violation(w_rule, g, (i, k)))
                        break
    weight_jumps = {k for p in m.pieces.values() for k in p.weight.jumps()}
    if len(weight_jumps) == 1:
        for g in m.pieces:
            nil = m.nilpotent_part(g)
            if nil is not None and not nil.is_zero():
                viol.append(Violation("purity", g, ()))
    return ValidationReport(tuple(viol), tuple(unchecked))


def delta_module_model(L: Slope | Sequence[int], depth: int) -> MonodromicModel:
    """Truncation of the module spanned by d^alpha delta_0 over a point.

    d^alpha delta_0 sits at grade -L(alpha).  The window is [-D, |L|] with
    D = min(a) (depth + 1) - 1, the largest depth at which every grade is
    complete; all alpha with |alpha| <= depth are kept when the a_i agree.
    """
    L = L if isinstance(L, Slope) else Slope(tuple(L))
    L.require_nondegenerate()
    if depth < 0:
        raise ValueError("depth must be non-negative")
    r, a = L.r, L.coeffs
    bound = min(a) * (depth + 1) - 1
    alphas = []
    for alpha in product(*[range(bound // ai + 1) for ai in a]):
        if L(alpha) <= bound:
            alphas.append(alpha)
    by_grade: dict[Fraction, list] = {}
    for alpha in sorted(alphas, key=lambda al: (sum(al), tuple(-x for x in al))):
        by_grade.setdefault(-L(alpha), []).append(alpha)
    index = {g: {al: n for n, al in enumerate(als)} for g, als in by_grade.items()}
    pieces = []
    for g, als in by_grade.items():
        n = len(als)
        levels = sorted({r + sum(al) for al in als})
        hodge = {levels[0] - 1: Subspace.zero(n)}
        for lev in levels:
            hodge[lev] = Subspace.coordinate(n, [k for k, al in enumerate(als) if r + sum(al) <= lev])
        pieces.append(GradedPiece(g, n, Flag(n, hodge), Flag.trivial(n, 0)))
    t_act, d_act = {}, {}
    for g, als in by_grade.items():
        for i in range(r):
            up = g - a[i]
            if up in by_grade:
                rows = [[0] * len(als) for _ in by_grade[up]]
                for k, al in enumerate(als):
                    bl = tuple(x + (1 if j == i else 0) for j, x in enumerate(al))
                    rows[index[up][bl]][k] = 1
                d_act[(i, g)] = QMat(len(by_grade[up]), len(als), rows)
            down = g + a[i]
            if down in by_grade:
                rows = [[0] * len(als) for _ in by_grade[down]]
                for k, al in enumerate(als):
                    if al[i]:
                        bl = tuple(x - (1 if j == i else 0) for j, x in enumerate(al))
                        rows[index[down][bl]][k] = -al[i]
                t_act[(i, g)] = QMat(len(by_grade[down]), len(als), rows)
    return MonodromicModel(L, (-bound, L.weight), pieces, t_act, d_act)


@dataclass(frozen=True)
class GradedSubspace:
    """The part of a model in grades >= threshold, with the flags it inherits."""

    slope: Slope
    threshold: Fraction
    pieces: tuple[GradedPiece, ...]

    def grades(self) -> list[Fraction]:
        return [p.grade for p in self.pieces]

    def dim(self) -> int:
        return sum(p.dim for p in self.pieces)


def lv_truncation(m: MonodromicModel | GradedSubspace, lam) -> GradedSubspace:
    lam = rat(lam)
    if isinstance(m, GradedSubspace):
        thr = max(lam, m.threshold)
        return GradedSubspace(m.slope, thr, tuple(p for p in m.pieces if p.grade >= thr))
    thr = max(lam, m.window[0])
    return GradedSubspace(m.slope, thr, tuple(p for g, p in m.pieces.items() if g >= lam))


def conjugate(m: MonodromicModel, change: dict) -> MonodromicModel:
    """Change basis on each piece by an invertible matrix (missing grades keep their basis)."""
    inv = {}
    mats = {}
    for g, p in m.pieces.items():
        c = change.get(g)
        if c is None:
            c = QMat.identity(p.dim)
        mats[g] = c
        inv[g] = inverse(c)
    pieces = [GradedPiece(g, p.dim, p.hodge.transported(mats[g]), p.weight.transported(mats[g]))
              for g, p in m.pieces.items()]
    a = m.slope.coeffs

    def move(table, sign):
        out = {}
        for (i, g), mat in table.items():
            tgt = g + sign * a[i]
            if g in mats and tgt in mats:
                out[(i, g)] = mats[tgt] @ mat @ inv[g]
        return out

    return MonodromicModel(m.slope, m.window, pieces, move(m.t_actions, 1), move(m.d_actions, -1))


def direct_sum(models: Sequence[MonodromicModel]) -> MonodromicModel:
    """Direct sum of models sharing a slope and a window."""
    if not models:
        raise ValueError("empty direct sum")
    L, win = models[0].slope, models[0].window
    for mm in models:
        if mm.slope != L or mm.window != win:
            raise ValueError("direct summands must share slope and window")
    grades = sorted({g for mm in models for g in mm.pieces})
    pieces = []
    for g in grades:
        parts = [mm.piece(g) for mm in models]
        dim = sum(p.dim for p in parts)
        hodge = direct_sum_flag([p.hodge for p in parts if p.dim])
        weight = direct_sum_flag([p.weight for p in parts if p.dim])
        pieces.append(GradedPiece(g, dim, hodge, weight))
    t_act, d_act = {}, {}
    for sign, out, getter in ((1, t_act, "t"), (-1, d_act, "d")):
        for i, ai in enumerate(L.coeffs):
            for g in grades:
                tgt = g + sign * ai
                if tgt not in grades or not (win[0] <= tgt <= win[1]):
                    continue
                blocks = []
                for mm in models:
                    mat = getattr(mm, getter)(i, g)
                    blocks.append(mat)
                out[(i, g)] = _block_diag(blocks)
    return MonodromicModel(L, win, pieces, t_act, d_act)


def _block_diag(blocks: Sequence[QMat]) -> QMat:
    rows = sum(b.rows for b in blocks)
    cols = sum(b.cols for b in blocks)
    data = [[Fraction(0)] * cols for _ in range(rows)]
    r0 = c0 = 0
    for b in blocks:
        for i in range(b.rows):
            for j in range(b.cols):
                data[r0 + i][c0 + j] = b.data[i][j]
        r0 += b.rows
        c0 += b.cols
    return QMat(rows, cols, data)
