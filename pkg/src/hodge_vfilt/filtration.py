"""Monodromy and relative monodromy filtrations of a nilpotent operator."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .exactq import Flag, QMat, Subspace, kernel


class NotNilpotent(ValueError):
    pass


class IncompatibleFiltration(ValueError):
    """The operator does not preserve the given filtration."""


class NilpotentOp:
    """Square matrix N with N^k = 0; ``nilpotency_index`` is the least such k."""

    __slots__ = ("matrix", "space_dim", "nilpotency_index", "_powers")

    def __init__(self, matrix: QMat):
        if matrix.rows != matrix.cols:
            raise NotNilpotent("operator matrix is not square")
        self.matrix = matrix
        self.space_dim = matrix.rows
        powers = [QMat.identity(matrix.rows)]
        while not powers[-1].is_zero():
            if len(powers) > matrix.rows:
                raise NotNilpotent(f"N^{matrix.rows} is not zero")
            powers.append(powers[-1] @ matrix)
        self.nilpotency_index = len(powers) - 1
        self._powers = powers

    def power(self, k: int) -> QMat:
        if k < len(self._powers):
            return self._powers[k]
        return QMat.zeros(self.space_dim, self.space_dim)

    def kernel_of_power(self, k: int) -> Subspace:
        if k <= 0:
            return Subspace.zero(self.space_dim)
        if k >= self.nilpotency_index:
            return Subspace.full(self.space_dim)
        return kernel(self.power(k))


@dataclass(frozen=True)
class CenteredFlag:
    flag: Flag
    center: int = 0

    def step(self, k: int) -> Subspace:
        return self.flag.step(k)

    def gr_dims(self) -> dict[int, int]:
        return self.flag.gr_dims()


@dataclass(frozen=True)
class NonExistence:
    """W(N, L) does not exist.  ``k`` is the L-index and ``i`` the primitive
    degree of the first string that admits no lift of the required weight."""

    k: int
    i: int
    detail: str = ""

    def __bool__(self) -> bool:
        return False


def monodromy_filtration(n: NilpotentOp | QMat, center: int = 0) -> CenteredFlag:
    """W_l = sum_{j >= max(0, -l)} N^j ker N^(l+1+2j), shifted so it centers at ``center``."""
    if isinstance(n, QMat):
        n = NilpotentOp(n)
    dim = n.space_dim
    nu = n.nilpotency_index
    steps: dict[int, Subspace] = {}
    if nu <= 1:
        steps = {center - 1: Subspace.zero(dim), center: Subspace.full(dim)}
        return CenteredFlag(Flag(dim, steps), center)
    for ell in range(-nu, nu):
        acc = Subspace.zero(dim)
        j = max(0, -ell)
        while j < nu:
            e = ell + 1 + 2 * j
            if e > 0:
                acc = acc + n.kernel_of_power(e).image_under(n.power(j))
            j += 1
        steps[ell + center] = acc
    return CenteredFlag(Flag(dim, steps), center)


def _n_lowers_by_two(n: QMat, w: Flag) -> Optional[int]:
    for k in w.span():
        if not w.step(k).image_under(n) <= w.step(k - 2):
            return k
    return None


def monodromy_axioms_hold(n: NilpotentOp | QMat, w: CenteredFlag) -> bool:
    if isinstance(n, QMat):
        n = NilpotentOp(n)
    flag = w.flag
    if not flag.is_valid() or _n_lowers_by_two(n.matrix, flag) is not None:
        return False
    c = w.center
    top = max(flag.high() - c, c - flag.low(), 0) + 1
    for i in range(1, top + 1):
        src = flag.step(c + i)
        src_low = flag.step(c + i - 1)
        dst_low = flag.step(c - i - 1)
        ni = n.power(i)
        # induced map Gr_{c+i} -> Gr_{c-i}
        img = src.image_under(ni) + dst_low
        if img.dim - dst_low.dim != src.dim - src_low.dim:
            return False
        if flag.gr_dim(c + i) != flag.gr_dim(c - i):
            return False
    return True


def _gr_rel(w: Flag, l: Flag, j: int, k: int) -> tuple[Subspace, Subspace]:
    """Numerator and denominator of Gr^W_j Gr^L_k as subspaces of the ambient space."""
    lk, lk1 = l.step(k), l.step(k - 1)
    num = w.step(j) & lk
    den = (w.step(j - 1) & lk) + (w.step(j) & lk1)
    return num, den


def relative_axiom_failure(n: NilpotentOp | QMat, w: Flag, l: Flag) -> Optional[tuple[int, int]]:
    """First (k, i) at which W fails to be the relative monodromy filtration, or None."""
    if isinstance(n, QMat):
        n = NilpotentOp(n)
    if not w.is_valid():
        return (l.low(), 0)
    bad = _n_lowers_by_two(n.matrix, w)
    if bad is not None:
        return (l.low(), 0)
    top = n.nilpotency_index + 1
    for k in l.jumps():
        for i in range(1, top + 1):
            a_num, a_den = _gr_rel(w, l, k + i, k)
            b_num, b_den = _gr_rel(w, l, k - i, k)
            src = a_num.dim - a_den.dim
            dst = b_num.dim - b_den.dim
            if src != dst:
                return (k, i)
            ni = n.power(i)
            rk = (a_num.image_under(ni) + b_den).dim - b_den.dim
            if rk != src:
                return (k, i)
    return None


def _quotient_coords(sub: Subspace, big: Subspace) -> tuple[list[tuple], QMat]:
    """Complement vectors of ``sub`` inside ``big`` and the projection onto them.

    Returns (complement basis C, matrix P) with P v the coordinates of v modulo
    ``sub`` in terms of C, for v in ``big``.
    """
    n = big.ambient_dim
    comp: list[tuple] = []
    acc = sub
    for v in big.basis:
        if not acc.contains(v):
            comp.append(v)
            acc = acc + Subspace(n, [v])
    # coordinates: solve v = sum c_i comp_i + s with s in sub
    cols = list(comp) + list(sub.basis)
    m = QMat.from_columns(cols, n) if cols else QMat.zeros(n, 0)
    return comp, m


def _solve(m: QMat, v) -> Optional[list]:
    """Some x with m x = v, or None."""
    aug = QMat(m.rows, m.cols + 1, [list(m.data[i]) + [v[i]] for i in range(m.rows)])
    ker = kernel(aug)
    for b in ker.basis:
        if b[-1]:
            s = -1 / b[-1]
            return [x * s for x in b[:-1]]
    if not any(v):
        return [0] * m.cols
    return None


def relative_monodromy(n: NilpotentOp | QMat, l: Flag) -> CenteredFlag | NonExistence:
    """W(N, L) by induction on the jumps of L.

    At each jump k the quotient Q = L_k / L_{k-1} gets its monodromy filtration
    centred at k.  Jordan strings of Q are lifted to L_k so that the image of a
    string top under N^(l+1) lands in the already built W_{k-l-2}.  If no lift
    exists the filtration does not exist.  The result is checked against both
    defining properties before it is returned.
    """
    if isinstance(n, QMat):
        n = NilpotentOp(n)
    dim = n.space_dim
    if l.ambient_dim != dim:
        raise IncompatibleFiltration("filtration and operator live in different spaces")
    mat = n.matrix
    for k, s in l.items():
        if not s.image_under(mat) <= s:
            raise IncompatibleFiltration(f"N does not preserve L_{k}")
    jumps = l.jumps()
    if dim == 0 or not jumps:
        return CenteredFlag(Flag(dim, {0: Subspace.zero(dim)}), 0)
    # generators of W_j inside the part built so far
    gens: dict[int, list] = {}
    for k in jumps:
        big = l.step(k)
        small = l.step(k - 1)
        comp, coords = _quotient_coords(small, big)
        q = len(comp)
        # N on Q = big/small in the complement coordinates
        nq_cols = []
        for v in comp:
            x = _solve(coords, mat.apply(v))
            nq_cols.append(x[:q])
        nq = QMat.from_columns(nq_cols, q) if q else QMat.zeros(0, 0)
        nq_op = NilpotentOp(nq)
        wq = monodromy_filtration(nq_op, center=k).flag
        lift = QMat.from_columns(comp, dim) if comp else QMat.zeros(dim, 0)

        def w_prev(j: int) -> Subspace:
            vecs = [v for jj, vs in gens.items() if jj <= j for v in vs]
            return Subspace(dim, vecs)

        new_gens: dict[int, list] = {}
        nu = nq_op.nilpotency_index
        for deg in range(nu - 1, -1, -1):
            top_w = k + deg
            s_l = wq.step(top_w) & nq_op.kernel_of_power(deg + 1)
            t_l = wq.step(top_w - 1) & nq_op.kernel_of_power(deg + 1)
            # also exclude classes already hit by N from higher strings
            covered = t_l
            for jj, vs in new_gens.items():
                if jj == top_w:
                    covered = covered + Subspace(q, [vv[1] for vv in vs])
            tops = []
            acc = covered
            for x in s_l.basis:
                if not acc.contains(x):
                    tops.append(x)
                    acc = acc + Subspace(q, [x])
            for x in tops:
                v0 = lift.apply(x)
                target = w_prev(k - deg - 2)
                y = n.power(deg + 1).apply(v0)
                # find u in L_{k-1} with N^(deg+1) u + y in target
                u_space = small
                nd = n.power(deg + 1)
                images = [nd.apply(b) for b in u_space.basis] + list(target.basis)
                if images:
                    sol = _solve(QMat.from_columns(images, dim), [-c for c in y])
                else:
                    sol = [] if not any(y) else None
                if sol is None:
                    return NonExistence(k, deg, f"no lift of a weight {top_w} string top of L-degree {k}")
                v = list(v0)
                for c, b in zip(sol[: len(u_space.basis)], u_space.basis):
                    if c:
                        v = [a + c * bb for a, bb in zip(v, b)]
                # string v, N v, ..., N^deg v with weights top_w, top_w - 2, ...
                cur = v
                curq = list(x)
                for step in range(deg + 1):
                    new_gens.setdefault(top_w - 2 * step, []).append((tuple(cur), tuple(curq)))
                    cur = mat.apply(cur)
                    curq = list(nq.apply(curq))
        for jj, vs in new_gens.items():
            gens.setdefault(jj, []).extend(v for v, _ in vs)
    lo = min(gens) - 1 if gens else 0
    hi = max(gens) if gens else 0
    steps = {j: Subspace(dim, [v for jj, vs in gens.items() if jj <= j for v in vs]) for j in range(lo, hi + 1)}
    w = Flag(dim, steps)
    fail = relative_axiom_failure(n, w, l)
    if fail is not None:
        return NonExistence(fail[0], fail[1], "constructed filtration fails the defining properties")
    return CenteredFlag(w, 0)


def splitting_dim_check(w: CenteredFlag, l: Flag) -> bool:
    """dim (L_i ∩ W_k + W_{k-1}) / W_{k-1} equals sum_{j<=i} dim Gr^L_j Gr^W_k for all i, k."""
    wf = w.flag
    for k in wf.span():
        wk, wk1 = wf.step(k), wf.step(k - 1)
        for i in l.span():
            lhs = ((l.step(i) & wk) + wk1).dim - wk1.dim
            rhs = 0
            for j in l.span():
                if j > i:
                    break
                num, den = _gr_rel(wf, l, k, j)
                rhs += num.dim - den.dim
            if lhs != rhs:
                return False
    return True
