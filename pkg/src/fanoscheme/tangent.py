"""Tangent spaces of F_k(D^r_{m,n}) and F_k(P^r_{m,n}) at planes in a compression space.

A plane in the standard s-compression space has the block shape

    [ 0  B ]
    [ C  D ]

with an (m-s) x (s+1+n-r) zero block.  Its tangent space has dimension
a + (k+1)(kappa(s) - k), where a is the dimension of the space of matrices A
of linear forms making every anchored r x r minor (or permanent) of

    Q = [ A  B ]
        [ C  0 ]

vanish.  ``a_dimension`` computes a by expanding each anchored minor with the
entries of A as formal unknowns and solving the resulting linear system.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .classify import perm_hypotheses_failure
from .errors import DomainError, InvariantError
from .params import FanoParams, compression_component_dim, kappa
from .symalg import (
    DET,
    PERM,
    LinForm,
    LinMatrix,
    MultiPoly,
    anchored_index_sets,
    poly_det,
    rational_rank,
    span_dim,
)


@dataclass(frozen=True)
class CompressedPlane:
    params: FanoParams
    s: int
    matrix: LinMatrix

    def __post_init__(self):
        p, M = self.params, self.matrix
        if (M.m, M.n, M.k) != (p.m, p.n, p.k):
            raise InvariantError(
                f"matrix is {M.m}x{M.n} with k={M.k}, parameters say {p.m}x{p.n} with k={p.k}"
            )
        if not isinstance(self.s, int) or not 0 <= self.s <= p.r - 1:
            raise DomainError(f"compression index s={self.s!r} outside 0..{p.r - 1}")
        for i in range(self.zero_rows):
            for j in range(self.t):
                if not M[i, j].is_zero():
                    raise InvariantError(
                        f"zero block violated: entry ({i}, {j}) of the "
                        f"{self.zero_rows}x{self.t} upper-left block is nonzero"
                    )
        dim = span_dim(M)
        if dim != p.k + 1:
            raise InvariantError(f"span invariant violated: entries span {dim}, need k+1 = {p.k + 1}")

    @classmethod
    def of(cls, matrix: LinMatrix, r: int, s: int) -> "CompressedPlane":
        return cls(FanoParams(matrix.m, matrix.n, r, matrix.k), s, matrix)

    @property
    def t(self) -> int:
        return self.s + 1 + self.params.n - self.params.r

    @property
    def zero_rows(self) -> int:
        return self.params.m - self.s


@dataclass(frozen=True)
class TangentReport:
    a_dim: int
    tangent_dim: int
    system_size: tuple[int, int]

    def as_dict(self) -> dict:
        return {
            "a_dim": self.a_dim,
            "tangent_dim": self.tangent_dim,
            "system_size": list(self.system_size),
        }


# -- the linear system on A -----------------------------------------------------


def _q_polys(P: CompressedPlane) -> tuple[list[list[MultiPoly]], int]:
    """Entries of Q over variables z_0..z_k followed by one unknown per cell of A."""
    M = P.matrix
    nz = M.nz
    h, t = P.zero_rows, P.t
    nvars = nz + h * t
    rows = []
    for i in range(M.m):
        row = []
        for j in range(M.n):
            if i < h and j < t:
                exp = [0] * nvars
                exp[nz + i * t + j] = 1
                row.append(MultiPoly(nvars, {tuple(exp): 1}))
            elif i >= h and j >= t:
                row.append(MultiPoly(nvars))
            else:
                row.append(M[i, j].poly(nvars))
        rows.append(row)
    return rows, nvars


def linear_system(P: CompressedPlane, family: str) -> tuple[list[dict[int, Fraction]], int]:
    """Equations on the coefficients of A, one per (anchored minor, z-monomial).

    Unknown ``(i*t + j)*(k+1) + l`` is the coefficient of z_l in A[i][j].
    """
    if family not in (DET, PERM):
        raise DomainError(f"unknown family {family!r}")
    p = P.params
    nz = P.matrix.nz
    q, nvars = _q_polys(P)
    unknowns = P.zero_rows * P.t * nz
    equations: list[dict[int, Fraction]] = []
    for rows, cols in anchored_index_sets(p.m, p.n, p.r, P.s):
        minor = poly_det([[q[i][j] for j in cols] for i in rows], signed=family == DET)
        by_monomial: dict[tuple[int, ...], dict[int, Fraction]] = {}
        for exp, c in minor.terms.items():
            a_part = exp[nz:]
            if sum(a_part) != 1:
                raise InvariantError(
                    f"anchored minor on rows {rows}, cols {cols} has a term of degree "
                    f"{sum(a_part)} in A; expected exactly 1"
                )
            cell = next(idx for idx, e in enumerate(a_part) if e)
            z_exp = list(exp[:nz])
            for l in range(nz):
                z_exp[l] += 1
                eq = by_monomial.setdefault(tuple(z_exp), {})
                var = cell * nz + l
                eq[var] = eq.get(var, 0) + c
                z_exp[l] -= 1
        for z_exp in sorted(by_monomial):
            eq = {v: c for v, c in by_monomial[z_exp].items() if c}
            if eq:
                equations.append(eq)
    return equations, unknowns


def a_dimension(P: CompressedPlane, family: str) -> int:
    equations, unknowns = linear_system(P, family)
    return unknowns - rational_rank(equations)


def tangent_dim(P: CompressedPlane, family: str) -> TangentReport:
    equations, unknowns = linear_system(P, family)
    a = unknowns - rational_rank(equations)
    p = P.params
    return TangentReport(a, a + (p.k + 1) * (kappa(p, P.s) - p.k), (len(equations), unknowns))


def is_smooth_compression_point(P: CompressedPlane, family: str = DET) -> bool:
    """True iff the tangent space at P has the dimension of the component through it."""
    if family != DET:
        raise DomainError("smoothness against the component dimension is stated for det only")
    return tangent_dim(P, DET).tangent_dim == compression_component_dim(P.params, P.s)


# -- witness planes ---------------------------------------------------------------


class _Builder:
    """Mutable m x n grid of linear forms in z_0..z_k used to assemble witnesses."""

    def __init__(self, p: FanoParams, s: int):
        self.p, self.s = p, s
        self.nz = p.k + 1
        self.h = p.m - s
        self.t = s + 1 + p.n - p.r
        self.q = p.r - s - 1
        self.grid = [[LinForm.zero(self.nz) for _ in range(p.n)] for _ in range(p.m)]
        self.used = 0

    def put(self, i: int, j: int, var: int):
        self.grid[i][j] = self.grid[i][j] + LinForm.var(var, self.nz)
        self.used = max(self.used, var + 1)

    def put_b(self, i: int, j: int, var: int):
        self.put(i, self.t + j, var)

    def put_c(self, i: int, j: int, var: int):
        self.put(self.h + i, j, var)

    def fill_order(self) -> list[tuple[int, int]]:
        m, n, h, t = self.p.m, self.p.n, self.h, self.t
        b = [(i, j) for i in range(h) for j in range(t, n)]
        c = [(i, j) for i in range(h, m) for j in range(t)]
        d = [(i, j) for i in range(h, m) for j in range(t, n)]
        return b + c + d

    def fill(self):
        """Place fresh variables until the entries span k+1 dimensions.

        Zero cells are used first; once they run out, fresh variables are added
        to occupied cells, in the same order, skipping any cell whose current
        form would drop out of the span (e.g. the only occurrence of z_0).
        """
        order = self.fill_order()
        empty = [c for c in order if self.grid[c[0]][c[1]].is_zero()]
        occupied = [c for c in order if not self.grid[c[0]][c[1]].is_zero()]
        for i, j in empty:
            if self.used >= self.nz:
                return
            self.put(i, j, self.used)
        for i, j in occupied:
            if self.used >= self.nz:
                return
            before = self._span()
            old = self.grid[i][j]
            self.put(i, j, self.used)
            if self._span() == before:
                self.grid[i][j] = old
                self.used -= 1
        if self.used < self.nz:
            raise InvariantError(f"could not reach span {self.nz} with fresh variables")

    def _span(self) -> int:
        return span_dim(LinMatrix(self.grid))

    def plane(self) -> CompressedPlane:
        return CompressedPlane(self.p, self.s, LinMatrix(self.grid))


def _b_pair(b: _Builder, zi: int, zj: int):
    for c in range(b.q):
        b.put_b(c, c, zi)
        b.put_b(c + 1, c, zj)


def _c_pair(b: _Builder, zi: int, zj: int):
    for c in range(b.s):
        b.put_c(c, c, zi)
        b.put_c(c, c + 1, zj)


def _b_triple(b: _Builder, zi: int, zj: int, zk: int):
    q = b.q
    if q == 1:
        for row, var in enumerate((zi, zj, zk)):
            b.put_b(row, 0, var)
        return
    for c in range(q):
        b.put_b(c, c, zi)
        b.put_b(c + 1, c, zj)
        b.put_b(c + 2 if c < q - 1 else 0, c, zk)


def _c_triple(b: _Builder, zi: int, zj: int, zk: int):
    s = b.s
    if s == 1:
        for col, var in enumerate((zi, zj, zk)):
            b.put_c(0, col, var)
        return
    for c in range(s):
        b.put_c(c, c, zi)
        b.put_c(c, c + 1, zj)
        b.put_c(c, c + 2 if c < s - 1 else 0, zk)


def witness_det(m: int, n: int, r: int, k: int, s: int) -> CompressedPlane:
    """The deterministic plane whose determinantal a-dimension is exactly delta(s)."""
    p = FanoParams(m, n, r, k)
    if not 0 <= s <= r - 1:
        raise DomainError(f"compression index s={s} outside 0..{r - 1}")
    ks = kappa(p, s)
    if not 1 <= k <= ks:
        raise DomainError(f"need 1 <= k <= kappa({s}) = {ks}, got k={k}")
    b = _Builder(p, s)
    if s == 0:
        _b_pair(b, 0, 1)
        b.fill()
    elif s == r - 1:
        _c_pair(b, 0, 1)
        b.fill()
    elif k == 1:
        _b_pair(b, 0, 1)
        _c_pair(b, 0, 1)
    else:
        _b_pair(b, 0, 1)
        _c_pair(b, 1, 2)
        b.fill()
    return b.plane()


def witness_perm(m: int, n: int, r: int, k: int, s: int) -> CompressedPlane:
    """The deterministic plane whose permanental a-dimension is zero."""
    p = FanoParams(m, n, r, k)
    failure = perm_hypotheses_failure(p, s)
    if failure is not None:
        raise DomainError(f"permanental witness hypothesis failed: {failure}")
    b = _Builder(p, s)
    if s == 0:
        _b_triple(b, 0, 1, 2)
    elif s == r - 1:
        _c_triple(b, 0, 1, 2)
    else:
        _b_triple(b, 0, 1, 2)
        _c_triple(b, 3, 4, 5)
    b.fill()
    return b.plane()


def detform_example() -> CompressedPlane:
    """A 5 x 6 plane with k = 4 in the s = 2 compression space for r = 5, D = 0."""
    z = lambda *c: LinForm.of(c)  # noqa: E731
    O = z(0, 0, 0, 0, 0)
    rows = [
        [O, O, O, O, z(1, 0, 0, 0, 0), z(0, 0, 0, 1, 0)],
        [O, O, O, O, z(0, 1, 0, -1, 0), z(1, 0, 0, 3, 0)],
        [O, O, O, O, z(0, 0, 0, 5, 0), z(0, 1, 0, 11, 0)],
        [z(0, 1, 0, 0, 0), z(0, 0, 1, 0, 0), O, O, O, O],
        [O, z(0, 1, 0, 0, 0), z(0, 0, 1, 0, 0), z(0, 0, 0, 0, 1), O, O],
    ]
    return CompressedPlane(FanoParams(5, 6, 5, 4), 2, LinMatrix(rows))


def shared_point_example() -> CompressedPlane:
    """A 3-plane of 3 x 3 matrices lying in two compression spaces (s = 1 and s = 2)."""
    z = lambda *c: LinForm.of(c)  # noqa: E731
    O = z(0, 0, 0, 0)
    rows = [
        [O, O, O],
        [O, O, z(1, 0, 0, 0)],
        [z(0, 1, 0, 0), z(0, 0, 1, 0), z(0, 0, 0, 1)],
    ]
    return CompressedPlane(FanoParams(3, 3, 3, 3), 2, LinMatrix(rows))
