"""Exact polynomial algebra for matrices of linear forms in z_0..z_k.

Polynomials are sparse maps from exponent tuples to ``Fraction``.  A
k-plane of m x n matrices is a ``LinMatrix`` whose entries are linear forms;
it lies on D^r (resp. P^r) when every r x r minor (resp. permanent) of it
is identically zero.
"""

from __future__ import annotations

import itertools
import json
from math import gcd
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DomainError, ParseError

DET = "det"
PERM = "perm"

PERMUTATION_EXPANSION_MAX = 5
MINOR_SIZE_MAX = 8


class MultiPoly:
    """Sparse polynomial over Q in a fixed number of variables."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: dict | None = None):
        self.nvars = nvars
        self.terms: dict[tuple[int, ...], Fraction] = {}
        if terms:
            for exp, c in terms.items():
                if c:
                    self.terms[tuple(exp)] = Fraction(c)

    @classmethod
    def constant(cls, nvars: int, c) -> "MultiPoly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def linear(cls, coeffs: Sequence, offset: int = 0, nvars: int | None = None) -> "MultiPoly":
        """sum_i coeffs[i] * x_{offset + i}."""
        nvars = len(coeffs) + offset if nvars is None else nvars
        terms = {}
        for i, c in enumerate(coeffs):
            if c:
                exp = [0] * nvars
                exp[offset + i] = 1
                terms[tuple(exp)] = c
        return cls(nvars, terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.nvars == other.nvars and self.terms == other.terms
        if other == 0:
            return self.is_zero()
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        out = dict(self.terms)
        for exp, c in other.terms.items():
            v = out.get(exp, 0) + c
            if v:
                out[exp] = v
            else:
                out.pop(exp, None)
        res = MultiPoly(self.nvars)
        res.terms = out
        return res

    def __neg__(self) -> "MultiPoly":
        res = MultiPoly(self.nvars)
        res.terms = {exp: -c for exp, c in self.terms.items()}
        return res

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        return self + (-other)

    def __mul__(self, other) -> "MultiPoly":
        if not isinstance(other, MultiPoly):
            other = Fraction(other)
            res = MultiPoly(self.nvars)
            if other:
                res.terms = {exp: c * other for exp, c in self.terms.items()}
            return res
        out: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                v = out.get(exp, 0) + c1 * c2
                if v:
                    out[exp] = v
                else:
                    out.pop(exp, None)
        res = MultiPoly(self.nvars)
        res.terms = out
        return res

    __rmul__ = __mul__

    def coefficient(self, exp: Sequence[int]) -> Fraction:
        return self.terms.get(tuple(exp), Fraction(0))

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def sorted_terms(self) -> list[tuple[tuple[int, ...], Fraction]]:
        """Terms in lexicographic order of exponents (deterministic serialization)."""
        return sorted(self.terms.items())

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for exp, c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(
                f"z{i}" if e == 1 else f"z{i}^{e}" for i, e in enumerate(exp) if e
            )
            parts.append(f"{c}*{mono}" if mono else str(c))
        return " + ".join(parts)


# -- determinants and permanents of polynomial matrices -------------------------


def _expand_by_permutations(rows: list[list[MultiPoly]], signed: bool) -> MultiPoly:
    size = len(rows)
    nvars = rows[0][0].nvars
    total = MultiPoly(nvars)
    for perm in itertools.permutations(range(size)):
        term = MultiPoly.constant(nvars, 1)
        for i, j in enumerate(perm):
            term = term * rows[i][j]
            if term.is_zero():
                break
        if term.is_zero():
            continue
        if signed and _parity(perm):
            term = -term
        total = total + term
    return total


def _parity(perm: Sequence[int]) -> int:
    seen = [False] * len(perm)
    odd = 0
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        odd ^= (length - 1) & 1
    return odd


def _expand_by_laplace(rows: list[list[MultiPoly]], signed: bool) -> MultiPoly:
    """Expansion along rows, memoized on the set of remaining columns."""
    size = len(rows)
    nvars = rows[0][0].nvars
    memo: dict[int, MultiPoly] = {}

    def sub(colmask: int) -> MultiPoly:
        # rows are consumed top-down; the row index is fixed by the mask size
        if colmask == 0:
            return MultiPoly.constant(nvars, 1)
        if colmask in memo:
            return memo[colmask]
        i = size - bin(colmask).count("1")
        total = MultiPoly(nvars)
        position = 0
        for j in range(size):
            if not colmask >> j & 1:
                continue
            entry = rows[i][j]
            if not entry.is_zero():
                term = entry * sub(colmask & ~(1 << j))
                if signed and position & 1:
                    term = -term
                total = total + term
            position += 1
        memo[colmask] = total
        return total

    return sub((1 << size) - 1)


def poly_det(rows: list[list[MultiPoly]], signed: bool = True) -> MultiPoly:
    size = len(rows)
    if size == 0 or any(len(row) != size for row in rows):
        raise DomainError("determinant/permanent needs a non-empty square matrix")
    if size <= PERMUTATION_EXPANSION_MAX:
        return _expand_by_permutations(rows, signed)
    return _expand_by_laplace(rows, signed)


# -- linear forms and matrices of them ------------------------------------------


def _frac(x) -> Fraction:
    if isinstance(x, float):
        raise DomainError("floats are not accepted; use integers, Fractions or 'p/q' strings")
    return Fraction(x)


@dataclass(frozen=True)
class LinForm:
    coeffs: tuple[Fraction, ...]

    @classmethod
    def of(cls, coeffs: Iterable) -> "LinForm":
        return cls(tuple(_frac(c) for c in coeffs))

    @classmethod
    def var(cls, i: int, nvars: int, c=1) -> "LinForm":
        coeffs = [Fraction(0)] * nvars
        coeffs[i] = _frac(c)
        return cls(tuple(coeffs))

    @classmethod
    def zero(cls, nvars: int) -> "LinForm":
        return cls((Fraction(0),) * nvars)

    def __add__(self, other: "LinForm") -> "LinForm":
        return LinForm(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "LinForm":
        return LinForm(tuple(-a for a in self.coeffs))

    def scale(self, c) -> "LinForm":
        c = _frac(c)
        return LinForm(tuple(c * a for a in self.coeffs))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def support(self) -> set[int]:
        return {i for i, c in enumerate(self.coeffs) if c}

    def poly(self, nvars: int | None = None, offset: int = 0) -> MultiPoly:
        return MultiPoly.linear(self.coeffs, offset, nvars)


class LinMatrix:
    """An m x n matrix of linear forms in z_0..z_k (k+1 = nz)."""

    def __init__(self, entries: Sequence[Sequence[LinForm]]):
        if not entries or not entries[0]:
            raise DomainError("matrix must be non-empty")
        self.m = len(entries)
        self.n = len(entries[0])
        if any(len(row) != self.n for row in entries):
            raise DomainError("ragged matrix")
        self.nz = len(entries[0][0].coeffs)
        if any(len(e.coeffs) != self.nz for row in entries for e in row):
            raise DomainError("all entries must share one coefficient length")
        self.entries = [list(row) for row in entries]

    @property
    def k(self) -> int:
        return self.nz - 1

    @classmethod
    def zeros(cls, m: int, n: int, nz: int) -> "LinMatrix":
        return cls([[LinForm.zero(nz) for _ in range(n)] for _ in range(m)])

    @classmethod
    def from_coeffs(cls, rows) -> "LinMatrix":
        """Build from nested lists of coefficient vectors."""
        return cls([[LinForm.of(c) for c in row] for row in rows])

    def __getitem__(self, ij) -> LinForm:
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        return isinstance(other, LinMatrix) and self.entries == other.entries

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "LinMatrix":
        return LinMatrix([[self.entries[i][j] for j in cols] for i in rows])

    def permuted(self, row_perm: Sequence[int], col_perm: Sequence[int]) -> "LinMatrix":
        """Matrix whose row i is row row_perm[i] of self, likewise for columns."""
        return LinMatrix([[self.entries[i][j] for j in col_perm] for i in row_perm])

    def substituted(self, matrix: Sequence[Sequence]) -> "LinMatrix":
        """Apply the linear change of variables z_i -> sum_j matrix[i][j] z_j."""
        nz = len(matrix[0])
        out = []
        for row in self.entries:
            new_row = []
            for e in row:
                coeffs = [Fraction(0)] * nz
                for i, c in enumerate(e.coeffs):
                    if c:
                        for j in range(nz):
                            coeffs[j] += c * _frac(matrix[i][j])
                new_row.append(LinForm(tuple(coeffs)))
            out.append(new_row)
        return LinMatrix(out)

    def polys(self) -> list[list[MultiPoly]]:
        return [[e.poly(self.nz) for e in row] for row in self.entries]

    def __repr__(self):
        return f"LinMatrix({self.m}x{self.n}, k={self.k})"


def det_poly(M: LinMatrix) -> MultiPoly:
    if M.m != M.n:
        raise DomainError(f"det_poly needs a square matrix, got {M.m}x{M.n}")
    if M.m > MINOR_SIZE_MAX:
        raise DomainError(f"minor size {M.m} exceeds {MINOR_SIZE_MAX}")
    return poly_det(M.polys(), signed=True)


def perm_poly(M: LinMatrix) -> MultiPoly:
    if M.m != M.n:
        raise DomainError(f"perm_poly needs a square matrix, got {M.m}x{M.n}")
    if M.m > MINOR_SIZE_MAX:
        raise DomainError(f"minor size {M.m} exceeds {MINOR_SIZE_MAX}")
    return poly_det(M.polys(), signed=False)


def plane_in_scheme(M: LinMatrix, r: int, family: str) -> bool:
    """True iff every r x r determinant (or permanent) of M vanishes identically."""
    if family not in (DET, PERM):
        raise DomainError(f"unknown family {family!r}")
    if not 1 <= r <= min(M.m, M.n):
        raise DomainError(f"need 1 <= r <= min(m, n), got r={r}")
    expand = det_poly if family == DET else perm_poly
    for rows in itertools.combinations(range(M.m), r):
        for cols in itertools.combinations(range(M.n), r):
            if not expand(M.submatrix(rows, cols)).is_zero():
                return False
    return True


# -- exact linear algebra ---------------------------------------------------------


def _integer_row(row: dict) -> dict[int, int]:
    """Scale a rational row to a primitive integer row with the same span."""
    scale = 1
    for v in row.values():
        d = v.denominator
        if d != 1:
            scale = scale * d // gcd(scale, d)
    if scale == 1:
        return _primitive({c: int(v) for c, v in row.items() if v})
    return _primitive({c: int(v * scale) for c, v in row.items() if v})


def _primitive(row: dict[int, int]) -> dict[int, int]:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    return {c: v // g for c, v in row.items()} if g > 1 else row


def rational_rank(rows: Iterable[dict]) -> int:
    """Rank over Q of sparse rows {column: value}.

    Rows are cleared of denominators and eliminated fraction-free: each
    incoming row is reduced by the stored row whose pivot is its lowest
    column, repeatedly, until it vanishes or exposes a new pivot.
    """
    basis: dict[int, dict[int, int]] = {}
    for row in rows:
        row = _integer_row(row)
        while row:
            col = min(row)
            pivot_row = basis.get(col)
            if pivot_row is None:
                basis[col] = row
                break
            a, lead = row[col], pivot_row[col]
            g = gcd(a, lead)
            fa, fl = a // g, lead // g
            out = {c: v * fl for c, v in row.items()}
            for c, v in pivot_row.items():
                nv = out.get(c, 0) - fa * v
                if nv:
                    out[c] = nv
                else:
                    out.pop(c, None)
            row = _primitive(out)
    return len(basis)


def span_dim(M: LinMatrix) -> int:
    """Dimension of the Q-span of all entries of M."""
    return rational_rank(
        {i: c for i, c in enumerate(e.coeffs) if c} for row in M.entries for e in row
    )


def anchored_index_sets(m: int, n: int, r: int, s: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """All r x r submatrices containing the last s rows and the last r-s-1 columns.

    Indices are 0-based.
    """
    if not 0 <= s <= r - 1:
        raise DomainError(f"s={s} outside 0..{r - 1}")
    if r > min(m, n):
        raise DomainError("r exceeds matrix size")
    last_rows = tuple(range(m - s, m))
    last_cols = tuple(range(n - (r - s - 1), n))
    row_sets = [c + last_rows for c in itertools.combinations(range(m - s), r - s)]
    col_sets = [c + last_cols for c in itertools.combinations(range(n - (r - s - 1)), s + 1)]
    return [(rows, cols) for rows in row_sets for cols in col_sets]


# -- k-plane files ------------------------------------------------------------------


def _parse_rational(text) -> Fraction:
    if not isinstance(text, str):
        if isinstance(text, int) and not isinstance(text, bool):
            return Fraction(text)
        raise ParseError(f"coefficient {text!r} must be a 'p/q' string")
    try:
        if any(ch in text for ch in ".eE"):
            raise ValueError
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"malformed rational {text!r}") from None


def plane_from_doc(doc: dict) -> LinMatrix:
    try:
        m, n, k, entries = doc["m"], doc["n"], doc["k"], doc["entries"]
    except (KeyError, TypeError):
        raise ParseError("k-plane document needs keys m, n, k, entries") from None
    if not all(isinstance(v, int) for v in (m, n, k)) or k < 0:
        raise ParseError("m, n, k must be non-negative integers")
    if len(entries) != m or any(len(row) != n for row in entries):
        raise ParseError(f"entries must be an {m}x{n} array")
    rows = []
    for row in entries:
        cells = []
        for vec in row:
            if len(vec) != k + 1:
                raise ParseError(f"each entry needs k+1 = {k + 1} coefficients")
            cells.append(LinForm(tuple(_parse_rational(c) for c in vec)))
        rows.append(cells)
    return LinMatrix(rows)


def plane_to_doc(M: LinMatrix) -> dict:
    return {
        "m": M.m,
        "n": M.n,
        "k": M.k,
        "entries": [[[str(c) for c in e.coeffs] for e in row] for row in M.entries],
    }


def loads_plane(text: str) -> LinMatrix:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"not valid JSON: {exc}") from None
    return plane_from_doc(doc)


def dumps_plane(M: LinMatrix) -> str:
    """Canonical serialization: one matrix row per line."""
    doc = plane_to_doc(M)
    rows = ",\n  ".join(json.dumps(row) for row in doc["entries"])
    return f'{{"m": {M.m}, "n": {M.n}, "k": {M.k}, "entries": [\n  {rows}\n]}}\n'
