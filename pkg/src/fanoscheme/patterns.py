"""Torus fixed points of Gr(k+1, mn) as zero/star patterns.

A pattern is an ``m x n`` matrix of zeros and stars, stored as an integer
bitmask with bit ``i * n + j`` set when cell ``(i, j)`` is a star.  A
pattern lies on the determinantal (equivalently permanental) scheme of
``r x r`` minors iff its bipartite star graph has no matching of size r,
iff it has an ``(m - s) x (s + 1 + n - r)`` block of zeros for some s.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb
from typing import Iterable, Iterator, Optional

from .errors import DomainError, ResourceError
from .params import FanoParams

DEFAULT_CELL_CAP = 25
ORBIT_SIDE_CAP = 6


@dataclass(frozen=True)
class StarPattern:
    m: int
    n: int
    bits: int

    @classmethod
    def from_cells(cls, m: int, n: int, cells: Iterable[tuple[int, int]]) -> "StarPattern":
        bits = 0
        for i, j in cells:
            if not (0 <= i < m and 0 <= j < n):
                raise DomainError(f"cell {(i, j)} outside {m}x{n}")
            bits |= 1 << (i * n + j)
        return cls(m, n, bits)

    @classmethod
    def parse(cls, text: str) -> "StarPattern":
        """Parse the row format ``00*/00*/***``."""
        rows = text.strip().split("/")
        n = len(rows[0])
        if any(len(row) != n for row in rows) or any(c not in "*0" for c in "".join(rows)):
            raise DomainError(f"malformed pattern {text!r}")
        cells = [(i, j) for i, row in enumerate(rows) for j, c in enumerate(row) if c == "*"]
        return cls.from_cells(len(rows), n, cells)

    def __str__(self):
        return "/".join(
            "".join("*" if self.is_star(i, j) else "0" for j in range(self.n))
            for i in range(self.m)
        )

    def is_star(self, i: int, j: int) -> bool:
        return bool(self.bits >> (i * self.n + j) & 1)

    def cells(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.m) for j in range(self.n) if self.is_star(i, j)]

    @property
    def size(self) -> int:
        return bin(self.bits).count("1")

    def row_masks(self) -> list[int]:
        full = (1 << self.n) - 1
        return [(self.bits >> (i * self.n)) & full for i in range(self.m)]

    def transpose(self) -> "StarPattern":
        return StarPattern.from_cells(self.n, self.m, [(j, i) for i, j in self.cells()])

    def permuted(self, row_perm, col_perm) -> "StarPattern":
        """Image under (i, j) -> (row_perm[i], col_perm[j])."""
        return StarPattern.from_cells(
            self.m, self.n, [(row_perm[i], col_perm[j]) for i, j in self.cells()]
        )


def _matching_size(rows: list[int], n: int) -> int:
    """Maximum matching by augmenting paths; rows[i] is the column bitmask of row i."""
    match_col = [-1] * n

    def augment(i: int, seen: list[bool]) -> bool:
        adj = rows[i]
        while adj:
            low = adj & -adj
            j = low.bit_length() - 1
            adj ^= low
            if seen[j]:
                continue
            seen[j] = True
            if match_col[j] < 0 or augment(match_col[j], seen):
                match_col[j] = i
                return True
        return False

    return sum(augment(i, [False] * n) for i in range(len(rows)))


def max_matching_size(p: StarPattern) -> int:
    return _matching_size(p.row_masks(), p.n)


def is_fano_fixed_point(p: StarPattern, r: int) -> bool:
    """True iff the pattern spans a plane on D^r (equivalently P^r)."""
    if r < 1:
        raise DomainError("r must be positive")
    return max_matching_size(p) <= r - 1


def lies_in_standard_compression(
    p: StarPattern, r: int
) -> Optional[tuple[int, tuple[int, ...], tuple[int, ...]]]:
    """Find (s, zero rows, zero cols) with an (m-s) x (s+1+n-r) zero block, or None.

    Scans s upward and row subsets in lexicographic order; the zero columns
    returned are the first s+1+n-r columns free of stars in the chosen rows.
    """
    m, n = p.m, p.n
    rows = p.row_masks()
    for s in range(min(r, m + 1)):
        t = s + 1 + n - r
        if t < 0:
            continue
        for row_set in itertools.combinations(range(m), m - s):
            used = 0
            for i in row_set:
                used |= rows[i]
            free = [j for j in range(n) if not used >> j & 1]
            if len(free) >= t:
                return s, row_set, tuple(free[:t])
    return None


def _combinations_bits(cells: int, size: int) -> Iterator[int]:
    """All `size`-subsets of range(cells) as bitmasks, in colex order (Gosper's hack)."""
    if size == 0:
        yield 0
        return
    if size > cells:
        return
    x = (1 << size) - 1
    limit = 1 << cells
    while x < limit:
        yield x
        c = x & -x
        y = x + c
        x = (((x ^ y) >> 2) // c) | y


def _check_cap(p: FanoParams, cap: int):
    if p.m * p.n > cap:
        raise ResourceError(f"m*n = {p.m * p.n} exceeds the enumeration cap of {cap} cells")


def iter_fixed_points(p: FanoParams, cap: int = DEFAULT_CELL_CAP) -> Iterator[StarPattern]:
    """Every (k+1)-star pattern in F_k(D^r_{m,n}), in colex order."""
    _check_cap(p, cap)
    m, n, r = p.m, p.n, p.r
    full = (1 << n) - 1
    for bits in _combinations_bits(m * n, p.k + 1):
        rows = [(bits >> (i * n)) & full for i in range(m)]
        if _matching_size(rows, n) < r:
            yield StarPattern(m, n, bits)


def count_fixed_points(p: FanoParams, cap: int = DEFAULT_CELL_CAP) -> int:
    return sum(1 for _ in iter_fixed_points(p, cap))


def _check_orbit_cap(m: int, n: int):
    if m > ORBIT_SIDE_CAP or n > ORBIT_SIDE_CAP:
        raise ResourceError(f"orbit canonicalization is capped at {ORBIT_SIDE_CAP}x{ORBIT_SIDE_CAP}")


def _permute_rows(rows: list[int], perm) -> list[int]:
    out = [0] * len(rows)
    for i, row in enumerate(rows):
        out[perm[i]] = row
    return out


def _permute_cols(row: int, perm) -> int:
    out = 0
    while row:
        low = row & -row
        out |= 1 << perm[low.bit_length() - 1]
        row ^= low
    return out


def _to_bits(rows: list[int], n: int) -> int:
    bits = 0
    for i, row in enumerate(rows):
        bits |= row << (i * n)
    return bits


def orbit(p: StarPattern) -> set[int]:
    """Bitmasks of all S_m x S_n images of p (no transpose)."""
    _check_orbit_cap(p.m, p.n)
    rows = p.row_masks()
    images = set()
    for cperm in itertools.permutations(range(p.n)):
        crows = [_permute_cols(row, cperm) for row in rows]
        for rperm in itertools.permutations(range(p.m)):
            images.add(_to_bits(_permute_rows(crows, rperm), p.n))
    return images


def orbit_canonical_form(p: StarPattern) -> StarPattern:
    """Smallest bitmask in the S_m x S_n orbit of p (transpose not applied)."""
    _check_orbit_cap(p.m, p.n)
    rows = p.row_masks()
    best = None
    for cperm in itertools.permutations(range(p.n)):
        # Later rows occupy higher bits, so for a fixed column order the
        # minimum puts the row masks in decreasing order from the top.
        crows = sorted((_permute_cols(row, cperm) for row in rows), reverse=True)
        bits = _to_bits(crows, p.n)
        if best is None or bits < best:
            best = bits
    return StarPattern(p.m, p.n, best)


def count_fixed_orbits(p: FanoParams, cap: int = DEFAULT_CELL_CAP) -> int:
    return len(fixed_orbits(p, cap))


def fixed_orbits(p: FanoParams, cap: int = DEFAULT_CELL_CAP) -> dict[StarPattern, int]:
    """Canonical representative -> orbit size, over all fixed points of F_k."""
    _check_orbit_cap(p.m, p.n)
    sizes: dict[StarPattern, int] = {}
    for pat in iter_fixed_points(p, cap):
        rep = orbit_canonical_form(pat)
        sizes[rep] = sizes.get(rep, 0) + 1
    return dict(sorted(sizes.items(), key=lambda item: item[0].bits))


def census_size(p: FanoParams) -> int:
    """Number of candidate patterns, C(mn, k+1)."""
    return comb(p.m * p.n, p.k + 1)
