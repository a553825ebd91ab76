"""Basic numeric invariants of the Fano schemes F_k(D^r_{m,n}) and F_k(P^r_{m,n}).

Throughout, ``s`` indexes the compression spaces: matrices with an
``(m - s) x (s + 1 + n - r)`` block of zeros in the upper left corner.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .errors import DomainError


@dataclass(frozen=True)
class FanoParams:
    """The quadruple (m, n, r, k): k-planes on the r x r minors of an m x n matrix."""

    m: int
    n: int
    r: int
    k: int = 0

    def __post_init__(self):
        for name in ("m", "n", "r", "k"):
            if not isinstance(getattr(self, name), int):
                raise DomainError(f"{name} must be an integer")
        if self.m < 2:
            raise DomainError(f"need m >= 2, got m={self.m}")
        if not 1 < self.r <= self.m <= self.n:
            raise DomainError(
                f"need 1 < r <= m <= n, got (m, n, r) = ({self.m}, {self.n}, {self.r})"
            )
        if self.k < 0:
            raise DomainError(f"need k >= 0, got k={self.k}")

    def with_k(self, k: int) -> "FanoParams":
        return FanoParams(self.m, self.n, self.r, k)

    def svalues(self) -> range:
        return range(self.r)


@dataclass(frozen=True)
class CompressionIndex:
    """A compression index s (0 <= s <= r-1) tied to its parameters."""

    params: FanoParams
    s: int

    def __post_init__(self):
        _check_s(self.params, self.s)

    @property
    def t(self) -> int:
        """Number of zero columns, s + 1 + n - r."""
        return self.s + 1 + self.params.n - self.params.r

    @property
    def zero_rows(self) -> int:
        return self.params.m - self.s


SLike = Union[int, CompressionIndex]


def _check_s(p: FanoParams, s) -> int:
    if isinstance(s, CompressionIndex):
        s = s.s
    if not isinstance(s, int) or not 0 <= s <= p.r - 1:
        raise DomainError(f"compression index s={s!r} outside 0..{p.r - 1}")
    return s


def kappa(p: FanoParams, s: SLike) -> int:
    """Projective dimension of an s-compression space: mn - (m-s)(s+n-r+1) - 1."""
    s = _check_s(p, s)
    m, n, r = p.m, p.n, p.r
    return m * n - (m - s) * (s + n - r + 1) - 1


def delta(p: FanoParams, s: SLike) -> int:
    """Dimension of the parameter space Gr(s+1+n-r, n) x Gr(s, m)."""
    s = _check_s(p, s)
    m, n, r = p.m, p.n, p.r
    return (s + 1 + n - r) * (r - s - 1) + s * (m - s)


def is_nonempty(p: FanoParams) -> bool:
    """F_k is nonempty iff k < (r-1)n, for determinants and permanents alike."""
    return p.k < (p.r - 1) * p.n


def compression_component_dim(p: FanoParams, s: SLike) -> int:
    """Dimension of the compression component C_k(s) of F_k(D^r_{m,n})."""
    s = _check_s(p, s)
    ks = kappa(p, s)
    if p.k > ks:
        raise DomainError(f"component C_{p.k}({s}) absent: k > kappa({s}) = {ks}")
    return delta(p, s) + (p.k + 1) * (ks - p.k)


def lines_component_dims(m: int, n: int, r: int) -> list[int]:
    """Dimensions of the r irreducible components of the Fano scheme of lines."""
    p = FanoParams(m, n, r, 1)
    return [delta(p, s) + 2 * (kappa(p, s) - 1) for s in p.svalues()]


def square_lines_dim(n: int, r: int) -> int:
    """Common component dimension (n-r)(r-2) + 2nr - n - 5 of F_1(D^r_{n,n})."""
    return (n - r) * (r - 2) + 2 * n * r - n - 5
