"""Intersection numbers on Gr(2, N) and degrees of Fano scheme components.

Schubert classes of Gr(2, N) are indexed by partitions (a, b) in a
2 x (N-2) box.  Only multiplication by sigma_1 (Pieri) and sigma_{1,1} is
needed, which is enough to integrate any polynomial in the Chern classes of
the dual tautological subbundle.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb, factorial, prod

from .errors import DomainError
from .params import FanoParams, delta


@dataclass(frozen=True, order=True)
class Partition2:
    a: int
    b: int

    def __post_init__(self):
        if not self.a >= self.b >= 0:
            raise DomainError(f"need a >= b >= 0, got ({self.a}, {self.b})")

    @property
    def codim(self) -> int:
        return self.a + self.b

    def __str__(self):
        return f"s{self.a},{self.b}"


@dataclass
class ChowClass:
    """An integer combination of Schubert classes on Gr(2, N)."""

    N: int
    coeffs: dict[Partition2, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.N < 2:
            raise DomainError(f"Gr(2, N) needs N >= 2, got N={self.N}")
        for lam in self.coeffs:
            if lam.a > self.N - 2:
                raise DomainError(f"{lam} does not fit the 2x{self.N - 2} box")
        self.coeffs = {lam: c for lam, c in self.coeffs.items() if c}

    @classmethod
    def schubert(cls, N: int, a: int, b: int = 0) -> "ChowClass":
        return cls(N, {Partition2(a, b): 1})

    @classmethod
    def unit(cls, N: int) -> "ChowClass":
        return cls.schubert(N, 0, 0)

    @classmethod
    def point(cls, N: int) -> "ChowClass":
        return cls.schubert(N, N - 2, N - 2)

    def __add__(self, other: "ChowClass") -> "ChowClass":
        self._same_space(other)
        out = dict(self.coeffs)
        for lam, c in other.coeffs.items():
            out[lam] = out.get(lam, 0) + c
        return ChowClass(self.N, out)

    def scale(self, c: int) -> "ChowClass":
        return ChowClass(self.N, {lam: c * v for lam, v in self.coeffs.items()})

    def _same_space(self, other: "ChowClass"):
        if self.N != other.N:
            raise DomainError(f"classes live on Gr(2,{self.N}) and Gr(2,{other.N})")

    def __eq__(self, other):
        return isinstance(other, ChowClass) and self.N == other.N and self.coeffs == other.coeffs

    def __repr__(self):
        if not self.coeffs:
            return f"0 in Gr(2,{self.N})"
        terms = " + ".join(f"{c}*{lam}" for lam, c in sorted(self.coeffs.items()))
        return f"{terms} in Gr(2,{self.N})"


def pieri_sigma1(c: ChowClass) -> ChowClass:
    top = c.N - 2
    out: dict[Partition2, int] = {}
    for lam, v in c.coeffs.items():
        if lam.a + 1 <= top:
            key = Partition2(lam.a + 1, lam.b)
            out[key] = out.get(key, 0) + v
        if lam.b + 1 <= lam.a:
            key = Partition2(lam.a, lam.b + 1)
            out[key] = out.get(key, 0) + v
    return ChowClass(c.N, out)


def mul_sigma11(c: ChowClass) -> ChowClass:
    top = c.N - 2
    out = {
        Partition2(lam.a + 1, lam.b + 1): v for lam, v in c.coeffs.items() if lam.a + 1 <= top
    }
    return ChowClass(c.N, out)


def sigma1_power(c: ChowClass, e: int) -> ChowClass:
    for _ in range(e):
        c = pieri_sigma1(c)
    return c


def integrate(c: ChowClass) -> int:
    """Degree of the zero-cycle part: the coefficient of the point class."""
    return c.coeffs.get(Partition2(c.N - 2, c.N - 2), 0)


# -- symmetric polynomials in two Chern roots -------------------------------------


@dataclass
class SymPoly2:
    """Integer polynomial in e1 = x1 + x2 and e2 = x1 x2, as {(i, j): coeff of e1^i e2^j}."""

    terms: dict[tuple[int, int], int]

    def evaluate(self, e1, e2):
        return sum(c * e1**i * e2**j for (i, j), c in self.terms.items())

    def weighted_degrees(self) -> set[int]:
        return {i + 2 * j for i, j in self.terms}

    def __repr__(self):
        parts = []
        for (i, j), c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(x for x in (f"e1^{i}" if i else "", f"e2^{j}" if j else "") if x)
            parts.append(f"{c}*{mono}" if mono else str(c))
        return " + ".join(parts) or "0"


def _mul_bivariate(f: dict[tuple[int, int], int], g: dict[tuple[int, int], int]):
    out: dict[tuple[int, int], int] = {}
    for (a1, b1), c1 in f.items():
        for (a2, b2), c2 in g.items():
            key = (a1 + a2, b1 + b2)
            out[key] = out.get(key, 0) + c1 * c2
    return {k: v for k, v in out.items() if v}


def symmetric_reduce(f: dict[tuple[int, int], int]) -> SymPoly2:
    """Write a symmetric polynomial {(a, b): coeff of x1^a x2^b} in e1, e2.

    Repeatedly strips the lex-leading monomial x1^a x2^b (a >= b) by
    subtracting c * e1^(a-b) * e2^b.
    """
    f = {k: v for k, v in f.items() if v}
    e1 = {(1, 0): 1, (0, 1): 1}
    out: dict[tuple[int, int], int] = {}
    while f:
        a, b = max(f)
        if a < b:
            raise DomainError("polynomial is not symmetric")
        c = f[(a, b)]
        out[(a - b, b)] = out.get((a - b, b), 0) + c
        term = {(b, b): c}
        for _ in range(a - b):
            term = _mul_bivariate(term, e1)
        for key, v in term.items():
            nv = f.get(key, 0) - v
            if nv:
                f[key] = nv
            else:
                f.pop(key, None)
    return SymPoly2(out)


def chern_top_sym(n: int) -> SymPoly2:
    """Top Chern class of Sym^n of a rank-2 bundle with Chern roots x1, x2."""
    if n < 1:
        raise DomainError(f"need n >= 1, got n={n}")
    f = {(0, 0): 1}
    for i in range(n + 1):
        f = _mul_bivariate(f, {(1, 0): i, (0, 1): n - i})
    return symmetric_reduce(f)


def apply_sym(poly: SymPoly2, c: ChowClass) -> ChowClass:
    """poly(sigma_1, sigma_{1,1}) * c."""
    total = ChowClass(c.N)
    for (i, j), coeff in sorted(poly.terms.items()):
        x = c
        for _ in range(j):
            x = mul_sigma11(x)
        total = total + sigma1_power(x, i).scale(coeff)
    return total


def f1_degree(n: int) -> int:
    """Degree of the Fano scheme of lines on the n x n determinant hypersurface."""
    if n < 2:
        raise DomainError(f"need n >= 2, got n={n}")
    N = n * n
    base = sigma1_power(ChowClass.unit(N), 2 * n * n - n - 5)
    return integrate(apply_sym(chern_top_sym(n), base))


def gr_degree(a: int, b: int) -> int:
    """Degree of Gr(a, b) in its Pluecker embedding."""
    if not 0 <= a <= b:
        raise DomainError(f"need 0 <= a <= b, got ({a}, {b})")
    num = factorial(a * (b - a))
    den = prod(j - i for i in range(1, a + 1) for j in range(a + 1, b + 1))
    q, rem = divmod(num, den)
    if rem:
        raise ArithmeticError(f"({a}({b}-{a}))! is not divisible by the hook product")
    return q


def compression_degree(m: int, n: int, r: int, s: int) -> int:
    """Degree of the component of F_kappa(s) swept out by s-compression spaces."""
    p = FanoParams(m, n, r, 0)
    if not 0 <= s <= r - 1:
        raise DomainError(f"compression index s={s} outside 0..{r - 1}")
    t = s + n - r + 1
    return (
        comb(delta(p, s), s * (m - s))
        * gr_degree(r - s - 1, n)
        * (m - s) ** (t * (r - s - 1))
        * gr_degree(s, m)
        * t ** (s * (m - s))
    )
