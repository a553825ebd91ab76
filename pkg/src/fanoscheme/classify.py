"""Smoothness, irreducibility and connectedness of F_k(D^r_{m,n}) and F_k(P^r_{m,n}).

Every verdict is returned together with a short certificate naming the
clause that decided it and, where relevant, the witnessing compression
index ``s``.  Connectedness is tri-state: where the known sufficient
conditions for neither connectedness nor disconnectedness apply the answer
is ``UNKNOWN``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .errors import DomainError, EmptySchemeError
from .params import FanoParams, is_nonempty, kappa

DET = "det"
PERM = "perm"
FAMILIES = (DET, PERM)


class TriState(enum.Enum):
    CONNECTED = "Connected"
    DISCONNECTED = "Disconnected"
    UNKNOWN = "Unknown"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class Verdict:
    """A classifier answer plus the clause that produced it."""

    value: object
    theorem_tag: str
    s: Optional[int] = None

    def as_dict(self) -> dict:
        value = self.value.value if isinstance(self.value, TriState) else self.value
        out = {"verdict": value, "theorem_tag": self.theorem_tag}
        if self.s is not None:
            out["witness_s"] = self.s
        return out


def _require_nonempty(p: FanoParams):
    if not is_nonempty(p):
        raise EmptySchemeError(
            f"F_{p.k}(D^{p.r}_{p.m},{p.n}) is empty: need k < (r-1)n = {(p.r - 1) * p.n}"
        )
    if p.k < 1:
        raise DomainError("classifiers are stated for k >= 1")


def _small_k_bound(p: FanoParams) -> Fraction:
    """m(r-2) - ((n-m) - (r-2))^2 / 4, kept exact."""
    return p.m * (p.r - 2) - Fraction(((p.n - p.m) - (p.r - 2)) ** 2, 4)


# -- determinants -------------------------------------------------------------


def det_smooth(p: FanoParams) -> Verdict:
    _require_nonempty(p)
    bound = (p.r - 2) * p.n
    return Verdict(p.k > bound, f"det.smooth:k>{bound}")


def det_is_smooth(p: FanoParams) -> bool:
    return det_smooth(p).value


def det_irreducible(p: FanoParams) -> Verdict:
    _require_nonempty(p)
    if p.m == p.n:
        return Verdict(False, "det.irreducible:m=n")
    bound = (p.r - 2) * p.n + p.m - p.r + 1
    return Verdict(p.k > bound, f"det.irreducible:k>{bound}")


def det_is_irreducible(p: FanoParams) -> bool:
    return det_irreducible(p).value


def det_isolated_index(p: FanoParams) -> Optional[int]:
    """Smallest s <= r-2 whose compression component is a smooth connected component.

    Such an s has k <= kappa(s), k > kappa(s) - (m-s-1), and, when s != 0,
    k > kappa(s) - (n-r+s).
    """
    k = p.k
    for s in range(p.r - 1):
        ks = kappa(p, s)
        if k > ks:
            continue
        if k <= ks - (p.m - s - 1):
            continue
        if s != 0 and k <= ks - (p.n - p.r + s):
            continue
        return s
    return None


def det_connected(p: FanoParams) -> Verdict:
    _require_nonempty(p)
    s = det_isolated_index(p)
    if s is not None:
        tag = "det.connected:square-interval" if p.r == p.m else "det.connected:isolated"
        return Verdict(TriState.DISCONNECTED, f"{tag}(s={s})", s)
    if p.r == p.m:
        return Verdict(TriState.CONNECTED, "det.connected:square-complement")
    k0 = kappa(p, 0)
    if p.k > k0:
        return Verdict(TriState.CONNECTED, "det.connected:k>kappa(0)")
    if p.k <= k0 - (p.m - p.r + 1) * (p.r - 1):
        return Verdict(TriState.CONNECTED, "det.connected:C(0)-meets-C(r-1)")
    if p.k <= _small_k_bound(p):
        return Verdict(TriState.CONNECTED, "det.connected:small-k")
    return Verdict(TriState.UNKNOWN, "none")


def det_is_connected(p: FanoParams) -> TriState:
    return det_connected(p).value


# -- permanents ---------------------------------------------------------------


def perm_hypotheses_failure(p: FanoParams, s: int) -> Optional[str]:
    """Return the first violated size hypothesis for a permanental witness at s, if any."""
    k, r = p.k, p.r
    if s < 0 or s > r - 1:
        return f"s={s} outside 0..{r - 1}"
    ks = kappa(p, s)
    if k > ks:
        return f"k={k} > kappa({s})={ks}"
    if s in (0, r - 1):
        if k < 2:
            return f"k={k} < 2 for s in {{0, r-1}}"
    elif k < 5:
        return f"k={k} < 5 for 1 <= s <= r-2"
    if s != 0 and s + 1 + p.n - r < 3:
        return f"s+1+n-r={s + 1 + p.n - r} < 3"
    if s != r - 1 and p.m - s < 3:
        return f"m-s={p.m - s} < 3"
    return None


def perm_isolated_index(p: FanoParams) -> Optional[int]:
    """Smallest s whose standard compression components are smooth isolated components."""
    k = p.k
    for s in range(p.r):
        if perm_hypotheses_failure(p, s) is not None:
            continue
        ks = kappa(p, s)
        if s != p.r - 1 and k <= ks - (p.m - s - 2):
            continue
        if s != 0 and k <= ks - (p.n - p.r + s - 1):
            continue
        return s
    return None


def perm_smooth(p: FanoParams) -> Verdict:
    _require_nonempty(p)
    if p.n == 2:
        return Verdict(True, "perm.smooth:n=2")
    bound = (p.r - 2) * p.n + 1
    return Verdict(p.k > bound, f"perm.smooth:k>{bound}")


def perm_is_smooth(p: FanoParams) -> bool:
    return perm_smooth(p).value


def perm_irreducible(p: FanoParams) -> Verdict:
    _require_nonempty(p)
    return Verdict(False, "perm.irreducible:never")


def perm_is_irreducible(p: FanoParams) -> bool:
    return perm_irreducible(p).value


def perm_connected(p: FanoParams) -> Verdict:
    _require_nonempty(p)
    m, n, r, k = p.m, p.n, p.r, p.k
    if (m, n, r, k) == (2, 2, 2, 1):
        return Verdict(TriState.DISCONNECTED, "perm.connected:two-rulings")
    if (m, n, r, k) == (3, 3, 3, 4):
        # Three connected components, from the explicit local analysis of F_4(P^3_{3,3}).
        return Verdict(TriState.DISCONNECTED, "perm.connected:three-components")
    s = perm_isolated_index(p)
    if s is not None:
        return Verdict(TriState.DISCONNECTED, f"perm.connected:isolated(s={s})", s)

    k0 = kappa(p, 0)
    ok = k <= max(k0, kappa(p, r - 2))
    if ok:
        for s in range(1, r - 1):
            ks = kappa(p, s)
            if k <= ks and k > ks - min(m - s - 1, n - r + s):
                ok = False
                break
    if ok and k <= k0 and k > k0 - (m - r + 1) * (r - 1):
        ok = False
    if ok:
        return Verdict(TriState.CONNECTED, "perm.connected:chain")
    if k <= _small_k_bound(p):
        return Verdict(TriState.CONNECTED, "perm.connected:small-k")
    return Verdict(TriState.UNKNOWN, "none")


def perm_is_connected(p: FanoParams) -> TriState:
    return perm_connected(p).value


# -- dispatch -----------------------------------------------------------------

_CLASSIFIERS = {
    DET: (det_smooth, det_irreducible, det_connected),
    PERM: (perm_smooth, perm_irreducible, perm_connected),
}


def classify(p: FanoParams, family: str) -> dict[str, Verdict]:
    """All three verdicts for one family; raises EmptySchemeError when F_k is empty."""
    if family not in _CLASSIFIERS:
        raise DomainError(f"unknown family {family!r}")
    smooth, irreducible, connected = _CLASSIFIERS[family]
    return {
        "smooth": smooth(p),
        "irreducible": irreducible(p),
        "connected": connected(p),
    }


# -- tables for r = m = n -----------------------------------------------------


@dataclass
class TableRow:
    """One column of the summary table for F_k(X^n_{n,n}), k = 1..(n-1)n-1."""

    family: str
    n: int
    nonempty_max_k: int
    singular_max_k: Optional[int]
    connected_cells: list[TriState] = field(default_factory=list)

    def ks_with(self, verdict: TriState) -> list[int]:
        return [k for k, v in enumerate(self.connected_cells, start=1) if v is verdict]

    @property
    def connected_prefix(self) -> Optional[int]:
        """Largest K with every k <= K connected (None if k = 1 is not connected)."""
        K = 0
        for v in self.connected_cells:
            if v is not TriState.CONNECTED:
                break
            K += 1
        return K or None

    @property
    def connected_extra(self) -> list[int]:
        K = self.connected_prefix or 0
        return [k for k in self.ks_with(TriState.CONNECTED) if k > K]

    @property
    def disconnected(self) -> list[int]:
        return self.ks_with(TriState.DISCONNECTED)


def table_row(family: str, n: int) -> TableRow:
    if family not in FAMILIES:
        raise DomainError(f"unknown family {family!r}")
    p = FanoParams(n, n, n, 1)
    top = (n - 1) * n - 1
    connected = perm_is_connected if family == PERM else det_is_connected
    smooth = perm_is_smooth if family == PERM else det_is_smooth
    singular = [k for k in range(1, top + 1) if not smooth(p.with_k(k))]
    cells = [connected(p.with_k(k)) for k in range(1, top + 1)]
    return TableRow(family, n, top, max(singular) if singular else None, cells)


def render_table(family: str, n_range) -> list[TableRow]:
    return [table_row(family, n) for n in n_range]


def format_ks(ks: list[int]) -> str:
    """Compress a sorted list of integers into runs: [57, 60, 61, 62, 63] -> '57,60-63'."""
    parts = []
    i = 0
    while i < len(ks):
        j = i
        while j + 1 < len(ks) and ks[j + 1] == ks[j] + 1:
            j += 1
        parts.append(str(ks[i]) if i == j else f"{ks[i]}-{ks[j]}")
        i = j + 1
    return ",".join(parts)
