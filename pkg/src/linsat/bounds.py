"""Closed-form saturation bounds, evaluated in exact rational arithmetic."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil

from .errors import OutOfDomain

# Edge counts of the residue gadgets, indexed by vertex count 1..18.
GADGET_EDGES = {
    1: 0, 2: 0, 3: 1, 4: 1, 5: 2, 6: 3, 7: 4, 8: 4, 9: 5,
    10: 5, 11: 7, 12: 7, 13: 8, 14: 8, 15: 11, 16: 12, 17: 12, 18: 13,
}

# n mod 18 -> offset d in floor(5(n - d)/6)
_C4_OFFSET = {r: 1 for r in (1, 15, 16)}
_C4_OFFSET.update({r: 2 for r in (0, 2, 3, 4, 5, 6, 7, 17)})
_C4_OFFSET.update({r: 3 for r in (8, 9, 10, 11, 12, 13)})
_C4_OFFSET[14] = 4


@dataclass(frozen=True)
class BoundValue:
    value: Fraction
    integer_bound: int
    provenance: str
    formula: str = ""


def _exact(value, provenance, formula) -> BoundValue:
    value = Fraction(value)
    return BoundValue(value, ceil(value), provenance, formula)


def sat_lower(n: int, k: int, t: int) -> BoundValue:
    """General lower bound floor((n-1)/(k-1)) on the linear Berge-C_t saturation number."""
    if t < 3 or k < 3 or n < k:
        raise OutOfDomain(f"requires t >= 3, k >= 3, n >= k (got n={n}, k={k}, t={t})")
    return _exact((n - 1) // (k - 1), "Thm1.2", "floor((n-1)/(k-1))")


def sat_c3_exact(n: int, k: int) -> BoundValue:
    """Exact linear Berge-C_3 saturation number."""
    if n < 6 or k < 3:
        raise OutOfDomain(f"requires n >= 6 and k >= 3 (got n={n}, k={k})")
    return _exact((n - 1) // (k - 1), "Thm1.3", "floor((n-1)/(k-1))")


def sat_c4_upper(n: int) -> BoundValue:
    """Upper bound for k=3, Berge-C_4, piecewise in n mod 18."""
    if n < 1:
        raise OutOfDomain(f"requires n >= 1 (got n={n})")
    d = _C4_OFFSET[n % 18]
    return _exact(5 * (n - d) // 6, "Thm1.4", f"floor(5(n-{d})/6)")


def c4_family_edges(n: int) -> int:
    """15 * floor((n-1)/18) + gadget edges; the edge count of the C_4 construction."""
    if n < 1:
        raise OutOfDomain(f"requires n >= 1 (got n={n})")
    t = (n - 1) // 18
    return 15 * t + GADGET_EDGES[n - 18 * t]


def component_lower_c4(n_prime: int, min_degree: int) -> BoundValue:
    """Per-component edge lower bound for disconnected Berge-C_4-saturated
    linear 3-graphs, by the component's minimum hypergraph degree."""
    if n_prime < 1 or min_degree < 0:
        raise OutOfDomain(f"requires n' >= 1 and min degree >= 0 (got {n_prime}, {min_degree})")
    if min_degree == 0:
        return _exact(0, "Thm1.5", "0")
    if min_degree == 1:
        return _exact(Fraction(2 * n_prime, 3) - 2, "Thm1.5", "2n'/3 - 2")
    if min_degree == 2:
        return _exact(Fraction(13 * n_prime - 29, 18), "Thm1.5", "(13n'-29)/18")
    return _exact(n_prime, "Thm1.5", "n'")


def disconnected_c4_lower(n: int) -> BoundValue:
    if n < 6:
        raise OutOfDomain(f"requires n >= 6 (got n={n})")
    return _exact(Fraction(2 * n, 3) - 4, "Thm1.5", "2n/3 - 4")


def applicable_bounds(n: int, k: int, t: int) -> list[tuple[str, str, BoundValue | None, str | None]]:
    """Rows ``(theorem, formula, value or None, reason)`` for every formula
    that concerns (n, k, t); out-of-domain rows carry the reason instead."""
    rows = []

    def row(tag, formula, fn, *args):
        try:
            rows.append((tag, formula, fn(*args), None))
        except OutOfDomain as exc:
            rows.append((tag, formula, None, str(exc)))

    row("Thm1.2", "floor((n-1)/(k-1))", sat_lower, n, k, t)
    if t == 3:
        row("Thm1.3", "floor((n-1)/(k-1))", sat_c3_exact, n, k)
    if t == 4 and k == 3:
        row("Thm1.4", "piecewise floor(5(n-d)/6)", sat_c4_upper, n)
        row("Thm1.5", "2n/3 - 4 (disconnected)", disconnected_c4_lower, n)
    return rows
