"""Closed-form bound evaluators and the registry of known exact constants.

Rational formulas are evaluated as exact Fractions in lowest terms.
Formulas involving e or pi are evaluated with mpmath at 40 working digits
and rendered to 30 significant digits, so the reported decimals carry an
error well below 1e-25.  Irrational values never silently enter a rational
pipeline: they are tagged on their reports.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial

import mpmath

_DPS = 40
_SIG = 30


@dataclass(frozen=True)
class BoundReport:
    name: str
    kind: str  # "lower" | "upper" | "count-upper" | "reference"
    params: dict = field(default_factory=dict)
    value: Fraction | None = None  # exact value when the formula is rational
    decimal: str = ""
    irrational: tuple[str, ...] = ()
    construction: str = ""
    note: str = ""


@dataclass(frozen=True)
class GapReport:
    k: int
    upper: Fraction
    reference: Fraction
    reference_kind: str  # "exact" | "lower"
    ratio: Fraction
    decimal: str
    note: str = ""


def _dec(x) -> str:
    """Render a Fraction or mpmath value to 30 significant digits."""
    with mpmath.workdps(_DPS):
        if isinstance(x, Fraction):
            x = mpmath.mpf(x.numerator) / mpmath.mpf(x.denominator)
        return mpmath.nstr(x, _SIG, strip_zeros=False)


def _dec6(x: Fraction) -> str:
    return f"{float(x):.6g}"


def pg_lower(k: int) -> Fraction:
    """Blow-up lower bound k!/(k**k - k) on the inducibility of any
    k-vertex graph."""
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    return Fraction(factorial(k), k**k - k)


def pg_lower_stirling(k: int):
    """Stirling form sqrt(2 pi k)/e**k of the blow-up lower bound."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    with mpmath.workdps(_DPS):
        val = mpmath.sqrt(2 * mpmath.pi * k) / mpmath.e**k
        if k >= 2:
            exact = pg_lower(k)
            assert val <= mpmath.mpf(exact.numerator) / exact.denominator
        return val


def cycle_count_upper(n: int, k: int) -> Fraction:
    """Cycle copy ceiling (2n/k) * ((n-1)/(k-1))**(k-1)."""
    if k < 5:
        raise ValueError(f"k must be >= 5, got {k}")
    if n < k:
        raise ValueError(f"need n >= k, got n={n}, k={k}")
    return Fraction(2 * n, k) * Fraction(n - 1, k - 1) ** (k - 1)


def cycle_ind_upper_pg(k: int):
    """Cycle inducibility ceiling 2e * k!/k**k (irrational factor e)."""
    if k < 5:
        raise ValueError(f"k must be >= 5, got {k}")
    with mpmath.workdps(_DPS):
        return 2 * mpmath.e * factorial(k) / mpmath.mpf(k) ** k


def kral_count_upper(n: int, k: int) -> Fraction:
    """Sharper cycle copy ceiling 2 n**k / k**k, k >= 6."""
    if k < 6:
        raise ValueError(f"k must be >= 6, got {k}")
    if n < k:
        raise ValueError(f"need n >= k, got n={n}, k={k}")
    return Fraction(2 * n**k, k**k)


def kral_ind_upper(k: int) -> Fraction:
    """Asymptotic cycle inducibility ceiling 2 k!/k**k (o(1) term dropped)."""
    if k < 6:
        raise ValueError(f"k must be >= 6, got {k}")
    return Fraction(2 * factorial(k), k**k)


def dlg_count_upper(n: int, k: int) -> Fraction:
    """Double-loop-graph copy ceiling 27 n**k / k**k."""
    if k < 5:
        raise ValueError(f"k must be >= 5, got {k}")
    if n < k:
        raise ValueError(f"need n >= k, got n={n}, k={k}")
    return Fraction(27 * n**k, k**k)


def dlg_ind_upper(k: int) -> Fraction:
    """Double-loop-graph inducibility ceiling 27 k!/k**k."""
    if k < 5:
        raise ValueError(f"k must be >= 5, got {k}")
    return Fraction(27 * factorial(k), k**k)


def bipartite_ind(rho: int, odd: bool = False) -> Fraction:
    """Inducibility of K_{rho,rho} (C(2r,r)/4**r) or K_{rho,rho+1}."""
    if rho < 1:
        raise ValueError(f"rho must be >= 1, got {rho}")
    if odd:
        return Fraction(comb(2 * rho + 1, rho), 4**rho)
    return Fraction(comb(2 * rho, rho), 4**rho)


def conj_disj_lower(k: int, k_prime: int, i1: Fraction, i2: Fraction) -> Fraction:
    """Inducibility floor for a disjoint union or a full join of two graphs
    with known inducibilities i1 and i2."""
    if k < 1 or k_prime < 1:
        raise ValueError("orders must be >= 1")
    i1, i2 = Fraction(i1), Fraction(i2)
    if not (0 <= i1 <= 1 and 0 <= i2 <= 1):
        raise ValueError("inducibilities must lie in [0, 1]")
    s = k + k_prime
    coef = Fraction(
        factorial(s) * k**k * k_prime**k_prime,
        factorial(k) * factorial(k_prime) * s**s,
    )
    return coef * i1 * i2


def path_bounds(k: int) -> tuple[Fraction, Fraction]:
    """Path inducibility window: k!/((k+1)**(k-1) - 1) up to k!/(2 (k-1)**(k-1))."""
    if k < 3:
        raise ValueError(f"k must be >= 3, got {k}")
    lower = Fraction(factorial(k), (k + 1) ** (k - 1) - 1)
    upper = Fraction(factorial(k), 2 * (k - 1) ** (k - 1))
    assert lower <= upper
    return lower, upper


# ---------------------------------------------------------------------------
# Registry of known constants

_REGISTRY: dict[str, BoundReport] = {}


def _register(name: str, report: BoundReport, *aliases: str) -> None:
    _REGISTRY[name] = report
    for a in aliases:
        _REGISTRY[a] = report


def _exact(name, value: Fraction, construction: str, note: str = "") -> BoundReport:
    return BoundReport(
        name=name,
        kind="reference",
        value=value,
        decimal=_dec(value),
        construction=construction,
        note=note,
    )


_register("K3", _exact("K3", Fraction(1), "complete graph"))
_register("P3", _exact("P3", Fraction(3, 4), "complete bipartite graph"))
_register("K4", _exact("K4", Fraction(1), "complete graph"))
_register("S4", _exact("S4", Fraction(1, 2), "complete bipartite graph"))
_register("C4", _exact("C4", Fraction(3, 8), "complete bipartite graph"))
_register("paw", _exact("paw", Fraction(3, 8), "two disjoint complete bipartite graphs"))
_register(
    "K112",
    _exact("K112", Fraction(72, 125), "complete 5-equipartite graph"),
    "K_{1,1,2}",
)
_register("C5", _exact("C5", Fraction(1, 26), "iterated balanced blow-up of C5"))
_register(
    "P4_lower_exoo",
    BoundReport(
        name="P4_lower_exoo",
        kind="lower",
        value=Fraction(960, 4877),
        decimal=_dec(Fraction(960, 4877)),
        construction="blow-up of a Paley graph",
    ),
)
_register(
    "P4_lower_evenzohar",
    BoundReport(
        name="P4_lower_evenzohar",
        kind="lower",
        value=Fraction(1173, 5824),
        decimal=_dec(Fraction(1173, 5824)),
        construction="recursive random-graph construction",
    ),
)
_register(
    "P4_upper_vaughan",
    BoundReport(
        name="P4_upper_vaughan",
        kind="upper",
        value=None,
        decimal="0.204513",
        construction="semidefinite certificate",
        note="numeric constant; not recomputed here",
    ),
)
with mpmath.workdps(_DPS):
    _register(
        "cycle_upper_factor_128e_81",
        BoundReport(
            name="cycle_upper_factor_128e_81",
            kind="reference",
            value=None,
            decimal=mpmath.nstr(128 * mpmath.e / 81, _SIG, strip_zeros=False),
            irrational=("e",),
            note="gap prefactor for cycle inducibility; underlying bound not evaluated here",
        ),
    )


def known_inducibility(name: str) -> BoundReport:
    """Look up a registered exact constant or reference bound by name."""
    try:
        return _REGISTRY[name]
    except KeyError:
        raise KeyError(
            f"unknown constant {name!r}; known names: {sorted(set(_REGISTRY))}"
        ) from None


def gap_report(k: int) -> GapReport:
    """Ratio between the copy-ceiling bound and the best registered value."""
    if k == 5:
        upper = dlg_ind_upper(5)
        exact = Fraction(1)  # the order-5 instance is the complete graph
        ratio = exact / upper
        return GapReport(
            k=5,
            upper=upper,
            reference=exact,
            reference_kind="exact",
            ratio=ratio,
            decimal=_dec6(ratio),
            note="ceiling exceeds 1; ratio is exact/upper",
        )
    if k == 6:
        upper = dlg_ind_upper(6)
        lower = Fraction(10, 81)  # tripartite construction limit
        ratio = upper / lower
        return GapReport(
            k=6,
            upper=upper,
            reference=lower,
            reference_kind="lower",
            ratio=ratio,
            decimal=_dec6(ratio),
            note="computed ratio is 27/8 = 3.375",
        )
    if k == 7:
        upper = dlg_ind_upper(7)
        lower = pg_lower(7)  # complement is the 7-cycle
        ratio = upper / lower
        return GapReport(
            k=7,
            upper=upper,
            reference=lower,
            reference_kind="lower",
            ratio=ratio,
            decimal=_dec6(ratio),
        )
    raise ValueError(f"no reference value registered for k={k}")


def bound_table(ks, n: int | None = None) -> list[BoundReport]:
    """Evaluate every applicable bound for the given orders (CSV/JSON rows)."""
    rows: list[BoundReport] = []
    for k in ks:
        v = pg_lower(k)
        rows.append(
            BoundReport("pg_lower", "lower", {"k": k}, v, _dec(v))
        )
        rows.append(
            BoundReport(
                "pg_lower_stirling",
                "lower",
                {"k": k},
                None,
                _dec(pg_lower_stirling(k)),
                irrational=("pi", "e"),
            )
        )
        if k >= 5:
            rows.append(
                BoundReport(
                    "cycle_ind_upper_pg",
                    "upper",
                    {"k": k},
                    None,
                    _dec(cycle_ind_upper_pg(k)),
                    irrational=("e",),
                )
            )
            v = dlg_ind_upper(k)
            rows.append(BoundReport("dlg_ind_upper", "upper", {"k": k}, v, _dec(v)))
        if k >= 6:
            v = kral_ind_upper(k)
            rows.append(
                BoundReport(
                    "kral_ind_upper",
                    "upper",
                    {"k": k},
                    v,
                    _dec(v),
                    note="asymptotic; lower-order term dropped",
                )
            )
        if n is not None and n >= k:
            if k >= 5:
                v = cycle_count_upper(n, k)
                rows.append(
                    BoundReport("cycle_count_upper", "count-upper", {"k": k, "n": n}, v, _dec(v))
                )
                v = dlg_count_upper(n, k)
                rows.append(
                    BoundReport("dlg_count_upper", "count-upper", {"k": k, "n": n}, v, _dec(v))
                )
            if k >= 6:
                v = kral_count_upper(n, k)
                rows.append(
                    BoundReport("kral_count_upper", "count-upper", {"k": k, "n": n}, v, _dec(v))
                )
    return rows
