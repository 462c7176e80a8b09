"""Acceptance checks: one function per criterion, shared by CLI and tests.

Every numeric comparison is exact rational arithmetic unless the check
states a decimal tolerance.  Reports contain no timestamps and no
worker-count echoes, so identical configurations produce identical bytes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .bounds import conj_disj_lower, dlg_ind_upper, gap_report, pg_lower
from .census import (
    construction_count_k6,
    count_induced,
    multipartite_dlg6_density,
    search_exhaustive,
)
from .graph6 import decode_graph6, encode_graph6
from .graphs import (
    Graph,
    blow_up,
    complement,
    iterated_blow_up,
    make_chain,
    make_circulant,
    make_complete,
    make_complete_multipartite,
    make_cycle,
    make_dlg,
    make_paley,
    random_graph,
)
from .loopy import (
    copy_labelings,
    correspondence_check,
    enumerate_loopy,
    lemma_sum,
    rotation_bound_check,
)

SCHEMA = 1

SUITE_SIZE = 200
SUITE_ORDER = 12
SUITE_PROBABILITIES = (Fraction(3, 10), Fraction(1, 2), Fraction(4, 5))
SUITE_KS = (6, 7)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    details: dict


def _frac(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def suite_graphs() -> list[tuple[int, Fraction, Graph]]:
    """The fixed randomized host suite: seeds 0..199, p cycling 0.3/0.5/0.8."""
    out = []
    for seed in range(SUITE_SIZE):
        p = SUITE_PROBABILITIES[seed % len(SUITE_PROBABILITIES)]
        out.append((seed, p, random_graph(SUITE_ORDER, p, seed)))
    return out


# ---------------------------------------------------------------------------
# Criterion 1: closed-form bound reproduction


def check_bounds_reproduction() -> CheckResult:
    failures = []
    if dlg_ind_upper(5) != Fraction(3240, 3125):
        failures.append("dlg_ind_upper(5)")
    g5 = gap_report(5)
    if abs(float(g5.ratio) - 0.964506) > 5e-7:
        failures.append("gap_report(5) decimal")
    if abs(float(dlg_ind_upper(7)) - 0.165237) > 5e-7:
        failures.append("dlg_ind_upper(7) decimal")
    if pg_lower(5) != Fraction(1, 26):
        failures.append("pg_lower(5)")
    if pg_lower(7) != Fraction(5, 817):
        failures.append("pg_lower(7)")
    if conj_disj_lower(4, 2, Fraction(3, 8), Fraction(1)) != Fraction(10, 81):
        failures.append("conj_disj_lower(4,2,3/8,1)")
    return CheckResult(
        "bounds_reproduction",
        not failures,
        {
            "dlg_ind_upper_5": _frac(dlg_ind_upper(5)),
            "gap_5": g5.decimal,
            "dlg_ind_upper_7": _frac(dlg_ind_upper(7)),
            "pg_lower_5": _frac(pg_lower(5)),
            "pg_lower_7": _frac(pg_lower(7)),
            "conj_disj_4_2": _frac(conj_disj_lower(4, 2, Fraction(3, 8), Fraction(1))),
            "failures": failures,
        },
    )


# ---------------------------------------------------------------------------
# Criterion 2: tripartite construction counts


def check_construction_counts() -> CheckResult:
    expected = {2: 1, 3: 27, 4: 216, 5: 1000, 6: 3375}
    got = {}
    ok = True
    pattern = make_dlg(6)
    for m, want in expected.items():
        host = make_complete_multipartite([m, m, m])
        counted = count_induced(pattern, host).copies
        got[str(m)] = counted
        if counted != want or construction_count_k6(m) != want:
            ok = False
    return CheckResult("construction_counts", ok, {"counts": got})


# ---------------------------------------------------------------------------
# Criterion 3: density limit approach (closed form)


def check_limit_approach() -> CheckResult:
    ms = (5, 10, 20, 50)
    densities = [multipartite_dlg6_density(m) for m in ms]
    strictly_decreasing = all(a > b for a, b in zip(densities, densities[1:]))
    target = Fraction(10, 81)
    gap = abs(densities[-1] - target)
    close = gap <= Fraction(6, 1000)
    return CheckResult(
        "multipartite_limit",
        strictly_decreasing and close,
        {
            "densities": {str(m): _frac(d) for m, d in zip(ms, densities)},
            "gap_at_50": _frac(gap),
            "strictly_decreasing": strictly_decreasing,
        },
    )


# ---------------------------------------------------------------------------
# Criteria 4 and 5: exhaustive sweeps at orders 4..7


def check_extremal_c4(workers: int | None = None):
    expected = {4: 1, 5: 3, 6: 9, 7: 18}
    results = {}
    ok = True
    pattern = make_cycle(4)
    for n, want in expected.items():
        res = search_exhaustive(pattern, n, workers=workers)
        results[n] = res
        if res.max_copies != want:
            ok = False
    check = CheckResult(
        "extremal_search_c4",
        ok,
        {
            "maxima": {str(n): r.max_copies for n, r in results.items()},
            "expected": {str(n): v for n, v in expected.items()},
        },
    )
    return check, results


def check_dlg6_order7_ceiling(workers: int | None = None) -> CheckResult:
    res = search_exhaustive(make_dlg(6), 7, workers=workers)
    ceiling = (27 * 7**6) // 6**6  # floor
    return CheckResult(
        "dlg6_order7_ceiling",
        res.max_copies <= ceiling,
        {
            "max_copies": res.max_copies,
            "ceiling": ceiling,
            "witnesses": list(res.witnesses[:3]),
        },
    )


# ---------------------------------------------------------------------------
# Criteria 6, 7, 8: one scan over the randomized suite


def scan_suite(suite=None) -> dict:
    """Lemma sums, per-copy tuple correspondence and rotation sums."""
    if suite is None:
        suite = suite_graphs()
    lemma_violations = []
    max_mass = Fraction(0)
    mismatch_witnesses = {6: [], 7: []}
    mismatch_counts = {6: 0, 7: 0}
    strict_nonzero = 0
    rotation_failures = []
    copies_seen = {6: 0, 7: 0}
    for seed, p, g in suite:
        for k in SUITE_KS:
            mass = lemma_sum(g, k, "amended")
            if mass > max_mass:
                max_mass = mass
            if mass > 1:
                lemma_violations.append({"seed": seed, "k": k, "mass": _frac(mass)})
            if enumerate_loopy(g, k, "strict"):
                strict_nonzero += 1
            rep = correspondence_check(g, k, "amended")
            if not rep.matches:
                mismatch_counts[k] += 1
                if len(mismatch_witnesses[k]) < 5:
                    mismatch_witnesses[k].append(
                        {
                            "seed": seed,
                            "graph6": encode_graph6(g),
                            "loopy_count": rep.loopy_count,
                            "expected": rep.expected,
                        }
                    )
            for lab in copy_labelings(g, k):
                copies_seen[k] += 1
                rot = rotation_bound_check(g, lab, "amended")
                if not (rot.forward_ok and rot.total_ok):
                    rotation_failures.append(
                        {
                            "seed": seed,
                            "k": k,
                            "labeling": list(lab),
                            "forward_sum": _frac(rot.forward_sum),
                            "forward_bound": _frac(rot.forward_bound),
                        }
                    )
    return {
        "lemma_violations": lemma_violations,
        "max_mass": _frac(max_mass),
        "mismatch_counts": mismatch_counts,
        "mismatch_witnesses": mismatch_witnesses,
        "strict_nonzero": strict_nonzero,
        "rotation_failures": rotation_failures,
        "copies_seen": copies_seen,
    }


def check_lemma(scan: dict) -> CheckResult:
    return CheckResult(
        "tuple_mass_lemma",
        not scan["lemma_violations"],
        {
            "graphs": SUITE_SIZE,
            "ks": list(SUITE_KS),
            "max_mass": scan["max_mass"],
            "violations": scan["lemma_violations"],
        },
    )


def check_correspondence(scan: dict) -> CheckResult:
    oct_tuples = len(enumerate_loopy(make_dlg(6), 6, "amended"))
    octahedron_ok = oct_tuples == 12
    suite_ok = all(v == 0 for v in scan["mismatch_counts"].values())
    strict_ok = (
        scan["strict_nonzero"] == 0
        and not enumerate_loopy(make_dlg(6), 6, "strict")
    )
    return CheckResult(
        "copy_tuple_correspondence",
        octahedron_ok and suite_ok and strict_ok,
        {
            "octahedron_tuples": oct_tuples,
            "octahedron_expected": 12,
            "suite_mismatches": {str(k): v for k, v in scan["mismatch_counts"].items()},
            "witnesses": {
                str(k): v for k, v in scan["mismatch_witnesses"].items()
            },
            "strict_all_empty": strict_ok,
        },
    )


def check_rotations(scan: dict) -> CheckResult:
    return CheckResult(
        "rotation_sums",
        not scan["rotation_failures"],
        {
            "copies_checked": {str(k): v for k, v in scan["copies_seen"].items()},
            "failures": scan["rotation_failures"],
        },
    )


# ---------------------------------------------------------------------------
# Criterion 9: monotone density sequence, reusing the criterion 4 sweeps


def check_monotonicity(c4_results) -> CheckResult:
    expected = [Fraction(1), Fraction(3, 5), Fraction(3, 5), Fraction(18, 35)]
    seq = [
        Fraction(c4_results[n].max_copies, comb(n, 4)) for n in (4, 5, 6, 7)
    ]
    non_increasing = all(a >= b for a, b in zip(seq, seq[1:]))
    return CheckResult(
        "density_monotonicity",
        seq == expected and non_increasing,
        {
            "sequence": [_frac(d) for d in seq],
            "expected": [_frac(d) for d in expected],
            "non_increasing": non_increasing,
        },
    )


# ---------------------------------------------------------------------------
# Criterion 10: graph6 round trips


def _generator_outputs() -> list[Graph]:
    out = []
    for k in range(5, 13):
        out.append(make_dlg(k))
        out.append(complement(make_dlg(k)))
    out.append(make_circulant(8, {1, 4}))
    out.append(make_circulant(9, {2, 4}))
    out.append(make_circulant(12, {1, 2, 3}))
    for t in range(6):
        out.append(make_chain(t))
    for n in range(1, 9):
        out.append(make_complete(n))
    for n in range(3, 10):
        out.append(make_cycle(n))
    out.append(make_complete_multipartite([2, 2, 2]))
    out.append(make_complete_multipartite([3, 3]))
    out.append(make_complete_multipartite([1, 2, 3]))
    out.append(make_complete_multipartite([5, 5, 5]))
    for q in (5, 13, 17, 29):
        out.append(make_paley(q))
    out.append(blow_up(make_cycle(5), [2] * 5))
    out.append(iterated_blow_up(make_cycle(5), 2))
    for seed in range(3):
        out.append(random_graph(30, Fraction(1, 2), seed))
    out.append(random_graph(62, Fraction(1, 3), 7))
    assert all(g.n <= 62 for g in out)
    return out


def check_graph6_roundtrip() -> CheckResult:
    bad = 0
    for code in range(1 << comb(5, 2)):
        g = Graph.from_code(5, code)
        if decode_graph6(encode_graph6(g)) != g:
            bad += 1
    gens = _generator_outputs()
    for g in gens:
        if decode_graph6(encode_graph6(g)) != g:
            bad += 1
    return CheckResult(
        "graph6_roundtrip",
        bad == 0,
        {"order5_graphs": 1024, "generator_outputs": len(gens), "failures": bad},
    )


# ---------------------------------------------------------------------------
# Criterion 11: worker-count independence of the chunked sweep


def check_worker_agreement() -> CheckResult:
    a = search_exhaustive(make_cycle(4), 7, workers=1)
    b = search_exhaustive(make_cycle(4), 7, workers=8)
    return CheckResult(
        "worker_agreement",
        a == b,
        {"max_copies": a.max_copies, "witness_count": len(a.witnesses)},
    )


# ---------------------------------------------------------------------------


def run_all(workers: int | None = None) -> dict:
    """Run every acceptance check; the report is free of config echoes."""
    checks: list[CheckResult] = []
    checks.append(check_bounds_reproduction())
    checks.append(check_construction_counts())
    checks.append(check_limit_approach())
    c4_check, c4_results = check_extremal_c4(workers)
    checks.append(c4_check)
    checks.append(check_dlg6_order7_ceiling(workers))
    scan = scan_suite()
    checks.append(check_lemma(scan))
    checks.append(check_correspondence(scan))
    checks.append(check_rotations(scan))
    checks.append(check_monotonicity(c4_results))
    checks.append(check_graph6_roundtrip())
    checks.append(check_worker_agreement())
    return {
        "schema": SCHEMA,
        "command": "verify",
        "checks": [
            {"name": c.name, "passed": c.passed, "details": c.details}
            for c in checks
        ],
        "passed": all(c.passed for c in checks),
    }


def render_report(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2) + "\n"
