"""Ordered-tuple machinery behind the double-loop-graph copy bound.

A tuple is grown one vertex at a time.  The opening three vertices must form
a triangle; each middle vertex must be adjacent to exactly the two most
recent members among the whole prefix, extending a strip of triangles; the
closing vertices must wrap the strip into the 2-jump circulant.  Two rule
sets are provided:

* ``strict``: every proper prefix, including the one of length k-1, must be
  a triangle strip.  The wrap edge between the first and the (k-1)-th vertex
  contradicts the strip requirement, so no complete tuple can exist.  The
  mode is kept because its emptiness is itself a result worth surfacing.
* ``amended``: at position k-2 the new vertex must be adjacent to exactly
  the two most recent members and the first one.  A complete amended tuple
  is then precisely a cyclic labeling of an induced copy: position pairs at
  cyclic distance 1 or 2 are adjacent and all other pairs are not.

Each step carries the count n_i of admissible choices; a complete tuple has
probability prod(1/n_i), exact as a Fraction.  Distinct complete tuples are
distinct leaves of one sequential choice process, so their probabilities
sum to at most 1 over any host graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .census import count_induced, find_copies
from .graphs import Graph, find_isomorphism, induced_subgraph, make_dlg

MODES = ("strict", "amended")


def _check_mode(mode: str) -> str:
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    return mode


@dataclass(frozen=True)
class ProbabilityTrace:
    """Per-step choice counts and the exact tuple probability."""

    step_counts: tuple[int, ...]
    probability: Fraction


@dataclass(frozen=True)
class RotationReport:
    """Probability mass of one copy's k rotations and k reversals."""

    k: int
    n: int
    forward_sum: Fraction
    total_sum: Fraction
    forward_bound: Fraction
    total_bound: Fraction
    forward_ok: bool
    total_ok: bool
    live_tuples: int
    degenerate: bool  # all 2k tuples inadmissible under the mode


@dataclass(frozen=True)
class CorrespondenceReport:
    """Tuple census of a host versus 2k tuples per induced copy."""

    k: int
    loopy_count: int
    copy_count: int
    expected: int
    matches: bool
    offenders: tuple[tuple[tuple[int, ...], int], ...]


@dataclass(frozen=True)
class TheoremReport:
    """Copy count versus the 27 n**k / k**k ceiling."""

    k: int
    n: int
    copies: int
    bound: Fraction
    holds: bool
    slack: Fraction


# ---------------------------------------------------------------------------
# Good tuples (pure triangle strips, no wrap)


def _validate_tuple(g: Graph, t: Sequence[int]) -> tuple[int, ...]:
    t = tuple(t)
    if len(set(t)) != len(t):
        raise ValueError(f"repeated vertex in tuple {t}")
    for v in t:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range for order {g.n}")
    return t


def _good_incremental(g: Graph, t: Sequence[int]) -> bool:
    # v2 joins both openers; each later vertex joins exactly the last two.
    for m in range(1, len(t)):
        earlier = t[:m]
        row = g.rows[t[m]]
        adj = [u for u in earlier if (row >> u) & 1]
        if m <= 2:
            if len(adj) != m:
                return False
        elif set(adj) != set(earlier[-2:]):
            return False
    return True


def _good_recursive(g: Graph, t: Sequence[int]) -> bool:
    l = len(t)
    if l <= 3:
        return all(
            g.adjacent(t[a], t[b]) for a in range(l) for b in range(a + 1, l)
        )
    strip_edges = {(0, 1), (0, 2), (1, 2)}
    for m in range(3, l):
        strip_edges.add((m - 2, m))
        strip_edges.add((m - 1, m))
    for a in range(l):
        for b in range(a + 1, l):
            if g.adjacent(t[a], t[b]) != ((a, b) in strip_edges):
                return False
    return _good_recursive(g, t[:-1])


def is_good_tuple(g: Graph, t: Sequence[int]) -> bool:
    """Ordered triangle strip: K_l for l <= 3, else the strip labeling with a
    good prefix."""
    t = _validate_tuple(g, t)
    return _good_incremental(g, t)


# ---------------------------------------------------------------------------
# Tuple extension rules


def _cyclic_adjacent(k: int, a: int, b: int) -> bool:
    d = (b - a) % k
    return min(d, k - d) in (1, 2)


def _induces_dlg(g: Graph, seq: Sequence[int]) -> bool:
    k = len(seq)
    for a in range(k):
        for b in range(a + 1, k):
            if g.adjacent(seq[a], seq[b]) != _cyclic_adjacent(k, a, b):
                return False
    return True


def _candidate_mask(g: Graph, prefix: Sequence[int], k: int, mode: str) -> int:
    i = len(prefix)
    full = (1 << g.n) - 1
    used = 0
    for v in prefix:
        used |= 1 << v
    avail = full & ~used
    if i == 0:
        return avail
    if i == 1:
        return g.rows[prefix[0]] & avail
    if i == 2:
        return g.rows[prefix[0]] & g.rows[prefix[1]] & avail
    if i == k - 1:
        required = (prefix[-1], prefix[-2], prefix[0], prefix[1])
    elif i == k - 2:
        if mode == "amended":
            required = (prefix[-1], prefix[-2], prefix[0])
        else:
            required = (prefix[-1], prefix[-2])
    else:
        required = (prefix[-1], prefix[-2])
    mask = avail
    req_set = set(required)
    for v in required:
        mask &= g.rows[v]
    for v in prefix:
        if v not in req_set:
            mask &= ~g.rows[v]
    return mask


def _candidates(g: Graph, prefix: Sequence[int], k: int, mode: str) -> list[int]:
    mask = _candidate_mask(g, prefix, k, mode)
    cands = []
    while mask:
        low = mask & -mask
        cands.append(low.bit_length() - 1)
        mask ^= low
    if len(prefix) == k - 1:
        # Closing choice must complete an induced copy; under the amended
        # rules this never filters, under strict it always empties.
        cands = [w for w in cands if _induces_dlg(g, tuple(prefix) + (w,))]
    return cands


def extend_candidates(
    g: Graph, prefix: Sequence[int], k: int, mode: str = "amended"
) -> set[int]:
    """Vertices that extend a partial tuple by one admissible step."""
    _check_mode(mode)
    if k < 5:
        raise ValueError(f"tuple length must be >= 5, got {k}")
    prefix = _validate_tuple(g, prefix)
    if len(prefix) >= k:
        raise ValueError(f"prefix of length {len(prefix)} cannot be extended to {k}")
    for i in range(len(prefix)):
        step = _candidates(g, prefix[:i], k, mode)
        if prefix[i] not in step:
            raise ValueError(
                f"prefix {prefix} violates the {mode} rules at position {i}"
            )
    return set(_candidates(g, prefix, k, mode))


def _search(g: Graph, k: int, mode: str) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """All complete tuples with their per-step choice counts (lexicographic)."""
    results: list[tuple[tuple[int, ...], tuple[int, ...]]] = []

    def rec(prefix: tuple[int, ...], counts: tuple[int, ...]) -> None:
        if len(prefix) == k:
            results.append((prefix, counts))
            return
        cands = _candidates(g, prefix, k, mode)
        if not cands:
            return
        nc = len(cands)
        for w in cands:
            rec(prefix + (w,), counts + (nc,))

    rec((), ())
    return results


def enumerate_loopy(g: Graph, k: int, mode: str = "amended") -> list[tuple[int, ...]]:
    """All complete k-tuples of g under the mode, in lexicographic order."""
    _check_mode(mode)
    if k < 5:
        raise ValueError(f"tuple length must be >= 5, got {k}")
    if g.n < k:
        raise ValueError(f"host order {g.n} below tuple length {k}")
    return [t for t, _ in _search(g, k, mode)]


def tuple_probability(
    g: Graph, d: Sequence[int], mode: str = "amended"
) -> ProbabilityTrace:
    """Exact sequential-choice probability of a complete tuple."""
    _check_mode(mode)
    d = _validate_tuple(g, d)
    k = len(d)
    if k < 5:
        raise ValueError(f"tuple length must be >= 5, got {k}")
    counts = []
    for i in range(k):
        cands = _candidates(g, d[:i], k, mode)
        if d[i] not in cands:
            raise ValueError(
                f"tuple {d} is not admissible under the {mode} rules at position {i}"
            )
        counts.append(len(cands))
    prob = Fraction(1)
    for c in counts:
        prob /= c
    return ProbabilityTrace(tuple(counts), prob)


def lemma_sum(g: Graph, k: int, mode: str = "amended") -> Fraction:
    """Total probability mass of all complete k-tuples; at most 1 by
    construction (leaves of one choice tree)."""
    _check_mode(mode)
    if k < 5:
        raise ValueError(f"tuple length must be >= 5, got {k}")
    total = Fraction(0)
    for _, counts in _search(g, k, mode):
        mass = Fraction(1)
        for c in counts:
            mass /= c
        total += mass
    return total


def _trace_or_zero(g: Graph, d: Sequence[int], mode: str) -> Fraction:
    try:
        return tuple_probability(g, d, mode).probability
    except ValueError:
        return Fraction(0)


def rotation_bound_check(
    g: Graph, copy_labeling: Sequence[int], mode: str = "amended"
) -> RotationReport:
    """Mass of one copy's k rotations and k reversals versus the floor
    k**k / (54 n**k), resp. k**k / (27 n**k), by exact comparison."""
    _check_mode(mode)
    lab = _validate_tuple(g, copy_labeling)
    k = len(lab)
    if k < 5:
        raise ValueError(f"labelings must have length >= 5, got {k}")
    if not _induces_dlg(g, lab):
        raise ValueError("labeling is not a cyclic copy labeling")
    n = g.n
    forward = Fraction(0)
    total = Fraction(0)
    live = 0
    for j in range(k):
        rot = tuple(lab[(j + m) % k] for m in range(k))
        p = _trace_or_zero(g, rot, mode)
        q = _trace_or_zero(g, rot[::-1], mode)
        forward += p
        total += p + q
        live += (p > 0) + (q > 0)
    fbound = Fraction(k**k, 54 * n**k)
    tbound = Fraction(k**k, 27 * n**k)
    return RotationReport(
        k=k,
        n=n,
        forward_sum=forward,
        total_sum=total,
        forward_bound=fbound,
        total_bound=tbound,
        forward_ok=forward >= fbound,
        total_ok=total >= tbound,
        live_tuples=live,
        degenerate=live == 0,
    )


def copy_labelings(g: Graph, k: int) -> list[tuple[int, ...]]:
    """One cyclic labeling per induced copy, deterministic."""
    pattern = make_dlg(k)
    out = []
    for subset in find_copies(pattern, g):
        sub = induced_subgraph(g, subset)
        iso = find_isomorphism(pattern, sub)
        assert iso is not None
        out.append(tuple(subset[iso[m]] for m in range(k)))
    return out


def correspondence_check(g: Graph, k: int, mode: str = "amended") -> CorrespondenceReport:
    """Compare the tuple census with 2k tuples per induced copy.

    Offenders list each copy whose tuple count differs from 2k; a complete
    tuple always sits on exactly one copy, so grouping by vertex set is a
    partition of the census.
    """
    _check_mode(mode)
    if k < 6:
        raise ValueError(
            "per-copy tuple counting needs k >= 6; at k = 5 the copy is a "
            "complete graph and every ordering of it is admissible"
        )
    tuples = enumerate_loopy(g, k, mode)
    per_copy: dict[frozenset[int], int] = {}
    for t in tuples:
        key = frozenset(t)
        per_copy[key] = per_copy.get(key, 0) + 1
    copies = find_copies(make_dlg(k), g)
    expected = 2 * k * len(copies)
    offenders = []
    for subset in copies:
        got = per_copy.get(frozenset(subset), 0)
        if got != 2 * k:
            offenders.append((subset, got))
    stray = set(per_copy) - {frozenset(s) for s in copies}
    assert not stray, "tuple on a vertex set that is not an induced copy"
    return CorrespondenceReport(
        k=k,
        loopy_count=len(tuples),
        copy_count=len(copies),
        expected=expected,
        matches=len(tuples) == expected and not offenders,
        offenders=tuple(offenders),
    )


def theorem_bound_check(g: Graph, k: int) -> TheoremReport:
    """Induced copy count versus the ceiling 27 n**k / k**k."""
    if k < 5:
        raise ValueError(f"bound is stated for k >= 5, got {k}")
    n = g.n
    copies = count_induced(make_dlg(k), g).copies if k <= n else 0
    bound = Fraction(27 * n**k, k**k)
    return TheoremReport(
        k=k,
        n=n,
        copies=copies,
        bound=bound,
        holds=copies <= bound,
        slack=bound - copies,
    )
