"""Exact induced-copy counting, densities and exhaustive extremal search.

Counting enumerates k-subsets in lexicographic order, screens each subset by
its sorted within-subset degree sequence, and only then runs the isomorphism
test.  Densities are exact rationals end to end; decimals appear only in
rendered reports.

The exhaustive search ranges over all 2**C(n,2) labeled graphs (n <= 7).
Graphs are identified with their packed adjacency codes, the pattern is
compiled to a lookup table over all relabelings, and a kernel scans fixed
code chunks so that results are bit-identical for any worker count.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations
from math import comb
from typing import Iterable, Sequence

import numpy as np

from . import _kernels
from .graph6 import decode_graph6, encode_graph6
from .graphs import Graph, find_isomorphism, pair_bit

MAX_PATTERN_ORDER = 10
MAX_EXHAUSTIVE_ORDER = 7
_ORBIT_PATTERN_ORDER = 8  # above this, k! relabelings are too many to tabulate
_CHUNK = 1 << 19


class ResourceGuardError(RuntimeError):
    """Raised when a request exceeds the exhaustive-search guard."""


@dataclass(frozen=True)
class CountResult:
    """Exact induced-copy count of a pattern in a host graph."""

    copies: int
    subsets_examined: int
    density: Fraction


@dataclass(frozen=True)
class SearchResult:
    """Maximum induced-copy count over a graph population."""

    max_copies: int
    witnesses: tuple[str, ...]
    population: str
    graphs_examined: int
    maximizer_count: int


def _local_pairs(k: int) -> list[tuple[int, int]]:
    return [(i, j) for j in range(1, k) for i in range(j)]


_orbit_cache: dict[tuple[int, int], frozenset[int]] = {}


def pattern_orbit_codes(h: Graph) -> frozenset[int]:
    """Codes of every labeled copy of h on vertex set 0..k-1."""
    key = (h.n, h.code())
    hit = _orbit_cache.get(key)
    if hit is not None:
        return hit
    if h.n > _ORBIT_PATTERN_ORDER:
        raise ValueError(f"orbit table limited to order {_ORBIT_PATTERN_ORDER}")
    edges = list(h.edges())
    orbit = set()
    for perm in permutations(range(h.n)):
        c = 0
        for u, v in edges:
            c |= 1 << pair_bit(perm[u], perm[v])
        orbit.add(c)
    result = frozenset(orbit)
    _orbit_cache[key] = result
    return result


def pattern_table(h: Graph) -> bytes:
    """0/1 lookup over all 2**C(k,2) codes: is the code a copy of h."""
    table = bytearray(1 << comb(h.n, 2))
    for c in pattern_orbit_codes(h):
        table[c] = 1
    return bytes(table)


def _induced_code(g: Graph, subset: Sequence[int], pairs) -> int:
    c = 0
    rows = g.rows
    for b, (a, bb) in enumerate(pairs):
        if (rows[subset[a]] >> subset[bb]) & 1:
            c |= 1 << b
    return c


def count_induced(h: Graph, g: Graph) -> CountResult:
    """Number of |V(h)|-subsets of g inducing a copy of h, with density."""
    k, n = h.n, g.n
    if k > n:
        raise ValueError(f"pattern order {k} exceeds host order {n}")
    if k > MAX_PATTERN_ORDER:
        raise ValueError(f"pattern order {k} exceeds enumeration guard {MAX_PATTERN_ORDER}")
    pattern_degs = h.degree_sequence()
    pairs = _local_pairs(k)
    orbit = pattern_orbit_codes(h) if k <= _ORBIT_PATTERN_ORDER else None
    rows = g.rows
    copies = 0
    examined = 0
    for subset in combinations(range(n), k):
        examined += 1
        smask = 0
        for v in subset:
            smask |= 1 << v
        degs = sorted((rows[v] & smask).bit_count() for v in subset)
        if tuple(degs) != pattern_degs:
            continue
        code = _induced_code(g, subset, pairs)
        if orbit is not None:
            copies += code in orbit
        elif find_isomorphism(Graph.from_code(k, code), h) is not None:
            copies += 1
    return CountResult(copies, examined, Fraction(copies, comb(n, k)))


def density(h: Graph, g: Graph) -> Fraction:
    return count_induced(h, g).density


def find_copies(h: Graph, g: Graph) -> list[tuple[int, ...]]:
    """All vertex subsets of g inducing a copy of h, ascending."""
    k, n = h.n, g.n
    if k > n:
        return []
    pattern_degs = h.degree_sequence()
    pairs = _local_pairs(k)
    orbit = pattern_orbit_codes(h)
    rows = g.rows
    out = []
    for subset in combinations(range(n), k):
        smask = 0
        for v in subset:
            smask |= 1 << v
        degs = sorted((rows[v] & smask).bit_count() for v in subset)
        if tuple(degs) != pattern_degs:
            continue
        if _induced_code(g, subset, pairs) in orbit:
            out.append(subset)
    return out


# ---------------------------------------------------------------------------
# Exhaustive search over labeled graphs


def subset_positions(n: int, k: int) -> np.ndarray:
    """Global pair-bit positions of each k-subset's local pairs."""
    pairs = _local_pairs(k)
    rows = []
    for subset in combinations(range(n), k):
        rows.append([pair_bit(subset[a], subset[b]) for a, b in pairs])
    return np.array(rows, dtype=np.int32).reshape(len(rows), len(pairs))


def _default_workers() -> int:
    return max(1, os.cpu_count() or 1)


def search_exhaustive(
    h: Graph,
    n: int,
    *,
    witness_cap: int = 10,
    workers: int | None = None,
) -> SearchResult:
    """Maximize induced copies of h over all labeled graphs of order n.

    The code range is cut into fixed chunks that are merged in index order,
    so the result does not depend on the worker count.
    """
    if n > MAX_EXHAUSTIVE_ORDER:
        raise ResourceGuardError(
            f"exhaustive search is guarded at order {MAX_EXHAUSTIVE_ORDER} "
            f"(2**{comb(n, 2)} graphs requested); use a graph6 corpus instead"
        )
    if h.n > n:
        raise ValueError(f"pattern order {h.n} exceeds population order {n}")
    table = pattern_table(h)
    positions = subset_positions(n, h.n)
    total = 1 << comb(n, 2)
    spans = [(lo, min(lo + _CHUNK, total)) for lo in range(0, total, _CHUNK)]
    workers = workers if workers is not None else _default_workers()

    def run(span):
        lo, hi = span
        return _kernels.sweep_codes(lo, hi, positions, table, witness_cap)

    if workers == 1 or len(spans) == 1:
        parts = [run(s) for s in spans]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(run, spans))

    best = max(p[0] for p in parts)
    ties = sum(p[1] for p in parts if p[0] == best)
    codes: list[int] = []
    for p in parts:
        if p[0] == best:
            codes.extend(p[2])
        if len(codes) >= witness_cap:
            break
    codes = codes[:witness_cap]
    witnesses = tuple(encode_graph6(Graph.from_code(n, c)) for c in codes)
    return SearchResult(
        max_copies=best,
        witnesses=witnesses,
        population=f"exhaustive-labeled({n})",
        graphs_examined=total,
        maximizer_count=ties,
    )


def search_corpus(
    h: Graph,
    lines: Iterable[str],
    *,
    population: str = "corpus",
    witness_cap: int = 10,
) -> SearchResult:
    """Maximize induced copies of h over graphs given as graph6 lines."""
    best = -1
    ties = 0
    witnesses: list[str] = []
    examined = 0
    for raw in lines:
        line = raw.strip()
        if not line:
            continue
        g = decode_graph6(line)
        examined += 1
        c = count_induced(h, g).copies if h.n <= g.n else 0
        if c > best:
            best = c
            ties = 1
            witnesses = [line]
        elif c == best:
            ties += 1
            if len(witnesses) < witness_cap:
                witnesses.append(line)
    if examined == 0:
        raise ValueError("corpus contains no graphs")
    return SearchResult(
        max_copies=best,
        witnesses=tuple(witnesses[:witness_cap]),
        population=population,
        graphs_examined=examined,
        maximizer_count=ties,
    )


def extremal_search(
    h: Graph,
    population: str,
    *,
    witness_cap: int = 10,
    workers: int | None = None,
) -> SearchResult:
    """Dispatch on a population descriptor.

    Descriptors: ``exhaustive-labeled(n)`` or ``g6:<path>``.
    """
    desc = population.strip()
    if desc.startswith("exhaustive-labeled(") and desc.endswith(")"):
        n = int(desc[len("exhaustive-labeled(") : -1])
        return search_exhaustive(h, n, witness_cap=witness_cap, workers=workers)
    if desc.startswith("g6:"):
        path = desc[3:]
        with open(path, "r", encoding="ascii") as fh:
            return search_corpus(
                h, fh, population=desc, witness_cap=witness_cap
            )
    raise ValueError(f"unknown population descriptor: {population!r}")


def density_sequence(
    h: Graph,
    n_lo: int,
    n_hi: int,
    *,
    workers: int | None = None,
) -> list[tuple[int, Fraction]]:
    """Maximum induced density of h at each order n_lo..n_hi (exhaustive).

    The sequence must be non-increasing; a violation raises, since it would
    contradict the defining extremal property.
    """
    if n_lo < h.n:
        raise ValueError(f"range must start at the pattern order {h.n}")
    if n_hi > MAX_EXHAUSTIVE_ORDER:
        raise ResourceGuardError(
            f"density sequences are exhaustive only; order capped at {MAX_EXHAUSTIVE_ORDER}"
        )
    out: list[tuple[int, Fraction]] = []
    for n in range(n_lo, n_hi + 1):
        res = search_exhaustive(h, n, witness_cap=1, workers=workers)
        out.append((n, Fraction(res.max_copies, comb(n, h.n))))
    for (n1, d1), (n2, d2) in zip(out, out[1:]):
        if d2 > d1:
            raise RuntimeError(
                f"density sequence increased from {d1} at n={n1} to {d2} at n={n2}"
            )
    return out


# ---------------------------------------------------------------------------
# Closed-form construction counts


def construction_count_k6(m: int) -> int:
    """Induced 6-vertex double-loop-graph copies in K_{m,m,m}: C(m,2)**3.

    Picking two vertices from each of the three parts induces the octahedral
    copy, and every copy arises this way.
    """
    if m < 2:
        raise ValueError(f"parts need at least 2 vertices, got {m}")
    return comb(m, 2) ** 3


def multipartite_dlg6_density(m: int) -> Fraction:
    """Exact induced density of the 6-vertex copy count in K_{m,m,m}."""
    return Fraction(construction_count_k6(m), comb(3 * m, 6))


def bipartite_count(rho: int, n: int, odd: bool = False) -> int:
    """Maximum induced complete-bipartite copies over order-n graphs.

    Balanced K_{rho,rho}: C(ceil(n/2), rho) * C(floor(n/2), rho).  The
    near-balanced K_{rho,rho+1} count is the symmetrized two-term form; the
    brute-force searches in the test suite confirm it.
    """
    if rho < 1:
        raise ValueError(f"rho must be >= 1, got {rho}")
    hi, lo = (n + 1) // 2, n // 2
    if odd:
        if n < 2 * rho + 1:
            raise ValueError(f"need n >= {2 * rho + 1}, got {n}")
        return comb(hi, rho) * comb(lo, rho + 1) + comb(lo, rho) * comb(hi, rho + 1)
    if n < 2 * rho:
        raise ValueError(f"need n >= {2 * rho}, got {n}")
    return comb(hi, rho) * comb(lo, rho)
