"""Immutable bitmask graphs and deterministic generators for the census.

Vertices are the integers ``0..n-1``.  Each vertex stores its neighbourhood
as an int bitmask, so degree, common-neighbourhood and induced-subgraph
queries reduce to bit operations.  Graph values are immutable by convention,
hashable, and safe to share across worker threads; every generator and
query in this module is a pure function.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

MAX_ORDER = 4096


def pair_bit(i: int, j: int) -> int:
    """Bit position of the unordered pair {i, j} in column order.

    Pairs are ordered (0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ... which is
    also the packing order of the graph6 format, so a graph's code is the
    integer whose bits are its graph6 adjacency bits.
    """
    if i > j:
        i, j = j, i
    return j * (j - 1) // 2 + i


def _iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Simple undirected graph with one adjacency bitmask per vertex.

    Construction validates symmetry and irreflexivity; everything downstream
    may rely on both.
    """

    __slots__ = ("n", "rows")

    def __init__(self, n: int, rows: Sequence[int]):
        if not 0 <= n <= MAX_ORDER:
            raise ValueError(f"order must be in 0..{MAX_ORDER}, got {n}")
        rows = tuple(rows)
        if len(rows) != n:
            raise ValueError(f"expected {n} adjacency rows, got {len(rows)}")
        full = (1 << n) - 1
        for u, row in enumerate(rows):
            if row & ~full:
                raise ValueError(f"row {u} has bits outside 0..{n - 1}")
            if (row >> u) & 1:
                raise ValueError(f"vertex {u} is adjacent to itself")
            for v in _iter_bits(row):
                if not (rows[v] >> u) & 1:
                    raise ValueError(f"adjacency not symmetric on ({u}, {v})")
        self.n = n
        self.rows = rows

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for order {n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows)

    @classmethod
    def from_code(cls, n: int, code: int) -> "Graph":
        """Rebuild a graph from its packed upper-triangle bit code."""
        rows = [0] * n
        b = 0
        for j in range(1, n):
            for i in range(j):
                if (code >> b) & 1:
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
                b += 1
        if code >> b:
            raise ValueError("code has bits beyond the last vertex pair")
        return cls(n, rows)

    def code(self) -> int:
        """Packed upper-triangle adjacency bits (see :func:`pair_bit`)."""
        c = 0
        for j in range(1, self.n):
            row_j = self.rows[j]
            for i in range(j):
                if (row_j >> i) & 1:
                    c |= 1 << pair_bit(i, j)
        return c

    def adjacent(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(_iter_bits(self.rows[v]))

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.rows) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in _iter_bits(self.rows[u] >> (u + 1)):
                yield (u, u + 1 + v)

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(row.bit_count() for row in self.rows))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.n, self.rows))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edge_count})"


# ---------------------------------------------------------------------------
# Generators


def make_circulant(n: int, jumps: Iterable[int]) -> Graph:
    """Circulant graph on Z_n: i is joined to i +- j (mod n) for each jump j.

    A jump of exactly n/2 contributes a single chord per vertex (the two
    endpoints coincide), which the bitmask representation handles for free.
    """
    if n < 3:
        raise ValueError(f"circulant graphs need order >= 3, got {n}")
    jumps = set(jumps)
    if not jumps:
        raise ValueError("jump set must be non-empty")
    for j in jumps:
        if not 0 < j <= n // 2:
            raise ValueError(f"jump {j} out of range 1..{n // 2} for order {n}")
    rows = [0] * n
    for i in range(n):
        for j in jumps:
            rows[i] |= 1 << ((i + j) % n)
            rows[i] |= 1 << ((i - j) % n)
    return Graph(n, rows)


def make_dlg(k: int) -> Graph:
    """Double loop graph DLG(1,2): the 2-jump circulant with jumps {1, 2}.

    Requires k >= 5 so that both jumps are strictly below k/2.
    """
    if k < 5:
        raise ValueError(f"double loop graph needs order >= 5, got {k}")
    return make_circulant(k, {1, 2})


def make_chain(t: int) -> Graph:
    """Strip of t+1 triangles on t+3 vertices.

    Starts from the triangle {0, 1, 2}; each later vertex m+2 attaches to the
    edge {m, m+1}.  The result has exactly 2t+3 edges.
    """
    if t < 0:
        raise ValueError(f"chain length must be >= 0, got {t}")
    edges = [(0, 1), (0, 2), (1, 2)]
    for m in range(1, t + 1):
        edges.append((m, m + 2))
        edges.append((m + 1, m + 2))
    return Graph.from_edges(t + 3, edges)


def make_complete(n: int) -> Graph:
    if n < 1:
        raise ValueError(f"complete graph needs order >= 1, got {n}")
    full = (1 << n) - 1
    return Graph(n, [full ^ (1 << v) for v in range(n)])


def make_cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"cycle needs order >= 3, got {n}")
    return make_circulant(n, {1})


def make_path(n: int) -> Graph:
    if n < 1:
        raise ValueError(f"path needs order >= 1, got {n}")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def make_complete_multipartite(sizes: Sequence[int]) -> Graph:
    """Complete multipartite graph; u ~ v iff they lie in different parts."""
    sizes = list(sizes)
    if not sizes:
        raise ValueError("need at least one part")
    if any(s < 1 for s in sizes):
        raise ValueError("part sizes must be positive")
    n = sum(sizes)
    part = []
    for p, s in enumerate(sizes):
        part.extend([p] * s)
    full = (1 << n) - 1
    part_mask = [0] * len(sizes)
    for v, p in enumerate(part):
        part_mask[p] |= 1 << v
    return Graph(n, [full & ~part_mask[part[v]] for v in range(n)])


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    if q % 2 == 0:
        return q == 2
    d = 3
    while d * d <= q:
        if q % d == 0:
            return False
        d += 2
    return True


def make_paley(q: int) -> Graph:
    """Paley graph on a prime field: u ~ v iff u - v is a nonzero square mod q.

    Requires q prime with q = 1 (mod 4) so that the relation is symmetric.
    """
    if not _is_prime(q):
        raise ValueError(f"{q} is not prime")
    if q % 4 != 1:
        raise ValueError(f"{q} is not congruent to 1 mod 4")
    residues = {pow(x, 2, q) for x in range(1, q)}
    rows = [0] * q
    for u in range(q):
        for r in residues:
            rows[u] |= 1 << ((u + r) % q)
    return Graph(q, rows)


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, [full & ~(row | (1 << v)) for v, row in enumerate(g.rows)])


def blow_up(h: Graph, sizes: Sequence[int]) -> Graph:
    """Replace vertex i of h by an independent class of sizes[i] vertices.

    Classes are completely joined exactly when the original vertices are
    adjacent; no edges inside a class.
    """
    sizes = list(sizes)
    if len(sizes) != h.n:
        raise ValueError(f"need {h.n} class sizes, got {len(sizes)}")
    if any(s < 1 for s in sizes):
        raise ValueError("class sizes must be positive")
    n = sum(sizes)
    offsets = [0] * h.n
    acc = 0
    for i, s in enumerate(sizes):
        offsets[i] = acc
        acc += s
    class_mask = [((1 << s) - 1) << offsets[i] for i, s in enumerate(sizes)]
    rows = [0] * n
    for i in range(h.n):
        nb = 0
        for j in _iter_bits(h.rows[i]):
            nb |= class_mask[j]
        for v in range(offsets[i], offsets[i] + sizes[i]):
            rows[v] = nb
    return Graph(n, rows)


def iterated_blow_up(h: Graph, levels: int) -> Graph:
    """Recursive balanced blow-up: each class internally carries the previous
    level, so the result has order(h)**levels vertices."""
    if levels < 1:
        raise ValueError(f"levels must be >= 1, got {levels}")
    if levels == 1:
        return h
    inner = iterated_blow_up(h, levels - 1)
    s = inner.n
    n = h.n * s
    rows = [0] * n
    inner_rows = inner.rows
    for i in range(h.n):
        base = i * s
        cross = 0
        for j in _iter_bits(h.rows[i]):
            cross |= ((1 << s) - 1) << (j * s)
        for a in range(s):
            rows[base + a] = cross | (inner_rows[a] << base)
    return Graph(n, rows)


def induced_subgraph(g: Graph, members: Iterable[int]) -> Graph:
    """Subgraph induced by a vertex set, relabelled in ascending index order."""
    members = sorted(set(members))
    for v in members:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range for order {g.n}")
    index = {v: i for i, v in enumerate(members)}
    k = len(members)
    rows = [0] * k
    for v in members:
        i = index[v]
        for w in _iter_bits(g.rows[v]):
            if w in index:
                rows[i] |= 1 << index[w]
    return Graph(k, rows)


def random_graph(n: int, p, seed: int) -> Graph:
    """Seeded Erdos-Renyi graph; identical (n, p, seed) gives identical bits.

    p is an exact rational; each pair is an edge iff a 64-bit draw falls
    below floor(p * 2**64), so the per-edge bias is below 2**-64.
    """
    p = Fraction(p)
    if not 0 <= p <= 1:
        raise ValueError(f"edge probability must be in [0, 1], got {p}")
    if n < 0:
        raise ValueError(f"order must be >= 0, got {n}")
    threshold = (p.numerator << 64) // p.denominator
    rng = random.Random(seed)
    rows = [0] * n
    for j in range(1, n):
        for i in range(j):
            if rng.getrandbits(64) < threshold:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Graph(n, rows)


# ---------------------------------------------------------------------------
# Isomorphism


def triangle_counts(g: Graph) -> tuple[int, ...]:
    """Number of triangles through each vertex."""
    out = []
    for u in range(g.n):
        t = 0
        for v in _iter_bits(g.rows[u]):
            t += (g.rows[u] & g.rows[v]).bit_count()
        out.append(t // 2)
    return tuple(out)


def find_isomorphism(g: Graph, h: Graph) -> list[int] | None:
    """Adjacency-preserving bijection g -> h as a list, or None.

    Screens on order, degree multiset and per-vertex triangle counts, then
    backtracks over profile-compatible assignments.  Intended for small
    orders (<= 16 or so).
    """
    if g.n != h.n or g.edge_count != h.edge_count:
        return None
    n = g.n
    if n == 0:
        return []
    tg, th = triangle_counts(g), triangle_counts(h)
    prof_g = [(g.degree(v), tg[v]) for v in range(n)]
    prof_h = [(h.degree(v), th[v]) for v in range(n)]
    if sorted(prof_g) != sorted(prof_h):
        return None

    candidates = [[w for w in range(n) if prof_h[w] == prof_g[u]] for u in range(n)]
    # Most constrained g-vertices first.
    order = sorted(range(n), key=lambda u: (len(candidates[u]), -prof_g[u][0]))
    mapping = [-1] * n
    used = [False] * n

    def backtrack(pos: int) -> bool:
        if pos == n:
            return True
        u = order[pos]
        for w in candidates[u]:
            if used[w]:
                continue
            ok = True
            for q in range(pos):
                u2 = order[q]
                if g.adjacent(u, u2) != h.adjacent(w, mapping[u2]):
                    ok = False
                    break
            if ok:
                mapping[u] = w
                used[w] = True
                if backtrack(pos + 1):
                    return True
                used[w] = False
                mapping[u] = -1
        return False

    if backtrack(0):
        return mapping
    return None


def are_isomorphic(g: Graph, h: Graph) -> bool:
    return find_isomorphism(g, h) is not None
