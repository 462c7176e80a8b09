"""graph6 text codec.

Format: an order header (one byte 63+n for n <= 62, or byte 126 followed by
three 6-bit bytes for n up to 258047), then the upper-triangle adjacency
bits in column order x(0,1), x(0,2), x(1,2), x(0,3), ... packed six per
byte, zero padded, every byte offset by 63.
"""

from __future__ import annotations

from .graphs import Graph

_SHORT_MAX = 62
_LONG_MAX = 258047


class Graph6Error(ValueError):
    """Raised for malformed graph6 input."""


def encode_graph6(g: Graph) -> str:
    n = g.n
    if n > _LONG_MAX:
        raise Graph6Error(f"order {n} exceeds graph6 limit {_LONG_MAX}")
    if n <= _SHORT_MAX:
        header = [63 + n]
    else:
        header = [126, 63 + ((n >> 12) & 63), 63 + ((n >> 6) & 63), 63 + (n & 63)]
    out = header
    acc = 0
    nbits = 0
    for j in range(1, n):
        row_j = g.rows[j]
        for i in range(j):
            acc = (acc << 1) | ((row_j >> i) & 1)
            nbits += 1
            if nbits == 6:
                out.append(63 + acc)
                acc = 0
                nbits = 0
    if nbits:
        out.append(63 + (acc << (6 - nbits)))
    return "".join(chr(b) for b in out)


def decode_graph6(text: str) -> Graph:
    line = text.rstrip("\n")
    if not line:
        raise Graph6Error("empty graph6 line")
    data = [ord(c) - 63 for c in line]
    if any(not 0 <= v <= 63 for v in data):
        raise Graph6Error("graph6 byte out of range 63..126")
    if data[0] == 63:
        if len(data) < 4:
            raise Graph6Error("truncated long-form order header")
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        if n <= _SHORT_MAX:
            raise Graph6Error(f"long-form header used for small order {n}")
        body = data[4:]
    else:
        n = data[0]
        body = data[1:]
    npairs = n * (n - 1) // 2
    expected = (npairs + 5) // 6
    if len(body) != expected:
        raise Graph6Error(
            f"order {n} needs {expected} adjacency bytes, got {len(body)}"
        )
    rows = [0] * n
    b = 0
    for j in range(1, n):
        for i in range(j):
            bit = (body[b // 6] >> (5 - b % 6)) & 1
            if bit:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            b += 1
    # Padding bits must be zero for a canonical line.
    while b < 6 * expected:
        if (body[b // 6] >> (5 - b % 6)) & 1:
            raise Graph6Error("nonzero padding bits")
        b += 1
    return Graph(n, rows)
