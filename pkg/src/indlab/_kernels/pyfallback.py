"""Vectorised fallback for the labeled-graph sweep kernel."""

from __future__ import annotations

import numpy as np


def sweep_codes(lo, hi, positions, table, witness_cap):
    """Scan graph codes in [lo, hi) and count pattern hits per code.

    positions: int32 array (num_subsets, bits_per_subset) of global pair-bit
    positions; table: bytes-like of 0/1 flags indexed by the extracted local
    code.  Returns (best_count, n_maximizers, first_maximizer_codes) with
    maximizers reported in ascending code order.
    """
    pos = np.asarray(positions, dtype=np.int64)
    tbl = np.frombuffer(bytes(table), dtype=np.uint8)
    codes = np.arange(lo, hi, dtype=np.int64)
    counts = np.zeros(codes.shape[0], dtype=np.int32)
    idx = np.empty(codes.shape[0], dtype=np.int64)
    tmp = np.empty(codes.shape[0], dtype=np.int64)
    for s in range(pos.shape[0]):
        idx[:] = 0
        for b in range(pos.shape[1]):
            np.right_shift(codes, int(pos[s, b]), out=tmp)
            np.bitwise_and(tmp, 1, out=tmp)
            np.left_shift(tmp, b, out=tmp)
            np.bitwise_or(idx, tmp, out=idx)
        counts += tbl[idx]
    best = int(counts.max())
    mask = counts == best
    ties = int(mask.sum())
    wit = codes[mask][: int(witness_cap)]
    return best, ties, [int(w) for w in wit]
