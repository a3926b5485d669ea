"""Linear algebra over GF(2) on numpy uint8 arrays.

All functions treat their array arguments as immutable values: inputs are
never mutated, transformations return fresh arrays.  Row-operation traces
are lists of ``(target, source)`` pairs meaning "row[target] ^= row[source]";
replaying a trace on the original matrix reproduces the transformed matrix
bit-exactly.

For enumeration-heavy workloads rows can be packed into uint64 words
(``pack_rows``), with column ``c`` stored at word ``c // 64``, bit ``c % 64``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

RowOp = tuple[int, int]


def as_bits(values, *, copy: bool = True) -> np.ndarray:
    """Coerce to a uint8 array of 0/1 entries, validating the alphabet."""
    arr = np.array(values, dtype=np.uint8, copy=copy)
    if arr.size and arr.max() > 1:
        raise ValueError("entries must be 0 or 1")
    return arr


def dot(u: np.ndarray, v: np.ndarray) -> int:
    """Inner product of two bit vectors in modulo-two arithmetic."""
    u = np.asarray(u, dtype=np.uint8)
    v = np.asarray(v, dtype=np.uint8)
    if u.shape != v.shape or u.ndim != 1:
        raise ValueError(f"dimension mismatch: {u.shape} vs {v.shape}")
    return int(np.bitwise_and(u, v).sum() & 1)


@dataclass(frozen=True)
class RrefResult:
    """Reduced row-echelon form plus the pivots and the row-op trace."""

    matrix: np.ndarray
    pivots: list[int]
    trace: list[RowOp]

    @property
    def rank(self) -> int:
        return len(self.pivots)


def rref(m: np.ndarray) -> RrefResult:
    """Reduced row-echelon form over GF(2).

    Pivot selection is deterministic: leftmost unused column, then lowest
    eligible row.  Row swaps are recorded as XOR-swap triples so the trace
    contains row additions only.
    """
    mat = as_bits(m)
    if mat.ndim != 2:
        raise ValueError("expected a 2-d matrix")
    rows, cols = mat.shape
    pivots: list[int] = []
    trace: list[RowOp] = []
    rr = 0
    for c in range(cols):
        if rr == rows:
            break
        hit = np.flatnonzero(mat[rr:, c])
        if hit.size == 0:
            continue
        p = rr + int(hit[0])
        if p != rr:
            for t, s in ((rr, p), (p, rr), (rr, p)):
                mat[t] ^= mat[s]
                trace.append((t, s))
        for i in np.flatnonzero(mat[:, c]):
            i = int(i)
            if i != rr:
                mat[i] ^= mat[rr]
                trace.append((i, rr))
        pivots.append(c)
        rr += 1
    return RrefResult(mat, pivots, trace)


def replay_row_ops(m: np.ndarray, trace: list[RowOp]) -> np.ndarray:
    """Apply a row-op trace to a copy of ``m``."""
    mat = as_bits(m)
    for t, s in trace:
        mat[t] ^= mat[s]
    return mat


def rank(m: np.ndarray) -> int:
    """Dimension of the row span over GF(2)."""
    return rref(m).rank


def mat_mul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Matrix product over GF(2)."""
    a = as_bits(a, copy=False)
    b = as_bits(b, copy=False)
    if a.ndim != 2 or b.ndim != 2 or a.shape[1] != b.shape[0]:
        raise ValueError(f"dimension mismatch: {a.shape} x {b.shape}")
    return (a.astype(np.uint32) @ b.astype(np.uint32) & 1).astype(np.uint8)


def transpose(m: np.ndarray) -> np.ndarray:
    return as_bits(m, copy=False).T.copy()


def nullspace(m: np.ndarray) -> np.ndarray:
    """Basis of the right null space, one vector per row.

    Returns a ``(cols - rank) x cols`` matrix N with ``m @ N.T = 0`` and
    independent rows, derived from the RREF free columns (deterministic).
    """
    m = as_bits(m, copy=False)
    r = rref(m)
    rows, cols = m.shape
    free = [c for c in range(cols) if c not in set(r.pivots)]
    basis = np.zeros((len(free), cols), dtype=np.uint8)
    for row, f in enumerate(free):
        basis[row, f] = 1
        for i, p in enumerate(r.pivots):
            basis[row, p] = r.matrix[i, f]
    return basis


def in_rowspan(m_rref: RrefResult, v: np.ndarray) -> bool:
    """Membership of ``v`` in the row span, given a precomputed RREF."""
    v = as_bits(v)
    for i, p in enumerate(m_rref.pivots):
        if v[p]:
            v ^= m_rref.matrix[i]
    return not v.any()


def pack_rows(m: np.ndarray) -> np.ndarray:
    """Pack bit rows into uint64 words, LSB-first within each word."""
    m = as_bits(m, copy=False)
    if m.ndim == 1:
        m = m[None, :]
    rows, cols = m.shape
    words = max(1, (cols + 63) // 64)
    out = np.zeros((rows, words), dtype=np.uint64)
    for c in range(cols):
        col = m[:, c].astype(np.uint64)
        out[:, c // 64] |= col << np.uint64(c % 64)
    return out


def unpack_rows(packed: np.ndarray, cols: int) -> np.ndarray:
    """Inverse of ``pack_rows`` for a known column count."""
    packed = np.asarray(packed, dtype=np.uint64)
    if packed.ndim == 1:
        packed = packed[None, :]
    rows = packed.shape[0]
    out = np.zeros((rows, cols), dtype=np.uint8)
    for c in range(cols):
        out[:, c] = (packed[:, c // 64] >> np.uint64(c % 64)).astype(np.uint8) & 1
    return out
