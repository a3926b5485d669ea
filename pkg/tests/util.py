"""Shared test helpers: data paths and random-instance generators."""

from __future__ import annotations

from pathlib import Path

import numpy as np

from stab2lin import gf2
from stab2lin.stabilizer import (
    COLUMN_ADDITION,
    COLUMN_SWITCH,
    COLUMN_TRANSPOSITION,
    ROW_ADDITION,
    ElementaryOp,
    StabilizerCode,
)

DATA = Path(__file__).resolve().parent.parent / "src" / "stab2lin" / "data"


def data_path(name: str) -> str:
    return str(DATA / name)


def random_bit_matrix(rng: np.random.Generator, rows: int, cols: int) -> np.ndarray:
    return rng.integers(0, 2, size=(rows, cols)).astype(np.uint8)


def random_stabilizer_code(rng: np.random.Generator, n: int, m: int) -> StabilizerCode:
    """Uniform-ish valid code: grow rows inside the symplectic complement of
    the ones chosen so far, rejecting span members."""
    assert 1 <= m <= n
    rows: list[np.ndarray] = []
    while len(rows) < m:
        if rows:
            constr = np.array([np.concatenate([r[n:], r[:n]]) for r in rows], np.uint8)
            basis = gf2.nullspace(constr)
        else:
            basis = np.eye(2 * n, dtype=np.uint8)
        for _ in range(100):
            coeffs = rng.integers(0, 2, size=basis.shape[0]).astype(np.uint8)
            v = gf2.mat_mul(coeffs[None, :], basis)[0]
            if not v.any():
                continue
            stacked = np.array(rows + [v], np.uint8)
            if gf2.rank(stacked) == len(rows) + 1:
                rows.append(v)
                break
        else:  # pragma: no cover - astronomically unlikely
            raise RuntimeError("rejection sampling stalled")
    return StabilizerCode(np.array(rows, np.uint8), n)


def random_elementary_op(rng: np.random.Generator, n: int, m: int) -> ElementaryOp:
    kind = str(rng.choice([ROW_ADDITION, COLUMN_TRANSPOSITION, COLUMN_SWITCH, COLUMN_ADDITION]))
    if kind == ROW_ADDITION:
        t = int(rng.integers(m))
        s = int(rng.integers(m - 1))
        if s >= t:
            s += 1
        return ElementaryOp(kind, (t, s))
    if kind == COLUMN_TRANSPOSITION:
        i = int(rng.integers(n))
        j = int(rng.integers(n - 1))
        if j >= i:
            j += 1
        return ElementaryOp(kind, (i, j))
    return ElementaryOp(kind, (int(rng.integers(n)),))
