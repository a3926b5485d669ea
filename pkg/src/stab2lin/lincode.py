"""Classical binary linear codes: encoding, brute-force distance,
nearest-codeword decoding, and binary-symmetric-channel performance.

Decoding is complete nearest-codeword decoding (not bounded-distance), with
ties broken toward the lexicographically smallest message.  Channel numbers
are computed two ways: exact enumeration of all 2^n error patterns, and a
Monte-Carlo estimator whose per-trial randomness is a pure function of
(seed, trial index), so results do not depend on batching or scheduling.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import sqrt

import numpy as np

from . import _kernels, gf2

K_ENUM_LIMIT = 28  # 2^k codeword sweeps
N_EXACT_LIMIT = 24  # 2^n error-pattern sweeps
K_TABLE_LIMIT = 24  # in-memory codeword tables for decoding


@dataclass(frozen=True)
class GeneratorMatrix:
    """A k x n generator matrix with independent rows."""

    rows: np.ndarray

    def __post_init__(self):
        rows = gf2.as_bits(self.rows)
        if rows.ndim != 2 or rows.shape[0] < 1:
            raise ValueError("expected a k x n matrix with k >= 1")
        if rows.shape[0] > rows.shape[1]:
            raise ValueError("k must not exceed n")
        if gf2.rank(rows) != rows.shape[0]:
            raise ValueError("generator rows must be independent")
        object.__setattr__(self, "rows", rows)

    @property
    def k(self) -> int:
        return self.rows.shape[0]

    @property
    def n(self) -> int:
        return self.rows.shape[1]


def encode(g: GeneratorMatrix, x: np.ndarray) -> np.ndarray:
    """The linear combination of generator rows selected by the message bits."""
    x = gf2.as_bits(x)
    if x.shape != (g.k,):
        raise ValueError(f"message length {x.shape} != k = {g.k}")
    return gf2.mat_mul(x[None, :], g.rows)[0]


def _message_of_index(idx: int, k: int) -> np.ndarray:
    return np.array([(idx >> (k - 1 - i)) & 1 for i in range(k)], dtype=np.uint8)


def codeword_table(g: GeneratorMatrix) -> np.ndarray:
    """All 2^k codewords as packed uint64 words, indexed by big-endian message.

    Numeric index order coincides with lexicographic message order, so a
    first-minimum scan implements the documented tie-break.
    """
    if g.k > K_TABLE_LIMIT:
        raise ValueError(f"k = {g.k} too large for an in-memory codeword table")
    packed = gf2.pack_rows(g.rows)
    table = np.zeros((1 << g.k, packed.shape[1]), dtype=np.uint64)
    for j in range(g.k):
        table[1 << j : 2 << j] = table[: 1 << j] ^ packed[g.k - 1 - j]
    return table


@dataclass(frozen=True)
class MinDistanceResult:
    distance: int
    weight_enumerator: dict[int, int]


def min_distance(g: GeneratorMatrix) -> MinDistanceResult:
    """Minimum Hamming weight over the 2^k - 1 nonzero codewords, plus the
    full weight enumerator."""
    if g.k > K_ENUM_LIMIT:
        raise ValueError(
            f"k = {g.k} exceeds the enumeration limit {K_ENUM_LIMIT}; refusing"
        )
    hist = _kernels.codeword_weight_hist(g.rows, g.n)
    nonzero = [w for w in range(1, g.n + 1) if hist[w]]
    return MinDistanceResult(
        distance=nonzero[0],
        weight_enumerator={w: int(hist[w]) for w in range(g.n + 1) if hist[w]},
    )


def max_correctable(g: GeneratorMatrix) -> int:
    """t = floor((d - 1) / 2)."""
    return (min_distance(g).distance - 1) // 2


@dataclass(frozen=True)
class DecodeResult:
    message: np.ndarray
    codeword: np.ndarray
    distance: int


def decode_nearest(g: GeneratorMatrix, word: np.ndarray) -> DecodeResult:
    """Nearest codeword to ``word``; ties go to the smallest message."""
    word = gf2.as_bits(word)
    if word.shape != (g.n,):
        raise ValueError(f"word length {word.shape} != n = {g.n}")
    table = codeword_table(g)
    packed = gf2.pack_rows(word)[0]
    dist = np.bitwise_count(table ^ packed[None, :]).sum(axis=1, dtype=np.int64)
    best = int(dist.argmin())
    return DecodeResult(
        message=_message_of_index(best, g.k),
        codeword=gf2.unpack_rows(table[best], g.n)[0],
        distance=int(dist[best]),
    )


@dataclass(frozen=True)
class ChannelReport:
    """Success probability of message recovery on a binary symmetric channel."""

    delta: float
    success_probability: float
    method: str  # "exact-enumeration" | "monte-carlo"
    trials: int | None = None
    seed: int | None = None
    standard_error: float | None = None


def _check_delta(delta: float) -> float:
    delta = float(delta)
    if not 0.0 <= delta <= 0.5:
        raise ValueError(f"delta must be in [0, 1/2], got {delta}")
    return delta


def correctable_weight_histogram(g: GeneratorMatrix) -> np.ndarray:
    """hist[w] = number of weight-w error patterns the decoder maps to the
    zero message, i.e. patterns of minimum weight within their coset.

    This is the delta-independent core of the exact channel computation;
    reuse it when evaluating several deltas.
    """
    if g.n > N_EXACT_LIMIT:
        raise ValueError(
            f"n = {g.n} exceeds the exact-enumeration limit {N_EXACT_LIMIT}; "
            "use bsc_monte_carlo instead"
        )
    h = gf2.nullspace(g.rows)
    nk = h.shape[0]
    cols = np.zeros(g.n, dtype=np.int64)
    for j in range(g.n):
        cols[j] = sum(int(h[i, j]) << i for i in range(nk))
    return _kernels.coset_min_weight_hist(cols, g.n, nk)


def bsc_success_exact(g: GeneratorMatrix, delta: float) -> ChannelReport:
    """Exact success probability by classifying every error pattern once.

    By linearity the classification is done against the zero codeword: a
    pattern counts as corrected when nearest-codeword decoding (with its
    lexicographic tie-break, which favors the zero message) returns message 0.
    """
    delta = _check_delta(delta)
    hist = correctable_weight_histogram(g)
    return ChannelReport(
        delta=delta,
        success_probability=success_from_histogram(hist, g.n, delta),
        method="exact-enumeration",
    )


def success_from_histogram(hist: np.ndarray, n: int, delta: float) -> float:
    ws = np.arange(n + 1, dtype=np.float64)
    terms = hist * np.power(delta, ws) * np.power(1.0 - delta, n - ws)
    return float(terms.sum())


def bsc_monte_carlo(
    g: GeneratorMatrix, delta: float, trials: int, seed: int
) -> ChannelReport:
    """Monte-Carlo estimate of the exact-enumeration quantity.

    Transmits the zero codeword each trial (by linearity, as in the exact
    path), flips bits independently with probability delta, and counts trials
    whose decode returns message 0.
    """
    delta = _check_delta(delta)
    if trials < 1:
        raise ValueError("trials must be >= 1")
    table = codeword_table(g)
    succ = _kernels.bsc_trial_successes(table, g.n, delta, trials, seed)
    p = succ / trials
    return ChannelReport(
        delta=delta,
        success_probability=p,
        method="monte-carlo",
        trials=trials,
        seed=seed,
        standard_error=sqrt(p * (1.0 - p) / trials),
    )
