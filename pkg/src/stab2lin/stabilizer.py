"""Stabilizer codes: validation, standard-form reduction, logical operators,
and brute-force quantum distance.

A code is an m x 2n binary matrix whose rows are pairwise-commuting,
independent (a|b) generator vectors.  The standard-form reduction brings it
to the block shape

    X part: [ I_s  A1  A2 ]      Z part: [ B1  B2  B3 ]
            [ 0    0   0  ]              [ C1  C2  I_r ]

by row additions and simultaneous column transpositions of both halves,
recording every elementary operation so the reduction can be replayed and
the column permutation mapped back to original qubit positions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

import numpy as np

from . import _kernels, gf2
from .pauli import PauliVector, parse_pauli, symplectic_product_rows

ROW_ADDITION = "row-addition"
COLUMN_TRANSPOSITION = "column-transposition"
COLUMN_SWITCH = "column-switch"
COLUMN_ADDITION = "column-addition"


class StandardFormError(RuntimeError):
    """The D-block obstruction: r2 > 0 on input claimed valid."""


class SearchExhaustedError(RuntimeError):
    """ensure_positive_r found no column-operation sequence within depth."""


@dataclass(frozen=True)
class ElementaryOp:
    """One elementary operation on a generator matrix.

    kinds and indices:
      row-addition (target, source): row[target] ^= row[source]
      column-transposition (i, j):   swap qubit positions i and j
      column-switch (i,):            swap X and Z columns of qubit i
      column-addition (i,):          X column of qubit i ^= Z column
    """

    kind: str
    indices: tuple[int, ...]


@dataclass(frozen=True)
class StabilizerCode:
    """m independent, pairwise-commuting generators on n qubits."""

    matrix: np.ndarray
    n: int

    def __post_init__(self):
        mat = gf2.as_bits(self.matrix).reshape(-1, 2 * self.n)
        object.__setattr__(self, "matrix", mat)

    @classmethod
    def from_paulis(cls, paulis) -> "StabilizerCode":
        rows = [parse_pauli(p) if isinstance(p, str) else p for p in paulis]
        if not rows:
            raise ValueError("need at least one generator")
        n = rows[0].n
        if any(p.n != n for p in rows):
            raise ValueError("generators must act on the same number of qubits")
        return cls(np.array([p.to_bits() for p in rows], dtype=np.uint8), n)

    @property
    def m(self) -> int:
        return self.matrix.shape[0]

    @property
    def k(self) -> int:
        return self.n - self.m

    def row(self, i: int) -> PauliVector:
        return PauliVector(self.matrix[i, : self.n], self.matrix[i, self.n :])

    def pauli_strings(self) -> list[str]:
        return [self.row(i).to_string() for i in range(self.m)]


@dataclass(frozen=True)
class ValidationReport:
    """Commutativity and independence diagnosis of a generator set."""

    n: int
    m: int
    anticommuting_pairs: list[tuple[int, int]]
    rank: int

    @property
    def independent(self) -> bool:
        return self.rank == self.m

    @property
    def ok(self) -> bool:
        return not self.anticommuting_pairs and self.independent


def validate(code: StabilizerCode) -> ValidationReport:
    """Report every non-commuting row pair and whether rows are independent."""
    pairs = []
    if code.m:
        prods = symplectic_product_rows(code.matrix)
        for i in range(code.m):
            for j in range(i + 1, code.m):
                if prods[i, j]:
                    pairs.append((i, j))
    return ValidationReport(code.n, code.m, pairs, gf2.rank(code.matrix))


def apply_op(matrix: np.ndarray, op: ElementaryOp, n: int) -> np.ndarray:
    """Apply one elementary operation to a copy of an m x 2n matrix."""
    mat = gf2.as_bits(matrix)
    if op.kind == ROW_ADDITION:
        t, s = op.indices
        mat[t] ^= mat[s]
    elif op.kind == COLUMN_TRANSPOSITION:
        i, j = op.indices
        mat[:, [i, j]] = mat[:, [j, i]]
        mat[:, [n + i, n + j]] = mat[:, [n + j, n + i]]
    elif op.kind == COLUMN_SWITCH:
        (i,) = op.indices
        mat[:, [i, n + i]] = mat[:, [n + i, i]]
    elif op.kind == COLUMN_ADDITION:
        (i,) = op.indices
        mat[:, i] ^= mat[:, n + i]
    else:
        raise ValueError(f"unknown operation kind {op.kind!r}")
    return mat


def apply_ops(code: StabilizerCode, ops) -> StabilizerCode:
    mat = code.matrix
    for op in ops:
        mat = apply_op(mat, op, code.n)
    return StabilizerCode(mat, code.n)


@dataclass(frozen=True)
class StandardForm:
    """Block structure of a standardized generator matrix.

    ``qubit_permutation[p]`` is the original qubit position now at
    standardized position ``p``.  Replaying ``op_trace`` against the original
    matrix reproduces ``reassemble()`` bit-exactly.
    """

    s: int
    k: int
    r: int
    a1: np.ndarray
    a2: np.ndarray
    b1: np.ndarray
    b2: np.ndarray
    b3: np.ndarray
    c1: np.ndarray
    c2: np.ndarray
    qubit_permutation: np.ndarray
    op_trace: list[ElementaryOp] = field(repr=False)

    @property
    def n(self) -> int:
        return self.s + self.k + self.r

    @property
    def m(self) -> int:
        return self.s + self.r

    def reassemble(self) -> np.ndarray:
        """The standardized m x 2n generator matrix."""
        s, k, r, n = self.s, self.k, self.r, self.n
        mat = np.zeros((self.m, 2 * n), dtype=np.uint8)
        mat[:s, :s] = np.eye(s, dtype=np.uint8)
        mat[:s, s : s + k] = self.a1
        mat[:s, s + k : n] = self.a2
        mat[:s, n : n + s] = self.b1
        mat[:s, n + s : n + s + k] = self.b2
        mat[:s, n + s + k :] = self.b3
        mat[s:, n : n + s] = self.c1
        mat[s:, n + s : n + s + k] = self.c2
        mat[s:, n + s + k :] = np.eye(r, dtype=np.uint8)
        return mat

    def code(self) -> StabilizerCode:
        return StabilizerCode(self.reassemble(), self.n)


def _eliminate(work, trace, rows, col_lo, col_hi, row_lo):
    """In-place RREF of work[row_lo:rows, col_lo:col_hi] using full-row XORs.

    Pivot rule: leftmost column, then lowest eligible row.  Returns pivot
    column indices (absolute).  Only rows row_lo..rows-1 are touched.
    """
    pivots = []
    rr = row_lo
    for c in range(col_lo, col_hi):
        if rr == rows:
            break
        hit = np.flatnonzero(work[rr:rows, c])
        if hit.size == 0:
            continue
        p = rr + int(hit[0])
        if p != rr:
            for t, s in ((rr, p), (p, rr), (rr, p)):
                work[t] ^= work[s]
                trace.append(ElementaryOp(ROW_ADDITION, (t, s)))
        for i in range(row_lo, rows):
            if i != rr and work[i, c]:
                work[i] ^= work[rr]
                trace.append(ElementaryOp(ROW_ADDITION, (i, rr)))
        pivots.append(c)
        rr += 1
    return pivots


def _transpose_columns(work, trace, perm, i, j, n):
    work[:, [i, j]] = work[:, [j, i]]
    work[:, [n + i, n + j]] = work[:, [n + j, n + i]]
    perm[[i, j]] = perm[[j, i]]
    trace.append(ElementaryOp(COLUMN_TRANSPOSITION, (i, j)))


def to_standard_form(code: StabilizerCode) -> StandardForm:
    """Reduce a valid code to standard form, tracing every operation."""
    report = validate(code)
    if not report.ok:
        raise ValueError(f"input is not a valid stabilizer code: {report}")
    n, m = code.n, code.m
    k = n - m
    work = code.matrix.copy()
    trace: list[ElementaryOp] = []
    perm = np.arange(n)

    # Stage 1: eliminate the X submatrix, then move pivot columns to the front.
    x_pivots = _eliminate(work, trace, m, 0, n, 0)
    s = len(x_pivots)
    for i, p in enumerate(x_pivots):
        if p != i:
            _transpose_columns(work, trace, perm, i, p, n)

    # Stage 2: eliminate E4 = Z[s:, s:] among the last r generators only.
    r = m - s
    z_pivots = _eliminate(work, trace, m, n + s, 2 * n, s)
    r1 = len(z_pivots)
    if r1 < r:
        raise StandardFormError(
            f"E4 rank {r1} < r = {r}: zero/non-commuting residual generators "
            "(impossible for a valid code; input or reduction is broken)"
        )

    # Move the E4 pivot columns to the last r qubit positions, pivot-row order.
    cur = [p - n for p in z_pivots]  # qubit positions of the pivots
    for i in range(r):
        tgt = n - r + i
        if cur[i] == tgt:
            continue
        _transpose_columns(work, trace, perm, cur[i], tgt, n)
        for j in range(i + 1, r):
            if cur[j] == tgt:
                cur[j] = cur[i]
                break
        cur[i] = tgt

    sf = StandardForm(
        s=s,
        k=k,
        r=r,
        a1=work[:s, s : s + k].copy(),
        a2=work[:s, s + k : n].copy(),
        b1=work[:s, n : n + s].copy(),
        b2=work[:s, n + s : n + s + k].copy(),
        b3=work[:s, n + s + k :].copy(),
        c1=work[s:, n : n + s].copy(),
        c2=work[s:, n + s : n + s + k].copy(),
        qubit_permutation=perm,
        op_trace=trace,
    )
    if not np.array_equal(sf.reassemble(), work):
        raise StandardFormError("reassembled blocks disagree with the reduction")
    return sf


@dataclass(frozen=True)
class EnsureRResult:
    code: StabilizerCode
    ops: list[ElementaryOp]

    @property
    def changed(self) -> bool:
        return bool(self.ops)


def ensure_positive_r(code: StabilizerCode, max_depth: int = 2) -> EnsureRResult:
    """Find an equivalent code whose standard form has r >= 1.

    Breadth-first search over column-switch / column-addition sequences up to
    ``max_depth`` ops, re-running the reduction per candidate.  Returns the
    input unchanged when it already has r >= 1.
    """
    if to_standard_form(code).r >= 1:
        return EnsureRResult(code, [])
    n = code.n
    single_ops = [ElementaryOp(COLUMN_SWITCH, (i,)) for i in range(n)] + [
        ElementaryOp(COLUMN_ADDITION, (i,)) for i in range(n)
    ]
    for depth in range(1, max_depth + 1):
        for seq in product(single_ops, repeat=depth):
            candidate = apply_ops(code, seq)
            if to_standard_form(candidate).r >= 1:
                return EnsureRResult(candidate, list(seq))
    raise SearchExhaustedError(
        f"no column-operation sequence of depth <= {max_depth} achieves r >= 1"
    )


def logical_phase_ops(sf: StandardForm) -> np.ndarray:
    """The k eigenvalue-labelling operators: rows (0 | I | C2^T || D | 0 | 0)
    with D = B2^T + C2^T B3^T."""
    s, k, n = sf.s, sf.k, sf.n
    d = sf.b2.T ^ gf2.mat_mul(sf.c2.T, sf.b3.T)
    rows = np.zeros((k, 2 * n), dtype=np.uint8)
    rows[:, s : s + k] = np.eye(k, dtype=np.uint8)
    rows[:, s + k : n] = sf.c2.T
    rows[:, n : n + s] = d
    return rows


def logical_bit_ops(sf: StandardForm) -> np.ndarray:
    """The k encoded-bit-flip operators: rows (0 | 0 | 0 || A1^T | I | 0)."""
    s, k, n = sf.s, sf.k, sf.n
    rows = np.zeros((k, 2 * n), dtype=np.uint8)
    rows[:, n : n + s] = sf.a1.T
    rows[:, n + s : n + s + k] = np.eye(k, dtype=np.uint8)
    return rows


@dataclass(frozen=True)
class LogicalAlgebraReport:
    """Outcome of the three commuting-set checks for G, L, N."""

    gl_commuting_ok: bool
    gl_independent_ok: bool
    gn_commuting_ok: bool
    gn_independent_ok: bool
    pairing_ok: bool
    failures: list[str]

    @property
    def ok(self) -> bool:
        return not self.failures


def verify_logical_algebra(sf: StandardForm) -> LogicalAlgebraReport:
    """Check that G+L and G+N are n independent commuting operators and that
    N_i, L_j anticommute exactly when i = j."""
    gens = sf.reassemble()
    lops = logical_phase_ops(sf)
    nops = logical_bit_ops(sf)
    n = sf.n
    failures: list[str] = []

    def commuting(stack, label):
        prods = symplectic_product_rows(stack)
        bad = np.argwhere(np.triu(prods, 1))
        for i, j in bad:
            failures.append(f"{label}: rows {int(i)},{int(j)} anticommute")
        return bad.size == 0

    gl = np.vstack([gens, lops]) if sf.k else gens
    gn = np.vstack([gens, nops]) if sf.k else gens
    gl_comm = commuting(gl, "G+L")
    gn_comm = commuting(gn, "G+N")
    gl_ind = gf2.rank(gl) == n
    gn_ind = gf2.rank(gn) == n
    if not gl_ind:
        failures.append(f"G+L rank {gf2.rank(gl)} != n = {n}")
    if not gn_ind:
        failures.append(f"G+N rank {gf2.rank(gn)} != n = {n}")
    pairing = True
    na, nb = nops[:, :n], nops[:, n:]
    la, lb = lops[:, :n], lops[:, n:]
    prods = gf2.mat_mul(na, lb.T) ^ gf2.mat_mul(nb, la.T)
    if not np.array_equal(prods, np.eye(sf.k, dtype=np.uint8)):
        pairing = False
        for i, j in np.argwhere(prods ^ np.eye(sf.k, dtype=np.uint8)):
            failures.append(f"N_{int(i)+1} vs L_{int(j)+1} pairing wrong")
    return LogicalAlgebraReport(gl_comm, gl_ind, gn_comm, gn_ind, pairing, failures)


@dataclass(frozen=True)
class DistanceResult:
    """Minimum-weight search outcome; ``value`` is None when the cap was hit."""

    value: int | None
    cap: int

    @property
    def exceeded(self) -> bool:
        return self.value is None

    @property
    def t(self) -> int | None:
        return None if self.value is None else (self.value - 1) // 2


def quantum_distance(code: StabilizerCode, weight_cap: int | None = None) -> DistanceResult:
    """Minimum Pauli weight over vectors commuting with all generators but
    outside the generator row span, enumerated by increasing weight.

    ``weight_cap`` defaults to n (exhaustive).  A k = 0 code has no such
    vector at all, so the result is always "exceeds cap" there.
    """
    n = code.n
    cap = n if weight_cap is None else min(weight_cap, n)
    red = gf2.rref(code.matrix)
    span_rows = red.matrix[: red.rank]
    d = _kernels.normalizer_min_weight(code.matrix, span_rows, red.pivots, n, cap)
    return DistanceResult(d if d else None, cap)
