"""Dense statevector verification of the classical-to-quantum isomorphism.

Basis convention: qubit 1 is the most significant index bit, so the
amplitude of |b_1 ... b_n> sits at index sum_j b_j 2^(n-j).  The binary
(a|b) representation drops operator phases, so a phase convention is fixed
explicitly here: the operator of (a|b) is i^(a.b) X^a Z^b with X factors
applied after Z factors per qubit.  Under it, (1|1) acts as the standard
sigma_y and every operator squares to +I.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .extraction import extract_classical
from .pauli import PauliVector
from .stabilizer import StandardForm, logical_bit_ops, logical_phase_ops

DEFAULT_STATE_CAP = 12
TOLERANCE = 1e-9


@dataclass(frozen=True)
class StateVector:
    """2^n complex amplitudes."""

    n: int
    amplitudes: np.ndarray

    def __post_init__(self):
        amps = np.asarray(self.amplitudes, dtype=np.complex128)
        if amps.shape != (1 << self.n,):
            raise ValueError(f"expected {1 << self.n} amplitudes, got {amps.shape}")
        object.__setattr__(self, "amplitudes", amps)

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))


def zero_state(n: int) -> StateVector:
    amps = np.zeros(1 << n, dtype=np.complex128)
    amps[0] = 1.0
    return StateVector(n, amps)


def _mask(bits: np.ndarray, n: int) -> int:
    return int(sum(int(b) << (n - 1 - j) for j, b in enumerate(bits)))


def _parity_signs(masked: np.ndarray) -> np.ndarray:
    return 1.0 - 2.0 * (np.bitwise_count(masked.astype(np.uint64)) & 1)


_I_POWERS = (1.0 + 0.0j, 0.0 + 1.0j, -1.0 + 0.0j, 0.0 - 1.0j)


def apply_pauli(state: StateVector, p: PauliVector) -> StateVector:
    """Apply i^(a.b) X^a Z^b to the state."""
    if p.n != state.n:
        raise ValueError(f"dimension mismatch: state n={state.n}, operator n={p.n}")
    n = state.n
    amask = _mask(p.a, n)
    bmask = _mask(p.b, n)
    idx = np.arange(1 << n)
    src = idx ^ amask
    signs = _parity_signs(src & bmask)
    phase = _I_POWERS[int(np.bitwise_and(p.a, p.b).sum() & 3)]
    return StateVector(n, phase * signs * state.amplitudes[src])


def eigenvalue_sign(state: StateVector, p: PauliVector, tol: float = TOLERANCE):
    """+1 or -1 when the state is an eigenvector within tol, else None."""
    moved = apply_pauli(state, p).amplitudes
    for sign in (1.0, -1.0):
        if np.max(np.abs(moved - sign * state.amplitudes)) < tol:
            return int(sign)
    return None


def _standard_rows(sf: StandardForm):
    gens = sf.reassemble()
    n = sf.n
    g_rows = [PauliVector(gens[i, :n], gens[i, n:]) for i in range(sf.m)]
    lmat = logical_phase_ops(sf)
    nmat = logical_bit_ops(sf)
    l_rows = [PauliVector(lmat[i, :n], lmat[i, n:]) for i in range(sf.k)]
    n_rows = [PauliVector(nmat[i, :n], nmat[i, n:]) for i in range(sf.k)]
    return g_rows, l_rows, n_rows


def build_C0(sf: StandardForm, cap: int = DEFAULT_STATE_CAP) -> StateVector:
    """The joint +1 eigenstate of G_1..G_m, L_1..L_k, built as the normalized
    product (I+G_1)...(I+G_s)(I+L_1)...(I+L_k) |0...0>."""
    n = sf.n
    if n > cap:
        raise ValueError(f"n = {n} exceeds the statevector cap {cap}")
    g_rows, l_rows, _ = _standard_rows(sf)
    amps = zero_state(n).amplitudes
    for op in g_rows[: sf.s] + l_rows:
        amps = amps + apply_pauli(StateVector(n, amps), op).amplitudes
    amps = amps / np.sqrt(2.0 ** (sf.s + sf.k))
    state = StateVector(n, amps)
    if state.norm < 0.5:
        raise RuntimeError(
            "codeword construction collapsed to (near) zero; the generator "
            "phase convention is inconsistent"
        )
    return state


def build_Cx(sf: StandardForm, x: np.ndarray, cap: int = DEFAULT_STATE_CAP) -> StateVector:
    """Codeword basis state for message x: N_1^{x_1} ... N_k^{x_k} |C_0>."""
    x = np.asarray(x, dtype=np.uint8)
    if x.shape != (sf.k,):
        raise ValueError(f"message length {x.shape} != k = {sf.k}")
    _, _, n_rows = _standard_rows(sf)
    state = build_C0(sf, cap=cap)
    for j in range(sf.k):
        if x[j]:
            state = apply_pauli(state, n_rows[j])
    return state


def phi(sf: StandardForm, y: np.ndarray, cap: int = DEFAULT_STATE_CAP) -> StateVector:
    """phi(y) = sigma_z^{y_1} x ... x sigma_z^{y_{n-r}} x I^r |C_0>."""
    y = np.asarray(y, dtype=np.uint8)
    nr = sf.n - sf.r
    if y.shape != (nr,):
        raise ValueError(f"expected {nr} bits, got {y.shape}")
    op = PauliVector(
        np.zeros(sf.n, dtype=np.uint8),
        np.concatenate([y, np.zeros(sf.r, dtype=np.uint8)]),
    )
    return apply_pauli(build_C0(sf, cap=cap), op)


@dataclass(frozen=True)
class PhiReport:
    """Outcome of the three isomorphism checks.

    ``error_property_ok`` compares up to one global phase per error pattern
    (the acceptance gate); ``error_property_exact_ok`` demands exact amplitude
    equality.  ``max_deviation`` is the largest deviation over all gated
    checks.
    """

    bijectivity_ok: bool
    codeword_property_ok: bool
    error_property_ok: bool
    error_property_exact_ok: bool
    max_deviation: float
    max_deviation_exact: float
    images_checked: int
    pairs_checked: int
    exhaustive: bool
    counterexamples: list[str] = field(default_factory=list)

    @property
    def all_ok(self) -> bool:
        return self.bijectivity_ok and self.codeword_property_ok and self.error_property_ok


def _phi_images(c0: np.ndarray, ys: np.ndarray, n: int, nr: int) -> np.ndarray:
    """phi(y) for each y (rows), exploiting that the operators are diagonal."""
    idx = np.arange(1 << n)
    shifted = ys.astype(np.uint64) << np.uint64(n - nr)  # pad the r identity bits
    masked = np.bitwise_and(shifted[:, None], idx[None, :].astype(np.uint64))
    return _parity_signs(masked) * c0[None, :]


def verify_phi(
    sf: StandardForm,
    cap: int = DEFAULT_STATE_CAP,
    tol: float = TOLERANCE,
    image_limit: int = 512,
    seed: int = 0,
) -> PhiReport:
    """Check bijectivity, the codeword correspondence, and the error
    correspondence of phi, exhaustively when 2^(n-r) <= image_limit and on a
    seeded sample otherwise."""
    n, nr, k = sf.n, sf.n - sf.r, sf.k
    if n > cap:
        raise ValueError(f"n = {n} exceeds the statevector cap {cap}")
    c0 = build_C0(sf, cap=cap).amplitudes
    exhaustive = (1 << nr) <= image_limit
    if exhaustive:
        ys = np.arange(1 << nr, dtype=np.int64)
    else:
        rng = np.random.default_rng(seed)
        ys = np.sort(rng.choice(1 << nr, size=image_limit, replace=False))
        if 0 not in ys:
            ys[0] = 0
    images = _phi_images(c0, ys, n, nr)
    counterexamples: list[str] = []
    max_dev = 0.0

    # 1. bijectivity: pairwise orthogonality of the images
    gram = images.conj() @ images.T
    off = gram - np.eye(len(ys))
    bij_dev = float(np.max(np.abs(off)))
    max_dev = max(max_dev, bij_dev)
    bij_ok = bij_dev < tol
    if not bij_ok:
        i, j = np.unravel_index(np.argmax(np.abs(off)), off.shape)
        counterexamples.append(
            f"images of y={int(ys[i])} and y={int(ys[j])} not orthonormal "
            f"(deviation {np.abs(off[i, j]):.3g})"
        )

    # 2. codeword correspondence: phi(x.M) equals the basis codeword and sits
    #    in the +1 eigenspace of every generator
    cw_ok = True
    gens = sf.reassemble()
    g_rows = [PauliVector(gens[i, :n], gens[i, n:]) for i in range(sf.m)]
    if k:
        gen = extract_classical(sf).generator
        messages = np.arange(1 << k)
        if len(messages) > image_limit:
            rng = np.random.default_rng(seed + 1)
            messages = np.sort(rng.choice(1 << k, size=image_limit, replace=False))
        for mi in messages:
            x = np.array([(int(mi) >> (k - 1 - i)) & 1 for i in range(k)], np.uint8)
            y = (x[None, :] @ gen & 1).astype(np.uint8)[0]
            lhs = phi(sf, y, cap=cap)
            rhs = build_Cx(sf, x, cap=cap)
            dev = float(np.max(np.abs(lhs.amplitudes - rhs.amplitudes)))
            for g in g_rows:
                moved = apply_pauli(lhs, g).amplitudes
                dev = max(dev, float(np.max(np.abs(moved - lhs.amplitudes))))
            max_dev = max(max_dev, dev)
            if dev >= tol:
                cw_ok = False
                counterexamples.append(f"codeword x={''.join(map(str, x))}: deviation {dev:.3g}")

    # 3. error correspondence: phi(y xor e) = Z_e phi(y), exact and up to one
    #    global phase per error pattern
    err_ok = True
    err_exact_ok = True
    max_dev_exact = max_dev
    pairs = 0
    idx = np.arange(1 << n).astype(np.uint64)
    y_pos = {int(y): i for i, y in enumerate(ys)}
    for e in ys:
        e = int(e)
        signs_e = _parity_signs((np.uint64(e << (n - nr))) & idx)
        moved = signs_e[None, :] * images  # Z_e phi(y) for every sampled y
        targets = np.array([y_pos.get(int(y) ^ e, -1) for y in ys])
        valid = targets >= 0
        if not valid.any():
            continue
        lhs = images[targets[valid]]
        rhs = moved[valid]
        pairs += int(valid.sum())
        exact_dev = float(np.max(np.abs(lhs - rhs)))
        max_dev_exact = max(max_dev_exact, exact_dev)
        if exact_dev >= tol:
            err_exact_ok = False
        # single global phase for this error pattern, estimated from the
        # largest component of the first pair
        ref = int(np.argmax(np.abs(rhs[0])))
        denom = rhs[0][ref]
        alpha = lhs[0][ref] / denom if np.abs(denom) > tol else 1.0
        if abs(abs(alpha) - 1.0) > tol:
            alpha = 1.0
        phase_dev = float(np.max(np.abs(lhs - alpha * rhs)))
        max_dev = max(max_dev, phase_dev)
        if phase_dev >= tol:
            err_ok = False
            counterexamples.append(f"error pattern e={e}: deviation {phase_dev:.3g}")

    return PhiReport(
        bijectivity_ok=bij_ok,
        codeword_property_ok=cw_ok,
        error_property_ok=err_ok,
        error_property_exact_ok=err_exact_ok,
        max_deviation=max_dev,
        max_deviation_exact=max_dev_exact,
        images_checked=len(ys),
        pairs_checked=pairs,
        exhaustive=exhaustive,
        counterexamples=counterexamples,
    )
