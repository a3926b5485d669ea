import numpy as np
import pytest

from stab2lin import lincode
from stab2lin.formats import load_generator
from stab2lin.lincode import (
    GeneratorMatrix,
    bsc_monte_carlo,
    bsc_success_exact,
    codeword_table,
    correctable_weight_histogram,
    decode_nearest,
    encode,
    max_correctable,
    min_distance,
)

from util import data_path


@pytest.fixture(scope="module")
def g52():
    return load_generator(data_path("five_two.gmat"))


@pytest.fixture(scope="module")
def g73():
    return load_generator(data_path("seven_three.gmat"))


REP3 = GeneratorMatrix(np.array([[1, 1, 1]], np.uint8))


def all_codewords(g):
    """Independent enumeration oracle: explicit encode of every message."""
    out = []
    for mi in range(1 << g.k):
        x = np.array([(mi >> (g.k - 1 - i)) & 1 for i in range(g.k)], np.uint8)
        out.append((x, encode(g, x)))
    return out


def test_generator_rejects_dependent_rows():
    with pytest.raises(ValueError):
        GeneratorMatrix(np.array([[1, 1, 0], [1, 1, 0]], np.uint8))


def test_encode_examples(g52):
    assert list(encode(g52, np.array([1, 0], np.uint8))) == [1, 0, 1, 1, 0]
    assert not encode(g52, np.zeros(2, np.uint8)).any()
    assert list(encode(g52, np.array([1, 1], np.uint8))) == [1, 1, 1, 0, 1]


def test_encode_length_mismatch(g52):
    with pytest.raises(ValueError):
        encode(g52, np.array([1, 0, 1], np.uint8))


def test_encode_linear_and_injective(g52):
    rng = np.random.default_rng(1)
    for _ in range(50):
        x = rng.integers(0, 2, 2).astype(np.uint8)
        y = rng.integers(0, 2, 2).astype(np.uint8)
        assert np.array_equal(encode(g52, x ^ y), encode(g52, x) ^ encode(g52, y))
    words = {cw.tobytes() for _, cw in all_codewords(g52)}
    assert len(words) == 4


def test_min_distance_seven_three(g73):
    res = min_distance(g73)
    assert res.distance == 4
    assert res.weight_enumerator == {0: 1, 4: 7}
    # oracle: explicit enumeration of codeword weights
    weights = sorted(int(cw.sum()) for x, cw in all_codewords(g73) if x.any())
    assert min(weights) == 4
    assert weights.count(4) == 7


def test_min_distance_five_two(g52):
    res = min_distance(g52)
    assert res.distance == 3
    weights = sorted(int(cw.sum()) for x, cw in all_codewords(g52) if x.any())
    assert weights == [3, 3, 4]


def test_min_distance_identity():
    assert min_distance(GeneratorMatrix(np.eye(4, dtype=np.uint8))).distance == 1


def test_min_distance_matches_pairwise_oracle(g52, g73):
    # min distance of a linear code equals the minimum pairwise codeword distance
    for g in (g52, g73, REP3):
        cws = [cw for _, cw in all_codewords(g)]
        pairwise = min(
            int((a ^ b).sum()) for i, a in enumerate(cws) for b in cws[i + 1 :]
        )
        assert min_distance(g).distance == pairwise


def test_min_distance_refuses_large_k():
    g = GeneratorMatrix(np.eye(lincode.K_ENUM_LIMIT + 1, dtype=np.uint8))
    with pytest.raises(ValueError, match="refus"):
        min_distance(g)


def test_max_correctable(g52, g73):
    assert max_correctable(g73) == 1
    assert max_correctable(g52) == 1
    assert max_correctable(GeneratorMatrix(np.eye(3, dtype=np.uint8))) == 0


def test_decode_exact_codeword(g52):
    res = decode_nearest(g52, np.array([1, 0, 1, 1, 0], np.uint8))
    assert list(res.message) == [1, 0]
    assert res.distance == 0


def test_decode_single_flip(g52):
    res = decode_nearest(g52, np.array([1, 0, 1, 1, 1], np.uint8))
    assert list(res.message) == [1, 0]
    assert res.distance == 1


def test_decode_all_single_errors_seven_three(g73):
    for x, cw in all_codewords(g73):
        for pos in range(7):
            word = cw.copy()
            word[pos] ^= 1
            res = decode_nearest(g73, word)
            assert np.array_equal(res.message, x)


def test_decode_tie_break_prefers_smallest_message(g52):
    # e = 11000 sits at distance 2 from both codeword 00000 (message 00) and
    # codeword 11101 (message 11); the lexicographic tie-break returns 00.
    res = decode_nearest(g52, np.array([1, 1, 0, 0, 0], np.uint8))
    assert list(res.message) == [0, 0]
    assert res.distance == 2
    # shifting the same tie pattern onto message 10 makes messages 10 and 01
    # tie; 01 wins, demonstrating why ties are codeword-dependent failures
    word = encode(g52, np.array([1, 0], np.uint8)) ^ np.array([1, 1, 0, 0, 0], np.uint8)
    res = decode_nearest(g52, word)
    assert list(res.message) == [0, 1]


def test_decode_length_mismatch(g52):
    with pytest.raises(ValueError):
        decode_nearest(g52, np.zeros(4, np.uint8))


def brute_success_probability(g, delta):
    """Oracle: classify every error pattern with decode_nearest directly."""
    p = 0.0
    for ei in range(1 << g.n):
        e = np.array([(ei >> (g.n - 1 - i)) & 1 for i in range(g.n)], np.uint8)
        if not decode_nearest(g, e).message.any():
            w = int(e.sum())
            p += delta**w * (1 - delta) ** (g.n - w)
    return p


def test_bsc_exact_delta_zero(g52):
    assert bsc_success_exact(g52, 0.0).success_probability == 1.0


def test_bsc_exact_repetition_code():
    rep = bsc_success_exact(REP3, 0.1)
    assert abs(rep.success_probability - 0.972) < 1e-12


def test_bsc_exact_five_two(g52):
    rep = bsc_success_exact(g52, 0.1)
    assert rep.success_probability >= 0.91854
    assert abs(rep.success_probability - 0.9477) < 1e-12
    assert abs(rep.success_probability - brute_success_probability(g52, 0.1)) < 1e-12


def test_bsc_exact_matches_decode_oracle(g73):
    for delta in (0.05, 0.2):
        exact = bsc_success_exact(g73, delta).success_probability
        assert abs(exact - brute_success_probability(g73, delta)) < 1e-12


def test_bsc_exact_monotone_in_delta(g52):
    values = [bsc_success_exact(g52, d).success_probability for d in np.linspace(0, 0.5, 11)]
    assert all(a >= b - 1e-12 for a, b in zip(values, values[1:]))


def test_bsc_exact_refuses_large_n():
    g = GeneratorMatrix(np.eye(1, lincode.N_EXACT_LIMIT + 1, dtype=np.uint8))
    with pytest.raises(ValueError, match="[Mm]onte"):
        bsc_success_exact(g, 0.1)


def test_bsc_exact_rejects_bad_delta(g52):
    with pytest.raises(ValueError):
        bsc_success_exact(g52, 0.6)


def test_correctable_histogram_values(g52):
    hist = correctable_weight_histogram(g52)
    assert list(hist[:3]) == [1, 5, 4]
    assert not hist[3:].any()


def test_monte_carlo_delta_zero(g52):
    rep = bsc_monte_carlo(g52, 0.0, trials=500, seed=1)
    assert rep.success_probability == 1.0


def test_monte_carlo_agrees_with_exact(g52, g73):
    for g, delta in ((g52, 0.1), (g73, 0.05)):
        exact = bsc_success_exact(g, delta).success_probability
        mc = bsc_monte_carlo(g, delta, trials=100_000, seed=7)
        assert abs(mc.success_probability - exact) <= 3 * mc.standard_error


def test_monte_carlo_deterministic(g52):
    a = bsc_monte_carlo(g52, 0.1, trials=5000, seed=123)
    b = bsc_monte_carlo(g52, 0.1, trials=5000, seed=123)
    assert a == b
    c = bsc_monte_carlo(g52, 0.1, trials=5000, seed=124)
    assert c.success_probability != a.success_probability or c.seed != a.seed


def test_monte_carlo_rejects_bad_trials(g52):
    with pytest.raises(ValueError):
        bsc_monte_carlo(g52, 0.1, trials=0, seed=0)


def test_correctability_coset_property(g52):
    # for tie-free patterns, correctability does not depend on the codeword;
    # tie patterns resolve toward the smaller message and may fail elsewhere
    rng = np.random.default_rng(9)
    cws = [cw for _, cw in all_codewords(g52)]
    for _ in range(200):
        e = rng.integers(0, 2, 5).astype(np.uint8)
        dists = sorted(int((e ^ cw).sum()) for cw in cws)
        tie_free = dists[0] < dists[1]
        outcomes = []
        for x, cw in all_codewords(g52):
            res = decode_nearest(g52, cw ^ e)
            outcomes.append(bool(np.array_equal(res.message, x)))
        if tie_free:
            assert len(set(outcomes)) == 1
        elif int(e.sum()) == dists[0]:
            # the zero codeword is among the minimizers, so message 00 wins
            # its tie; other codewords may legitimately fail here
            assert outcomes[0]


def test_codeword_table_message_order(g73):
    from stab2lin import gf2

    table = codeword_table(g73)
    for mi, (x, cw) in enumerate(all_codewords(g73)):
        assert np.array_equal(gf2.unpack_rows(table[mi], 7)[0], cw)
