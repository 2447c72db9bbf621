"""SL(2,Z) arithmetic, generator words, Euclidean decomposition, cofactors,
level-12 congruence membership and the published generating set."""

import math
import random

import pytest

from e6lens.modular import (
    IDENTITY,
    S,
    SL2Z,
    T,
    Word,
    cofactors,
    congruent_lift,
    decompose,
    gamma12_generators,
    in_gamma12,
    lens_matrix,
    t_power,
)


def rand_word(rng, max_tokens=12):
    tokens = []
    for _ in range(rng.randint(0, max_tokens)):
        if rng.random() < 0.5:
            tokens.append("S")
        else:
            tokens.append(rng.randint(-12, 12))
    return Word(tokens)


# -- matrices ------------------------------------------------------------------


def test_determinant_enforced():
    with pytest.raises(ValueError):
        SL2Z(1, 0, 0, 2)
    with pytest.raises(ValueError):
        SL2Z(0, 1, 1, 0)


def test_generator_relations():
    assert S * S == SL2Z(-1, 0, 0, -1)
    assert S**4 == IDENTITY
    assert (S * T) ** 6 == IDENTITY
    assert T**5 == t_power(5)
    assert T**-3 == t_power(-3)


def test_inverse():
    m = T * S * t_power(-7) * S
    assert m * m.inverse() == IDENTITY
    assert m.inverse() * m == IDENTITY


# -- cofactors and the gluing matrix ---------------------------------------------


def test_cofactors_forced_cases():
    assert cofactors(1, 0) == (0, -1)
    assert cofactors(-1, 0) == (0, 1)
    assert cofactors(0, 1) == (1, 0)
    assert cofactors(0, -1) == (-1, 0)


def test_cofactors_example():
    assert cofactors(5, 2) == (3, 1)


def test_cofactors_rejects_common_factor():
    with pytest.raises(ValueError, match="gcd"):
        cofactors(2, 4)
    with pytest.raises(ValueError):
        cofactors(0, 0)


def test_cofactors_canonical_and_valid():
    rng = random.Random(99)
    seen = 0
    while seen < 200:
        p = rng.randint(-60, 60)
        q = rng.randint(-60, 60)
        if math.gcd(p, q) != 1:
            continue
        seen += 1
        a, b = cofactors(p, q)
        assert a * q - b * p == 1
        if abs(p) > 1:
            assert 0 <= a < abs(p)


def test_lens_matrix_examples():
    assert lens_matrix(1, 0, 0, -1) == S
    assert lens_matrix(0, 1, 1, 0) == SL2Z(-1, 0, 0, -1)
    assert lens_matrix(5, 2, 3, 1) == SL2Z(-2, 1, 5, -3)


def test_lens_matrix_rejects_bad_cofactors():
    with pytest.raises(ValueError):
        lens_matrix(5, 2, 1, 1)


# -- words -----------------------------------------------------------------------


def test_empty_word_is_identity():
    assert Word().to_matrix() == IDENTITY


def test_single_t_power():
    assert Word([12]).to_matrix() == SL2Z(1, 12, 0, 1)


def test_word_merges_adjacent_t_tokens():
    assert Word([3, 4]) == Word([7])
    assert Word([3, -3]) == Word([])
    assert Word(["S", 2, -2, "S"]) == Word(["S", "S"])
    assert Word([0, "S", 0]) == Word(["S"])


def test_word_rejects_garbage_tokens():
    with pytest.raises(ValueError):
        Word([True])
    with pytest.raises(ValueError):
        Word(["T"])


def test_word_concatenation_matches_matrix_product():
    rng = random.Random(4)
    for _ in range(50):
        u, v = rand_word(rng, 6), rand_word(rng, 6)
        assert (u * v).to_matrix() == u.to_matrix() * v.to_matrix()


def test_compact_and_pretty_formats():
    word = Word(["S", "S", 12, "S", 12, "S"])
    assert word.compact() == "S2T12ST12S"
    assert word.pretty() == "S^2 T^12 S T^12 S"
    assert Word.parse("S2T12ST12S") == word
    assert Word.parse("S^2 T^12 S T^12 S") == word


def test_negative_exponent_format_round_trip():
    word = Word([9, "S", -4, "S", 3, "S", 4, "S"])
    assert word.compact() == "T9ST-4ST3ST4S"
    assert Word.parse(word.compact()) == word
    assert Word.parse(word.pretty()) == word


def test_format_round_trip_random():
    rng = random.Random(12)
    for _ in range(100):
        word = rand_word(rng)
        assert Word.parse(word.compact()) == word
        assert Word.parse(word.pretty()) == word


def test_parse_rejects_malformed():
    with pytest.raises(ValueError):
        Word.parse("S T^2 X")
    with pytest.raises(ValueError):
        Word.parse("T")


# -- decomposition -----------------------------------------------------------------


def test_decompose_generator():
    assert decompose(S) == Word(["S"])


def test_decompose_minus_identity():
    assert decompose(SL2Z(-1, 0, 0, -1)) == Word(["S", "S"])


def test_decompose_identity_is_empty():
    assert decompose(IDENTITY) == Word()


def test_decompose_published_generator():
    m = SL2Z(-299, 108, -36, 13)
    assert decompose(m).to_matrix() == m


def test_decompose_round_trip_500_random_words():
    rng = random.Random(2718)
    for _ in range(500):
        m = rand_word(rng).to_matrix()
        assert decompose(m).to_matrix() == m


def test_decompose_word_length_logarithmic():
    m = t_power(10**9) * S * t_power(-(10**8 + 7)) * S * t_power(12345)
    word = decompose(m)
    assert word.to_matrix() == m
    bits = max(abs(e) for e in m.entries()).bit_length()
    assert len(word) <= 3 * bits + 5


# -- congruence subgroup --------------------------------------------------------------


def test_in_gamma12_basics():
    assert in_gamma12(IDENTITY)
    assert not in_gamma12(T)
    assert not in_gamma12(SL2Z(-1, 0, 0, -1))


def test_in_gamma12_reduces_published_entries():
    assert in_gamma12(SL2Z(-155, 84, -24, 13))


def test_generator_table_has_19_self_checked_entries():
    table = gamma12_generators()
    assert len(table) == 19
    names = [g.name for g in table]
    assert names[0] == "P1+" and names[1] == "P1-" and names[-1] == "P18"
    for gen in table:
        assert gen.word.to_matrix() == gen.matrix
        assert in_gamma12(gen.matrix)


def test_generator_table_spot_entries():
    by_name = {g.name: g for g in gamma12_generators()}
    p2 = by_name["P2"]
    assert p2.matrix == SL2Z(-143, 12, -12, 1)
    assert p2.word == Word.parse("S2T12ST12S")
    assert by_name["P9"].matrix == SL2Z(937, -396, 168, -71)
    assert by_name["P9"].word == Word.parse("T5ST-2ST-4ST-4ST-3ST2S")
    assert by_name["P18"].matrix == SL2Z(649, -384, 120, -71)
    assert by_name["P18"].word == Word.parse("T5ST-2ST2ST-4ST3ST2S")


def test_normal_closure_smoke():
    # conjugates of table entries by random short words stay in Gamma(12)
    rng = random.Random(31)
    table = gamma12_generators()
    for _ in range(40):
        gen = rng.choice(table)
        u = rand_word(rng, 6).to_matrix()
        assert in_gamma12(u * gen.matrix * u.inverse())


# -- congruent cofactor lifts -----------------------------------------------------------


def _check_lift(p, q, p2, q2):
    a, b, a2, b2 = congruent_lift(p, q, p2, q2)
    assert a * q - b * p == 1
    assert a2 * q2 - b2 * p2 == 1
    assert (a - a2) % 12 == 0
    assert (b - b2) % 12 == 0


def test_congruent_lift_identical_input():
    a, b, a2, b2 = congruent_lift(5, 2, 5, 2)
    assert (a, b) == (a2, b2)
    _check_lift(5, 2, 5, 2)


def test_congruent_lift_examples():
    _check_lift(1, 0, 13, 12)
    _check_lift(5, 2, 17, 14)


def test_congruent_lift_rejects_bad_input():
    with pytest.raises(ValueError):
        congruent_lift(2, 4, 2, 4)
    with pytest.raises(ValueError):
        congruent_lift(5, 2, 6, 2)


def test_congruent_lift_exhaustive_small_sweep():
    for p in range(-30, 31):
        for q in range(-30, 31):
            if math.gcd(p, q) != 1:
                continue
            for dp, dq in ((12, 0), (0, 12), (12, 12), (24, 0), (0, 24), (24, 24)):
                p2, q2 = p + dp, q + dq
                if math.gcd(p2, q2) != 1:
                    continue
                _check_lift(p, q, p2, q2)
