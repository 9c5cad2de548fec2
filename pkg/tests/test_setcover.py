"""Set cover and hitting set: strong diminishers, duality, the bound."""

import random
from fractions import Fraction

import pytest

from diminish.core import (
    ParamInstance,
    token_verdict,
    transfer_diminisher,
    verify_diminisher,
)
from diminish.errors import ParseError
from diminish.setcover import (
    KLogValue,
    SET_TAGS,
    SetSystemInstance,
    dual_transpose,
    hs_to_sc_reduction,
    sc_to_hs_reduction,
    oracle_hitting_set,
    oracle_set_cover,
    param_klogn,
    parse_set_system,
    serialize_set_system,
    set_descriptor,
    set_diminisher,
    setcover_strong_diminisher,
    sqrt3_half_bound_holds,
    strong_diminish_hitting_set,
    strong_diminish_set_cover,
)

from _naive import naive_hitting_set, naive_set_cover


def rand_system(rng, n_max=5, m_max=5, k_max=5) -> SetSystemInstance:
    n = rng.randint(0, n_max)
    m = rng.randint(0, m_max)
    family = tuple(
        frozenset(e for e in range(n) if rng.random() < 0.5)
        for _ in range(m)
    )
    return SetSystemInstance(n, family, rng.randint(0, k_max))


def test_oracles_match_naive_twins():
    rng = random.Random(211)
    for _ in range(400):
        inst = rand_system(rng)
        assert oracle_set_cover(inst) == naive_set_cover(inst)
        assert oracle_hitting_set(inst) == naive_hitting_set(inst)


def test_empty_set_blocks_hitting():
    inst = SetSystemInstance(3, (frozenset(), frozenset({1})), 3)
    assert not oracle_hitting_set(inst)


@pytest.mark.parametrize("tag", SET_TAGS)
def test_strong_diminisher_soundness(tag):
    dim = set_diminisher(tag)
    prob = set_descriptor(tag)
    reports = verify_diminisher(dim, prob, trials=200, seed=223)
    bad = [r for r in reports if not r.equivalent]
    assert not bad, f"{tag}: {len(bad)} failing trials"
    assert dim.factor_c == Fraction(2)


def test_odd_parameter_padding():
    # Odd budgets are padded to even before halving; the verdict and the
    # ceiling k' = (k+1)/2 are preserved.
    inst = ParamInstance(
        SetSystemInstance(
            4,
            (frozenset({0, 1}), frozenset({2}), frozenset({3})),
            3,
        ),
        3,
    )
    out = strong_diminish_set_cover(inst)
    assert out.k == 2
    assert oracle_set_cover(inst.payload) == oracle_set_cover(out.payload)
    hs = ParamInstance(
        SetSystemInstance(4, (frozenset({0}), frozenset({1, 2})), 3), 3
    )
    out = strong_diminish_hitting_set(hs)
    assert out.k == 2
    assert oracle_hitting_set(hs.payload) == oracle_hitting_set(out.payload)


def test_dual_transpose_swaps_roles():
    rng = random.Random(227)
    for _ in range(200):
        inst = ParamInstance(rand_system(rng), 0)
        flipped = dual_transpose(inst)
        assert oracle_hitting_set(inst.payload) == oracle_set_cover(
            flipped.payload
        )
        assert dual_transpose(dual_transpose(inst)).payload.n \
            == inst.payload.n or inst.payload.m == 0


def test_transferred_diminisher_is_sound():
    # Carrying the set cover halving across the duality yields a working
    # hitting set halving.
    carried = transfer_diminisher(
        hs_to_sc_reduction(), sc_to_hs_reduction(), setcover_strong_diminisher()
    )
    prob = set_descriptor("hittingset_strong")
    reports = verify_diminisher(carried, prob, trials=200, seed=229)
    assert all(r.equivalent for r in reports)


def test_klog_value_exact_comparison():
    # 4*log2(8) = 12 and 3*log2(16) = 12 compare equal via 8^4 = 16^3.
    assert KLogValue(4, 8).compare(KLogValue(3, 16)) == 0
    assert KLogValue(3, 8) < KLogValue(4, 8)
    assert KLogValue(4, 8) <= KLogValue(3, 16)
    assert abs(KLogValue(4, 8).approx() - 12.0) < 1e-9


def test_sqrt3_half_bound_on_diminished_instances():
    dim = setcover_strong_diminisher()
    rng = random.Random(233)
    checked = 0
    for _ in range(300):
        n = rng.randint(5, 8)
        m = rng.randint(2, 6)
        family = tuple(
            frozenset(e for e in range(n) if rng.random() < 0.5)
            for _ in range(m)
        )
        k = rng.choice((4, 6, 8))
        inst = ParamInstance(SetSystemInstance(n, family, k), k)
        out = dim.apply(inst)
        if token_verdict(out) is not None:
            continue
        assert sqrt3_half_bound_holds(param_klogn(inst), param_klogn(out))
        checked += 1
    assert checked > 200


def test_parse_serialize_round_trip():
    text = "u 4\ns 0: 0 1\ns 1: 2 3\nk 2\nproblem setcover\n"
    inst, problem = parse_set_system(text)
    assert problem == "setcover"
    assert inst.n == 4 and inst.m == 2 and inst.k == 2
    assert serialize_set_system(inst, problem) == text
    with pytest.raises(ParseError):
        parse_set_system("u 2\ns 0: 5\nk 1\nproblem setcover\n")
    with pytest.raises(ParseError):
        parse_set_system("u 2\nk 1\nproblem sudoku\n")
