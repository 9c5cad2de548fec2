"""Bounded NTM simulation and the two machine diminishers."""

import random

import pytest

from diminish.core import token_verdict, verify_diminisher
from diminish.errors import CapExceeded, ParseError
from diminish.tm import (
    BLANK,
    NTMInstance,
    NTMachine,
    diminish_ntm_sigma,
    diminish_ntm_states,
    ntm_accepts,
    parse_ntm,
    parse_tm_instance,
    random_machine,
    serialize_ntm,
    serialize_tm_instance,
    sigma_state_bound,
    tm_descriptor,
    tm_diminisher,
    TM_TAGS,
)

from _naive import ConfigBudgetExceeded, naive_ntm


def counter_machine() -> NTMInstance:
    """Accepts iff it can read two a's moving right within the budget."""
    m = NTMachine(
        sigma=("a", "b"),
        states=("q0", "q1", "q2"),
        initial="q0",
        accepting=frozenset({"q2"}),
        delta=frozenset({
            (("a", "q0"), ("a", "q1", 1)),
            (("a", "q1"), ("a", "q2", 1)),
            (("b", "q0"), ("b", "q0", 1)),
            (("b", "q1"), ("b", "q1", 1)),
            ((BLANK, "q2"), ("a", "q2", 0)),
        }),
    )
    return NTMInstance(m, ("a", "a"), 2)


def test_ntm_accepts_basics():
    inst = counter_machine()
    assert ntm_accepts(inst)
    assert not ntm_accepts(NTMInstance(inst.machine, ("a", "b"), 2))
    # Exactly `budget` steps are required, not at most.
    assert not ntm_accepts(NTMInstance(inst.machine, ("a", "a"), 1))
    assert ntm_accepts(NTMInstance(inst.machine, ("a", "a"), 3))


def test_ntm_accepts_cap():
    inst = counter_machine()
    with pytest.raises(CapExceeded):
        ntm_accepts(NTMInstance(inst.machine, (), 9), cap_steps=8)


def test_machine_validation():
    with pytest.raises(ValueError):
        NTMachine(sigma=(BLANK,), states=("q",), initial="q",
                  accepting=frozenset(), delta=frozenset())
    with pytest.raises(ValueError):
        NTMachine(sigma=("a",), states=("q",), initial="other",
                  accepting=frozenset(), delta=frozenset())
    with pytest.raises(ValueError):
        # Writing the blank is forbidden.
        NTMachine(
            sigma=("a",), states=("q",), initial="q",
            accepting=frozenset(),
            delta=frozenset({(("a", "q"), (BLANK, "q", 0))}),
        )


def test_parse_serialize_round_trip():
    inst = counter_machine()
    assert parse_ntm(serialize_ntm(inst)) == inst
    with pytest.raises(ParseError):
        parse_ntm("states q0\ninitial q0\ninput\nsteps 1\n")


def test_simulator_matches_naive_twin():
    rng = random.Random(91)
    checked = 0
    for _ in range(300):
        sigma = ("a", "b") if rng.random() < 0.7 else ("a",)
        m = random_machine(rng, rng.randint(1, 3), sigma)
        word = tuple(rng.choice(sigma) for _ in range(rng.randint(0, 3)))
        inst = NTMInstance(m, word, rng.randint(0, 4))
        try:
            want = naive_ntm(inst)
        except ConfigBudgetExceeded:
            continue
        assert ntm_accepts(inst) == want
        checked += 1
    assert checked > 250


@pytest.mark.parametrize("tag", TM_TAGS)
def test_diminisher_soundness(tag):
    dim = tm_diminisher(tag)
    prob = tm_descriptor(tag)
    reports = verify_diminisher(dim, prob, trials=150, seed=103)
    bad = [r for r in reports if not r.equivalent]
    assert not bad, f"{tag}: {len(bad)} failing trials"


def test_sigma_diminisher_preserves_alphabet_and_state_bound():
    prob = tm_descriptor("ntm_sigma")
    rng = random.Random(107)
    for _ in range(200):
        inst = prob.generate(rng)
        out = diminish_ntm_sigma(inst)
        if token_verdict(out) is not None:
            continue
        raw = inst.payload
        cooked = out.payload
        assert set(cooked.machine.sigma) == set(raw.machine.sigma)
        assert cooked.budget == raw.budget - 1
        assert len(cooked.machine.states) <= sigma_state_bound(
            raw.machine, raw.budget
        )


def test_states_diminisher_preserves_states():
    prob = tm_descriptor("ntm_states")
    rng = random.Random(109)
    for _ in range(200):
        inst = prob.generate(rng)
        out = diminish_ntm_states(inst)
        if token_verdict(out) is not None:
            continue
        raw = inst.payload
        cooked = out.payload
        assert set(cooked.machine.states) == set(raw.machine.states)
        assert cooked.budget == raw.budget - 1


@pytest.mark.parametrize("tag", TM_TAGS)
def test_instance_serialization_round_trip(tag):
    prob = tm_descriptor(tag)
    rng = random.Random(113)
    for _ in range(20):
        inst = prob.generate(rng)
        text = serialize_tm_instance(inst)
        assert parse_tm_instance(tag, text) == inst


def test_budget_zero_guard():
    inst = counter_machine()
    zero = NTMInstance(inst.machine, inst.word, 0)
    from diminish.core import ParamInstance

    prob = tm_descriptor("ntm_sigma")
    wrapped = ParamInstance(zero, 0 + len(zero.machine.sigma))
    out = diminish_ntm_sigma(wrapped)
    assert prob.oracle(wrapped) == prob.oracle(out)
