"""Graph problem diminishers: soundness, canonicals, reductions."""

import random

import pytest

from diminish.core import token_verdict, verify_diminisher
from diminish.errors import ContractViolation
from diminish import graph_diminishers as gd
from diminish.graphs import (
    WIDTH_FUNCTIONS,
    disjoint_union,
    induced_subgraph,
    neighborhood,
    oracle_steiner_tree,
    oracle_tst,
)

TRIALS = 100


@pytest.mark.parametrize("tag", gd.GRAPH_TAGS)
def test_diminisher_soundness(tag):
    dim = gd.graph_diminisher(tag)
    prob = gd.graph_descriptor(tag)
    reports = verify_diminisher(dim, prob, trials=TRIALS, seed=101)
    bad = [r for r in reports if not r.equivalent]
    assert not bad, f"{tag}: {len(bad)} failing trials"


@pytest.mark.parametrize("tag", gd.GRAPH_TAGS)
def test_canonical_instances_have_declared_verdicts(tag):
    prob = gd.graph_descriptor(tag)
    for p in range(0, 3):
        yes = prob.trivial_yes(p)
        assert yes.k == p
        tv = token_verdict(yes)
        assert tv is True or prob.oracle(yes)
        no = prob.trivial_no(p)
        assert no.k == p
        tv = token_verdict(no)
        assert tv is False or not prob.oracle(no)


@pytest.mark.parametrize("tag", gd.GRAPH_TAGS)
def test_serialize_parse_round_trip(tag):
    prob = gd.graph_descriptor(tag)
    rng = random.Random(7)
    for _ in range(30):
        inst = prob.generate(rng)
        text = gd.serialize_instance(tag, inst)
        back = gd.parse_instance(tag, text)
        assert back == inst
    token = prob.trivial(False, 2)
    if token_verdict(token) is not None:
        text = gd.serialize_instance(tag, token)
        assert gd.parse_instance(tag, text) == token


def test_rooted_path_composition_constant_is_one():
    rule = gd.rooted_path_rule()
    comp = gd.rooted_path_composition()
    prob = gd.graph_descriptor("rooted_path")
    rng = random.Random(19)
    measured = set()
    for _ in range(200):
        inst = prob.generate(rng)
        if inst.k < 1:
            continue
        branches = rule.apply(inst)
        out = comp.apply(branches)
        measured.add(out.k - branches[0].k)
    assert measured == {1}
    assert comp.additive_c == 1


def test_mc_path_composition_constant_is_zero():
    rule = gd.mc_path_rule()
    comp = gd.mc_path_composition()
    prob = gd.graph_descriptor("mc_path")
    rng = random.Random(19)
    measured = set()
    for _ in range(200):
        inst = prob.generate(rng)
        branches = rule.apply(inst)
        out = comp.apply(branches)
        measured.add(out.k - branches[0].k)
    assert measured == {0}
    assert comp.additive_c == 0


@pytest.mark.parametrize("tag", ("clique_cw", "clique_tw", "clique_bw",
                                 "clique_maxdeg"))
def test_clique_neighborhood_width_decreases(tag):
    width = gd._CLIQUE_WIDTH[tag]
    prob = gd.graph_descriptor(tag)
    rng = random.Random(43)
    seen = 0
    for _ in range(60):
        inst = prob.generate(rng)
        if token_verdict(inst) is not None:
            continue
        g, target = inst.payload
        if not g.edges:
            continue
        whole = width(g).value
        parts = [
            induced_subgraph(g, neighborhood(g, v))
            for v in range(g.n)
            if neighborhood(g, v)
        ]
        if not parts:
            continue
        union = disjoint_union(parts)
        assert width(union).value < whole
        seen += 1
    assert seen > 10


def test_biclique_diminisher_spot_checks():
    dim = gd.biclique_diminisher()
    prob = gd.graph_descriptor("biclique")
    # K_{2,2} at k = 2 is a yes-instance and stays one at k = 1.
    inst = gd.bic_yes(2)
    out = dim.apply(inst)
    assert out.k == 1
    assert prob.oracle(out)
    # A perfect matching has no K_{2,2}; neither does its image.
    from diminish.graphs import AnnotatedGraph
    from diminish.core import ParamInstance

    matching = AnnotatedGraph(
        n=8,
        edges=frozenset({(0, 4), (1, 5), (2, 6), (3, 7)}),
        coloring={v: (1 if v < 4 else 2) for v in range(8)},
    )
    inst = ParamInstance(matching, 2)
    assert not prob.oracle(inst)
    out = dim.apply(inst)
    assert out.k == 1
    assert not prob.oracle(out)


def test_tst_reduction_parameter_formulas():
    prob = gd.graph_descriptor("tst")
    rng = random.Random(57)
    for _ in range(100):
        inst = prob.generate(rng)
        g, budget = inst.payload
        t = len(g.terminals or ())
        fwd = gd.reduce_tst_to_steiner(inst)
        g2, budget2 = fwd.payload
        assert budget2 == t * (2 * (budget + t) - 1) + budget
        assert fwd.k == budget2 + t
        assert oracle_tst(g, budget) == oracle_steiner_tree(
            g2, budget2, cap=256
        )
        rev = gd.reduce_steiner_to_tst(fwd)
        t2 = len(g2.terminals or ())
        g3, budget3 = rev.payload
        assert budget3 == budget2 + t2
        assert rev.k == budget3 + t2
        assert oracle_steiner_tree(g2, budget2, cap=256) == oracle_tst(
            g3, budget3, cap=256
        )


def test_tst_guard_paths():
    from diminish.graphs import AnnotatedGraph
    from diminish.core import ParamInstance

    prob = gd.graph_descriptor("tst")
    # A terminal whose neighbors are all terminals forces a no.
    clique_t = AnnotatedGraph(
        n=4,
        edges=frozenset({(0, 1), (1, 2), (0, 2), (2, 3)}),
        terminals=frozenset({0, 1, 2}),
    )
    inst = ParamInstance((clique_t, 1), 1 + 3)
    out = gd.diminish_tst(inst)
    assert token_verdict(out) is not None or not prob.oracle(out)
    assert not prob.oracle(inst)
    # A vertex adjacent to every terminal is an immediate yes.
    star = AnnotatedGraph(
        n=4,
        edges=frozenset({(0, 1), (0, 2), (0, 3)}),
        terminals=frozenset({1, 2, 3}),
    )
    inst = ParamInstance((star, 1), 1 + 3)
    out = gd.diminish_tst(inst)
    assert prob.oracle(inst)
    assert prob.oracle(out)
    assert out.k == inst.k - 1


def test_branch_counts_are_reported():
    rng = random.Random(71)
    for tag in ("rooted_path", "mc_path"):
        dim = gd.graph_diminisher(tag)
        prob = gd.graph_descriptor(tag)
        for _ in range(20):
            inst = prob.generate(rng)
            count = dim.branch_count(inst)
            assert count >= 1


def test_parse_rejects_malformed_instance():
    from diminish.errors import ParseError

    with pytest.raises(ParseError):
        gd.parse_instance("rooted_path", "p graph 2 1\ne 0 1\n")  # no k line
