"""Acceptance gate: one test per criterion, one pass/fail line each."""

import random
import sys
from itertools import combinations, product

import pytest

from diminish import registry
from diminish.cli import main as cli_main
from diminish.core import (
    ParamInstance,
    diminish_kernelize_loop,
    strong_loop,
    strong_loop_repetitions,
    token_verdict,
    verify_diminisher,
)
from diminish import graph_diminishers as gd
from diminish.graphs import (
    AnnotatedGraph,
    AnnotationSpec,
    exact_bandwidth,
    exact_cutwidth,
    exact_treewidth,
    induced_subgraph,
    max_degree,
    neighborhood,
    oracle_clique,
    oracle_biclique,
    oracle_colorful_motif,
    oracle_mc_path,
    oracle_rooted_path,
    oracle_steiner_tree,
    oracle_tst,
    random_graph,
)
from diminish.setcover import (
    SetSystemInstance,
    oracle_hitting_set,
    oracle_set_cover,
    param_klogn,
    setcover_strong_diminisher,
    sqrt3_half_bound_holds,
)
from diminish.tm import (
    NTMInstance,
    diminish_ntm_sigma,
    diminish_ntm_states,
    ntm_accepts,
    random_machine,
    sigma_state_bound,
    tm_descriptor,
)

import _naive as nv

SOUNDNESS_TAGS = (
    "rooted_path", "clique_cw", "clique_tw", "clique_bw", "clique_maxdeg",
    "biclique", "mc_path", "colorful_motif", "tst", "ntm_sigma",
    "ntm_states", "ntm_binary", "setcover_strong", "hittingset_strong",
)


def report(label: str, ok: bool, detail: str = "") -> None:
    """One visible pass/fail line per criterion, then the assertion."""
    verdict = "PASS" if ok else "FAIL"
    suffix = f" ({detail})" if detail else ""
    print(f"[{verdict}] {label}{suffix}", file=sys.__stdout__)
    assert ok, f"{label}{suffix}"


def test_criterion_1_diminisher_soundness():
    failing = {}
    for tag in SOUNDNESS_TAGS:
        reports = verify_diminisher(
            registry.diminisher(tag), registry.descriptor(tag),
            trials=500, seed=2026,
        )
        bad = [r for r in reports if not r.equivalent]
        if bad:
            failing[tag] = len(bad)
    report(
        "criterion 1: 500-trial soundness for all 14 diminishers",
        not failing,
        str(failing) if failing else "0 failing trials",
    )


def test_criterion_2_width_decrease():
    rng = random.Random(4001)
    graphs = 0
    bandwidth_findings = 0
    ok = True
    while graphs < 500:
        n = rng.randint(2, 8)
        g = random_graph(rng, n, rng.random())
        if not g.edges:
            continue
        graphs += 1
        cw = exact_cutwidth(g).value
        tw = exact_treewidth(g).value
        bw = exact_bandwidth(g).value
        dg = max_degree(g).value
        for v in range(g.n):
            nb = neighborhood(g, v)
            if not nb:
                continue
            sub = induced_subgraph(g, nb)
            if exact_cutwidth(sub).value >= cw:
                ok = False
            if exact_treewidth(sub).value >= tw:
                ok = False
            if max_degree(sub).value >= dg:
                ok = False
            if exact_bandwidth(sub).value >= bw:
                bandwidth_findings += 1
    report(
        "criterion 2: neighborhood width decrease on 500 graphs",
        ok,
        f"bandwidth findings (reported, not failures): {bandwidth_findings}",
    )


def test_criterion_3_composition_constants():
    ok = True
    rule = gd.rooted_path_rule()
    comp = gd.rooted_path_composition()
    prob = gd.graph_descriptor("rooted_path")
    rng = random.Random(4003)
    count = 0
    while count < 200:
        inst = prob.generate(rng)
        if inst.k < 1:
            continue
        branches = rule.apply(inst)
        if comp.apply(branches).k - branches[0].k != 1:
            ok = False
        count += 1
    rule = gd.mc_path_rule()
    comp = gd.mc_path_composition()
    prob = gd.graph_descriptor("mc_path")
    for _ in range(200):
        inst = prob.generate(rng)
        branches = rule.apply(inst)
        if comp.apply(branches).k - branches[0].k != 0:
            ok = False
    report(
        "criterion 3: measured composition constants match declarations"
        " (rooted path: 1, disjoint unions: 0)",
        ok,
    )


def test_criterion_4_solving_loops():
    prob, dim, kern, strong, semi = registry.solving_bundle()
    rng = random.Random(4005)
    ok = True
    for _ in range(200):
        n = rng.randint(0, 64)
        bits = "".join(rng.choice("01") for _ in range(n))
        k = rng.randint(0, 32)
        inst = ParamInstance(bits, k)
        want = bits.count("1") >= k
        trace = []
        if diminish_kernelize_loop(dim, kern, prob.oracle, inst,
                                   trace=trace) != want:
            ok = False
        if len(trace) > max(k, 1):
            ok = False
        ks = [entry[0] for entry in trace]
        if ks != sorted(ks, reverse=True) or len(set(ks)) != len(ks):
            ok = False
        if strong_loop(strong, semi, prob.oracle, inst) != want:
            ok = False
    reps_ok = (strong_loop_repetitions(2, 2) == 2
               and strong_loop_repetitions(2, 3) == 3)
    report(
        "criterion 4: strict and strong solving loops match the"
        " count-ones oracle on 200 instances; repetition hand values hold",
        ok and reps_ok,
    )


def test_criterion_5_set_cover_parameter_bound():
    dim = setcover_strong_diminisher()
    rng = random.Random(4007)
    violations = 0
    accepted = 0
    while accepted < 300:
        n = rng.randint(5, 9)
        m = rng.randint(2, 7)
        family = tuple(
            frozenset(e for e in range(n) if rng.random() < 0.5)
            for _ in range(m)
        )
        k = rng.choice((4, 6, 8, 10))
        inst = ParamInstance(SetSystemInstance(n, family, k), k)
        out = dim.apply(inst)
        if token_verdict(out) is not None:
            continue
        accepted += 1
        if not sqrt3_half_bound_holds(param_klogn(inst), param_klogn(out)):
            violations += 1
    report(
        "criterion 5: k'*log2(n') <= (sqrt(3)/2)*k*log2(n) on all"
        " accepted inputs (k >= 4 even, n >= 5)",
        violations == 0,
        f"{accepted} accepted inputs, {violations} violations",
    )


def test_criterion_6_tst_reduction_pair():
    prob = gd.graph_descriptor("tst")
    rng = random.Random(4009)
    ok = True
    for _ in range(200):
        inst = prob.generate(rng)
        g, budget = inst.payload
        t = len(g.terminals or ())
        fwd = gd.reduce_tst_to_steiner(inst)
        g2, budget2 = fwd.payload
        if budget2 != t * (2 * (budget + t) - 1) + budget:
            ok = False
        if oracle_tst(g, budget) != oracle_steiner_tree(g2, budget2,
                                                        cap=256):
            ok = False
    for _ in range(200):
        inst = prob.generate(rng)
        g, budget = inst.payload
        st = ParamInstance((g, budget), inst.k)  # reread as Steiner input
        rev = gd.reduce_steiner_to_tst(st)
        g2, budget2 = rev.payload
        t = len(g.terminals or ())
        if budget2 != budget + t:
            ok = False
        if oracle_steiner_tree(g, budget) != oracle_tst(g2, budget2,
                                                        cap=256):
            ok = False
    report(
        "criterion 6: TST<->Steiner reduction parameter formulas exact,"
        " oracle equivalence on 200 instances each direction",
        ok,
    )


def test_criterion_7_ntm_constructions():
    ok = True
    rng = random.Random(4011)
    prob = tm_descriptor("ntm_sigma")
    for _ in range(300):
        inst = prob.generate(rng)
        out = diminish_ntm_sigma(inst)
        if token_verdict(out) is not None:
            continue
        raw, cooked = inst.payload, out.payload
        if set(cooked.machine.sigma) != set(raw.machine.sigma):
            ok = False
        if len(cooked.machine.states) > sigma_state_bound(raw.machine,
                                                          raw.budget):
            ok = False
    prob = tm_descriptor("ntm_states")
    for _ in range(300):
        inst = prob.generate(rng)
        out = diminish_ntm_states(inst)
        if token_verdict(out) is not None:
            continue
        raw, cooked = inst.payload, out.payload
        if set(cooked.machine.states) != set(raw.machine.states):
            ok = False
    report(
        "criterion 7: alphabet preserved (sigma construction), state set"
        " preserved (states construction), |Q'| within the bound",
        ok,
    )


def _random_annotated(rng):
    n = rng.randint(1, 6)
    kind = rng.randrange(5)
    if kind == 0:
        return ("clique", random_graph(rng, n, rng.random()),
                rng.randint(0, n))
    if kind == 1 and n >= 2:
        g = random_graph(rng, n, rng.random(), AnnotationSpec(bipartite=True))
        return ("biclique", g, rng.randint(0, 3))
    if kind == 2:
        g = random_graph(rng, n, rng.random(), AnnotationSpec(with_root=True))
        return ("rooted_path", g, rng.randint(0, n))
    if kind == 3:
        c = rng.randint(1, n)
        g = random_graph(rng, n, rng.random(), AnnotationSpec(colors=c))
        return ("colored", g, None)
    nt = rng.randint(0, min(3, n))
    terms = frozenset(rng.sample(range(n), nt)) if nt else None
    edges = frozenset(
        (a, b) for a in range(n) for b in range(a + 1, n)
        if rng.random() < 0.5
    )
    g = AnnotatedGraph(n=n, edges=edges, terminals=terms)
    return ("steiner", g, rng.randint(0, 4))


def test_criterion_8_oracle_cross_validation():
    ok = True
    rng = random.Random(4013)
    counts = {"clique": 0, "biclique": 0, "rooted_path": 0, "mc_path": 0,
              "motif": 0, "tst": 0, "steiner": 0}
    while min(counts.values()) < 1000:
        kind, g, k = _random_annotated(rng)
        if kind == "clique":
            counts["clique"] += 1
            if oracle_clique(g, k) != nv.naive_clique(g, k):
                ok = False
        elif kind == "biclique":
            counts["biclique"] += 1
            if oracle_biclique(g, k) != nv.naive_biclique(g, k):
                ok = False
        elif kind == "rooted_path":
            counts["rooted_path"] += 1
            if oracle_rooted_path(g, k) != nv.naive_rooted_path(g, k):
                ok = False
        elif kind == "colored":
            counts["mc_path"] += 1
            counts["motif"] += 1
            if oracle_mc_path(g) != nv.naive_mc_path(g):
                ok = False
            if oracle_colorful_motif(g) != nv.naive_colorful_motif(g):
                ok = False
        else:
            counts["tst"] += 1
            counts["steiner"] += 1
            if oracle_tst(g, k) != nv.naive_tst(g, k):
                ok = False
            if oracle_steiner_tree(g, k) != nv.naive_steiner(g, k):
                ok = False

    tm_checked = 0
    for _ in range(500):
        sigma = ("a", "b") if rng.random() < 0.7 else ("a",)
        m = random_machine(rng, rng.randint(1, 3), sigma)
        word = tuple(rng.choice(sigma) for _ in range(rng.randint(0, 3)))
        inst = NTMInstance(m, word, rng.randint(0, 4))
        try:
            want = nv.naive_ntm(inst, config_cap=100_000)
        except nv.ConfigBudgetExceeded:
            continue
        if ntm_accepts(inst) != want:
            ok = False
        tm_checked += 1

    sets_checked = 0
    for n, m in product(range(0, 4), range(0, 4)):
        subsets = list(range(1 << n))
        for fam_bits in combinations(subsets * 1, m):
            family = tuple(
                frozenset(e for e in range(n) if bits >> e & 1)
                for bits in fam_bits
            )
            for k in range(0, n + 2):
                inst = SetSystemInstance(n, family, k)
                if oracle_set_cover(inst) != nv.naive_set_cover(inst):
                    ok = False
                if oracle_hitting_set(inst) != nv.naive_hitting_set(inst):
                    ok = False
                sets_checked += 1
    for _ in range(1000):
        n = rng.randint(0, 5)
        m = rng.randint(0, 5)
        family = tuple(
            frozenset(e for e in range(n) if rng.random() < 0.5)
            for _ in range(m)
        )
        inst = SetSystemInstance(n, family, rng.randint(0, 5))
        if oracle_set_cover(inst) != nv.naive_set_cover(inst):
            ok = False
        if oracle_hitting_set(inst) != nv.naive_hitting_set(inst):
            ok = False
        sets_checked += 1
    report(
        "criterion 8: oracles agree with naive twins",
        ok,
        f"graph cases >= 1000 per oracle, {tm_checked} machines,"
        f" {sets_checked} set systems",
    )


def test_criterion_9_mutation_detection(capsys):
    ok = True
    details = []
    for tag in registry.BROKEN_TAGS:
        code = cli_main([
            "verify", "--problem", tag, "--trials", "500", "--seed", "7",
        ])
        out = capsys.readouterr().out
        caught = code == 1 and "counterexample" in out
        details.append(f"{tag}: exit {code}")
        if not caught:
            ok = False
    report(
        "criterion 9: verify exits 1 with a counterexample on all three"
        " broken fixtures",
        ok,
        ", ".join(details),
    )
