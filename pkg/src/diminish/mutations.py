"""Deliberately broken diminishers for exercising the verification harness.

Each fixture sabotages one real construction in a specific way; the
verify harness is expected to catch all three with counterexamples.
"""

from __future__ import annotations

from dataclasses import replace

from .core import (
    STRICT_DECREASE,
    DiminisherContract,
    ParamInstance,
    token_instance,
    token_verdict,
)
from .graph_diminishers import mc_path_diminisher, tst_no, tst_yes
from .graphs import AnnotatedGraph, _norm_edge, neighborhood, oracle_tst
from .tm import NTMInstance, diminish_ntm_sigma


def _flip_colors(g: AnnotatedGraph) -> AnnotatedGraph:
    """Recolor one uniquely-colored vertex per component to another color."""
    col = dict(g.coloring)
    for comp in g.components():
        present = {}
        for v in comp:
            present.setdefault(col[v], []).append(v)
        if len(present) < 2:
            continue
        for c, holders in sorted(present.items()):
            if len(holders) == 1:
                other = next(c2 for c2 in sorted(present) if c2 != c)
                col[holders[0]] = other
                break
    return replace(g, coloring=col)


def broken_mc_path_diminisher() -> DiminisherContract:
    """The real construction followed by a color swap in the output."""
    real = mc_path_diminisher()

    def transform(inst: ParamInstance) -> ParamInstance:
        out = real.transform(inst)
        if token_verdict(out) is not None or out.payload.coloring is None:
            return out
        return ParamInstance(_flip_colors(out.payload), out.k)

    return DiminisherContract(
        transform=transform, kind=STRICT_DECREASE, name="broken-mc-path"
    )


def broken_tst_diminisher() -> DiminisherContract:
    """The terminal Steiner branching without the clique completion step."""

    def transform(inst: ParamInstance) -> ParamInstance:
        g, budget = inst.payload
        terms = sorted(g.terminals or ())
        k = inst.k
        if len(terms) < 3 or budget == 0:
            verdict = oracle_tst(g, budget)
            return tst_yes(k - 1) if verdict else tst_no(k - 1)
        term_set = set(terms)
        if any(neighborhood(g, t) <= term_set for t in terms):
            return tst_no(k - 1)
        if any(
            term_set <= neighborhood(g, v)
            for v in range(g.n)
            if v not in term_set
        ):
            return tst_yes(k - 1)
        t_star = terms[0]
        branch_vs = sorted(neighborhood(g, t_star) - term_set)
        t_index = {t: i for i, t in enumerate(terms)}
        n_total = len(terms)
        edges = set()
        for v_i in branch_vs:
            cliqued = g  # sabotage: neighborhood of v_i left incomplete
            local = dict(t_index)
            for u in range(g.n):
                if u != v_i and u not in t_index:
                    local[u] = n_total
                    n_total += 1
            for (a, b) in cliqued.edges:
                if v_i in (a, b):
                    continue
                edges.add(_norm_edge(local[a], local[b]))
        composed = AnnotatedGraph(
            n=n_total,
            edges=frozenset(edges),
            terminals=frozenset(range(len(terms))),
        )
        return ParamInstance((composed, budget - 1), k - 1)

    return DiminisherContract(
        transform=transform, kind=STRICT_DECREASE, name="broken-tst"
    )


def broken_ntm_sigma_diminisher() -> DiminisherContract:
    """The real construction with the output budget off by one."""

    def transform(inst: ParamInstance) -> ParamInstance:
        out = diminish_ntm_sigma(inst)
        if token_verdict(out) is not None:
            return token_instance(token_verdict(out), out.k + 1)
        raw: NTMInstance = out.payload
        bumped = NTMInstance(
            machine=raw.machine, word=raw.word, budget=raw.budget + 1
        )
        return ParamInstance(bumped, out.k + 1)

    return DiminisherContract(
        transform=transform, kind=STRICT_DECREASE, name="broken-ntm-sigma"
    )
