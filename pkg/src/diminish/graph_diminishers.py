"""Concrete parameter diminishers for the graph problems.

Covers rooted path, clique under four width parameterizations, balanced
biclique, multicolored path, colorful motif, terminal Steiner tree, and
the reduction pair between terminal and plain Steiner tree.

Instance conventions (ParamInstance.k always holds the tracked parameter):
  rooted_path      payload = graph with root,        k = path length target
  clique_*         payload = (graph, clique target), k = the width value
  biclique         payload = 2-colored bipartite,    k = per-side size target
  mc_path          payload = colored graph,          k = number of colors
  colorful_motif   payload = colored graph,          k = number of colors
  tst / steiner    payload = (graph, budget),        k = budget + |terminals|
"""

from __future__ import annotations

import random
from dataclasses import replace

from .core import (
    STRICT_DECREASE,
    BranchingRule,
    DiminisherContract,
    ParamInstance,
    ProblemDescriptor,
    StrictComposition,
    branch_and_compose,
    token_instance,
    token_verdict,
)
from .errors import GuardError, ParseError
from .graphs import (
    AnnotatedGraph,
    AnnotationSpec,
    _norm_edge,
    bipartition_sides,
    compact_colors,
    disjoint_union,
    exact_bandwidth,
    exact_cutwidth,
    exact_treewidth,
    induced_subgraph,
    make_clique,
    max_degree,
    neighborhood,
    oracle_biclique,
    oracle_clique,
    oracle_colorful_motif,
    oracle_mc_path,
    oracle_rooted_path,
    oracle_steiner_tree,
    oracle_tst,
    parse_graph,
    random_graph,
    serialize_graph,
)

GRAPH_TAGS = (
    "rooted_path",
    "clique_cw",
    "clique_tw",
    "clique_bw",
    "clique_maxdeg",
    "biclique",
    "mc_path",
    "colorful_motif",
    "tst",
)

_CLIQUE_WIDTH = {
    "clique_cw": exact_cutwidth,
    "clique_tw": exact_treewidth,
    "clique_bw": exact_bandwidth,
    "clique_maxdeg": max_degree,
}


def _path_graph(p: int, rooted: bool = True) -> AnnotatedGraph:
    edges = frozenset((i, i + 1) for i in range(p))
    return AnnotatedGraph(n=p + 1, edges=edges, root=0 if rooted else None)


def _star_graph(leaves: int) -> AnnotatedGraph:
    edges = frozenset((0, i) for i in range(1, leaves + 1))
    return AnnotatedGraph(n=leaves + 1, edges=edges)


def _complete_graph(n: int) -> AnnotatedGraph:
    edges = frozenset((i, j) for i in range(n) for j in range(i + 1, n))
    return AnnotatedGraph(n=n, edges=edges)


def _rainbow_path(p: int) -> AnnotatedGraph:
    edges = frozenset((i, i + 1) for i in range(p - 1))
    return AnnotatedGraph(n=p, edges=edges, coloring={i: i + 1 for i in range(p)})


def _rainbow_dust(p: int) -> AnnotatedGraph:
    return AnnotatedGraph(n=p, edges=frozenset(), coloring={i: i + 1 for i in range(p)})


# -- canonical instances ----------------------------------------------------


def rp_yes(p: int) -> ParamInstance:
    return ParamInstance(_path_graph(p), p)


def rp_no(p: int) -> ParamInstance:
    # A rootless vertex can never host a rooted path.
    return ParamInstance(AnnotatedGraph(n=1), p)


def clique_yes(tag: str, p: int) -> ParamInstance:
    if tag == "clique_tw":
        return ParamInstance((_complete_graph(p + 1), p + 1), p)
    if p == 0:
        return ParamInstance((AnnotatedGraph(n=1), 1), 0)
    if tag == "clique_maxdeg":
        return ParamInstance((_star_graph(p), 2), p)
    # Star with 2p leaves has cutwidth p and bandwidth p.
    return ParamInstance((_star_graph(2 * p), 2), p)


def clique_no(tag: str, p: int) -> ParamInstance:
    if tag == "clique_tw":
        return ParamInstance((_complete_graph(p + 1), p + 2), p)
    if p == 0:
        return ParamInstance((AnnotatedGraph(n=1), 2), 0)
    leaves = p if tag == "clique_maxdeg" else 2 * p
    # Stars are triangle-free.
    return ParamInstance((_star_graph(leaves), 3), p)


def bic_yes(p: int) -> ParamInstance:
    if p == 0:
        return ParamInstance(AnnotatedGraph(n=1, coloring={0: 1}), 0)
    coloring = {v: 1 if v < p else 2 for v in range(2 * p)}
    edges = frozenset((i, j) for i in range(p) for j in range(p, 2 * p))
    return ParamInstance(AnnotatedGraph(n=2 * p, edges=edges, coloring=coloring), p)


def bic_no(p: int) -> ParamInstance:
    if p == 0:
        # Parameter 0 is vacuously satisfiable; no graph witness exists.
        return token_instance(False, 0)
    return ParamInstance(AnnotatedGraph(n=2, coloring={0: 1, 1: 2}), p)


def mc_yes(p: int) -> ParamInstance:
    return ParamInstance(_rainbow_path(p), p)


def mc_no(p: int) -> ParamInstance:
    if p <= 1:
        # Any 1-colored graph contains a 1-color path; only a token says no.
        return token_instance(False, p)
    return ParamInstance(_rainbow_dust(p), p)


def motif_yes(p: int) -> ParamInstance:
    return ParamInstance(_rainbow_path(p), p)


def motif_no(p: int) -> ParamInstance:
    if p <= 1:
        return token_instance(False, p)
    return ParamInstance(_rainbow_dust(p), p)


def tst_yes(p: int) -> ParamInstance:
    # No terminals: the empty tree is a solution at any budget.
    return ParamInstance((AnnotatedGraph(n=1), p), p)


def tst_no(p: int) -> ParamInstance:
    if p == 0:
        return token_instance(False, 0)
    # A lone terminal can never have tree-degree 1.
    g = AnnotatedGraph(n=1, terminals=frozenset({0}))
    return ParamInstance((g, p - 1), p)


# -- rooted path ------------------------------------------------------------


def branch_rooted_path(inst: ParamInstance) -> list:
    """One branch per root neighbor: remove the root, re-root there."""
    g = inst.payload
    k = inst.k
    if g.root is None:
        return [rp_no(k - 1)]
    nbrs = sorted(neighborhood(g, g.root))
    if not nbrs:
        return [rp_no(k - 1)]
    keep = [u for u in range(g.n) if u != g.root]
    out = []
    for v in nbrs:
        sub = induced_subgraph(replace(g, root=v), keep)
        out.append(ParamInstance(sub, k - 1))
    return out


def compose_rooted_path(instances: list) -> ParamInstance:
    """Disjoint union plus a fresh root adjacent to every old root."""
    k = instances[0].k
    offset = 0
    edges = set()
    old_roots = []
    for inst in instances:
        g = inst.payload
        for (u, v) in g.edges:
            edges.add((u + offset, v + offset))
        if g.root is not None:
            old_roots.append(g.root + offset)
        offset += g.n
    new_root = offset
    for r in old_roots:
        edges.add(_norm_edge(r, new_root))
    g_out = AnnotatedGraph(n=offset + 1, edges=frozenset(edges), root=new_root)
    return ParamInstance(g_out, k + 1)


def _rp_small(inst: ParamInstance) -> ParamInstance:
    verdict = oracle_rooted_path(inst.payload, inst.k)
    return rp_yes(0) if verdict else rp_no(0)


def rooted_path_rule() -> BranchingRule:
    return BranchingRule(branch=branch_rooted_path, name="rooted-path-branch")


def rooted_path_composition() -> StrictComposition:
    return StrictComposition(
        compose=compose_rooted_path, additive_c=1, name="rooted-path-compose"
    )


def rooted_path_diminisher() -> DiminisherContract:
    return branch_and_compose(
        rooted_path_rule(),
        rooted_path_composition(),
        small_solver=_rp_small,
        name="rooted-path-diminisher",
    )


# -- clique under width parameters ------------------------------------------


def diminish_clique(inst: ParamInstance, tag: str) -> ParamInstance:
    """Union of all neighborhood graphs G[N(v)] at clique target k-1."""
    width_fn = _CLIQUE_WIDTH[tag]
    g, target = inst.payload
    if target == 0:
        return clique_yes(tag, 0)
    if g.m == 0:
        verdict = oracle_clique(g, target)
        return clique_yes(tag, 0) if verdict else clique_no(tag, 0)
    parts = [induced_subgraph(g, neighborhood(g, v)) for v in range(g.n)]
    union = disjoint_union(parts)
    return ParamInstance((union, target - 1), width_fn(union).value)


def clique_diminisher(tag: str) -> DiminisherContract:
    def transform(inst: ParamInstance) -> ParamInstance:
        return diminish_clique(inst, tag)

    def branches_of(inst: ParamInstance) -> int:
        g, target = inst.payload
        return g.n if g.m and target else 1

    return DiminisherContract(
        transform=transform,
        kind=STRICT_DECREASE,
        declared_size_poly=2,
        branches_of=branches_of,
        name=f"{tag}-diminisher",
    )


# -- balanced biclique -------------------------------------------------------


def diminish_biclique(inst: ParamInstance) -> ParamInstance:
    """Branch on ordered adjacent cross pairs, intersect the opposite
    neighborhoods, and union the branches at target k-1."""
    g = inst.payload
    k = inst.k
    if k == 0:
        return inst
    a, b = bipartition_sides(g)
    pairs = sorted((x, y) for x in a for y in b if g.has_edge(x, y))
    if not pairs:
        return bic_no(k - 1)
    parts = []
    for (x, y) in pairs:
        keep = ((neighborhood(g, y) & a) - {x}) | ((neighborhood(g, x) & b) - {y})
        parts.append(induced_subgraph(g, keep))
    return ParamInstance(disjoint_union(parts), k - 1)


def biclique_diminisher() -> DiminisherContract:
    def branches_of(inst: ParamInstance) -> int:
        return max(1, inst.payload.m)

    return DiminisherContract(
        transform=diminish_biclique,
        kind=STRICT_DECREASE,
        declared_size_poly=2,
        branches_of=branches_of,
        name="biclique-diminisher",
    )


# -- multicolored path -------------------------------------------------------


def _mc_canonical(verdict: bool, p: int) -> ParamInstance:
    return mc_yes(p) if verdict else mc_no(p)


def branch_mc_path(inst: ParamInstance) -> list:
    """Branch on ordered color-distinct path triplets (v1, v2, v3)."""
    g = inst.payload
    k = inst.k
    if k <= 2:
        # The construction needs a length-3 prefix; decide directly.
        return [_mc_canonical(oracle_mc_path(g), k - 1)]
    col = g.coloring
    adj = g.adjacency()
    out = []
    for v2 in range(g.n):
        for v1 in sorted(adj[v2]):
            for v3 in sorted(adj[v2]):
                cs = {col[v1], col[v2], col[v3]}
                if v1 == v3 or len(cs) != 3:
                    continue
                keep = [
                    w for w in range(g.n) if w in (v2, v3) or col[w] not in cs
                ]
                index = {w: i for i, w in enumerate(keep)}
                sub = induced_subgraph(g, keep)
                i2, i3 = index[v2], index[v3]
                pruned = frozenset(
                    e
                    for e in sub.edges
                    if i2 not in e or e == _norm_edge(i2, i3)
                )
                out.append(
                    ParamInstance(compact_colors(replace(sub, edges=pruned)), k - 1)
                )
    if not out:
        return [mc_no(k - 1)]
    return out


def compose_mc_path(instances: list) -> ParamInstance:
    """Disjoint union keeping colors; tokens resolve by OR."""
    k = instances[0].k
    verdicts = [token_verdict(inst) for inst in instances]
    if any(v is True for v in verdicts):
        return mc_yes(k)
    graphs = [
        inst.payload for inst, v in zip(instances, verdicts) if v is None
    ]
    if not graphs:
        return instances[0]
    return ParamInstance(disjoint_union(graphs), k)


def mc_path_rule() -> BranchingRule:
    return BranchingRule(branch=branch_mc_path, name="mc-path-branch")


def mc_path_composition() -> StrictComposition:
    return StrictComposition(
        compose=compose_mc_path, additive_c=0, name="mc-path-compose"
    )


def mc_path_diminisher() -> DiminisherContract:
    return branch_and_compose(
        mc_path_rule(), mc_path_composition(), name="mc-path-diminisher"
    )


# -- colorful motif ----------------------------------------------------------


def diminish_colorful_motif(inst: ParamInstance) -> ParamInstance:
    """Per bichromatic edge, drop both color classes and contract the edge
    into a fresh vertex; union the branches at k-1 colors."""
    g = inst.payload
    k = inst.k
    if k == 0:
        return inst
    col = g.coloring
    bichromatic = frozenset(e for e in g.edges if col[e[0]] != col[e[1]])
    g = replace(g, edges=bichromatic)
    if k == 1:
        verdict = oracle_colorful_motif(g)
        return motif_yes(0) if verdict else token_instance(False, 0)
    if not g.edges:
        return motif_no(k - 1)
    parts = []
    for (v, w) in sorted(g.edges):
        cs = {col[v], col[w]}
        keep = [u for u in range(g.n) if col[u] not in cs]
        index = {u: i for i, u in enumerate(keep)}
        sub = induced_subgraph(g, keep)
        star = frozenset(
            _norm_edge(index[u], sub.n)
            for u in (neighborhood(g, v) | neighborhood(g, w))
            if u in index
        )
        merged = AnnotatedGraph(
            n=sub.n + 1,
            edges=sub.edges | star,
            coloring={**sub.coloring, sub.n: col[v]},
        )
        parts.append(compact_colors(merged))
    return ParamInstance(disjoint_union(parts), k - 1)


def colorful_motif_diminisher() -> DiminisherContract:
    def branches_of(inst: ParamInstance) -> int:
        return max(1, inst.payload.m)

    return DiminisherContract(
        transform=diminish_colorful_motif,
        kind=STRICT_DECREASE,
        declared_size_poly=2,
        branches_of=branches_of,
        name="colorful-motif-diminisher",
    )


# -- terminal Steiner tree ---------------------------------------------------


def tst_guard_ok(g: AnnotatedGraph) -> bool:
    """All three preconditions of the generic branching step."""
    terms = set(g.terminals or ())
    if len(terms) < 3:
        return False
    if any(neighborhood(g, t) <= terms for t in terms):
        return False
    return not any(
        terms <= neighborhood(g, v) for v in range(g.n) if v not in terms
    )


def diminish_tst(inst: ParamInstance) -> ParamInstance:
    """Branch on the lowest terminal's non-terminal neighbors, cliquing the
    removed neighborhood; compose by union with terminals identified."""
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
        term_set <= neighborhood(g, v) for v in range(g.n) if v not in term_set
    ):
        # One non-terminal dominating T: answer is simply budget >= 1.
        return tst_yes(k - 1)
    t_star = terms[0]
    branch_vs = sorted(neighborhood(g, t_star) - term_set)
    t_index = {t: i for i, t in enumerate(terms)}
    n_total = len(terms)
    edges = set()
    for v_i in branch_vs:
        cliqued = make_clique(g, neighborhood(g, v_i))
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


def tst_diminisher() -> DiminisherContract:
    def branches_of(inst: ParamInstance) -> int:
        g, budget = inst.payload
        terms = sorted(g.terminals or ())
        if len(terms) < 3 or budget == 0 or not tst_guard_ok(g):
            return 1
        return len(neighborhood(g, terms[0]) - set(terms))

    return DiminisherContract(
        transform=diminish_tst,
        kind=STRICT_DECREASE,
        declared_size_poly=2,
        branches_of=branches_of,
        name="tst-diminisher",
    )


# -- terminal Steiner tree <-> Steiner tree reductions ----------------------


def reduce_tst_to_steiner(inst: ParamInstance) -> ParamInstance:
    """Replace each terminal-incident edge by a long path gadget."""
    g, k = inst.payload
    terms = sorted(g.terminals or ())
    term_set = set(terms)
    length = 2 * (k + len(terms))
    n = g.n
    edges = set()
    for (u, v) in sorted(g.edges):
        if u not in term_set and v not in term_set:
            edges.add((u, v))
            continue
        if u in term_set and v in term_set:
            # A tree with terminal leaves never uses this edge, except in
            # the two-terminal case where it decides both problems alike.
            if len(terms) == 2:
                edges.add((u, v))
            continue
        # Path of `length` edges between u and v through fresh vertices.
        chain = [u] + list(range(n, n + length - 1)) + [v]
        n += length - 1
        for a, b in zip(chain, chain[1:]):
            edges.add(_norm_edge(a, b))
    k_out = len(terms) * (2 * (k + len(terms)) - 1) + k
    g_out = AnnotatedGraph(n=n, edges=frozenset(edges), terminals=g.terminals)
    return ParamInstance((g_out, k_out), k_out + len(terms))


def reduce_steiner_to_tst(inst: ParamInstance) -> ParamInstance:
    """Hang a pendant leaf off each terminal; the leaves become the
    terminal set."""
    g, k = inst.payload
    terms = sorted(g.terminals or ())
    edges = set(g.edges)
    leaves = []
    n = g.n
    for t in terms:
        edges.add(_norm_edge(t, n))
        leaves.append(n)
        n += 1
    k_out = k + len(terms)
    g_out = AnnotatedGraph(n=n, edges=frozenset(edges), terminals=frozenset(leaves))
    return ParamInstance((g_out, k_out), k_out + len(leaves))


# -- serialization ----------------------------------------------------------

_AUX_TAGS = {"clique_cw", "clique_tw", "clique_bw", "clique_maxdeg", "tst", "steiner"}
_KLINE_TAGS = {"rooted_path", "biclique"}


def serialize_instance(tag: str, inst: ParamInstance) -> str:
    verdict = token_verdict(inst)
    if verdict is not None:
        return f"token {'yes' if verdict else 'no'}\nk {inst.k}\n"
    if tag in _AUX_TAGS:
        g, aux = inst.payload
        return serialize_graph(g) + f"k {aux}\n"
    if tag in _KLINE_TAGS:
        return serialize_graph(inst.payload) + f"k {inst.k}\n"
    return serialize_graph(inst.payload)


def parse_instance(tag: str, text: str) -> ParamInstance:
    stripped = text.strip()
    if stripped.startswith("token"):
        k_value = 0
        verdict = None
        for line in stripped.splitlines():
            parts = line.split()
            if parts[0] == "token":
                verdict = parts[1] == "yes"
            elif parts[0] == "k":
                k_value = int(parts[1])
        return token_instance(verdict, k_value)
    k_value = None
    graph_lines = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        parts = line.split("#", 1)[0].split()
        if parts and parts[0] == "k":
            try:
                k_value = int(parts[1])
            except (IndexError, ValueError) as exc:
                raise ParseError("bad k line", lineno) from exc
        else:
            graph_lines.append(line)
    g = parse_graph("\n".join(graph_lines))
    if tag in ("mc_path", "colorful_motif"):
        if g.coloring is None:
            raise ParseError(f"{tag} needs a coloring")
        return ParamInstance(g, g.num_colors())
    if k_value is None:
        raise ParseError(f"{tag} needs a 'k <value>' line")
    if tag == "rooted_path":
        if g.root is None:
            raise ParseError("rooted_path needs a root line")
        return ParamInstance(g, k_value)
    if tag == "biclique":
        bipartition_sides(g)
        return ParamInstance(g, k_value)
    if tag in _CLIQUE_WIDTH:
        return ParamInstance((g, k_value), _CLIQUE_WIDTH[tag](g).value)
    if tag in ("tst", "steiner"):
        return ParamInstance((g, k_value), k_value + len(g.terminals or ()))
    raise ParseError(f"unknown problem tag {tag!r}")


# -- generators -------------------------------------------------------------


def _gen_rooted_path(rng: random.Random) -> ParamInstance:
    g = random_graph(
        rng, rng.randint(2, 7), rng.uniform(0.1, 0.8), AnnotationSpec(with_root=True)
    )
    return ParamInstance(g, rng.randint(1, 3))


def _gen_clique(tag: str):
    width_fn = _CLIQUE_WIDTH[tag]

    def gen(rng: random.Random) -> ParamInstance:
        g = random_graph(rng, rng.randint(2, 7), rng.uniform(0.15, 0.9))
        return ParamInstance((g, rng.randint(1, 4)), width_fn(g).value)

    return gen


def _gen_biclique(rng: random.Random) -> ParamInstance:
    g = random_graph(
        rng, rng.randint(2, 7), rng.uniform(0.2, 0.9), AnnotationSpec(bipartite=True)
    )
    return ParamInstance(g, rng.randint(1, 3))


def _gen_colored(rng: random.Random) -> ParamInstance:
    k = rng.randint(1, 4)
    n = rng.randint(max(2, k), 7)
    g = random_graph(rng, n, rng.uniform(0.2, 0.8), AnnotationSpec(colors=k))
    return ParamInstance(g, k)


def _gen_tst(rng: random.Random) -> ParamInstance:
    g = random_graph(
        rng,
        rng.randint(5, 7),
        rng.uniform(0.3, 0.8),
        AnnotationSpec(terminals=3, guards=(tst_guard_ok,)),
    )
    budget = rng.randint(1, 2)
    return ParamInstance((g, budget), budget + 3)


# -- descriptors ------------------------------------------------------------


def _tok(oracle):
    def wrapped(inst: ParamInstance) -> bool:
        verdict = token_verdict(inst)
        if verdict is not None:
            return verdict
        return oracle(inst)

    return wrapped


def graph_descriptor(tag: str) -> ProblemDescriptor:
    if tag == "rooted_path":
        oracle = _tok(lambda i: oracle_rooted_path(i.payload, i.k))
        return ProblemDescriptor(
            name=tag,
            oracle=oracle,
            trivial_yes=rp_yes,
            trivial_no=rp_no,
            generate=_gen_rooted_path,
            serialize=lambda i: serialize_instance(tag, i),
        )
    if tag in _CLIQUE_WIDTH:
        oracle = _tok(lambda i: oracle_clique(i.payload[0], i.payload[1]))
        return ProblemDescriptor(
            name=tag,
            oracle=oracle,
            trivial_yes=lambda p, t=tag: clique_yes(t, p),
            trivial_no=lambda p, t=tag: clique_no(t, p),
            generate=_gen_clique(tag),
            serialize=lambda i, t=tag: serialize_instance(t, i),
        )
    if tag == "biclique":
        oracle = _tok(lambda i: oracle_biclique(i.payload, i.k))
        return ProblemDescriptor(
            name=tag,
            oracle=oracle,
            trivial_yes=bic_yes,
            trivial_no=bic_no,
            generate=_gen_biclique,
            serialize=lambda i: serialize_instance(tag, i),
        )
    if tag == "mc_path":
        oracle = _tok(lambda i: oracle_mc_path(i.payload, i.k))
        return ProblemDescriptor(
            name=tag,
            oracle=oracle,
            trivial_yes=mc_yes,
            trivial_no=mc_no,
            generate=_gen_colored,
            serialize=lambda i: serialize_instance(tag, i),
        )
    if tag == "colorful_motif":
        oracle = _tok(lambda i: oracle_colorful_motif(i.payload, i.k))
        return ProblemDescriptor(
            name=tag,
            oracle=oracle,
            trivial_yes=motif_yes,
            trivial_no=motif_no,
            generate=_gen_colored,
            serialize=lambda i: serialize_instance(tag, i),
        )
    if tag == "tst":
        oracle = _tok(lambda i: oracle_tst(i.payload[0], i.payload[1]))
        return ProblemDescriptor(
            name=tag,
            oracle=oracle,
            trivial_yes=tst_yes,
            trivial_no=tst_no,
            generate=_gen_tst,
            serialize=lambda i: serialize_instance(tag, i),
        )
    if tag == "steiner":
        oracle = _tok(lambda i: oracle_steiner_tree(i.payload[0], i.payload[1]))
        return ProblemDescriptor(
            name=tag,
            oracle=oracle,
            trivial_yes=tst_yes,
            trivial_no=tst_no,
            generate=_gen_tst,
            serialize=lambda i: serialize_instance(tag, i),
        )
    raise GuardError(f"no descriptor for tag {tag!r}")


def graph_diminisher(tag: str) -> DiminisherContract:
    if tag == "rooted_path":
        return rooted_path_diminisher()
    if tag in _CLIQUE_WIDTH:
        return clique_diminisher(tag)
    if tag == "biclique":
        return biclique_diminisher()
    if tag == "mc_path":
        return mc_path_diminisher()
    if tag == "colorful_motif":
        return colorful_motif_diminisher()
    if tag == "tst":
        return tst_diminisher()
    raise GuardError(f"no diminisher for tag {tag!r}")
