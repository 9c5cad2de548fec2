"""Undirected graph model, file format, exact width parameters, oracles.

Vertices are the integers 0..n-1.  Colors are 1-indexed.  Width
computations are exhaustive and refuse inputs above their configured cap
instead of approximating; all decision oracles are exact enumerations
intended for desk-scale ground truth.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field, replace
from functools import lru_cache
from itertools import combinations, permutations
from typing import Dict, FrozenSet, Optional, Tuple

from .errors import CapExceeded, GuardError, ParseError

Edge = Tuple[int, int]

DEFAULT_WIDTH_CAP = 10
DEFAULT_ORACLE_CAP = 12


def _norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class AnnotatedGraph:
    """Undirected graph with optional coloring, root, and terminal set."""

    n: int
    edges: FrozenSet[Edge] = frozenset()
    coloring: Optional[Dict[int, int]] = None
    root: Optional[int] = None
    terminals: Optional[FrozenSet[int]] = None

    def __post_init__(self):
        for (u, v) in self.edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < v < self.n):
                raise ValueError(f"edge {(u, v)} out of range or unnormalized")
        if self.coloring is not None:
            for v, c in self.coloring.items():
                if not 0 <= v < self.n:
                    raise ValueError(f"colored vertex {v} out of range")
                if c < 1:
                    raise ValueError(f"color {c} is not 1-indexed")
            if set(self.coloring) != set(range(self.n)):
                raise ValueError("coloring must assign every vertex a color")
        if self.root is not None and not 0 <= self.root < self.n:
            raise ValueError(f"root {self.root} out of range")
        if self.terminals is not None:
            for t in self.terminals:
                if not 0 <= t < self.n:
                    raise ValueError(f"terminal {t} out of range")

    # -- basic structure ----------------------------------------------------

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    def has_edge(self, u: int, v: int) -> bool:
        return _norm_edge(u, v) in self.edges

    def adjacency(self) -> Dict[int, set]:
        adj = {v: set() for v in range(self.n)}
        for (u, v) in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def num_colors(self) -> int:
        if self.coloring is None:
            return 0
        return len(set(self.coloring.values()))

    def color_classes(self) -> Dict[int, set]:
        classes: Dict[int, set] = {}
        for v, c in (self.coloring or {}).items():
            classes.setdefault(c, set()).add(v)
        return classes

    def components(self) -> list:
        adj = self.adjacency()
        seen = set()
        comps = []
        for s in range(self.n):
            if s in seen:
                continue
            stack = [s]
            comp = set()
            while stack:
                v = stack.pop()
                if v in comp:
                    continue
                comp.add(v)
                stack.extend(adj[v] - comp)
            seen |= comp
            comps.append(frozenset(comp))
        return comps


def neighborhood(g: AnnotatedGraph, v: int) -> frozenset:
    """Open neighborhood of v."""
    return frozenset(u for e in g.edges if v in e for u in e if u != v)


def induced_subgraph(g: AnnotatedGraph, keep) -> AnnotatedGraph:
    """Subgraph induced on a vertex subset, vertices renumbered by old order.

    Annotations restrict along; colors keep their original values (use
    compact_colors to renumber them).
    """
    keep = sorted(set(keep))
    index = {v: i for i, v in enumerate(keep)}
    edges = frozenset(
        _norm_edge(index[u], index[v])
        for (u, v) in g.edges
        if u in index and v in index
    )
    coloring = None
    if g.coloring is not None:
        coloring = {index[v]: g.coloring[v] for v in keep}
    root = index.get(g.root) if g.root is not None else None
    terminals = None
    if g.terminals is not None:
        terminals = frozenset(index[t] for t in g.terminals if t in index)
    return AnnotatedGraph(
        n=len(keep), edges=edges, coloring=coloring, root=root, terminals=terminals
    )


def make_clique(g: AnnotatedGraph, among) -> AnnotatedGraph:
    """Add every missing edge within the given vertex subset."""
    among = sorted(set(among))
    new_edges = set(g.edges)
    for u, v in combinations(among, 2):
        new_edges.add(_norm_edge(u, v))
    return replace(g, edges=frozenset(new_edges))


def disjoint_union(graphs) -> AnnotatedGraph:
    """Disjoint union; vertex sets shifted and concatenated in list order."""
    graphs = list(graphs)
    if not graphs:
        raise ValueError("disjoint union of an empty list")
    colored = [g.coloring is not None for g in graphs]
    if any(colored) and not all(colored):
        raise ValueError("cannot union colored with uncolored graphs")
    has_terms = [g.terminals is not None for g in graphs]
    if any(has_terms) and not all(has_terms):
        raise ValueError("cannot union terminal-annotated with plain graphs")
    offset = 0
    n = 0
    edges = set()
    coloring: Optional[Dict[int, int]] = {} if all(colored) and graphs else None
    terminals = set() if all(has_terms) and graphs else None
    for g in graphs:
        for (u, v) in g.edges:
            edges.add((u + offset, v + offset))
        if coloring is not None:
            for v, c in g.coloring.items():
                coloring[v + offset] = c
        if terminals is not None:
            terminals |= {t + offset for t in g.terminals}
        offset += g.n
        n = offset
    return AnnotatedGraph(
        n=n,
        edges=frozenset(edges),
        coloring=coloring,
        root=None,
        terminals=frozenset(terminals) if terminals is not None else None,
    )


def compact_colors(g: AnnotatedGraph) -> AnnotatedGraph:
    """Remap colors order-preservingly onto {1..#distinct}."""
    if g.coloring is None:
        raise GuardError("compact_colors needs a coloring")
    palette = sorted(set(g.coloring.values()))
    remap = {c: i + 1 for i, c in enumerate(palette)}
    return replace(g, coloring={v: remap[c] for v, c in g.coloring.items()})


# -- file format ------------------------------------------------------------


def parse_graph(text: str) -> AnnotatedGraph:
    """Parse the line-based graph format.

    Header ``p graph <n> <m>``; then ``e <u> <v>`` edges, ``c <v> <color>``
    colors, ``r <v>`` root, ``t <v>`` terminals; ``#`` starts a comment.
    """
    n = None
    m_declared = None
    edges = set()
    coloring: Dict[int, int] = {}
    root = None
    terminals = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        tag = parts[0]
        try:
            if tag == "p":
                if parts[1] != "graph" or len(parts) != 4:
                    raise ParseError("header must be 'p graph <n> <m>'", lineno)
                n, m_declared = int(parts[2]), int(parts[3])
            elif tag == "e":
                u, v = int(parts[1]), int(parts[2])
                if n is None:
                    raise ParseError("edge before header", lineno)
                if not (0 <= u < n and 0 <= v < n) or u == v:
                    raise ParseError(f"bad edge {u} {v}", lineno)
                e = _norm_edge(u, v)
                if e in edges:
                    raise ParseError(f"duplicate edge {u} {v}", lineno)
                edges.add(e)
            elif tag == "c":
                coloring[int(parts[1])] = int(parts[2])
            elif tag == "r":
                root = int(parts[1])
            elif tag == "t":
                terminals.add(int(parts[1]))
            else:
                raise ParseError(f"unknown line tag {tag!r}", lineno)
        except (IndexError, ValueError) as exc:
            raise ParseError(str(exc), lineno) from exc
    if n is None:
        raise ParseError("missing 'p graph' header")
    if m_declared is not None and m_declared != len(edges):
        raise ParseError(f"header declares {m_declared} edges, found {len(edges)}")
    try:
        return AnnotatedGraph(
            n=n,
            edges=frozenset(edges),
            coloring=coloring or None,
            root=root,
            terminals=frozenset(terminals) if terminals else None,
        )
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def serialize_graph(g: AnnotatedGraph) -> str:
    lines = [f"p graph {g.n} {g.m}"]
    for (u, v) in sorted(g.edges):
        lines.append(f"e {u} {v}")
    if g.coloring is not None:
        for v in sorted(g.coloring):
            lines.append(f"c {v} {g.coloring[v]}")
    if g.root is not None:
        lines.append(f"r {g.root}")
    if g.terminals is not None:
        for t in sorted(g.terminals):
            lines.append(f"t {t}")
    return "\n".join(lines) + "\n"


# -- exact width parameters -------------------------------------------------


@dataclass(frozen=True)
class WidthValue:
    which: str
    value: int


def max_degree(g: AnnotatedGraph) -> WidthValue:
    value = max((g.degree(v) for v in g.vertices()), default=0)
    return WidthValue("max_degree", value)


def _component_edges(comp, edges):
    return [e for e in edges if e[0] in comp]


def _cutwidth_component(vertices, edges) -> int:
    """Minimum over layouts of the largest cut, via memoized prefix search.

    A prefix set determines its cut (edges with exactly one endpoint
    placed), so the search over orderings memoizes on the placed set.
    """
    verts = sorted(vertices)
    idx = {v: i for i, v in enumerate(verts)}
    nverts = len(verts)
    adj_bits = [0] * nverts
    for (u, v) in edges:
        adj_bits[idx[u]] |= 1 << idx[v]
        adj_bits[idx[v]] |= 1 << idx[u]
    full = (1 << nverts) - 1

    def cut(mask: int) -> int:
        total = 0
        rest = mask
        while rest:
            b = rest & -rest
            i = b.bit_length() - 1
            total += bin(adj_bits[i] & ~mask).count("1")
            rest ^= b
        return total

    @lru_cache(maxsize=None)
    def best(mask: int) -> int:
        if mask == 0:
            return 0
        value = None
        for i in range(nverts):
            b = 1 << i
            if mask & b:
                prev = mask ^ b
                cand = max(best(prev), cut(mask))
                if value is None or cand < value:
                    value = cand
        return value

    result = best(full)
    best.cache_clear()
    return result


def exact_cutwidth(g: AnnotatedGraph, cap: int = DEFAULT_WIDTH_CAP) -> WidthValue:
    value = 0
    for comp in g.components():
        if len(comp) > cap:
            raise CapExceeded(
                f"cutwidth component size {len(comp)} exceeds cap {cap}"
            )
        value = max(value, _cutwidth_component(comp, _component_edges(comp, g.edges)))
    return WidthValue("cutwidth", value)


def _bandwidth_component(vertices, edges) -> int:
    """Branch-and-bound over vertex orderings, minimizing max |pos(u)-pos(v)|."""
    verts = sorted(vertices)
    nverts = len(verts)
    if nverts <= 1:
        return 0
    idx = {v: i for i, v in enumerate(verts)}
    nbrs = [[] for _ in range(nverts)]
    for (u, v) in edges:
        nbrs[idx[u]].append(idx[v])
        nbrs[idx[v]].append(idx[u])
    best = nverts - 1  # identity layout upper bound

    pos = [-1] * nverts

    def place(slot: int, width: int):
        nonlocal best
        if width >= best:
            return
        if slot == nverts:
            best = width
            return
        for v in range(nverts):
            if pos[v] >= 0:
                continue
            w = width
            ok = True
            for u in nbrs[v]:
                if pos[u] >= 0:
                    d = slot - pos[u]
                    if d >= best:
                        ok = False
                        break
                    if d > w:
                        w = d
            if ok:
                pos[v] = slot
                place(slot + 1, w)
                pos[v] = -1

    place(0, 0)
    return best


def exact_bandwidth(g: AnnotatedGraph, cap: int = DEFAULT_WIDTH_CAP) -> WidthValue:
    # Components laid out independently; the graph's bandwidth is their max.
    value = 0
    for comp in g.components():
        if len(comp) > cap:
            raise CapExceeded(
                f"bandwidth component size {len(comp)} exceeds cap {cap}"
            )
        value = max(value, _bandwidth_component(comp, _component_edges(comp, g.edges)))
    return WidthValue("bandwidth", value)


def _treewidth_component(vertices, edges) -> int:
    """Minimum over elimination orderings of the maximum fill degree.

    The fill degree of v at elimination time depends only on the set of
    still-present vertices (neighbors reachable through eliminated ones),
    so the search memoizes on that set.
    """
    verts = sorted(vertices)
    nverts = len(verts)
    if nverts <= 1:
        return 0
    idx = {v: i for i, v in enumerate(verts)}
    adj_bits = [0] * nverts
    for (u, v) in edges:
        adj_bits[idx[u]] |= 1 << idx[v]
        adj_bits[idx[v]] |= 1 << idx[u]
    full = (1 << nverts) - 1

    def fill_degree(v: int, present: int) -> int:
        # Neighbors of v in the graph where eliminated vertices are contracted.
        eliminated = full & ~present
        seen = 1 << v
        frontier = adj_bits[v] & ~seen
        reach = 0
        while frontier:
            reach |= frontier & present
            step = frontier & eliminated
            seen |= frontier
            nxt = 0
            rest = step
            while rest:
                b = rest & -rest
                nxt |= adj_bits[b.bit_length() - 1]
                rest ^= b
            frontier = nxt & ~seen
        return bin(reach).count("1")

    @lru_cache(maxsize=None)
    def best(present: int) -> int:
        if bin(present).count("1") <= 1:
            return 0
        value = None
        rest = present
        while rest:
            b = rest & -rest
            v = b.bit_length() - 1
            rest ^= b
            cand = max(fill_degree(v, present), best(present ^ b))
            if value is None or cand < value:
                value = cand
        return value

    result = best(full)
    best.cache_clear()
    return result


def exact_treewidth(g: AnnotatedGraph, cap: int = DEFAULT_WIDTH_CAP) -> WidthValue:
    value = 0
    for comp in g.components():
        if len(comp) > cap:
            raise CapExceeded(
                f"treewidth component size {len(comp)} exceeds cap {cap}"
            )
        value = max(value, _treewidth_component(comp, _component_edges(comp, g.edges)))
    return WidthValue("treewidth", value)


WIDTH_FUNCTIONS = {
    "max_degree": max_degree,
    "cutwidth": exact_cutwidth,
    "bandwidth": exact_bandwidth,
    "treewidth": exact_treewidth,
}


# -- decision oracles -------------------------------------------------------


def _check_cap(g: AnnotatedGraph, cap: int, what: str) -> None:
    if g.n > cap:
        raise CapExceeded(f"{what} oracle refuses n={g.n} > cap {cap}")


def oracle_clique(g: AnnotatedGraph, k: int, cap: int = DEFAULT_ORACLE_CAP) -> bool:
    if k <= 1:
        return k <= 0 or g.n >= 1
    # A clique lives inside one component.
    for comp in g.components():
        if len(comp) < k:
            continue
        sub = induced_subgraph(g, comp)
        _check_cap(sub, cap, "clique")
        for cand in combinations(range(sub.n), k):
            if all(sub.has_edge(u, v) for u, v in combinations(cand, 2)):
                return True
    return False


def bipartition_sides(g: AnnotatedGraph) -> Tuple[frozenset, frozenset]:
    """Sides of a bipartite graph declared by a 2-coloring (1 = A, 2 = B)."""
    if g.coloring is None or not set(g.coloring.values()) <= {1, 2}:
        raise GuardError("bipartite sides must be declared by colors 1 and 2")
    a = frozenset(v for v, c in g.coloring.items() if c == 1)
    b = frozenset(v for v, c in g.coloring.items() if c == 2)
    for (u, v) in g.edges:
        if (u in a) == (v in a):
            raise GuardError(f"edge {(u, v)} is not between the two sides")
    return a, b


def oracle_biclique(g: AnnotatedGraph, k: int, cap: int = DEFAULT_ORACLE_CAP) -> bool:
    if k <= 0:
        return True
    bipartition_sides(g)  # validate the declared sides
    # A biclique with k >= 1 is connected, so search each component.
    for comp in g.components():
        if len(comp) < 2 * k:
            continue
        sub = induced_subgraph(g, comp)
        _check_cap(sub, cap, "biclique")
        a, b = bipartition_sides(sub)
        if len(a) < k or len(b) < k:
            continue
        for left in combinations(sorted(a), k):
            for right in combinations(sorted(b), k):
                if all(sub.has_edge(u, v) for u in left for v in right):
                    return True
    return False


def oracle_rooted_path(g: AnnotatedGraph, k: int, cap: int = 512) -> bool:
    """Is there a simple path with at least k edges starting at the root?"""
    if g.root is None:
        return False
    _check_cap(g, cap, "rooted path")
    if k <= 0:
        return True
    adj = g.adjacency()

    def extend(v: int, used: set, length: int) -> bool:
        if length >= k:
            return True
        for u in sorted(adj[v] - used):
            if extend(u, used | {u}, length + 1):
                return True
        return False

    return extend(g.root, {g.root}, 0)


def oracle_mc_path(g: AnnotatedGraph, k: Optional[int] = None,
                   cap: int = DEFAULT_ORACLE_CAP) -> bool:
    """Is there a simple path using each of the k colors exactly once?

    ``k`` defaults to the number of declared colors; a 0-color instance is
    vacuously a yes-instance (the empty path).
    """
    if k is None:
        k = g.num_colors()
    if k == 0:
        return True
    if g.coloring is None:
        return False
    palette = sorted(set(g.coloring.values()))
    if len(palette) != k:
        # Some color has no vertex at all: no witness possible.
        return False
    for comp in g.components():
        sub = induced_subgraph(g, comp)
        _check_cap(sub, cap, "multicolored path")
        adj = sub.adjacency()

        def extend(v: int, used_colors: frozenset, used: set) -> bool:
            if len(used_colors) == k:
                return True
            for u in sorted(adj[v] - used):
                c = sub.coloring[u]
                if c in used_colors:
                    continue
                if extend(u, used_colors | {c}, used | {u}):
                    return True
            return False

        for start in range(sub.n):
            if extend(start, frozenset([sub.coloring[start]]), {start}):
                return True
    return False


def oracle_colorful_motif(g: AnnotatedGraph, k: Optional[int] = None,
                          cap: int = DEFAULT_ORACLE_CAP) -> bool:
    """Is there a connected subgraph with exactly one vertex of each color?"""
    if k is None:
        k = g.num_colors()
    if k == 0:
        return True
    if g.coloring is None:
        return False
    for comp in g.components():
        sub = induced_subgraph(g, comp)
        _check_cap(sub, cap, "colorful motif")
        classes = sub.color_classes()
        if len(classes) != k:
            continue
        adj = sub.adjacency()
        ordered = [sorted(vs) for c, vs in sorted(classes.items())]

        def connected(chosen) -> bool:
            chosen = set(chosen)
            start = next(iter(chosen))
            seen = {start}
            stack = [start]
            while stack:
                v = stack.pop()
                for u in adj[v] & chosen:
                    if u not in seen:
                        seen.add(u)
                        stack.append(u)
            return seen == chosen

        def pick(i: int, chosen: tuple) -> bool:
            if i == len(ordered):
                return connected(chosen)
            for v in ordered[i]:
                if pick(i + 1, chosen + (v,)):
                    return True
            return False

        if pick(0, ()):
            return True
    return False


_INF = 10 ** 9


def _min_connected_cover(n: int, adj: Dict[int, set], groups) -> int:
    """Fewest vertices of a connected subgraph meeting every group.

    Group-Steiner dynamic program over (group subset, anchor vertex):
    merge two covers at a shared anchor, or grow a cover along an edge.
    Returns a large sentinel when no cover exists.
    """
    groups = [set(gset) for gset in groups]
    if not groups:
        return 0
    if any(not gset for gset in groups) or n == 0:
        return _INF
    full = (1 << len(groups)) - 1
    cover_mask = [0] * n
    for i, gset in enumerate(groups):
        for v in gset:
            cover_mask[v] |= 1 << i
    dp = [[_INF] * n for _ in range(full + 1)]
    for v in range(n):
        mask = cover_mask[v]
        sub = mask
        while True:
            dp[sub][v] = 1
            if sub == 0:
                break
            sub = (sub - 1) & mask
    for s in range(1, full + 1):
        row = dp[s]
        for v in range(n):
            sub = (s - 1) & s
            while sub:
                a, b = dp[sub][v], dp[s ^ sub][v]
                if a < _INF and b < _INF and a + b - 1 < row[v]:
                    row[v] = a + b - 1
                sub = (sub - 1) & s
        # Edge relaxation to a fixpoint (unit growth per added vertex).
        changed = True
        while changed:
            changed = False
            for v in range(n):
                base = row[v]
                if base >= _INF:
                    continue
                for u in adj[v]:
                    if base + 1 < row[u]:
                        row[u] = base + 1
                        changed = True
    return min(dp[full])


def oracle_tst(g: AnnotatedGraph, k: int, cap: int = 64) -> bool:
    """Terminal Steiner tree: a tree on <= k+|T| vertices containing the
    terminals, each with tree-degree exactly 1."""
    _check_cap(g, cap, "terminal Steiner tree")
    terms = sorted(g.terminals or ())
    budget = k + len(terms)
    if not terms:
        # The empty tree covers an empty terminal set.
        return True
    if len(terms) == 2 and g.has_edge(*terms) and budget >= 2:
        return True
    inner_allowed = budget - len(terms)
    if inner_allowed <= 0:
        return False
    others = sorted(set(g.vertices()) - set(terms))
    index = {v: i for i, v in enumerate(others)}
    adj_full = g.adjacency()
    adj = {
        index[v]: {index[u] for u in adj_full[v] if u in index} for v in others
    }
    groups = [{index[u] for u in adj_full[t] if u in index} for t in terms]
    return _min_connected_cover(len(others), adj, groups) <= inner_allowed


def oracle_steiner_tree(g: AnnotatedGraph, k: int, cap: int = 64) -> bool:
    """Steiner tree: a connected subgraph containing all terminals on
    <= k+|T| vertices."""
    _check_cap(g, cap, "Steiner tree")
    terms = sorted(g.terminals or ())
    budget = k + len(terms)
    if not terms:
        return True
    groups = [{t} for t in terms]
    return _min_connected_cover(g.n, g.adjacency(), groups) <= budget


# -- random generation ------------------------------------------------------


@dataclass(frozen=True)
class AnnotationSpec:
    """What annotations a random graph must carry, plus guard predicates."""

    colors: Optional[int] = None
    with_root: bool = False
    terminals: int = 0
    bipartite: bool = False
    guards: tuple = ()
    max_retries: int = 2000


def random_graph(
    seed_or_rng,
    n: int,
    edge_prob: float,
    spec: AnnotationSpec = AnnotationSpec(),
) -> AnnotatedGraph:
    """Deterministic random graph satisfying all guard predicates.

    Accepts either a seed or an existing random.Random; rejection-samples
    until every guard holds, failing explicitly after the retry budget.
    """
    if n < 1:
        raise ValueError("random graph needs n >= 1")
    if not 0.0 <= edge_prob <= 1.0:
        raise ValueError("edge probability must lie in [0, 1]")
    rng = seed_or_rng if isinstance(seed_or_rng, random.Random) else random.Random(seed_or_rng)
    for _ in range(spec.max_retries):
        coloring = None
        if spec.bipartite:
            side = {v: rng.choice((1, 2)) for v in range(n)}
            # Keep both sides inhabited whenever possible.
            if n >= 2:
                side[0], side[1] = 1, 2
            coloring = side
            edges = frozenset(
                _norm_edge(u, v)
                for u, v in combinations(range(n), 2)
                if side[u] != side[v] and rng.random() < edge_prob
            )
        else:
            edges = frozenset(
                _norm_edge(u, v)
                for u, v in combinations(range(n), 2)
                if rng.random() < edge_prob
            )
            if spec.colors:
                coloring = {v: rng.randint(1, spec.colors) for v in range(n)}
                # Force every color to appear when there is room.
                if n >= spec.colors:
                    sample = rng.sample(range(n), spec.colors)
                    for c, v in enumerate(sample, start=1):
                        coloring[v] = c
        root = rng.randrange(n) if spec.with_root else None
        terminals = None
        if spec.terminals:
            if spec.terminals > n:
                continue
            terminals = frozenset(rng.sample(range(n), spec.terminals))
        g = AnnotatedGraph(
            n=n, edges=edges, coloring=coloring, root=root, terminals=terminals
        )
        if all(guard(g) for guard in spec.guards):
            return g
    raise GuardError(
        f"could not satisfy guards within {spec.max_retries} samples"
    )


# -- reference implementations (used as independent cross-checks) -----------


def naive_cutwidth(g: AnnotatedGraph) -> int:
    """Plain enumeration of all layouts, no pruning. Small n only."""
    if g.n > 8:
        raise CapExceeded("naive cutwidth is for n <= 8")
    if g.n <= 1:
        return 0
    best = None
    for perm in permutations(range(g.n)):
        pos = {v: i for i, v in enumerate(perm)}
        worst = 0
        for gap in range(1, g.n):
            cut = sum(
                1
                for (u, v) in g.edges
                if min(pos[u], pos[v]) < gap <= max(pos[u], pos[v])
            )
            worst = max(worst, cut)
        if best is None or worst < best:
            best = worst
    return best


def naive_bandwidth(g: AnnotatedGraph) -> int:
    if g.n > 8:
        raise CapExceeded("naive bandwidth is for n <= 8")
    if g.n <= 1:
        return 0
    best = None
    for perm in permutations(range(g.n)):
        pos = {v: i for i, v in enumerate(perm)}
        worst = max((abs(pos[u] - pos[v]) for (u, v) in g.edges), default=0)
        if best is None or worst < best:
            best = worst
    return best


def naive_treewidth(g: AnnotatedGraph) -> int:
    """Eliminate in every order, materializing fill edges explicitly."""
    if g.n > 8:
        raise CapExceeded("naive treewidth is for n <= 8")
    if g.n <= 1:
        return 0
    best = None
    for perm in permutations(range(g.n)):
        adj = {v: set(ns) for v, ns in g.adjacency().items()}
        worst = 0
        for v in perm:
            nbrs = adj[v]
            worst = max(worst, len(nbrs))
            for a in nbrs:
                adj[a] |= nbrs - {a}
                adj[a].discard(v)
            del adj[v]
        if best is None or worst < best:
            best = worst
    return best
