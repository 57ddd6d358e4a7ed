"""Shared corpora and brute-force oracles for the test suite.

Nothing here calls into the search code under test except the basic Graph
type, is_isomorphic (for deduplication) and line_graph.
"""

import itertools
import random
from functools import lru_cache

from linegraph.catalog import atlas
from linegraph.graph import Graph, disjoint_union, is_isomorphic, line_graph


def _invariant(g):
    tri = [0] * g.n
    for u, v in g.edges:
        for w in g.adj[u] & g.adj[v]:
            tri[w] += 1
    return (g.n, g.m, tuple(sorted((g.degree(v), tri[v], tuple(sorted(g.degree(w) for w in g.adj[v])))
                                   for v in range(g.n))))


class IsoClasses:
    """Collects graphs up to isomorphism."""

    def __init__(self):
        self.buckets = {}
        self.graphs = []

    def add(self, g):
        bucket = self.buckets.setdefault(_invariant(g), [])
        for h in bucket:
            if is_isomorphic(g, h) is not None:
                return False
        bucket.append(g)
        self.graphs.append(g)
        return True


@lru_cache(maxsize=None)
def connected_roots(max_edges):
    """Connected graphs with 1..max_edges edges, one per isomorphism class,
    as a tuple indexed by edge count (entry 0 is empty).

    Grown by adding an edge or a pendant edge; every connected graph arises
    that way because removing a cycle edge or a leaf edge keeps it connected.
    """
    levels = [[], [Graph(2, [(0, 1)])]]
    for m in range(2, max_edges + 1):
        seen = IsoClasses()
        for g in levels[-1]:
            for u in range(g.n):
                seen.add(Graph(g.n + 1, list(g.edges) + [(u, g.n)]))
                for v in range(u + 1, g.n):
                    if not g.has_edge(u, v):
                        seen.add(Graph(g.n, list(g.edges) + [(u, v)]))
        levels.append(seen.graphs)
    return tuple(tuple(level) for level in levels)


def _partitions(total, largest):
    if total == 0:
        yield []
        return
    for part in range(min(total, largest), 0, -1):
        for rest in _partitions(total - part, part):
            yield [part] + rest


@lru_cache(maxsize=None)
def roots_without_isolated(max_edges):
    """Graphs with 1..max_edges edges and no isolated vertices, one per
    isomorphism class (disjoint unions of connected roots)."""
    levels = connected_roots(max_edges)
    out = []
    for m in range(1, max_edges + 1):
        for parts in _partitions(m, m):
            # multisets of components per part size
            groups = {}
            for p in parts:
                groups[p] = groups.get(p, 0) + 1
            choices = [list(itertools.combinations_with_replacement(levels[p], c)) for p, c in groups.items()]
            for combo in itertools.product(*choices):
                comps = [g for chunk in combo for g in chunk]
                out.append(disjoint_union(comps))
    return tuple(out)


@lru_cache(maxsize=None)
def line_graphs_upto(max_vertices):
    """Every line graph with 1..max_vertices vertices up to isomorphism
    (possibly with repeats, e.g. L(K3) = L(K1,3))."""
    return tuple(line_graph(g)[0] for g in roots_without_isolated(max_vertices))


@lru_cache(maxsize=None)
def connected_atlas(max_n):
    return tuple(g for g in atlas(max_n) if _connected(g))


def _connected(g):
    if g.n == 0:
        return False
    seen = {0}
    stack = [0]
    while stack:
        x = stack.pop()
        for y in g.adj[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == g.n


def random_permutation(n, rng):
    perm = list(range(n))
    rng.shuffle(perm)
    return perm


def random_graph(n, p, rng):
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


# ------------------------------------------------------------------ oracles


def all_cliques(g):
    """Every clique with at least 2 vertices, as sorted tuples."""
    out = []
    for r in range(2, g.n + 1):
        for vs in itertools.combinations(range(g.n), r):
            if all(g.has_edge(a, b) for a, b in itertools.combinations(vs, 2)):
                out.append(vs)
    return out


def oracle_relations(g):
    """All line graph relations by exact cover of E(g) with clique edge sets,
    keeping covers where no vertex meets more than two cliques. Returned as a
    set of frozensets of frozensets of edges."""
    cliques = all_cliques(g)
    by_edge = {e: [] for e in g.edges}
    for c in cliques:
        for e in itertools.combinations(c, 2):
            by_edge[e].append(c)
    results = set()
    chosen = []
    load = [0] * g.n

    def rec(covered):
        rest = [e for e in g.edges if e not in covered]
        if not rest:
            results.add(frozenset(frozenset(itertools.combinations(c, 2)) for c in chosen))
            return
        e = rest[0]
        for c in by_edge[e]:
            ce = set(itertools.combinations(c, 2))
            if ce & covered or any(load[v] == 2 for v in c):
                continue
            chosen.append(c)
            for v in c:
                load[v] += 1
            rec(covered | ce)
            for v in c:
                load[v] -= 1
            chosen.pop()

    rec(frozenset())
    return results


def oracle_decompositions(g):
    """All decompositions straight from the definition: a relation's cliques
    plus the singletons needed so each vertex is in exactly two sets (one if
    isolated). Returned as a set of frozensets of tuples."""
    out = set()
    for rel in oracle_relations(g):
        sets = set()
        load = [0] * g.n
        for cls in rel:
            vs = tuple(sorted({x for e in cls for x in e}))
            sets.add(vs)
            for v in vs:
                load[v] += 1
        ok = True
        for v in range(g.n):
            need = (1 if g.degree(v) == 0 else 2) - load[v]
            if need == 1:
                sets.add((v,))
            elif need != 0:
                ok = False
        if ok:
            out.add(frozenset(sets))
    return out


def brute_induced_copy(g, h):
    for vs in itertools.permutations(range(g.n), h.n):
        if all(g.has_edge(vs[a], vs[b]) == h.has_edge(a, b)
               for a in range(h.n) for b in range(a + 1, h.n)):
            return dict(enumerate(vs))
    return None


def rng(seed=20240601):
    return random.Random(seed)


# Lines reported by tests/test_acceptance.py, echoed in the terminal summary.
ACCEPTANCE_LINES = []
