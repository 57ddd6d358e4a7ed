"""Line graph decompositions (Krausz clique partitions) and line graph relations.

A decomposition of ``L`` is a family of vertex sets, each inducing a clique,
whose clique edge sets partition ``E(L)``, with every non-isolated vertex in
exactly two sets and every isolated vertex in exactly one. A line graph
relation is the partition of ``E(L)`` into the edge sets of those cliques.
The two are in bijection: singleton sets are forced by how many relation
classes meet each vertex.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from .catalog import singular_graphs, singular_names
from .errors import CapExceeded, InvalidStructure, NotALineGraph, resolve_cap
from .graph import Edge, Graph, connected_components, induced_subgraph, is_isomorphic, normalize_edge

DEFAULT_ENUMERATE_CAP = 16
DEFAULT_COMPONENT_CAP = 24

VIOLATION_KINDS = (
    "not_clique",
    "edge_overlap",
    "edge_uncovered",
    "vertex_cardinality",
    "not_equivalence",
    "too_many_classes_at_vertex",
)


@dataclass(frozen=True)
class Decomposition:
    """A collection of distinct nonempty vertex sets, stored sorted."""

    sets: Tuple[Tuple[int, ...], ...]

    def __init__(self, sets: Iterable[Iterable[int]]):
        norm = set()
        for s in sets:
            t = tuple(sorted(set(s)))
            if not t:
                raise ValueError("decomposition sets must be nonempty")
            norm.add(t)
        object.__setattr__(self, "sets", tuple(sorted(norm)))

    def __iter__(self):
        return iter(self.sets)

    def __len__(self):
        return len(self.sets)

    def to_text(self) -> str:
        return "".join(" ".join(map(str, s)) + "\n" for s in self.sets)


@dataclass(frozen=True)
class LineGraphRelation:
    """Equivalence on edges given by its classes.

    Classes are stored sorted, each as a sorted tuple of normalized edges, so
    label ``i`` is the class with the ``i``-th smallest least edge. Nothing is
    validated here; :func:`validate_relation` does that against a host graph.
    """

    classes: Tuple[Tuple[Edge, ...], ...]

    def __init__(self, classes: Iterable[Iterable[Sequence[int]]]):
        norm = [tuple(sorted({normalize_edge(*e) for e in c})) for c in classes]
        norm = [c for c in norm if c]
        object.__setattr__(self, "classes", tuple(sorted(norm)))

    @classmethod
    def from_labels(cls, labels: Dict[Sequence[int], object]) -> "LineGraphRelation":
        groups: Dict[object, list] = {}
        for e, lab in labels.items():
            groups.setdefault(lab, []).append(e)
        return cls(groups.values())

    @cached_property
    def class_of(self) -> Dict[Edge, int]:
        out = {}
        for i, c in enumerate(self.classes):
            for e in c:
                out.setdefault(e, i)
        return out

    def __len__(self):
        return len(self.classes)

    def to_text(self) -> str:
        return "".join(" ".join(f"{u}-{v}" for u, v in c) + "\n" for c in self.classes)


@dataclass(frozen=True)
class Violation:
    kind: str
    evidence: dict = field(default_factory=dict)

    def __str__(self):
        return f"{self.kind}: {self.evidence}"


def parse_decomposition(text: str) -> Decomposition:
    sets = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            sets.append(int(x) for x in line.split())
    return Decomposition(sets)


def parse_relation(text: str) -> LineGraphRelation:
    classes = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        cls = []
        for tok in line.split():
            u, v = tok.split("-")
            cls.append((int(u), int(v)))
        classes.append(cls)
    return LineGraphRelation(classes)


def _clique_edges(vs: Sequence[int]) -> List[Edge]:
    return [(a, b) for i, a in enumerate(vs) for b in vs[i + 1:]]


def validate_decomposition(L: Graph, D: Decomposition) -> Optional[Violation]:
    """None if ``D`` is a line graph decomposition of ``L``, else the first
    violation found. Checks run in the order: clique, edge partition (overlap
    before coverage), vertex cardinality."""
    for s in D.sets:
        for v in s:
            if not 0 <= v < L.n:
                raise ValueError(f"vertex {v} out of range for n={L.n}")
    for s in D.sets:
        for a, b in _clique_edges(s):
            if not L.has_edge(a, b):
                return Violation("not_clique", {"set": list(s), "missing_edge": [a, b]})
    owner: Dict[Edge, Tuple[int, ...]] = {}
    for s in D.sets:
        for e in _clique_edges(s):
            if e in owner:
                return Violation("edge_overlap", {"edge": list(e), "sets": [list(owner[e]), list(s)]})
            owner[e] = s
    for e in L.edges:
        if e not in owner:
            return Violation("edge_uncovered", {"edge": list(e)})
    count = [0] * L.n
    for s in D.sets:
        for v in s:
            count[v] += 1
    for v in range(L.n):
        want = 2 if L.degree(v) else 1
        if count[v] != want:
            return Violation("vertex_cardinality", {"vertex": v, "sets": count[v], "expected": want})
    return None


def validate_relation(L: Graph, R: LineGraphRelation) -> Optional[Violation]:
    """None if ``R`` is a line graph relation on ``L``: every class is the full
    edge set of a clique and every vertex meets at most two classes."""
    seen: Dict[Edge, int] = {}
    for i, c in enumerate(R.classes):
        for e in c:
            if max(e) >= L.n or not L.has_edge(*e):
                return Violation("not_equivalence", {"reason": "not an edge", "edge": list(e)})
            if e in seen:
                return Violation("not_equivalence", {"reason": "edge in two classes", "edge": list(e),
                                                     "classes": [seen[e], i]})
            seen[e] = i
    for e in L.edges:
        if e not in seen:
            return Violation("not_equivalence", {"reason": "edge in no class", "edge": list(e)})
    for i, c in enumerate(R.classes):
        vs = sorted({v for e in c for v in e})
        for e in _clique_edges(vs):
            if not L.has_edge(*e) or seen[e] != i:
                return Violation("not_clique", {"class": i, "vertices": vs, "edge": list(e)})
    meets: List[set] = [set() for _ in range(L.n)]
    for e, i in seen.items():
        meets[e[0]].add(i)
        meets[e[1]].add(i)
    for v in range(L.n):
        if len(meets[v]) > 2:
            return Violation("too_many_classes_at_vertex", {"vertex": v, "classes": sorted(meets[v])})
    return None


def relation_of(L: Graph, D: Decomposition) -> LineGraphRelation:
    v = validate_decomposition(L, D)
    if v is not None:
        raise InvalidStructure(v)
    return LineGraphRelation(_clique_edges(s) for s in D.sets if len(s) > 1)


def decomposition_of(L: Graph, R: LineGraphRelation) -> Decomposition:
    """Clique vertex sets of the classes, plus a singleton for every vertex that
    meets fewer than two classes (isolated vertices included)."""
    v = validate_relation(L, R)
    if v is not None:
        raise InvalidStructure(v)
    return _decomposition_from_classes(L, (sorted({x for e in c for x in e}) for c in R.classes))


def _decomposition_from_classes(L: Graph, class_sets: Iterable[Sequence[int]]) -> Decomposition:
    sets = [tuple(s) for s in class_sets]
    count = [0] * L.n
    for s in sets:
        for x in s:
            count[x] += 1
    sets.extend((x,) for x in range(L.n) if count[x] < 2)
    return Decomposition(sets)


def restrict_relation(L: Graph, R: LineGraphRelation, U: Iterable[int]) -> LineGraphRelation:
    """Restriction of ``R`` to ``L[U]``, on the vertex numbering that
    :func:`~linegraph.graph.induced_subgraph` gives ``L[U]``. Empty classes
    are dropped."""
    v = validate_relation(L, R)
    if v is not None:
        raise InvalidStructure(v)
    _, index = induced_subgraph(L, U)
    classes = []
    for c in R.classes:
        kept = [(index[a], index[b]) for a, b in c if a in index and b in index]
        if kept:
            classes.append(kept)
    return LineGraphRelation(classes)


# ------------------------------------------------------------------ search


class _ComponentSearch:
    """Exhaustive search for the clique classes of one component.

    At each step the search takes a vertex that still has uncovered edges and
    branches on how its uncovered neighbourhood splits into at most two
    cliques (one, if the vertex already lies in a class). Two facts prune the
    splits: pairs on the same side must be joined by an uncovered edge, and
    the edges running between the two sides form a matching. States with no
    completion are memoized by (covered edges, per-vertex class counts).

    Coverage is a bytearray indexed by local edge id, so covering a clique of
    size s costs O(s^2) no matter how large the component is.
    """

    def __init__(self, L: Graph, comp: Sequence[int]):
        self.L = L
        self.comp = list(comp)
        self.local = {v: i for i, v in enumerate(self.comp)}
        self.adj = [frozenset(self.local[w] for w in L.adj[v]) for v in self.comp]
        self.eid: Dict[Edge, int] = {}
        for i in range(len(self.comp)):
            for j in self.adj[i]:
                if i < j:
                    self.eid[(i, j)] = len(self.eid)
        self.covered = bytearray(len(self.eid))
        self.rem = [len(a) for a in self.adj]  # uncovered edges at each vertex
        self.count = [0] * len(self.comp)
        self.left = len(self.eid)
        self.dead = set()

    def _e(self, a, b):
        return self.eid.get((a, b) if a < b else (b, a))

    def _free_nbrs(self, x):
        cov = self.covered
        return {y for y in self.adj[x] if not cov[self._e(x, y)]}

    def _clique_ids(self, vs):
        """Edge ids of the clique on ``vs`` if every pair is an uncovered edge."""
        ids = []
        cov = self.covered
        for i, a in enumerate(vs):
            for b in vs[i + 1:]:
                e = self._e(a, b)
                if e is None or cov[e]:
                    return None
                ids.append(e)
        return ids

    def _splits(self, U):
        """Unordered splits of U into (A, B), A holding U[0], B possibly empty."""
        k = len(U)
        free = [self._free_nbrs(u) for u in U]
        side = [-1] * k
        members = (set(), set())
        cross = {}
        touched_at = [()] * k
        opt = [0] * k
        i = 0
        while i >= 0:
            if i == k:
                yield ([U[j] for j in range(k) if side[j] == 0],
                       [U[j] for j in range(k) if side[j] == 1])
                i -= 1
                self._unplace(U, i, side, members, cross, touched_at)
                continue
            limit = 1 if i == 0 else 2
            placed = False
            while opt[i] < limit:
                s = opt[i]
                opt[i] += 1
                u = U[i]
                if not members[s] <= free[i]:
                    continue
                touched = members[1 - s] & self.adj[u]
                if len(touched) > 1:
                    continue
                if touched and cross.get(next(iter(touched)), 0):
                    continue
                side[i] = s
                members[s].add(u)
                for t in touched:
                    cross[t] = 1
                cross[u] = len(touched)
                touched_at[i] = tuple(touched)
                placed = True
                break
            if placed:
                i += 1
            else:
                opt[i] = 0
                i -= 1
                if i >= 0:
                    self._unplace(U, i, side, members, cross, touched_at)

    @staticmethod
    def _unplace(U, i, side, members, cross, touched_at):
        members[side[i]].discard(U[i])
        side[i] = -1
        for t in touched_at[i]:
            cross[t] = 0
        cross[U[i]] = 0
        touched_at[i] = ()

    def _pick(self):
        best = None
        for i, r in enumerate(self.rem):
            if not r:
                continue
            key = (self.count[i], r, -i)
            if best is None or key > best[0]:
                best = (key, i)
        return None if best is None else best[1]

    def _cover(self, ids, on):
        cov = self.covered
        step = -1 if on else 1
        flag = 1 if on else 0
        for e in ids:
            cov[e] = flag
        self.left += step * len(ids)
        return step

    def _apply(self, parts):
        """Cover the cliques ``parts``; returns an undo record or None."""
        done = []
        ok = True
        for p in parts:
            ids = self._clique_ids(p)
            if ids is None:
                ok = False
                break
            self._cover(ids, True)
            for x in p:
                self.count[x] += 1
                self.rem[x] -= len(p) - 1
            done.append((p, ids))
        if ok:
            for x in {x for p, _ in done for x in p}:
                c, r = self.count[x], self.rem[x]
                if c > 2 or (c == 2 and r):
                    ok = False
                    break
                if c == 1 and r and self._clique_ids(sorted(self._free_nbrs(x))) is None:
                    ok = False
                    break
        if not ok:
            self._undo(done)
            return None
        return done

    def _undo(self, done):
        for p, ids in reversed(done):
            self._cover(ids, False)
            for x in p:
                self.count[x] -= 1
                self.rem[x] += len(p) - 1

    def solutions(self) -> Iterator[List[List[int]]]:
        """Yield lists of class vertex sets (global IDs, each of size >= 2)."""
        classes: List[List[int]] = []

        def rec():
            if not self.left:
                yield [[self.comp[x] for x in c] for c in classes]
                return
            state = (bytes(self.covered), tuple(self.count))
            if state in self.dead:
                return
            v = self._pick()
            U = sorted(self._free_nbrs(v))
            if self.count[v] >= 2:
                options = []
            elif self.count[v] == 1:
                options = [([v] + U,)]
            else:
                options = [([v] + A, [v] + B) if B else ([v] + A,) for A, B in self._splits(U)]
            found = False
            for parts in options:
                done = self._apply(parts)
                if done is None:
                    continue
                classes.extend(sorted(p) for p in parts)
                for sol in rec():
                    found = True
                    yield sol
                del classes[len(classes) - len(parts):]
                self._undo(done)
            if not found:
                self.dead.add(state)

        yield from rec()


def _component_decompositions(L: Graph, comp: Sequence[int]) -> List[Tuple[Tuple[int, ...], ...]]:
    """All decompositions restricted to one component, each as a sorted tuple
    of sorted sets (singletons included), in lexicographic order."""
    out = set()
    for classes in _ComponentSearch(L, comp).solutions():
        count = {v: 0 for v in comp}
        sets = [tuple(sorted(c)) for c in classes]
        for c in classes:
            for x in c:
                count[x] += 1
        sets.extend((x,) for x in comp if count[x] < 2)
        out.add(tuple(sorted(sets)))
    return sorted(out)


def component_decompositions(L: Graph, comp: Sequence[int], cap: Optional[int] = None):
    if cap is None:
        cap = resolve_cap(DEFAULT_COMPONENT_CAP)
    if len(comp) > cap:
        raise CapExceeded(f"component starting at vertex {min(comp)}", len(comp), cap)
    return _component_decompositions(L, comp)


def enumerate_decompositions(L: Graph, cap: Optional[int] = None) -> List[Decomposition]:
    """Every line graph decomposition of ``L``, sorted; empty iff ``L`` is not a
    line graph."""
    if cap is None:
        cap = resolve_cap(DEFAULT_ENUMERATE_CAP)
    if L.n > cap:
        raise CapExceeded("enumerate_decompositions", L.n, cap)
    per_comp = [_component_decompositions(L, comp) for comp in connected_components(L)]
    if any(not opts for opts in per_comp):
        return []
    out = [Decomposition(itertools.chain.from_iterable(choice))
           for choice in itertools.product(*per_comp)]
    out.sort(key=lambda d: d.sets)
    return out


def enumerate_relations(L: Graph, cap: Optional[int] = None) -> List[LineGraphRelation]:
    return [LineGraphRelation(_clique_edges(s) for s in d.sets if len(s) > 1)
            for d in enumerate_decompositions(L, cap)]


# ------------------------------------------------------------- singularity


def singular_name(L: Graph) -> Optional[str]:
    """Name of the singular graph ``L`` is isomorphic to, or None."""
    for name, s in zip(singular_names(), singular_graphs()):
        if is_isomorphic(L, s) is not None:
            return name
    return None


def is_singular(L: Graph) -> bool:
    return singular_name(L) is not None


def singular_components(L: Graph) -> List[List[int]]:
    return [comp for comp in connected_components(L)
            if L.n and is_singular(induced_subgraph(L, comp)[0])]


def star_relation(L: Graph, e: Sequence[int], f: Sequence[int]) -> bool:
    """True when some clique of ``L`` contains both edges, i.e. their endpoints
    are pairwise equal or adjacent."""
    pts = set(e) | set(f)
    return all(a == b or L.has_edge(a, b) for a in pts for b in pts)


NICE_MIN_ORDER = 7  # every singular graph has at most 6 vertices


def is_nice(L: Graph, U: Iterable[int]) -> bool:
    """Whether ``L[U]`` is connected with at least 7 vertices. Such a subgraph
    of a line graph is a nonsingular connected line graph, so it carries
    exactly one relation."""
    sub, _ = induced_subgraph(L, sorted(set(U)))
    return sub.n >= NICE_MIN_ORDER and len(connected_components(sub)) == 1


def nice_relation(L: Graph, U: Iterable[int], cap: Optional[int] = None) -> LineGraphRelation:
    """The unique relation of the nice subgraph ``L[U]``, in the numbering of
    :func:`induced_subgraph`."""
    U = sorted(set(U))
    if not is_nice(L, U):
        raise ValueError("vertex set does not induce a nice subgraph")
    sub, _ = induced_subgraph(L, U)
    options = component_decompositions(sub, list(range(sub.n)), cap)
    if not options:
        raise NotALineGraph("nice subgraph is not a line graph", component=U)
    if len(options) > 1:
        raise AssertionError("nice subgraph with several decompositions")
    return relation_of(sub, Decomposition(options[0]))


# --------------------------------------------------------- canonical relation


class RelationMemo:
    """Get-or-compute table from a canonically labelled component to its fixed
    relation. ``dict.setdefault`` is atomic, so concurrent callers that race
    on a miss all end up with the single stored value."""

    def __init__(self, cap: Optional[int] = None):
        self.cap = cap
        self._table: Dict[Tuple[int, Tuple[Edge, ...]], Tuple[Tuple[Edge, ...], ...]] = {}

    def __len__(self):
        return len(self._table)

    def get(self, key):
        got = self._table.get(key)
        if got is None:
            got = self._table.setdefault(key, self._compute(key))
        return got

    def _compute(self, key):
        s, edges = key
        gamma = Graph(s, edges)
        options = component_decompositions(gamma, list(range(s)), self.cap)
        if not options:
            raise NotALineGraph("component is not a line graph")
        rels = [LineGraphRelation(_clique_edges(d) for d in sets if len(d) > 1).classes
                for sets in options]
        return min(rels)


def canonical_form(L: Graph, comp: Sequence[int]) -> Tuple[int, Tuple[Edge, ...]]:
    """The component relabelled by rank: the k-th smallest vertex becomes k-1.
    Returned as ``(size, sorted edges)``."""
    rank = {v: i for i, v in enumerate(sorted(comp))}
    edges = sorted((min(rank[u], rank[w]), max(rank[u], rank[w]))
                   for u in comp for w in L.adj[u] if u < w)
    return len(comp), tuple(edges)


_DEFAULT_MEMO = RelationMemo()


def canonical_relation(L: Graph, memo: Optional[RelationMemo] = None) -> LineGraphRelation:
    """A line graph relation on ``L`` built component by component: rank each
    component's vertices in ascending ID order, look up (or compute once) the
    lexicographically least relation on the ranked copy, and copy it back
    through the ranking. Identically ranked components get identical
    relations."""
    if memo is None:
        memo = _DEFAULT_MEMO
    classes = []
    for comp in connected_components(L):
        if len(comp) == 1:
            continue
        key = canonical_form(L, comp)
        order = sorted(comp)
        try:
            fixed = memo.get(key)
        except NotALineGraph:
            raise NotALineGraph(f"component {order} is not a line graph", component=order) from None
        except CapExceeded as exc:
            raise CapExceeded(f"component starting at vertex {order[0]}", exc.size, exc.cap) from None
        for c in fixed:
            classes.append([(order[a], order[b]) for a, b in c])
    return LineGraphRelation(classes)
