"""Root graph reconstruction, Whitney lifting and exact colouring."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Dict, Hashable, List, Mapping, Optional, Sequence, Tuple

from .catalog import TABLE1_ROW, exceptional_graphs, exceptional_names
from .errors import CapExceeded, InvalidStructure, NotALineGraphIsomorphism, resolve_cap
from .graph import (
    Edge,
    Graph,
    all_isomorphisms,
    connected_components,
    induced_subgraph,
    is_connected,
    is_isomorphic,
    is_isomorphism,
    line_graph,
    normalize_edge,
)
from .krausz import (
    Decomposition,
    LineGraphRelation,
    validate_decomposition,
    validate_relation,
)
from .recognition import ForbiddenWitness, is_line_graph_beineke, is_line_graph_krausz

DEFAULT_CHROMATIC_CAP = 1024


@dataclass(frozen=True)
class RootWitness:
    """A root graph with ``phi`` taking each root edge to a vertex of ``L``.

    ``names[i]`` says what root vertex ``i`` stands for: ``("set", s)`` for a
    decomposition set, ``("aux", v)`` for the extra endpoint added for an
    isolated vertex ``v``, ``("label", x)`` for a relation class or extra
    label, ``("vertex", v)`` for ``v`` in V1 and ``("copy", b, v)`` for the
    pair of copies of ``v`` in V0.
    """

    root: Graph
    phi: Dict[Edge, int]
    vertex_roles: Dict[int, str]
    names: Tuple[tuple, ...]

    def role_sets(self) -> Dict[str, List[int]]:
        out = {"V0": [], "V1": [], "V2": []}
        for v in sorted(self.vertex_roles):
            out[self.vertex_roles[v]].append(v)
        return out


def phi_is_isomorphism(root: Graph, L: Graph, phi: Mapping[Edge, int]) -> bool:
    """Whether ``phi`` is an isomorphism from L(root) onto ``L``."""
    lg, index = line_graph(root)
    if set(phi) != set(index):
        return False
    f = {index[e]: v for e, v in phi.items()}
    return is_isomorphism(lg, L, f)


def root_from_decomposition(L: Graph, D: Decomposition) -> RootWitness:
    """Root whose vertices are the sets of ``D`` (in sorted order), joined when
    they intersect; each isolated vertex of ``L`` additionally gets a fresh
    root vertex hanging off its singleton, appended after the sets."""
    violation = validate_decomposition(L, D)
    if violation is not None:
        raise InvalidStructure(violation)
    sets = list(D.sets)
    names: List[tuple] = [("set", s) for s in sets]
    containing: List[List[int]] = [[] for _ in range(L.n)]
    for i, s in enumerate(sets):
        for v in s:
            containing[v].append(i)
    edges = []
    phi: Dict[Edge, int] = {}
    for v in range(L.n):
        if L.degree(v) == 0:
            a = containing[v][0]
            b = len(names)
            names.append(("aux", v))
        else:
            a, b = containing[v]
        e = normalize_edge(a, b)
        edges.append(e)
        phi[e] = v
    roles = {}
    for v in range(L.n):
        big = sum(1 for i in containing[v] if len(sets[i]) > 1)
        roles[v] = ("V0", "V1", "V2")[big]
    root = Graph(len(names), edges)
    witness = RootWitness(root, phi, roles, tuple(names))
    assert phi_is_isomorphism(root, L, phi)
    return witness


def root_from_relation(
    L: Graph,
    R: LineGraphRelation,
    extra: Optional[Mapping[int, Sequence[Hashable]]] = None,
) -> RootWitness:
    """Root built from the incidence between vertices of ``L`` and class labels.

    Without ``extra`` a vertex is incident to the labels of the classes it
    meets. ``extra`` maps a vertex to additional labels outside the classes
    (each used by a single vertex, at most two labels per vertex in total),
    which moves vertices between roles without changing the line graph:

    * V0 (no labels) contributes two root vertices ``(0, v), (1, v)`` and the
      edge between them;
    * V1 (one label) contributes the root vertex ``v`` and the edge to its label;
    * V2 (two labels) contributes the edge between its two labels.

    Root vertices are numbered labels first (classes, then extra labels in
    order of appearance), then V1 vertices, then the V0 copies.
    """
    violation = validate_relation(L, R)
    if violation is not None:
        raise InvalidStructure(violation)
    incidence: List[List[tuple]] = [[] for _ in range(L.n)]
    for i, c in enumerate(R.classes):
        for v in sorted({x for e in c for x in e}):
            incidence[v].append(("class", i))
    extra_labels: List[tuple] = []
    owner: Dict[tuple, int] = {}
    for v in sorted(extra or {}):
        for x in extra[v]:
            lab = ("extra", x)
            if lab in owner:
                raise ValueError(f"extra label {x!r} is attached to vertices {owner[lab]} and {v}")
            owner[lab] = v
            incidence[v].append(lab)
            extra_labels.append(lab)
    for v in range(L.n):
        if len(incidence[v]) > 2:
            raise ValueError(f"vertex {v} is incident to {len(incidence[v])} labels")

    roles = {v: ("V0", "V1", "V2")[len(incidence[v])] for v in range(L.n)}
    names: List[tuple] = [("label", ("class", i)) for i in range(len(R.classes))]
    names += [("label", lab) for lab in extra_labels]
    vid = {name[1]: i for i, name in enumerate(names)}
    for v in range(L.n):
        if roles[v] == "V1":
            vid[("vertex", v)] = len(names)
            names.append(("vertex", v))
    for v in range(L.n):
        if roles[v] == "V0":
            for b in (0, 1):
                vid[("copy", b, v)] = len(names)
                names.append(("copy", b, v))

    phi: Dict[Edge, int] = {}
    for v in range(L.n):
        if roles[v] == "V0":
            e = normalize_edge(vid[("copy", 0, v)], vid[("copy", 1, v)])
        elif roles[v] == "V1":
            e = normalize_edge(vid[("vertex", v)], vid[incidence[v][0]])
        else:
            e = normalize_edge(vid[incidence[v][0]], vid[incidence[v][1]])
        if e in phi:
            raise ValueError(f"vertices {phi[e]} and {v} share both labels")
        phi[e] = v
    root = Graph(len(names), phi)
    if not phi_is_isomorphism(root, L, phi):
        raise AssertionError("label construction did not reproduce L")
    return RootWitness(root, phi, roles, tuple(names))


def edge_parts(witness: RootWitness) -> Dict[str, List[Edge]]:
    """Split root edges into E0/E1/E2 by the role of the vertex they map to."""
    out = {"E0": [], "E1": [], "E2": []}
    for e, v in sorted(witness.phi.items()):
        out["E" + witness.vertex_roles[v][1]].append(e)
    return out


# ------------------------------------------------------------------ Whitney


@dataclass(frozen=True)
class WhitneyResult:
    outcome: str  # "induced", "exceptional" or "not_induced"
    sigma: Optional[Dict[int, int]] = None
    name: Optional[str] = None
    edge: Optional[Edge] = None


def exceptional_name(g: Graph) -> Optional[str]:
    for name, x in zip(exceptional_names(), exceptional_graphs()):
        if is_isomorphic(g, x) is not None:
            return name
    return None


def _check_line_isomorphism(G: Graph, H: Graph, phi: Mapping[Edge, Edge]) -> Dict[Edge, Edge]:
    norm = {normalize_edge(*e): normalize_edge(*f) for e, f in phi.items()}
    if set(norm) != set(G.edges):
        raise NotALineGraphIsomorphism("phi must be defined on exactly the edges of G")
    if sorted(norm.values()) != list(H.edges):
        raise NotALineGraphIsomorphism("phi must be a bijection onto the edges of H")
    edges = G.edges
    for i, e in enumerate(edges):
        for f in edges[i + 1:]:
            if bool(set(e) & set(f)) != bool(set(norm[e]) & set(norm[f])):
                raise NotALineGraphIsomorphism(f"phi breaks adjacency between {e} and {f}")
    return norm


def _induces(G: Graph, phi: Mapping[Edge, Edge], sigma: Mapping[int, int]) -> Optional[Edge]:
    """First edge xy with phi(xy) != sigma(x)sigma(y), or None."""
    for e in G.edges:
        x, y = e
        if normalize_edge(sigma[x], sigma[y]) != phi[e]:
            return e
    return None


def _propagate(G: Graph, H: Graph, phi: Mapping[Edge, Edge]):
    """Candidate sigma from one anchored vertex star, extended along a BFS tree.
    Returns (sigma, None) or (None, edge where propagation broke)."""
    anchor = max(range(G.n), key=lambda v: (G.degree(v), -v))
    nb = sorted(G.adj[anchor])
    if len(nb) >= 2:
        common = set(phi[normalize_edge(anchor, nb[0])]) & set(phi[normalize_edge(anchor, nb[1])])
        start = min(common)
    else:
        start = min(phi[normalize_edge(anchor, nb[0])])
    sigma = {anchor: start}
    queue = deque([anchor])
    while queue:
        x = queue.popleft()
        for y in sorted(G.adj[x]):
            e = normalize_edge(x, y)
            img = phi[e]
            if sigma[x] not in img:
                return None, e
            other = img[0] if img[1] == sigma[x] else img[1]
            if y in sigma:
                if sigma[y] != other:
                    return None, e
                continue
            sigma[y] = other
            queue.append(y)
    return sigma, None


def whitney_lift(G: Graph, H: Graph, phi: Mapping[Edge, Edge]) -> WhitneyResult:
    """Find the vertex isomorphism inducing the line graph isomorphism ``phi``.

    ``phi`` maps edges of ``G`` to edges of ``H``. Both graphs must be
    connected. When either is exceptional and no inducing map exists the
    result is ``exceptional`` with the Table 1 row name.
    """
    if not (is_connected(G) and is_connected(H)):
        raise ValueError("whitney_lift needs connected graphs")
    phi = _check_line_isomorphism(G, H, phi)
    name = exceptional_name(G) or exceptional_name(H)
    row = TABLE1_ROW[name] if name else None

    if G.m == 0:
        if G.n == H.n == 1:
            return WhitneyResult("induced", sigma={0: 0})
        return WhitneyResult("not_induced")

    sigma, bad = _propagate(G, H, phi)
    if sigma is not None:
        if G.n == H.n and len(set(sigma.values())) == G.n and is_isomorphism(G, H, sigma):
            bad = _induces(G, phi, sigma)
            if bad is None:
                return WhitneyResult("induced", sigma=dict(sorted(sigma.items())))
        else:
            bad = G.edges[0]
    if name is not None:
        if G.n == H.n:
            for s in all_isomorphisms(G, H):
                if _induces(G, phi, s) is None:
                    return WhitneyResult("induced", sigma=s)
        return WhitneyResult("exceptional", name=row)
    return WhitneyResult("not_induced", edge=bad)


def inducing_maps(G: Graph, H: Graph, phi: Mapping[Edge, Edge], cap: Optional[int] = None) -> List[Dict[int, int]]:
    """Every isomorphism G -> H that induces ``phi`` (brute force)."""
    phi = {normalize_edge(*e): normalize_edge(*f) for e, f in phi.items()}
    return [s for s in all_isomorphisms(G, H, cap) if _induces(G, phi, s) is None]


# --------------------------------------------------------------- round trip


@dataclass
class RoundtripReport:
    is_line_graph: bool
    decomposition: Optional[Decomposition] = None
    root: Optional[Graph] = None
    isomorphic: Optional[bool] = None
    witness: Optional[ForbiddenWitness] = None
    notes: List[str] = field(default_factory=list)

    @property
    def root_order(self):
        return None if self.root is None else self.root.n

    @property
    def root_size(self):
        return None if self.root is None else self.root.m


def verify_roundtrip(L: Graph, cap: Optional[int] = None) -> RoundtripReport:
    """Decompose ``L`` (least decomposition, per-component cap ``cap``), build
    the root and confirm L(root) is isomorphic to ``L``. For non-line graphs
    the report carries the forbidden subgraph witness instead."""
    try:
        D = is_line_graph_krausz(L, cap)
    except CapExceeded as exc:
        return RoundtripReport(False, notes=[str(exc)])
    if D is None:
        w = is_line_graph_beineke(L)
        report = RoundtripReport(False, witness=None if w is True else w)
        if w is True:
            report.notes.append("forbidden subgraph search found no witness")
        return report
    rw = root_from_decomposition(L, D)
    lg, _ = line_graph(rw.root)
    iso = is_isomorphic(lg, L) is not None
    return RoundtripReport(True, decomposition=D, root=rw.root, isomorphic=iso)


# ---------------------------------------------------------------- colouring


def _greedy_clique(g: Graph) -> int:
    best = 1 if g.n else 0
    for start in range(g.n):
        clique = [start]
        cand = set(g.adj[start])
        while cand:
            v = max(cand, key=lambda w: (len(g.adj[w] & cand), -w))
            clique.append(v)
            cand &= g.adj[v]
        best = max(best, len(clique))
        if best == max(g.degrees(), default=0) + 1:
            break
    return best


def _dsatur_exact(g: Graph, lower: int) -> int:
    n = g.n
    colors = [-1] * n
    adj = [sorted(s) for s in g.adj]
    best = [n]

    def pick():
        choice, key = -1, None
        for v in range(n):
            if colors[v] >= 0:
                continue
            sat = len({colors[w] for w in adj[v] if colors[w] >= 0})
            k = (sat, len(adj[v]), -v)
            if key is None or k > key:
                choice, key = v, k
        return choice

    def bt(done, used):
        if used >= best[0]:
            return
        if done == n:
            best[0] = used
            return
        v = pick()
        taken = {colors[w] for w in adj[v]}
        for c in range(min(used + 1, best[0] - 1)):
            if c in taken:
                continue
            colors[v] = c
            bt(done + 1, max(used, c + 1))
            colors[v] = -1
            if best[0] <= lower:
                return

    bt(0, 0)
    return best[0]


def chromatic_number_exact(G: Graph, cap: Optional[int] = None) -> int:
    """Exact chromatic number (DSATUR branch and bound per component, seeded
    with a greedy clique lower bound)."""
    if cap is None:
        cap = resolve_cap(DEFAULT_CHROMATIC_CAP)
    if G.n > cap:
        raise CapExceeded("chromatic_number_exact", G.n, cap)
    best = 0
    for comp in connected_components(G):
        sub, _ = induced_subgraph(G, comp)
        if sub.m == sub.n * (sub.n - 1) // 2:
            best = max(best, sub.n)
            continue
        if sub.n <= best:
            continue
        lower = _greedy_clique(sub)
        best = max(best, _dsatur_exact(sub, lower))
    return best
