"""Fixed graphs (the nine Beineke graphs, the singular graphs, the exceptional
root graphs) and generators for finite truncations of the infinite examples.

Beineke graphs use the customary numbering of the usual 3x3 drawing, row by row,
left to right::

    1 claw             2 K4- with two pendants   3 K4 with a tailed cap
    4 K4- with a cap   5 K4- closed by a 2-path  6 two K4's sharing an edge
    7 wheel W5         8 triangle strip          9 K5 minus an edge

The encodings below are hand-transcribed from the drawing; the shipped
``data/catalog.txt`` holds the same graphs as graph6 strings and
``tests/test_catalog.py`` checks both against each other and against the
vertex/edge counts and degree sequences listed in :data:`BEINEKE_FACTS`.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from typing import Iterator, List, Tuple

from .errors import CapExceeded, resolve_cap
from .graph import Graph, complete_graph, disjoint_union, parse_graph6, star_graph

DATA_VERSION = 1
DEFAULT_K0_CAP = 16

_BEINEKE_EDGES: List[Tuple[str, int, List[Tuple[int, int]]]] = [
    # 1: centre 0, leaves 1-3
    ("claw", 4, [(0, 1), (0, 2), (0, 3)]),
    # 2: K4- on 0-3 (missing 23), pendants 4 at 2 and 5 at 3
    ("beineke-2", 6, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 4), (3, 5)]),
    # 3: K4 on 0-3; 4 adjacent to 2 and 3; pendant 5 at 4
    ("beineke-3", 6, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (2, 4), (3, 4), (4, 5)]),
    # 4: K4- on 0-3 (missing 23), cap vertex 4 adjacent to 2 and 3
    ("beineke-4", 5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 4), (3, 4)]),
    # 5: K4- on 0-3 (missing 23), path 2-4-5-3
    ("beineke-5", 6, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 4), (3, 5), (4, 5)]),
    # 6: K4's on {0,1,2,3} and {2,3,4,5} share the edge 23
    ("beineke-6", 6, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (2, 4), (3, 4),
                      (4, 5), (2, 5), (3, 5)]),
    # 7: hub 0, rim 1-2-3-4-5-1
    ("wheel-W5", 6, [(0, 1), (0, 2), (0, 3), (0, 4), (0, 5),
                     (1, 2), (2, 3), (3, 4), (4, 5), (1, 5)]),
    # 8: bottom row 0-1-2, top row 3-4-5, rungs 03 14 25, diagonals 04 15
    ("beineke-8", 6, [(0, 1), (1, 2), (3, 4), (4, 5), (0, 3), (1, 4), (2, 5), (0, 4), (1, 5)]),
    # 9: K5 on 0-4 minus the edge 12
    ("K5-e", 5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]),
]

# (vertices, edges, degree sequence) for each Beineke graph, used as a guard on the encodings.
BEINEKE_FACTS = [
    (4, 3, [3, 1, 1, 1]),
    (6, 7, [3, 3, 3, 3, 1, 1]),
    (6, 9, [4, 4, 3, 3, 3, 1]),
    (5, 7, [3, 3, 3, 3, 2]),
    (6, 8, [3, 3, 3, 3, 2, 2]),
    (6, 11, [5, 5, 3, 3, 3, 3]),
    (6, 10, [5, 3, 3, 3, 3, 3]),
    (6, 9, [4, 4, 3, 3, 2, 2]),
    (5, 9, [4, 4, 4, 3, 3]),
]

_K4_MINUS = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]  # K4 without 23

_SINGULAR: List[Tuple[str, Graph]] = [
    ("K3", complete_graph(3)),
    ("K4-", Graph(4, _K4_MINUS)),
    # apex 4 over the square 0-1-2-3
    ("square-pyramid", Graph(5, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 4), (1, 4), (2, 4), (3, 4)])),
    # K6 minus the perfect matching 01, 23, 45
    ("octahedron", Graph(6, [(u, v) for u in range(6) for v in range(u + 1, 6)
                             if (u, v) not in {(0, 1), (2, 3), (4, 5)}])),
]

_EXCEPTIONAL: List[Tuple[str, Graph, str]] = [
    ("K3", complete_graph(3), "K3"),
    ("K1,3", star_graph(3), "K3"),
    ("K1,3+", Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2)]), "K4-"),
    ("K4-", Graph(4, _K4_MINUS), "square-pyramid"),
    ("K4", complete_graph(4), "octahedron"),
]

# Whitney row label for each exceptional graph.
TABLE1_ROW = {"K3": "K3/K1,3", "K1,3": "K3/K1,3", "K1,3+": "K1,3+", "K4-": "K4-", "K4": "K4"}


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    graph: Graph
    role: str  # "beineke", "singular" or "exceptional"
    index: int  # 1-based within its role


def beineke_graphs() -> List[Graph]:
    return [Graph(n, edges) for _, n, edges in _BEINEKE_EDGES]


def beineke_names() -> List[str]:
    return [name for name, _, _ in _BEINEKE_EDGES]


def singular_graphs() -> List[Graph]:
    return [g for _, g in _SINGULAR]


def singular_names() -> List[str]:
    return [name for name, _ in _SINGULAR]


def exceptional_graphs() -> List[Graph]:
    return [g for _, g, _ in _EXCEPTIONAL]


def exceptional_names() -> List[str]:
    return [name for name, _, _ in _EXCEPTIONAL]


def table1_pairs() -> List[Tuple[str, Graph, str, Graph]]:
    """(exceptional name, graph, singular partner name, partner graph)."""
    singular = dict(_SINGULAR)
    return [(name, g, partner, singular[partner]) for name, g, partner in _EXCEPTIONAL]


def entries() -> List[CatalogEntry]:
    out = []
    for i, (name, n, edges) in enumerate(_BEINEKE_EDGES, start=1):
        out.append(CatalogEntry(name, Graph(n, edges), "beineke", i))
    for i, (name, g) in enumerate(_SINGULAR, start=1):
        out.append(CatalogEntry(name, g, "singular", i))
    for i, (name, g, _) in enumerate(_EXCEPTIONAL, start=1):
        out.append(CatalogEntry(name, g, "exceptional", i))
    return out


def load_fixture_file() -> List[CatalogEntry]:
    """Parse ``data/catalog.txt`` (``role index name graph6`` per line)."""
    text = resources.files("linegraph").joinpath("data/catalog.txt").read_text()
    out = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        role, index, name, g6 = line.split()
        out.append(CatalogEntry(name, parse_graph6(g6), role, int(index)))
    return out


def atlas_strings() -> List[str]:
    """graph6 strings of all 1253 graphs on at most 7 vertices, in atlas order."""
    text = resources.files("linegraph").joinpath("data/atlas7.g6").read_text()
    return [line.strip() for line in text.splitlines() if line.strip() and not line.startswith("#")]


def atlas(max_n: int = 7) -> Iterator[Graph]:
    for s in atlas_strings():
        g = parse_graph6(s)
        if g.n <= max_n:
            yield g


def k0_truncation(k: int, m: int, cap: int = None) -> Graph:
    """Binary strings of length ``m`` (vertex v is the string whose bit i is bit i
    of v), adjacent when they agree on every position >= k. The result is
    2**(m-k) disjoint cliques of size 2**k."""
    if cap is None:
        cap = resolve_cap(DEFAULT_K0_CAP)
    if not 0 <= k <= m:
        raise ValueError(f"need 0 <= k <= m, got k={k}, m={m}")
    if m > cap:
        raise CapExceeded("k0_truncation length", m, cap)
    n = 1 << m
    size = 1 << k
    edges = []
    for base in range(0, n, size):
        for a in range(base, base + size):
            for b in range(a + 1, base + size):
                edges.append((a, b))
    return Graph(n, edges)


def star_forest(components: int, leaves: int) -> Graph:
    """``components`` disjoint copies of K_{1,leaves}."""
    if components < 0 or leaves < 1:
        raise ValueError("need components >= 0 and leaves >= 1")
    return disjoint_union([star_graph(leaves)] * components)


def find_entries(name: str) -> List[CatalogEntry]:
    """All catalog entries called ``name`` (K3 and K4- appear in two roles)."""
    return [e for e in entries() if e.name == name]
