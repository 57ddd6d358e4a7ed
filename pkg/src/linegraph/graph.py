"""Simple undirected graphs on dense integer vertex IDs, plus the subgraph and
isomorphism machinery the rest of the package is built on.

Vertices are ``0..n-1``. Edges are normalized pairs ``(u, v)`` with ``u < v``
and the global edge order is lexicographic; that order fixes the vertex
numbering of :func:`line_graph`.
"""

from __future__ import annotations

from collections import deque
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from .errors import CapExceeded, ParseError, SelfLoopError, resolve_cap

Edge = Tuple[int, int]

DEFAULT_ISO_CAP = 12


def normalize_edge(u: int, v: int) -> Edge:
    if u == v:
        raise SelfLoopError(f"self-loop at vertex {u}")
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable simple graph.

    ``adj[v]`` is the frozenset of neighbours of ``v``; ``masks[v]`` is the same
    set as an int bitmask, used by the search routines.
    """

    __slots__ = ("n", "adj", "edges", "_masks")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        nbrs: List[set] = [set() for _ in range(n)]
        for e in edges:
            u, v = e
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {tuple(e)} out of range for n={n}")
            if u == v:
                raise SelfLoopError(f"self-loop at vertex {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        self.n = n
        self.adj = tuple(frozenset(s) for s in nbrs)
        self.edges = tuple((u, v) for u in range(n) for v in sorted(nbrs[u]) if u < v)
        self._masks = None

    @property
    def masks(self) -> Tuple[int, ...]:
        if self._masks is None:
            ms = []
            for s in self.adj:
                m = 0
                for w in s:
                    m |= 1 << w
                ms.append(m)
            self._masks = tuple(ms)
        return self._masks

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> List[int]:
        return [len(s) for s in self.adj]

    def degree_sequence(self) -> List[int]:
        return sorted(self.degrees(), reverse=True)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        return Graph(self.n, ((perm[u], perm[v]) for u, v in self.edges))

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={list(self.edges)})"


def disjoint_union(graphs: Iterable[Graph]) -> Graph:
    edges = []
    offset = 0
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges)
        offset += g.n
    return Graph(offset, edges)


def complete_graph(n: int) -> Graph:
    return Graph(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def path_graph(n: int) -> Graph:
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with centre 0."""
    return Graph(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


# ---------------------------------------------------------------- edge lists


def parse_edge_list(text: str, n: Optional[int] = None) -> Graph:
    """Parse ``u v`` lines. An optional first data line ``n=<count>`` fixes the
    vertex count; otherwise it is ``n`` if given, else max ID + 1.
    ``#`` starts a comment. Duplicate edges collapse."""
    edges = []
    header_n = None
    seen_data = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if not seen_data and line.replace(" ", "").startswith("n="):
            try:
                header_n = int(line.replace(" ", "")[2:])
            except ValueError:
                raise ParseError(f"bad header {raw.strip()!r}", lineno) from None
            if header_n < 0:
                raise ParseError("negative vertex count", lineno)
            seen_data = True
            continue
        seen_data = True
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected 'u v', got {raw.strip()!r}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"non-integer vertex in {raw.strip()!r}", lineno) from None
        if u < 0 or v < 0:
            raise ParseError("vertex IDs must be nonnegative", lineno)
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}", lineno)
        edges.append((u, v))
    count = header_n if header_n is not None else n
    top = max((max(e) for e in edges), default=-1) + 1
    if count is None:
        count = top
    elif top > count:
        raise ParseError(f"vertex {top - 1} out of range for n={count}")
    return Graph(count, edges)


def emit_edge_list(g: Graph) -> str:
    lines = [f"n={g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def emit_dot(g: Graph, name: str = "G") -> str:
    """Graphviz text for ``g``; isolated vertices are listed explicitly."""
    lines = [f"graph {name} {{"]
    lines.extend(f"  {v};" for v in range(g.n) if not g.adj[v])
    lines.extend(f"  {u} -- {v};" for u, v in g.edges)
    lines.append("}")
    return "\n".join(lines) + "\n"


# -------------------------------------------------------------------- graph6


def _g6_size(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n < 258048:
        return chr(126) + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return chr(126) * 2 + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def emit_graph6(g: Graph) -> str:
    n = g.n
    bits = []
    for v in range(1, n):
        adj = g.adj[v]
        for u in range(v):
            bits.append(1 if u in adj else 0)
    while len(bits) % 6:
        bits.append(0)
    body = []
    for i in range(0, len(bits), 6):
        x = 0
        for b in bits[i:i + 6]:
            x = (x << 1) | b
        body.append(chr(x + 63))
    return _g6_size(n) + "".join(body)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise ParseError("empty graph6 string")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise ParseError(f"invalid graph6 character {ch!r}")
    vals = [ord(ch) - 63 for ch in s]
    if vals[0] != 63:
        n, pos = vals[0], 1
    elif len(vals) >= 4 and vals[1] != 63:
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        pos = 4
    elif len(vals) >= 8 and vals[1] == 63:
        n = 0
        for x in vals[2:8]:
            n = (n << 6) | x
        pos = 8
    else:
        raise ParseError("truncated graph6 size field")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = vals[pos:]
    if len(body) != nbytes:
        raise ParseError(f"graph6 body has {len(body)} bytes, expected {nbytes} for n={n}")
    edges = []
    k = 0
    u, v = 0, 1
    for x in body:
        for shift in range(5, -1, -1):
            if k >= nbits:
                if (x >> shift) & 1:
                    raise ParseError("nonzero padding bits in graph6 string")
                continue
            if (x >> shift) & 1:
                edges.append((u, v))
            k += 1
            u += 1
            if u == v:
                u = 0
                v += 1
    return Graph(n, edges)


# ---------------------------------------------------------------- subgraphs


def _check_vertices(g: Graph, vs: Iterable[int]) -> List[int]:
    out = sorted(set(vs))
    for v in out:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range for n={g.n}")
    return out


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Tuple[Graph, Dict[int, int]]:
    """Return ``G[U]`` relabelled to ``0..|U|-1`` in ascending original order,
    together with the map original ID -> new ID."""
    vs = _check_vertices(g, vertices)
    index = {v: i for i, v in enumerate(vs)}
    edges = [(index[u], index[w]) for u in vs for w in g.adj[u] if w in index and u < w]
    return Graph(len(vs), edges), index


def connected_components(g: Graph) -> List[List[int]]:
    """Vertex partition into components, each sorted, ordered by minimum vertex."""
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in g.adj[x]:
                if not seen[y]:
                    seen[y] = True
                    comp.append(y)
                    queue.append(y)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(connected_components(g)) == 1


def is_clique(g: Graph, vertices: Iterable[int]) -> bool:
    vs = _check_vertices(g, vertices)
    for i, u in enumerate(vs):
        nb = g.adj[u]
        for w in vs[i + 1:]:
            if w not in nb:
                return False
    return True


def is_complete(g: Graph) -> bool:
    return g.m == g.n * (g.n - 1) // 2


def _search_order(h: Graph) -> List[int]:
    """Order pattern vertices so that each one (after the first of its component)
    has as many already-placed neighbours as possible."""
    placed = [False] * h.n
    order = []
    links = [0] * h.n
    for _ in range(h.n):
        best = None
        for v in range(h.n):
            if placed[v]:
                continue
            key = (links[v], h.degree(v), -v)
            if best is None or key > best[0]:
                best = (key, v)
        v = best[1]
        placed[v] = True
        order.append(v)
        for w in h.adj[v]:
            links[w] += 1
    return order


def _iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _backtrack(k: int, candidates) -> Iterator[List[int]]:
    """Iterative depth-first search over injective assignments of length k.

    ``candidates(i, image, used)`` returns an iterable of values for position i
    given the first i values and their bitmask. Yields the shared image list.
    """
    if k == 0:
        yield []
        return
    image = [0] * k
    its = [None] * k
    used = 0
    its[0] = iter(candidates(0, image, used))
    i = 0
    while i >= 0:
        x = next(its[i], None)
        if x is None:
            i -= 1
            if i >= 0:
                used ^= 1 << image[i]
            continue
        image[i] = x
        used |= 1 << x
        if i + 1 == k:
            yield image
            used ^= 1 << x
            continue
        i += 1
        its[i] = iter(candidates(i, image, used))


def _induced_embeddings(g: Graph, h: Graph, allowed: int) -> Iterator[Dict[int, int]]:
    order = _search_order(h)
    pos = {v: i for i, v in enumerate(order)}
    # for each position: (earlier positions adjacent, earlier positions non-adjacent)
    constraints = []
    for i, p in enumerate(order):
        adj_prev = [pos[q] for q in h.adj[p] if pos[q] < i]
        non_prev = [j for j in range(i) if order[j] not in h.adj[p]]
        constraints.append((adj_prev, non_prev))
    gdeg = g.degrees()
    deg_ok = {}
    for p in order:
        d = h.degree(p)
        if d not in deg_ok:
            m = 0
            for v in range(g.n):
                if gdeg[v] >= d:
                    m |= 1 << v
            deg_ok[d] = m
    masks = g.masks
    k = len(order)

    def candidates(i, image, used):
        adj_prev, non_prev = constraints[i]
        cand = allowed & ~used & deg_ok[h.degree(order[i])]
        for j in adj_prev:
            cand &= masks[image[j]]
            if not cand:
                return ()
        for j in non_prev:
            cand &= ~masks[image[j]]
            if not cand:
                return ()
        return _iter_bits(cand)

    for image in _backtrack(k, candidates):
        yield {order[j]: image[j] for j in range(k)}


def find_induced_copy(g: Graph, h: Graph) -> Optional[Dict[int, int]]:
    """Injective map V(H) -> V(G) whose image induces a copy of H, or None.

    The search is exhaustive, so None proves there is no induced copy. When H
    is connected only components of G with at least |V(H)| vertices are
    searched, and clique components are skipped unless H is complete (every
    induced subgraph of a clique is a clique).
    """
    if h.n == 0:
        return {}
    if h.n > g.n:
        return None
    if is_connected(h):
        h_complete = is_complete(h)
        for comp in connected_components(g):
            if len(comp) < h.n:
                continue
            if not h_complete and is_clique(g, comp):
                continue
            allowed = 0
            for v in comp:
                allowed |= 1 << v
            for emb in _induced_embeddings(g, h, allowed):
                return emb
        return None
    for emb in _induced_embeddings(g, h, (1 << g.n) - 1):
        return emb
    return None


# --------------------------------------------------------------- isomorphism


def _refine_colors(graphs: Sequence[Graph]) -> List[List[int]]:
    """Colour refinement run jointly over several graphs, so colour IDs are
    comparable between them. Starts from degrees."""
    colors = [g.degrees() for g in graphs]
    num = len({c for cs in colors for c in cs})
    while True:
        table: Dict[tuple, int] = {}
        new = []
        for g, cs in zip(graphs, colors):
            row = []
            for v in range(g.n):
                sig = (cs[v], tuple(sorted(cs[w] for w in g.adj[v])))
                row.append(table.setdefault(sig, len(table)))
            new.append(row)
        colors = new
        if len(table) == num:
            return colors
        num = len(table)


def _isomorphisms(g: Graph, h: Graph) -> Iterator[Dict[int, int]]:
    if g.n != h.n or g.m != h.m or g.degree_sequence() != h.degree_sequence():
        return
    if g.n == 0:
        yield {}
        return
    cg, ch = _refine_colors([g, h])
    if sorted(cg) != sorted(ch):
        return
    class_mask: Dict[int, int] = {}
    for w, c in enumerate(ch):
        class_mask[c] = class_mask.get(c, 0) | (1 << w)
    order = _search_order(g)
    pos = {v: i for i, v in enumerate(order)}
    prev_nbrs = [[pos[q] for q in g.adj[v] if pos[q] < i] for i, v in enumerate(order)]
    hmasks = h.masks
    n = g.n

    def candidates(i, image, used):
        prev = prev_nbrs[i]
        required = 0
        for j in prev:
            required |= 1 << image[j]
        cand = class_mask[cg[order[i]]] & ~used
        if prev:
            cand &= hmasks[image[prev[0]]]
        return (w for w in _iter_bits(cand) if hmasks[w] & used == required)

    for image in _backtrack(n, candidates):
        yield {order[j]: image[j] for j in range(n)}


def is_isomorphic(g: Graph, h: Graph) -> Optional[Dict[int, int]]:
    """An isomorphism V(G) -> V(H) as a dict, or None."""
    for iso in _isomorphisms(g, h):
        return iso
    return None


def all_isomorphisms(g: Graph, h: Graph, cap: Optional[int] = None) -> List[Dict[int, int]]:
    """Every isomorphism G -> H, sorted by the image tuple ``(f(0), f(1), ...)``."""
    if cap is None:
        cap = resolve_cap(DEFAULT_ISO_CAP)
    size = max(g.n, h.n)
    if size > cap:
        raise CapExceeded("all_isomorphisms", size, cap)
    isos = list(_isomorphisms(g, h))
    isos.sort(key=lambda f: tuple(f[v] for v in range(g.n)))
    return isos


def is_isomorphism(g: Graph, h: Graph, f: Dict[int, int]) -> bool:
    """Check that ``f`` is a bijection V(G) -> V(H) preserving adjacency both ways."""
    if g.n != h.n or len(f) != g.n or sorted(f) != list(range(g.n)):
        return False
    if sorted(f.values()) != list(range(h.n)):
        return False
    if g.m != h.m:
        return False
    return all(h.has_edge(f[u], f[v]) for u, v in g.edges)


# ---------------------------------------------------------------- line graph


def line_graph(g: Graph) -> Tuple[Graph, Dict[Edge, int]]:
    """L(G) with vertex i the i-th edge of G in lexicographic order."""
    index = {e: i for i, e in enumerate(g.edges)}
    incident: List[List[int]] = [[] for _ in range(g.n)]
    for (u, v), i in index.items():
        incident[u].append(i)
        incident[v].append(i)
    edges = set()
    for inc in incident:
        for a in range(len(inc)):
            for b in range(a + 1, len(inc)):
                x, y = inc[a], inc[b]
                edges.add((x, y) if x < y else (y, x))
    return Graph(len(index), edges), index
