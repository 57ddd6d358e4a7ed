"""Two independent line graph tests: forbidden induced subgraphs and Krausz
decompositions."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional

from .catalog import beineke_graphs
from .errors import CapExceeded, resolve_cap
from .graph import Graph, connected_components, find_induced_copy
from .krausz import DEFAULT_COMPONENT_CAP, Decomposition, _component_decompositions


@dataclass(frozen=True)
class ForbiddenWitness:
    beineke_index: int  # 1..9
    embedding: Dict[int, int]  # catalog vertex -> input vertex

    def image(self) -> List[int]:
        return sorted(self.embedding.values())


def _witnesses(L: Graph, stop_at_first: bool) -> List[ForbiddenWitness]:
    out = []
    for index, b in enumerate(beineke_graphs(), start=1):
        emb = find_induced_copy(L, b)
        if emb is not None:
            out.append(ForbiddenWitness(index, emb))
            if stop_at_first:
                break
    return out


def is_line_graph_beineke(L: Graph):
    """True if ``L`` has no induced copy of any Beineke graph, otherwise the
    witness for the smallest index that embeds."""
    found = _witnesses(L, stop_at_first=True)
    return True if not found else found[0]


def forbidden_witness_all(L: Graph) -> List[ForbiddenWitness]:
    """One witness for every Beineke index that embeds in ``L``."""
    return _witnesses(L, stop_at_first=False)


def is_line_graph_krausz(L: Graph, cap: Optional[int] = None) -> Optional[Decomposition]:
    """The lexicographically least line graph decomposition of ``L``, or None.

    Components are searched independently; any component larger than ``cap``
    (default 24 vertices) is refused with :class:`CapExceeded`. Taking the
    least decomposition per component gives the global least one, because no
    decomposition of a component is a proper subset of another.
    """
    if cap is None:
        cap = resolve_cap(DEFAULT_COMPONENT_CAP)
    comps = connected_components(L)
    for comp in comps:
        if len(comp) > cap:
            raise CapExceeded(f"component starting at vertex {comp[0]}", len(comp), cap)
    sets = []
    for comp in comps:
        options = _component_decompositions(L, comp)
        if not options:
            return None
        sets.extend(options[0])
    return Decomposition(sets)


def is_line_graph(L: Graph) -> bool:
    return is_line_graph_beineke(L) is True
