"""WL-dimension of motif parameters from the treewidth of their support."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .config import GUARDS, RUNTIME
from .graph import LabeledGraph
from .motif import MotifParameter, graphlet_parameter, ind_to_hom, sub_to_hom
from .spasm import enumerate_spasm
from .treewidth import exact_treewidth


@dataclass
class DimensionReport:
    dimension: int
    witness: LabeledGraph | None
    support_size: int
    treewidths: list = field(default_factory=list)
    method: str = "support"

    def to_dict(self) -> dict:
        return {
            "dimension": self.dimension,
            "witness": self.witness.to_dict() if self.witness is not None else None,
            "support_size": self.support_size,
            "treewidths": list(self.treewidths),
            "method": self.method,
        }


def _treewidths(graphs) -> list[int]:
    if RUNTIME.parallelism > 1 and len(graphs) > 8:
        with ProcessPoolExecutor(RUNTIME.parallelism) as pool:
            return list(pool.map(exact_treewidth, graphs))  # map keeps input order
    return [exact_treewidth(F) for F in graphs]


def _report(graphs, method: str) -> DimensionReport:
    tws = _treewidths(graphs)
    if not tws:
        return DimensionReport(1, None, 0, [], method)
    best = max(range(len(tws)), key=lambda i: (tws[i], -i))
    return DimensionReport(max(1, tws[best]), graphs[best], len(graphs), tws, method)


def wl_dimension_parameter(gamma: MotifParameter) -> DimensionReport:
    """``max(1, largest support treewidth)``; the witness is the first member attaining it."""
    return _report([F for F, _ in gamma.members()], "support")


def hereditary_treewidth(H: LabeledGraph, guard: int | None = None) -> int:
    """Largest treewidth over the homomorphic images (valid quotients) of ``H``."""
    return max(exact_treewidth(m.graph) for m in enumerate_spasm(H, guard).values())


def wl_dimension_sub(H: LabeledGraph, guard: int | None = None) -> DimensionReport:
    """Subgraph counting dimension via naive spasm enumeration."""
    members = [m.graph for m in enumerate_spasm(H, guard).values()]
    return _report(members, "spasm")


def wl_dimension_ind(H: LabeledGraph, cross_check: bool = False) -> DimensionReport:
    """Induced subgraph counting needs ``|V(H)| - 1`` dimensions (at least one).

    With ``cross_check`` the hom-basis expansion is computed and its support
    treewidth compared; a mismatch raises ``AssertionError``.
    """
    dim = max(1, H.n - 1)
    if not cross_check:
        return DimensionReport(dim, None, 0, [], "formula")
    rep = wl_dimension_parameter(ind_to_hom(H))
    if rep.dimension != dim:
        raise AssertionError(f"formula gives {dim}, support gives {rep.dimension}")
    rep.method = "formula+support"
    return rep


def wl_dimension_sub_parameter(H: LabeledGraph) -> DimensionReport:
    return wl_dimension_parameter(sub_to_hom(H))


def wl_dimension_graphlet(k: int) -> DimensionReport:
    return wl_dimension_parameter(graphlet_parameter(k))


def ind_cross_check_feasible(H: LabeledGraph) -> bool:
    missing = H.n * (H.n - 1) // 2 - H.m
    return H.n <= GUARDS.ind_n and (len(H.delta or ["1"]) + 1) ** missing <= GUARDS.ind_supersets


__all__ = [
    "DimensionReport",
    "hereditary_treewidth",
    "ind_cross_check_feasible",
    "wl_dimension_graphlet",
    "wl_dimension_ind",
    "wl_dimension_parameter",
    "wl_dimension_sub",
    "wl_dimension_sub_parameter",
]
