"""Graph rewrites with checkable index-monotonicity contracts.

Every rewrite returns a fresh graph, leaving the pre-image intact so the
caller can compare index values on both sides.

``add_edge`` strictly increases both degree-power indices on any graph
(degrees only rise).  ``shift_neighbors`` moves a set of neighbors from a
vertex ``v`` to a non-adjacent vertex ``u``: with ``d(u) >= d(v)`` the
first index strictly increases for any valid move set, and both indices
strictly increase when the move set is all of ``N(v) \\ N(u)`` (moving a
proper subset can decrease the second index; see the test suite for a
concrete example).

``case1_rewire`` and ``case2_rewire`` are the two family-specific
rewirings: re-attaching the last core-A vertex to the rest of core A
(applicable when ``2r <= n - 4``), and re-attaching the distinguished
vertex from ``C`` to core A (applicable when ``2r > n``).  Both strictly
increase the indices; the second does so by the exact amounts
``k(2 + 4r - 2n)`` and ``(2r - n + 1) k^2``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .families import FamilyParams, build_family, layout_of
from .graphs import Graph

__all__ = [
    "ShiftSpec",
    "add_edge",
    "shift_neighbors",
    "case1_rewire",
    "case2_rewire",
]


@dataclass(frozen=True)
class ShiftSpec:
    """A neighbor move: detach ``moved`` from ``v`` and attach them to ``u``.

    Valid against a graph when ``u != v``, ``u`` is not adjacent to ``v``,
    and ``moved`` is a nonempty subset of ``N(v)`` disjoint from
    ``N(u) ∪ {u}``.
    """

    u: int
    v: int
    moved: frozenset[int]


def add_edge(g: Graph, u: int, v: int) -> Graph:
    """Return the graph with the new edge ``uv``; both indices strictly increase."""
    if u == v:
        raise ValueError("cannot add a loop")
    if g.has_edge(u, v):
        raise ValueError(f"edge ({u}, {v}) already present")
    return g.with_edges_changed(added=[(u, v)])


def _check_shift(g: Graph, spec: ShiftSpec) -> None:
    # clauses checked in order; the first violated one is reported
    if spec.u == spec.v:
        raise ValueError("shift requires u != v")
    if g.has_edge(spec.u, spec.v):
        raise ValueError("shift requires u not adjacent to v")
    if not spec.moved:
        raise ValueError("moved set must be nonempty")
    not_nbr_v = [w for w in sorted(spec.moved) if not g.has_edge(spec.v, w)]
    if not_nbr_v:
        raise ValueError(f"moved vertices {not_nbr_v} are not neighbors of v={spec.v}")
    common = [w for w in sorted(spec.moved) if g.has_edge(spec.u, w)]
    if common:
        raise ValueError(f"moved vertices {common} are already neighbors of u={spec.u}")
    if spec.u in spec.moved:
        raise ValueError("u cannot be in the moved set")


def shift_neighbors(g: Graph, spec: ShiftSpec) -> Graph:
    """Apply a neighbor move, validating the spec against ``g`` first.

    The result may leave ``v`` isolated when all of its neighbors move;
    that is a legal output.
    """
    _check_shift(g, spec)
    moved = sorted(spec.moved)
    return g.with_edges_changed(
        removed=[(spec.v, w) for w in moved],
        added=[(spec.u, w) for w in moved],
    )


def case1_rewire(p: FamilyParams) -> Graph:
    """Detach the last core-A vertex from ``C ∪ B`` and attach it to the rest of core A.

    Requires ``n >= 6`` and ``2r <= n - 4`` (so at least one other core-A
    vertex exists and both indices strictly increase).
    """
    if p.n < 6:
        raise ValueError("case 1 rewiring requires n >= 6")
    if 2 * p.r > p.n - 4:
        raise ValueError(f"case 1 rewiring requires 2r <= n - 4, got r={p.r}, n={p.n}")
    g = build_family(p)
    lay = layout_of(p)
    removed = [(lay.a_last, c) for c in lay.c_vertices]
    removed += [(lay.a_last, b) for b in lay.b_vertices]
    added = [(lay.a_last, a) for a in lay.a_vertices]
    return g.with_edges_changed(removed=removed, added=added)


def case2_rewire(p: FamilyParams) -> Graph:
    """Move the distinguished vertex's attachment from ``C`` to the first ``k``
    core-A vertices.

    Requires ``n >= 6``, ``2r > n`` and ``n - r - 1 >= k`` (enough core-A
    vertices).  The first index increases by exactly ``k(2 + 4r - 2n)``
    and the second by ``(2r - n + 1) k^2``.
    """
    if p.n < 6:
        raise ValueError("case 2 rewiring requires n >= 6")
    if 2 * p.r <= p.n:
        raise ValueError(f"case 2 rewiring requires 2r > n, got r={p.r}, n={p.n}")
    if p.a_count < p.k:
        raise ValueError(
            f"case 2 rewiring requires n - r - 1 >= k, got {p.a_count} < {p.k}"
        )
    g = build_family(p)
    lay = layout_of(p)
    removed = [(lay.v, c) for c in lay.c_vertices]
    added = [(lay.v, a) for a in lay.a_all[: p.k]]
    return g.with_edges_changed(removed=removed, added=added)
