"""Orbit of a labeled graph under local complementation.

Reachability by local complementations decides local-Clifford equivalence of
the corresponding graph states, so a breadth-first closure with a canonical
dedup key is a complete (if exponential) equivalence decider at desk scale.
Expansion order is ascending vertex label, which makes orbits, paths, and
therefore witnesses reproducible.
"""

from __future__ import annotations

import os

from .graph import Graph, local_complement

_ENV_BUDGET = "GRAPHMIN_BUDGET"
DEFAULT_NODE_BUDGET = 1 << 20


class BudgetExceededError(RuntimeError):
    """Orbit closure grew past the node budget; the caller must not guess."""


def default_budget() -> int:
    raw = os.environ.get(_ENV_BUDGET)
    if raw is None:
        return DEFAULT_NODE_BUDGET
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{_ENV_BUDGET} must be an integer, got {raw!r}") from None
    if value < 1:
        raise ValueError(f"{_ENV_BUDGET} must be positive, got {value}")
    return value


def lc_orbit_paths(g: Graph, node_budget: int | None = None) -> dict[tuple, tuple[Graph, tuple[int, ...]]]:
    """Breadth-first closure of ``g`` under local complementation.

    Returns a map from canonical key to (member graph, generating vertex
    sequence). Replaying the sequence of local complements on ``g`` yields
    the member; every sequence is shortest and lexicographically first at
    its depth.
    """
    if g.n == 0:
        raise ValueError("orbit of the empty graph is undefined")
    budget = default_budget() if node_budget is None else node_budget
    seen: dict[tuple, tuple[Graph, tuple[int, ...]]] = {g.key(): (g, ())}
    frontier = [(g, ())]
    while frontier:
        nxt = []
        for graph, path in frontier:
            for v in graph.vertices:
                image = local_complement(graph, v)
                k = image.key()
                if k in seen:
                    continue
                if len(seen) >= budget:
                    raise BudgetExceededError(
                        f"orbit exceeds node budget {budget}; refusing to answer"
                    )
                seen[k] = (image, path + (v,))
                nxt.append((image, path + (v,)))
        frontier = nxt
    return seen


def lc_orbit(g: Graph, node_budget: int | None = None) -> set[Graph]:
    """All graphs reachable from ``g`` by local complementations."""
    return {graph for graph, _ in lc_orbit_paths(g, node_budget).values()}


def lc_path(g: Graph, h: Graph, node_budget: int | None = None) -> tuple[int, ...] | None:
    """A vertex sequence of local complements sending ``g`` to ``h``.

    None when the graphs are not LC-equivalent (including differing label
    sets). The search stops as soon as ``h`` appears in the closure.
    """
    if g.vertices != h.vertices:
        return None
    if g == h:
        return ()
    if g.n == 0:
        return None  # unreachable: equal empty graphs already matched
    budget = default_budget() if node_budget is None else node_budget
    target = h.key()
    seen: dict[tuple, tuple[int, ...]] = {g.key(): ()}
    frontier = [(g, ())]
    while frontier:
        nxt = []
        for graph, path in frontier:
            for v in graph.vertices:
                image = local_complement(graph, v)
                k = image.key()
                if k in seen:
                    continue
                if k == target:
                    return path + (v,)
                if len(seen) >= budget:
                    raise BudgetExceededError(
                        f"orbit exceeds node budget {budget}; refusing to answer"
                    )
                seen[k] = path + (v,)
                nxt.append((image, path + (v,)))
        frontier = nxt
    return None


def lc_equivalent(g: Graph, h: Graph, node_budget: int | None = None) -> bool:
    """Whether two graphs on the same labels are related by local complements."""
    return lc_path(g, h, node_budget) is not None
