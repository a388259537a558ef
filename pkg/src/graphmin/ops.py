"""Replayable rewrite sequences.

A witness for a graph reduction is an ordered list of steps, each a local
complementation, a deletion, or a Pauli-measurement rewrite. Replaying the
list on the source graph must be defined at every step: targets alive, and
an x-measurement's recorded neighbor alive and adjacent (the neighbor is
omitted only when the measured vertex is isolated).
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, delete_vertex, local_complement, measure_x, measure_y, measure_z

LC = "lc"
DELETE = "delete"
MEASURE_Z = "measure_z"
MEASURE_Y = "measure_y"
MEASURE_X = "measure_x"

_KINDS = (LC, DELETE, MEASURE_Z, MEASURE_Y, MEASURE_X)


@dataclass(frozen=True)
class Step:
    op: str
    vertex: int
    neighbor: int | None = None

    def __post_init__(self):
        if self.op not in _KINDS:
            raise ValueError(f"unknown op kind {self.op!r}")
        if self.neighbor is not None and self.op != MEASURE_X:
            raise ValueError(f"{self.op} takes no neighbor")


def apply_step(g: Graph, step: Step) -> Graph:
    if step.op == LC:
        return local_complement(g, step.vertex)
    if step.op == DELETE:
        return delete_vertex(g, step.vertex)
    if step.op == MEASURE_Z:
        return measure_z(g, step.vertex)
    if step.op == MEASURE_Y:
        return measure_y(g, step.vertex)
    # measure_x: a recorded neighbor is mandatory unless the vertex was isolated
    if step.neighbor is None and g.neighbors(step.vertex):
        raise ValueError(f"x-measurement of non-isolated vertex {step.vertex} needs its neighbor recorded")
    return measure_x(g, step.vertex, step.neighbor)


def replay(g: Graph, steps) -> Graph:
    """Apply ``steps`` in order, validating each against the current graph."""
    out = g
    for step in steps:
        out = apply_step(out, step)
    return out


def steps_to_json(steps) -> list[dict]:
    out = []
    for s in steps:
        obj = {"op": s.op, "vertex": s.vertex}
        if s.neighbor is not None:
            obj["neighbor"] = s.neighbor
        out.append(obj)
    return out


def steps_from_json(objs) -> tuple[Step, ...]:
    steps = []
    for obj in objs:
        steps.append(Step(obj["op"], int(obj["vertex"]), obj.get("neighbor")))
    return tuple(steps)
