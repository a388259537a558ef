"""Vertex-minor decisions with witnesses, plus the reduction engines.

A target H is a vertex-minor of a source G when some sequence of local
complementations and deletions sends G to H; equivalently, some assignment
of x/y/z measurement rewrites to the surplus vertices lands in the target's
LC-orbit. The brute-force decider enumerates those assignments in canonical
order, so answers and witnesses are deterministic; every yes carries a step
sequence that replays to the target exactly.

The reductions shrink instances while preserving the answer: deleting
foliage vertices outside the target (source reduction), collapsing a whole
foliage partition onto representatives, and jointly deleting a vertex that
stays foliage-equivalent to a partner in both graphs (target reduction,
one-directional).
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass

from .foliage import (
    BlockShape,
    InvalidPartitionError,
    Partition,
    classify_block,
    foliage_equivalent,
    foliage_graph,
    is_foliage_partition,
    star_axil,
    _star_centers,
)
from .graph import Graph, delete_vertex, local_complement
from .ops import DELETE, LC, MEASURE_X, MEASURE_Y, MEASURE_Z, Step, apply_step, replay
from .orbit import BudgetExceededError, lc_orbit_paths

YES = "yes"
NO = "no"
UNKNOWN = "unknown"


@dataclass(frozen=True)
class Decision:
    """Answer plus, for a yes, a replayable witness and the deciding rule."""

    answer: str
    rule: str
    witness: tuple[Step, ...] | None = None

    def __post_init__(self):
        if (self.answer == YES) != (self.witness is not None):
            raise ValueError("witness present iff the answer is yes")


def _measured(g: Graph, order: tuple[int, ...], bases: tuple[str, ...]) -> tuple[Graph, list[Step]]:
    steps: list[Step] = []
    out = g
    for v, basis in zip(order, bases):
        if basis == "z":
            step = Step(MEASURE_Z, v)
        elif basis == "y":
            step = Step(MEASURE_Y, v)
        else:
            mask = out.neighbor_mask(v)
            nbr = (mask & -mask).bit_length() - 1 if mask else None
            step = Step(MEASURE_X, v, nbr)
        steps.append(step)
        out = apply_step(out, step)
    return out, steps


def decide_vertex_minor(g: Graph, h: Graph, node_budget: int | None = None) -> Decision:
    """Decide whether ``h`` is a vertex-minor of ``g``, constructively.

    Surplus vertices are measured in ascending label order; the basis
    assignment is enumerated in canonical (z, y, x) order, and the first
    assignment whose result lies in the target's LC-orbit wins. The witness
    is that measurement sequence followed by the local complements back to
    ``h``; it replays to ``h`` exactly. A blown orbit budget yields
    "unknown", never a wrong no.
    """
    g_labels = set(g.vertices)
    h_labels = set(h.vertices)
    if not h_labels <= g_labels:
        raise ValueError(f"target labels {sorted(h_labels - g_labels)} not in source")
    to_measure = tuple(sorted(g_labels - h_labels))

    try:
        if h.n == 0:
            orbit = {h.key(): (h, ())}
        else:
            orbit = lc_orbit_paths(h, node_budget)
    except BudgetExceededError:
        return Decision(UNKNOWN, "budget-exhausted")

    if not to_measure:
        hit = orbit.get(g.key())
        if hit is None:
            return Decision(NO, "brute-force")
        back = tuple(Step(LC, v) for v in reversed(hit[1]))
        return Decision(YES, "lc-equivalence", back)

    for bases in itertools.product(("z", "y", "x"), repeat=len(to_measure)):
        image, steps = _measured(g, to_measure, bases)
        hit = orbit.get(image.key())
        if hit is None:
            continue
        # each local complement is an involution, so the recorded path from
        # the target reverses into a path back to it
        steps.extend(Step(LC, v) for v in reversed(hit[1]))
        witness = tuple(steps)
        if replay(g, witness) != h:
            raise RuntimeError("witness replay mismatch; this is a bug")
        return Decision(YES, "brute-force", witness)
    return Decision(NO, "brute-force")


# -- source reduction ---------------------------------------------------------


def source_reduce(g: Graph, protected: set[int] | frozenset[int]) -> tuple[Graph, tuple[Step, ...]]:
    """Greedily remove foliage vertices outside ``protected``.

    Rules, in fixed order for reproducible witnesses: delete a twin, delete
    a leaf, or swap an axil with one of its leaves (two local complements)
    and delete it. Each preserves vertex-minor answers for any target on
    the protected labels that has no isolated vertices (the caller asserts
    that). Returns the reduced graph and the steps applied.
    """
    protected = set(protected)
    unknown = protected - set(g.vertices)
    if unknown:
        raise ValueError(f"protected labels {sorted(unknown)} not in graph")
    out = g
    ops: list[Step] = []
    while True:
        candidates = [v for v in out.vertices if v not in protected]
        step_added = False
        for v in candidates:
            if _is_twin(out, v):
                out = _apply(out, ops, Step(DELETE, v))
                step_added = True
                break
        if step_added:
            continue
        for v in candidates:
            if out.degree(v) == 1:
                out = _apply(out, ops, Step(DELETE, v))
                step_added = True
                break
        if step_added:
            continue
        for v in candidates:
            leaf = _leaf_of(out, v)
            if leaf is not None:
                out = _apply(out, ops, Step(LC, v))
                out = _apply(out, ops, Step(LC, leaf))
                out = _apply(out, ops, Step(DELETE, v))
                step_added = True
                break
        if not step_added:
            return out, tuple(ops)


def _apply(g: Graph, ops: list[Step], step: Step) -> Graph:
    ops.append(step)
    return apply_step(g, step)


def _is_twin(g: Graph, v: int) -> bool:
    row = g.neighbor_mask(v)
    for w in g.vertices:
        if w == v:
            continue
        shared = row & ~(1 << w)
        if shared and shared == g.neighbor_mask(w) & ~(1 << v):
            return True
    return False


def _leaf_of(g: Graph, v: int) -> int | None:
    """Smallest leaf whose axil is ``v``, if any."""
    for w in sorted(g.neighbors(v)):
        if g.neighbor_mask(w) == 1 << v:
            return w
    return None


# -- foliage-graph extraction ---------------------------------------------------


def extract_foliage_graph(
    g: Graph, w: Partition, reps: tuple[int, ...] | list[int]
) -> tuple[Graph, tuple[Step, ...]]:
    """Collapse each block of a foliage partition onto its representative.

    Per block: a singleton needs nothing; a star swaps its axil with the
    representative (two local complements, a no-op if they coincide) and
    deletes the remaining leaves; a clique or anticlique of twins deletes
    everyone but the representative. The result equals the quotient graph
    labeled by the representatives, which is verified before returning.
    """
    fg = foliage_graph(g, w, reps)  # validates the partition and representatives
    out = g
    ops: list[Step] = []
    for block, rep in zip(fg.partition.blocks, fg.representatives):
        if len(block) == 1:
            continue
        shape = classify_block(out, block)
        if shape is BlockShape.STAR and rep not in _star_centers(out, sorted(block)):
            axil = star_axil(out, block)
            out = _apply(out, ops, Step(LC, axil))
            out = _apply(out, ops, Step(LC, rep))
        for v in sorted(block):
            if v != rep:
                out = _apply(out, ops, Step(DELETE, v))
    if out != fg.graph:
        raise RuntimeError("block collapse does not match the quotient graph; this is a bug")
    return out, tuple(ops)


def foliage_source_reduce(
    g: Graph, h: Graph, w: Partition, reps: tuple[int, ...] | list[int]
) -> tuple[Graph, tuple[Step, ...]]:
    """Answer-preserving collapse of the source onto representatives.

    Requires every target label among the representatives and no isolated
    target vertices; then deciding ``h`` against the collapsed graph is the
    same as deciding it against ``g``.
    """
    rep_set = set(reps)
    missing = set(h.vertices) - rep_set
    if missing:
        raise ValueError(f"target labels {sorted(missing)} are not representatives")
    isolated = [v for v in h.vertices if h.degree(v) == 0]
    if isolated:
        raise ValueError(f"target has isolated vertices {isolated}")
    return extract_foliage_graph(g, w, reps)


# -- class persistence ---------------------------------------------------------


class ClassFate(enum.Enum):
    EQUIVALENT = "equivalent"
    ALL_ISOLATED = "all-isolated"
    EMPTY = "empty"
    VIOLATION = "violation"


def class_persistence_check(g: Graph, h: Graph, group: set[int] | frozenset[int]) -> ClassFate:
    """Classify what a pairwise-equivalent vertex set became in a minor.

    For a valid minor the survivors are pairwise foliage-equivalent, all
    isolated, or gone; VIOLATION is the test-oracle outcome that valid
    inputs never produce.
    """
    members = sorted(group)
    for i, v in enumerate(members):
        for u in members[i + 1:]:
            if not foliage_equivalent(g, v, u):
                raise ValueError(f"vertices {v} and {u} are not foliage-equivalent in the source")
    alive = [v for v in members if h.has_vertex(v)]
    if not alive:
        return ClassFate.EMPTY
    if all(foliage_equivalent(h, v, u) for i, v in enumerate(alive) for u in alive[i + 1:]):
        return ClassFate.EQUIVALENT
    if all(h.degree(v) == 0 for v in alive):
        return ClassFate.ALL_ISOLATED
    return ClassFate.VIOLATION


# -- target reduction -----------------------------------------------------------


def _reduce_at(g: Graph, v: int, w: int) -> Graph:
    """Delete ``v`` from one graph of a pair sharing ``v ~ w``.

    A leaf or twin ``v`` is deleted outright; when ``v`` is the axil of
    leaf ``w``, the two are swapped first so ``w`` inherits the adjacency.
    """
    if g.neighbor_mask(v) == 1 << w or _twin_pair(g, v, w):
        return delete_vertex(g, v)
    if g.neighbor_mask(w) == 1 << v:
        return delete_vertex(local_complement(local_complement(g, v), w), v)
    raise ValueError(f"vertices {v} and {w} are not foliage-equivalent")


def _twin_pair(g: Graph, v: int, w: int) -> bool:
    shared = g.neighbor_mask(v) & ~(1 << w)
    return bool(shared) and shared == g.neighbor_mask(w) & ~(1 << v)


def target_reduce(g: Graph, h: Graph, v: int, w: int) -> tuple[Graph, Graph]:
    """Jointly delete ``v`` from source and target, given ``v ~ w`` in both.

    Preserves the minor relation one-directionally: when the target was a
    minor before, the reduced target is a minor of the reduced source. The
    equivalence is recomputed here rather than trusted.
    """
    if v == w:
        raise ValueError("target reduction needs two distinct vertices")
    for graph, name in ((g, "source"), (h, "target")):
        graph._require(v)
        graph._require(w)
        if not foliage_equivalent(graph, v, w):
            raise ValueError(f"vertices {v} and {w} are not foliage-equivalent in the {name}")
    return _reduce_at(g, v, w), _reduce_at(h, v, w)


def foliage_target_reduce(
    g: Graph,
    h: Graph,
    w_target: Partition,
    reps_target: tuple[int, ...] | list[int],
) -> tuple[Graph, Graph]:
    """Collapse matching foliage blocks of a minor pair simultaneously.

    The target's partition, padded with singletons on the surplus source
    vertices, must be a foliage partition of the source (checked); both
    graphs are then collapsed onto the shared representatives, preserving
    the minor relation.
    """
    if not is_foliage_partition(h, w_target):
        raise InvalidPartitionError("not a foliage partition of the target")
    surplus = set(g.vertices) - set(h.vertices)
    lifted = Partition(list(w_target.blocks) + [{v} for v in sorted(surplus)])
    if not is_foliage_partition(g, lifted):
        raise InvalidPartitionError("lifted partition is not a foliage partition of the source")
    reps_full = list(reps_target) + sorted(surplus)
    reduced_g, _ = extract_foliage_graph(g, lifted, reps_full)
    reduced_h, _ = extract_foliage_graph(h, w_target, list(reps_target))
    return reduced_g, reduced_h
