"""Dense state-vector oracle for the combinatorial rewrites.

Builds actual graph states (plus state with a controlled-Z per edge) and
checks that local complementation and the measurement rewrites track the
real quantum operations: the complemented graph's state equals a local
Clifford applied to the original, and each Pauli measurement outcome leaves
the measured graph's state up to single-qubit byproducts on the old
neighborhood. Dense vectors keep the oracle maximally trustworthy; the cap
on qubit count keeps it affordable.

Qubit order is ascending vertex label; the smallest label is the most
significant bit of the amplitude index.
"""

from __future__ import annotations

import itertools

import numpy as np

from . import cliffords
from .graph import Graph, measure_x, measure_y, measure_z

STATE_CAP = 12
DEFAULT_TOLERANCE = 1e-10

_PAULI = {"x": cliffords.X, "y": cliffords.Y, "z": cliffords.Z}


class StateCapError(ValueError):
    """Too many qubits for the dense oracle."""


def _check_cap(n: int, cap: int) -> None:
    if n > cap:
        raise StateCapError(f"{n} qubits exceeds the dense-state cap of {cap}")


def graph_state(g: Graph, cap: int = STATE_CAP) -> np.ndarray:
    """State vector of ``g``: CZ per edge applied to the uniform plus state.

    Every amplitude has magnitude 2^(-n/2); the sign at index ``x`` is the
    parity of edges whose two endpoint bits are both set in ``x``.
    """
    n = g.n
    _check_cap(n, cap)
    pos = {v: n - 1 - i for i, v in enumerate(g.vertices)}  # label -> bit position
    idx = np.arange(1 << n)
    signs = np.zeros(1 << n, dtype=np.int64)
    for a, b in g.edges():
        signs += (idx >> pos[a] & 1) & (idx >> pos[b] & 1)
    psi = np.where(signs & 1, -1.0, 1.0).astype(complex)
    return psi / np.sqrt(1 << n)


def apply_single(psi: np.ndarray, n: int, bit: int, gate: np.ndarray) -> np.ndarray:
    """Apply a 2x2 gate to the qubit at ``bit`` (counted from the LSB)."""
    shaped = psi.reshape(1 << (n - 1 - bit), 2, 1 << bit)
    return np.einsum("ab,ibj->iaj", gate, shaped).reshape(psi.shape)


def _overlap_is_unit(a: np.ndarray, b: np.ndarray, tol: float) -> bool:
    return bool(abs(abs(np.vdot(a, b)) - 1.0) <= tol)


def verify_lc_unitary(g: Graph, a: int, tol: float = DEFAULT_TOLERANCE, cap: int = STATE_CAP) -> bool:
    """Check that complementing at ``a`` is a local Clifford on the state.

    Applies the pinned convention (root of -iX at ``a``, root of +iZ on each
    neighbor) to the state of ``g`` and compares with the state of the
    complemented graph, up to global phase.
    """
    from .graph import local_complement

    n = g.n
    _check_cap(n, cap)
    pos = {v: n - 1 - i for i, v in enumerate(g.vertices)}
    psi = graph_state(g, cap)
    psi = apply_single(psi, n, pos[a], cliffords.LC_AT_VERTEX)
    for b in sorted(g.neighbors(a)):
        psi = apply_single(psi, n, pos[b], cliffords.LC_AT_NEIGHBOR)
    return _overlap_is_unit(psi, graph_state(local_complement(g, a), cap), tol)


_EIGENVECTORS = {
    ("z", +1): np.array([1, 0], dtype=complex),
    ("z", -1): np.array([0, 1], dtype=complex),
    ("x", +1): np.array([1, 1], dtype=complex) / np.sqrt(2),
    ("x", -1): np.array([1, -1], dtype=complex) / np.sqrt(2),
    ("y", +1): np.array([1, 1j], dtype=complex) / np.sqrt(2),
    ("y", -1): np.array([1, -1j], dtype=complex) / np.sqrt(2),
}

SEARCH_NEIGHBOR_CAP = 4  # exhaustive fallback is 24^k; closed forms carry bigger cases


class CorrectionSearchExhausted(RuntimeError):
    """No local byproduct matched; the pinned conventions are inconsistent."""


def _project_out(psi: np.ndarray, n: int, bit: int, basis: str, outcome: int) -> np.ndarray | None:
    """Post-measurement state on the remaining qubits, or None for probability 0."""
    vec = _EIGENVECTORS[(basis, outcome)]
    shaped = psi.reshape(1 << (n - 1 - bit), 2, 1 << bit)
    reduced = np.einsum("b,ibj->ij", vec.conj(), shaped).reshape(-1)
    norm = np.linalg.norm(reduced)
    if norm < 1e-12:
        return None
    return reduced / norm


def find_measurement_correction(
    g: Graph,
    a: int,
    basis: str,
    outcome: int,
    tol: float = DEFAULT_TOLERANCE,
    cap: int = STATE_CAP,
) -> dict[int, str] | None:
    """Byproduct correction making the measured state match the rewrite.

    Returns a {vertex: clifford-word} map (empty when none is needed), or
    None when the outcome has probability zero. Candidates are tried in
    order: identity, the frozen closed forms, then an exhaustive product
    search over the old neighborhood ordered by weight, so the reported
    correction is minimal.
    """
    if basis not in ("x", "y", "z"):
        raise ValueError(f"unknown basis {basis!r}")
    if outcome not in (+1, -1):
        raise ValueError(f"outcome must be +1 or -1, got {outcome}")
    n = g.n
    _check_cap(n, cap)
    pos = {v: n - 1 - i for i, v in enumerate(g.vertices)}
    neighbors = tuple(sorted(g.neighbors(a)))
    special = None
    special_nbrs: tuple[int, ...] = ()
    if basis == "x" and neighbors:
        special = neighbors[0]
        special_nbrs = tuple(sorted(g.neighbors(special) - {a}))

    post = _project_out(graph_state(g, cap), n, pos[a], basis, outcome)
    if post is None:
        return None

    if basis == "z":
        image = measure_z(g, a)
    elif basis == "y":
        image = measure_y(g, a)
    else:
        image = measure_x(g, a, special)
    target = graph_state(image, cap)
    m = image.n
    pos_rest = {v: m - 1 - i for i, v in enumerate(image.vertices)}

    def matches(correction: dict[int, np.ndarray]) -> bool:
        phi = target
        for v, gate in correction.items():
            phi = apply_single(phi, m, pos_rest[v], gate)
        return _overlap_is_unit(post, phi, tol)

    if matches({}):
        return {}
    for candidate in cliffords.measurement_correction_candidates(
        basis, outcome, neighbors, special, special_nbrs
    ):
        if matches(candidate):
            return {v: _clifford_name(gate) for v, gate in candidate.items()}
    if len(neighbors) <= SEARCH_NEIGHBOR_CAP:
        non_identity = cliffords.CLIFFORD_1[1:]
        for weight in range(1, len(neighbors) + 1):
            for support in itertools.combinations(neighbors, weight):
                for gates in itertools.product(non_identity, repeat=weight):
                    candidate = {v: gate for v, (_, gate) in zip(support, gates)}
                    if matches(candidate):
                        return {
                            v: name for v, (name, _) in zip(support, gates)
                        }
    raise CorrectionSearchExhausted(
        f"no local byproduct on {neighbors} matches the {basis}{'+' if outcome > 0 else '-'} "
        f"outcome at vertex {a}"
    )


def _clifford_name(gate: np.ndarray) -> str:
    key = cliffords._phase_free_key(gate)
    for name, member in cliffords.CLIFFORD_1:
        if cliffords._phase_free_key(member) == key:
            return name
    return "?"


def verify_measurement(
    g: Graph, a: int, basis: str, tol: float = DEFAULT_TOLERANCE, cap: int = STATE_CAP
) -> bool:
    """Check both outcomes of a Pauli measurement against the graph rewrite.

    The + outcome of z must match exactly (no correction); every other
    realizable outcome must match up to a local byproduct on the old
    neighborhood. Zero-probability outcomes are vacuous.
    """
    for outcome in (+1, -1):
        correction = find_measurement_correction(g, a, basis, outcome, tol, cap)
        if correction is None:
            continue
        if basis == "z" and outcome == +1 and correction != {}:
            return False
    return True
