"""Exact classical simulation of {NOT, CNOT, TOFFOLI} circuits on basis states.

Every gate in scope is classically reversible, so a basis state maps to a
basis state and the simulation is exact.  States are bit sequences
(LSB-first within registers); internally a single Python integer carries all
bits for speed.
"""
from __future__ import annotations

from .circuit import Circuit


class SimulationError(ValueError):
    pass


def apply(circuit: Circuit, state: list[int] | tuple[int, ...]) -> list[int]:
    """Run the circuit on a computational-basis state, one bit per qubit."""
    if len(state) != circuit.qubit_count:
        raise SimulationError(
            f"state length {len(state)} != qubit count {circuit.qubit_count}"
        )
    if any(b not in (0, 1) for b in state):
        raise SimulationError("state bits must be 0 or 1")
    v = 0
    for i, b in enumerate(state):
        v |= b << i
    v = apply_packed(circuit, v)
    return [(v >> i) & 1 for i in range(circuit.qubit_count)]


def apply_packed(circuit: Circuit, state: int) -> int:
    """Same as :func:`apply` on a bit-packed integer state (bit i = qubit i)."""
    for g in circuit.gates:
        q = g.qubits
        if g.name == "ccx":
            if (state >> q[0]) & 1 and (state >> q[1]) & 1:
                state ^= 1 << q[2]
        elif g.name == "cx":
            if (state >> q[0]) & 1:
                state ^= 1 << q[1]
        else:
            state ^= 1 << q[0]
    return state


def encode_register(positions, value: int, state: list[int]) -> list[int]:
    """Write ``value`` into ``state`` at the given qubit positions, LSB first."""
    if not 0 <= value < (1 << len(positions)):
        raise SimulationError(
            f"value {value} out of range for {len(positions)}-bit register"
        )
    for i, p in enumerate(positions):
        state[p] = (value >> i) & 1
    return state


def decode_register(state: list[int] | tuple[int, ...], positions) -> int:
    """Read the integer held at the given qubit positions, LSB first."""
    v = 0
    for i, p in enumerate(positions):
        v |= state[p] << i
    return v
