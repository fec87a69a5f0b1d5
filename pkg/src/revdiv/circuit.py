"""Reversible-circuit intermediate representation over {NOT, CNOT, TOFFOLI}.

Circuits are ordered gate lists over integer-indexed qubits, with named
disjoint registers.  They are append-only: builders grow a circuit and hand
it out, composition copies gates with an index remap.  Toffoli depth is
computed by dependency scheduling in which NOT/CNOT gates impose ordering
but contribute no depth of their own.
"""
from __future__ import annotations

from dataclasses import dataclass, field

GATE_ARITY = {"x": 1, "cx": 2, "ccx": 3}


class CircuitError(ValueError):
    """Raised for structurally invalid gates, registers or mappings."""


@dataclass(frozen=True)
class Gate:
    """One gate: ``x`` (NOT), ``cx`` (CNOT) or ``ccx`` (Toffoli).

    Controls come first, target last.  All operands must be distinct.
    """

    name: str
    qubits: tuple[int, ...]

    def __post_init__(self):
        if self.name not in GATE_ARITY:
            raise CircuitError(f"unknown gate {self.name!r}")
        if len(self.qubits) != GATE_ARITY[self.name]:
            raise CircuitError(
                f"{self.name} takes {GATE_ARITY[self.name]} operands, "
                f"got {len(self.qubits)}"
            )
        if len(set(self.qubits)) != len(self.qubits):
            raise CircuitError(f"duplicate operands in {self.name}{self.qubits}")
        if any(q < 0 for q in self.qubits):
            raise CircuitError(f"negative qubit index in {self.name}{self.qubits}")

    @property
    def target(self) -> int:
        return self.qubits[-1]

    @property
    def controls(self) -> tuple[int, ...]:
        return self.qubits[:-1]


def x(target: int) -> Gate:
    return Gate("x", (target,))


def cx(control: int, target: int) -> Gate:
    return Gate("cx", (control, target))


def ccx(control1: int, control2: int, target: int) -> Gate:
    return Gate("ccx", (control1, control2, target))


@dataclass(frozen=True)
class Register:
    """Named ordered group of qubits; index 0 is the least significant bit."""

    name: str
    qubits: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.qubits)

    def __getitem__(self, i):
        return self.qubits[i]


@dataclass
class Circuit:
    """Ordered gate list over ``qubit_count`` wires with disjoint registers."""

    qubit_count: int = 0
    registers: list[Register] = field(default_factory=list)
    gates: list[Gate] = field(default_factory=list)

    def new_register(self, name: str, size: int) -> Register:
        """Allocate ``size`` fresh wires as a contiguous named register."""
        if size < 0:
            raise CircuitError("register size must be non-negative")
        if any(r.name == name for r in self.registers):
            raise CircuitError(f"duplicate register name {name!r}")
        reg = Register(name, tuple(range(self.qubit_count, self.qubit_count + size)))
        self.qubit_count += size
        self.registers.append(reg)
        return reg

    def register(self, name: str) -> Register:
        for r in self.registers:
            if r.name == name:
                return r
        raise CircuitError(f"no register named {name!r}")

    def append(self, gate: Gate) -> "Circuit":
        if any(q >= self.qubit_count for q in gate.qubits):
            raise CircuitError(
                f"gate {gate.name}{gate.qubits} out of range for "
                f"{self.qubit_count}-qubit circuit"
            )
        self.gates.append(gate)
        return self

    def extend(self, fragment: "Circuit", mapping: list[int] | tuple[int, ...]) -> "Circuit":
        """Append every gate of ``fragment``, remapped through ``mapping``.

        ``mapping[k]`` is the host wire for fragment wire ``k``.  The fragment
        is left untouched.
        """
        if len(mapping) != fragment.qubit_count:
            raise CircuitError(
                f"mapping length {len(mapping)} != fragment qubit count "
                f"{fragment.qubit_count}"
            )
        if len(set(mapping)) != len(mapping):
            raise CircuitError("mapping entries must be pairwise distinct")
        if any(q < 0 or q >= self.qubit_count for q in mapping):
            raise CircuitError("mapping entry out of range for host circuit")
        for g in fragment.gates:
            self.gates.append(Gate(g.name, tuple(mapping[q] for q in g.qubits)))
        return self

    def reversed(self) -> "Circuit":
        """Same wires, gates in reverse order (each gate is self-inverse)."""
        rev = Circuit(self.qubit_count, list(self.registers), list(reversed(self.gates)))
        return rev

    def __eq__(self, other) -> bool:
        if not isinstance(other, Circuit):
            return NotImplemented
        return (
            self.qubit_count == other.qubit_count
            and self.registers == other.registers
            and self.gates == other.gates
        )


@dataclass(frozen=True)
class ResourceReport:
    """Measured (Toffoli depth, Toffoli count, qubit count) of one circuit."""

    toffoli_depth: int
    toffoli_count: int
    qubit_count: int
    gate_total: int

    def as_dict(self) -> dict:
        return {
            "toffoli_depth": self.toffoli_depth,
            "toffoli_count": self.toffoli_count,
            "qubit_count": self.qubit_count,
            "gate_total": self.gate_total,
        }


def append_gate(circuit: Circuit, gate: Gate) -> Circuit:
    return circuit.append(gate)


def append_circuit(host: Circuit, fragment: Circuit, mapping: list[int]) -> Circuit:
    return host.extend(fragment, mapping)


def measure(circuit: Circuit) -> ResourceReport:
    """Toffoli depth/count and qubit count by dependency scheduling.

    Every gate waits for all earlier gates it shares a wire with.  A Toffoli
    then sits one level deeper; NOT/CNOT stay on the level they inherit, so a
    Clifford-only circuit has depth 0.
    """
    level = [0] * circuit.qubit_count
    depth = 0
    count = 0
    for g in circuit.gates:
        v = max(level[q] for q in g.qubits)
        if g.name == "ccx":
            v += 1
            count += 1
            if v > depth:
                depth = v
        for q in g.qubits:
            level[q] = v
    return ResourceReport(
        toffoli_depth=depth,
        toffoli_count=count,
        qubit_count=circuit.qubit_count,
        gate_total=len(circuit.gates),
    )
