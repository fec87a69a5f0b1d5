"""Gate-level in-place adders and the divider's three wrapper sub-circuits.

All fragments share one wire layout: ``a[0..m-1]``, ``b[0..m-1]``, then
``cin``, then ``cout`` where present, then internal ancillas.  Every adder
computes |a>|b> -> |a>|a+b+cin mod 2^m> with the overflow bit XORed onto
``cout``; ``a``, ``cin`` and all internal ancillas come back to their input
values.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .circuit import Circuit, Register, ccx, cx, x


@dataclass(frozen=True)
class AdderFragment:
    """An in-place adder circuit plus its wire roles."""

    circuit: Circuit
    a: tuple[int, ...]
    b: tuple[int, ...]
    carry_in: int
    carry_out: int
    ancillas: tuple[int, ...]

    @property
    def width(self) -> int:
        return len(self.a)


@dataclass(frozen=True)
class ControlledFragment:
    """A fragment whose arithmetic is gated by a single control wire.

    For the add-subtract wrapper the control doubles as the carry-in; for
    the conditional adder there is no carry wire at all (addition is taken
    mod 2^m).
    """

    circuit: Circuit
    a: tuple[int, ...]
    b: tuple[int, ...]
    control: int
    carry_out: int | None
    ancillas: tuple[int, ...]

    @property
    def width(self) -> int:
        return len(self.a)


@dataclass(frozen=True)
class AdderBuilder:
    """A named in-place adder construction with a declared ancilla footprint."""

    name: str
    build: Callable[[int], AdderFragment]
    ancilla_count: Callable[[int], int]
    cost_model_id: str | None = None


def _adder_shell(m: int, n_anc: int) -> tuple[Circuit, AdderFragment]:
    if m < 1:
        raise ValueError("operand width must be >= 1")
    c = Circuit()
    a = c.new_register("a", m)
    b = c.new_register("b", m)
    cin = c.new_register("cin", 1)[0]
    cout = c.new_register("cout", 1)[0]
    anc: tuple[int, ...] = ()
    if n_anc:
        anc = c.new_register("anc", n_anc).qubits
    frag = AdderFragment(c, a.qubits, b.qubits, cin, cout, anc)
    return c, frag


def build_cuccaro(m: int) -> AdderFragment:
    """Ripple-carry adder in MAJ/UMA style; 2m-1 Toffolis, depth 2m-1.

    Bits 0..m-2 ripple the carry into the a-wires; the top bit writes its
    sum and the overflow with a single Toffoli.
    """
    c, frag = _adder_shell(m, 0)
    a, b, cin, cout = frag.a, frag.b, frag.carry_in, frag.carry_out

    carries = [cin] + list(a[:-1])  # wire holding carry into bit i
    for i in range(m - 1):
        ci = carries[i]
        c.append(cx(a[i], b[i]))
        c.append(cx(a[i], ci))
        c.append(ccx(ci, b[i], a[i]))
    # top bit: sum into b[m-1], majority into cout
    ct = carries[m - 1]
    c.append(cx(ct, b[m - 1]))
    c.append(cx(ct, a[m - 1]))
    c.append(ccx(a[m - 1], b[m - 1], cout))
    c.append(cx(ct, cout))
    c.append(cx(ct, a[m - 1]))
    c.append(cx(a[m - 1], b[m - 1]))
    for i in reversed(range(m - 1)):
        ci = carries[i]
        c.append(ccx(ci, b[i], a[i]))
        c.append(cx(a[i], ci))
        c.append(cx(ci, b[i]))
    return frag


def build_vbe(m: int) -> AdderFragment:
    """Carry-compute / sum / carry-uncompute ripple adder; 4m-2 Toffolis.

    Uses m-1 internal carry wires, all returned to 0.
    """
    c, frag = _adder_shell(m, m - 1)
    a, b, cin, cout = frag.a, frag.b, frag.carry_in, frag.carry_out
    carry = [cin] + list(frag.ancillas) + [cout]  # carry[i] = carry into bit i

    def carry_fwd(i):
        c.append(ccx(a[i], b[i], carry[i + 1]))
        c.append(cx(a[i], b[i]))
        c.append(ccx(carry[i], b[i], carry[i + 1]))

    def carry_rev(i):
        c.append(ccx(carry[i], b[i], carry[i + 1]))
        c.append(cx(a[i], b[i]))
        c.append(ccx(a[i], b[i], carry[i + 1]))

    def sum_(i):
        c.append(cx(a[i], b[i]))
        c.append(cx(carry[i], b[i]))

    for i in range(m):
        carry_fwd(i)
    c.append(cx(a[m - 1], b[m - 1]))
    sum_(m - 1)
    for i in reversed(range(m - 1)):
        carry_rev(i)
        sum_(i)
    return frag


CUCCARO = AdderBuilder("cuccaro", build_cuccaro, lambda m: 0, "cuccaro")
VBE = AdderBuilder("vbe", build_vbe, lambda m: m - 1, "vbe")

ADDERS = {b.name: b for b in (CUCCARO, VBE)}


def get_adder(name: str) -> AdderBuilder:
    try:
        return ADDERS[name]
    except KeyError:
        raise ValueError(f"unknown adder {name!r}; choose from {sorted(ADDERS)}")


def wrap_subtractor(adder: AdderBuilder, m: int) -> AdderFragment:
    """Turn an adder into |a>|b> -> |a>|b-a mod 2^m>.

    The subtrahend wires are complemented around the adder and the carry-in
    is driven high (b - a = b + ~a + 1); the carry-in wire is returned to
    its input value, and the carry-out receives the no-borrow flag
    (1 iff b >= a).  No Toffoli gates beyond the wrapped adder.
    """
    inner = adder.build(m)
    c, frag = _adder_shell(m, len(inner.ancillas))
    c.append(x(frag.carry_in))
    for q in frag.a:
        c.append(x(q))
    c.extend(inner.circuit, list(range(inner.circuit.qubit_count)))
    for q in frag.a:
        c.append(x(q))
    c.append(x(frag.carry_in))
    return frag


def wrap_add_sub(adder: AdderBuilder, m: int) -> ControlledFragment:
    """Controlled adder-subtractor: the control is also the carry-in.

    Control 0: |a>|b> -> |a>|a+b mod 2^m>.  Control 1: the subtrahend wires
    are flipped and the carry-in rides high, giving |a>|b-a mod 2^m>.  The
    carry-out is the addition overflow, resp. the no-borrow flag; in both
    cases it reads 1 exactly when the signed result is non-negative.
    """
    inner = adder.build(m)
    c, shell = _adder_shell(m, len(inner.ancillas))
    ctrl = shell.carry_in
    for q in shell.a:
        c.append(cx(ctrl, q))
    c.extend(inner.circuit, list(range(inner.circuit.qubit_count)))
    for q in shell.a:
        c.append(cx(ctrl, q))
    return ControlledFragment(
        c, shell.a, shell.b, ctrl, shell.carry_out, shell.ancillas
    )


def build_cond_add(m: int) -> ControlledFragment:
    """Conditional adder: |c>|a>|b> -> |c>|a>|b + c*a mod 2^m>.

    Carries are rippled into the a-wires unconditionally, only the sum
    writes are controlled, then the carries are uncomputed: 3(m-1)+1
    Toffolis, no ancilla, no carry wires.
    """
    if m < 1:
        raise ValueError("operand width must be >= 1")
    c = Circuit()
    a = c.new_register("a", m).qubits
    b = c.new_register("b", m).qubits
    ctrl = c.new_register("ctrl", 1)[0]

    for i in range(1, m):
        c.append(cx(a[i], b[i]))
    for i in range(m - 2, 0, -1):
        c.append(cx(a[i], a[i + 1]))
    for i in range(m - 1):
        c.append(ccx(a[i], b[i], a[i + 1]))
    for i in range(m - 1, 0, -1):
        c.append(ccx(ctrl, a[i], b[i]))
        c.append(ccx(a[i - 1], b[i - 1], a[i]))
    c.append(ccx(ctrl, a[0], b[0]))
    for i in range(1, m - 1):
        c.append(cx(a[i], a[i + 1]))
    for i in range(1, m):
        c.append(cx(a[i], b[i]))
    return ControlledFragment(c, a, b, ctrl, None, ())
