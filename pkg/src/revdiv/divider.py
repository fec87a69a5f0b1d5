"""Synthesis of non-restoring and restoring integer dividers.

The divider works on a combined remainder/dividend array of 2n wires.  The
left shift of the pair is never executed: iteration i simply addresses the
(n+1)-wire window ``rq[n-i .. 2n-i]``, so each arithmetic sub-circuit is
offset one position from the previous one.  The first iteration is a plain
subtractor (the partial remainder starts at zero), the next n-1 are
controlled adder-subtractors whose control-and-carry-in is the previous
quotient bit, and the non-restoring variant ends with one conditional
adder that fixes a negative remainder.

Each iteration's carry-out lands on a fresh wire and is itself the
iteration's quotient bit (the complement of the new sign), which then
drives the next iteration.  Two wires are recycled to meet the closed-form
qubit budgets: the first subtractor's carry-in wire (back to 0 afterwards)
hosts a later carry-out, and in the restoring variant the top of window 1
(guaranteed 0 once the remainder is restored) hosts iteration 2's
carry-out.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .adders import AdderBuilder, build_cond_add, get_adder, wrap_add_sub, wrap_subtractor
from .circuit import Circuit, ResourceReport, ccx, cx, measure, x
from .sim import apply, decode_register, encode_register

NON_RESTORING = "non_restoring"
RESTORING = "restoring"
KINDS = (NON_RESTORING, RESTORING)

EXHAUSTIVE_LIMIT = 6


@dataclass(frozen=True)
class DividerParams:
    n: int
    adder: AdderBuilder
    kind: str = NON_RESTORING

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if self.kind not in KINDS:
            raise ValueError(f"kind must be one of {KINDS}")


@dataclass
class DividerLayout:
    """Wire roles of a built divider circuit."""

    n: int
    kind: str
    adder_name: str
    dividend_qubits: list[int]
    divisor_qubits: list[int]
    divisor_pad: int
    iteration_windows: list[list[int]]  # window of iteration i at index i-1
    sign_qubits: list[int]  # persistent home of each iteration's sign bit
    quotient_positions: list[int]  # LSB first
    remainder_positions: list[int]  # LSB first
    carry_wires: list[int]  # carry-out wire of each iteration, in order
    restore_control: int | None  # conditional-adder control (non-restoring)
    ancilla_qubits: list[int]
    structure: list[str] = field(default_factory=list)


def _nonrestoring_trace(n: int, dividend: int, divisor: int):
    """Classical replay of the circuit: per-iteration quotient bits, signs,
    and the final (n+1)-bit window value."""
    top = 1 << (n + 1)
    w = 0
    ctrl = 1  # first iteration always subtracts
    qbits, signs = [], []
    for i in range(1, n + 1):
        w = ((w % (1 << n)) << 1) | ((dividend >> (n - i)) & 1)
        if ctrl:
            cout = 1 if w >= divisor else 0
            w = (w - divisor) % top
        else:
            cout = 1 if w + divisor >= top else 0
            w = (w + divisor) % top
        qbits.append(cout)
        signs.append((w >> n) & 1)
        ctrl = cout
    if signs[-1]:
        w = (w + divisor) % top
    return qbits, signs, w


def _restoring_trace(n: int, dividend: int, divisor: int):
    top = 1 << (n + 1)
    w = 0
    qbits = []
    for i in range(1, n + 1):
        w = ((w % (1 << n)) << 1) | ((dividend >> (n - i)) & 1)
        cout = 1 if w >= divisor else 0
        w = (w - divisor) % top
        if not cout:
            w = (w + divisor) % top
        qbits.append(cout)
    return qbits, w


def build_divider(params: DividerParams) -> tuple[Circuit, DividerLayout]:
    if params.kind == NON_RESTORING:
        return _build_nonrestoring(params)
    if params.n == 1:
        return _build_restoring_width1(params)
    return _build_restoring(params)


def _window(rq, n: int, i: int) -> list[int]:
    return [rq[k] for k in range(n - i, 2 * n - i + 1)]


def _inline_adder_shaped(c, frag, a, b, cin, cout, anc):
    """Map a fragment laid out as a|b|cin|cout|anc onto host wires; internal
    ancillas go to the host's shared ancilla block."""
    mapping = list(a) + list(b) + [cin, cout] + list(anc[: len(frag.ancillas)])
    c.extend(frag.circuit, mapping)


def _build_nonrestoring(params: DividerParams) -> tuple[Circuit, DividerLayout]:
    n, adder = params.n, params.adder
    m = n + 1
    n_anc = adder.ancilla_count(m)

    c = Circuit()
    rq = c.new_register("rq", 2 * n).qubits
    d = c.new_register("d", m).qubits
    q = c.new_register("q", n).qubits  # q[n-i] holds quotient bit i
    s = c.new_register("s", 1)[0]
    anc = c.new_register("anc", n_anc).qubits if n_anc else ()

    structure = []
    carry_wires = []

    # Step 1: plain subtractor.  Its carry-in wire comes back to 0 and is
    # recycled: for n >= 2 it is iteration 2's carry-out slot, for n = 1 the
    # conditional-adder control.
    cin1 = q[n - 2] if n >= 2 else s
    sub = wrap_subtractor(adder, m)
    _inline_adder_shaped(c, sub, d, _window(rq, n, 1), cin1, q[n - 1], anc)
    structure.append("sub")
    carry_wires.append(q[n - 1])

    # Step 2: controlled adder-subtractors; previous quotient bit is both
    # control and carry-in.
    addsub = wrap_add_sub(adder, m) if n >= 2 else None
    for i in range(2, n + 1):
        _inline_adder_shaped(
            c, addsub, d, _window(rq, n, i), q[n - i + 1], q[n - i], anc
        )
        structure.append("add_sub")
        carry_wires.append(q[n - i])

    # Step 3: copy the final sign onto the control wire and conditionally
    # add the divisor back.
    c.append(cx(q[0], s))
    c.append(x(s))
    cond = build_cond_add(m)
    c.extend(cond.circuit, list(d) + _window(rq, n, n) + [s])
    structure.append("cond_add")

    layout = DividerLayout(
        n=n,
        kind=NON_RESTORING,
        adder_name=adder.name,
        dividend_qubits=[rq[k] for k in range(n)],
        divisor_qubits=[d[k] for k in range(n)],
        divisor_pad=d[n],
        iteration_windows=[_window(rq, n, i) for i in range(1, n + 1)],
        sign_qubits=[rq[2 * n - i] for i in range(1, n)] + [s],
        quotient_positions=list(q),
        remainder_positions=[rq[k] for k in range(n)],
        carry_wires=carry_wires,
        restore_control=s,
        ancilla_qubits=list(anc),
        structure=structure,
    )
    return c, layout


def _restoring_cout_slots(rq, q, n: int) -> list[int]:
    """Carry-out wire of each restoring iteration (index i-1).

    Iteration 2 recycles the top of window 1, which the preceding
    restoration forces back to 0; the rest sit in the quotient register.
    """
    slots = [q[n - 2]]
    if n >= 2:
        slots.append(rq[2 * n - 1])
    for i in range(3, n + 1):
        slots.append(q[n - i])
    return slots


def _build_restoring(params: DividerParams) -> tuple[Circuit, DividerLayout]:
    n, adder = params.n, params.adder
    m = n + 1
    n_anc = adder.ancilla_count(m)

    c = Circuit()
    rq = c.new_register("rq", 2 * n).qubits
    d = c.new_register("d", m).qubits
    z = c.new_register("z", 1)[0]
    q = c.new_register("q", n - 1).qubits
    anc = c.new_register("anc", n_anc).qubits if n_anc else ()

    couts = _restoring_cout_slots(rq, q, n)
    sub = wrap_subtractor(adder, m)
    cond = build_cond_add(m)
    structure = []
    for i in range(1, n + 1):
        w = _window(rq, n, i)
        cw = couts[i - 1]
        _inline_adder_shaped(c, sub, d, w, z, cw, anc)
        structure.append("sub")
        c.append(x(cw))  # carry-out -> sign
        c.extend(cond.circuit, list(d) + w + [cw])
        structure.append("cond_add")
        c.append(x(cw))  # sign -> quotient bit

    quotient_positions = list(reversed(couts))
    layout = DividerLayout(
        n=n,
        kind=RESTORING,
        adder_name=adder.name,
        dividend_qubits=[rq[k] for k in range(n)],
        divisor_qubits=[d[k] for k in range(n)],
        divisor_pad=d[n],
        iteration_windows=[_window(rq, n, i) for i in range(1, n + 1)],
        sign_qubits=list(couts),  # sign lived here mid-iteration; ends as q-bit
        quotient_positions=quotient_positions,
        remainder_positions=[rq[k] for k in range(n)],
        carry_wires=list(couts),
        restore_control=None,
        ancilla_qubits=list(anc),
        structure=structure,
    )
    return c, layout


def _build_restoring_width1(params: DividerParams) -> tuple[Circuit, DividerLayout]:
    """Restoring divider at n=1 inside the 4n+1 wire budget.

    The only subtraction starts from a window whose top wire is a known 0,
    so b-a is computed as ~(~b + a) with the ripple carry folded into that
    top wire; the single carry wire then serves as the conditional-adder
    control and ends up holding the quotient bit.  The adder's declared
    workspace is still reserved so the qubit budget matches the closed form.
    """
    adder = params.adder
    n_anc = adder.ancilla_count(2)

    c = Circuit()
    rq = c.new_register("rq", 2).qubits
    d = c.new_register("d", 2).qubits
    z = c.new_register("z", 1)[0]
    anc = c.new_register("anc", n_anc).qubits if n_anc else ()

    c.append(x(rq[0]))
    c.append(x(rq[1]))
    c.append(ccx(d[0], rq[0], rq[1]))
    c.append(cx(d[0], rq[0]))
    c.append(x(rq[0]))
    c.append(x(rq[1]))
    c.append(cx(rq[1], z))  # z <- sign
    cond = build_cond_add(2)
    c.extend(cond.circuit, list(d) + list(rq) + [z])
    c.append(x(z))  # z <- quotient bit

    layout = DividerLayout(
        n=1,
        kind=RESTORING,
        adder_name=adder.name,
        dividend_qubits=[rq[0]],
        divisor_qubits=[d[0]],
        divisor_pad=d[1],
        iteration_windows=[[rq[0], rq[1]]],
        sign_qubits=[z],
        quotient_positions=[z],
        remainder_positions=[rq[0]],
        carry_wires=[z],
        restore_control=None,
        ancilla_qubits=list(anc),
        structure=["sub", "cond_add"],
    )
    return c, layout


def expected_final_state(
    circuit: Circuit, layout: DividerLayout, dividend: int, divisor: int
) -> list[int]:
    """Predicted terminal basis state for a valid division input."""
    n = layout.n
    state = [0] * circuit.qubit_count
    encode_register(layout.divisor_qubits, divisor, state)

    if layout.kind == NON_RESTORING:
        qbits, signs, w = _nonrestoring_trace(n, dividend, divisor)
        encode_register(layout.remainder_positions, w % (1 << n), state)
        # window tops above later windows keep the iteration's sign
        for i in range(1, n):
            state[layout.iteration_windows[i - 1][-1]] = signs[i - 1]
        state[layout.restore_control] = signs[-1]
        for i, qb in enumerate(qbits):
            state[layout.quotient_positions[n - 1 - i]] = qb
    else:
        qbits, w = _restoring_trace(n, dividend, divisor)
        encode_register(layout.remainder_positions, w % (1 << n), state)
        for i, qb in enumerate(qbits):
            state[layout.quotient_positions[n - 1 - i]] = qb
    return state


def run_division(
    circuit: Circuit, layout: DividerLayout, dividend: int, divisor: int
) -> tuple[int, int]:
    n = layout.n
    if divisor == 0:
        raise ZeroDivisionError("divisor must be non-zero")
    if not 0 <= dividend < (1 << n):
        raise ValueError(f"dividend {dividend} out of range for n={n}")
    if not 1 <= divisor < (1 << n) or n == 0:
        raise ValueError(f"divisor {divisor} out of range for n={n}")
    state = [0] * circuit.qubit_count
    encode_register(layout.dividend_qubits, dividend, state)
    encode_register(layout.divisor_qubits, divisor, state)
    out = apply(circuit, state)
    quotient = decode_register(out, layout.quotient_positions)
    remainder = decode_register(out, layout.remainder_positions)
    return quotient, remainder


@dataclass
class VerificationReport:
    params_desc: str
    total: int = 0
    passed: int = 0
    first_failure: str | None = None

    @property
    def ok(self) -> bool:
        return self.total > 0 and self.passed == self.total


def verify_exhaustive(
    params: DividerParams, limit: int = EXHAUSTIVE_LIMIT
) -> VerificationReport:
    """Simulate every (dividend, divisor>=1) pair and check quotient,
    remainder, divisor restoration and all ancilla terminal values."""
    n = params.n
    if n > limit:
        raise ValueError(f"n={n} exceeds exhaustive limit {limit}")
    circuit, layout = build_divider(params)
    report = VerificationReport(
        params_desc=f"n={n} adder={params.adder.name} kind={params.kind}"
    )
    for divisor in range(1, 1 << n):
        for dividend in range(1 << n):
            report.total += 1
            state = [0] * circuit.qubit_count
            encode_register(layout.dividend_qubits, dividend, state)
            encode_register(layout.divisor_qubits, divisor, state)
            out = apply(circuit, state)
            quotient = decode_register(out, layout.quotient_positions)
            remainder = decode_register(out, layout.remainder_positions)
            expect_q, expect_r = divmod(dividend, divisor)
            if (quotient, remainder) != (expect_q, expect_r):
                if report.first_failure is None:
                    report.first_failure = (
                        f"a={dividend} b={divisor}: got q={quotient} r={remainder}, "
                        f"want q={expect_q} r={expect_r}"
                    )
                continue
            if out != expected_final_state(circuit, layout, dividend, divisor):
                if report.first_failure is None:
                    report.first_failure = (
                        f"a={dividend} b={divisor}: terminal state mismatch"
                    )
                continue
            report.passed += 1
    return report


@dataclass
class CrosscheckReport:
    """Measured resources of a built divider against the closed forms."""

    n: int
    adder_name: str
    kind: str
    measured: ResourceReport
    adder_td: int
    adder_tc: int
    adder_anc: int
    formula_td: int
    formula_tc: int
    formula_qc: int
    tc_offset: int  # measured TC - formula TC
    td_within_bound: bool  # measured TD <= formula TD
    qc_match: bool
    condadd_tc: int  # measured conditional-adder Toffolis at width n+1
    condadd_target: int  # 3n+1
    condadd_tc_width_n: int  # the narrower reading of the same budget

    def as_dict(self) -> dict:
        out = dict(self.__dict__)
        out["measured"] = self.measured.as_dict()
        return out


def crosscheck_counts(params: DividerParams) -> CrosscheckReport:
    n, adder = params.n, params.adder
    m = n + 1
    circuit, _ = build_divider(params)
    measured = measure(circuit)

    frag = adder.build(m)
    frep = measure(frag.circuit)
    adder_td, adder_tc, adder_anc = (
        frep.toffoli_depth,
        frep.toffoli_count,
        len(frag.ancillas),
    )

    if params.kind == NON_RESTORING:
        formula_td = n * adder_td + 3 * n + 1
        formula_tc = n * adder_tc + 3 * n + 1
        formula_qc = 4 * n + 2 + adder_anc
    else:
        formula_td = n * adder_td + 3 * n * n + n
        formula_tc = n * adder_tc + 3 * n * n + n
        formula_qc = 4 * n + 1 + adder_anc

    condadd_tc = measure(build_cond_add(m).circuit).toffoli_count
    return CrosscheckReport(
        n=n,
        adder_name=adder.name,
        kind=params.kind,
        measured=measured,
        adder_td=adder_td,
        adder_tc=adder_tc,
        adder_anc=adder_anc,
        formula_td=formula_td,
        formula_tc=formula_tc,
        formula_qc=formula_qc,
        tc_offset=measured.toffoli_count - formula_tc,
        td_within_bound=measured.toffoli_depth <= formula_td,
        qc_match=measured.qubit_count == formula_qc,
        condadd_tc=condadd_tc,
        condadd_target=3 * n + 1,
        condadd_tc_width_n=measure(build_cond_add(n).circuit).toffoli_count
        if n >= 1
        else 0,
    )


def layout_from_circuit(circuit: Circuit) -> DividerLayout:
    """Reconstruct a divider layout from the register signature of an
    imported circuit (as written by :func:`build_divider`)."""
    names = {r.name: r for r in circuit.registers}
    if "rq" not in names or "d" not in names:
        raise ValueError("not a divider circuit: missing rq/d registers")
    rq = names["rq"].qubits
    d = names["d"].qubits
    n = len(rq) // 2
    if len(rq) != 2 * n or len(d) != n + 1:
        raise ValueError("not a divider circuit: bad register sizes")

    if "s" in names:
        kind = NON_RESTORING
        q = names["q"].qubits
        quotient = list(q)
    elif "z" in names:
        kind = RESTORING
        if n == 1:
            quotient = [names["z"][0]]
        else:
            q = names["q"].qubits
            quotient = list(reversed(_restoring_cout_slots(rq, q, n)))
    else:
        raise ValueError("not a divider circuit: missing s/z register")

    anc = list(names["anc"].qubits) if "anc" in names else []
    return DividerLayout(
        n=n,
        kind=kind,
        adder_name="unknown",
        dividend_qubits=[rq[k] for k in range(n)],
        divisor_qubits=[d[k] for k in range(n)],
        divisor_pad=d[n],
        iteration_windows=[_window(rq, n, i) for i in range(1, n + 1)],
        sign_qubits=[],
        quotient_positions=quotient,
        remainder_positions=[rq[k] for k in range(n)],
        carry_wires=[],
        restore_control=names["s"][0] if "s" in names else None,
        ancilla_qubits=anc,
        structure=[],
    )


def make_params(n: int, adder_name: str, kind: str) -> DividerParams:
    return DividerParams(n=n, adder=get_adder(adder_name), kind=kind)
