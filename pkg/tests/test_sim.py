import pytest

from revdiv.circuit import Circuit, ccx, cx, x
from revdiv.sim import (
    SimulationError,
    apply,
    apply_packed,
    decode_register,
    encode_register,
)


def _single_gate(name, wires, width):
    c = Circuit()
    c.new_register("w", width)
    c.append({"x": x, "cx": cx, "ccx": ccx}[name](*wires))
    return c


def test_not_truth_table():
    c = _single_gate("x", (0,), 1)
    assert apply(c, [0]) == [1]
    assert apply(c, [1]) == [0]


def test_cnot_truth_table():
    c = _single_gate("cx", (0, 1), 2)
    assert apply(c, [0, 0]) == [0, 0]
    assert apply(c, [1, 0]) == [1, 1]
    assert apply(c, [1, 1]) == [1, 0]
    assert apply(c, [0, 1]) == [0, 1]


def test_toffoli_truth_table():
    c = _single_gate("ccx", (0, 1, 2), 3)
    for a in range(2):
        for b in range(2):
            for t in range(2):
                out = apply(c, [a, b, t])
                assert out == [a, b, t ^ (a & b)]


def test_state_validation():
    c = _single_gate("x", (0,), 1)
    with pytest.raises(SimulationError):
        apply(c, [0, 0])
    with pytest.raises(SimulationError):
        apply(c, [2])


def test_packed_agrees_with_list():
    c = Circuit()
    c.new_register("w", 4)
    c.append(x(0))
    c.append(cx(0, 2))
    c.append(ccx(0, 2, 3))
    for v in range(16):
        bits = [(v >> i) & 1 for i in range(4)]
        out = apply(c, bits)
        packed = apply_packed(c, v)
        assert out == [(packed >> i) & 1 for i in range(4)]


def test_register_encode_decode_lsb_first():
    state = [0] * 5
    encode_register([3, 1, 0], 0b101, state)
    assert state == [1, 0, 0, 1, 0]
    assert decode_register(state, [3, 1, 0]) == 0b101
    with pytest.raises(SimulationError):
        encode_register([0, 1], 4, state)
