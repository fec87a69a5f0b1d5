import pytest

from revdiv.adders import (
    ADDERS,
    build_cond_add,
    build_cuccaro,
    build_vbe,
    get_adder,
    wrap_add_sub,
    wrap_subtractor,
)
from revdiv.circuit import measure
from revdiv.sim import apply, decode_register, encode_register


def _run_adder(frag, a, b, cin):
    state = [0] * frag.circuit.qubit_count
    encode_register(frag.a, a, state)
    encode_register(frag.b, b, state)
    state[frag.carry_in] = cin
    out = apply(frag.circuit, state)
    return out


@pytest.mark.parametrize("builder", [build_cuccaro, build_vbe])
@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_adder_exhaustive(builder, m):
    frag = builder(m)
    for a in range(1 << m):
        for b in range(1 << m):
            for cin in (0, 1):
                out = _run_adder(frag, a, b, cin)
                total = a + b + cin
                assert decode_register(out, frag.b) == total % (1 << m)
                assert decode_register(out, frag.a) == a
                assert out[frag.carry_in] == cin
                assert out[frag.carry_out] == total >> m
                assert all(out[q] == 0 for q in frag.ancillas)


@pytest.mark.parametrize("m", [1, 2, 3, 5, 8])
def test_cuccaro_toffoli_counts(m):
    rep = measure(build_cuccaro(m).circuit)
    assert rep.toffoli_count == 2 * m - 1
    assert rep.toffoli_depth == 2 * m - 1


@pytest.mark.parametrize("m", [1, 2, 3, 5, 8])
def test_vbe_toffoli_count_and_ancillas(m):
    frag = build_vbe(m)
    rep = measure(frag.circuit)
    assert rep.toffoli_count == 4 * m - 2
    assert len(frag.ancillas) == m - 1


def test_adder_registry():
    assert set(ADDERS) == {"cuccaro", "vbe"}
    assert get_adder("cuccaro").ancilla_count(5) == 0
    assert get_adder("vbe").ancilla_count(5) == 4
    with pytest.raises(ValueError):
        get_adder("nope")


@pytest.mark.parametrize("name", ["cuccaro", "vbe"])
@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_subtractor_exhaustive(name, m):
    frag = wrap_subtractor(get_adder(name), m)
    for a in range(1 << m):
        for b in range(1 << m):
            out = _run_adder(frag, a, b, 0)
            assert decode_register(out, frag.b) == (b - a) % (1 << m)
            assert decode_register(out, frag.a) == a
            assert out[frag.carry_in] == 0
            assert out[frag.carry_out] == (1 if b >= a else 0)
            assert all(out[q] == 0 for q in frag.ancillas)


def test_subtractor_adds_no_toffolis():
    for name in ("cuccaro", "vbe"):
        m = 4
        inner = measure(get_adder(name).build(m).circuit)
        outer = measure(wrap_subtractor(get_adder(name), m).circuit)
        assert outer.toffoli_count == inner.toffoli_count


@pytest.mark.parametrize("name", ["cuccaro", "vbe"])
@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_add_sub_both_branches(name, m):
    frag = wrap_add_sub(get_adder(name), m)
    for a in range(1 << m):
        for b in range(1 << m):
            for ctrl in (0, 1):
                state = [0] * frag.circuit.qubit_count
                encode_register(frag.a, a, state)
                encode_register(frag.b, b, state)
                state[frag.control] = ctrl
                out = apply(frag.circuit, state)
                want = (b - a) if ctrl else (a + b)
                assert decode_register(out, frag.b) == want % (1 << m)
                assert decode_register(out, frag.a) == a
                assert out[frag.control] == ctrl
                # carry-out = 1 iff the signed result is non-negative
                nonneg = (b >= a) if ctrl else (a + b >= (1 << m))
                assert out[frag.carry_out] == int(nonneg)
                assert all(out[q] == 0 for q in frag.ancillas)


@pytest.mark.parametrize("m", [1, 2, 3, 4, 5])
def test_cond_add_exhaustive(m):
    frag = build_cond_add(m)
    for a in range(1 << m):
        for b in range(1 << m):
            for ctrl in (0, 1):
                state = [0] * frag.circuit.qubit_count
                encode_register(frag.a, a, state)
                encode_register(frag.b, b, state)
                state[frag.control] = ctrl
                out = apply(frag.circuit, state)
                want = (b + a) % (1 << m) if ctrl else b
                assert decode_register(out, frag.b) == want
                assert decode_register(out, frag.a) == a
                assert out[frag.control] == ctrl


@pytest.mark.parametrize("m", [1, 2, 3, 5, 8])
def test_cond_add_toffoli_count(m):
    rep = measure(build_cond_add(m).circuit)
    assert rep.toffoli_count == 3 * (m - 1) + 1
    assert rep.qubit_count == 2 * m + 1  # no ancillas


def test_width_validation():
    with pytest.raises(ValueError):
        build_cuccaro(0)
    with pytest.raises(ValueError):
        build_cond_add(0)
