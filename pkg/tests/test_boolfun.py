import numpy as np
import pytest

from vbfcodes.boolfun import BooleanFunction, fwht, mobius, to_signs
from vbfcodes.errors import DomainError
from vbfcodes.gf2m import FieldSpec, absolute_trace, inverse, mul, mul_array, root, trace_array


def test_fwht_of_constant():
    spectrum = fwht(to_signs(np.zeros(16, dtype=np.uint8)))
    assert spectrum[0] == 16
    assert not spectrum[1:].any()


def test_fwht_is_an_involution_up_to_scale(rng):
    signs = to_signs(rng.integers(0, 2, size=64, dtype=np.uint8))
    assert np.array_equal(fwht(fwht(signs)), 64 * signs)


def _wide(*ms):
    return [m if m < 9 else pytest.param(m, marks=pytest.mark.slow) for m in ms]


@pytest.mark.parametrize("m", _wide(*range(4, 11)))
def test_parseval(m, rng):
    field = FieldSpec.default(m)
    for _ in range(1000):
        assert BooleanFunction.random(field, rng).walsh_full().parseval_holds()


def test_fast_spectrum_matches_direct_sum(f32, rng):
    f = BooleanFunction.random(f32, rng)
    spectrum = f.walsh_full()
    for a in range(f32.order):
        assert spectrum[a] == f.walsh_at(a)


@pytest.mark.parametrize("m", _wide(6, 7, 8, 9, 10))
def test_spectrum_matches_double_sum(m, rng):
    field = FieldSpec.default(m)
    xs = field.elements()
    f = BooleanFunction.random(field, rng)
    characters = 1 - 2 * trace_array(mul_array(xs[:, None], xs[None, :], field), field).astype(np.int64)
    expected = characters @ (1 - 2 * f.table.astype(np.int64))
    assert np.array_equal(f.walsh_full().values, expected)


def test_linear_function_spectrum_uses_trace_pairing(f32):
    a = 13
    values = BooleanFunction.linear(f32, a).walsh_full().values
    assert values[a] == 32
    assert np.count_nonzero(values) == 1


def test_bent_and_semibent(mm3, gold5):
    assert mm3.component(1).is_bent()
    assert gold5.component(1).is_semibent()
    assert gold5.component(1).nonlinearity() == 12
    with pytest.raises(DomainError):
        gold5.component(1).is_bent()
    with pytest.raises(DomainError):
        mm3.component(1).is_semibent()


def test_balanced_and_weight(gold5):
    f = gold5.component(1)
    assert f.is_balanced()
    assert f.weight() == 16
    assert len(f.support()) == 16


def test_addition_is_xor(f32, rng):
    f = BooleanFunction.random(f32, rng)
    assert f + f == BooleanFunction.zero(f32)
    with pytest.raises(DomainError):
        f + BooleanFunction.zero(FieldSpec.default(4))


def test_hex_encoding(f32):
    f = BooleanFunction.linear(f32, 1)
    assert len(f.to_hex()) == 8
    assert BooleanFunction.from_hex(f32, f.to_hex()) == f
    with pytest.raises(DomainError):
        BooleanFunction.from_hex(f32, "ff")
    with pytest.raises(DomainError):
        BooleanFunction.from_hex(f32, "zz")


def test_anf_and_degree(f32):
    f = BooleanFunction.trace_monomial(f32, 3)
    assert np.array_equal(mobius(f.anf()), f.table)
    assert f.algebraic_degree() == 2
    assert BooleanFunction.linear(f32, 5).algebraic_degree() == 1
    assert BooleanFunction.zero(f32).algebraic_degree() == 0
    # inverse function x^30 = x^(2^5 - 2) has degree m - 1
    assert BooleanFunction.trace_monomial(f32, 30).algebraic_degree() == 4


def test_autocorrelation_spectrum_matches_pointwise(f32, rng):
    f = BooleanFunction.random(f32, rng)
    spectrum = f.autocorrelation_spectrum()
    assert spectrum[0] == 32
    for b in range(f32.order):
        assert spectrum[b] == f.autocorrelation(b)


@pytest.mark.parametrize("lam", [1, 2, 7, 30])
def test_gold_component_zero_walsh_hyperplane(gold5, lam):
    field = gold5.output_field
    f = gold5.component(lam)
    zeros = f.zero_walsh_set()
    assert zeros.is_hyperplane
    assert zeros.dimension == 4
    assert zeros.normal == root(inverse(lam, field), 3, field)
    assert all(absolute_trace(mul(a, zeros.normal, field), field) == 0 for a in zeros.elements)
    assert f.autocorrelation(zeros.normal) == -32

