import numpy as np
import pytest
from pydantic import ValidationError

from vbfcodes import vecfun
from vbfcodes.codes import (
    CodeSpec,
    LinearCode,
    WeightDistribution,
    build_code,
    column_classes,
    contains_all_one,
    default_normal,
    dual_distance_at_least_3,
    generator_rows,
    gf2_rank,
    gf2_rref,
    hyperplane_normal_from_basis,
    in_rowspace,
    parse_weight_enumerator,
    pless_moments,
    weight_distribution_enum,
    weight_distribution_walsh,
    weight_enumerator_string,
)
from vbfcodes.errors import CapacityError, DomainError, WalshPathUnavailable
from vbfcodes.gf2m import FieldSpec, absolute_trace, mul, parse_element
from vbfcodes.vecfun import VectorialFunction, gold, identity, mm_product
from vbfcodes.verify import EXAMPLE1_ENUMERATOR, EXAMPLE2_ENUMERATOR, REMARK1_ENUMERATORS, REMARK2_ENUMERATORS


def test_gf2_rref():
    rref, pivots = gf2_rref(np.array([[1, 1, 0], [0, 1, 1], [1, 0, 1]]))
    assert pivots == [0, 1]
    assert rref.tolist() == [[1, 0, 1], [0, 1, 1]]
    assert gf2_rank(np.eye(4, dtype=np.uint8)) == 4
    assert in_rowspace(np.array([1, 1, 0]), rref, pivots)
    assert not in_rowspace(np.array([1, 0, 0]), rref, pivots)


def test_enumerator_strings():
    wd = parse_weight_enumerator("1+84z^{10}+63z^{12}+216z^{14}+63z^{16}+84z^{18}+z^{28}")
    assert wd.as_dict() == {0: 1, 10: 84, 12: 63, 14: 216, 16: 63, 18: 84, 28: 1}
    assert weight_enumerator_string(wd) == "1+84z^{10}+63z^{12}+216z^{14}+63z^{16}+84z^{18}+z^{28}"
    assert parse_weight_enumerator("1+30z^2+z").as_dict() == {0: 1, 1: 1, 2: 30}
    with pytest.raises(DomainError):
        parse_weight_enumerator("1+3x^2")


def test_weight_distribution_validation():
    with pytest.raises(ValidationError):
        WeightDistribution(entries=((4, 1), (2, 3)))
    with pytest.raises(ValidationError):
        WeightDistribution(entries=((0, 1), (2, 0)))
    zero = WeightDistribution.from_counts({0: 1})
    assert zero.is_zero_code
    assert zero.minimum_distance() == 0
    wd = WeightDistribution.from_rows([{"w": 0, "A": 1}, {"w": 3, "A": 2}])
    assert wd.to_rows() == [{"w": 0, "A": 1}, {"w": 3, "A": 2}]


def test_code_spec_preconditions(gold5):
    field = gold5.output_field
    with pytest.raises(DomainError):
        CodeSpec(gold5, 0)
    with pytest.raises(DomainError):
        CodeSpec(gold5, 1, offset_c=2)
    with pytest.raises(DomainError):
        CodeSpec(gold5, 1, offset_a=32)
    trace_zero = next(u for u in range(1, 32) if absolute_trace(u, field) == 0)
    with pytest.raises(DomainError):
        CodeSpec(gold5, 1, hyperplane_normal=trace_zero)
    with pytest.raises(DomainError):
        CodeSpec(gold5, 1, hyperplane_normal=0)


def test_default_normal(gold5, f16):
    assert default_normal(1, gold5.output_field) == 1
    assert mul(default_normal(9, gold5.output_field), 9, gold5.output_field) == 1
    with pytest.raises(DomainError):
        default_normal(1, f16)


def test_hyperplane_normal_from_basis(f16):
    basis = [parse_element(t, f16) for t in ("a^1", "a^2", "a^3")]
    u = hyperplane_normal_from_basis(basis, f16)
    assert all(absolute_trace(mul(u, h, f16), f16) == 0 for h in basis)
    assert absolute_trace(mul(u, 1, f16), f16) == 1
    with pytest.raises(DomainError):
        hyperplane_normal_from_basis([2, 4, 6], f16)


@pytest.mark.parametrize("m,c", sorted(REMARK1_ENUMERATORS))
def test_pn_full_codes(m, c, check_distribution):
    spec = CodeSpec(mm_product(m // 2), 1, offset_c=c)
    code = build_code(spec)
    wd = weight_distribution_enum(code)
    assert wd == parse_weight_enumerator(REMARK1_ENUMERATORS[(m, c)])
    assert code.dimension == 3 * m // 2
    assert not check_distribution(wd, code.length, code.dimension)
    assert weight_distribution_walsh(spec, code) == wd
    assert contains_all_one(code)
    assert dual_distance_at_least_3(code)


@pytest.mark.parametrize(
    "m,a",
    [key for key in sorted(REMARK2_ENUMERATORS) if key[0] < 9]
    + [pytest.param(*key, marks=pytest.mark.slow) for key in sorted(REMARK2_ENUMERATORS) if key[0] == 9],
)
def test_gold_full_codes(m, a):
    F = gold(m, 1)
    spec = CodeSpec(F, 1, offset_a=parse_element(a, F.input_field))
    code = build_code(spec)
    wd = weight_distribution_enum(code)
    assert wd == parse_weight_enumerator(REMARK2_ENUMERATORS[(m, a)])
    assert weight_distribution_walsh(spec, code) == wd
    assert wd.is_symmetric(code.length)


def test_remark2_parameters(gold5):
    spec = CodeSpec(gold5, 1, offset_a=parse_element("a^3", gold5.input_field))
    code = build_code(spec)
    assert code.parameters(weight_distribution_enum(code).minimum_distance()) == "[12,10,2]"


def test_example1_subcode(mm4, f16):
    basis = [parse_element(t, f16) for t in ("a^1", "a^2", "a^3")]
    spec = CodeSpec(mm4, 1, hyperplane_normal=hyperplane_normal_from_basis(basis, f16))
    code = build_code(spec)
    wd = weight_distribution_enum(code)
    assert (code.length, code.dimension, wd.minimum_distance()) == (120, 11, 52)
    assert wd == parse_weight_enumerator(EXAMPLE1_ENUMERATOR)
    assert weight_distribution_walsh(spec, code) == wd
    assert not contains_all_one(code)
    assert dual_distance_at_least_3(code)


def test_example2_subcode():
    spec = CodeSpec(gold(9, 1), 1, hyperplane_normal=1)
    code = build_code(spec)
    wd = weight_distribution_enum(code)
    assert code.parameters(wd.minimum_distance()) == "[256,17,112]"
    assert wd == parse_weight_enumerator(EXAMPLE2_ENUMERATOR)
    assert not contains_all_one(code)


def test_generator_rows_shape(gold5):
    spec = CodeSpec(gold5, 1)
    support = np.asarray(spec.selector.support())
    assert generator_rows(spec, support).shape == (10, 16)
    subcode = CodeSpec(gold5, 1, hyperplane_normal=1)
    assert generator_rows(subcode, support).shape == (9, 16)
    assert len(subcode.y_range) == 16


def test_selector_offset_keeps_all_one_codeword(gold5):
    code = build_code(CodeSpec(gold5, 1, offset_a=5, offset_c=1))
    assert code.dimension == 10
    assert contains_all_one(code)


def test_non_injective_code_falls_back_to_enumeration():
    # y and x rows coincide for the identity, so k = m
    spec = CodeSpec(identity(5), 1)
    code = build_code(spec)
    assert code.dimension == 5
    assert weight_distribution_enum(code).as_dict() == {0: 1, 8: 30, 16: 1}
    with pytest.raises(WalshPathUnavailable):
        weight_distribution_walsh(spec, code)
    classes = column_classes(code)
    assert classes["zero_columns"] == []


def test_enumeration_guard(gold5):
    code = build_code(CodeSpec(gold5, 1))
    with pytest.raises(CapacityError):
        weight_distribution_enum(code, max_dim=5)


def test_empty_support_is_rejected():
    field = FieldSpec.default(2)
    zero = VectorialFunction(field, field, np.zeros(4, dtype=np.int64))
    with pytest.raises(DomainError):
        build_code(CodeSpec(zero, 1))


def test_pless_moments(mm3):
    code = build_code(CodeSpec(mm3, 1))
    wd = weight_distribution_enum(code)
    for order, observed, predicted in pless_moments(wd, code.length, code.dimension):
        assert observed == predicted, f"moment {order}"


def test_dual_distance_detects_repeated_and_zero_columns():
    assert dual_distance_at_least_3(LinearCode.from_rows([[1, 0, 1], [0, 1, 1]]))
    repeated = LinearCode.from_rows([[1, 1, 0], [0, 0, 1]])
    assert column_classes(repeated)["duplicate_columns"] == [[0, 1]]
    assert not dual_distance_at_least_3(repeated)
    zero = LinearCode.from_rows([[1, 0, 0], [0, 1, 0]])
    assert column_classes(zero)["zero_columns"] == [2]
    assert not dual_distance_at_least_3(zero)


def test_walsh_path_batches_spectra_past_the_cell_limit(monkeypatch):
    monkeypatch.setattr(vecfun, "_SPECTRA_CELLS", 256)
    F = gold(5, 1)
    spec = CodeSpec(F, 1, offset_a=3)
    code = build_code(spec)
    assert weight_distribution_walsh(spec, code) == weight_distribution_enum(code)
    with pytest.raises(DomainError):
        F.component_spectra
