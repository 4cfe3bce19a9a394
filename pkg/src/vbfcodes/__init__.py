"""Binary linear codes from vectorial Boolean functions."""

from .boolfun import BooleanFunction, WalshSpectrum, ZeroWalshSet, fwht, mobius
from .codes import (
    CodeSpec,
    LinearCode,
    WeightDistribution,
    build_code,
    contains_all_one,
    default_normal,
    dual_distance_at_least_3,
    hyperplane_normal_from_basis,
    parse_weight_enumerator,
    weight_distribution_enum,
    weight_distribution_walsh,
)
from .errors import CapacityError, DomainError, UnknownTargetError, VbfError, WalshPathUnavailable
from .gf2m import FieldSpec, absolute_trace, inverse, mul, parse_element, power, trace
from .vecfun import (
    VectorialFunction,
    from_descriptor,
    gold,
    kasami,
    maiorana_mcfarland,
    mm_product,
    niho,
    offset_function,
    power_function,
    welch,
)
from .verify import VerifyReport, verify

__all__ = [
    "BooleanFunction",
    "CapacityError",
    "CodeSpec",
    "DomainError",
    "FieldSpec",
    "LinearCode",
    "UnknownTargetError",
    "VbfError",
    "VectorialFunction",
    "VerifyReport",
    "WalshPathUnavailable",
    "WalshSpectrum",
    "WeightDistribution",
    "ZeroWalshSet",
    "absolute_trace",
    "build_code",
    "contains_all_one",
    "default_normal",
    "dual_distance_at_least_3",
    "from_descriptor",
    "fwht",
    "gold",
    "hyperplane_normal_from_basis",
    "inverse",
    "kasami",
    "maiorana_mcfarland",
    "mm_product",
    "mobius",
    "mul",
    "niho",
    "offset_function",
    "parse_element",
    "parse_weight_enumerator",
    "power",
    "power_function",
    "trace",
    "verify",
    "weight_distribution_enum",
    "weight_distribution_walsh",
    "welch",
]
