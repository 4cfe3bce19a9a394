"""
Closed-form weight distributions, parameter formulas and the counting
lemmas they rest on, each paired with an empirical counterpart.

Every rational formula is evaluated with Fraction and must come out as a
non-negative integer.
"""

import logging
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Literal

import numpy as np
from pydantic import BaseModel, ConfigDict

from .boolfun import BooleanFunction
from .codes import WeightDistribution
from .errors import DomainError
from .gf2m import FieldElement, FieldSpec, absolute_trace, inverse, mul, mul_array, power_array, trace_array
from .vecfun import VectorialFunction

logger = logging.getLogger("vbf_theory")

KlooConvention = Literal["zero_maps_to_zero", "exclude_zero"]


def _pow2(e) -> Fraction:
    return Fraction(2) ** e


def _exact(value: Fraction, label: str) -> int:
    if value.denominator != 1 or value < 0:
        raise ArithmeticError(f"{label} evaluated to {value}, not a non-negative integer")
    return int(value)


class PredictedDistribution(BaseModel):
    """A closed-form distribution together with where it came from."""
    model_config = ConfigDict(frozen=True)

    provenance: str
    params: dict[str, int]
    distribution: WeightDistribution

    def matches(self, empirical: WeightDistribution) -> bool:
        return self.distribution == empirical


def _predicted(provenance: str, params: dict, rows: list[tuple[Fraction, Fraction]]) -> PredictedDistribution:
    counts: Counter = Counter()
    for w, a in rows:
        counts[_exact(w, f"{provenance} weight")] += _exact(a, f"{provenance} multiplicity at w = {w}")
    return PredictedDistribution(
        provenance=provenance,
        params=params,
        distribution=WeightDistribution.from_counts(counts),
    )


def _require_even(m: int) -> None:
    if m % 2 or m < 4:
        raise DomainError(f"m must be even and at least 4, got {m}")


def _require_odd(m: int, least: int = 5) -> None:
    if m % 2 == 0 or m < least:
        raise DomainError(f"m must be odd and at least {least}, got {m}")


def pn_lengths(m: int) -> tuple[int, int]:
    """Possible supports sizes 2^(m-1) -+ 2^(m/2-1) of a bent component."""
    _require_even(m)
    return (1 << (m - 1)) - (1 << (m // 2 - 1)), (1 << (m - 1)) + (1 << (m // 2 - 1))


def _check_pn_length(m: int, n_f: int) -> None:
    if n_f not in pn_lengths(m):
        raise DomainError(f"n_f must be one of {pn_lengths(m)} for m = {m}, got {n_f}")


# --- weight distribution tables ------------------------------------------------

def table1_prediction(m: int, n_f: int) -> PredictedDistribution:
    """Full code of a PN (m, m/2)-function, dimension 3m/2."""
    _check_pn_length(m, n_f)
    n = Fraction(n_f)
    h = m // 2
    outer = _pow2(h - 1) * n - n * n / _pow2(m) - _pow2(m - 2) + Fraction(1, 4)
    middle = (2 * n * n - _pow2(3 * h) * n) / _pow2(m) + _pow2(3 * h) - 3 * _pow2(m - 1) - Fraction(1, 2)
    inner = _pow2(m) - 1
    return _predicted("table1", {"m": m, "n_f": n_f}, [
        (Fraction(0), Fraction(1)),
        (n / 2 - _pow2(h - 1), outer),
        (n / 2 - _pow2(h - 2), inner),
        (n / 2, middle),
        (n / 2 + _pow2(h - 2), inner),
        (n / 2 + _pow2(h - 1), outer),
        (n, Fraction(1)),
    ])


def table2_prediction(m: int) -> PredictedDistribution:
    """Full code of a power AB function with a balanced selector, dimension 2m."""
    _require_odd(m)
    base = _pow2(m - 2)
    outer = _pow2(2 * m - 4) - _pow2(m - 3)
    inner = _pow2(2 * m - 2)
    return _predicted("table2", {"m": m}, [
        (Fraction(0), Fraction(1)),
        (base - _pow2((m - 1) // 2), outer),
        (base - _pow2((m - 3) // 2), inner),
        (base, 3 * _pow2(2 * m - 3) + _pow2(m - 2) - 2),
        (base + _pow2((m - 3) // 2), inner),
        (base + _pow2((m - 1) // 2), outer),
        (_pow2(m - 1), Fraction(1)),
    ])


def table3_prediction(m: int, n_f: int) -> PredictedDistribution:
    """Subcode of a PN (m, m/2)-function with F(0) = 0, dimension 3m/2 - 1."""
    _check_pn_length(m, n_f)
    n = Fraction(n_f)
    h = m // 2
    outer = _pow2(h - 2) * n - n * n / _pow2(m + 1) - _pow2(m - 3) + Fraction(1, 8)
    middle = (n * n - _pow2(3 * h - 1) * n) / _pow2(m) + _pow2(3 * h - 1) - 3 * _pow2(m - 2) - Fraction(1, 4)
    shift = n / _pow2(h - 1)
    return _predicted("table3", {"m": m, "n_f": n_f}, [
        (Fraction(0), Fraction(1)),
        (n / 2 - _pow2(h - 1), outer),
        (n / 2 - _pow2(h - 2), (_pow2(m) - 1 - shift) / 2),
        (n / 2, middle),
        (n / 2 + _pow2(h - 2), (_pow2(m) - 1 + shift) / 2),
        (n / 2 + _pow2(h - 1), outer),
    ])


def table4_prediction(m: int, tr_lambda_mu: int, tr_mu_lambda: int) -> PredictedDistribution:
    """Weights of s_x = Tr(x d + lambda F(d)) over the support of f_{lambda+mu}, Gold F."""
    _require_odd(m)
    delta = tr_lambda_mu - tr_mu_lambda
    base = _pow2(m - 2)
    return _predicted("table4", {"m": m, "tr_lambda_mu": tr_lambda_mu, "tr_mu_lambda": tr_mu_lambda}, [
        (base - _pow2((m - 1) // 2), _pow2(m - 4) + _pow2((m - 5) // 2) * delta),
        (base - _pow2((m - 3) // 2), _pow2(m - 2) - _pow2((m - 3) // 2) * delta),
        (base, 3 * _pow2(m - 3)),
        (base + _pow2((m - 3) // 2), _pow2(m - 2) + _pow2((m - 3) // 2) * delta),
        (base + _pow2((m - 1) // 2), _pow2(m - 4) - _pow2((m - 5) // 2) * delta),
    ])


def table5_prediction(m: int) -> PredictedDistribution:
    """Gold subcode on H_nu = {x : Tr(x / nu) = 0}, dimension 2m - 1."""
    _require_odd(m)
    k = kloosterman_closed(m)
    a = (m - 5) // 2
    base = _pow2(m - 2)
    return _predicted("table5", {"m": m, "K1": k}, [
        (Fraction(0), Fraction(1)),
        (base - _pow2((m - 1) // 2), _pow2(2 * m - 5) + _pow2(a) - _pow2(a - 1) * k - _pow2(m - 4)),
        (base - _pow2((m - 3) // 2), _pow2(2 * m - 3) + _pow2(a) * k - _pow2((m - 1) // 2)),
        (base, 3 * _pow2(2 * m - 4) + _pow2(m - 3) - 1),
        (base + _pow2((m - 3) // 2), _pow2(2 * m - 3) - _pow2(a) * k + _pow2((m - 1) // 2)),
        (base + _pow2((m - 1) // 2), _pow2(2 * m - 5) - _pow2(a) + _pow2(a - 1) * k - _pow2(m - 4)),
    ])


# --- code parameters ------------------------------------------------------------

@dataclass(frozen=True)
class CodeParameters:
    length: int
    dimension: int
    distance: int

    def __str__(self) -> str:
        return f"[{self.length},{self.dimension},{self.distance}]"


def proposition1_applies(m: int, nl: int, n_f: int) -> bool:
    """Hypothesis 2^m - 2 nl(F) < n_f under which the code has full dimension."""
    return (1 << m) - 2 * nl < n_f


def proposition1_distance_bound(m: int, nl: int, n_f: int) -> Fraction:
    """Lower bound nl(F) - (2^m - n_f) / 2 on the minimum distance."""
    return nl - Fraction((1 << m) - n_f, 2)


def theorem2_parameters(m: int, s: int, nl: int, w: int) -> tuple[CodeParameters, CodeParameters]:
    """The pair of codes obtained from a value w of the extended Walsh spectrum."""
    if w % 4:
        raise DomainError(f"extended Walsh value {w} is not a multiple of 4")
    half = 1 << (m - 1)
    return (
        CodeParameters(half - w // 2, m + s, nl - (1 << (m - 2)) - w // 4),
        CodeParameters(half + w // 2, m + s, nl - (1 << (m - 2)) + w // 4),
    )


def corollary1_parameters(m: int) -> tuple[CodeParameters, CodeParameters]:
    """
    PN (m, m/2)-function codes. The second triple is the one theorem2_parameters yields,
    [2^(m-1) + 2^(m/2-1), 3m/2, 2^(m-2) - 2^(m/2-2)].
    """
    _require_even(m)
    h = m // 2
    return (
        CodeParameters((1 << (m - 1)) - (1 << (h - 1)), 3 * h, (1 << (m - 2)) - 3 * (1 << (h - 2))),
        CodeParameters((1 << (m - 1)) + (1 << (h - 1)), 3 * h, (1 << (m - 2)) - (1 << (h - 2))),
    )


def corollary2_parameters(m: int) -> tuple[CodeParameters, CodeParameters, CodeParameters]:
    """AB (m, m)-function codes from the Walsh values 2^((m+1)/2), 0 and -2^((m+1)/2)."""
    _require_odd(m, least=3)
    return (
        CodeParameters((1 << (m - 1)) - (1 << ((m - 1) // 2)), 2 * m, (1 << (m - 2)) - 3 * (1 << ((m - 3) // 2))),
        CodeParameters(1 << (m - 1), 2 * m, (1 << (m - 2)) - (1 << ((m - 1) // 2))),
        CodeParameters((1 << (m - 1)) + (1 << ((m - 1) // 2)), 2 * m, (1 << (m - 2)) - (1 << ((m - 3) // 2))),
    )


def theorem5_dimension(m: int, s: int) -> int:
    return m + s - 1


# --- Kloosterman sums -------------------------------------------------------------

class KloostermanValue(BaseModel):
    model_config = ConfigDict(frozen=True)

    m: int
    value: int


def kloosterman_closed(m: int) -> int:
    """K(1) = 1 - sum_{t <= m/2} (-1)^(m-t) m/(m-t) C(m-t, t) 2^t."""
    if m < 1:
        raise DomainError(f"m must be positive, got {m}")
    total = Fraction(0)
    for t in range(m // 2 + 1):
        coefficient = Fraction(m, m - t) * comb(m - t, t)
        if coefficient.denominator != 1:
            raise ArithmeticError(f"m/(m-t) C(m-t, t) is not integral at m = {m}, t = {t}")
        total += (-1) ** (m - t) * coefficient * (1 << t)
    return int(1 - total)


def kloosterman_brute(m: int) -> int:
    """sum_x (-1)^Tr(x^(2^m-2) + x), so the x = 0 term is +1."""
    if m == 1:
        # F_2: both x = 0 and x = 1 give Tr(0) = 0
        return 2
    spec = FieldSpec.default(m)
    xs = spec.elements()
    bits = trace_array(power_array(xs, spec.order - 2, spec) ^ xs, spec)
    return int(np.sum(1 - 2 * bits.astype(np.int64)))


def kloosterman(m: int) -> KloostermanValue:
    return KloostermanValue(m=m, value=kloosterman_closed(m))


# --- counting checks -----------------------------------------------------------------

@dataclass(frozen=True)
class CountCheck:
    """Predicted and observed counts keyed by the counted quantity."""
    label: str
    predicted: dict
    empirical: dict
    notes: list[str] = field(default_factory=list)

    @property
    def matches(self) -> bool:
        keys = set(self.predicted) | set(self.empirical)
        return all(self.predicted.get(k, 0) == self.empirical.get(k, 0) for k in keys)


@dataclass(frozen=True)
class DistributionCheck:
    label: str
    predicted: WeightDistribution
    empirical: WeightDistribution

    @property
    def matches(self) -> bool:
        return self.predicted == self.empirical


def anne_prediction(m: int, s_exp: int, f0: int) -> dict[int, int]:
    sign = -1 if f0 else 1
    nonzero = 2 * m - 2 * s_exp - 1
    offset = Fraction(sign) * _pow2(m - s_exp - 1)
    return {
        0: _exact(_pow2(m) - _pow2(2 * m - 2 * s_exp), "zero count"),
        1 << s_exp: _exact(_pow2(nonzero) + offset, "positive count"),
        -(1 << s_exp): _exact(_pow2(nonzero) - offset, "negative count"),
    }


def anne_counts(f: BooleanFunction, s_exp: int) -> CountCheck:
    """Value counts of a spectrum contained in {0, +-2^s_exp}."""
    counts = f.walsh_full().value_counts()
    if not set(counts) <= {0, 1 << s_exp, -(1 << s_exp)}:
        raise DomainError(f"spectrum {sorted(counts)} is not contained in {{0, +-2^{s_exp}}}")
    predicted = anne_prediction(f.m, s_exp, f(0))
    predicted = {k: v for k, v in predicted.items() if v}
    return CountCheck("walsh_value_counts", predicted, dict(counts))


def _require_power_ab(F: VectorialFunction) -> None:
    if F.m != F.s or F.m % 2 == 0:
        raise DomainError("expected an (m, m)-function with m odd")
    if np.unique(F.table).size != F.input_field.order:
        raise DomainError("expected a bijective power function")
    if not F.is_almost_bent():
        raise DomainError("function is not almost bent")


def walsh_diff_prediction(m: int) -> dict[int, int]:
    big, small = 1 << ((m + 3) // 2), 1 << ((m + 1) // 2)
    outer = (1 << (2 * m - 4)) - (1 << (m - 3))
    inner = (1 << (2 * m - 2)) - (1 << (m - 1))
    return {
        big: outer,
        -big: outer,
        small: inner,
        -small: inner,
        0: 3 * (1 << (2 * m - 3)) + (1 << (m - 2)) - (1 << m),
    }


def walsh_diff_counts(F: VectorialFunction, lam: FieldElement) -> CountCheck:
    """Counts of W_{f_{lambda+y}}(x) - W_{f_y}(x) over x and y outside {0, lambda}."""
    _require_power_ab(F)
    if F.output_field.check(lam) == 0:
        raise DomainError("lambda must be nonzero")
    ys = F.output_field.elements()
    ys = ys[(ys != 0) & (ys != lam)]
    empirical: Counter = Counter()
    for batch in F.lambda_batches(ys):
        values, counts = np.unique(F.spectra(batch ^ lam) - F.spectra(batch), return_counts=True)
        empirical.update(dict(zip(values.tolist(), counts.tolist())))
    return CountCheck("walsh_difference_counts", walsh_diff_prediction(F.m), dict(empirical))


def hyperplane_walsh_prediction(m: int, f0: int, fw: int) -> dict[str, int]:
    skew = (1 << ((m - 3) // 2)) * (1 - f0 - fw)
    return {"0": 1 << (m - 2), "+": (1 << (m - 3)) + skew, "-": (1 << (m - 3)) - skew}


def hyperplane_walsh_counts(f: BooleanFunction, u: FieldElement) -> CountCheck:
    """Spectrum value counts on E = {a : Tr(u a) = 0}, E different from the zero-Walsh hyperplane."""
    m = f.m
    _require_odd(m)
    if f.field.check(u) == 0:
        raise DomainError("hyperplane normal must be nonzero")
    zeros = f.zero_walsh_set()
    if zeros.normal == u:
        raise DomainError("E coincides with the zero-Walsh hyperplane T")
    xs = f.field.elements()
    in_e = trace_array(mul_array(xs, u, f.field), f.field) == 0
    values = f.walsh_full().values[in_e]
    peak = 1 << ((m + 1) // 2)
    empirical = {
        "0": int(np.count_nonzero(values == 0)),
        "+": int(np.count_nonzero(values == peak)),
        "-": int(np.count_nonzero(values == -peak)),
    }
    return CountCheck("hyperplane_walsh_counts", hyperplane_walsh_prediction(m, f(0), f(u)), empirical)


def squaresum_identity_check(f_lambda: BooleanFunction, f_mu: BooleanFunction) -> CountCheck:
    """
    With f_nu = f_l + f_m of weight n_nu:
    sum (W_l - W_m)^2 = 2^(m+2) n_nu, sum (W_l + W_m)^2 = 2^(2m+2) - 2^(m+2) n_nu
    and sum (W_l^2 + W_m^2) = 2^(2m+1).
    """
    m = f_lambda.m
    n_nu = (f_lambda + f_mu).weight()
    a = f_lambda.walsh_full().values
    b = f_mu.walsh_full().values
    return CountCheck(
        "square_sums",
        {
            "difference": n_nu << (m + 2),
            "sum": (1 << (2 * m + 2)) - (n_nu << (m + 2)),
            "parseval": 1 << (2 * m + 1),
        },
        {
            "difference": int(np.sum((a - b) ** 2)),
            "sum": int(np.sum((a + b) ** 2)),
            "parseval": int(np.sum(a * a + b * b)),
        },
    )


def s_lambda_distribution(F: VectorialFunction, lam: FieldElement, mu: FieldElement) -> DistributionCheck:
    """Weights of s_x = (Tr(x d + lambda F(d)))_{d in D_{f_{lambda+mu}}} over all x."""
    _require_power_ab(F)
    _require_odd(F.m)
    out = F.output_field
    if out.check(lam) == 0 or out.check(mu) == 0 or lam == mu:
        raise DomainError("lambda and mu must be distinct and nonzero")
    support = np.asarray(F.component(lam ^ mu).support(), dtype=np.int64)
    xs = F.input_field.elements()
    base = trace_array(mul_array(F.table[support], lam, out), out)
    words = trace_array(mul_array(xs[:, None], support[None, :], F.input_field), F.input_field) ^ base[None, :]
    weights = words.sum(axis=1, dtype=np.int64)
    empirical = WeightDistribution.from_counts(np.bincount(weights, minlength=support.size + 1))
    tr_lm = absolute_trace(mul(lam, inverse(mu, out), out), out)
    tr_ml = absolute_trace(mul(mu, inverse(lam, out), out), out)
    predicted = table4_prediction(F.m, tr_lm, tr_ml).distribution
    return DistributionCheck("s_lambda", predicted, empirical)


def kloosterman_coset_sums(m: int) -> CountCheck:
    """sum over Tr(x) = 0 and Tr(x) = 1 of (-1)^Tr(1/x) against +-K(1)/2."""
    spec = FieldSpec.default(m)
    xs = spec.elements()
    signs = 1 - 2 * trace_array(power_array(xs, spec.order - 2, spec), spec).astype(np.int64)
    coset = trace_array(xs, spec)
    k = kloosterman_closed(m)
    return CountCheck(
        "kloosterman_cosets",
        {"trace0": k // 2, "trace1": -(k // 2)},
        {"trace0": int(signs[coset == 0].sum()), "trace1": int(signs[coset == 1].sum())},
    )


def kloo_pairs_prediction(m: int) -> dict[str, int]:
    k = Fraction(kloosterman_closed(m))
    base = _pow2(m - 3)
    half = Fraction(1, 2)
    return {
        "00": _exact(base + k / 8 + half, "A(0,0)"),
        "01": _exact(base + k / 8 - half, "A(0,1)"),
        "10": _exact(base - 3 * k / 8 + half, "A(1,0)"),
        "11": _exact(base + k / 8 - half, "A(1,1)"),
    }


def kloo_pairs_counts(m: int, mu: FieldElement, convention: KlooConvention = "zero_maps_to_zero") -> CountCheck:
    """
    Counts of (Tr(x / (x + mu)), Tr((x + mu) / x)) over H'_mu = {x : Tr(x / mu) = 0}.

    With "zero_maps_to_zero" the ratio at x = 0 uses 0^(-1) = 0, giving the pair
    (0, 0); "exclude_zero" drops x = 0 from H'_mu instead.
    """
    _require_odd(m, least=3)
    spec = FieldSpec.default(m)
    if spec.check(mu) == 0:
        raise DomainError("mu must be nonzero")
    xs = spec.elements()
    xs = xs[trace_array(mul_array(xs, inverse(mu, spec), spec), spec) == 0]
    if convention == "exclude_zero":
        xs = xs[xs != 0]
    shifted = xs ^ mu
    exponent = spec.order - 2
    i = trace_array(mul_array(xs, power_array(shifted, exponent, spec), spec), spec)
    j = trace_array(mul_array(shifted, power_array(xs, exponent, spec), spec), spec)
    counts = Counter(f"{a}{b}" for a, b in zip(i.tolist(), j.tolist()))
    check = CountCheck(f"kloosterman_pairs[{convention}]", kloo_pairs_prediction(m), dict(counts))
    if not check.matches:
        logger.warning(f"trace pair counts at m = {m}, mu = {mu} disagree under convention {convention}")
    return check
