"""
(m, s)-functions F: F_{2^m} -> F_{2^s} as value tables, their components
f_lambda(x) = Tr_1^s(lambda F(x)), extended Walsh spectra, PN/AB tests and
the named constructions (Gold, Kasami, Welch, Niho, Maiorana-McFarland).
"""

import logging
from collections import Counter
from dataclasses import dataclass, field as dc_field
from functools import cached_property
from math import gcd

import numpy as np

from .boolfun import BooleanFunction, to_signs, walsh_trace_form
from .errors import DomainError
from .gf2m import FieldElement, FieldSpec, mul_array, power_array, trace_array

logger = logging.getLogger("vbf_vecfun")

# Above this many spectrum entries the component spectra are streamed one batch at a time.
_SPECTRA_CELLS = 1 << 24


@dataclass(frozen=True)
class ExtendedWalshSpectrum:
    """Multiset of |W_F(lambda, b)| over lambda != 0 and all b, as value -> count."""
    counts: Counter

    def values(self) -> set[int]:
        return set(self.counts)

    def total(self) -> int:
        return sum(self.counts.values())

    def max(self) -> int:
        return max(self.counts)

    def to_dict(self) -> dict[str, int]:
        return {str(v): c for v, c in sorted(self.counts.items())}


@dataclass(frozen=True, eq=False)
class VectorialFunction:
    input_field: FieldSpec
    output_field: FieldSpec
    table: np.ndarray
    name: str = dc_field(default="", compare=False)

    def __post_init__(self):
        table = np.asarray(self.table, dtype=np.int64)
        if table.shape != (self.input_field.order,):
            raise DomainError(f"value table must have length {self.input_field.order}, got shape {table.shape}")
        if table.size and (table.min() < 0 or table.max() >= self.output_field.order):
            raise DomainError(f"values must lie in [0, {self.output_field.order})")
        table.setflags(write=False)
        object.__setattr__(self, "table", table)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, VectorialFunction):
            return NotImplemented
        return (
            self.input_field == other.input_field
            and self.output_field == other.output_field
            and np.array_equal(self.table, other.table)
        )

    def __call__(self, x: FieldElement) -> FieldElement:
        return int(self.table[self.input_field.check(x)])

    @property
    def m(self) -> int:
        return self.input_field.degree

    @property
    def s(self) -> int:
        return self.output_field.degree

    def component(self, lam: FieldElement) -> BooleanFunction:
        """f_lambda = Tr_1^s(lambda F)."""
        if self.output_field.check(lam) == 0:
            raise DomainError("component functions need lambda != 0")
        values = mul_array(self.table, lam, self.output_field)
        return BooleanFunction(self.input_field, trace_array(values, self.output_field))

    def _component_tables(self, lams: np.ndarray) -> np.ndarray:
        values = mul_array(lams[:, None], self.table[None, :], self.output_field)
        return trace_array(values, self.output_field)

    def spectra_rows(self, lams) -> np.ndarray:
        """Trace-form Walsh spectra of the components at the given lambdas, one row each.
        lambda = 0 gives the row 2^m at 0 and zero elsewhere."""
        lams = np.asarray(lams, dtype=np.int64).reshape(-1)
        return walsh_trace_form(to_signs(self._component_tables(lams)), self.input_field)

    @cached_property
    def component_spectra(self) -> np.ndarray:
        """(2^s, 2^m) matrix, row lambda = spectrum of f_lambda (row 0 as in spectra_rows)."""
        cells = self.output_field.order * self.input_field.order
        if cells > _SPECTRA_CELLS:
            raise DomainError(f"component spectra would hold {cells} entries; iterate spectra_rows instead")
        spectra = self.spectra_rows(self.output_field.elements())
        spectra.setflags(write=False)
        return spectra

    def spectra(self, lams) -> np.ndarray:
        """Rows of component_spectra at lams, computed on the fly when the full matrix is too large."""
        lams = np.asarray(lams, dtype=np.int64)
        if self.output_field.order * self.input_field.order <= _SPECTRA_CELLS:
            return self.component_spectra[lams]
        return self.spectra_rows(lams)

    def lambda_batches(self, lams):
        """Split lams into chunks whose spectra fit in the cell budget."""
        lams = np.asarray(lams, dtype=np.int64).reshape(-1)
        size = max(1, _SPECTRA_CELLS // self.input_field.order)
        for start in range(0, lams.size, size):
            yield lams[start:start + size]

    def _iter_spectra(self):
        for batch in self.lambda_batches(np.arange(1, self.output_field.order)):
            yield self.spectra_rows(batch)

    def extended_walsh_spectrum(self) -> ExtendedWalshSpectrum:
        counts: Counter = Counter()
        for rows in self._iter_spectra():
            values, multiplicities = np.unique(np.abs(rows), return_counts=True)
            counts.update(dict(zip(values.tolist(), multiplicities.tolist())))
        return ExtendedWalshSpectrum(counts)

    def nonlinearity(self) -> int:
        return self.input_field.order // 2 - self.extended_walsh_spectrum().max() // 2

    def is_almost_bent(self) -> bool:
        if self.m != self.s or self.m % 2 == 0:
            raise DomainError(f"almost bentness needs m = s odd, got m = {self.m}, s = {self.s}")
        peak = 1 << ((self.m + 1) // 2)
        return self.extended_walsh_spectrum().values() <= {0, peak}

    def is_perfect_nonlinear(self) -> bool:
        """Every derivative x -> F(x) + F(x + a), a != 0, hits each output 2^(m-s) times."""
        if self.m < self.s:
            return False
        target = 1 << (self.m - self.s)
        xs = self.input_field.elements()
        for a in range(1, self.input_field.order):
            derivative = self.table ^ self.table[xs ^ a]
            counts = np.bincount(derivative, minlength=self.output_field.order)
            if np.any(counts != target):
                return False
        return True

    def all_components_bent(self) -> bool:
        if self.m % 2:
            return False
        return all(
            bool(np.all(np.abs(rows) == 1 << (self.m // 2))) for rows in self._iter_spectra()
        )


# --- the F' device ------------------------------------------------------------

def offset_direction(output_field: FieldSpec, lam: FieldElement) -> FieldElement:
    """Smallest theta in F_{2^s} with Tr_1^s(lambda theta) = 1."""
    if output_field.check(lam) == 0:
        raise DomainError("lambda must be nonzero")
    traces = trace_array(mul_array(output_field.elements(), lam, output_field), output_field)
    return int(np.flatnonzero(traces)[0])


def offset_function(F: VectorialFunction, lam: FieldElement, a: FieldElement = 0, c: int = 0) -> VectorialFunction:
    """
    F'(x) = F(x) + (Tr_1^m(a x) + c) theta, whose lambda-component is
    f_lambda + Tr_1^m(a x) + c while all other structure of F is kept.
    """
    if c not in (0, 1):
        raise DomainError(f"offset bit c must be 0 or 1, got {c}")
    F.input_field.check(a)
    if a == 0 and c == 0:
        return F
    theta = offset_direction(F.output_field, lam)
    shift = BooleanFunction.linear(F.input_field, a).table.astype(np.int64) ^ c
    table = F.table ^ (shift * theta)
    name = f"{F.name}+(Tr({a}x)+{c})*{theta}" if F.name else ""
    return VectorialFunction(F.input_field, F.output_field, table, name=name)


def with_affine_offset(F: VectorialFunction, lam: FieldElement, a: FieldElement = 0, c: int = 0) -> BooleanFunction:
    """Support selector f_lambda(x) + Tr_1^m(a x) + c."""
    return offset_function(F, lam, a, c).component(lam)


# --- constructors -------------------------------------------------------------

def power_function(m: int, d: int, field: FieldSpec | None = None) -> VectorialFunction:
    field = field or FieldSpec.default(m)
    if not 0 < d < field.order - 1:
        raise DomainError(f"power exponent must lie in (0, {field.order - 1}), got {d}")
    table = power_array(field.elements(), d, field)
    return VectorialFunction(field, field, table, name=f"power:{m}:{d}")


def _reduced(m: int, d: int) -> int:
    d %= (1 << m) - 1
    if d == 0:
        raise DomainError(f"exponent reduces to 0 modulo 2^{m} - 1")
    return d


def _require_odd(m: int, what: str) -> None:
    if m % 2 == 0:
        raise DomainError(f"{what} functions are almost bent only for odd m, got m = {m}")


def gold_exponent(m: int, i: int) -> int:
    _require_odd(m, "Gold")
    if i < 1 or gcd(i, m) != 1:
        raise DomainError(f"Gold exponent needs gcd(i, m) = 1, got i = {i}, m = {m}")
    return _reduced(m, (1 << i) + 1)


def kasami_exponent(m: int, i: int) -> int:
    _require_odd(m, "Kasami")
    if i < 1 or gcd(i, m) != 1:
        raise DomainError(f"Kasami exponent needs gcd(i, m) = 1, got i = {i}, m = {m}")
    return _reduced(m, (1 << (2 * i)) - (1 << i) + 1)


def welch_exponent(m: int) -> int:
    _require_odd(m, "Welch")
    return _reduced(m, (1 << ((m - 1) // 2)) + 3)


def niho_exponent(m: int) -> int:
    _require_odd(m, "Niho")
    if m % 4 == 1:
        d = (1 << ((m - 1) // 2)) + (1 << ((m - 1) // 4)) - 1
    else:
        d = (1 << ((m - 1) // 2)) + (1 << ((3 * m - 1) // 4)) - 1
    return _reduced(m, d)


def gold(m: int, i: int = 1) -> VectorialFunction:
    return power_function(m, gold_exponent(m, i))


def kasami(m: int, i: int) -> VectorialFunction:
    return power_function(m, kasami_exponent(m, i))


def welch(m: int) -> VectorialFunction:
    return power_function(m, welch_exponent(m))


def niho(m: int) -> VectorialFunction:
    return power_function(m, niho_exponent(m))


def identity(m: int) -> VectorialFunction:
    field = FieldSpec.default(m)
    return VectorialFunction(field, field, field.elements(), name=f"id:{m}")


def maiorana_mcfarland(half: int, pi=None, h=None, l=None) -> VectorialFunction:
    """
    Strict Maiorana-McFarland (2 half, half)-function F(x, y) = L(x pi(y)) + H(y).

    The pair (x, y) is encoded as the input index x * 2^half + y. pi must be
    a permutation of F_{2^half} and L a bijection of it (normally linear or
    affine); all three are given as value tables and default to identity,
    identity and zero.
    """
    if half < 2:
        raise DomainError(f"half must be at least 2, got {half}")
    small = FieldSpec.default(half)
    q = small.order
    ys = small.elements()
    pi = ys if pi is None else np.asarray(pi, dtype=np.int64)
    h = np.zeros(q, dtype=np.int64) if h is None else np.asarray(h, dtype=np.int64)
    l = ys if l is None else np.asarray(l, dtype=np.int64)
    for label, table in (("pi", pi), ("L", l)):
        if table.shape != (q,) or not np.array_equal(np.sort(table), ys):
            raise DomainError(f"{label} must be a permutation of F_2^{half}")
    if h.shape != (q,) or h.min() < 0 or h.max() >= q:
        raise DomainError(f"H must be a table of {q} elements of F_2^{half}")
    products = mul_array(ys[:, None], pi[None, :], small)
    values = l[products] ^ h[None, :]
    is_product = pi is ys and l is ys and not h.any()
    name = f"mm:{half}" if is_product else f"mm-general:{half}"
    return VectorialFunction(FieldSpec.default(2 * half), small, values.reshape(-1), name=name)


def mm_product(half: int) -> VectorialFunction:
    """F(x, y) = x y over F_{2^half}, input index x * 2^half + y."""
    return maiorana_mcfarland(half)


# Descriptor grammar: kind:arg[:arg]
_CONSTRUCTORS = {
    "gold": (gold, (1, 2)),
    "kasami": (kasami, (2, 2)),
    "welch": (welch, (1, 1)),
    "niho": (niho, (1, 1)),
    "power": (power_function, (2, 2)),
    "mm": (mm_product, (1, 1)),
    "id": (identity, (1, 1)),
}


def from_descriptor(text: str) -> VectorialFunction:
    """Build a named function from "gold:5:1", "kasami:7:2", "welch:7", "niho:9", "mm:4", "power:9:19" or "id:5"."""
    kind, _, rest = text.strip().lower().partition(":")
    if kind not in _CONSTRUCTORS:
        raise DomainError(f"unknown function kind {kind!r} in descriptor {text!r}")
    constructor, (least, most) = _CONSTRUCTORS[kind]
    try:
        args = [int(part) for part in rest.split(":")] if rest else []
    except ValueError as e:
        raise DomainError(f"non-integer argument in descriptor {text!r}") from e
    if not least <= len(args) <= most:
        raise DomainError(f"descriptor {text!r} needs {least} to {most} integer arguments")
    F = constructor(*args)
    logger.debug(f"built {F.name} from descriptor {text!r}")
    return F

