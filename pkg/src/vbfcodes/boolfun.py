"""
Boolean functions on F_{2^m} stored as truth tables indexed by element encoding.

The Walsh transform uses the trace inner product,

    W_f(a) = sum_x (-1)^(f(x) + Tr_1^m(a x)),

computed with a dot-product fast transform followed by a gather through the
map tau(a) = (Tr(a x^0), ..., Tr(a x^(m-1))), since Tr(a x) = <tau(a), x>.
"""

import logging
from collections import Counter
from dataclasses import dataclass
from functools import cached_property, lru_cache

import numpy as np

from .errors import DomainError
from .gf2m import FieldElement, FieldSpec, mul_array, power_array, trace_array, xor_basis

logger = logging.getLogger("vbf_boolfun")


def fwht(signs: np.ndarray) -> np.ndarray:
    """
    Fast Walsh-Hadamard transform along the last axis, dot-product convention.

    Args:
        signs: integer array whose last axis has length 2^m (usually +-1 values)

    Returns:
        int64 array of the same shape, out[..., u] = sum_x signs[..., x] (-1)^<u, x>
    """
    a = np.array(signs, dtype=np.int64)
    lead = a.shape[:-1]
    n = a.shape[-1]
    h = 1
    while h < n:
        a = a.reshape(*lead, n // (2 * h), 2, h)
        x, y = a[..., 0, :], a[..., 1, :]
        a = np.stack((x + y, x - y), axis=-2).reshape(*lead, n)
        h *= 2
    return a


def mobius(table: np.ndarray) -> np.ndarray:
    """Binary Möbius transform (truth table <-> ANF); it is its own inverse."""
    a = np.array(table, dtype=np.uint8)
    n = a.shape[-1]
    h = 1
    while h < n:
        a = a.reshape(n // (2 * h), 2, h)
        a[:, 1, :] ^= a[:, 0, :]
        a = a.reshape(n)
        h *= 2
    return a


@lru_cache(maxsize=None)
def _tau(field: FieldSpec) -> np.ndarray:
    elements = field.elements()
    tau = np.zeros(field.order, dtype=np.int64)
    for i in range(field.degree):
        tau |= trace_array(mul_array(elements, 1 << i, field), field).astype(np.int64) << i
    tau.setflags(write=False)
    return tau


def walsh_trace_form(signs: np.ndarray, field: FieldSpec) -> np.ndarray:
    """Trace-form Walsh spectra of a stack of +-1 tables (last axis = field)."""
    return fwht(signs)[..., _tau(field)]


def to_signs(table: np.ndarray) -> np.ndarray:
    return 1 - 2 * np.asarray(table, dtype=np.int64)


@dataclass(frozen=True)
class WalshSpectrum:
    """Trace-form spectrum: values[a] = W_f(a)."""
    field: FieldSpec
    values: np.ndarray

    def __getitem__(self, a: FieldElement) -> int:
        return int(self.values[a])

    def value_counts(self) -> Counter:
        return Counter(int(v) for v in self.values)

    def value_set(self) -> set[int]:
        return set(np.unique(self.values).tolist())

    def max_abs(self) -> int:
        return int(np.max(np.abs(self.values)))

    def parseval_holds(self) -> bool:
        return int(np.sum(self.values * self.values)) == 1 << (2 * self.field.degree)

    def to_list(self) -> list[int]:
        return self.values.tolist()


@dataclass(frozen=True)
class ZeroWalshSet:
    """T = {a : W_f(a) = 0} and, when T is a hyperplane, its normal under the trace pairing."""
    elements: tuple[FieldElement, ...]
    is_subspace: bool
    dimension: int | None
    normal: FieldElement | None

    @property
    def is_hyperplane(self) -> bool:
        return self.normal is not None


@dataclass(frozen=True, eq=False)
class BooleanFunction:
    field: FieldSpec
    table: np.ndarray

    def __post_init__(self):
        table = np.asarray(self.table)
        if table.shape != (self.field.order,):
            raise DomainError(f"truth table must have length {self.field.order}, got shape {table.shape}")
        table = (table & 1).astype(np.uint8)
        table.setflags(write=False)
        object.__setattr__(self, "table", table)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BooleanFunction):
            return NotImplemented
        return self.field == other.field and np.array_equal(self.table, other.table)

    def __add__(self, other: "BooleanFunction") -> "BooleanFunction":
        if self.field != other.field:
            raise DomainError("cannot add Boolean functions over different fields")
        return BooleanFunction(self.field, self.table ^ other.table)

    def __call__(self, x: FieldElement) -> int:
        return int(self.table[self.field.check(x)])

    @property
    def m(self) -> int:
        return self.field.degree

    # --- constructors ---

    @classmethod
    def zero(cls, field: FieldSpec) -> "BooleanFunction":
        return cls(field, np.zeros(field.order, dtype=np.uint8))

    @classmethod
    def linear(cls, field: FieldSpec, a: FieldElement) -> "BooleanFunction":
        """x -> Tr_1^m(a x)."""
        return cls(field, trace_array(mul_array(field.elements(), a, field), field))

    @classmethod
    def trace_monomial(cls, field: FieldSpec, exponent: int, coefficient: FieldElement = 1) -> "BooleanFunction":
        """x -> Tr_1^m(c x^d)."""
        values = mul_array(power_array(field.elements(), exponent, field), coefficient, field)
        return cls(field, trace_array(values, field))

    @classmethod
    def random(cls, field: FieldSpec, rng: np.random.Generator) -> "BooleanFunction":
        return cls(field, rng.integers(0, 2, size=field.order, dtype=np.uint8))

    @classmethod
    def from_hex(cls, field: FieldSpec, text: str) -> "BooleanFunction":
        """Inverse of to_hex; bit x of the table is bit (x % 8) of byte x // 8."""
        try:
            raw = bytes.fromhex(text.strip())
        except ValueError as e:
            raise DomainError(f"invalid hex truth table: {e}") from e
        bits = np.unpackbits(np.frombuffer(raw, dtype=np.uint8), bitorder="little")
        if bits.size < field.order or np.any(bits[field.order:]):
            raise DomainError(f"hex truth table does not encode {field.order} bits")
        return cls(field, bits[:field.order])

    def to_hex(self) -> str:
        return np.packbits(self.table, bitorder="little").tobytes().hex()

    # --- weight and support ---

    def weight(self) -> int:
        return int(np.count_nonzero(self.table))

    def support(self) -> list[FieldElement]:
        """D_f in ascending order of encoding."""
        return np.flatnonzero(self.table).tolist()

    def is_balanced(self) -> bool:
        return 2 * self.weight() == self.field.order

    # --- spectra ---

    @cached_property
    def _spectrum(self) -> np.ndarray:
        values = walsh_trace_form(to_signs(self.table), self.field)
        values.setflags(write=False)
        return values

    def walsh_full(self) -> WalshSpectrum:
        return WalshSpectrum(self.field, self._spectrum)

    def walsh_at(self, a: FieldElement) -> int:
        """Single-point evaluation straight from the defining sum."""
        self.field.check(a)
        linear = trace_array(mul_array(self.field.elements(), a, self.field), self.field)
        return int(np.sum(to_signs(self.table ^ linear)))

    def nonlinearity(self) -> int:
        return self.field.order // 2 - self.walsh_full().max_abs() // 2

    def is_bent(self) -> bool:
        if self.m % 2:
            raise DomainError(f"bentness needs even m, got m = {self.m}")
        return bool(np.all(np.abs(self._spectrum) == 1 << (self.m // 2)))

    def is_semibent(self) -> bool:
        if self.m % 2 == 0:
            raise DomainError(f"semi-bentness is defined here for odd m, got m = {self.m}")
        peak = 1 << ((self.m + 1) // 2)
        return bool(np.all((self._spectrum == 0) | (np.abs(self._spectrum) == peak)))

    def autocorrelation(self, b: FieldElement) -> int:
        """sum_x (-1)^(f(x) + f(x + b))."""
        self.field.check(b)
        shifted = self.table[self.field.elements() ^ b]
        return int(np.sum(to_signs(self.table ^ shifted)))

    def autocorrelation_spectrum(self) -> np.ndarray:
        """All autocorrelations at once, via the inverse transform of the squared spectrum."""
        dot = fwht(to_signs(self.table))
        return fwht(dot * dot) >> self.m

    def zero_walsh_set(self) -> ZeroWalshSet:
        spectrum = self._spectrum
        zeros = np.flatnonzero(spectrum == 0)
        size = int(zeros.size)
        is_subspace = False
        dimension = None
        if size and size & (size - 1) == 0 and zeros[0] == 0:
            rank = len(xor_basis(zeros.tolist()))
            is_subspace = 1 << rank == size
            dimension = rank if is_subspace else None
        normal = None
        if is_subspace and dimension == self.m - 1:
            # T = w^perp exactly when the indicator of the complement of T is Tr(w x)
            outside = BooleanFunction(self.field, (spectrum != 0).astype(np.uint8))
            peaks = np.flatnonzero(outside.walsh_full().values == self.field.order)
            normal = int(peaks[0])
        return ZeroWalshSet(
            elements=tuple(zeros.tolist()),
            is_subspace=is_subspace,
            dimension=dimension,
            normal=normal,
        )

    # --- algebraic normal form ---

    def anf(self) -> np.ndarray:
        """ANF coefficients; entry u is the coefficient of the monomial prod_{i in u} x_i."""
        return mobius(self.table)

    def algebraic_degree(self) -> int:
        """Max popcount over monomials with a nonzero ANF coefficient; 0 for the zero function."""
        monomials = np.flatnonzero(self.anf())
        if monomials.size == 0:
            return 0
        return int(np.max(np.bitwise_count(monomials)))
