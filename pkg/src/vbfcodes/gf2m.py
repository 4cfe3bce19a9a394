"""
Exact arithmetic in the binary field F_{2^m}, 2 <= m <= 20.

Elements are plain integers in [0, 2^m): bit i is the coefficient of x^i in
the polynomial basis, so field addition is XOR. Scalar operations use
carry-less shift-and-reduce; the *_array variants work on numpy arrays via
log/antilog tables and are what the Walsh and code layers call.
"""

import logging
import re
from functools import cached_property, lru_cache
from typing import Iterable

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from . import config
from .errors import DomainError

logger = logging.getLogger("vbf_field")

# An element of F_{2^m} in polynomial-basis encoding.
FieldElement = int

# Moduli pinned so published enumerators reproduce bit-for-bit: x^5+x^2+1, x^7+x+1, x^9+x^4+1.
PINNED_MODULI: dict[int, int] = {
    5: 0b100101,
    7: 0b10000011,
    9: 0b1000010001,
}


def _mulmod(a: int, b: int, modulus: int, degree: int) -> int:
    """Carry-less product of a and b reduced modulo the degree-m polynomial."""
    result = 0
    top = 1 << degree
    while b:
        if b & 1:
            result ^= a
        b >>= 1
        a <<= 1
        if a & top:
            a ^= modulus
    return result


def _powmod(a: int, e: int, modulus: int, degree: int) -> int:
    result = 1
    while e:
        if e & 1:
            result = _mulmod(result, a, modulus, degree)
        a = _mulmod(a, a, modulus, degree)
        e >>= 1
    return result


def _prime_factors(n: int) -> list[int]:
    factors = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            factors.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        factors.append(n)
    return factors


@lru_cache(maxsize=None)
def is_primitive(modulus: int, degree: int) -> bool:
    """
    True iff the degree-m polynomial encoded by modulus is primitive, i.e.
    x has multiplicative order exactly 2^m - 1 modulo it. Primitivity implies
    irreducibility, so this is the only check FieldSpec needs.
    """
    if modulus >> degree != 1 or not modulus & 1:
        return False
    order = (1 << degree) - 1
    if _powmod(2, order, modulus, degree) != 1:
        return False
    return all(_powmod(2, order // p, modulus, degree) != 1 for p in _prime_factors(order))


def _check_degree(m: int) -> None:
    if not config.MIN_DEGREE <= m <= config.MAX_DEGREE:
        raise DomainError(f"field degree must lie in [{config.MIN_DEGREE}, {config.MAX_DEGREE}], got {m}")


@lru_cache(maxsize=None)
def default_modulus(m: int) -> int:
    """
    Deterministic primitive polynomial for F_{2^m}: the pinned choice for
    m in {5, 7, 9}, otherwise the primitive polynomial with the smallest
    integer encoding.
    """
    _check_degree(m)
    if m in PINNED_MODULI:
        return PINNED_MODULI[m]
    for candidate in range((1 << m) | 1, 1 << (m + 1), 2):
        if is_primitive(candidate, m):
            return candidate
    raise AssertionError(f"no primitive polynomial of degree {m}")  # unreachable


def polynomial_string(modulus: int) -> str:
    """Render a bitmask as "x^5+x^2+1"."""
    terms = []
    for i in range(modulus.bit_length() - 1, -1, -1):
        if modulus >> i & 1:
            terms.append("1" if i == 0 else "x" if i == 1 else f"x^{i}")
    return "+".join(terms) if terms else "0"


_TERM = re.compile(r"^(?:1|x(?:\^(\d+))?)$")


def parse_modulus(text: str) -> int:
    """Accept a hex/decimal/binary literal ("0x25", "37", "0b100101") or a
    polynomial string ("x^5+x^2+1")."""
    text = text.strip().replace(" ", "")
    if "x" in text and not text.lower().startswith("0x"):
        value = 0
        for term in text.split("+"):
            match = _TERM.match(term)
            if not match:
                raise DomainError(f"cannot parse polynomial term {term!r} in {text!r}")
            if term == "1":
                exponent = 0
            else:
                exponent = int(match.group(1)) if match.group(1) else 1
            value ^= 1 << exponent
        return value
    try:
        return int(text, 0)
    except ValueError as e:
        raise DomainError(f"cannot parse modulus {text!r}") from e


class FieldSpec(BaseModel):
    """
    F_{2^m} fixed by a primitive polynomial.

    Attributes:
        degree: m, the extension degree
        modulus: bitmask of the primitive polynomial (bit i = coefficient of x^i)
    """
    model_config = ConfigDict(frozen=True)

    degree: int = Field(ge=config.MIN_DEGREE, le=config.MAX_DEGREE)
    modulus: int

    @model_validator(mode="after")
    def _check_modulus(self) -> "FieldSpec":
        if self.modulus >> self.degree != 1:
            raise ValueError(f"modulus {self.modulus:#x} does not have degree {self.degree}")
        if not is_primitive(self.modulus, self.degree):
            raise ValueError(f"modulus {polynomial_string(self.modulus)} is not primitive")
        return self

    @classmethod
    def default(cls, m: int) -> "FieldSpec":
        return cls(degree=m, modulus=default_modulus(m))

    @property
    def order(self) -> int:
        return 1 << self.degree

    @property
    def mask(self) -> int:
        return self.order - 1

    @property
    def polynomial(self) -> str:
        return polynomial_string(self.modulus)

    def describe(self) -> dict:
        return {"m": self.degree, "modulus": hex(self.modulus), "polynomial": self.polynomial}

    def check(self, a: int) -> int:
        if not 0 <= a < self.order:
            raise DomainError(f"{a} is not an element of F_2^{self.degree}")
        return a

    def elements(self) -> np.ndarray:
        return np.arange(self.order, dtype=np.int64)

    @cached_property
    def log_tables(self) -> tuple[np.ndarray, np.ndarray]:
        return _tables(self.degree, self.modulus)

    @property
    def exp_table(self) -> np.ndarray:
        """exp[k] = x^k for 0 <= k < 2(2^m - 1)."""
        return self.log_tables[0]

    @property
    def log_table(self) -> np.ndarray:
        """log[a] for a != 0; log[0] is -1."""
        return self.log_tables[1]

    @cached_property
    def trace_mask(self) -> int:
        """Bitmask t with Tr_1^m(a) = parity(a & t), since the absolute trace is linear."""
        mask = 0
        for i in range(self.degree):
            if trace(1 << i, 1, self):
                mask |= 1 << i
        return mask


@lru_cache(maxsize=None)
def _tables(degree: int, modulus: int) -> tuple[np.ndarray, np.ndarray]:
    q = 1 << degree
    exp = np.zeros(2 * (q - 1), dtype=np.int64)
    log = np.full(q, -1, dtype=np.int64)
    a = 1
    for k in range(q - 1):
        exp[k] = a
        log[a] = k
        a <<= 1
        if a & q:
            a ^= modulus
    exp[q - 1:] = exp[:q - 1]
    exp.setflags(write=False)
    log.setflags(write=False)
    logger.debug(f"built log tables for F_2^{degree} mod {polynomial_string(modulus)}")
    return exp, log


# --- scalar operations -------------------------------------------------------

def mul(a: FieldElement, b: FieldElement, spec: FieldSpec) -> FieldElement:
    return _mulmod(spec.check(a), spec.check(b), spec.modulus, spec.degree)


def power(a: FieldElement, e: int, spec: FieldSpec) -> FieldElement:
    """a^e by square-and-multiply; 0^0 = 1."""
    if e < 0:
        raise DomainError(f"exponent must be non-negative, got {e}")
    return _powmod(spec.check(a), e, spec.modulus, spec.degree)


def inverse(a: FieldElement, spec: FieldSpec) -> FieldElement:
    if spec.check(a) == 0:
        raise DomainError("0 has no multiplicative inverse")
    return power(a, spec.order - 2, spec)


def trace(a: FieldElement, t: int, spec: FieldSpec) -> FieldElement:
    """Tr_t^m(a) = sum_{i < m/t} a^{2^{t i}}; the result lies in F_{2^t}."""
    if t <= 0 or spec.degree % t:
        raise DomainError(f"trace to F_2^{t} needs t | {spec.degree}")
    spec.check(a)
    result = 0
    term = a
    for _ in range(spec.degree // t):
        result ^= term
        for _ in range(t):
            term = _mulmod(term, term, spec.modulus, spec.degree)
    return result


def absolute_trace(a: FieldElement, spec: FieldSpec) -> int:
    return (a & spec.trace_mask).bit_count() & 1


def root(a: FieldElement, d: int, spec: FieldSpec) -> FieldElement:
    """The unique d-th root of a, a^{d'} with d d' = 1 mod 2^m - 1."""
    n = spec.order - 1
    try:
        d_inv = pow(d, -1, n)
    except ValueError as e:
        raise DomainError(f"gcd({d}, {n}) != 1, d-th roots are not unique") from e
    return power(a, d_inv, spec)


def parse_element(text: str, spec: FieldSpec) -> FieldElement:
    """Parse "13", "0xd" or a power of the generator "a^7" (also "α^7")."""
    text = text.strip()
    match = re.fullmatch(r"(?:a|α|alpha)\^(-?\d+)", text)
    if match:
        k = int(match.group(1)) % (spec.order - 1)
        return power(2, k, spec)
    try:
        return spec.check(int(text, 0))
    except ValueError as e:
        raise DomainError(f"cannot parse field element {text!r}") from e


# --- vectorised operations ----------------------------------------------------

def mul_array(a, b, spec: FieldSpec) -> np.ndarray:
    """Elementwise product of broadcastable integer arrays."""
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    exp, log = spec.exp_table, spec.log_table
    product = exp[(log[a] + log[b]) % (spec.order - 1)]
    return np.where((a == 0) | (b == 0), 0, product)


def power_array(a, e: int, spec: FieldSpec) -> np.ndarray:
    a = np.asarray(a, dtype=np.int64)
    if e == 0:
        return np.ones_like(a)
    exp, log = spec.exp_table, spec.log_table
    result = exp[(log[a] * (e % (spec.order - 1))) % (spec.order - 1)]
    return np.where(a == 0, 0, result)


def trace_array(a, spec: FieldSpec) -> np.ndarray:
    """Absolute trace Tr_1^m of every entry, as uint8 bits."""
    a = np.asarray(a, dtype=np.int64)
    return (np.bitwise_count(a & spec.trace_mask) & 1).astype(np.uint8)


def span_rank(vectors: Iterable[int]) -> int:
    """GF(2) rank of integers viewed as bit vectors."""
    return len(xor_basis(vectors))


def xor_basis(vectors: Iterable[int]) -> list[int]:
    """
    Reduced echelon basis of the span of the given bit vectors, highest
    pivot first. Deterministic for a given input order.
    """
    basis: list[int] = []
    for v in vectors:
        for b in basis:
            v = min(v, v ^ b)
        if v:
            basis = [min(b, b ^ v) for b in basis]
            basis.append(v)
            basis.sort(reverse=True)
    return basis
