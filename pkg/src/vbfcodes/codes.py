"""
Binary linear codes C = {c_{x,y}} with c_{x,y} = (Tr_1^m(x d) + Tr_1^s(y F(d)))_{d in D},
D the support of a component selector f_lambda + Tr_1^m(a x) + c.

The full code lets y range over F_{2^s}; the subcode restricts y to a
hyperplane H = {y : Tr_1^s(u y) = 0} with Tr_1^s(u lambda) = 1.
"""

import logging
import re
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Mapping

import numpy as np
from pydantic import BaseModel, ConfigDict, model_validator

from . import config
from .boolfun import BooleanFunction
from .errors import CapacityError, DomainError, WalshPathUnavailable
from .gf2m import FieldElement, FieldSpec, absolute_trace, inverse, mul, mul_array, trace_array, xor_basis
from .vecfun import VectorialFunction, offset_function

logger = logging.getLogger("vbf_codes")

# Rows of the span table built once per enumeration; the remaining rows are walked in Gray order.
_LOW_ROWS = 12


# --- GF(2) linear algebra -----------------------------------------------------

def gf2_rref(matrix: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form over GF(2) and its pivot columns; zero rows are dropped."""
    a = (np.asarray(matrix) & 1).astype(np.uint8, copy=True)
    rows, cols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        candidates = np.flatnonzero(a[r:, c])
        if candidates.size == 0:
            continue
        p = r + int(candidates[0])
        if p != r:
            a[[r, p], :] = a[[p, r], :]
        ones = np.flatnonzero(a[:, c])
        ones = ones[ones != r]
        if ones.size:
            a[ones, :] ^= a[r, :]
        pivots.append(c)
        r += 1
    return a[:r], pivots


def gf2_rank(matrix: np.ndarray) -> int:
    return len(gf2_rref(matrix)[1])


def in_rowspace(v: np.ndarray, rref: np.ndarray, pivots: list[int]) -> bool:
    """Membership test against a matrix already in reduced echelon form."""
    v = (np.asarray(v).reshape(-1) & 1).astype(np.uint8, copy=True)
    for row, p in zip(rref, pivots):
        if v[p]:
            v ^= row
    return not v.any()


# --- code descriptions --------------------------------------------------------

@dataclass(frozen=True)
class CodeSpec:
    """
    Which code to build.

    Attributes:
        function: the (m, s)-function F
        lam: component index lambda, nonzero in F_{2^s}
        offset_a: a in Tr_1^m(a x) added to the selector
        offset_c: constant bit added to the selector
        hyperplane_normal: u defining H for the subcode; None for the full code
    """
    function: VectorialFunction
    lam: FieldElement
    offset_a: FieldElement = 0
    offset_c: int = 0
    hyperplane_normal: FieldElement | None = None

    def __post_init__(self):
        out = self.function.output_field
        if out.check(self.lam) == 0:
            raise DomainError("lambda must be nonzero")
        self.function.input_field.check(self.offset_a)
        if self.offset_c not in (0, 1):
            raise DomainError(f"offset bit c must be 0 or 1, got {self.offset_c}")
        u = self.hyperplane_normal
        if u is not None:
            if out.check(u) == 0:
                raise DomainError("hyperplane normal must be nonzero")
            if absolute_trace(mul(u, self.lam, out), out) != 1:
                raise DomainError(f"Tr(u lambda) must be 1 so that lambda lies outside H (u = {u}, lambda = {self.lam})")

    @property
    def is_subcode(self) -> bool:
        return self.hyperplane_normal is not None

    @cached_property
    def modified(self) -> VectorialFunction:
        """F' = F + (Tr(a x) + c) theta; equals F when a = c = 0."""
        return offset_function(self.function, self.lam, self.offset_a, self.offset_c)

    @cached_property
    def selector(self) -> BooleanFunction:
        return self.modified.component(self.lam)

    @cached_property
    def y_range(self) -> np.ndarray:
        """All of F_{2^s}, or H for the subcode."""
        out = self.function.output_field
        ys = out.elements()
        if not self.is_subcode:
            return ys
        return ys[trace_array(mul_array(ys, self.hyperplane_normal, out), out) == 0]

    def output_basis(self) -> list[FieldElement]:
        if not self.is_subcode:
            return [1 << k for k in range(self.function.s)]
        return sorted(xor_basis(self.y_range.tolist()))

    def expected_dimension(self) -> int:
        return self.function.m + self.function.s - (1 if self.is_subcode else 0)

    def describe(self) -> dict:
        """Reproducibility header for exported artifacts."""
        return {
            "function": self.function.name,
            "input_field": self.function.input_field.describe(),
            "output_field": self.function.output_field.describe(),
            "lambda": self.lam,
            "offset_a": self.offset_a,
            "offset_c": self.offset_c,
            "hyperplane_normal": self.hyperplane_normal,
        }


def default_normal(lam: FieldElement, field: FieldSpec) -> FieldElement:
    """u = lambda^{-1}, valid only when Tr_1^s(1) = 1 (odd s)."""
    u = inverse(lam, field)
    if absolute_trace(1, field) != 1:
        raise DomainError(f"no default hyperplane for s = {field.degree} (Tr(1) = 0); supply the normal")
    return u


def hyperplane_normal_from_basis(basis: list[FieldElement], field: FieldSpec) -> FieldElement:
    """The unique u != 0 with Tr_1^s(u h) = 0 for h in span(basis), which must be a hyperplane."""
    if len(xor_basis(basis)) != field.degree - 1:
        raise DomainError(f"{basis} does not span a hyperplane of F_2^{field.degree}")
    us = field.elements()[1:]
    traces = trace_array(mul_array(us[:, None], np.asarray(basis, dtype=np.int64)[None, :], field), field)
    return int(us[np.flatnonzero(~traces.any(axis=1))[0]])


@dataclass(frozen=True, eq=False)
class LinearCode:
    """Generator matrix in reduced echelon form, columns indexed by the support."""
    length: int
    dimension: int
    generators: np.ndarray
    pivots: tuple[int, ...]
    support: tuple[FieldElement, ...]
    spec: CodeSpec | None = None

    @classmethod
    def from_rows(cls, rows: np.ndarray, support=(), spec: CodeSpec | None = None) -> "LinearCode":
        rows = np.atleast_2d(np.asarray(rows, dtype=np.uint8))
        rref, pivots = gf2_rref(rows)
        return cls(
            length=rows.shape[1],
            dimension=len(pivots),
            generators=rref,
            pivots=tuple(pivots),
            support=tuple(support),
            spec=spec,
        )

    def parameters(self, distance: int | None = None) -> str:
        return f"[{self.length},{self.dimension},{'?' if distance is None else distance}]"


def generator_rows(spec: CodeSpec, support: np.ndarray) -> np.ndarray:
    """Tr_1^m(x^i d) for i < m, then Tr_1^s(b F'(d)) for b in the output (or H) basis."""
    F = spec.modified
    rows = [
        trace_array(mul_array(support, 1 << i, F.input_field), F.input_field)
        for i in range(F.m)
    ]
    values = F.table[support]
    rows += [
        trace_array(mul_array(values, b, F.output_field), F.output_field)
        for b in spec.output_basis()
    ]
    return np.vstack(rows)


def build_code(spec: CodeSpec) -> LinearCode:
    support = np.asarray(spec.selector.support(), dtype=np.int64)
    if support.size == 0:
        raise DomainError("the selector function has empty support")
    code = LinearCode.from_rows(generator_rows(spec, support), support.tolist(), spec)
    logger.info(
        f"built {'subcode' if spec.is_subcode else 'code'} {code.parameters()} "
        f"from {spec.function.name or 'F'} lambda={spec.lam} a={spec.offset_a} c={spec.offset_c}"
    )
    return code


# --- weight distributions ------------------------------------------------------

class WeightDistribution(BaseModel):
    """Sorted (w, A_w) pairs with A_w > 0."""
    model_config = ConfigDict(frozen=True)

    entries: tuple[tuple[int, int], ...]

    @model_validator(mode="after")
    def _check_entries(self) -> "WeightDistribution":
        weights = [w for w, _ in self.entries]
        if weights != sorted(set(weights)):
            raise ValueError("weights must be strictly increasing")
        if any(w < 0 or a <= 0 for w, a in self.entries):
            raise ValueError("weights must be non-negative and multiplicities positive")
        return self

    @classmethod
    def from_counts(cls, counts: Mapping[int, int] | np.ndarray) -> "WeightDistribution":
        if isinstance(counts, np.ndarray):
            counts = {int(w): int(a) for w, a in enumerate(counts) if a}
        return cls(entries=tuple(sorted((int(w), int(a)) for w, a in counts.items() if a)))

    @classmethod
    def from_rows(cls, rows: list[dict]) -> "WeightDistribution":
        return cls.from_counts({int(r["w"]): int(r["A"]) for r in rows})

    def as_dict(self) -> dict[int, int]:
        return dict(self.entries)

    def total(self) -> int:
        return sum(a for _, a in self.entries)

    def weights(self) -> list[int]:
        return [w for w, _ in self.entries]

    def multiplicity(self, w: int) -> int:
        return self.as_dict().get(w, 0)

    @property
    def is_zero_code(self) -> bool:
        return all(w == 0 for w, _ in self.entries)

    def minimum_distance(self) -> int:
        """Smallest nonzero weight, 0 for the zero code (see is_zero_code)."""
        return min((w for w, _ in self.entries if w), default=0)

    def is_symmetric(self, n: int) -> bool:
        counts = self.as_dict()
        return all(counts.get(n - w) == a for w, a in counts.items())

    def enumerator(self) -> str:
        return weight_enumerator_string(self)

    def to_rows(self) -> list[dict[str, int]]:
        return [{"w": w, "A": a} for w, a in self.entries]


def weight_enumerator_string(wd: WeightDistribution) -> str:
    """Render as 1+84z^{10}+...+z^{28}; coefficient 1 is omitted on nonconstant terms."""
    terms = []
    for w, a in wd.entries:
        if w == 0:
            terms.append(str(a))
        elif a == 1:
            terms.append(f"z^{{{w}}}")
        else:
            terms.append(f"{a}z^{{{w}}}")
    return "+".join(terms)


_ENUM_TERM = re.compile(r"^(\d*)(z(?:\^\{?(\d+)\}?)?)?$")


def parse_weight_enumerator(text: str) -> WeightDistribution:
    """Inverse of weight_enumerator_string; also accepts z^10 and a bare z."""
    counts: Counter = Counter()
    for term in text.replace(" ", "").replace("$", "").split("+"):
        match = _ENUM_TERM.match(term)
        if not term or not match or not (match.group(1) or match.group(2)):
            raise DomainError(f"cannot parse enumerator term {term!r}")
        coefficient = int(match.group(1)) if match.group(1) else 1
        if match.group(2):
            weight = int(match.group(3)) if match.group(3) else 1
        else:
            weight = 0
        counts[weight] += coefficient
    return WeightDistribution.from_counts(counts)


def _pack_rows(rows: np.ndarray) -> np.ndarray:
    """uint8 bit rows -> uint64 words, bit j of a row in word j // 64."""
    k, n = rows.shape
    words = max(1, -(-n // 64))
    packed = np.packbits(rows, axis=1, bitorder="little")
    padded = np.zeros((k, words * 8), dtype=np.uint8)
    padded[:, :packed.shape[1]] = packed
    return padded.view("<u8")


def weight_distribution_enum(code: LinearCode, max_dim: int | None = None) -> WeightDistribution:
    """
    Popcount histogram over all 2^k codewords.

    The span of the first rows is tabulated once; the remaining rows are
    toggled one at a time in Gray-code order and XORed onto the whole table.

    Raises:
        CapacityError: if k exceeds max_dim (VBF_MAX_ENUM_DIM by default)
    """
    max_dim = config.MAX_ENUM_DIM if max_dim is None else max_dim
    k, n = code.dimension, code.length
    if k > max_dim:
        raise CapacityError(f"dimension {k} exceeds the enumeration limit {max_dim}")
    histogram = np.zeros(n + 1, dtype=np.int64)
    if k == 0:
        histogram[0] = 1
        return WeightDistribution.from_counts(histogram)

    words = _pack_rows(code.generators)
    low = min(k, _LOW_ROWS)
    table = np.zeros((1 << low, words.shape[1]), dtype=np.uint64)
    for j in range(low):
        table[1 << j:2 << j] = table[:1 << j] ^ words[j]
    high = words[low:]

    current = np.zeros(words.shape[1], dtype=np.uint64)
    for i in range(1 << (k - low)):
        if i:
            current ^= high[(i & -i).bit_length() - 1]
        weights = np.bitwise_count(table ^ current).sum(axis=1, dtype=np.int64)
        histogram += np.bincount(weights, minlength=n + 1)
    return WeightDistribution.from_counts(histogram)


def codeword_weights_walsh(spec: CodeSpec, ys: np.ndarray | None = None) -> np.ndarray:
    """
    wt(c_{x,y}) for y in ys (rows, default spec.y_range) and every x (columns), from

        wt = (2 n - W_F'(y, x) + W_F'(y + lambda, x)) / 4,

    with W_F'(0, x) = 2^m [x = 0].
    """
    n = spec.selector.weight()
    F = spec.modified
    ys = spec.y_range if ys is None else np.asarray(ys, dtype=np.int64)
    return (2 * n - F.spectra(ys) + F.spectra(ys ^ spec.lam)) // 4


def weight_distribution_walsh(spec: CodeSpec, code: LinearCode | None = None) -> WeightDistribution:
    """
    Distribution read off the Walsh spectra of F'. Only defined when
    (x, y) -> c_{x,y} is injective, i.e. the code has full dimension.

    Raises:
        WalshPathUnavailable: if the code dimension is below m + s (m + s - 1 for a subcode)
    """
    code = code or build_code(spec)
    if code.dimension != spec.expected_dimension():
        logger.warning(
            f"codeword map is not injective (k = {code.dimension} < {spec.expected_dimension()}); "
            f"Walsh path disabled"
        )
        raise WalshPathUnavailable(
            f"k = {code.dimension} differs from {spec.expected_dimension()}; use weight_distribution_enum"
        )
    histogram = np.zeros(code.length + 1, dtype=np.int64)
    for ys in spec.modified.lambda_batches(spec.y_range):
        weights = codeword_weights_walsh(spec, ys)
        histogram += np.bincount(weights.reshape(-1), minlength=code.length + 1)
    return WeightDistribution.from_counts(histogram)


def minimum_distance(wd: WeightDistribution) -> int:
    return wd.minimum_distance()


# --- structural checks ---------------------------------------------------------

def column_classes(code: LinearCode) -> dict:
    """Zero columns and groups of equal columns of the generator matrix."""
    columns = code.generators.T
    zero = np.flatnonzero(~columns.any(axis=1)).tolist()
    groups: dict[bytes, list[int]] = {}
    for j, column in enumerate(columns):
        groups.setdefault(column.tobytes(), []).append(j)
    duplicates = [g for g in groups.values() if len(g) > 1]
    return {"zero_columns": zero, "duplicate_columns": duplicates}


def dual_distance_at_least_3(code: LinearCode) -> bool:
    """No zero column and no two equal columns."""
    if code.dimension == 0:
        return False
    classes = column_classes(code)
    return not classes["zero_columns"] and not classes["duplicate_columns"]


def contains_all_one(code: LinearCode) -> bool:
    if code.dimension == 0:
        return False
    return in_rowspace(np.ones(code.length, dtype=np.uint8), code.generators, list(code.pivots))


def pless_moments(wd: WeightDistribution, n: int, k: int) -> list[tuple[int, int, int]]:
    """
    First three power moments (order, sum_w w^i A_w, predicted) for a binary
    [n, k] code whose dual has minimum distance at least 3.
    """
    counts = wd.as_dict()
    predicted = [1 << k, (n << k) // 2, (n * (n + 1) << k) // 4]
    return [
        (i, sum(w ** i * a for w, a in counts.items()), predicted[i])
        for i in range(3)
    ]
