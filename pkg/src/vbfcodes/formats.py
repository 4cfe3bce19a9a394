"""
Artifact schemas: function tables, generator matrices and weight distributions.

Every exported artifact carries an ArtifactHeader recording the field moduli,
lambda, the selector offsets and the hyperplane normal, so the object it
describes can be rebuilt exactly.
"""

import json
import logging
from pathlib import Path

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from .codes import CodeSpec, LinearCode, WeightDistribution
from .errors import DomainError
from .gf2m import FieldSpec, default_modulus
from .vecfun import VectorialFunction

logger = logging.getLogger("vbf_formats")


class FunctionTable(BaseModel):
    """
    JSON form of an (m, s)-function: {"m": 5, "s": 5, "table": [...]}.

    Moduli are optional and default to the deterministic primitive
    polynomials, so tables written without them still load identically.
    """
    m: int = Field(ge=2)
    s: int = Field(ge=2)
    table: list[int]
    input_modulus: int | None = None
    output_modulus: int | None = None
    name: str = ""

    @model_validator(mode="after")
    def _check_table(self) -> "FunctionTable":
        if len(self.table) != 1 << self.m:
            raise ValueError(f"table must have 2^{self.m} = {1 << self.m} entries, got {len(self.table)}")
        if any(not 0 <= v < 1 << self.s for v in self.table):
            raise ValueError(f"table values must lie in [0, 2^{self.s})")
        return self

    @classmethod
    def from_function(cls, F: VectorialFunction) -> "FunctionTable":
        return cls(
            m=F.m,
            s=F.s,
            table=F.table.tolist(),
            input_modulus=F.input_field.modulus,
            output_modulus=F.output_field.modulus,
            name=F.name,
        )

    def to_function(self) -> VectorialFunction:
        input_field = FieldSpec(degree=self.m, modulus=self.input_modulus or default_modulus(self.m))
        output_field = FieldSpec(degree=self.s, modulus=self.output_modulus or default_modulus(self.s))
        return VectorialFunction(input_field, output_field, np.asarray(self.table, dtype=np.int64), name=self.name)


def function_to_hex(F: VectorialFunction) -> str:
    """Values as fixed-width big-endian hex digits, ceil(s / 4) per entry, x ascending."""
    width = -(-F.s // 4)
    return "".join(f"{int(v):0{width}x}" for v in F.table)


def function_from_hex(text: str, m: int, s: int, name: str = "") -> VectorialFunction:
    text = "".join(text.split())
    width = -(-s // 4)
    if len(text) != width << m:
        raise DomainError(f"hex table for an ({m}, {s})-function needs {width << m} digits, got {len(text)}")
    try:
        table = [int(text[i:i + width], 16) for i in range(0, len(text), width)]
    except ValueError as e:
        raise DomainError(f"invalid hex table: {e}") from e
    return FunctionTable(m=m, s=s, table=table, name=name).to_function()


def save_function(F: VectorialFunction, path: str | Path) -> None:
    Path(path).write_text(FunctionTable.from_function(F).model_dump_json(indent=2))
    logger.info(f"wrote {F.name or 'function'} table to {path}")


def load_function(path: str | Path) -> VectorialFunction:
    """Read a FunctionTable JSON file; raises pydantic.ValidationError on malformed content."""
    return FunctionTable.model_validate_json(Path(path).read_text()).to_function()


class ArtifactHeader(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    function: str
    input_field: dict
    output_field: dict
    lam: int = Field(alias="lambda")
    offset_a: int
    offset_c: int
    hyperplane_normal: int | None
    length: int | None = None
    dimension: int | None = None

    @classmethod
    def for_spec(cls, spec: CodeSpec, code: LinearCode | None = None) -> "ArtifactHeader":
        header = cls.model_validate(spec.describe())
        if code is not None:
            header = header.model_copy(update={"length": code.length, "dimension": code.dimension})
        return header

    def text_lines(self) -> list[str]:
        return [f"# {k}: {json.dumps(v)}" for k, v in self.model_dump(by_alias=True).items()]


class GeneratorMatrix(BaseModel):
    header: ArtifactHeader
    rows: list[str]

    @model_validator(mode="after")
    def _check_rows(self) -> "GeneratorMatrix":
        if any(set(row) - {"0", "1"} for row in self.rows):
            raise ValueError("rows must consist of '0' and '1' characters")
        if len({len(row) for row in self.rows}) > 1:
            raise ValueError("rows must have equal length")
        return self

    @classmethod
    def from_code(cls, code: LinearCode) -> "GeneratorMatrix":
        if code.spec is None:
            raise DomainError("code has no CodeSpec to describe it")
        rows = ["".join("1" if bit else "0" for bit in row) for row in code.generators]
        return cls(header=ArtifactHeader.for_spec(code.spec, code), rows=rows)

    def to_array(self) -> np.ndarray:
        return np.asarray([[int(ch) for ch in row] for row in self.rows], dtype=np.uint8)

    def to_text(self) -> str:
        return "\n".join(self.header.text_lines() + self.rows) + "\n"

    def to_json(self) -> str:
        return self.model_dump_json(by_alias=True, indent=2)


class WeightDistributionArtifact(BaseModel):
    header: ArtifactHeader | None = None
    distribution: list[dict[str, int]]
    enumerator: str

    @classmethod
    def build(cls, wd: WeightDistribution, spec: CodeSpec | None = None, code: LinearCode | None = None) -> "WeightDistributionArtifact":
        header = ArtifactHeader.for_spec(spec, code) if spec is not None else None
        return cls(header=header, distribution=wd.to_rows(), enumerator=wd.enumerator())

    def weight_distribution(self) -> WeightDistribution:
        return WeightDistribution.from_rows(self.distribution)

    def to_json(self) -> str:
        return self.model_dump_json(by_alias=True, indent=2)
