import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Literal

from pydantic import BaseModel, Field, ValidationError, field_validator

from . import config
from .codes import (
    CodeSpec,
    build_code,
    contains_all_one,
    default_normal,
    weight_distribution_enum,
)
from .errors import VbfError
from .formats import (
    FunctionTable,
    GeneratorMatrix,
    WeightDistributionArtifact,
    function_from_hex,
    function_to_hex,
    load_function,
)
from .gf2m import FieldSpec, absolute_trace, default_modulus, parse_element, parse_modulus
from .vecfun import VectorialFunction, from_descriptor, power_function
from .verify import target_names, verify

logger = logging.getLogger("vbf_cli")

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


def parse_degrees(text: str) -> list[int]:
    """'7' -> [7], '5,7,9' -> [5, 7, 9], '1..15' -> [1, ..., 15]."""
    degrees: list[int] = []
    for part in text.split(","):
        part = part.strip()
        if ".." in part:
            low, _, high = part.partition("..")
            degrees.extend(range(int(low), int(high) + 1))
        elif part:
            degrees.append(int(part))
    return degrees


class CommandRequest(BaseModel):
    """
    A parsed command line.

    Attributes:
        subcommand: "field show", "fn props", "code build", "verify", ...
        function: descriptor ("gold:5:1", "mm:4", "power:9:19"), bare kind
            completed by --m/--i ("gold"), the path of a FunctionTable JSON file,
            or the path of a hex table read with --m and --s
        lam: component index lambda as an integer or "a^k"
        normal: hyperplane normal u for subcodes
    """
    subcommand: str
    function: str | None = None
    target: str | None = None
    m: list[int] | None = None
    i: int | None = None
    s: int | None = None
    lam: str = "1"
    a: str = "0"
    c: int = Field(default=0, ge=0, le=1)
    normal: str | None = None
    modulus: str | None = None
    format: Literal["text", "json", "hex"] = "text"
    out: str | None = None
    exhaustive: bool = False
    convention: Literal["zero_maps_to_zero", "exclude_zero"] = "zero_maps_to_zero"

    @field_validator("m", mode="before")
    @classmethod
    def _parse_m(cls, value):
        if isinstance(value, str):
            return parse_degrees(value)
        return value


# --- helpers -----------------------------------------------------------------------

def resolve_function(request: CommandRequest) -> VectorialFunction:
    text = request.function
    if not text:
        raise ValueError("a function descriptor is required")
    path = Path(text)
    if text.endswith(".json") and path.exists():
        F = load_function(path)
    elif path.is_file():
        if not request.m or request.s is None:
            raise ValueError(f"hex table {text} needs --m and --s")
        F = function_from_hex(path.read_text(), request.m[0], request.s, name=path.stem)
    else:
        if ":" not in text and request.m:
            text = f"{text}:{request.m[0]}" + (f":{request.i}" if request.i is not None else "")
        F = from_descriptor(text)
    if request.modulus:
        if not F.name.startswith("power:"):
            raise ValueError("--modulus only applies to power functions")
        _, m, d = F.name.split(":")
        field = FieldSpec(degree=int(m), modulus=parse_modulus(request.modulus))
        F = power_function(int(m), int(d), field)
    return F


def build_spec(request: CommandRequest, subcode: bool = False) -> CodeSpec:
    F = resolve_function(request)
    lam = parse_element(request.lam, F.output_field)
    a = parse_element(request.a, F.input_field)
    normal = None
    if subcode:
        normal = parse_element(request.normal, F.output_field) if request.normal else default_normal(lam, F.output_field)
    return CodeSpec(F, lam, offset_a=a, offset_c=request.c, hyperplane_normal=normal)


def _dump(payload) -> str:
    return json.dumps(payload, indent=2)


# --- commands ----------------------------------------------------------------------

def cmd_field_show(request: CommandRequest) -> tuple[int, str]:
    fields = []
    for m in request.m or [5]:
        modulus = parse_modulus(request.modulus) if request.modulus else default_modulus(m)
        spec = FieldSpec(degree=m, modulus=modulus)
        fields.append(spec.describe() | {"trace_mask": hex(spec.trace_mask), "trace_of_one": absolute_trace(1, spec)})
    if request.format == "json":
        return EXIT_OK, _dump(fields)
    lines = [f"F_2^{f['m']}: {f['polynomial']} ({f['modulus']}), Tr(1) = {f['trace_of_one']}" for f in fields]
    return EXIT_OK, "\n".join(lines)


def cmd_fn_props(request: CommandRequest) -> tuple[int, str]:
    F = resolve_function(request)
    ab = F.m == F.s and F.m % 2 == 1 and F.is_almost_bent()
    props = {
        "name": F.name,
        "m": F.m,
        "s": F.s,
        "nonlinearity": F.nonlinearity(),
        "pn": F.is_perfect_nonlinear(),
        "ab": ab,
        "extended_walsh": F.extended_walsh_spectrum().to_dict(),
    }
    if request.format == "json":
        return EXIT_OK, _dump(props)
    spectrum = ", ".join(f"{v}: {c}" for v, c in props["extended_walsh"].items())
    return EXIT_OK, "\n".join([
        f"{F.name or 'F'}: ({F.m}, {F.s})-function",
        f"nonlinearity: {props['nonlinearity']}",
        f"PN: {str(props['pn']).lower()}",
        f"AB: {str(ab).lower()}",
        f"extended Walsh spectrum: {{{spectrum}}}",
    ])


def cmd_fn_walsh(request: CommandRequest) -> tuple[int, str]:
    F = resolve_function(request)
    lam = parse_element(request.lam, F.output_field)
    spectrum = F.component(lam).walsh_full()
    if request.format == "json":
        return EXIT_OK, _dump({"lambda": lam, "spectrum": spectrum.to_list()})
    counts = sorted(spectrum.value_counts().items())
    return EXIT_OK, "\n".join(f"{v}: {c}" for v, c in counts)


def cmd_fn_export(request: CommandRequest) -> tuple[int, str]:
    F = resolve_function(request)
    if request.format == "hex":
        return EXIT_OK, function_to_hex(F)
    return EXIT_OK, FunctionTable.from_function(F).model_dump_json(indent=2)


def _cmd_code(request: CommandRequest, subcode: bool) -> tuple[int, str]:
    spec = build_spec(request, subcode=subcode)
    code = build_code(spec)
    wd = weight_distribution_enum(code)
    parameters = code.parameters(wd.minimum_distance())
    all_one = contains_all_one(code)
    if request.format == "json":
        artifact = WeightDistributionArtifact.build(wd, spec, code)
        payload = json.loads(artifact.to_json()) | {"parameters": parameters, "all_one": all_one}
        return EXIT_OK, _dump(payload)
    return EXIT_OK, "\n".join([parameters, wd.enumerator(), f"all-one codeword: {str(all_one).lower()}"])


def cmd_code_build(request: CommandRequest) -> tuple[int, str]:
    return _cmd_code(request, subcode=False)


def cmd_code_subcode(request: CommandRequest) -> tuple[int, str]:
    return _cmd_code(request, subcode=True)


def cmd_export_gm(request: CommandRequest) -> tuple[int, str]:
    spec = build_spec(request, subcode=request.normal is not None)
    matrix = GeneratorMatrix.from_code(build_code(spec))
    return EXIT_OK, matrix.to_json() if request.format == "json" else matrix.to_text()


def cmd_verify(request: CommandRequest) -> tuple[int, str]:
    params = {
        "m": request.m,
        "descriptor": request.function,
        "exhaustive": request.exhaustive or None,
    }
    if request.target == "lemma11":
        params["convention"] = request.convention
    report = verify(request.target, **params)
    status = EXIT_OK if report.passed else EXIT_MISMATCH
    if request.format == "json":
        return status, report.to_json()
    lines = [f"{report.target}: {'pass' if report.passed else 'FAIL'} ({len(report.rows)} rows)"]
    lines += [f"  {r.instance} {r.w}: predicted {r.predicted}, got {r.empirical}" for r in report.mismatches()]
    lines += [f"  note: {note}" for note in report.notes]
    return status, "\n".join(lines)


COMMANDS = {
    "field show": cmd_field_show,
    "fn props": cmd_fn_props,
    "fn walsh": cmd_fn_walsh,
    "fn export": cmd_fn_export,
    "code build": cmd_code_build,
    "code subcode": cmd_code_subcode,
    "export gm": cmd_export_gm,
    "verify": cmd_verify,
}


# --- argument parsing ----------------------------------------------------------------

def _add_common(parser: argparse.ArgumentParser, function: bool = True) -> None:
    if function:
        parser.add_argument("function", help='descriptor such as "gold:5:1", "mm:4", "power:9:19", or a table JSON file')
    parser.add_argument("--m", type=str, help='field degree(s): "7", "5,7,9" or "1..15"')
    parser.add_argument("--i", type=int, help="second constructor argument when function is a bare kind")
    parser.add_argument("--s", type=int, help="output degree s when function is a hex table file")
    parser.add_argument("--lambda", dest="lam", default="1", help='component index, an integer or "a^k"')
    parser.add_argument("--a", default="0", help="linear selector offset a")
    parser.add_argument("--c", type=int, default=0, help="constant selector offset c")
    parser.add_argument("--normal", help="hyperplane normal u of the subcode")
    parser.add_argument("--modulus", help='primitive polynomial, e.g. "x^5+x^2+1" or 0x25')
    parser.add_argument("--format", choices=["text", "json", "hex"], default="text")
    parser.add_argument("--out", help="write output to this file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vbf-codes",
        description="Build binary codes from vectorial Boolean functions and verify their weight distributions.",
    )
    parser.add_argument("--log-level", default=None, help=f"logging level (default {config.LOG_LEVEL})")
    parser.add_argument("--max-enum-dim", type=int, default=None, help="largest code dimension to enumerate")
    groups = parser.add_subparsers(dest="group", required=True)

    field = groups.add_parser("field", help="finite field information").add_subparsers(dest="action", required=True)
    _add_common(field.add_parser("show", help="modulus, polynomial and trace of F_2^m"), function=False)

    fn = groups.add_parser("fn", help="vectorial Boolean functions").add_subparsers(dest="action", required=True)
    _add_common(fn.add_parser("props", help="nonlinearity, PN/AB flags, extended Walsh spectrum"))
    _add_common(fn.add_parser("walsh", help="Walsh spectrum of the lambda component"))
    _add_common(fn.add_parser("export", help="value table as JSON or hex"))

    code = groups.add_parser("code", help="codes from a component support").add_subparsers(dest="action", required=True)
    _add_common(code.add_parser("build", help="full code, y over F_2^s"))
    _add_common(code.add_parser("subcode", help="subcode, y over a hyperplane"))

    export = groups.add_parser("export", help="artifacts").add_subparsers(dest="action", required=True)
    _add_common(export.add_parser("gm", help="generator matrix in reduced echelon form"))

    verify_parser = groups.add_parser("verify", help="check a closed form against enumeration")
    verify_parser.add_argument("target", help=f"one of: {', '.join(target_names())}")
    verify_parser.add_argument("--fn", dest="function", help="function descriptor for targets that take one")
    verify_parser.add_argument("--exhaustive", action="store_true", help="sweep every lambda instead of a sample")
    verify_parser.add_argument("--convention", choices=["zero_maps_to_zero", "exclude_zero"], default="zero_maps_to_zero")
    _add_common(verify_parser, function=False)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    level = (args.log_level or config.LOG_LEVEL).upper()
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    if args.max_enum_dim is not None:
        config.MAX_ENUM_DIM = args.max_enum_dim

    subcommand = args.group if args.group == "verify" else f"{args.group} {args.action}"
    fields = {k: v for k, v in vars(args).items() if k in CommandRequest.model_fields and v is not None}
    try:
        request = CommandRequest(subcommand=subcommand, **fields)
        status, output = COMMANDS[subcommand](request)
    except ValidationError as e:
        print(f"Invalid request: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (VbfError, ValueError) as e:
        logger.error(f"{subcommand} failed: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE

    if request.out:
        Path(request.out).write_text(output if output.endswith("\n") else output + "\n")
        logger.info(f"wrote {subcommand} output to {request.out}")
    else:
        print(output)
    return status
