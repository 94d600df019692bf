"""
Command-Line Interface

Batch commands with JSON in and JSON out. Input documents are read from
``--in`` (a path, or standard input when omitted or "-"), validated against
the pydantic schemas, handed to MomentService, and the response is written
to ``--out`` or standard output. Logs go to stderr.

Exit codes:
    0  success
    2  invalid input (schema violation, malformed JSON, violated precondition)
    3  numerical failure (indefinite functional, branch error, ...)
"""

import argparse
import json
import logging
import math
import sys
from pathlib import Path
from typing import Any, Callable, Optional, Sequence

from pydantic import BaseModel, ValidationError

from moments.config import get_settings
from moments.exceptions import ComputationError, InputError
from moments.schemas.family import FamilyDocument
from moments.schemas.functional import FunctionalDocument
from moments.schemas.measure import MeasureDocument
from moments.schemas.requests import (
    CarlemanRequest,
    CheckRequest,
    ConvRequest,
    EnergyRequest,
    ForwardRequest,
    GrowthRequest,
    JacobiRequest,
    ReconstructRequest,
    RecurrenceRequest,
)
from moments.schemas.sequence import SequenceDocument
from moments.schemas.transform import TransformRequest
from moments.services.moment_service import MomentService, get_moment_service

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_COMPUTATION = 3

FAMILY_KINDS = ("monomial", "newton", "sheffer", "hermite", "charlier", "bernoulli")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="moments",
        description="Generalized moment problems over Sheffer polynomial families.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    family = commands.add_parser("family", help="rows of P_0..P_N in monomial coordinates")
    _add_family_options(family)
    _add_output(family)

    conv = commands.add_parser("conv", help="convolution f ∗_P g")
    conv.add_argument("--f", required=True, help="JSON list of coefficients of f")
    conv.add_argument("--g", required=True, help="JSON list of coefficients of g")
    _add_family_options(conv)
    _add_output(conv)

    for name, help_text in (
        ("check", "∗_P-positivity of a functional at truncation N"),
        ("reconstruct", "representing discrete measure at truncation N"),
        ("recurrence", "three-term recurrence coefficients at truncation N"),
        ("analytic", "positivity plus the (n!)^2 C^{n+1} diagonal bound"),
    ):
        sub = commands.add_parser(name, help=help_text)
        _add_input(sub)
        sub.add_argument("--n", type=int, required=True, help="truncation N")
        sub.add_argument("--tol", type=float, help="relative eigenvalue tolerance")
        _add_family_options(sub)
        _add_output(sub)

    forward = commands.add_parser("forward", help="moments τ_n = ∫ P_n dμ of a measure")
    _add_input(forward)
    forward.add_argument("--m", type=int, required=True, help="last moment index M")
    _add_family_options(forward)
    _add_output(forward)

    transform = commands.add_parser("transform", help="S, Laplace or Bogoliubov transform on a λ grid")
    transform.add_argument("kind", choices=("s", "laplace", "bogoliubov"))
    _add_input(transform)
    transform.add_argument(
        "--lambda", dest="grid", action="append", required=True, type=_parse_point,
        help="grid point, real ('0.3') or complex ('0.1,0.2'); repeatable",
    )
    transform.add_argument("--terms", type=int, help="maximal number of series terms")
    _add_output(transform)

    growth = commands.add_parser("growth", help="fitted C of |τ_n| <= n! C^{n+1}")
    _add_input(growth)
    growth.add_argument("--tail", type=int, help="window of the increasing-tail flag")
    _add_output(growth)

    carleman = commands.add_parser("carleman", help="partial sums of τ_{2k+2n}^{-1/(2n)}")
    _add_input(carleman)
    carleman.add_argument("--k", type=int, default=0, help="index shift k")
    carleman.add_argument("--terms", type=int, required=True, help="number of terms")
    _add_output(carleman)

    energy = commands.add_parser("energy", help="τ(δ_n ∗_P δ_n) against (n!)^2 C^{n+1}")
    _add_input(energy)
    energy.add_argument("--n", type=int, required=True, help="truncation N")
    energy.add_argument("--tail", type=int, help="window of the increasing-tail flag")
    _add_family_options(energy)
    _add_output(energy)

    jacobi = commands.add_parser("jacobi", help="matrix of multiplication by x in the basis P_0..P_N")
    jacobi.add_argument("--n", type=int, required=True, help="matrix size minus one")
    _add_family_options(jacobi)
    _add_output(jacobi)

    serve = commands.add_parser("serve", help="run the HTTP API")
    serve.add_argument("--host", help="bind address")
    serve.add_argument("--port", type=int, help="port")

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Run one command.

    Args:
        argv: arguments without the program name (default: sys.argv[1:])

    Returns:
        int: process exit code
    """
    settings = get_settings()
    logging.basicConfig(
        level=getattr(logging, settings.log_level.upper()),
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        stream=sys.stderr,
    )
    args = build_parser().parse_args(argv)
    logger.info(f"Running command '{args.command}'")

    if args.command == "serve":
        return _serve(args)

    service = get_moment_service(settings)
    try:
        result = HANDLERS[args.command](service, args)
    except (ValidationError, json.JSONDecodeError, InputError, OSError) as e:
        _report(e)
        return EXIT_INPUT
    except (ComputationError, ZeroDivisionError) as e:
        _report(e)
        return EXIT_COMPUTATION

    _write(_dump(result), args.out)
    return EXIT_OK


def _cmd_family(service: MomentService, args: argparse.Namespace) -> BaseModel:
    return service.family(_family_document(args, default_order=get_settings().default_order))


def _cmd_conv(service: MomentService, args: argparse.Namespace) -> BaseModel:
    request = ConvRequest(
        f=SequenceDocument(coeffs=json.loads(args.f)),
        g=SequenceDocument(coeffs=json.loads(args.g)),
        family=_family_document(args, default_order=get_settings().default_order),
    )
    return service.convolve(request)


def _cmd_check(service: MomentService, args: argparse.Namespace) -> BaseModel:
    return service.check(CheckRequest(**_functional_fields(args), tol=args.tol))


def _cmd_reconstruct(service: MomentService, args: argparse.Namespace) -> BaseModel:
    return service.reconstruct(ReconstructRequest(**_functional_fields(args), tol=args.tol))


def _cmd_recurrence(service: MomentService, args: argparse.Namespace) -> BaseModel:
    return service.recurrence(RecurrenceRequest(**_functional_fields(args)))


def _cmd_analytic(service: MomentService, args: argparse.Namespace) -> BaseModel:
    return service.analytic(CheckRequest(**_functional_fields(args), tol=args.tol))


def _cmd_forward(service: MomentService, args: argparse.Namespace) -> BaseModel:
    measure = MeasureDocument.model_validate_json(_read(args.input))
    request = ForwardRequest(measure=measure, family=_family_document(args, default_order=args.m), m=args.m)
    return service.forward(request)


def _cmd_transform(service: MomentService, args: argparse.Namespace) -> list[BaseModel]:
    source = json.loads(_read(args.input))
    request = TransformRequest(kind=args.kind, source=source, grid=args.grid, terms=args.terms)
    return service.transform(request)


def _cmd_growth(service: MomentService, args: argparse.Namespace) -> BaseModel:
    functional = FunctionalDocument.model_validate_json(_read(args.input))
    return service.growth(GrowthRequest(functional=functional, tail=args.tail))


def _cmd_carleman(service: MomentService, args: argparse.Namespace) -> BaseModel:
    functional = FunctionalDocument.model_validate_json(_read(args.input))
    return service.carleman(CarlemanRequest(functional=functional, k=args.k, terms=args.terms))


def _cmd_energy(service: MomentService, args: argparse.Namespace) -> BaseModel:
    return service.energy(EnergyRequest(**_functional_fields(args), tail=args.tail))


def _cmd_jacobi(service: MomentService, args: argparse.Namespace) -> BaseModel:
    family = _family_document(args, default_order=args.n + 1)
    return service.jacobi(JacobiRequest(family=family, n=args.n))


HANDLERS: dict[str, Callable[[MomentService, argparse.Namespace], Any]] = {
    "family": _cmd_family,
    "conv": _cmd_conv,
    "check": _cmd_check,
    "reconstruct": _cmd_reconstruct,
    "recurrence": _cmd_recurrence,
    "analytic": _cmd_analytic,
    "forward": _cmd_forward,
    "transform": _cmd_transform,
    "growth": _cmd_growth,
    "carleman": _cmd_carleman,
    "energy": _cmd_energy,
    "jacobi": _cmd_jacobi,
}


def _add_family_options(parser: argparse.ArgumentParser) -> None:
    group = parser.add_argument_group("family")
    group.add_argument("--kind", choices=FAMILY_KINDS, help="family preset, or sheffer with --gamma/--alpha")
    group.add_argument("--order", type=int, help="truncation order N of the family")
    group.add_argument("--gamma", help="JSON list of γ coefficients (sheffer)")
    group.add_argument("--alpha", help="JSON list of α coefficients (sheffer)")
    group.add_argument("--rate", default="1", help="Charlier parameter a")
    group.add_argument("--family-file", type=Path, help="family JSON document; overrides --kind")


def _add_input(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--in", dest="input", default="-", help="input JSON path, '-' for stdin")


def _add_output(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--out", help="output path (default: stdout)")


def _family_document(args: argparse.Namespace, default_order: Optional[int]) -> Optional[FamilyDocument]:
    """The family from --family-file or --kind; None without either when default_order is None."""
    if args.family_file is not None:
        return FamilyDocument.model_validate_json(args.family_file.read_text(encoding="utf-8"))
    if args.kind is None and default_order is None:
        return None
    return FamilyDocument(
        kind=args.kind or "monomial",
        order=args.order if args.order is not None else default_order,
        gamma=json.loads(args.gamma) if args.gamma else None,
        alpha=json.loads(args.alpha) if args.alpha else None,
        rate=args.rate,
    )


def _functional_fields(args: argparse.Namespace) -> dict[str, Any]:
    """Functional from --in, family from the flags, falling back to the functional's own label."""
    functional = FunctionalDocument.model_validate_json(_read(args.input))
    default_order = len(functional.values) - 1 if args.kind is not None else None
    return {
        "functional": functional,
        "family": _family_document(args, default_order=default_order),
        "n": args.n,
    }


def _parse_point(text: str) -> Any:
    parts = text.split(",")
    if len(parts) == 1:
        return float(parts[0])
    if len(parts) == 2:
        return (float(parts[0]), float(parts[1]))
    raise argparse.ArgumentTypeError(f"'{text}' is neither 're' nor 're,im'")


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _dump(result: Any) -> str:
    if isinstance(result, list):
        payload = [item.model_dump(mode="json", by_alias=True) for item in result]
    else:
        payload = result.model_dump(mode="json", by_alias=True, exclude_none=True)
    return _encode(payload) + "\n"


def _encode(value: Any, depth: int = 0) -> str:
    """
    JSON text with two-space indentation and every finite float written
    with 17 significant digits.

    Args:
        value: JSON-compatible payload (dicts, lists, scalars)
        depth: current nesting level

    Returns:
        str: the encoded document
    """
    if isinstance(value, float):
        return _format_float(value)
    if not isinstance(value, (dict, list)) or not value:
        return json.dumps(value)
    inner = "\n" + "  " * (depth + 1)
    if isinstance(value, dict):
        items = [f"{json.dumps(key)}: {_encode(item, depth + 1)}" for key, item in value.items()]
        brackets = "{}"
    else:
        items = [_encode(item, depth + 1) for item in value]
        brackets = "[]"
    return brackets[0] + inner + ("," + inner).join(items) + "\n" + "  " * depth + brackets[1]


def _format_float(value: float) -> str:
    if not math.isfinite(value):
        return json.dumps(value)
    text = format(value, ".17g")
    # integral floats keep a trailing ".0"
    if not any(c in text for c in ".e"):
        text += ".0"
    return text


def _write(text: str, path: Optional[str]) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def _report(error: Exception) -> None:
    sys.stderr.write(f"error: {type(error).__name__}: {error}\n")


def _serve(args: argparse.Namespace) -> int:
    import uvicorn

    settings = get_settings()
    uvicorn.run(
        "moments.main:app",
        host=args.host or settings.host,
        port=args.port or settings.port,
        log_level=settings.log_level.lower(),
    )
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
