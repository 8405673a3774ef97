"""Command-line console.

Results go to stdout, logs to stderr. The exit status is 0 only when the
requested computation succeeded and every check it ran passed.
"""
import argparse
import json
import sys
from pathlib import Path
from typing import Any, List, Optional, Sequence, Tuple

from loguru import logger
from pydantic import TypeAdapter, ValidationError

from app import __version__
from app.cvol.commands import DevelopCuspsCommand, SolveShapesCommand
from app.cvol.domain.pipeline import bases_for
from app.cvol.handlers import register_handlers
from app.cvol.queries import ComplexVolumeQuery, FiveTermQuery, InvariantSuiteQuery, ValidateTriangulationQuery
from app.shared.context import correlation_scope
from app.shared.cqrs.mediator import mediator
from app.shared.errors import CvolError, InconsistentInputError, MissingDataError
from app.shared.logging import configure_logging
from app.triangulation.repository import TriangulationRepository

_SHAPES = TypeAdapter(List[Tuple[float, float]])


def _complex_arg(text: str) -> complex:
    try:
        real, imag = (float(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected RE,IM, got {text!r}")
    return complex(real, imag)


def _base_arg(text: str) -> Tuple[int, int, int]:
    try:
        tet, vertex, side = (int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected T,V,S, got {text!r}")
    return tet, vertex, side


def read_shapes(path: str) -> List[complex]:
    """Shapes file: a JSON list of [re, im] pairs, or an object with a ``shapes`` list."""
    file = Path(path)
    if not file.is_file():
        raise MissingDataError(f"Shapes file {path!r} not found")
    try:
        document = json.loads(file.read_text(encoding="utf-8"))
        if isinstance(document, dict):
            document = document.get("shapes")
        pairs = _SHAPES.validate_python(document)
    except (json.JSONDecodeError, ValidationError) as exc:
        raise InconsistentInputError(f"Shapes file {path!r} is not a list of [re, im] pairs: {exc}")
    return [complex(re, im) for re, im in pairs]


def _emit(payload: Any) -> None:
    print(json.dumps(payload, indent=2))


def _pair(z: complex) -> List[float]:
    return [z.real, z.imag]


def cmd_validate(args: argparse.Namespace) -> int:
    triangulation = TriangulationRepository().get(args.file)
    _emit(mediator.query(ValidateTriangulationQuery(triangulation=triangulation)))
    return 0


def cmd_solve(args: argparse.Namespace) -> int:
    triangulation = TriangulationRepository().get(args.file)
    assignment = mediator.send(SolveShapesCommand(
        triangulation=triangulation,
        seed=read_shapes(args.seed_file) if args.seed_file else None,
        use_field=args.field,
        root=args.root
    ))
    _emit({
        "shapes": [_pair(z) for z in assignment.shapes],
        "residuals": list(assignment.residuals),
        "iterations": assignment.iterations,
        "source": assignment.source,
    })
    return 0


def cmd_develop(args: argparse.Namespace) -> int:
    triangulation = TriangulationRepository().get(args.file)
    decoration = mediator.send(DevelopCuspsCommand(
        triangulation=triangulation,
        shapes=read_shapes(args.shapes_file) if args.shapes_file else None,
        bases=bases_for(triangulation, args.base) if args.base else None,
        unit_edge=args.unit_edge
    ))
    if args.dump_cusp:
        Path(args.dump_cusp).write_text(json.dumps(decoration.dump(), indent=2), encoding="utf-8")
        logger.info(f"Wrote developed cusp triangles to {args.dump_cusp}")
    _emit({
        "bases": {str(cusp): list(base) for cusp, base in decoration.bases.items()},
        "triangles": len(decoration.placement_order),
    })
    return 0


def cmd_cvol(args: argparse.Namespace) -> int:
    triangulation = TriangulationRepository().get(args.file)
    computation = mediator.query(ComplexVolumeQuery(
        triangulation=triangulation,
        shapes=read_shapes(args.shapes_file) if args.shapes_file else None,
        use_field=args.field,
        root=args.root,
        bases=bases_for(triangulation, args.base) if args.base else None,
        unit_edge=args.unit_edge,
        conjugate=args.conjugate,
        reverse_orientation=args.reverse
    ))
    if args.json:
        _emit(computation.to_dict())
        return 0
    volume = computation.volume
    print(f"vol            {volume.vol:.15f}")
    print(f"cs mod pi^2    {volume.cs:.15f}")
    print(f"cs/(2 pi^2)    {volume.cs_normalized:.15f}  (mod 1/2)")
    print("flattenings    " + " + ".join(
        f"{'-' if sign < 0 else ''}{flattening}"
        for sign, flattening in zip(computation.triangulation.orientation_signs, computation.flattenings)
    ))
    return 0


def cmd_check(args: argparse.Namespace) -> int:
    triangulation = TriangulationRepository().get(args.file)
    report = mediator.query(InvariantSuiteQuery(
        triangulation=triangulation,
        shapes=read_shapes(args.shapes_file) if args.shapes_file else None,
        use_field=args.field,
        five_term_samples=args.samples,
        rng_seed=args.rng_seed
    ))
    if args.json:
        _emit(report.to_dict())
    else:
        for check in report.checks:
            residual = "" if check.residual is None else f"{check.residual:.3e}"
            print(f"{check.status.value:<8} {check.name:<24} {residual:<10} {check.detail or ''}")
    return 0 if report.passed else 1


def cmd_fiveterm(args: argparse.Namespace) -> int:
    report = mediator.query(FiveTermQuery(samples=args.samples, rng_seed=args.rng_seed))
    _emit(report.to_dict())
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cvol", description="Complex volumes from ordered ideal triangulations")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--log-level", default=None, help="loguru level for stderr (default from CVOL_LOG_LEVEL)")
    commands = parser.add_subparsers(dest="command", required=True)

    validate = commands.add_parser("validate", help="parse and check structure, ordering and ends")
    validate.add_argument("file", help="triangulation JSON file or bundled fixture name")
    validate.set_defaults(handler=cmd_validate)

    solve = commands.add_parser("solve", help="solve the gluing equations")
    solve.add_argument("file")
    source = solve.add_mutually_exclusive_group()
    source.add_argument("--seed-file", help="JSON list of [re, im] starting shapes")
    source.add_argument("--field", action="store_true", help="evaluate the file's shape_field")
    solve.add_argument("--root", type=_complex_arg, help="root approximation RE,IM for --field")
    solve.set_defaults(handler=cmd_solve)

    develop = commands.add_parser("develop", help="develop the cusps")
    develop.add_argument("file")
    develop.add_argument("--shapes-file", help="JSON list of [re, im] shapes")
    develop.add_argument("--dump-cusp", metavar="OUT", help="write placed triangles as JSON")
    develop.add_argument("--base", type=_base_arg, help="base side T,V,S placed on [0, 1]")
    develop.add_argument("--unit-edge", type=int, help="edge class normalised to c = 1")
    develop.set_defaults(handler=cmd_develop)

    cvol = commands.add_parser("cvol", help="compute the complex volume")
    cvol.add_argument("file")
    source = cvol.add_mutually_exclusive_group()
    source.add_argument("--field", action="store_true", help="shapes from the file's shape_field")
    source.add_argument("--shapes-file", help="JSON list of [re, im] shapes")
    cvol.add_argument("--root", type=_complex_arg, help="root approximation RE,IM for --field")
    cvol.add_argument("--base", type=_base_arg, help="base side T,V,S placed on [0, 1]")
    cvol.add_argument("--unit-edge", type=int, help="edge class normalised to c = 1")
    cvol.add_argument("--conjugate", action="store_true", help="use the complex-conjugate representation")
    cvol.add_argument("--reverse", action="store_true", help="reverse the orientation")
    cvol.add_argument("--json", action="store_true", help="machine-readable output")
    cvol.set_defaults(handler=cmd_cvol)

    check = commands.add_parser("check", help="run the invariant suite")
    check.add_argument("file")
    source = check.add_mutually_exclusive_group()
    source.add_argument("--field", action="store_true")
    source.add_argument("--shapes-file")
    check.add_argument("--samples", type=int, default=50, help="five-term samples")
    check.add_argument("--rng-seed", type=int, default=0)
    check.add_argument("--json", action="store_true")
    check.set_defaults(handler=cmd_check)

    fiveterm = commands.add_parser("fiveterm", help="five-term property test on random configurations")
    fiveterm.add_argument("--samples", type=int, default=500)
    fiveterm.add_argument("--rng-seed", type=int, default=0)
    fiveterm.set_defaults(handler=cmd_fiveterm)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    configure_logging(level=args.log_level)
    register_handlers(mediator)
    try:
        with correlation_scope():
            return args.handler(args)
    except CvolError as exc:
        logger.error(f"{args.command} failed: {exc}", error_code=exc.error_code)
        print(f"error {exc.error_code}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
