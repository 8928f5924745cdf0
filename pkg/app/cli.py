"""
Command-line front end.

Exit codes: 0 success, 1 failed verification (or an infeasible target),
2 bad parameters or an unreadable document, 3 an internal construction failure.
"""

import argparse
import json
import logging
import sys
from typing import Optional, Sequence, Tuple

from app import __version__, config
from app.exceptions import ConstructionError, DocumentError, InvalidParameterError
from app.models.graph_model import PathDecomposition
from app.schemas.decomposition_schema import FeasibleResponse
from app.services.census_service import CensusService
from app.services.constructions import construct, construction_name
from app.services.enumeration import enumerate_decompositions
from app.services.graph_core import verify_decomposition
from app.services.removal import (
    path_ends_feasible,
    remove_star,
    remove_tadpole,
    trim_path_ends,
    trim_record,
)
from app.services.serialization import from_json, to_document, to_dot, to_json

logger = logging.getLogger(__name__)

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3


def edge_arg(text: str) -> Tuple[int, int]:
    """
    Parse "a-b" or "a,b" into a vertex pair.
    """
    for sep in ("-", ","):
        if sep in text:
            left, _, right = text.partition(sep)
            try:
                return int(left), int(right)
            except ValueError:
                break
    raise argparse.ArgumentTypeError(f"expected an edge like 3-7, got {text!r}")


def _read(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    with open(source, encoding="utf-8") as handle:
        return handle.read()


def _emit(d: PathDecomposition, args: argparse.Namespace, **metadata) -> None:
    if args.format == "dot":
        print(to_dot(d, split=args.split))
    else:
        print(to_json(d, **metadata))


def cmd_construct(args: argparse.Namespace) -> int:
    d = construct(args.n)
    _emit(d, args, construction=construction_name(args.n))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    report = verify_decomposition(from_json(_read(args.document)))
    if args.format == "json":
        print(report.model_dump_json(indent=2))
    else:
        print(report.summary())
    return EXIT_OK if report.passed else EXIT_FAILED


def cmd_remove(args: argparse.Namespace) -> int:
    if args.kind == "star":
        result = remove_star(args.n, args.m)
    else:
        result = remove_tadpole(args.n, args.m)
    _emit(result.decomposition, args, record=result.record)
    return EXIT_OK


def cmd_trim(args: argparse.Namespace) -> int:
    _, d = trim_path_ends(from_json(_read(args.document)), args.remove)
    _emit(d, args, record=trim_record(args.remove))
    return EXIT_OK


def cmd_feasible(args: argparse.Namespace) -> int:
    witness = path_ends_feasible(args.n, args.edge)
    if witness is None:
        logger.warning("no decomposition of K_%d lets the target be trimmed", args.n)
        if args.format == "json":
            print(FeasibleResponse(feasible=False).model_dump_json(indent=2))
        return EXIT_FAILED
    if args.format == "dot":
        print(to_dot(witness.decomposition, split=args.split))
    else:
        response = FeasibleResponse(
            feasible=True,
            witness=[tuple(e) for e in witness.removals],
            document=to_document(witness.decomposition),
        )
        print(response.model_dump_json(indent=2))
    return EXIT_OK


def cmd_enumerate(args: argparse.Namespace) -> int:
    classes = enumerate_decompositions(args.n, budget=args.budget)
    if args.csv:
        CensusService.census_frame(classes).to_csv(args.csv, index=False)
        logger.info("census table written to %s", args.csv)
    if args.count_only:
        print(len(classes))
        return EXIT_OK
    if args.format == "dot":
        print("\n".join(to_dot(c.representative, split=args.split) for c in classes))
        return EXIT_OK
    listing = {
        "n": args.n,
        "class_count": len(classes),
        "labeled_total": sum(c.labeled_count for c in classes),
        "classes": [
            dict(
                to_document(c.representative).model_dump(),
                metadata={"automorphisms": c.automorphisms, "labeled_count": c.labeled_count},
            )
            for c in classes
        ],
    }
    print(json.dumps(listing, indent=2))
    return EXIT_OK


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    uvicorn.run("app.main:app", host=args.host, port=args.port, log_level=config.log_level().lower())
    return EXIT_OK


def _add_format(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=["json", "dot"], default="json")
    parser.add_argument("--split", action="store_true", help="one DOT graph per path")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gallai",
        description="Path decompositions of K_n and of K_n minus a star or tadpole.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="repeat for more detail")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="decompose K_n into floor((n+1)/2) paths")
    p.add_argument("--n", type=int, required=True)
    _add_format(p)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="check a decomposition document")
    p.add_argument("document", nargs="?", default="-", help="file path, or - for stdin")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("remove", help="decompose K_n minus a star or a tadpole")
    p.add_argument("--kind", choices=["star", "tadpole"], required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    _add_format(p)
    p.set_defaults(func=cmd_remove)

    p = sub.add_parser("trim", help="remove edges from path ends, in order")
    p.add_argument("document", nargs="?", default="-", help="file path, or - for stdin")
    p.add_argument("--remove", type=edge_arg, action="append", default=[], metavar="A-B")
    _add_format(p)
    p.set_defaults(func=cmd_trim)

    p = sub.add_parser("feasible", help="search for a decomposition whose path ends hold the target")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--edge", type=edge_arg, action="append", default=[], metavar="A-B")
    _add_format(p)
    p.set_defaults(func=cmd_feasible)

    p = sub.add_parser("enumerate", help="isomorphism classes of minimum decompositions of K_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--count-only", action="store_true")
    p.add_argument(
        "--budget",
        action="store_true",
        help=f"allow n up to GALLAI_ENUM_BUDGET_CAP (default {config.DEFAULT_ENUM_BUDGET_CAP})",
    )
    p.add_argument("--csv", metavar="PATH", help="also write the census table as CSV")
    _add_format(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("serve", help="run the HTTP API")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(func=cmd_serve)
    return parser


def _configure_logging(verbose: int) -> None:
    if verbose:
        level = logging.INFO if verbose == 1 else logging.DEBUG
    else:
        level = getattr(logging, config.log_level(), logging.WARNING)
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    _configure_logging(args.verbose)
    try:
        return args.func(args)
    except (InvalidParameterError, DocumentError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ConstructionError as exc:
        logger.error("internal construction failure: %s", exc)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
