"""
Command line for KR crystals.

    krcrystal build -t D,4,1 -r 2 -s 2
    krcrystal op -t D,4,1 -r 2 -s 2 --e 0 --elem '[[3],[1]]'
    krcrystal minimal -t D,8,1 -r 3 -s 9 --weight 1,2,1,1,0,1,0,0,0

Results go to stdout as compact JSON (one document, or one per line for
listings); logs and error envelopes go to stderr.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Sequence, TextIO

from krcrystal.config import settings
from krcrystal.errors import InvalidDocument, KRError, exit_code_for, format_error
from krcrystal.logging_config import configure_logging
from krcrystal.services import operations
from krcrystal.services.cartan import CartanType
from krcrystal.services.crystal_cache import crystal_cache
from krcrystal.services.kr import KRCrystal
from krcrystal.services.letters import Direction
from krcrystal.utils.codec import dumps, parse_diagram_rows, parse_rows, parse_weight

logger = logging.getLogger("krcrystal.cli")


def _common() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-t", "--type", dest="cartan", required=True, help='affine type, e.g. "D,4,1" or "A,5,2"')
    common.add_argument("-r", type=int, required=True, help="KR index r (a non-spin node)")
    common.add_argument("-s", type=int, required=True, help="KR level s")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="krcrystal", description="Kirillov-Reshetikhin crystals B^{r,s}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", parents=[common], help="build the crystal and print its classical decomposition")
    p.add_argument("--dot", metavar="FILE", help="also write the crystal graph as dot")

    p = sub.add_parser("op", parents=[common], help="apply e_i or f_i")
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--e", type=int, metavar="I", help="raising operator index")
    which.add_argument("--f", type=int, metavar="I", help="lowering operator index")
    p.add_argument("--elem", required=True, help="element rows as JSON")

    for name, text in (
        ("sigma", "the involution sigma"),
        ("eps-phi", "epsilon and phi vectors"),
        ("pair-of", "the diagram pair (P, p) of an X_{n-2} highest element"),
    ):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("--elem", required=True, help="element rows as JSON")

    for name, text in (
        ("phi", "the X_{n-1} highest element of a +/- diagram"),
        ("phi-string", "the lowering string taking the highest element to phi(P)"),
        ("s-involution", "the +/- diagram involution"),
    ):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("--diagram", required=True, help="+/- diagram rows as JSON")

    for name, text in (("psi", "the X_{n-2} highest element of a diagram pair"), ("e1-pair", "e_1 on a diagram pair")):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("--P", dest="big", required=True, help="outer diagram rows as JSON")
        p.add_argument("--p", dest="small", required=True, help="inner diagram rows as JSON")

    p = sub.add_parser("minimal", parents=[common], help="minimal elements")
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--weight", help="Lambda-coordinates l_0,...,l_n of level s")
    which.add_argument("--list", action="store_true", help="list every element of minimal level")

    p = sub.add_parser("diagram", parents=[common], help="the +/- diagram attached to a level-s weight")
    p.add_argument("--weight", required=True, help="Lambda-coordinates l_0,...,l_n of level s")

    p = sub.add_parser("verify", parents=[common], help="exhaustive checks")
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--perfect", action="store_const", dest="kind", const="perfect")
    which.add_argument("--properties", action="store_const", dest="kind", const="properties")

    p = sub.add_parser("graph", parents=[common], help="export the crystal graph")
    p.add_argument("--dot", metavar="FILE", required=True, help='output file, "-" for stdout')
    p.add_argument("--classical", action="store_true", help="omit the 0-arrows")

    return parser


def _write_dot(text: str, target: str, out: TextIO) -> None:
    if target == "-":
        out.write(text)
        return
    try:
        Path(target).write_text(text, encoding="utf-8")
    except OSError as exc:
        raise InvalidDocument(f"cannot write {target}: {exc.strerror}", detail=target) from exc
    logger.info("dot_written", extra={"extra": {"path": target, "bytes": len(text)}})


def run(args: argparse.Namespace, out: TextIO) -> int:
    cartan = CartanType.parse(args.cartan)
    crystal: KRCrystal = crystal_cache.get(cartan, args.r, args.s)
    cmd = args.command

    def emit(obj: object) -> None:
        out.write(dumps(obj) + "\n")

    if cmd == "build":
        emit(operations.summary(crystal).model_dump())
        if args.dot:
            _write_dot(operations.graph_dot(crystal), args.dot, out)
    elif cmd == "op":
        direction, i = (Direction.RAISE, args.e) if args.e is not None else (Direction.LOWER, args.f)
        emit(operations.step(crystal, parse_rows(args.elem), i, direction))
    elif cmd == "sigma":
        emit(operations.sigma(crystal, parse_rows(args.elem)))
    elif cmd == "eps-phi":
        emit(operations.eps_phi(crystal, parse_rows(args.elem)).model_dump())
    elif cmd == "pair-of":
        emit(operations.element_pair(crystal, parse_rows(args.elem)).model_dump())
    elif cmd == "phi":
        emit(operations.diagram_phi(crystal, parse_diagram_rows(args.diagram)))
    elif cmd == "phi-string":
        emit(operations.diagram_string(crystal, parse_diagram_rows(args.diagram)))
    elif cmd == "s-involution":
        emit(operations.diagram_s_involution(crystal, parse_diagram_rows(args.diagram)))
    elif cmd == "psi":
        emit(operations.pair_psi(crystal, parse_diagram_rows(args.big), parse_diagram_rows(args.small)))
    elif cmd == "e1-pair":
        raised = operations.pair_e1(crystal, parse_diagram_rows(args.big), parse_diagram_rows(args.small))
        emit(None if raised is None else raised.model_dump())
    elif cmd == "minimal":
        if args.list:
            for entry in operations.minimal_list(crystal):
                emit(entry.model_dump())
        else:
            emit(operations.minimal(crystal, parse_weight(args.weight, cartan).coords))
    elif cmd == "diagram":
        emit(operations.weight_diagram(crystal, parse_weight(args.weight, cartan).coords))
    elif cmd == "verify":
        report = operations.verify(crystal, args.kind)
        emit(report.model_dump())
        return 0 if report.passed else 1
    elif cmd == "graph":
        _write_dot(operations.graph_dot(crystal, affine=not args.classical), args.dot, out)
    return 0


def main(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    configure_logging(settings.LOG_LEVEL, stream=err)
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        # argparse already printed usage; --help exits 0, bad arguments exit 1
        return 0 if exc.code in (0, None) else 1
    try:
        return run(args, out)
    except KRError as exc:
        logger.warning("command_failed", extra={"extra": {"command": args.command, "error": exc.title}})
        err.write(json.dumps(format_error(exc), ensure_ascii=False) + "\n")
        return exit_code_for(exc)
    except Exception as exc:
        logger.error("command_crashed", extra={"extra": {"command": args.command}}, exc_info=True)
        err.write(json.dumps(format_error(exc), ensure_ascii=False) + "\n")
        return exit_code_for(exc)
