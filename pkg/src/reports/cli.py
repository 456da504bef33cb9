"""
Командная строка: python -m reports.cli <command> … (src в PYTHONPATH)

    analyze     SPEC           полный конвейер для одной группы
    verify      FAMILY         замкнутые формулы против перебора, по простым p
    group-info  SPEC           порядки элементов и подгрупп
    scan                       поиск групп, нарушающих выводы о целочисленности/энергиях

Коды выхода: 0 успех, 1 использование, 2 валидация, 3 расхождение, 4 численная ошибка.
"""

from __future__ import annotations
import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional, Sequence

from tqdm import tqdm

from errors import EXIT_USAGE, SgbError
from groups.cayley_file import dump_cayley_table
from groups.spec import GroupSpec, load_group, parse_group_spec
from spectra.numeric import DEFAULT_TOL
from spectra.star import ALL_KINDS, MatrixKind
from theory.families import Family, FamilyId
from theory.verify import DEFAULT_MAX_ORDER, verify_family
from .document import FORMATS, VerifyOutcome, analyze_group, group_info, scan_groups, verify_document

log = logging.getLogger("cli")

SCAN_FAMILIES = ("cyclic", "dihedral", "dicyclic")


class _Parser(argparse.ArgumentParser):
    """argparse с кодом 1 для ошибок использования (вместо 2)."""

    def error(self, message: str) -> None:
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


# ----------------------------- argument types ------------------------------
def _group_spec(token: str) -> GroupSpec:
    try:
        return parse_group_spec(token)
    except SgbError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _kinds(text: str) -> List[MatrixKind]:
    try:
        kinds = {MatrixKind.from_code(t) for t in text.split(",") if t.strip()}
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    if not kinds:
        raise argparse.ArgumentTypeError("empty matrix list")
    return [k for k in ALL_KINDS if k in kinds]


def _primes(text: str) -> List[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _scan_families(text: str) -> List[str]:
    names = [t.strip().lower() for t in text.split(",") if t.strip()]
    bad = [n for n in names if n not in SCAN_FAMILIES]
    if bad or not names:
        raise argparse.ArgumentTypeError(f"families must be among {', '.join(SCAN_FAMILIES)}")
    return names


# ----------------------------- commands ------------------------------------
def cmd_analyze(args: argparse.Namespace) -> int:
    g = load_group(args.spec)
    doc = analyze_group(
        g,
        spec=args.spec,
        kinds=args.matrix,
        tol=args.tol,
        exact_only=args.exact_only,
        max_order=args.max_order,
        progress=args.progress,
    )
    doc.write(args.format, args.out)
    return doc.exit_code


def cmd_verify(args: argparse.Namespace) -> int:
    outcomes: List[VerifyOutcome] = []
    for p in tqdm(args.primes, desc=args.family, disable=not args.progress):
        try:
            f = FamilyId(Family.parse(args.family), p)
            report = verify_family(
                f,
                max_order=args.max_order,
                tol=args.tol,
                exact_only=args.exact_only,
                progress=args.progress,
            )
            outcomes.append(VerifyOutcome(args.family, p, report=report))
        except SgbError as exc:
            log.error(f"{args.family} p={p}: {exc}")
            outcomes.append(VerifyOutcome(args.family, p, error=str(exc), exit_code=exc.exit_code))

    doc = verify_document(
        args.family, outcomes, tol=args.tol, exact_only=args.exact_only, max_order=args.max_order
    )
    doc.write(args.format, args.out)
    return doc.exit_code


def cmd_group_info(args: argparse.Namespace) -> int:
    g = load_group(args.spec)
    if args.export:
        dump_cayley_table(g, args.export)
    doc = group_info(g, spec=args.spec)
    doc.write(args.format, args.out)
    return doc.exit_code


def cmd_scan(args: argparse.Namespace) -> int:
    if args.start < 1:
        raise argparse.ArgumentTypeError(f"--from must be at least 1, got {args.start}")
    if args.start > args.stop:
        raise argparse.ArgumentTypeError("--from must not exceed --to")
    specs = [GroupSpec(fam, n) for fam in args.families for n in range(args.start, args.stop + 1)]
    doc = scan_groups(specs, max_order=args.max_order, progress=args.progress)
    doc.write(args.format, args.out)
    return doc.exit_code


# ----------------------------- parser --------------------------------------
def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="sgb", description="Spectra and energies of subgroup-generating bipartite graphs")
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    verbosity.add_argument("-q", "--quiet", action="store_true", help="warnings and errors only")
    sub = parser.add_subparsers(dest="command", required=True)

    def output_flags(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=FORMATS, default="json", help="output format (default json)")
        p.add_argument("--out", type=Path, default=None, help="output file (default stdout)")
        p.add_argument("--progress", action="store_true", help="show tqdm progress bars")

    def pipeline_flags(p: argparse.ArgumentParser) -> None:
        p.add_argument("--tol", type=float, default=DEFAULT_TOL,
                       help=f"numeric vs exact tolerance (default {DEFAULT_TOL:g})")
        p.add_argument("--max-order", type=int, default=DEFAULT_MAX_ORDER,
                       help=f"largest group order to brute-force (default {DEFAULT_MAX_ORDER})")
        p.add_argument("--exact-only", action="store_true", help="skip the numeric eigensolver")

    p = sub.add_parser("analyze", help="full pipeline on one group")
    p.add_argument("spec", type=_group_spec, help="cyclic:n | dihedral:n | dicyclic:m | cayley:PATH")
    p.add_argument("--matrix", type=_kinds, default=list(ALL_KINDS), help="subset of a,l,q,cn")
    output_flags(p)
    pipeline_flags(p)
    p.set_defaults(handler=cmd_analyze)

    p = sub.add_parser("verify", help="check closed forms of a family against brute force")
    p.add_argument("family", choices=[f.value for f in Family])
    p.add_argument("--primes", type=_primes, required=True, help="comma-separated primes, e.g. 2,3,5")
    output_flags(p)
    pipeline_flags(p)
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("group-info", help="element and subgroup orders")
    p.add_argument("spec", type=_group_spec)
    p.add_argument("--export", type=Path, default=None, help="also write the group as a Cayley file")
    output_flags(p)
    p.set_defaults(handler=cmd_group_info)

    p = sub.add_parser("scan", help="look for groups violating the integrality/energy conclusions")
    p.add_argument("--families", type=_scan_families, default=list(SCAN_FAMILIES),
                   help="comma-separated subset of cyclic,dihedral,dicyclic")
    p.add_argument("--from", dest="start", type=int, default=1, help="first parameter (default 1)")
    p.add_argument("--to", dest="stop", type=int, default=12, help="last parameter (default 12)")
    p.add_argument("--max-order", type=int, default=DEFAULT_MAX_ORDER)
    output_flags(p)
    p.set_defaults(handler=cmd_scan)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    level = logging.DEBUG if args.verbose else logging.WARNING if args.quiet else logging.INFO
    logging.basicConfig(
        level=level,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        stream=sys.stderr,
        force=True,
    )
    try:
        return args.handler(args)
    except argparse.ArgumentTypeError as exc:
        parser.error(str(exc))
    except SgbError as exc:
        log.error(str(exc))
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
