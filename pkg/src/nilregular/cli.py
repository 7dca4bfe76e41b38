"""Command-line front end: normal forms, basis enumeration, and the
verification harnesses, with text or machine-readable JSON output.

Exit codes distinguish three outcomes so the tool is CI-friendly:
0 means pass (or an exhaustive search that found no witness), 1 means a
check failed and the report carries a witness, 2 means a usage error
(bad flags, unparseable input, unknown check).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .analysis import (
    check_primeness_bounded, check_regularity_identities,
    check_separativity_identities, check_tau_forms_families,
    check_tau_uniqueness_families, check_types_lemma,
    search_unit_regular_witness)
from .elements import Algebra, parse_element
from .fields import field_from_name
from .matrixrep import (
    check_determinant_obstruction, n2_variant_check, verify_phi_faithful)
from .reports import VerificationReport
from .rewriting import WordSyntaxError, check_confluence, system_from_label

CHECK_NAMES = (
    "types-lemma", "tau-forms", "tau-unique", "unit-regular-search",
    "regularity", "separativity", "primeness", "confluence",
    "phi-faithful", "determinant", "n2-variant",
)


@dataclass
class RunConfig:
    """Everything a subcommand needs; the seed fully determines any
    randomized behavior."""

    presentation: str = "S"
    n: int = 3
    field_name: str = "rational"
    max_len: int = 6
    max_word_len: int = 3
    seed: int = 0
    output: str = "text"
    workers: int = 1

    @property
    def field(self):
        return field_from_name(self.field_name)

    def algebra(self) -> Algebra:
        return Algebra(system_from_label(self.presentation, self.n), self.field)


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def _nonnegative_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be a nonnegative integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--presentation", choices=("S", "R"), default="S",
                        help="which presentation to work in (default S)")
    common.add_argument("--n", type=_positive_int, default=3,
                        help="nilpotency degree of the main presentation "
                             "(default 3; R uses degree n-1)")
    common.add_argument("--field", choices=("gf2", "gf3", "rational"),
                        default="rational", dest="field_name",
                        help="coefficient field (default rational)")
    common.add_argument("--max-len", type=_nonnegative_int, default=6,
                        help="word-length bound for bounded checks (default 6)")
    common.add_argument("--max-word-len", type=_nonnegative_int, default=3,
                        help="word-length bound for search pools (default 3)")
    common.add_argument("--seed", type=int, default=0,
                        help="seed for randomized checks (default 0)")
    common.add_argument("--workers", type=_positive_int, default=1,
                        help="worker processes for the search (default 1)")
    common.add_argument("--json", action="store_true",
                        help="emit a JSON report instead of text")

    parser = argparse.ArgumentParser(
        prog="nilregular",
        description="Exact computations in a nilpotent-generator algebra: "
                    "normal forms, basis enumeration, verification harnesses.")
    subparsers = parser.add_subparsers(dest="command", required=True)

    reduce_parser = subparsers.add_parser(
        "reduce", parents=[common],
        help="print the normal form of an element expression")
    reduce_parser.add_argument("expression",
                               help="element literal, e.g. 'q^2 x q x q^3 x^2 q' "
                                    "or '1 - x q + 2 q^2 x'")

    basis_parser = subparsers.add_parser(
        "basis", parents=[common],
        help="list the basis words up to a length bound")
    basis_parser.add_argument("max_len_arg", type=_nonnegative_int,
                              metavar="max_len",
                              help="maximum word length to enumerate")

    verify_parser = subparsers.add_parser(
        "verify", parents=[common],
        help="run one verification harness and report pass/fail")
    verify_parser.add_argument("check", choices=CHECK_NAMES,
                               help="which check to run")
    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        presentation=args.presentation,
        n=args.n,
        field_name=args.field_name,
        max_len=args.max_len,
        max_word_len=args.max_word_len,
        seed=args.seed,
        output="json" if args.json else "text",
        workers=args.workers,
    )


def cmd_reduce(expression: str, cfg: RunConfig, out=None) -> int:
    """Parse an element literal and print its normal form in canonical
    term order."""
    out = out if out is not None else sys.stdout
    try:
        element = parse_element(expression, cfg.algebra())
    except WordSyntaxError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if cfg.output == "json":
        payload = {"input": expression, "normal_form": str(element),
                   "terms": element.to_json_dict()}
        print(json.dumps(payload, indent=2, sort_keys=True), file=out)
    else:
        print(element, file=out)
    return 0


def cmd_basis(max_len: int, cfg: RunConfig, out=None) -> int:
    """List the basis words of length at most max_len, sorted, with a
    count line."""
    out = out if out is not None else sys.stdout
    algebra = cfg.algebra()
    words = algebra.basis_words(max_len)
    if cfg.output == "json":
        payload = {"presentation": cfg.presentation, "n": cfg.n,
                   "max_len": max_len, "count": len(words),
                   "words": [str(word) for word in words]}
        print(json.dumps(payload, indent=2, sort_keys=True), file=out)
    else:
        for word in words:
            print(word, file=out)
        print(f"{len(words)} words of length <= {max_len}", file=out)
    return 0


def run_check(name: str, cfg: RunConfig) -> VerificationReport:
    """Dispatch one named check with the config's bounds, field, and seed."""
    field = cfg.field
    if name == "types-lemma":
        return check_types_lemma(max_len=cfg.max_len)
    if name == "tau-forms":
        return check_tau_forms_families(random_len=cfg.max_len, seed=cfg.seed)
    if name == "tau-unique":
        return check_tau_uniqueness_families(random_len=cfg.max_len,
                                             seed=cfg.seed)
    if name == "unit-regular-search":
        return search_unit_regular_witness(max_word_len=cfg.max_word_len,
                                           field=field, n=cfg.n,
                                           workers=cfg.workers)
    if name == "regularity":
        return check_regularity_identities(n=cfg.n, field=field)
    if name == "separativity":
        return check_separativity_identities(field=field)
    if name == "primeness":
        return check_primeness_bounded(max_len=cfg.max_len, n=cfg.n,
                                       field=field, seed=cfg.seed)
    if name == "confluence":
        system = system_from_label(cfg.presentation, cfg.n)
        return check_confluence(system, max_len=cfg.max_len, seed=cfg.seed)
    if name == "phi-faithful":
        return verify_phi_faithful(max_len=cfg.max_len, n=cfg.n)
    if name == "determinant":
        return check_determinant_obstruction(seed=cfg.seed)
    if name == "n2-variant":
        return n2_variant_check(field=field)
    raise ValueError(f"unknown check: {name}")


def cmd_verify(check: str, cfg: RunConfig, out=None) -> int:
    out = out if out is not None else sys.stdout
    report = run_check(check, cfg)
    if cfg.output == "json":
        print(report.to_json(), file=out)
    else:
        print(report.summary(), file=out)
    return 0 if report.passed else 1


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors; normalize other exits too
        return int(exc.code or 0)
    cfg = _config_from_args(args)
    if args.command == "reduce":
        return cmd_reduce(args.expression, cfg)
    if args.command == "basis":
        return cmd_basis(args.max_len_arg, cfg)
    return cmd_verify(args.check, cfg)


if __name__ == "__main__":
    sys.exit(main())
