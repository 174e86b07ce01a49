"""Command line interface.

Subcommands: sigma, inertia, checkpd, classify3, charpoly.  Matrices
come from files in the text format documented in `matrices`; block
partitions are comma lists like ``2,1,2`` and default to all blocks of
size one.  All numeric output is exact rational text.

Exit codes: 0 success (and "is positive definite" for checkpd);
1 unreadable input (file, scalar or Hermitian violation); 2 bad block
or system spec, including inadmissible partitions; 3 internal invariant
breach (a bug, the engine and its oracle disagreed); 4 the queried
property does not hold.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .criteria3 import (
    ClassReport,
    System3,
    Verdict,
    class_count,
    classify_all,
    classify_system,
)
from .errors import (
    InadmissiblePartitionError,
    InternalCheckError,
    MatrixParseError,
    MinorSumError,
    NotHermitianError,
    ScalarParseError,
    SizeLimitError,
    ZeroInteriorSigmaError,
)
from .inertia import (
    Inertia,
    char_poly_from_delta,
    classify_definiteness,
    inertia_from_sigma,
    jacobi_form,
    rank_from_sigma,
)
from .matrices import BlockPartition, HermitianMatrix, load_matrix
from .minors import delta_sequence, sigma_direct
from .oracle import faddeev_char_poly, lagrange_inertia
from .scalars import format_rational

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_SPEC = 2
EXIT_INTERNAL = 3
EXIT_PROPERTY = 4


class _SpecError(Exception):
    """Bad partition or system spec on the command line."""


def _load(path: str) -> HermitianMatrix:
    return load_matrix(path)


def _partition_for(args: argparse.Namespace, matrix: HermitianMatrix) -> BlockPartition:
    if args.blocks is None:
        return BlockPartition.finest(matrix.n)
    try:
        partition = BlockPartition.parse(args.blocks)
    except ValueError as exc:
        raise _SpecError(str(exc)) from exc
    if partition.n != matrix.n:
        raise _SpecError(
            f"blocks {args.blocks} cover {partition.n} rows, matrix has {matrix.n}"
        )
    return partition


def _print_json(payload: object) -> None:
    print(json.dumps(payload, indent=2))


def _matrix_json(matrix: HermitianMatrix) -> list[list[str]]:
    return [[str(entry) for entry in row] for row in matrix.rows]


def _inadmissible_exit(matrix: HermitianMatrix, exc: InadmissiblePartitionError) -> int:
    print(f"error: {exc}", file=sys.stderr)
    print(f"hint: retry with --blocks {matrix.n}", file=sys.stderr)
    return EXIT_SPEC


# ---------------------------------------------------------------------------
# subcommands


def cmd_sigma(args: argparse.Namespace) -> int:
    matrix = _load(args.matrix)
    partition = _partition_for(args, matrix)
    sequence = sigma_direct(matrix, partition)
    if args.json:
        _print_json(
            {
                "n": matrix.n,
                "blocks": list(partition.sizes),
                "sigma": [format_rational(v) for v in sequence.values],
            }
        )
    else:
        for l, value in enumerate(sequence.values, start=1):
            print(f"sigma_{l} = {format_rational(value)}")
    return EXIT_OK


def cmd_inertia(args: argparse.Namespace) -> int:
    matrix = _load(args.matrix)
    partition = _partition_for(args, matrix)
    try:
        inertia = inertia_from_sigma(matrix, partition)
    except InadmissiblePartitionError as exc:
        return _inadmissible_exit(matrix, exc)
    sigma = sigma_direct(matrix, partition)
    delta = delta_sequence(matrix)
    rank = rank_from_sigma(matrix, partition)
    definiteness = classify_definiteness(matrix, partition)
    try:
        jacobi = [format_rational(c) for c in jacobi_form(matrix, partition).coefficients]
        jacobi_note = None
    except ZeroInteriorSigmaError as exc:
        jacobi = None
        jacobi_note = str(exc)
    charpoly = char_poly_from_delta(matrix)
    oracle_result = lagrange_inertia(matrix)
    agreement = (
        oracle_result.inertia == inertia and rank == oracle_result.inertia.rank
    )
    report = {
        "n": matrix.n,
        "blocks": list(partition.sizes),
        "admissible": True,
        "sigma": [format_rational(v) for v in sigma.values],
        "delta": [format_rational(v) for v in delta.values],
        "inertia": inertia.as_dict(),
        "rank": rank,
        "definiteness": {
            "kind": definiteness.kind,
            "zero_from": definiteness.zero_from,
        },
        "jacobi": jacobi,
        "charpoly": {
            "coefficients": [format_rational(c) for c in charpoly.coefficients],
            "text": charpoly.text(),
        },
        "oracle_inertia": oracle_result.inertia.as_dict(),
        "agreement": agreement,
    }
    if args.json:
        _print_json(report)
    else:
        print(f"n: {matrix.n}")
        print(f"blocks: {partition.text()}")
        print("admissible: yes")
        print("sigma: " + " ".join(report["sigma"]))
        print("delta: " + " ".join(report["delta"]))
        print(f"inertia: p={inertia.p} q={inertia.q} z={inertia.z}")
        print(f"rank: {rank}")
        print(f"definiteness: {definiteness.describe()}")
        if jacobi is None:
            print(f"jacobi: unavailable ({jacobi_note})")
        else:
            print("jacobi: " + " ".join(jacobi))
        print(f"charpoly: {charpoly.text()}")
        oracle_inertia = oracle_result.inertia
        print(
            f"oracle: p={oracle_inertia.p} q={oracle_inertia.q} z={oracle_inertia.z}"
        )
        print(f"agreement: {'yes' if agreement else 'no'}")
    if not agreement:
        print(
            "error: minor-sum inertia disagrees with the congruence oracle",
            file=sys.stderr,
        )
        return EXIT_INTERNAL
    return EXIT_OK


def cmd_checkpd(args: argparse.Namespace) -> int:
    matrix = _load(args.matrix)
    partition = _partition_for(args, matrix)
    try:
        classify_definiteness(matrix, partition)
    except InadmissiblePartitionError as exc:
        return _inadmissible_exit(matrix, exc)
    values = sigma_direct(matrix, partition).values
    failing = next((l for l, v in enumerate(values, start=1) if v <= 0), None)
    is_pd = failing is None
    oracle_pd = lagrange_inertia(matrix).inertia == Inertia(matrix.n, 0, 0)
    if is_pd != oracle_pd:
        print(
            "error: positive definiteness verdict disagrees with the "
            "congruence oracle",
            file=sys.stderr,
        )
        return EXIT_INTERNAL
    if args.json:
        _print_json(
            {
                "positive_definite": is_pd,
                "first_failing_index": failing,
                "value": None if is_pd else format_rational(values[failing - 1]),
            }
        )
    else:
        if is_pd:
            print("positive definite")
        else:
            print(
                f"not positive definite: sigma_{failing} = "
                f"{format_rational(values[failing - 1])}"
            )
    return EXIT_OK if is_pd else EXIT_PROPERTY


def _verdict_json(verdict: Verdict) -> dict:
    return {
        "kind": verdict.kind,
        "criterion": verdict.catalog_id,
        "note": verdict.note,
        "witness": None if verdict.witness is None else _matrix_json(verdict.witness),
    }


def _verdict_text(verdict: Verdict) -> str:
    if verdict.kind == "ensures_pd":
        return f"ensures positive definiteness (criterion {verdict.catalog_id})"
    if verdict.kind == "rejected":
        return "rejected"
    return f"undetermined ({verdict.note})"


def _print_witness_block(witness: HermitianMatrix) -> None:
    print("witness:")
    print(witness.to_text(), end="")


def cmd_classify3(args: argparse.Namespace) -> int:
    if args.all == (args.system is not None):
        raise _SpecError("pass exactly one of --all or a system spec")
    if args.all:
        reports = classify_all()
        if args.json:
            _print_json(
                {
                    "class_count": class_count(),
                    "classes": [_class_json(report) for report in reports],
                }
            )
        else:
            total = class_count()
            for report in reports:
                print(
                    f"class {report.class_id} of {total}: "
                    f"{report.canonical.spec_text()}"
                )
                print(f"  members: {len(report.members)}")
                print(f"  verdict: {_verdict_text(report.verdict)}")
                if report.verdict.note and report.verdict.kind == "ensures_pd":
                    print(f"  note: {report.verdict.note}")
                if report.verdict.witness is not None:
                    rows = " | ".join(
                        " ".join(str(e) for e in row)
                        for row in report.verdict.witness.rows
                    )
                    print(f"  witness: [{rows}]")
        return EXIT_OK
    try:
        system = System3.parse(args.system)
    except ValueError as exc:
        raise _SpecError(str(exc)) from exc
    class_id, canonical, verdict = classify_system(system)
    if args.json:
        _print_json(
            {
                "system": system.spec_text(),
                "canonical": canonical.spec_text(),
                "class_id": class_id,
                "class_count": class_count(),
                "verdict": _verdict_json(verdict),
            }
        )
    else:
        print(f"system: {system.spec_text()}")
        print(
            f"canonical: {canonical.spec_text()} "
            f"(class {class_id} of {class_count()})"
        )
        print(f"verdict: {_verdict_text(verdict)}")
        if verdict.note and verdict.kind == "ensures_pd":
            print(f"note: {verdict.note}")
        if verdict.witness is not None:
            _print_witness_block(verdict.witness)
    return EXIT_OK


def _class_json(report: ClassReport) -> dict:
    return {
        "id": report.class_id,
        "canonical": report.canonical.spec_text(),
        "members": [member.spec_text() for member in report.members],
        "verdict": _verdict_json(report.verdict),
    }


def cmd_charpoly(args: argparse.Namespace) -> int:
    matrix = _load(args.matrix)
    from_delta = char_poly_from_delta(matrix)
    from_traces = faddeev_char_poly(matrix)
    if from_delta != from_traces:
        print(
            "error: minor-sum characteristic polynomial disagrees with the "
            "trace recursion",
            file=sys.stderr,
        )
        return EXIT_INTERNAL
    if args.json:
        _print_json(
            {
                "n": matrix.n,
                "coefficients": [
                    format_rational(c) for c in from_delta.coefficients
                ],
                "text": from_delta.text(),
            }
        )
    else:
        print(from_delta.text())
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser and dispatch


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="minorsum",
        description=(
            "Exact inertia, rank and definiteness of Hermitian matrices "
            "from block-partition principal minor sums."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_matrix_command(name: str, help_text: str, blocks: bool = True):
        cmd = sub.add_parser(name, help=help_text)
        cmd.add_argument("matrix", help="path to a matrix file")
        if blocks:
            cmd.add_argument(
                "--blocks",
                help="comma list of block sizes (default: all blocks of size 1)",
            )
        cmd.add_argument("--json", action="store_true", help="machine readable output")
        return cmd

    add_matrix_command(
        "sigma", "print the partitioned minor sums"
    ).set_defaults(func=cmd_sigma)
    add_matrix_command(
        "inertia", "full report: sigma, inertia, rank, definiteness, oracle"
    ).set_defaults(func=cmd_inertia)
    add_matrix_command(
        "checkpd", "exit 0 if positive definite, 4 with the first failing index"
    ).set_defaults(func=cmd_checkpd)

    classify = sub.add_parser(
        "classify3", help="classify 3x3 minor-sum positivity systems"
    )
    classify.add_argument(
        "system", nargs="?", help="system spec such as 'P1+P2 ; P12+P13'"
    )
    classify.add_argument(
        "--all", action="store_true", help="classify all 49 systems"
    )
    classify.add_argument("--json", action="store_true")
    classify.set_defaults(func=cmd_classify3)

    add_matrix_command(
        "charpoly", "characteristic polynomial, cross-checked", blocks=False
    ).set_defaults(func=cmd_charpoly)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_SPEC if exc.code else EXIT_OK
    try:
        return args.func(args)
    except _SpecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SPEC
    except (MatrixParseError, ScalarParseError, NotHermitianError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except SizeLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SPEC
    except InternalCheckError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except MinorSumError as exc:
        # anything not mapped above should never surface through the CLI
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


def entrypoint() -> None:
    sys.exit(main())
