"""Command-line front end: transform, invert, inspect, verify, enumerate, compress.

Exit codes: 0 success, 1 domain error (non-primitive input, invalid
transform, malformed container), 2 usage error (including enumeration guard
violations), 3 I/O error. Diagnostics go to standard error.
"""

from __future__ import annotations

import argparse
import itertools
import os
import sys
from typing import Sequence

from .bwt import BwtContainer, bwt_transform, invert_bwt, pi_of, sigma
from .errors import Error, LimitExceededError
from .gessel_reutenauer import (
    DEFAULT_ENUMERATION_LIMIT,
    binary_special_case_check,
    descents,
    enumerate_lyndon_colyndon,
    verify_theorem1,
)
from .lyndon import lyndon_factorize
from .pipeline import compress, decompress
from .words import ParikhVector

LIMIT_ENV_VAR = "BWTGR_LIMIT"


class _UsageError(Exception):
    pass


def _read_input(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    with open(path, "rb") as fh:
        return fh.read()


def _write_output(path: str, data: bytes) -> None:
    if path == "-":
        sys.stdout.buffer.write(data)
        sys.stdout.buffer.flush()
    else:
        with open(path, "wb") as fh:
            fh.write(data)


def _read_word(args: argparse.Namespace) -> bytes:
    data = _read_input(args.input)
    if getattr(args, "strip_newline", False):
        if data.endswith(b"\r\n"):
            data = data[:-2]
        elif data.endswith(b"\n"):
            data = data[:-1]
    return data


def _resolve_limit(args: argparse.Namespace) -> int:
    if args.limit is not None:
        value = args.limit
    else:
        raw = os.environ.get(LIMIT_ENV_VAR)
        if raw is None or not raw.strip():
            return DEFAULT_ENUMERATION_LIMIT
        try:
            value = int(raw)
        except ValueError:
            raise _UsageError(f"{LIMIT_ENV_VAR} must be an integer, got {raw!r}")
    if value < 1:
        raise _UsageError("limit must be at least 1")
    return value


def _parse_alphabet(spec: str) -> bytes:
    try:
        letters = spec.encode("latin-1")
    except UnicodeEncodeError:
        raise _UsageError("alphabet letters must be single bytes")
    if not letters:
        raise _UsageError("alphabet must be nonempty")
    return bytes(sorted(set(letters)))


def _cmd_transform(args: argparse.Namespace) -> int:
    container = bwt_transform(_read_word(args))
    _write_output(args.output, container.to_bytes())
    return 0


def _cmd_invert(args: argparse.Namespace) -> int:
    container = BwtContainer.from_bytes(_read_input(args.input))
    _write_output(args.output, invert_bwt(container))
    return 0


def _cmd_permutation(args: argparse.Namespace) -> int:
    word = _read_word(args)
    text = sigma(word).one_line() + "\n" + pi_of(word).one_line() + "\n"
    _write_output(args.output, text.encode())
    return 0


def _cmd_factorize(args: argparse.Namespace) -> int:
    factors = lyndon_factorize(_read_word(args)).factors
    _write_output(args.output, b"".join(f + b"\n" for f in factors))
    return 0


def _cmd_descents(args: argparse.Namespace) -> int:
    positions = sorted(descents(pi_of(_read_word(args))))
    text = " ".join(str(i) for i in positions) + "\n"
    _write_output(args.output, text.encode())
    return 0


def _positive_vectors(n: int, letters: bytes):
    k = len(letters)
    if k > n:
        return
    for cuts in itertools.combinations(range(1, n), k - 1):
        bounds = (0, *cuts, n)
        counts = tuple(bounds[i + 1] - bounds[i] for i in range(k))
        yield ParikhVector(tuple(zip(letters, counts)))


def _cmd_verify(args: argparse.Namespace) -> int:
    limit = _resolve_limit(args)
    letters = _parse_alphabet(args.alphabet)
    classes = 0
    perms = 0
    bijective = True
    for v in _positive_vectors(args.n, letters):
        report = verify_theorem1(v, limit=limit)
        classes += report.class_count
        perms += report.perm_count
        bijective = bijective and report.bijective
    verdict = "bijective" if bijective else "NOT bijective"
    _write_output(
        args.output, f"{classes} classes, {perms} permutations, {verdict}\n".encode()
    )
    return 0 if bijective else 1


def _cmd_binary_check(args: argparse.Namespace) -> int:
    limit = _resolve_limit(args)
    if args.n < 2:
        raise _UsageError("binary-check needs --n of at least 2")
    ok = binary_special_case_check(args.n, limit=limit)
    verdict = "bijective" if ok else "NOT bijective"
    _write_output(args.output, f"n={args.n}: {verdict}\n".encode())
    return 0 if ok else 1


def _cmd_table(args: argparse.Namespace) -> int:
    limit = _resolve_limit(args)
    letters = _parse_alphabet(args.alphabet)
    rows = enumerate_lyndon_colyndon(args.n, letters, limit=limit)
    lines = [
        "\t".join(
            (
                row.lyndon.decode("latin-1"),
                row.co_lyndon.decode("latin-1"),
                row.cycle.cycle_string(),
            )
        )
        for row in rows
    ]
    _write_output(args.output, "".join(line + "\n" for line in lines).encode())
    return 0


def _cmd_compress(args: argparse.Namespace) -> int:
    _write_output(args.output, compress(_read_word(args)))
    return 0


def _cmd_decompress(args: argparse.Namespace) -> int:
    _write_output(args.output, decompress(_read_input(args.input)))
    return 0


def _add_io_arguments(parser: argparse.ArgumentParser, *, word_input: bool) -> None:
    parser.add_argument(
        "input", nargs="?", default="-", help="input file, or - for standard input"
    )
    parser.add_argument(
        "-o", "--output", default="-", help="output file, or - for standard output"
    )
    if word_input:
        parser.add_argument(
            "--strip-newline",
            action="store_true",
            help="drop one trailing newline from the input word",
        )


def _add_enumeration_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "-o", "--output", default="-", help="output file, or - for standard output"
    )
    parser.add_argument(
        "--limit",
        type=int,
        default=None,
        help=f"enumeration size guard (default {DEFAULT_ENUMERATION_LIMIT}, "
        f"or ${LIMIT_ENV_VAR})",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bwtgr",
        description="Cyclic Burrows-Wheeler transform and friends on byte words.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    p = sub.add_parser(
        "transform", help="write the transform container of a primitive word"
    )
    _add_io_arguments(p, word_input=True)
    p.set_defaults(func=_cmd_transform)

    p = sub.add_parser("invert", help="recover the exact word from its container")
    _add_io_arguments(p, word_input=False)
    p.set_defaults(func=_cmd_invert)

    p = sub.add_parser(
        "permutation",
        help="print the rotation-rank and successor permutations, one per line",
    )
    _add_io_arguments(p, word_input=True)
    p.set_defaults(func=_cmd_permutation)

    p = sub.add_parser("factorize", help="print the Lyndon factors, one per line")
    _add_io_arguments(p, word_input=True)
    p.set_defaults(func=_cmd_factorize)

    p = sub.add_parser(
        "descents", help="print the descent positions of the word's n-cycle"
    )
    _add_io_arguments(p, word_input=True)
    p.set_defaults(func=_cmd_descents)

    p = sub.add_parser(
        "verify",
        help="check the class/permutation bijection over all positive count vectors",
    )
    p.add_argument("--n", type=int, required=True, help="word length")
    p.add_argument("--alphabet", default="ab", help="letters to use (default ab)")
    _add_enumeration_arguments(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser(
        "binary-check", help="check the two-letter single-descent correspondence"
    )
    p.add_argument("--n", type=int, required=True, help="word length (at least 2)")
    _add_enumeration_arguments(p)
    p.set_defaults(func=_cmd_binary_check)

    p = sub.add_parser(
        "table", help="list Lyndon words with their transforms and cycles"
    )
    p.add_argument("--n", type=int, required=True, help="word length")
    p.add_argument("--alphabet", default="ab", help="letters to use (default ab)")
    _add_enumeration_arguments(p)
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("compress", help="transform + move-to-front + run-length")
    _add_io_arguments(p, word_input=True)
    p.set_defaults(func=_cmd_compress)

    p = sub.add_parser("decompress", help="exact inverse of compress")
    _add_io_arguments(p, word_input=False)
    p.set_defaults(func=_cmd_decompress)

    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already printed the diagnostic
        return int(exc.code or 0)
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"bwtgr: {exc}", file=sys.stderr)
        return 2
    except LimitExceededError as exc:
        print(f"bwtgr: {exc}", file=sys.stderr)
        return 2
    except Error as exc:
        print(f"bwtgr: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"bwtgr: {exc}", file=sys.stderr)
        return 3


def main() -> None:
    sys.exit(run())
