"""Command-line front end.

One subcommand per claim family, each emitting machine-readable
ReportDocuments (NDJSON: one JSON object per parameter point, ascending)
plus optional CSV coefficient dumps. Sweeps shard by n across a process
pool under --jobs and merge in ascending order, so output is
order-deterministic; with SOURCE_DATE_EPOCH set, reruns are
byte-identical.

Exit codes: 0 all checks pass; 1 a claim check failed; 2 usage or
parameter error (including unwritable destinations and manifest
mismatches); 3 internal cross-validation failure (oracle mismatch or
inexact division).
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Sequence

from . import modcount, partitions, series
from .qpoly import IntPolynomial, ProductSpec, eval_at, expand_product
from .report import (
    TOOL_VERSION,
    CrossCheck,
    ReportDocument,
    new_report,
    report_to_json,
)
from .series import sign_violations

__all__ = ["run", "main"]

MANIFEST_FORMAT = 1

_STANLEY_PRIMES = (3, 5, 7, 11, 13)
_COHERENCE_PRIMES = (2, 3, 5, 7, 11)


# ---------------------------------------------------------------------------
# per-point workers (top-level so process pools can pickle them)


def verify_one(n: int) -> ReportDocument:
    """Sign pattern plus the structural facts for a single n."""
    doc = new_report("verify", {"n": n})
    s = series.expand_borwein(n)
    report = series.check_sign_pattern(s)
    doc.violations.extend(report.violations)
    expected_degree = 3 * (n + 1) * (n + 1)
    doc.cross_checks.append(
        CrossCheck("degree", str(expected_degree), str(s.degree))
    )
    doc.cross_checks.append(
        CrossCheck("endpoints", "1,1", f"{s.poly[0]},{s.poly[s.degree]}")
    )
    doc.cross_checks.append(
        CrossCheck("palindromic", "True", str(s.poly.is_palindromic()))
    )
    doc.cross_checks.append(CrossCheck("value_at_1", "0", str(eval_at(s.poly, 1))))
    doc.data["degree"] = s.degree
    return doc.finish()


def partial_sums_one(n: int) -> ReportDocument:
    return series.verify_partial_sums(n)


def modcount_one(n: int) -> ReportDocument:
    return modcount.cross_validate(n)


def identity_one(m: int) -> ReportDocument:
    """Alternating q-binomial sum vs the A-component of the product."""
    doc = new_report("identity", {"m": m})
    via_binomials = series.a_via_qbinomial(m)
    via_product = series.decompose_abc(series.expand_borwein(m - 1)).a
    if via_binomials == via_product:
        doc.cross_checks.append(CrossCheck("a_polynomial", "match", "match"))
    else:
        bad = next(
            e
            for e in range(max(len(via_binomials), len(via_product)))
            if via_binomials[e] != via_product[e]
        )
        doc.cross_checks.append(
            CrossCheck(
                "a_polynomial",
                "match",
                f"mismatch at exponent {bad}: {via_binomials[bad]} != {via_product[bad]}",
            )
        )
    doc.data["degree"] = via_product.degree
    return doc.finish()


def conjecture23_one(n: int) -> ReportDocument:
    """Sign sweeps for the squared (mod 3) and mod-5 product variants."""
    doc = new_report("conjecture23", {"n": n})
    squared = expand_product(
        ProductSpec(modulus=3, residues=frozenset({1, 2}), upper_index=n, multiplicity=2)
    )
    doc.violations.extend(sign_violations(squared, 3, n, kind="sign-squared"))
    mod5 = expand_product(
        ProductSpec(modulus=5, residues=frozenset({1, 2, 3, 4}), upper_index=n)
    )
    doc.violations.extend(sign_violations(mod5, 5, n, kind="sign-mod5"))
    doc.data["squared_degree"] = squared.degree
    doc.data["mod5_degree"] = mod5.degree
    return doc.finish()


# ---------------------------------------------------------------------------
# manifest


def _params_hash(command: str, params: dict[str, str]) -> str:
    blob = json.dumps(
        {"command": command, "params": params, "tool_version": TOOL_VERSION},
        sort_keys=True,
    )
    return hashlib.sha256(blob.encode()).hexdigest()


class ManifestError(Exception):
    pass


class Manifest:
    """Per-n completion ledger keyed by a hash of result-affecting params.

    Range endpoints are not part of the hash: extending a range reuses
    every completed entry. Any other parameter change (or a tool version
    change) invalidates the file, which then requires --fresh.
    """

    def __init__(self, path: str, command: str, params: dict[str, str]):
        self.path = path
        self.command = command
        self.hash = _params_hash(command, params)
        self.completed: dict[int, str] = {}

    def load(self, fresh: bool) -> None:
        if fresh or not os.path.exists(self.path):
            return
        try:
            with open(self.path, encoding="utf-8") as fh:
                raw = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise ManifestError(f"unreadable manifest {self.path}: {exc}") from exc
        if raw.get("format") != MANIFEST_FORMAT or raw.get("params_hash") != self.hash:
            raise ManifestError(
                f"manifest {self.path} does not match these parameters; "
                "pass --fresh to discard it"
            )
        self.completed = {int(k): str(v) for k, v in raw.get("completed", {}).items()}

    def save(self) -> None:
        payload = {
            "format": MANIFEST_FORMAT,
            "command": self.command,
            "params_hash": self.hash,
            "tool_version": TOOL_VERSION,
            "completed": {str(n): s for n, s in sorted(self.completed.items())},
        }
        tmp = self.path + ".tmp"
        with open(tmp, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, sort_keys=True)
            fh.write("\n")
        os.replace(tmp, self.path)

    def remaining(self, requested: Sequence[int]) -> list[int]:
        return [n for n in requested if n not in self.completed]


# ---------------------------------------------------------------------------
# sweep driver


def _run_sweep(
    worker: Callable[[int], ReportDocument],
    points: Sequence[int],
    jobs: int,
) -> list[ReportDocument]:
    """Run one worker per point, merging results in ascending order."""
    if jobs > 1 and len(points) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(worker, points))
    return [worker(p) for p in points]


def _emit(docs: list[ReportDocument], json_dest: str | None) -> None:
    if json_dest is None:
        return
    text = "".join(report_to_json(d) + "\n" for d in docs)
    if json_dest == "-":
        sys.stdout.write(text)
    else:
        with open(json_dest, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _emit_csv(poly: IntPolynomial, csv_dest: str) -> None:
    """Coefficient dump: header exponent,coefficient, one row per exponent."""

    def write_rows(fh) -> None:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["exponent", "coefficient"])
        degree = poly.degree
        for e in range(degree + 1):
            writer.writerow([e, poly[e]])
        if degree < 0:
            writer.writerow([0, 0])

    if csv_dest == "-":
        write_rows(sys.stdout)
    else:
        with open(csv_dest, "w", encoding="utf-8", newline="") as fh:
            write_rows(fh)


def _log(message: str) -> None:
    print(message, file=sys.stderr)


def _exit_code(docs: list[ReportDocument], prior_statuses: Sequence[str] = ()) -> int:
    statuses = [d.status for d in docs] + list(prior_statuses)
    if any(s == "error" for s in statuses):
        return 3
    if any(s == "fail" for s in statuses):
        return 1
    return 0


# ---------------------------------------------------------------------------
# argument plumbing


def _add_range_flags(sub: argparse.ArgumentParser, minimum: int) -> None:
    sub.add_argument("--n", type=int, help="single index")
    sub.add_argument("--n-min", type=int, default=minimum, help="sweep start")
    sub.add_argument("--n-max", type=int, help="sweep end (inclusive)")


def _add_common_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--json", metavar="PATH|-", help="write NDJSON reports here")
    sub.add_argument("--jobs", type=int, default=1, help="parallel workers")
    sub.add_argument("--manifest", metavar="PATH", help="resumable completion ledger")
    sub.add_argument(
        "--fresh", action="store_true", help="discard a mismatched or stale manifest"
    )


def _resolve_range(
    parser: argparse.ArgumentParser, args: argparse.Namespace, minimum: int
) -> list[int]:
    if args.n is not None and args.n_max is not None:
        parser.error("--n and --n-max are mutually exclusive")
    if args.n is not None:
        if args.n < minimum:
            parser.error(f"--n must be >= {minimum}")
        return [args.n]
    if args.n_max is None:
        parser.error("one of --n or --n-max is required")
    if args.n_max < args.n_min or args.n_min < minimum:
        parser.error(f"need {minimum} <= --n-min <= --n-max")
    return list(range(args.n_min, args.n_max + 1))


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="borwein",
        description="Exact verification sweeps for Borwein-product sign claims.",
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {TOOL_VERSION}"
    )
    subs = parser.add_subparsers(dest="subcommand", required=True)

    sub = subs.add_parser("expand", help="expand the product for one n and dump it")
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--json", metavar="PATH|-")
    sub.add_argument("--csv", metavar="PATH|-", help="exponent,coefficient rows")

    sub = subs.add_parser("verify", help="sign-pattern sweep over a range of n")
    _add_range_flags(sub, 0)
    _add_common_flags(sub)

    sub = subs.add_parser(
        "partial-sums", help="strict positivity of residue-class partial sums"
    )
    _add_range_flags(sub, 0)
    _add_common_flags(sub)

    sub = subs.add_parser(
        "modcount", help="cross-validate the signed subset-sum evaluators"
    )
    _add_range_flags(sub, 0)
    _add_common_flags(sub)

    sub = subs.add_parser(
        "identity", help="alternating q-binomial form of the A-polynomial"
    )
    _add_range_flags(sub, 1)
    _add_common_flags(sub)

    sub = subs.add_parser(
        "conjecture23", help="sign sweeps for the squared and mod-5 products"
    )
    _add_range_flags(sub, 0)
    _add_common_flags(sub)

    sub = subs.add_parser("stanley", help="two-term partition formula for a_{p,pk}")
    sub.add_argument("--p", type=int, help=f"one prime (default sweep {_STANLEY_PRIMES})")
    sub.add_argument("--k-max", type=int, default=100)
    sub.add_argument("--json", metavar="PATH|-")

    sub = subs.add_parser("coherence", help="sign coherence of pairs at distance p")
    sub.add_argument(
        "--p", type=int, help=f"one prime (default sweep {_COHERENCE_PRIMES})"
    )
    sub.add_argument("--j-max", type=int, default=2000)
    sub.add_argument("--json", metavar="PATH|-")

    return parser


# ---------------------------------------------------------------------------
# subcommand drivers


def _drive_sweep(
    parser: argparse.ArgumentParser,
    args: argparse.Namespace,
    worker: Callable[[int], ReportDocument],
    minimum: int,
    label: str,
) -> int:
    points = _resolve_range(parser, args, minimum)
    manifest: Manifest | None = None
    prior: list[str] = []
    if args.manifest:
        manifest = Manifest(args.manifest, args.subcommand, {})
        manifest.load(fresh=args.fresh)
        todo = manifest.remaining(points)
        skipped = len(points) - len(todo)
        if skipped:
            _log(f"{args.subcommand}: {skipped} completed entries reused from manifest")
        prior = [manifest.completed[n] for n in points if n in manifest.completed]
        points = todo
    elif args.fresh:
        parser.error("--fresh requires --manifest")
    docs = _run_sweep(worker, points, max(1, args.jobs))
    for point, doc in zip(points, docs):
        _log(f"{args.subcommand} {label}={point} {doc.status}")
    if manifest is not None:
        for point, doc in zip(points, docs):
            manifest.completed[point] = doc.status
        manifest.save()
    _emit(docs, args.json)
    return _exit_code(docs, prior)


def _drive_primes(
    args: argparse.Namespace,
    worker: Callable[[int], ReportDocument],
    default_primes: Sequence[int],
) -> int:
    primes = [args.p] if args.p is not None else list(default_primes)
    docs = [worker(p) for p in primes]
    for p, doc in zip(primes, docs):
        _log(f"{args.subcommand} p={p} {doc.status}")
    _emit(docs, args.json)
    return _exit_code(docs)


def run(argv: Sequence[str] | None = None) -> int:
    """Dispatch a full command line; returns the exit code."""
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.subcommand == "expand":
            if args.n < 0:
                parser.error("--n must be >= 0")
            s = series.expand_borwein(args.n)
            doc = new_report("expand", {"n": args.n})
            doc.data["degree"] = s.degree
            doc.data["constant_term"] = s.poly[0]
            doc.data["leading_term"] = s.poly[s.degree]
            if args.json is not None:
                doc.data["coefficients"] = list(s.poly.coeffs)
            doc.finish()
            _log(f"expand n={args.n} degree={s.degree} {doc.status}")
            _emit([doc], args.json)
            if args.csv is not None:
                _emit_csv(s.poly, args.csv)
            return _exit_code([doc])
        if args.subcommand == "verify":
            return _drive_sweep(parser, args, verify_one, 0, "n")
        if args.subcommand == "partial-sums":
            return _drive_sweep(parser, args, partial_sums_one, 0, "n")
        if args.subcommand == "modcount":
            return _drive_sweep(parser, args, modcount_one, 0, "n")
        if args.subcommand == "identity":
            return _drive_sweep(parser, args, identity_one, 1, "m")
        if args.subcommand == "conjecture23":
            return _drive_sweep(parser, args, conjecture23_one, 0, "n")
        if args.subcommand == "stanley":
            return _drive_primes(
                args,
                lambda p: partitions.verify_stanley(p, args.k_max),
                _STANLEY_PRIMES,
            )
        if args.subcommand == "coherence":
            return _drive_primes(
                args,
                lambda p: partitions.sign_coherence_check(p, args.j_max),
                _COHERENCE_PRIMES,
            )
        raise AssertionError(f"unhandled subcommand {args.subcommand}")
    except ManifestError as exc:
        _log(f"error: {exc}")
        return 2
    except (modcount.OracleMismatchError, ArithmeticError) as exc:
        _log(f"internal cross-validation failure: {exc}")
        return 3
    except ValueError as exc:
        _log(f"parameter error: {exc}")
        return 2
    except OSError as exc:
        _log(f"cannot write output: {exc}")
        return 2


def main(argv: Sequence[str] | None = None) -> int:
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())
