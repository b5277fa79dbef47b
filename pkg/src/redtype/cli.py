"""Command-line interface: analyze, glue, dual, rohrbach, enumerate, verify, probe.

Exit codes: 0 success, 1 invalid input, 2 a verification suite recorded a
violation, 3 an internal consistency assertion failed.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
from typing import Iterable, Sequence

from .classify import InvariantReport, classify
from .construct import GluingSpec, dual, glue
from .core import NumericalSemigroup, build_semigroup
from .enumeration import (
    ALL_SUITES,
    SweepResult,
    enumerate_by_genus,
    probe_open_questions,
    run_suites,
)
from .errors import (
    InternalInconsistency,
    PredictionMismatch,
    SemigroupError,
    UnsupportedFormat,
)
from .rohrbach import RohrbachWitness, rohrbach_number

FORMATS = ("json", "csv", "text")

#: JSON/CSV field names, in output order.
REPORT_FIELDS = (
    "generators",
    "multiplicity",
    "edim",
    "genus",
    "frobenius",
    "conductor",
    "type",
    "reduced_type",
    "pf",
    "gorenstein",
    "minimal_multiplicity",
    "max_reduced_type",
    "min_reduced_type",
    "almost_gorenstein",
    "pseudo_symmetric",
    "far_flung_gorenstein",
    "cm_finite",
    "ref_finite",
    "mu_overring",
)

#: Report fields usable as --filter predicates.
FILTER_FIELDS = (
    "gorenstein",
    "minimal_multiplicity",
    "max_reduced_type",
    "min_reduced_type",
    "almost_gorenstein",
    "pseudo_symmetric",
    "far_flung_gorenstein",
    "cm_finite",
)


def report_to_dict(report: InvariantReport) -> dict:
    return {
        "generators": list(report.generators),
        "multiplicity": report.multiplicity,
        "edim": report.embedding_dimension,
        "genus": report.genus,
        "frobenius": report.frobenius,
        "conductor": report.conductor,
        "type": report.type,
        "reduced_type": report.reduced_type,
        "pf": list(report.pf_set),
        "gorenstein": report.gorenstein,
        "minimal_multiplicity": report.minimal_multiplicity,
        "max_reduced_type": report.max_reduced_type,
        "min_reduced_type": report.min_reduced_type,
        "almost_gorenstein": report.almost_gorenstein,
        "pseudo_symmetric": report.pseudo_symmetric,
        "far_flung_gorenstein": report.far_flung_gorenstein,
        "cm_finite": report.cm_finite,
        "ref_finite": report.ref_finite,
        "mu_overring": report.mu_overring,
    }


def _cell(value) -> str:
    if isinstance(value, list):
        return " ".join(str(v) for v in value)
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def _csv_rows(rows: Iterable[dict]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(REPORT_FIELDS)
    for row in rows:
        writer.writerow([_cell(row[k]) for k in REPORT_FIELDS])
    return buf.getvalue()


def _check_format(fmt: str) -> None:
    if fmt not in FORMATS:
        raise UnsupportedFormat(f"format must be one of {', '.join(FORMATS)}, got {fmt!r}")


def render_report(report: InvariantReport, fmt: str) -> str:
    """Serialize one report as json, csv, or text."""
    _check_format(fmt)
    d = report_to_dict(report)
    if fmt == "json":
        return json.dumps(d, indent=2) + "\n"
    if fmt == "csv":
        return _csv_rows([d])
    width = max(len(k) for k in REPORT_FIELDS)
    return "".join(f"{k:<{width}}  {_cell(d[k])}\n" for k in REPORT_FIELDS)


def render_reports(reports: Sequence[InvariantReport], fmt: str) -> str:
    _check_format(fmt)
    dicts = [report_to_dict(r) for r in reports]
    if fmt == "json":
        return json.dumps(dicts, indent=2) + "\n"
    if fmt == "csv":
        return _csv_rows(dicts)
    lines = []
    for d in dicts:
        flags = [k for k in FILTER_FIELDS if d[k]]
        lines.append(
            f"<{' '.join(map(str, d['generators']))}>"
            f" genus={d['genus']} type={d['type']} s={d['reduced_type']}"
            f" c={d['conductor']}"
            + (f" [{' '.join(flags)}]" if flags else "")
        )
    return "".join(line + "\n" for line in lines)


def _sweep_dict(res: SweepResult) -> dict:
    return {
        "suite": res.suite_name,
        "genus_bound": res.genus_bound,
        "checked": res.checked,
        "violations": [
            {"generators": list(gens), "detail": detail}
            for gens, detail in res.violations
        ],
        "findings": res.findings,
    }


def render_sweeps(results: Sequence[SweepResult], fmt: str) -> str:
    _check_format(fmt)
    if fmt == "json":
        return json.dumps([_sweep_dict(r) for r in results], indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["suite", "genus_bound", "checked", "violations", "findings"])
        for r in results:
            writer.writerow(
                [r.suite_name, r.genus_bound, r.checked, len(r.violations), len(r.findings)]
            )
        return buf.getvalue()
    lines = []
    for r in results:
        status = "PASS" if r.ok else "FAIL"
        lines.append(
            f"suite {r.suite_name}: checked={r.checked} "
            f"violations={len(r.violations)} {status}"
        )
        for gens, detail in r.violations:
            lines.append(f"  ! <{' '.join(map(str, gens))}> {detail}")
        for finding in r.findings:
            lines.append(f"  ? {json.dumps(finding, sort_keys=True)}")
    return "".join(line + "\n" for line in lines)


def _parse_gens(tokens: Sequence[str]) -> list[int]:
    out = []
    for token in tokens:
        for piece in token.replace(",", " ").split():
            try:
                out.append(int(piece))
            except ValueError:
                raise SemigroupError(f"not an integer generator: {piece!r}")
    return out


def _closure_spot_check(H: NumericalSemigroup, seed: int, trials: int = 1000) -> None:
    """Randomized self-check: sums of member pairs stay members."""
    rng = random.Random(seed)
    hi = 2 * H.conductor + 2 * H.multiplicity + 4
    members = list(H.members(hi))
    for _ in range(trials):
        a, b = rng.choice(members), rng.choice(members)
        if a + b not in H:
            raise InternalInconsistency(f"{H!r}: members {a} + {b} left the semigroup")


def _write(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _common_options(parser: argparse.ArgumentParser, root: bool) -> None:
    # Defined on the root parser with real defaults, and repeated on every
    # subparser with SUPPRESS so the flags are accepted on either side of
    # the subcommand (subcommand position wins).
    def kw(default):
        return {"default": default} if root else {"default": argparse.SUPPRESS}

    parser.add_argument("--format", choices=FORMATS, **kw("text"))
    parser.add_argument("--out", metavar="PATH", **kw(None))
    parser.add_argument("--workers", type=int, **kw(1))
    parser.add_argument("--seed", type=int, **kw(0))


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="redtype",
        description="Numerical semigroup invariants, classifications, and sweeps.",
    )
    _common_options(parser, root=True)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, **kwargs):
        p = sub.add_parser(name, **kwargs)
        _common_options(p, root=False)
        return p

    p = add("analyze", help="classify one semigroup from its generators")
    p.add_argument("gens", nargs="+", help="generators, comma- or space-separated")

    p = add("glue", help="glue two semigroups and classify the result")
    p.add_argument("--h1", required=True, help="generators of the first factor")
    p.add_argument("--h2", required=True, help="generators of the second factor")
    p.add_argument("-x", type=int, required=True, help="weight from the second factor")
    p.add_argument("-y", type=int, required=True, help="weight from the first factor")

    p = add("dual", help="dual semigroup (adjoin the pseudo-Frobenius set)")
    p.add_argument("gens", nargs="+")

    p = add("rohrbach", help="extremal additive-basis value with witness")
    p.add_argument("r", type=int)

    p = add("enumerate", help="all semigroups up to a genus bound")
    p.add_argument("--max-genus", type=int, required=True)
    p.add_argument("--filter", default=None, help="comma-separated report flags")

    p = add("verify", help="run verification suites")
    p.add_argument("--suite", default="all", help="suite name or 'all'")
    p.add_argument("--max-genus", type=int, required=True)

    p = add("probe", help="search for open-question counterexamples")
    p.add_argument("--max-genus", type=int, required=True)

    return parser


def _run(args: argparse.Namespace) -> int:
    fmt = args.format
    if args.command == "analyze":
        H = build_semigroup(_parse_gens(args.gens))
        _closure_spot_check(H, args.seed)
        _write(render_report(classify(H), fmt), args.out)
        return 0

    if args.command == "glue":
        spec = GluingSpec(
            h1=build_semigroup(_parse_gens([args.h1])),
            h2=build_semigroup(_parse_gens([args.h2])),
            x=args.x,
            y=args.y,
        )
        _write(render_report(classify(glue(spec)), fmt), args.out)
        return 0

    if args.command == "dual":
        B = dual(build_semigroup(_parse_gens(args.gens)))
        if B.is_full:
            _check_format(fmt)
            d = {"generators": [1], "conductor": 0, "full": True}
            if fmt == "json":
                text = json.dumps(d, indent=2) + "\n"
            elif fmt == "csv":
                text = "generators,conductor,full\n1,0,true\n"
            else:
                text = "dual is the full semigroup <1>\n"
            _write(text, args.out)
            return 0
        _write(render_report(classify(B), fmt), args.out)
        return 0

    if args.command == "rohrbach":
        w: RohrbachWitness = rohrbach_number(args.r)
        _check_format(fmt)
        if fmt == "json":
            text = json.dumps(
                {"r": w.r, "value": w.value, "witness": list(w.witness)}, indent=2
            ) + "\n"
        elif fmt == "csv":
            text = f"r,value,witness\n{w.r},{w.value},{' '.join(map(str, w.witness))}\n"
        else:
            text = f"r={w.r} value={w.value} witness={{{', '.join(map(str, w.witness))}}}\n"
        _write(text, args.out)
        return 0

    if args.command == "enumerate":
        flags = []
        if args.filter:
            for name in args.filter.split(","):
                name = name.strip()
                if name not in FILTER_FIELDS:
                    raise SemigroupError(
                        f"unknown filter {name!r}; choose from {', '.join(FILTER_FIELDS)}"
                    )
                flags.append(name)
        reports = []
        for H in enumerate_by_genus(args.max_genus, workers=args.workers):
            if H.is_full:
                continue
            rep = classify(H)
            d = report_to_dict(rep)
            if all(d[flag] for flag in flags):
                reports.append(rep)
        _write(render_reports(reports, fmt), args.out)
        return 0

    if args.command == "verify":
        names = list(ALL_SUITES) if args.suite == "all" else [args.suite]
        results = run_suites(names, args.max_genus, workers=args.workers)
        _write(render_sweeps(results, fmt), args.out)
        return 0 if all(r.ok for r in results) else 2

    if args.command == "probe":
        result = probe_open_questions(args.max_genus, workers=args.workers)
        _write(render_sweeps([result], fmt), args.out)
        return 0

    raise SemigroupError(f"unknown command {args.command!r}")


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on bad flags; the contract reserves 2 for suite
        # violations and 1 for invalid input.
        return 0 if exc.code == 0 else 1
    try:
        return _run(args)
    except (InternalInconsistency, PredictionMismatch) as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return 3
    except SemigroupError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
