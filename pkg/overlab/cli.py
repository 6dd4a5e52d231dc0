"""overlab command line.

  verify     count family members up to --max-n and compare with the product side
  map        merge (lambda, mu) one level up, or fold a whole tower with --full
  unmap      split a level-k member back into (lambda, mu), or unfold with --full
  enumerate  list the members of weight --n, or their count table with --table
  check      membership report for one partition document

Exit codes: 0 ok, 1 mismatch / non-member / lemma violation, 2 usage or parse
error (including k < 2 for one-level map/unmap and a malformed mu), 3 I/O error.
A non-member report goes to --out when given, else stdout.

Example map input (lambda at level k-1, mu in color 2^(k-1)):
{
  "k": 2,
  "lambda": {"k": 1, "parts": [{"value": 8, "color": 1, "overlined": true}, ...]},
  "mu": {"k": 2, "parts": [{"value": 8, "color": 2}, {"value": 7, "color": 2}, ...]}
}
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Any, List, Optional

from pydantic import ValidationError

from . import settings
from .bijection import fold_full, merge_one_level, split_one_level, unfold_full
from .enumeration import compare_table, count_table, enumerate_family
from .errors import (
    ConfigurationError,
    LemmaViolation,
    MalformedOperandError,
    OverlabError,
    PreconditionError,
)
from .models import (
    FullMapDoc,
    MapDoc,
    MembershipDoc,
    PartitionDoc,
    RunConfig,
    StatisticsDoc,
    TraceEntry,
    VerifyReport,
)
from .partitions import statistics
from .predicates import Family, MembershipReport, check_membership, family_key
from .qseries import rhs_family
from .tables import (
    comparison_csv,
    count_table_csv,
    count_table_json,
    dump_json,
    load_json,
    members_csv,
    write_text,
)

log = logging.getLogger("overlab")

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_IO = 3


# -----------------------------
# Helpers
# -----------------------------


def _family(cfg: RunConfig) -> Family:
    if cfg.family is None:
        raise ConfigurationError(f"{cfg.command} needs --family")
    return Family.parse(cfg.family, cfg.k or 1, cfg.j)


def _membership_doc(family: Family, op, report: MembershipReport) -> MembershipDoc:
    stats = None
    if report.violated is None or report.violated.value not in ("color-range", "wellformed"):
        stats = StatisticsDoc.from_statistics(statistics(op, family.k))
    return MembershipDoc(
        family=str(family),
        member=report.member,
        violated=None if report.violated is None else report.violated.value,
        location=report.location,
        detail=report.detail,
        statistics=stats,
    )


def _emit(data: Any, cfg: RunConfig) -> None:
    write_text(dump_json(data), cfg.out)


def _with_trace(result: Any, trace, cfg: RunConfig) -> Any:
    if not cfg.trace:
        return result
    return {
        "result": result,
        "trace": [TraceEntry.from_snapshot(label, snap).model_dump(exclude_none=True) for label, snap in trace.entries],
    }


# -----------------------------
# Commands
# -----------------------------


def cmd_verify(cfg: RunConfig) -> int:
    family = _family(cfg)
    if cfg.N is None:
        raise ConfigurationError("verify needs --max-n")
    N = cfg.N
    log.info("counting %s up to n=%d with %d worker(s)", family, N, cfg.workers)
    table = count_table(family, N, workers=cfg.workers)
    series = rhs_family(family, N)
    cmp = compare_table(table, series)

    if cfg.format == "csv":
        write_text(comparison_csv(table.entries, series.as_dict(), family.markers), cfg.out)
    else:
        report = VerifyReport(
            family=family.tag.value,
            k=family.k,
            j=family.j,
            N=N,
            matched=cmp.matched,
            compared=cmp.compared,
            mismatches=cmp.mismatches,
            first_mismatch=None if cmp.first_mismatch is None else list(cmp.first_mismatch),
            count_at_mismatch=None if cmp.matched else cmp.count_at_mismatch,
            coeff_at_mismatch=None if cmp.matched else cmp.coeff_at_mismatch,
        )
        _emit(report.model_dump(), cfg)

    if cmp.matched:
        log.info("%s verified up to N=%d (%d coefficients)", family, N, cmp.compared)
        return EXIT_OK
    log.warning(
        "%s: %d mismatching coefficient(s); first at %s: count %d vs product %d",
        family,
        cmp.mismatches,
        cmp.first_mismatch,
        cmp.count_at_mismatch,
        cmp.coeff_at_mismatch,
    )
    return EXIT_MISMATCH


def cmd_map(cfg: RunConfig) -> int:
    raw = load_json(cfg.input)
    if cfg.full:
        doc = FullMapDoc.model_validate(raw)
        if len(doc.mus) != doc.k - 1:
            raise ConfigurationError(f"k={doc.k} needs {doc.k - 1} mu documents, got {len(doc.mus)}")
        lam = fold_full(doc.base.to_overpartition(), [m.to_monochrome() for m in doc.mus], cfg.checked)
        _emit(PartitionDoc.from_overpartition(lam, doc.k).model_dump(), cfg)
        return EXIT_OK

    doc = MapDoc.model_validate(raw)
    lam4, trace = merge_one_level(doc.lam.to_overpartition(), doc.mu.to_monochrome(), doc.k, cfg.checked)
    result = PartitionDoc.from_overpartition(lam4, doc.k).model_dump()
    _emit(_with_trace(result, trace, cfg), cfg)
    return EXIT_OK


def cmd_unmap(cfg: RunConfig) -> int:
    doc = PartitionDoc.model_validate(load_json(cfg.input))
    k = doc.k
    op = doc.to_overpartition()
    if cfg.full:
        base, mus = unfold_full(op, k, cfg.checked)
        out = FullMapDoc(
            k=k,
            base=PartitionDoc.from_overpartition(base, 1),
            mus=[PartitionDoc.from_monochrome(mu, level) for level, mu in enumerate(mus, start=2)],
        )
        _emit(out.model_dump(), cfg)
        return EXIT_OK

    lam, mu, trace = split_one_level(op, k, cfg.checked)
    out = MapDoc(k=k, lam=PartitionDoc.from_overpartition(lam, k - 1), mu=PartitionDoc.from_monochrome(mu, k))
    _emit(_with_trace(out.model_dump(by_alias=True), trace, cfg), cfg)
    return EXIT_OK


def cmd_enumerate(cfg: RunConfig) -> int:
    family = _family(cfg)
    if cfg.N is None:
        raise ConfigurationError("enumerate needs --n")
    if cfg.table:
        table = count_table(family, cfg.N, workers=cfg.workers)
        if cfg.format == "csv":
            write_text(count_table_csv(table.rows(), family.markers), cfg.out)
        else:
            write_text(count_table_json(table.rows()), cfg.out)
        log.info("%s: %d keys for n <= %d", family, len(table.entries), cfg.N)
        return EXIT_OK

    members = enumerate_family(family, cfg.N)
    if cfg.format == "csv":
        write_text(members_csv(((family_key(op, family), op) for op in members), family.markers), cfg.out)
    else:
        _emit([PartitionDoc.from_overpartition(op, family.k).model_dump() for op in members], cfg)
    log.info("%s: %d member(s) of weight %d", family, len(members), cfg.N)
    return EXIT_OK


def cmd_check(cfg: RunConfig) -> int:
    doc = PartitionDoc.model_validate(load_json(cfg.input))
    if cfg.family is None:
        raise ConfigurationError("check needs --family")
    family = Family.parse(cfg.family, cfg.k if cfg.k is not None else doc.k, cfg.j)
    op = doc.to_overpartition()
    report = check_membership(op, family)
    _emit(_membership_doc(family, op, report).model_dump(), cfg)
    return EXIT_OK if report.member else EXIT_MISMATCH


COMMANDS = {
    "verify": cmd_verify,
    "map": cmd_map,
    "unmap": cmd_unmap,
    "enumerate": cmd_enumerate,
    "check": cmd_check,
}


# -----------------------------
# Argument parsing
# -----------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="overlab", description="Colored overpartition identity lab")
    sub = ap.add_subparsers(dest="command", required=True)

    def family_args(p: argparse.ArgumentParser) -> None:
        p.add_argument("--family", required=True, help="sbar, sbar-j, tbar, b, d1, d2, dbar, schur")
        p.add_argument("--k", type=int, default=None, help="Level (number of primary colors)")
        p.add_argument("--j", type=int, default=None, help="Index for sbar-j")

    def output_args(p: argparse.ArgumentParser) -> None:
        p.add_argument("--out", default=None, help="Output path; stdout if omitted")
        p.add_argument("--format", choices=["json", "csv"], default="json")

    def worker_args(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--workers",
            type=int,
            default=None,
            help=f"Worker processes (default from OVERLAB_WORKERS, currently {settings.DEFAULT_WORKERS})",
        )

    p = sub.add_parser("verify", help="Compare member counts with the product side")
    family_args(p)
    p.add_argument("--max-n", type=int, required=True, dest="max_n")
    output_args(p)
    worker_args(p)

    for name, what in (("map", "Merge one level (or all with --full)"), ("unmap", "Split one level (or all with --full)")):
        p = sub.add_parser(name, help=what)
        p.add_argument("--input", required=True, help="JSON document")
        p.add_argument("--out", default=None)
        p.add_argument("--checked", action=argparse.BooleanOptionalAction, default=None)
        p.add_argument("--trace", action="store_true", help="Emit every intermediate snapshot")
        p.add_argument("--full", action="store_true", help="Fold/unfold every level")

    p = sub.add_parser("enumerate", help="List members of weight n, or the count table up to n")
    family_args(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--table", action="store_true")
    output_args(p)
    worker_args(p)

    p = sub.add_parser("check", help="Membership report for one partition document")
    family_args(p)
    p.add_argument("--input", required=True)
    p.add_argument("--out", default=None)
    return ap


def config_from_args(args: argparse.Namespace) -> RunConfig:
    checked = getattr(args, "checked", None)
    workers = getattr(args, "workers", None)
    k = getattr(args, "k", None)
    n = getattr(args, "max_n", None)
    if n is None:
        n = getattr(args, "n", None)
    cfg = RunConfig(
        command=args.command,
        family=getattr(args, "family", None),
        k=k,
        j=getattr(args, "j", None),
        N=n,
        input=getattr(args, "input", None),
        out=getattr(args, "out", None),
        format=getattr(args, "format", "json"),
        checked=settings.DEFAULT_CHECKED if checked is None else checked,
        trace=getattr(args, "trace", False),
        full=getattr(args, "full", False),
        table=getattr(args, "table", False),
        workers=settings.DEFAULT_WORKERS if workers is None else workers,
    )
    if cfg.trace and cfg.full:
        raise ConfigurationError("--trace applies to one-level map/unmap only")
    return cfg


def setup_logging() -> None:
    logging.basicConfig(
        level=getattr(logging, settings.LOG_LEVEL, logging.INFO),
        format="[%(levelname)s] %(message)s",
        stream=sys.stderr,
    )


def main(argv: Optional[List[str]] = None) -> int:
    setup_logging()
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code not in (0, None) else EXIT_OK

    out = getattr(args, "out", None)
    try:
        cfg = config_from_args(args)
        return COMMANDS[cfg.command](cfg)
    except LemmaViolation as e:
        log.error("lemma violated: %s", e)
        return EXIT_MISMATCH
    except MalformedOperandError as e:
        log.error("invalid input: %s", e)
        return EXIT_USAGE
    except PreconditionError as e:
        log.error("%s", e)
        if e.report is not None:
            rep = e.report
            doc = MembershipDoc(member=False, family="", violated=rep.violated.value, location=rep.location, detail=rep.detail)
            write_text(dump_json(doc.model_dump(exclude={"family", "statistics"})), out)
        return EXIT_MISMATCH
    except (ValidationError, json.JSONDecodeError, ConfigurationError) as e:
        log.error("invalid input: %s", e)
        return EXIT_USAGE
    except OSError as e:
        log.error("I/O error: %s", e)
        return EXIT_IO
    except (OverlabError, ValueError) as e:
        log.error("%s", e)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
