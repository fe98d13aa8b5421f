import argparse
import logging
import os
import sys

import shortuuid
from pydantic import ValidationError

import constants.constants as constants
from models import RunConfig
from service import export_services
from utils import bgg, proxies
from verifier import Verifier


class UsageError(Exception):
    reason = "UsageError"


def build_complex(config: RunConfig):
    """The complex a derive or matrix run talks about."""
    r = config.degree_cap
    if config.named is not None:
        return proxies.named_complex(config.named, r)
    if config.family == "altij":
        return bgg.output_complex(bgg.alt_family_diagram(config.dim, config.J, r))
    return proxies.proxy_row(config.dim, config.J, r).validate()


def _emit(config: RunConfig, text: str):
    if config.out:
        export_services.write_text(config.out, text)
    else:
        sys.stdout.write(text)


def run_derive(config: RunConfig, progress=None) -> int:
    def log(msg):
        if progress:
            progress(msg)

    log(f"Building {config.named or config.family} at degree {config.degree_cap}...")
    c = build_complex(config)
    log("Computing cohomology...")
    report = bgg.cohomology(c)
    logging.info(f"{c.name}: cohomology {report.dims}")

    if config.format == "json":
        text = export_services.dumps(export_services.describe_complex(c, report, degree=config.degree_cap))
        _emit(config, text)
    elif config.format == "csv":
        _emit(config, export_services.cohomology_frame(report).to_csv(index=False, lineterminator="\n"))
    elif config.format == "pretty":
        _emit(config, export_services.pretty(export_services.cohomology_frame(report)))
    else:
        export_services.write_workbook(config.out, {"cohomology": export_services.cohomology_frame(report)})
    log("Done!")
    return constants.EXIT_OK


def run_matrix(config: RunConfig) -> int:
    c = build_complex(config)
    if config.operator >= len(c) - 1:
        raise UsageError(f"{c.name} has {len(c) - 1} operators, no operator {config.operator}")
    m = c.coordinate_matrix(config.operator)
    logging.info(f"{c.name}: operator {config.operator} is {m.rows}x{m.cols}, nnz {m.nnz}")
    if config.format == "csv":
        _emit(config, export_services.matrix_to_csv(m))
    else:
        _emit(config, export_services.matrix_to_json(m))
    return constants.EXIT_OK


def run_verify(config: RunConfig, progress=None) -> int:
    if config.all_named:
        names = list(constants.NAMED_DIAGRAMS)
    elif config.named:
        names = [config.named]
    else:
        names = None
    verifier = Verifier(config.config, jobs=config.jobs, degree=config.degree, names=names,
                        max_dim=config.max_dim)
    records = verifier.run(config.suite, progress=progress)
    summary = verifier.summarize(records)

    if config.format == "json":
        _emit(config, export_services.dumps(verifier.report(records)))
    elif config.format == "csv":
        _emit(config, export_services.records_frame(records).to_csv(index=False, lineterminator="\n"))
    elif config.format == "pretty":
        _emit(config, export_services.pretty(export_services.records_frame(records)))
    else:
        export_services.write_workbook(config.out, {"summary": export_services.summary_frame(records),
                                                "records": export_services.records_frame(records)})

    print(f"{summary.passed}/{summary.total} checks passed, {summary.errors} errors, "
          f"{summary.warnings} warnings", file=sys.stderr)
    return constants.EXIT_OK if summary.ok else constants.EXIT_CHECK_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cli.py",
        description="Derive and verify BGG complexes in exact rational arithmetic",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--named", help="named diagram, e.g. elasticity3d")
    common.add_argument("--degree", type=int, help="degree cap of the first space")
    common.add_argument("--format", default="json", choices=constants.OUTPUT_FORMATS)
    common.add_argument("-o", "--out", help="output file; stdout when omitted")
    common.add_argument("--jobs", type=int, help="worker processes (BGGC_JOBS)")

    family = argparse.ArgumentParser(add_help=False)
    family.add_argument("--family", choices=constants.FAMILIES)
    family.add_argument("--dim", type=int)
    family.add_argument("--J", dest="J", type=int, default=0)

    sub.add_parser("derive", parents=[common, family], help="derive a complex and its cohomology",
                   formatter_class=argparse.ArgumentDefaultsHelpFormatter)

    verify = sub.add_parser("verify", parents=[common], help="run verification suites",
                            formatter_class=argparse.ArgumentDefaultsHelpFormatter)
    verify.add_argument("--suite", default=constants.ALL_SUITES, choices=constants.SUITES + [constants.ALL_SUITES])
    verify.add_argument("--max-dim", dest="max_dim", type=int, default=constants.APPENDIX_MAX_DIM)
    verify.add_argument("--all-named", dest="all_named", action="store_true")
    verify.add_argument("--config", default=constants.VERIFICATION_CONFIG_PATH)

    matrix = sub.add_parser("matrix", parents=[common, family], help="export one operator matrix",
                            formatter_class=argparse.ArgumentDefaultsHelpFormatter)
    matrix.add_argument("--operator", type=int, required=True, help="index i of D^i")
    return parser


def run_cli(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return constants.EXIT_OK if e.code == 0 else constants.EXIT_USAGE

    if args.verbose:
        logging.basicConfig(
            level=logging.INFO,
            format="%(asctime)s : %(levelname)s : %(message)s",
            datefmt="%Y-%m-%d %I:%M:%S%p")
    logging.info(f"run {shortuuid.uuid()[:8]}: {' '.join(argv if argv is not None else sys.argv[1:])}")

    defaults = constants.RunDefaults.from_env(os.environ)
    fields = {k: v for k, v in vars(args).items() if k != "verbose" and v is not None}
    fields.setdefault("jobs", defaults.jobs)
    if defaults.degree is not None:
        fields["default_degree"] = defaults.degree

    progress = (lambda msg: logging.info(msg)) if args.verbose else None
    try:
        config = RunConfig(**fields)
        if config.command == "derive":
            return run_derive(config, progress)
        if config.command == "matrix":
            return run_matrix(config)
        return run_verify(config, progress)
    except ValidationError as e:
        errors = "; ".join(err["msg"] for err in e.errors())
        print(f"ValidationError: {errors}", file=sys.stderr)
    except (bgg.DiagramError, proxies.UnknownName, UsageError) as e:
        print(f"{e.reason}: {e}", file=sys.stderr)
    return constants.EXIT_USAGE


if __name__ == '__main__':
    sys.exit(run_cli())
