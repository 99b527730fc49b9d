"""
badseq/cli.py
--------------
`badseq generate | index | length | verify | search`: the command-line
front end over the services. Consumers are scripts and CI, so stdout
carries records only (vectors, length rows, violation records, reports)
and every diagnostic goes to stderr.

Exit codes:
  0  ok
  1  a violation was found (verify), or extend-style precondition failure
  2  usage / parse error, unsupported dimension, index out of range
  3  materialization or pairwise budget refused
  4  search stopped before it could prove its answer exact

Indices and values are always decimal strings of arbitrary size.
"""

import functools
import logging
import sys
from dataclasses import dataclass

import click

from . import __version__, configure_logging, get_config
from .errors import (
    BadseqError,
    BudgetExceededError,
    FixedWidthOverflowError,
    PreconditionError,
)
from .services.codec_service import FORMATS, format_vector, read_path, write_vectors
from .services.construction_service import (
    closed_form_bound,
    index_at,
    length_of,
    make_spec,
    materialize,
    stream,
)
from .services.search_service import max_cyclic_length, max_valid_length
from .services.verifier_service import (
    check_cyclic,
    check_non_dominating_full,
    check_non_dominating_sampled,
    check_valid,
    sample_sequence,
    scan_spec,
)
from .utils import parse_decimal

log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_REFUSED = 3
EXIT_EXHAUSTED = 4


@dataclass
class Settings:
    cfg: type
    threads: int


def _handle_errors(fn):
    """Map service exceptions onto exit codes; messages go to stderr."""

    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        ctx = click.get_current_context()
        try:
            return fn(*args, **kwargs)
        except (BudgetExceededError, FixedWidthOverflowError) as e:
            log.warning("refused: %s", e)
            click.echo(f"Error: {e}", err=True)
            ctx.exit(EXIT_REFUSED)
        except PreconditionError as e:
            click.echo(f"Error: {e}", err=True)
            ctx.exit(EXIT_VIOLATION)
        except BadseqError as e:
            click.echo(f"Error: {e}", err=True)
            ctx.exit(EXIT_USAGE)

    return wrapper


def _decimal(raw: str | None, name: str) -> int | None:
    if raw is None:
        return None
    try:
        return parse_decimal(raw, name)
    except ValueError as e:
        raise click.BadParameter(str(e), param_hint=f"--{name}") from None


@click.group()
@click.option("--threads", type=click.IntRange(min=1), default=None,
              help="Worker processes for verify/search (default: BADSEQ_THREADS or all cores).")
@click.option("-v", "--verbose", count=True, help="-v for progress, -vv for debug.")
@click.option("--config", "config_name", type=click.Choice(["default", "testing"]), default="default", hidden=True)
@click.version_option(version=__version__, prog_name="badseq")
@click.pass_context
def cli(ctx, threads, verbose, config_name):
    """Generate and verify non-dominating reset/increment vector sequences."""
    configure_logging(verbose, config_name)
    cfg = get_config(config_name)
    ctx.obj = Settings(cfg=cfg, threads=threads or cfg.THREADS)


# ---------------------------------------------------------------------------
# generate / index / length
# ---------------------------------------------------------------------------

@cli.command()
@click.option("--dim", type=int, required=True, help="Dimension d >= 2.")
@click.option("--from", "start_raw", default="0", show_default=True, help="First index (decimal).")
@click.option("--count", "count_raw", default=None, help="How many vectors (default: to the end).")
@click.option("--format", "fmt", type=click.Choice(FORMATS), default="csv", show_default=True)
@click.option("--output", "-o", type=click.Path(dir_okay=False), default=None,
              help="Stream to this file; without it, output is capped by the cell budget.")
@click.option("--cell-budget", type=click.IntRange(min=1), default=None)
@click.pass_obj
@_handle_errors
def generate(settings, dim, start_raw, count_raw, fmt, output, cell_budget):
    """Write vectors of construct(DIM) as csv or jsonl."""
    spec = make_spec(dim)
    start = _decimal(start_raw, "from")
    count = _decimal(count_raw, "count")
    if count is None:
        count = max(spec.length - start, 0)
    vectors = stream(spec, start, count)

    if output is None:
        budget = cell_budget or settings.cfg.CELL_BUDGET
        if count * spec.target_dim > budget:
            raise BudgetExceededError("writing to stdout (cells)", count * spec.target_dim, budget)
        write_vectors(vectors, sys.stdout, fmt)
        return

    with open(output, "w", newline="", encoding="utf-8") as fh:
        written = write_vectors(vectors, fh, fmt)
    log.info("wrote %d vectors of d=%d to %s", written, dim, output)


@cli.command()
@click.option("--dim", type=int, required=True)
@click.option("--at", "at_raw", required=True, help="Index (decimal, any size).")
@click.option("--format", "fmt", type=click.Choice(FORMATS), default="csv", show_default=True)
@click.pass_obj
@_handle_errors
def index(settings, dim, at_raw, fmt):
    """Print the single vector at index AT of construct(DIM)."""
    spec = make_spec(dim)
    click.echo(format_vector(index_at(spec, _decimal(at_raw, "at")), fmt))


@cli.command()
@click.option("--dim", type=int, default=None)
@click.option("--table", "table_max", type=int, default=None, help="One row per d = 2..TABLE.")
@click.pass_obj
@_handle_errors
def length(settings, dim, table_max):
    """Exact construction length and the closed-form bound, as decimals."""
    if (dim is None) == (table_max is None):
        raise click.UsageError("give exactly one of --dim or --table")
    if dim is not None:
        click.echo(f"{length_of(dim)} {closed_form_bound(dim)}")
        return
    if table_max < 2:
        raise click.BadParameter("must be >= 2", param_hint="--table")
    for d in range(2, table_max + 1):
        click.echo(f"{d} {length_of(d)} {closed_form_bound(d)}")


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

@cli.command()
@click.option("--file", "path", type=click.Path(exists=True, dir_okay=False), default=None)
@click.option("--dim", type=int, default=None, help="Verify construct(DIM) instead of a file.")
@click.option("--format", "fmt", type=click.Choice(FORMATS), default=None, help="Default: from the extension.")
@click.option("--mode", type=click.Choice(["full", "sampled"]), default="full", show_default=True)
@click.option("--samples", type=click.IntRange(min=1), default=None)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--cyclic/--no-cyclic", default=None,
              help="Also check the wrap step (default: on for --dim, off for --file).")
@click.option("--pair-budget", type=click.IntRange(min=1), default=None)
@click.option("--cell-budget", type=click.IntRange(min=1), default=None)
@click.pass_obj
@_handle_errors
def verify(settings, path, dim, fmt, mode, samples, seed, cyclic, pair_budget, cell_budget):
    """Check validity, cyclicity and non-domination; exit 1 on a violation."""
    if (path is None) == (dim is None):
        raise click.UsageError("give exactly one of --file or --dim")
    cfg = settings.cfg
    samples = samples or cfg.SAMPLES
    pair_budget = pair_budget or cfg.PAIR_BUDGET
    found = []
    report = None

    if dim is not None:
        spec = make_spec(dim)
        cyclic = True if cyclic is None else cyclic
        if mode == "full":
            seq = materialize(spec, cell_budget=cell_budget or cfg.CELL_BUDGET)
            found.append(_step_check(seq, cyclic))
            found.append(check_non_dominating_full(seq, pair_budget=pair_budget, workers=settings.threads))
        else:
            if spec.length * spec.target_dim <= cfg.SCAN_BUDGET:
                found.append(scan_spec(spec, cyclic=cyclic, block_size=cfg.BLOCK_SIZE))
            else:
                log.warning("d=%d is too long to scan for validity; checking sampled pairs only", dim)
                click.echo(f"warning: validity scan skipped for d={dim}", err=True)
            report = check_non_dominating_sampled(spec, samples, seed)
    else:
        seq = read_path(path, fmt)
        cyclic = False if cyclic is None else cyclic
        found.append(_step_check(seq, cyclic))
        if mode == "full":
            found.append(check_non_dominating_full(seq, pair_budget=pair_budget, workers=settings.threads))
        else:
            report = sample_sequence(seq, samples, seed)

    violations = [v for v in found if v is not None]
    for violation in violations:
        click.echo(str(violation))
    if report is not None:
        for violation in report.violations[:1]:
            click.echo(str(violation))
        for a, b in report.witness_failures[:1]:
            click.echo(f"witness-failure {a} {b}")
        click.echo(report.summary())
    if violations or (report is not None and not report.ok):
        sys.exit(EXIT_VIOLATION)
    if report is None:
        click.echo("ok")


def _step_check(seq, cyclic):
    return check_cyclic(seq) if cyclic else check_valid(seq)


# ---------------------------------------------------------------------------
# search
# ---------------------------------------------------------------------------

@cli.command()
@click.option("--dim", type=int, required=True, help="1 <= DIM <= 3.")
@click.option("--cyclic", is_flag=True, help="Maximize cyclic rather than valid sequences.")
@click.option("--max-length", type=click.IntRange(min=1), default=None, help="Length budget (search depth).")
@click.option("--budget", type=click.IntRange(min=0), default=None, help="Node budget.")
@click.option("--symmetry", is_flag=True, help="Only sorted start vectors.")
@click.pass_obj
@_handle_errors
def search(settings, dim, cyclic, max_length, budget, symmetry):
    """Exhaustive search for the longest non-dominating sequence."""
    cfg = settings.cfg
    finder = max_cyclic_length if cyclic else max_valid_length
    result = finder(
        dim,
        length_budget=max_length or cfg.LENGTH_BUDGET,
        node_budget=cfg.NODE_BUDGET if budget is None else budget,
        symmetry=symmetry,
        workers=settings.threads,
    )
    click.echo(f"max_length {result.max_length}")
    click.echo(f"nodes_explored {result.nodes_explored}")
    if result.exact:
        click.echo("exact yes")
    else:
        reason = "node budget exhausted" if result.budget_exhausted else "length budget reached"
        click.echo(f"exact no ({reason}; best so far)")
    write_vectors(result.witness, sys.stdout, "csv")
    if not result.exact:
        sys.exit(EXIT_EXHAUSTED)


def main():
    cli(prog_name="badseq")
