import functools
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence

import click
import orjson

from certificates import (
    AXIOM_IDS,
    MACHINE_OPTIONS,
    Certifier,
    render_check_text,
    render_machine,
    render_text,
)
from checks import CheckStatus, check_ids
from config import config
from errors import InputError
from graph_core import (
    LabelingMap,
    SimpleGraph,
    derived_twelve_cycle_labeling,
    edge_list_text,
    enumerate_cycles,
    graph_digest,
    heawood_standard,
    read_edge_list,
)
from perm_core import (
    conjugacy_classes,
    element_order,
    enumerate_subgroups,
    format_perm,
    order_spectrum,
)
from symmetry import automorphism_group

logging.basicConfig(level=getattr(logging, config.LOG_LEVEL), format='%(asctime)s - %(name)s - %(levelname)s - %(message)s')
logger = logging.getLogger(__name__)

PROG_NAME = "heawood-cert"


def _input_errors_as_usage(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except InputError as e:
            raise click.UsageError(str(e)) from e
    return wrapper


def _report_options(fn):
    fn = click.option("--graph", "graph_path", type=click.Path(exists=True, dir_okay=False),
                      help="Edge-list file to check instead of the built-in Heawood graph.")(fn)
    fn = click.option("--out", type=click.Path(dir_okay=False), help="Write the output to a file instead of stdout.")(fn)
    fn = click.option("--format", "fmt", type=click.Choice(["text", "machine"]), default=config.DEFAULT_REPORT_FORMAT,
                      show_default=True, help="Human-readable text or machine JSON.")(fn)
    return fn


def _withhold_option(fn):
    return click.option("--withhold", multiple=True, type=click.Choice(list(AXIOM_IDS)),
                        help="Treat an axiom as unavailable; repeatable.")(fn)


def _labeling_option(fn):
    return click.option("--labeling", type=click.Choice(["figure1", "standard", "derived12"]), default="figure1",
                        show_default=True,
                        help="Vertex labels: figure1 (alias standard) numbers the outer 14-cycle 1..14; "
                             "derived12 labels a 12-cycle 1..12 and its off-cycle pair v, w.")(fn)


def _load_graph(graph_path: Optional[str]) -> SimpleGraph:
    return read_edge_list(graph_path) if graph_path else heawood_standard()


def _labeling(g: SimpleGraph, name: str) -> LabelingMap:
    if name == "derived12":
        return derived_twelve_cycle_labeling(g)
    return LabelingMap.standard(g.vertex_count)


def _emit(payload, out: Optional[str]) -> None:
    text = payload.decode("utf-8") if isinstance(payload, bytes) else payload
    if out:
        Path(out).write_text(text, encoding="utf-8")
        logger.info(f"Wrote output to {out}")
    else:
        click.echo(text, nl=False)


def _machine(data) -> bytes:
    return orjson.dumps(data, option=MACHINE_OPTIONS) + b"\n"


@click.group()
def cli():
    """Machine-checked certificate for the symmetry groups of Heawood graph embeddings."""


@cli.command("check")
@click.argument("check_id", type=click.Choice(check_ids()))
@_report_options
@click.pass_context
@_input_errors_as_usage
def check_command(ctx, check_id, fmt, out, graph_path):
    """Run a single check."""
    result = Certifier(_load_graph(graph_path)).run_check(check_id)
    _emit(render_machine(result) if fmt == "machine" else render_check_text(result), out)
    ctx.exit(0 if result.status is CheckStatus.VERIFIED else 1)


@cli.command("all")
@_report_options
@_withhold_option
@click.pass_context
@_input_errors_as_usage
def all_command(ctx, fmt, out, graph_path, withhold):
    """Run every check."""
    report = Certifier(_load_graph(graph_path), withhold).run_all()
    _emit(render_machine(report) if fmt == "machine" else render_text(report), out)
    ctx.exit(0 if report.all_verified else 1)


@cli.command("classify")
@_report_options
@_withhold_option
@click.pass_context
@_input_errors_as_usage
def classify_command(ctx, fmt, out, graph_path, withhold):
    """Run every check and replay the elimination of candidate groups."""
    report = Certifier(_load_graph(graph_path), withhold).classify()
    _emit(render_machine(report) if fmt == "machine" else render_text(report), out)
    ctx.exit(0 if report.all_verified else 1)


@cli.group("dump")
def dump():
    """Print computed objects."""


@dump.command("cycles")
@click.option("--length", required=True, type=int, help="Cycle length k.")
@_labeling_option
@_report_options
@click.pass_context
@_input_errors_as_usage
def dump_cycles(ctx, length, labeling, fmt, out, graph_path):
    g = _load_graph(graph_path)
    labels = _labeling(g, labeling)
    cycles = enumerate_cycles(g, length)
    rows = [[labels.label_of(v) for v in c.vertices] for c in cycles]
    if fmt == "machine":
        payload = _machine({"length": length, "count": len(rows), "cycles": rows})
    else:
        payload = "".join(" ".join(row) + "\n" for row in rows)
    _emit(payload, out)
    ctx.exit(0)


@dump.command("group")
@click.option("--spectrum", is_flag=True, help="Element counts by order.")
@click.option("--conjugacy", is_flag=True, help="Conjugacy classes with representatives.")
@click.option("--subgroups", is_flag=True, help="The subgroup census.")
@_labeling_option
@_report_options
@click.pass_context
@_input_errors_as_usage
def dump_group(ctx, spectrum, conjugacy, subgroups, labeling, fmt, out, graph_path):
    """Print the automorphism group's spectrum, conjugacy classes or subgroups."""
    chosen = [name for name, flag in (("spectrum", spectrum), ("conjugacy", conjugacy), ("subgroups", subgroups)) if flag]
    if len(chosen) != 1:
        raise click.UsageError("choose exactly one of --spectrum, --conjugacy or --subgroups")
    view = chosen[0]
    g = _load_graph(graph_path)
    labels = _labeling(g, labeling)
    G = automorphism_group(g)

    if view == "spectrum":
        counts = order_spectrum(G)
        data = {"order": G.order, "spectrum": {str(k): v for k, v in counts.items()}}
        lines = [f"|Aut| = {G.order}"] + [f"order {k}: {v}" for k, v in counts.items()]
    elif view == "conjugacy":
        classes = conjugacy_classes(G)
        data = {"classes": [
            {"size": len(cls), "order": element_order(cls[0]), "representative": format_perm(cls[0], labels)}
            for cls in classes
        ]}
        lines = [f"size {c['size']:>3}  order {c['order']}  {c['representative']}" for c in data["classes"]]
    else:
        census = enumerate_subgroups(G)
        data = {"subgroups": [
            {"order": r.order, "iso_type": r.iso_type, "generators": [format_perm(p, labels) for p in r.generators]}
            for r in census
        ]}
        lines = [f"{s['order']:>3}  {s['iso_type']:<9} {' '.join(s['generators']) or '()'}" for s in data["subgroups"]]

    _emit(_machine(data) if fmt == "machine" else "".join(line + "\n" for line in lines), out)
    ctx.exit(0)


@dump.command("graph")
@_report_options
@click.pass_context
@_input_errors_as_usage
def dump_graph(ctx, fmt, out, graph_path):
    """Print the canonical edge list with 1-based labels."""
    g = _load_graph(graph_path)
    if fmt == "machine":
        payload = _machine({
            "vertex_count": g.vertex_count,
            "edges": [[u + 1, v + 1] for u, v in g.sorted_edges],
            "graph_digest": graph_digest(g),
        })
    else:
        payload = edge_list_text(g)
    _emit(payload, out)
    ctx.exit(0)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Entry point; returns 0 when every executed check verified, 1 on a failed check, 2 on bad usage."""
    try:
        code = cli.main(args=list(argv) if argv is not None else None, prog_name=PROG_NAME, standalone_mode=False)
    except click.UsageError as e:
        e.show()
        return 2
    except click.ClickException as e:
        e.show()
        return e.exit_code
    except click.Abort:
        click.echo("Aborted!", err=True)
        return 1
    except InputError as e:
        click.echo(f"Error: {e}", err=True)
        return 2
    return code or 0


if __name__ == "__main__":
    sys.exit(main())
