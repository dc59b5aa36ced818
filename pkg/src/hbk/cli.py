import functools
import json
from pathlib import Path
from typing import Any, Callable, Optional

import click
from rich.console import Console
from rich.panel import Panel
from rich.table import Table

from .algebra import (
    AlexanderBiquandle,
    alexander_table,
    check_biquandle_axioms,
    check_gfamily_axioms,
    check_quandle_degeneration,
    make_alexander,
    make_field,
    parse_polynomial,
)
from .bounds import BoundReport, distance_report, unknotting_report
from .coloring import (
    coloring_count_bruteforce,
    coloring_dimension,
    coloring_matrix,
    rank,
    relation_residual,
)
from .config import DEFAULT_CONFIG_PATH, ConfigManager
from .diagram import (
    Diagram,
    crossing_changes,
    diagram_to_dict,
    is_isomorphic,
    load_diagram,
    require_valid,
    save_diagram,
    validate as validate_diagram,
)
from .exceptions import DiagramSyntaxError, HbkError
from .flow import (
    Flow,
    classical_flow,
    enumerate_flows,
    flow_space,
    gcd_of_flow,
    make_flow,
)
from .moves import MoveSite, apply_move, enumerate_applicable, random_walk
from .templates import TEMPLATE_NAMES, get_template

console = Console(stderr=True)
stdout = Console()

EXIT_INVALID = 2


def load_config(config_path: str) -> dict:
    """Load configuration from file."""
    return ConfigManager.load_config(config_path)


def merge_config_with_args(config: dict, **cli_args: Any) -> dict:
    """Merge configuration with CLI arguments, giving priority to CLI args."""
    return ConfigManager.merge_config_with_args(config, **cli_args)


def output_options(func: Callable) -> Callable:
    func = click.option(
        "--json/--text",
        "as_json",
        default=True,
        help="Machine-readable JSON (default) or rich text output",
    )(func)
    func = click.option(
        "--config",
        "-c",
        "config_path",
        default=DEFAULT_CONFIG_PATH,
        help="Path to JSON config file",
    )(func)
    return func


def field_options(func: Callable) -> Callable:
    for option in reversed(
        [
            click.option("--m", "m", type=int, help="Flow modulus"),
            click.option("--p", "p", type=int, help="Field characteristic"),
            click.option("--f", "f", help="Modulus polynomial, e.g. 1,1,1"),
            click.option("--s", "s", help="Biquandle parameter s, e.g. 1"),
        ]
    ):
        func = option(func)
    return output_options(func)


def handle_errors(func: Callable) -> Callable:
    """Map library errors to a diagnostic and exit code 2."""

    @functools.wraps(func)
    def wrapper(*args: Any, **kwargs: Any) -> Any:
        try:
            return func(*args, **kwargs)
        except HbkError as e:
            console.print(f"[red]Error ({e.code}): {e}[/red]")
            if kwargs.get("as_json", True):
                click.echo(json.dumps({"error": e.code, "message": str(e)}))
            raise SystemExit(EXIT_INVALID)

    return wrapper


def emit(doc: dict, as_json: bool, render: Callable[[dict], None]) -> None:
    if as_json:
        click.echo(json.dumps(doc, indent=2, sort_keys=True))
    else:
        render(doc)


def note(ctx: click.Context, message: str) -> None:
    if ctx.obj.get("verbose"):
        console.print(f"[cyan]{message}[/cyan]")


def settings(config_path: str, **cli_args: Any) -> dict:
    return merge_config_with_args(load_config(config_path), **cli_args)


def biquandle_from(merged: dict) -> AlexanderBiquandle:
    missing = [key for key in ("p", "f", "s") if merged.get(key) is None]
    if missing:
        raise click.UsageError(
            f"missing field parameter(s) {', '.join('--' + k for k in missing)}; "
            "pass them or run 'hbk init'"
        )
    try:
        f = parse_polynomial(str(merged["f"]))
        s = parse_polynomial(str(merged["s"]))
    except ValueError as e:
        raise click.BadParameter(str(e))
    field = make_field(int(merged["p"]), f)
    return make_alexander(field, field.element(s))


def modulus_from(merged: dict, ab: Optional[AlexanderBiquandle] = None) -> int:
    if merged.get("m") is not None:
        return int(merged["m"])
    if ab is not None:
        return ab.type
    raise click.UsageError("missing --m")


def parse_flow_text(d: Diagram, m: int, text: Optional[str]) -> Flow:
    """Read ``arc=v,arc=v``; arcs left out carry 0."""
    assignment: dict[str, int] = {}
    for part in (text or "").split(","):
        if not part.strip():
            continue
        name, sep, value = part.partition("=")
        if not sep:
            raise DiagramSyntaxError(f"expected arc=value, got {part!r}", "flow")
        try:
            assignment[name.strip()] = int(value)
        except ValueError:
            raise DiagramSyntaxError(f"{value!r} is not an integer", "flow")
    return make_flow(d, m, assignment)


def load_valid(path: str) -> Diagram:
    d = load_diagram(path)
    require_valid(d)
    return d


def emit_diagram(d: Diagram, as_json: bool, output: Optional[str]) -> None:
    if output:
        save_diagram(d, output)
        console.print(f"[green]Diagram written to {output}[/green]")
        return
    if as_json:
        click.echo(json.dumps(diagram_to_dict(d), indent=2, ensure_ascii=False))
        return
    table = Table(title=f"{d.name}: {d.n} crossings, {d.k} vertices")
    table.add_column("node")
    table.add_column("slots")
    for c in d.crossings:
        table.add_row(
            f"{c.id} ({c.sign:+d})",
            f"under {c.under_in} → {c.under_out}, over {c.over_in} → {c.over_out}",
        )
    for v in d.vertices:
        table.add_row(
            f"{v.id} ({v.kind})",
            ", ".join(f"{s.semi_arc} {s.direction}" for s in v.slots),
        )
    stdout.print(table)


def render_report(title: str) -> Callable[[dict], None]:
    def render(doc: dict) -> None:
        lines = "\n".join(
            f"{key}: [bold]{value}[/bold]" for key, value in doc.items()
        )
        stdout.print(Panel(lines, title=f"[bold blue]{title}[/bold blue]"))

    return render


def render_bound(report: BoundReport) -> Callable[[dict], None]:
    def render(doc: dict) -> None:
        table = Table(title=f"Lower bound: {report.bound}")
        table.add_column("diagram")
        table.add_column("gcd")
        table.add_column("flows")
        table.add_column("dims")
        for name, profile in report.profiles.items():
            for gcd, dims in sorted(profile.by_gcd.items()):
                table.add_row(
                    name,
                    str(gcd),
                    str(sum(dims.values())),
                    ", ".join(f"{k}×{dims[k]}" for k in sorted(dims)),
                )
        stdout.print(table)
        for direction in report.directions:
            stdout.print(
                f"{direction.source} → {direction.target}: "
                f"[bold]{direction.bound}[/bold]"
            )
        if report.upper_bound is not None:
            stdout.print(f"upper bound: [bold]{report.upper_bound}[/bold]")

    return render


@click.group()
@click.option("--verbose", "-v", is_flag=True, help="Print progress notes on stderr")
@click.pass_context
def cli(ctx: click.Context, verbose: bool) -> None:
    """Coloring invariants of handlebody-knot diagrams."""
    ctx.ensure_object(dict)
    ctx.obj["verbose"] = verbose


@cli.command()
@click.option("--force", is_flag=True, help="Overwrite an existing config file")
@click.option("--config", "-c", "config_path", default=DEFAULT_CONFIG_PATH)
def init(force: bool, config_path: str) -> None:
    """Write a default config file."""
    if Path(config_path).exists() and not force:
        console.print(
            f"[yellow]{config_path} already exists; use --force to overwrite[/yellow]"
        )
        raise click.Abort()
    path = ConfigManager.write_default_config(config_path)
    console.print(f"[green]✓ Created {path}[/green]")


@cli.command()
@click.argument("diagram_file", type=click.Path())
@output_options
@handle_errors
def validate(diagram_file: str, config_path: str, as_json: bool) -> None:
    """Check a diagram file and report its counts."""
    report = validate_diagram(load_diagram(diagram_file))
    emit(report.to_dict(), as_json, render_report(f"Diagram {report.name}"))
    if not report.ok:
        for violation in report.violations:
            console.print(f"[red]{violation}[/red]")
        raise SystemExit(EXIT_INVALID)


@cli.command()
@click.argument("diagram_file", type=click.Path())
@click.option("--m", "m", type=int, help="Flow modulus")
@click.option("--list", "list_flows", is_flag=True, help="Also list every flow")
@click.option("--cap", type=int, help="Refuse to list more flows than this")
@output_options
@click.pass_context
@handle_errors
def flows(
    ctx: click.Context,
    diagram_file: str,
    m: Optional[int],
    list_flows: bool,
    cap: Optional[int],
    config_path: str,
    as_json: bool,
) -> None:
    """Count the Z_m-flows of a diagram, and list them with --list."""
    merged = settings(config_path, m=m, flow_cap=cap)
    modulus = modulus_from(merged)
    d = load_valid(diagram_file)
    fs = flow_space(d, modulus)
    note(ctx, f"{fs.count} flows, cap {merged['flow_cap']}")
    doc: dict[str, Any] = {
        "m": modulus,
        "count": fs.count,
        "arcs": [arc.name for arc in fs.arcs],
        "elementary_divisors": list(fs.elementary_divisors),
    }
    listed: list[Flow] = []
    if list_flows:
        listed = list(enumerate_flows(fs, merged["flow_cap"]))
        doc["flows"] = [
            {"values": phi.as_dict(), "gcd": gcd_of_flow(phi)} for phi in listed
        ]

    def render(doc: dict) -> None:
        render_report(f"Z_{modulus}-flows of {d.name}")(
            {
                "count": doc["count"],
                "elementary divisors": doc["elementary_divisors"],
            }
        )
        for phi in listed:
            stdout.print(f"{phi}  gcd={gcd_of_flow(phi)}", markup=False)

    emit(doc, as_json, render)


@cli.command()
@click.argument("diagram_file", type=click.Path())
@click.option("--flow", "flow_text", help="Flow values as arc=v,...; others are 0")
@field_options
@handle_errors
def color(
    diagram_file: str,
    flow_text: Optional[str],
    m: Optional[int],
    p: Optional[int],
    f: Optional[str],
    s: Optional[str],
    config_path: str,
    as_json: bool,
) -> None:
    """Coloring dimension and count of a flowed diagram."""
    merged = settings(config_path, m=m, p=p, f=f, s=s)
    ab = biquandle_from(merged)
    d = load_valid(diagram_file)
    phi = parse_flow_text(d, modulus_from(merged, ab), flow_text)
    mx = coloring_matrix(d, phi, ab)
    r = rank(mx)
    dim = len(mx.columns) - r
    doc = {
        "flow": phi.as_dict(),
        "gcd": gcd_of_flow(phi),
        "rank": r,
        "dim": dim,
        "count": f"{ab.field.order}^{dim}",
        "residual_zero": relation_residual(d, phi, ab).is_zero,
    }
    emit(doc, as_json, render_report(f"Colorings of {d.name}"))


@cli.command("bound-unknot")
@click.argument("diagram_file", type=click.Path())
@click.option("--cap", type=int, help="Refuse to enumerate more flows than this")
@click.option("--jobs", "-j", type=int, help="Worker processes for per-flow work")
@field_options
@click.pass_context
@handle_errors
def bound_unknot(
    ctx: click.Context,
    diagram_file: str,
    cap: Optional[int],
    jobs: Optional[int],
    m: Optional[int],
    p: Optional[int],
    f: Optional[str],
    s: Optional[str],
    config_path: str,
    as_json: bool,
) -> None:
    """Lower bound for the unknotting number."""
    merged = settings(config_path, m=m, p=p, f=f, s=s, flow_cap=cap, jobs=jobs)
    ab = biquandle_from(merged)
    d = load_valid(diagram_file)
    modulus = modulus_from(merged, ab)
    note(ctx, f"{ab}; m = {modulus}, jobs {merged['jobs']}")
    report = unknotting_report(d, ab, modulus, merged["flow_cap"], merged["jobs"])
    note(ctx, f"{report.flows_examined} flows examined")
    emit(report.to_dict(), as_json, render_bound(report))


@cli.command("bound-distance")
@click.argument("first_file", type=click.Path())
@click.argument("second_file", type=click.Path())
@click.option(
    "--changes", help="Crossing ids whose change turns the first into the second"
)
@click.option("--cap", type=int, help="Refuse to enumerate more flows than this")
@click.option("--jobs", "-j", type=int, help="Worker processes for per-flow work")
@field_options
@click.pass_context
@handle_errors
def bound_distance(
    ctx: click.Context,
    first_file: str,
    second_file: str,
    changes: Optional[str],
    cap: Optional[int],
    jobs: Optional[int],
    m: Optional[int],
    p: Optional[int],
    f: Optional[str],
    s: Optional[str],
    config_path: str,
    as_json: bool,
) -> None:
    """Lower bound for the Gordian distance of two diagrams."""
    merged = settings(config_path, m=m, p=p, f=f, s=s, flow_cap=cap, jobs=jobs)
    ab = biquandle_from(merged)
    d1, d2 = load_valid(first_file), load_valid(second_file)
    modulus = modulus_from(merged, ab)
    note(ctx, f"{ab}; m = {modulus}, jobs {merged['jobs']}")
    report = distance_report(d1, d2, ab, modulus, merged["flow_cap"], merged["jobs"])
    if changes:
        ids = [c.strip() for c in changes.split(",") if c.strip()]
        if is_isomorphic(crossing_changes(d1, ids), d2):
            report.upper_bound = len(ids)
        else:
            report.warnings.append(
                "the listed crossing changes do not turn the first diagram "
                "into the second"
            )
    for warning in report.warnings:
        console.print(f"[yellow]Warning: {warning}[/yellow]")
    emit(report.to_dict(), as_json, render_bound(report))


@cli.command()
@click.argument("diagram_file", type=click.Path())
@click.option("--flow", "flow_text", help="Flow values as arc=v,...; others are 0")
@click.option("--cap", type=int, help="Refuse searches estimated above this")
@field_options
@handle_errors
def oracle(
    diagram_file: str,
    flow_text: Optional[str],
    cap: Optional[int],
    m: Optional[int],
    p: Optional[int],
    f: Optional[str],
    s: Optional[str],
    config_path: str,
    as_json: bool,
) -> None:
    """Count colorings by search and compare with the rank."""
    merged = settings(config_path, m=m, p=p, f=f, s=s, brute_cap=cap)
    ab = biquandle_from(merged)
    d = load_valid(diagram_file)
    phi = parse_flow_text(d, modulus_from(merged, ab), flow_text)
    brute = coloring_count_bruteforce(d, phi, ab, merged["brute_cap"])
    dim = coloring_dimension(d, phi, ab)
    expected = ab.field.order**dim
    doc = {
        "flow": phi.as_dict(),
        "bruteforce_count": brute,
        "dim": dim,
        "rank_count": expected,
        "agree": brute == expected,
    }
    emit(doc, as_json, render_report(f"Coloring oracle for {d.name}"))
    if brute != expected:
        console.print("[red]Search and rank disagree[/red]")
        raise SystemExit(1)


@cli.command("check-relation")
@click.argument("diagram_file", type=click.Path())
@click.option("--flow", "flow_text", help="Check one flow instead of all of them")
@click.option(
    "--classical",
    is_flag=True,
    help="Use the constant flow 1 with m equal to the biquandle type",
)
@click.option("--cap", type=int, help="Refuse to enumerate more flows than this")
@field_options
@click.pass_context
@handle_errors
def check_relation(
    ctx: click.Context,
    diagram_file: str,
    flow_text: Optional[str],
    classical: bool,
    cap: Optional[int],
    m: Optional[int],
    p: Optional[int],
    f: Optional[str],
    s: Optional[str],
    config_path: str,
    as_json: bool,
) -> None:
    """Verify that the weighted rows of the coloring matrix sum to zero."""
    merged = settings(config_path, m=m, p=p, f=f, s=s, flow_cap=cap)
    ab = biquandle_from(merged)
    d = load_valid(diagram_file)
    if classical:
        checked = [classical_flow(d, ab.type)]
    elif flow_text is not None:
        checked = [parse_flow_text(d, modulus_from(merged, ab), flow_text)]
    else:
        fs = flow_space(d, modulus_from(merged, ab))
        checked = list(enumerate_flows(fs, merged["flow_cap"]))
    note(ctx, f"checking {len(checked)} flow(s)")
    failures = []
    for phi in checked:
        residual = relation_residual(d, phi, ab)
        if not residual.is_zero:
            failures.append(
                {"flow": phi.as_dict(), "columns": residual.nonzero_columns()}
            )
    doc = {
        "residual_zero": not failures,
        "flows_checked": len(checked),
        "failures": failures,
    }
    emit(doc, as_json, render_report(f"Row relation on {d.name}"))
    if failures:
        raise SystemExit(1)


@cli.command()
@click.argument("diagram_file", type=click.Path())
@click.option("--apply", "site_text", help="Apply one move, KIND[/inv]:ANCHORS")
@click.option("--randomize", type=int, help="Apply this many random moves")
@click.option("--seed", type=int, help="Seed for --randomize")
@click.option("--max-crossings", type=int, help="Crossing ceiling for --randomize")
@click.option("--output", "-o", type=click.Path(), help="Write the diagram here")
@output_options
@click.pass_context
@handle_errors
def moves(
    ctx: click.Context,
    diagram_file: str,
    site_text: Optional[str],
    randomize: Optional[int],
    seed: Optional[int],
    max_crossings: Optional[int],
    output: Optional[str],
    config_path: str,
    as_json: bool,
) -> None:
    """List applicable moves, apply one, or take a seeded random walk."""
    d = load_valid(diagram_file)
    if site_text:
        emit_diagram(apply_move(d, MoveSite.parse(site_text)), as_json, output)
        return
    if randomize is not None:
        config = load_config(config_path)
        if seed is None and "seed" not in config.get("run", {}):
            raise click.UsageError("--randomize needs --seed or run.seed in the config")
        merged = merge_config_with_args(config, seed=seed)
        note(ctx, f"random walk of {randomize} steps, seed {merged['seed']}")
        for site, d in random_walk(d, merged["seed"], randomize, max_crossings):
            note(ctx, f"{site} → {d.n} crossings")
        emit_diagram(d, as_json, output)
        return
    sites = [str(site) for site in enumerate_applicable(d)]

    def render(doc: dict) -> None:
        table = Table(title=f"{len(sites)} applicable moves on {d.name}")
        table.add_column("site")
        for site in sites:
            table.add_row(site)
        stdout.print(table)

    emit({"moves": sites}, as_json, render)


@cli.command()
@click.argument("diagram_file", type=click.Path())
@click.argument("crossing_ids", nargs=-1, required=True)
@click.option("--output", "-o", type=click.Path(), help="Write the diagram here")
@output_options
@handle_errors
def change(
    diagram_file: str,
    crossing_ids: tuple[str, ...],
    output: Optional[str],
    config_path: str,
    as_json: bool,
) -> None:
    """Change the named crossings."""
    d = load_valid(diagram_file)
    emit_diagram(crossing_changes(d, list(crossing_ids)), as_json, output)


@cli.command()
@click.argument("name", type=click.Choice(TEMPLATE_NAMES))
@click.option("--genus", "-g", type=int, help="Genus of the trivial diagram")
@click.option("--output", "-o", type=click.Path(), help="Write the diagram here")
@output_options
@handle_errors
def template(
    name: str,
    genus: Optional[int],
    output: Optional[str],
    config_path: str,
    as_json: bool,
) -> None:
    """Print a template diagram."""
    emit_diagram(get_template(name, genus), as_json, output)


@cli.command()
@click.option("--samples", type=int, help="Sampled trials when search is too big")
@click.option("--seed", type=int, help="Seed for sampled trials")
@field_options
@handle_errors
def biquandle(
    samples: Optional[int],
    seed: Optional[int],
    m: Optional[int],
    p: Optional[int],
    f: Optional[str],
    s: Optional[str],
    config_path: str,
    as_json: bool,
) -> None:
    """Type of an Alexander biquandle and a check of its axioms."""
    config = load_config(config_path)
    merged = merge_config_with_args(
        config, m=m, p=p, f=f, s=s, samples=samples, seed=seed
    )
    ab = biquandle_from(merged)
    order, budget = ab.field.order, merged["samples"]
    sampled = order**2 > budget or (
        merged.get("m") is not None and order**3 * int(merged["m"]) ** 2 > budget
    )
    if sampled and seed is None and "seed" not in config.get("run", {}):
        raise click.UsageError("sampled checks need --seed or run.seed in the config")
    doc: dict[str, Any] = {
        "field": str(ab.field),
        "order": ab.field.order,
        "s": str(ab.s),
        "type": ab.type,
    }
    if ab.field.order**3 <= merged["samples"]:
        doc["axioms"] = check_biquandle_axioms(alexander_table(ab)).to_dict()
    doc["quandle"] = check_quandle_degeneration(
        ab, merged["samples"], merged["seed"]
    ).passed
    if merged.get("m") is not None:
        doc["family"] = check_gfamily_axioms(
            ab, int(merged["m"]), merged["samples"], merged["seed"]
        ).to_dict()
    emit(doc, as_json, render_report(str(ab)))


if __name__ == "__main__":
    cli()
