"""Command-line surface: classify, spectrum, susy, sweep, diagram."""

from __future__ import annotations

import json
import os
import random
import sys
from dataclasses import dataclass
from fractions import Fraction

import click

from . import __version__
from .algebra import (
    AlgebraParams,
    ExistenceViolation,
    InadmissibleParams,
    new_params,
    parse_rational,
)
from .spectrum import (
    NotPeriodic,
    classify3,
    classify_oracle,
    degeneracy_pattern,
    detect_period,
    expected_prefix,
    susy_window,
)
from .susy import WindowViolation, build_hierarchy, check_interlacing, \
    projection_shift_identity, verify_sqm

SCHEMA_VERSION = 1
EXIT_INVALID = 2
EXIT_VERIFY_FAIL = 3


def default_truncation() -> int:
    env = os.environ.get("CEXT_OSC_DEFAULT_TRUNCATION")
    return int(env) if env else 60


def _collect_params(lam, alpha0, alpha1, alphas):
    if alphas:
        head = [parse_rational(a) for a in alphas]
        if len(head) != lam - 1:
            raise InadmissibleParams(
                f"--alpha given {len(head)} times, lambda={lam} needs {lam - 1}"
            )
        return new_params(lam, head)
    head = [parse_rational(alpha0)]
    if lam >= 3:
        if alpha1 is None:
            raise InadmissibleParams("--alpha1 required for lambda >= 3")
        head.append(parse_rational(alpha1))
    if lam > 3:
        raise InadmissibleParams(
            f"lambda={lam} needs {lam - 1} parameters; use repeated --alpha"
        )
    return new_params(lam, head)


def _base_report(p: AlgebraParams) -> dict:
    return {
        "schema": SCHEMA_VERSION,
        "tool_version": __version__,
        "lambda": p.lam,
        "parameters": {"alphas": [str(a) for a in p.alphas]},
    }


def _groups_json(p: AlgebraParams, count: int) -> list[dict]:
    pat = degeneracy_pattern(p, count)
    return [
        {"energy": str(e), "indices": list(idx)} for e, idx in pat.groups
    ]


def classification_report(p: AlgebraParams, count: int = 30) -> dict:
    """Full classification report; oracle descriptor for lambda != 3."""
    rep = _base_report(p)
    oracle = classify_oracle(p, count)
    rep["degeneracy_groups"] = _groups_json(p, count)
    rep["descriptor"] = {
        "multiplicities": list(oracle.multiplicities),
        "index_order": list(oracle.index_order),
    }
    if p.lam == 3:
        t = classify3(p)
        rep["spectrum_type"] = {
            "label": t.label,
            "family": t.family,
            "variant": t.variant,
            "indices": {"m": t.m, "n": t.n},
        }
        rep["oracle_agrees"] = expected_prefix(t, count) == oracle
    else:
        rep["spectrum_type"] = None
    try:
        period = detect_period(p, max(count, 3 * p.lam))
        rep["period"] = {
            "omegas": [str(w) for w in period.omegas],
            "Omega": str(period.big_omega),
            "ground_order": list(period.ground_order),
        }
    except NotPeriodic:
        rep["period"] = None
    rep["susy_window"] = susy_window(p)
    return rep


def _fail_invalid(exc: Exception) -> None:
    click.echo(f"error: {exc}", err=True)
    sys.exit(EXIT_INVALID)


def param_options(fn):
    fn = click.option("--alpha0", default="0", show_default=True,
                      help="alpha_0 as an exact rational 'p/q'")(fn)
    fn = click.option("--alpha1", default=None,
                      help="alpha_1 as an exact rational 'p/q'")(fn)
    fn = click.option("--alpha", "alphas", multiple=True,
                      help="full head parameter list (repeat lambda-1 times)")(fn)
    fn = click.option("--lambda", "lam", type=int, default=3, show_default=True,
                      help="cyclic group order")(fn)
    return fn


@click.group()
@click.version_option(version=__version__)
def main():
    """Spectra of cyclic-group-extended oscillator Hamiltonians."""


@main.command()
@param_options
@click.option("--levels", "count", type=int, default=30, show_default=True)
@click.option("--format", "fmt", type=click.Choice(["json", "text"]), default="json")
def classify(alpha0, alpha1, alphas, lam, count, fmt):
    """Classify the spectrum type of a parameter point."""
    try:
        p = _collect_params(lam, alpha0, alpha1 if alpha1 is not None else "0", alphas)
    except (InadmissibleParams, ExistenceViolation) as exc:
        _fail_invalid(exc)
    rep = classification_report(p, count)
    if fmt == "json":
        click.echo(json.dumps(rep, indent=2))
    else:
        label = rep["spectrum_type"]["label"] if rep["spectrum_type"] else "(no named taxonomy)"
        click.echo(f"alphas = ({', '.join(str(a) for a in p.alphas)})")
        click.echo(f"type: {label}")
        click.echo(f"multiplicities: {rep['descriptor']['multiplicities']}")
        click.echo(f"susy window: {rep['susy_window']}")


@main.command()
@param_options
@click.option("--count", type=int, default=12, show_default=True)
def spectrum(alpha0, alpha1, alphas, lam, count):
    """Print the level table: index, subspace, exact and float energy."""
    try:
        p = _collect_params(lam, alpha0, alpha1 if alpha1 is not None else "0", alphas)
    except (InadmissibleParams, ExistenceViolation) as exc:
        _fail_invalid(exc)
    click.echo(f"{'n':>4} {'sub':>4} {'energy':>12} {'float':>14}")
    for n in range(count):
        e = p.energy(n)
        click.echo(f"{n:>4} {n % p.lam:>4} {str(e):>12} {float(e):>14.6f}")


@main.command()
@param_options
@click.option("--truncation", type=int, default=None, help="matrix truncation K")
@click.option("--tol", type=float, default=1e-12, show_default=True)
def susy(alpha0, alpha1, alphas, lam, truncation, tol):
    """Build and verify the supersymmetric hierarchy at a parameter point."""
    trunc = truncation or default_truncation()
    try:
        p = _collect_params(lam, alpha0, alpha1 if alpha1 is not None else "0", alphas)
    except (InadmissibleParams, ExistenceViolation) as exc:
        _fail_invalid(exc)
    try:
        hier = build_hierarchy(p, trunc)
    except WindowViolation as exc:
        _fail_invalid(exc)
    rep = verify_sqm(hier, tol)
    interlaced = check_interlacing(hier, trunc - p.lam)
    proj = projection_shift_identity(hier, tol)
    out = _base_report(p)
    out["susy"] = {
        "omegas": [str(w) for w in hier.omegas],
        "ground_energies": [str(e) for e in hier.ground_energies],
        "max_residual": rep.max_residual,
        "relations_pass": rep.all_pass,
        "hierarchy_shift_exact": rep.hierarchy_shift_exact,
        "interlacing": interlaced,
        "projection_shift_identity": proj,
        "truncation": trunc,
        "tol": tol,
    }
    click.echo(json.dumps(out, indent=2))
    if not (rep.all_pass and interlaced and proj):
        sys.exit(EXIT_VERIFY_FAIL)


def _grid_points(spec: str):
    parts = spec.split(",")
    if len(parts) != 2:
        raise InadmissibleParams("grid spec must be 'a0min:a0max:step,a1min:a1max:step'")
    axes = []
    for part in parts:
        pieces = part.split(":")
        if len(pieces) != 3:
            raise InadmissibleParams(f"bad grid axis {part!r}")
        lo, hi, step = (parse_rational(x) for x in pieces)
        if step <= 0:
            raise InadmissibleParams("grid step must be positive")
        vals = []
        v = lo
        while v <= hi:
            vals.append(v)
            v += step
        axes.append(vals)
    for a0 in axes[0]:
        for a1 in axes[1]:
            yield a0, a1


@main.command()
@click.option("--grid", default=None, help="a0min:a0max:step,a1min:a1max:step")
@click.option("--random", "n_random", type=int, default=None, help="number of random points")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--levels", "count", type=int, default=30, show_default=True)
def sweep(grid, n_random, seed, count):
    """Classify many lambda=3 points, JSON-lines output plus a summary line."""
    from .spectrum import random_admissible_params

    if (grid is None) == (n_random is None):
        click.echo("error: give exactly one of --grid / --random", err=True)
        sys.exit(EXIT_INVALID)
    if grid is not None:
        try:
            points = list(_grid_points(grid))
        except InadmissibleParams as exc:
            _fail_invalid(exc)
    else:
        rng = random.Random(seed)
        points = [
            tuple(random_admissible_params(rng).alphas[:2]) for _ in range(n_random)
        ]
    histogram: dict[str, int] = {}
    disagreements = 0
    for a0, a1 in points:
        line = {"alpha0": str(a0), "alpha1": str(a1)}
        try:
            p = new_params(3, [a0, a1])
        except (InadmissibleParams, ExistenceViolation) as exc:
            line["error"] = str(exc)
            click.echo(json.dumps(line))
            continue
        t = classify3(p)
        agrees = expected_prefix(t, count) == classify_oracle(p, count)
        line["label"] = t.label
        line["oracle_agrees"] = agrees
        histogram[t.label] = histogram.get(t.label, 0) + 1
        if not agrees:
            disagreements += 1
        click.echo(json.dumps(line))
    summary = {
        "summary": True,
        "points": len(points),
        "labels": dict(sorted(histogram.items())),
        "oracle_disagreements": disagreements,
    }
    click.echo(json.dumps(summary))
    if disagreements:
        sys.exit(EXIT_VERIFY_FAIL)


@dataclass(frozen=True)
class DiagramSpec:
    """Geometry of a level diagram: one column per spectrum, exact energies."""

    columns: tuple[tuple[tuple[int, Fraction], ...], ...]
    column_names: tuple[str, ...]
    ticks: tuple[Fraction, ...]
    title: str = ""


def diagram_spec(p: AlgebraParams, count: int = 18, susy_mode: bool = False) -> DiagramSpec:
    lam = p.lam
    if susy_mode:
        hier = build_hierarchy(p, max(3 * count, 2 * lam))
        cols = tuple(
            tuple((n, hier.diagonals[mu][n]) for n in range(count))
            for mu in range(lam + 1)
        )
        names = tuple(f"H({mu})" for mu in range(lam + 1))
    else:
        cols = tuple(
            tuple((lam * k + mu, p.energy(lam * k + mu)) for k in range(count))
            for mu in range(lam)
        )
        names = tuple(f"F{mu}" for mu in range(lam))
    lo = min(e for col in cols for _, e in col)
    hi = max(e for col in cols for _, e in col)
    ticks = []
    v = lo
    while v <= hi:
        ticks.append(v)
        v += lam
    if susy_mode:
        title = "supersymmetric hierarchy"
    elif lam == 3:
        title = classify3(p).label
    else:
        title = ""
    return DiagramSpec(columns=cols, column_names=names, ticks=tuple(ticks),
                       title=title)


def render_svg(spec: DiagramSpec) -> str:
    lo = min(e for col in spec.columns for _, e in col)
    hi = max(e for col in spec.columns for _, e in col)
    span = float(hi - lo) or 1.0
    width_col, bar, margin, height = 80, 50, 70, 480
    top, bottom = 30, height - 40

    def y(e: Fraction) -> float:
        return bottom - (float(e - lo) / span) * (bottom - top)

    ncol = len(spec.columns)
    width = margin + ncol * width_col + 20
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width}" height="{height}" font-family="sans-serif" font-size="11">',
        f'<line x1="{margin - 20}" y1="{top - 10}" x2="{margin - 20}" '
        f'y2="{bottom + 5}" stroke="black"/>',
    ]
    if spec.title:
        out.append(
            f'<text x="{width / 2:.0f}" y="16" text-anchor="middle" '
            f'font-weight="bold">{spec.title}</text>')
    for tick in spec.ticks:
        ty = y(tick)
        out.append(
            f'<line x1="{margin - 25}" y1="{ty:.1f}" x2="{margin - 15}" '
            f'y2="{ty:.1f}" stroke="black"/>')
        out.append(
            f'<text x="{margin - 30}" y="{ty + 4:.1f}" text-anchor="end">{tick}</text>')
    for c, (col, name) in enumerate(zip(spec.columns, spec.column_names)):
        x0 = margin + c * width_col
        out.append(
            f'<text x="{x0 + bar / 2}" y="{bottom + 25}" text-anchor="middle">{name}</text>')
        top_y = min(y(e) for _, e in col)
        out.append(
            f'<line x1="{x0}" y1="{top_y - 12:.1f}" x2="{x0 + bar}" '
            f'y2="{top_y - 12:.1f}" stroke="black" stroke-dasharray="4 3"/>')
        for idx, e in col:
            ly = y(e)
            out.append(
                f'<line x1="{x0}" y1="{ly:.1f}" x2="{x0 + bar}" y2="{ly:.1f}" '
                f'stroke="black" stroke-width="1.5"/>')
            out.append(
                f'<text x="{x0 + bar + 4}" y="{ly + 4:.1f}">{idx}</text>')
    out.append("</svg>")
    return "\n".join(out)


def render_ascii(spec: DiagramSpec) -> str:
    energies = sorted({e for col in spec.columns for _, e in col}, reverse=True)
    colw = 10
    lines = [" " * 10 + "".join(f"{name:^{colw}}" for name in spec.column_names)]
    for e in energies:
        cells = []
        for col in spec.columns:
            hits = [idx for idx, ce in col if ce == e]
            cells.append(f"--{hits[0]}--".center(colw) if hits else " " * colw)
        lines.append(f"{str(e):>9} " + "".join(cells).rstrip())
    return "\n".join(lines)


@main.command()
@param_options
@click.option("--levels", "count", type=int, default=18, show_default=True,
              help="levels drawn per column")
@click.option("--out", type=click.Path(), default=None, help="write SVG here")
@click.option("--ascii", "ascii_mode", is_flag=True, help="print an ASCII diagram")
@click.option("--susy", "susy_mode", is_flag=True,
              help="draw the hierarchy members instead of the Fock columns")
def diagram(alpha0, alpha1, alphas, lam, count, out, ascii_mode, susy_mode):
    """Emit a level diagram (SVG file or ASCII on stdout)."""
    try:
        p = _collect_params(lam, alpha0, alpha1 if alpha1 is not None else "0", alphas)
        spec = diagram_spec(p, count, susy_mode)
    except (InadmissibleParams, ExistenceViolation, WindowViolation) as exc:
        _fail_invalid(exc)
    if ascii_mode:
        click.echo(render_ascii(spec))
        return
    if out is None:
        click.echo(render_svg(spec))
        return
    with open(out, "w", encoding="utf-8") as fh:
        fh.write(render_svg(spec))
    click.echo(f"wrote {out}")


if __name__ == "__main__":
    main()
