"""Command-line interface.

Subcommands: z (polynomials), class (Grothendieck classes), cone (tangent
cone classes), chi (Euler characteristic tables), count (raw point-count
reports), verify (cross-check suites).  Exit codes: 0 ok, 1 verification
failure, 2 usage or parse error, 3 budget exceeded, 4 oracle inconsistency.
"""

from __future__ import annotations

import csv
import functools
import io
import json
import sys

import click

from . import grothendieck as gr
from . import motivic, pointcount, tangentcone, tutte, verify
from .errors import (
    EdgeNotFoundError,
    ExactDivisionError,
    InvalidArgumentError,
    InvalidParameterError,
    NotPolynomialCountError,
    PottsError,
    ResourceLimitError,
)
from .multigraph import FamilySpec, MultiGraph, banana, chain_bananas, chain_polygons, parse_edge_list, polygon

_EXIT_CODES = (
    (ResourceLimitError, 3),
    (NotPolynomialCountError, 4),
    (ExactDivisionError, 4),
    (InvalidParameterError, 2),
    (EdgeNotFoundError, 2),
    (InvalidArgumentError, 2),
    (PottsError, 1),
)


def _exits(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except PottsError as exc:
            for klass, code in _EXIT_CODES:
                if isinstance(exc, klass):
                    click.echo(f"error: {exc}", err=True)
                    sys.exit(code)
            raise

    return wrapper


FAMILIES = ("polygon", "banana", "chain-polygon", "chain-banana")


def _family_graph(family: str, m: int, k: int, n: int) -> MultiGraph:
    if family == "polygon":
        return polygon(m + 1)
    if family == "banana":
        return banana(m + 1)
    if family == "chain-polygon":
        return chain_polygons(FamilySpec(m, k, n))
    if family == "chain-banana":
        return chain_bananas(FamilySpec(m, k, n))
    raise InvalidParameterError(f"unknown family {family!r}")


def _input_graph(file, family, m, k, n) -> MultiGraph:
    if (file is None) == (family is None):
        raise click.UsageError("give exactly one of --file or --family")
    if file is not None:
        g = parse_edge_list(file.read())
    else:
        if m is None:
            raise click.UsageError("--family needs --m")
        g = _family_graph(family, m, k, n)
    if g.edge_count > tutte.DEFAULT_EDGE_BUDGET:
        raise ResourceLimitError(
            f"{g.edge_count} edges exceeds the symbolic budget of "
            f"{tutte.DEFAULT_EDGE_BUDGET}"
        )
    return g


def _parse_primes(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(p) for p in text.split(","))
    except ValueError as exc:
        raise click.UsageError(f"malformed prime list {text!r}") from exc


def _parse_grid(text: str, minimum: int = 0) -> list[int]:
    """Grid argument: "3", "1,2,5", or "0..4"."""
    try:
        if ".." in text:
            lo, hi = text.split("..")
            values = list(range(int(lo), int(hi) + 1))
        else:
            values = [int(x) for x in text.split(",")]
    except ValueError as exc:
        raise click.UsageError(f"malformed grid {text!r}") from exc
    if any(v < minimum for v in values):
        raise click.UsageError(f"grid {text!r} goes below {minimum}")
    return values


@click.group()
def cli():
    """Exact partition polynomials of multigraphs, Grothendieck classes of
    their zero loci, and motivic invariants, with a finite-field counting
    oracle."""


WHICH = {
    "z": tutte.tutte_delcon,
    "z_tilde": tutte.normalized_tutte,
    "phi": tutte.forest_poly,
    "psi": tutte.forest_complement_poly,
    "p_leading": tutte.leading_part,
    "q_reduced": tutte.reduced_leading_part,
}


@cli.command("z")
@click.option("--file", type=click.File("r"), default=None, help="Graph edge-list file.")
@click.option("--family", type=click.Choice(FAMILIES), default=None)
@click.option("--m", type=int, default=None)
@click.option("--k", type=int, default=0)
@click.option("--N", "n", type=int, default=1)
@click.option("--which", type=click.Choice(sorted(WHICH)), default="z")
@click.option("--format", "fmt", type=click.Choice(("text", "json")), default="text")
@_exits
def cmd_z(file, family, m, k, n, which, fmt):
    """Print a graph polynomial in canonical text form."""
    g = _input_graph(file, family, m, k, n)
    poly = WHICH[which](g)
    if fmt == "text":
        click.echo(poly.render())
    else:
        click.echo(json.dumps({"which": which, "rendering": poly.render()}))


def _family_class(family, m, k, n, fixed_q):
    if family == "polygon":
        return gr.polygon_class_fixed_q(m) if fixed_q else gr.polygon_class(m)
    if family == "banana":
        return gr.banana_class_fixed_q(m) if fixed_q else gr.banana_class(m)
    spec = FamilySpec(m, k, n)
    if not fixed_q:
        raise click.UsageError(
            "chained families only have a fixed-q closed form; pass --fixed-q"
        )
    if family == "chain-polygon":
        return gr.chain_polygon_class_fixed_q(spec)
    return gr.chain_banana_class_fixed_q(spec)


def _oracle_class(graph: MultiGraph, fixed_q: bool):
    z = tutte.tutte_delcon(graph)
    if fixed_q:
        return pointcount.fixed_q_class(z, graph.edge_count)
    return pointcount.complement_class(z, graph.edge_count + 1)


@cli.command("class")
@click.option("--family", type=click.Choice(FAMILIES), required=True)
@click.option("--m", type=int, required=True)
@click.option("--k", type=int, default=0)
@click.option("--N", "n", type=int, default=1)
@click.option("--fixed-q", is_flag=True, default=False)
@click.option("--oracle", is_flag=True, default=False, help="Re-derive by point counting and compare.")
@_exits
def cmd_class(family, m, k, n, fixed_q, oracle):
    """Grothendieck class of a family member's hypersurface complement."""
    cls = _family_class(family, m, k, n, fixed_q)
    doc = {
        "family": family,
        "m": m,
        "k": k,
        "N": n,
        "fixed_q": fixed_q,
        "class_T": list(cls.coeffs),
        "rendering": cls.render(),
    }
    if oracle:
        counted = _oracle_class(_family_graph(family, m, k, n), fixed_q)
        if counted != cls:
            raise NotPolynomialCountError(
                f"closed form {cls} disagrees with counted class {counted}"
            )
        doc["oracle"] = {"match": True, "class_T": list(counted.coeffs)}
    click.echo(json.dumps(doc))


@cli.command("cone")
@click.option("--family", type=click.Choice(("polygon", "banana")), required=True)
@click.option("--m", type=int, required=True)
@click.option("--oracle", is_flag=True, default=False)
@_exits
def cmd_cone(family, m, oracle):
    """Tangent-cone complement class of a family member."""
    if family == "polygon":
        cls = tangentcone.polygon_cone_class(m)
    else:
        cls = tangentcone.banana_cone_class(m)
    doc = {
        "family": family,
        "m": m,
        "class_T": list(cls.coeffs),
        "rendering": cls.render(),
    }
    if oracle:
        counted = tangentcone.v_class(_family_graph(family, m, 0, 1))
        if counted != cls:
            raise NotPolynomialCountError(
                f"closed form {cls} disagrees with counted class {counted}"
            )
        doc["oracle"] = {"match": True, "class_T": list(counted.coeffs)}
    click.echo(json.dumps(doc))


CHI_COLUMNS = (
    "m",
    "k",
    "N",
    "edges",
    "class_at_T=-2",
    "chi_c_locus",
    "closed_form",
    "agree",
)


@cli.command("chi")
@click.option("--family", type=click.Choice(("chain-polygon", "chain-banana")), required=True)
@click.option("--m", "m_grid", default="0..4", help='Grid: "2", "0..4", or "1,3".')
@click.option("--k", "k_grid", default="0..3")
@click.option("--N", "n_grid", default="1..4")
@click.option("--format", "fmt", type=click.Choice(("csv", "json")), default="csv")
@_exits
def cmd_chi(family, m_grid, k_grid, n_grid, fmt):
    """Compactly supported Euler characteristics over a parameter grid."""
    row_fn = (
        motivic.chain_polygon_chi_table_row
        if family == "chain-polygon"
        else motivic.chain_banana_chi_table_row
    )
    rows = [
        row_fn(FamilySpec(m, k, n))
        for m in _parse_grid(m_grid)
        for k in _parse_grid(k_grid)
        for n in _parse_grid(n_grid, minimum=1)
    ]
    if fmt == "json":
        click.echo(json.dumps({"family": family, "rows": rows}))
        return
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(CHI_COLUMNS)
    for row in rows:
        writer.writerow([row[c] for c in CHI_COLUMNS])
    click.echo(buf.getvalue(), nl=False)


@cli.command("count")
@click.option("--file", type=click.File("r"), default=None)
@click.option("--family", type=click.Choice(FAMILIES), default=None)
@click.option("--m", type=int, default=None)
@click.option("--k", type=int, default=0)
@click.option("--N", "n", type=int, default=1)
@click.option("--primes", default=None, help="Comma-separated sample primes.")
@click.option("--check", "check_prime", type=int, default=None, help="Reserved check prime.")
@click.option("--q", "q0", type=int, default=None, help="Count the fixed-q slice at this q.")
@_exits
def cmd_count(file, family, m, k, n, primes, check_prime, q0):
    """Count complement points over sample primes and interpolate the class."""
    g = _input_graph(file, family, m, k, n)
    z = tutte.tutte_delcon(g)
    if q0 is None:
        dim = g.edge_count + 1
        counter = lambda p: pointcount.count_complement(z, dim, p)
        sample_primes = _parse_primes(primes) if primes else None
    else:
        dim = g.edge_count
        counter = lambda p: pointcount.count_fixed_q(z, q0, dim, p)
        sample_primes = (
            _parse_primes(primes)
            if primes
            else pointcount.default_primes(dim, skip_two=True)
        )
    report = pointcount.count_report(counter, dim, sample_primes, check_prime)
    click.echo(json.dumps(report.to_json()))


@cli.command("verify")
@click.option(
    "--suite",
    type=click.Choice(tuple(verify.SUITES) + ("all",)),
    default="all",
)
@click.option("--max-dim", type=int, default=5, help="Largest ambient dimension the oracle checks enumerate.")
@_exits
def cmd_verify(suite, max_dim):
    """Run a cross-check suite; exit 1 if any check fails."""
    checks = verify.run_suite(suite, max_dim)
    failed = [c for c in checks if not c["ok"]]
    click.echo(
        json.dumps(
            {
                "suite": suite,
                "max_dim": max_dim,
                "passed": len(checks) - len(failed),
                "failed": len(failed),
                "checks": checks,
            }
        )
    )
    if failed:
        sys.exit(1)


def main():
    cli(prog_name="potts")


if __name__ == "__main__":
    main()
