"""Cross-checking suites behind the `verify` CLI subcommand.

Each suite replays the structural identities of one layer of the package on
a small fixed corpus of graphs, using the point-counting oracle wherever a
class is involved, and reports one named pass/fail result per check.  All
checks are deterministic.
"""

from __future__ import annotations

from . import grothendieck as gr
from . import motivic, pointcount, tangentcone, tutte
from .classpoly import T
from .errors import PottsError
from .mpoly import MPoly, Q, edge_var
from .multigraph import (
    EdgeKind,
    FamilySpec,
    MultiGraph,
    banana,
    chain_bananas,
    chain_polygons,
    disjoint_union,
    polygon,
)

LOOP = polygon(1)
SINGLE_EDGE = banana(1)
TWO_BANANA = banana(2)
TRIANGLE = polygon(3)
SQUARE = polygon(4)
PATH_2 = MultiGraph(3, (("1", 0, 1), ("2", 1, 2)))
TWO_EDGES = disjoint_union(SINGLE_EDGE, SINGLE_EDGE)
TWO_LOOPS = disjoint_union(LOOP, LOOP)
TRIANGLE_LOOP = MultiGraph(3, TRIANGLE.edges + (("4", 0, 0),))
TRIANGLE_TAIL = MultiGraph(4, TRIANGLE.edges + (("4", 0, 3),))


def corpus() -> list[tuple[str, MultiGraph]]:
    return [
        ("loop", LOOP),
        ("edge", SINGLE_EDGE),
        ("2-banana", TWO_BANANA),
        ("triangle", TRIANGLE),
        ("square", SQUARE),
        ("path-2", PATH_2),
        ("two-edges", TWO_EDGES),
        ("two-loops", TWO_LOOPS),
        ("3-banana", banana(3)),
        ("triangle-loop", TRIANGLE_LOOP),
        ("triangle-tail", TRIANGLE_TAIL),
        ("polygon-chain-212", chain_polygons(FamilySpec(2, 1, 2))),
        ("banana-chain-102", chain_bananas(FamilySpec(1, 0, 2))),
    ]


def _check(results: list, name: str, fn) -> None:
    try:
        ok, detail = fn()
    except PottsError as exc:
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    results.append({"name": name, "ok": bool(ok), "detail": detail})


def _eq(a, b) -> tuple[bool, str]:
    return (a == b, f"{a} vs {b}" if a != b else "equal")


# -- suite: tutte ---------------------------------------------------------------


def suite_tutte(max_dim: int = 5) -> list[dict]:
    results: list[dict] = []
    for name, g in corpus():
        _check(
            results,
            f"tutte/subset-vs-delcon/{name}",
            lambda g=g: _eq(tutte.tutte_poly(g), tutte.tutte_delcon(g)),
        )
        _check(
            results,
            f"tutte/torus-at-q1/{name}",
            lambda g=g: _eq(
                tutte.tutte_delcon(g).substitute("q", 1),
                _edge_torus_product(g),
            ),
        )
        _check(
            results,
            f"tutte/forest-poly-routes/{name}",
            lambda g=g: _eq(tutte.forest_poly(g), tutte.forest_poly_from_tutte(g)),
        )
        _check(
            results,
            f"tutte/complement-poly-routes/{name}",
            lambda g=g: _eq(
                tutte.forest_complement_poly(g),
                tutte.forest_complement_from_dual(g),
            ),
        )
        _check(
            results,
            f"tutte/leading-part-forests/{name}",
            lambda g=g: _eq(tutte.leading_part(g), tutte.leading_part_by_forests(g)),
        )
        _check(
            results,
            f"tutte/leading-part-degree/{name}",
            lambda g=g: (
                tutte.leading_part(g).is_homogeneous()
                and tutte.leading_part(g).total_degree() == g.vertex_count,
                "homogeneous of degree V",
            ),
        )
        _check(
            results,
            f"tutte/q0-slice-is-forest-poly/{name}",
            lambda g=g: _eq(
                tutte.reduced_leading_part(g).substitute("q", 0),
                tutte.forest_poly(g),
            ),
        )
        for eid in g.edge_ids():
            _check(
                results,
                f"tutte/delcon-edge/{name}/{eid}",
                lambda g=g, e=eid: _eq(
                    tutte.tutte_delcon(g),
                    tutte.tutte_delcon(g.delete_edge(e))
                    + edge_var(e) * tutte.tutte_delcon(g.contract_edge(e)),
                ),
            )
            u, v = g.endpoints(eid)
            if u != v:
                _check(
                    results,
                    f"tutte/connecting-split/{name}/{eid}",
                    lambda g=g, e=eid: _split_identities(g, e),
                )
            if g.classify_edge(eid) is EdgeKind.REGULAR:
                _check(
                    results,
                    f"tutte/leading-delcon/{name}/{eid}",
                    lambda g=g, e=eid: _eq(
                        tutte.leading_part(g),
                        tutte.leading_part(g.delete_edge(e))
                        + edge_var(e) * tutte.leading_part(g.contract_edge(e)),
                    ),
                )
    return results


def _edge_torus_product(g: MultiGraph) -> MPoly:
    out = MPoly.const(1)
    for eid in g.edge_ids():
        out = out * (MPoly.const(1) + edge_var(eid))
    return out


def _split_identities(g: MultiGraph, eid: str):
    zc, zn = tutte.connecting_split(g, eid)
    z_del = tutte.tutte_delcon(g.delete_edge(eid))
    z_con = tutte.tutte_delcon(g.contract_edge(eid))
    ok = (
        z_del == zc + zn
        and Q * z_con == Q * zc + zn
        and tutte.split_residual_poly(g, eid) == z_del - Q * z_con
        and tutte.doubling_residual_poly(g, eid) == (Q - 1) * zn.divide_exact_by_q_power(1)
    )
    return ok, "split identities"


# -- suite: oracle ---------------------------------------------------------------


def suite_oracle(max_dim: int = 5) -> list[dict]:
    results: list[dict] = []
    for name, g in corpus():
        dim = g.edge_count + 1
        if dim > max_dim:
            continue
        z = tutte.tutte_delcon(g)
        _check(
            results,
            f"oracle/complement-plus-zeros/{name}",
            lambda g=g, z=z, d=dim: _eq(
                pointcount.count_complement(z, d, 5)
                + pointcount.count_zero_locus([z], d, 5),
                5**d,
            ),
        )
        _check(
            results,
            f"oracle/f2-count-is-1/{name}",
            lambda z=z, d=dim: _eq(pointcount.count_complement(z, d, 2), 1),
        )
        _check(
            results,
            f"oracle/class-at-1/{name}",
            lambda g=g: _eq(gr.graph_class(g).eval_int(1), 1),
        )
        _check(
            results,
            f"oracle/roundtrip/{name}",
            lambda g=g, z=z, d=dim: _roundtrip(z, d),
        )
        for eid in g.edge_ids():
            _check(
                results,
                f"oracle/delcon-class/{name}/{eid}",
                lambda g=g, e=eid: (
                    gr.delcon_identity_check(g, e),
                    "class deletion-contraction",
                ),
            )
        if g.edge_count + 1 <= max_dim:
            _check(
                results,
                f"oracle/fixed-q-independent/{name}",
                lambda g=g, z=z: _fixed_q_independent(g, z),
            )
    _check(
        results,
        "oracle/seed-loop",
        lambda: _eq(gr.graph_class(LOOP), T**2),
    )
    _check(
        results,
        "oracle/seed-2-banana",
        lambda: _eq(gr.graph_class(TWO_BANANA), T**3 + T**2 - 1),
    )
    _check(
        results,
        "oracle/seed-triangle",
        lambda: _eq(gr.graph_class(TRIANGLE), T**4 + 2 * T**3 - 2 * T**2 - 2 * T + 2),
    )
    return results


def _roundtrip(z: MPoly, dim: int):
    report = pointcount.count_report(
        lambda p: pointcount.count_complement(z, dim, p), dim
    )
    ok = all(report.interpolated.eval_int(p - 1) == n for p, n in report.samples)
    return ok, "interpolation reproduces all samples"


def _fixed_q_independent(g: MultiGraph, z: MPoly):
    for prime in (3, 5, 7):
        counts = {
            pointcount.count_fixed_q(z, q0, g.edge_count, prime)
            for q0 in range(2, prime)
        }
        if len(counts) > 1:
            return False, f"fixed-q counts differ at p={prime}: {sorted(counts)}"
    return True, "independent of the fixed q"


# -- suite: classes ----------------------------------------------------------------


def suite_classes(max_dim: int = 5) -> list[dict]:
    results: list[dict] = []
    seeds = gr.POLYGON_SEEDS
    _check(
        results,
        "classes/polygon-recursion-vs-closed",
        lambda: _eq(
            [gr.split_recursion(seeds, m) for m in range(9)],
            [gr.polygon_class(m) for m in range(9)],
        ),
    )
    _check(
        results,
        "classes/split-closed-term-matches-recursion",
        lambda: _eq(
            [gr.split_closed_term(seeds, m) for m in range(13)],
            [gr.split_recursion(seeds, m) for m in range(13)],
        ),
    )
    cone_seeds = tangentcone.POLYGON_CONE_SEEDS
    _check(
        results,
        "classes/cone-closed-term-matches-recursion",
        lambda: _eq(
            [gr.split_closed_term(cone_seeds, m) for m in range(13)],
            [gr.split_recursion(cone_seeds, m) for m in range(13)],
        ),
    )
    bseeds = gr.DoubleSeeds(T**2, T**3 + T**2 - 1)
    _check(
        results,
        "classes/banana-closed-form",
        lambda: _eq(
            [gr.double_closed_form(bseeds, m) for m in range(9)],
            [gr.banana_class(m) for m in range(9)],
        ),
    )
    _check(
        results,
        "classes/banana-recurrence",
        lambda: (
            all(
                gr.double_closed_form(bseeds, m + 2)
                == (2 * T + 1) * gr.double_closed_form(bseeds, m + 1)
                - T * (T + 1) * gr.double_closed_form(bseeds, m)
                for m in range(9)
            ),
            "order-2 recurrence",
        ),
    )
    _check(
        results,
        "classes/fibration-polygon",
        lambda: _eq(
            [gr.fibration_reduce(gr.polygon_class(m), m + 1) for m in range(9)],
            [gr.polygon_class_fixed_q(m) for m in range(9)],
        ),
    )
    _check(
        results,
        "classes/fibration-banana",
        lambda: _eq(
            [gr.fibration_reduce(gr.banana_class(m), m + 1) for m in range(9)],
            [gr.banana_class_fixed_q(m) for m in range(9)],
        ),
    )
    _check(
        results,
        "classes/disjoint-union-two-edges",
        lambda: _eq(gr.disjoint_union_class(T**2, 1, T**2, 1), T**3),
    )
    _check(
        results,
        "classes/join-transforms",
        lambda: _eq(
            (
                gr.join_transform(T**2, "vertex-join"),
                gr.join_transform(T**2, "bridge-join"),
                gr.join_transform(T**2, "append-edge"),
            ),
            (T**2, T**3, T**3),
        ),
    )
    if max_dim >= 3:
        _check(
            results,
            "classes/residual-from-seeds-vs-oracle",
            lambda: _residual_against_oracle(),
        )
        _check(
            results,
            "classes/doubling-residual-vs-oracle",
            lambda: _doubling_against_oracle(),
        )
    if max_dim >= 4:
        _check(
            results,
            "classes/oracle-two-edges-class",
            lambda: _eq(gr.graph_class(TWO_EDGES), T**3),
        )
        _check(
            results,
            "classes/oracle-two-loops-class",
            lambda: _eq(gr.graph_class(TWO_LOOPS), T**3),
        )
    if max_dim >= 5:
        _check(
            results,
            "classes/chain-banana-oracle",
            lambda: _eq(
                pointcount.fixed_q_class(
                    tutte.tutte_delcon(chain_bananas(FamilySpec(1, 0, 2))), 4
                ),
                gr.chain_banana_class_fixed_q(FamilySpec(1, 0, 2)),
            ),
        )
        _check(
            results,
            "classes/chain-polygon-oracle",
            lambda: _eq(
                pointcount.fixed_q_class(
                    tutte.tutte_delcon(chain_polygons(FamilySpec(1, 1, 2))), 5
                ),
                gr.chain_polygon_class_fixed_q(FamilySpec(1, 1, 2)),
            ),
        )
    return results


def _residual_against_oracle():
    # the loop -> 2-banana -> triangle splitting family sits over the
    # 2-banana with either of its edges
    g = TWO_BANANA
    eid = "2"
    seeds = gr.SplitSeeds(
        gr.graph_class(g.contract_edge(eid)),
        gr.graph_class(g),
        gr.graph_class(g.split_edge(eid, 2)),
    )
    z_del = gr.complement_class(
        tutte.tutte_delcon(g.delete_edge(eid)), g.edge_count
    )
    derived = gr.residual_class_from_seeds(seeds, z_del)
    counted = pointcount.locus_complement_class(
        [tutte.split_residual_poly(g, eid)], g.edge_count
    )
    return _eq(derived, counted)


def _doubling_against_oracle():
    g = SINGLE_EDGE
    eid = "1"
    residual = pointcount.locus_complement_class(
        [tutte.doubling_residual_poly(g, eid)], g.edge_count
    )
    doubled = gr.double_step(gr.graph_class(g), residual)
    return _eq(doubled, gr.graph_class(g.double_edge(eid, 1)))


# -- suite: cone -------------------------------------------------------------------


def suite_cone(max_dim: int = 5) -> list[dict]:
    results: list[dict] = []
    for name, g in corpus():
        _check(
            results,
            f"cone/q0-slice-vs-forests/{name}",
            lambda g=g: (tangentcone.forest_poly_agrees(g), "slice equals forest sum"),
        )
        if g.edge_count + 1 <= max_dim:
            _check(
                results,
                f"cone/complement-difference/{name}",
                lambda g=g: (
                    tangentcone.forest_class_identity_check(g),
                    "cone = component minus slice",
                ),
            )
    _check(
        results,
        "cone/polygon-seeds-oracle",
        lambda: _eq(
            (
                tangentcone.v_class(LOOP),
                tangentcone.v_class(TWO_BANANA),
                tangentcone.v_class(TRIANGLE),
            ),
            (
                tangentcone.POLYGON_CONE_SEEDS.s0,
                tangentcone.POLYGON_CONE_SEEDS.s1,
                tangentcone.POLYGON_CONE_SEEDS.s2,
            ),
        ),
    )
    _check(
        results,
        "cone/polygon-closed-vs-recursion",
        lambda: _eq(
            [
                tangentcone.cone_split_recursion_v(tangentcone.POLYGON_CONE_SEEDS, m)
                for m in range(7)
            ],
            [tangentcone.polygon_cone_class(m) for m in range(7)],
        ),
    )
    _check(
        results,
        "cone/exponential-coefficients",
        lambda: _eq(
            tuple(
                r.as_class()
                for r in tangentcone.cone_closed_form_v(tangentcone.POLYGON_CONE_SEEDS)
            ),
            (T - 1, 2 * T**2, -(T**2 - 1)),
        ),
    )
    _check(
        results,
        "cone/loop-split-scale",
        lambda: _eq(
            tangentcone.v_class(LOOP.split_edge("1", 2)),
            tangentcone.cone_split_scale(tangentcone.v_class(LOOP), 1),
        ),
    )
    _check(
        results,
        "cone/edge-rule-loop",
        lambda: _eq(
            tangentcone.v_class(TRIANGLE_LOOP),
            tangentcone.cone_edge_rule(tangentcone.v_class(TRIANGLE), EdgeKind.LOOP),
        ),
    )
    _check(
        results,
        "cone/edge-rule-bridge",
        lambda: _eq(
            tangentcone.v_class(TRIANGLE_TAIL),
            tangentcone.cone_edge_rule(tangentcone.v_class(TRIANGLE), EdgeKind.BRIDGE),
        ),
    )
    _check(
        results,
        "cone/edge-rule-parallel",
        lambda: _eq(
            tangentcone.v_class(TRIANGLE.double_edge("1", 1)),
            tangentcone.cone_edge_rule(tangentcone.v_class(TRIANGLE), EdgeKind.LOOP),
        ),
    )
    for name, g, eid in (
        ("2-banana", TWO_BANANA, "1"),
        ("triangle", TRIANGLE, "1"),
    ):
        if g.edge_count + 2 <= max_dim + 1:
            _check(
                results,
                f"cone/split-identity/{name}",
                lambda g=g, e=eid: (
                    tangentcone.cone_split_check(g, e),
                    "regular-edge splitting identity",
                ),
            )
    for name, g, eid in (("triangle", TRIANGLE, "1"), ("2-banana", TWO_BANANA, "1")):
        _check(
            results,
            f"cone/component-delcon/{name}",
            lambda g=g, e=eid: _component_delcon(g, e),
        )
    return results


def _component_delcon(g: MultiGraph, eid: str):
    # deletion-contraction for the q-reduced component and for its q = 0
    # slice, both through the oracle, for a regular edge
    dim = g.edge_count
    w_g = tangentcone.w_class(g)
    w_con = tangentcone.w_class(g.contract_edge(eid))
    w_int = pointcount.locus_complement_class(
        [
            tutte.reduced_leading_part(g.delete_edge(eid)),
            tutte.reduced_leading_part(g.contract_edge(eid)),
        ],
        dim,
    )
    ok_w = w_g == (T + 1) * w_int - w_con
    y_del = tutte.reduced_leading_part(g.delete_edge(eid)).substitute("q", 0)
    y_con = tutte.reduced_leading_part(g.contract_edge(eid)).substitute("q", 0)
    y_g = tangentcone.y_class(g)
    y_con_cls = tangentcone.y_class(g.contract_edge(eid))
    y_int = pointcount.locus_complement_class([y_del, y_con], dim - 1)
    ok_y = y_g == (T + 1) * y_int - y_con_cls
    return ok_w and ok_y, "component and slice deletion-contraction"


# -- suite: chi ---------------------------------------------------------------------


def suite_chi(max_dim: int = 5) -> list[dict]:
    results: list[dict] = []

    def _grid(rows_fn):
        bad = []
        for m in range(5):
            for k in range(4):
                for n in range(1, 5):
                    row = rows_fn(FamilySpec(m, k, n))
                    if not row["agree"]:
                        bad.append((m, k, n))
        return not bad, f"disagreements: {bad}" if bad else "all 80 cases agree"

    _check(
        results,
        "chi/polygon-grid",
        lambda: _grid(motivic.chain_polygon_chi_table_row),
    )
    _check(
        results,
        "chi/banana-grid",
        lambda: _grid(motivic.chain_banana_chi_table_row),
    )
    samples = [
        gr.polygon_class(m) for m in range(6)
    ] + [gr.banana_class_fixed_q(m) for m in range(6)]
    _check(
        results,
        "chi/virtual-poincare-at-minus-1",
        lambda: (
            all(
                motivic.virtual_poincare(c).substitute("u", -1)
                == MPoly.const(motivic.chi_c_real(c))
                for c in samples
            ),
            "u = -1 value equals chi_c",
        ),
    )
    _check(
        results,
        "chi/e-polynomial-at-1-1",
        lambda: (
            all(
                motivic.e_polynomial(c).substitute("x", 1).substitute("y", 1)
                == MPoly.const(motivic.chi_complex(c))
                for c in samples
            ),
            "x = y = 1 value equals chi",
        ),
    )
    _check(
        results,
        "chi/ring-homomorphisms",
        lambda: (
            all(
                motivic.chi_c_real(a * b) == motivic.chi_c_real(a) * motivic.chi_c_real(b)
                and motivic.chi_complex(a + b)
                == motivic.chi_complex(a) + motivic.chi_complex(b)
                for a in samples[:4]
                for b in samples[4:8]
            ),
            "products and sums",
        ),
    )
    return results


SUITES = {
    "tutte": suite_tutte,
    "oracle": suite_oracle,
    "classes": suite_classes,
    "cone": suite_cone,
    "chi": suite_chi,
}


def run_suite(name: str, max_dim: int = 5) -> list[dict]:
    if name == "all":
        out = []
        for key in SUITES:
            out.extend(SUITES[key](max_dim))
        return out
    if name not in SUITES:
        raise KeyError(name)
    return SUITES[name](max_dim)
