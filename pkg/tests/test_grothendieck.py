import pytest

from pottsmotive import grothendieck as gr
from pottsmotive import pointcount, tutte
from pottsmotive.classpoly import T, ZERO, ClassPoly, RationalClass
from pottsmotive.errors import ExactDivisionError, InvalidArgumentError
from pottsmotive.multigraph import FamilySpec, banana, disjoint_union, polygon
from pottsmotive.tangentcone import POLYGON_CONE_SEEDS

TRIANGLE_CLASS = T**4 + 2 * T**3 - 2 * T**2 - 2 * T + 2
TWO_BANANA_CLASS = T**3 + T**2 - 1


def test_class_ring_examples():
    assert T * T == T**2
    assert (T + 1) ** 2 - T**2 == 2 * T + 1
    assert ClassPoly((1, 2, 1)) == (T + 1) ** 2
    assert str(TRIANGLE_CLASS) == "T^4 + 2*T^3 - 2*T^2 - 2*T + 2"


def test_scale_T_power():
    assert (T + 1).scale_T_power(2) == T**3 + T**2
    assert ZERO.scale_T_power(3) == ZERO


def test_div_exact_examples():
    assert (T**2 - 1).divexact(T - 1) == T + 1
    assert ((T - 1) ** 3 - ClassPoly.const(-1)).divexact(T) == T**2 - 3 * T + 3
    with pytest.raises(ExactDivisionError):
        (T**2 + 1).divexact(T - 1)


def test_eval_int():
    assert TRIANGLE_CLASS.eval_int(2) == 22
    assert TRIANGLE_CLASS.eval_int(1) == 1


def test_rational_class():
    r = RationalClass(T**2 - 1, T - 1)
    assert r.is_polynomial and r.as_class() == T + 1
    nonpoly = RationalClass(-(T - 1), T)
    assert not nonpoly.is_polynomial
    with pytest.raises(ExactDivisionError):
        nonpoly.as_class()
    assert RationalClass(T * (T - 1), T) == RationalClass(T - 1)


# -- seed classes and one-step formulas -------------------------------------------


def test_polygon_seed_values():
    assert gr.polygon_class(0) == T**2
    assert gr.polygon_class(1) == TWO_BANANA_CLASS
    assert gr.polygon_class(2) == TRIANGLE_CLASS


def test_split_step_triangle_from_oracle_inputs():
    # loop -> 2-banana -> triangle family, over the 2-banana with edge "2"
    g = banana(2)
    z_g = gr.graph_class(g)
    z_con = gr.graph_class(g.contract_edge("2"))
    z_del = pointcount.complement_class(
        tutte.tutte_delcon(g.delete_edge("2")), g.edge_count
    )
    residual = pointcount.locus_complement_class(
        [tutte.split_residual_poly(g, "2")], g.edge_count
    )
    assert residual == T**2 - T
    assert gr.split_step(z_g, z_con, z_del, residual) == TRIANGLE_CLASS


def test_split_step_two_path_family():
    # single edge: the contraction is a vertex, the deletion two vertices,
    # the residual class is zero, and the result is the 2-path class T^3
    assert gr.split_step(T**2, T, T, ZERO) == T**3
    assert gr.split_step(ZERO, ZERO, ZERO, ZERO) == ZERO


def test_split_step_two_path_matches_oracle():
    path2 = banana(1).split_edge("1", 2)
    assert gr.graph_class(path2) == T**3


def test_residual_class_from_seeds():
    seeds = gr.SplitSeeds(T**2, TWO_BANANA_CLASS, TRIANGLE_CLASS)
    z_del = T**2  # single edge in ambient dimension 2
    assert gr.residual_class_from_seeds(seeds, z_del) == T**2 - T
    assert gr.residual_class_from_seeds(gr.SplitSeeds(ZERO, ZERO, ZERO), ZERO) == ZERO
    # single-edge family: zero residual
    assert gr.residual_class_from_seeds(gr.SplitSeeds(T, T**2, T**3), T) == ZERO


def test_split_recursion_seeds_and_square():
    seeds = gr.POLYGON_SEEDS
    for m in range(3):
        assert gr.split_recursion(seeds, m) == [T**2, TWO_BANANA_CLASS, TRIANGLE_CLASS][m]
    square_class = gr.split_recursion(seeds, 3)
    assert square_class == gr.polygon_class(3)
    assert square_class == gr.graph_class(polygon(4))


def test_split_recursion_matches_closed_form():
    for seeds in (gr.POLYGON_SEEDS, POLYGON_CONE_SEEDS):
        for m in range(13):
            assert gr.split_closed_term(seeds, m) == gr.split_recursion(seeds, m)


def test_split_closed_form_polygon_coefficients():
    a, b, c = gr.split_closed_form(gr.POLYGON_SEEDS)
    assert a == RationalClass(-(T - 1), T)
    assert b.as_class() == 2 * T**2 - T
    assert c == RationalClass(-((T - 1) ** 2) * (T + 1), T)


def test_split_closed_form_cone_coefficients():
    a, b, c = gr.split_closed_form(POLYGON_CONE_SEEDS)
    assert a.as_class() == T - 1
    assert b.as_class() == 2 * T**2
    assert c.as_class() == -(T**2 - 1)


def test_split_closed_form_zero_seeds():
    a, b, c = gr.split_closed_form(gr.SplitSeeds(ZERO, ZERO, ZERO))
    assert a.as_class() == ZERO and b.as_class() == ZERO and c.as_class() == ZERO


def test_double_step():
    residual = pointcount.locus_complement_class(
        [tutte.doubling_residual_poly(banana(1), "1")], 1
    )
    assert residual == T - 1
    assert gr.double_step(T**2, residual) == TWO_BANANA_CLASS
    assert gr.double_step(T**2, ZERO) == T**3  # loop case: plain T multiple
    assert gr.double_step(ZERO, ZERO) == ZERO


def test_double_closed_form_banana():
    seeds = gr.DoubleSeeds(T**2, TWO_BANANA_CLASS)
    for m in range(9):
        expected = ClassPoly.monomial(m) + (T - 1) * (T + 1) ** (m + 1)
        assert gr.double_closed_form(seeds, m) == expected
        assert gr.banana_class(m) == expected
    assert gr.double_closed_form(seeds, 0) == T**2
    assert gr.double_closed_form(seeds, 1) == TWO_BANANA_CLASS


def test_double_closed_form_fixed_q_banana():
    seeds = gr.DoubleSeeds(T, T**2 + T + 1)
    for m in range(9):
        assert gr.double_closed_form(seeds, m) == (T + 1) ** (m + 1) - ClassPoly.monomial(m)
        assert gr.banana_class_fixed_q(m) == gr.double_closed_form(seeds, m)


def test_double_recurrence():
    seeds = gr.DoubleSeeds(T**2, TWO_BANANA_CLASS)
    for m in range(8):
        assert gr.double_closed_form(seeds, m + 2) == (2 * T + 1) * gr.double_closed_form(
            seeds, m + 1
        ) - T * (T + 1) * gr.double_closed_form(seeds, m)


def test_polygon_class_fixed_q_values():
    assert gr.polygon_class_fixed_q(0) == T
    assert gr.polygon_class_fixed_q(1) == T**2 + T + 1
    assert gr.polygon_class_fixed_q(2) == T**3 + 2 * T**2 - 2


def test_fixed_q_recursion_also_holds():
    seeds = gr.SplitSeeds(
        gr.polygon_class_fixed_q(0),
        gr.polygon_class_fixed_q(1),
        gr.polygon_class_fixed_q(2),
    )
    for m in range(9):
        assert gr.split_recursion(seeds, m) == gr.polygon_class_fixed_q(m)


def test_chain_classes():
    assert gr.chain_polygon_class_fixed_q(FamilySpec(2, 0, 1)) == T**3 + 2 * T**2 - 2
    assert gr.chain_polygon_class_fixed_q(FamilySpec(1, 1, 2)) == (
        (T**2 + T + 1) ** 2
    ).scale_T_power(1)
    assert gr.chain_banana_class_fixed_q(FamilySpec(1, 0, 2)) == (T**2 + T + 1) ** 2


def test_chain_classes_match_oracle():
    spec = FamilySpec(1, 1, 2)
    from pottsmotive.multigraph import chain_polygons

    z = tutte.tutte_delcon(chain_polygons(spec))
    assert pointcount.fixed_q_class(z, spec.edge_count) == gr.chain_polygon_class_fixed_q(spec)

    from pottsmotive.multigraph import chain_bananas

    spec_b = FamilySpec(1, 0, 2)
    zb = tutte.tutte_delcon(chain_bananas(spec_b))
    assert pointcount.fixed_q_class(zb, spec_b.edge_count) == gr.chain_banana_class_fixed_q(spec_b)


def test_fibration_reduce():
    assert gr.fibration_reduce(TRIANGLE_CLASS, 3) == T**3 + 2 * T**2 - 2
    for m in range(9):
        assert gr.fibration_reduce(gr.polygon_class(m), m + 1) == gr.polygon_class_fixed_q(m)
        assert gr.fibration_reduce(gr.banana_class(m), m + 1) == gr.banana_class_fixed_q(m)
    assert gr.fibration_reduce(ClassPoly.monomial(4), 4) == ZERO
    with pytest.raises(ExactDivisionError):
        gr.fibration_reduce(T**2 + 1, 2)


def test_disjoint_union_class(two_edges):
    assert gr.disjoint_union_class(T**2, 1, T**2, 1) == T**3
    assert gr.graph_class(two_edges) == T**3
    loops = disjoint_union(polygon(1), polygon(1))
    assert gr.graph_class(loops) == T**3
    # an all-torus factor has fixed-q class 0, so the union class is the
    # plain torus of the combined edge count
    assert gr.disjoint_union_class(T**2, 1, ClassPoly.monomial(2), 2) == ClassPoly.monomial(3)


def test_join_transform():
    assert gr.join_transform(T**2, "append-edge") == T**3
    assert gr.join_transform((T**2 + T + 1) ** 2, "vertex-join") == (T**2 + T + 1) ** 2
    assert gr.join_transform(ZERO, "append-edge") == ZERO
    with pytest.raises(InvalidArgumentError):
        gr.join_transform(T, "glue")


def test_join_against_oracle(triangle):
    from pottsmotive.multigraph import MultiGraph

    tail = MultiGraph(4, triangle.edges + (("4", 0, 3),))
    looped = MultiGraph(3, triangle.edges + (("4", 0, 0),))
    base = gr.graph_class(triangle)
    assert gr.graph_class(tail) == gr.join_transform(base, "append-edge")
    assert gr.graph_class(looped) == gr.join_transform(base, "append-edge")


def test_delcon_identity_check(loop, single_edge, two_banana, triangle):
    for g in (loop, single_edge, two_banana, triangle):
        for eid in g.edge_ids():
            assert gr.delcon_identity_check(g, eid)
