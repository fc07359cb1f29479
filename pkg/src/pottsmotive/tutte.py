"""The multivariate Tutte polynomial Z_G(q, t) of a multigraph and the
polynomials derived from it: the normalized form, the spanning-forest
(Kirchhoff-type) polynomials, the lowest-degree part and its q-reduced
form, and the connecting/non-connecting split used by the edge-splitting
and edge-doubling class formulas.

Everything here is exact symbolic arithmetic; the subset-sum and the
deletion-contraction routes are kept as independent implementations so each
can serve as the oracle for the other.
"""

from __future__ import annotations

from itertools import combinations

from .errors import InvalidArgumentError, ResourceLimitError
from .mpoly import MPoly, Q, edge_var
from .multigraph import EdgeKind, MultiGraph, component_count, connected_in_subset

DEFAULT_EDGE_BUDGET = 20


def _subset_term(g: MultiGraph, subset) -> MPoly:
    k = component_count(g.vertex_count, [(u, v) for _, u, v in subset])
    term = Q**k
    for eid, _, _ in subset:
        term = term * edge_var(eid)
    return term


def tutte_poly(g: MultiGraph, max_edges: int = DEFAULT_EDGE_BUDGET) -> MPoly:
    """Z_G(q, t) as the sum over edge subsets A of q^k(A) * prod_{e in A} t_e,
    components counted on the full vertex set."""
    if g.edge_count > max_edges:
        raise ResourceLimitError(
            f"{g.edge_count} edges exceeds the enumeration budget of {max_edges}"
        )
    total = MPoly.zero()
    for r in range(g.edge_count + 1):
        for subset in combinations(g.edges, r):
            total = total + _subset_term(g, subset)
    return total


def tutte_delcon(g: MultiGraph) -> MPoly:
    """Z_G(q, t) by deletion-contraction, pivoting on the first regular edge
    when one exists.  Must agree with tutte_poly on every graph."""
    if g.edge_count == 0:
        return Q**g.vertex_count
    pivot = g.edges[0][0]
    for eid, u, v in g.edges:
        if u != v and g.classify_edge(eid) is EdgeKind.REGULAR:
            pivot = eid
            break
    return tutte_delcon(g.delete_edge(pivot)) + edge_var(pivot) * tutte_delcon(
        g.contract_edge(pivot)
    )


def normalized_tutte(g: MultiGraph) -> MPoly:
    """Z_G divided by q^k(G) (exact)."""
    return tutte_delcon(g).divide_exact_by_q_power(g.components())


def _all_forests(g: MultiGraph):
    """All acyclic edge subsets, viewed on the full vertex set."""
    nv = g.vertex_count
    for r in range(g.edge_count + 1):
        for subset in combinations(g.edges, r):
            k = component_count(nv, [(u, v) for _, u, v in subset])
            if k + r == nv:
                yield subset


def _max_forests(g: MultiGraph):
    """Edge subsets that are maximal spanning forests: acyclic with as many
    components as the graph itself."""
    base = g.components()
    nv = g.vertex_count
    for r in range(g.edge_count + 1):
        for subset in combinations(g.edges, r):
            k = component_count(nv, [(u, v) for _, u, v in subset])
            if k == base and k + r == nv:
                yield subset


def forest_poly(g: MultiGraph) -> MPoly:
    """Sum over maximal spanning forests of the product of the forest's edge
    variables (the q = 0 graph polynomial)."""
    total = MPoly.zero()
    for forest in _max_forests(g):
        term = MPoly.const(1)
        for eid, _, _ in forest:
            term = term * edge_var(eid)
        total = total + term
    return total


def forest_poly_from_tutte(g: MultiGraph) -> MPoly:
    """Independent route to forest_poly: normalize Z, set q = 0, then take
    the lowest homogeneous part."""
    sliced = normalized_tutte(g).substitute("q", 0)
    return sliced.lowest_homogeneous_part()


def forest_complement_poly(g: MultiGraph) -> MPoly:
    """Sum over maximal spanning forests of the product of the variables of
    the edges outside the forest."""
    total = MPoly.zero()
    for forest in _max_forests(g):
        inside = {eid for eid, _, _ in forest}
        term = MPoly.const(1)
        for eid, _, _ in g.edges:
            if eid not in inside:
                term = term * edge_var(eid)
        total = total + term
    return total


def forest_complement_from_dual(g: MultiGraph) -> MPoly:
    """forest_complement_poly recovered from forest_poly by the monomial
    reversal t_e -> 1/t_e with denominators cleared."""
    phi = forest_poly(g)
    names = tuple("t" + eid for eid in g.edge_ids())
    pos = {n: i for i, n in enumerate(names)}
    out = {}
    for exps, c in phi.terms.items():
        full = [1] * len(names)
        for name, e in zip(phi.variables, exps):
            full[pos[name]] -= e
        out[tuple(full)] = out.get(tuple(full), 0) + c
    return MPoly(names, out)


def leading_part(g: MultiGraph) -> MPoly:
    """Lowest-degree homogeneous part of Z_G; homogeneous of degree V(G)."""
    return tutte_delcon(g).lowest_homogeneous_part()


def leading_part_by_forests(g: MultiGraph) -> MPoly:
    """Independent route to leading_part: the sum over all spanning forests
    (every acyclic subset contributes degree V, everything else more)."""
    total = MPoly.zero()
    for forest in _all_forests(g):
        total = total + _subset_term(g, forest)
    return total


def reduced_leading_part(g: MultiGraph) -> MPoly:
    """leading_part divided by q^k(G); q no longer divides the result, and
    its q = 0 slice is forest_poly."""
    return leading_part(g).divide_exact_by_q_power(g.components())


def connecting_split(g: MultiGraph, edge_id: str) -> tuple[MPoly, MPoly]:
    """Split the subset sum over A in E - {e} into the part where A connects
    the endpoints of e and the part where it does not.

    With (Zc, Zn) the return value: Z_{G-e} = Zc + Zn and
    Z_{G/e} = Zc + Zn/q, both exactly.
    """
    u, v = g.endpoints(edge_id)
    if u == v:
        raise InvalidArgumentError("the connecting split needs a non-loop edge")
    rest = tuple(e for e in g.edges if e[0] != edge_id)
    connecting = MPoly.zero()
    non_connecting = MPoly.zero()
    for r in range(len(rest) + 1):
        for subset in combinations(rest, r):
            term = _subset_term(g, subset)
            pairs = [(a, b) for _, a, b in subset]
            if connected_in_subset(g.vertex_count, pairs, u, v):
                connecting = connecting + term
            else:
                non_connecting = non_connecting + term
    return connecting, non_connecting


def split_residual_poly(g: MultiGraph, edge_id: str) -> MPoly:
    """(1 - q) * Zc, the defining polynomial (in q and the other edge
    variables) of the residual locus in the edge-splitting class formula;
    equals Z_{G-e} - q * Z_{G/e}."""
    connecting, _ = connecting_split(g, edge_id)
    return (MPoly.const(1) - Q) * connecting


def doubling_residual_poly(g: MultiGraph, edge_id: str) -> MPoly:
    """Z_{G-e} - Z_{G/e} = (q - 1) * Zn / q, the defining polynomial of the
    residual locus in the edge-doubling class formula; identically 0 for a
    loop."""
    u, v = g.endpoints(edge_id)
    if u == v:
        return MPoly.zero()
    return tutte_delcon(g.delete_edge(edge_id)) - tutte_delcon(
        g.contract_edge(edge_id)
    )
