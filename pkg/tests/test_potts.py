from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from jonesrep.arith import DomainError, ParameterSpec, quantum_integer
from jonesrep.potts import (
    PlanarGraph,
    coloring_sum,
    connected_graphs,
    edge_skein,
    oracle_parameters,
    planar_graph,
    potts_partition,
)


def test_single_edge_closed_form():
    # Z = n(n-1) + n y
    for p in oracle_parameters():
        g = planar_graph(2, [(0, 1)], [Fraction(3)])
        res = potts_partition(g, p)
        n = res.n
        assert res.z_skein == n * (n - 1) + 3 * n
        assert res.agree


def test_isolated_vertex():
    p = ParameterSpec.rational(1)
    g = PlanarGraph(1, (), ((),))
    assert potts_partition(g, p).z_skein == p.field.coerce(4)


@pytest.mark.parametrize("p", oracle_parameters(), ids=["t=1", "n=9"])
def test_all_small_graphs_agree(p):
    for v, edges in connected_graphs(4, 4):
        g = planar_graph(v, edges, [Fraction(1 + i, 2) for i in range(len(edges))])
        assert potts_partition(g, p).agree


weights = st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=5), min_size=6, max_size=6)


@given(weights)
def test_k4_random_weights(ws):
    p = oracle_parameters()[0]
    edges = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
    assert potts_partition(planar_graph(4, edges, ws), p).agree


@given(st.fractions(max_denominator=7), st.fractions(max_denominator=7), st.fractions(max_denominator=7))
def test_edge_skein_affine(y1, y2, lam):
    # the edge replacement is affine in the weight
    p = ParameterSpec.generic()
    a, b = edge_skein(y1, p), edge_skein(y2, p)
    mix = edge_skein(lam * y1 + (1 - lam) * y2, p)
    for key in ("through", "cut"):
        assert mix[key] == lam * a[key] + (1 - lam) * b[key]


def test_edge_skein_values():
    p = ParameterSpec.generic()
    e = edge_skein(0, p)
    assert e["through"] == p.field.one / quantum_integer(2, p)
    assert edge_skein(1, p)["through"] == p.field.zero


def test_generic_skips_oracle():
    res = potts_partition(planar_graph(2, [(0, 1)], [2]), ParameterSpec.generic())
    assert res.oracle_skipped and res.agree is None


def test_nonplanar_rejected():
    edges = [(a, b) for a in range(3) for b in range(3, 6)]
    with pytest.raises(DomainError):
        planar_graph(6, edges, [1] * 9)


def test_json_roundtrip():
    g = planar_graph(3, [(0, 1), (1, 2), (0, 2)], [2, Fraction(1, 2), 3])
    assert PlanarGraph.from_json(g.to_json()) == g
    assert g.is_planar_embedding()


def test_coloring_sum_triangle():
    p = ParameterSpec.rational(1)
    g = planar_graph(3, [(0, 1), (1, 2), (0, 2)], [1, 1, 1])
    # all weights 1: every coloring counts once
    assert coloring_sum(g, 4, p) == p.field.coerce(64)
