"""Smoke tests for the Python bindings: exact values end to end."""

from fractions import Fraction

import pytest

import propa


def test_grid_space_metric():
    g = propa.grid_space([3, 4])
    assert g.size == 12
    assert len(g) == 12
    assert g.kind == propa.SpaceKind.grid
    assert g.dist(0, 11) == (3 - 1) + (4 - 1)
    assert g.diameter == 5
    assert g.grid_coords(11) == [2, 3]
    assert g.ball(0, 1) == [0, 1, 4]


def test_tree_and_graph_factories():
    t = propa.tree_space(2, 2)
    assert t.size == 7
    assert t.dist(3, 5) == 4
    c4 = propa.from_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert c4.dist(0, 2) == 2
    with pytest.raises(propa.ValidationError):
        propa.from_graph(3, [(0, 1)])  # disconnected


def test_cover_statistics_are_exact():
    p7 = propa.grid_space([7])
    cover = propa.Cover([[0, 1, 2, 3, 4, 5], [1, 2, 3, 4, 5, 6]], [2, 3])
    propa.validate_cover(p7, cover)
    assert propa.multiplicity(p7, cover) == 2
    assert propa.mesh(p7, cover) == 5
    stats = propa.cover_stats(p7, cover)
    assert stats.ball_lebesgue_global == 2
    assert stats.min_location == 3
    assert propa.choose_basepoints(p7, cover.elements) == [2, 3]


def test_measures_cross_as_fractions():
    p7 = propa.grid_space([7])
    cover = propa.Cover([[0, 1, 2, 3, 4, 5], [1, 2, 3, 4, 5, 6]], [2, 3])
    e = propa.eta(p7, cover, 1, 3)
    assert e.at(0) == Fraction(1, 2)
    assert isinstance(e.at(0), Fraction)
    assert e.mass() == 1
    z = propa.zeta(p7, cover, 1, 3)
    assert dict(z.entries) == {2: Fraction(1, 2), 3: Fraction(1, 2)}
    d = propa.l1_distance(propa.xi_uniform([1, 2]), propa.xi_uniform([2, 3]))
    assert d == Fraction(1)


def test_witness_report_round_numbers():
    p12 = propa.grid_space([12])
    cover = propa.interval_cover(p12, 3)
    rep = propa.witness_report(p12, cover, propa.WitnessParams(4, 1))
    assert rep.multiplicity == 2
    assert rep.measured_sup_zeta == Fraction(1, 4)
    assert rep.measured_sup_zeta <= rep.measured_sup_eta + propa.BOUND_TOLERANCE
    assert rep.bound_final == pytest.approx(propa.theoretical_bound(2, 1, 4))
    assert rep.nesting_ok is True
    assert rep.integer_scaling_ok is True
    assert propa.integer_scaling_check(p12, cover, 4)


def test_preconditions_surface_as_exceptions():
    p12 = propa.grid_space([12])
    net = propa.greedy_net_cover(p12, 1)
    with pytest.raises(propa.PreconditionError):
        propa.witness_report(p12, net, propa.WitnessParams(50, 1))


def test_dimension_queries():
    p5 = propa.grid_space([5])
    assert propa.dim_exact_tiny(p5, propa.DimQuery(1, 2)) == 1
    assert propa.dim_exact_tiny(p5, propa.DimQuery(1, 4)) == 0
    est = propa.dim_upper(propa.grid_space([12]), propa.DimQuery(2, 7))
    assert est.upper == 1
    assert est.witness_cover is not None
    none = propa.dim_upper(p5, propa.DimQuery(1, 2))
    assert none.upper is None


def test_documents_round_trip():
    p12 = propa.grid_space([12])
    cover = propa.interval_cover(p12, 3)
    doc = propa.cover_doc(p12, cover)
    space2, cover2 = propa.parse_cover_doc(doc)
    assert propa.cover_doc(space2, cover2) == doc
    rows = propa.bound_curve(p12, [(2, cover)], 1)
    csv = propa.bound_curve_csv(rows)
    assert csv.startswith("n,m,bound,measured_sup_eta,measured_sup_zeta,sup_pair_x,sup_pair_y\n")
    assert propa.bound_curve_csv(rows) == csv
