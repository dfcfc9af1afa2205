"""Geometry of the 65-node sextic: nodes, secants, codes, symmetries."""

import pytest

from nodalcodes import barth, dorohall
from nodalcodes.exactalg import GOLDEN, golden


def test_polynomial_is_quartic_ambient_sextic():
    f = barth.barth_poly()
    assert f.nvars == 4
    assert f.degree() == 6


def test_node_table_kinds_and_verification():
    nodes = barth.node_table()
    assert len(nodes) == 65
    kinds = {}
    for node in nodes:
        kinds[node.label.kind] = kinds.get(node.label.kind, 0) + 1
        assert barth.verify_node(node.point)
    assert kinds == {"A": 15, "B": 30, "C": 20}


def test_verify_node_rejects_non_singular_point():
    with pytest.raises((barth.NotOnSurface, barth.NotSingular)):
        barth.verify_node([GOLDEN(1), GOLDEN(2), GOLDEN(0), GOLDEN(0)])


def test_secant_census_row_structure():
    census = barth.secant_census()
    rows = census["rows"]
    # each row counts the 64 secants through a node by type
    assert all(sum(row) == 64 for row in rows.values())
    assert census["orbit_sizes"] == {"A": 15, "B": 30, "C": 20}
    assert len(census["contained_lines"]) == 6
    for line in census["contained_lines"]:
        assert len(line) == 5


def test_contained_lines_meet_in_fifteen_nodes():
    lines = barth.contained_lines()
    assert len(lines) == 6
    covered = set()
    for line in lines:
        covered.update(line)
    # the six lines pairwise share nodes: 15 nodes in total, all one orbit
    assert len(covered) == 15
    kinds = {barth.node_table()[i].label.kind for i in covered}
    assert len(kinds) == 1


def test_node_graph_parameters():
    g = barth.node_graph()
    assert g.order == 65 and g.size == 325
    assert set(g.degrees()) == {10}
    arr = dorohall.intersection_array(g)
    assert arr == {"b": [10, 6, 4], "c": [1, 2, 5]}


def test_geometric_code_identities():
    out = barth.graph_code_identities()
    assert out["pair_sums_count"] == 325
    assert out["sphere_words_count"] == 65
    assert out["weight24_total"] == 390
    assert out["sphere_span_equals_strict"]
    assert out["pair_sums_weight_24"]
    assert out["pair_sums_in_strict"]
    assert out["weight24_partition"]
    assert out["max_independent_sets_are_planes"]


def test_geometry_reproduces_stored_code():
    from nodalcodes.families import barth_codes

    geo = barth.code_from_geometry()
    stored, _ = barth_codes()
    assert geo.extended.same_span(stored.extended)


def test_determinantal_identity_constant():
    c, ok = barth.determinantal_check()
    assert ok
    tau = golden()
    assert c == GOLDEN(10800) - GOLDEN(7200) * tau


def test_segre_subcode_realizations():
    out = barth.segre_realizations()
    assert out["subcode_count"] == 65
    assert out["realization_product_identity"]
    assert out["realization_irreducible_identity"]


def test_decomposition_census():
    assert barth.decomposition_census() == (1690, 1300, 390)


def test_automorphism_counts():
    perms = barth.admissible_permutations()
    assert len(perms) == 60
    assert barth.automorphism_count() == 120


def test_rotation_generators_act_on_nodes():
    g = barth.node_graph()
    for perm in barth.rotation_generator_permutations():
        assert sorted(perm) == list(range(65))
        for u in range(65):
            for v in g.neighbours(u):
                assert g.has_edge(perm[u], perm[v])
