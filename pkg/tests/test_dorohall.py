"""Distance-regular graphs on 65 vertices and their codes."""

import pytest

from nodalcodes import dorohall
from nodalcodes.dorohall import (
    BudgetExhausted,
    conjugation_vertex_action,
    doro_frobenius,
    find_isomorphism,
    group_preserves,
    independence_number,
    independent_count,
    intersection_array,
    is_locally_petersen,
    kneser,
    max_independent_sets,
    petersen,
    projective_semilinear_group,
    quadric_graph,
    spheres_code,
)


def test_petersen_basics():
    g = petersen()
    assert g.order == 10 and g.size == 15
    assert set(g.degrees()) == {3}
    assert intersection_array(g) == {"b": [3, 2], "c": [1, 1]}
    assert g == kneser(5, 2)


def test_petersen_independent_sets():
    g = petersen()
    assert independence_number(g) == 4
    assert independent_count(g, 4) == 5
    assert len(max_independent_sets(g)) == 5


def test_independence_budget():
    with pytest.raises(BudgetExhausted):
        independent_count(doro_frobenius()[0], 12, budget=100)


def test_projective_semilinear_group_order():
    group, frob = projective_semilinear_group()
    assert len(group) == 15600
    assert frob in group


def test_frobenius_graph_is_distance_regular():
    g, group = doro_frobenius()
    assert g.order == 65 and g.size == 325
    assert intersection_array(g) == {"b": [10, 6, 4], "c": [1, 2, 5]}
    assert is_locally_petersen(g)
    assert len(group) == 15600


def test_quadric_graph_matches_frobenius():
    q = quadric_graph()
    assert q.order == 65 and q.size == 325
    assert intersection_array(q) == {"b": [10, 6, 4], "c": [1, 2, 5]}
    iso = find_isomorphism(doro_frobenius()[0], q)
    assert iso is not None


def test_petersen_kneser_isomorphism_and_refutation():
    iso = find_isomorphism(petersen(), kneser(5, 2))
    assert iso is not None
    assert find_isomorphism(petersen(), kneser(6, 2)) is None


def test_spheres_code_rows_have_weight_24():
    g, _ = doro_frobenius()
    code = spheres_code(g)
    assert code.length == 65
    for v in range(g.order):
        dist = g.distances_from(v)
        assert sum(1 for d in dist if d == 3) == 24


def test_group_preserves_graph_and_code():
    g, group = doro_frobenius()
    sample = group[:: len(group) // 40]
    actions = [conjugation_vertex_action(g, [elem])[0] for elem in sample]
    assert group_preserves(g, actions, spheres_code(g))


def test_serialize_shape():
    g = petersen()
    lines = g.serialize().splitlines()
    assert len(lines) == 10
    assert all(len(line) == 10 and set(line) <= {"0", "1"} for line in lines)
