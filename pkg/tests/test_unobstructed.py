"""Evaluation-map ranks at the nodes of the named surfaces."""

import pytest

from nodalcodes import unobstructed
from nodalcodes.unobstructed import (
    EXCLUDED_SURFACES,
    SURFACE_NAMES,
    UnknownSurface,
    evaluation_rank,
    gk_planes_verify,
    line_verify,
    node_orbit,
    surface,
    togliatti_projection_verify,
)


def test_surface_names_cover_catalog():
    assert set(SURFACE_NAMES) == {
        "cayley",
        "cefalu",
        "segre6",
        "segre8",
        "segre10",
        "goryunov",
        "gk6",
        "gk8",
        "gk10",
        "barth",
    }
    assert EXCLUDED_SURFACES == ("togliatti",)


def test_unknown_surface_raises():
    with pytest.raises(UnknownSurface):
        surface("togliatti")
    with pytest.raises(UnknownSurface):
        node_orbit("quartic")


def test_node_orbit_counts():
    expected = {"cayley": 4, "cefalu": 16, "segre6": 10, "goryunov": 15, "gk6": 15}
    for name, count in expected.items():
        orbit = node_orbit(name)
        assert len(orbit) == count
        assert len(set(orbit)) == count


def test_small_evaluation_ranks():
    assert evaluation_rank("cayley") == (4, 4, True)
    assert evaluation_rank("cefalu") == (16, 16, True)
    assert evaluation_rank("segre6") == (10, 10, True)
    assert evaluation_rank("goryunov") == (15, 15, True)


def test_obstructed_case_detected():
    rank, nodes, ok = evaluation_rank("segre10")
    assert (rank, nodes, ok) == (84, 126, False)


def test_gk_plane_orbits():
    out = gk_planes_verify()
    assert out["orbit_sizes"] == (45, 15)
    assert out["nodes_per_plane"] == 4
    assert out["planes_per_node"] == 12
    assert out["flags"] == 180
    assert out["node_free_orbit_clean"]


def test_line_avoids_nodes_and_planes():
    out = line_verify()
    assert out["containment"]
    assert out["node_secants_checked"] == 105
    assert out["node_secants_disjoint"]
    assert out["planes_checked"] == 60
    assert out["plane_free"]


def test_projection_matrix_identity_with_single_anomaly():
    out = togliatti_projection_verify()
    assert out["identity"]
    assert out["constant"] == 3
    assert out["anomalous_entry"] == "x5*x6"
    assert out["anomaly_factor"] == 4
    assert out["determinant_degree"] == 5
