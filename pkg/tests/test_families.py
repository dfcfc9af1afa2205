"""Named code families and shortening catalogs."""

import pytest

from nodalcodes.codes import invariant_key
from nodalcodes.families import (
    barth_codes,
    extended_kummer,
    k3_maximal_codes,
    k8_code,
    k8_shortening_catalog,
    kummer_shortening_catalog,
    quintic_code,
    reed_muller1,
    repeated_simplex,
    segre_code,
    sextic_candidates,
    simplex,
    strata_counts,
    two_partition_code,
    QUINTIC_ROWS,
)


def test_simplex_and_reed_muller_parameters():
    assert (simplex(5).length, simplex(5).dimension) == (31, 5)
    rm = reed_muller1(4)
    assert (rm.length, rm.dimension) == (16, 5)
    assert rm.weight_enumerator().counts == {0: 1, 8: 30, 16: 1}
    rs = repeated_simplex(2, 3)
    assert rs.weight_enumerator().counts == {0: 1, 8: 7}


def test_extended_kummer_shape():
    bc = extended_kummer()
    assert (bc.nu, bc.dim_extended, bc.dim_strict) == (16, 6, 5)
    assert bc.strict.weight_enumerator().counts == {0: 1, 8: 30, 16: 1}


def test_kummer_catalog_counts():
    catalog, strata = kummer_shortening_catalog()
    assert len(catalog) == 12
    assert len(strata) == 34
    counts = strata_counts(strata)
    assert [counts.get(nu, 0) for nu in range(17)] == [
        1, 1, 1, 1, 1, 1, 2, 2, 3, 3, 5, 4, 4, 2, 1, 1, 1,
    ]


def test_k8_catalog_counts():
    bc = k8_code()
    assert (bc.nu, bc.dim_extended, bc.dim_strict) == (16, 6, 5)
    catalog, strata = k8_shortening_catalog()
    assert len(catalog) == 15
    assert all(entry.code.nu <= 16 for entry in catalog)


def test_quintic_rows_realizable():
    for row, (n, k, a16, a20) in QUINTIC_ROWS.items():
        named = quintic_code(row)
        counts = named.code.weight_enumerator().counts
        assert named.code.dimension == k
        assert named.code.effective_length() == n
        assert counts.get(16, 0) == a16 and counts.get(20, 0) == a20


def test_two_partition_and_segre_codes():
    tp = two_partition_code(6)
    assert (tp.length, tp.dimension) == (15, 5)
    sg = segre_code(6)
    assert (sg.length, sg.dimension) == (45, 5)


def test_sextic_candidate_counts():
    assert len(sextic_candidates(65)) == 3
    assert len(sextic_candidates(64)) == 7
    with pytest.raises(ValueError):
        sextic_candidates(63)


def test_sextic_64_bcd_pairwise_inequivalent():
    by_name = {c.name: c.code for c in sextic_candidates(64)}
    b, c, d = by_name["(b)"], by_name["(c)"], by_name["(d)"]
    # identical enumerators, yet the coordinate-signature invariant
    # separates all three classes (a full search is unnecessary).
    assert b.weight_enumerator().counts == c.weight_enumerator().counts
    assert len({invariant_key(b), invariant_key(c), invariant_key(d)}) == 3


def test_barth_codes_shape():
    bc, strict = barth_codes()
    assert (bc.nu, bc.dim_extended) == (65, 13)
    assert strict.dimension == 12
    assert strict.weight_enumerator().counts == {0: 1, 24: 390, 32: 3055, 40: 650}


def test_k3_maximal_codes_by_degree():
    for d in (2, 4, 6, 8):
        entries = k3_maximal_codes(d)
        assert entries
    with pytest.raises(ValueError):
        k3_maximal_codes(3)
