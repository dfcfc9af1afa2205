"""Candidacy, classification, and lattice arithmetic for nodal K3 codes."""

import pytest

from nodalcodes.families import extended_kummer, k8_code
from nodalcodes.k3lattice import (
    WrongResidue,
    classify_k3_codes,
    discriminant_group,
    is_potential_k3_code,
    lattice_from_code,
    length_bound_check,
    mod8_existence,
    smith_normal_form,
)


def test_named_codes_are_candidates():
    ok, reason = is_potential_k3_code(extended_kummer(), 4)
    assert ok, reason
    ok, reason = is_potential_k3_code(k8_code(), 8)
    assert ok, reason


def test_kummer_fails_wrong_degree_class():
    ok, _ = is_potential_k3_code(extended_kummer(), 6)
    assert not ok


def test_classification_small_nu():
    assert len(classify_k3_codes(6, 6)) == 1
    assert len(classify_k3_codes(7, 6)) == 2
    assert len(classify_k3_codes(15, 6)) == 2


def test_smith_normal_form_divisibility():
    gram = [[2, 1, 0], [1, 2, 0], [0, 0, 4]]
    diag = smith_normal_form(gram)
    assert len(diag) == 3
    prod = 1
    for i in range(len(diag) - 1):
        assert diag[i + 1] % diag[i] == 0
    for d in diag:
        prod *= d
    assert prod == 12  # |det|


def test_discriminant_group_of_kummer_lattice():
    lat = lattice_from_code(extended_kummer(), 4)
    assert lat.scale_exponent == 0
    disc = discriminant_group(lat)
    det = _integer_det(lat.gram)
    assert disc.order == abs(det)
    assert disc.length <= len(lat.gram)


def _integer_det(gram):
    from fractions import Fraction

    n = len(gram)
    work = [[Fraction(x) for x in row] for row in gram]
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if work[r][col]), None)
        if piv is None:
            return 0
        if piv != col:
            work[col], work[piv] = work[piv], work[col]
            det = -det
        det *= work[col][col]
        inv = 1 / work[col][col]
        for r in range(col + 1, n):
            f = work[r][col] * inv
            if f:
                work[r] = [a - f * b for a, b in zip(work[r], work[col])]
    assert det.denominator == 1
    return int(det)


def test_length_bound_check():
    out = length_bound_check(extended_kummer(), 4)
    assert out["ok"]
    assert out["bound"] == 5
    assert out["equality"] == out["equality_expected"]


def test_mod8_existence_residues():
    assert mod8_existence("t13", 10) is True
    assert mod8_existence("t13", 2) is False
    assert mod8_existence("t15", 14) is True
    assert mod8_existence("t15", 6) is False
    with pytest.raises(WrongResidue):
        mod8_existence("t13", 4)
    with pytest.raises(WrongResidue):
        mod8_existence("t15", 2)
    with pytest.raises(ValueError):
        mod8_existence("t14", 6)
