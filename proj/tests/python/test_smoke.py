from fractions import Fraction

import pytest

import confdesign as cd

E8 = [
    [2, -1, 0, 0, 0, 0, 0, 0],
    [-1, 2, -1, 0, 0, 0, 0, 0],
    [0, -1, 2, -1, 0, 0, 0, -1],
    [0, 0, -1, 2, -1, 0, 0, 0],
    [0, 0, 0, -1, 2, -1, 0, 0],
    [0, 0, 0, 0, -1, 2, -1, 0],
    [0, 0, 0, 0, 0, -1, 2, 0],
    [0, 0, -1, 0, 0, 0, 0, 2],
]


def test_kac_det_degree4():
    content, factors = cd.kac_det(4)
    assert content != 0
    assert dict(factors)["c"] >= 1
    assert "5*c + 22" in dict(factors)


def test_d6_values():
    assert cd.d6(24) == 196884
    assert cd.d6(Fraction(1, 2)) == 1


def test_diophant_and_table():
    rows = cd.diophant()
    assert len(rows) == 37
    assert (Fraction(808, 35), 63428) in rows
    t = cd.table1()
    assert [r[0] for r in t][:2] == [8, 16]
    assert t[4][2] is None


def test_trace_v2_module():
    t = cd.trace(2)
    assert set(t) == {"beta", "alpha"}


def test_characters():
    lead, coeffs = cd.vacuum_character(Fraction(1, 2), 6)
    assert lead == -1
    x = cd.extremal_character(24, 4)
    assert x["coeffs"][2] == 196884
    assert cd.design_strength(24)[0] == 11
    assert cd.a1_identity(8)


def test_root_sums():
    assert cd.root_sum("E", 8, 4) == 0
    assert cd.root_sum("B", 4, 6) == 23


def test_e8_shell():
    d = cd.lattice_design(E8, 2, t_max=9)
    assert (d["size"], d["t"], d["failed_degree"]) == (240, 7, 8)
    assert d["witness_sum"] != 0


def test_domain_errors_raise():
    with pytest.raises(ValueError):
        cd.extremal_character(12)
