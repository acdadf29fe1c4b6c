"""Smoke tests for the pybind11 module."""

import pytest

sc = pytest.importorskip("suzuki_cartier")


def test_params():
    p = sc.make_params(1)
    assert (p.m, p.q0, p.q, p.g) == (1, 2, 8, 14)
    assert (p.vy, p.vz, p.vh1, p.vh2) == (8, 10, 12, 13)
    with pytest.raises(ValueError):
        sc.make_params(0)


def test_formulas():
    assert [sc.a_number(m) for m in (1, 2, 3)] == [5, 30, 204]
    assert sc.nu_g(1) == 9
    assert sc.lattice_count(2) == sc.a_number(2) == 30
    assert sc.semigroup_count(1) == 14
    assert not sc.superspecial(1)
    assert sc.decomposition_bound(sc.a_number(1)) == 5


def test_point_counts():
    assert sc.point_count(1, 1) == 65
    assert sc.point_count(1, 4) == 5889
    assert sc.point_count_naive(1, 4) == 5889
    assert sc.is_maximal_over(1, 4)
    assert not sc.is_maximal_over(1, 2)


def test_basis():
    basis = sc.basis_monomials(1)
    assert len(basis) == 14
    assert basis[0] == (0, 0, 0, 0, 0)
    poles = [entry[4] for entry in basis]
    assert poles == sorted(poles) and len(set(poles)) == 14


def test_matrix_and_profile():
    m = sc.cartier_matrix(1)
    assert (m.rows, m.cols) == (14, 14)
    assert sc.rank(m) == 9
    assert sc.a_number_from_matrix(m) == 5
    assert sc.rank_profile(m) == [9, 4, 0]
    assert m == sc.cartier_matrix(1, path="oracle")


def test_final_types():
    fixed = sc.derive_constraints(14, [9, 4, 0])
    assert fixed[14] == 9 and fixed[9] == 4 and fixed[1] == 0
    assert len(sc.final_types(14, [9, 4, 0])) == 5


def test_matrix_io(tmp_path):
    m = sc.cartier_matrix(1)
    path = tmp_path / "m1.szcm"
    sc.save_matrix(path, 1, m)
    loaded_m, loaded = sc.load_matrix(path)
    assert loaded_m == 1
    assert loaded == m
