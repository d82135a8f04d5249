import pytest

from hilbquant.exactalg import coefficient_field, ratfunc_eq
from hilbquant.minors import (
    extremal_pair_check,
    extremal_pair_tuples,
    extremal_pair_value,
    minor_check,
    minor_diagonalization_check,
    schur_eigen_check,
    vanishing_check,
)
from hilbquant.surface import Root


def test_extremal_pair_tuples():
    (row, split_row, k_row), (column, split_column, k_column) = extremal_pair_tuples(3, 2, 1, 3)
    assert row == ((3,), (), ())
    assert split_row == ((2,), (), (1,))
    assert column == ((1, 1, 1), (), ())
    assert split_column == ((1, 1), (), (1,))
    assert (k_row, k_column) == (2, -2)


def test_extremal_pair_value(cf1):
    # tau = 2 t1 on the A_1 surface
    assert ratfunc_eq(extremal_pair_value(1, 1, cf1), 4 * cf1.t1 ** 2)
    assert ratfunc_eq(extremal_pair_value(2, 1, cf1), -2 * (2 * cf1.t1) ** 4)


@pytest.mark.parametrize('a,b', [(0, 1), (1, 1), (2, 1), (1, 2)])
def test_schur_tensors_are_eigenvectors(a, b):
    ok, witness = schur_eigen_check(a, b, coefficient_field(1))
    assert ok, witness


@pytest.mark.parametrize('m', [1, 2])
def test_minor_decomposition(m):
    ok, witness = minor_check(m, 1, Root(1, 2))
    assert ok, witness


@pytest.mark.parametrize('m', [1, 2])
def test_minor_diagonalization(m):
    ok, witness = minor_diagonalization_check(m, 1, Root(1, 2))
    assert ok, witness


@pytest.mark.parametrize('m,n', [(1, 1), (2, 1), (2, 2)])
def test_vanishing_mod_theta(m, n):
    for i in range(1, n + 1):
        for j in range(i + 1, n + 2):
            ok, witness = vanishing_check(m, n, Root(i, j))
            assert ok, witness


@pytest.mark.parametrize('m', [2, 3])
def test_extremal_pairs_on_a1(m):
    ok, witness = extremal_pair_check(m, 1, 1, 2)
    assert ok, witness


@pytest.mark.slow
def test_extremal_pairs_across_a2():
    for i, j in ((1, 2), (1, 3), (2, 3)):
        ok, witness = extremal_pair_check(3, 2, i, j)
        assert ok, witness
