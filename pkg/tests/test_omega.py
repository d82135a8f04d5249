import pytest

from hilbquant.errors import GradeMismatch
from hilbquant.exactalg import diagonal, matrices_equal, ratfunc_eq
from hilbquant.fock import fock_space
from hilbquant.omega import (
    QuantumTerm,
    factorization_check,
    hilb_c2_operator,
    number_operator,
    omega_plus,
    omega_zero,
    punctual_check,
    symmetry_check,
    two_point,
    two_point_vectors,
    vacuum_check,
)
from hilbquant.surface import Root


def test_plane_number_operators():
    cf = fock_space(0).cf
    # basis p_-1(1)^2, p_-2(1): N_k counts parts of size k, weighted by k
    assert matrices_equal(hilb_c2_operator(2, 1), diagonal([cf(2), cf.zero], cf))
    assert matrices_equal(hilb_c2_operator(2, 2), diagonal([cf.zero, cf(2)], cf))


def test_number_operator_is_label_independent():
    space = fock_space(1, 'e')
    N = number_operator(space, 2, 1)
    # p_-1 p_-1 monomials get 2, p_-2 monomials 0
    expected = [2, 0, 2, 2, 0]
    rows = N.to_list()
    for r, value in enumerate(expected):
        assert ratfunc_eq(rows[r][r], value)


def test_omega_zero_terms():
    assert omega_zero(1, 1).terms == []
    ks = sorted(t.k for t in omega_zero(3, 1).terms)
    assert ks == [1, 2, 3]


def test_omega_plus_terms_are_log_shaped():
    op = omega_plus(2, 1)
    assert op.terms
    assert all(t.shape == 'log' and t.alpha == Root(1, 2) for t in op.terms)
    with pytest.raises(ValueError):
        op.terms[0].scalar(op.cf)


def test_dlog_shapes(cf1):
    term = QuantumTerm(Root(1, 2), 2, None, 'dlog_q')
    y = cf1.x ** 2 * cf1.s[0]
    assert ratfunc_eq(term.scalar(cf1), -2 * y / (1 - y))
    assert ratfunc_eq(QuantumTerm(None, 1, None, 'dlog_s').scalar(cf1), -cf1.x / (1 - cf1.x))


@pytest.mark.parametrize('n', [0, 1, 2])
def test_punctual_part_splits_over_fixed_points(n):
    ok, witness = punctual_check(n, 3)
    assert ok, witness


@pytest.mark.parametrize('n', [1, 2])
def test_two_point_symmetry(n):
    ok, witness = symmetry_check(n, 2)
    assert ok, witness


def test_unit_parts_factor_out():
    ok, witness = factorization_check(1, 3)
    assert ok, witness


def test_vacuum_two_point_is_zero():
    assert vacuum_check(1)
    assert vacuum_check(2)
    assert two_point((), (), 1).is_zero()


def test_two_point_parts(cf1):
    space = fock_space(1, 'e')
    key = space.parse('2(e1)')
    value = two_point(key, key, 1, 'e')
    assert set(value.punctual) == {1, 2}
    assert all(root == Root(1, 2) for root, _ in value.nonpunctual)
    assert value.equals(two_point_vectors(space.normalized(key), space.normalized(key)))


def test_two_point_grade_mismatch():
    space = fock_space(1, 'e')
    with pytest.raises(GradeMismatch):
        two_point(space.parse('1(e1)'), (), 1, 'e')
