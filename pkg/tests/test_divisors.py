import pytest

from hilbquant.divisors import (
    Divisor,
    DivisorOperators,
    classical_multiplication,
    commutator_check,
    degree_scaling_check,
    divisor_operators,
    fixed_point_eigenvalue,
    golden_check,
)
from hilbquant.errors import InvalidSelector
from hilbquant.exactalg import matrices_equal, matrix, ratfunc_eq
from hilbquant.fock import fock_space
from hilbquant.golden import golden_classical, golden_matrices
from hilbquant.surface import surface


def test_divisor_selectors():
    assert Divisor.parse('D', 2) == Divisor('D')
    assert Divisor.parse(' omega:2 ', 2) == Divisor('omega', 2)
    assert Divisor('omega', 1).label() == 'omega:1'


@pytest.mark.parametrize('text', ['omega:3', 'omega:0', 'omega:x', 'H', ''])
def test_invalid_selectors(text):
    with pytest.raises(InvalidSelector):
        Divisor.parse(text, 2)


def test_fixed_point_eigenvalues(a1):
    t1 = a1.cf.t1
    assert ratfunc_eq(fixed_point_eigenvalue(a1, ((1,), ()), Divisor('D')), 0)
    # c((2)) = wL, so D acts by -wL_1 = -2 t1
    assert ratfunc_eq(fixed_point_eigenvalue(a1, ((2,), ()), Divisor('D')), -2 * t1)
    omega_at_p1 = a1.restriction(a1.omega(1), 1)
    assert ratfunc_eq(fixed_point_eigenvalue(a1, ((1,), (1,)), Divisor('omega', 1)),
                      omega_at_p1 + a1.restriction(a1.omega(1), 2))


def test_vacuum_operator_is_zero():
    op = DivisorOperators(0, 1, 'e').operator(Divisor('D'))
    assert op.terms == []
    assert op.assemble().shape == (1, 1)
    assert op.assemble().is_zero_matrix


def test_classical_parts_on_two_points():
    ops = DivisorOperators(2, 1, 'e')
    cf = surface(1).cf
    for name, rows in golden_classical().items():
        got = ops.operator(Divisor.parse(name, 1)).normalized().classical
        assert matrices_equal(got, matrix(rows, cf))


def test_divisor_operators_on_two_points():
    ok, witness = golden_check()
    assert ok, witness
    assert set(golden_matrices()) == {'omega:1', 'D'}


def test_quantum_terms_have_divisor_shapes():
    ops = DivisorOperators(2, 1, 'e')
    assert {t.shape for t in ops.operator(Divisor('D')).terms} == {'dlog_q'}
    assert {t.shape for t in ops.operator(Divisor('omega', 1)).terms} == {'dlog_s'}
    assert all(t.alpha is not None for t in ops.operator(Divisor('omega', 1)).terms)


def test_classical_multiplication_is_label_independent():
    source, target = fock_space(1, 'e'), fock_space(1, 'omega')
    P = source.change_of_basis(target, 2)
    in_e = classical_multiplication(2, 1, Divisor('D'), 'e')
    in_omega = classical_multiplication(2, 1, Divisor('D'), 'omega')
    assert matrices_equal(P * in_e, in_omega * P)


@pytest.mark.parametrize('m,n', [(1, 1), (2, 1), (3, 1), (2, 2)])
def test_divisor_operators_commute(m, n):
    ok, witness = commutator_check(m, n)
    assert ok, witness


@pytest.mark.slow
@pytest.mark.parametrize('m,n', [(4, 1), (3, 2)])
def test_divisor_operators_commute_large(m, n):
    ok, witness = commutator_check(m, n)
    assert ok, witness


@pytest.mark.parametrize('m,n', [(1, 1), (2, 1), (2, 2)])
def test_root_multiples_scale(m, n):
    ok, witness = degree_scaling_check(m, n, 3)
    assert ok, witness


def test_all_divisor_operators():
    ops = divisor_operators(2, 2, 'e')
    assert set(ops) == {'D', 'omega:1', 'omega:2'}
    assert ops['D'].assemble().shape == (len(fock_space(2, 'e').basis(2)),) * 2
