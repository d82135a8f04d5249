import pytest
from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from hilbquant.exactalg import coefficient_field, matrix
from hilbquant.residues import allowed_eigenvalue, allowed_eigenvalues, qde_residues, rational_matrix, residue_check, spectrum


def test_allowed_eigenvalues():
    assert allowed_eigenvalues(2, 1) == {QQ(0), QQ(3)}
    assert allowed_eigenvalues(1, 1) == {QQ(0)}
    with pytest.raises(ValueError):
        allowed_eigenvalues(2, 0)


@pytest.mark.parametrize('k, values, rejected', [
    (0, [0, 2, 6, 12], [1, 3, 4, -2]),
    (-1, [-1, 0, 3, 8], [1, 2, -2]),
    (-3, [-4, -3, 0, 5], [-5, 1, 2]),
])
def test_allowed_eigenvalue_without_grade_bound(k, values, rejected):
    assert all(allowed_eigenvalue(QQ(v), 2, k) for v in values)
    assert not any(allowed_eigenvalue(QQ(v), 2, k) for v in rejected)
    assert not allowed_eigenvalue(QQ(1, 2), 2, k)


def test_allowed_eigenvalue_with_grade_bound():
    assert allowed_eigenvalue(QQ(3), 2, 1)
    assert not allowed_eigenvalue(QQ(3), 1, 1)
    assert not allowed_eigenvalue(QQ(2), 2, 1)


def test_spectrum_detects_jordan_blocks():
    eigenvalues, diagonalizable = spectrum(DomainMatrix([[QQ(1), QQ(0)], [QQ(0), QQ(2)]], (2, 2), QQ))
    assert eigenvalues == [QQ(1), QQ(2)]
    assert diagonalizable
    _, diagonalizable = spectrum(DomainMatrix([[QQ(1), QQ(1)], [QQ(0), QQ(1)]], (2, 2), QQ))
    assert not diagonalizable


def test_rational_matrix():
    cf = coefficient_field(1)
    R = rational_matrix(matrix([[3 * cf.theta, cf.zero]], cf), cf)
    assert R.to_list() == [[QQ(3), QQ(0)]]
    assert rational_matrix(matrix([[cf.t1]], cf), cf) is None


def test_two_point_residues_on_a1():
    records = qde_residues(2, 1)
    assert records
    assert all(r.ok for r in records), [r.to_dict() for r in records if not r.ok]
    by_k = {r.k: set(r.eigenvalues) for r in records if r.eigenvalues}
    assert by_k[1] <= {QQ(0), QQ(3)}
    assert by_k[0] <= {QQ(0), QQ(2)}


@pytest.mark.parametrize('m,n', [(1, 1), (3, 1), (2, 2)])
def test_residue_spectra(m, n):
    ok, witness = residue_check(m, n)
    assert ok, witness
