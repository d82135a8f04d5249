"""Residues of the quantum differential equation along x^k s^alpha = 1."""
from dataclasses import dataclass
from math import isqrt

from sympy import QQ, Dummy, Poly, roots
from sympy.polys.matrices import DomainMatrix

from .divisors import Divisor, DivisorOperators
from .exactalg import as_rational, matrices_equal
from .logger import get_logger

logger = get_logger(__name__)


def allowed_eigenvalues(m: int, k: int) -> set:
    """Residue eigenvalues divided by theta that may occur on grade m, for k > 0."""
    if k <= 0:
        raise ValueError('the residue spectrum for k <= 0 has no grade bound; use allowed_eigenvalue')
    values = {QQ(0)}
    values.update(QQ(l * (k + l + 1)) for l in range(1, m) if l * k < m)
    return values


def allowed_eigenvalue(value, m: int, k: int) -> bool:
    """value is 0 or l(k + l - 1) for an integer l >= 1 when k <= 0; bounded by grade when k > 0."""
    if not value:
        return True
    if k > 0:
        return value in allowed_eigenvalues(m, k)
    if QQ.denom(value) != 1:
        return False
    # l^2 + (k - 1) l - value = 0 with l a positive integer
    disc = (k - 1) ** 2 + 4 * int(QQ.numer(value))
    if disc < 0:
        return False
    root = isqrt(disc)
    return root * root == disc and (1 - k + root) % 2 == 0 and 1 - k + root > 0


@dataclass
class ResidueRecord:
    root: str
    k: int
    divisor: str
    eigenvalues: list
    ok: bool
    reason: str = ''

    def to_dict(self) -> dict:
        return {
            'root': self.root, 'k': self.k, 'divisor': self.divisor,
            'eigenvalues': [str(e) for e in self.eigenvalues], 'ok': self.ok, 'reason': self.reason,
        }


def _residue(op, root, k: int, scale: int = 1):
    selected = [t.matrix for t in op.terms if t.alpha == root and t.k == k]
    if not selected:
        return None
    total = selected[0]
    for A in selected[1:]:
        total = total + A
    return total * op.cf.domain.convert(op.cf(scale)) if scale != 1 else total


def rational_matrix(R, cf):
    """R / theta over QQ, or None when an entry is not constant."""
    rows = []
    for row in R.to_list():
        converted = []
        for entry in row:
            value = as_rational(entry / cf.theta) if entry else QQ(0)
            if value is None:
                return None
            converted.append(value)
        rows.append(converted)
    return DomainMatrix(rows, R.shape, QQ)


def spectrum(R: DomainMatrix):
    """(eigenvalues, diagonalizable) of a square matrix over QQ; None eigenvalues when irrational."""
    variable = Dummy('lam')
    poly = Poly.from_list(R.charpoly(), variable, domain=QQ)
    found = roots(poly)
    if sum(found.values()) != poly.degree() or not all(r.is_Rational for r in found):
        return None, False
    eigenvalues = sorted(QQ.from_sympy(r) for r in found)
    size = R.shape[0]
    product = DomainMatrix.eye(size, QQ)
    for value in eigenvalues:
        product = product * (R - DomainMatrix.eye(size, QQ) * value)
    return eigenvalues, product.is_zero_matrix


def qde_residues(m: int, n: int):
    """Check every residue of M_(1, omega_i) and M_D on grade m."""
    ops = DivisorOperators(m, n)
    cf = ops.space.cf
    records = []
    M_D = ops.operator(Divisor('D'))
    hypersurfaces = sorted({(t.alpha, t.k) for t in M_D.terms if t.alpha is not None},
                           key=lambda pair: (pair[0].i, pair[0].j, pair[1]))
    for root, k in hypersurfaces:
        res_D = _residue(M_D, root, k, scale=k)
        for i in range(1, n + 1):
            divisor = Divisor('omega', i)
            res = _residue(ops.operator(divisor), root, k)
            if not root.contains(i):
                ok = res is None or res.is_zero_matrix
                records.append(ResidueRecord(root.label(), k, divisor.label(), [], ok, '' if ok else 'expected zero'))
                continue
            if res is None:
                records.append(ResidueRecord(root.label(), k, divisor.label(), [], True, 'no pole'))
                continue
            ratio_ok = matrices_equal(res_D, res * cf.domain.convert(cf(k))) if res_D is not None else k == 0
            R = rational_matrix(res, cf)
            if R is None:
                records.append(ResidueRecord(root.label(), k, divisor.label(), [], False, 'not constant over theta'))
                continue
            eigenvalues, diagonalizable = spectrum(R)
            ok = (ratio_ok and diagonalizable and eigenvalues is not None
                  and all(allowed_eigenvalue(value, m, k) for value in eigenvalues))
            reason = '' if ok else ('k-ratio' if not ratio_ok else 'spectrum')
            records.append(ResidueRecord(root.label(), k, divisor.label(), eigenvalues or [], ok, reason))
    logger.info('checked %d residues on grade %d (n=%d)', len(records), m, n)
    return records


def residue_check(m: int, n: int):
    records = qde_residues(m, n)
    failures = [r.to_dict() for r in records if not r.ok]
    return (not failures), (failures[0] if failures else None)
