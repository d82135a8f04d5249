"""Checks of E_alpha against fixed-point classes modulo t1 + t2.

On monomials supported at the two endpoints p_i, p_j of a root, E^0_alpha
reduces mod t1 + t2 to -A(q) (x) B(q) acting on power sums, with A on the p_i
factor.
"""
from math import factorial

from .combinat import e_lambda, multipartitions, partitions_of, transpose
from .eoperator import e_operator
from .exactalg import mod_theta, ratfunc_eq, reduce_mod_theta2
from .logger import get_logger
from .omega import apply_matrix
from .surface import Root
from .symfun import fixedpoint_vector, operator_A, operator_B, power_sum, schur_in_powersums

logger = get_logger(__name__)


def _tensor_apply(terms: dict, cf) -> dict:
    """-(A (x) B) on {(mu, nu): coefficient}."""
    result = {}
    for (mu, nu), c in terms.items():
        left = operator_A(power_sum(mu, cf))
        right = operator_B(power_sum(nu, cf))
        for mu2, a in left.terms.items():
            for nu2, b in right.terms.items():
                key = (mu2, nu2)
                result[key] = result.get(key, cf.zero) - c * a * b
    return result


def _tensor_equal(a: dict, b: dict) -> bool:
    return all(ratfunc_eq(a.get(key, 0), b.get(key, 0)) for key in set(a) | set(b))


def _split(key, i: int, j: int):
    mu = tuple(part for part, label in key if label == i - 1)
    nu = tuple(part for part, label in key if label == j - 1)
    return mu, nu


def minor_check(m: int, n: int, root):
    """E^0_alpha restricted to bidegree (a, m - a) at (p_i, p_j) equals -A (x) B mod theta."""
    engine = e_operator(n, 'fixed')
    space = engine.space
    cf = space.cf
    tau = (n + 1) * cf.t1
    i, j = root.i, root.j
    basis = space.basis(m)
    E0 = engine.e0_matrix(m, root).to_list()
    local = [r for r, key in enumerate(basis) if all(label in (i - 1, j - 1) for _, label in key)]
    for b in local:
        mu, nu = _split(basis[b], i, j)
        image = _tensor_apply({(mu, nu): cf.one}, cf)
        for c in local:
            mu2, nu2 = _split(basis[c], i, j)
            if sum(mu2) != sum(mu):
                continue
            expected = (-tau) ** (len(mu + nu) - len(mu2 + nu2)) * image.get((mu2, nu2), cf.zero)
            got = mod_theta(E0[c][b], cf) if E0[c][b] else cf.zero
            if not ratfunc_eq(got, expected):
                return False, {'root': root.label(), 'row': c, 'col': b}
    return True, None


def schur_eigen_check(a: int, b: int, cf):
    """s_lam (x) s_rho is an eigenvector of -A (x) B with eigenvalue -e(lam) e(rho')."""
    for lam in partitions_of(a):
        left = schur_in_powersums(lam, cf)
        for rho in partitions_of(b):
            right = schur_in_powersums(rho, cf)
            tensor = {(mu, nu): x * y for mu, x in left.terms.items() for nu, y in right.terms.items()}
            value = -e_lambda(lam, cf) * e_lambda(transpose(rho), cf)
            if not _tensor_equal(_tensor_apply(tensor, cf), {k: c * value for k, c in tensor.items()}):
                return False, {'lambda': list(lam), 'rho': list(rho)}
    return True, None


def _fixed_bilinear(engine, m, root, left, right):
    """<J_left| E_alpha |J_right>."""
    space = engine.space
    a = fixedpoint_vector(left, space.n)
    b = fixedpoint_vector(right, space.n)
    return space.inner_product(a, apply_matrix(engine.e_alpha_matrix(m, root), b))


def vanishing_check(m: int, n: int, root):
    """<J|E_alpha|J'> vanishes mod theta when the point counts at p_i or p_j agree."""
    engine = e_operator(n, 'fixed')
    cf = engine.cf
    i, j = root.i, root.j
    tuples = multipartitions(m, n + 1)
    for left in tuples:
        for right in tuples:
            if left == right:
                continue
            if sum(left[i - 1]) != sum(right[i - 1]) and sum(left[j - 1]) != sum(right[j - 1]):
                continue
            value = _fixed_bilinear(engine, m, root, left, right)
            if value and mod_theta(value, cf):
                return False, {'root': root.label(), 'left': [list(p) for p in left], 'right': [list(p) for p in right]}
    return True, None


def minor_diagonalization_check(m: int, n: int, root):
    """Minor decomposition, Schur eigenvectors of every bidegree and off-diagonal vanishing at grade m."""
    cf = e_operator(n, 'fixed').cf
    checks = [('minor', lambda: minor_check(m, n, root))]
    checks += [(f'eigenvectors ({a},{m - a})', lambda a=a: schur_eigen_check(a, m - a, cf)) for a in range(m + 1)]
    checks.append(('vanishing', lambda: vanishing_check(m, n, root)))
    for part, check in checks:
        ok, witness = check()
        if not ok:
            logger.debug('diagonalization failed at %s: %s', part, witness)
            return False, {'part': part, **(witness or {})}
    return True, None


def _slot_tuple(n: int, assignments: dict):
    return tuple(tuple(assignments.get(point, ())) for point in range(1, n + 2))


def extremal_pair_tuples(m: int, n: int, i: int, j: int):
    """Row (m) against row (m-1) plus a box at p_j, k = m - 1; column (1^m) against (1^(m-1)) plus a box, k = 1 - m."""
    row = _slot_tuple(n, {i: (m,)})
    split_row = _slot_tuple(n, {i: (m - 1,) if m > 1 else (), j: (1,)})
    column = _slot_tuple(n, {i: (1,) * m})
    split_column = _slot_tuple(n, {i: (1,) * (m - 1), j: (1,)})
    return (row, split_row, m - 1), (column, split_column, 1 - m)


def extremal_pair_value(m: int, n: int, cf):
    tau = (n + 1) * cf.t1
    return (-1) ** (m - 1) * tau ** (2 * m) * cf.rational(factorial(m) ** 2, m)


def extremal_pair_check(m: int, n: int, i: int, j: int):
    """theta times the log coefficients of <J|Omega_+|J'> mod theta^2 for the two special pairs."""
    engine = e_operator(n, 'fixed')
    space = engine.space
    cf = space.cf
    target = Root(i, j)
    expected = extremal_pair_value(m, n, cf)
    for left, right, special in extremal_pair_tuples(m, n, i, j):
        a = fixedpoint_vector(left, n)
        b = fixedpoint_vector(right, n)
        for root in space.surface.roots():
            if not (i <= root.i and root.j <= j):
                continue
            for k, A in engine.laurent_parts(m, root).items():
                coefficient = -space.inner_product(a, apply_matrix(A, b))
                reduced = reduce_mod_theta2(cf.theta * coefficient, cf)
                want = expected if (root == target and k == special) else cf.zero
                if reduced.base or not ratfunc_eq(reduced.eps1, want):
                    return False, {'root': root.label(), 'k': k, 'pair': [str(left), str(right)]}
            if root == target and special not in engine.laurent_parts(m, root):
                return False, {'root': root.label(), 'k': special, 'reason': 'missing'}
    return True, None

