"""Quantum multiplication by divisors.

M_D = classical + theta x d/dx Omega and M_(1, omega_i) = classical + theta s_i d/ds_i Omega_+;
the classical parts are diagonal on fixed-point classes.
"""
from dataclasses import dataclass

from .combinat import content_sum, multipartitions, size
from .errors import InvalidSelector
from .eoperator import e_operator
from .exactalg import diagonal, matrices_equal, matrix, series_expand, substitute_x_power, zero_matrix
from .fock import fock_space
from .golden import golden_matrices
from .logger import get_logger
from .omega import ClosedFormOperator, QuantumTerm, omega_plus, omega_zero
from .symfun import fixedpoint_to_nakajima

logger = get_logger(__name__)


@dataclass(frozen=True)
class Divisor:
    """'D' (the boundary divisor) or ('omega', i)."""

    kind: str
    index: int = 0

    @classmethod
    def parse(cls, text: str, n: int) -> 'Divisor':
        text = (text or '').strip()
        if text == 'D':
            return cls('D')
        if text.startswith('omega:'):
            try:
                index = int(text.split(':', 1)[1])
            except ValueError as exc:
                raise InvalidSelector(f'bad divisor selector {text!r}') from exc
            if not 1 <= index <= n:
                raise InvalidSelector(f'omega:{index} does not exist for n={n}')
            return cls('omega', index)
        raise InvalidSelector(f'divisor must be D or omega:<i>, got {text!r}')

    def label(self) -> str:
        return 'D' if self.kind == 'D' else f'omega:{self.index}'


def fixed_point_eigenvalue(surface, lams, divisor: Divisor):
    cf = surface.cf
    total = cf.zero
    for point, lam in enumerate(lams, start=1):
        if divisor.kind == 'D':
            wL, wR = surface.tangent_weights(point)
            total -= content_sum(lam, wL, wR)
        else:
            total += size(lam) * surface.restriction(surface.omega(divisor.index), point)
    return total


def classical_multiplication(m: int, n: int, divisor: Divisor, labels: str = 'omega'):
    """sum over fixed points of eigenvalue |J><J| / <J, J>, monomial coordinates."""
    space = fock_space(n, labels)
    columns = []
    weights = []
    for lams in multipartitions(m, n + 1):
        J = fixedpoint_to_nakajima(lams, n, labels)
        columns.append(J.column())
        weights.append(fixed_point_eigenvalue(space.surface, lams, divisor) / space.inner_product(J, J))
    rows = len(columns[0])
    P = matrix([[columns[c][r] for c in range(len(columns))] for r in range(rows)], space.cf)
    return P * diagonal(weights, space.cf) * P.transpose() * space.gram(m)


class DivisorOperators:
    """M_D and M_(1, omega_i) on one grade, assembled once and reused."""

    def __init__(self, m: int, n: int, labels: str = 'omega'):
        self.m = m
        self.n = n
        self.labels = labels
        self.space = fock_space(n, labels)
        self._plus = omega_plus(m, n, labels)
        self._zero = omega_zero(m, n, labels)
        self._cache = {}

    def operator(self, divisor: Divisor) -> ClosedFormOperator:
        if divisor not in self._cache:
            self._cache[divisor] = self._build(divisor)
        return self._cache[divisor]

    def _build(self, divisor: Divisor) -> ClosedFormOperator:
        theta = self.space.cf.theta
        scale = lambda A: A * self.space.cf.domain.convert(theta)  # noqa: E731
        terms = []
        if divisor.kind == 'D':
            for term in self._plus.terms + self._zero.terms:
                terms.append(QuantumTerm(term.alpha, term.k, scale(term.matrix), 'dlog_q'))
        else:
            for term in self._plus.terms:
                if term.alpha.contains(divisor.index):
                    terms.append(QuantumTerm(term.alpha, term.k, scale(term.matrix), 'dlog_s'))
        classical = classical_multiplication(self.m, self.n, divisor, self.labels)
        logger.info('assembled M_%s on grade %d (n=%d)', divisor.label(), self.m, self.n)
        return ClosedFormOperator(self.space, self.m, classical, terms).merged()

    def divisors(self) -> list:
        return [Divisor('D')] + [Divisor('omega', i) for i in range(1, self.n + 1)]

    def all(self) -> dict:
        return {d.label(): self.operator(d) for d in self.divisors()}


def divisor_operators(m: int, n: int, labels: str = 'omega') -> dict:
    return DivisorOperators(m, n, labels).all()


def commutator_check(m: int, n: int):
    """All divisor operators commute as exact rational-function matrices."""
    ops = DivisorOperators(m, n)
    assembled = [(d.label(), ops.operator(d).assemble()) for d in ops.divisors()]
    for r, (name_a, A) in enumerate(assembled):
        for name_b, B in assembled[r + 1:]:
            if not (A * B - B * A).is_zero_matrix:
                return False, {'m': m, 'n': n, 'pair': [name_a, name_b]}
    return True, None


def degree_scaling_check(m: int, n: int, max_degree: int):
    """The s^(d alpha) coefficient of the quantum part of M_(1, omega_i) is theta E_alpha(x^d)."""
    ops = DivisorOperators(m, n)
    engine = e_operator(n)
    cf = ops.space.cf
    theta = cf.theta
    for i in range(1, n + 1):
        op = ops.operator(Divisor('omega', i))
        for root in ops.space.surface.roots():
            if not root.contains(i):
                continue
            var = cf.s[i - 1]
            rest = cf.monomial_s(root.i, root.j) / var
            selected = [t for t in op.terms if t.alpha == root]
            quantum = ClosedFormOperator(ops.space, m, zero_matrix(op.classical.shape[0], cf), selected).quantum_matrix().to_list()
            expected = engine.e_alpha_matrix(m, root).to_list()
            for r, row in enumerate(quantum):
                for c, entry in enumerate(row):
                    series = series_expand(entry, var, max_degree) if entry else None
                    for d in range(1, max_degree + 1):
                        got = series.coefficient(d) if series else cf.zero
                        want = theta * rest ** d * substitute_x_power(expected[r][c], cf, d) if expected[r][c] else cf.zero
                        if got - want:
                            return False, {'i': i, 'root': root.label(), 'd': d, 'entry': [r, c]}
    return True, None


def golden_check():
    """M_(1, omega) and M_D for m = 2, n = 1 against their exact closed forms."""
    ops = DivisorOperators(2, 1, 'e')
    failures = []
    for name, expected in golden_matrices().items():
        got = ops.operator(Divisor.parse(name, 1)).normalized().assemble()
        if not matrices_equal(got, expected):
            failures.append(name)
    return (not failures), ({'matrices': failures} if failures else None)
