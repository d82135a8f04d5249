"""The two-point operator Omega = Omega_0 + Omega_+ in closed form.

Every quantum term is a constant matrix times a scalar shape in
y = x^k s^alpha (alpha is None for the punctual part, where s^alpha = 1):

    log      log(1 - y)
    dlog_q   x d/dx log(1 - y) = -k y / (1 - y)
    dlog_s   -y / (1 - y)
"""
from dataclasses import dataclass, field

from sympy.polys.matrices import DomainMatrix

from .combinat import canonical, format_weighted, weighted_size
from .eoperator import e_operator
from .errors import GradeMismatch
from .exactalg import matrices_equal, matrix, ratfunc_eq, zero_matrix
from .fock import FockVector, HeisenbergWord, apply_heisenberg, fock_space
from .logger import get_logger
from .surface import Root

logger = get_logger(__name__)

SHAPES = ('log', 'dlog_q', 'dlog_s')


@dataclass(frozen=True)
class QuantumTerm:
    alpha: Root
    k: int
    matrix: DomainMatrix
    shape: str = 'log'

    def scalar(self, cf):
        y = cf.u ** (2 * self.k)
        if self.alpha is not None:
            y *= cf.monomial_s(self.alpha.i, self.alpha.j)
        if self.shape == 'log':
            raise ValueError('log terms have no rational closed form')
        if self.shape == 'dlog_q':
            return -self.k * y / (1 - y)
        if self.shape == 'dlog_s':
            return -y / (1 - y)
        raise ValueError(f'unknown shape {self.shape!r}')


@dataclass
class ClosedFormOperator:
    """classical + sum of quantum terms, all in monomial coordinates."""

    space: object
    m: int
    classical: DomainMatrix
    terms: list = field(default_factory=list)

    @property
    def cf(self):
        return self.space.cf

    def quantum_matrix(self) -> DomainMatrix:
        total = zero_matrix(self.classical.shape[0], self.cf)
        for term in self.terms:
            total = total + term.matrix * self.cf.domain.convert(term.scalar(self.cf))
        return total

    def assemble(self) -> DomainMatrix:
        return self.classical + self.quantum_matrix()

    def normalized(self) -> 'ClosedFormOperator':
        convert = lambda A: self.space.to_normalized(A, self.m)  # noqa: E731
        return ClosedFormOperator(
            self.space, self.m, convert(self.classical),
            [QuantumTerm(t.alpha, t.k, convert(t.matrix), t.shape) for t in self.terms],
        )

    def merged(self) -> 'ClosedFormOperator':
        """Same operator with terms of equal (alpha, k, shape) added together."""
        merged = {}
        for term in self.terms:
            key = (term.alpha, term.k, term.shape)
            merged[key] = merged[key] + term.matrix if key in merged else term.matrix
        terms = [QuantumTerm(a, k, A, shape) for (a, k, shape), A in merged.items() if not A.is_zero_matrix]
        terms.sort(key=lambda t: (t.alpha is not None, (t.alpha.i, t.alpha.j) if t.alpha else (0, 0), t.k))
        return ClosedFormOperator(self.space, self.m, self.classical, terms)


def apply_matrix(M: DomainMatrix, v: FockVector) -> FockVector:
    space = v.space
    column = matrix([[c] for c in v.column()], space.cf)
    return space.from_column(v.grade, [row[0] for row in (M * column).to_list()])


# ---------- Omega_+ ----------

def omega_plus(m: int, n: int, labels: str = 'omega') -> ClosedFormOperator:
    """Omega_+ = sum_alpha sum_k (-A_k) log(1 - x^k s^alpha)."""
    engine = e_operator(n, labels)
    space = engine.space
    terms = []
    for root in space.surface.roots():
        for k, A in engine.laurent_parts(m, root).items():
            terms.append(QuantumTerm(root, k, -A, 'log'))
    logger.info('Omega_+ assembled for m=%d n=%d: %d terms', m, n, len(terms))
    return ClosedFormOperator(space, m, zero_matrix(len(space.basis(m)), space.cf), terms)


# ---------- Omega_0 ----------

def punctual_word(space, k: int) -> list:
    """Words whose sum is -[(n+1) t1 t2 p_-k(1) p_k(1) + sum_i p_-k(E_i) p_k(omega_i)]."""
    sd = space.surface
    cf = space.cf
    words = [(-(sd.n + 1) * cf.t1 * cf.t2, HeisenbergWord(((-k, sd.unit()), (k, sd.unit()))))]
    for i in range(1, sd.n + 1):
        words.append((-cf.one, HeisenbergWord(((-k, sd.exceptional(i)), (k, sd.omega(i))))))
    return words


def _word_operator(space, m: int, words) -> DomainMatrix:
    def image(v):
        total = FockVector(space, m)
        for coeff, word in words:
            total = total + apply_heisenberg(word, v).scale(coeff)
        return total

    return space.operator_matrix(m, image)


def number_operator(space, m: int, k: int) -> DomainMatrix:
    """N_k, the coefficient of log((1 - x^k)/(1 - x)) in Omega_0."""
    return _word_operator(space, m, punctual_word(space, k))


def omega_zero(m: int, n: int, labels: str = 'omega') -> ClosedFormOperator:
    """Omega_0 = sum_{2 <= k <= m} N_k (log(1 - x^k) - log(1 - x))."""
    space = fock_space(n, labels)
    size = len(space.basis(m))
    terms = []
    linear = zero_matrix(size, space.cf)
    for k in range(2, m + 1):
        N = number_operator(space, m, k)
        if N.is_zero_matrix:
            continue
        terms.append(QuantumTerm(None, k, N, 'log'))
        linear = linear - N
    if not linear.is_zero_matrix:
        terms.append(QuantumTerm(None, 1, linear, 'log'))
    return ClosedFormOperator(space, m, zero_matrix(size, space.cf), terms)


def local_punctual_operator(n: int, m: int, k: int, point: int) -> DomainMatrix:
    """-(1/(wL wR)) p_-k([p_i]) p_k([p_i]): the Hilb(C^2) operator at one fixed point."""
    space = fock_space(n, 'fixed')
    sd = space.surface
    cls = sd.fixed_point_class(point)
    word = HeisenbergWord(((-k, cls), (k, cls)))
    return _word_operator(space, m, [(-1 / sd.euler[point - 1], word)])


def punctual_check(n: int, m: int):
    """Omega_0 in the fixed-point labelled basis splits over fixed points."""
    space = fock_space(n, 'fixed')
    for k in range(1, m + 1):
        total = zero_matrix(len(space.basis(m)), space.cf)
        for point in range(1, n + 2):
            total = total + local_punctual_operator(n, m, k, point)
        if not matrices_equal(total, number_operator(space, m, k)):
            return False, {'n': n, 'm': m, 'k': k}
    return True, None


def hilb_c2_operator(m: int, k: int) -> DomainMatrix:
    """The punctual coefficient N_k for the plane itself."""
    return number_operator(fock_space(0, 'omega'), m, k)


# ---------- two-point function ----------

@dataclass
class TwoPoint:
    """theta <a|Omega|b>, split into punctual and non-punctual log coefficients.

    punctual maps k to the coefficient of log(1 - x^k); nonpunctual maps
    (root, k) to the coefficient of log(1 - x^k s^root).
    """

    punctual: dict
    nonpunctual: dict

    def is_zero(self) -> bool:
        return not any(self.punctual.values()) and not any(self.nonpunctual.values())

    def equals(self, other: 'TwoPoint') -> bool:
        for mine, theirs in ((self.punctual, other.punctual), (self.nonpunctual, other.nonpunctual)):
            for key in set(mine) | set(theirs):
                a, b = mine.get(key), theirs.get(key)
                if not ratfunc_eq(a if a is not None else 0, b if b is not None else 0):
                    return False
        return True


def _bilinear(space, a: FockVector, M: DomainMatrix, b: FockVector):
    return space.inner_product(a, apply_matrix(M, b))


def two_point_vectors(a: FockVector, b: FockVector, plus=None, zero=None) -> TwoPoint:
    if a.grade != b.grade:
        raise GradeMismatch(f'two-point function of grade {a.grade} and grade {b.grade}')
    space = a.space
    m = a.grade
    theta = space.cf.theta
    plus = plus or omega_plus(m, space.n, space.labels.name)
    zero = zero or omega_zero(m, space.n, space.labels.name)
    punctual = {}
    for term in zero.terms:
        value = _bilinear(space, a, term.matrix, b)
        if value:
            punctual[term.k] = punctual.get(term.k, space.cf.zero) + theta * value
    nonpunctual = {}
    for term in plus.terms:
        value = _bilinear(space, a, term.matrix, b)
        if value:
            key = (term.alpha, term.k)
            nonpunctual[key] = nonpunctual.get(key, space.cf.zero) + theta * value
    return TwoPoint(punctual, nonpunctual)


def two_point(mu, nu, n: int, labels: str = 'omega') -> TwoPoint:
    """theta <mu|Omega|nu> for normalized Nakajima basis elements."""
    space = fock_space(n, labels)
    if weighted_size(mu) != weighted_size(nu):
        raise GradeMismatch(f'{weighted_size(mu)} points against {weighted_size(nu)} points')
    return two_point_vectors(space.normalized(mu), space.normalized(nu))


def symmetry_check(n: int, max_grade: int):
    """<a|Theta|b> = <b|Theta|a> on all monomial pairs."""
    space = fock_space(n, 'omega')
    for m in range(max_grade + 1):
        plus, zero = omega_plus(m, n), omega_zero(m, n)
        basis = space.basis(m)
        for r, a in enumerate(basis):
            for b in basis[r + 1:]:
                left = two_point_vectors(space.monomial(a), space.monomial(b), plus, zero)
                right = two_point_vectors(space.monomial(b), space.monomial(a), plus, zero)
                if not left.equals(right):
                    return False, {'m': m, 'a': format_weighted(a, space.labels.names), 'b': format_weighted(b, space.labels.names)}
    return True, None


def factorization_check(n: int, max_grade: int):
    """<mu(1) rest|Theta_+|nu(1) rest'> = <mu(1)|nu(1)> <rest|Theta_+|rest'>."""
    space = fock_space(n, 'omega')
    unit = space.size - 1
    cache = {}

    def plus(m):
        if m not in cache:
            cache[m] = omega_plus(m, n)
        return cache[m]

    for m in range(1, max_grade + 1):
        basis = space.basis(m)
        for a in basis:
            a1 = tuple(p for p in a if p[1] == unit)
            if not a1:
                continue
            aw = tuple(p for p in a if p[1] != unit)
            for b in basis:
                b1 = tuple(p for p in b if p[1] == unit)
                bw = tuple(p for p in b if p[1] != unit)
                left = two_point_vectors(space.monomial(a), space.monomial(b), plus(m), omega_zero(m, n))
                unit_pairing = space.mono_pairing(a1, b1) if weighted_size(a1) == weighted_size(b1) else 0
                if not unit_pairing:
                    if left.nonpunctual and any(left.nonpunctual.values()):
                        return False, {'m': m, 'a': list(a), 'b': list(b)}
                    continue
                g = weighted_size(aw)
                right = two_point_vectors(space.monomial(canonical(aw)), space.monomial(canonical(bw)),
                                          plus(g), omega_zero(g, n))
                scaled = {key: unit_pairing * value for key, value in right.nonpunctual.items()}
                if not TwoPoint({}, left.nonpunctual).equals(TwoPoint({}, scaled)):
                    return False, {'m': m, 'a': list(a), 'b': list(b)}
    return True, None


def vacuum_check(n: int) -> bool:
    space = fock_space(n, 'omega')
    value = two_point_vectors(space.vacuum(), space.vacuum(), omega_plus(0, n), omega_zero(0, n))
    return value.is_zero()

