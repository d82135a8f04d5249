"""Exact coefficient arithmetic.

All coefficients live in one sparse rational-function field per surface,
``QQ(t1, t2, u, s1, ..., sn)``, built on :mod:`sympy.polys.fields`. The quantum
parameter is never a generator: ``q = -u**2`` and ``x = -q = u**2``, so the
half-integer powers ``(-q)**(k/2)`` of the affine operators are plain powers
of ``u``. Matrices are :class:`sympy.polys.matrices.DomainMatrix` over the
field's domain.
"""
import random
from functools import lru_cache

from sympy import QQ, Symbol, factor, latex, sqrt
from sympy.polys.fields import FracElement, field
from sympy.polys.matrices import DomainMatrix
from sympy.polys.rings import PolyElement, ring

from .config import SEED
from .errors import DenominatorSurvived, NotExpandable, PoleAtTheta
from .logger import get_logger

logger = get_logger(__name__)

_BASE_NAMES = ('t1', 't2', 'u')
Q_SYMBOL = Symbol('q')


class CoefficientField:
    """The field QQ(t1, t2, u, s1..sn) together with its named generators."""

    def __init__(self, n: int):
        names = list(_BASE_NAMES) + [f's{i}' for i in range(1, n + 1)]
        K, *gens = field(','.join(names), QQ)
        self.n = n
        self.K = K
        self.ring = K.ring
        self.domain = K.to_domain()
        self.symbols = K.symbols
        self.t1, self.t2, self.u = gens[:3]
        self.s = tuple(gens[3:])
        self.theta = self.t1 + self.t2
        self.x = self.u ** 2
        self.q = -self.x
        self.zero = K.zero
        self.one = K.one

    def __call__(self, value):
        if isinstance(value, PolyElement):
            return self.K.new(value.set_ring(self.ring))
        return self.K(value)

    def rational(self, numerator: int, denominator: int = 1):
        return self.K(QQ(numerator, denominator))

    def monomial_s(self, i: int, j: int):
        """s^alpha for the root alpha_ij, i.e. s_i * ... * s_{j-1}."""
        value = self.one
        for index in range(i, j):
            value *= self.s[index - 1]
        return value

    def __repr__(self):
        return f'CoefficientField(n={self.n})'


@lru_cache(maxsize=None)
def coefficient_field(n: int) -> CoefficientField:
    return CoefficientField(n)


def _symbol_rank(sym):
    name = str(sym)
    if name in _BASE_NAMES:
        return (0, _BASE_NAMES.index(name), name)
    if name.startswith('s') and name[1:].isdigit():
        return (1, int(name[1:]), name)
    return (2, 0, name)


def _ordered_symbols(symbols):
    return sorted(set(symbols), key=_symbol_rank)


# ---------- polynomials ----------

def poly_arith(a: PolyElement, b: PolyElement, op: str) -> PolyElement:
    """add / sub / mul of two sparse polynomials, merging variable sets if needed."""
    if a.ring != b.ring:
        R = ring(_ordered_symbols(a.ring.symbols + b.ring.symbols), QQ)[0]
        a, b = a.set_ring(R), b.set_ring(R)
    if op == 'add':
        return a + b
    if op == 'sub':
        return a - b
    if op == 'mul':
        return a * b
    raise ValueError(f'unknown polynomial operation: {op}')


def _rational_string(c) -> str:
    return f'{int(QQ.numer(c))}/{int(QQ.denom(c))}'


def poly_to_json(p: PolyElement) -> dict:
    """Canonical graded-lex serialization: highest total degree first."""
    terms = sorted(p.iterterms(), key=lambda mc: (sum(mc[0]), mc[0]), reverse=True)
    return {
        'vars': [str(s) for s in p.ring.symbols],
        'terms': [{'e': [int(e) for e in monom], 'c': _rational_string(c)} for monom, c in terms],
    }


def poly_from_json(data: dict, cf: CoefficientField) -> PolyElement:
    R = ring(','.join(data['vars']), QQ)[0] if data['vars'] else cf.ring
    terms = {}
    for term in data['terms']:
        num, den = term['c'].split('/')
        terms[tuple(term['e'])] = QQ(int(num), int(den))
    return R.from_dict(terms).set_ring(cf.ring)


def ratfunc_to_json(f) -> dict:
    return {'num': poly_to_json(f.numer), 'den': poly_to_json(f.denom)}


def ratfunc_from_json(data: dict, cf: CoefficientField):
    return cf.K.new(poly_from_json(data['num'], cf), poly_from_json(data['den'], cf))


# ---------- equality ----------

def _coerce_pair(a, b):
    if isinstance(a, FracElement) and isinstance(b, FracElement):
        if a.field == b.field:
            return a, b
        K = field(_ordered_symbols(a.field.symbols + b.field.symbols), QQ)[0]
        return K.from_expr(a.as_expr()), K.from_expr(b.as_expr())
    if isinstance(a, FracElement):
        return a, a.field(b)
    if isinstance(b, FracElement):
        return b.field(a), b
    K = field('t1', QQ)[0]
    return K(a), K(b)


def _eval_poly(p: PolyElement, values):
    total = QQ.zero
    for monom, coeff in p.iterterms():
        term = coeff
        for value, exponent in zip(values, monom):
            if exponent:
                term *= value ** exponent
        total += term
    return total


def probably_equal(a, b, trials: int = 3, seed: int = SEED) -> bool:
    """Randomized evaluation test; False is certain, True is probable."""
    a, b = _coerce_pair(a, b)
    rng = random.Random(seed)
    ngens = a.field.ngens
    for _ in range(trials):
        point = [QQ(rng.randint(-97, 97), rng.randint(1, 31)) for _ in range(ngens)]
        da, db = _eval_poly(a.denom, point), _eval_poly(b.denom, point)
        if not da or not db:
            continue
        if _eval_poly(a.numer, point) * db != _eval_poly(b.numer, point) * da:
            return False
    return True


def ratfunc_eq(a, b) -> bool:
    """Exact equality by cross-multiplication, after a cheap evaluation screen."""
    a, b = _coerce_pair(a, b)
    if not probably_equal(a, b):
        return False
    return not (a.numer * b.denom - b.numer * a.denom)


def as_rational(f):
    """The QQ value of a constant rational function, or None."""
    if isinstance(f, FracElement):
        if f.numer.is_ground and f.denom.is_ground:
            return f.numer.LC / f.denom.LC
        return None
    return QQ.convert(f)


# ---------- reduction modulo (t1 + t2)^2 ----------

class DualTheta:
    """f(t1, -t1 + eps, u) truncated after the linear term in eps = t1 + t2."""

    def __init__(self, base, eps1, cf: CoefficientField):
        self.base = base
        self.eps1 = eps1
        self.cf = cf

    def __add__(self, other):
        other = self._lift(other)
        return DualTheta(self.base + other.base, self.eps1 + other.eps1, self.cf)

    def __sub__(self, other):
        other = self._lift(other)
        return DualTheta(self.base - other.base, self.eps1 - other.eps1, self.cf)

    def __neg__(self):
        return DualTheta(-self.base, -self.eps1, self.cf)

    def __mul__(self, other):
        other = self._lift(other)
        return DualTheta(
            self.base * other.base,
            self.base * other.eps1 + self.eps1 * other.base,
            self.cf,
        )

    __radd__ = __add__
    __rmul__ = __mul__

    def _lift(self, other):
        if isinstance(other, DualTheta):
            return other
        return reduce_mod_theta2(self.cf(other), self.cf)

    def __eq__(self, other):
        other = self._lift(other)
        return ratfunc_eq(self.base, other.base) and ratfunc_eq(self.eps1, other.eps1)

    def is_zero(self) -> bool:
        return not self.base and not self.eps1

    def __repr__(self):
        return f'DualTheta({self.base} + ({self.eps1})*eps)'


def reduce_mod_theta2(f, cf: CoefficientField) -> DualTheta:
    """Expand f at t2 = -t1 + eps to first order in eps."""
    f = cf(f)
    t1, t2 = cf.ring.gens[0], cf.ring.gens[1]
    at_antidiagonal = lambda p: p.compose(t2, -t1)  # noqa: E731
    numer, denom = f.numer, f.denom
    denom0 = at_antidiagonal(denom)
    if not denom0:
        raise PoleAtTheta(f'denominator vanishes on t1 + t2 = 0: {f.denom}')
    numer0 = at_antidiagonal(numer)
    dnumer = at_antidiagonal(numer.diff(t2))
    ddenom = at_antidiagonal(denom.diff(t2))
    base = cf.K.new(numer0, denom0)
    eps1 = cf.K.new(dnumer * denom0 - numer0 * ddenom, denom0 ** 2)
    return DualTheta(base, eps1, cf)


def mod_theta(f, cf: CoefficientField):
    return reduce_mod_theta2(f, cf).base


# ---------- series and Laurent data ----------

class TruncatedSeries:
    """Coefficients of var^e for e = -offset .. order."""

    def __init__(self, coefficients, var, offset: int = 0):
        self.coefficients = list(coefficients)
        self.var = var
        self.offset = offset

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1 - self.offset

    def coefficient(self, exponent: int):
        index = exponent + self.offset
        if index < 0 or index >= len(self.coefficients):
            raise IndexError(f'exponent {exponent} outside the expansion window')
        return self.coefficients[index]

    def __repr__(self):
        return f'TruncatedSeries({self.var}, offset={self.offset}, {self.coefficients})'


def series_expand(f, var, order: int, offset: int = 0) -> TruncatedSeries:
    """Power series of f in a generator var, exact through var**order.

    offset declares a pole of that order at var = 0 which is cleared first.
    """
    K = f.field
    x = var.numer
    shifted = f * var ** offset
    numer, denom = shifted.numer, shifted.denom
    d0 = denom.coeff_wrt(x, 0)
    if not d0:
        raise NotExpandable(f'{f} has a pole of order > {offset} at {var} = 0')
    size = order + offset + 1
    D = [K.new(denom.coeff_wrt(x, j)) for j in range(size)]
    N = [K.new(numer.coeff_wrt(x, j)) for j in range(size)]
    coefficients = []
    for k in range(size):
        acc = N[k]
        for j in range(1, k + 1):
            if D[j]:
                acc -= D[j] * coefficients[k - j]
        coefficients.append(acc / D[0])
    return TruncatedSeries(coefficients, var, offset)


def laurent_coefficients(f, cf: CoefficientField, var=None) -> dict:
    """{exponent: coefficient} of f as a Laurent polynomial in var (default u).

    The denominator must be a single power of var times a var-free factor.
    """
    f = cf(f)
    gen = (var if var is not None else cf.u).numer
    index = cf.ring.index(gen)
    shifts = {monom[index] for monom, _ in f.denom.iterterms()}
    if len(shifts) != 1:
        raise DenominatorSurvived(f'not Laurent in {gen}: denominator {f.denom}')
    shift = shifts.pop()

    def strip(monom):
        return monom[:index] + (0,) + monom[index + 1:]

    denom = cf.K.new(cf.ring.from_dict({strip(m): c for m, c in f.denom.iterterms()}))
    groups = {}
    for monom, coeff in f.numer.iterterms():
        groups.setdefault(monom[index], {})[strip(monom)] = coeff
    return {
        exponent - shift: cf.K.new(cf.ring.from_dict(terms)) / denom
        for exponent, terms in sorted(groups.items())
    }


def x_coefficients(f, cf: CoefficientField) -> dict:
    """Laurent coefficients in x = u**2 = -q."""
    result = {}
    for exponent, coeff in laurent_coefficients(f, cf).items():
        if exponent % 2:
            raise NotExpandable(f'odd power u^{exponent} in a q-Laurent polynomial')
        result[exponent // 2] = coeff
    return result


def substitute(f, cf: CoefficientField, gen, value):
    """Replace a generator by a polynomial value in numerator and denominator."""
    f = cf(f)
    g, v = gen.numer, cf(value)
    if v.denom != 1:
        raise ValueError('substitution value must be a polynomial')
    return cf.K.new(f.numer.compose(g, v.numer), f.denom.compose(g, v.numer))


def substitute_x_power(f, cf: CoefficientField, d: int):
    """f(x) -> f(x**d), i.e. u -> u**d."""
    return substitute(f, cf, cf.u, cf.u ** d)


def x_derivative(f, cf: CoefficientField):
    """x d/dx, which equals q d/dq."""
    f = cf(f)
    return cf.u * f.diff(cf.u) / 2


# ---------- matrices ----------

def matrix(rows, cf: CoefficientField) -> DomainMatrix:
    rows = [[cf(entry) for entry in row] for row in rows]
    shape = (len(rows), len(rows[0]) if rows else 0)
    return DomainMatrix(rows, shape, cf.domain)


def zero_matrix(size: int, cf: CoefficientField, cols: int = None) -> DomainMatrix:
    cols = size if cols is None else cols
    return matrix([[cf.zero] * cols for _ in range(size)], cf)


def identity(size: int, cf: CoefficientField) -> DomainMatrix:
    return diagonal([cf.one] * size, cf)


def diagonal(values, cf: CoefficientField) -> DomainMatrix:
    size = len(values)
    return matrix([[values[i] if i == j else cf.zero for j in range(size)] for i in range(size)], cf)


def matrices_equal(A: DomainMatrix, B: DomainMatrix) -> bool:
    if A.shape != B.shape:
        return False
    return (A - B).is_zero_matrix


def matrix_x_coefficients(A: DomainMatrix, cf: CoefficientField) -> dict:
    """Split a q-Laurent matrix into {k: coefficient matrix of x**k}."""
    rows = A.to_list()
    size_r, size_c = A.shape
    parts = {}
    for r in range(size_r):
        for c in range(size_c):
            if not rows[r][c]:
                continue
            for k, coeff in x_coefficients(rows[r][c], cf).items():
                if k not in parts:
                    parts[k] = [[cf.zero] * size_c for _ in range(size_r)]
                parts[k][r][c] = coeff
    return {k: matrix(parts[k], cf) for k in sorted(parts)}


# ---------- printing ----------

def to_public_expr(f, cf: CoefficientField):
    """sympy expression, written in q when only even powers of u occur."""
    f = cf(f)
    index = cf.ring.index(cf.u.numer)
    even = all(m[index] % 2 == 0 for p in (f.numer, f.denom) for m, _ in p.iterterms())
    expr = f.as_expr()
    if even:
        expr = expr.subs(cf.symbols[2], sqrt(-Q_SYMBOL))
    return factor(expr)


def to_latex(f, cf: CoefficientField) -> str:
    return latex(to_public_expr(f, cf))


def to_text(f, cf: CoefficientField) -> str:
    return str(to_public_expr(f, cf))
