"""Symmetric functions in the power-sum basis.

A :class:`SymFunc` maps partitions mu to the coefficient of p_mu. Schur
functions come from the Murnaghan-Nakayama rule, integral Jack functions from
the Laplace-Beltrami eigenproblem, and the affine operators A(q), B(q) act
directly on power sums.
"""
from collections import Counter
from functools import lru_cache
from itertools import product

from .combinat import (
    beta_set, canonical, from_beta_set, n_statistic, partitions_of, size, transpose, zee,
)
from .errors import EigenvalueCollision
from .exactalg import identity, matrix, ratfunc_eq
from .fock import FockVector, fock_space
from .logger import get_logger

logger = get_logger(__name__)


class SymFunc:
    def __init__(self, cf, terms=None):
        self.cf = cf
        self.terms = {tuple(mu): c for mu, c in (terms or {}).items() if c}

    def coefficient(self, mu):
        return self.terms.get(tuple(mu), self.cf.zero)

    def __add__(self, other):
        terms = dict(self.terms)
        for mu, c in other.terms.items():
            terms[mu] = terms.get(mu, self.cf.zero) + c
        return SymFunc(self.cf, terms)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, factor):
        return SymFunc(self.cf, {mu: c * factor for mu, c in self.terms.items()})

    def is_zero(self) -> bool:
        return all(not c for c in self.terms.values())

    def equals(self, other) -> bool:
        keys = set(self.terms) | set(other.terms)
        return all(ratfunc_eq(self.coefficient(mu), other.coefficient(mu)) for mu in keys)

    def __repr__(self):
        return 'SymFunc(' + ' + '.join(f'({c})*p{list(mu)}' for mu, c in sorted(self.terms.items())) + ')'


def power_sum(mu, cf) -> SymFunc:
    return SymFunc(cf, {tuple(sorted(mu, reverse=True)): cf.one})


def omega_involution(f: SymFunc) -> SymFunc:
    """p_mu -> (-1)^{len(mu)} p_mu."""
    return SymFunc(f.cf, {mu: c if len(mu) % 2 == 0 else -c for mu, c in f.terms.items()})


# ---------- Schur functions ----------

@lru_cache(maxsize=None)
def character(lam, mu) -> int:
    """chi^lambda(mu) by removing border strips on a beta-set."""
    if not mu:
        return 0 if lam else 1
    k, rest = mu[0], mu[1:]
    betas = set(beta_set(lam, len(lam)))
    total = 0
    for b in betas:
        target = b - k
        if target < 0 or target in betas:
            continue
        height = sum(1 for c in betas if target < c < b)
        total += (-1) ** height * character(from_beta_set((betas - {b}) | {target}), rest)
    return total


@lru_cache(maxsize=None)
def schur_in_powersums(lam, cf) -> SymFunc:
    lam = tuple(lam)
    return SymFunc(cf, {mu: cf.rational(character(lam, mu), zee(mu)) for mu in partitions_of(size(lam))})


# ---------- Jack functions ----------

def _remove(mu, *parts):
    counts = Counter(mu)
    for part in parts:
        counts[part] -= 1
    return tuple(sorted(counts.elements(), reverse=True))


def laplace_beltrami(d: int, alpha, cf):
    """Matrix of the Laplace-Beltrami operator on degree-d power sums (columns = images)."""
    basis = partitions_of(d)
    index = {mu: r for r, mu in enumerate(basis)}
    rows = [[cf.zero] * len(basis) for _ in basis]
    half = cf.rational(1, 2)
    for c, mu in enumerate(basis):
        counts = Counter(mu)
        # alpha/2 sum_{i,j} ij p_{i+j} d_i d_j
        for i in counts:
            for j in counts:
                ways = counts[i] * (counts[i] - 1) if i == j else counts[i] * counts[j]
                if ways:
                    image = tuple(sorted(_remove(mu, i, j) + (i + j,), reverse=True))
                    rows[index[image]][c] += alpha * half * (i * j * ways)
        # 1/2 sum_{i,j} (i+j) p_i p_j d_{i+j}
        for k, mult in counts.items():
            for i in range(1, k):
                image = tuple(sorted(_remove(mu, k) + (i, k - i), reverse=True))
                rows[index[image]][c] += half * (k * mult)
        rows[c][c] += (alpha - 1) * half * sum(k * (k - 1) for k in mu)
    return basis, matrix(rows, cf)


def jack_eigenvalue(lam, alpha):
    return alpha * n_statistic(transpose(lam)) - n_statistic(lam)


@lru_cache(maxsize=None)
def jack_in_powersums(lam, alpha, cf) -> SymFunc:
    """Integral Jack function J_lam at parameter alpha, coefficient of p_1^|lam| equal to 1."""
    lam = tuple(lam)
    d = size(lam)
    if d == 0:
        return SymFunc(cf, {(): cf.one})
    basis, op = laplace_beltrami(d, alpha, cf)
    shifted = op - identity(len(basis), cf) * cf.domain.convert(jack_eigenvalue(lam, alpha))
    kernel = shifted.nullspace()
    if kernel.shape[0] != 1:
        raise EigenvalueCollision(f'Laplace-Beltrami eigenspace of {lam} has dimension {kernel.shape[0]}')
    vector = kernel.to_list()[0]
    lead = vector[basis.index((1,) * d)]
    if not lead:
        raise EigenvalueCollision(f'J_{lam} has no p_1^{d} term')
    logger.debug('jack %s solved over %d power sums', lam, len(basis))
    return SymFunc(cf, {mu: c / lead for mu, c in zip(basis, vector)})


def jack_parameter(surface, i: int):
    """alpha = -wL_i / wR_i at the fixed point p_i (1-based)."""
    wL, wR = surface.tangent_weights(i)
    return -wL / wR


def powersum_pairing(f: SymFunc, g: SymFunc, alpha):
    """<p_mu, p_nu>_alpha = delta z_mu alpha^len(mu)."""
    total = f.cf.zero
    for mu, c in f.terms.items():
        other = g.terms.get(mu)
        if other:
            total += c * other * zee(mu) * alpha ** len(mu)
    return total


def _powersum_to_monomial_count(mu, lam) -> int:
    """Number of ways to distribute the parts of mu into blocks of sizes lam."""
    count = 0
    for assignment in product(range(len(lam)), repeat=len(mu)):
        sums = [0] * len(lam)
        for part, block in zip(mu, assignment):
            sums[block] += part
        if tuple(sums) == tuple(lam):
            count += 1
    return count


def to_monomials(f: SymFunc) -> dict:
    """Coefficients of f in the monomial symmetric functions m_lam."""
    result = {}
    for mu, c in f.terms.items():
        for lam in partitions_of(size(mu)):
            if len(lam) > len(mu):
                continue
            count = _powersum_to_monomial_count(mu, lam)
            if count:
                result[lam] = result.get(lam, f.cf.zero) + c * count
    return {lam: c for lam, c in result.items() if c}


# ---------- fixed-point classes in the Nakajima basis ----------

@lru_cache(maxsize=None)
def fixedpoint_vector(lams, n: int) -> FockVector:
    """[J_lams] in the Nakajima basis labelled by fixed-point classes [p_i]."""
    space = fock_space(n, 'fixed')
    sd = space.surface
    cf = space.cf
    terms = {(): cf.one}
    for point, lam in enumerate(lams):
        if not lam:
            continue
        wR = sd.wR[point]
        jack = jack_in_powersums(lam, jack_parameter(sd, point + 1), cf)
        factor = {
            tuple((k, point) for k in mu): c * wR ** (size(lam) - len(mu))
            for mu, c in jack.terms.items()
        }
        combined = {}
        for key, coeff in terms.items():
            for extra, c in factor.items():
                new = canonical(key + extra)
                combined[new] = combined.get(new, cf.zero) + coeff * c
        terms = combined
    return FockVector(space, sum(size(lam) for lam in lams), terms)


def fixedpoint_to_nakajima(lams, n: int, labels: str = 'omega') -> FockVector:
    lams = tuple(tuple(lam) for lam in lams)
    if len(lams) != n + 1:
        raise ValueError(f'expected {n + 1} partitions, got {len(lams)}')
    vector = fixedpoint_vector(lams, n)
    if labels == 'fixed':
        return vector
    return vector.space.relabel(vector, fock_space(n, labels))


# ---------- the operators A(q) and B(q) ----------

def f_factor(parts, cf):
    """prod (u^k - u^-k)."""
    value = cf.one
    for k in parts:
        value *= cf.u ** k - cf.u ** (-k)
    return value


@lru_cache(maxsize=None)
def _h_series(d: int, cf) -> tuple:
    return tuple((kappa, f_factor(kappa, cf) / zee(kappa)) for kappa in partitions_of(d))


def operator_A(f: SymFunc) -> SymFunc:
    """A(q) p_mu = (u - 1/u)^-1 sum_S f_{mu minus S} p_{mu_S} H_{|mu minus S|}."""
    cf = f.cf
    scale = 1 / (cf.u - 1 / cf.u)
    result = {}
    for mu, c in f.terms.items():
        for mask in product((False, True), repeat=len(mu)):
            kept = tuple(part for part, keep in zip(mu, mask) if keep)
            removed = tuple(part for part, keep in zip(mu, mask) if not keep)
            weight = c * f_factor(removed, cf) * scale
            for kappa, h in _h_series(sum(removed), cf):
                nu = tuple(sorted(kept + kappa, reverse=True))
                result[nu] = result.get(nu, cf.zero) + weight * h
    return SymFunc(cf, result)


def operator_B(f: SymFunc) -> SymFunc:
    return omega_involution(operator_A(omega_involution(f)))
