"""First-order splitting of the degenerate shape blocks for the A_1 surface.

In the {e, w} label basis, (e, alpha) = 0, so a monomial with s_k parts of size
k labelled w is an eigenvector of E^0_alpha on its shape block, with eigenvalue
q/(1+q)^2 prod_k eps_k(s_k), eps_k(s) = sum_j C(s, j) kappa_k^j / j! and
kappa_k = (2/k)(u^k - u^-k)^2, for 0 <= s_k <= r_k.

Distinctness is asserted on these first-order eigenvalues. Their q d/dq
derivatives can coincide: Q kappa_1 = -2 is constant, so moving one size-1 part
from e to w leaves the derivative unchanged. Such pairs are reported as
derivative collisions and do not fail the check.
"""
from collections import Counter
from dataclasses import dataclass
from math import comb, factorial

from .combinat import partitions_of, shape
from .eoperator import e_operator
from .exactalg import ratfunc_eq, x_derivative
from .logger import get_logger
from .surface import Root

logger = get_logger(__name__)


def kappa(k: int, cf):
    g = cf.u ** k - cf.u ** (-k)
    return cf.rational(2, k) * g ** 2


def epsilon_factor(k: int, s: int, cf):
    value = cf.zero
    for j in range(s + 1):
        value += cf.rational(comb(s, j), factorial(j)) * kappa(k, cf) ** j
    return value


def block_eigenvalue(key, cf):
    """prod_k eps_k(s_k), s_k the number of w-labelled parts of size k."""
    w_counts = Counter(part for part, label in key if label == 1)
    value = cf.one
    for k, s in w_counts.items():
        value *= epsilon_factor(k, s, cf)
    return value


@dataclass
class ShapeBlock:
    shape: tuple
    keys: list
    eigenvalues: list
    derivatives: list
    diagonal_ok: bool
    distinct: bool
    derivative_collisions: list

    @property
    def ok(self) -> bool:
        return self.diagonal_ok and self.distinct


def perturbation_eigenvalues(m: int) -> list:
    engine = e_operator(1, 'ew')
    space = engine.space
    cf = space.cf
    root = Root(1, 2)
    basis = space.basis(m)
    E0 = engine.e0_matrix(m, root).to_list()
    Q = engine.vacuum_value
    blocks = []
    for mu in partitions_of(m):
        positions = [r for r, key in enumerate(basis) if shape(key) == mu]
        diagonal_ok = True
        eigenvalues = []
        for r in positions:
            predicted = Q * block_eigenvalue(basis[r], cf)
            eigenvalues.append(predicted)
            if not ratfunc_eq(E0[r][r], predicted):
                diagonal_ok = False
            if any(E0[c][r] for c in positions if c != r):
                diagonal_ok = False
        keys = [basis[r] for r in positions]
        derivatives = [x_derivative(value - Q, cf) for value in eigenvalues]
        distinct = all(
            not ratfunc_eq(a, b) for r, a in enumerate(eigenvalues) for b in eigenvalues[r + 1:]
        )
        collisions = [
            (keys[a], keys[b])
            for a in range(len(keys)) for b in range(a + 1, len(keys))
            if ratfunc_eq(derivatives[a], derivatives[b])
        ]
        if collisions:
            logger.debug('shape %s: %d derivative collisions', mu, len(collisions))
        blocks.append(ShapeBlock(mu, keys, eigenvalues, derivatives, diagonal_ok, distinct, collisions))
    logger.info('perturbation blocks for m=%d: %d shapes', m, len(blocks))
    return blocks


def perturbation_check(m: int):
    for block in perturbation_eigenvalues(m):
        if not block.ok:
            return False, {'shape': list(block.shape), 'diagonal': block.diagonal_ok, 'distinct': block.distinct}
    return True, None
