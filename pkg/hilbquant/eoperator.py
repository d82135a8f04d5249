"""Matrix elements of the shifted operators E^s_alpha(q) on the Fock space.

Elements are evaluated by the commutation recursion: every bra annihilator is
either absorbed into E (shifting s by its mode) or contracted with a ket part
of the same size, and every ket part left over is absorbed from the right. The
terminal scalar is the vacuum value, nonzero only for superscript 0.
"""
from dataclasses import dataclass
from functools import lru_cache

from .combinat import weighted_size
from .errors import WindowViolation
from .exactalg import identity, laurent_coefficients, matrix, matrix_x_coefficients
from .fock import fock_space
from .logger import get_logger
from .surface import Root

logger = get_logger(__name__)


@dataclass(frozen=True)
class EOperatorQuery:
    """<bra| E^s_alpha |ket> for monomial keys bra and ket."""

    root: Root
    bra: tuple
    ket: tuple
    s: int = 0

    @property
    def selection_ok(self) -> bool:
        return weighted_size(self.bra) == weighted_size(self.ket) - self.s


class EOperator:
    def __init__(self, space):
        self.space = space
        self.cf = space.cf
        u = self.cf.u
        self.vacuum_value = -u ** 2 / (1 - u ** 2) ** 2
        self._root_pairings = {}
        self._bilinear = {}
        self._e_alpha = {}

    def root_pairings(self, root: Root) -> list:
        if root not in self._root_pairings:
            sd = self.space.surface
            self._root_pairings[root] = [sd.root_pairing(root, cls) for cls in self.space.labels.classes]
        return self._root_pairings[root]

    def shift_factor(self, r: int):
        u = self.cf.u
        return u ** (-r) - u ** r

    def matrix_element(self, query: EOperatorQuery):
        cf = self.cf
        if not query.selection_ok:
            return cf.zero
        weights = self.root_pairings(query.root)
        pairing = self.space.label_pairing
        bra, ket = query.bra, query.ket
        cache = {}

        def walk(position: int, used: int, balance: int):
            key = (position, used, balance)
            if key in cache:
                return cache[key]
            if position == len(bra):
                value = self._close(ket, used, query.s + balance, weights)
            else:
                r, gamma = bra[position]
                value = cf.zero
                if weights[gamma]:
                    value += weights[gamma] * self.shift_factor(r) * walk(position + 1, used, balance + r)
                for slot, (l, delta) in enumerate(ket):
                    if l != r or used & (1 << slot) or not pairing[gamma][delta]:
                        continue
                    value += -r * pairing[gamma][delta] * walk(position + 1, used | (1 << slot), balance)
            cache[key] = value
            return value

        total = walk(0, 0, 0)
        return -total if weighted_size(bra) % 2 else total

    def _close(self, ket, used: int, superscript: int, weights):
        value = self.cf.one
        for slot, (l, delta) in enumerate(ket):
            if used & (1 << slot):
                continue
            if not weights[delta]:
                return self.cf.zero
            value *= weights[delta] * self.shift_factor(l)
            superscript -= l
        return self.vacuum_value * value if superscript == 0 else self.cf.zero

    def bilinear(self, m: int, root: Root):
        """<a|E^0_alpha|b> over grade-m monomials."""
        key = (m, root)
        if key not in self._bilinear:
            basis = self.space.basis(m)
            rows = [[self.matrix_element(EOperatorQuery(root, a, b)) for b in basis] for a in basis]
            self._bilinear[key] = matrix(rows, self.cf)
        return self._bilinear[key]

    def e0_matrix(self, m: int, root: Root):
        return self.space.bilinear_to_operator(self.bilinear(m, root), m)

    def e_alpha_matrix(self, m: int, root: Root):
        """E_alpha = E^0_alpha - q/(1+q)^2 on grade m, monomial coordinates."""
        key = (m, root)
        if key not in self._e_alpha:
            size = len(self.space.basis(m))
            result = self.e0_matrix(m, root) - identity(size, self.cf) * self.cf.domain.convert(self.vacuum_value)
            for row in result.to_list():
                for entry in row:
                    if entry:
                        laurent_coefficients(entry, self.cf)
            self._e_alpha[key] = result
            logger.debug('E_%s on grade %d assembled (%d x %d)', root.label(), m, size, size)
        return self._e_alpha[key]

    def laurent_parts(self, m: int, root: Root) -> dict:
        """{k: A_k} with E_alpha = sum_k A_k x^k and |k| <= m - 1."""
        parts = matrix_x_coefficients(self.e_alpha_matrix(m, root), self.cf)
        outside = [k for k in parts if abs(k) > max(m - 1, 0)]
        if outside:
            raise WindowViolation(f'E_{root.label()} on grade {m} has x-powers {outside}', witness={'k': outside})
        return {k: A for k, A in parts.items() if not A.is_zero_matrix}


@lru_cache(maxsize=None)
def e_operator(n: int, labels: str = 'omega') -> EOperator:
    return EOperator(fock_space(n, labels))


def e0_matrix_element(query: EOperatorQuery, n: int, labels: str = 'omega'):
    return e_operator(n, labels).matrix_element(query)


def e_alpha_matrix(m: int, root: Root, n: int, labels: str = 'omega'):
    return e_operator(n, labels).e_alpha_matrix(m, root)
