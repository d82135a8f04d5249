"""Fock space of the A_n surface.

Vectors are stored in *monomial* coordinates: the key ``((2, b), (1, c))``
stands for p_{-2}(gamma_b) p_{-1}(gamma_c) v_0 without any 1/z factor. The
normalized Nakajima basis vector is monomial / zfactor; ``to_normalized`` and
``from_normalized`` convert operator matrices between the two conventions.
"""
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product

from sympy.polys.matrices import DomainMatrix

from .combinat import canonical, enumerate_weighted, format_weighted, parse_weighted, shape, zfactor
from .errors import GradeMismatch
from .exactalg import matrix
from .logger import get_logger
from .surface import CohClass, surface

logger = get_logger(__name__)


class FockVector:
    def __init__(self, space, grade: int, terms=None):
        self.space = space
        self.grade = grade
        self.terms = {k: c for k, c in (terms or {}).items() if c}

    def __add__(self, other):
        self._check(other)
        terms = dict(self.terms)
        for key, coeff in other.terms.items():
            terms[key] = terms.get(key, self.space.cf.zero) + coeff
        return FockVector(self.space, self.grade, terms)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, factor):
        return FockVector(self.space, self.grade, {k: c * factor for k, c in self.terms.items()})

    def is_zero(self) -> bool:
        return not self.terms

    def normalized_coefficients(self) -> dict:
        """Coefficients against the normalized basis monomial/zfactor."""
        return {k: c * zfactor(k) for k, c in self.terms.items()}

    def column(self) -> list:
        index = self.space.index(self.grade)
        col = [self.space.cf.zero] * len(index)
        for key, coeff in self.terms.items():
            col[index[key]] = coeff
        return col

    def to_text(self) -> dict:
        names = self.space.labels.names
        return {format_weighted(k, names): c for k, c in self.terms.items()}

    def _check(self, other):
        if other.space is not self.space or other.grade != self.grade:
            raise GradeMismatch(f'cannot combine grade {self.grade} with grade {other.grade}')

    def __repr__(self):
        return f'FockVector(grade={self.grade}, {self.to_text()})'


@dataclass(frozen=True)
class HeisenbergWord:
    """Product p_{k_1}(gamma_1) ... p_{k_r}(gamma_r), applied right to left."""

    modes: tuple


class FockSpace:
    def __init__(self, n: int, labels: str = 'omega'):
        self.surface = surface(n)
        self.n = n
        self.cf = self.surface.cf
        self.labels = self.surface.basis(labels)
        self.size = len(self.labels)
        self.label_pairing = self.surface.label_pairing_matrix(labels)
        self._mono_pairing = {}
        self._gram = {}
        self._gram_inverse = {}

    # ----- basis -----

    def basis(self, m: int) -> tuple:
        return enumerate_weighted(m, self.size)

    def index(self, m: int) -> dict:
        return {key: position for position, key in enumerate(self.basis(m))}

    def zvector(self, m: int) -> list:
        return [zfactor(key) for key in self.basis(m)]

    def vacuum(self) -> FockVector:
        return FockVector(self, 0, {(): self.cf.one})

    def monomial(self, key) -> FockVector:
        return FockVector(self, sum(p for p, _ in key), {canonical(key): self.cf.one})

    def normalized(self, key) -> FockVector:
        return FockVector(self, sum(p for p, _ in key), {canonical(key): self.cf.rational(1, zfactor(key))})

    def from_column(self, m: int, column) -> FockVector:
        return FockVector(self, m, dict(zip(self.basis(m), column)))

    def parse(self, text: str):
        return parse_weighted(text, self.labels.names)

    def label_class(self, b: int) -> CohClass:
        return self.labels.classes[b]

    # ----- Heisenberg action -----

    def create(self, v: FockVector, k: int, gamma: CohClass) -> FockVector:
        coords = self.labels.coordinates(gamma)
        terms = {}
        for key, coeff in v.terms.items():
            for b, c in enumerate(coords):
                if c:
                    new = canonical(key + ((k, b),))
                    terms[new] = terms.get(new, self.cf.zero) + coeff * c
        return FockVector(self, v.grade + k, terms)

    def annihilate(self, v: FockVector, k: int, gamma: CohClass) -> FockVector:
        pairings = [self.surface.pairing(gamma, cls) for cls in self.labels.classes]
        terms = {}
        for key, coeff in v.terms.items():
            for position, (part, label) in enumerate(key):
                if part != k or not pairings[label]:
                    continue
                new = key[:position] + key[position + 1:]
                terms[new] = terms.get(new, self.cf.zero) + coeff * (-k) * pairings[label]
        return FockVector(self, v.grade - k, terms)

    # ----- pairing -----

    def mono_pairing(self, a, b):
        """<a|b> for monomial keys: sum over matchings of prod (-1)^(k+1) k <gamma, delta>."""
        cache_key = (a, b)
        if cache_key in self._mono_pairing:
            return self._mono_pairing[cache_key]
        value = self.cf.zero
        if shape(a) == shape(b):
            value = self.cf.one
            for k in sorted(set(shape(a))):
                bra = [label for part, label in a if part == k]
                ket = [label for part, label in b if part == k]
                sign = k if k % 2 else -k
                value *= sign ** len(bra) * self._permanent(bra, ket)
                if not value:
                    break
        self._mono_pairing[cache_key] = value
        return value

    def _permanent(self, bra, ket):
        total = self.cf.zero
        for perm in permutations(range(len(ket))):
            term = self.cf.one
            for r, s in zip(range(len(bra)), perm):
                term *= self.label_pairing[bra[r]][ket[s]]
                if not term:
                    break
            total += term
        return total

    def gram(self, m: int) -> DomainMatrix:
        if m not in self._gram:
            keys = self.basis(m)
            self._gram[m] = matrix([[self.mono_pairing(a, b) for b in keys] for a in keys], self.cf)
        return self._gram[m]

    def gram_inverse(self, m: int) -> DomainMatrix:
        """Inverse of the monomial Gram matrix, one shape block at a time."""
        if m not in self._gram_inverse:
            keys = self.basis(m)
            blocks = {}
            for position, key in enumerate(keys):
                blocks.setdefault(shape(key), []).append(position)
            result = [[self.cf.zero] * len(keys) for _ in keys]
            gram = self.gram(m).to_list()
            for positions in blocks.values():
                block = matrix([[gram[r][c] for c in positions] for r in positions], self.cf).inv().to_list()
                for i, r in enumerate(positions):
                    for j, c in enumerate(positions):
                        result[r][c] = block[i][j]
            self._gram_inverse[m] = matrix(result, self.cf)
            logger.debug('inverted Gram matrix n=%d m=%d (%d blocks)', self.n, m, len(blocks))
        return self._gram_inverse[m]

    def gram_normalized(self, m: int) -> DomainMatrix:
        z = self.zvector(m)
        g = self.gram(m).to_list()
        return matrix([[g[a][b] / (z[a] * z[b]) for b in range(len(z))] for a in range(len(z))], self.cf)

    def inner_product(self, a: FockVector, b: FockVector):
        if a.grade != b.grade:
            raise GradeMismatch(f'pairing of grade {a.grade} with grade {b.grade}')
        total = self.cf.zero
        for ka, ca in a.terms.items():
            for kb, cb in b.terms.items():
                value = self.mono_pairing(ka, kb)
                if value:
                    total += ca * cb * value
        return total

    # ----- operators -----

    def operator_matrix(self, m: int, fn) -> DomainMatrix:
        """Matrix (monomial coordinates) of a grade-preserving map on basis monomials."""
        columns = []
        for key in self.basis(m):
            image = fn(self.monomial(key))
            if image.grade != m:
                raise GradeMismatch(f'operator maps grade {m} to grade {image.grade}')
            columns.append(image.column())
        size = len(columns)
        return matrix([[columns[c][r] for c in range(size)] for r in range(size)], self.cf)

    def to_normalized(self, op: DomainMatrix, m: int) -> DomainMatrix:
        z = self.zvector(m)
        rows = op.to_list()
        return matrix([[rows[a][b] * z[a] / z[b] for b in range(len(z))] for a in range(len(z))], self.cf)

    def from_normalized(self, op: DomainMatrix, m: int) -> DomainMatrix:
        z = self.zvector(m)
        rows = op.to_list()
        return matrix([[rows[a][b] * z[b] / z[a] for b in range(len(z))] for a in range(len(z))], self.cf)

    def bilinear_to_operator(self, bilinear: DomainMatrix, m: int) -> DomainMatrix:
        """Operator matrix O with <a|O b> = bilinear[a][b], monomial coordinates."""
        return self.gram_inverse(m) * bilinear

    # ----- change of labels -----

    def relabel_matrix(self, target: 'FockSpace') -> list:
        """X with source label b = sum_c X[b][c] target label c."""
        return [target.labels.coordinates(cls) for cls in self.labels.classes]

    def relabel(self, v: FockVector, target: 'FockSpace') -> FockVector:
        X = self.relabel_matrix(target)
        cf = self.cf
        terms = {}
        for key, coeff in v.terms.items():
            options = [[(c, x) for c, x in enumerate(X[label]) if x] for _, label in key]
            for choice in product(*options):
                value = coeff
                for _, x in choice:
                    value *= x
                new = canonical((part, c) for (part, _), (c, _) in zip(key, choice))
                terms[new] = terms.get(new, cf.zero) + value
        return FockVector(target, v.grade, terms)

    def change_of_basis(self, target: 'FockSpace', m: int) -> DomainMatrix:
        """Columns: monomials of this space written in target monomial coordinates."""
        columns = [self.relabel(self.monomial(key), target).column() for key in self.basis(m)]
        rows = len(target.basis(m))
        return matrix([[columns[c][r] for c in range(len(columns))] for r in range(rows)], self.cf)


def apply_heisenberg(word: HeisenbergWord, v: FockVector) -> FockVector:
    space = v.space
    for k, gamma in reversed(word.modes):
        if k == 0:
            raise ValueError('Heisenberg modes are nonzero')
        if isinstance(gamma, int):
            gamma = space.label_class(gamma)
        if k < 0:
            v = space.create(v, -k, gamma)
        else:
            v = space.annihilate(v, k, gamma)
    return v


@lru_cache(maxsize=None)
def fock_space(n: int, labels: str = 'omega') -> FockSpace:
    return FockSpace(n, labels)
