"""Equivariant geometry of the A_n surface via its n + 1 torus-fixed points.

A cohomology class is stored by its restrictions to the fixed points; every
pairing is the localization sum over fixed points.
"""
from dataclasses import dataclass
from functools import lru_cache

from sympy import QQ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.exceptions import DMNonInvertibleMatrixError

from .errors import SingularSystem
from .exactalg import coefficient_field, matrix
from .logger import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class Root:
    """Positive root alpha_ij = E_i + ... + E_{j-1}, 1 <= i < j <= n + 1."""

    i: int
    j: int

    def __post_init__(self):
        if not 1 <= self.i < self.j:
            raise ValueError(f'not a positive root: ({self.i}, {self.j})')

    def contains(self, k: int) -> bool:
        """True when E_k is a summand, i.e. (alpha, omega_k) = 1."""
        return self.i <= k < self.j

    def label(self) -> str:
        return f'a{self.i}{self.j}'


@dataclass(frozen=True)
class CohClass:
    values: tuple

    def __add__(self, other):
        return CohClass(tuple(a + b for a, b in zip(self.values, other.values)))

    def __sub__(self, other):
        return CohClass(tuple(a - b for a, b in zip(self.values, other.values)))

    def __mul__(self, other):
        if isinstance(other, CohClass):
            return CohClass(tuple(a * b for a, b in zip(self.values, other.values)))
        return CohClass(tuple(a * other for a in self.values))

    __rmul__ = __mul__

    def __neg__(self):
        return CohClass(tuple(-a for a in self.values))


class LabelBasis:
    """An ordered basis of H*_T(A_n) used to label Nakajima parts."""

    def __init__(self, name: str, names, classes, surface):
        self.name = name
        self.names = tuple(names)
        self.classes = tuple(classes)
        self.surface = surface
        self._inverse = None

    def __len__(self):
        return len(self.classes)

    def restriction_matrix(self) -> DomainMatrix:
        return matrix([list(c.values) for c in self.classes], self.surface.cf)

    def coordinates(self, cls: CohClass) -> list:
        """Solve cls = sum c_b basis_b from restriction values."""
        if self._inverse is None:
            try:
                self._inverse = self.restriction_matrix().inv()
            except DMNonInvertibleMatrixError as exc:
                raise SingularSystem(f'label basis {self.name} is not a basis') from exc
        row = matrix([list(cls.values)], self.surface.cf)
        return (row * self._inverse).to_list()[0]

    def index(self, name: str) -> int:
        return self.names.index(name)


class SurfaceData:
    def __init__(self, n: int):
        if n < 0:
            raise ValueError('n must be >= 0')
        self.n = n
        self.size = n + 1
        self.cf = coefficient_field(n)
        t1, t2 = self.cf.t1, self.cf.t2
        self.wL = tuple((n + 2 - i) * t1 + (1 - i) * t2 for i in range(1, n + 2))
        self.wR = tuple((-n + i - 1) * t1 + i * t2 for i in range(1, n + 2))
        self.euler = tuple(a * b for a, b in zip(self.wL, self.wR))
        self._bases = {}

    # ----- classes -----

    def tangent_weights(self, i: int):
        self._check_point(i)
        return self.wL[i - 1], self.wR[i - 1]

    def unit(self) -> CohClass:
        return CohClass((self.cf.one,) * self.size)

    def exceptional(self, j: int) -> CohClass:
        """E_j, the fixed curve joining p_j and p_{j+1}."""
        if not 1 <= j <= self.n:
            raise ValueError(f'E_{j} does not exist for n={self.n}')
        values = [self.cf.zero] * self.size
        values[j - 1] = self.wL[j - 1]
        values[j] = self.wR[j]
        return CohClass(tuple(values))

    def omega(self, j: int) -> CohClass:
        """omega_j = -sum_l (C^{-1})_{jl} E_l."""
        total = CohClass((self.cf.zero,) * self.size)
        for l in range(1, self.n + 1):
            total = total + self.exceptional(l) * self.cf(-cartan_inverse(self.n)[j - 1][l - 1])
        return total

    def fixed_point_class(self, i: int) -> CohClass:
        self._check_point(i)
        values = [self.cf.zero] * self.size
        values[i - 1] = self.euler[i - 1]
        return CohClass(tuple(values))

    def root_class(self, root: Root) -> CohClass:
        total = CohClass((self.cf.zero,) * self.size)
        for l in range(root.i, root.j):
            total = total + self.exceptional(l)
        return total

    def restriction(self, cls: CohClass, i: int):
        self._check_point(i)
        return cls.values[i - 1]

    # ----- pairings -----

    def pairing(self, a: CohClass, b: CohClass):
        total = self.cf.zero
        for va, vb, e in zip(a.values, b.values, self.euler):
            if va and vb:
                total += va * vb / e
        return total

    def root_pairing(self, root: Root, gamma: CohClass):
        return self.pairing(self.root_class(root), gamma)

    def roots(self) -> list:
        return [Root(i, j) for i in range(1, self.size) for j in range(i + 1, self.size + 1)]

    # ----- label bases -----

    def basis(self, name: str = 'omega') -> LabelBasis:
        if name not in self._bases:
            self._bases[name] = self._build_basis(name)
        return self._bases[name]

    def _build_basis(self, name: str) -> LabelBasis:
        n = self.n
        if name == 'omega':
            names = [f'w{j}' for j in range(1, n + 1)] + ['1']
            classes = [self.omega(j) for j in range(1, n + 1)] + [self.unit()]
        elif name == 'e':
            names = [f'e{j}' for j in range(1, n + 1)] + ['1']
            classes = [self.exceptional(j) for j in range(1, n + 1)] + [self.unit()]
        elif name == 'fixed':
            names = [f'p{i}' for i in range(1, n + 2)]
            classes = [self.fixed_point_class(i) for i in range(1, n + 2)]
        elif name == 'ew':
            if n != 1:
                raise ValueError("the 'ew' basis exists only for n = 1")
            t1, t2 = self.cf.t1, self.cf.t2
            p1, p2 = self.fixed_point_class(1), self.fixed_point_class(2)
            classes = [p1 * (1 / (2 * t1)) - p2 * (1 / (2 * t2)),
                       p1 * (1 / (t2 - t1)) + p2 * (1 / (t1 - t2))]
            names = ['e', 'w']
        else:
            raise ValueError(f'unknown label basis {name!r}')
        logger.debug('built label basis %s for n=%d', name, n)
        return LabelBasis(name, names, classes, self)

    def label_pairing_matrix(self, name: str) -> list:
        classes = self.basis(name).classes
        return [[self.pairing(a, b) for b in classes] for a in classes]

    def _check_point(self, i: int):
        if not 1 <= i <= self.size:
            raise IndexError(f'fixed point p_{i} does not exist for n={self.n}')


def cartan_matrix(n: int) -> list:
    return [[2 if a == b else (-1 if abs(a - b) == 1 else 0) for b in range(n)] for a in range(n)]


@lru_cache(maxsize=None)
def cartan_inverse(n: int) -> tuple:
    """(C^{-1})_{jl} = min(j, l)(n + 1 - max(j, l))/(n + 1)."""
    return tuple(
        tuple(QQ(min(j, l) * (n + 1 - max(j, l)), n + 1) for l in range(1, n + 1))
        for j in range(1, n + 1)
    )


@lru_cache(maxsize=None)
def surface(n: int) -> SurfaceData:
    return SurfaceData(n)

