"""Partitions, multipartitions and cohomology-weighted partitions.

Partitions are weakly decreasing tuples of positive ints. A weighted partition
(a Nakajima monomial) is a tuple of ``(part, label)`` pairs in canonical order,
part descending then label index ascending.
"""
from collections import Counter
from functools import lru_cache
from itertools import product
from math import comb, factorial, prod

from sympy.utilities.iterables import partitions as _sympy_partitions

from .errors import ParseError

Partition = tuple
MultiPartition = tuple
WeightedPartition = tuple


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple:
    """All partitions of n, in reverse lexicographic order ((n) first)."""
    result = []
    for block in _sympy_partitions(n):
        parts = []
        for part, multiplicity in block.items():
            parts.extend([part] * multiplicity)
        result.append(tuple(sorted(parts, reverse=True)))
    return tuple(sorted(result, reverse=True))


def size(lam: Partition) -> int:
    return sum(lam)


def transpose(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for part in lam if part > j) for j in range(lam[0]))


def epsilon(lam: Partition) -> int:
    return sum(comb(part, 2) for part in lam)


def n_statistic(lam: Partition) -> int:
    """n(lambda) = sum (i - 1) lambda_i."""
    return sum(i * part for i, part in enumerate(lam))


def content_sum(lam: Partition, wL, wR):
    """sum over boxes (i, j) of (j - 1) wL + (i - 1) wR; row i, column j."""
    total = wL * 0
    for i, part in enumerate(lam):
        total += comb(part, 2) * wL + i * part * wR
    return total


def zee(lam: Partition) -> int:
    """z_lambda = prod_k k^{m_k} m_k!."""
    return prod(k ** m * factorial(m) for k, m in Counter(lam).items())


def dimension(lam: Partition) -> int:
    """Number of standard Young tableaux, by the hook length formula."""
    conj = transpose(lam)
    hooks = prod(lam[i] - j + conj[j] - i - 1 for i in range(len(lam)) for j in range(lam[i]))
    return factorial(size(lam)) // hooks


def hook_product(lam: Partition) -> int:
    return factorial(size(lam)) // dimension(lam)


def e_lambda(lam: Partition, cf):
    """Regularized sum of (-q)^(lambda_i - i + 1/2) over all i >= 1, in u."""
    u = cf.u
    length = len(lam)
    head = cf.zero
    for i, part in enumerate(lam, start=1):
        head += u ** (2 * (part - i) + 1)
    return head + u ** (1 - 2 * length) / (u ** 2 - 1)


# ---------- weighted partitions ----------

def canonical(pairs) -> WeightedPartition:
    return tuple(sorted(pairs, key=lambda pl: (-pl[0], pl[1])))


def weighted_size(mu: WeightedPartition) -> int:
    return sum(part for part, _ in mu)


def shape(mu: WeightedPartition) -> Partition:
    return tuple(part for part, _ in mu)


def components(mu: WeightedPartition, basis_size: int) -> tuple:
    """Per-label partitions (parts labelled 0, parts labelled 1, ...)."""
    return tuple(tuple(part for part, label in mu if label == c) for c in range(basis_size))


def from_components(parts_by_label) -> WeightedPartition:
    return canonical((part, label) for label, parts in enumerate(parts_by_label) for part in parts)


def zfactor(mu: WeightedPartition) -> int:
    """prod of parts times the automorphism count of the labelled multiset."""
    return prod(part for part, _ in mu) * prod(factorial(m) for m in Counter(mu).values())


def _enumeration_key(mu: WeightedPartition, basis_size: int):
    return tuple((-sum(parts), tuple(sorted(parts))) for parts in components(mu, basis_size))


def _compositions(total: int, slots: int):
    if slots == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, slots - 1):
            yield (first,) + rest


@lru_cache(maxsize=None)
def enumerate_weighted(m: int, basis_size: int) -> tuple:
    """All weighted partitions of m with labels 0..basis_size-1, in basis order.

    The order groups by label component, larger components first, and within a
    component orders parts ascending; for two labels and m = 2 this is
    (1,a)(1,a), (2,a), (1,a)(1,b), (1,b)(1,b), (2,b).
    """
    found = []
    for sizes in _compositions(m, basis_size):
        for choice in product(*(partitions_of(k) for k in sizes)):
            found.append(from_components(choice))
    return tuple(sorted(found, key=lambda mu: _enumeration_key(mu, basis_size)))


def multipartitions(m: int, slots: int) -> tuple:
    found = []
    for sizes in _compositions(m, slots):
        found.extend(product(*(partitions_of(k) for k in sizes)))
    return tuple(found)


def format_weighted(mu: WeightedPartition, names) -> str:
    if not mu:
        return 'vac'
    return '.'.join(f'{part}({names[label]})' for part, label in mu)


def parse_weighted(text: str, names) -> WeightedPartition:
    text = text.strip()
    if text in ('', 'vac'):
        return ()
    pairs = []
    for token in text.split('.'):
        token = token.strip()
        if not token.endswith(')') or '(' not in token:
            raise ParseError(f'bad weighted part {token!r}; expected like 2(w1)')
        head, label = token[:-1].split('(', 1)
        if not head.isdigit() or int(head) <= 0:
            raise ParseError(f'bad part size in {token!r}')
        if label not in names:
            raise ParseError(f'unknown label {label!r}; expected one of {", ".join(names)}')
        pairs.append((int(head), list(names).index(label)))
    return canonical(pairs)


def format_multipartition(lams: MultiPartition) -> str:
    return '[' + '|'.join(','.join(str(p) for p in lam) for lam in lams) + ']'


def parse_multipartition(text: str, slots: int) -> MultiPartition:
    text = text.strip()
    if not (text.startswith('[') and text.endswith(']')):
        raise ParseError(f'multipartition must look like [3,1|2|], got {text!r}')
    fields = text[1:-1].split('|')
    if len(fields) != slots:
        raise ParseError(f'expected {slots} slots, got {len(fields)}')
    result = []
    for chunk in fields:
        chunk = chunk.strip()
        try:
            parts = tuple(int(p) for p in chunk.split(',')) if chunk else ()
        except ValueError as exc:
            raise ParseError(f'bad partition {chunk!r}') from exc
        if any(p <= 0 for p in parts) or list(parts) != sorted(parts, reverse=True):
            raise ParseError(f'not a partition: {chunk!r}')
        result.append(parts)
    return tuple(result)


# ---------- cores and quotients ----------

def beta_set(lam: Partition, beads: int) -> list:
    padded = list(lam) + [0] * (beads - len(lam))
    return [padded[i] + beads - 1 - i for i in range(beads)]


def from_beta_set(betas) -> Partition:
    betas = sorted(betas, reverse=True)
    beads = len(betas)
    return tuple(p for p in (betas[i] - (beads - 1 - i) for i in range(beads)) if p > 0)


def core_quotient(lam: Partition, r: int):
    """(r-core, r-quotient) via an abacus with a multiple of r beads."""
    if r < 2:
        raise ValueError('core_quotient needs r >= 2')
    beads = r * (len(lam) + 1)
    runners = [[] for _ in range(r)]
    for beta in beta_set(lam, beads):
        runners[beta % r].append(beta // r)
    quotient = []
    core_betas = []
    for c, levels in enumerate(runners):
        levels.sort(reverse=True)
        count = len(levels)
        quotient.append(_trim(tuple(levels[t] - (count - 1 - t) for t in range(count))))
        core_betas.extend(r * level + c for level in range(count))
    return from_beta_set(core_betas), tuple(quotient)


def _trim(parts) -> Partition:
    return tuple(p for p in parts if p > 0)


def from_core_quotient(core: Partition, quotient, r: int) -> Partition:
    """Inverse of core_quotient."""
    total = size(core) + sum(size(q) for q in quotient)
    beads = r * (2 * total + len(core) + 2)
    runners = [[] for _ in range(r)]
    for beta in beta_set(core, beads):
        runners[beta % r].append(beta // r)
    betas = []
    for c, levels in enumerate(runners):
        count = len(levels)
        parts = list(quotient[c]) + [0] * (count - len(quotient[c]))
        betas.extend(r * (parts[t] + count - 1 - t) + c for t in range(count))
    return from_beta_set(betas)


def empty_core_partitions(m: int, r: int) -> tuple:
    """Partitions of r*m with empty r-core, one per r-quotient of total size m."""
    return tuple(from_core_quotient((), quotient, r) for quotient in multipartitions(m, r))
