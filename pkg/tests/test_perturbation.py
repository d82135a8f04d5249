import pytest

from hilbquant.exactalg import ratfunc_eq
from hilbquant.perturbation import block_eigenvalue, epsilon_factor, kappa, perturbation_check, perturbation_eigenvalues


def test_kappa(cf1):
    u = cf1.u
    assert ratfunc_eq(kappa(1, cf1), 2 * (u - 1 / u) ** 2)
    assert ratfunc_eq(kappa(2, cf1), (u ** 2 - u ** -2) ** 2)


def test_epsilon_factor(cf1):
    k = kappa(1, cf1)
    assert ratfunc_eq(epsilon_factor(1, 0, cf1), 1)
    assert ratfunc_eq(epsilon_factor(1, 1, cf1), 1 + k)
    assert ratfunc_eq(epsilon_factor(1, 2, cf1), 1 + 2 * k + k ** 2 / 2)


def test_block_eigenvalue_counts_w_parts(cf1):
    # labels: 0 = e, 1 = w
    assert ratfunc_eq(block_eigenvalue(((1, 0), (1, 0)), cf1), 1)
    assert ratfunc_eq(block_eigenvalue(((2, 1), (1, 1)), cf1), epsilon_factor(2, 1, cf1) * epsilon_factor(1, 1, cf1))


@pytest.mark.parametrize('m', [1, 2, 3])
def test_shape_blocks_split_at_first_order(m):
    ok, witness = perturbation_check(m)
    assert ok, witness


def test_blocks_cover_the_basis():
    blocks = perturbation_eigenvalues(2)
    assert [b.shape for b in blocks] == [(2,), (1, 1)]
    assert sum(len(b.keys) for b in blocks) == 5


@pytest.mark.slow
def test_shape_blocks_split_on_grade_four():
    ok, witness = perturbation_check(4)
    assert ok, witness


@pytest.mark.parametrize('k', [1, 2, 3])
def test_single_part_block(cf1, k):
    block = next(b for b in perturbation_eigenvalues(k) if b.shape == (k,))
    Q = -cf1.u ** 2 / (1 - cf1.u ** 2) ** 2
    normalized = [value / Q for value in block.eigenvalues]
    assert len(normalized) == 2
    assert any(ratfunc_eq(v, 1) for v in normalized)
    assert any(ratfunc_eq(v, 1 + kappa(k, cf1)) for v in normalized)


def test_size_one_parts_collide_after_differentiation():
    # Q kappa_1 = -2, so e and w on a single box have the same q d/dq eigenvalue
    (block,) = perturbation_eigenvalues(1)
    assert block.distinct
    assert [set(pair) for pair in block.derivative_collisions] == [{((1, 0),), ((1, 1),)}]


def test_larger_parts_stay_distinct_after_differentiation():
    block = next(b for b in perturbation_eigenvalues(2) if b.shape == (2,))
    assert block.derivative_collisions == []
