import pytest

from hilbquant.combinat import (
    content_sum,
    core_quotient,
    dimension,
    e_lambda,
    empty_core_partitions,
    enumerate_weighted,
    epsilon,
    format_multipartition,
    format_weighted,
    from_core_quotient,
    hook_product,
    multipartitions,
    parse_multipartition,
    parse_weighted,
    partitions_of,
    transpose,
    zee,
    zfactor,
)
from hilbquant.errors import ParseError
from hilbquant.exactalg import ratfunc_eq


def test_partitions_in_reverse_lex_order():
    assert partitions_of(4) == ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))
    assert partitions_of(0) == ((),)


def test_transpose_and_hooks():
    assert transpose((3, 1)) == (2, 1, 1)
    assert transpose(()) == ()
    assert dimension((2, 1)) == 2
    assert dimension((3, 2)) == 5
    assert hook_product((3,)) == 6


def test_content_sum_rows_and_columns():
    assert content_sum((2,), 1, 10) == 1
    assert content_sum((1, 1), 1, 10) == 10
    assert content_sum((2, 1), 1, 10) == 11


@pytest.mark.parametrize('m', [1, 2, 4])
def test_epsilon(m):
    assert epsilon((m,)) == m * (m - 1) // 2
    assert epsilon((1,) * m) == 0
    assert epsilon((3, 1)) == 3


def test_zee():
    assert zee((2, 1, 1)) == 4
    assert zee((3,)) == 3
    assert zfactor(((1, 0), (1, 0))) == 2
    assert zfactor(((2, 0), (1, 1))) == 2


def test_weighted_basis_order():
    assert enumerate_weighted(2, 2) == (
        ((1, 0), (1, 0)),
        ((2, 0),),
        ((1, 0), (1, 1)),
        ((1, 1), (1, 1)),
        ((2, 1),),
    )


def test_weighted_text_form():
    names = ('w1', '1')
    key = ((2, 0), (1, 1))
    assert format_weighted(key, names) == '2(w1).1(1)'
    assert parse_weighted('1(1).2(w1)', names) == key
    assert parse_weighted('vac', names) == ()


@pytest.mark.parametrize('text', ['2', '0(w1)', '2(zz)', 'a(1)'])
def test_weighted_parse_errors(text):
    with pytest.raises(ParseError):
        parse_weighted(text, ('w1', '1'))


def test_multipartition_text_form():
    assert parse_multipartition('[2,1|]', 2) == ((2, 1), ())
    assert format_multipartition(((2, 1), ())) == '[2,1|]'
    with pytest.raises(ParseError):
        parse_multipartition('[1|1|1]', 2)
    with pytest.raises(ParseError):
        parse_multipartition('[1,2|]', 2)


def test_multipartition_count():
    # bipartitions of 2: ([2],[]), ([1,1],[]), ([1],[1]), ([],[2]), ([],[1,1])
    assert len(multipartitions(2, 2)) == 5


@pytest.mark.parametrize('r', [2, 3])
def test_core_quotient_is_a_bijection(r):
    for d in range(7):
        for lam in partitions_of(d):
            core, quotient = core_quotient(lam, r)
            assert from_core_quotient(core, quotient, r) == lam
            assert sum(core) + r * sum(sum(q) for q in quotient) == d


def test_empty_core_partitions():
    found = empty_core_partitions(2, 2)
    assert len(found) == 5
    assert all(sum(lam) == 4 and core_quotient(lam, 2)[0] == () for lam in found)


def test_e_lambda_vacuum_chain(cf1):
    empty = e_lambda((), cf1)
    assert ratfunc_eq(empty, cf1.u / (cf1.u ** 2 - 1))
    for m in range(1, 5):
        previous = (m - 1,) if m > 1 else ()
        assert ratfunc_eq(empty * (e_lambda(previous, cf1) - e_lambda((m,), cf1)), -cf1.x ** (m - 1))


def _coloured_partition_count(m, colours):
    counts = [1] + [0] * m
    for k in range(1, m + 1):
        for _ in range(colours):
            for total in range(k, m + 1):
                counts[total] += counts[total - k]
    return counts[m]


@pytest.mark.parametrize('b', [1, 2, 3, 4])
def test_weighted_basis_counts(b):
    for m in range(11):
        found = enumerate_weighted(m, b)
        assert len(found) == _coloured_partition_count(m, b), (m, b)
        assert len(set(found)) == len(found)
        assert all(sum(part for part, _ in mu) == m for mu in found)
