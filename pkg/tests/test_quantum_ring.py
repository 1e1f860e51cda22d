import itertools

import pytest
from hypothesis import given

from quantum_schubert.errors import ContextMismatchError, InputError
from quantum_schubert.grassmannian.classical_ring import CohClass, cup_basis
from quantum_schubert.grassmannian.quantum_ring import (
    GWInstance,
    QClass,
    dimension_check,
    gw3,
    qmul,
    qmul_basis,
    qmul_many,
    qpieri,
    quantum_strips,
)
from quantum_schubert.grassmannian.schubert_index import GrContext, codim, from_partition
from tests.strategies import index_tuples


def q(x, d=0):
    return QClass.basis(x, d)


def test_gr24_multiplication_table(gr24, sigma):
    one, s1, s2, s11, s21, s22 = sigma(), sigma(1), sigma(2), sigma(1, 1), sigma(2, 1), sigma(2, 2)
    table = {
        (s1, s1): q(s2) + q(s11),
        (s1, s21): q(s22) + q(one, 1),
        (s1, s22): q(s1, 1),
        (s2, s11): q(one, 1),
        (s2, s2): q(s22),
        (s11, s11): q(s22),
        (s21, s21): q(s2, 1) + q(s11, 1),
        (s21, s22): q(s21, 1),
        (s22, s22): q(one, 2),
    }
    for (i, j), expected in table.items():
        assert qmul_basis(i, j) == expected, (i, j)
        assert qmul_basis(j, i) == expected, (j, i)


def test_unit(gr24):
    for index in gr24.indices():
        assert qmul_basis(gr24.fundamental(), index) == q(index)


def test_quantum_strips():
    assert quantum_strips((2, 1), 1, 4) == [(0, 0)]
    assert quantum_strips((2, 0), 2, 4) == []
    assert quantum_strips((1, 1), 1, 4) == []
    assert quantum_strips((2, 2), 2, 4) == [(1, 1)]


def test_qpieri(gr24, sigma):
    assert qpieri(1, sigma(2, 1)) == q(sigma(2, 2)) + q(sigma(), 1)
    assert qpieri(2, sigma(2, 2)) == q(sigma(1, 1), 1)
    assert qpieri(0, sigma(2, 1)) == q(sigma(2, 1))
    with pytest.raises(InputError):
        qpieri(3, sigma(1))


def test_gr25_degree_one_term():
    ctx = GrContext(5, 2)
    s3, s32 = from_partition(ctx, (3,)), from_partition(ctx, (3, 2))
    assert qmul_basis(s3, s32) == q(from_partition(ctx, (2, 1)), 1)


def test_qclass_accessors(gr24, sigma):
    x = q(sigma(1)) + q(sigma(2), 1).scale(3) - q(sigma(), 2)
    assert x.degrees() == [0, 1, 2]
    assert x.min_degree() == 0
    assert x.coefficient(sigma(2), 1) == 3
    assert x.coefficient(sigma(2)) == 0
    assert x.part(1) == CohClass.from_dict(gr24, {sigma(2): 3})
    assert x.classical_limit() == CohClass.basis(sigma(1))
    assert x.times_q(2).min_degree() == 2
    assert QClass.from_json(x.to_json()) == x
    assert QClass.from_coh(CohClass.basis(sigma(1)), 1) == q(sigma(1), 1)
    assert QClass.zero(gr24).min_degree() is None
    assert not (x - x)


def test_qmul_of_combinations(gr24, sigma):
    x = q(sigma(1)).scale(2) + q(sigma(2), 1)
    y = q(sigma(1))
    expected = (q(sigma(2)) + q(sigma(1, 1))).scale(2) + q(sigma(2, 1), 1)
    assert qmul(x, y) == expected
    assert qmul_many([y, y, y, y]) == q(sigma(2, 2)).scale(2) + q(sigma(), 1).scale(2)


def test_mixed_contexts_are_rejected(gr24):
    other = GrContext(5, 2)
    with pytest.raises(ContextMismatchError):
        qmul(q(gr24.point()), q(other.point()))
    with pytest.raises(ContextMismatchError):
        GWInstance((gr24.point(), gr24.point(), other.point()), 0)


def test_unknown_expansion_order(gr24):
    with pytest.raises(InputError):
        qmul_basis(gr24.point(), gr24.point(), expand="middle")


def test_gw_instance_validation(gr24):
    p = gr24.point()
    with pytest.raises(InputError):
        GWInstance((p, p), 0)
    with pytest.raises(InputError):
        GWInstance((p, p, p), -1)
    inst = GWInstance((p, p, p), 2)
    assert inst.to_text() == "<{1,2},{1,2},{1,2}>_2"
    assert inst.to_json() == {"n": 4, "r": 2, "indices": [[1, 2], [1, 2], [1, 2]], "d": 2}


def test_gw3_values(gr24, sigma):
    p = gr24.point()
    assert gw3(p, p, p, 2) == 1
    assert gw3(gr24.fundamental(), gr24.fundamental(), p, 0) == 1
    assert gw3(sigma(1), sigma(2, 1), p, 1) == 1
    assert gw3(sigma(2), sigma(1, 1), p, 1) == 1
    assert gw3(sigma(2), sigma(2), p, 1) == 0
    # dimension condition fails
    assert gw3(p, p, p, 5) == 0
    assert not dimension_check(GWInstance((p, p, p), 5))


@given(index_tuples(2, max_n=7))
def test_qmul_is_commutative(case):
    _, (i, j) = case
    assert qmul_basis(i, j) == qmul_basis(j, i)


@given(index_tuples(2))
def test_classical_limit_is_cup_product(case):
    _, (i, j) = case
    assert qmul_basis(i, j).classical_limit() == cup_basis(i, j)


@given(index_tuples(2))
def test_terms_respect_degree(case):
    ctx, (i, j) = case
    for d, k, _ in qmul_basis(i, j).terms:
        assert codim(k) == codim(i) + codim(j) - ctx.n * d


@given(index_tuples(2))
def test_expansion_order_does_not_matter(case):
    _, (i, j) = case
    assert qmul_basis(i, j, "left") == qmul_basis(i, j, "right")


@given(index_tuples(3, max_n=6))
def test_qmul_is_associative(case):
    _, (i, j, k) = case
    assert qmul(qmul_basis(i, j), q(k)) == qmul(q(i), qmul_basis(j, k))


@given(index_tuples(3, max_n=5))
def test_gw3_is_symmetric(case):
    ctx, (i, j, k) = case
    total = codim(i) + codim(j) + codim(k) - ctx.dimension
    if total < 0 or total % ctx.n:
        return
    d = total // ctx.n
    values = {gw3(*p, d) for p in itertools.permutations((i, j, k))}
    assert len(values) == 1
