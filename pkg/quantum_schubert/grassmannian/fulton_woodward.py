import dataclasses
from typing import Dict, List, Tuple

from quantum_schubert.grassmannian.classical_ring import CohClass, cup
from quantum_schubert.grassmannian.quantum_ring import qmul_basis
from quantum_schubert.grassmannian.schubert_index import SchubertIndex, require_same_context, shift, shift_count


@dataclasses.dataclass(frozen=True)
class LowestDegree:
    """Smallest power of q in sigma(I) * sigma(J).

    maximizer is the pair (i, n-i) with the smallest i among all maximizers.
    """
    degree: int
    maximizer: Tuple[int, int]
    maximizers: Tuple[Tuple[int, int], ...]


def min_q_degree(i: SchubertIndex, j: SchubertIndex) -> LowestDegree:
    """max over a + b = n of d_a(I) + d_b(J) - r"""
    ctx = require_same_context(i, j)
    values = [(shift_count(i, a) + shift_count(j, ctx.n - a) - ctx.r, a) for a in range(ctx.n + 1)]
    degree = max(v for v, _ in values)
    maximizers = tuple((a, ctx.n - a) for v, a in values if v == degree)
    return LowestDegree(degree, maximizers[0], maximizers)


def _shifted_cup(i: SchubertIndex, j: SchubertIndex, pair: Tuple[int, int]) -> CohClass:
    a, b = pair
    return cup(CohClass.basis(shift(i, a).index), CohClass.basis(shift(j, b).index))


def lowest_term(i: SchubertIndex, j: SchubertIndex) -> Tuple[int, CohClass]:
    """q^d (sigma(I-a) cup sigma(J-b)), the lowest-order part of sigma(I) * sigma(J)"""
    lowest = min_q_degree(i, j)
    return lowest.degree, _shifted_cup(i, j, lowest.maximizer)


def count_bound_holds(i: SchubertIndex, j: SchubertIndex, pair: Tuple[int, int]) -> bool:
    """c_k + c'_{n-k} <= r for the shifted classes at every k"""
    ctx = require_same_context(i, j)
    si, sj = shift(i, pair[0]).index, shift(j, pair[1]).index
    return all(shift_count(si, k) + shift_count(sj, ctx.n - k) <= ctx.r for k in range(ctx.n + 1))


def verify_fw(i: SchubertIndex, j: SchubertIndex) -> bool:
    """Check the minimal q-degree and the lowest-order term of sigma(I) * sigma(J) against the quantum product."""
    lowest = min_q_degree(i, j)
    product = qmul_basis(i, j)
    if product.min_degree() != lowest.degree:
        return False
    expected = _shifted_cup(i, j, lowest.maximizer)
    if not expected or product.part(lowest.degree) != expected:
        return False
    return all(_shifted_cup(i, j, pair) == expected for pair in lowest.maximizers[1:])


def fw_report(i: SchubertIndex, j: SchubertIndex) -> Dict:
    lowest = min_q_degree(i, j)
    d, term = lowest_term(i, j)
    return {
        "I": i.to_json(),
        "J": j.to_json(),
        "degree": d,
        "maximizer": list(lowest.maximizer),
        "maximizers": [list(p) for p in lowest.maximizers],
        "lowest_term": term.to_json(),
        "verified": verify_fw(i, j),
    }
