import dataclasses
import functools
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from quantum_schubert.errors import CoefficientOverflowError, InputError, ContextMismatchError
from quantum_schubert.grassmannian.schubert_index import (
    GrContext,
    Partition,
    SchubertIndex,
    from_partition,
    normalize_partition,
    require_same_context,
    to_partition,
)

INT64_MIN = -2 ** 63
INT64_MAX = 2 ** 63 - 1


def checked_add(a: int, b: int) -> int:
    s = a + b
    if not INT64_MIN <= s <= INT64_MAX:
        raise CoefficientOverflowError(f"Coefficient {a} + {b} leaves the signed 64-bit range")
    return s


def checked_mul(a: int, b: int) -> int:
    p = a * b
    if not INT64_MIN <= p <= INT64_MAX:
        raise CoefficientOverflowError(f"Coefficient {a} * {b} leaves the signed 64-bit range")
    return p


def accumulate(acc: Dict, key, value: int):
    acc[key] = checked_add(acc.get(key, 0), value)


@dataclasses.dataclass(frozen=True)
class CohClass:
    """An integer combination of Schubert classes in H*(Gr(r,n)).

    Terms are kept sorted by index with zero coefficients dropped, so equal classes compare equal.
    """
    ctx: GrContext
    terms: Tuple[Tuple[SchubertIndex, int], ...] = ()

    @staticmethod
    def from_dict(ctx: GrContext, mapping: Mapping[SchubertIndex, int]) -> "CohClass":
        for index in mapping:
            if index.ctx != ctx:
                raise ContextMismatchError(f"Index {index} does not belong to {ctx}")
        return CohClass(ctx, tuple(sorted((i, c) for i, c in mapping.items() if c != 0)))

    @staticmethod
    def basis(index: SchubertIndex) -> "CohClass":
        return CohClass(index.ctx, ((index, 1),))

    @staticmethod
    def zero(ctx: GrContext) -> "CohClass":
        return CohClass(ctx)

    def as_dict(self) -> Dict[SchubertIndex, int]:
        return dict(self.terms)

    def coefficient(self, index: SchubertIndex) -> int:
        return self.as_dict().get(index, 0)

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other: "CohClass") -> "CohClass":
        if self.ctx != other.ctx:
            raise ContextMismatchError(f"Cannot add classes of {self.ctx} and {other.ctx}")
        acc = self.as_dict()
        for index, coeff in other.terms:
            accumulate(acc, index, coeff)
        return CohClass.from_dict(self.ctx, acc)

    def __neg__(self) -> "CohClass":
        return self.scale(-1)

    def __sub__(self, other: "CohClass") -> "CohClass":
        return self + (-other)

    def scale(self, k: int) -> "CohClass":
        return CohClass.from_dict(self.ctx, {i: checked_mul(c, k) for i, c in self.terms})

    def to_json(self) -> Dict:
        return {
            "n": self.ctx.n,
            "r": self.ctx.r,
            "terms": [{"index": list(i.elements), "coeff": c} for i, c in self.terms],
        }

    @staticmethod
    def from_json(j: Dict) -> "CohClass":
        try:
            ctx = GrContext(j["n"], j["r"])
            return CohClass.from_dict(ctx, {ctx.index(t["index"]): t["coeff"] for t in j["terms"]})
        except (KeyError, TypeError) as e:
            raise InputError(f"Malformed class JSON: {e}")


def horizontal_strips(lam: Partition, a: int, width: int) -> List[Partition]:
    """Partitions mu with width >= mu_1 >= lam_1 >= mu_2 >= ... >= mu_r >= lam_r and |mu| = |lam| + a.

    lam must be padded to its full length r. The result is in lexicographic order.
    """
    r = len(lam)
    out = []

    def place(k: int, remaining: int, prefix: Tuple[int, ...]):
        if k == r:
            if remaining == 0:
                out.append(prefix)
            return
        upper = width if k == 0 else lam[k - 1]
        for mu_k in range(lam[k], upper + 1):
            if mu_k - lam[k] > remaining:
                break
            place(k + 1, remaining - (mu_k - lam[k]), prefix + (mu_k,))

    place(0, a, ())
    return out


@functools.lru_cache(maxsize=None)
def _classical_pieri(a: int, index: SchubertIndex) -> CohClass:
    ctx = index.ctx
    terms = {from_partition(ctx, mu): 1 for mu in horizontal_strips(to_partition(index), a, ctx.box_width)}
    return CohClass.from_dict(ctx, terms)


def classical_pieri(a: int, index: SchubertIndex) -> CohClass:
    """sigma_a cup sigma(I): every K whose partition interlaces I's and adds a boxes, coefficient 1."""
    if not isinstance(a, int) or not 0 <= a <= index.ctx.box_width:
        raise InputError(f"Pieri degree must be in 0..{index.ctx.box_width}, got {a}")
    return _classical_pieri(a, index)


@functools.lru_cache(maxsize=None)
def giambelli_expansion(parts: Partition) -> Tuple[Tuple[Tuple[int, ...], int], ...]:
    """Expand sigma_parts as a signed sum of monomials in special classes.

    Each monomial is a weakly decreasing tuple of special degrees (the empty tuple is the unit).
    The recursion is
        (-1)^d sigma_(a_1..a_d) = sum_j (-1)^j sigma_(a_1..a_{j-1}, a_{j+1}-1..a_d-1) * sigma_(a_j+d-j)
    over j = 1..d, a cofactor expansion of the Jacobi-Trudi determinant. It holds verbatim in the
    quantum ring; the box width is applied by the caller when it folds Pieri products.
    """
    parts = normalize_partition(parts)
    d = len(parts)
    if d == 0:
        return (((), 1),)
    if d == 1:
        return (((parts[0],), 1),)

    acc: Dict[Tuple[int, ...], int] = {}
    for j in range(1, d + 1):
        special = parts[j - 1] + d - j
        # parts has no zero entries, so rest is again a partition
        rest = parts[:j - 1] + tuple(p - 1 for p in parts[j:])
        sign = (-1) ** (j + d)
        for monomial, coeff in giambelli_expansion(rest):
            key = tuple(sorted(monomial + (special,), reverse=True))
            accumulate(acc, key, checked_mul(sign, coeff))
    return tuple(sorted((m, c) for m, c in acc.items() if c != 0))


def choose_expansion(i: SchubertIndex, j: SchubertIndex) -> Tuple[SchubertIndex, SchubertIndex]:
    """Order a product so the factor with fewer nonzero parts is expanded.

    Ties go to the lexicographically smaller partition. Returns (expanded, folded).
    """
    pi, pj = normalize_partition(to_partition(i)), normalize_partition(to_partition(j))
    if (len(pi), pi) <= (len(pj), pj):
        return i, j
    return j, i


def _fold_specials(monomial: Sequence[int], start: SchubertIndex) -> Dict[SchubertIndex, int]:
    ctx = start.ctx
    current = {start: 1}
    for a in monomial:
        if a > ctx.box_width:
            return {}
        nxt: Dict[SchubertIndex, int] = {}
        for index, coeff in current.items():
            for k, c in classical_pieri(a, index).terms:
                accumulate(nxt, k, checked_mul(coeff, c))
        current = nxt
    return current


@functools.lru_cache(maxsize=None)
def cup_basis(i: SchubertIndex, j: SchubertIndex) -> CohClass:
    ctx = require_same_context(i, j)
    expanded, folded = choose_expansion(i, j)
    acc: Dict[SchubertIndex, int] = {}
    for monomial, coeff in giambelli_expansion(to_partition(expanded)):
        for k, c in _fold_specials(monomial, folded).items():
            accumulate(acc, k, checked_mul(coeff, c))
    return CohClass.from_dict(ctx, acc)


def cup(x: CohClass, y: CohClass) -> CohClass:
    if x.ctx != y.ctx:
        raise ContextMismatchError(f"Cannot multiply classes of {x.ctx} and {y.ctx}")
    acc: Dict[SchubertIndex, int] = {}
    for i, ci in x.terms:
        for j, cj in y.terms:
            for k, c in cup_basis(i, j).terms:
                accumulate(acc, k, checked_mul(checked_mul(ci, cj), c))
    return CohClass.from_dict(x.ctx, acc)


def cup_many(classes: Iterable[CohClass]) -> CohClass:
    classes = list(classes)
    if not classes:
        raise InputError("cup_many needs at least one class")
    result = classes[0]
    for x in classes[1:]:
        result = cup(result, x)
    return result


def integral(x: CohClass) -> int:
    """Coefficient of the point class sigma({1..r})"""
    return x.coefficient(x.ctx.point())


def lr_coefficient(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> int:
    """Littlewood-Richardson coefficient c^nu_{lam,mu} by counting LR skew tableaux.

    Fills nu/lam with content mu so that rows weakly increase, columns strictly increase and the
    reverse reading word (rows top to bottom, each right to left) is a lattice word.
    Shares no code with the Pieri and Giambelli products.
    """
    lam, mu, nu = normalize_partition(lam), normalize_partition(mu), normalize_partition(nu)
    if sum(nu) != sum(lam) + sum(mu):
        return 0
    if len(lam) > len(nu) or any(l > v for l, v in zip(lam, nu)):
        return 0
    lam_padded = lam + (0,) * (len(nu) - len(lam))
    cells = [(row, col) for row in range(len(nu)) for col in reversed(range(lam_padded[row], nu[row]))]
    filling: Dict[Tuple[int, int], int] = {}
    counts = [0] * (len(mu) + 1)

    def place(pos: int) -> int:
        if pos == len(cells):
            return 1
        row, col = cells[pos]
        right = filling.get((row, col + 1))
        above = filling.get((row - 1, col))
        total = 0
        for v in range(1, len(mu) + 1):
            if counts[v] >= mu[v - 1]:
                continue
            if v > 1 and counts[v] + 1 > counts[v - 1]:
                continue
            if right is not None and v > right:
                continue
            if above is not None and v <= above:
                continue
            filling[(row, col)] = v
            counts[v] += 1
            total += place(pos + 1)
            counts[v] -= 1
            del filling[(row, col)]
        return total

    return place(0)
