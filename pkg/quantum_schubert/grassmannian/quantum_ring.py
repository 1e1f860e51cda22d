import dataclasses
import functools
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from quantum_schubert.errors import ContextMismatchError, InputError
from quantum_schubert.grassmannian.classical_ring import (
    CohClass,
    accumulate,
    checked_mul,
    choose_expansion,
    giambelli_expansion,
    horizontal_strips,
)
from quantum_schubert.grassmannian.schubert_index import (
    GrContext,
    Partition,
    SchubertIndex,
    codim,
    dual,
    from_partition,
    require_same_context,
    to_partition,
)

EXPANSION_ORDERS = ("auto", "left", "right")

QTerm = Tuple[int, SchubertIndex, int]


@dataclasses.dataclass(frozen=True)
class QClass:
    """An element of QH*(Gr(r,n)): integer combination of q^d * sigma(I).

    Terms are (d, index, coeff), sorted by (d, index), without zero coefficients.
    """
    ctx: GrContext
    terms: Tuple[QTerm, ...] = ()

    @staticmethod
    def from_dict(ctx: GrContext, mapping: Mapping[Tuple[int, SchubertIndex], int]) -> "QClass":
        for (d, index) in mapping:
            if index.ctx != ctx:
                raise ContextMismatchError(f"Index {index} does not belong to {ctx}")
            if not isinstance(d, int) or d < 0:
                raise InputError(f"q-degrees must be nonnegative integers, got {d!r}")
        return QClass(ctx, tuple(sorted((d, i, c) for (d, i), c in mapping.items() if c != 0)))

    @staticmethod
    def basis(index: SchubertIndex, d: int = 0) -> "QClass":
        return QClass.from_dict(index.ctx, {(d, index): 1})

    @staticmethod
    def zero(ctx: GrContext) -> "QClass":
        return QClass(ctx)

    @staticmethod
    def from_coh(x: CohClass, d: int = 0) -> "QClass":
        return QClass.from_dict(x.ctx, {(d, i): c for i, c in x.terms})

    def as_dict(self) -> Dict[Tuple[int, SchubertIndex], int]:
        return {(d, i): c for d, i, c in self.terms}

    def coefficient(self, index: SchubertIndex, d: int = 0) -> int:
        return self.as_dict().get((d, index), 0)

    def degrees(self) -> List[int]:
        return sorted({d for d, _, _ in self.terms})

    def min_degree(self) -> Optional[int]:
        return self.terms[0][0] if self.terms else None

    def part(self, d: int) -> CohClass:
        """Coefficient of q^d, as a classical class"""
        return CohClass.from_dict(self.ctx, {i: c for e, i, c in self.terms if e == d})

    def classical_limit(self) -> CohClass:
        return self.part(0)

    def times_q(self, k: int) -> "QClass":
        return QClass.from_dict(self.ctx, {(d + k, i): c for d, i, c in self.terms})

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other: "QClass") -> "QClass":
        if self.ctx != other.ctx:
            raise ContextMismatchError(f"Cannot add classes of {self.ctx} and {other.ctx}")
        acc = self.as_dict()
        for d, index, coeff in other.terms:
            accumulate(acc, (d, index), coeff)
        return QClass.from_dict(self.ctx, acc)

    def __neg__(self) -> "QClass":
        return self.scale(-1)

    def __sub__(self, other: "QClass") -> "QClass":
        return self + (-other)

    def scale(self, k: int) -> "QClass":
        return QClass.from_dict(self.ctx, {(d, i): checked_mul(c, k) for d, i, c in self.terms})

    def to_json(self) -> Dict:
        return {
            "n": self.ctx.n,
            "r": self.ctx.r,
            "terms": [{"q": d, "index": list(i.elements), "coeff": c} for d, i, c in self.terms],
        }

    @staticmethod
    def from_json(j: Dict) -> "QClass":
        try:
            ctx = GrContext(j["n"], j["r"])
            return QClass.from_dict(ctx, {(t["q"], ctx.index(t["index"])): t["coeff"] for t in j["terms"]})
        except (KeyError, TypeError) as e:
            raise InputError(f"Malformed quantum class JSON: {e}")


@dataclasses.dataclass(frozen=True)
class GWInstance:
    """Data of an s-point Gromov-Witten invariant <sigma(I_1), ..., sigma(I_s)>_d"""
    indices: Tuple[SchubertIndex, ...]
    d: int

    def __post_init__(self):
        indices = tuple(self.indices)
        object.__setattr__(self, "indices", indices)
        if len(indices) < 3:
            raise InputError(f"An invariant needs at least 3 classes, got {len(indices)}")
        require_same_context(*indices)
        if not isinstance(self.d, int) or self.d < 0:
            raise InputError(f"Degree must be a nonnegative integer, got {self.d!r}")

    @property
    def ctx(self) -> GrContext:
        return self.indices[0].ctx

    def to_text(self) -> str:
        body = ",".join("{" + ",".join(str(e) for e in i.elements) + "}" for i in self.indices)
        return f"<{body}>_{self.d}"

    def to_json(self) -> Dict:
        return {
            "n": self.ctx.n,
            "r": self.ctx.r,
            "indices": [list(i.elements) for i in self.indices],
            "d": self.d,
        }

    def __str__(self):
        return self.to_text()


def dimension_check(inst: GWInstance) -> bool:
    """sum of codimensions == n*d + r(n-r)"""
    return sum(codim(i) for i in inst.indices) == inst.ctx.n * inst.d + inst.ctx.dimension


def quantum_strips(lam: Partition, a: int, n: int) -> List[Partition]:
    """Partitions nu with lam_1-1 >= nu_1 >= lam_2-1 >= ... >= lam_r-1 >= nu_r >= 0 and |nu| = |lam|+a-n.

    lam is padded to length r. Empty when lam_r = 0.
    """
    r = len(lam)
    target = sum(lam) + a - n
    if lam[-1] == 0 or target < 0:
        return []
    out = []

    def place(k: int, remaining: int, prefix: Tuple[int, ...]):
        if k == r:
            if remaining == 0:
                out.append(prefix)
            return
        lower = lam[k + 1] - 1 if k + 1 < r else 0
        for nu_k in range(lower, lam[k]):
            if nu_k > remaining:
                break
            place(k + 1, remaining - nu_k, prefix + (nu_k,))

    place(0, target, ())
    return out


@functools.lru_cache(maxsize=None)
def _qpieri(a: int, index: SchubertIndex) -> QClass:
    ctx = index.ctx
    lam = to_partition(index)
    terms = {(0, from_partition(ctx, mu)): 1 for mu in horizontal_strips(lam, a, ctx.box_width)}
    for nu in quantum_strips(lam, a, ctx.n):
        terms[(1, from_partition(ctx, nu))] = 1
    return QClass.from_dict(ctx, terms)


def qpieri(a: int, index: SchubertIndex) -> QClass:
    """Quantum Pieri rule: sigma_a * sigma(I) = sum_K sigma(K) + q sum_L sigma(L)"""
    if not isinstance(a, int) or not 0 <= a <= index.ctx.box_width:
        raise InputError(f"Pieri degree must be in 0..{index.ctx.box_width}, got {a}")
    return _qpieri(a, index)


def _fold_specials(monomial: Sequence[int], start: SchubertIndex) -> Dict[Tuple[int, SchubertIndex], int]:
    ctx = start.ctx
    current = {(0, start): 1}
    for a in monomial:
        # Special classes beyond the box vanish in the quantum ring as well
        if a > ctx.box_width:
            return {}
        nxt: Dict[Tuple[int, SchubertIndex], int] = {}
        for (d, index), coeff in current.items():
            for e, k, c in _qpieri(a, index).terms:
                accumulate(nxt, (d + e, k), checked_mul(coeff, c))
        current = nxt
    return current


@functools.lru_cache(maxsize=None)
def qmul_basis(i: SchubertIndex, j: SchubertIndex, expand: str = "auto") -> QClass:
    """sigma(I) * sigma(J), expanding one factor by quantum Giambelli and folding quantum Pieri.

    expand picks the factor that gets expanded: "left" (I), "right" (J) or "auto" (fewer nonzero
    parts, then the lexicographically smaller partition).
    """
    ctx = require_same_context(i, j)
    if expand == "auto":
        expanded, folded = choose_expansion(i, j)
    elif expand == "left":
        expanded, folded = i, j
    elif expand == "right":
        expanded, folded = j, i
    else:
        raise InputError(f"expand must be one of {EXPANSION_ORDERS}, got {expand!r}")

    acc: Dict[Tuple[int, SchubertIndex], int] = {}
    for monomial, coeff in giambelli_expansion(to_partition(expanded)):
        for key, c in _fold_specials(monomial, folded).items():
            accumulate(acc, key, checked_mul(coeff, c))
    return QClass.from_dict(ctx, acc)


def qmul(x: QClass, y: QClass, expand: str = "auto") -> QClass:
    if x.ctx != y.ctx:
        raise ContextMismatchError(f"Cannot multiply classes of {x.ctx} and {y.ctx}")
    acc: Dict[Tuple[int, SchubertIndex], int] = {}
    for di, i, ci in x.terms:
        for dj, j, cj in y.terms:
            coeff = checked_mul(ci, cj)
            for dk, k, ck in qmul_basis(i, j, expand).terms:
                accumulate(acc, (di + dj + dk, k), checked_mul(coeff, ck))
    return QClass.from_dict(x.ctx, acc)


def qmul_many(classes: Iterable[QClass]) -> QClass:
    classes = list(classes)
    if not classes:
        raise InputError("qmul_many needs at least one class")
    result = classes[0]
    for x in classes[1:]:
        result = qmul(result, x)
    return result


def gw3(i: SchubertIndex, j: SchubertIndex, k: SchubertIndex, d: int) -> int:
    """<sigma(I), sigma(J), sigma(K)>_d, read off as the coefficient of q^d sigma(dual(K)) in sigma(I)*sigma(J)"""
    inst = GWInstance((i, j, k), d)
    if not dimension_check(inst):
        return 0
    return qmul_basis(i, j).coefficient(dual(k), d)
