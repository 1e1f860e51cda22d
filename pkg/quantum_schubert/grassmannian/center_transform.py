"""
The shift operator T on QH*(Gr(r,n)) and the transformation formula for Gromov-Witten invariants.

Shifting every class of an invariant by n_i, with sum(n_i) a multiple m*n, moves the invariant to
degree d + m*r - sum(d_i) without changing its value. reduce_to_classical uses this to walk an
invariant down to degree 0, where it becomes a classical intersection number.
"""
import collections
import dataclasses
import enum
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from quantum_schubert.errors import InputError, InvariantViolationError, NegativeDegreeError
from quantum_schubert.grassmannian.classical_ring import CohClass, accumulate, cup_many, integral
from quantum_schubert.grassmannian.quantum_ring import GWInstance, QClass, dimension_check, gw3, qmul_basis
from quantum_schubert.grassmannian.schubert_index import (
    GrContext,
    SchubertIndex,
    require_same_context,
    shift,
    shift_count,
    shift_index,
)

DEFAULT_SEARCH_MAX_STATES = 2000


@dataclasses.dataclass(frozen=True)
class ShiftVector:
    """Per-slot shifts n_1..n_s whose total is a multiple of n.

    A total of m*n composes m center elements to the identity. The all-zero vector is the identity.
    """
    ctx: GrContext
    shifts: Tuple[int, ...]

    def __post_init__(self):
        shifts = tuple(self.shifts)
        object.__setattr__(self, "shifts", shifts)
        for k in shifts:
            if not isinstance(k, int) or k < 0:
                raise InputError(f"Shifts must be nonnegative integers, got {list(shifts)}")
        if sum(shifts) % self.ctx.n != 0:
            raise InputError(f"Shifts must sum to a multiple of n={self.ctx.n}, got {list(shifts)}")

    @property
    def multiple(self) -> int:
        return sum(self.shifts) // self.ctx.n

    def chunks(self) -> List[Tuple[int, ...]]:
        """Split into `multiple` vectors that each sum to n, filling the earliest slots first."""
        n = self.ctx.n
        remaining = list(self.shifts)
        out = []
        for _ in range(self.multiple):
            chunk = []
            budget = n
            for slot, avail in enumerate(remaining):
                take = min(avail, budget)
                chunk.append(take)
                remaining[slot] -= take
                budget -= take
            out.append(tuple(chunk))
        return out

    def to_json(self):
        return list(self.shifts)

    def __str__(self):
        return "(" + ",".join(str(k) for k in self.shifts) + ")"


class ReductionStatus(enum.Enum):
    REDUCED = "reduced"
    VANISHING = "vanishing"
    IRREDUCIBLE = "irreducible"


@dataclasses.dataclass(frozen=True)
class Reduction:
    """Outcome of reduce_to_classical.

    REDUCED: terminal holds the degree-0 instance reached through history.
    VANISHING: the last shift in history sends the degree to negative_degree < 0, so the invariant is 0.
    IRREDUCIBLE: no sequence of shifts found within the search bound lowers the degree; terminal is
    where the search stopped.
    """
    status: ReductionStatus
    source: GWInstance
    history: Tuple[ShiftVector, ...]
    terminal: GWInstance
    negative_degree: Optional[int] = None

    def to_json(self) -> Dict:
        return {
            "status": self.status.value,
            "source": self.source.to_json(),
            "history": [sv.to_json() for sv in self.history],
            "terminal": self.terminal.to_json(),
            "negative_degree": self.negative_degree,
        }


def _t_basis(index: SchubertIndex, k: int) -> Tuple[int, SchubertIndex]:
    return shift_count(index, k), shift_index(index, k)


def T(x: QClass) -> QClass:
    """sigma(I) -> q^{d_1} sigma(I-1), extended q-linearly"""
    return T_pow(x, 1)


def T_pow(x: QClass, k: int) -> QClass:
    """T^k in closed form: sigma(I) -> q^{d_k} sigma(I-k). Any k >= 0; T^n is multiplication by q^r."""
    if not isinstance(k, int) or k < 0:
        raise InputError(f"Power of T must be a nonnegative integer, got {k!r}")
    acc: Dict[Tuple[int, SchubertIndex], int] = {}
    for d, index, coeff in x.terms:
        e, shifted = _t_basis(index, k)
        accumulate(acc, (d + e, shifted), coeff)
    return QClass.from_dict(x.ctx, acc)


def T_iterated(x: QClass, k: int) -> QClass:
    """T applied k times, one step at a time"""
    for _ in range(k):
        x = T(x)
    return x


def _transformed_degree(inst: GWInstance, shifts: Sequence[int]) -> int:
    multiple = sum(shifts) // inst.ctx.n
    return inst.d + multiple * inst.ctx.r - sum(shift_count(i, k) for i, k in zip(inst.indices, shifts))


def transform_instance(inst: GWInstance, sv: ShiftVector) -> GWInstance:
    """Move an invariant along a shift vector; the value is unchanged.

    A vector summing to m*n is applied as its m chunks, one after the other. Raises
    NegativeDegreeError as soon as a step reaches a negative degree, in which case every invariant
    along the way is 0.
    """
    if sv.ctx != inst.ctx:
        raise InputError(f"Shift vector for {sv.ctx} applied to an instance of {inst.ctx}")
    if len(sv.shifts) != len(inst.indices):
        raise InputError(f"Instance has {len(inst.indices)} classes but {len(sv.shifts)} shifts were given")
    for chunk in sv.chunks():
        inst = _transform_step(inst, chunk)
    return inst


def _transform_step(inst: GWInstance, shifts: Tuple[int, ...]) -> GWInstance:
    indices = tuple(shift_index(i, k) for i, k in zip(inst.indices, shifts))
    d = _transformed_degree(inst, shifts)
    if d < 0:
        raise NegativeDegreeError(indices, d)
    return GWInstance(indices, d)


def shift_vectors(ctx: GrContext, s: int) -> Iterator[ShiftVector]:
    """All vectors of s nonnegative shifts summing to n, in lexicographic order"""
    def compositions(total: int, slots: int) -> Iterator[Tuple[int, ...]]:
        if slots == 1:
            yield (total,)
            return
        for first in range(total + 1):
            for tail in compositions(total - first, slots - 1):
                yield (first,) + tail

    for c in compositions(ctx.n, s):
        yield ShiftVector(ctx, c)


def _best_step(inst: GWInstance) -> Tuple[ShiftVector, int]:
    # Largest sum of counts wins; strict comparison keeps the lexicographically first on ties
    best = None
    for sv in shift_vectors(inst.ctx, len(inst.indices)):
        d = _transformed_degree(inst, sv.shifts)
        if best is None or d < best[1]:
            best = (sv, d)
    return best


def _search_for_descent(inst: GWInstance, max_states: int) -> Optional[Tuple[ShiftVector, ...]]:
    """Breadth-first search through equal-degree instances for a shift that lowers the degree"""
    seen = {inst}
    queue = collections.deque([(inst, ())])
    while queue:
        state, path = queue.popleft()
        for sv in shift_vectors(state.ctx, len(state.indices)):
            d = _transformed_degree(state, sv.shifts)
            if d < state.d:
                return path + (sv,)
            if d == state.d:
                nxt = transform_instance(state, sv)
                if nxt not in seen:
                    if len(seen) >= max_states:
                        return None
                    seen.add(nxt)
                    queue.append((nxt, path + (sv,)))
    return None


def reduce_to_classical(inst: GWInstance, max_states: int = DEFAULT_SEARCH_MAX_STATES) -> Reduction:
    """Lower the degree of an invariant to 0 through the transformation formula.

    Each step takes the shift vector (sum n) maximizing the sum of counts, ties broken
    lexicographically. When no single step lowers the degree, a bounded breadth-first search over
    equal-degree instances looks for a longer path before the instance is declared irreducible.
    """
    if not dimension_check(inst):
        raise InputError(f"{inst} fails the dimension condition; there is nothing to reduce")
    history: List[ShiftVector] = []
    current = inst
    while current.d > 0:
        sv, d = _best_step(current)
        path = (sv,) if d < current.d else _search_for_descent(current, max_states)
        if path is None:
            return Reduction(ReductionStatus.IRREDUCIBLE, inst, tuple(history), current)
        for step in path:
            history.append(step)
            try:
                current = transform_instance(current, step)
            except NegativeDegreeError as e:
                return Reduction(ReductionStatus.VANISHING, inst, tuple(history), current, e.degree)
    return Reduction(ReductionStatus.REDUCED, inst, tuple(history), current)


def classical_invariant(inst: GWInstance) -> int:
    """Integral of the cup product of all classes; the invariant when d = 0"""
    if inst.d != 0:
        raise InputError(f"Classical invariants need d = 0, got {inst.d}")
    return integral(cup_many(CohClass.basis(i) for i in inst.indices))


def spoint_invariant(inst: GWInstance, max_states: int = DEFAULT_SEARCH_MAX_STATES) -> Optional[int]:
    """<sigma(I_1), ..., sigma(I_s)>_d, or None when it cannot be reached by reduction.

    Three-point invariants are always computed from the quantum product as well, and the two values
    must agree.
    """
    if not dimension_check(inst):
        return 0
    reduction = reduce_to_classical(inst, max_states)
    if reduction.status is ReductionStatus.REDUCED:
        value = classical_invariant(reduction.terminal)
    elif reduction.status is ReductionStatus.VANISHING:
        value = 0
    else:
        value = None

    if len(inst.indices) == 3:
        direct = gw3(*inst.indices, inst.d)
        if value is not None and value != direct:
            raise InvariantViolationError(f"Reduction of {inst} gives {value} but the quantum product gives {direct}")
        return direct
    return value


def round_trip_vector(sv: ShiftVector) -> ShiftVector:
    """Shifts that undo sv: each slot moves on to the next multiple of n."""
    n = sv.ctx.n
    return ShiftVector(sv.ctx, tuple((-k) % n for k in sv.shifts))


def classical_shift(i: SchubertIndex, j: SchubertIndex, k: SchubertIndex) -> Optional[int]:
    """A shift t with sigma(K-t) at q-degree 0 in sigma(I) * sigma(J-t), for a term of sigma(I) * sigma(J) at any degree.

    Returns the smallest such t in 0..n-1, or None.
    """
    ctx = require_same_context(i, j, k)
    for t in range(ctx.n):
        product = qmul_basis(i, shift(j, t).index)
        if product.coefficient(shift(k, t).index, 0) != 0:
            return t
    return None
