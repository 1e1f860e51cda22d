import dataclasses
import itertools
import re
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from quantum_schubert.errors import InputError, ContextMismatchError


Partition = Tuple[int, ...]

_TEXT_FORM = re.compile(r"^\s*n\s*=\s*(\d+)\s*,\s*r\s*=\s*(\d+)\s*:\s*\{([\d,\s]*)\}\s*$")


@dataclasses.dataclass(frozen=True, order=True)
class GrContext:
    """The Grassmannian Gr(r,n) of r-planes in an n-dimensional space."""
    n: int
    r: int

    def __post_init__(self):
        if not isinstance(self.n, int) or not isinstance(self.r, int):
            raise InputError(f"n and r must be integers, got n={self.n!r}, r={self.r!r}")
        if not 0 < self.r < self.n:
            raise InputError(f"Gr(r,n) needs 0 < r < n, got r={self.r}, n={self.n}")

    @property
    def box_width(self) -> int:
        """n-r, the largest allowed partition part"""
        return self.n - self.r

    @property
    def dimension(self) -> int:
        return self.r * (self.n - self.r)

    def index(self, elements: Iterable[int]) -> "SchubertIndex":
        return SchubertIndex(self, tuple(elements))

    def indices(self) -> List["SchubertIndex"]:
        """Every r-subset of {1..n}, in lexicographic order"""
        return _all_indices(self)

    def fundamental(self) -> "SchubertIndex":
        return self.index(range(self.n - self.r + 1, self.n + 1))

    def point(self) -> "SchubertIndex":
        return self.index(range(1, self.r + 1))

    def __str__(self):
        return f"Gr({self.r},{self.n})"


@dataclasses.dataclass(frozen=True, order=True)
class SchubertIndex:
    """An r-subset I = {i_1 < ... < i_r} of {1..n}, indexing the Schubert class sigma(I).

    Elements are 1-based. The context travels with the index; operations combining indices from
    different contexts raise ContextMismatchError.
    """
    ctx: GrContext
    elements: Tuple[int, ...]

    def __post_init__(self):
        elements = tuple(self.elements)
        object.__setattr__(self, "elements", elements)
        if len(elements) != self.ctx.r:
            raise InputError(f"{self.ctx} needs {self.ctx.r} elements, got {list(elements)}")
        for e in elements:
            if not isinstance(e, int) or not 1 <= e <= self.ctx.n:
                raise InputError(f"Index elements must be integers in 1..{self.ctx.n}, got {list(elements)}")
        if any(a >= b for a, b in zip(elements, elements[1:])):
            raise InputError(f"Index elements must be strictly increasing, got {list(elements)}")

    def to_text(self) -> str:
        return f"n={self.ctx.n},r={self.ctx.r}:{{{','.join(str(e) for e in self.elements)}}}"

    def to_json(self) -> Dict:
        return {"n": self.ctx.n, "r": self.ctx.r, "elements": list(self.elements)}

    @staticmethod
    def from_json(j: Dict) -> "SchubertIndex":
        try:
            return GrContext(j["n"], j["r"]).index(j["elements"])
        except (KeyError, TypeError) as e:
            raise InputError(f"Malformed index JSON {j!r}: {e}")

    @staticmethod
    def parse(text: str) -> "SchubertIndex":
        """Parse the canonical text form, e.g. 'n=4,r=2:{1,3}'"""
        m = _TEXT_FORM.match(text)
        if m is None:
            raise InputError(f"Cannot parse Schubert index {text!r}; expected a form like 'n=4,r=2:{{1,3}}'")
        ctx = GrContext(int(m.group(1)), int(m.group(2)))
        body = m.group(3).strip()
        elements = [int(e) for e in body.split(",")] if body else []
        return ctx.index(elements)

    def __str__(self):
        return self.to_text()


@dataclasses.dataclass(frozen=True)
class ShiftResult:
    index: SchubertIndex
    count: int


def _all_indices(ctx: GrContext) -> List[SchubertIndex]:
    return [SchubertIndex(ctx, c) for c in itertools.combinations(range(1, ctx.n + 1), ctx.r)]


def require_same_context(*indices: SchubertIndex) -> GrContext:
    ctx = indices[0].ctx
    for index in indices[1:]:
        if index.ctx != ctx:
            raise ContextMismatchError(f"Cannot combine classes of {ctx} and {index.ctx}")
    return ctx


def codim(index: SchubertIndex) -> int:
    """Number of pairs (j, i) with j not in I, i in I and j > i"""
    members = set(index.elements)
    return sum(1 for i in index.elements for j in range(i + 1, index.ctx.n + 1) if j not in members)


def to_partition(index: SchubertIndex) -> Partition:
    n, r = index.ctx.n, index.ctx.r
    return tuple(n - r + k - i for k, i in enumerate(index.elements, start=1))


def normalize_partition(parts: Sequence[int]) -> Partition:
    """Check that parts is weakly decreasing and nonnegative, and strip trailing zeros."""
    parts = tuple(parts)
    for p in parts:
        if not isinstance(p, int) or p < 0:
            raise InputError(f"Partition parts must be nonnegative integers, got {list(parts)}")
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise InputError(f"Partition must be weakly decreasing, got {list(parts)}")
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    return parts


def from_partition(ctx: GrContext, parts: Sequence[int]) -> Optional[SchubertIndex]:
    """The index with a(I,k) = parts[k], or None when the partition leaves the r x (n-r) box.

    None stands for the zero class.
    """
    parts = normalize_partition(parts)
    if len(parts) > ctx.r or (parts and parts[0] > ctx.box_width):
        return None
    padded = parts + (0,) * (ctx.r - len(parts))
    return SchubertIndex(ctx, tuple(ctx.n - ctx.r + k - a for k, a in enumerate(padded, start=1)))


def shift(index: SchubertIndex, k: int) -> ShiftResult:
    """Subtract k from every element modulo n (0 becomes n); count the elements <= k."""
    n = index.ctx.n
    if not isinstance(k, int) or not 0 <= k <= n:
        raise InputError(f"Shift must be in 0..{n}, got {k}")
    shifted = tuple(sorted(((i - k - 1) % n) + 1 for i in index.elements))
    count = sum(1 for i in index.elements if i <= k)
    return ShiftResult(SchubertIndex(index.ctx, shifted), count)


def shift_count(index: SchubertIndex, k: int) -> int:
    """Count for an arbitrary nonnegative shift: r*floor(k/n) + |{i in I : i <= k mod n}|.

    Agrees with shift(index, k).count for k <= n.
    """
    if not isinstance(k, int) or k < 0:
        raise InputError(f"Shift must be a nonnegative integer, got {k}")
    n, r = index.ctx.n, index.ctx.r
    if k == n:
        return r
    return r * (k // n) + sum(1 for i in index.elements if i <= k % n)


def shift_index(index: SchubertIndex, k: int) -> SchubertIndex:
    """Index part of a shift by any nonnegative k"""
    return shift(index, k % index.ctx.n).index


def dual(index: SchubertIndex) -> SchubertIndex:
    n = index.ctx.n
    return SchubertIndex(index.ctx, tuple(sorted(n + 1 - i for i in index.elements)))


def special_index(ctx: GrContext, a: int) -> SchubertIndex:
    """Index of the special class sigma_a, the one-row partition (a)."""
    if not isinstance(a, int) or not 0 <= a <= ctx.box_width:
        raise InputError(f"Special class degree must be in 0..{ctx.box_width}, got {a}")
    return from_partition(ctx, (a,))
