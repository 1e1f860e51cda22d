"""
Root systems generated from Cartan matrices, and their Weyl groups.

Roots are integer vectors in the basis of simple roots. Elements of the Cartan subalgebra
(coweights) are stored by their values on the simple roots, as tuples of Fractions; a root beta
evaluates on x as sum_k beta_k * x_k.
"""
import dataclasses
import functools
from fractions import Fraction
from typing import List, Sequence, Tuple

import numpy as np
import sympy

from quantum_schubert.errors import InvariantViolationError
from quantum_schubert.rootsys.cartan import cartan_matrix, expected_root_count, validate_type

Root = Tuple[int, ...]
Coweight = Tuple[Fraction, ...]


def is_positive(beta: Sequence[int]) -> bool:
    return all(b >= 0 for b in beta) and any(b > 0 for b in beta)


def is_negative(beta: Sequence[int]) -> bool:
    return all(b <= 0 for b in beta) and any(b < 0 for b in beta)


def height(beta: Sequence[int]) -> int:
    return sum(beta)


def _as_root(v) -> Root:
    return tuple(int(c) for c in v)


@dataclasses.dataclass(frozen=True)
class WeylElement:
    """A Weyl group element, recorded by the images w(alpha_i) of the simple roots."""
    images: Tuple[Root, ...]

    @staticmethod
    def from_matrix(m: np.ndarray) -> "WeylElement":
        return WeylElement(tuple(_as_root(m[:, i]) for i in range(m.shape[1])))

    @functools.cached_property
    def matrix(self) -> np.ndarray:
        return np.array(self.images, dtype=np.int64).T

    def act(self, beta: Sequence[int]) -> Root:
        return _as_root(self.matrix @ np.array(beta, dtype=np.int64))

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        return WeylElement.from_matrix(self.matrix @ other.matrix)

    def pull_back(self, x: Sequence[Fraction]) -> Coweight:
        """Coordinates of w^-1(x), using alpha_i(w^-1 x) = (w alpha_i)(x)"""
        return tuple(sum((Fraction(c) * xk for c, xk in zip(image, x)), Fraction(0)) for image in self.images)

    @property
    def rank(self) -> int:
        return len(self.images)

    def is_identity(self) -> bool:
        return all(image[i] == 1 and sum(abs(c) for c in image) == 1 for i, image in enumerate(self.images))

    def to_json(self):
        return [list(image) for image in self.images]


@dataclasses.dataclass(frozen=True, eq=False)
class RootSystem:
    """Roots, Cartan data and highest-root marks of one simple type.

    Built once per type by build(); instances compare by identity.
    """
    series: str
    rank: int
    cartan: Tuple[Tuple[int, ...], ...]
    positive_roots: Tuple[Root, ...]
    highest_root: Root
    marks: Tuple[int, ...]
    root_lengths: Tuple[Fraction, ...]
    cartan_inverse: Tuple[Tuple[Fraction, ...], ...]

    @property
    def label(self) -> str:
        return f"{self.series}{self.rank}"

    @functools.cached_property
    def cartan_array(self) -> np.ndarray:
        return np.array(self.cartan, dtype=np.int64)

    @functools.cached_property
    def roots(self) -> Tuple[Root, ...]:
        return self.positive_roots + tuple(tuple(-b for b in beta) for beta in self.positive_roots)

    @property
    def coxeter_number(self) -> int:
        return sum(self.marks) + 1

    def simple_root(self, i: int) -> Root:
        return tuple(1 if k == i else 0 for k in range(self.rank))

    def pairing(self, beta: Sequence[int], j: int) -> int:
        """<beta, alpha_j^vee>"""
        return int(sum(b * self.cartan[k][j] for k, b in enumerate(beta)))

    def inner(self, beta: Sequence[int], gamma: Sequence[int]) -> Fraction:
        """W-invariant form with (alpha_i, alpha_j) = a[i, j] * (alpha_j, alpha_j) / 2"""
        return sum(
            (Fraction(b * g * self.cartan[i][j]) * self.root_lengths[j] / 2
             for i, b in enumerate(beta) if b
             for j, g in enumerate(gamma) if g),
            Fraction(0),
        )

    def coroot_values(self, beta: Sequence[int]) -> Tuple[int, ...]:
        """alpha_k(H_beta) = 2 (alpha_k, beta) / (beta, beta), the coweight of the coroot of beta"""
        return self._coroot_values(tuple(beta))

    @functools.lru_cache(maxsize=None)
    def _coroot_values(self, beta: Root) -> Tuple[int, ...]:
        norm = self.inner(beta, beta)
        values = []
        for k in range(self.rank):
            v = 2 * self.inner(self.simple_root(k), beta) / norm
            if v.denominator != 1:
                raise InvariantViolationError(f"Non-integral coroot pairing {v} for {beta} in {self.label}")
            values.append(int(v))
        return tuple(values)

    def evaluate(self, beta: Sequence[int], x: Sequence[Fraction]) -> Fraction:
        return sum((b * xk for b, xk in zip(beta, x)), Fraction(0))

    def reflect_coweight(self, beta: Sequence[int], x: Sequence[Fraction], level: int = 0) -> Coweight:
        """Reflection of x in the hyperplane beta = level"""
        shift = self.evaluate(beta, x) - level
        return tuple(xk - shift * h for xk, h in zip(x, self.coroot_values(beta)))

    def weight_value(self, sigma: int, x: Sequence[Fraction]) -> Fraction:
        """omega_sigma(x): the coefficient of H_sigma when x is written in simple coroots"""
        return sum((c * xk for c, xk in zip(self.cartan_inverse[sigma], x)), Fraction(0))

    def in_coroot_lattice(self, x: Sequence[Fraction]) -> bool:
        return all(self.weight_value(s, x).denominator == 1 for s in range(self.rank))

    def identity(self) -> WeylElement:
        return WeylElement(tuple(self.simple_root(i) for i in range(self.rank)))

    def reflection(self, beta: Sequence[int]) -> WeylElement:
        """s_beta(alpha_k) = alpha_k - <alpha_k, beta^vee> beta"""
        coroot = self.coroot_values(beta)
        return WeylElement(tuple(
            tuple(int(a - coroot[k] * b) for a, b in zip(self.simple_root(k), beta))
            for k in range(self.rank)
        ))

    def simple_reflection(self, i: int) -> WeylElement:
        return self.reflection(self.simple_root(i))

    def length(self, w: WeylElement) -> int:
        return sum(1 for beta in self.positive_roots if is_negative(w.act(beta)))

    def to_json(self):
        return {
            "type": self.label,
            "cartan": [list(row) for row in self.cartan],
            "roots": len(self.roots),
            "highest_root": list(self.highest_root),
            "marks": list(self.marks),
        }


def _root_closure(cartan: np.ndarray) -> List[Root]:
    """All roots, by closing the simple roots under the simple reflections"""
    rank = cartan.shape[0]
    simple = [_as_root(row) for row in np.eye(rank, dtype=np.int64)]
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for beta in frontier:
            b = np.array(beta, dtype=np.int64)
            for i in range(rank):
                image = b.copy()
                image[i] -= int(b @ cartan[:, i])
                key = _as_root(image)
                if key not in seen:
                    seen.add(key)
                    nxt.append(key)
        frontier = nxt
    return list(seen)


def _root_lengths(cartan: np.ndarray) -> Tuple[Fraction, ...]:
    """Squared lengths (alpha_i, alpha_i), scaled so the long roots have length 2"""
    rank = cartan.shape[0]
    lengths = [None] * rank
    lengths[0] = Fraction(1)
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(rank):
            if j != i and cartan[i, j] != 0 and lengths[j] is None:
                # a[i, j] (alpha_j, alpha_j) = a[j, i] (alpha_i, alpha_i)
                lengths[j] = lengths[i] * int(cartan[j, i]) / int(cartan[i, j])
                stack.append(j)
    longest = max(lengths)
    return tuple(2 * x / longest for x in lengths)


def _exact_inverse(cartan: np.ndarray) -> Tuple[Tuple[Fraction, ...], ...]:
    inv = sympy.Matrix(cartan.tolist()).inv()
    return tuple(tuple(Fraction(int(inv[i, j].p), int(inv[i, j].q)) for j in range(inv.cols)) for i in range(inv.rows))


@functools.lru_cache(maxsize=None)
def build(series: str, rank: int) -> RootSystem:
    validate_type(series, rank)
    cartan = cartan_matrix(series, rank)
    roots = _root_closure(cartan)
    if len(roots) != expected_root_count(series, rank):
        raise InvariantViolationError(f"{series}{rank} closure produced {len(roots)} roots, "
                                      f"expected {expected_root_count(series, rank)}")
    positive = sorted((beta for beta in roots if is_positive(beta)), key=lambda beta: (height(beta), beta))
    if 2 * len(positive) != len(roots):
        raise InvariantViolationError(f"{series}{rank} roots do not split into positive and negative halves")
    highest = positive[-1]
    if sum(1 for beta in positive if height(beta) == height(highest)) != 1:
        raise InvariantViolationError(f"{series}{rank} has no unique highest root")

    return RootSystem(
        series=series,
        rank=rank,
        cartan=tuple(tuple(int(v) for v in row) for row in cartan),
        positive_roots=tuple(positive),
        highest_root=highest,
        marks=highest,
        root_lengths=_root_lengths(cartan),
        cartan_inverse=_exact_inverse(cartan),
    )


def reduced_word(rs: RootSystem, w: WeylElement) -> Tuple[int, ...]:
    """A reduced word (i_1, ..., i_l) with w = s_{i_1} ... s_{i_l}, found by stripping right descents"""
    word = []
    while True:
        descent = next((i for i in range(rs.rank) if is_negative(w.images[i])), None)
        if descent is None:
            break
        w = w * rs.simple_reflection(descent)
        word.append(descent)
    return tuple(reversed(word))


def from_word(rs: RootSystem, word: Sequence[int]) -> WeylElement:
    w = rs.identity()
    for i in word:
        w = w * rs.simple_reflection(i)
    return w


def inverse(rs: RootSystem, w: WeylElement) -> WeylElement:
    return from_word(rs, tuple(reversed(reduced_word(rs, w))))


def apply(rs: RootSystem, w: WeylElement, x: Sequence[Fraction]) -> Coweight:
    """Coordinates of w(x)"""
    return inverse(rs, w).pull_back(x)
