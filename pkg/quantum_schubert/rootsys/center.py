"""
The center of the simply connected group and its image in the Weyl group.

Nontrivial center elements correspond to simple roots whose mark in the highest root is 1; the
element for alpha is carried as the alcove vertex x_alpha with beta(x_alpha) = delta(alpha, beta) on
simple roots. The Weyl element w_c is read off from the alcove walk that brings C - x_alpha back to C.
"""
import dataclasses
import functools
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from quantum_schubert.errors import InputError, InvariantViolationError
from quantum_schubert.rootsys.system import Coweight, RootSystem, WeylElement, is_negative

MAX_WALK_STEPS = 10_000


@dataclasses.dataclass(frozen=True)
class CentralElement:
    """node is the 0-based simple root of a mark-1 node, or None for the identity."""
    node: Optional[int]
    coweight: Coweight

    @property
    def is_identity(self) -> bool:
        return self.node is None

    @property
    def label(self) -> str:
        return "1" if self.node is None else f"x{self.node + 1}"

    def to_json(self):
        return {"node": None if self.node is None else self.node + 1, "coweight": [str(v) for v in self.coweight]}


@dataclasses.dataclass(frozen=True)
class AlcoveWalkResult:
    """The affine map y -> linear_part(y) + translation carrying C - x into C.

    word lists the reflections in the order applied: 1-based simple reflections, 0 for the affine one.
    """
    linear_part: WeylElement
    translation: Coweight
    word: Tuple[int, ...]
    endpoint: Coweight


def identity_element(rs: RootSystem) -> CentralElement:
    return CentralElement(None, tuple(Fraction(0) for _ in range(rs.rank)))


def center_element(rs: RootSystem, node: int) -> CentralElement:
    if not 0 <= node < rs.rank:
        raise InputError(f"{rs.label} has no node {node + 1}")
    if rs.marks[node] != 1:
        raise InputError(f"Node {node + 1} of {rs.label} has mark {rs.marks[node]}, not 1")
    return CentralElement(node, tuple(Fraction(1 if k == node else 0) for k in range(rs.rank)))


def center_elements(rs: RootSystem) -> List[CentralElement]:
    """The identity, then one element per mark-1 node in node order"""
    return [identity_element(rs)] + [center_element(rs, i) for i, m in enumerate(rs.marks) if m == 1]


def interior_point(rs: RootSystem) -> Coweight:
    """rho-check / (2h): every simple root takes the value 1/(2h) on it"""
    return tuple(Fraction(1, 2 * rs.coxeter_number) for _ in range(rs.rank))


def in_closed_alcove(rs: RootSystem, y: Coweight) -> bool:
    return all(v >= 0 for v in y) and rs.evaluate(rs.highest_root, y) <= 1


def alcove_walk(rs: RootSystem, c: CentralElement) -> AlcoveWalkResult:
    """Walk p - x into the fundamental alcove by affine simple reflections, tracking the composite map."""
    theta = rs.highest_root
    theta_coroot = rs.coroot_values(theta)
    w_theta = rs.reflection(theta)

    y = tuple(p - x for p, x in zip(interior_point(rs), c.coweight))
    linear = rs.identity()
    translation = tuple(Fraction(0) for _ in range(rs.rank))
    word = []
    while True:
        if len(word) > MAX_WALK_STEPS:
            raise InvariantViolationError(f"Alcove walk in {rs.label} from {c.label} did not terminate")
        i = next((k for k in range(rs.rank) if y[k] < 0), None)
        if i is not None:
            alpha = rs.simple_root(i)
            y = rs.reflect_coweight(alpha, y)
            translation = rs.reflect_coweight(alpha, translation)
            linear = rs.simple_reflection(i) * linear
            word.append(i + 1)
        elif rs.evaluate(theta, y) > 1:
            y = rs.reflect_coweight(theta, y, level=1)
            translation = tuple(t + h for t, h in zip(rs.reflect_coweight(theta, translation), theta_coroot))
            linear = w_theta * linear
            word.append(0)
        else:
            break
    return AlcoveWalkResult(linear, translation, tuple(word), y)


@functools.lru_cache(maxsize=None)
def _center_to_weyl(rs: RootSystem, c: CentralElement) -> WeylElement:
    walk = alcove_walk(rs, c)
    if any(t != 0 for t in walk.translation):
        raise InvariantViolationError(f"Alcove walk for {c.label} in {rs.label} ends with translation "
                                      f"{[str(t) for t in walk.translation]}")
    return walk.linear_part


def center_to_weyl(rs: RootSystem, c: CentralElement) -> WeylElement:
    """w_c, the Weyl element with C - x = w_c^-1(C).

    The walk's composite map y -> w_c(y) carries C - x onto C; its translation part vanishes.
    """
    return _center_to_weyl(rs, c)


def sign_check(rs: RootSystem, c: CentralElement) -> bool:
    """beta(x) = 0 keeps the sign of w_c(beta); beta(x) = 1 flips it (positive beta)"""
    if c.is_identity:
        return True
    w = center_to_weyl(rs, c)
    for beta in rs.positive_roots:
        value = rs.evaluate(beta, c.coweight)
        negative = is_negative(w.act(beta))
        if value == 0 and negative:
            return False
        if value == 1 and not negative:
            return False
    return True


@functools.lru_cache(maxsize=None)
def center_compose(rs: RootSystem, c1: CentralElement, c2: CentralElement) -> CentralElement:
    """The element of S congruent to x1 + x2 modulo the coroot lattice"""
    total = tuple(a + b for a, b in zip(c1.coweight, c2.coweight))
    matches = [c for c in center_elements(rs)
               if rs.in_coroot_lattice(tuple(t - v for t, v in zip(total, c.coweight)))]
    if len(matches) != 1:
        raise InvariantViolationError(f"{c1.label} + {c2.label} in {rs.label} matches {len(matches)} center elements")
    return matches[0]


def center_inverse(rs: RootSystem, c: CentralElement) -> CentralElement:
    identity = identity_element(rs)
    for other in center_elements(rs):
        if center_compose(rs, c, other) == identity:
            return other
    raise InvariantViolationError(f"{c.label} has no inverse in the center of {rs.label}")


def compose_all(rs: RootSystem, cs) -> CentralElement:
    result = identity_element(rs)
    for c in cs:
        result = center_compose(rs, result, c)
    return result


def composition_table(rs: RootSystem) -> Dict[Tuple[str, str], str]:
    elements = center_elements(rs)
    return {(a.label, b.label): center_compose(rs, a, b).label for a in elements for b in elements}


def phi_homomorphism_check(rs: RootSystem) -> bool:
    """c -> w_c is an injective group homomorphism"""
    elements = center_elements(rs)
    images = {c: center_to_weyl(rs, c) for c in elements}
    for c1 in elements:
        for c2 in elements:
            if images[c1] * images[c2] != images[center_compose(rs, c1, c2)]:
                return False
    return len(set(images.values())) == len(elements)


def levi_conjugation_check(rs: RootSystem, c1: CentralElement, c2: CentralElement) -> bool:
    """For c1 c2 = 1: gamma(x1) = 0 iff (w_{c1} gamma)(x2) = 0, and the two parabolics meet transversally.

    With A = {w_{c1} gamma : gamma(x1) >= 0}, B = {delta : delta(x2) >= 0} and L = {delta : delta(x2) = 0},
    transversality means A and B intersect exactly in L and the root counts of the complements add up.
    """
    if not center_compose(rs, c1, c2).is_identity:
        raise InputError(f"{c1.label} and {c2.label} do not compose to the identity in {rs.label}")
    w1 = center_to_weyl(rs, c1)
    moved = set()
    for gamma in rs.roots:
        image = w1.act(gamma)
        a, b = rs.evaluate(gamma, c1.coweight), rs.evaluate(image, c2.coweight)
        if (a == 0) != (b == 0):
            return False
        if a >= 0:
            moved.add(image)
    upper = {delta for delta in rs.roots if rs.evaluate(delta, c2.coweight) >= 0}
    levi = {delta for delta in rs.roots if rs.evaluate(delta, c2.coweight) == 0}
    if moved & upper != levi:
        return False
    total = len(rs.roots)
    return (total - len(moved)) + (total - len(upper)) == total - len(levi)
