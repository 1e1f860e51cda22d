"""
Schubert bookkeeping on G/P: Bruhat codimension of cosets, the codimension and degree shifts under
the center action, the dimension condition for invariants, and the q-exponents of the operators T_c.

A parabolic is given by its Levi simple roots (Delta_P); Sigma is the complement. N_P is the set of
positive roots whose support meets Sigma, so dim G/P = |N_P|.
"""
import collections
import dataclasses
import functools
from fractions import Fraction
from typing import FrozenSet, List, Sequence, Tuple

from quantum_schubert.errors import InputError, InvariantViolationError
from quantum_schubert.rootsys.center import CentralElement, center_compose, center_to_weyl, compose_all
from quantum_schubert.rootsys.system import Root, RootSystem, WeylElement, is_negative


@dataclasses.dataclass(frozen=True)
class ParabolicChoice:
    levi: FrozenSet[int]

    @staticmethod
    def maximal(rs: RootSystem, node: int) -> "ParabolicChoice":
        """The maximal parabolic with Sigma = {node}"""
        if not 0 <= node < rs.rank:
            raise InputError(f"{rs.label} has no node {node + 1}")
        return ParabolicChoice(frozenset(range(rs.rank)) - {node})

    @staticmethod
    def borel() -> "ParabolicChoice":
        return ParabolicChoice(frozenset())

    def sigma(self, rs: RootSystem) -> Tuple[int, ...]:
        return tuple(i for i in range(rs.rank) if i not in self.levi)

    def validate(self, rs: RootSystem):
        if not all(isinstance(i, int) and 0 <= i < rs.rank for i in self.levi):
            raise InputError(f"Levi nodes {sorted(i + 1 for i in self.levi)} are not simple roots of {rs.label}")

    def to_json(self, rs: RootSystem):
        return {"levi": sorted(i + 1 for i in self.levi), "sigma": [i + 1 for i in self.sigma(rs)]}


@dataclasses.dataclass(frozen=True)
class DegreeVector:
    """Values z(omega_sigma) of a curve class, in the order of ParabolicChoice.sigma"""
    values: Tuple[int, ...]

    def to_json(self):
        return list(self.values)


@functools.lru_cache(maxsize=None)
def nonlevi_roots(rs: RootSystem, P: ParabolicChoice) -> Tuple[Root, ...]:
    """N_P: positive roots with g_{-alpha} not in p"""
    P.validate(rs)
    sigma = P.sigma(rs)
    return tuple(beta for beta in rs.positive_roots if any(beta[s] != 0 for s in sigma))


def dimension(rs: RootSystem, P: ParabolicChoice) -> int:
    return len(nonlevi_roots(rs, P))


@functools.lru_cache(maxsize=None)
def canonical(rs: RootSystem, P: ParabolicChoice, w: WeylElement) -> WeylElement:
    """Minimal-length representative of w W_P"""
    while True:
        j = next((j for j in sorted(P.levi) if is_negative(w.images[j])), None)
        if j is None:
            return w
        w = w * rs.simple_reflection(j)


def is_canonical(rs: RootSystem, P: ParabolicChoice, w: WeylElement) -> bool:
    return not any(is_negative(w.images[j]) for j in P.levi)


@functools.lru_cache(maxsize=None)
def minimal_cosets(rs: RootSystem, P: ParabolicChoice) -> Tuple[WeylElement, ...]:
    """Every minimal-length coset representative of W/W_P, ordered by length then discovery"""
    P.validate(rs)
    start = rs.identity()
    seen = {start}
    order = [start]
    queue = collections.deque([start])
    while queue:
        w = queue.popleft()
        for i in range(rs.rank):
            nxt = canonical(rs, P, rs.simple_reflection(i) * w)
            if nxt not in seen:
                seen.add(nxt)
                order.append(nxt)
                queue.append(nxt)
    return tuple(sorted(order, key=lambda u: bruhat_codim(rs, P, u)))


@functools.lru_cache(maxsize=None)
def bruhat_codim(rs: RootSystem, P: ParabolicChoice, w: WeylElement) -> int:
    """|{alpha in N_P : w(alpha) < 0}| for the canonical representative of w W_P"""
    w = canonical(rs, P, w)
    return sum(1 for beta in nonlevi_roots(rs, P) if is_negative(w.act(beta)))


def codim_shift(rs: RootSystem, P: ParabolicChoice, c: CentralElement, w: WeylElement) -> int:
    """sum over beta in N_P of (w beta)(x_c); equals codim(w_c w) - codim(w)"""
    w = canonical(rs, P, w)
    total = sum((rs.evaluate(w.act(beta), c.coweight) for beta in nonlevi_roots(rs, P)), Fraction(0))
    if total.denominator != 1:
        raise InvariantViolationError(f"Codimension shift {total} is not an integer")
    return int(total)


def codim_shift_direct(rs: RootSystem, P: ParabolicChoice, c: CentralElement, w: WeylElement) -> int:
    w = canonical(rs, P, w)
    return bruhat_codim(rs, P, center_to_weyl(rs, c) * w) - bruhat_codim(rs, P, w)


def chern_vector(rs: RootSystem, P: ParabolicChoice) -> Tuple[int, ...]:
    """<2 rho_P, alpha_sigma^vee> for sigma in Sigma, with 2 rho_P the sum of N_P"""
    two_rho = [sum(beta[k] for beta in nonlevi_roots(rs, P)) for k in range(rs.rank)]
    return tuple(rs.pairing(two_rho, s) for s in P.sigma(rs))


def _check_degree_vector(rs: RootSystem, P: ParabolicChoice, z: DegreeVector):
    if len(z.values) != len(P.sigma(rs)):
        raise InputError(f"Degree vector has {len(z.values)} entries, the parabolic needs {len(P.sigma(rs))}")


def dim_condition_check(rs: RootSystem, P: ParabolicChoice, ws: Sequence[WeylElement], z: DegreeVector) -> bool:
    """sum of codimensions == c_1(T_{G/P}) . Z + dim G/P"""
    _check_degree_vector(rs, P, z)
    lhs = sum(bruhat_codim(rs, P, w) for w in ws)
    return lhs == sum(c * v for c, v in zip(chern_vector(rs, P), z.values)) + dimension(rs, P)


def _integral(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise InvariantViolationError(f"{what} {value} is not an integer")
    return int(value)


def degree_shift(rs: RootSystem, P: ParabolicChoice, z: DegreeVector,
                 us: Sequence[WeylElement], cs: Sequence[CentralElement]) -> DegreeVector:
    """z'(omega_sigma) = z(omega_sigma) + sum_i omega_sigma(u_i^-1 x_i), for c_1 ... c_s = 1.

    Paired with u_i -> w_{c_i} u_i, this preserves the dimension condition and the invariant.
    """
    _check_degree_vector(rs, P, z)
    if len(us) != len(cs):
        raise InputError(f"Got {len(us)} Weyl elements but {len(cs)} center elements")
    if not compose_all(rs, cs).is_identity:
        raise InputError("The center elements must compose to the identity")
    pulled = [canonical(rs, P, u).pull_back(c.coweight) for u, c in zip(us, cs)]
    values = []
    for k, s in enumerate(P.sigma(rs)):
        total = sum((rs.weight_value(s, y) for y in pulled), Fraction(0))
        values.append(z.values[k] + _integral(total, "Degree shift"))
    return DegreeVector(tuple(values))


@functools.lru_cache(maxsize=None)
def tc_exponent(rs: RootSystem, P: ParabolicChoice, c: CentralElement, w: WeylElement) -> Tuple[int, ...]:
    """Exponents omega_sigma(x - w^-1 x) of T_c(X_w) = prod q_sigma^(...) X_{w_c w}"""
    w = canonical(rs, P, w)
    pulled = w.pull_back(c.coweight)
    diff = tuple(a - b for a, b in zip(c.coweight, pulled))
    return tuple(_integral(rs.weight_value(s, diff), "T_c exponent") for s in P.sigma(rs))


def composition_exponent(rs: RootSystem, P: ParabolicChoice, c1: CentralElement, c2: CentralElement) -> Tuple[int, ...]:
    """Exponents of T_{c1} T_{c2} = prod q_sigma^(omega_sigma(x1 + x2 - x3)) T_{c1 c2}"""
    c3 = center_compose(rs, c1, c2)
    diff = tuple(a + b - c for a, b, c in zip(c1.coweight, c2.coweight, c3.coweight))
    return tuple(_integral(rs.weight_value(s, diff), "Composition exponent") for s in P.sigma(rs))


def operator_composition_check(rs: RootSystem, P: ParabolicChoice, c1: CentralElement, c2: CentralElement) -> bool:
    """tc(c2, w) + tc(c1, w_{c2} w) == tc(c1 c2, w) + composition_exponent(c1, c2) on every coset"""
    c3 = center_compose(rs, c1, c2)
    w2 = center_to_weyl(rs, c2)
    extra = composition_exponent(rs, P, c1, c2)
    for w in minimal_cosets(rs, P):
        lhs = [a + b for a, b in zip(tc_exponent(rs, P, c2, w), tc_exponent(rs, P, c1, canonical(rs, P, w2 * w)))]
        rhs = [a + b for a, b in zip(tc_exponent(rs, P, c3, w), extra)]
        if lhs != rhs:
            return False
    return True


def all_parabolics(rs: RootSystem) -> List[ParabolicChoice]:
    """Every parabolic except G itself, smallest Levi first"""
    out = []
    for mask in range(2 ** rs.rank - 1):
        out.append(ParabolicChoice(frozenset(i for i in range(rs.rank) if mask >> i & 1)))
    return sorted(out, key=lambda P: (len(P.levi), sorted(P.levi)))
