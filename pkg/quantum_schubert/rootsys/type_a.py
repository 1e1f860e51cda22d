"""
Type A_{n-1} realized as SL(n): permutations, Grassmannian parabolics and the dictionary between
cosets of W/W_P and Schubert indices of Gr(r,n).

A Weyl element w is the permutation sigma with w(L_i) = L_sigma(i), where alpha_j = L_j - L_{j+1}.
The coset w W_P for P = P_r (Sigma = {alpha_r}) corresponds to I = {n+1-sigma(j) : j <= r}.
The center element Theta^k sits at node n-k and shifts indices down by k.
"""
from typing import Sequence, Tuple

from quantum_schubert.errors import InputError, InvariantViolationError
from quantum_schubert.grassmannian.schubert_index import GrContext, SchubertIndex
from quantum_schubert.rootsys.center import CentralElement, center_element, identity_element
from quantum_schubert.rootsys.parabolic import ParabolicChoice, canonical
from quantum_schubert.rootsys.system import Root, RootSystem, WeylElement


def _require_type_a(rs: RootSystem) -> int:
    if rs.series != "A":
        raise InputError(f"Expected a root system of type A, got {rs.label}")
    return rs.rank + 1


def grassmannian_context(rs: RootSystem, r: int) -> GrContext:
    return GrContext(_require_type_a(rs), r)


def grassmannian_parabolic(rs: RootSystem, r: int) -> ParabolicChoice:
    n = _require_type_a(rs)
    if not 0 < r < n:
        raise InputError(f"Gr(r,{n}) needs 0 < r < {n}, got r={r}")
    return ParabolicChoice.maximal(rs, r - 1)


def theta(rs: RootSystem, k: int) -> CentralElement:
    """Theta^k, the generator of the center of SL(n) raised to the k-th power"""
    n = _require_type_a(rs)
    k %= n
    if k == 0:
        return identity_element(rs)
    return center_element(rs, n - k - 1)


def _difference_root(n: int, a: int, b: int) -> Root:
    """L_a - L_b in the simple-root basis"""
    lo, hi = min(a, b), max(a, b)
    sign = 1 if a < b else -1
    return tuple(sign if lo - 1 <= j < hi - 1 else 0 for j in range(n - 1))


def permutation_element(rs: RootSystem, perm: Sequence[int]) -> WeylElement:
    """The Weyl element with w(L_i) = L_perm[i-1]"""
    n = _require_type_a(rs)
    if sorted(perm) != list(range(1, n + 1)):
        raise InputError(f"{list(perm)} is not a permutation of 1..{n}")
    return WeylElement(tuple(_difference_root(n, perm[j], perm[j + 1]) for j in range(n - 1)))


def weyl_permutation(rs: RootSystem, w: WeylElement) -> Tuple[int, ...]:
    """sigma with w(L_i) = L_sigma(i)"""
    n = _require_type_a(rs)
    perm = [None] * n
    for j, image in enumerate(w.images):
        padded = (0,) + tuple(image) + (0,)
        coeffs = [padded[m] - padded[m - 1] for m in range(1, n + 1)]
        plus, minus = coeffs.index(1) + 1, coeffs.index(-1) + 1
        for slot, value in ((j, plus), (j + 1, minus)):
            if perm[slot] is not None and perm[slot] != value:
                raise InvariantViolationError(f"{w} does not act as a permutation")
            perm[slot] = value
    return tuple(perm)


def coordinate_permutation(rs: RootSystem, w: WeylElement) -> Tuple[int, ...]:
    """pi with (w z)_j = z_pi(j), i.e. sigma^-1; for Theta^k this is j -> j - k mod n, 0 read as n"""
    sigma = weyl_permutation(rs, w)
    inverse = [0] * len(sigma)
    for i, s in enumerate(sigma, start=1):
        inverse[s - 1] = i
    return tuple(inverse)


def coset_of_index(rs: RootSystem, index: SchubertIndex) -> WeylElement:
    """Minimal representative of the coset for I: sigma increasing on 1..r and on r+1..n"""
    n = _require_type_a(rs)
    if index.ctx.n != n:
        raise InputError(f"{index} does not live on a Grassmannian of C^{n}")
    head = sorted(n + 1 - i for i in index.elements)
    tail = sorted(set(range(1, n + 1)) - set(head))
    return permutation_element(rs, head + tail)


def index_of_coset(rs: RootSystem, r: int, w: WeylElement) -> SchubertIndex:
    n = _require_type_a(rs)
    w = canonical(rs, grassmannian_parabolic(rs, r), w)
    sigma = weyl_permutation(rs, w)
    return GrContext(n, r).index(sorted(n + 1 - s for s in sigma[:r]))
