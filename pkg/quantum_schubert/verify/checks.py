"""
Sweep functions behind `qsc verify`.

Every check takes plain, picklable arguments, runs one slice of a suite (one Grassmannian, one
index, one root system) and reports what it checked through a Recorder. run_task dispatches a Task
to its check by name so the slices can be farmed out to worker processes.
"""
import dataclasses
import itertools
import random
import time
from typing import Callable, Dict, List, Tuple

from quantum_schubert.errors import NegativeDegreeError, QSCError
from quantum_schubert.grassmannian.center_transform import (
    ReductionStatus,
    T,
    T_iterated,
    T_pow,
    classical_invariant,
    classical_shift,
    reduce_to_classical,
    round_trip_vector,
    shift_vectors,
    transform_instance,
)
from quantum_schubert.grassmannian.classical_ring import CohClass, cup, cup_basis, integral, lr_coefficient
from quantum_schubert.grassmannian.fulton_woodward import count_bound_holds, min_q_degree, verify_fw
from quantum_schubert.grassmannian.quantum_ring import GWInstance, QClass, dimension_check, gw3, qmul, qmul_basis
from quantum_schubert.grassmannian.schubert_index import (
    GrContext,
    codim,
    dual,
    shift,
    shift_count,
    to_partition,
)
from quantum_schubert.rootsys.center import (
    center_compose,
    center_elements,
    center_inverse,
    center_to_weyl,
    levi_conjugation_check,
    phi_homomorphism_check,
    sign_check,
)
from quantum_schubert.rootsys.parabolic import (
    DegreeVector,
    all_parabolics,
    bruhat_codim,
    canonical,
    codim_shift,
    codim_shift_direct,
    degree_shift,
    dim_condition_check,
    minimal_cosets,
    operator_composition_check,
    tc_exponent,
)
from quantum_schubert.rootsys.system import build
from quantum_schubert.rootsys.type_a import (
    coordinate_permutation,
    coset_of_index,
    grassmannian_parabolic,
    index_of_coset,
    theta,
)

# Nontrivial center elements per series; E is keyed by rank
EXPECTED_CENTER_SIZE = {"B": 1, "C": 1, "D": 3, "F": 0, "G": 0, ("E", 6): 2, ("E", 7): 1, ("E", 8): 0}

# Coset triples per parabolic in the dimension sweep before it switches to sampling
MAX_DIM_TRIPLES = 216


@dataclasses.dataclass(frozen=True)
class Task:
    suite: str
    check: str
    args: Tuple


@dataclasses.dataclass(frozen=True, order=True)
class Violation:
    suite: str
    check: str
    subject: str
    detail: str

    def to_json(self):
        return dataclasses.asdict(self)


@dataclasses.dataclass
class TaskResult:
    task: Task
    checks: int
    violations: List[Violation]
    stats: Dict[str, int]
    seconds: float


class Recorder:
    def __init__(self, suite: str, subject: str):
        self.suite = suite
        self.subject = subject
        self.checks = 0
        self.violations: List[Violation] = []
        self.stats: Dict[str, int] = {}

    def expect(self, check: str, ok: bool, detail: Callable[[], str]):
        self.checks += 1
        if not ok:
            self.violations.append(Violation(self.suite, check, self.subject, detail()))

    def count(self, stat: str, k: int = 1):
        self.stats[stat] = self.stats.get(stat, 0) + k


def _ctx_subject(n: int, r: int) -> str:
    return str(GrContext(n, r))


def _dimension_true_triples(ctx: GrContext, max_degree: int):
    """All (I, J, K, d) with d <= max_degree satisfying the dimension condition"""
    by_codim: Dict[int, list] = {}
    for index in ctx.indices():
        by_codim.setdefault(codim(index), []).append(index)
    for d in range(max_degree + 1):
        for i in ctx.indices():
            for j in ctx.indices():
                target = ctx.n * d + ctx.dimension - codim(i) - codim(j)
                for k in by_codim.get(target, []):
                    yield i, j, k, d


# rings

def check_classical_ring(rec: Recorder, n: int, r: int, first: Tuple[int, ...]):
    ctx = GrContext(n, r)
    i = ctx.index(first)
    basis = ctx.indices()
    for j in basis:
        ij = cup_basis(i, j)
        rec.expect("cup_commutative", ij == cup_basis(j, i), lambda: f"{i} ∪ {j}")
        if codim(i) + codim(j) == ctx.dimension:
            expected = 1 if j == dual(i) else 0
            rec.expect("duality", integral(ij) == expected, lambda: f"∫ {i} ∪ {j} = {integral(ij)}")
        for k in basis:
            lr = lr_coefficient(to_partition(i), to_partition(j), to_partition(k))
            rec.expect("lr_agreement", ij.coefficient(k) == lr,
                       lambda: f"coefficient of {k} in {i} ∪ {j} is {ij.coefficient(k)}, LR count {lr}")
            left = cup(ij, CohClass.basis(k))
            right = cup(CohClass.basis(i), cup_basis(j, k))
            rec.expect("cup_associative", left == right, lambda: f"({i} ∪ {j}) ∪ {k}")


def check_quantum_ring(rec: Recorder, n: int, r: int, exhaustive: bool, symmetric: bool):
    ctx = GrContext(n, r)
    basis = ctx.indices()
    for i in basis:
        for j in basis:
            ij = qmul_basis(i, j)
            rec.expect("qmul_commutative", ij == qmul_basis(j, i), lambda: f"{i} ⋆ {j}")
            if not exhaustive:
                continue
            rec.expect("classical_limit", ij.classical_limit() == cup_basis(i, j), lambda: f"{i} ⋆ {j}")
            rec.expect("expansion_order", qmul_basis(i, j, "left") == qmul_basis(i, j, "right"),
                       lambda: f"{i} ⋆ {j}")
            for d, k, _ in ij.terms:
                rec.expect("degree_codim", codim(k) == codim(i) + codim(j) - n * d,
                           lambda: f"term q^{d} {k} of {i} ⋆ {j}")
    if symmetric:
        for i, j, k, d in _dimension_true_triples(ctx, 2 * r):
            values = {gw3(*p, d) for p in itertools.permutations((i, j, k))}
            rec.expect("gw3_symmetric", len(values) == 1, lambda: f"<{i},{j},{k}>_{d} takes values {sorted(values)}")


def check_quantum_associativity(rec: Recorder, n: int, r: int, samples: int, seed: int):
    ctx = GrContext(n, r)
    basis = ctx.indices()
    rng = random.Random(seed * 1_000_003 + n * 101 + r)
    for _ in range(samples):
        i, j, k = (rng.choice(basis) for _ in range(3))
        left = qmul(qmul_basis(i, j), QClass.basis(k))
        right = qmul(QClass.basis(i), qmul_basis(j, k))
        rec.expect("qmul_associative", left == right, lambda: f"({i} ⋆ {j}) ⋆ {k}")


def check_pieri_shift(rec: Recorder, n: int, r: int):
    """Every q-term of sigma(I) * sigma(J) with codim(I) <= n-1 moves to degree 0 under some shift of J and K"""
    ctx = GrContext(n, r)
    for i in (index for index in ctx.indices() if codim(index) <= n - 1):
        for j in ctx.indices():
            for d, k, _ in qmul_basis(i, j).terms:
                if d == 0:
                    continue
                t = classical_shift(i, j, k)
                rec.expect("pieri_shift", t is not None, lambda: f"term q^{d} {k} of {i} ⋆ {j}")


# transform

def check_operators(rec: Recorder, n: int, r: int):
    ctx = GrContext(n, r)
    basis = ctx.indices()
    for i in basis:
        x = QClass.basis(i)
        rec.expect("T_power_n", T_pow(x, n) == x.times_q(r), lambda: f"T^{n} {i}")
        for k in range(n + 1):
            rec.expect("T_closed_form", T_pow(x, k) == T_iterated(x, k), lambda: f"T^{k} {i}")
            s = shift(i, k)
            expected = codim(i) + (k - s.count) * r - (n - r) * s.count
            rec.expect("shift_codim", codim(s.index) == expected, lambda: f"shift({i}, {k})")
            for k2 in range(n + 1):
                lhs = s.count + shift_count(s.index, k2)
                rec.expect("shift_count_cocycle", lhs == shift_count(i, k + k2), lambda: f"shift({i}, {k}, {k2})")
        for j in basis:
            y = QClass.basis(j)
            rec.expect("T_linear", T(qmul(x, y)) == qmul(T(x), y), lambda: f"T({i} ⋆ {j})")


def check_transformation(rec: Recorder, n: int, r: int, max_degree: int, max_states: int):
    ctx = GrContext(n, r)
    for i, j, k, d in _dimension_true_triples(ctx, max_degree):
        inst = GWInstance((i, j, k), d)
        value = gw3(i, j, k, d)
        for sv in shift_vectors(ctx, 3):
            try:
                moved = transform_instance(inst, sv)
            except NegativeDegreeError:
                rec.count("negative_degree")
                rec.expect("vanishing", value == 0, lambda: f"{inst} shifted by {sv} has negative degree, value {value}")
                continue
            rec.expect("dimension_preserved", dimension_check(moved), lambda: f"{inst} shifted by {sv}")
            rec.expect("transformation_formula", gw3(*moved.indices, moved.d) == value,
                       lambda: f"{inst} = {value}, shifted by {sv} to {moved}")
            try:
                back = transform_instance(moved, round_trip_vector(sv))
            except NegativeDegreeError as e:
                rec.expect("vanishing", value == 0,
                           lambda: f"{moved} shifted back reaches degree {e.degree}, value {value}")
                continue
            rec.expect("round_trip", back == inst, lambda: f"{inst} by {sv} and back gives {back}")

        reduction = reduce_to_classical(inst, max_states)
        rec.count(f"reduction_{reduction.status.value}")
        if reduction.status is ReductionStatus.REDUCED:
            reduced = classical_invariant(reduction.terminal)
            rec.expect("reduction_value", reduced == value,
                       lambda: f"{inst} = {value}, reduced to {reduction.terminal} = {reduced}")
        elif reduction.status is ReductionStatus.VANISHING:
            rec.expect("reduction_value", value == 0, lambda: f"{inst} = {value} but its reduction vanishes")


# fw

def check_fulton_woodward(rec: Recorder, n: int, r: int, first: Tuple[int, ...]):
    ctx = GrContext(n, r)
    i = ctx.index(first)
    for j in ctx.indices():
        rec.expect("verify_fw", verify_fw(i, j), lambda: f"{i} ⋆ {j}")
        lowest = min_q_degree(i, j)
        rec.expect("fw_symmetric", lowest.degree == min_q_degree(j, i).degree, lambda: f"{i}, {j}")
        for pair in lowest.maximizers:
            rec.expect("count_bound", count_bound_holds(i, j, pair), lambda: f"{i}, {j} at {pair}")


# roots

def _expected_center_size(series: str, rank: int) -> int:
    if series == "A":
        return rank
    if series == "E":
        return EXPECTED_CENTER_SIZE[("E", rank)]
    return EXPECTED_CENTER_SIZE[series]


def check_root_system(rec: Recorder, series: str, rank: int):
    rs = build(series, rank)
    elements = center_elements(rs)
    rec.expect("center_size", len(elements) - 1 == _expected_center_size(series, rank),
               lambda: f"{len(elements) - 1} mark-1 nodes, marks {rs.marks}")
    for c in elements:
        try:
            center_to_weyl(rs, c)
        except QSCError as e:
            rec.expect("alcove_translation", False, lambda: f"{c.label}: {e}")
            continue
        rec.expect("alcove_translation", True, lambda: "")
        rec.expect("sign_check", sign_check(rs, c), lambda: f"{c.label}")
        rec.expect("levi_conjugation", levi_conjugation_check(rs, c, center_inverse(rs, c)), lambda: f"{c.label}")
        if series == "A":
            n = rank + 1
            k = 0 if c.is_identity else n - 1 - c.node
            expected = tuple(((j - k - 1) % n) + 1 for j in range(1, n + 1))
            got = coordinate_permutation(rs, center_to_weyl(rs, c))
            rec.expect("subtract_k", got == expected, lambda: f"Θ^{k} acts as {got}, expected {expected}")
    rec.expect("phi_homomorphism", phi_homomorphism_check(rs), lambda: "")


def check_parabolics(rec: Recorder, series: str, rank: int, seed: int = 0):
    rs = build(series, rank)
    elements = center_elements(rs)
    for P in all_parabolics(rs):
        cosets = minimal_cosets(rs, P)
        for w in cosets:
            for c in elements:
                formula, direct = codim_shift(rs, P, c, w), codim_shift_direct(rs, P, c, w)
                rec.expect("codim_shift", formula == direct,
                           lambda: f"{c.label}, Levi {sorted(P.levi)}, w {w.images}: {formula} vs {direct}")
        for c1 in elements:
            for c2 in elements:
                rec.expect("operator_composition", operator_composition_check(rs, P, c1, c2),
                           lambda: f"{c1.label}, {c2.label}, Levi {sorted(P.levi)}")
        if rank <= 3 and len(P.sigma(rs)) == 1:
            rng = random.Random(seed * 1_000_003 + rank * 101 + P.sigma(rs)[0])
            _check_dimension_preserved(rec, rs, P, _coset_triples(cosets, rng), elements)


def _coset_triples(cosets, rng: random.Random) -> List[Tuple]:
    """Every triple of cosets, or MAX_DIM_TRIPLES of them drawn with rng"""
    if len(cosets) ** 3 <= MAX_DIM_TRIPLES:
        return list(itertools.product(cosets, repeat=3))
    return [tuple(rng.choice(cosets) for _ in range(3)) for _ in range(MAX_DIM_TRIPLES)]


def _check_dimension_preserved(rec, rs, P, triples, elements):
    for c1 in elements:
        for c2 in elements:
            c3 = center_inverse(rs, center_compose(rs, c1, c2))
            cs = (c1, c2, c3)
            ws = [center_to_weyl(rs, c) for c in cs]
            for us in triples:
                moved = [canonical(rs, P, w * u) for w, u in zip(ws, us)]
                for z in range(3):
                    before = DegreeVector((z,))
                    after = degree_shift(rs, P, before, us, cs)
                    rec.expect("dim_condition_preserved",
                               dim_condition_check(rs, P, us, before) == dim_condition_check(rs, P, moved, after),
                               lambda: f"{[c.label for c in cs]}, z={z}")


def check_type_a_bridge(rec: Recorder, n: int, max_degree: int):
    rs = build("A", n - 1)
    for r in range(1, n):
        P = grassmannian_parabolic(rs, r)
        ctx = GrContext(n, r)
        for i in ctx.indices():
            w = coset_of_index(rs, i)
            rec.expect("coset_codim", bruhat_codim(rs, P, w) == codim(i), lambda: f"{i}")
            rec.expect("coset_round_trip", index_of_coset(rs, r, w) == i, lambda: f"{i}")
            exponent_sum = 0
            for k in range(n + 1):
                c = theta(rs, k)
                shifted = index_of_coset(rs, r, center_to_weyl(rs, c) * w)
                rec.expect("theta_shift", shifted == shift(i, k).index, lambda: f"Θ^{k} on {i} gives {shifted}")
                tc = tc_exponent(rs, P, c, w)[0]
                expected = 0 if k in (0, n) else shift_count(i, k) - max(0, r + k - n)
                rec.expect("tc_exponent", tc == expected, lambda: f"Θ^{k} on {i}: {tc} vs {expected}")
                if k > 0:
                    stepped = coset_of_index(rs, shift(i, k - 1).index)
                    exponent_sum += tc_exponent(rs, P, theta(rs, 1), stepped)[0]
                    rec.expect("tc_iterated", exponent_sum == shift_count(i, k),
                               lambda: f"Θ applied {k} times to {i}: {exponent_sum}")

        for i, j, k, d in _dimension_true_triples(ctx, max_degree):
            us = [coset_of_index(rs, x) for x in (i, j, k)]
            inst = GWInstance((i, j, k), d)
            rec.expect("dim_condition_bridge", dim_condition_check(rs, P, us, DegreeVector((d,))),
                       lambda: f"{inst}")
            for sv in shift_vectors(ctx, 3):
                cs = [theta(rs, m) for m in sv.shifts]
                z = degree_shift(rs, P, DegreeVector((d,)), us, cs).values[0]
                expected = d + r - sum(shift_count(x, m) for x, m in zip((i, j, k), sv.shifts))
                rec.expect("degree_shift_bridge", z == expected, lambda: f"{inst} by {sv}: {z} vs {expected}")


CHECKS = {
    "classical_ring": check_classical_ring,
    "quantum_ring": check_quantum_ring,
    "quantum_associativity": check_quantum_associativity,
    "pieri_shift": check_pieri_shift,
    "operators": check_operators,
    "transformation": check_transformation,
    "fulton_woodward": check_fulton_woodward,
    "root_system": check_root_system,
    "parabolics": check_parabolics,
    "type_a_bridge": check_type_a_bridge,
}


def task_subject(task: Task) -> str:
    if task.suite == "roots":
        if task.check == "type_a_bridge":
            return f"A{task.args[0] - 1}"
        return f"{task.args[0]}{task.args[1]}"
    return _ctx_subject(task.args[0], task.args[1])


def run_task(task: Task) -> TaskResult:
    start = time.time()
    rec = Recorder(task.suite, task_subject(task))
    try:
        CHECKS[task.check](rec, *task.args)
    except QSCError as e:
        rec.violations.append(Violation(task.suite, task.check, rec.subject, f"raised {type(e).__name__}: {e}"))
    return TaskResult(task, rec.checks, rec.violations, rec.stats, time.time() - start)
