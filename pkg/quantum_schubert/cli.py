"""
Command-line front end: `qsc product|gw|transform|fw|roots|verify`.

Every subcommand prints text by default and JSON with --json. Exit codes: 0 on success, 1 on
malformed input or configuration, 2 when a verification suite (or an internal invariant) fails.
"""
import argparse
import json
import sys
from typing import Any, Dict, List, Optional, Sequence, Tuple

from tabulate import tabulate

from quantum_schubert.errors import ConfigValidationError, InputError, InvariantViolationError, NegativeDegreeError
from quantum_schubert.grassmannian.center_transform import (
    DEFAULT_SEARCH_MAX_STATES,
    ShiftVector,
    T_pow,
    reduce_to_classical,
    spoint_invariant,
    transform_instance,
)
from quantum_schubert.grassmannian.classical_ring import CohClass
from quantum_schubert.grassmannian.fulton_woodward import fw_report
from quantum_schubert.grassmannian.quantum_ring import EXPANSION_ORDERS, GWInstance, QClass, dimension_check, qmul_basis
from quantum_schubert.grassmannian.render import format_cohclass, format_qclass
from quantum_schubert.grassmannian.schubert_index import GrContext, SchubertIndex
from quantum_schubert.rootsys.cartan import parse_type
from quantum_schubert.rootsys.center import (
    center_compose,
    center_elements,
    center_inverse,
    center_to_weyl,
    phi_homomorphism_check,
    sign_check,
)
from quantum_schubert.rootsys.parabolic import ParabolicChoice, bruhat_codim, codim_shift, minimal_cosets, tc_exponent
from quantum_schubert.rootsys.system import RootSystem, WeylElement, build, reduced_word
from quantum_schubert.verify.runner import SUITES, VerificationRun

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_VIOLATION = 2

REPORTS = ("center", "phi", "codim")


class ArgumentParser(argparse.ArgumentParser):
    """argparse exits with 2 on bad usage; here 2 is reserved for verification failures."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _parse_elements(ctx: GrContext, text: str) -> SchubertIndex:
    try:
        elements = sorted(int(e) for e in text.split(","))
    except ValueError:
        raise InputError(f"Cannot parse index '{text}'; expected comma-separated integers like 1,3")
    return ctx.index(elements)


def _parse_classes(ctx: GrContext, text: str) -> Tuple[SchubertIndex, ...]:
    return tuple(_parse_elements(ctx, part) for part in text.split("/"))


def _parse_ints(text: str, what: str) -> Tuple[int, ...]:
    try:
        return tuple(int(e) for e in text.split(","))
    except ValueError:
        raise InputError(f"Cannot parse {what} '{text}'; expected comma-separated integers")


def _word_text(word: Sequence[int]) -> str:
    return " ".join(f"s{i + 1}" for i in word) if word else "e"


def _emit(args, text: str, payload: Dict[str, Any]):
    if args.json:
        print(json.dumps(payload, indent=2, ensure_ascii=False))
    else:
        print(text)


# product

def cmd_product(args) -> int:
    ctx = GrContext(args.n, args.r)
    i, j = _parse_elements(ctx, args.i), _parse_elements(ctx, args.j)
    product = qmul_basis(i, j, expand=args.expand)
    text = format_qclass(product)
    _emit(args, text, {"I": i.to_json(), "J": j.to_json(), "product": product.to_json(), "text": text})
    return EXIT_OK


# gw

def cmd_gw(args) -> int:
    ctx = GrContext(args.n, args.r)
    inst = GWInstance(_parse_classes(ctx, args.classes), args.d)
    value = spoint_invariant(inst, args.max_states)
    lines = [str(value) if value is not None else "unreachable"]
    payload: Dict[str, Any] = {"instance": inst.to_json(), "value": value, "reachable": value is not None}
    if args.trace:
        if dimension_check(inst):
            reduction = reduce_to_classical(inst, args.max_states)
            payload["reduction"] = reduction.to_json()
            lines.extend(_trace_lines(reduction))
        else:
            payload["reduction"] = None
            lines.append(f"{inst} fails the dimension condition")
    _emit(args, "\n".join(lines), payload)
    return EXIT_OK


def _trace_lines(reduction) -> List[str]:
    lines = [f"start {reduction.source}"]
    current = reduction.source
    for sv in reduction.history:
        try:
            current = transform_instance(current, sv)
            lines.append(f"shift {sv} -> {current}")
        except NegativeDegreeError as e:
            lines.append(f"shift {sv} -> degree {e.degree} < 0, invariant vanishes")
    lines.append(reduction.status.value)
    return lines


# transform

def cmd_transform(args) -> int:
    ctx = GrContext(args.n, args.r)
    if args.classes is not None:
        return _transform_instance(args, ctx)
    if args.i is None:
        raise InputError("transform needs either --classes with --shifts, or --i with --k")
    i = _parse_elements(ctx, args.i)
    image = T_pow(QClass.basis(i), args.k)
    text = format_qclass(image)
    _emit(args, text, {"I": i.to_json(), "k": args.k, "image": image.to_json(), "text": text})
    return EXIT_OK


def _transform_instance(args, ctx: GrContext) -> int:
    if args.shifts is None:
        raise InputError("--classes needs --shifts")
    inst = GWInstance(_parse_classes(ctx, args.classes), args.d)
    sv = ShiftVector(ctx, _parse_ints(args.shifts, "shifts"))
    payload: Dict[str, Any] = {"source": inst.to_json(), "shifts": sv.to_json()}
    try:
        target = transform_instance(inst, sv)
        payload.update(target=target.to_json(), degree=target.d, vanishing=False)
        text = f"{inst} -> {target}"
    except NegativeDegreeError as e:
        payload.update(target=None, degree=e.degree, vanishing=True)
        text = f"{inst} -> degree {e.degree} < 0, both invariants vanish"
    _emit(args, text, payload)
    return EXIT_OK


# fw

def cmd_fw(args) -> int:
    ctx = GrContext(args.n, args.r)
    i, j = _parse_elements(ctx, args.i), _parse_elements(ctx, args.j)
    report = fw_report(i, j)
    term = CohClass.from_json(report["lowest_term"])
    text = tabulate([
        ["minimal q-degree", report["degree"]],
        ["maximizer (a, n-a)", tuple(report["maximizer"])],
        ["all maximizers", ", ".join(str(tuple(p)) for p in report["maximizers"])],
        ["lowest term", format_cohclass(term)],
        ["verified", report["verified"]],
    ], tablefmt="plain")
    _emit(args, text, report)
    return EXIT_OK if report["verified"] else EXIT_VIOLATION


# roots

def _center_report(rs: RootSystem):
    rows, elements = [], []
    for c in center_elements(rs):
        w = center_to_weyl(rs, c)
        word = reduced_word(rs, w)
        entry = {
            "element": c.label,
            "node": None if c.node is None else c.node + 1,
            "coweight": [str(v) for v in c.coweight],
            "weyl_word": [i + 1 for i in word],
            "inverse": center_inverse(rs, c).label,
            "sign_check": sign_check(rs, c),
        }
        elements.append(entry)
        rows.append([c.label, entry["node"] or "-", " ".join(entry["coweight"]), _word_text(word),
                     entry["inverse"], entry["sign_check"]])
    text = tabulate(rows, headers=["element", "node", "coweight", "w_c", "inverse", "sign check"])
    return text, {"type": rs.label, "elements": elements}


def _phi_report(rs: RootSystem):
    elements = center_elements(rs)
    rows, table = [], []
    for c1 in elements:
        for c2 in elements:
            c3 = center_compose(rs, c1, c2)
            holds = center_to_weyl(rs, c1) * center_to_weyl(rs, c2) == center_to_weyl(rs, c3)
            rows.append([c1.label, c2.label, c3.label, holds])
            table.append({"c1": c1.label, "c2": c2.label, "product": c3.label, "homomorphic": holds})
    ok = phi_homomorphism_check(rs)
    text = tabulate(rows, headers=["c1", "c2", "c1 c2", "w_c1 w_c2 = w_c1c2"]) + f"\n\ninjective homomorphism: {ok}"
    return text, {"type": rs.label, "table": table, "injective_homomorphism": ok}


def _codim_report(rs: RootSystem, node: int):
    P = ParabolicChoice.maximal(rs, node - 1)
    nontrivial = [c for c in center_elements(rs) if not c.is_identity]
    headers = ["w", "codim"]
    for c in nontrivial:
        headers += [f"{c.label} codim", f"{c.label} shift", f"{c.label} q-exp"]
    rows, cosets = [], []
    for w in minimal_cosets(rs, P):
        base = bruhat_codim(rs, P, w)
        word = reduced_word(rs, w)
        row: List[Any] = [_word_text(word), base]
        entry: Dict[str, Any] = {"word": [i + 1 for i in word], "codim": base, "center": {}}
        for c in nontrivial:
            moved: WeylElement = center_to_weyl(rs, c) * w
            after, delta, exponent = bruhat_codim(rs, P, moved), codim_shift(rs, P, c, w), tc_exponent(rs, P, c, w)[0]
            row += [after, delta, exponent]
            entry["center"][c.label] = {"codim": after, "shift": delta, "q_exponent": exponent}
        rows.append(row)
        cosets.append(entry)
    text = tabulate(rows, headers=headers)
    return text, {"type": rs.label, "parabolic": P.to_json(rs), "cosets": cosets}


def cmd_roots(args) -> int:
    series, rank = parse_type(args.type, args.rank)
    rs = build(series, rank)
    if args.report == "center":
        text, payload = _center_report(rs)
    elif args.report == "phi":
        text, payload = _phi_report(rs)
    else:
        node = args.node if args.node is not None else 1
        if not 1 <= node <= rs.rank:
            raise InputError(f"{rs.label} has nodes 1..{rs.rank}, got --node {node}")
        text, payload = _codim_report(rs, node)
    _emit(args, text, payload)
    return EXIT_OK


# verify

def cmd_verify(args) -> int:
    run = VerificationRun(
        config_file_path=args.config,
        max_n=args.max_n,
        max_rank=args.max_rank,
        seed=args.seed,
        threads=args.threads,
        verbose=True if args.verbose else None,
    )
    report = run.run(args.suite)
    _emit(args, report.to_text(), report.to_json())
    return EXIT_OK if report.passed else EXIT_VIOLATION


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(prog="qsc", description="Quantum Schubert calculus on Grassmannians and root systems")
    sub = parser.add_subparsers(dest="command", parser_class=ArgumentParser)
    sub.required = True

    def grassmannian(p):
        p.add_argument("--n", type=int, required=True, help="Dimension of the ambient space")
        p.add_argument("--r", type=int, required=True, help="Dimension of the subspaces")
        p.add_argument("--json", action="store_true", help="Print JSON instead of text")

    p = sub.add_parser("product", help="Quantum product of two Schubert classes")
    grassmannian(p)
    p.add_argument("--i", required=True, help="First index, e.g. 1,3")
    p.add_argument("--j", required=True, help="Second index")
    p.add_argument("--expand", choices=EXPANSION_ORDERS, default="auto", help="Which factor to expand by Giambelli")
    p.set_defaults(fn=cmd_product)

    p = sub.add_parser("gw", help="Gromov-Witten invariant of s >= 3 Schubert classes")
    grassmannian(p)
    p.add_argument("--classes", required=True, help="Indices separated by '/', e.g. 1,2/1,2/1,2")
    p.add_argument("--d", type=int, required=True, help="Degree of the curves")
    p.add_argument("--trace", action="store_true", help="Show the shifts used to reduce to degree 0")
    p.add_argument("--max-states", type=int, default=DEFAULT_SEARCH_MAX_STATES,
                   help="Bound on the fallback search for a degree-lowering shift")
    p.set_defaults(fn=cmd_gw)

    p = sub.add_parser("transform", help="Shift an invariant, or apply T^k to a class")
    grassmannian(p)
    p.add_argument("--classes", help="Indices of the invariant separated by '/'")
    p.add_argument("--d", type=int, default=0, help="Degree of the invariant")
    p.add_argument("--shifts", help="Per-class shifts summing to a multiple of n, e.g. 2,1,1")
    p.add_argument("--i", help="Index of a single class to apply T^k to")
    p.add_argument("--k", type=int, default=1, help="Power of T")
    p.set_defaults(fn=cmd_transform)

    p = sub.add_parser("fw", help="Minimal q-degree and lowest term of a product")
    grassmannian(p)
    p.add_argument("--i", required=True)
    p.add_argument("--j", required=True)
    p.set_defaults(fn=cmd_fw)

    p = sub.add_parser("roots", help="Center and parabolic reports for a root system")
    p.add_argument("--type", required=True, help="Series letter with --rank, or a label like E6")
    p.add_argument("--rank", type=int)
    p.add_argument("--report", choices=REPORTS, default="center")
    p.add_argument("--node", type=int, help="Node (1-based) of the maximal parabolic for --report codim")
    p.add_argument("--json", action="store_true", help="Print JSON instead of text")
    p.set_defaults(fn=cmd_roots)

    p = sub.add_parser("verify", help="Run the verification suites")
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    p.add_argument("--max-n", type=int)
    p.add_argument("--max-rank", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--threads", type=int)
    p.add_argument("--config", help="YAML file of run settings")
    p.add_argument("--verbose", action="store_true", help="Log progress to stderr")
    p.add_argument("--json", action="store_true", help="Print JSON instead of text")
    p.set_defaults(fn=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (InputError, ConfigValidationError) as e:
        print(f"qsc: error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except InvariantViolationError as e:
        print(f"qsc: invariant violated: {e}", file=sys.stderr)
        return EXIT_VIOLATION


if __name__ == '__main__':
    sys.exit(main())
