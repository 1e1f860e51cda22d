import dataclasses
import sys
import time
import warnings
from pathlib import Path
from typing import Dict, List, Optional, Union

from quantum_schubert.config.config import RunConfig, FIELDS, humanize_float, validate_config_file_dict
from quantum_schubert.errors import InputError
from quantum_schubert.grassmannian.schubert_index import GrContext
from quantum_schubert.verify.checks import Task, TaskResult, Violation, task_subject
from quantum_schubert.verify.pool import SweepPool

warnings.filterwarnings(
                "ignore",
                "The _yaml extension module is now located at yaml._yaml and its location is "
                "subject to change.  To use the LibYAML-based parser and emitter, import "
                "from `yaml`: `from yaml import CLoader as Loader, CDumper as Dumper`.")
import yaml
from tabulate import tabulate

SUITES = ("rings", "transform", "fw", "roots")

# (series, rank) of every root system the roots suite visits, before the max_rank cap
ROOT_TYPES = (
    [("A", r) for r in range(1, 6)]
    + [("B", r) for r in range(2, 6)]
    + [("C", r) for r in range(2, 6)]
    + [("D", r) for r in range(4, 7)]
    + [("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2)]
)

# The type-A bridge compares against Gr(r,n) for n up to this
BRIDGE_MAX_N = 5


@dataclasses.dataclass
class SuiteSummary:
    suite: str
    tasks: int
    checks: int
    violations: int
    seconds: float

    def to_json(self):
        return dataclasses.asdict(self)


@dataclasses.dataclass
class VerificationReport:
    summaries: List[SuiteSummary]
    violations: List[Violation]
    stats: Dict[str, Dict[str, int]]
    config: Dict

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_json(self) -> Dict:
        return {
            "passed": self.passed,
            "suites": [s.to_json() for s in self.summaries],
            "violations": [v.to_json() for v in self.violations],
            "stats": self.stats,
            "config": self.config,
        }

    def to_text(self) -> str:
        rows = [[s.suite, s.tasks, s.checks, s.violations, humanize_float(s.seconds)] for s in self.summaries]
        out = [tabulate(rows, headers=["suite", "tasks", "checks", "violations", "seconds"])]
        if self.stats:
            names = sorted({name for counts in self.stats.values() for name in counts})
            stat_rows = [[subject] + [self.stats[subject].get(name, 0) for name in names] for subject in self.stats]
            out.append("")
            out.append(tabulate(stat_rows, headers=["subject"] + names))
        if self.violations:
            out.append("")
            out.append(tabulate([[v.suite, v.check, v.subject, v.detail] for v in self.violations],
                                headers=["suite", "check", "subject", "detail"]))
        out.append("")
        out.append("PASS" if self.passed else f"FAIL ({len(self.violations)} violations)")
        return "\n".join(out)


def _contexts(max_n: int):
    for n in range(2, max_n + 1):
        for r in range(1, n):
            yield n, r


class VerificationRun:
    """
    Runs the verification suites under one RunConfig.

    Configuration values are loaded from an optional YAML file, then overwritten by any argument
    passed to `__init__` that is not None.

    Args:
        config_file_path: Path to a yaml configuration file. None to take every value from args and defaults.
        The remaining arguments match the fields of RunConfig.
    """

    def __init__(
            self,
            config_file_path: Optional[Union[str, Path]] = None,
            max_n: Optional[int] = None,
            max_rank: Optional[int] = None,
            rings_max_n: Optional[int] = None,
            assoc_max_n: Optional[int] = None,
            assoc_samples: Optional[int] = None,
            transform_max_n: Optional[int] = None,
            transform_max_degree: Optional[int] = None,
            pieri_shift_max_n: Optional[int] = None,
            symmetry_max_n: Optional[int] = None,
            codim_max_rank: Optional[int] = None,
            search_max_states: Optional[int] = None,
            seed: Optional[int] = None,
            threads: Optional[int] = None,
            verbose: Optional[bool] = None,
    ):
        # Args must be at the top of __init__ so other variables don't pollute it
        args = locals()

        # The names of the args should match the fields in a RunConfig. Programmatically ensure this to avoid drift.
        excluded_args = ["self", "config_file_path"]
        for excluded_arg in excluded_args:
            assert excluded_arg in args.keys()  # Don't let excluded_args drift either
        for arg_name in args.keys():
            if arg_name in excluded_args:
                continue
            assert arg_name in FIELDS, f"There is argument that is not recognized as a valid config field: {arg_name}"
        for field_name in FIELDS:
            assert field_name in args.keys(), f"There is a config field that is not being set via args: {field_name}"

        self.cfg = RunConfig()

        if config_file_path is not None:
            path = Path(config_file_path).absolute()
            if not path.is_file():
                raise InputError(f"Config file {path} does not exist")
            with path.open() as f:
                config_file_dict = yaml.safe_load(f) or {}
            if not isinstance(config_file_dict, dict):
                raise InputError(f"Config file {path} must hold a mapping of field names to values")

            validate_config_file_dict(config_file_dict)

            for field_name, field_val in config_file_dict.items():
                setattr(self.cfg, field_name, field_val)

        # Add in fields specified via args, overwriting any existing fields
        for field_name, field_val in args.items():
            if field_name in excluded_args:
                continue
            assert hasattr(self.cfg, field_name), f"Tried to dynamically set a field ({field_name}) " \
                                                  f"that doesn't exist in the statically defined " \
                                                  f"object (fields={self.cfg.field_names})"
            if field_val is not None:
                setattr(self.cfg, field_name, field_val)

        self.cfg.fill_in_defaults()
        self.cfg.validate()

    def _get_vlog(self, force_verbose=False, prefix=None):
        def vlog_fn_verbose(s):
            out = "" if prefix is None else f'[{prefix}] '
            out += s
            print(out, file=sys.stderr)

        def vlog_fn_noop(s):
            pass

        vlog_fn = vlog_fn_verbose if self.cfg.verbose or force_verbose else vlog_fn_noop
        return vlog_fn

    def tasks(self, suite: str) -> List[Task]:
        cfg = self.cfg
        if suite == "rings":
            out = [Task(suite, "classical_ring", (n, r, index.elements))
                   for n, r in _contexts(cfg.bound("rings_max_n")) for index in GrContext(n, r).indices()]
            for n, r in _contexts(cfg.bound("assoc_max_n")):
                exhaustive = n <= cfg.bound("rings_max_n")
                symmetric = n <= cfg.bound("symmetry_max_n")
                out.append(Task(suite, "quantum_ring", (n, r, exhaustive, symmetric)))
                out.append(Task(suite, "quantum_associativity", (n, r, cfg.assoc_samples, cfg.seed)))
            out.extend(Task(suite, "pieri_shift", (n, r)) for n, r in _contexts(cfg.bound("pieri_shift_max_n")))
            return out
        if suite == "transform":
            out = []
            for n, r in _contexts(cfg.bound("transform_max_n")):
                out.append(Task(suite, "operators", (n, r)))
                out.append(Task(suite, "transformation", (n, r, cfg.transform_max_degree, cfg.search_max_states)))
            return out
        if suite == "fw":
            return [Task(suite, "fulton_woodward", (n, r, index.elements))
                    for n, r in _contexts(cfg.max_n) for index in GrContext(n, r).indices()]
        if suite == "roots":
            types = [(series, rank) for series, rank in ROOT_TYPES if rank <= cfg.max_rank]
            out = [Task(suite, "root_system", t) for t in types]
            out.extend(Task(suite, "parabolics", t + (cfg.seed,)) for t in types if t[1] <= cfg.codim_max_rank)
            bridge_max_n = min(BRIDGE_MAX_N, cfg.max_rank + 1, cfg.max_n)
            out.extend(Task(suite, "type_a_bridge", (n, cfg.transform_max_degree)) for n in range(2, bridge_max_n + 1))
            return out
        raise InputError(f"Unknown suite '{suite}', expected one of {', '.join(SUITES + ('all',))}")

    def run(self, suite: str = "all") -> VerificationReport:
        vlog = self._get_vlog(prefix='VerificationRun.run')
        suites = SUITES if suite == "all" else (suite,)
        plans = {name: self.tasks(name) for name in suites}

        pool = SweepPool(self.cfg.threads, vlog=self._get_vlog(prefix='SweepPool'))
        summaries: List[SuiteSummary] = []
        violations: List[Violation] = []
        stats: Dict[str, Dict[str, int]] = {}
        for name, tasks in plans.items():
            vlog(f'Suite {name}: {len(tasks)} tasks on {self.cfg.threads} workers')
            start = time.time()
            results = pool.run_on_all(tasks)
            elapsed = time.time() - start
            summary = self._summarize(name, results, elapsed)
            vlog(f'Suite {name}: {summary.checks} checks, {summary.violations} violations '
                 f'in {humanize_float(elapsed)} seconds')
            summaries.append(summary)
            for result in results:
                violations.extend(result.violations)
                if result.stats:
                    subject = task_subject(result.task)
                    merged = stats.setdefault(subject, {})
                    for key, value in result.stats.items():
                        merged[key] = merged.get(key, 0) + value
        return VerificationReport(summaries, sorted(violations), dict(sorted(stats.items())), self.cfg.to_json())

    @staticmethod
    def _summarize(suite: str, results: List[TaskResult], elapsed: float) -> SuiteSummary:
        return SuiteSummary(
            suite=suite,
            tasks=len(results),
            checks=sum(r.checks for r in results),
            violations=sum(len(r.violations) for r in results),
            seconds=elapsed,
        )
