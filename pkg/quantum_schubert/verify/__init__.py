from .checks import CHECKS, Task, TaskResult, Violation, run_task
from .pool import MAX_TASKS_PER_BATCH, SweepPool
from .runner import SUITES, SuiteSummary, VerificationReport, VerificationRun
