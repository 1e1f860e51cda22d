import concurrent.futures
from typing import Callable, List, Optional, Sequence

from quantum_schubert.verify.checks import Task, TaskResult, run_task

# Futures are submitted in groups of this size so a long suite doesn't queue every task up front
MAX_TASKS_PER_BATCH = 32


class SweepPool:
    """
    SweepPool runs independent verification tasks on a group of worker processes.

    Tasks are plain data (see verify.checks.Task) and each worker keeps its own product caches, so
    tasks that share a Grassmannian are best kept adjacent in the task list.
    """

    def __init__(self, threads: int, vlog: Optional[Callable[[str], None]] = None):
        """
        Args:
            threads: Number of worker processes. With 1 every task runs inline in this process.
            vlog: Optional progress logger, called once per finished batch.
        """
        self.threads = threads
        self._vlog = vlog if vlog is not None else (lambda s: None)

    def run_on_all(self, tasks: Sequence[Task]) -> List[TaskResult]:
        """Run every task. Results come back in task order."""
        if self.threads == 1 or len(tasks) <= 1:
            return [run_task(task) for task in tasks]
        return self._run_batched(tasks, MAX_TASKS_PER_BATCH)

    def _run_batched(self, tasks: Sequence[Task], batch_size: int) -> List[TaskResult]:
        results: List[TaskResult] = []
        with concurrent.futures.ProcessPoolExecutor(max_workers=self.threads) as executor:
            for start in range(0, len(tasks), batch_size):
                batch = tasks[start:start + batch_size]
                results.extend(executor.map(run_task, batch))
                self._vlog(f'{len(results)}/{len(tasks)} tasks done')
        return results
