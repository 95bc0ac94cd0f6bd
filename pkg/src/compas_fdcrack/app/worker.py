import logging
import sys
import traceback
from concurrent.futures import ProcessPoolExecutor


__all__ = ["Worker", "WorkerPool"]


logger = logging.getLogger(__name__)


class Worker(object):
    """A task that runs a function and keeps its result or the error it raised.

    Parameters
    ----------
    fn : callable
        A module-level function, so that it can be sent to another process.
    args : tuple
    kwargs : dict
    """

    def __init__(self, fn, *args, **kwargs):
        self.fn = fn
        self.args = args
        self.kwargs = kwargs
        self.result = None
        self.error = None

    def run(self):
        """Execute the function, recording ``(exctype, value, traceback)`` on failure."""
        try:
            self.result = self.fn(*self.args, **self.kwargs)
        except Exception:
            exctype, value = sys.exc_info()[:2]
            self.error = (exctype, value, traceback.format_exc())
        return self


def _run(worker):
    return worker.run()


class WorkerPool(object):
    """Run independent tasks in worker processes, in-process for a single worker.

    Parameters
    ----------
    workers : int, optional
        Default is ``1``.
    """

    def __init__(self, workers=1):
        self.workers = max(1, int(workers))

    def __repr__(self):
        return "WorkerPool(workers={})".format(self.workers)

    def map(self, fn, tasks):
        """Apply a function to every task and return the results in task order.

        Raises
        ------
        Exception
            The first error raised by a task, after all tasks have finished.
        """
        workers = [Worker(fn, task) for task in tasks]
        if self.workers == 1 or len(workers) <= 1:
            done = [worker.run() for worker in workers]
        else:
            with ProcessPoolExecutor(max_workers=self.workers) as executor:
                done = list(executor.map(_run, workers))
        for worker in done:
            if worker.error is not None:
                exctype, value, trace = worker.error
                logger.debug("Task failed:\n%s", trace)
                raise value
        return [worker.result for worker in done]
