import os

from quantum_schubert.errors import ConfigValidationError

THREADS_ENV_VAR = "QSC_THREADS"


def get_default_threads() -> int:
    """QSC_THREADS when set, otherwise the machine's CPU count"""
    raw = os.environ.get(THREADS_ENV_VAR)
    if raw is None or raw.strip() == "":
        return os.cpu_count() or 1
    try:
        threads = int(raw)
    except ValueError:
        raise ConfigValidationError(f"{THREADS_ENV_VAR} must be a positive integer, got '{raw}'")
    if threads <= 0:
        raise ConfigValidationError(f"{THREADS_ENV_VAR} must be a positive integer, got '{raw}'")
    return threads
