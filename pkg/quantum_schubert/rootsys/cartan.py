import re
from typing import Optional, Tuple

import numpy as np

from quantum_schubert.errors import InputError

SERIES = ("A", "B", "C", "D", "E", "F", "G")

# Known |R| per type, used as a closure sanity check
_EXCEPTIONAL_ROOT_COUNTS = {("E", 6): 72, ("E", 7): 126, ("E", 8): 240, ("F", 4): 48, ("G", 2): 12}

_LABEL = re.compile(r"^\s*([A-Ga-g])\s*(\d+)\s*$")


def validate_type(series: str, rank: int):
    if series not in SERIES:
        raise InputError(f"Unknown Cartan type '{series}'. Expected one of {', '.join(SERIES)}")
    if not isinstance(rank, int) or rank < 1:
        raise InputError(f"Rank must be a positive integer, got {rank!r}")
    valid = {
        "A": rank >= 1,
        "B": rank >= 2,
        "C": rank >= 2,
        "D": rank >= 4,
        "E": rank in (6, 7, 8),
        "F": rank == 4,
        "G": rank == 2,
    }[series]
    if not valid:
        raise InputError(f"There is no root system of type {series}{rank}")


def parse_type(label: str, rank: Optional[int] = None) -> Tuple[str, int]:
    """'E6' -> ('E', 6). A bare series letter takes its rank from the rank argument."""
    m = _LABEL.match(label)
    if m is not None:
        series, label_rank = m.group(1).upper(), int(m.group(2))
        if rank is not None and rank != label_rank:
            raise InputError(f"Type label {label} disagrees with rank {rank}")
        rank = label_rank
    else:
        series = label.strip().upper()
        if rank is None:
            raise InputError(f"Cannot tell the rank of root system '{label}'")
    validate_type(series, rank)
    return series, rank


def expected_root_count(series: str, rank: int) -> int:
    if series == "A":
        return rank * (rank + 1)
    if series in ("B", "C"):
        return 2 * rank * rank
    if series == "D":
        return 2 * rank * (rank - 1)
    return _EXCEPTIONAL_ROOT_COUNTS[(series, rank)]


def _bond(a: np.ndarray, i: int, j: int, a_ij: int = -1, a_ji: int = -1):
    a[i, j] = a_ij
    a[j, i] = a_ji


def cartan_matrix(series: str, rank: int) -> np.ndarray:
    """Cartan matrix with entries a[i, j] = <alpha_i, alpha_j^vee>, nodes in Bourbaki order (0-based)."""
    validate_type(series, rank)
    a = 2 * np.eye(rank, dtype=np.int64)
    if series == "A":
        for i in range(rank - 1):
            _bond(a, i, i + 1)
    elif series in ("B", "C"):
        for i in range(rank - 2):
            _bond(a, i, i + 1)
        # The last node is short in B and long in C
        if series == "B":
            _bond(a, rank - 2, rank - 1, -2, -1)
        else:
            _bond(a, rank - 2, rank - 1, -1, -2)
    elif series == "D":
        for i in range(rank - 2):
            _bond(a, i, i + 1)
        _bond(a, rank - 3, rank - 1)
    elif series == "E":
        for i, j in ((0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (1, 3)):
            if j < rank:
                _bond(a, i, j)
    elif series == "F":
        _bond(a, 0, 1)
        _bond(a, 1, 2, -2, -1)
        _bond(a, 2, 3)
    elif series == "G":
        _bond(a, 0, 1, -1, -3)
    return a
