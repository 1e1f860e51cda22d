from typing import Iterable, Tuple

from quantum_schubert.grassmannian.classical_ring import CohClass
from quantum_schubert.grassmannian.quantum_ring import QClass
from quantum_schubert.grassmannian.schubert_index import SchubertIndex, to_partition

_SUPERSCRIPTS = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")


def format_index(index: SchubertIndex) -> str:
    """sigma[a_1,a_2,...] with zero parts left out"""
    return "σ[" + ",".join(str(p) for p in to_partition(index) if p) + "]"


def format_q(d: int) -> str:
    if d == 0:
        return ""
    if d == 1:
        return "q"
    return "q" + str(d).translate(_SUPERSCRIPTS)


def _format_terms(terms: Iterable[Tuple[int, SchubertIndex, int]]) -> str:
    out = ""
    for d, index, coeff in terms:
        monomial = "·".join(p for p in (format_q(d), format_index(index)) if p)
        magnitude = abs(coeff)
        body = monomial if magnitude == 1 else f"{magnitude}·{monomial}"
        if not out:
            out = body if coeff > 0 else f"-{body}"
        else:
            out += f" + {body}" if coeff > 0 else f" - {body}"
    return out or "0"


def format_qclass(x: QClass) -> str:
    return _format_terms(x.terms)


def format_cohclass(x: CohClass) -> str:
    return _format_terms((0, index, coeff) for index, coeff in x.terms)
