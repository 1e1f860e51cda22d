from .schubert_index import (
    GrContext,
    SchubertIndex,
    ShiftResult,
    codim,
    dual,
    from_partition,
    shift,
    shift_count,
    special_index,
    to_partition,
)
from .classical_ring import CohClass, classical_pieri, cup, integral, lr_coefficient
from .quantum_ring import GWInstance, QClass, dimension_check, gw3, qmul, qmul_basis, qpieri
from .center_transform import (
    Reduction,
    ReductionStatus,
    ShiftVector,
    T,
    T_pow,
    reduce_to_classical,
    spoint_invariant,
    transform_instance,
)
from .fulton_woodward import LowestDegree, lowest_term, min_q_degree, verify_fw
