name = "quantum_schubert"

from pathlib import Path
version_file = Path(__file__).parent/"VERSION"
__version__ = version_file.open('r').read().strip()

from .errors import (
    QSCError,
    InputError,
    ContextMismatchError,
    CoefficientOverflowError,
    InvariantViolationError,
    ConfigValidationError,
    NegativeDegreeError,
)
from .config import RunConfig
from .grassmannian import GrContext, SchubertIndex, CohClass, QClass, GWInstance, qmul, qmul_basis, gw3
from .rootsys import RootSystem, WeylElement, build
from .verify import VerificationRun
