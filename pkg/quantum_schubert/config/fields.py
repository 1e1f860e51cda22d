import textwrap

import quantum_schubert.config.validation as validations


class ConfigField:
    def __init__(
            self,
            typ,
            info,
            default=None,
            validation_fn=None
    ):
        self.typ = typ
        self.info = info
        self.default = default
        self.validation_fn = validation_fn


# Validation_fn validates the field in the finalized config, not user input.
FIELDS = {
    "max_n": ConfigField(
        typ=int,
        info="Largest n of the Grassmannians Gr(r,n) swept by the verification suites",
        default=8,
        validation_fn=validations.validate_max_n
    ),
    "max_rank": ConfigField(
        typ=int,
        info="Largest rank of the root systems swept by the roots suite",
        default=8,
        validation_fn=validations.validate_rank
    ),
    "rings_max_n": ConfigField(
        typ=int,
        info=textwrap.dedent("""Largest n for the exhaustive ring checks: commutativity, associativity and
                                Littlewood-Richardson agreement of cup products, classical limit and
                                expansion-order independence of quantum products"""),
        default=6,
        validation_fn=validations.validate_max_n
    ),
    "assoc_max_n": ConfigField(
        typ=int,
        info="Largest n for the sampled associativity check of the quantum product",
        default=7,
        validation_fn=validations.validate_max_n
    ),
    "assoc_samples": ConfigField(
        typ=int,
        info="Number of random triples per Grassmannian in the quantum associativity check",
        default=200,
        validation_fn=validations.is_positive_int
    ),
    "transform_max_n": ConfigField(
        typ=int,
        info="Largest n for the transformation-formula and shift-operator sweeps",
        default=6,
        validation_fn=validations.validate_max_n
    ),
    "transform_max_degree": ConfigField(
        typ=int,
        info="Largest q-degree of the 3-point invariants checked by the transform suite",
        default=3,
        validation_fn=validations.is_nonnegative_int
    ),
    "pieri_shift_max_n": ConfigField(
        typ=int,
        info="Largest n for the check that quantum Pieri terms shift down to q-degree 0",
        default=8,
        validation_fn=validations.validate_max_n
    ),
    "symmetry_max_n": ConfigField(
        typ=int,
        info="Largest n for the exhaustive symmetry check of 3-point invariants",
        default=5,
        validation_fn=validations.validate_max_n
    ),
    "codim_max_rank": ConfigField(
        typ=int,
        info="Largest rank for sweeps over all parabolics and cosets (codimension shifts, T_c exponents)",
        default=4,
        validation_fn=validations.validate_rank
    ),
    "search_max_states": ConfigField(
        typ=int,
        info="Bound on the equal-degree states visited when a reduction needs more than one step",
        default=2000,
        validation_fn=validations.is_positive_int
    ),
    "seed": ConfigField(
        typ=int,
        info="Seed of the random sampling in the associativity and dimension-condition checks",
        default=0,
        validation_fn=validations.is_nonnegative_int
    ),
    "threads": ConfigField(
        typ=int,
        info="Worker processes for the sweeps. Defaults to $QSC_THREADS, or the CPU count",
        default=None,  # Filled in from the environment
        validation_fn=validations.is_positive_int
    ),
    "verbose": ConfigField(
        typ=bool,
        info="Log progress of the verification suites to stderr",
        default=False,
        validation_fn=validations.is_bool
    ),
}
