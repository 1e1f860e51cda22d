import dataclasses
from typing import Any, Dict, Optional

from quantum_schubert.config.fields import FIELDS
from quantum_schubert.errors import ConfigValidationError
import quantum_schubert.config.defaults as defaults


def humanize_float(num): return "{0:,.2f}".format(num)


def validate_config_file_dict(config_file_dict: Dict[str, Any]):
    for field_name, field_val in config_file_dict.items():
        if field_name not in FIELDS:
            raise ConfigValidationError(f"Field '{field_name}' from config file isn't a recognized field name")
        if not isinstance(field_val, FIELDS[field_name].typ):
            raise ConfigValidationError(f"Field '{field_name}' from config file should be a "
                                        f"{FIELDS[field_name].typ.__name__}, got {field_val!r}")

        is_valid = FIELDS[field_name].validation_fn(field_name, field_val)
        if not is_valid:
            raise ConfigValidationError(f"Config file does not pass validation due "
                                        f"to field '{field_name}' having invalid value {field_val}")


@dataclasses.dataclass
class RunConfig:
    max_n: Optional[int] = None
    max_rank: Optional[int] = None
    rings_max_n: Optional[int] = None
    assoc_max_n: Optional[int] = None
    assoc_samples: Optional[int] = None
    transform_max_n: Optional[int] = None
    transform_max_degree: Optional[int] = None
    pieri_shift_max_n: Optional[int] = None
    symmetry_max_n: Optional[int] = None
    codim_max_rank: Optional[int] = None
    search_max_states: Optional[int] = None
    seed: Optional[int] = None
    threads: Optional[int] = None
    verbose: Optional[bool] = None

    @property
    def field_names(self):
        return list(self.__dict__.keys())

    def fill_in_defaults(self):
        # Static defaults defined in FIELDS
        for field_name in self.field_names:
            default_val = FIELDS[field_name].default
            if getattr(self, field_name) is None:
                setattr(self, field_name, default_val)

        # Defaults that depend on the environment
        if self.threads is None:
            self.threads = defaults.get_default_threads()

    def validate(self):
        # Field-by-field validation
        for field_name in self.field_names:
            validation_fn = FIELDS[field_name].validation_fn
            is_valid = validation_fn(field_name, getattr(self, field_name))
            if not is_valid:
                raise ConfigValidationError(f"Failed validation on field {field_name}. Value "
                                            f"received was: {getattr(self, field_name)}")

    def bound(self, field_name: str) -> int:
        """A per-suite bound on n, capped by the global max_n"""
        return min(getattr(self, field_name), self.max_n)

    def to_json(self) -> Dict[str, Any]:
        return dataclasses.asdict(self)
