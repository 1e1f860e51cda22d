from .config import RunConfig, humanize_float, validate_config_file_dict
from .fields import FIELDS
