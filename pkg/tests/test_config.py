import pytest

from quantum_schubert.config import FIELDS, RunConfig, humanize_float, validate_config_file_dict
from quantum_schubert.config.defaults import THREADS_ENV_VAR, get_default_threads
from quantum_schubert.errors import ConfigValidationError


def test_default_config(monkeypatch):
    monkeypatch.setenv(THREADS_ENV_VAR, "3")
    cfg = RunConfig()
    cfg.fill_in_defaults()
    cfg.validate()
    assert cfg.max_n == 8
    assert cfg.threads == 3
    assert cfg.verbose is False
    assert set(cfg.to_json()) == set(FIELDS)


def test_every_field_is_documented():
    assert set(RunConfig().field_names) == set(FIELDS)
    for field in FIELDS.values():
        assert field.info


def test_explicit_values_win_over_defaults():
    cfg = RunConfig(max_n=5, threads=1, seed=7)
    cfg.fill_in_defaults()
    assert (cfg.max_n, cfg.threads, cfg.seed) == (5, 1, 7)


def test_bound_is_capped_by_max_n():
    cfg = RunConfig(max_n=5, threads=1)
    cfg.fill_in_defaults()
    assert cfg.bound("rings_max_n") == 5
    assert cfg.bound("symmetry_max_n") == 5
    cfg.max_n = 4
    assert cfg.bound("symmetry_max_n") == 4


def test_config_missing_defaults():
    cfg = RunConfig()
    with pytest.raises(ConfigValidationError):
        cfg.validate()


@pytest.mark.parametrize("field_name, value", [
    ("max_n", 1),
    ("max_rank", 9),
    ("assoc_samples", 0),
    ("seed", -1),
    ("threads", True),
])
def test_invalid_values(field_name, value):
    cfg = RunConfig(threads=1)
    cfg.fill_in_defaults()
    setattr(cfg, field_name, value)
    with pytest.raises(ConfigValidationError):
        cfg.validate()


def test_threads_env_var(monkeypatch):
    monkeypatch.setenv(THREADS_ENV_VAR, "  ")
    assert get_default_threads() >= 1
    monkeypatch.setenv(THREADS_ENV_VAR, "many")
    with pytest.raises(ConfigValidationError):
        get_default_threads()
    monkeypatch.setenv(THREADS_ENV_VAR, "0")
    with pytest.raises(ConfigValidationError):
        get_default_threads()


def test_config_file_dict_validation():
    validate_config_file_dict({"max_n": 6, "verbose": True})
    with pytest.raises(ConfigValidationError, match="recognized"):
        validate_config_file_dict({"region": "us-east-1"})
    with pytest.raises(ConfigValidationError, match="should be a int"):
        validate_config_file_dict({"max_n": "6"})
    with pytest.raises(ConfigValidationError):
        validate_config_file_dict({"max_rank": 12})


def test_humanize_float():
    assert humanize_float(1234.5) == "1,234.50"
