import pytest
import yaml
from pydantic import ValidationError

from blockbetti.core.config import Budgets, Config, FieldConfig, OutputFormat
from blockbetti.core.errors import (
    BlockBettiError,
    BudgetExceeded,
    GraphParseError,
    UnknownNameError,
    VerificationFailure,
    check_budget,
)


def test_defaults():
    config = Config()
    assert config.p == 2
    assert config.coefficients.confirm_p == 32003
    assert config.settings.workers == 1
    assert config.output.formats == [OutputFormat.JSONL]
    assert config.budgets.max_full_binomial_variables == 12


@pytest.mark.parametrize("p", [0, 2, 3, 32003])
def test_valid_characteristics(p):
    assert FieldConfig(p=p).p == p


@pytest.mark.parametrize("p", [1, 4, 9, -3])
def test_invalid_characteristics(p):
    with pytest.raises(ValidationError):
        FieldConfig(p=p)


def test_budgets_must_be_positive():
    with pytest.raises(ValidationError):
        Budgets(max_matrix_nonzeros=0)


def test_yaml_round_trip(tmp_path):
    path = tmp_path / "config.yaml"
    config = Config().with_p(5)
    config.to_yaml(str(path))
    data = yaml.safe_load(path.read_text())
    assert data["blockbetti"]["coefficients"]["p"] == 5
    assert Config.from_yaml(str(path)).p == 5


def test_yaml_without_nested_key(tmp_path):
    path = tmp_path / "config.yaml"
    path.write_text("budgets:\n  max_taylor_generators: 5\nsettings:\n  workers: 3\n")
    config = Config.from_yaml(str(path))
    assert config.budgets.max_taylor_generators == 5
    assert config.settings.workers == 3


def test_env_overrides():
    env = {
        "BLOCKBETTI_P": "3",
        "BLOCKBETTI_CONFIRM_P": "",
        "BLOCKBETTI_WORKERS": "4",
        "BLOCKBETTI_SEED": "17",
        "BLOCKBETTI_BUDGET_MAX_TAYLOR_GENERATORS": "9",
    }
    config = Config().with_env_overrides(env)
    assert config.p == 3
    assert config.coefficients.confirm_p is None
    assert config.settings.workers == 4
    assert config.settings.seed == 17
    assert config.budgets.max_taylor_generators == 9


def test_env_overrides_are_validated():
    with pytest.raises(ValidationError):
        Config().with_env_overrides({"BLOCKBETTI_P": "6"})


def test_with_p_leaves_original_untouched():
    config = Config()
    assert config.with_p(7).p == 7
    assert config.p == 2


def test_error_exit_codes():
    assert BlockBettiError.exit_code == 2
    assert GraphParseError("bad", 3).exit_code == 2
    assert BudgetExceeded("x", 2, 1).exit_code == 3
    assert VerificationFailure("mismatch").exit_code == 1


def test_budget_exceeded_payload():
    with pytest.raises(BudgetExceeded) as info:
        check_budget("lattice_elements", 10, 5, "K6")
    assert info.value.to_dict() == {
        "limit": "lattice_elements",
        "value": 10,
        "maximum": 5,
        "detail": "K6",
    }
    assert "10 > 5" in str(info.value)
    check_budget("lattice_elements", 5, 5)


def test_unknown_name_lists_alternatives():
    error = UnknownNameError("engine", "foo", ["taylor", "lattice"])
    assert str(error) == "Unknown engine: foo. Available: lattice, taylor"
    assert isinstance(error, KeyError)
