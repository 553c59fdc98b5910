"""
Configuration models for blockbetti using Pydantic
"""

import os
from enum import Enum
from typing import List, Mapping, Optional

from pydantic import BaseModel, Field, PositiveInt, field_validator
from sympy import isprime

ENV_PREFIX = "BLOCKBETTI_"


class OutputFormat(str, Enum):
    """Formats a command can print or a suite can write"""
    JSON = "json"
    JSONL = "jsonl"
    MARKDOWN = "markdown"
    TEXT = "text"


class FieldConfig(BaseModel):
    """Coefficient field: F_p for a prime p, or 0 for the rationals"""
    p: int = 2
    confirm_p: Optional[int] = 32003

    @field_validator("p")
    @classmethod
    def _check_p(cls, value: int) -> int:
        if value != 0 and not isprime(value):
            raise ValueError(f"characteristic must be 0 or a prime, got {value}")
        return value

    @field_validator("confirm_p")
    @classmethod
    def _check_confirm_p(cls, value: Optional[int]) -> Optional[int]:
        if value is not None and value != 0 and not isprime(value):
            raise ValueError(f"confirmation characteristic must be 0 or a prime, got {value}")
        return value


class Budgets(BaseModel):
    """Size guards checked before any exact computation starts"""
    max_monomial_variables: PositiveInt = 20
    max_lattice_elements: PositiveInt = 50_000
    max_lattice_generators: PositiveInt = 26
    max_taylor_generators: PositiveInt = 12
    max_hochster_variables: PositiveInt = 20
    max_buchberger_variables: PositiveInt = 16
    max_full_binomial_variables: PositiveInt = 12
    max_window_binomial_variables: PositiveInt = 16
    max_matrix_nonzeros: PositiveInt = 2_000_000
    max_complex_faces: PositiveInt = 2_000_000
    max_order_complex_elements: PositiveInt = 64


class RunSettings(BaseModel):
    """Runtime settings for suite execution"""
    seed: int = 0
    workers: PositiveInt = 1
    max_items: Optional[PositiveInt] = None
    include_timing: bool = False


class OutputConfig(BaseModel):
    """Configuration for report output"""
    formats: List[OutputFormat] = Field(default_factory=lambda: [OutputFormat.JSONL])
    directory: str = "./results"
    emit_dot: Optional[str] = None


class Config(BaseModel):
    """Main blockbetti configuration"""
    coefficients: FieldConfig = Field(default_factory=FieldConfig)
    budgets: Budgets = Field(default_factory=Budgets)
    settings: RunSettings = Field(default_factory=RunSettings)
    output: OutputConfig = Field(default_factory=OutputConfig)

    @property
    def p(self) -> int:
        return self.coefficients.p

    @classmethod
    def from_yaml(cls, path: str) -> "Config":
        """Load config from YAML file"""
        import yaml
        with open(path, "r", encoding="utf-8") as f:
            data = yaml.safe_load(f) or {}

        # Handle nested 'blockbetti' key if present
        if "blockbetti" in data:
            data = data["blockbetti"]

        return cls(**data)

    def to_yaml(self, path: str) -> None:
        """Save config to YAML file"""
        import yaml
        with open(path, "w", encoding="utf-8") as f:
            yaml.dump({"blockbetti": self.model_dump(mode="json")}, f, default_flow_style=False)

    def with_env_overrides(self, environ: Optional[Mapping[str, str]] = None) -> "Config":
        """
        Return a copy with BLOCKBETTI_* environment variables applied.

        Recognised: BLOCKBETTI_P, BLOCKBETTI_CONFIRM_P, BLOCKBETTI_WORKERS,
        BLOCKBETTI_SEED and BLOCKBETTI_BUDGET_<FIELD> for every budget field.
        """
        env = os.environ if environ is None else environ
        data = self.model_dump()

        if f"{ENV_PREFIX}P" in env:
            data["coefficients"]["p"] = int(env[f"{ENV_PREFIX}P"])
        if f"{ENV_PREFIX}CONFIRM_P" in env:
            raw = env[f"{ENV_PREFIX}CONFIRM_P"]
            data["coefficients"]["confirm_p"] = int(raw) if raw else None
        if f"{ENV_PREFIX}WORKERS" in env:
            data["settings"]["workers"] = int(env[f"{ENV_PREFIX}WORKERS"])
        if f"{ENV_PREFIX}SEED" in env:
            data["settings"]["seed"] = int(env[f"{ENV_PREFIX}SEED"])

        for name in Budgets.model_fields:
            key = f"{ENV_PREFIX}BUDGET_{name.upper()}"
            if key in env:
                data["budgets"][name] = int(env[key])

        return Config.model_validate(data)

    def with_p(self, p: int) -> "Config":
        """Copy of this config computing over characteristic ``p``"""
        data = self.model_dump()
        data["coefficients"]["p"] = p
        return Config.model_validate(data)
