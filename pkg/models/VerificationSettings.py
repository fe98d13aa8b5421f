import logging
import os
from typing import List, Optional

import yaml
from pydantic import BaseModel, Field, field_validator

import constants.constants as constants


class SuiteSettings(BaseModel):
    enabled: bool = True
    severity: str = "error"

    @field_validator("severity")
    @classmethod
    def known_severity(cls, value):
        if value not in ("error", "warning"):
            raise ValueError(f"severity must be 'error' or 'warning', not {value!r}")
        return value


class Appendix1Settings(SuiteSettings):
    max_dim: int = constants.APPENDIX_MAX_DIM
    sident_max_dim: int = constants.SIDENT_MAX_DIM


class HomotopySettings(SuiteSettings):
    max_n: int = 4
    max_r: int = 5


class FamilyCase(BaseModel):
    n: int
    J: int
    degree: int


class ExtraFamilySettings(BaseModel):
    """Larger Alt-family cases, off by default."""

    enabled: bool = False
    cases: List[FamilyCase] = []


class DimensionSettings(SuiteSettings):
    golden_path: str = constants.GOLDEN_PATH
    family_dims: List[int] = [2, 3, 4]
    family_degree: int = 5
    family_extra: ExtraFamilySettings = Field(default_factory=ExtraFamilySettings)
    certificate: bool = True
    negative_cases: bool = True
    operator_identities: bool = True
    identity_degree: int = 4


class RunSelection(BaseModel):
    named: List[str] = []
    degree: Optional[int] = None

    @field_validator("named")
    @classmethod
    def known_names(cls, value):
        unknown = [name for name in value if name not in constants.NAMED_DIAGRAMS]
        if unknown:
            raise ValueError(f"unknown named diagrams {unknown}")
        return value


class VerificationSettings(BaseModel):
    """The `verification_suites` and `defaults` blocks of verification_config.yaml."""

    appendix1: Appendix1Settings = Field(default_factory=Appendix1Settings)
    homotopy: HomotopySettings = Field(default_factory=HomotopySettings)
    lemma8: SuiteSettings = Field(default_factory=SuiteSettings)
    projection: SuiteSettings = Field(default_factory=SuiteSettings)
    exactness: SuiteSettings = Field(default_factory=SuiteSettings)
    dimension: DimensionSettings = Field(default_factory=DimensionSettings)
    defaults: RunSelection = Field(default_factory=RunSelection)
    source: Optional[str] = None

    def suite(self, name: str) -> SuiteSettings:
        return getattr(self, name)

    def enabled_suites(self) -> list:
        return [s for s in constants.SUITES if self.suite(s).enabled]

    def golden_file(self) -> str:
        """The golden path, resolved against the config file's folder when not found as given."""
        path = self.dimension.golden_path
        if os.path.isabs(path) or os.path.exists(path) or not self.source:
            return path
        return os.path.join(os.path.dirname(os.path.abspath(self.source)), path)

    @classmethod
    def load(cls, path):
        """Read the yaml file; a missing or unreadable file gives all defaults."""
        raw = {}
        try:
            if path and os.path.exists(path):
                with open(path, 'r', encoding='utf-8') as f:
                    raw = yaml.safe_load(f) or {}
        except (OSError, yaml.YAMLError) as e:
            logging.warning(f"Could not load config '{path}': {e}")
        suites = {k: v for k, v in (raw.get("verification_suites") or {}).items() if v is not None}
        defaults = {k: v for k, v in (raw.get("defaults") or {}).items() if v is not None}
        return cls(**suites, defaults=defaults, source=path)
