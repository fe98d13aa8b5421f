from typing import Optional

from pydantic import BaseModel, field_validator, model_validator

import constants.constants as constants


class RunConfig(BaseModel):
    """One validated CLI invocation. Nothing is computed before this passes."""

    command: str
    named: Optional[str] = None
    family: Optional[str] = None
    dim: Optional[int] = None
    J: int = 0
    degree: Optional[int] = None
    suite: str = constants.ALL_SUITES
    format: str = "json"
    out: Optional[str] = None
    jobs: int = constants.DEFAULT_JOBS
    max_dim: int = constants.APPENDIX_MAX_DIM
    all_named: bool = False
    operator: Optional[int] = None
    config: str = constants.VERIFICATION_CONFIG_PATH
    # BGGC_DEGREE; used when --degree is absent
    default_degree: Optional[int] = None

    @field_validator("command")
    @classmethod
    def known_command(cls, value):
        if value not in ("derive", "verify", "matrix"):
            raise ValueError(f"unknown command {value!r}")
        return value

    @field_validator("named")
    @classmethod
    def known_named(cls, value):
        if value is not None and value not in constants.NAMED_DIAGRAMS:
            raise ValueError(f"unknown named diagram {value!r}")
        return value

    @field_validator("family")
    @classmethod
    def known_family(cls, value):
        if value is not None and value not in constants.FAMILIES:
            raise ValueError(f"unknown family {value!r}")
        return value

    @field_validator("suite")
    @classmethod
    def known_suite(cls, value):
        if value not in constants.SUITES + [constants.ALL_SUITES]:
            raise ValueError(f"unknown suite {value!r}")
        return value

    @field_validator("format")
    @classmethod
    def known_format(cls, value):
        if value not in constants.OUTPUT_FORMATS:
            raise ValueError(f"unknown format {value!r}")
        return value

    @field_validator("degree", "default_degree")
    @classmethod
    def non_negative_degree(cls, value):
        if value is not None and value < 0:
            raise ValueError("degree cap must be >= 0")
        return value

    @field_validator("jobs", "max_dim")
    @classmethod
    def at_least_one(cls, value):
        if value < 1:
            raise ValueError("must be >= 1")
        return value

    @model_validator(mode="after")
    def consistent(self):
        if self.command in ("derive", "matrix") and (self.named is None) == (self.family is None):
            raise ValueError(f"{self.command} needs exactly one of --named or --family")
        if self.named is not None:
            n = constants.NAMED_DIAGRAMS[self.named]["n"]
            if self.dim is not None and self.dim != n:
                raise ValueError(f"{self.named} lives in {n} dimensions, not {self.dim}")
            self.dim = n
        if self.family == "derham" and self.dim not in (2, 3):
            raise ValueError("proxy commands need --dim 2 or 3")
        if self.family == "altij" and (self.dim is None or not 1 <= self.dim <= constants.MAX_FAMILY_DIM):
            raise ValueError(f"the Alt family needs 1 <= --dim <= {constants.MAX_FAMILY_DIM}")
        if self.family is not None and not 0 <= self.J < self.dim:
            raise ValueError(f"need 0 <= J < {self.dim}")
        if self.command == "matrix" and (self.operator is None or self.operator < 0):
            raise ValueError("matrix needs --operator >= 0")
        if self.command == "matrix" and self.format not in ("json", "csv"):
            raise ValueError("matrix writes json or csv")
        if self.format == "xlsx" and not self.out:
            raise ValueError("xlsx output needs --out")
        return self

    @property
    def degree_cap(self) -> int:
        if self.degree is not None:
            return self.degree
        return constants.default_degree(self.named, self.dim or 3, override=self.default_degree)
