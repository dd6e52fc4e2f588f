# cli/schemas.py
from __future__ import annotations

from enum import Enum
from pathlib import Path
from typing import List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

# desk-scale limits for the tensor oracle
ORACLE_MAX_GENUS = 4
ORACLE_MAX_N = 5


class OutputFormat(str, Enum):
    JSON = "json"
    CSV = "csv"
    TEXT = "text"


class IntRange(BaseModel):
    lo: int
    hi: int

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def _ordered(self) -> "IntRange":
        if self.lo > self.hi:
            raise ValueError(f"empty range {self.lo}..{self.hi}")
        return self

    @classmethod
    def parse(cls, raw: str) -> "IntRange":
        """
        "3" or "0..2" (inclusive).
        """
        text = raw.strip()
        if ".." in text:
            lo, hi = text.split("..", 1)
            return cls(lo=int(lo), hi=int(hi))
        return cls(lo=int(text), hi=int(text))

    def values(self) -> List[int]:
        return list(range(self.lo, self.hi + 1))


class RunConfig(BaseModel):
    command: Literal["report", "classify", "table", "oracle-check", "selftest"]
    g: IntRange = IntRange(lo=0, hi=0)
    k: IntRange = IntRange(lo=1, hi=1)
    n: IntRange = IntRange(lo=2, hi=2)
    N: IntRange = IntRange(lo=0, hi=0)
    # second spec of `classify`
    g2: Optional[int] = None
    k2: Optional[int] = None
    n2: Optional[int] = None
    N2: Optional[int] = None
    format: OutputFormat = OutputFormat.JSON
    out: Optional[Path] = None
    oracle: bool = False
    seed: int = 0
    max_work: int = Field(default=10_000_000, ge=1)

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def _limits(self) -> "RunConfig":
        if self.command in ("report", "classify", "oracle-check"):
            for name in ("g", "k", "n", "N"):
                r = getattr(self, name)
                if r.lo != r.hi:
                    raise ValueError(f"--{name} takes a single value for {self.command}")
        if self.command == "classify" and None in (self.g2, self.k2, self.n2):
            raise ValueError("classify needs --g2, --k2 and --n2")
        if self.command == "oracle-check":
            if not (0 <= self.g.lo <= 3 and 1 <= self.n.lo <= 5):
                raise ValueError("oracle-check runs for 0 <= g <= 3 and 1 <= n <= 5")
        if self.oracle and (self.g.hi > ORACLE_MAX_GENUS or self.n.hi > ORACLE_MAX_N):
            raise ValueError(f"--oracle is limited to g <= {ORACLE_MAX_GENUS}, n <= {ORACLE_MAX_N}")
        return self
