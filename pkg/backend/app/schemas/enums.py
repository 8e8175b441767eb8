# Enums for WittLab
from enum import Enum


class OutputFormat(str, Enum):
    """Output format of CLI commands"""

    TABLE = "table"
    JSON = "json"


class CaseStatus(str, Enum):
    """Status of a verification case"""

    PASS = "PASS"
    FAIL = "FAIL"
    UNCERTIFIED = "UNCERTIFIED"
    OBSERVED = "OBSERVED"  # empirical, not asserted


class Suite(str, Enum):
    """Verification suite"""

    WITT_RING = "witt-ring"
    FMD_HOM = "fmd-hom"
    THM_WITT = "thm-witt"
    COR_WITT2 = "cor-witt2"
    ANBASIS = "anbasis"
    BLPROD = "blprod"
    DPROD = "dprod"
    ALL = "all"


__all__ = [
    "OutputFormat",
    "CaseStatus",
    "Suite",
]
