"""Enums, exit codes, export headers, and other constants."""

from enum import Enum, IntEnum


class TargetKind(str, Enum):
    D = "d"
    D0 = "d0"
    MNC = "mnc"


class Verdict(str, Enum):
    PASS = "PASS"
    FAIL = "FAIL"


class ExitCode(IntEnum):
    OK = 0
    USAGE = 2
    VERIFY_FAIL = 3


TARGET_DISPLAY_NAMES: dict[str, str] = {
    TargetKind.D: "Sylow q-subgroup count D(H,x)",
    TargetKind.D0: "q-coprime stratum D_0(H,x)",
    TargetKind.MNC: "Maximally non-cyclic count",
}

CENSUS_CSV_HEADER: list[str] = ["x", "q", "k", "signature", "count"]
VERIFY_CSV_HEADER: list[str] = [
    "target", "q", "alpha", "x", "empirical", "predicted", "ratio",
]

# Decimal strings in JSON exports
SIGNIFICANT_DIGITS = 15

# Verdicts look at the trend over this many trailing checkpoints
TREND_WINDOW = 3

# Smallest x at which the main terms are evaluated (log log x > 0)
MIN_PREDICT_X = 16
