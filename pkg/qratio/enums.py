__all__ = ["PositivityTag", "Criterion", "Direction", "Family", "Conjecture", "ConeSign"]

from enum import StrEnum


class PositivityTag(StrEnum):
    AllPositive = "AllPositive"
    EvenPositive = "EvenPositive"
    OddPositive = "OddPositive"
    Other = "Other"


class Criterion(StrEnum):
    HutchinsonH = "HutchinsonH"
    NewtonN = "NewtonN"
    ThmA = "ThmA"
    ThmB = "ThmB"
    ThmD = "ThmD"
    ThmE = "ThmE"
    ThmF = "ThmF"
    Thm1 = "Thm1"
    Cor1 = "Cor1"
    Cor2 = "Cor2"
    Thm3 = "Thm3"
    Thm4 = "Thm4"
    PropAnya = "PropAnya"
    CorAnya = "CorAnya"


class Direction(StrEnum):
    UpperBound = "UpperBound"
    LowerBound = "LowerBound"
    RealRootedness = "RealRootedness"
    Positivity = "Positivity"
    NecessaryFailed = "NecessaryFailed"
    ExactCount = "ExactCount"
    QSumBound = "QSumBound"


class Family(StrEnum):
    SharpThm2 = "sharp-thm2"
    SharpPr1 = "sharp-pr1"
    CounterexampleQ = "counterexample-q"
    HutchinsonExtremal = "hutchinson-extremal"
    Stratum = "stratum"


class Conjecture(StrEnum):
    TropicalC1 = "TropicalC1"
    NewtonWeightedC2 = "NewtonWeightedC2"
    LogConcaveC3 = "LogConcaveC3"

    @classmethod
    def from_id(cls, conjecture_id: int) -> "Conjecture":
        if conjecture_id not in (1, 2, 3):
            raise ValueError(f"Conjecture id must be 1, 2, or 3, not {conjecture_id}.")
        return (cls.TropicalC1, cls.NewtonWeightedC2, cls.LogConcaveC3)[conjecture_id - 1]


class ConeSign(StrEnum):
    Less = "<"
    Greater = ">"
    Free = "*"
