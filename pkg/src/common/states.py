# src/common/states.py
from enum import Enum


class CheckStatus(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    NUMERIC_PASS = "numeric-pass"  # 数值残差低于容差，不是精确证明


class CommandName(str, Enum):
    LEFSCHETZ = "lefschetz"
    STAR = "star"
    MOD24 = "mod24"
    RIGIDITY = "rigidity"
    PETRIE_BOUND = "petrie-bound"
    JACOBI = "jacobi"
    RECONSTRUCT = "reconstruct"
    PROPERTIES = "properties"
    GENERATE = "generate"
    ALL = "all"


class SeriesId(str, Enum):
    AROOF = "aroof"
    L = "L"


class BundleKind(str, Enum):
    COMPLEX = "complex"
    REAL_ORIENTED_PAIRED = "real-oriented-paired"
    SPIN_PAIRED = "spin-paired"

    @property
    def is_paired(self) -> bool:
        return self is not BundleKind.COMPLEX


class FixtureFamily(str, Enum):
    LINEAR = "linear"
    SYNTHETIC_STAR = "synthetic-star"
    PETRIE_EDGE = "petrie-edge"
