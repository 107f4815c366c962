"""
Enumerations and sentinels shared across the package
"""
from enum import Enum, IntEnum


class InstanceKind(Enum):
    """Document kinds understood by the file dialect"""
    BMATCH = "bmatch"
    DEMAND = "demand"
    COLORED = "colored"
    AUCTION = "auction"
    DECOMPOSITION = "decomposition"


class Algorithm(Enum):
    """Algorithm identifiers carried by reports"""
    LP = "lp"
    HBM = "hbm"
    HDM = "hdm"
    BOUNDED_COLOR = "bounded-color"
    AUCTION = "auction"
    ORACLE = "oracle"


class GeneratorFamily(Enum):
    """Tight integrality-gap families"""
    PG = "pg"
    TRUNCATED = "truncated"


class ExitCode(IntEnum):
    """Process exit codes of the command-line front end"""
    OK = 0
    INTERNAL = 1
    PARSE = 2
    VALIDATION = 3
    BUDGET = 4


# Capacity sentinel for c_e = infinity; validate() replaces it
UNBOUNDED = "inf"
