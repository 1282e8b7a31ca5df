"""Exact workbench for simple supercuspidals of split odd and even orthogonal
groups: local factors, their L-parameters and the Iwahori-level group theory."""

from .catalog import GLSSCParams, SOEvenParams, SOOddParams, enumerate_ssc
from .characters import LocalField, TameCharacter
from .fdc import solve_constraints
from .gamma import gamma_ak_raw, gamma_lift_quotient
from .laurent import LaurentRat
from .llc import llc

__all__ = [
    "GLSSCParams", "SOEvenParams", "SOOddParams", "enumerate_ssc",
    "LocalField", "TameCharacter", "solve_constraints",
    "gamma_ak_raw", "gamma_lift_quotient", "LaurentRat", "llc",
]
__version__ = "0.1.0"
