"""Certified interval arithmetic for checking claims about pi, e and friends."""

from .cinterval import CInterval
from .claims import CLAIM_IDS, Report, run_claim
from .expr import Verdict, VerdictKind, certify, evaluate, parse
from .mpreal import RInterval, const_e, const_pi

__all__ = [
    "CInterval", "RInterval", "const_pi", "const_e",
    "parse", "evaluate", "certify", "Verdict", "VerdictKind",
    "run_claim", "Report", "CLAIM_IDS",
]
__version__ = "0.1.0"
