"""Exact-arithmetic computations on cyclic-quotient surface resolutions and
their noncommutative deformations, with a verification suite that checks the
two sides against each other at truncated scale.

Everything is rational arithmetic: no floats, no tolerances.  The main entry
points are the verifiers in `kleinhilb.verify`, the HTTP service in
`kleinhilb.api`, and the `kleinhilb` command-line client in `kleinhilb.cli`.
"""

__version__ = "0.1.0"

from .rootmorita import cbh_roundtrip, hodges_data, is_dominant, morita_certificate
from .toric import build_fan, divisor_spec, enumerate_sections, localization_series
from .verify import VerificationReport, mutation_suite, run_all
from .weylcross import CrossedElement, deformed_generator, param

__all__ = [
    "__version__",
    "build_fan",
    "divisor_spec",
    "enumerate_sections",
    "localization_series",
    "param",
    "CrossedElement",
    "deformed_generator",
    "cbh_roundtrip",
    "hodges_data",
    "is_dominant",
    "morita_certificate",
    "VerificationReport",
    "run_all",
    "mutation_suite",
]
