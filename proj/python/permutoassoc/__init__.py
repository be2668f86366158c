"""Exact construction of permutoassociahedra as Minkowski sums.

Rationals come back as fractions.Fraction; inputs may be int, str ("p/q") or Fraction.
"""

import json

from ._core import (
    Polytope,
    assemble_pa,
    enumerate_B1,
    f_beta_and_m,
    f_vector,
    from_json,
    hull,
    is_simple,
    minkowski_sum,
    n_beta,
    n_beta_c,
    nestohedron,
    normally_equivalent,
    permutohedron,
    reference_kappa,
    reference_pa,
    support_value,
    to_ineq,
    to_off,
)
from ._core import verify as _verify


def verify(n, c=1, against_reference=False):
    """Run the realisation checks and return the report as a dict."""
    return json.loads(_verify(n, c, against_reference))


__all__ = [
    "Polytope", "assemble_pa", "enumerate_B1", "f_beta_and_m", "f_vector", "from_json", "hull",
    "is_simple", "minkowski_sum", "n_beta", "n_beta_c", "nestohedron", "normally_equivalent",
    "permutohedron", "reference_kappa", "reference_pa", "support_value", "to_ineq", "to_off", "verify",
]
