"""Cohomology of F(P^m,2) and B(P^m,2), with independent verification suites."""

import json

from ._core import (
    AbGroup2,
    ConfcohError,
    clss_abutment,
    cohomology,
    cohomology_table,
    group_from_presentation,
    homology_table,
    mod2_dimension,
    oriented_grassmannian_group,
    orientable,
    p_star,
    rank_recursion,
    ring_dimension,
    smith_normal_form,
    split_sq1_homology,
    sq1_homology_rank,
    stiefel_cohomology,
    table1,
    table1_cell,
    twisted_cohomology,
)
from . import _core


def verify(suite="all", m_lo=2, m_hi=10):
    """Run a verification suite and return the report as a dict."""
    return json.loads(_core.verify_json(suite, m_lo, m_hi))


def m3_scenario(option):
    """Pages of the m = 3 spectral sequence under d2 option "a" or "b"."""
    return json.loads(_core.m3_scenario_json(option))


__all__ = [name for name in dir() if not name.startswith("_") and name != "json"]
