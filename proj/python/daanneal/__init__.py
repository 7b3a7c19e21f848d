"""Parallel-trial (Digital Annealer) Markov chain analysis for Ising instances.

Configurations are spin lists of +1/-1, vertex 0 first. Vectors over the
state space are indexed by rank: bit i of the rank is set iff spin i is +1.
"""

from ._core import (
    InstanceFormatError,
    IsingInstance,
    anneal,
    classify,
    gibbs,
    landscape,
    parse_instance,
    parse_instance_text,
    r_factor,
    stationary,
    stationary_report,
    transition_matrix,
    verify,
)

__all__ = [
    "InstanceFormatError",
    "IsingInstance",
    "anneal",
    "classify",
    "gibbs",
    "landscape",
    "parse_instance",
    "parse_instance_text",
    "r_factor",
    "stationary",
    "stationary_report",
    "transition_matrix",
    "verify",
]
