"""Minimal ad-nilpotent ideals of Borel subalgebras in classical Lie algebras.

Quick start::

    >>> from adideals import orbit_label, minimal_ideal, lower_bound_m
    >>> L = orbit_label("C", 3, (4, 2))
    >>> minimal_ideal(L).dim == lower_bound_m(L) == 7
    True
"""
from .construct import (
    generator_set,
    index_assignment,
    minimal_ideal,
    standard_triple,
    structural_checks,
)
from .dynkin import centralizer_rank, dynkin_element, lower_bound_m
from .errors import AdIdealsError, GuardError, InputError, InternalError, PartitionError
from .partitions import OrbitLabel, orbit_label, orbit_labels, parse_partition
from .rootsys import AdNilpotentIdeal, RootSystem, build, close_upward, count_ideals, enumerate_ideals
from .typea_formula import check_monotone, m_closed, m_linear

__version__ = "0.1.0"

__all__ = [
    "AdIdealsError",
    "AdNilpotentIdeal",
    "GuardError",
    "InputError",
    "InternalError",
    "OrbitLabel",
    "PartitionError",
    "RootSystem",
    "build",
    "centralizer_rank",
    "check_monotone",
    "close_upward",
    "count_ideals",
    "dynkin_element",
    "enumerate_ideals",
    "generator_set",
    "index_assignment",
    "lower_bound_m",
    "m_closed",
    "m_linear",
    "minimal_ideal",
    "orbit_label",
    "orbit_labels",
    "parse_partition",
    "standard_triple",
    "structural_checks",
]
