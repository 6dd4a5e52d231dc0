"""Verification lab for a Rogers-Ramanujan type identity on colored overpartitions."""

from .colors import delta, delta_star, omega, redistribute_forward, redistribute_inverse, v_min, z_max
from .partitions import ColoredPart, MonochromePartition, Overpartition, Staircase, Statistics, is_wellformed, statistics
from .predicates import Family, FamilyTag, MembershipReport, check_dbar_equivalence, check_membership

__all__ = [
    "ColoredPart",
    "Family",
    "FamilyTag",
    "MembershipReport",
    "MonochromePartition",
    "Overpartition",
    "Staircase",
    "Statistics",
    "check_dbar_equivalence",
    "check_membership",
    "delta",
    "delta_star",
    "is_wellformed",
    "omega",
    "redistribute_forward",
    "redistribute_inverse",
    "statistics",
    "v_min",
    "z_max",
]
