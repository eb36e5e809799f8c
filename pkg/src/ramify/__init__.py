"""Ramification invariants of finite extensions of k((t))."""

from .components import ComponentProfile, check_profile_laws, component_profile, conductor_from_profile
from .errors import RamifyError
from .extension import ExtensionDesc, invariants, make_extension
from .parse import parse_base, parse_poly
from .ramification import conductor, conductor_result, herbrand_profile, root_distances
from .report import build_extension, build_report

__all__ = [
    "ComponentProfile", "ExtensionDesc", "RamifyError",
    "build_extension", "build_report", "check_profile_laws", "component_profile",
    "conductor", "conductor_from_profile", "conductor_result", "herbrand_profile",
    "invariants", "make_extension", "parse_base", "parse_poly", "root_distances",
]
