"""
Colored five-vertex lattice models in exact integer arithmetic: state
enumeration and partition functions, Demazure characters and atoms via
divided differences, crystals of semistandard tableaux with Demazure
subsets, state surgery between the open and closed models, and an
exhaustive verification suite for the identities tying them together.
"""

from . import adjust, crystal, laurent, lattice, patterns, verify, weyl

__all__ = ["adjust", "crystal", "laurent", "lattice", "patterns", "verify", "weyl"]

__version__ = "0.1.0"
