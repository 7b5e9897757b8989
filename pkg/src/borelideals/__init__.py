"""Root systems, ad-nilpotent ideals, affine Weyl groups and the discrete series
parameters attached to lattice points of a dilated alcove."""
from .rootsys import InvalidType, Point, RootSystem, build_root_system, parse_type
from .weyl import AffineRoot, ExtAffineElt, WeylElt
from .ideals import Ideal, enumerate_abelian, enumerate_ad_nilpotent, ideal_to_affine, affine_to_ideal

__all__ = [
    "InvalidType", "Point", "RootSystem", "build_root_system", "parse_type",
    "AffineRoot", "ExtAffineElt", "WeylElt",
    "Ideal", "enumerate_abelian", "enumerate_ad_nilpotent", "ideal_to_affine", "affine_to_ideal",
]
__version__ = "0.1.0"
