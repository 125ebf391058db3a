"""braidhom: exact homological invariants of surface braid groups.

The package computes abelianizations, twisted first cohomology through
Fox calculus, degree-two spectral fragments for configuration spaces,
cohomology jump loci, and character variety dimensions, all in exact
arithmetic, and drives a rule engine that decides Kahler realizability
for braid groups of surfaces with a citable trace.
"""

__version__ = "0.1.0"

from .errors import BraidhomError
from .exactlin import AbelianProfile, IntMatrix
from .presentations import (
    Character,
    CharacterTuple,
    MatrixRep,
    Presentation,
    SpaceSpec,
    catalog,
)
from .cohomology import abelianization, h1_dim, kunneth_h1, surface_profile
from .leray import b1_pure_braid, h1_twisted_pure_braid, sigma1_components
from .verdict import Verdict, charp_verdict, kahler_verdict, wreath_facts

__all__ = [
    "__version__",
    "BraidhomError",
    "AbelianProfile",
    "IntMatrix",
    "Character",
    "CharacterTuple",
    "MatrixRep",
    "Presentation",
    "SpaceSpec",
    "catalog",
    "abelianization",
    "h1_dim",
    "kunneth_h1",
    "surface_profile",
    "b1_pure_braid",
    "h1_twisted_pure_braid",
    "sigma1_components",
    "Verdict",
    "charp_verdict",
    "kahler_verdict",
    "wreath_facts",
]
