"""Operads, braces and exact cohomology for finite-dimensional Loday algebras."""

from .algebra import AlgebraSpec, multiply, star, verify_axioms
from .algfile import load_algebra, parse_algebra, serialize_algebra
from .cochains import (Cochain, MultContext, bracket, brace, circ,
                       canonical_multiplication, delta_trias, diff_d, dot,
                       gamma, identity_cochain)
from .cohomology import (check_g_algebra, coboundary_preimage,
                         cohomology_dims, cohomology_report,
                         cocycle_representatives, induced_bracket,
                         induced_dot, matrix_of_d)
from .fields import PrimeField, QQ
from .params import ParamElement, encode, enumerate_params
from .preoperadic import Profile, r_part, r_zero, verify_system

__version__ = "0.1.0"
