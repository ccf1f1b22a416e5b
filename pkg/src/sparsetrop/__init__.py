"""Exact tropical invariants of generic sparse rational parametrizations."""

from .degree import DegreeReport, check_union_volume, check_mixed_volume_drop, check_hull_equals_dI, check_lift_equals_dI, d_I, degree_chain, mv_lift, vol_union
from .exceptions import (DimensionMismatch, IntegralityViolation, InvariantViolation, NotInTropicalization,
                         NotRegular, SparseTropError)
from .fan import CoherentCollection, enumerate_coherent_collections, is_adapted, is_essential
from .lattice import Polytope, SupportSet, convex_hull, face_alpha, lattice_index, m_alpha, minkowski_sum, normalized_volume
from .mixed_volume import mixed_volume, mixed_volume_in_span
from .multiplicity import MultiplicityQuery, MultiplicityReport, m_v, m_w, multiplicities, trop_F
from .order import J_alpha, OrderReport, check_single_support, is_tame, order_at_origin
from .tropical import TropicalCone, build_tropicalization, image_dimension, maximal_cones, membership, psi

__version__ = "0.1.0"
