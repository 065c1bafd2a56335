"""Exact concave symplectic toric fillings of contact toric 3-manifolds."""
from .linalg.lattice import LatticeVec, LatticeMat, det2, rotate90, sl2_sending_to_e1
from .linalg.feasibility import HomogeneousSystem, FeasibilityAnswer, solve_homogeneous, verify_answer
from .linalg.forms import FormInvariants, form_invariants, congruent_within_bound, separating_invariant
from .geometry.plumbing import (PlumbingGraph, IntersectionForm, ConcavityCertificate,
                                intersection_form, is_negative_definite, concavity_certificate,
                                blow_up, blow_down, is_toric_minimal, canonical_form,
                                equivariantly_distinct, blow_up_sites)
from .geometry.moment import (NormalChain, ConeAngle, MomentCone, MomentImage, CyclicClosure,
                              gluing_matrix, rays_eq1, normal_chain, rays_from_chain,
                              recover_weights, cone_angle, moment_cone, edge_lengths,
                              cyclic_closure, gluing_decomposition)
from .geometry.classify import (Lens, S1xS2, NonFree, Free, parse_target,
                                classify_linear_boundary, classify_cyclic_boundary,
                                cones_equivalent, shear_equivalence, angle_interval)
from .geometry.families import (ContinuedFraction, FamilyRequest, FamilyMember, VerifiedFamily,
                                continued_fraction, eval_cf, family_case1, family_case2,
                                family_case3, family_free, generate_fillings)
from .src._helper import helper
from .src._helper import exceptions

__version__ = '2026.10.0'
