"""Exact-arithmetic dynamics of piecewise linear circle homeomorphisms:
derivative-jump cocycles, the induced affine isometric action, rotation
numbers, exotic circles, coboundary-based conjugation into rotations, and
Cantor-Bendixson ranks of symbolic countable sets."""

from .circle import Arc, CirclePoint, arc_contains, cyclic_between, frac_mod1, reduce_mod1
from .homeo import (ExoticParams, InvalidHomeoError, PLHomeo, exotic_element,
                    from_lift_vertices, identity, random_pl, rotation)
from .cocycle import (FiniteVector, GrowthParams, JumpVector, affine_apply,
                      breakpoint_growth, growth_params, jump_cocycle,
                      l2_norm_sq, orbit_norm_seq)
from .rotnum import (FixedSet, RotNumResult, fixed_points, rotation_number,
                     semiconjugacy_table)
from .smoothing import (Edge, GroupPresentation, JumpAssignment, Obstruction,
                        OrbitGraph, SmoothingOutcome, SynthesisInfeasible,
                        build_orbit_graph, commensuration_defect,
                        detect_finite_orbit, smooth_group, solve_coboundary,
                        synthesize_conjugator)
from .cantor_bendixson import (CBRank, Leaf, Limit, SymbolicSet, cb_derivative,
                               cb_rank, derivative_chain, nested_limit,
                               realize, structural_rank, validate_realization)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
