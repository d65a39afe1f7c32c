"""Rank-1 trigonometric Cherednik algebras in odd characteristic.

Exact arithmetic over GF(p^m), PBW normal forms, explicit matrix models of
the catalogued modules, and the checks that tie them together.
"""
from ._backend import BACKEND
from .algebra import (AlgebraElement, AlgebraParams, central_elements,
                      intertwiners, multiply, normalize, normalize_params,
                      relation_elements, transport)
from .analysis import (CentralCharacter, EigenReport, IrreducibilityVerdict,
                       ba_cycle_scalar, central_character,
                       check_intertwiner_maps, eigenspaces,
                       exhaustive_invariant_search, is_irreducible,
                       verify_relations)
from .errors import *  # noqa: F401,F403
from .field import FieldContext, FieldElement, Matrix, make_field
from .iso import IsoVerdict, criterion_iso, find_intertwiner, product_term
from .parser import parse, parse_scalar
from .reps import (FAMILIES, Representation, RepSpec, TwoDimModel, act,
                   build_rep, direct_sum, matrix_of, solve_two_dim_model)

__version__ = "0.1.0"
