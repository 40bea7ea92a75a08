"""Quivers with relations, their representations, and an atlas of equivariant
D-module categories on spherical vector spaces.

Everything is exact: rationals via :class:`fractions.Fraction`, prime fields as
integers mod p.
"""

from .linalg import QQ, GF, field_from_tag
from .quiver import (Arrow, InfiniteAlgebraError, PathWord, Quiver, QuiverPresentation,
                     cartan_matrix, compose, enumerate_nonzero_paths, find_isomorphism,
                     is_isomorphic_presentation, is_automorphism, is_self_opposite, is_zero_path,
                     make_AA, make_AA3c, make_B8, make_B8_opposite, make_EE6, make_path, opposite,
                     trivial_path)
from .reps import (Decomposition, Rep, StringSpec, UndeterminedError, ValidationReport,
                   all_string_specs, change_field, classify_AA, decompose, direct_sum, dual_rep,
                   end_algebra, hom_basis, hom_dim, indecomposability, is_indecomposable,
                   is_isomorphic, simple_rep, string_module, validate_rep, weight_chain_rep,
                   zero_rep)
from .reptype import (BudgetExceeded, CensusReport, TitsForm, census, census_many,
                      finite_type_check, is_psd, radical_lattice, tits_form)
from .atlas import (CaseRecord, Orbit, characteristic_cycle, fourier_permutation, get_case,
                    list_cases, orbit_codim, parameter_grid, projective_cover_dims, pyasetskii,
                    verify_case_invariants)
from .moment import (LinearAction, MomentSystem, MultiPoly, gl_gl_action, jacobian_rank,
                     lemma_m2_check, lemma_m2_data, moment_polys, moment_system,
                     orbit_tangent_rank, sp_gl_action, symbol)
from .io import load_quiver, load_rep, quiver_from_dict, rep_from_dict

__version__ = "0.1.0"
