"""Exact decomposition of quantum loop modules of U_q(sl_{n+1}^) into components.

The main entry points are re-exported here; see the submodules for details.
"""

__version__ = "0.1.0"

from .braiding import (EtaOperator, Projector, apply_Iz_at, build_eta, eigenspace_dims,
                       eta_grading_check, projector_apply)
from .characters import CharQuery, classical_dim, closed_dim, compare_all
from .combinat import (closed_count, count_maj_by_residue, euler_phi, maj, moebius,
                       phi_twisted)
from .crystal import (CrystalGraph, build_component_crystal, kashiwara_op, string_decompose,
                      tensor_rule_step, verify_axioms)
from .cyclotomic import CycloNumber, cyclo_arith
from .drinfeld import (DrinfeldTuple, chi_of, detect_period, extract_base, minus_tuple,
                       parse_tuple, power_quotient)
from .errors import LoopmodError
from .loop import (GradedWeight, LoopVector, component_weight_dim, decompose, hat_projector,
                   loop_act)
from .natrep import EvalParams, ModuleVector, act, divided_power, weight_of_word, \
    weight_space_basis
from .ratfunc import FieldElem, field_arith, q_valuation, reduce_q0
from .linalg import exact_rank

__all__ = [name for name in dir() if not name.startswith("_")]
