"""Coset posets of finite groups: labelings, shellings and homology."""

from .cosets import (EMPTY, Coset, Poset, SimplicialComplex, c0_subposet, coset_lattice,
                     coset_poset, interval, maximal_chains, order_complex, pure_skeleton)
from .errors import CosetShellError, InputError, PreconditionError, VerificationError
from .expr import parse_group_expr
from .gfpivots import GFMatrix, pivot_set, rref, subgroup_pivots, w_down, w_up
from .groups import (Group, builtin_group, direct_product, group_from_table, load_table,
                     quotient_group, save_table)
from .homology import betti, is_cm, is_seq_cm, predicted_spheres
from .labeling import build_context, label_cover, labeled_hasse
from .report import run_report
from .shelling import facet_order_from_labels, falling_chains, verify_coel, verify_shelling
from .subgroups import (all_subgroups, chief_series, classify, hall_subgroup,
                        is_supersolvable, normal_subgroups, sylow_subgroup)

__version__ = "0.1.0"
