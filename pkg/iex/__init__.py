# Copyright (C) 2026 pyiex developers
#
# SPDX short identifier: BSD-3-Clause

from iex.comp import CompSpec, bounded_comp, count_bounded_compositions
from iex.dnf import (
    CnfSpec,
    DnfSpec,
    cnf,
    cnf_model_count,
    dnf,
    model_count,
    model_count_fixed_k,
    random_dnf,
)
from iex.engine import (
    SignConvention,
    ie_counter,
    upgrade_a,
    upgrade_a_weighted,
    upgrade_b_scan,
)
from iex.errors import AdmissibilityError, BudgetExceeded, ParseError
from iex.exclusion import (
    ClashGraph,
    GeneratorSet,
    ab_algorithm,
    anticliques_via_edges,
    n_algorithm,
    relevant_count,
)
from iex.facecount import (
    FaceVector,
    ParityWeightTable,
    union_face_numbers,
    union_parity_weight,
)
from iex.perm import (
    AssignConstraint,
    BlockSpec,
    MapMode,
    block_perm,
    constrained_maps,
    count_block_avoiding_permutations,
    count_constrained_maps,
)
from iex.rows import ABRow, Face, NRow, RowUnion, TernaryRow

__version__ = "0.1.0"
name = "Inclusion-exclusion with pre-excluded zero terms"
