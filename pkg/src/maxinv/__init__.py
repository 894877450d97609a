"""Finite-group engine for verifying nilpotency classifications of maximal
invariant subgroups under coprime automorphism actions."""

__version__ = "0.1.0"

from .groups import (  # noqa: F401
    GroupError,
    GroupTable,
    closure_from_generators,
    direct_product,
    element_order,
    parse_group_file,
    semidirect_product,
)
from .structure import (  # noqa: F401
    Subgroup,
    SubgroupLattice,
    all_subgroups,
    center,
    centralizer,
    derived_subgroup,
    has_sylow_tower,
    index_kind,
    is_hall,
    is_nilpotent,
    is_normal,
    is_p_closed,
    is_p_nilpotent,
    is_solvable,
    is_ti,
    normalizer,
    quotient_table,
    sylow_subgroups,
)
from .action import (  # noqa: F401
    ActionGroup,
    Automorphism,
    action_closure,
    brute_force_automorphisms,
    invariant_subgroups,
    invariant_sylows,
    is_invariant,
    maximal_invariant_subgroups,
    trivial_action,
)
from .theorems import (  # noqa: F401
    Context,
    Decomposition,
    EquivalenceReport,
    Verdict,
    check_downstream,
    check_lemma_2_1,
    check_lemma_2_2,
    check_lemma_2_3,
    check_lemma_2_4,
    find_decomposition,
    hypothesis_normalizer_nilpotent,
    statement_nonnilpotent_normal,
    statement_nonnilpotent_ti,
    verify_cor_1_12,
    verify_decomposition,
    verify_thm_1_3,
    verify_thm_1_9,
)
