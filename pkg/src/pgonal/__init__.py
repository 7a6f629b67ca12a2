"""Exact-arithmetic toolkit for the Galois closure of an etale double
cover of a cyclic p-gonal cover: group construction, subcover genus
tables, rational character theory, and group-algebra endomorphism
identities, all verified with zero numerical tolerance."""

__version__ = "0.1.0"

from .covers import (
    CoverParams,
    GenusTable,
    genus_by_coset_action,
    genus_closed_forms,
    genus_table_by_coset_action,
    klein_genus_table,
    verify_dimension_identities,
    verify_etale,
)
from .galois import (
    ClosureModel,
    build_closure_model,
    enumerate_maximal_subgroups,
    p_orbits_on_subgroups,
    verify_block_structure,
    verify_presentation,
)
from .group import GroupTable, Subgroup, generate
from .isogeny import (
    AlgebraElement,
    EigenProjector,
    build_projector,
    torsion_containment_shadow,
    verify_composite_alpha,
    verify_klein_identities,
    verify_phi_identity,
)
from .monodromy import (
    MonodromyDatum,
    find_klein_monodromy,
    find_monodromy,
    validate_monodromy,
)
from .perm import Permutation, compose, cycle_type, is_even
from .reptheory import (
    Character,
    CycloNum,
    NCharacter,
    characters_of_N,
    induce_character,
    isotypic_dimensions,
    one_dim_characters,
    verify_irreducible_inventory,
)

__all__ = [
    "__version__",
    "Permutation", "compose", "cycle_type", "is_even",
    "GroupTable", "Subgroup", "generate",
    "ClosureModel", "build_closure_model", "verify_presentation",
    "enumerate_maximal_subgroups", "p_orbits_on_subgroups",
    "verify_block_structure",
    "MonodromyDatum", "find_monodromy", "validate_monodromy",
    "find_klein_monodromy",
    "CoverParams", "GenusTable", "genus_by_coset_action",
    "genus_closed_forms", "genus_table_by_coset_action",
    "verify_dimension_identities", "verify_etale", "klein_genus_table",
    "CycloNum", "NCharacter", "Character", "characters_of_N",
    "induce_character", "one_dim_characters",
    "verify_irreducible_inventory", "isotypic_dimensions",
    "AlgebraElement", "EigenProjector", "build_projector",
    "verify_phi_identity", "verify_composite_alpha",
    "torsion_containment_shadow", "verify_klein_identities",
]
