"""Exact computation and machine verification of conjugation-invariant norms
on groups: conjugation-generated norms, commutator length, quasi-norms and
their conversion to norms, stabilization, shift-commutator decompositions,
displacement/packing invariants and quasi-morphism machinery."""

from ._version import __version__
from .descriptors import (
    GroupDescriptor,
    aff_z,
    alternating,
    bar,
    finite,
    format_descriptor,
    free_group,
    is_abelian,
    order,
    parse_descriptor,
    product,
    sl_mod,
    sl_z,
    symmetric,
    wreath_z,
    wreath_zn,
    z2_infinity,
)
from .elements import (
    Element,
    affz_element,
    bar_element,
    binary_word,
    commutator_of,
    compose,
    conjugate_of,
    element_order,
    elementary,
    free_word,
    identity,
    int_matrix,
    invert,
    mod_matrix,
    moved_points,
    perm_from_cycles,
    permutation,
    power,
    product_element,
    sort_key,
    wreath_element,
)
from .enumeration import (
    ENUMERATION_GUARD,
    SubgroupSpec,
    abelianization_order,
    closure_of,
    commutator_pool,
    conjugacy_closure,
    derived_subgroup,
    enumerate_elements,
    in_class_g,
    subgroup_closure,
)
from .errors import (
    DescriptorMismatchError,
    GuardExceededError,
    InfiniteGroupError,
    NotCGeneratingError,
)
from .literals import from_literal, to_literal
from .norms import (
    AxiomReport,
    CGenSpec,
    DominationReport,
    NormTable,
    NormTableMeta,
    QuasiNormReport,
    QuasiNormSpec,
    StabilizationEstimate,
    c_generates,
    cgen_spec,
    check_extremal_domination,
    commutator_length,
    commutator_length_over,
    coset_extension_qnorm,
    generator_filtration_norm,
    pullback_qnorm,
    qk_norm,
    quasinorm_to_norm,
    stabilization_upper,
    support_norm,
    support_norm_table,
    trivial_norm_table,
    verify_norm_axioms,
    verify_quasinorm,
)
from .fcommutator import (
    FCommEnvironment,
    FCommutator,
    FCommutatorDecomposition,
    NormBoundReport,
    RearrangeSolution,
    TwoCommutatorWitness,
    fcomm_norm_bound,
    rearrange,
    seven_fcommutators,
    solve_rearrange_id,
    two_commutator_witness,
    two_fcommutators,
    wreath_environment,
)
from .displacement import (
    DisplacementReport,
    EnergyResult,
    MasterReport,
    PackingResult,
    disjunction_energy,
    displacement_energy,
    find_strong_displacer,
    packing_number,
    subgroups_commute,
    verify_disjunction_inequality,
    verify_master_inequalities,
)
from .quasimorphisms import (
    CommutatorSupEstimate,
    DefectEstimate,
    HomogenizationInterval,
    QuasiMorphism,
    SclBounds,
    bar_defect_decomposition,
    bar_extension,
    commutator_sup,
    counting_qm,
    defect,
    exponent_sum_qm,
    homogenize,
    scl_bounds,
    verify_bar_splitting,
    verify_witness_additivity,
)
from .serialize import (
    fraction_str,
    norm_table_from_payload,
    norm_table_payload,
    norm_table_to_json,
    norm_table_to_tsv,
    parse_fraction,
)
