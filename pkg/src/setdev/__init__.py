"""Deviations from bijectivity for finite mappings, groups, and Chu spaces."""

from .abgroup import (
    FinAbGroup,
    GroupDeviation,
    GroupElem,
    GroupHom,
    canonical,
    devg,
    devg1,
    devg2,
    devg_leq,
    element_table,
    embeds_in,
    embeds_in_oracle,
    enumerate_groups,
    enumerate_homs,
    smith_normal_form,
)
from .chu import (
    ChuMorphism,
    ChuSpace,
    compose,
    e_space,
    embed,
    ex_deviation,
    ex_mapping,
    forced_backward,
    identity_morphism,
    morphism_is_valid,
)
from .finset import (
    Classification,
    Deviation,
    Factorization,
    FiniteSet,
    Mapping,
    Partition,
    SubsetOf,
    all_partitions,
    canonical_factorization,
    classify,
    deviation,
    deviation_leq,
    discrete,
    image,
    indiscrete,
    kernel_partition,
    partition_leq,
    rho,
)
from .powerset import (
    PowersetCarrier,
    direct_image_map,
    iota,
    kappa,
    power_set,
    preimage_map,
    restrict_preimage_to_image,
)
from .verifier import (
    Claim,
    Report,
    Universe,
    check_all,
    check_claim,
    check_rho_not_functor,
    enumerate_mappings,
    find_dev2_incomparability,
    machine_records,
    text_report,
)

__all__ = [
    "Claim",
    "Classification",
    "ChuMorphism",
    "ChuSpace",
    "Deviation",
    "Factorization",
    "FinAbGroup",
    "FiniteSet",
    "GroupDeviation",
    "GroupElem",
    "GroupHom",
    "Mapping",
    "Partition",
    "PowersetCarrier",
    "Report",
    "SubsetOf",
    "Universe",
    "all_partitions",
    "canonical",
    "canonical_factorization",
    "check_all",
    "check_claim",
    "check_rho_not_functor",
    "classify",
    "compose",
    "devg",
    "devg1",
    "devg2",
    "devg_leq",
    "deviation",
    "deviation_leq",
    "direct_image_map",
    "discrete",
    "e_space",
    "element_table",
    "embed",
    "embeds_in",
    "embeds_in_oracle",
    "enumerate_groups",
    "enumerate_homs",
    "enumerate_mappings",
    "ex_deviation",
    "ex_mapping",
    "find_dev2_incomparability",
    "forced_backward",
    "identity_morphism",
    "image",
    "indiscrete",
    "iota",
    "kappa",
    "kernel_partition",
    "machine_records",
    "morphism_is_valid",
    "partition_leq",
    "power_set",
    "preimage_map",
    "restrict_preimage_to_image",
    "rho",
    "smith_normal_form",
    "text_report",
]
