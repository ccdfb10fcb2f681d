"""Renner monoids of J-irreducible reductive monoids.

Construction as concrete monoids of partial injections on a Weyl orbit of
weights, with conjugacy classifications (unit, Munn, semigroup, action) and
irreducible-representation counts.
"""

from .conj import (
    ConjClassification,
    OrbitReport,
    action_conjugacy_classes,
    classification_to_json,
    count_sim_classes,
    irreducible_rep_count,
    munn_classes,
    munn_count_rook,
    orbit_report_rows,
    semigroup_conjugacy_classes,
    sim_classes_bruteforce,
    sim_conjugacy_classes,
    stratum_orbit_reports,
)
from .crosslat import (
    CrossIdempotent,
    CrossSectionLattice,
    DominantWeightSpec,
    connected_components,
    cross_section_lattice,
    is_admissible,
    lambda_sub_star,
)
from .errors import (
    ConstructionError,
    FaithfulnessError,
    InvalidType,
    NotInOrbit,
    RennerError,
    SizeCapExceeded,
    ZeroElement,
)
from .monoid import (
    FaceTransporter,
    NormalForm,
    RennerMonoid,
    build_renner,
    element_label,
    face_transporter,
    monoid_to_json,
    normal_form,
    project,
    reconstruct,
    subrank,
)
from .partialinj import (
    PartialInjection,
    compose,
    inverse,
    invertible_part,
    is_idempotent,
    natural_leq,
    restrict,
    stable_domain,
)
from .rootsys import (
    CartanMatrix,
    Subgroup,
    WeylElement,
    WeylGroup,
    cartan_matrix,
    generate_weyl,
    group_conjugacy_classes,
    min_coset_reps,
    parabolic,
    reflect,
    standard_weyl_order,
    weight_orbit,
)

__all__ = [
    "CartanMatrix",
    "ConjClassification",
    "ConstructionError",
    "CrossIdempotent",
    "CrossSectionLattice",
    "DominantWeightSpec",
    "FaceTransporter",
    "FaithfulnessError",
    "InvalidType",
    "NormalForm",
    "NotInOrbit",
    "OrbitReport",
    "PartialInjection",
    "RennerError",
    "RennerMonoid",
    "SizeCapExceeded",
    "Subgroup",
    "WeylElement",
    "WeylGroup",
    "ZeroElement",
    "action_conjugacy_classes",
    "build_renner",
    "cartan_matrix",
    "classification_to_json",
    "compose",
    "connected_components",
    "count_sim_classes",
    "cross_section_lattice",
    "element_label",
    "face_transporter",
    "generate_weyl",
    "group_conjugacy_classes",
    "inverse",
    "invertible_part",
    "irreducible_rep_count",
    "is_admissible",
    "is_idempotent",
    "lambda_sub_star",
    "min_coset_reps",
    "monoid_to_json",
    "munn_classes",
    "munn_count_rook",
    "natural_leq",
    "normal_form",
    "orbit_report_rows",
    "parabolic",
    "project",
    "reconstruct",
    "reflect",
    "restrict",
    "semigroup_conjugacy_classes",
    "sim_classes_bruteforce",
    "sim_conjugacy_classes",
    "stable_domain",
    "standard_weyl_order",
    "stratum_orbit_reports",
    "subrank",
    "weight_orbit",
]
