"""Minimal additive complements and maximal supplements in finite abelian groups."""

__version__ = "0.1.0"

from .builders import (APDescriptor, FeasibilityReport, IntegerLift,
                       RandomBuildTrace, ap_decide_and_build, check_feasibility,
                       detect_ap, lift_integer_window, lift_via_quotient,
                       lift_via_subgroup, pair_witness_check, pair_witness_search,
                       random_witness, tmin_lower_bound_log2,
                       tmin_lower_bound_natural, trace_to_json)
from .complements import (EssentialityReport, GapEntry, TminReport, compute_tmin,
                          essentiality, exists_witness, is_complement,
                          is_minimal_complement_for, prune_to_minimal,
                          subgroup_gap_family, tmin_of_order)
from .decision import NO, UNKNOWN, YES, DecisionCertificate, SearchBudget
from .experiments import (ScanReport, ScanRow, report_to_csv, report_to_dict,
                          report_to_json, scan_threshold)
from .groups import (Group, Homomorphism, Subgroup, abelian_groups_of_order,
                     all_subgroups, coset_representatives, cyclic_subgroups,
                     quotient_map, subgroup_generated)
from .literals import (LiteralError, format_element, format_set, parse_element,
                       parse_group, parse_set)
from .rng import SplitMix64, derive_seed
from .sumset import (CoverageProfile, GroupSet, coverage, difference_set,
                     negated, sumset, translate)
from .supplements import (DiffsetInstance, SolidityReport,
                          diffset_representation, is_maximal_supplement_for,
                          is_solid, is_supplement, maximal_supplement_witness)

__all__ = [
    "APDescriptor", "CoverageProfile", "DecisionCertificate", "DiffsetInstance",
    "EssentialityReport", "FeasibilityReport", "GapEntry", "Group", "GroupSet",
    "Homomorphism", "IntegerLift", "LiteralError", "NO", "RandomBuildTrace",
    "ScanReport", "ScanRow", "SearchBudget", "SolidityReport", "SplitMix64",
    "Subgroup", "TminReport", "UNKNOWN", "YES", "abelian_groups_of_order",
    "all_subgroups", "ap_decide_and_build", "check_feasibility",
    "compute_tmin", "coset_representatives", "coverage", "cyclic_subgroups",
    "derive_seed", "detect_ap", "diffset_representation", "difference_set",
    "essentiality", "exists_witness", "format_element", "format_set",
    "is_complement", "is_maximal_supplement_for", "is_minimal_complement_for",
    "is_solid", "is_supplement", "lift_integer_window", "lift_via_quotient",
    "lift_via_subgroup", "maximal_supplement_witness", "negated",
    "pair_witness_check", "pair_witness_search", "parse_element", "parse_group",
    "parse_set", "prune_to_minimal", "quotient_map", "random_witness",
    "report_to_csv", "report_to_dict", "report_to_json", "scan_threshold",
    "subgroup_gap_family", "subgroup_generated", "sumset",
    "tmin_lower_bound_log2", "tmin_lower_bound_natural", "tmin_of_order",
    "trace_to_json", "translate",
]
