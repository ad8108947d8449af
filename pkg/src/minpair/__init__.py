"""Exact invariants of residually transcendental extensions of a
discrete valuation to the rational function field in one variable.

A pair (a, gamma), with a algebraic over the ground field K and gamma
a cut value, defines a valuation on K(X) by pushing the gamma-cutoff
of the Taylor expansion at a through the minimal polynomial.  This
package computes its invariants in exact arithmetic: the count j of
conjugates within gamma, value groups and their indices, the graded
reduction of polynomials, and the degree of the residue field
extension, together with a battery of cross-checks relating them.

Entry points: make_base / AlgebraicElement / MinimalPair build the
objects, GaussValuation computes with them, analyze runs every check
and returns a serializable report, and the scenario module drives the
same machinery from JSON files.
"""

from .algext import (
    AlgebraicElement,
    CertificationError,
    DistanceMultiset,
    OreCertificate,
    ResidueField,
    certify,
    conjugate_distance_oracle,
)
from .basefield import BaseField, BaseFieldError, make_base
from .exactpoly import (
    FunctionField,
    Poly,
    PrimeField,
    QQ,
    QuotientRing,
    RationalFunction,
)
from .gaussval import GaussValuation, GradedResidue
from .ordvals import (
    INFINITY,
    NotASubgroupError,
    OrderedValue,
    ValueGroup,
    group_index,
    least_multiple_in,
)
from .pairs import (
    EquivalenceResult,
    MinimalPair,
    MinimalityCertificate,
    MinimalityError,
    check_minimality,
    compute_j,
    pairs_equivalent,
)
from .proptest import SweepResult, run_property_sweep
from .scenario import (
    Scenario,
    ScenarioError,
    ScenarioResult,
    builtin_scenario_dir,
    load_scenario,
    load_scenario_file,
    scenario_paths,
)
from .verifier import (
    AnalysisReport,
    VERDICT_NAMES,
    Verdict,
    analyze,
    classify_implicit_constants,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraicElement",
    "AnalysisReport",
    "BaseField",
    "BaseFieldError",
    "CertificationError",
    "DistanceMultiset",
    "EquivalenceResult",
    "FunctionField",
    "GaussValuation",
    "GradedResidue",
    "INFINITY",
    "MinimalPair",
    "MinimalityCertificate",
    "MinimalityError",
    "NotASubgroupError",
    "OrderedValue",
    "OreCertificate",
    "Poly",
    "PrimeField",
    "QQ",
    "QuotientRing",
    "RationalFunction",
    "ResidueField",
    "Scenario",
    "ScenarioError",
    "ScenarioResult",
    "SweepResult",
    "VERDICT_NAMES",
    "ValueGroup",
    "Verdict",
    "analyze",
    "builtin_scenario_dir",
    "certify",
    "check_minimality",
    "classify_implicit_constants",
    "compute_j",
    "conjugate_distance_oracle",
    "group_index",
    "least_multiple_in",
    "load_scenario",
    "load_scenario_file",
    "make_base",
    "pairs_equivalent",
    "run_property_sweep",
    "scenario_paths",
    "__version__",
]
