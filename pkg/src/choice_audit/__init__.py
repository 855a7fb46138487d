"""Audit recommendation data for consistency with preference-plus-interpretation models.

An agent picks the best alternative, under a strict linear preference, of
its interpretation I(S) of the menu S.  The package checks the behavioral
axioms that characterize the model classes, recovers what the data reveals
about the preference and the interpretation, builds explicit
rationalizations, and verifies the characterizations exhaustively on small
universes.
"""

from __future__ import annotations

from .axioms import (
    Axiom,
    AuditReport,
    AxiomVerdict,
    Membership,
    audit,
    check_cci,
    check_groundedness,
    check_nbc,
    check_nd,
    check_nsc,
    check_singleton_image,
    check_warp,
    replay_witness,
)
from .core import (
    AgentSpec,
    ChoiceAuditError,
    ChoiceDataset,
    InterpretationOperator,
    ModelClass,
    SizeCapError,
    StrictPreference,
    Universe,
    default_universe,
    fixture,
    make_universe,
)
from .documents import DocumentError, load_agent, load_dataset, save_agent, save_dataset
from .operators import (
    OperatorPropertyReport,
    PropertyResult,
    check_closure_properties,
    check_double_monotonicity,
    check_grounded,
    check_idempotence,
    check_monotone,
    classify_operator,
    consistency_battery,
)
from .oracle import (
    CharacterizationReport,
    OperatorClass,
    Theorem,
    enumerate_choice_functions,
    enumerate_linear_orders,
    enumerate_operators,
    identification_oracle,
    simulate,
    verify_characterization,
)
from .rationalize import (
    ConstructionError,
    Rationalization,
    Representation,
    Scope,
    construct_aic,
    construct_gaic,
    construct_gmaic,
    construct_graic,
    construct_raic,
    derive_choice_function,
    evaluate_agent,
    rationalize,
    verify_representation,
)
from .revealed import (
    Alignment,
    AlignmentReport,
    Identification,
    MissingObservations,
    alignment_report,
    identify,
    revealed_consideration,
    revealed_one_step,
    transitive_closure,
)

__version__ = "0.1.0"

__all__ = sorted(
    name
    for name, value in dict(globals()).items()
    if not name.startswith("_") and name != "annotations" and not hasattr(value, "__path__") and getattr(value, "__module__", "").startswith(__name__)
)
