"""Parameter diminishers, strict kernels, and the loops that combine them.

The package bundles exact brute-force oracles, randomized equivalence
verification, and concrete parameter-decreasing transformations for
graph, Turing machine, and set-system problems, plus a CLI.
"""

from .core import (
    BranchingRule,
    DiminisherContract,
    KernelContract,
    ParamInstance,
    ParamReduction,
    ProblemDescriptor,
    StrictComposition,
    TransformReport,
    TrivialToken,
    accelerated_solve,
    branch_and_compose,
    diminish_kernelize_loop,
    strong_loop,
    strong_loop_repetitions,
    token_instance,
    token_verdict,
    transfer_diminisher,
    unary_threshold_descriptor,
    verify_diminisher,
)
from .errors import (
    CapExceeded,
    ContractViolation,
    DiminishError,
    GuardError,
    ParseError,
)
from .registry import (
    ALIASES,
    ALL_TAGS,
    BROKEN_TAGS,
    descriptor,
    diminisher,
    parse_instance,
    serialize_instance,
    solving_bundle,
)

__all__ = [
    "ALIASES",
    "ALL_TAGS",
    "BROKEN_TAGS",
    "BranchingRule",
    "CapExceeded",
    "ContractViolation",
    "DiminishError",
    "DiminisherContract",
    "GuardError",
    "KernelContract",
    "ParamInstance",
    "ParamReduction",
    "ParseError",
    "ProblemDescriptor",
    "StrictComposition",
    "TransformReport",
    "TrivialToken",
    "accelerated_solve",
    "branch_and_compose",
    "descriptor",
    "diminish_kernelize_loop",
    "diminisher",
    "parse_instance",
    "serialize_instance",
    "solving_bundle",
    "strong_loop",
    "strong_loop_repetitions",
    "token_instance",
    "token_verdict",
    "transfer_diminisher",
    "unary_threshold_descriptor",
    "verify_diminisher",
]

__version__ = "0.1.0"
