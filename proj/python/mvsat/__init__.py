"""Many-valued logic kSAT relaxation: evaluator, LP pipeline, exact oracle and harness."""

from ._core import (
    DomainError,
    Formula,
    ParseError,
    ResourceError,
    UnsupportedInstance,
    beta_eval,
    bench,
    binary_tables,
    count_model,
    diff,
    eval_reference,
    gen_g,
    generate_corpus,
    oracle,
    phase_transition_sweep,
    random_kcnf,
    solve,
    solve_lp,
    unary_tables,
)

__all__ = [
    "DomainError",
    "Formula",
    "ParseError",
    "ResourceError",
    "UnsupportedInstance",
    "beta_eval",
    "bench",
    "binary_tables",
    "count_model",
    "diff",
    "eval_reference",
    "gen_g",
    "generate_corpus",
    "oracle",
    "phase_transition_sweep",
    "random_kcnf",
    "solve",
    "solve_lp",
    "unary_tables",
]
