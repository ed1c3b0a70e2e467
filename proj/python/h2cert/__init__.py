from ._core import (
    AlgebraError,
    build_f,
    ce_h2_rank,
    coinvariants,
    commands,
    enumerate_rational,
    exponent_chain_holds,
    exponents,
    find_sieve,
    h2hat_quotient,
    observed_rank,
    powers_independent,
    run,
    verify_sieve,
)

__all__ = [
    "AlgebraError",
    "build_f",
    "ce_h2_rank",
    "coinvariants",
    "commands",
    "enumerate_rational",
    "exponent_chain_holds",
    "exponents",
    "find_sieve",
    "h2hat_quotient",
    "observed_rank",
    "powers_independent",
    "run",
    "verify_sieve",
]
