"""Binomial irreducibility over finite fields, witness families of prime
powers, and radical extension towers, with a CLI front end.

The hot polynomial kernels run on a compiled Cython backend when available
and fall back to pure Python otherwise; see fqbinom._kernel.backend_name().
"""

from ._kernel import backend_name as kernel_backend
from .arith import (
    Factorization,
    divisors,
    factor,
    first_primes,
    is_prime,
    prime_divisors,
    prime_power_decompose,
)
from .binomials import (
    BinomialReport,
    diamond,
    in_minus4_fourth_powers,
    irreducible_karp,
    irreducible_ln,
    is_pth_power,
)
from .errors import (
    ComputationError,
    ConsistencyError,
    FactorizationTooHard,
    FqbinomError,
    NotIrreducible,
    SearchCutoffExceeded,
    SizeBoundExceeded,
)
from .fields import (
    FieldCtx,
    FieldElem,
    Poly,
    PrimePower,
    build_field,
    degree_over_subfield,
    field_for,
    find_generator,
    mult_order,
    poly_roots,
    rabin_irreducible,
)
from .pseudofinite import (
    Family,
    FamilyEntry,
    Verdict,
    check_spade,
    divisibility_verdict,
    equivalence_report,
    exists_irreducible_binomial,
    gen_dirichlet_family,
    gen_paper_family,
    load_family,
    make_family,
    save_family,
)
from .towers import ClosureReport, TowerLevel, build_tower, closure_check, extend_by_binomial

__version__ = "0.1.0"

__all__ = [
    "BinomialReport",
    "ClosureReport",
    "ComputationError",
    "ConsistencyError",
    "Factorization",
    "FactorizationTooHard",
    "Family",
    "FamilyEntry",
    "FieldCtx",
    "FieldElem",
    "FqbinomError",
    "NotIrreducible",
    "Poly",
    "PrimePower",
    "SearchCutoffExceeded",
    "SizeBoundExceeded",
    "TowerLevel",
    "Verdict",
    "build_field",
    "build_tower",
    "check_spade",
    "closure_check",
    "degree_over_subfield",
    "diamond",
    "divisibility_verdict",
    "divisors",
    "equivalence_report",
    "exists_irreducible_binomial",
    "extend_by_binomial",
    "factor",
    "field_for",
    "find_generator",
    "first_primes",
    "gen_dirichlet_family",
    "gen_paper_family",
    "in_minus4_fourth_powers",
    "irreducible_karp",
    "irreducible_ln",
    "is_prime",
    "is_pth_power",
    "kernel_backend",
    "load_family",
    "make_family",
    "mult_order",
    "poly_roots",
    "prime_divisors",
    "prime_power_decompose",
    "rabin_irreducible",
    "save_family",
]
