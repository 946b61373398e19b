"""Exact computation around Stirling numbers of the second kind: the
polynomial extension S(m, n, z), its minima and real roots, the mod-2
parity tapestry (a Sierpinski gasket), p-adic divisibility bounds, and a
generalized Wilson primality criterion.

All arithmetic is exact (ints and fractions); no floating point anywhere.
"""

from .arith import (
    binomial,
    bit,
    e_map,
    ell,
    falling_factorial,
    is_prime,
    msb_position,
    nu_p,
)
from .congruences import (
    PrimalityClassification,
    PrimalityKind,
    ValuationBound,
    WilsonReport,
    classify_primality_odd_d,
    demaio_touset_check,
    is_prime_wilson,
    prop15_residue,
    stirling2_mod,
    valuation_bound,
    wilson_check,
)
from .parity import (
    ParityFrequency,
    ParityMatrix,
    ReductionOrder,
    build_tapestry,
    column_period,
    det_mod2,
    ell_reduce_parity,
    kummer_entry,
    parity_even_d,
    parity_frequency,
    parity_recurrence_check,
    pbm_bytes,
    reduced_indices,
    row_period,
    write_pbm,
)
from .polynomials import (
    IntPolynomial,
    RootClassification,
    RootKind,
    convolution_check,
    eval_definition,
    gould_expansion,
    kth_derivative,
    p_polynomial,
    real_roots,
    recenter_at_half_n,
    reconstruct_from_v,
    stirling_function_poly,
    taylor_coefficients,
    v_number,
)
from .stirling import (
    StirlingTable,
    b_number,
    lemma1_expand,
    stirling1_signed,
    stirling2,
    stirling2_by_sum,
)

__all__ = [
    "IntPolynomial",
    "ParityFrequency",
    "ParityMatrix",
    "PrimalityClassification",
    "PrimalityKind",
    "ReductionOrder",
    "RootClassification",
    "RootKind",
    "StirlingTable",
    "ValuationBound",
    "WilsonReport",
    "b_number",
    "binomial",
    "bit",
    "build_tapestry",
    "classify_primality_odd_d",
    "column_period",
    "convolution_check",
    "demaio_touset_check",
    "det_mod2",
    "e_map",
    "ell",
    "ell_reduce_parity",
    "eval_definition",
    "falling_factorial",
    "gould_expansion",
    "is_prime",
    "is_prime_wilson",
    "kth_derivative",
    "kummer_entry",
    "lemma1_expand",
    "msb_position",
    "nu_p",
    "p_polynomial",
    "parity_even_d",
    "parity_frequency",
    "parity_recurrence_check",
    "pbm_bytes",
    "prop15_residue",
    "real_roots",
    "recenter_at_half_n",
    "reconstruct_from_v",
    "reduced_indices",
    "row_period",
    "stirling1_signed",
    "stirling2",
    "stirling2_by_sum",
    "stirling2_mod",
    "stirling_function_poly",
    "taylor_coefficients",
    "v_number",
    "valuation_bound",
    "wilson_check",
    "write_pbm",
]
