"""Divisibility bounds, Wilson-type primality checks, and mod-p residue
laws for Stirling numbers of the second kind."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .arith import e_map, is_prime, nu_p
from .stirling import stirling2


def stirling2_mod(m: int, n: int, modulus: int) -> int:
    """S(m, n) mod modulus with the recurrence run entirely in Z/modulus.

    An independent code path from the exact table: O(m*n) word operations
    and no big integers.  Well-defined for composite moduli too, which the
    Wilson sufficiency test needs.
    """
    if m < 0 or n < 0:
        raise ValueError(f"stirling2_mod requires m, n >= 0, got ({m}, {n})")
    if modulus < 1:
        raise ValueError(f"modulus must be >= 1, got {modulus}")
    if n > m:
        return 0
    if modulus == 1:
        return 0
    row = [0] * (n + 1)
    row[0] = 1
    for _ in range(m):
        new = [0] * (n + 1)
        for j in range(1, n + 1):
            new[j] = (j * row[j] + row[j - 1]) % modulus
        row = new
    return row[n]


@dataclass(frozen=True)
class ValuationBound:
    """Guaranteed and observed p-adic valuation of S(m, n) for odd d."""

    p: int
    bound: int
    actual: int


def valuation_bound(p: int, m: int, n: int) -> ValuationBound:
    """Lower bound on nu_p(S(m, n)) for odd d = m - n > 0, plus the true value.

    The bound is nu_p(e(n)) - 1 for p = 2 and nu_p(e(n)) otherwise, a
    consequence of e(n)/2 dividing S(m, n) whenever d is odd.
    """
    if not is_prime(p):
        raise ValueError(f"valuation_bound requires a prime p, got p={p}")
    if n < 1:
        raise ValueError(f"valuation_bound requires n >= 1, got n={n}")
    d = m - n
    if d <= 0 or d % 2 == 0:
        raise ValueError(f"valuation_bound requires odd d = m - n > 0, got d={d}")
    en = e_map(n)
    bound = nu_p(p, en) - 1 if p == 2 else nu_p(p, en)
    actual = nu_p(p, stirling2(m, n))
    return ValuationBound(p=p, bound=bound, actual=actual)


class PrimalityKind(Enum):
    PRIME_EXCEPTIONAL = "PrimeExceptional"
    COMPOSITE = "Composite"


@dataclass(frozen=True)
class PrimalityClassification:
    """Primality verdict for S(m, n) with odd d, with a witness divisor.

    The witness, when present, is a proper divisor of S(m, n) strictly
    between 1 and the number itself, so compositeness can be asserted
    without factoring.  S(m, 1) = 1 is a unit: not prime, but with no
    witness to offer.
    """

    kind: PrimalityKind
    witness: Optional[int]


def classify_primality_odd_d(m: int, n: int) -> PrimalityClassification:
    """S(m, n) with odd d > 0 is prime exactly for (m, n) = (3, 2)."""
    if n < 1:
        raise ValueError(f"classify_primality_odd_d requires n >= 1, got n={n}")
    d = m - n
    if d <= 0 or d % 2 == 0:
        raise ValueError(
            f"classify_primality_odd_d requires odd d = m - n > 0, got d={d}"
        )
    if (m, n) == (3, 2):
        return PrimalityClassification(PrimalityKind.PRIME_EXCEPTIONAL, None)
    if n == 1:
        return PrimalityClassification(PrimalityKind.COMPOSITE, None)
    if n == 2:
        # 3 divides every S(odd m, 2), by induction from S(3, 2) = 3.
        return PrimalityClassification(PrimalityKind.COMPOSITE, 3)
    return PrimalityClassification(PrimalityKind.COMPOSITE, e_map(n) // 2)


@dataclass(frozen=True)
class WilsonReport:
    """Outcome of the generalized Wilson criterion for n = 1..n_max."""

    p: int
    checked_n: tuple
    all_passed: bool
    first_failure: Optional[int]


def wilson_check(p: int, n: int) -> bool:
    """True iff B(n(p-1), p-1) = -1 (mod p).

    Holds for every n >= 1 when p is prime; for composite p the n = 1
    instance already reduces to the classical Wilson test and fails.
    Everything runs mod p, so composite p is fine.
    """
    if p < 2:
        raise ValueError(f"wilson_check requires p >= 2, got p={p}")
    if n < 1:
        raise ValueError(f"wilson_check requires n >= 1, got n={n}")
    fact = 1
    for x in range(2, p):
        fact = fact * x % p
    value = fact * stirling2_mod(n * (p - 1), p - 1, p) % p
    return value == (p - 1) % p


def is_prime_wilson(p: int, n_max: int = 1) -> WilsonReport:
    """Run wilson_check for n = 1..n_max, stopping at the first failure."""
    if p < 2:
        raise ValueError(f"is_prime_wilson requires p >= 2, got p={p}")
    if n_max < 1:
        raise ValueError(f"is_prime_wilson requires n_max >= 1, got {n_max}")
    checked = []
    for n in range(1, n_max + 1):
        checked.append(n)
        if not wilson_check(p, n):
            return WilsonReport(p, tuple(checked), False, n)
    return WilsonReport(p, tuple(checked), True, None)


def prop15_residue(p: int, n: int, k: int) -> int:
    """S(n(p-1), p-k) mod p, which equals (k-1)! mod p for odd prime p."""
    if p == 2 or not is_prime(p):
        raise ValueError(f"prop15_residue requires an odd prime p, got p={p}")
    if n < 1:
        raise ValueError(f"prop15_residue requires n >= 1, got n={n}")
    if not 1 <= k <= p - 2:
        raise ValueError(f"prop15_residue requires 1 <= k <= p-2, got k={k}")
    return stirling2_mod(n * (p - 1), p - k, p)


def demaio_touset_check(p: int, n: int, k: int) -> bool:
    """Check S(p + n(p-1), k) = 0 (mod p) for odd prime p and 1 < k < p.

    Expected to hold always; a False return signals a bug somewhere.
    """
    if p == 2 or not is_prime(p):
        raise ValueError(f"demaio_touset_check requires an odd prime p, got p={p}")
    if n < 0:
        raise ValueError(f"demaio_touset_check requires n >= 0, got n={n}")
    if not 1 < k < p:
        raise ValueError(f"demaio_touset_check requires 1 < k < p, got k={k}")
    return stirling2_mod(p + n * (p - 1), k, p) == 0
