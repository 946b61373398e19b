"""Exact arithmetic helpers: binomials, falling factorials, p-adic
valuations, and binary-digit utilities.

Python ints are already arbitrary precision and ``fractions.Fraction``
keeps rationals in lowest terms with a positive denominator, so those two
types serve as the integer and rational domains throughout the package.
Everything here is a pure function.
"""

from __future__ import annotations

from math import comb


def is_prime(n: int) -> bool:
    """Trial-division primality check, used to validate small prime inputs."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def binomial(n: int, k: int) -> int:
    """C(n, k), defined as 0 for k < 0 or k > n.

    The out-of-range zero matches the summation conventions used by the
    alternating-sum formulas; negative n is rejected.
    """
    if n < 0:
        raise ValueError(f"binomial requires n >= 0, got n={n}")
    if k < 0 or k > n:
        return 0
    return comb(n, k)


def falling_factorial(z, k: int):
    """(z)_k = z(z-1)...(z-k+1); the empty product (k = 0) is 1.

    Accepts an int or Fraction and stays exact either way.
    """
    if k < 0:
        raise ValueError(f"falling_factorial requires k >= 0, got k={k}")
    out = 1
    for i in range(k):
        out = out * (z - i)
    return out


def nu_p(p: int, n: int) -> int:
    """p-adic valuation: the largest kappa such that p**kappa divides n."""
    if not is_prime(p):
        raise ValueError(f"nu_p requires a prime p, got p={p}")
    if n == 0:
        raise ValueError("nu_p is infinite at n=0")
    n = abs(n)
    kappa = 0
    while n % p == 0:
        n //= p
        kappa += 1
    return kappa


def e_map(n: int) -> int:
    """Round a positive integer up to the nearest even number."""
    if n < 1:
        raise ValueError(f"e_map requires n >= 1, got n={n}")
    return n if n % 2 == 0 else n + 1


def ell(n: int) -> int:
    """Largest integer congruent to 1 mod 4 that does not exceed n.

    Equals 1 + 4*floor((n-1)/4); the canonical row label used by the
    parity reduction.
    """
    if n < 1:
        raise ValueError(f"ell requires n >= 1, got n={n}")
    return 1 + 4 * ((n - 1) // 4)


def msb_position(n: int) -> int:
    """Position of the most significant set bit (0-indexed); n must be >= 1."""
    if n < 1:
        raise ValueError(f"msb_position requires n >= 1, got n={n}")
    return n.bit_length() - 1


def bit(n: int, k: int) -> int:
    """Binary digit k of a non-negative integer."""
    if n < 0:
        raise ValueError(f"bit requires n >= 0, got n={n}")
    if k < 0:
        raise ValueError(f"bit requires k >= 0, got k={k}")
    return (n >> k) & 1
