"""The polynomial side of the Stirling-number extension S(m, n, z).

For d = m - n > 0 the alternating sum defining S(m, n, z) collapses to
S(m, n) plus a degree-d integer polynomial whose coefficient of z**j is
(-1)**j * C(m, j) * S(m-j, n); for d <= 0 it is the constant S(m, n).
This module works coefficient-exactly with that polynomial; the defining
alternating sum is kept only as an independent cross-check
(``eval_definition``).  No floating point appears anywhere: evaluation
points are ints or Fractions and all identities hold with zero tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import comb, factorial

from .stirling import b_number, stirling1_signed, stirling2


class IntPolynomial:
    """Dense integer-coefficient polynomial, ascending powers of z.

    Canonical form: no trailing zero coefficients; the zero polynomial has
    an empty coefficient tuple.  Instances are immutable.
    """

    __slots__ = ("coefficients",)

    def __init__(self, coefficients=()):
        coeffs = list(coefficients)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("IntPolynomial is immutable")

    def __eq__(self, other):
        if isinstance(other, IntPolynomial):
            return self.coefficients == other.coefficients
        return NotImplemented

    def __hash__(self):
        return hash(self.coefficients)

    def __repr__(self):
        return f"IntPolynomial({list(self.coefficients)!r})"

    def __bool__(self):
        return bool(self.coefficients)

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    def coefficient(self, j: int) -> int:
        return self.coefficients[j] if 0 <= j < len(self.coefficients) else 0

    def __call__(self, z):
        """Evaluate by Horner's rule; exact for int and Fraction arguments."""
        out = 0
        for c in reversed(self.coefficients):
            out = out * z + c
        return out

    def __add__(self, other):
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        a, b = self.coefficients, other.coefficients
        if len(a) < len(b):
            a, b = b, a
        summed = list(a)
        for i, c in enumerate(b):
            summed[i] += c
        return IntPolynomial(summed)

    def __neg__(self):
        return IntPolynomial([-c for c in self.coefficients])

    def __sub__(self, other):
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial([c * other for c in self.coefficients])
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        if not self or not other:
            return IntPolynomial()
        prod = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            for j, b in enumerate(other.coefficients):
                prod[i + j] += a * b
        return IntPolynomial(prod)

    __rmul__ = __mul__

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial(
            [i * c for i, c in enumerate(self.coefficients)][1:]
        )

    def compose(self, inner: "IntPolynomial") -> "IntPolynomial":
        """Substitute ``inner`` for z, exactly (Horner over polynomials)."""
        out = IntPolynomial()
        for c in reversed(self.coefficients):
            out = out * inner + IntPolynomial([c])
        return out

    def serialize(self) -> str:
        """Ascending coefficients as comma-separated decimal strings."""
        return ",".join(str(c) for c in self.coefficients)


Z = IntPolynomial([0, 1])


def taylor_coefficients(poly: IntPolynomial, center: Fraction) -> list[Fraction]:
    """Exact coefficients c_k with poly(z) = sum_k c_k * (z - center)**k."""
    center = Fraction(center)
    coeffs = []
    current = poly
    k = 0
    while current:
        coeffs.append(Fraction(current(center)) / factorial(k))
        current = current.derivative()
        k += 1
    return coeffs


class RootKind(Enum):
    ALL_REALS = "AllReals"
    ZERO_ONLY = "ZeroOnly"
    ZERO_AND_N = "ZeroAndN"


@dataclass(frozen=True)
class RootClassification:
    """Real solution set of S(m, n, z) = S(m, n), with a simplicity certificate."""

    kind: RootKind
    simple_certified: bool

    @property
    def certified_real_root_count(self) -> int:
        if self.kind is RootKind.ZERO_ONLY:
            return 1
        if self.kind is RootKind.ZERO_AND_N:
            return 2
        return 0


def _validate_pair(m: int, n: int, where: str) -> int:
    if m < 1 or n < 1:
        raise ValueError(f"{where} requires m, n >= 1, got ({m}, {n})")
    return m - n


def p_polynomial(m: int, n: int) -> IntPolynomial:
    """Degree-d polynomial with P(z) = S(m, n, z) - S(m, n); zero when d <= 0.

    Coefficient of z**j is (-1)**j * C(m, j) * S(m-j, n) for 1 <= j <= d,
    so z = 0 is always a root when d > 0.
    """
    d = _validate_pair(m, n, "p_polynomial")
    if d <= 0:
        return IntPolynomial()
    coeffs = [0] * (d + 1)
    for j in range(1, d + 1):
        coeffs[j] = (-1) ** j * comb(m, j) * stirling2(m - j, n)
    return IntPolynomial(coeffs)


def stirling_function_poly(m: int, n: int) -> IntPolynomial:
    """S(m, n, z) as a polynomial: the constant S(m, n) shifted by P(z)."""
    _validate_pair(m, n, "stirling_function_poly")
    return IntPolynomial([stirling2(m, n)]) + p_polynomial(m, n)


def eval_definition(m: int, n: int, z) -> Fraction:
    """S(m, n, z) straight from the defining alternating sum.

    Serves as the oracle for the polynomial path; exact for rational z.
    """
    d = _validate_pair(m, n, "eval_definition")
    z = Fraction(z)
    total = sum(comb(n, k) * (-1) ** k * (z - k) ** m for k in range(n + 1))
    return Fraction((-1) ** d, factorial(n)) * total


def kth_derivative(m: int, n: int, k: int) -> IntPolynomial:
    """k-th formal derivative of the Stirling function polynomial.

    For k > d the derivative degenerates to the zero polynomial, which is
    returned rather than treated as an error.
    """
    if k < 1:
        raise ValueError(f"kth_derivative requires k >= 1, got k={k}")
    poly = stirling_function_poly(m, n)
    for _ in range(k):
        poly = poly.derivative()
    return poly


def gould_expansion(m: int, n: int) -> list[int]:
    """Newton-basis coefficients [B(m, n), B(m, n+1), ..., B(m, m)].

    These satisfy, identically in z,
        sum_k C(n,k) (-1)**k (z-k)**m = sum_j C(z-n, j) * B(m, n+j).
    """
    d = _validate_pair(m, n, "gould_expansion")
    if d < 0:
        raise ValueError(f"gould_expansion requires m >= n, got ({m}, {n})")
    return [b_number(m, n + j) for j in range(d + 1)]


def convolution_check(m: int, n: int, j: int) -> tuple[int, int]:
    """Both sides of the first-kind/second-kind convolution identity.

    Returns (sum_{q=j}^{d} C(n+q, n) S(m, n+q) s(q, j), C(m, j) S(m-j, n));
    the two components are equal for every 1 <= j <= d.
    """
    d = _validate_pair(m, n, "convolution_check")
    if d <= 0:
        raise ValueError(f"convolution_check requires d > 0, got d={d}")
    if not 1 <= j <= d:
        raise ValueError(f"convolution_check requires 1 <= j <= d, got j={j}")
    lhs = sum(
        comb(n + q, n) * stirling2(m, n + q) * stirling1_signed(q, j)
        for q in range(j, d + 1)
    )
    rhs = comb(m, j) * stirling2(m - j, n)
    return lhs, rhs


def recenter_at_half_n(m: int, n: int) -> list[Fraction]:
    """Coefficients of S(m, n, z) in powers of (z - n/2), exact rationals.

    For even d only even indices are populated (and they are positive);
    for odd d only odd indices are.  The parity split is what makes the
    positivity and minimum-location arguments purely structural.
    """
    d = _validate_pair(m, n, "recenter_at_half_n")
    if d <= 0:
        raise ValueError(f"recenter_at_half_n requires d > 0, got d={d}")
    return taylor_coefficients(stirling_function_poly(m, n), Fraction(n, 2))


def v_number(m: int, n: int) -> Fraction:
    """Minimum of |S(m, n, z)| over real z.

    Even d > 0: the positive value at z = n/2.  Odd d: 0 (the function
    vanishes at n/2).  d = 0: the constant 1.  d < 0: 0, since the
    function is identically zero there.
    """
    d = _validate_pair(m, n, "v_number")
    if d < 0:
        return Fraction(0)
    if d == 0:
        return Fraction(1)
    if d % 2 == 1:
        return Fraction(0)
    return Fraction(stirling_function_poly(m, n)(Fraction(n, 2)))


def reconstruct_from_v(m: int, n: int) -> int:
    """Rebuild S(m, n) from the minima v(m - i, n) via the z = 0 expansion.

    Uses the even/odd split of the recentred series; the exact rational
    total must be an integer, and equals stirling2(m, n).
    """
    d = _validate_pair(m, n, "reconstruct_from_v")
    if d <= 0:
        raise ValueError(f"reconstruct_from_v requires d > 0, got d={d}")
    half = Fraction(n, 2)
    if d % 2 == 0:
        total = sum(
            comb(m, 2 * j) * v_number(m - 2 * j, n) * half ** (2 * j)
            for j in range(d // 2 + 1)
        )
    else:
        total = sum(
            comb(m, 2 * j + 1) * v_number(m - 2 * j - 1, n) * half ** (2 * j + 1)
            for j in range((d - 1) // 2 + 1)
        )
    if total.denominator != 1:
        raise ArithmeticError(
            f"v-number reconstruction for ({m}, {n}) is not integral: {total}"
        )
    return int(total)


def real_roots(m: int, n: int) -> RootClassification:
    """Classify the real z with S(m, n, z) = S(m, n).

    d <= 0: every real z qualifies.  d odd: only z = 0.  d even > 0:
    exactly z = 0 and z = n.  Simplicity of the roots is certified from
    the closed-form first-derivative values -m*S(m-1, n) at 0 and
    +m*S(m-1, n) at n, never from numerical root refinement.
    """
    d = _validate_pair(m, n, "real_roots")
    if d <= 0:
        return RootClassification(RootKind.ALL_REALS, False)
    deriv = kth_derivative(m, n, 1)
    at_zero = -m * stirling2(m - 1, n)
    certified = deriv(0) == at_zero and at_zero != 0
    if d % 2 == 1:
        return RootClassification(RootKind.ZERO_ONLY, certified)
    at_n = m * stirling2(m - 1, n)
    certified = certified and deriv(n) == at_n and at_n != 0
    return RootClassification(RootKind.ZERO_AND_N, certified)
