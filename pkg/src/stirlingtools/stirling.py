"""Exact Stirling numbers of both kinds.

Two independent computation paths are kept on purpose: the standard
recurrence (memoized triangle) and the alternating-sum formula, so each
can serve as an oracle for the other.
"""

from __future__ import annotations

from math import comb, factorial


class StirlingTable:
    """Lazily grown triangles of S(m, n) and of the signed s(n, k).

    Rows are appended monotonically and never mutated afterwards, so a row
    that has been published may be read concurrently while the writer
    extends the table.
    """

    def __init__(self):
        self._second = [[1]]  # row m holds S(m, n) for 0 <= n <= m
        self._first = [[1]]  # row n holds s(n, k) for 0 <= k <= n

    def _grow_second(self, m: int) -> None:
        while len(self._second) <= m:
            prev = self._second[-1]
            mm = len(self._second)
            row = [0] * (mm + 1)
            for n in range(1, mm + 1):
                above = prev[n] if n < len(prev) else 0
                row[n] = n * above + prev[n - 1]
            self._second.append(row)

    def _grow_first(self, n: int) -> None:
        while len(self._first) <= n:
            prev = self._first[-1]
            nn = len(self._first)
            row = [0] * (nn + 1)
            for k in range(nn + 1):
                left = prev[k - 1] if k >= 1 else 0
                above = prev[k] if k < len(prev) else 0
                row[k] = left - (nn - 1) * above
            self._first.append(row)

    def stirling2(self, m: int, n: int) -> int:
        """S(m, n) via the recurrence S(m,n) = n*S(m-1,n) + S(m-1,n-1)."""
        if m < 0 or n < 0:
            raise ValueError(f"stirling2 requires m, n >= 0, got ({m}, {n})")
        if n > m:
            return 0
        self._grow_second(m)
        return self._second[m][n]

    def stirling1_signed(self, n: int, k: int) -> int:
        """Signed s(n, k): the coefficient of z**k in the falling factorial (z)_n."""
        if n < 0 or k < 0:
            raise ValueError(f"stirling1_signed requires n, k >= 0, got ({n}, {k})")
        if k > n:
            return 0
        self._grow_first(n)
        return self._first[n][k]

    def b_number(self, m: int, n: int) -> int:
        """B(m, n) = n! * S(m, n), the number of surjections m-set -> n-set."""
        return factorial(n) * self.stirling2(m, n)


_SHARED = StirlingTable()


def stirling2(m: int, n: int) -> int:
    return _SHARED.stirling2(m, n)


def stirling1_signed(n: int, k: int) -> int:
    return _SHARED.stirling1_signed(n, k)


def b_number(m: int, n: int) -> int:
    return _SHARED.b_number(m, n)


def stirling2_by_sum(m: int, n: int) -> int:
    """S(m, n) from the alternating binomial sum, dividing by n! exactly.

    Independent of the recurrence path; raises if the division leaves a
    remainder, which would indicate an implementation bug.
    """
    if not 1 <= n <= m:
        raise ValueError(f"stirling2_by_sum requires 1 <= n <= m, got ({m}, {n})")
    total = sum(comb(n, k) * (-1) ** k * (n - k) ** m for k in range(n + 1))
    quotient, remainder = divmod(total, factorial(n))
    if remainder:
        raise ArithmeticError(
            f"alternating sum for ({m}, {n}) is not divisible by {n}!"
        )
    return quotient


def lemma1_expand(n: int, d: int, k: int) -> int:
    """Telescoped d-step form of the recurrence for S(n+d, n).

    Returns n**(d-k+1) * S(n+k-1, n) + sum_{j=0}^{d-k} n**j * S(n-1+(d-j), n-1),
    which must equal stirling2(n+d, n) for every k in [1, d].
    """
    if n < 2:
        raise ValueError(f"lemma1_expand requires n >= 2, got n={n}")
    if d < 1:
        raise ValueError(f"lemma1_expand requires d >= 1, got d={d}")
    if not 1 <= k <= d:
        raise ValueError(f"lemma1_expand requires 1 <= k <= d, got k={k}")
    head = n ** (d - k + 1) * stirling2(n + k - 1, n)
    tail = sum(n**j * stirling2(n - 1 + (d - j), n - 1) for j in range(d - k + 1))
    return head + tail
