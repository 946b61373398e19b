"""Parity of S(m, n) for even d = m - n, without computing S(m, n).

After reducing n to the canonical label ell(n) = 1 + 4*floor((n-1)/4),
the parities arrange into an infinite mod-2 Pascal matrix ("tapestry")
whose entry (i, j) is C(i+j, j) mod 2; its support is the Sierpinski
gasket.  Rows are stored as packed bit masks (Python ints), with bit j of
row i holding entry (i, j).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from pathlib import Path

from .arith import ell
from .stirling import stirling2


@dataclass(frozen=True)
class ParityMatrix:
    """(size x size) bit matrix; rows[i] packs entries (i, 0..size-1)."""

    size: int
    rows: tuple

    def entry(self, i: int, j: int) -> int:
        return (self.rows[i] >> j) & 1

    def row_bits(self, i: int) -> list[int]:
        return [(self.rows[i] >> j) & 1 for j in range(self.size)]


@dataclass(frozen=True)
class ParityFrequency:
    """One full period of a tapestry row; length is a power of two."""

    row_index: int
    bits: tuple


class ReductionOrder(Enum):
    ROW_FIRST = "RowFirst"
    COLUMN_FIRST = "ColumnFirst"


def _require_even_nonneg_d(m: int, n: int, where: str) -> int:
    if n < 1:
        raise ValueError(f"{where} requires n >= 1, got n={n}")
    d = m - n
    if d < 0 or d % 2:
        raise ValueError(f"{where} requires even d = m - n >= 0, got d={d}")
    return d


def parity_even_d(m: int, n: int) -> int:
    """S(m, n) mod 2 for even d >= 0, in a handful of word operations.

    S(m, n) is even exactly when floor((n-1)/4) and d/2 share a set
    binary digit (the carry criterion for binomial parity); no Stirling
    number is computed.
    """
    d = _require_even_nonneg_d(m, n, "parity_even_d")
    i = (n - 1) // 4
    j = d // 2
    return 1 if (i & j) == 0 else 0


def ell_reduce_parity(m: int, n: int) -> int:
    """Table-backed parity oracle: S(ell(n) + d, ell(n)) mod 2."""
    d = _require_even_nonneg_d(m, n, "ell_reduce_parity")
    base = ell(n)
    return stirling2(base + d, base) % 2


def parity_recurrence_check(n: int, d: int) -> int:
    """Parity of S(n+d, n) via the row-above recurrence, for n > 4.

    Computes sum_{j=0}^{d/2} S(ell(n-4) + (d-2j), ell(n-4)) mod 2 from the
    exact table; must agree with parity_even_d(n+d, n).
    """
    if n <= 4:
        raise ValueError(f"parity_recurrence_check requires n > 4, got n={n}")
    if d < 0 or d % 2:
        raise ValueError(f"parity_recurrence_check requires even d >= 0, got d={d}")
    base = ell(n - 4)
    total = sum(stirling2(base + (d - 2 * j), base) for j in range(d // 2 + 1))
    return total % 2


def kummer_entry(i: int, j: int) -> int:
    """Closed form for tapestry entry (i, j): 1 iff i and j share no set bit."""
    if i < 0 or j < 0:
        raise ValueError(f"kummer_entry requires i, j >= 0, got ({i}, {j})")
    return 1 if (i & j) == 0 else 0


def build_tapestry(n_max: int) -> ParityMatrix:
    """Tapestry P_N for N = n_max, from its defining recurrence.

    Row 0 and column 0 are all ones; each later entry is the mod-2 sum of
    its upper and left neighbours, i.e. each row is the prefix XOR of the
    row above (computed with the doubling shift trick, so a whole row
    costs O(log N) big-int operations).
    """
    if n_max < 0:
        raise ValueError(f"build_tapestry requires N >= 0, got {n_max}")
    size = n_max + 1
    mask = (1 << size) - 1
    rows = [mask]
    for _ in range(n_max):
        x = rows[-1]
        shift = 1
        while shift < size:
            x ^= x << shift
            shift <<= 1
        rows.append(x & mask)
    return ParityMatrix(size=size, rows=tuple(rows))


def row_period(i: int) -> int:
    """Minimal period T(R_i) of tapestry row i: 2**(msb+1), and 1 for i = 0."""
    if i < 0:
        raise ValueError(f"row_period requires i >= 0, got i={i}")
    if i == 0:
        return 1  # constant row of ones; the only consistent extension
    return 1 << i.bit_length()


def column_period(j: int) -> int:
    """Minimal period of tapestry column j; equals row_period by symmetry."""
    return row_period(j)


def reduced_indices(i: int, j: int, order: ReductionOrder) -> tuple[int, int]:
    """Fold (i, j) by the row/column periods without changing the entry."""
    if i < 0 or j < 0:
        raise ValueError(f"reduced_indices requires i, j >= 0, got ({i}, {j})")
    if order is ReductionOrder.ROW_FIRST:
        j1 = j % row_period(i)
        i1 = i % column_period(j1)
        return i1, j1
    if order is ReductionOrder.COLUMN_FIRST:
        i2 = i % column_period(j)
        j2 = j % row_period(i2)
        return i2, j2
    raise ValueError(f"unknown reduction order: {order!r}")


def parity_frequency(i: int) -> ParityFrequency:
    """The first T(R_i) entries of row i; distinct rows have distinct frequencies."""
    period = row_period(i)
    return ParityFrequency(
        row_index=i, bits=tuple(kummer_entry(i, j) for j in range(period))
    )


def det_mod2(matrix: ParityMatrix) -> int:
    """Determinant over the two-element field, by elimination on packed rows."""
    rows = list(matrix.rows)
    size = matrix.size
    for col in range(size):
        pivot = next((r for r in range(col, size) if (rows[r] >> col) & 1), None)
        if pivot is None:
            return 0
        rows[col], rows[pivot] = rows[pivot], rows[col]
        for r in range(col + 1, size):
            if (rows[r] >> col) & 1:
                rows[r] ^= rows[col]
    return 1


def pbm_bytes(matrix: ParityMatrix) -> bytes:
    """Plain PBM (P1) image of the matrix: header, then rows of 0/1.

    Row i of the image is row i of the matrix (top row = row 0), column j
    is entry j counted from the left, and 1 marks a one entry.
    """
    lines = ["P1", f"{matrix.size} {matrix.size}"]
    for i in range(matrix.size):
        lines.append(" ".join(str((matrix.rows[i] >> j) & 1) for j in range(matrix.size)))
    return ("\n".join(lines) + "\n").encode("ascii")


def write_pbm(matrix: ParityMatrix, path) -> None:
    Path(path).write_bytes(pbm_bytes(matrix))
