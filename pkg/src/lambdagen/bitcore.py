"""Word-level bit primitives.

Bit order convention: in a code of width ``w`` the leftmost matrix
position (column 0 of a row, or row 0 of a column) is bit ``w - 1``.
"""

from __future__ import annotations

from typing import List

MAX_WIDTH = 64


def popcount(x: int) -> int:
    """Number of set bits in ``x``."""
    return x.bit_count()


def popcount_portable(x: int) -> int:
    # Kernighan: one iteration per set bit
    if x < 0:
        raise ValueError("popcount of a negative value is undefined")
    count = 0
    while x:
        x &= x - 1
        count += 1
    return count


def bit_at(x: int, j: int, width: int) -> int:
    """Return bit ``j`` of ``x``; ``j = width - 1`` is the leftmost position."""
    if not 0 <= j < width:
        raise ValueError(f"bit position {j} outside width {width}")
    return (x >> j) & 1


def next_same_popcount(x: int) -> int:
    """Smallest integer greater than ``x`` with the same number of set bits."""
    low = x & -x
    ripple = x + low
    return ripple | (((x ^ ripple) >> 2) // low)


def _check_width(n: int, k: int) -> None:
    if not 0 <= n <= MAX_WIDTH:
        raise ValueError(f"width n={n} outside supported range 0..{MAX_WIDTH}")
    if not 0 <= k <= n:
        raise ValueError(f"weight k={k} must satisfy 0 <= k <= n={n}")


def k_subset_codes(n: int, k: int) -> List[int]:
    """All ``n``-bit integers with exactly ``k`` set bits, ascending.

    Walks Gosper's next-same-popcount step from ``2**k - 1`` instead of
    recursing on the leading bit; the result has ``comb(n, k)`` entries.
    """
    _check_width(n, k)
    if k == 0:
        return [0]
    limit = 1 << n
    x = (1 << k) - 1
    codes = []
    while x < limit:
        codes.append(x)
        x = next_same_popcount(x)
    return codes
