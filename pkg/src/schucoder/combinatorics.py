"""Exact rank/unrank bijection on n-bit strings ordered by (weight, value).

Strings are ordered first by Hamming weight, then numerically within each
weight class.  ``rank`` maps a string to its position in that order and is
the function the reversible coder computes in place; ``unrank`` is its
inverse.  ``rank_by_enumeration`` is an independent brute-force oracle used
to validate both.

All arithmetic is exact integer arithmetic.  Block lengths are capped at 64
bits so every binomial coefficient and partial sum stays well inside exact
64-bit range at the sizes the compiler handles.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

MAX_BITS = 64


def binom(n: int, k: int) -> int:
    """C(n, k), with C(n, k) = 0 whenever k < 0 or k > n.

    ``n`` must lie in [0, 64]; larger values raise ValueError rather than
    risk silent overflow in fixed-width consumers of these tables.
    """
    if n < 0 or n > MAX_BITS:
        raise ValueError(f"binom: n={n} outside supported range [0, {MAX_BITS}]")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


@dataclass(frozen=True)
class BitString:
    """A fixed-length binary string.

    ``value`` is the integer with bit i of ``value`` equal to x_i (x_0 least
    significant).  Printing is most-significant-first, so the constructor
    ``BitString.from_text("0010011011")`` reads left-to-right from the usual
    layout.
    """

    n: int
    value: int

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_BITS:
            raise ValueError(f"BitString: length {self.n} outside [1, {MAX_BITS}]")
        if not 0 <= self.value < (1 << self.n):
            raise ValueError(f"BitString: value {self.value} outside [0, 2^{self.n})")

    @classmethod
    def from_text(cls, text: str) -> "BitString":
        """Parse a most-significant-first string of 0s and 1s."""
        if not text or set(text) - {"0", "1"}:
            raise ValueError(f"not a binary string: {text!r}")
        return cls(len(text), int(text, 2))

    @property
    def weight(self) -> int:
        """Number of 1 bits."""
        return self.value.bit_count()

    def bit(self, i: int) -> int:
        """Bit x_i (0 = least significant)."""
        return (self.value >> i) & 1

    def __str__(self) -> str:
        return format(self.value, f"0{self.n}b")


def block_bounds(n: int, m: int) -> tuple[int, int]:
    """Half-open rank range [lo, hi) occupied by the weight-m strings.

    lo = sum of C(n, i) for i < m; hi − lo = C(n, m).
    """
    if not 0 <= m <= n:
        raise ValueError(f"block_bounds: weight {m} outside [0, {n}]")
    lo = sum(binom(n, i) for i in range(m))
    return lo, lo + binom(n, m)


def index_chain(x: BitString) -> list[int]:
    """The per-bit summands of ``index_in_block``, highest bit first.

    Scanning from the top, each 1 bit at position j contributes
    C(j, ones(j..0)); the scan stops with a literal terminal 0 as soon as
    the remaining suffix is the smallest string of its weight (contribution
    zero), matching the shape of the worked recursion.
    """
    chain: list[int] = []
    remaining = x.value
    for j in range(x.n - 1, -1, -1):
        if remaining == _smallest_of_weight(remaining.bit_count()):
            break
        if (remaining >> j) & 1:
            chain.append(binom(j, remaining.bit_count()))
            remaining &= (1 << j) - 1
    chain.append(0)
    return chain


def _smallest_of_weight(m: int) -> int:
    """Smallest integer with m bits set: 0…011…1."""
    return (1 << m) - 1


def index_in_block(x: BitString) -> int:
    """Position of x among the strings of its own weight (0-based).

    Closed form: the sum over set bits x_j (j ≥ 1) of C(j, ones(j..0)),
    where ones(j..0) counts the set bits at or below j.
    """
    total = 0
    ones = x.weight
    for j in range(x.n - 1, 0, -1):
        if x.bit(j):
            total += binom(j, ones)
            ones -= 1
    return total


def rank(x: BitString) -> int:
    """Position of x among all n-bit strings ordered by (weight, value)."""
    lo, _ = block_bounds(x.n, x.weight)
    return lo + index_in_block(x)


def unrank(y: int, n: int) -> BitString:
    """The unique x with rank(x) = y.

    Finds the weight class by a linear scan of the block bounds, then
    recovers bits from the top: bit j is set exactly when the remaining
    in-block index reaches C(j, remaining weight).
    """
    if not 0 <= y < (1 << n):
        raise ValueError(f"unrank: code {y} outside [0, 2^{n})")
    m = 0
    lo = 0
    while y >= lo + binom(n, m):
        lo += binom(n, m)
        m += 1
    v = y - lo
    value = 0
    remaining = m
    for j in range(n - 1, -1, -1):
        if remaining == 0:
            break
        c = binom(j, remaining)
        if v >= c:
            value |= 1 << j
            v -= c
            remaining -= 1
    return BitString(n, value)


def rank_by_enumeration(x: BitString) -> int:
    """Brute-force oracle: sort all 2^n strings by (weight, value).

    Only for n ≤ 16 (the list has 2^n entries).
    """
    if x.n > 16:
        raise ValueError(f"rank_by_enumeration: n={x.n} too large to enumerate")
    order = sorted(range(1 << x.n), key=lambda v: (v.bit_count(), v))
    return order.index(x.value)
