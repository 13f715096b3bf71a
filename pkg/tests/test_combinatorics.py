"""Tests for the (weight, value) rank/unrank bijection.

Expected values are frozen from two independent sources: hand-evaluated
binomial sums for the worked example, and the brute-force enumeration
oracle for everything else.
"""

import time

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from schucoder.combinatorics import (
    BitString,
    binom,
    block_bounds,
    index_chain,
    index_in_block,
    rank,
    rank_by_enumeration,
    unrank,
)


class TestBinom:
    def test_standard_value(self):
        assert binom(10, 5) == 252

    def test_out_of_range_is_zero(self):
        assert binom(4, 5) == 0
        assert binom(4, -1) == 0

    def test_identity_cases(self):
        assert binom(3, 0) == 1
        assert binom(0, 0) == 1
        assert binom(7, 7) == 1

    def test_n_cap_enforced(self):
        assert binom(64, 1) == 64
        with pytest.raises(ValueError):
            binom(65, 1)
        with pytest.raises(ValueError):
            binom(-1, 0)

    def test_max_supported_exact(self):
        # C(64, 32) must be exact (fits in 64 bits unsigned).
        assert binom(64, 32) == 1832624140942590534


class TestBitString:
    def test_from_text_roundtrip(self):
        x = BitString.from_text("0010011011")
        assert x.n == 10
        assert x.value == 0b0010011011
        assert str(x) == "0010011011"
        assert x.weight == 5

    def test_bit_indexing_lsb_first(self):
        x = BitString.from_text("100")  # x_2 = 1, x_1 = x_0 = 0
        assert x.bit(2) == 1
        assert x.bit(0) == 0

    def test_rejects_bad_input(self):
        with pytest.raises(ValueError):
            BitString.from_text("01x0")
        with pytest.raises(ValueError):
            BitString(4, 16)
        with pytest.raises(ValueError):
            BitString(0, 0)


class TestWorkedExample:
    """The n=10 worked example: x = 0010011011."""

    X = BitString.from_text("0010011011")

    def test_index_chain_exact(self):
        assert index_chain(self.X) == [21, 1, 1, 0]

    def test_index_in_block(self):
        assert index_in_block(self.X) == 23

    def test_block_offset(self):
        assert block_bounds(10, 5) == (386, 638)

    def test_rank(self):
        assert rank(self.X) == 386 + 23 == 409

    def test_oracle_agrees(self):
        assert rank_by_enumeration(self.X) == 409

    def test_unrank_inverts(self):
        assert unrank(409, 10) == self.X

    def test_runtime_under_a_millisecond(self):
        t0 = time.perf_counter()
        for _ in range(10):
            x = BitString.from_text("0010011011")
            assert index_chain(x) == [21, 1, 1, 0] and rank(x) == 409
        elapsed = (time.perf_counter() - t0) / 10
        assert elapsed < 1e-3


class TestSmallCases:
    def test_smallest_of_weight_has_index_zero(self):
        assert index_in_block(BitString.from_text("011")) == 0
        assert index_chain(BitString.from_text("011")) == [0]

    def test_zero_string(self):
        for n in (1, 4, 12):
            assert rank(BitString(n, 0)) == 0
            assert unrank(0, n).value == 0

    def test_all_ones_is_last(self):
        for n in (1, 3, 8):
            assert rank(BitString(n, (1 << n) - 1)) == (1 << n) - 1

    def test_weight_one_block(self):
        # Single-one strings occupy ranks 1..n in ascending bit position.
        assert block_bounds(10, 1) == (1, 11)
        assert unrank(3, 4) == BitString.from_text("0100")
        assert rank(BitString.from_text("0001")) == 1

    def test_weight_zero_block(self):
        assert block_bounds(10, 0) == (0, 1)

    def test_oracle_small(self):
        assert rank_by_enumeration(BitString.from_text("0001")) == 1
        assert rank_by_enumeration(BitString.from_text("1111")) == 15


class TestBijection:
    def test_rank_is_bijective_small(self):
        for n in range(1, 9):
            images = {rank(BitString(n, v)) for v in range(1 << n)}
            assert images == set(range(1 << n))

    def test_matches_oracle_exhaustively(self):
        for n in range(1, 11):
            order = sorted(range(1 << n), key=lambda v: (v.bit_count(), v))
            expected = {v: i for i, v in enumerate(order)}
            for v in range(1 << n):
                assert rank(BitString(n, v)) == expected[v]

    def test_round_trip_exhaustive(self):
        for n in range(1, 11):
            for v in range(1 << n):
                x = BitString(n, v)
                assert unrank(rank(x), n) == x

    def test_order_preservation(self):
        n = 7
        pairs = [(a, b) for a in range(1 << n) for b in range(1 << n) if a != b]
        for a, b in pairs[:2000]:
            xa, xb = BitString(n, a), BitString(n, b)
            if (xa.weight, a) < (xb.weight, b):
                assert rank(xa) < rank(xb)

    def test_block_containment(self):
        for n in (5, 9):
            for v in range(1 << n):
                x = BitString(n, v)
                lo, hi = block_bounds(n, x.weight)
                assert lo <= rank(x) < hi

    def test_recursion_consistency(self):
        # Stripping the leading zeros and the first 1 at position j reduces
        # the in-block index by C(j, weight).
        for n in (6, 10):
            for v in range(1, 1 << n):
                x = BitString(n, v)
                j = v.bit_length() - 1
                rest = v & ((1 << j) - 1)
                sub = BitString(j, rest) if j else None
                drop = binom(j, x.weight)
                tail = index_in_block(sub) if sub else 0
                assert index_in_block(x) == drop + tail

    def test_chain_sums_to_index(self):
        for n in (8,):
            for v in range(1 << n):
                x = BitString(n, v)
                assert sum(index_chain(x)) == index_in_block(x)


@given(st.integers(min_value=1, max_value=12), st.data())
@settings(max_examples=200, deadline=None)
def test_property_round_trip(n, data):
    v = data.draw(st.integers(min_value=0, max_value=(1 << n) - 1))
    x = BitString(n, v)
    assert unrank(rank(x), n) == x
    assert rank(x) == rank_by_enumeration(x)


@given(st.integers(min_value=13, max_value=16), st.data())
@settings(max_examples=40, deadline=None)
def test_property_large_n_matches_closed_form_shift(n, data):
    # For larger n, spot-check rank against the recursion-based reduction
    # instead of the full enumeration oracle.
    v = data.draw(st.integers(min_value=1, max_value=(1 << n) - 1))
    x = BitString(n, v)
    j = v.bit_length() - 1
    rest = BitString(j, v & ((1 << j) - 1)) if j else None
    tail = index_in_block(rest) if rest else 0
    assert index_in_block(x) == binom(j, x.weight) + tail
