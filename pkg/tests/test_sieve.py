"""Tests for the segmented sieves and the squarefree bitmap."""

import logging

import numpy as np
import pytest
from sympy import factorint, primerange

from census.sieve import (
    iter_prime_segments,
    primes_upto,
    segment_bounds,
    sieve_factorizations,
    simple_sieve,
)
from census.squarefree import squarefree_sieve
from groups.errors import ConfigError, DomainError


class TestSegmentBounds:
    def test_covers_range_without_overlap(self):
        bounds = segment_bounds(100, 7)
        assert bounds[0][0] == 1
        assert bounds[-1][1] == 101
        assert all(a[1] == b[0] for a, b in zip(bounds, bounds[1:]))
        assert all(hi - lo <= 7 for lo, hi in bounds)

    def test_cut_at_checkpoints(self):
        bounds = segment_bounds(100, 64, checkpoints=[10, 50])
        ends = [hi - 1 for _, hi in bounds]
        assert 10 in ends and 50 in ends and 100 in ends

    def test_rejects_bad_config(self):
        with pytest.raises(ConfigError):
            segment_bounds(0, 10)
        with pytest.raises(ConfigError):
            segment_bounds(10, 1)


class TestPrimes:
    def test_simple_sieve(self):
        assert simple_sieve(30).tolist() == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
        assert simple_sieve(1).size == 0

    @pytest.mark.parametrize("segment_size", [2, 3, 64, 1000, 2**22])
    def test_segmented_matches_sympy(self, segment_size):
        assert primes_upto(5000, segment_size).tolist() == list(primerange(2, 5001))

    def test_segments_are_increasing(self):
        chunks = [primes for _, primes in iter_prime_segments(10_000, 333)]
        joined = np.concatenate(chunks)
        assert np.all(np.diff(joined) > 0)


class TestSieveFactorizations:
    def test_small_stream(self):
        stream = [(n, f.pairs) for n, f in sieve_factorizations(6, 4)]
        assert stream == [
            (1, ()),
            (2, ((2, 1),)),
            (3, ((3, 1),)),
            (4, ((2, 2),)),
            (5, ((5, 1),)),
            (6, ((2, 1), (3, 1))),
        ]

    def test_limit_one(self):
        assert [(n, f.pairs) for n, f in sieve_factorizations(1, 10)] == [(1, ())]

    def test_matches_factorint(self):
        for n, f in sieve_factorizations(3000, 128):
            assert dict(f.pairs) == factorint(n)
        found = dict(sieve_factorizations(1000, 97))
        assert found[720].pairs == ((2, 4), (3, 2), (5, 1))


class TestSquarefree:
    def test_examples(self):
        table = squarefree_sieve(100)
        assert not table.is_squarefree(4)
        assert table.is_squarefree(30)
        assert not table.is_squarefree(49)
        assert not table(12)
        assert table(10)
        assert table(1)

    def test_matches_factorint(self):
        table = squarefree_sieve(5000)
        for m in range(1, 5001):
            assert table(m) == all(e == 1 for e in factorint(m).values()), m

    def test_lookup_vectorized(self):
        table = squarefree_sieve(1000)
        values = np.arange(1, 1001)
        assert table.lookup(values).tolist() == [table(int(v)) for v in values]

    def test_out_of_range(self):
        table = squarefree_sieve(50)
        with pytest.raises(DomainError):
            table(51)
        with pytest.raises(DomainError):
            table(0)


def test_segment_layout_is_logged(caplog):
    with caplog.at_level(logging.DEBUG, logger="census.sieve"):
        segment_bounds(100, 30, [50])
    assert "[sieve] 4 segment(s) up to 100, 2 cut(s)" in caplog.text
