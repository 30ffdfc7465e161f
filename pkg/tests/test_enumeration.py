import io

import pytest

from straus.core import Triple, check_identity, next_boundary
from straus.enumeration import (
    ORACLE_LIMIT,
    SolutionSet,
    enumerate_fast,
    enumerate_oracle,
    write_solutions_csv,
)
from straus.sieve import PrimeRange, primes_in


class TestOracle:
    def test_17_gives_the_four_classics(self):
        assert enumerate_oracle(17).as_tuples() == [
            (5, 30, 510),
            (5, 34, 170),
            (6, 15, 510),
            (6, 17, 102),
        ]

    def test_p2_single_solution(self):
        assert enumerate_oracle(2).as_tuples() == [(1, 2, 2)]

    def test_7_contains_stated_solutions(self):
        got = enumerate_oracle(7).as_tuples()
        assert (3, 6, 14) in got
        assert (4, 4, 14) in got

    def test_7_full_set(self):
        # frozen from this oracle itself; guards against regressions
        assert enumerate_oracle(7).as_tuples() == [
            (2, 15, 210), (2, 16, 112), (2, 18, 63), (2, 21, 42),
            (2, 28, 28), (3, 6, 14), (4, 4, 14),
        ]

    def test_rejects_composite(self):
        with pytest.raises(ValueError):
            enumerate_oracle(15)

    def test_rejects_above_limit(self):
        with pytest.raises(ValueError, match="enumerate_fast"):
            enumerate_oracle(10_007)  # first prime above ORACLE_LIMIT


class TestFast:
    def test_17_matches_oracle(self):
        assert enumerate_fast(17).as_tuples() == enumerate_oracle(17).as_tuples()

    def test_193_contains_its_ib_solution(self):
        assert (50, 1930, 4825) in enumerate_fast(193).as_tuples()

    def test_71_contains_type_ii_example(self):
        assert (20, 284, 355) in enumerate_fast(71).as_tuples()

    def test_rejects_composite(self):
        with pytest.raises(ValueError):
            enumerate_fast(9240)

    @pytest.mark.parametrize("p", primes_in(PrimeRange(2, 150)))
    def test_equals_oracle_small(self, p):
        assert enumerate_fast(p).as_tuples() == enumerate_oracle(p).as_tuples()

    def test_every_solution_inside_positive_region(self):
        for p in primes_in(PrimeRange(2, 300)):
            for t in enumerate_fast(p):
                assert p < 4 * t.x <= 3 * p
                assert t.y >= next_boundary(p, t.x)
                assert check_identity(p, t.x, t.y, t.z)


class TestSolutionSet:
    def test_rejects_wrong_prime(self):
        with pytest.raises(ValueError):
            SolutionSet(17, (Triple(7, 3, 6, 14),))

    def test_rejects_out_of_order(self):
        t1 = Triple(17, 5, 30, 510)
        t2 = Triple(17, 5, 34, 170)
        with pytest.raises(ValueError):
            SolutionSet(17, (t2, t1))

    def test_pairs(self):
        assert enumerate_fast(17).pairs() == {(5, 30), (5, 34), (6, 15), (6, 17)}


class TestCsv:
    def test_rows_ascending(self):
        buf = io.StringIO()
        write_solutions_csv([enumerate_fast(17), enumerate_fast(2)], buf)
        lines = buf.getvalue().splitlines()
        assert lines[0] == "p,x,y,z"
        assert lines[1] == "2,1,2,2"
        assert lines[2] == "17,5,30,510"
        assert len(lines) == 6

    def test_writes_to_path(self, tmp_path):
        dest = tmp_path / "sols.csv"
        write_solutions_csv([enumerate_fast(2)], dest)
        assert dest.read_text() == "p,x,y,z\n2,1,2,2\n"
