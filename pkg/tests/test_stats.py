import io

import pytest

from straus.sieve import PrimeRange
from straus.stats import (
    DistTable,
    PerPrimeProportion,
    distribution,
    emit_csv,
    emit_gnuplot,
    range_summary,
    typeII_series,
)


class TestDistribution:
    def test_single_prime_17(self):
        table = distribution(PrimeRange(17, 17))
        assert table.total == 4
        assert table.counts == {1: 4, 2: 0, 3: 0, 4: 0, 5: 0}
        assert table.overflow == 0

    def test_71_has_an_offset_2_solution(self):
        table = distribution(PrimeRange(71, 71))
        assert table.counts[2] >= 1

    def test_range_to_500_frozen(self):
        # frozen from the oracle-verified enumerator
        table = distribution(PrimeRange(2, 500))
        assert table.total == 3084
        assert table.counts == {1: 3049, 2: 32, 3: 3, 4: 0, 5: 0}

    def test_totals_cross_check_series(self):
        table, series = range_summary(PrimeRange(2, 300))
        assert table.total == sum(row.n_solutions for row in series)

    def test_worker_count_invisible(self):
        r = PrimeRange(2, 400)
        assert range_summary(r, workers=1) == range_summary(r, workers=2)

    def test_counts_must_sum(self):
        with pytest.raises(ValueError):
            DistTable(PrimeRange(2, 10), {1: 1, 2: 0, 3: 0, 4: 0, 5: 0}, 0, 5)


class TestSeries:
    def test_17_record(self):
        (row,) = typeII_series(PrimeRange(17, 17))
        assert (row.p, row.n_solutions, row.n_type_ii) == (17, 4, 0)

    def test_71_has_type_ii(self):
        (row,) = typeII_series(PrimeRange(71, 71))
        assert row.n_type_ii >= 1

    def test_records_ascending(self):
        series = typeII_series(PrimeRange(2, 200))
        assert [r.p for r in series] == sorted(r.p for r in series)

    def test_validation(self):
        with pytest.raises(ValueError):
            PerPrimeProportion(17, 0, 0)
        with pytest.raises(ValueError):
            PerPrimeProportion(17, 2, 5)


class TestCsv:
    def test_distribution_rows(self):
        buf = io.StringIO()
        emit_csv(distribution(PrimeRange(17, 17)), buf)
        lines = buf.getvalue().splitlines()
        assert lines[0] == "i,count,proportion"
        assert lines[1] == "1,4,1.0000"
        assert lines[5] == "5,0,0.0000"
        assert lines[6] == "overflow,0,0.0000"

    def test_empty_range_header_only(self):
        buf = io.StringIO()
        emit_csv(distribution(PrimeRange(4000, 4000)), buf)
        assert buf.getvalue() == "i,count,proportion\n"

    def test_series_rows(self):
        buf = io.StringIO()
        emit_csv(typeII_series(PrimeRange(17, 17)), buf)
        assert buf.getvalue().splitlines()[1] == "17,4,0,0.0000"

    def test_deterministic_bytes(self, tmp_path):
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        emit_csv(distribution(PrimeRange(2, 200), workers=1), a)
        emit_csv(distribution(PrimeRange(2, 200), workers=2), b)
        assert a.read_bytes() == b.read_bytes()

    def test_gnuplot_two_columns(self):
        buf = io.StringIO()
        emit_gnuplot(distribution(PrimeRange(17, 17)), buf)
        assert buf.getvalue().splitlines()[0] == "1 1.0000"
