import math

import pytest

from rectcross import bench


def test_run_rows_and_csv():
    rows = bench.run([8, 16], trials=2, ops=("cr", "batch_add"), backend="python")
    assert len(rows) == 2 * 2 * 2
    assert all(t > 0 for *_, t in rows)
    assert bench.to_csv(rows).splitlines()[0] == "n,op,trial,nanos"


def test_slope_of_synthetic_quadratic():
    rows = [(n, "x", 0, 5 * n * n) for n in (100, 200, 400, 800)]
    assert bench.loglog_slope(rows, "x") == pytest.approx(2.0)
    with pytest.raises(ValueError):
        bench.loglog_slope(rows[:1], "x")


def test_amortized_ratio():
    rows = [(100, "cr", 0, 1000), (100, "batch_add", 0, 3000),
            (100, "cr", 1, 1200), (100, "batch_add", 1, 3000)]
    assert bench.amortized_ratios(rows) == {100: pytest.approx(3000 / 1100)}


def test_unknown_op():
    with pytest.raises(ValueError):
        bench.run([8], trials=1, ops=("sort",))


def test_log_n_factor_is_visible_in_slope():
    rows = [(n, "y", 0, n * n * math.log(n)) for n in (256, 512, 1024, 2048, 4096)]
    assert 2.0 < bench.loglog_slope(rows, "y") < 2.2
