import csv
import io

from lrskit import CSV_COLUMNS, SUITES, records_to_csv, run_suite


def parse_csv(text):
    lines = text.splitlines()
    meta = [ln for ln in lines if ln.startswith("#")]
    body = [ln for ln in lines if not ln.startswith("#")]
    rows = list(csv.DictReader(io.StringIO("\n".join(body))))
    return meta, rows


def test_suite_names():
    assert SUITES == ("scaling-r", "scaling-n", "dp-vs-mld")


def test_csv_layout():
    records = run_suite("dp-vs-mld", seed=5, reps=1)
    text = records_to_csv(records, "dp-vs-mld", 5)
    meta, rows = parse_csv(text)
    assert meta[0] == "# suite=dp-vs-mld seed=5"
    assert meta[1] == "# field_poly=x^64+x^4+x^3+x+1 rng=numpy-PCG64"
    header = [ln for ln in text.splitlines() if not ln.startswith("#")][0]
    assert header.split(",") == CSV_COLUMNS
    assert len(rows) == len(records)


def test_dp_vs_mld_rows_agree():
    records = run_suite("dp-vs-mld", seed=7, reps=2)
    rows = [r.row() for r in records]
    dp_rows = [r for r in records if r.solver == "dp"]
    mld_rows = [r for r in records if r.solver == "mld"]
    assert len(dp_rows) == len(mld_rows) == 2
    assert all(r.verdict == "exact" for r in dp_rows)
    assert all(r.verdict == "agree" for r in mld_rows)
    for rec in records:
        assert rec.seed is not None
        assert rec.wall_ms >= 0
    assert all(len(row) == len(CSV_COLUMNS) for row in rows)


def test_scaling_n_rows():
    records = run_suite("scaling-n", seed=3, reps=1)
    assert [r.n for r in records] == [10, 20, 30, 40]
    assert all(r.solver == "mld" for r in records)
    assert all(r.r == 4 for r in records)
    for rec in records:
        if rec.verdict == "yes":
            assert rec.length == rec.k and rec.length >= rec.r
        else:
            assert rec.verdict == "none" and rec.length == 0 and rec.k is None


def test_records_are_reproducible():
    one = run_suite("dp-vs-mld", seed=9, reps=1)
    two = run_suite("dp-vs-mld", seed=9, reps=1)
    assert [r.length for r in one] == [r.length for r in two]
    assert [r.verdict for r in one] == [r.verdict for r in two]


def test_parallel_matches_serial():
    serial = run_suite("dp-vs-mld", seed=4, reps=2)
    parallel = run_suite("dp-vs-mld", seed=4, reps=2, parallel=True)
    assert [r.length for r in serial] == [r.length for r in parallel]
    assert [r.verdict for r in serial] == [r.verdict for r in parallel]
