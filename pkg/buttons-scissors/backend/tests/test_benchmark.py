import csv
import json

import pytest
from pydantic import ValidationError

from bench.benchmark import CSV_COLUMNS, SuiteEntry, SuiteSpec, records_to_csv, run_benchmark, write_csv
from bench.errors import SuiteError
from solver.errors import SolverError


def counterexample_suite(*sizes, k=(2,)):
    return SuiteSpec(
        name="cx",
        entries=[SuiteEntry(id=f"cx{n}", counterexample=n, k=list(k)) for n in sizes],
    )


def read_csv(text):
    lines = text.splitlines()
    return lines[0], list(csv.DictReader(lines[1:]))


class TestSuiteModels:
    def test_exactly_one_source(self):
        with pytest.raises(ValidationError):
            SuiteEntry(counterexample=4, board_file="b.txt", k=[1])
        with pytest.raises(ValidationError):
            SuiteEntry(k=[1])

    def test_budgets(self):
        with pytest.raises(ValidationError):
            SuiteEntry(counterexample=4, k=[])
        with pytest.raises(ValidationError):
            SuiteEntry(counterexample=4, k=[-1])

    def test_load(self, tmp_path):
        path = tmp_path / "suite.json"
        path.write_text(json.dumps({
            "name": "mixed",
            "entries": [
                {"params": {"rows": 3, "cols": 3, "colors": 2, "density": "1/2", "seed": 1}, "k": [1, 2]},
                {"counterexample": 10, "k": [2]},
            ],
        }))
        suite = SuiteSpec.load(str(path))
        assert suite.name == "mixed"
        assert suite.entries[0].params.density == 0.5

    def test_load_errors(self, tmp_path):
        with pytest.raises(SuiteError):
            SuiteSpec.load(str(tmp_path / "missing.json"))
        bad = tmp_path / "bad.json"
        bad.write_text('{"entries": [{"k": [1]}]}')
        with pytest.raises(SuiteError):
            SuiteSpec.load(str(bad))


class TestRunBenchmark:
    def test_empty_suite(self):
        records = run_benchmark(SuiteSpec(name="empty"))
        assert records == []
        header, rows = read_csv(records_to_csv(records))
        assert header == "# schema=bench-v1 prng=numpy.PCG64"
        assert rows == []
        assert records_to_csv(records).splitlines()[1] == ",".join(CSV_COLUMNS)

    def test_counterexample_family(self):
        records = run_benchmark(counterexample_suite(4, 10, 50))
        assert [r.instance_id for r in records] == ["cx4-k2", "cx10-k2", "cx50-k2"]
        assert all(r.answer == "YES" for r in records)

    def test_kernel_sizes_never_grow(self):
        suite = SuiteSpec(entries=[
            SuiteEntry(params={"rows": 5, "cols": 4, "colors": 2, "density": 0.6, "seed": 3}, k=[1, 2, 3]),
        ])
        records = run_benchmark(suite)
        assert [r.instance_id for r in records] == ["suite-1-k1", "suite-1-k2", "suite-1-k3"]
        for r in records:
            assert (r.n, r.m) == (5, 4)
            assert r.kernel_rows <= r.n and r.kernel_cols <= r.m and r.kernel_buttons <= r.buttons
            assert r.answer in ("YES", "NO")

    def test_board_file_relative_to_suite(self, tmp_path):
        (tmp_path / "single.txt").write_text("1 3\n1 0 1\n")
        suite = SuiteSpec(entries=[
            SuiteEntry(id="file", board_file="single.txt", k=[1]),
            SuiteEntry(id="missing", board_file="nope.txt", k=[1]),
        ])
        records = run_benchmark(suite, base_dir=str(tmp_path))
        assert records[0].answer == "YES"
        assert records[1].answer == "ERROR"
        assert records[1].error

    def test_solver_failure_is_recorded(self, monkeypatch):
        import bench.benchmark as benchmark

        real_solve = benchmark.solve

        def failing_solve(inst, **kwargs):
            if inst.board.rows == 10:
                raise SolverError("证书提升失败")
            return real_solve(inst, **kwargs)

        monkeypatch.setattr(benchmark, "solve", failing_solve)
        records = run_benchmark(counterexample_suite(4, 10, 50), workers=1)
        assert [r.answer for r in records] == ["YES", "ERROR", "YES"]
        failed = records[1]
        assert failed.error == "证书提升失败"
        assert (failed.n, failed.m, failed.buttons) == (10, 2, 10)
        assert failed.nodes_explored == 0
        header, rows = read_csv(records_to_csv(records))
        assert rows[1]["answer"] == "ERROR" and rows[1]["error"] == "证书提升失败"

    def test_parallel_keeps_suite_order(self):
        suite = counterexample_suite(4, 10, 50, k=(1, 2))
        records = run_benchmark(suite, workers=2)
        assert [r.instance_id for r in records] == ["cx4-k1", "cx4-k2", "cx10-k1", "cx10-k2", "cx50-k1", "cx50-k2"]
        assert [r.answer for r in records] == ["NO", "YES"] * 3

    def test_write_csv(self, tmp_path):
        out = tmp_path / "out.csv"
        write_csv(run_benchmark(counterexample_suite(4, k=(1, 2))), str(out))
        header, rows = read_csv(out.read_text())
        assert header.startswith("# schema=bench-v1")
        assert [row["answer"] for row in rows] == ["NO", "YES"]
        assert rows[0]["error"] == ""
        assert list(rows[0]) == CSV_COLUMNS
