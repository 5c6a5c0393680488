import pytest

from fingerbound.cli import main
from fingerbound.workloads import WorkloadSpec, generate, write_trace


@pytest.fixture
def trace(tmp_path):
    path = tmp_path / "trace.txt"
    write_trace(generate(WorkloadSpec("walk", 32, 60, seed=4, d=3)), path)
    return str(path)


@pytest.fixture
def tiny_trace(tmp_path):
    path = tmp_path / "tiny.txt"
    path.write_text("3 3\n1\n2\n3\n")
    return str(path)


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestGen:
    def test_writes_trace_file(self, capsys, tmp_path):
        out = tmp_path / "t.txt"
        code, _, _ = run_cli(capsys, "gen", "--workload", "uniform", "--n", "8",
                             "--m", "5", "--seed", "1", "--out", str(out))
        assert code == 0
        lines = out.read_text().splitlines()
        assert lines[0] == "8 5"
        assert len(lines) == 6

    def test_stdout_and_determinism(self, capsys):
        code, out1, _ = run_cli(capsys, "gen", "--workload", "walk", "--n", "16",
                                "--m", "9", "--seed", "3", "--d", "2")
        code2, out2, _ = run_cli(capsys, "gen", "--workload", "walk", "--n", "16",
                                 "--m", "9", "--seed", "3", "--d", "2")
        assert code == code2 == 0
        assert out1 == out2

    def test_missing_param_is_usage_error(self, capsys):
        code, _, err = run_cli(capsys, "gen", "--workload", "walk", "--n", "8", "--m", "5")
        assert code == 2
        assert "error" in err


class TestRun:
    def test_greedy_csv(self, capsys, trace):
        code, out, err = run_cli(capsys, "run", "--trace", trace, "--algo", "greedy")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "i,key,cost,bound"
        assert len(lines) == 61
        assert "ratio=" in err

    def test_splay_with_initial(self, capsys, trace):
        code, out, _ = run_cli(capsys, "run", "--trace", trace, "--algo", "splay",
                               "--initial", "left_spine")
        assert code == 0
        assert out.splitlines()[0] == "i,key,cost,bound"

    def test_points_export(self, capsys, trace, tmp_path):
        pts = tmp_path / "points.csv"
        code, _, _ = run_cli(capsys, "run", "--trace", trace, "--algo", "greedy",
                             "--points", str(pts))
        assert code == 0
        lines = pts.read_text().splitlines()
        assert lines[0] == "time,key"
        assert lines[1] == "1,16"  # walk starts at the midpoint

    def test_byte_identical_reruns(self, capsys, trace):
        _, out1, _ = run_cli(capsys, "run", "--trace", trace, "--algo", "greedy")
        _, out2, _ = run_cli(capsys, "run", "--trace", trace, "--algo", "greedy")
        assert out1 == out2

    def test_missing_trace_is_input_error(self, capsys):
        code, _, err = run_cli(capsys, "run", "--trace", "/nope.txt", "--algo", "greedy")
        assert code == 2
        assert "error" in err


class TestBound:
    def test_csv_and_total(self, capsys, tiny_trace):
        code, out, err = run_cli(capsys, "bound", "--trace", tiny_trace)
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "i,key,term"
        assert lines[1] == "1,1,1.0"
        assert lines[2] == "2,2,2.0"
        assert "total_bound=5.0" in err

    def test_root_start(self, capsys, tiny_trace):
        code, out, _ = run_cli(capsys, "bound", "--trace", tiny_trace, "--start", "root")
        assert code == 0
        first_term = float(out.splitlines()[1].split(",")[2])
        assert first_term > 1.0

    def test_weights_file(self, capsys, tiny_trace, tmp_path):
        wpath = tmp_path / "w.txt"
        wpath.write_text("1.0\n1.0\n1.0\n")
        code, out, _ = run_cli(capsys, "bound", "--trace", tiny_trace,
                               "--weights", str(wpath))
        assert code == 0
        assert out.splitlines()[1] == "1,1,1.0"

    def test_dimension_mismatch_weights(self, capsys, tiny_trace, tmp_path):
        wpath = tmp_path / "w.txt"
        wpath.write_text("1.0\n1.0\n")
        code, _, err = run_cli(capsys, "bound", "--trace", tiny_trace,
                               "--weights", str(wpath))
        assert code == 2


class TestOptAndBestStatic:
    def test_opt_row(self, capsys, tiny_trace):
        code, out, _ = run_cli(capsys, "opt", "--trace", tiny_trace)
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "opt_size,greedy_size,ratio"
        assert lines[1] == "5,5,1.0"

    def test_opt_guard(self, capsys, trace):
        code, _, err = run_cli(capsys, "opt", "--trace", trace)
        assert code == 2
        assert "guard" in err

    def test_beststatic(self, capsys, tiny_trace, tmp_path):
        tree_csv = tmp_path / "tree.csv"
        code, out, _ = run_cli(capsys, "beststatic", "--trace", tiny_trace,
                               "--tree", str(tree_csv))
        assert code == 0
        assert out.splitlines()[0] == "n,m,total"
        assert tree_csv.read_text().splitlines()[0] == "key,parent,depth"


class TestFitCmd:
    def test_fit_from_files(self, capsys, tmp_path):
        cost = tmp_path / "c.csv"
        bound = tmp_path / "b.csv"
        cost.write_text("i,cost\n1,2.0\n2,4.0\n3,2.0\n")
        bound.write_text("i,bound\n1,1.0\n2,2.0\n3,1.0\n")
        code, out, _ = run_cli(capsys, "fit", "--cost", str(cost), "--bound", str(bound))
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "ratio,slope,intercept,r2"
        ratio, slope, intercept, r2 = (float(v) for v in lines[1].split(","))
        assert ratio == pytest.approx(2.0)
        assert slope == pytest.approx(2.0)

    def test_fit_picks_named_columns_from_run_output(self, capsys, trace, tmp_path):
        # `run` emits i,key,cost,bound; fitting that file against a bound CSV
        # must use the cost column, not the trailing bound column
        run_csv = tmp_path / "run.csv"
        bound_csv = tmp_path / "bound.csv"
        assert main(["run", "--trace", trace, "--algo", "greedy",
                     "--out", str(run_csv)]) == 0
        assert main(["bound", "--trace", trace, "--out", str(bound_csv)]) == 0
        capsys.readouterr()
        code, out, _ = run_cli(capsys, "fit", "--cost", str(run_csv),
                               "--bound", str(bound_csv))
        assert code == 0
        ratio = float(out.splitlines()[1].split(",")[0])
        rows = run_csv.read_text().splitlines()[1:]
        cost_total = sum(int(r.split(",")[2]) for r in rows)
        bound_total = sum(float(r.split(",")[3]) for r in rows)
        assert ratio == pytest.approx(cost_total / bound_total, rel=1e-12)


class TestVerify:
    def test_passing_suite(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--suite", "roundtrip", "--seed", "1")
        assert code == 0
        assert out.startswith("roundtrip: pass")

    def test_failing_suite_exits_one(self, capsys, monkeypatch):
        from fingerbound.verify import SuiteReport

        monkeypatch.setattr(
            "fingerbound.cli.run_suite",
            lambda suite, seed: SuiteReport(suite, False, 3, ["counterexample: ..."]),
        )
        code, out, _ = run_cli(capsys, "verify", "--suite", "opt")
        assert code == 1
        assert "FAIL" in out
        assert "counterexample" in out

    def test_unknown_suite_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["verify", "--suite", "everything"])
        assert exc.value.code == 2


def test_no_command_is_usage_error():
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2
