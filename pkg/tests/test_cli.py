import pytest

from recolor import Coloring, build, hypergraph_to_text, write_coloring
from recolor.cli import main

K2_TEXT = hypergraph_to_text(build(2, 2, [(1, 2)]))
K3_TEXT = hypergraph_to_text(build(3, 2, [(1, 2), (2, 3), (1, 3)]))


@pytest.fixture
def k2_file(tmp_path):
    f = tmp_path / "k2.txt"
    f.write_text(K2_TEXT)
    return str(f)


@pytest.fixture
def k3_file(tmp_path):
    f = tmp_path / "k3.txt"
    f.write_text(K3_TEXT)
    return str(f)


def coloring_file(tmp_path, name, colors):
    f = tmp_path / name
    write_coloring(Coloring(colors), f)
    return str(f)


class TestParams:
    def test_text(self, capsys):
        assert main(["params", "1e9", "2", str(10 ** 10)]) == 0
        out = capsys.readouterr().out
        fields = dict(line.split(" ", 1) for line in out.splitlines())
        assert set(fields) == {"d", "k", "n", "alpha_real", "alpha",
                               "beta_real", "beta", "m0", "n0", "p", "m"}
        assert fields["k"] == "2"
        assert float(fields["alpha_real"]) > 1

    def test_csv(self, capsys):
        assert main(["params", "1e9", "2", str(10 ** 10), "--format", "csv"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "d,k,n,alpha_real,alpha,beta_real,beta,m0,n0,p,m"
        assert len(lines) == 2
        assert len(lines[1].split(",")) == 11

    def test_domain_error(self, capsys):
        assert main(["params", "10", "2", "1000"]) == 2
        assert capsys.readouterr().err.startswith("error:")


class TestGen:
    def test_m_route_reproducible(self, capsys):
        assert main(["gen", "--n", "8", "--k", "2", "--m", "6",
                     "--seed", "5"]) == 0
        first = capsys.readouterr().out
        assert main(["gen", "--n", "8", "--k", "2", "--m", "6",
                     "--seed", "5"]) == 0
        assert capsys.readouterr().out == first
        assert first.splitlines()[0] == "8 2 6"

    def test_p_route(self, capsys):
        assert main(["gen", "--n", "6", "--k", "3", "--p", "1.0"]) == 0
        out = capsys.readouterr().out
        assert out.splitlines()[0] == "6 3 20"

    def test_m_and_p_conflict(self, capsys):
        with pytest.raises(SystemExit):
            main(["gen", "--n", "6", "--k", "2", "--m", "3", "--p", "0.5"])

    def test_bad_m(self, capsys):
        assert main(["gen", "--n", "4", "--k", "2", "--m", "99"]) == 2
        assert capsys.readouterr().err.startswith("error:")

    def test_out_file(self, tmp_path, capsys):
        dest = tmp_path / "h.txt"
        assert main(["gen", "--n", "5", "--k", "2", "--m", "4",
                     "--out", str(dest)]) == 0
        assert capsys.readouterr().out == ""
        assert dest.read_text().splitlines()[0] == "5 2 4"


class TestCore:
    def test_text(self, k3_file, capsys):
        assert main(["core", k3_file, "--beta", "2"]) == 0
        out = capsys.readouterr().out
        assert "core_size 3" in out
        assert "core 1 2 3" in out

    def test_csv(self, k3_file, capsys):
        assert main(["core", k3_file, "--beta", "3", "--format", "csv"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "vertex,in_core,peel_position"
        assert len(lines) == 4
        assert all(row.split(",")[1] == "0" for row in lines[1:])

    def test_missing_file(self, tmp_path, capsys):
        assert main(["core", str(tmp_path / "nope.txt"), "--beta", "1"]) == 2


class TestMisAndGreedy:
    def test_mis_ascending(self, k3_file, capsys):
        assert main(["mis", k3_file]) == 0
        assert capsys.readouterr().out == "size 1\nmembers 1\n"

    def test_mis_random_seeded(self, k3_file, capsys):
        assert main(["mis", k3_file, "--strategy", "random",
                     "--seed", "11"]) == 0
        first = capsys.readouterr().out
        assert main(["mis", k3_file, "--strategy", "random",
                     "--seed", "11"]) == 0
        assert capsys.readouterr().out == first

    def test_greedy_levels(self, k3_file, capsys):
        assert main(["greedy", k3_file, "--levels", "2"]) == 0
        out = capsys.readouterr().out
        assert out == "level 1: 1\nlevel 2: 2\nresidual: 3\n"

    def test_greedy_csv(self, k3_file, capsys):
        assert main(["greedy", k3_file, "--levels", "1",
                     "--format", "csv"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "level,vertex"
        assert "1,1" in lines
        assert "residual,2" in lines


class TestCertify:
    def test_colorable(self, k3_file, capsys):
        assert main(["certify", k3_file, "--alpha", "2", "--beta", "1"]) == 0
        assert capsys.readouterr().out == "colorable exact\n"

    def test_witness(self, k3_file, capsys):
        assert main(["certify", k3_file, "--alpha", "1", "--beta", "1"]) == 1
        out = capsys.readouterr().out
        assert out == ("not-colorable core_size 2\nset 1: 3\n"
                       "residual: 1 2\ncore: 1 2\n")

    def test_inconclusive_beyond_exact_limit(self, tmp_path, capsys):
        f = tmp_path / "big.txt"
        f.write_text(hypergraph_to_text(build(20, 2, [(1, 2)])))
        assert main(["certify", str(f), "--alpha", "1", "--beta", "1",
                     "--exact-limit", "5", "--trials", "20"]) == 3
        assert "inconclusive" in capsys.readouterr().out

    def test_witness_hunt_succeeds(self, k3_file, capsys):
        # exact path disabled: the random hunt must find the triangle core
        assert main(["certify", k3_file, "--alpha", "1", "--beta", "1",
                     "--exact-limit", "0", "--trials", "50"]) == 1
        assert "not-colorable" in capsys.readouterr().out


class TestConnectAndVerify:
    def test_roundtrip(self, tmp_path, k2_file, capsys):
        c1 = coloring_file(tmp_path, "a.txt", (1, 2))
        c2 = coloring_file(tmp_path, "b.txt", (2, 1))
        trace = tmp_path / "trace.txt"
        rc = main(["connect", k2_file, c1, c2, "--q", "3", "--alpha", "0",
                   "--beta", "2", "--out", str(trace)])
        captured = capsys.readouterr()
        assert rc == 0
        assert captured.err.startswith("path length 3:")
        assert trace.read_text() == "0 1 1 3\n1 2 2 1\n2 1 3 2\n"
        assert main(["verify", k2_file, c1, str(trace), "--q", "3"]) == 0
        assert capsys.readouterr().out == "ok length 3 end 2 1\n"

    def test_csv_trace_verifies_too(self, tmp_path, k2_file, capsys):
        c1 = coloring_file(tmp_path, "a.txt", (1, 2))
        c2 = coloring_file(tmp_path, "b.txt", (2, 1))
        trace = tmp_path / "trace.csv"
        assert main(["connect", k2_file, c1, c2, "--q", "3", "--alpha", "0",
                     "--beta", "2", "--format", "csv",
                     "--out", str(trace)]) == 0
        capsys.readouterr()
        assert trace.read_text().splitlines()[0] == \
            "index,vertex,old_color,new_color"
        assert main(["verify", k2_file, c1, str(trace), "--q", "3"]) == 0

    def test_identity_trace_is_empty(self, tmp_path, k2_file, capsys):
        c1 = coloring_file(tmp_path, "a.txt", (1, 2))
        assert main(["connect", k2_file, c1, c1, "--q", "3", "--alpha", "0",
                     "--beta", "2"]) == 0
        captured = capsys.readouterr()
        assert captured.out == ""
        assert captured.err.startswith("path length 0:")

    def test_not_colorable_witness_on_stderr(self, tmp_path, k3_file, capsys):
        c1 = coloring_file(tmp_path, "a.txt", (1, 2, 3))
        c2 = coloring_file(tmp_path, "b.txt", (2, 1, 3))
        assert main(["connect", k3_file, c1, c2, "--q", "3", "--alpha", "1",
                     "--beta", "1"]) == 1
        captured = capsys.readouterr()
        assert captured.out == ""
        assert captured.err.startswith("not-colorable")

    def test_step_cap_refusal(self, tmp_path, k2_file, capsys):
        c1 = coloring_file(tmp_path, "a.txt", (1, 2))
        c2 = coloring_file(tmp_path, "b.txt", (2, 1))
        assert main(["connect", k2_file, c1, c2, "--q", "3", "--alpha", "0",
                     "--beta", "2", "--step-cap", "1"]) == 3
        assert capsys.readouterr().err.startswith("refused:")

    def test_verify_rejects_tampering(self, tmp_path, k2_file, capsys):
        c1 = coloring_file(tmp_path, "a.txt", (1, 2))
        trace = tmp_path / "trace.txt"
        trace.write_text("0 1 1 2\n")
        assert main(["verify", k2_file, c1, str(trace), "--q", "3"]) == 1
        assert capsys.readouterr().out == \
            "failed index 0 reason improper-intermediate\n"

    def test_verify_old_color_mismatch(self, tmp_path, k2_file, capsys):
        c1 = coloring_file(tmp_path, "a.txt", (1, 2))
        trace = tmp_path / "trace.txt"
        trace.write_text("0 1 3 2\n")
        assert main(["verify", k2_file, c1, str(trace), "--q", "3"]) == 1
        assert capsys.readouterr().out == \
            "failed index 0 reason old-color-mismatch\n"

    def test_verify_bad_trace_file(self, tmp_path, k2_file, capsys):
        c1 = coloring_file(tmp_path, "a.txt", (1, 2))
        trace = tmp_path / "trace.txt"
        trace.write_text("5 1 1 3\n")
        assert main(["verify", k2_file, c1, str(trace), "--q", "3"]) == 2
        assert "out of order" in capsys.readouterr().err


class TestGamma:
    def test_text(self, k2_file, capsys):
        assert main(["gamma", k2_file, "--q", "3"]) == 0
        assert capsys.readouterr().out == (
            "num_colorings 6\nnum_components 1\nconnected 1\n"
            "diameter 3\ncomponent_sizes 6\n")

    def test_frozen_components(self, k3_file, capsys):
        assert main(["gamma", k3_file, "--q", "3"]) == 0
        out = capsys.readouterr().out
        assert "num_components 6" in out
        assert "connected 0" in out

    def test_no_diameter_flag(self, k2_file, capsys):
        assert main(["gamma", k2_file, "--q", "3", "--no-diameter"]) == 0
        assert "diameter -" in capsys.readouterr().out

    def test_csv_histogram(self, k3_file, capsys):
        assert main(["gamma", k3_file, "--q", "3", "--format", "csv"]) == 0
        assert capsys.readouterr().out == "component_size,count\n1,6\n"

    def test_budget_refusal(self, k2_file, capsys):
        assert main(["gamma", k2_file, "--q", "3", "--budget", "1"]) == 3
        assert capsys.readouterr().err.startswith("refused:")


class TestMonteCarlo:
    ARGS = ["montecarlo", "--n", "30", "--k", "2", "--trials", "5",
            "--alpha", "2", "--beta", "2", "--m", "60", "--seed", "9"]

    def test_stdout_and_rate(self, capsys):
        assert main(self.ARGS) == 0
        captured = capsys.readouterr()
        lines = captured.out.splitlines()
        assert lines[0].startswith("trial,seed,")
        assert len(lines) == 6
        assert captured.err.startswith("witness_rate ")

    def test_byte_identical_files(self, tmp_path, capsys):
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        assert main(self.ARGS + ["--out", str(a)]) == 0
        assert main(self.ARGS + ["--out", str(b)]) == 0
        capsys.readouterr()
        assert a.read_bytes() == b.read_bytes()

    def test_d_route(self, capsys):
        assert main(["montecarlo", "--n", "50", "--k", "2", "--trials", "2",
                     "--d", "40", "--alpha", "5", "--beta", "3",
                     "--m", "100"]) == 0
        rows = capsys.readouterr().out.splitlines()
        assert rows[1].split(",")[7] != ""  # n0 present when d is given

    def test_partial_explicit_params(self, capsys):
        assert main(["montecarlo", "--n", "30", "--k", "2", "--trials", "1",
                     "--alpha", "2"]) == 2
        assert capsys.readouterr().err.startswith("error:")
