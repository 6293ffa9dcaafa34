import json
import subprocess
import sys

import numpy as np
import pytest

from rectcross.cli import main
from rectcross.geom import format_points, read_points
from rectcross.lambdas import crossing_number
from rectcross.sampling import convex_points, random_points

SQUARE4 = "0 0\n4 0\n4 4\n0 4\n"
PENTAGON = "0 0\n4 0\n9 2\n4 4\n0 4\n"


@pytest.fixture
def files(tmp_path):
    def make(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)
    return make


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_cr(capsys, files):
    assert run(capsys, "cr", files("sq", "# square\n" + SQUARE4)) == (0, "n=4 cr=1\n", "")
    assert run(capsys, "cr", files("pent", PENTAGON))[1] == "n=5 cr=5\n"


def test_cr_collinear_exits_3(capsys, files):
    code, _, err = run(capsys, "cr", files("col", "0 0\n1 1\n2 2\n"))
    assert code == 3 and "(0, 0), (1, 1), (2, 2)" in err


def test_parse_errors_exit_2(capsys, files):
    assert run(capsys, "cr", files("bad", "0 0\nfoo bar\n"))[0] == 2
    assert run(capsys, "cr", files("big", f"{2**31} 0\n"))[0] == 2
    assert run(capsys, "cr", "/nonexistent/points.txt")[0] == 2


def test_duplicate_exits_3(capsys, files):
    assert run(capsys, "cr", files("dup", "0 0\n0 0\n1 2\n"))[0] == 3


def test_oracle_and_cap(capsys, files):
    sq = files("sq", SQUARE4)
    assert run(capsys, "oracle", sq)[1] == "n=4 cr=1\n"
    assert run(capsys, "oracle", "--cap", "3", sq)[0] == 4


def test_oracle_matches_cr_on_random_files(capsys, files):
    rng = np.random.default_rng(9)
    for i in range(100):
        S = random_points(int(rng.integers(4, 41)), rng, bound=10**4)
        f = files(f"r{i}", format_points(S))
        assert run(capsys, "oracle", f)[1] == run(capsys, "cr", f)[1]


def test_remove_all(capsys, files):
    code, out, _ = run(capsys, "remove-all", files("pent", PENTAGON))
    assert code == 0
    assert [line.split()[1] for line in out.splitlines()] == ["1"] * 5
    assert out.splitlines()[2] == "(9,2) 1"


def test_add_and_move(capsys, files):
    sq, cand = files("sq", SQUARE4), files("c", "1 2\n")
    assert run(capsys, "add", sq, cand)[1] == "(1,2) 3\n"
    assert run(capsys, "move", sq, "3", cand)[1] == "(1,2) 1\n"
    assert run(capsys, "move", sq, cand, "--point", "0", "4")[1] == "(1,2) 1\n"


def test_membership_errors_exit_5(capsys, files):
    sq = files("sq", SQUARE4)
    assert run(capsys, "add", sq, files("o", "4 4\n"))[0] == 5
    assert run(capsys, "move", sq, "7", files("c", "1 2\n"))[0] == 5
    assert run(capsys, "move", sq, files("c2", "1 2\n"), "--point", "1", "1")[0] == 5
    assert run(capsys, "move", sq, files("c3", "1 2\n"))[0] == 5


def test_candidate_geometry_exit_3(capsys, files):
    assert run(capsys, "add", files("sq", SQUARE4), files("c", "2 2\n"))[0] == 3


def test_json_output(capsys, files):
    code, out, _ = run(capsys, "--json", "add", files("sq", SQUARE4), files("c", "1 2\n9 2\n"))
    assert [json.loads(line) for line in out.splitlines()] == [
        {"point": [1, 2], "cr": 3}, {"point": [9, 2], "cr": 5}]
    assert json.loads(run(capsys, "--json", "cr", files("p", PENTAGON))[1]) == {"n": 5, "cr": 5}


def test_lambda_dump(capsys, files):
    out = run(capsys, "lambda", files("sq", "0 0\n3 0\n3 3\n0 3\n"))[1]
    assert out.splitlines()[0] == "0,2,1,0"


def test_artifact(capsys, files, tmp_path):
    art = tmp_path / "run.json"
    run(capsys, "--artifact", str(art), "cr", files("sq", SQUARE4))
    rec = json.loads(art.read_text())
    assert rec["command"] == "cr" and rec["results"] == {"n": 4, "cr": 1}
    assert len(rec["input_sha256"]) == 64


def test_optimize_writes_best_and_trace(capsys, files):
    f = files("ten", format_points(convex_points(10)))
    code, out, _ = run(capsys, "optimize", f, "--rounds", "400", "--seed", "3")
    assert code == 0
    best = read_points(f + ".best")
    cr = int(out.split("cr=")[1].split()[0])
    assert crossing_number(best) == cr <= 110
    lines = open(f + ".trace").read().splitlines()
    assert len(lines) == 400
    assert set(json.loads(lines[0])) >= {"round", "p", "best_q", "cr_before", "cr_after",
                                         "accepted"}


def test_optimize_zero_rounds_is_identity(capsys, files):
    f = files("six", format_points(convex_points(6)))
    run(capsys, "optimize", f, "--rounds", "0")
    assert read_points(f + ".best") == read_points(f)


def test_optimize_is_deterministic(capsys, files, tmp_path):
    f = files("nine", format_points(random_points(9, np.random.default_rng(1), bound=30)))
    run(capsys, "optimize", f, "--rounds", "200", "--seed", "5", "--out", str(tmp_path / "a"))
    run(capsys, "optimize", f, "--rounds", "200", "--seed", "5", "--out", str(tmp_path / "b"))
    for ext in (".best", ".trace"):
        assert (tmp_path / f"a{ext}").read_bytes() == (tmp_path / f"b{ext}").read_bytes()


def test_bench_csv(capsys):
    code, out, err = run(capsys, "bench", "--sizes", "16,32", "--trials", "1")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "n,op,trial,nanos"
    assert len(lines) == 1 + 2 * 3
    assert "# slope batch_add" in err


def test_backend_flag(capsys, files):
    assert run(capsys, "--backend", "python", "cr", files("sq", SQUARE4))[1] == "n=4 cr=1\n"


def test_module_entry_point(files):
    r = subprocess.run([sys.executable, "-m", "rectcross.cli", "cr", files("sq", SQUARE4)],
                       capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout == "n=4 cr=1\n"
