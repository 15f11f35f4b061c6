import io
from test.globals import *

import pytest

from iex import __version__
from iex.cli import EXIT_BUDGET, EXIT_MISMATCH, EXIT_OK, EXIT_USAGE, main, run
from iex.oracles import brute_permutations

GENERATORS = "6 10\n1 2\n1 4\n2 3\n2 5\n3 4\n3 6\n4 5\n5 6\n1 3 5\n2 4 6\n"
BLOCKS = "perm 9\n" + "".join(
    "block: " + " ".join(str(s) for s in b) + "\n" for b in NINE_BLOCKS.blocks
)


def cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run([str(a) for a in argv], out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture()
def files(tmp_path, no_config):
    def write(name, text):
        path = tmp_path / name
        path.write_text(text)
        return path

    yield write


#########################################
def test_faces(files):
    path = files("gens.txt", GENERATORS)
    assert cli("faces", path) == (EXIT_OK, "f: 1 6 7 0 0 0 0\ntotal: 14\n", "")
    assert cli("faces", path, "--oracle")[0] == EXIT_OK


def test_faces_weights(files):
    path = files("gens.txt", GENERATORS)
    code, out, _ = cli("faces", path, "--weights", "1,1,1,1,1,1")
    assert code == EXIT_OK
    assert out == "even: 0:1 2:7\nodd: 1:6\ntotal: 14\n"


def test_faces_rows_out(files, tmp_path):
    path = files("gens.txt", GENERATORS)
    rows = tmp_path / "rows.txt"
    assert cli("faces", path, "--rows-out", rows)[0] == EXIT_OK
    lines = rows.read_text().splitlines()
    assert lines
    assert all(len(line.split()) == 6 for line in lines)


#########################################
def test_count_perm_injective(files):
    path = files("triple.txt", TRIPLE_SPEC_TEXT)
    assert cli("count-perm", path) == (EXIT_OK, f"{TRIPLE_INJECTIVE_COUNT}\n", "")


def test_count_perm_arbitrary(files):
    path = files("triple.txt", TRIPLE_SPEC_TEXT.replace("perm 10", "maps 10 10"))
    code, out, _ = cli("count-perm", path, "--oracle")
    assert code == EXIT_OK
    assert out == f"{TRIPLE_ARBITRARY_COUNT}\n"


def test_count_perm_blocks(files):
    path = files("blocks.txt", BLOCKS)
    code, out, _ = cli("--threads", 2, "count-perm", path, "--oracle")
    assert code == EXIT_OK
    assert int(out) == brute_permutations(NINE_BLOCKS)


def test_count_comp(no_config):
    code, out, _ = cli(
        "count-comp", "--bounds", "7,4,3,3,2,2", "--target", 9, "--oracle"
    )
    assert (code, out) == (EXIT_OK, f"{SIX_BOUNDS_COUNT}\n")


def test_count_dnf(files, tmp_path):
    path = files("three.dnf", THREE_TERM_DIMACS)
    assert cli("count-dnf", path, "--oracle")[:2] == (EXIT_OK, "17\n")
    assert cli("count-dnf", path, "--k", 3)[:2] == (EXIT_OK, "6\n")
    rows = tmp_path / "rows.txt"
    assert cli("count-dnf", path, "--rows-out", rows)[0] == EXIT_OK
    assert rows.read_text() == "2 2 2\n"


def test_count_cnf(files):
    path = files("three.cnf", THREE_TERM_DIMACS.replace("p dnf", "p cnf"))
    assert cli("count-cnf", path, "--oracle")[:2] == (EXIT_OK, "47\n")
    assert cli("count-cnf", path, "--k", 3, "--oracle")[:2] == (EXIT_OK, "14\n")


def test_bench_dnf(no_config, tmp_path):
    code, out, _ = cli(
        "bench-dnf", "--n", 10, "--n1", 2, "--n0", 1, "--h", 6, "--trials", 2
    )
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[0] == "h,n,n1,n0,anticliqueCount,maxAnticlique,millis"
    assert len(lines) == 3
    assert all(line.startswith("6,10,2,1,") for line in lines[1:])
    csv = tmp_path / "bench.csv"
    assert cli(
        "bench-dnf", "--n", 8, "--n1", 2, "--n0", 1, "--h", 4, "--out", csv
    ) == (EXIT_OK, "", "")
    assert len(csv.read_text().splitlines()) == 2


#########################################
def test_usage_errors(files):
    code, _, err = cli("faces", "/nonexistent/gens.txt")
    assert code == EXIT_USAGE
    assert err.startswith("error: ")
    bad = files("bad.txt", "3 1\n1 x\n")
    code, _, err = cli("faces", bad)
    assert code == EXIT_USAGE
    assert f"{bad}:2:3:" in err
    dnf_file = files("three.dnf", THREE_TERM_DIMACS)
    assert cli("count-cnf", dnf_file)[0] == EXIT_USAGE
    assert cli("--threads", 0, "count-dnf", dnf_file)[0] == EXIT_USAGE
    assert cli("count-comp", "--bounds", "3,x", "--target", 1)[0] == EXIT_USAGE
    assert cli("faces")[0] == EXIT_USAGE
    assert cli("--version")[0] == EXIT_OK


def test_budget_exceeded(files):
    config = files("iex.yaml", "oracle:\n  max_ground_size: 3\n")
    path = files("gens.txt", GENERATORS)
    code, out, err = cli("--config", config, "faces", path, "--oracle")
    assert code == EXIT_BUDGET
    assert "total: 14" in out
    assert "exceeds oracle budget of 3" in err


def test_comp_budget_exceeded(files):
    config = files("iex.yaml", "oracle:\n  max_comp_target: 100\n")
    code, out, err = cli(
        "--config", config, "count-comp", "--bounds", "3,4", "--target", 10 ** 12,
        "--oracle",
    )
    assert code == EXIT_BUDGET
    assert out == "0\n"
    assert "t = 1000000000000 exceeds oracle budget of 100" in err


def test_oracle_mismatch(files, monkeypatch):
    monkeypatch.setattr("iex.cli.brute_set_ideal", lambda g, budget: [])
    path = files("gens.txt", GENERATORS)
    code, _, err = cli("faces", path, "--oracle")
    assert code == EXIT_MISMATCH
    assert "oracle 0 != count 14" in err


def test_main(files, capsys):
    path = files("three.dnf", THREE_TERM_DIMACS)
    with pytest.raises(SystemExit) as ex:
        main(["-vv", "count-dnf", str(path)])
    assert ex.value.code == EXIT_OK
    assert capsys.readouterr().out == "17\n"
    with pytest.raises(SystemExit) as ex:
        main(["--version"])
    assert ex.value.code == 0
    assert capsys.readouterr().out.strip() == __version__
