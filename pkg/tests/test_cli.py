"""Integration tests for the command-line surface and its exit codes."""

import json

import pytest

from diminish.cli import main

K3 = "p graph 3 3\ne 0 1\ne 1 2\ne 0 2\nk 3\n"
SC8 = (
    "u 16\n"
    + "".join(f"s {i}: {2 * i} {2 * i + 1}\n" for i in range(8))
    + "k 8\nproblem setcover\n"
)
UT = "x 1111011\nk 4\n"


@pytest.fixture
def k3_file(tmp_path):
    path = tmp_path / "k3.graph"
    path.write_text(K3)
    return str(path)


@pytest.fixture
def sc8_file(tmp_path):
    path = tmp_path / "sc8.txt"
    path.write_text(SC8)
    return str(path)


@pytest.fixture
def ut_file(tmp_path):
    path = tmp_path / "ut.txt"
    path.write_text(UT)
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_diminish_clique(capsys, k3_file):
    code, out, _ = run(
        capsys, "diminish", "--problem", "clique_cw", "--input", k3_file,
        "--rounds", "1",
    )
    assert code == 0
    assert "parameter trajectory: 2 -> 1" in out


def test_diminish_halving_trajectory(capsys, sc8_file, tmp_path):
    target = str(tmp_path / "out.txt")
    code, out, _ = run(
        capsys, "diminish", "--problem", "setcover", "--input", sc8_file,
        "--rounds", "2", "--max-n", "16", "--output", target,
    )
    assert code == 0
    assert "parameter trajectory: 8 -> 4 -> 2" in out
    with open(target, encoding="utf-8") as handle:
        assert "k 2" in handle.read()


def test_diminish_stops_at_floor(capsys, tmp_path):
    path = tmp_path / "tiny.txt"
    path.write_text("u 1\ns 0: 0\nk 2\nproblem setcover\n")
    code, out, _ = run(
        capsys, "diminish", "--problem", "setcover", "--input", str(path),
        "--rounds", "9",
    )
    assert code == 0
    assert "floor" in out


def test_verify_ok_and_jsonl_schema(capsys):
    code, out, _ = run(
        capsys, "verify", "--problem", "mc_path", "--trials", "30",
        "--seed", "7", "--format", "jsonl",
    )
    assert code == 0
    lines = [json.loads(line) for line in out.splitlines()]
    assert lines[-1]["event"] == "summary"
    assert lines[-1]["failed"] == 0
    trials = [rec for rec in lines if rec["event"] == "trial"]
    assert len(trials) == 30
    assert {"k_in", "k_out", "equivalent"} <= set(trials[0])


def test_verify_zero_trials(capsys):
    code, out, _ = run(
        capsys, "verify", "--problem", "mc_path", "--trials", "0"
    )
    assert code == 0
    assert "0 trials" in out


@pytest.mark.parametrize(
    "tag", ("broken_mc_path", "broken_tst", "broken_ntm_sigma")
)
def test_verify_broken_fixture_fails(capsys, tag):
    code, out, _ = run(
        capsys, "verify", "--problem", tag, "--trials", "200", "--seed", "7"
    )
    assert code == 1
    assert "counterexample" in out


def test_solve_and_param(capsys, k3_file, sc8_file):
    code, out, _ = run(
        capsys, "solve", "--problem", "setcover", "--input", sc8_file,
        "--max-n", "16",
    )
    assert code == 0 and out.strip() == "YES"
    code, out, _ = run(
        capsys, "param", "--problem", "clique_cw", "--input", k3_file,
        "--which", "cutwidth",
    )
    assert code == 0 and "cutwidth = 2" in out
    code, out, _ = run(
        capsys, "param", "--problem", "setcover", "--input", sc8_file,
        "--which", "klogn", "--max-n", "16",
    )
    assert code == 0 and "8 * log2(16)" in out


def test_loop_agrees_with_solve(capsys, ut_file):
    code, solve_out, _ = run(
        capsys, "solve", "--problem", "unary_threshold", "--input", ut_file
    )
    assert code == 0
    for mode in ("strict", "strong"):
        code, out, _ = run(
            capsys, "loop", "--problem", "unary_threshold",
            "--input", ut_file, "--which", mode,
        )
        assert code == 0
        assert solve_out.strip().split()[0] in out


def test_accelerate_agrees_with_solve(capsys, sc8_file):
    code, out, _ = run(
        capsys, "accelerate", "--problem", "setcover", "--input", sc8_file,
        "--max-n", "16",
    )
    assert code == 0
    assert out.startswith("YES")


def test_input_error_exit_codes(capsys, ut_file):
    code, _, err = run(capsys, "solve", "--problem", "nosuch",
                       "--input", ut_file)
    assert code == 2 and "input error" in err
    code, _, err = run(capsys, "solve", "--problem", "unary_threshold",
                       "--input", "/does/not/exist")
    assert code == 2
    code, _, err = run(capsys, "solve", "--problem", "unary_threshold")
    assert code == 2


def test_cap_refusal_exit_code(capsys, k3_file):
    code, _, err = run(
        capsys, "param", "--problem", "clique_cw", "--input", k3_file,
        "--which", "cutwidth", "--max-n", "2",
    )
    assert code == 3 and "cap refusal" in err


def test_output_is_deterministic(capsys):
    first = run(capsys, "verify", "--problem", "tst", "--trials", "20",
                "--seed", "5", "--format", "jsonl")
    second = run(capsys, "verify", "--problem", "tst", "--trials", "20",
                 "--seed", "5", "--format", "jsonl")
    assert first == second
