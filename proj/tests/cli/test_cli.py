import json
import os
import subprocess
from pathlib import Path

import pytest

CLI = os.environ.get("LEXCYCLE_CLI")
FIXTURES = Path(os.environ.get("LEXCYCLE_FIXTURES", Path(__file__).resolve().parents[2] / "data" / "fixtures"))

pytestmark = pytest.mark.skipif(not CLI, reason="LEXCYCLE_CLI not set")


def run(*args, env=None):
    full_env = dict(os.environ)
    full_env.pop("LEXCYCLE_MAX_SWEEPS", None)
    full_env.update(env or {})
    return subprocess.run([CLI, *map(str, args)], capture_output=True, text=True, env=full_env)


def run_json(*args, env=None):
    proc = run(*args, "--format", "json", env=env)
    return proc.returncode, json.loads(proc.stdout)


def fixture(name):
    return FIXTURES / name


def tokens(name):
    return fixture(name).read_text().split()


def test_sweep_three_steps_returns_to_seed():
    rc, out = run_json("sweep", "--graph", fixture("g3.txt"), "--order", fixture("g3_sigma1.txt"), "--sweeps", 3)
    assert rc == 0
    assert out["verdict"] == "ok"
    assert out["input_digest"].startswith("fnv1a64:")
    assert out["result"]["orderings"][0] == "y f e a c d b x z".split()
    assert out["result"]["orderings"][2] == tokens("g3_sigma1.txt")


def test_cycle_period_four():
    rc, out = run_json("cycle", "--graph", fixture("g4.txt"), "--order", fixture("g4_mu1.txt"))
    assert rc == 0
    assert out["result"]["cycle_length"] == 4
    assert out["result"]["tail"] == 0


def test_lexdfs_cycle():
    rc, out = run_json("cycle", "--graph", fixture("lexdfs.txt"), "--order", fixture("lexdfs_sigma1.txt"),
                       "--search", "lexdfs+")
    assert rc == 0
    assert out["result"]["cycle_length"] == 4


def test_cycle_budget_exhaustion_reports_trace():
    rc, out = run_json("cycle", "--graph", fixture("g3.txt"), "--order", fixture("g3_sigma1.txt"), "--budget", 2)
    assert rc == 2
    assert out["verdict"] == "budget"
    assert len(out["result"]["trace"]) == 3


def test_budget_from_environment():
    rc, _ = run_json("cycle", "--graph", fixture("g3.txt"), "--order", fixture("g3_sigma1.txt"),
                     env={"LEXCYCLE_MAX_SWEEPS": "2"})
    assert rc == 2


def test_orient_exhausts_on_odd_cycle():
    rc, out = run_json("orient", "--graph", fixture("g3.txt"), "--budget", 10)
    assert rc == 2
    assert len(out["result"]["trace"]) == 10


def test_orient_two_chain_complement():
    rc, out = run_json("orient", "--graph", fixture("twochain6_complement.txt"), "--order", fixture("twochain6_tau.txt"))
    assert rc == 0
    assert out["result"]["sweeps_used"] == 8


def test_check_verdicts():
    rc, out = run_json("check", "--graph", fixture("star2.txt"), "--order", fixture("star2_leaves_first.txt"),
                       "--property", "pi")
    assert rc == 1
    assert out["verdict"] == "fail"
    assert out["result"]["witness"] == ["l0", "l1", "c"]
    rc, out = run_json("check", "--graph", fixture("unitinterval20.txt"), "--order",
                       fixture("unitinterval20_witness.txt"), "--property", "pi")
    assert rc == 0
    assert out["result"]["holds"] is True


def test_matrix_fixpoint():
    rc, out = run_json("matrix", "--matrix", fixture("matrix_antidiagonal.txt"))
    assert rc == 0
    assert out["result"]["final"] == [[0, 1], [1, 0]]
    assert out["result"]["steps"] == 2
    rc, out = run_json("matrix", "--matrix", fixture("matrix_antidiagonal.txt"), "--max-steps", 1)
    assert rc == 2


@pytest.mark.parametrize("spec,golden", [("g3", "g3.txt"), ("g4", "g4.txt"), ("lexdfs", "lexdfs.txt"),
                                         ("domino", "domino.txt"), ("twochain:6", "twochain6.txt")])
def test_gen_matches_golden_files(spec, golden):
    proc = run("gen", spec)
    assert proc.returncode == 0
    assert proc.stdout == fixture(golden).read_text()


def test_gen_is_deterministic():
    assert run("gen", "tree:50:3").stdout == fixture("tree50.txt").read_text()
    assert run("gen", "unitinterval:20:5").stdout == run("gen", "unitinterval:20:5").stdout


def test_repro_worked_examples():
    for name in ["figure1", "figure2", "corollary1", "g6", "lexdfs"]:
        assert run("repro", name).returncode == 0, name


def test_repro_campaign_json():
    rc, out = run_json("repro", "cobipartite", "--trials", 20, "--jobs", 2)
    assert rc == 0
    assert out["verdict"] == "ok"


def test_usage_and_parse_errors(tmp_path):
    assert run("sweep", "--graph", fixture("g3.txt"), "--sweeps", 0, "--default-seed").returncode == 64
    assert run("frobnicate").returncode == 64
    assert run("repro", "no-such-example").returncode == 64
    assert run("cycle", "--graph", tmp_path / "missing.txt").returncode == 65
    loop = tmp_path / "loop.txt"
    loop.write_text("a a\n")
    assert run("cycle", "--graph", loop).returncode == 65
    bad_order = tmp_path / "order.txt"
    bad_order.write_text("x y\n")
    assert run("cycle", "--graph", fixture("g3.txt"), "--order", bad_order).returncode == 65
