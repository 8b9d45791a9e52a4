import json
import os
import subprocess
from pathlib import Path

import pytest

CLI = os.environ.get("GRAFT_MOMENTS_CLI")
DATA = Path(os.environ.get("GRAFT_MOMENTS_DATA", Path(__file__).resolve().parent.parent / "data"))

pytestmark = pytest.mark.skipif(not CLI, reason="GRAFT_MOMENTS_CLI not set")


def run(*args, env=None):
    full_env = {k: v for k, v in os.environ.items() if k != "GRAFT_MOMENTS_SEED"}
    full_env.update(env or {})
    return subprocess.run([CLI, *map(str, args)], capture_output=True, text=True, env=full_env)


def test_indices():
    out = run("indices", DATA / "diamond.json", "--weights", "degree")
    assert out.returncode == 0, out.stderr
    report = json.loads(out.stdout)
    assert report["moment"] == "34/1"
    assert report["wiener"] == "7/1"
    assert report["order"] == 4


def test_graft_is_byte_identical(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert run("graft", DATA / "sun_spec.json", "--out", a).returncode == 0
    assert run("graft", DATA / "sun_spec.json", "--out", b).returncode == 0
    assert a.read_bytes() == b.read_bytes()
    product = json.loads(a.read_text())
    assert len(product["graph"]["vertices"]) == 8
    assert product["gamma"]["0"] == "3/1"


def test_verify_is_deterministic():
    first = run("verify", "sigma", "--count", "15", "--seed", "9")
    second = run("verify", "sigma", "--count", "15", "--seed", "9")
    assert first.returncode == 0, first.stdout
    assert first.stdout == second.stdout
    assert "elapsed_ms" in first.stderr


def test_seed_from_environment():
    flag = run("verify", "unicyclic", "--count", "5", "--seed", "77")
    env = run("verify", "unicyclic", "--count", "5", env={"GRAFT_MOMENTS_SEED": "77"})
    assert flag.stdout == env.stdout
    assert json.loads(env.stdout)["seed"] == 77


def test_isomoment():
    out = run("isomoment", DATA / "diamond.json", DATA / "p4.json", "--weights", "unit,degree")
    assert out.returncode == 0, out.stderr
    report = json.loads(out.stdout)
    assert report["permutations"] == 24
    assert len(report["classes"]) >= 2


def test_theta():
    out = run("theta", 10)
    assert out.returncode == 0
    lines = out.stdout.strip().splitlines()
    assert lines[5].split("\t") == ["5", "6", "ok"]


@pytest.mark.parametrize(
    "args, code",
    [
        (("indices", DATA / "malformed.json"), 2),
        (("indices", DATA / "missing.json"), 2),
        (("indices", DATA / "p3.json", "--weights", "bogus"), 2),
        (("verify", "no-such-formula"), 2),
        (("theta", 0), 2),
        (("indices", DATA / "disconnected.json"), 3),
        (("isomoment", DATA / "p3.json", DATA / "p4.json"), 3),
        ((), 2),
    ],
)
def test_exit_codes(args, code):
    out = run(*args)
    assert out.returncode == code, (out.stdout, out.stderr)
