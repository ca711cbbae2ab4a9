import io
import json

import pytest

from radact.cli import run


E2_TEXT = """monoid E2
elements 2
identity 0
table
0 1
1 1
"""

R2_TEXT = """act R2 over E2
elements 2
action
0 1
1 1
"""

SMALL = ["--monoid-max", "2", "--act-max", "3", "--hull-bound", "4"]


@pytest.fixture()
def catalog_dir(tmp_path):
    (tmp_path / "E2.monoid").write_text(E2_TEXT)
    (tmp_path / "R2.act").write_text(R2_TEXT)
    return str(tmp_path)


def invoke(argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(argv, out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_validate_ok(catalog_dir):
    code, out, _ = invoke(
        ["validate", "--seed-catalog", catalog_dir, "--act", "R2"]
    )
    assert code == 0
    assert "ok act R2" in out


def test_validate_monoid_listing(catalog_dir):
    code, out, _ = invoke(["validate", "--seed-catalog", catalog_dir])
    assert code == 0 and "ok monoid E2" in out


def test_parse_error_exits_2(tmp_path):
    bad = tmp_path / "bad.monoid"
    bad.write_text("monoid X\nelements 2\nidentity 0\ntable\n0 1\n")
    code, _, err = invoke(["validate", "--monoid", str(bad)])
    assert code == 2
    assert "error" in err


def test_axiom_violation_exits_1(tmp_path):
    bad = tmp_path / "bad.monoid"
    bad.write_text("monoid X\nelements 2\nidentity 1\ntable\n0 1\n1 0\n")
    code, _, err = invoke(["validate", "--monoid", str(bad)])
    assert code == 1


def test_radical_command_prints_total_partition(catalog_dir):
    code, out, _ = invoke(
        ["radical", "--seed-catalog", catalog_dir, "--act", "R2",
         "--radical", "rG"] + SMALL
    )
    assert code == 0
    assert out.strip() == "0 1"


def test_congruences_command(catalog_dir):
    code, out, _ = invoke(
        ["congruences", "--seed-catalog", catalog_dir, "--act", "R2"]
    )
    assert code == 0
    assert out.splitlines() == ["0 1", "0 | 1"]


def test_closure_and_dense(catalog_dir):
    code, out, _ = invoke(
        ["closure", "--seed-catalog", catalog_dir, "--act", "R2",
         "--members", "1"] + SMALL
    )
    assert code == 0 and out.strip() == "0 1"
    code, out, _ = invoke(
        ["dense", "--seed-catalog", catalog_dir, "--act", "R2",
         "--members", "1"] + SMALL
    )
    assert code == 0 and out.strip() == "true"


def test_injectivity_commands(catalog_dir):
    for cmd in ("injective", "r-injective", "weakly-injective"):
        code, out, _ = invoke(
            [cmd, "--seed-catalog", catalog_dir, "--act", "R2"] + SMALL
        )
        assert code == 0 and out.strip() == "true", cmd


def test_hull_commands(catalog_dir):
    code, out, _ = invoke(
        ["hull", "--seed-catalog", catalog_dir, "--act", "R2"] + SMALL
    )
    assert code == 0
    assert out.splitlines()[0] == "elements 2"
    code, out, _ = invoke(
        ["r-hull", "--seed-catalog", catalog_dir, "--act", "R2"] + SMALL
    )
    assert code == 0
    assert out.splitlines()[0] == "method closure-of-hull"


def test_pushout_command(catalog_dir):
    code, out, _ = invoke(
        ["pushout", "--seed-catalog", catalog_dir, "--act", "R2",
         "--members", "1", "--into", "R2", "--map", "1"] + SMALL
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "elements 3"
    assert lines[-2].startswith("u ") and lines[-1].startswith("v ")


def test_limit_command(catalog_dir):
    code, out, _ = invoke(
        ["limit", "--seed-catalog", catalog_dir, "--acts", "R2,R2",
         "--maps", "0 1"] + SMALL
    )
    assert code == 0
    assert out.splitlines()[0] == "elements 2"
    assert "leg0 0 1" in out


def test_enumerate_command():
    code, out, _ = invoke(["enumerate", "--monoid-max", "2", "--act-max", "3"])
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "monoids 3"
    assert "acts 14" in out
    assert "radicals delta nabla rG t_LrG" in out


def test_verify_single_theorem():
    code, out, _ = invoke(
        ["verify", "--theorem", "L1.2", "--monoid-max", "1",
         "--act-max", "3", "--hull-bound", "3"]
    )
    assert code == 0
    assert out.startswith("L1.2")
    assert "verified" in out


def test_verify_all_small_universe_json():
    code, out, _ = invoke(
        ["verify", "--all", "--report", "json", "--monoid-max", "1",
         "--act-max", "3", "--hull-bound", "3"]
    )
    assert code == 0, out
    doc = json.loads(out)
    assert doc["schema"] == "radact-report/1"
    assert doc["summary"]["violated"] == 0
    assert {r["theorem_id"] for r in doc["axioms"]} == {"AX-H1", "AX-H2"}


def test_unknown_theorem_is_usage_error():
    code, _, err = invoke(
        ["verify", "--theorem", "T9.9", "--monoid-max", "1",
         "--act-max", "2", "--hull-bound", "2"]
    )
    assert code == 2
    assert "T9.9" in err
