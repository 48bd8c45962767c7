"""Command-line interface: formats, exit codes, determinism."""

from __future__ import annotations

import json

import pytest

from latfac.cli import main

pytestmark = pytest.mark.usefixtures("tmp_path")


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.fixture
def chain2(tmp_path, capsys):
    path = tmp_path / "c2.json"
    code, _, _ = run(capsys, "lattice", "make", "chain", "2", "-o", str(path))
    assert code == 0
    return str(path)


@pytest.fixture
def square(tmp_path, capsys):
    path = tmp_path / "sq.json"
    code, _, _ = run(capsys, "lattice", "make", "grid", "1", "1", "-o", str(path))
    assert code == 0
    return str(path)


def test_lattice_make_writes_versioned_json(chain2):
    doc = json.load(open(chain2))
    assert doc["format"] == "latfac/1"
    assert doc["labels"] == ["0", "1", "2"]
    assert doc["covers"] == [[0, 1], [1, 2]]


def test_lattice_validate(capsys, square):
    code, out, _ = run(capsys, "lattice", "validate", square, "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["valid"] and doc["modular"] and doc["elements"] == 4


def test_lattice_dual(capsys, chain2):
    code, out, _ = run(capsys, "lattice", "dual", chain2)
    assert code == 0
    assert json.loads(out)["labels"] == ["2", "1", "0"]


def test_enumerate_count_only(capsys, chain2):
    code, out, _ = run(capsys, "enumerate", "transfer", "--lattice", chain2, "--count-only")
    assert code == 0
    assert out.strip() == "5"


def test_enumerate_json_document(capsys, square):
    code, out, _ = run(capsys, "enumerate", "transfer", "--lattice", square, "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["count"] == 10
    assert len(doc["structures"]) == 10
    assert doc["structures"][0] == {"pairs": []}


@pytest.mark.parametrize(
    "what,count",
    [
        ("saturated", 7),
        ("disklike", 7),
        ("fac", 10),
        ("closure", 7),
        ("interior", 7),
    ],
)
def test_enumerate_targets(capsys, square, what, count):
    code, out, _ = run(capsys, "enumerate", what, "--lattice", square, "--count-only")
    assert code == 0
    assert out.strip() == str(count)


def test_enumerate_submonoid_ops(capsys, square):
    for op, expected in (("meet", "7"), ("join", "7")):
        code, out, _ = run(
            capsys, "enumerate", "submonoid", "--lattice", square, "--op", op, "--count-only"
        )
        assert code == 0
        assert out.strip() == expected


def test_verify_pass_and_report_shape(capsys, square):
    code, out, _ = run(capsys, "verify", "fibers", "--lattice", square)
    assert code == 0
    assert "lambda-fibers = 7" in out
    assert out.rstrip().endswith("result: PASS")


def test_verify_json(capsys, square):
    code, out, _ = run(capsys, "verify", "fooqw", "--lattice", square, "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["passed"] is True
    assert doc["format"] == "latfac/1"


def test_verify_polybernoulli(capsys):
    code, out, _ = run(capsys, "verify", "polybernoulli", "--m", "2", "--n", "1")
    assert code == 0
    assert "formula = 23" in out


def test_verify_domain_error_is_machine_readable(capsys, tmp_path):
    path = tmp_path / "n5.json"
    run(capsys, "lattice", "make", "pentagon", "-o", str(path))
    code, out, err = run(capsys, "verify", "matchstick", "--lattice", str(path))
    assert code == 1
    doc = json.loads(err)
    assert doc["error"]["kind"] == "NotModular"


def test_count_report_human(capsys, square):
    code, out, _ = run(capsys, "count", "report", "--lattice", square)
    assert code == 0
    assert "transfer" in out and "both-agree" in out


def test_count_poly_bernoulli(capsys):
    code, out, _ = run(capsys, "count", "poly-bernoulli", "--a", "2", "--b", "2")
    assert code == 0
    assert out.strip() == "14"


def test_count_saturated_grid_checked(capsys):
    code, out, _ = run(capsys, "count", "saturated-grid", "--m", "1", "--n", "1", "--check")
    assert code == 0
    assert out.strip() == "7"


def test_export_dot_with_overlay(capsys, tmp_path, square):
    rel_path = tmp_path / "rel.json"
    rel_path.write_text(json.dumps({"pairs": [[1, 3], [0, 2]]}))
    code, out, _ = run(
        capsys, "export", "dot", "--lattice", square, "--transfer", str(rel_path)
    )
    assert code == 0
    assert out.count("color=red") == 2


def test_export_json(capsys, square):
    code, out, _ = run(capsys, "export", "json", "--lattice", square)
    assert code == 0
    doc = json.loads(out)
    assert doc["format"] == "latfac/1"
    assert len(doc["covers"]) == 4


def test_missing_file_gives_io_error(capsys):
    code, out, err = run(capsys, "enumerate", "transfer", "--lattice", "no-such.json")
    assert code == 1
    assert json.loads(err)["error"]["kind"] == "io"


def test_bad_lattice_file_gives_domain_error(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"labels": ["0", "a", "b"], "covers": [[0, 1], [0, 2]]}))
    code, _, err = run(capsys, "enumerate", "transfer", "--lattice", str(path))
    assert code == 1
    assert json.loads(err)["error"]["kind"] == "NotALattice"


def test_usage_error_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["lattice", "make", "dodecahedron"])
    assert exc.value.code == 2


def test_outputs_are_deterministic(capsys, square):
    first = run(capsys, "verify", "refdisk", "--lattice", square, "--json")
    second = run(capsys, "verify", "refdisk", "--lattice", square, "--json")
    assert first == second
    third = run(capsys, "verify", "refdisk", "--lattice", square, "--json", "--threads", "3")
    assert third == first
