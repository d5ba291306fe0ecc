"""CLI verbs, exit codes, output modes."""

import json
import subprocess
import sys

import pytest

from bitopdual.cli import (
    EXIT_CAP_EXCEEDED,
    EXIT_CHECK_FAILED,
    EXIT_PARSE_ERROR,
    EXIT_PASS,
    EXIT_USAGE,
    main,
)

CHAIN2 = "elements: 2\ncovers:\n0 < 1\n"
DIAMOND = "elements: 4\ncovers:\n0 < 1\n0 < 2\n1 < 3\n2 < 3\n"
M3 = "elements: 5\ncovers:\n0 < 1\n0 < 2\n0 < 3\n1 < 4\n2 < 4\n3 < 4\n"


@pytest.fixture
def files(tmp_path):
    (tmp_path / "chain2.lat").write_text(CHAIN2)
    (tmp_path / "diamond.lat").write_text(DIAMOND)
    (tmp_path / "m3.lat").write_text(M3)
    (tmp_path / "alg.mva").write_text("powerset L=chain2.lat P=2\nR:\n0 1\n")
    (tmp_path / "plain.mva").write_text("powerset L=chain2.lat P=2\n")
    (tmp_path / "space.bts").write_text(
        "points: 2\ntau1:\n{0}\n{1}\ntau2:\n{0}\n{1}\nR:\n0 1\n"
    )
    (tmp_path / "model.km").write_text(
        "worlds: 2\nR:\n0 1\nval:\np @ 0 = 0\np @ 1 = 1\n"
    )
    (tmp_path / "empty.lat").write_text("")
    return tmp_path


def test_check_lattice_pass(files, capsys):
    code = main(["--machine", "check-lattice", str(files / "chain2.lat")])
    out = capsys.readouterr().out
    assert code == EXIT_PASS
    assert "CHECK residuation PASS" in out


def test_check_lattice_m3_fails_distributivity(files, capsys):
    code = main(["--machine", "check-lattice", str(files / "m3.lat")])
    out = capsys.readouterr().out
    assert code == EXIT_CHECK_FAILED
    line = next(l for l in out.splitlines() if l.startswith("CHECK distributive"))
    assert "FAIL" in line and "(" in line  # witness triple present


def test_check_algebra(files, capsys):
    code = main(["--machine", "check-algebra", str(files / "alg.mva")])
    out = capsys.readouterr().out
    assert code == EXIT_PASS
    assert "CHECK box_meet_preserving PASS" in out


def test_homs_lists_evaluations(files, capsys):
    code = main(["--machine", "homs", str(files / "plain.mva")])
    out = capsys.readouterr().out
    assert code == EXIT_PASS
    assert "INFO count 2" in out


def test_dualize(files, capsys):
    code = main(["--machine", "dualize", str(files / "alg.mva")])
    out = capsys.readouterr().out
    assert code == EXIT_PASS
    assert "INFO points 2" in out
    assert "CHECK alpha_closed_under_successors PASS" in out


def test_roundtrip_algebra_emits_gamma_iso(files, capsys):
    code = main(["--machine", "roundtrip", str(files / "plain.mva")])
    out = capsys.readouterr().out
    assert code == EXIT_PASS
    assert "CHECK gamma_iso PASS" in out


def test_roundtrip_space_needs_lattice(files, capsys):
    code = main(["roundtrip", str(files / "space.bts")])
    assert code == EXIT_USAGE
    code = main(
        ["--machine", "roundtrip", str(files / "space.bts"), "--lattice", str(files / "chain2.lat")]
    )
    out = capsys.readouterr().out
    assert code == EXIT_PASS
    assert "CHECK zeta_iso PASS" in out


def test_vietoris_counts(files, capsys):
    code = main(["--machine", "vietoris", str(files / "space.bts")])
    out = capsys.readouterr().out
    assert code == EXIT_PASS
    assert "INFO members 4" in out
    assert "INFO tau1_opens 16" in out
    assert "CHECK pairwise_boolean PASS" in out


def test_coalg_roundtrip(files, capsys):
    code = main(
        [
            "--machine",
            "coalg-roundtrip",
            str(files / "space.bts"),
            "--lattice",
            str(files / "chain2.lat"),
        ]
    )
    out = capsys.readouterr().out
    assert code == EXIT_PASS
    assert "CHECK object_round_trip[0] PASS" in out


def test_modelcheck_values(files, capsys):
    code = main(
        ["modelcheck", str(files / "chain2.lat"), str(files / "model.km"), "[]p -> T{1} p"]
    )
    out = capsys.readouterr().out
    assert code == EXIT_PASS
    assert "world 0:" in out and "world 1:" in out
    code = main(
        [
            "modelcheck",
            str(files / "chain2.lat"),
            str(files / "model.km"),
            "[]p",
            "--world",
            "0",
        ]
    )
    out = capsys.readouterr().out
    assert "world 0: 1 (1)" in out


def test_parse_error_exit_code(files, capsys):
    code = main(["check-lattice", str(files / "empty.lat")])
    assert code == EXIT_PARSE_ERROR


def test_missing_file_is_parse_error(files):
    assert main(["check-lattice", str(files / "nope.lat")]) == EXIT_PARSE_ERROR


def test_cap_exceeded_exit_code(files, capsys):
    (files / "big.mva").write_text("powerset L=diamond.lat P=12\n")
    code = main(["--max-carrier", "1000", "check-algebra", str(files / "big.mva")])
    assert code == EXIT_CAP_EXCEEDED


def test_unknown_verb_exit_code(capsys):
    assert main(["frobnicate"]) == EXIT_USAGE


def test_generate_deterministic(capsys):
    assert main(["generate", "lattice", "--seed", "3"]) == EXIT_PASS
    first = capsys.readouterr().out
    assert main(["generate", "lattice", "--seed", "3"]) == EXIT_PASS
    assert capsys.readouterr().out == first
    assert first.startswith("elements:")


def test_json_mode(files, capsys):
    code = main(["--json", "check-lattice", str(files / "chain2.lat")])
    out = capsys.readouterr().out
    assert code == EXIT_PASS
    payload = json.loads(out)
    names = {c["name"] for c in payload["checks"]}
    assert "distributive" in names and all(c["passed"] for c in payload["checks"])


def test_battery_subprocess_deterministic():
    cmd = [
        sys.executable,
        "-m",
        "bitopdual.cli",
        "--machine",
        "battery",
        "--seed",
        "0",
        "--oracle-budget",
        "100000",
        "--vietoris-count",
        "10",
    ]
    first = subprocess.run(cmd, capture_output=True, text=True, timeout=600)
    second = subprocess.run(cmd, capture_output=True, text=True, timeout=600)
    assert first.returncode == EXIT_PASS, first.stdout[-2000:] + first.stderr[-2000:]
    assert first.stdout == second.stdout
    assert first.stdout.count("FAIL") == 0
