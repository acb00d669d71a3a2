import json

import pytest

from conftest import fixture_path
from rees import cli
from rees.field import PrimeField

QUADRIC = fixture_path("quadric_cubic.json")
TABLE1 = fixture_path("table1.json")


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, "--json", *argv)
    return code, json.loads(out), err


def test_info_human(capsys):
    code, out, _ = run(capsys, "info", QUADRIC)
    assert code == 0
    assert "column degrees = [2, 3]" in out
    assert "height check: ok" in out


def test_info_json(capsys):
    code, payload, _ = run_json(capsys, "info", QUADRIC)
    assert code == 0
    assert payload["n"] == 3
    assert payload["col_degrees"] == [2, 3]
    assert payload["height_two"] is True
    assert len(payload["minors"]) == 3


def test_sigmas(capsys):
    code, payload, _ = run_json(capsys, "sigmas", QUADRIC, "-m", "1")
    assert code == 0
    assert payload == {"m": 1, "sigma": [1, 1], "r": 2, "s": 2}


def test_sigmas_requires_level(capsys):
    code, _, err = run(capsys, "sigmas", QUADRIC)
    assert code == 1
    assert "error" in err


def test_bidegrees_grid(capsys):
    code, payload, _ = run_json(capsys, "bidegrees", TABLE1)
    assert code == 0
    assert payload["sigma"] == [3, 0]
    assert payload["x_separator"] == 2
    assert payload["marks"] == [[3, 1, 1], [4, 5, 1], [7, 4, 1],
                                [10, 3, 1], [13, 2, 1], [16, 1, 1]]
    code, out, _ = run(capsys, "bidegrees", TABLE1)
    assert code == 0
    assert "x: " in out and "|" in out


def test_generators_all_levels(capsys):
    code, payload, _ = run_json(capsys, "generators", QUADRIC)
    assert code == 0
    assert [lvl["m"] for lvl in payload["levels"]] == [1]
    records = payload["levels"][0]["records"]
    assert len(records) == 4
    assert all(rec["certificate_ok"] for rec in records)
    assert records[0]["provenance"] == "sym-equation"


def test_generators_single_level_text(capsys):
    code, out, _ = run(capsys, "generators", QUADRIC, "-m", "1")
    assert code == 0
    assert "level m = 1: 4 records" in out
    assert "certificate=ok" in out
    assert "FAILED" not in out


def test_slice_and_trim(capsys):
    code, payload, _ = run_json(capsys, "slice", QUADRIC, "--xdeg", "1")
    assert code == 0
    assert len(payload["records"]) == 6
    assert payload["trimmed"] is False
    code, trimmed, _ = run_json(capsys, "slice", QUADRIC, "--xdeg", "1",
                                "--trim")
    assert code == 0
    assert trimmed["trimmed"] is True
    assert len(trimmed["records"]) <= 6


def test_scroll(capsys):
    code, payload, _ = run_json(capsys, "scroll", QUADRIC, "-m", "1")
    assert code == 0
    assert payload["sigma"] == [1, 1]
    assert payload["coordinates"] == ["v10", "v11", "v20", "v21"]
    assert len(payload["gamma"][0]) == 3
    assert len(payload["minors"]) == 3


def test_oracle_hilbert(capsys):
    code, payload, _ = run_json(capsys, "oracle", QUADRIC,
                                "--max-x", "3", "--max-t", "2",
                                "--what", "hilbert")
    assert code == 0
    dims = {(i, j): d for i, j, d in payload["dims"]}
    assert dims[(2, 1)] == 1   # just the quadric equation
    assert dims[(3, 1)] == 3   # its two x-multiples plus the cubic equation
    assert dims[(0, 0)] == 0


def test_oracle_mingens_matches_the_table(capsys):
    code, payload, _ = run_json(capsys, "oracle", QUADRIC,
                                "--max-x", "7", "--max-t", "5")
    assert code == 0
    assert payload["what"] == "mingens"
    # beyond the high-x-degree table ((2,1), (3,1), (2,2) twice) the full
    # window also sees the implicit quintic curve equation at (0,5) and the
    # three boundary-column generators at x-degree d1 - 1
    assert payload["marks"] == [[0, 5, 1], [1, 3, 3],
                                [2, 1, 1], [2, 2, 2], [3, 1, 1]]


def test_oracle_membership(capsys):
    code, payload, _ = run_json(capsys, "oracle", QUADRIC,
                                "--max-x", "3", "--max-t", "2",
                                "--what", "membership")
    assert code == 0
    assert payload["records"]
    assert all(rec["normal_form_zero"] for rec in payload["records"])


def test_oracle_rejects_negative_window(capsys):
    code, _, err = run(capsys, "oracle", QUADRIC,
                       "--max-x=-1", "--max-t", "2")
    assert code == 1
    assert "error" in err


def test_check_passes(capsys):
    code, out, _ = run(capsys, "check", QUADRIC)
    assert code == 0
    assert "all checks passed" in out
    assert "FAIL " not in out


def test_random_is_deterministic(capsys, tmp_path):
    code, first, _ = run(capsys, "random", "--n", "3",
                         "--degrees", "2,3", "--seed", "5")
    assert code == 0
    code, second, _ = run(capsys, "random", "--n", "3",
                          "--degrees", "2,3", "--seed", "5")
    assert first == second
    inst = json.loads(first)
    assert inst["col_degrees"] == [2, 3]
    out_file = tmp_path / "inst.json"
    code, msg, _ = run(capsys, "random", "--n", "3", "--degrees", "2,3",
                       "--seed", "5", "--out", str(out_file))
    assert code == 0 and "wrote" in msg
    loaded = cli.load_instance(str(out_file))
    assert loaded.col_degrees == (2, 3)


def test_random_rejects_bad_degrees(capsys):
    code, _, err = run(capsys, "random", "--n", "3",
                       "--degrees", "3,2", "--seed", "0")
    assert code == 1
    assert "nondecreasing" in err


def test_field_override(capsys, monkeypatch):
    monkeypatch.setenv("REES_FIELD_P", "101")
    code, payload, _ = run_json(capsys, "info", QUADRIC)
    assert code == 0
    assert payload["field"] == {"type": "prime", "p": 101}


def test_missing_file(capsys):
    code, _, err = run(capsys, "info", fixture_path("nope.json"))
    assert code == 1
    assert "error" in err


def test_invalid_instance_shape(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({
        "n": 3, "col_degrees": [1, 1],
        "phi_rows": [["x0", "x1"], ["x1", "x0"]]}))
    code, _, err = run(capsys, "info", str(bad))
    assert code == 1
    assert "phi_rows" in err


def test_usage_errors(capsys):
    assert run(capsys, "no-such-command")[0] == 1
    assert run(capsys)[0] == 1
    assert run(capsys, "--help")[0] == 0


def test_random_instance_function_rejects_rationals():
    from rees.field import RationalField
    with pytest.raises(ValueError, match="prime"):
        cli.random_instance(3, (1, 2), 0, RationalField())


def test_random_instances_are_loadable_across_seeds():
    field = PrimeField(32003)
    degrees = set()
    for seed in range(5):
        inp = cli.random_instance(3, (2, 4), seed, field)
        assert inp.n == 3
        degrees.add(str(inp.phi.rows[0][0]))
    assert len(degrees) > 1
