import json
import os
import subprocess

import pytest

CLI = os.environ.get("HEISFOCK_CLI", "heisfock")


def run(*args, env=None):
    full_env = dict(os.environ)
    if env:
        full_env.update(env)
    proc = subprocess.run([CLI, *args], capture_output=True, text=True, env=full_env)
    return proc.returncode, proc.stdout, proc.stderr


def run_json(*args, **kw):
    code, out, err = run(*args, **kw)
    assert code == 0, err
    return json.loads(out)


def test_decompose():
    assert run_json("partition", "decompose", "--eta", "4,1", "--b", "3") == {"mu": [1, 1], "tau": [1]}


def test_decompose_empty():
    assert run_json("partition", "decompose", "--eta", "0", "--b", "3") == {"mu": [], "tau": []}


def test_decompose_oracle():
    doc = run_json("--oracle", "partition", "decompose", "--eta", "7,4,1", "--b", "3")
    assert doc["oracle"]["agrees"] is True
    assert doc["result"] == {"mu": [1, 1, 1], "tau": [2, 1]}


def test_heis_modp_vacuum():
    doc = run_json("heis-modp", "--tau", "1", "--b", "2", "--p", "5", "--vacuum")
    one_minus = {"monomials": [{"vexp": "0", "c": "1"}, {"vexp": "10", "c": "-1"}]}
    minus_one_plus = {"monomials": [{"vexp": "0", "c": "-1"}, {"vexp": "10", "c": "1"}]}
    assert doc == {"terms": [{"mu": [2], "coeff": one_minus}, {"mu": [1, 1], "coeff": minus_one_plus}]}


def test_output_is_byte_identical():
    args = ("--jobs", "4", "heis", "b_tau", "--tau", "2,1", "--b", "3", "--x", "2,1")
    first = run(*args)
    second = run(*args)
    assert first[0] == 0
    assert first[1] == second[1]
    assert run("heis", "b_tau", "--tau", "2,1", "--b", "3", "--x", "2,1")[1] == first[1]


def test_no_floats_anywhere():
    out = run("verma-hilbert", "--eta", "2,1", "--m", "1/2", "--max-deg", "4")[1]
    doc = json.loads(out)
    assert doc["shift"] == "1/2"
    assert all(isinstance(c, str) for c in doc["coeffs"])
    assert "." not in out


@pytest.mark.parametrize(
    "args",
    [
        ("partition", "stats", "--eta", "1,2"),
        ("partition", "decompose", "--eta", "3,x", "--b", "2"),
        ("label-image", "pos", "--eta", "3", "--tau", "1", "--a", "2", "--b", "4"),
        ("heis-modp", "--tau", "1", "--b", "2", "--p", "4", "--vacuum"),
        ("symfunc", "multiply", "--f", "{bad json", "--g", "1"),
        ("no-such-command",),
        ("supports", "--n", "5"),
    ],
)
def test_validation_errors_exit_2(args):
    code, out, err = run(*args)
    assert code == 2
    assert out == ""
    assert err


@pytest.mark.parametrize(
    "args",
    [
        ("stability-interval", "--z", "3", "--p", "7", "--n", "2"),
        ("label-image", "pos", "--eta", "3", "--tau", "1", "--a", "-1", "--b", "2"),
        ("label-image", "neg", "--eta", "1", "--tau", "1", "--a", "-1", "--b", "2"),
        ("pipeline", "--eta", "2,1", "--a", "1", "--b", "2", "--p", "5", "--table", '{"entries":[]}'),
    ],
)
def test_domain_errors_exit_3(args):
    code, out, err = run(*args)
    assert code == 3
    assert err


def test_stability_interval():
    assert run_json("stability-interval", "--z", "0", "--p", "7", "--n", "2") == {"lo": "-3", "hi": "2"}
    assert run_json("stability-interval", "--z", "0", "--p", "7", "--n", "1") == {"lo": "-inf", "hi": "+inf"}


def test_supports():
    assert run_json("supports", "--n", "5", "--b", "2") == [
        {"k": 5, "l": 0, "dim": 5},
        {"k": 3, "l": 1, "dim": 4},
        {"k": 1, "l": 2, "dim": 3},
    ]


def test_label_images():
    doc = run_json("label-image", "pos", "--eta", "3", "--tau", "1", "--a", "1", "--b", "3")
    assert [img["eta"] for img in doc["images"]] == [[6], [3, 3]]
    doc = run_json("label-image", "neg", "--eta", "1", "--tau", "1", "--a", "-3", "--b", "2")
    assert doc["images"] == [{"eta": [1, 1, 1], "m": "-3/2", "mult": 1}]


def test_oracle_modes_agree():
    for args in (
        ("char-table", "--n", "5"),
        ("lr", "--mu", "2,1", "--nu", "2,1"),
        ("symfunc", "plethysm", "--f", "2", "--b", "2"),
        ("symfunc", "multiply", "--f", "2,1", "--g", "1,1"),
        ("heis", "b_op", "--i", "2", "--b", "2", "--x", "1"),
        ("heis-modp", "--tau", "2", "--b", "2", "--p", "3", "--x", "1"),
        ("verma-hilbert", "--eta", "2,1,1", "--max-deg", "6"),
    ):
        assert run_json("--oracle", *args)["oracle"]["agrees"] is True, args


def test_heis_neg_is_explicit():
    doc = run_json("heis-modp", "--negative", "--tau", "1", "--b", "2", "--p", "5", "--x", "1")
    assert [t["mu"] for t in doc["terms"]] == [[2, 1], [1, 1, 1]] or doc["terms"]


def test_pipeline(tmp_path):
    table = {"entries": [{"mu": [], "class": {"terms": [{"mu": [], "coeff": "1"}]}}]}
    path = tmp_path / "table.json"
    path.write_text(json.dumps(table))
    doc = run_json("pipeline", "--eta", "2", "--a", "1", "--b", "2", "--p", "5", "--table", f"@{path}")
    assert [t["mu"] for t in doc["terms"]] == [[2], [1, 1]]


def test_character_table_cache(tmp_path):
    env = {"FOCK_HEIS_CACHE_DIR": str(tmp_path / "cache")}
    first = run_json("char-table", "--n", "4", env=env)
    cached = tmp_path / "cache" / "char_table_4.json"
    assert cached.exists()
    assert json.loads(cached.read_text()) == first
    assert run_json("char-table", "--n", "4", env=env) == first
    # A corrupted cache file is reported and ignored.
    broken = dict(first)
    broken["values"] = [row[:] for row in first["values"]]
    broken["values"][1][0] += 1
    cached.write_text(json.dumps(broken))
    code, out, err = run("char-table", "--n", "4", env=env)
    assert code == 0
    assert json.loads(out) == first
    assert "warning" in err


def test_output_file(tmp_path):
    target = tmp_path / "out.json"
    code, out, _ = run("--output", str(target), "supports", "--n", "2", "--b", "2")
    assert code == 0
    assert out == ""
    assert json.loads(target.read_text()) == [{"k": 2, "l": 0, "dim": 2}, {"k": 0, "l": 1, "dim": 1}]
