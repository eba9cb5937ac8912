import json

import pytest

from chercomb.cli import main
from chercomb.contextio import context_to_json, parse_context, ParseError

HOOK_CONTEXT = {
    "e": 5,
    "multicharge": [0],
    "theta": ["0"],
    "g": "1",
    "gamma": [[5, 1, 1, 1, 1]],
    "residues": [0],
    "multiset": {"0": 1},
}

DECORATION_CONTEXT = {
    "e": 4,
    "multicharge": [1] * 10,
    "theta": [f"{78 * k}/11" for k in range(10)],
    "g": "1",
}


@pytest.fixture
def hook_file(tmp_path):
    path = tmp_path / "hook.json"
    path.write_text(json.dumps(HOOK_CONTEXT))
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_parse_context_minimal(hook_file):
    ctx, gctx, eps = parse_context(hook_file)
    assert ctx.e == 5 and gctx is not None and len(gctx) == 3


def test_parse_context_rejects_bad_inputs():
    with pytest.raises(Exception):
        parse_context({"e": 2, "multicharge": [0], "theta": ["0"], "g": "1"})
    with pytest.raises(Exception):
        parse_context({"e": 4, "multicharge": [0, 0], "theta": ["0", "2"], "g": "1"})
    with pytest.raises(ParseError):
        parse_context("{not json")
    with pytest.raises(ParseError):
        parse_context({"e": 4, "multicharge": [0], "theta": ["0"]})


def test_context_round_trip(hook_file):
    ctx, gctx, _ = parse_context(hook_file)
    doc = context_to_json(ctx, gctx)
    ctx2, gctx2, _ = parse_context(json.dumps(doc))
    assert context_to_json(ctx2, gctx2) == doc


def test_validate_command(capsys, hook_file):
    code, out = run(capsys, "validate", hook_file)
    assert code == 0
    payload = json.loads(out)
    assert payload["valid"] and payload["family_size"] == 3


def test_validate_rejects_e2(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({**HOOK_CONTEXT, "e": 2}))
    code, out = run(capsys, "validate", str(bad))
    assert code == 1
    assert "validation" in json.loads(out)["error"]


def test_gamma_set_command(capsys, hook_file):
    code, out = run(capsys, "gamma-set", hook_file)
    payload = json.loads(out)
    assert code == 0
    assert payload["top"] == [[6, 1, 1, 1, 1]]
    assert payload["bottom"] == [[5, 1, 1, 1, 1, 1]]
    assert len(payload["members"]) == 3
    assert payload["hasse_edges"] == [[0, 1], [1, 2]]


def test_tableaux_and_delta_char(capsys, hook_file):
    code, out = run(
        capsys, "tableaux", hook_file, "[[6,1,1,1,1]]", "[[5,1,1,1,1,1]]", "--restricted"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["count"] == 1 and payload["degrees"] == [2]
    code, out = run(capsys, "delta-char", hook_file, "[[6,1,1,1,1]]", "[[5,1,1,1,1,1]]")
    assert code == 0
    assert json.loads(out)["coefficients"] == {"2": 1}


def test_decomp_pair_and_matrix(capsys, hook_file):
    code, out = run(
        capsys,
        "decomp",
        hook_file,
        "--engine",
        "both",
        "--pair",
        "[[6,1,1,1,1]]",
        "[[5,1,1,1,1,1]]",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["coefficients"] == {"2": 1}
    assert payload["valid_any_field"] is True
    code, out = run(capsys, "decomp", hook_file, "--matrix", "--engine", "kn")
    assert code == 0
    entries = json.loads(out)["entries"]
    assert entries["0,2"] == {"2": 1}
    code, out_nested = run(capsys, "decomp", hook_file, "--matrix", "--engine", "nested")
    assert code == 0
    assert json.loads(out_nested)["entries"] == entries
    code, out_both = run(capsys, "decomp", hook_file, "--matrix", "--engine", "both")
    assert code == 0
    assert json.loads(out_both)["entries"] == entries


def test_decomp_latex_format(capsys, hook_file):
    code, out = run(
        capsys,
        "decomp",
        hook_file,
        "--pair",
        "[[6,1,1,1,1]]",
        "[[5,1,1,1,1,1]]",
        "--format",
        "latex",
    )
    assert code == 0 and out.strip() == "t^{2}"


def test_terrain_ascii(capsys, tmp_path):
    path = tmp_path / "dec.json"
    path.write_text(json.dumps(DECORATION_CONTEXT))
    mu = "[[1],[1],[],[],[1],[],[1],[],[1],[1]]"
    lam = "[[1],[1],[1],[1],[],[1],[1],[],[],[]]"
    code, out = run(
        capsys, "terrain", str(path), mu, "--decorate", lam, "--residue", "1",
        "--render", "ascii",
    )
    assert code == 0
    deco_line = out.splitlines()[0]
    assert [i + 1 for i, ch in enumerate(deco_line) if ch == "("] == [3, 4, 6]
    assert [i + 1 for i, ch in enumerate(deco_line) if ch == ")"] == [5, 9, 10]
    code, out = run(capsys, "terrain", str(path), mu, "--decorate", lam, "--residue", "1")
    payload = json.loads(out)
    assert payload["pairs"] == [[4, 5], [6, 9], [3, 10]]


def test_terrain_svg(capsys, tmp_path):
    path = tmp_path / "dec.json"
    path.write_text(json.dumps(DECORATION_CONTEXT))
    mu = "[[1],[1],[],[],[1],[],[1],[],[1],[1]]"
    code, out = run(capsys, "terrain", str(path), mu, "--residue", "1", "--render", "svg")
    assert code == 0 and out.startswith("<svg") and "polyline" in out


def test_chi_compare(capsys, tmp_path):
    first = tmp_path / "a.json"
    first.write_text(
        json.dumps(
            {
                "e": 5,
                "multicharge": [0],
                "theta": ["0"],
                "g": "1",
                "gamma": [[30] * 6 + [28, 20, 19, 19, 15, 11, 9, 7] + [3] * 6],
                "residues": [0],
                "multiset": {"0": 2},
            }
        )
    )
    second = tmp_path / "b.json"
    second.write_text(
        json.dumps(
            {
                "e": 5,
                "multicharge": [0],
                "theta": ["0"],
                "g": "1",
                "gamma": [[10] * 4 + [9] + [5] * 4 + [3] * 3 + [1] * 8],
                "residues": [0],
                "multiset": {"0": 2},
            }
        )
    )
    code, out = run(capsys, "chi", str(first), "--compare", str(second))
    assert code == 0
    payload = json.loads(out)
    assert payload["status"] == "equivalent"
    assert set(payload["rules_used"]) == {"ii", "v"}


def test_transport_command(capsys, tmp_path, hook_file):
    target = tmp_path / "target.json"
    target.write_text(
        json.dumps(
            {
                "e": 11,
                "multicharge": [1, 1, 1],
                "theta": ["-5", "0", "4"],
                "g": "0.99",
                "gamma": [[], [2, 1], []],
                "residues": [1],
                "multiset": {"1": 1},
            }
        )
    )
    code, out = run(
        capsys, "transport", hook_file, "--target", str(target), "--shape", "[[6,1,1,1,1]]"
    )
    assert code == 0
    assert json.loads(out)["target"] == [[1], [2, 1], []]


def test_tensor_factor_command(capsys, tmp_path):
    path = tmp_path / "runner.json"
    path.write_text(
        json.dumps(
            {
                "e": 4,
                "multicharge": [3, 1, 3, 3, 3, 1, 3],
                "theta": ["-3", "-1", "1", "3", "5", "9", "11"],
                "g": "0.99",
                "gamma": [[], [], [], [], [], [], []],
                "residues": [1, 3],
                "multiset": {"1": 1, "3": 3},
            }
        )
    )
    code, out = run(capsys, "tensor-factor", str(path), "--verify")
    assert code == 0
    payload = json.loads(out)
    assert payload["verified"] and payload["family_size"] == 20


def test_decomp_matrix_with_jobs(capsys, hook_file):
    code, out = run(capsys, "decomp", hook_file, "--matrix", "--engine", "kn", "--jobs", "2")
    assert code == 0
    assert json.loads(out)["entries"]["0,2"] == {"2": 1}


def test_selfcheck_command(capsys):
    code, out = run(capsys, "selfcheck", "--count", "5", "--seed", "3")
    assert code == 0
    assert json.loads(out)["ok"]


def test_csv_format(capsys, hook_file):
    code, out = run(capsys, "gamma-set", hook_file, "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "index,multipartition"
    assert len(lines) == 4


def test_out_file(capsys, tmp_path, hook_file):
    dest = tmp_path / "out.json"
    code, _ = run(capsys, "validate", hook_file, "--out", str(dest))
    assert code == 0
    assert json.loads(dest.read_text())["valid"]
