import json

import pytest

from zfpoly.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_poly_pretty_wheel(capsys):
    code, out, _ = run(capsys, "poly", "--family", "wheel:5", "--pretty")
    assert code == 0
    assert out.strip() == "8x^3 + 5x^4 + x^5"


def test_poly_json_single_vertex_path(capsys):
    code, out, _ = run(capsys, "poly", "--family", "path:1")
    assert code == 0
    assert json.loads(out) == {"n": 1, "coeffs": ["0", "1"]}


def test_poly_methods_agree(capsys, tmp_path):
    el = tmp_path / "p4.el"
    el.write_text("4 3\n0 1\n1 2\n2 3\n")
    code, brute, _ = run(capsys, "poly", "--edge-list", str(el), "--method", "brute")
    assert code == 0
    code, closed, _ = run(capsys, "poly", "--family", "path:4", "--method", "closed")
    assert code == 0
    assert json.loads(brute) == json.loads(closed)


@pytest.mark.parametrize(
    "family",
    ["path:12", "cycle:12", "complete:12", "wheel:12", "multipartite:3,4,5",
     "threshold:110011011"],
)
def test_brute_and_closed_methods_agree(capsys, family):
    code, brute, _ = run(capsys, "poly", "--family", family, "--method", "brute")
    assert code == 0
    code, closed, _ = run(capsys, "poly", "--family", family, "--method", "closed")
    assert code == 0
    assert json.loads(brute) == json.loads(closed)


def test_poly_components_method(capsys):
    code, out, _ = run(capsys, "poly", "--graph6", "A?", "--method", "components")
    assert code == 0
    assert json.loads(out) == {"n": 2, "coeffs": ["0", "0", "1"]}


def test_poly_requires_one_source(capsys):
    code, _, err = run(capsys, "poly", "--family", "path:3", "--graph6", "Bg")
    assert code == 2 and "exactly one" in err


def test_poly_closed_rejects_plain_graphs(capsys):
    code, _, err = run(capsys, "poly", "--graph6", "Bg", "--method", "closed")
    assert code == 4


def test_poly_closed_rejects_family_without_formula(capsys):
    code, _, err = run(capsys, "poly", "--family", "star:4", "--method", "closed")
    assert code == 4


def test_poly_graph6_file_input(capsys, tmp_path):
    g6 = tmp_path / "g.g6"
    g6.write_text(">>graph6<<Bg\n")
    code, out, _ = run(capsys, "poly", "--graph6", str(g6))
    assert code == 0
    assert json.loads(out)["coeffs"] == ["0", "2", "3", "1"]


def test_poly_size_cap_exit(capsys, monkeypatch):
    monkeypatch.setenv("ZFPOLY_MAX_N", "3")
    code, _, err = run(capsys, "poly", "--family", "path:4")
    assert code == 3


def test_forts_listing(capsys):
    code, out, _ = run(capsys, "forts", "--family", "path:3")
    assert code == 0
    payload = json.loads(out)
    assert payload == {"n": 3, "forts": [[0, 2], [0, 1, 2]]}


def test_forts_min_cover(capsys):
    code, out, _ = run(capsys, "forts", "--family", "complete:4", "--min-cover")
    assert code == 0
    payload = json.loads(out)
    assert payload["min_cover"]["size"] == 3
    assert len(payload["min_cover"]["witness"]) == 3


def test_forts_invalid_family(capsys):
    code, _, err = run(capsys, "forts", "--family", "cycle:2")
    assert code == 2


def test_eval_examples(capsys):
    code, out, _ = run(capsys, "eval", "--family", "path:4", "--at", "1")
    assert code == 0 and out.strip() == "13"
    code, out, _ = run(capsys, "eval", "--family", "complete:3", "--at", "0")
    assert code == 0 and out.strip() == "0"
    code, out, _ = run(capsys, "eval", "--family", "cycle:4", "--at", "2")
    assert code == 0 and out.strip() == "64"


def test_eval_rational_point(capsys):
    code, out, _ = run(capsys, "eval", "--family", "complete:2", "--at", "1/2")
    assert code == 0 and out.strip() == "5/4"  # 2*(1/2) + (1/2)^2


def test_eval_rejects_bad_point(capsys):
    code, _, err = run(capsys, "eval", "--family", "path:3", "--at", "pi")
    assert code == 2


def test_check_suite_passes(capsys):
    code, out, _ = run(capsys, "check", "--suite", "hall", "--max-n", "4")
    assert code == 0
    lines = [json.loads(line) for line in out.strip().splitlines()]
    summary = lines[-1]
    assert summary["record"] == "summary"
    assert summary["passed"] is True
    assert summary["failures"] == 0


def test_check_rejects_unknown_suite(capsys):
    code, _, err = run(capsys, "check", "--suite", "bogus")
    assert code == 2


def test_check_closed_forms_small(capsys):
    code, out, _ = run(capsys, "check", "--suite", "closed-forms", "--max-n", "6")
    assert code == 0
    summary = json.loads(out.strip().splitlines()[-1])
    assert summary["passed"] is True


def test_unknown_family_is_parse_error(capsys):
    code, _, err = run(capsys, "poly", "--family", "moebius:5")
    assert code == 2


def test_malformed_edge_list_is_parse_error(capsys, tmp_path):
    el = tmp_path / "bad.el"
    el.write_text("2 5\n0 1\n")
    code, _, err = run(capsys, "poly", "--edge-list", str(el))
    assert code == 2


def test_missing_file_is_parse_error(capsys):
    code, _, err = run(capsys, "poly", "--edge-list", "/nonexistent/file.el")
    assert code == 2
