from __future__ import annotations

import io
import json

import pytest

from suborbit_lab import cli
from suborbit_lab.catalog import evaluate_expression, parse_catalog
from suborbit_lab.errors import BadConstructorInput, ParseError, ValidationError

CATALOG = "\n".join(
    json.dumps(x)
    for x in [
        {"name": "C4", "kind": "perm_gens", "degree": 4, "gens": [[1, 2, 3, 0]]},
        {"name": "S3", "kind": "construction", "expr": "sym(3)"},
        {"name": "hol5", "kind": "construction", "expr": "holomorph(5)"},
        {"name": "Q8", "kind": "construction", "expr": "quaternion()"},
        {"name": "wreath", "kind": "perm_gens", "degree": 6, "gens": [[1, 0, 2, 3, 4, 5], [2, 3, 4, 5, 0, 1]]},
        {
            "name": "D4",
            "kind": "perm_gens",
            "degree": 4,
            "gens": [[1, 2, 3, 0], [0, 3, 2, 1]],
            "regular_subgroup": [[1, 2, 3, 0]],
        },
    ]
)

# required keys per report kind; the values are type checks
SHAPES = {
    "analyze": {
        "name": str, "transitive": bool, "degree": int, "order": int, "ratio": str, "sizes": dict,
        "d": int, "fixed_block": bool, "gap_violation": bool, "conjecture": dict, "ok": bool,
    },
    "gap_scan": {"count": int, "histogram": dict, "violations": list, "families": dict, "conjecture_counterexamples": list},
    "conjecture": {"name": str, "ratio": str, "conforms": bool},
    "census_pair": {
        "G": str, "R": str, "kappa": int, "c_R": int, "case": str, "bounds": dict,
        "digraph_bound": str, "ok": bool,
    },
    "tau": {"instance": str, "fix": dict, "kappa": int, "kappa_burnside": str, "outcomes": list, "passed": bool},
    "s_set": {"family": str, "t": int, "ell": int, "s_set": int, "expected": int, "ok": bool},
    "verify_gl42": {
        "coverage": str, "scanned": int, "distinct_subgroups": int, "histogram": dict, "violations": list,
        "max_ratio_below_one": str, "extremal_classes": list, "passed": bool,
    },
}


def check_shape(obj: dict) -> None:
    shape = SHAPES[obj["kind"]]
    for key, typ in shape.items():
        assert key in obj, f"{obj['kind']} report lacks {key}"
        assert isinstance(obj[key], typ), f"{key} should be {typ.__name__}"
    if obj["kind"] == "census_pair":
        assert set(obj["bounds"]) == {"b96", "b24", "b48"}
        assert obj["case"] in ("a", "b", "c", "violation")


def run(argv, stdin: str | None = None, monkeypatch=None):
    out, err = io.StringIO(), io.StringIO()
    if stdin is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = cli.main(argv, out, err)
    lines = [json.loads(x) for x in out.getvalue().splitlines()]
    for line in lines:
        check_shape(line)
    return code, lines, out.getvalue(), err.getvalue()


@pytest.fixture
def catalog(tmp_path):
    path = tmp_path / "groups.jsonl"
    path.write_text(CATALOG + "\n")
    return str(path)


def test_parse_catalog_examples():
    assert parse_catalog(io.StringIO("")) == []
    entries = parse_catalog(io.StringIO('{"name":"C4","kind":"perm_gens","degree":4,"gens":[[1,2,3,0]]}'))
    assert len(entries) == 1 and entries[0].resolve().group.order == 4
    with pytest.raises(ValidationError) as exc:
        parse_catalog(io.StringIO('\n{"name":"bad","kind":"perm_gens","degree":4,"gens":[[0,0,1,2]]}'))
    assert exc.value.line == 2
    with pytest.raises(ParseError):
        parse_catalog(io.StringIO("{not json"))
    with pytest.raises(ValidationError):
        parse_catalog(io.StringIO('{"name":"a","kind":"perm_gens","degree":2,"gens":[[1,0]]}\n' * 2))
    with pytest.raises(ValidationError):
        parse_catalog(io.StringIO('{"name":"a","kind":"blob"}'))


def test_closure_cap_is_a_validation_error(monkeypatch):
    monkeypatch.setenv("SUBORBIT_LAB_CLOSURE_CAP", "100")
    with pytest.raises(ValidationError):
        parse_catalog(io.StringIO('{"name":"s6","kind":"construction","expr":"sym(6)"}'))


def test_group_table_entries_round_trip():
    out = io.StringIO()
    assert cli.main(["construct", "dicyclic(cyclic(6), 3)", "--name", "Dic12"], out, io.StringIO()) == 0
    entry = json.loads(out.getvalue())
    assert entry["kind"] == "group_table" and entry["order"] == 12
    [parsed] = parse_catalog(io.StringIO(out.getvalue()))
    assert parsed.resolve().table.order == 12


def test_expression_whitelist():
    assert evaluate_expression("direct(cyclic(2), cyclic(3))").order == 6
    for bad in ["__import__('os')", "cyclic(2) + cyclic(3)", "open('x')", "cyclic(n=3)", "cyclic('a')"]:
        with pytest.raises(BadConstructorInput):
            evaluate_expression(bad)


def test_analyze(catalog):
    code, lines, _, err = run(["analyze", catalog])
    assert code == 0, err
    by_name = {x["name"]: x for x in lines}
    assert by_name["hol5"]["ratio"] == "1/5"
    assert by_name["wreath"]["family"] == "elementary_abelian_index_2"
    assert by_name["D4"]["family"] == "stabilizer_order_2"


def test_analyze_extremal_group(tmp_path):
    path = tmp_path / "ext.jsonl"
    path.write_text('{"name":"g48","kind":"construction","expr":"extremal(12)"}\n')
    code, [line], _, _ = run(["analyze", str(path)])
    assert code == 0 and line["ratio"] == "5/6" and line["lemma"]["passed"]


def test_conjecture(catalog):
    code, lines, _, _ = run(["conjecture", catalog])
    assert code == 0 and all(x["conforms"] for x in lines)


def test_census(catalog):
    code, lines, _, err = run(["census", catalog, "--lemma"])
    assert code == 0, err
    kinds = {x["kind"] for x in lines}
    assert kinds == {"census_pair", "tau", "s_set"}
    assert all(x["ok"] for x in lines if x["kind"] in ("census_pair", "s_set"))


def test_gap_scan_is_deterministic():
    a = run(["gap-scan", "--sample", "40", "--seed", "7"])
    b = run(["gap-scan", "--sample", "40", "--seed", "7"])
    assert a[0] == 0 and a[2] == b[2]
    assert a[1][0]["count"] == 40


def test_stdin_catalog(monkeypatch):
    code, lines, _, _ = run(["gap-scan", "-"], stdin=CATALOG, monkeypatch=monkeypatch)
    assert code == 0 and lines[0]["violations"] == []


def test_usage_errors(tmp_path):
    assert run([])[0] == 2
    assert run(["bogus"])[0] == 2
    assert run(["gap-scan"])[0] == 2
    assert run(["gap-scan", "--sample", "5"])[0] == 2
    assert run(["census"])[0] == 2
    assert run(["analyze", str(tmp_path / "missing.jsonl")])[0] == 2
    assert run(["construct", "sym(3)"])[0] == 2
    bad = tmp_path / "bad.jsonl"
    bad.write_text('{"name":"x","kind":"perm_gens","degree":4,"gens":[[0,0,1,2]]}\n')
    code, _, _, err = run(["analyze", str(bad)])
    assert code == 2 and "line 1" in err


def test_verify_gl42_cli():
    code, [line], _, _ = run(["verify-gl42"])
    assert code == 0
    assert line["violations"] == [] and len(line["extremal_classes"]) == 2
    assert line["max_ratio_below_one"] == "5/6"
    assert "at most two elements" in line["coverage"]
