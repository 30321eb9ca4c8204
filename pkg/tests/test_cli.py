import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from weakhopf import zoo
from weakhopf.cli import (
    AlgebraSpec,
    ParseError,
    corpus_spec,
    dump_json,
    loads_spec,
    main,
)

GOLDEN = Path(__file__).parent / "golden"
ALGEBRAS = GOLDEN / "algebras"
REPORTS = GOLDEN / "reports"


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def write(tmp_path):
    def _write(doc, name="algebra.json"):
        path = tmp_path / name
        path.write_text(doc if isinstance(doc, str) else json.dumps(doc))
        return str(path)
    return _write


def corpus_doc(name):
    return corpus_spec(name).to_json()


# -- file format ------------------------------------------------------------


@pytest.mark.parametrize("name", zoo.CORPUS_NAMES)
def test_round_trip(name):
    spec = corpus_spec(name)
    again = loads_spec(spec.dumps())
    assert again == spec
    assert again.dumps() == spec.dumps()


def test_round_trip_custom_braid():
    spec = AlgebraSpec(zoo.exterior_algebra())
    assert loads_spec(spec.dumps()).B == zoo.exterior_algebra()


@pytest.mark.parametrize("name", zoo.CORPUS_NAMES)
def test_golden_algebra_files_match_generators(name):
    assert (ALGEBRAS / f"{name}.json").read_text() == corpus_spec(name).dumps()


def test_dump_json_is_sorted_and_compact():
    text = dump_json({"b": [["1", "2"]], "a": {"y": 1, "x": [1, 2]}})
    assert text == '{\n  "a": {\n    "x": [1, 2],\n    "y": 1\n  },\n  "b": [\n    ["1", "2"]\n  ]\n}\n'


@pytest.mark.parametrize("mutation, message", [
    (lambda d: d.pop("tensor_order"), "tensor_order: required field missing"),
    (lambda d: d.update(tensor_order="right-major"), "only \"left-major\""),
    (lambda d: d.update(dim=0), "dim: expected a positive integer"),
    (lambda d: d["mu"][1].__setitem__(3, "x"), "mu[1][3]: 'x' is not an exact rational"),
    (lambda d: d["mu"][0].__setitem__(0, 1), "mu[0][0]: expected a string"),
    (lambda d: d["eps"].__setitem__(0, "0.5"), "eps[0]: '0.5' is not an exact rational"),
    (lambda d: d["delta"].pop(), "delta: expected 4 rows, got 3"),
    (lambda d: d["mu"][0].pop(), "mu[0]: expected 4 entries, got 3"),
    (lambda d: d.update(extra=1), "unknown field(s) extra"),
    (lambda d: d.update(modules={"regular": {"carrier": 1, "action": [["1", "1"]]}}), "reserved"),
    (lambda d: d.update(modules={"m": {"carrier": 1}}), "modules.m"),
    (lambda d: d.update(meta={"k": 3}), "meta:"),
    (lambda d: d.update(braid=[["1"] * 4] * 4), "braid:"),
])
def test_parse_errors_name_the_field(mutation, message):
    doc = corpus_doc("diagonal2")
    mutation(doc)
    with pytest.raises(ParseError) as info:
        loads_spec(json.dumps(doc))
    assert message in str(info.value)


def test_json_syntax_error_reports_line():
    with pytest.raises(ParseError, match="line 2"):
        loads_spec('{\n  "dim": ,\n}')


# -- exit codes -------------------------------------------------------------


def test_pass_exit_zero(write):
    path = write(corpus_doc("z2"))
    for cmd in ("check", "base", "antipode", "report"):
        code, out, _ = run(cmd, path)
        assert code == 0 and "status: pass" in out


def test_fail_exit_one_names_the_law():
    code, out, _ = run("check", str(ALGEBRAS / "mutant_diagonal2.json"))
    assert code == 1
    assert "FAIL unit_weak_comultiplicative " in out
    assert "differing entries" in out


def test_fail_report_json(write):
    code, out, _ = run("check", str(ALGEBRAS / "mutant_diagonal2.json"), "--format", "json")
    doc = json.loads(out)
    assert code == doc["exit_code"] == 1 and doc["status"] == "fail"
    failing = {c["name"] for c in doc["sections"]["axioms"]["checks"] if not c["holds"]}
    assert "unit_weak_comultiplicative" in failing
    w = next(c for c in doc["sections"]["axioms"]["checks"]
             if c["name"] == "unit_weak_comultiplicative")["witness"]
    assert w["differing_entries"] > 0 and w["first_differences"]


def test_parse_error_exit_two(write):
    code, out, err = run("check", write('{"dim": 2}'))
    assert code == 2 and out == ""
    assert "tensor_order" in err


def test_missing_file_exit_two(tmp_path):
    code, _, err = run("check", str(tmp_path / "nope.json"))
    assert code == 2 and "nope.json" in err


def test_bad_arguments_exit_two(write):
    path = write(corpus_doc("z2"))
    assert run("check", path, "--dims", "0")[0] == 2
    assert run("frobnicate", path)[0] == 2


def test_antipode_none_and_require_hopf():
    path = str(ALGEBRAS / "idempotent_monoid.json")
    code, out, _ = run("antipode", path)
    assert code == 0 and "antipode: none" in out
    code, out, _ = run("antipode", path, "--require-hopf", "--format", "json")
    assert code == 1 and json.loads(out)["derived"]["hopf"]["antipode"] == "none"
    assert run("antipode", str(ALGEBRAS / "pair2.json"), "--require-hopf")[0] == 0


def test_custom_braid_refused_for_module_commands():
    path = str(ALGEBRAS / "exterior.json")
    code, _, err = run("module-tensor", path, "regular", "regular")
    assert code == 2 and "custom braid" in err
    assert run("base", path)[0] == 2
    assert run("check", path)[0] == 0


def test_module_tensor(write):
    path = write(corpus_doc("pair2"))
    code, out, _ = run("module-tensor", path, "ideal0", "regular", "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert doc["derived"]["module_tensor"]["carrier"] == 4
    assert run("module-tensor", path, "ideal0", "missing")[0] == 2


def test_module_tensor_orthogonal_points(write):
    doc = corpus_doc("diagonal2")
    doc["modules"] = {"k1": {"carrier": 1, "action": [["1", "0"]]},
                      "k2": {"carrier": 1, "action": [["0", "1"]]}}
    code, out, _ = run("module-tensor", write(doc), "k1", "k2", "--format", "json")
    assert code == 0 and json.loads(out)["derived"]["module_tensor"]["carrier"] == 0


def test_module_tensor_rejects_non_module(write):
    doc = corpus_doc("z2")
    doc["modules"] = {"bad": {"carrier": 1, "action": [["1", "2"]]}}
    code, out, _ = run("module-tensor", write(doc), "bad", "regular")
    assert code == 1 and "FAIL action_" in out


def test_base_values(write):
    code, out, _ = run("base", write(corpus_doc("diagonal2")), "--format", "json")
    base = json.loads(out)["derived"]["base"]
    assert code == 0 and base["R_dim"] == 2 and base["eps_R_eta_R"] == "2"


def test_text_and_json_agree(write):
    path = write(corpus_doc("z3"))
    _, text, _ = run("report", path)
    _, js, _ = run("report", path, "--format", "json")
    doc = json.loads(js)
    assert f"input sha256: {doc['input_sha256']}" in text
    for key, sec in doc["sections"].items():
        assert f"] {key}: {sec['title']}" in text
        for c in sec["checks"]:
            mark = "ok  " if c["holds"] else "FAIL"
            assert f"{mark} {c['name']} ({c['instances']})" in text
    for row in doc["derived"]["hopf"]["antipode"]:
        assert "[" + " ".join(f"{v:>4}" for v in row) + "]" in text
    for row in doc["derived"]["base"]["P"]:
        assert "[" + " ".join(f"{v:>4}" for v in row) + "]" in text


def test_corpus_command():
    code, out, _ = run("corpus")
    assert code == 0 and out.split() == list(zoo.CORPUS_NAMES)
    code, out, _ = run("corpus", "z4")
    assert code == 0 and loads_spec(out) == corpus_spec("z4")
    assert run("corpus", "nope")[0] == 2


# -- golden reports ---------------------------------------------------------


@pytest.mark.parametrize("path", sorted(ALGEBRAS.glob("*.json")), ids=lambda p: p.stem)
def test_golden_reports_byte_exact(path):
    code, out, _ = run("report", str(path), "--format", "json")
    expected = (REPORTS / path.name).read_text()
    assert out == expected
    assert code == json.loads(expected)["exit_code"]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "weakhopf", "check", str(ALGEBRAS / "z2.json")],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "status: pass" in proc.stdout
