import io
import json
import shutil
import subprocess
import sys

import pytest

from superschur import abelian, heisenberg_even, heisenberg_odd, model_filiform
from superschur.cli import main, table_rows
from superschur.core import Field
from superschur.serialize import (
    DocumentError,
    algebra_to_doc,
    doc_to_algebra,
    doc_to_extension,
    dumps,
    extension_to_doc,
)
from superschur.extensions import trivial_extension
from superschur.families import cover_heisenberg_odd


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def h1(tmp_path):
    p = tmp_path / "h1.json"
    p.write_text(dumps(algebra_to_doc(heisenberg_odd(1))))
    return p


# serialization


def test_algebra_document_roundtrip_is_byte_identical():
    text = dumps(algebra_to_doc(heisenberg_odd(2)))
    assert dumps(algebra_to_doc(doc_to_algebra(json.loads(text)))) == text


def test_document_layout():
    doc = algebra_to_doc(heisenberg_odd(1))
    assert doc["field"] == "rational"
    assert doc["basis"][0] == {"name": "u1", "parity": 0}
    assert doc["brackets"] == [{"left": 0, "right": 2, "value": [[1, "1"]]}]


def test_prime_field_document():
    doc = algebra_to_doc(model_filiform(2, 1, Field(7)))
    assert doc["field"] == {"prime": 7}
    assert doc_to_algebra(doc).field == Field(7)


def test_unsorted_document_is_canonicalised():
    doc = algebra_to_doc(model_filiform(3, 2))
    doc["brackets"].reverse()
    L = doc_to_algebra(doc)
    assert algebra_to_doc(L) == algebra_to_doc(model_filiform(3, 2))


@pytest.mark.parametrize("mutate", [
    lambda d: d["brackets"][0]["value"][0].__setitem__(1, "2/4"),
    lambda d: d["brackets"][0]["value"][0].__setitem__(1, "0.5"),
    lambda d: d["brackets"][0]["value"][0].__setitem__(1, 1),
    lambda d: d["brackets"][0].__setitem__("left", 99),
    lambda d: d["basis"][0].__setitem__("parity", 2),
    lambda d: d.__setitem__("field", {"prime": 4}),
    lambda d: d.__setitem__("field", "real"),
    lambda d: d["brackets"].append(dict(d["brackets"][0])),
    lambda d: d.pop("basis"),
])
def test_malformed_documents_are_rejected(mutate):
    doc = algebra_to_doc(heisenberg_odd(1))
    mutate(doc)
    with pytest.raises(DocumentError):
        doc_to_algebra(doc)


def test_extension_document_roundtrip():
    e = cover_heisenberg_odd(2)
    text = dumps(extension_to_doc(e))
    e2 = doc_to_extension(json.loads(text))
    assert dumps(extension_to_doc(e2)) == text
    assert e2.kernel == e.kernel


def test_extension_kernel_may_be_given_by_indices():
    e = cover_heisenberg_odd(1)
    doc = extension_to_doc(e)
    doc["kernel"] = [e.total.index("w"), e.total.index("m")]
    assert doc_to_extension(doc).kernel == e.kernel


# commands


def test_multiplier_h2(h1):
    assert run("multiplier", str(h1), "--method", "h2") == (0, "(1|1)\n", "")


def test_multiplier_hopf_variants(h1):
    assert run("multiplier", str(h1), "--method", "hopf")[:2] == (0, "(1|1)\n")
    assert run("multiplier", str(h1), "--method", "hopf", "--denominator", "rr")[:2] == (0, "(2|1)\n")
    assert run("multiplier", str(h1), "--method", "hopf", "--class-bound", "4")[:2] == (0, "(1|1)\n")


def test_multiplier_rejects_small_class_bound(h1):
    code, _, err = run("multiplier", str(h1), "--method", "hopf", "--class-bound", "2")
    assert code == 2 and "class-bound" in err


def test_table_heisenberg_odd_csv():
    code, out, _ = run("table", "heisenberg-odd", "--max", "4", "--format", "csv")
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "parameters,computed_even,computed_odd,formula_even,formula_odd,match"
    assert len(lines) == 5
    assert all(line.endswith(",true") for line in lines[1:])


def test_table_json_and_exit_code_tracks_mismatch():
    code, out, _ = run("table", "heisenberg-even", "--max", "2", "--format", "json")
    rows = json.loads(out)
    assert code == 0 and len(rows) == 5 and all(r["match"] for r in rows)
    rows = table_rows("model_filiform", 3)
    expected = 1 if any(not r["match"] for r in rows) else 0
    assert run("table", "model-filiform", "--max", "3")[0] == expected


def test_validate_reports_skew_violation(tmp_path):
    doc = algebra_to_doc(heisenberg_odd(1))
    b = doc["brackets"][0]
    doc["brackets"].append({"left": b["right"], "right": b["left"], "value": [[1, "5"]]})
    p = tmp_path / "broken.json"
    p.write_text(json.dumps(doc))
    code, out, _ = run("validate", str(p))
    assert code == 1
    assert "skew violation at (u1, w1)" in out


def test_validate_reports_jacobi_violation(tmp_path):
    # [u1, z] = u1 in the 3-dim Heisenberg algebra breaks Jacobi at (u1, v1, z)
    doc = algebra_to_doc(heisenberg_even(1, 0))
    doc["brackets"].append({"left": 0, "right": 2, "value": [[0, "1"]]})
    p = tmp_path / "j.json"
    p.write_text(dumps(doc))
    code, out, _ = run("validate", str(p))
    assert code == 1 and "jacobi violation" in out


def test_validate_ok(h1):
    code, out, _ = run("validate", str(h1))
    assert code == 0 and out.startswith("ok")


def test_non_reduced_scalar_exits_2(tmp_path):
    doc = algebra_to_doc(heisenberg_odd(1))
    doc["brackets"][0]["value"][0][1] = "2/4"
    p = tmp_path / "bad.json"
    p.write_text(json.dumps(doc))
    code, _, err = run("validate", str(p))
    assert code == 2 and "2/4" in err


def test_malformed_json_and_missing_file(tmp_path):
    p = tmp_path / "x.json"
    p.write_text("{")
    assert run("validate", str(p))[0] == 2
    assert run("validate", str(tmp_path / "nope.json"))[0] == 2


def test_bad_arguments_exit_2():
    assert run("family", "heisenberg-odd", "--n", "0")[0] == 2
    assert run("family", "nope")[0] == 2
    assert run("table", "heisenberg-odd", "--max", "0")[0] == 2
    assert run()[0] == 2


def test_canonicalize_notice(tmp_path):
    doc = algebra_to_doc(model_filiform(3, 1))
    doc["brackets"].reverse()
    p = tmp_path / "u.json"
    p.write_text(json.dumps(doc))
    code, out, err = run("canonicalize", str(p))
    assert code == 0 and "notice" in err
    assert out == dumps(algebra_to_doc(model_filiform(3, 1)))


def test_invariants(h1):
    code, out, _ = run("invariants", str(h1))
    doc = json.loads(out)
    assert code == 0
    assert doc["center"]["sdim"] == {"even": 0, "odd": 1}
    assert doc["nilpotency_class"] == 2
    assert doc["lower_central_series"][-1] == {"even": 0, "odd": 0}


def test_family_cover_and_verify_stem(tmp_path):
    code, out, _ = run("family", "heisenberg-odd", "--n", "2", "--cover")
    assert code == 0
    p = tmp_path / "c.json"
    p.write_text(out)
    code, out, _ = run("verify-stem", str(p), "--maximal")
    assert code == 0
    assert "maximal: yes" in out
    assert run("check-quotient", str(p))[:2] == (0, "isomorphism: yes\n")


def test_heisenberg_even_cover_comes_from_free_presentation(tmp_path):
    code, out, _ = run("family", "heisenberg-even", "--p", "1", "--q", "1", "--cover")
    assert code == 0
    p = tmp_path / "c.json"
    p.write_text(out)
    assert run("verify-stem", str(p), "--maximal")[0] == 0


def test_verify_stem_fails_on_trivial_extension(tmp_path):
    p = tmp_path / "t.json"
    p.write_text(dumps(extension_to_doc(trivial_extension(abelian(1, 0), heisenberg_odd(1)))))
    code, out, _ = run("verify-stem", str(p))
    assert code == 1 and "stem: no" in out
    code, out, _ = run("stem-deform", str(p))
    assert code == 0
    q = tmp_path / "d.json"
    q.write_text(out)
    code, out, _ = run("verify-stem", str(q))
    assert code == 0 and "stem: yes" in out


def test_output_is_deterministic():
    a = run("family", "model-filiform", "--n", "3", "--m", "2", "--cover", "--from-free")
    b = run("family", "model-filiform", "--n", "3", "--m", "2", "--cover", "--from-free")
    assert a == b and a[0] == 0


@pytest.mark.skipif(shutil.which("superschur") is None, reason="console script not installed")
def test_console_script(h1):
    res = subprocess.run(["superschur", "multiplier", str(h1), "--method", "h2"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout == "(1|1)\n"


def test_module_entry_point(h1):
    res = subprocess.run([sys.executable, "-m", "superschur.cli", "multiplier", str(h1), "--method", "h2"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout == "(1|1)\n"
