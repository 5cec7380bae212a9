import io
import json

from hypothesis import given, settings, strategies as st

from pvmoduli.cli import (
    SCHEMA, exit_code, main, report_document, report_render, results_from_document,
)
from pvmoduli.suite import STATUSES, CheckResult

results_st = st.lists(
    st.builds(CheckResult,
              id=st.text("abc.", min_size=1, max_size=8),
              status=st.sampled_from(STATUSES),
              witness=st.text(max_size=10),
              runtime=st.floats(0, 10),
              anchor=st.text(max_size=5)),
    max_size=12)


def call(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


@settings(max_examples=100, derandomize=True)
@given(results_st)
def test_exit_code_property(rs):
    assert exit_code(rs) == (1 if any(r.status == "fail" for r in rs) else 0)


@settings(max_examples=100, derandomize=True)
@given(results_st)
def test_structured_roundtrip(rs):
    doc = json.loads(report_render(rs, "structured"))
    assert doc["schema"] == SCHEMA
    back = results_from_document(doc)
    assert [r.stable() for r in back] == [r.stable() for r in rs]
    s = doc["stable"]["summary"]
    assert s["total"] == len(rs) == sum(s[k] for k in STATUSES)


def test_empty_report():
    assert report_render([], "text").strip() == "0 checks: 0 pass, 0 fail, 0 paper_discrepancy"
    assert report_document([])["stable"]["results"] == []


def test_verify_structured_is_deterministic():
    a = call("verify", "--suite", "symmetry", "--format", "structured")
    b = call("verify", "--suite", "symmetry", "--format", "structured")
    assert a[0] == b[0] == 0
    assert json.loads(a[1])["stable"] == json.loads(b[1])["stable"]


def test_config_and_flags(tmp_path):
    cfg = tmp_path / "v.ini"
    cfg.write_text("[verify]\nsuite = symmetry\nformat = structured\n")
    code, out = call("verify", "--config", str(cfg))
    assert code == 0
    ids = [r["id"] for r in json.loads(out)["stable"]["results"]]
    assert ids and all(i.startswith("symmetry.") for i in ids)
    # a flag beats the file
    code, out = call("verify", "--config", str(cfg), "--format", "text")
    assert code == 0 and out.startswith("[symmetry]")


def test_usage_errors(tmp_path):
    assert call("verify", "--check", "nonexistent")[0] == 2
    assert call("verify", "--config", str(tmp_path / "missing.ini"))[0] == 2
    assert call("expr", "x +* 1")[0] == 2
    assert call("expr", "omega")[0] == 2
    assert call("frobnicate")[0] == 2


def test_list():
    code, out = call("verify", "--list")
    assert code == 0 and "pic.K-squared" in out


def test_expr():
    assert call("expr", "(x^2 - 1)/(x - 1)") == (0, "x + 1\n")


def test_intersect():
    assert call("intersect", "K", "K")[1].strip().endswith("5")


def test_limit_and_jets():
    code, out = call("limit", "--chart", "Q0", "--which", "f_pullback")
    assert code == 0 and "k0" in out
    code, out = call("jets", "--pole", "1", "--depth", "1")
    assert code == 0 and "t" in out


def test_symmetry_and_normal_form():
    code, out = call("symmetry")
    assert code == 0 and "16" in out
    code, out = call("normal-form", "--k0", "1/3")
    assert code == 0 and "1/3" in out
