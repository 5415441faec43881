import json
from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nctop.cli import main
from nctop.errors import ParseError
from nctop.formats import (
    dumps,
    format_word,
    load_quiver,
    parse_word,
    quiver_from_dict,
    quiver_to_dict,
    rep_from_dict,
    rep_to_dict,
)
from nctop.opens import Flavor, Letter, Word
from nctop.quiver import FIXTURES
from nctop.report import Report
from nctop.rep import enumerate_universe

FIX = Path(__file__).resolve().parent.parent / "fixtures"
X_IND = str(FIX / "A2_X_ind.json")
SPLIT = str(FIX / "A2_S1_plus_S2.json")


def run_json(capsys, *argv):
    code = main(["--json", *argv])
    out = capsys.readouterr().out
    return code, Report.from_json(out)


def test_jh(capsys):
    code, r = run_json(capsys, "jh", "A2", X_IND)
    assert code == 0 and r.details["sequences"] == ["S2 S1"]
    code, r = run_json(capsys, "jh", str(FIX / "A2.json"), SPLIT)
    assert code == 0 and len(r.details["sequences"]) == 2


def test_malformed_matrix_exits_2(tmp_path, capsys):
    bad = json.loads(Path(X_IND).read_text())
    bad["maps"]["a"] = [[1, 0]]
    f = tmp_path / "bad.json"
    f.write_text(json.dumps(bad))
    assert main(["jh", "A2", str(f)]) == 2
    assert "arrow a" in capsys.readouterr().err


def test_unknown_fixture_exits_2(capsys):
    assert main(["jh", "nope", X_IND]) == 2


def test_member(capsys):
    code, r = run_json(capsys, "member", "A2", X_IND, "l {S2}{S1}")
    assert code == 0 and r.witnesses == ["S2 S1"]
    code, r = run_json(capsys, "member", "A2", X_IND, "l {S1}{S2}")
    assert code == 1 and not r.verdict
    code, r = run_json(capsys, "member", "A2", X_IND, "o {S1}")
    assert code == 0


def test_axioms_pass_on_semisimple(capsys):
    code, r = run_json(capsys, "axioms", "N2", "--flavor", "l")
    assert code == 0
    assert all(row["status"] == "pass" for row in r.details["axioms"])
    assert r.scale["universe"] > 0 and r.caveats


def test_axioms_left_flavor_probes_right_column(capsys):
    _, r = run_json(capsys, "axioms", "A2", "--flavor", "l")
    rows = {row["axiom"]: row for row in r.details["axioms"]}
    assert rows["A2-left"]["status"] == "pass"
    assert rows["A2-right"]["status"] == "fails (probe)"
    wit = next(w for w in r.witnesses if w["axiom"] == "A2-right")
    assert wit["rep"]["dim"] == {"1": 1, "2": 1} and wit["rep"]["maps"] == {"a": [[1]]}


def test_axioms_scattered_fails(capsys):
    code, r = run_json(capsys, "axioms", "A2", "--flavor", "o")
    assert code == 1
    wit = next(w for w in r.witnesses if w["axiom"] == "A2-left")
    assert wit["rep"]["maps"] == {"a": [[1]]}


def test_monoid(capsys):
    code, r = run_json(capsys, "monoid", "A2", "relations")
    assert code == 0 and set(r.details["relations"]) == {"R2R2R1 = R2R1R2", "R2R1R1 = R1R2R1"}
    assert run_json(capsys, "monoid", "A2", "eq", "R2R2R1", "R2R1R2")[0] == 0
    assert run_json(capsys, "monoid", "A2", "eq", "R1R2", "R2R1")[0] == 1
    assert run_json(capsys, "monoid", "A2", "prefix", "R2R2R1", "R2R1")[0] == 0
    code, r = run_json(capsys, "monoid", "A2", "semcheck")
    assert code == 0 and r.caveats
    assert main(["monoid", "L1", "relations"]) == 2
    assert main(["monoid", "A2", "eq", "R1"]) == 2


def test_check(capsys):
    assert run_json(capsys, "check", "N2", "prop4")[0] == 0
    assert run_json(capsys, "check", "L1", "prop4")[0] == 0
    assert run_json(capsys, "check", "A2", "prop2", "l {S2}{S1}")[0] == 0
    code, r = run_json(capsys, "check", "A2", "equiv", "l {S2}{S1}", "l {S1}{S2}")
    assert code == 1 and r.witnesses[0]["maps"] == {"a": [[1]]}


def test_dot(capsys):
    assert main(["dot", "N2"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("digraph leq {") and "->" in out


def test_human_rendering(capsys):
    assert main(["member", "A2", X_IND, "r {S1}"]) == 0
    out = capsys.readouterr().out
    assert "verdict: true" in out and "caveat:" in out


def test_parse_word():
    q = FIXTURES["L1"]()
    w = parse_word("r ~{S0} *", q, 2)
    assert w == Word((Letter.of("S1"), Letter.of("S0", "S1")), Flavor.RIGHT)
    assert parse_word(format_word(w), q, 2) == w
    a2 = FIXTURES["A2"]()
    assert parse_word("l {}", a2, 2).letters == (Letter(frozenset()),)
    for bad in ["{S1}", "l {S3}", "l ~{S1}", "l {S1"]:
        with pytest.raises(ParseError):
            parse_word(bad, a2, 2)


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_quiver_round_trip(name):
    q = FIXTURES[name]()
    assert quiver_from_dict(json.loads(dumps(quiver_to_dict(q)))) == q
    assert load_quiver(str(FIX / f"{name}.json")) == q


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_rep_round_trip(name):
    q = FIXTURES[name]()
    for m in enumerate_universe(q, 2, 2):
        assert rep_from_dict(json.loads(dumps(rep_to_dict(m))), q) == m


@settings(max_examples=60, deadline=None)
@given(st.lists(st.sets(st.sampled_from(["S1", "S2"])), min_size=1, max_size=4), st.sampled_from(list(Flavor)))
def test_word_round_trip(letters, flavor):
    q = FIXTURES["A2"]()
    w = Word(tuple(Letter(frozenset(s)) for s in letters), flavor)
    assert parse_word(format_word(w), q, 2) == w


def test_report_json_round_trip():
    r = Report("x", {"p": 2}, False, ["w"], ["c"], {"k": [1]})
    assert Report.from_json(r.to_json()) == r
    assert r.code() == 1
