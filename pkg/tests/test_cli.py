import json
import os

import pytest

from fairkit import dumps_instance, fixture
from fairkit.cli import main


@pytest.fixture
def files(tmp_path):
    def write(name, content):
        path = tmp_path / name
        path.write_text(content if isinstance(content, str) else json.dumps(content))
        return str(path)
    return write


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_check_t2_efx_vs_efxpm(files, capsys):
    inst = files("t2.json", dumps_instance(fixture("FIX-T2").instance))
    alloc = files("alloc.json", {"bundles": [["a", "b", "c"], ["d"]]})
    code, out, _ = run(capsys, ["check", inst, alloc, "--axioms", "efx,efxpm"])
    assert code == 1
    report = json.loads(out)
    assert report["axioms"]["efx"]["satisfied"] is True
    assert report["axioms"]["efxpm"]["satisfied"] is False
    witness = report["axioms"]["efxpm"]["violations"][0]
    assert witness["item"] == "a" and witness["lhs"] == "-8" and witness["rhs"] == "-7"


def test_check_ex2_efxpm_po_passes(files, capsys):
    inst = files("ex2.json", dumps_instance(fixture("FIX-EX2").instance))
    alloc = files("alloc.json", {"bundles": [["s"], ["l1", "l2", "l3"]]})
    code, out, _ = run(capsys, ["check", inst, alloc, "--axioms", "efxpm,po"])
    assert code == 0
    report = json.loads(out)
    assert report["axioms"]["po"]["satisfied"] is True


def test_check_reports_po_improver(files, capsys):
    inst = files("ex2.json", dumps_instance(fixture("FIX-EX2").instance))
    alloc = files("alloc.json", {"bundles": [["s", "l1"], ["l2", "l3"]]})
    code, out, _ = run(capsys, ["check", inst, alloc, "--axioms", "po"])
    assert code == 1
    assert json.loads(out)["axioms"]["po"]["improver"]


def test_malformed_bundle_key_exits_2(files, capsys):
    inst = files("bad.json", {
        "items": ["a", "b"], "agents": 2, "identical": True,
        "valuations": [{"kind": "explicit", "values": {"b,a": 1, "a": 1, "b": 1}}],
    })
    code, _, err = run(capsys, ["leximin", inst])
    assert code == 2
    assert "canonical" in err


def test_unknown_axiom_exits_2(files, capsys):
    inst = files("ex1.json", dumps_instance(fixture("FIX-EX1").instance))
    alloc = files("alloc.json", {"bundles": [["b"], ["r"]]})
    code, _, err = run(capsys, ["check", inst, alloc, "--axioms", "efz"])
    assert code == 2 and "unknown axiom" in err


def test_budget_exits_3(files, capsys):
    inst = files("t1.json", dumps_instance(fixture("FIX-T1").instance))
    code, _, err = run(capsys, ["leximin", inst, "--budget", "3"])
    assert code == 3 and "exceeding budget" in err


def test_budget_env_var(files, capsys, monkeypatch):
    inst = files("t1.json", dumps_instance(fixture("FIX-T1").instance))
    monkeypatch.setenv("FAIRKIT_BUDGET", "3")
    code, _, _ = run(capsys, ["leximin", inst])
    assert code == 3
    monkeypatch.setenv("FAIRKIT_BUDGET", "1000")
    code, _, _ = run(capsys, ["leximin", inst])
    assert code == 0


def test_enumerate_streams_rows_with_flags(files, capsys):
    inst = files("ex1.json", dumps_instance(fixture("FIX-EX1").instance))
    code, out, _ = run(capsys, ["enumerate", inst, "--axioms", "ef,efx,efxpm,po"])
    assert code == 0
    rows = [json.loads(line) for line in out.strip().splitlines()]
    assert len(rows) == 4
    assert all(set(r["axioms"]) == {"ef", "efx", "efxpm", "po"} for r in rows)
    by_bundles = {tuple(tuple(b) for b in r["bundles"]): r for r in rows}
    assert by_bundles[(("b",), ("r",))]["axioms"]["ef"] is True
    assert by_bundles[((), ("b", "r"))]["axioms"]["po"] is True


def test_leximin_t1(files, capsys):
    inst = files("t1.json", dumps_instance(fixture("FIX-T1").instance))
    code, out, _ = run(capsys, ["leximin", inst])
    assert code == 0
    doc = json.loads(out)
    assert doc["utilityVector"] == ["5", "8"]
    assert [["a", "b", "d"], ["c"]] in doc["allocations"]
    assert [["c"], ["a", "b", "d"]] in doc["allocations"]


def test_taxonomy_obs1(files, capsys):
    inst = files("obs1.json", dumps_instance(fixture("FIX-OBS1").instance))
    code, out, _ = run(capsys, ["taxonomy", inst])
    assert code == 0
    doc = json.loads(out)
    assert doc["generallyGoodBadItems"] is True
    assert doc["noMixedItems"] is False
    b = next(item for item in doc["items"] if item["name"] == "b")
    assert b["mixed"] is True
    assert b["agents"][0]["generallyBad"] and b["agents"][1]["generallyGood"]


def test_cut_and_choose_ex1(files, capsys):
    inst = files("ex1.json", dumps_instance(fixture("FIX-EX1").instance))
    code, out, _ = run(capsys, ["cut-and-choose", inst])
    assert code == 0
    doc = json.loads(out)
    assert doc["bundles"] == [[], ["b", "r"]]
    assert doc["efxpm"]["satisfied"] is True


def test_cut_and_choose_needs_two_agents(files, capsys):
    from fairkit import AdditiveValuation, Instance
    inst3 = Instance(("a", "b"), (AdditiveValuation((1, 2)),) * 3)
    path = files("three.json", dumps_instance(inst3))
    code, _, err = run(capsys, ["cut-and-choose", path])
    assert code == 2 and "2 agents" in err


def test_verify_paper_exit_zero_and_labels(capsys):
    code, out, _ = run(capsys, ["verify-paper"])
    assert code == 0
    doc = json.loads(out)
    assert doc["gatingFailures"] == 0
    exploratory = [r for r in doc["rows"] if not r["gating"]]
    failing_exploratory = [r for r in exploratory if r["status"] == "fail"]
    assert len(failing_exploratory) == 2
    assert {r["claim"] for r in failing_exploratory} == {
        "t1-variant-a-portability", "t2-variant-b-portability",
    }


def test_verify_paper_single_fixture_and_export(tmp_path, capsys):
    out_dir = str(tmp_path / "exports")
    code, out, _ = run(capsys, ["verify-paper", "--fixture", "FIX-ZM",
                                "--export-instances", out_dir])
    assert code == 0
    doc = json.loads(out)
    assert {r["fixture"] for r in doc["rows"]} == {"FIX-ZM"}
    exported = os.path.join(out_dir, "FIX-ZM.json")
    assert os.path.exists(exported)
    from fairkit import loads_instance
    assert loads_instance(open(exported).read()) == fixture("FIX-ZM").instance


def test_mine_cli(capsys):
    code, out, _ = run(capsys, [
        "mine", "--predicate", "efxpm0=0", "-n", "2", "-m", "2",
        "--lo", "0", "--hi", "1", "--identical", "--additive", "--count", "6",
    ])
    assert code == 0
    doc = json.loads(out)
    assert doc["hits"]
    assert all(h["landscape"][0]["count"] == 0 for h in doc["hits"])


def test_missing_file_exits_2(capsys):
    code, _, err = run(capsys, ["leximin", "/nonexistent/instance.json"])
    assert code == 2 and "cannot read" in err
