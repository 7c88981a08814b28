"""End-to-end CLI behavior: exit codes, reports, determinism."""

import json
import os

import pytest

from latkit.cli import (
    EXIT_BUDGET,
    EXIT_OK,
    EXIT_USAGE,
    EXIT_VIOLATION,
    ALIASES,
    CHECKS,
    SEARCHES,
    SWEEPS,
    VERIFIERS,
    main,
    parse_order_spec,
)

FIXTURES = os.path.join(os.path.dirname(__file__), "..", "fixtures")


def fixture(name):
    return os.path.join(FIXTURES, name)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_list_registry(capsys):
    code, out, _ = run(capsys, "--list")
    assert code == EXIT_OK
    for slug in VERIFIERS:
        assert slug in out
    for slug in list(SEARCHES) + list(SWEEPS) + list(CHECKS):
        assert slug in out


def test_verify_powerset_characterization(capsys):
    code, out, _ = run(capsys, "--format", "json", "verify",
                       "powerset-characterization", "--x", "2", "--y", "3")
    assert code == EXIT_OK
    doc = json.loads(out)
    assert doc["report"]["census"] == 12
    assert doc["report"]["holds"] is True


def test_verify_alias_matches_slug(capsys):
    code1, out1, _ = run(capsys, "--format", "json", "verify",
                         "powerset-characterization", "--x", "2", "--y", "2")
    code2, out2, _ = run(capsys, "--format", "json", "verify",
                         "thm-powerset-form", "--x", "2", "--y", "2")
    assert code1 == code2 == EXIT_OK
    assert json.loads(out1)["report"] == json.loads(out2)["report"]


def test_check_convexity_counterexample(capsys):
    code, out, _ = run(capsys, "--format", "json", "check", "convexity",
                       "--input", fixture("powerset_counterexample.json"))
    assert code == EXIT_VIOLATION
    doc = json.loads(out)
    assert doc["report"]["witness"] == [0, 1]


def test_check_embedding(capsys):
    code, out, _ = run(capsys, "--format", "json", "check", "embedding",
                       "--input", fixture("powerset_counterexample.json"))
    assert code == EXIT_OK
    assert json.loads(out)["report"]["holds"] is True


def test_check_preregular_bowtie_bottom(capsys):
    code, out, _ = run(capsys, "--format", "json", "check", "preregular",
                       "--input", fixture("bowtie_bottom.json"))
    assert code == EXIT_VIOLATION
    doc = json.loads(out)
    assert doc["report"]["report"]["preregular_up"]["holds"] is False


def test_check_distributive_fixtures(capsys):
    for name in ("m3.json", "n5.json"):
        code, out, _ = run(capsys, "--format", "json", "check", "distributive",
                           "--input", fixture(name))
        assert code == EXIT_VIOLATION
        assert json.loads(out)["report"]["holds"] is False


def test_sweep_cat_ro_iso(capsys):
    code, out, _ = run(capsys, "--format", "json", "sweep", "cat-ro-iso",
                       "--points", "3")
    assert code == EXIT_OK
    doc = json.loads(out)
    assert doc["report"]["topologies"] == 29


def test_sweep_baire_negative_result(capsys):
    code, out, _ = run(capsys, "--format", "json", "sweep", "baire",
                       "--points", "3")
    assert code == EXIT_OK
    assert json.loads(out)["report"]["all_baire"] is True


def test_search_open_meager_finds_nothing(capsys):
    code, out, _ = run(capsys, "--format", "json", "search", "open-meager",
                       "--points", "3")
    assert code == EXIT_OK
    assert json.loads(out)["report"]["found"] is False


def test_search_convex_not_preregular_finds_witness(capsys):
    code, out, _ = run(capsys, "--format", "json", "search",
                       "convex-not-preregular", "--max-size", "5")
    assert code == EXIT_OK
    doc = json.loads(out)
    assert doc["report"]["found"] is True
    # smallest witness is the bowtie: both minimals plus one maximal
    assert doc["report"]["poset"]["size"] == 4


def test_verify_monoid_distributivity_truncated_violation(capsys):
    code, out, _ = run(capsys, "--format", "json", "verify",
                       "law-monoid-distributivity",
                       "--input", fixture("truncated_add_3.json"))
    assert code == EXIT_VIOLATION
    doc = json.loads(out)
    modes = doc["report"]["modes"]
    assert modes["plus_join"]["holds"] is True
    assert modes["plus_join_inf"]["holds"] is False
    assert modes["plus_join_inf"]["witness"]["B"] == []


def test_verify_group_completion_rejects_max_monoid(capsys, tmp_path):
    path = tmp_path / "max.json"
    path.write_text(json.dumps(
        {"size": 2, "table": [[0, 1], [1, 1]], "identity": 0}))
    code, out, _ = run(capsys, "--format", "json", "verify",
                       "lem-group-completion", "--input", str(path))
    assert code == EXIT_OK
    assert json.loads(out)["report"]["rejected"] is True


def test_enumerate_census_lines(capsys):
    code, out, _ = run(capsys, "enumerate",
                       "--dom", '{"powerset": 1}',
                       "--cod", '{"powerset": 2}',
                       "--convex-range")
    assert code == EXIT_OK
    lines = [json.loads(line) for line in out.strip().splitlines()]
    assert len(lines) == 4
    assert all(line["flags"]["convex_range"] for line in lines)


def test_exit_codes_for_errors(capsys):
    code, _, err = run(capsys, "check", "convexity", "--input", "/nope.json")
    assert code == EXIT_USAGE and "cannot read" in err
    code, _, err = run(capsys, "verify", "no-such-verifier")
    assert code == EXIT_USAGE
    code, _, _ = run(capsys, "verify")
    assert code == EXIT_USAGE
    code, _, err = run(capsys, "verify", "thm-powerset-form",
                       "--x", "3", "--y", "4", "--budget-nodes", "10")
    assert code == EXIT_BUDGET


def test_json_reports_are_byte_identical(capsys):
    args = ("--format", "json", "verify", "law-monoid-distributivity",
            "--dims", "2", "--samples", "50", "--seed", "42")
    _, out1, _ = run(capsys, *args)
    _, out2, _ = run(capsys, *args)
    assert out1 == out2
    _, out3, _ = run(capsys, "--format", "json", "verify",
                     "law-monoid-distributivity", "--dims", "2",
                     "--samples", "50", "--seed", "43")
    assert out3 != out1


def test_thread_cap_keeps_reports_deterministic(capsys, monkeypatch):
    args = ("--format", "json", "sweep", "cat-ro-iso", "--points", "3")
    monkeypatch.delenv("LATKIT_THREADS", raising=False)
    _, serial, _ = run(capsys, *args)
    monkeypatch.setenv("LATKIT_THREADS", "4")
    code, threaded, _ = run(capsys, *args)
    assert code == EXIT_OK
    assert threaded == serial


def test_parse_order_spec_forms():
    q = parse_order_spec({"powerset": 2})
    assert q.size == 4
    q = parse_order_spec({"chains": [2, 3]})
    assert q.size == 6
    q = parse_order_spec({"size": 3, "pairs": [[0, 1]]})
    assert q.size == 3


@pytest.mark.parametrize("argv", [
    ("verify", "thm-powerset-form", "--x", "1", "--y", "2"),
    ("verify", "thm-chainprod-form", "--k", "2", "--m", "2", "--i", "1", "--j", "1"),
    ("verify", "thm-preregular-continuity", "--max-size", "3"),
    ("verify", "lem-convex-preregular", "--max-size", "4"),
    ("verify", "thm-extension-convexity", "--n", "2"),
    ("verify", "prop-cat-ro-iso", "--points", "2"),
    ("verify", "cor-atom-image", "--x", "1", "--y", "2"),
    ("verify", "law-monoid-distributivity", "--dims", "1", "--samples", "50"),
    ("verify", "law-disjoint-sum", "--dims", "2", "--samples", "50"),
    ("verify", "lem-group-completion", "--max-size", "3"),
    ("sweep", "convex-preregular", "--max-size", "4"),
])
def test_every_registered_verifier_passes_on_small_inputs(capsys, argv):
    code, out, err = run(capsys, "--format", "json", *argv)
    assert code == EXIT_OK, (argv, out, err)
    assert json.loads(out)["report"]["holds"] is True


def test_verifier_registry_is_complete():
    for slug in ("thm-preregular-continuity", "thm-powerset-form",
                 "thm-chainprod-form", "lem-convex-preregular",
                 "thm-extension-convexity", "prop-cat-ro-iso"):
        assert slug in VERIFIERS
    assert ALIASES["powerset-characterization"] == "thm-powerset-form"


def test_enumerate_from_input_file(capsys, tmp_path):
    spec_path = tmp_path / "census.json"
    spec_path.write_text(json.dumps({
        "dom": {"powerset": 1},
        "cod": {"powerset": 2},
        "filters": {"convex_range": True},
    }))
    code, out, _ = run(capsys, "enumerate", "--input", str(spec_path))
    assert code == EXIT_OK
    assert len(out.strip().splitlines()) == 4
