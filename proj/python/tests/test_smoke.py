import json
import os
import pathlib
import subprocess

import pytest

import hoffman

ROOT = pathlib.Path(__file__).resolve().parents[2]


def test_special_matrix_of_c2():
    assert hoffman.special_matrix(hoffman.make_c(2)) == [[-2, -1], [-1, -2]]
    assert hoffman.lambda_min_cmp3(hoffman.make_c(2)) == "equal"


def test_exact_comparisons():
    assert hoffman.cmp_lambda_min([[-3]], -3) == "equal"
    assert hoffman.cmp_lambda_min([[0, 1], [1, 0]], -1, 2) == "less"
    assert hoffman.eigen_multiplicity_at([[0, 1, 1], [1, 0, 1], [1, 1, 0]], -1) == 2


def test_c_m_representations():
    for m in range(2, 15):
        c = hoffman.make_c(m)
        psi = hoffman.psi_c(m)
        assert hoffman.verify_reduced(c, max(m - 1, 1), psi)
        assert hoffman.solve(c)["status"] == "found"


def test_solver_verdicts():
    star = lambda k: hoffman.all_slim(k + 1, [(0, i) for i in range(1, k + 1)])
    found = hoffman.solve(star(4))
    assert found["status"] == "found"
    assert hoffman.verify_reduced(star(4), found["dim"], found["vectors"])
    assert hoffman.solve(star(10))["status"] == "not_representable"
    assert hoffman.solve(hoffman.catalog_member("e7"), budget=1)["status"] == "budget_exceeded"


def test_seedling_counts():
    assert [len(hoffman.fat_3_seedlings(b)) for b in ("e6", "e7", "e8")] == [7, 18, 50]


def test_decompose_and_json():
    h = hoffman.from_json(json.dumps({"slim": [0, 4], "fat": [1, 2, 3, 5],
                                      "edges": [[0, 1], [0, 2], [0, 3], [4, 5]]}))
    assert hoffman.decompose(h) == [[0], [4]]
    x = hoffman.make_third_member()
    assert hoffman.from_json(x.to_json()) == x
    with pytest.raises(ValueError):
        hoffman.from_json('{"slim": [0], "fat": [1], "edges": []}')


def test_census_and_construction():
    rows = hoffman.census(8)
    assert len(rows) == 1 + 1 + 1 + 2 + 3 + 6 + 11 + 23
    assert all(r["representable"] == "yes" for r in rows)
    radius3 = {r["code"] for r in rows if r["lambda_cmp"] == "equal"}
    assert radius3 == set(hoffman.construct_trees(8))
    report = hoffman.verify_main_theorem(8)
    assert report["ok"]


def test_family():
    tags = hoffman.family_tags(4)
    assert tags[:3] == ["F-prime-1", "F-prime-2", "F-prime-3"]
    assert hoffman.isomorphic(hoffman.catalog_member("fatstar3"), hoffman.make_fat_star(3))


@pytest.mark.skipif(not os.environ.get("HOFFMAN_CLI"), reason="CLI path not given")
def test_cli_output_matches_schemas():
    jsonschema = pytest.importorskip("jsonschema")
    cli = os.environ["HOFFMAN_CLI"]
    data = ROOT / "tests" / "data"

    def check(args, schema):
        out = subprocess.run([cli, *args], capture_output=True, text=True)
        doc = json.loads(out.stdout)
        jsonschema.validate(doc, json.loads((ROOT / "schemas" / schema).read_text()))
        return doc

    check(["analyze", str(data / "c3.json")], "analyze_report.schema.json")
    check(["solve", str(data / "c5.json")], "solve_result.schema.json")
    check(["export", str(data / "c5.json"), "--format", "json"], "hoffman_graph.schema.json")
    check(["trees", "--max-n", "6", "--json"], "census.schema.json")
    for f in ("c2.json", "c3.json", "c5.json", "two_factors.json"):
        jsonschema.validate(json.loads((data / f).read_text()),
                            json.loads((ROOT / "schemas" / "hoffman_graph.schema.json").read_text()))
