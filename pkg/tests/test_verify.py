import json
import random

import pytest

from sccgraph import catalog, export, verify
from sccgraph.budget import Budget
from sccgraph.errors import InputError
from sccgraph.graphs import build_class_graph
from sccgraph.metrics import clique_number

from conftest import cached_group

SMALL_CORPUS = ["cyclic:1", "cyclic:2", "cyclic:3", "cyclic:12", "symmetric:3", "dihedral:3",
                "symmetric:4", "quaternion:8", "alternating:5", "sl2:5", "psl2:7",
                "product:(cyclic:2)x(alternating:5)"]


def test_registry_is_c1_to_c15():
    assert verify.resolve_checks(None) == [f"C{i}" for i in range(1, 16)]
    assert verify.resolve_checks(["c10", "C2", "C10"]) == ["C2", "C10"]
    with pytest.raises(InputError):
        verify.resolve_checks(["NOPE"])


@pytest.mark.parametrize("spec,p,shape", [
    ("sl2:5", 2, "generalized_quaternion"),
    ("alternating:5", 5, "cyclic"),
    ("symmetric:4", 2, "other"),
    ("quaternion:32", 2, "generalized_quaternion"),
    ("dihedral:8", 2, "other"),
    ("cyclic:12", 2, "cyclic"),
    ("named:M10", 2, "other"),
    ("psl2:17", 3, "cyclic"),
])
def test_sylow_shape(spec, p, shape):
    assert verify.check_sylow_shape(cached_group(spec), p) == shape


def test_sylow_shape_errors():
    with pytest.raises(InputError):
        verify.check_sylow_shape(cached_group("alternating:5"), 7)
    with pytest.raises(InputError):
        verify.check_sylow_shape(cached_group("alternating:5"), 4)


def test_unit_fraction_solutions():
    assert verify.unit_fraction_solutions(1) == {(1,)}
    assert verify.unit_fraction_solutions(2) == {(2, 2)}
    assert verify.unit_fraction_solutions(3) == {(2, 3, 6), (2, 4, 4), (3, 3, 3)}
    assert len(verify.unit_fraction_solutions(4)) == 14


def test_small_suite_passes():
    report = verify.run_suite(SMALL_CORPUS)
    assert report.passed
    assert [c.id for c in report.checks] == [f"C{i}" for i in range(1, 16)]
    for c in report.checks:
        assert c.verdict == "pass", (c.id, c.witness)


def test_c10_exceptions():
    report = verify.run_suite(SMALL_CORPUS, ["C10"])
    c10 = report.checks[0]
    assert c10.details["exception_types"] == ["C1", "C2", "C3", "S3"]
    assert c10.details["exceptions"] == ["cyclic:1", "cyclic:2", "cyclic:3", "dihedral:3",
                                         "symmetric:3"]


def test_c9_cyclic12():
    report = verify.run_suite(["cyclic:12"], ["C9"])
    assert report.checks[0].results[0].detail == {"bound": 5, "clique_number": 11}


def test_c11_named_triangles():
    c11 = verify.run_suite([], ["C11"]).checks[0]
    assert c11.verdict == "pass"
    by_group = {r.target.split(":")[0] + ":" + r.target.split(":")[1].split()[0]: r
                for r in c11.results}
    assert len(c11.results) == 6
    assert set(by_group["named:M10"].detail["triangle"]) == {"2a", "4a", "4b"}
    assert sorted(by_group["psl2:8"].detail["triangle"]) == ["7a", "7b", "7c"]


def test_c12_and_j1_note():
    c12 = verify.run_suite([], ["C12"]).checks[0]
    assert c12.verdict == "pass"
    assert any("J1" in n for n in c12.notes)
    assert c12.results[0].detail["dominant"] == ["2a"]


def test_order_independence():
    a = verify.run_suite(SMALL_CORPUS, ["C1", "C8", "C13"])
    shuffled = SMALL_CORPUS[:]
    random.Random(5).shuffle(shuffled)
    b = verify.run_suite(shuffled, ["C13", "C1", "C8"])
    assert export.export_json(a.to_dict()) == export.export_json(b.to_dict())
    assert a.table() == b.table()


def test_workers_independence():
    a = verify.run_suite(SMALL_CORPUS, ["C3", "C4"], workers=1)
    b = verify.run_suite(SMALL_CORPUS, ["C3", "C4"], workers=4)
    assert export.export_json(a.to_dict()) == export.export_json(b.to_dict())


def test_budget_gives_skipped_not_pass():
    report = verify.run_suite(["alternating:5", "cyclic:4"], ["C1"],
                              budget=Budget(20, 5000, 10**7))
    c1 = report.checks[0]
    assert c1.verdict == "skipped"
    statuses = {r.target: r.status for r in c1.results}
    assert statuses == {"cyclic:4": "pass", "alternating:5": "skipped"}
    assert report.passed


def test_failure_carries_reproducible_witness(monkeypatch):
    # pretend completeness were always reported: C1 must fail on a non-solvable group
    monkeypatch.setattr(verify, "is_complete", lambda g: True)
    report = verify.run_suite(["alternating:5", "symmetric:3"], ["C1"])
    c1 = report.checks[0]
    assert c1.verdict == "fail" and not report.passed
    assert c1.witness == {"group": "alternating:5", "complete": True, "solvable": False}
    # re-checking the witness with the public functions shows the graph is not complete
    g = build_class_graph(catalog.make(c1.witness["group"]))
    assert g.edge_count < g.vertex_count * (g.vertex_count - 1) // 2


def test_failure_in_c13_names_classes(monkeypatch):
    import numpy as np
    real = verify.SuiteContext.distances
    monkeypatch.setattr(verify.SuiteContext, "distances",
                        lambda self, spec: np.where(real(self, spec) > 0, 9, 0))
    c13 = verify.run_suite(["alternating:5"], ["C13"]).checks[0]
    assert c13.verdict == "fail"
    assert set(c13.witness) == {"group", "claim", "classes", "distance", "bound"}


def test_report_schema():
    report = verify.run_suite(["symmetric:3"], ["C1", "C15"])
    data = json.loads(export.export_json(report.to_dict()))
    assert list(data) == ["suite", "corpus", "checks", "summary"]
    check = data["checks"][0]
    for key in ("id", "slug", "claim", "corpus_filter", "verdict", "counts", "witness",
                "results"):
        assert key in check
    assert "seconds" not in check
    timed = verify.run_suite(["symmetric:3"], ["C1"], timings=True).to_dict()
    assert "seconds" in timed["checks"][0]


def test_c15_matches_clique_number():
    G = cached_group("symmetric:4")
    assert clique_number(build_class_graph(G)) == 4


def test_c7_self_products_listed():
    c7 = verify.run_suite(["symmetric:3", "product:(cyclic:2)x(alternating:5)"],
                          ["C7"]).checks[0]
    targets = [r.target for r in c7.results]
    assert targets == ["product:(symmetric:3)x(symmetric:3)",
                       "product:(cyclic:2)x(alternating:5)"]
    assert c7.results[0].detail["diameter"] == 1
    assert c7.details["self_products"] == {"diameter_3": 0, "diameter_below_3": 1}


def test_c14_triples_all_apply():
    c14 = verify.run_suite([], ["C14"]).checks[0]
    assert c14.verdict == "pass"
    assert all(r.status == "pass" for r in c14.results), [r.to_dict() for r in c14.results]
