import pytest

from weylfans import jsonio
from weylfans.casebook import list_cases, run_case
from weylfans.errors import InvalidInput

EXPECTED_IDS = [
    "g2-surface",
    "f4-wprime",
    "f4-subtorus-fan",
    "e8-subtorus-fan",
    "e8-weyl-order",
    "lattice-coincidence",
    "typeA-pullback",
    "typeB-spinor-pic",
    "typeC-contraction",
    "lg-orbits",
    "og-orbits",
    "surface-blowup-cases",
    "wonderful-anticanonical",
    "ihss-table",
]


def test_catalog_listing():
    ids = [cid for cid, _ in list_cases()]
    assert ids == EXPECTED_IDS
    assert all(desc for _, desc in list_cases())


def test_unknown_case_rejected():
    with pytest.raises(InvalidInput):
        run_case("no-such-case")


@pytest.mark.parametrize("case_id", EXPECTED_IDS)
def test_case_passes(case_id):
    report = run_case(case_id, seed=0)
    assert report.passed(), report.render_text()
    doc = report.to_json()
    assert doc["case_id"] == case_id
    assert doc["verdict"] == "pass"
    assert set(doc["expected"]) <= set(doc["computed"])
    for entry in doc["expected"].values():
        assert entry["provenance"] in ("tabulated", "recomputed", "definitional")


def test_reports_are_deterministic():
    # two runs with the same seed give byte-identical reports, including the
    # seeded sampling case
    for case_id in ("ihss-table", "f4-wprime", "lg-orbits"):
        first = jsonio.dumps(run_case(case_id, seed=0).to_json())
        second = jsonio.dumps(run_case(case_id, seed=0).to_json())
        assert first == second


def test_report_text_rendering():
    text = run_case("e8-weyl-order").render_text()
    assert text.startswith("[PASS] e8-weyl-order")
    assert "696729600" in text
