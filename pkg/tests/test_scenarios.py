import copy
import json

import pytest

from dpverify.catalog import TYPE_IDS, UnknownType, catalog, check_scenario, document
from dpverify.delpezzo import SingularSurface
from dpverify.scenario import CLAIM_KINDS, file_stem, load_document, shipped_scenarios
from dpverify.scenario_io import SchemaError
from dpverify.verify import FAIL, PASS, Options, run_claim


def test_file_stems():
    assert file_stem("E6(a1)") == "E6a1"
    assert file_stem("A1^7") == "A1_7"
    assert file_stem("2A3+A1") == "2A3A1"


def test_shipped_files_match_catalog():
    shipped = {p.name: json.loads(p.read_text()) for p in shipped_scenarios()}
    assert sorted(shipped) == sorted(f"{file_stem(t)}.json" for t in TYPE_IDS)
    for t in TYPE_IDS:
        assert shipped[f"{file_stem(t)}.json"] == json.loads(json.dumps(document(t)))


def test_every_claim_kind_is_exercised():
    used = {c["kind"] for t in TYPE_IDS for c in document(t)["claims"]}
    assert used == set(CLAIM_KINDS)


def test_unknown_type():
    with pytest.raises(UnknownType):
        catalog("E8")


def test_singular_parameters_rejected():
    with pytest.raises(SingularSurface):
        catalog("E6(a2)", alpha=1)
    with pytest.raises(SingularSurface):
        catalog("2A3+A1", a=2)


@pytest.fixture
def fermat_doc():
    return copy.deepcopy(document("fermat"))


@pytest.mark.parametrize("mutate,message", [
    (lambda d: d.pop("surface"), "surface"),
    (lambda d: d.pop("claims"), "claims"),
    (lambda d: d["claims"].append({"kind": "nonsense", "expected": 1}), "unknown kind"),
    (lambda d: d["claims"].append({"kind": "smoothness"}), "expected"),
    (lambda d: d.update(field={"bogus": 1}), "field"),
    (lambda d: d.update(degree=4), "degree"),
    (lambda d: d["generators"][0]["block"].pop(), "square"),
    (lambda d: d["generators"][0].update(heavy=["1"]), "weights"),
])
def test_schema_errors(fermat_doc, mutate, message):
    mutate(fermat_doc)
    with pytest.raises(SchemaError, match=message):
        load_document(fermat_doc)


def test_unknown_references_are_schema_errors(fermat_doc):
    sc = load_document(fermat_doc)
    for claim in ({"kind": "eckardt", "expected": {"eckardt": True}, "inputs": {"point": "nope"}},
                  {"kind": "group-order", "expected": 3, "inputs": {"group": "model:x:y"}}):
        with pytest.raises(SchemaError):
            run_claim(sc, 0, claim, Options())


def test_corrupted_generator_is_reported_as_failure(fermat_doc):
    # t1 -> 2 t1 does not preserve the Fermat cubic
    fermat_doc["generators"][0]["block"][1][1] = "2"
    sc = load_document(fermat_doc)
    results = [run_claim(sc, i, c, Options()) for i, c in enumerate(sc.claims)
               if c["kind"] == "generator-preserves" and c["inputs"]["group"] == "G"]
    assert [r.result for r in results] == [FAIL]
    assert results[0].observed is False
    with pytest.raises(ValueError, match="does not preserve"):
        check_scenario(sc)


def test_seeded_claims_are_deterministic():
    sc = catalog("3A2")
    c = next(c for c in sc.claims if c["kind"] == "base-locus-admissible-count")
    a = run_claim(sc, 5, c, Options(seed=4)).as_dict()
    b = run_claim(sc, 5, c, Options(seed=4)).as_dict()
    assert a == b and a["result"] == PASS
