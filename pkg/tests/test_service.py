import json

import pytest
from fastapi.testclient import TestClient

from immaculates.service.app import app, resolve_basis

client = TestClient(app)


def test_health():
    assert client.get("/health").json() == {"status": "ok"}


def test_compositions_endpoint():
    r = client.post("/compositions", json={"n": 3})
    assert r.status_code == 200
    body = r.json()
    assert body["count"] == 4
    assert body["compositions"][0] == [3]
    assert body["compositions"][-1] == [1, 1, 1]


def test_compositions_rejects_negative():
    assert client.post("/compositions", json={"n": -1}).status_code == 422


def test_tableaux_endpoint_standard():
    r = client.post(
        "/tableaux", json={"shape": [2, 2], "inner": [], "kind": "standard"}
    )
    assert r.status_code == 200
    assert r.json()["count"] == 3


def test_tableaux_endpoint_hook_entries_are_strings():
    r = client.post(
        "/tableaux", json={"shape": [1, 1], "kind": "hook", "l": 1, "k": 1}
    )
    assert r.status_code == 200
    body = r.json()
    assert body["count"] == 2
    rows = {tuple(tuple(row) for row in t["rows"]) for t in body["tableaux"]}
    assert (("1",), ("1'",)) in rows
    assert (("1'",), ("1'",)) in rows


def test_tableaux_missing_parameters():
    r = client.post("/tableaux", json={"shape": [2], "kind": "immaculate"})
    assert r.status_code == 400
    r = client.post("/tableaux", json={"shape": [2], "kind": "hook"})
    assert r.status_code == 400


def test_expand_endpoint_with_alias():
    r = client.post(
        "/expand",
        json={"space": "QSym", "basis": "RSDIstar", "index": [1, 2], "into": "F"},
    )
    assert r.status_code == 200
    assert r.json() == {
        "space": "QSym",
        "basis": "F",
        "degree": 3,
        "terms": [{"index": [2, 1], "coeff": "1"}],
    }


def test_expand_unknown_basis():
    r = client.post(
        "/expand", json={"space": "QSym", "basis": "zzz", "index": [1], "into": "F"}
    )
    assert r.status_code == 400


def test_pair_endpoint():
    r = client.post(
        "/pair",
        json={
            "nsym_basis": "R",
            "nsym_index": [2, 1],
            "qsym_basis": "F",
            "qsym_index": [2, 1],
        },
    )
    assert r.json() == {"value": "1"}


def test_matrix_endpoint():
    r = client.post("/matrix", json={"name": "Kstar", "n": 2})
    body = r.json()
    assert body["compositions"] == [[2], [1, 1]]
    assert body["entries"] == [[0, 1], [1, 1]]


def test_skew_endpoint_routes_agree():
    base = {"outer": [2, 2], "inner": [1, 1], "kind": "DI"}
    via = {}
    for route in ("pairing", "paths", "tableaux"):
        r = client.post("/skew", json={**base, "route": route})
        assert r.status_code == 200
        via[route] = r.json()
    assert via["paths"] == via["tableaux"]
    assert via["pairing"]["basis"] == "M"
    assert via["paths"]["basis"] == "F"


def test_skew_containment_violation():
    r = client.post("/skew", json={"outer": [1, 1], "inner": [2], "kind": "DI"})
    assert r.status_code == 400


def test_hook_endpoint():
    r = client.post("/hook", json={"shape": [1, 1], "l": 1, "k": 1})
    assert r.json() == {
        "l": 1,
        "k": 1,
        "terms": [
            {"x": [1], "y": [1], "coeff": "1"},
            {"x": [0], "y": [2], "coeff": "1"},
        ],
    }
    r2 = client.post(
        "/hook", json={"shape": [1, 1], "l": 1, "k": 1, "route": "fundamental"}
    )
    assert r2.json() == r.json()


def test_verify_endpoint():
    r = client.post("/verify", json={"suite": "coproduct", "max_n": 3})
    body = r.json()
    assert body["passed"] is True
    assert body["records"]
    assert all(rec["witnesses"] > 0 for rec in body["records"])


def test_verify_rejects_unknown_suite():
    assert client.post("/verify", json={"suite": "nope", "max_n": 3}).status_code == 422


def test_element_json_round_trip_through_wire():
    r = client.post(
        "/expand",
        json={"space": "NSym", "basis": "IMM", "index": [2, 2], "into": "H"},
    )
    body = r.json()
    from immaculates.elements import Element

    x = Element.from_json(body)
    assert json.dumps(x.to_json(), sort_keys=True) == json.dumps(body, sort_keys=True)


def test_resolve_basis():
    assert resolve_basis("QSym", "rsdi*") == "RSDI"
    assert resolve_basis("QSym", "Sstar") == "DI"
    assert resolve_basis("NSym", "immaculate") == "IMM"
    with pytest.raises(ValueError):
        resolve_basis("NSym", "Q")
