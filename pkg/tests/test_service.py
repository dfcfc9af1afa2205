"""HTTP service and CLI: reports, exit codes, determinism."""

import json

import pytest
from fastapi.testclient import TestClient

from nodalcodes import cli, service
from nodalcodes.service import app


@pytest.fixture(scope="module")
def client():
    return TestClient(app)


def test_health(client):
    assert client.get("/health").json() == {"status": "ok", "schema": 1}


def test_codes_endpoint(client):
    r = client.post("/codes", json={"action": "enumerator", "rows": ["1100", "0110"]})
    assert r.status_code == 200
    body = r.json()
    assert body["schema"] == 1
    assert body["status"] == "pass"
    assert body["payload"]["enumerator"] == {"0": 1, "2": 3}


def test_codes_equivalent_endpoint(client):
    r = client.post(
        "/codes",
        json={
            "action": "equivalent",
            "rows": ["110", "011"],
            "other": ["011", "110"],
        },
    )
    assert r.json()["payload"]["equivalent"] is True


def test_bad_request_maps_to_400(client):
    r = client.post("/codes", json={"action": "nonsense", "rows": ["1"]})
    assert r.status_code == 400
    r = client.post("/unobstructed", json={"surface": "nope"})
    assert r.status_code == 400


def test_unobstructed_endpoint(client):
    r = client.post("/unobstructed", json={"surface": "cayley"})
    body = r.json()
    assert body["payload"] == {"rank": 4, "nodes": 4, "verdict": "unobstructed"}
    assert body["status"] == "pass"


def test_pg_endpoint_seed_determinism(client):
    a = client.post("/pg", json={"q": 5, "k": 3, "seed": 11}).json()
    b = client.post("/pg", json={"q": 5, "k": 3, "seed": 11}).json()
    assert a["payload"] == b["payload"]
    assert a["seed"] == 11


def test_k3_endpoint(client):
    r = client.post("/k3", json={"action": "existence", "case": "t15", "d": 14})
    assert r.json()["payload"]["exists"] is True


def test_families_quintic_endpoint(client):
    body = client.post("/families", json={"action": "quintic"}).json()
    assert body["status"] == "pass"
    assert len(body["payload"]["main"]) == 10
    assert len(body["payload"]["extra"]) == 23


def cli_run(argv):
    return cli.main(argv)


def test_cli_exit_codes():
    assert cli_run(["unobstructed", "--surface", "cayley"]) == 0
    assert cli_run(["nonsense"]) == 64
    assert cli_run(["unobstructed", "--surface", "togliatti"]) == 64
    assert cli_run(["families", "candidates"]) == 64  # missing --nodes
    assert (
        cli_run(["dorohall", "indep", "frobenius", "--size", "12", "--budget", "100"])
        == 2
    )


def test_cli_json_byte_identical_modulo_timestamp(capsys):
    def run(argv):
        assert cli.main(argv) == 0
        out = capsys.readouterr().out
        doc = json.loads(out)
        doc.pop("timestamp")
        return json.dumps(doc, sort_keys=True)

    argv = ["codes", "enumerator", "110110", "011011", "--json"]
    assert run(argv) == run(argv)


def test_cli_flags_accepted_before_and_after_verb(capsys):
    assert cli.main(["--json", "families", "k8"]) == 0
    first = json.loads(capsys.readouterr().out)
    assert cli.main(["families", "k8", "--json"]) == 0
    second = json.loads(capsys.readouterr().out)
    first.pop("timestamp")
    second.pop("timestamp")
    assert first == second


def test_cli_seed_echoed(capsys):
    assert cli.main(["pg", "--q", "2", "--k", "3", "--seed", "9", "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["seed"] == 9


def test_cli_jobs_flag_does_not_change_output(capsys):
    def run(jobs):
        assert cli.main(["families", "quartic", "--json", "--jobs", jobs]) == 0
        doc = json.loads(capsys.readouterr().out)
        doc.pop("timestamp")
        return doc

    assert run("1") == run("4")


def test_report_model_schema_alias():
    rep = service.codes_report("enumerator", ["101"])
    dumped = rep.model_dump(by_alias=True)
    assert dumped["schema"] == 1
    assert "schema_version" not in dumped
