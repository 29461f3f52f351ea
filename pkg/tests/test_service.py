"""Endpoint behaviour and the error-to-status mapping.

Usage errors surface as 400, validation failures as 422; both carry a
structured {"error": {"kind", "message"}} body.
"""

import pytest


def test_health(client):
    r = client.get("/health")
    assert r.status_code == 200
    assert r.json()["status"] == "ok"


def test_variants_listing(client):
    r = client.get("/variants")
    assert r.status_code == 200
    names = [v["name"] for v in r.json()]
    assert names == sorted(names)
    assert len(names) == 6
    k32 = next(v for v in r.json() if v["name"] == "katan32")
    assert (k32["len_l1"], k32["len_l2"], k32["rounds"]) == (13, 19, 254)


def test_encrypt_decrypt_roundtrip(client):
    req = {"variant": "katan32", "key": "f" * 20, "plaintext": "00000000"}
    r = client.post("/encrypt", json=req)
    assert r.status_code == 200
    ct = r.json()["ciphertext"]
    assert ct == "7e1ff945"
    r = client.post(
        "/decrypt", json={"variant": "katan32", "key": "f" * 20, "ciphertext": ct}
    )
    assert r.json()["plaintext"] == "00000000"


def test_encrypt_bit_reverse_is_an_involution(client):
    fwd = {"variant": "katan48", "key": "a" * 20, "plaintext": "0123456789ab"}
    ct = client.post("/encrypt", json=fwd).json()["ciphertext"]
    rev = {**fwd, "bit_reverse": True}
    ct_rev = client.post("/encrypt", json=rev).json()["ciphertext"]
    assert ct != ct_rev  # different key/block once bit-reversed
    back = client.post(
        "/decrypt",
        json={"variant": "katan48", "key": "a" * 20, "ciphertext": ct_rev, "bit_reverse": True},
    )
    assert back.json()["plaintext"] == "0123456789ab"


@pytest.mark.parametrize(
    "body,fragment",
    [
        ({"variant": "katan32", "key": "f" * 19, "plaintext": "0" * 8}, "expected 20 hex digits"),
        ({"variant": "katan32", "key": "f" * 20, "plaintext": "0" * 12}, "expected 8 hex digits"),
        ({"variant": "katan99", "key": "f" * 20, "plaintext": "0" * 8}, "unknown variant"),
    ],
)
def test_usage_errors_are_400(client, body, fragment):
    r = client.post("/encrypt", json=body)
    assert r.status_code == 400
    err = r.json()["error"]
    assert err["kind"] == "usage"
    assert fragment in err["message"]


def test_malformed_body_is_400(client):
    r = client.post("/encrypt", json={"variant": "katan32"})
    assert r.status_code == 400
    assert r.json()["error"]["kind"] == "usage"


def test_keyschedule_shape(client):
    r = client.post("/keyschedule", json={"variant": "ktantan32", "key": "f" * 20})
    data = r.json()
    assert data["rounds"] == 254
    assert len(data["pairs"]) == 254
    assert data["pairs"][0] == [1, 1]


def test_ir_endpoint(client):
    data = client.get("/ir").json()
    assert data["rounds"] == 254
    assert data["bits"][:8] == [1, 1, 1, 1, 1, 1, 1, 0]
    assert data["counter_states"][0] == 0xFF


def test_verify_reports_failures(client):
    content = "\n".join(
        [
            "katan32 ffffffffffffffffffff 00000000 7e1ff945",
            "katan32 ffffffffffffffffffff 00000000 deadbeef",
        ]
    )
    r = client.post("/verify", json={"content": content})
    data = r.json()
    assert (data["checked"], data["passed"], data["failed"]) == (2, 1, 1)
    failure = data["failures"][0]
    assert failure["line"] == 2
    assert failure["expected"] == "deadbeef"
    assert failure["actual"] == "7e1ff945"


def test_verify_parse_error_is_400(client):
    r = client.post("/verify", json={"content": "katan32 short 00000000 7e1ff945"})
    assert r.status_code == 400
    assert "line 1" in r.json()["error"]["message"]


def test_bench_endpoint_small(client):
    r = client.post(
        "/bench",
        json={"variant": "katan32", "engine": "bitsliced-16", "blocks": 64, "reps": 2},
    )
    assert r.status_code == 200
    data = r.json()
    assert data["lanes"] == 16
    assert data["dispersion"] >= 1.0
    assert len(data["rep_times_s"]) == 2


def test_bench_bad_engine_is_400(client):
    r = client.post("/bench", json={"variant": "katan32", "engine": "bitsliced-999"})
    assert r.status_code == 400


def test_pipeline_with_explicit_costs(client):
    body = {
        "costs": {"load_cycles": 3, "round_cycles": 5, "emit_cycles": 2},
        "num_blocks": 4,
        "mode": "pipelined",
        "include_occupancy": True,
    }
    data = client.post("/pipeline", json=body).json()
    assert data["total_cycles"] == 25
    assert len(data["occupancy"]) == 12


def test_pipeline_with_variant_defaults(client):
    body = {"variant": "katan32", "num_blocks": 1, "mode": "sequential"}
    data = client.post("/pipeline", json=body).json()
    # load 32 + (254 rounds + 428 schedule clocks) + emit 32
    assert data["costs"] == {"load_cycles": 32, "round_cycles": 682, "emit_cycles": 32}
    assert data["total_cycles"] == 746
    assert data["occupancy"] is None


def test_pipeline_needs_costs_or_variant(client):
    r = client.post("/pipeline", json={"num_blocks": 2})
    assert r.status_code == 400


def test_report_bundled_filtered(client):
    data = client.post("/report", json={"tables": ["iii"]}).json()
    assert [t["key"] for t in data["tables"]] == ["iii"]
    assert "12.300" in data["text"]
    assert data["csv"].startswith("# Table III.")


def test_report_from_records(client):
    body = {
        "records": [
            {
                "variant": "katan32",
                "mode": "sequential",
                "total_clock_cycles": 3626,
                "fmax_mhz": 358.55,
            }
        ]
    }
    data = client.post("/report", json=body).json()
    t1 = next(t for t in data["tables"] if t["key"] == "i")
    assert t1["rows"][0]["throughput_mbps"] == "3.164"


def test_report_inconsistent_record_is_422(client):
    body = {
        "records": [
            {
                "variant": "katan32",
                "mode": "sequential",
                "total_clock_cycles": 3626,
                "fmax_mhz": 358.55,
                "throughput_mbps": "9.999",
            }
        ]
    }
    r = client.post("/report", json=body)
    assert r.status_code == 422
    assert r.json()["error"]["kind"] == "validation"
    assert "throughput" in r.json()["error"]["message"]
