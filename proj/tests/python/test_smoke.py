"""Smoke tests for the python bindings."""

import json
import os
import subprocess
import sys

import ybe_forge as yf


def test_catalog():
    ids = yf.catalog_ids()
    assert len(ids) == 14
    assert "sl2.X0" in ids and "rat.sl3.short" in ids
    doc = json.loads(yf.catalog_json("sl2.X1"))
    assert doc["kind"] == "quasi_trigonometric"
    assert doc["algebra"]["N"] == 2


def test_residuals():
    for i in ("sl2.X0", "sl2.X1", "sl3.X2", "rat.sl3.short"):
        assert yf.cybe_residual_is_zero(i), i
        assert yf.unitarity_residual_is_zero(i), i
    # the defective published entry stays red
    assert not yf.cybe_residual_is_zero("rat.sl3.long")
    assert yf.quasi_constant("sl3.X0")
    assert not yf.quasi_constant("sl3.X2")
    assert yf.subalgebra_oracle_passes("sl2.X1", 3)
    assert yf.scaling_identity_is_zero("sl3.X2")


def test_bd():
    assert yf.enumerate_bd_count(1) == 1
    assert yf.enumerate_bd_count(2) == 3
    triples = json.loads(yf.bd_triples_json(2))
    assert len(triples) == 3


def test_quantum():
    assert yf.sl2_rational_qybe_zero()
    ok, shift = yf.chain_hamiltonian_gap_scalar("E34", 3, "101", "103", "5", "7")
    assert ok and shift


def test_suite_report():
    rep = json.loads(yf.suite("bd", 1))
    assert rep["ok"] is True
    assert rep["checks"]


def test_cli_determinism():
    exe = os.environ.get("YBE_FORGE_CLI")
    if not exe:
        return
    cmd = [exe, "--seed", "42", "--format", "json", "bd", "enumerate", "--rank", "3"]
    out1 = subprocess.run(cmd, capture_output=True, text=True, check=True).stdout
    out2 = subprocess.run(cmd, capture_output=True, text=True, check=True).stdout
    assert out1 == out2


if __name__ == "__main__":
    for name, fn in sorted(globals().items()):
        if name.startswith("test_"):
            fn()
            print(f"{name}: ok")
    print("python smoke: all ok")
