import json
from pathlib import Path

import pytest

import seifert

SAMPLES = Path(__file__).resolve().parents[2] / "samples"


def test_normalize_and_euler_class():
    assert seifert.normalize("(0,o1|(3,5))") == "(0,o1|(3,2),(1,1))"
    assert seifert.euler_class("(0,o1|(3,2),(1,5))") == "-17/3"


def test_classify_lens_space():
    report = seifert.classify("(0,o1|(3,2),(1,5))")
    assert report["schema"] == seifert.SCHEMA_VERSION
    assert report["family"]["family"] == "Dih(Z_m x Z_n)"
    assert report["reversal"]["excluded"]


def test_classify_rejects_non_elliptic():
    with pytest.raises(seifert.CliError) as info:
        seifert.classify("(0,o1|(1,0))")
    assert info.value.code == 1


def test_core_orders_agree():
    gens = ["1/6,2/3", "7/12,5/12"]
    assert seifert.core_order(gens) == "6"
    assert seifert.core_order_formula(gens) == "6"
    assert seifert.core_order(["1/6,1/6", "1/6,1/4"]) == "12"


def test_solve_conjugate():
    assert seifert.solve_conjugate([[6, 12], [0, 12]], [[-1, 2], [-1, 3]], [[6, 0], [6, 12]]) == [[-7, 4], [-5, 3]]
    with pytest.raises(ArithmeticError):
        seifert.solve_conjugate([[1, 0], [0, 1]], [[1, 0], [0, 1]], [[2, 0], [0, 1]])


def test_worked_example_quotient():
    description = json.loads((SAMPLES / "worked_example.json").read_text())
    q = seifert.quotient(description)["quotient"]
    assert q["classes"][0]["projected_filling"] == [[-7, 4], [-5, 3]]
    assert q["classes"][1]["projected_filling"] == [[-4, 7], [-1, 2]]
    assert [c["core_order"] for c in q["classes"]] == [12, 6]


def test_invalid_action_raises():
    with pytest.raises(ValueError):
        seifert.quotient({"invariants": "(0,o1|(1,0))", "generators": ["1/2,0", "0,1/2", "1/3,0"]})


def test_atlas_audit():
    table = seifert.atlas(n=1, audit=True)
    assert len(table["rows"]) == 21
    row6 = table["audit"][0]["rows"][5]
    assert (row6["table_lcm"], row6["recomputed_lcm"]) == (12, 24)


def test_oracle_check_clean():
    report = seifert.oracle_check("cyclic-core", 12)
    assert report["sweep"]["discrepancy_count"] == 0
