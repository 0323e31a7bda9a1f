import json

import pytest

import uncsimp

DISKS = json.dumps(
    {
        "model": "disk",
        "epsilon": 1.5,
        "metric": "frechet",
        "points": [
            {"c": [0.0, 0.0], "r": 0.2},
            {"c": [2.0, 0.3], "r": 0.3},
            {"c": [4.0, 0.0], "r": 0.2},
            {"c": [6.0, 0.4], "r": 0.3},
        ],
    }
)


def test_simplify_endpoints_and_links():
    res = json.loads(uncsimp.simplify(DISKS))
    assert res["indices"][0] == 1
    assert res["indices"][-1] == 4
    assert res["links"] == len(res["indices"]) - 1
    assert res["links"] <= 3


def test_epsilon_override_keeps_everything():
    res = json.loads(uncsimp.simplify(DISKS, epsilon=0.01))
    assert res["indices"] == [1, 2, 3, 4]


def test_graph_contains_adjacent_edges():
    g = json.loads(uncsimp.graph(DISKS))
    edges = {tuple(e) for e in g["edges"]}
    assert g["n"] == 4
    assert all(b > a for a, b in edges)
    assert {(1, 2), (2, 3), (3, 4)} <= edges


def test_certificate_round_trip():
    cert = json.loads(uncsimp.certificate(DISKS, 1, 4))
    assert cert["i"] == 1 and cert["j"] == 4
    assert isinstance(cert["valid"], bool)
    if not cert["valid"]:
        assert cert["witness"] is not None
        assert len(cert["witness"]) == 4


def test_invalid_shortcut_carries_witness():
    cert = json.loads(uncsimp.certificate(DISKS, 1, 4, epsilon=0.05))
    assert not cert["valid"]
    assert cert["witness_verified"]


def test_oracle_agrees_with_fast_checks():
    report = json.loads(uncsimp.oracle(DISKS, samples=128, seed=7))
    assert report["pairs"]
    assert all(row["agree"] for row in report["pairs"])


def test_render_produces_svg():
    svg = uncsimp.render(DISKS)
    assert svg.startswith("<svg")
    assert svg.count("<circle") == 4


def test_chord_helpers():
    zigzag = [(0.0, 0.0), (3.0, 0.5), (1.0, 0.5), (4.0, 0.0)]
    ordered = [(0.0, 0.0), (1.0, 0.5), (3.0, 0.5), (4.0, 0.0)]
    assert not uncsimp.frechet_to_chord(zigzag, 1.0)
    assert uncsimp.frechet_to_chord(ordered, 1.0)
    assert uncsimp.hausdorff_to_chord(ordered) == pytest.approx(0.5)


def test_validation_errors_surface_as_value_error():
    with pytest.raises(ValueError):
        uncsimp.simplify('{"model": "disk", "epsilon": 1.0, "points": []}')
    with pytest.raises(ValueError):
        uncsimp.simplify("{nope")


def test_tolerance_round_trip():
    uncsimp.set_tolerance(1e-7)
    assert uncsimp.tolerance() == pytest.approx(1e-7)
    uncsimp.set_tolerance(1e-9)
