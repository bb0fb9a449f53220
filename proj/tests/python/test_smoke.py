import json
import math

import pytest

import circle_action as ca


def test_canonical_spec():
    spec = ca.ActionSpec([0, -1, 2], trivial_dim=3)
    assert spec.weights == [1, 2]
    assert spec.trivial_dim == 5
    assert spec.n == 9
    assert json.loads(spec.to_json()) == {"trivial_dim": 5, "weights": [1, 2]}
    with pytest.raises(ca.CircleActionError, match="NotEffective"):
        ca.ActionSpec([2, 4])


def test_generators_for_weights_1_2():
    spec = ca.ActionSpec([1, 2])
    gens = ca.realize_generators(ca.hilbert_basis(spec))
    assert [str(g) for g in gens] == ["|z1|^2", "|z2|^2", "Re(z1^2 zbar2)", "Im(z1^2 zbar2)"]
    assert ca.evaluate_hilbert_map(gens, [1, 1]) == pytest.approx([1, 1, 1, 0])
    y = ca.evaluate_hilbert_map(gens, [0.3 + 0.4j, -0.2 + 0.5j])
    assert ca.check_m2_membership(1, 2, y)


def test_invariance_under_rotation():
    spec = ca.ActionSpec([2, 3, 5])
    gens = ca.realize_generators(ca.hilbert_basis(spec))
    z = [0.1 + 0.2j, -0.5j, 0.3]
    w = ca.rotate(spec, 1.1, z)
    assert ca.evaluate_hilbert_map(gens, w) == pytest.approx(ca.evaluate_hilbert_map(gens, z), abs=1e-12)
    assert ca.same_orbit(spec, z, w)


def test_stratify_and_recover():
    spec = ca.ActionSpec([2, 2, 3, 4, 6])
    diagram = ca.orbit_strata(spec)
    assert set(diagram.hasse_edges()) == {
        ("order:2", "order:1"),
        ("order:3", "order:1"),
        ("order:4", "order:2"),
        ("order:6", "order:2"),
        ("order:6", "order:3"),
    }
    assert diagram.depth("order:6") == 2
    wire = ca.StratificationDiagram.from_json(diagram.to_json())
    assert ca.recover_weights(wire) == [2, 2, 3, 4, 6]
    assert ca.infer_dimensions(wire) == (10, 0, 5)
    assert ca.roundtrip(ca.ActionSpec([7, 11, 13], trivial_dim=4))


def test_isotropy_and_faces():
    spec = ca.ActionSpec([2, 2, 3, 4, 6])
    assert ca.gcd_label(spec, [2, 4]) == 3
    assert math.isinf(ca.isotropy_order(spec, []))
    rows = [json.loads(r) for r in ca.face_table(ca.ActionSpec([1, 2, 3]))]
    assert rows[0] == {"face": [1, 2, 3], "order": 1, "codim": 0}
    assert len(rows) == 7


def test_verify_lines():
    for line in ca.verify(ca.ActionSpec([1, 2]), seed=3, trials=50):
        report = json.loads(line)
        assert report["failures"] == 0


def test_malformed_diagram():
    text = json.dumps(
        {
            "ambient_dim": 2,
            "strata": [{"id": "O", "order": 2, "dim": 1}, {"id": "A", "order": "inf", "dim": 0}],
            "closure": [["A", "O"]],
        }
    )
    with pytest.raises(ca.CircleActionError, match="NotEffective"):
        ca.recover(ca.StratificationDiagram.from_json(text))
