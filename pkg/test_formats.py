import pytest

from cellres import formats, worked_examples
from cellres.complex_core import face_poset
from cellres.exceptions import ComplexValidationError, ParseError
from cellres.monomials import RingDescriptor


def test_ideal_document(ideal_i):
    data = formats.ideal_to_dict(ideal_i)
    assert data["ring"] == {"variables": ["x", "y", "z", "w"], "field": "Q"}
    assert data["generators"] == [[0, 1, 0, 1], [1, 1, 1, 0], [2, 1, 0, 0], [0, 0, 4, 1]]
    assert formats.ideal_from_dict(data) == ideal_i


def test_ideal_document_accepts_strings():
    data = {"ring": {"variables": ["a", "b"], "field": "Fp:5"}, "generators": ["a^2", [1, 1], "a^3*b"]}
    ideal = formats.ideal_from_dict(data)
    assert [g.render() for g in ideal] == ["a*b", "a^2"]
    assert ideal.ring.field.characteristic == 5


@pytest.mark.parametrize("data", [
    {"generators": ["x"]},
    {"ring": {"variables": ["x"]}, "generators": []},
    {"ring": {"variables": ["x"]}, "generators": [[1, 2]]},
    {"ring": {"variables": ["x"]}, "generators": [[-1]]},
    {"ring": {"variables": ["x"], "field": "Fp:6"}, "generators": ["x"]},
])
def test_bad_ideal_documents(data):
    with pytest.raises(ParseError):
        formats.ideal_from_dict(data)


def test_complex_document_round_trip(delta):
    data = formats.complex_to_dict(delta)
    assert data["cells"][0] == {"id": "v1", "dim": 0, "label": [0, 1, 0, 1], "boundary": []}
    again = formats.complex_from_dict(data)
    assert formats.complex_to_dict(again) == data


def test_complex_document_validates(delta):
    data = formats.complex_to_dict(delta)
    f123 = next(c for c in data["cells"] if c["id"] == "f123")
    f123["boundary"][0][1] = -f123["boundary"][0][1]
    with pytest.raises(ComplexValidationError):
        formats.complex_from_dict(data)
    assert formats.complex_from_dict(data, check=False).cell("f123")


def test_complex_document_label_defaults_to_one():
    data = {"ring": {"variables": ["x"]}, "cells": [{"id": "p", "dim": 0}]}
    assert formats.complex_from_dict(data).cell("p").label.is_one()


def test_malformed_json():
    with pytest.raises(ParseError):
        formats.loads("{not json")


def test_polyhedra_documents():
    ring, polyhedra, many = formats.polyhedra_from_dict({"vertices": [["1/2", 0], [1, 0]]})
    assert (ring, len(polyhedra), many) == (None, 1, False)
    assert formats.polyhedron_to_dict(polyhedra[0]) == {"vertices": [["1/2", "0"], ["1", "0"]], "rays": []}

    _, polyhedra, many = formats.polyhedra_from_dict([{"vertices": [[0]]}, {"vertices": [[1]]}])
    assert many and len(polyhedra) == 2

    ring, _, _ = formats.polyhedra_from_dict(
        {"ring": {"variables": ["a", "b"]}, "polyhedra": [{"vertices": [[0, 0]]}]}
    )
    assert ring.variables == ("a", "b")


def test_bad_polyhedron_document():
    with pytest.raises(ParseError):
        formats.polyhedra_from_dict({"vertices": [["x"]]})
    with pytest.raises(ParseError):
        formats.polyhedra_from_dict({"rays": []})


def test_label_files():
    ring = RingDescriptor(("a", "b"))
    labels = formats.point_labels_from_dict({"5,1": "a^5*b", "0,7": "b^7"}, ring)
    assert formats.point_labels_to_dict(labels) == {"5,1": "a^5*b", "0,7": "b^7"}
    assert formats.vertex_labels_from_dict({"v1": "a"}, ring)["v1"] == ring.monomial("a")
    with pytest.raises(ParseError):
        formats.vertex_labels_from_dict({"v1": 3}, ring)


def test_poset_document():
    data = formats.poset_to_dict(face_poset(worked_examples.sphere2()))
    assert data == {"cells": ["s0", "s2"], "matrix": [[1, 0], [0, 1]]}


@pytest.mark.parametrize("generators, position", [
    (["x*y", "x^2", "q^3"], 2),
    ([[1, 1], [2, 0, 1]], 1),
    (["x", [-1, 0]], 1),
])
def test_ideal_document_errors_name_the_generator(generators, position):
    data = {"ring": {"variables": ["x", "y"]}, "generators": generators}
    with pytest.raises(ParseError, match=f"generator {position}: "):
        formats.ideal_from_dict(data)


def test_ideal_document_warns_on_redundant_generators(caplog):
    data = {"ring": {"variables": ["x", "y"]}, "generators": ["x", "x*y", "y^2"]}
    with caplog.at_level("WARNING", logger="cellres.monomials"):
        ideal = formats.ideal_from_dict(data)
    assert len(ideal) == 2
    assert "Minimalized 3 generators to 2" in caplog.text
