import json

import pytest

from cellres import formats, worked_examples
from cellres.cli import cli, main


@pytest.fixture
def ideal_json(invoke):
    code, out = invoke(["example", "ideal-I"])
    assert code == 0
    return out


@pytest.fixture
def delta_json(invoke):
    code, out = invoke(["example", "delta"])
    assert code == 0
    return out


def test_example_ideal(ideal_json):
    data = json.loads(ideal_json)
    assert data["generators"] == [[0, 1, 0, 1], [1, 1, 1, 0], [2, 1, 0, 0], [0, 0, 4, 1]]


def test_taylor_then_check(invoke, invoke_json, ideal_json):
    code, taylor = invoke(["taylor"], ideal_json)
    assert code == 0
    report = invoke_json(["check"], taylor)
    assert report["isResolution"] is True
    assert report["isMinimal"] is False


def test_taylor_chain_ranks(invoke, invoke_json, ideal_json):
    _, taylor = invoke(["taylor"], ideal_json)
    chain = invoke_json(["chain"], taylor)
    assert chain["degrees"] == [-1, 0, 1, 2, 3]
    assert chain["ranks"] == [1, 4, 6, 4, 1]


def test_chain_export_format(invoke_json, delta_json):
    chain = invoke_json(["chain", "--no-reduced"], delta_json)
    d1 = next(d for d in chain["differentials"] if d["degree"] == 1)
    assert d1["rows"] == ["v1", "v2", "v3", "v4"]
    assert d1["cols"] == ["e12", "e13", "e14", "e23"]
    assert [0, 0, 1, "x*z"] in d1["entries"]


def test_chain_shift(invoke, invoke_json):
    _, prism = invoke(["example", "toric-prism"])
    chain = invoke_json(["chain", "--shift", "-1"], prism)
    assert chain["degrees"] == [0, 1, 2, 3, 4]
    assert chain["ranks"] == [1, 6, 9, 5, 1]


def test_delta_check_and_graded_homology(invoke, invoke_json, delta_json):
    assert invoke_json(["check"], delta_json) == {"isResolution": True, "witness": None, "isMinimal": True}
    code, text = invoke(["homology", "--graded", "--format", "text"], delta_json)
    assert code == 0
    assert text.splitlines() == ["-1 : cokernel | yw xyz x2y z4w |", " 0 : 0", " 1 : 0", " 2 : 0"]


def test_scarf_of_scarf2(invoke, invoke_json):
    _, ideal = invoke(["example", "ideal-scarf2"])
    _, scarf = invoke(["scarf"], ideal)
    report = invoke_json(["check"], scarf)
    assert report["isResolution"] is False
    assert report["witness"] == {"multidegree": "x*y*z*w", "degree": 1, "rank": 1}
    code, _ = invoke(["betti"], scarf)
    assert code == 1


def test_hull(invoke, invoke_json):
    _, ideal = invoke(["example", "ideal-I2"])
    code, hull = invoke(["hull"], ideal)
    assert code == 0
    assert formats.complex_from_dict(json.loads(hull)).f_vector == (6, 7, 2)
    assert invoke_json(["check"], hull)["isMinimal"] is True


def test_spaces(invoke, invoke_json):
    _, rp3 = invoke(["space", "rpn", "--dim", "3", "--field", "Fp:2"])
    homology = invoke_json(["homology"], rp3)
    assert homology["homology"] == {"-1": 0, "0": 0, "1": 1, "2": 1, "3": 1}
    integral = invoke_json(["homology", "--coeff", "Z"], rp3)
    assert integral["homology"]["1"] == {"free": 0, "torsion": [2]}

    _, torus = invoke(["space", "torus", "--dim", "3"])
    assert invoke_json(["homology", "--coeff", "Q"], torus)["homology"]["1"] == 3

    poset = invoke_json(["poset"], rp3)
    assert poset["matrix"] == [[1, 1, 1, 1], [0, 1, 1, 1], [0, 0, 1, 1], [0, 0, 0, 1]]


def test_betti_text(invoke, delta_json):
    code, text = invoke(["betti"], delta_json)
    assert code == 0
    assert text.splitlines()[1] == "1 : 4 | yw xyz x2y z4w"


def test_betti_json_no_shift(invoke_json, delta_json):
    table = invoke_json(["betti", "--no-shift", "--format", "json"], delta_json)
    assert table["totals"] == [4, 4, 1]


def test_frompoly_with_labels(invoke_json, tmp_path):
    points = [[5, 1], [3, 2], [2, 3], [0, 7]]
    polyhedra = {
        "ring": {"variables": ["a", "b"]},
        "polyhedra": [{"vertices": [p, q]} for p, q in zip(points, points[1:])],
    }
    labels = tmp_path / "labels.json"
    labels.write_text(json.dumps({"5,1": "a^5*b", "3,2": "a^3*b^2", "2,3": "a^2*b^3", "0,7": "b^7"}))
    data = invoke_json(["frompoly", "--labels", str(labels)], json.dumps(polyhedra))
    complex_ = formats.complex_from_dict(data)
    assert {e.label.render() for e in complex_.cells_of_dim(1)} == {"a^5*b^2", "a^3*b^3", "a^2*b^7"}


def test_frompoly_single_polytope(invoke_json):
    square = {"vertices": [[0, 0], [1, 0], [0, 1], [1, 1]]}
    data = invoke_json(["frompoly", "--variables", "x,y"], json.dumps(square))
    assert formats.complex_from_dict(data).f_vector == (4, 4, 1)


def test_relabel(invoke, invoke_json, delta_json, tmp_path):
    labels = tmp_path / "labels.json"
    labels.write_text(json.dumps({v: "1" for v in ["v1", "v2", "v3", "v4"]}))
    data = invoke_json(["relabel", "--labels", str(labels)], delta_json)
    assert all(c["label"] == [0, 0, 0, 0] for c in data["cells"])


def test_validate_reports_sign_error(invoke, delta_json):
    data = json.loads(delta_json)
    assert invoke(["validate"], delta_json)[0] == 0
    f123 = next(c for c in data["cells"] if c["id"] == "f123")
    f123["boundary"][0][1] *= -1
    code, out = invoke(["validate"], json.dumps(data))
    assert code == 1
    report = json.loads(out)
    assert report["valid"] is False
    assert {v["rule"] for v in report["violations"]} == {"d-squared"}


def test_corrupted_complex_is_a_domain_error(invoke, delta_json):
    data = json.loads(delta_json)
    data["cells"][-1]["boundary"][0][1] *= -1
    assert invoke(["check"], json.dumps(data))[0] == 1


def test_parse_errors_exit_two(invoke):
    assert invoke(["taylor"], "{oops")[0] == 2
    assert invoke(["taylor"], json.dumps({"ring": {"variables": ["x"]}, "generators": ["q"]}))[0] == 2
    assert invoke(["taylor", "-i", "/nonexistent/ideal.json"])[0] == 2
    assert invoke(["space", "torus"])[0] == 2


def test_out_option(invoke, tmp_path):
    target = tmp_path / "sphere.json"
    code, out = invoke(["space", "sphere", "--dim", "2", "--out", str(target)])
    assert code == 0
    assert out == ""
    assert len(json.loads(target.read_text())["cells"]) == 2


def test_gen_random_ideal_is_seeded(invoke_json):
    first = invoke_json(["gen-random-ideal", "--seed", "7", "--generic"])
    second = invoke_json(["gen-random-ideal", "--seed", "7", "--generic"])
    assert first == second
    assert len(first["ring"]["variables"]) == 3


@pytest.mark.parametrize("name", sorted(worked_examples.EXAMPLES))
def test_every_example_prints(invoke_json, name):
    data = invoke_json(["example", name])
    assert "ring" in data


def test_main_exit_codes(tmp_path, capsys):
    assert main(["example", "sphere2"]) == 0
    bad = tmp_path / "bad.json"
    bad.write_text("[1, 2")
    assert main(["taylor", "-i", str(bad)]) == 2
    delta = json.loads(formats.dumps(formats.complex_to_dict(worked_examples.scarf2())))
    path = tmp_path / "scarf2.json"
    path.write_text(json.dumps(delta))
    assert main(["betti", "-i", str(path)]) == 1
    assert main(["no-such-command"]) == 2


def test_ideal_errors_name_the_generator(runner):
    data = {"ring": {"variables": ["x", "y"]}, "generators": ["x*y", "x^2", "q^3"]}
    result = runner.invoke(cli, ["taylor"], input=json.dumps(data))
    assert result.exit_code == 2
    assert "generator 2" in result.stderr


def test_graded_homology_rejects_no_reduced(invoke, delta_json):
    assert invoke(["homology", "--graded", "--no-reduced"], delta_json)[0] == 2
    assert invoke(["homology", "--graded", "--coeff", "Z"], delta_json)[0] == 2
