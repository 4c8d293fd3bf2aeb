import pytest

from cellres import worked_examples
from cellres.complex_core import build_complex, new_cell, restrict
from cellres.exceptions import ParseError
from cellres.homology import (
    chain_complex,
    coefficient_homology,
    graded_homology,
    lattice_degrees,
    rank,
    reduced_ranks,
    shift,
    smith_normal_form,
)
from cellres.constructors import rpn_complex
from cellres.monomials import CoefficientField, RingDescriptor


def test_rank_over_fields():
    assert rank([[1, 2], [2, 4]]) == 1
    assert rank([[1, 0], [0, 1]]) == 2
    assert rank([[2]], CoefficientField(2)) == 0
    assert rank([[1, 1], [1, -1]], CoefficientField(2)) == 1
    assert rank([[1, 1], [1, -1]], CoefficientField(3)) == 2
    assert rank([]) == 0
    assert rank([[]]) == 0


def test_smith_normal_form():
    assert smith_normal_form([[2, 0], [0, 3]]) == [1, 6]
    assert smith_normal_form([[2, 4], [6, 8]]) == [2, 4]
    assert smith_normal_form([[0, 0], [0, 0]]) == []
    assert smith_normal_form([[12, 6, 4, 8], [3, 9, 6, 12], [2, 16, 14, 28], [20, 10, 10, 20]]) == [1, 10, 30]
    assert smith_normal_form([[-3]]) == [3]
    assert smith_normal_form([]) == []


def test_taylor_chain_ranks(taylor_i):
    chain = chain_complex(taylor_i)
    assert chain.degrees() == [-1, 0, 1, 2, 3]
    assert chain.ranks() == [1, 4, 6, 4, 1]
    assert chain.is_complex()


def test_delta_chain(delta):
    chain = chain_complex(delta)
    assert chain.ranks() == [1, 4, 4, 1]
    assert chain.is_complex()
    d1 = chain.differential(1)
    column = d1.cols.index("e12")
    entries = {(d1.rows[r], coeff, m.render()) for r, c, coeff, m in d1.entries if c == column}
    assert entries == {("v1", 1, "x*z"), ("v2", -1, "w")}


def test_augmentation_entries(delta):
    d0 = chain_complex(delta).differential(0)
    assert d0.rows == ("ambient",)
    assert [m.render() for _, _, _, m in d0.entries] == ["y*w", "x*y*z", "x^2*y", "z^4*w"]


def test_non_reduced_chain(delta):
    chain = chain_complex(delta, reduced=False)
    assert chain.degrees() == [0, 1, 2]
    assert chain.differential(0) is None


def test_shift():
    chain = chain_complex(worked_examples.prism())
    shifted = shift(chain, -1)
    assert shifted.degrees() == [0, 1, 2, 3, 4]
    assert shifted.ranks() == [1, 6, 9, 5, 1]
    assert shift(chain, 0) == chain
    assert shift(shifted, 1) == chain


def test_render_listing(taylor_i):
    top, bottom = chain_complex(taylor_i).render().splitlines()
    assert top == "S^1 <-- S^4 <-- S^6 <-- S^4 <-- S^1"
    assert bottom.split() == ["-1", "0", "1", "2", "3"]


def test_sphere_homology():
    summary = coefficient_homology(worked_examples.sphere2(), "Q")
    assert summary.ranks == {-1: 0, 0: 0, 1: 0, 2: 1}
    assert summary.render_text().splitlines() == ["-1 : 0", " 0 : 0", " 1 : 0", " 2 : QQ^1"]


def test_torus_homology():
    assert coefficient_homology(worked_examples.torus3(), "Q").ranks == {-1: 0, 0: 0, 1: 3, 2: 3, 3: 1}


def test_rp3_homology_mod_two():
    summary = coefficient_homology(worked_examples.rp3(), "Fp:2")
    assert summary.ranks == {-1: 0, 0: 0, 1: 1, 2: 1, 3: 1}
    assert " 1 : ZZ/2^1" in summary.render_text().splitlines()


def test_rp3_homology_rational():
    assert coefficient_homology(worked_examples.rp3(), "Q").ranks == {-1: 0, 0: 0, 1: 0, 2: 0, 3: 1}


def test_rp3_integer_homology():
    summary = coefficient_homology(worked_examples.rp3(), "Z")
    assert summary.ranks == {-1: 0, 0: 0, 1: 0, 2: 0, 3: 1}
    assert summary.torsion == {1: (2,)}
    lines = summary.render_text().splitlines()
    assert " 1 : ZZ/2" in lines
    assert " 3 : ZZ^1" in lines
    assert summary.to_dict()["homology"]["1"] == {"free": 0, "torsion": [2]}


def test_non_reduced_homology():
    summary = coefficient_homology(worked_examples.sphere2(), "Q", reduced=False)
    assert summary.ranks == {0: 1, 1: 0, 2: 1}


def test_void_complex_homology(ring):
    void = build_complex(ring, [])
    assert coefficient_homology(void).ranks == {-1: 1}
    assert chain_complex(void, reduced=False).ranks() == []


def test_unknown_coefficients(delta):
    with pytest.raises(ParseError):
        coefficient_homology(delta, "R")
    with pytest.raises(ParseError):
        coefficient_homology(delta, "Fp:4")


def test_graded_homology_of_minimal_resolution(delta):
    summary = graded_homology(delta)
    assert summary.ranks == {0: 0, 1: 0, 2: 0}
    assert summary.render_text().splitlines() == [
        "-1 : cokernel | yw xyz x2y z4w |",
        " 0 : 0",
        " 1 : 0",
        " 2 : 0",
    ]


def test_graded_homology_of_taylor(taylor_i):
    assert set(graded_homology(taylor_i).ranks.values()) == {0}


def test_graded_homology_of_scarf2(scarf2, ring):
    summary = graded_homology(scarf2)
    assert summary.graded[1] == {ring.monomial("x*y*z*w"): 1}
    assert summary.graded[0] == {}
    assert " 1 : S^1" in summary.render_text().splitlines()
    assert summary.to_dict()["homology"]["1"] == {"total": 1, "multidegrees": {"x*y*z*w": 1}}


def test_graded_homology_with_threads(scarf2):
    assert graded_homology(scarf2, workers=3) == graded_homology(scarf2, workers=1)


def test_graded_homology_at_given_degrees(scarf2, ring):
    summary = graded_homology(scarf2, degrees=[ring.monomial("x*y*z")])
    assert summary.ranks == {0: 0, 1: 0}


def test_cokernel_rendering_with_unit_vertex(ring):
    point = build_complex(ring, [new_cell(())])
    assert graded_homology(point).render_text().splitlines()[0] == "-1 : 0"


def test_strand_matches_restriction(delta):
    chain = chain_complex(delta)
    for b in lattice_degrees(delta):
        expected = reduced_ranks(restrict(delta, b))
        found = chain.strand_homology(b)
        assert all(found.get(i, 0) == expected.get(i, 0) for i in set(found) | set(expected))


def test_prism_graded_homology():
    prism = worked_examples.prism()
    summary = graded_homology(prism)
    assert all(summary.ranks[i] == 0 for i in (0, 1, 2, 3))
    generators = summary.render_text().splitlines()[0]
    assert generators.startswith("-1 : cokernel | ")
    assert len(generators.split("|")[1].split()) == 6


@pytest.mark.parametrize("p", [2, 3])
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_universal_coefficients_on_projective_space(n, p):
    complex_ = rpn_complex(RingDescriptor(("x",)), n)
    chain = chain_complex(complex_)
    factors = {i: smith_normal_form(d.integer_matrix()) for i, d in chain.differentials.items()}
    rational = coefficient_homology(complex_, "Q").ranks
    modular = coefficient_homology(complex_, CoefficientField(p)).ranks
    for i in chain.degrees():
        divisible = sum(1 for f in factors.get(i, []) + factors.get(i + 1, []) if f % p == 0)
        assert modular[i] == rational[i] + divisible, (n, p, i)
