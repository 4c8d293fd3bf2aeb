# worked_examples.py
"""Ready-made ideals and complexes used in the documentation and tests."""
import logging
from itertools import product

from cellres.complex_core import build_complex, new_cell, relabel
from cellres.constructors import rpn_complex, scarf_complex, sphere_complex, taylor_complex, torus_complex
from cellres.monomials import Monomial, RingDescriptor, parse_ideal
from cellres.polyhedral import (
    Polyhedron,
    cell_complex_from_polyhedron,
    hull_complex,
    polyhedral_complex,
)

logger = logging.getLogger(__name__)


def ring_xyzw():
    return RingDescriptor(("x", "y", "z", "w"))


def ideal_i():
    """<yw, xyz, x^2y, z^4w> in QQ[x,y,z,w]"""
    return parse_ideal(["y*w", "x*y*z", "x^2*y", "z^4*w"], ring_xyzw())


def ideal_i2():
    ring = RingDescriptor(("x", "y", "z"))
    return parse_ideal(["x^2*z", "x*y*z", "y^2*z", "x^3*y^5", "x^4*y^4", "x^5*y^3"], ring)


def ideal_scarf2():
    """<xy, yz, zw, wx>: its Scarf complex is a 4-cycle and not a resolution"""
    return parse_ideal(["x*y", "y*z", "z*w", "w*x"], ring_xyzw())


def delta():
    """Minimal resolution of ideal_i: a triangle with a pendant edge"""
    ring = ring_xyzw()
    v1 = new_cell((), ring.monomial("y*w"), cell_id="v1")
    v2 = new_cell((), ring.monomial("x*y*z"), cell_id="v2")
    v3 = new_cell((), ring.monomial("x^2*y"), cell_id="v3")
    v4 = new_cell((), ring.monomial("z^4*w"), cell_id="v4")
    e12 = new_cell([v1, v2], cell_id="e12")
    e13 = new_cell([v1, v3], cell_id="e13")
    e23 = new_cell([v2, v3], cell_id="e23")
    e14 = new_cell([v1, v4], cell_id="e14")
    f123 = new_cell([e12, e13, e23], cell_id="f123")
    return build_complex(ring, [f123, e14])


def taylor_i():
    return taylor_complex(ideal_i())


def scarf_i():
    return scarf_complex(ideal_i())


def hull_i2(t=None):
    return hull_complex(ideal_i2(), t)


def scarf2():
    return scarf_complex(ideal_scarf2())


def sphere2():
    return sphere_complex(ring_xyzw(), 2)


def torus3():
    return torus_complex(ring_xyzw(), 3)


def rp3():
    return rpn_complex(ring_xyzw(), 3)


def tetrahedron():
    """Solid simplex on the unit points of QQ^4, all labels 1"""
    unit = [tuple(1 if i == j else 0 for j in range(4)) for i in range(4)]
    return cell_complex_from_polyhedron(ring_xyzw(), Polyhedron(tuple(unit)))


def relabeled_tetrahedron():
    """Tetrahedron relabeled by the generators of ideal_i, reproducing its Taylor labels"""
    ring = ring_xyzw()
    labels = ["y*w", "x^2*y", "x*y*z", "z^4*w"]
    complex_ = tetrahedron()
    vertex_ids = [v.id for v in complex_.vertices]
    return relabel(complex_, {v: ring.monomial(text) for v, text in zip(vertex_ids, labels)})


PATH_POINTS = ((5, 1), (3, 2), (2, 3), (0, 7))


def path_complex():
    """Three segments (5,1)-(3,2)-(2,3)-(0,7); the vertex (i, j) is labeled a^i b^j"""
    ring = RingDescriptor(("a", "b"))
    segments = [Polyhedron((p, q)) for p, q in zip(PATH_POINTS, PATH_POINTS[1:])]
    pc = polyhedral_complex(segments)
    labels = {point: Monomial(ring, point) for point in PATH_POINTS}
    return cell_complex_from_polyhedron(ring, pc, labels)


def toric_ring():
    return RingDescriptor(tuple(f"x{i}" for i in range(5)))


def toric_ideal():
    """Irrelevant ideal of P^1 x P^2: <x0, x1> intersected with <x2, x3, x4>"""
    ring = toric_ring()
    return parse_ideal([f"x{i}*x{j}" for i in (0, 1) for j in (2, 3, 4)], ring)


def prism_labels():
    """Each prism vertex gets the product of the variables of the facets missing it"""
    ring = toric_ring()
    triangle = {(0, 0): "x4", (1, 0): "x2", (0, 1): "x3"}
    labels = {}
    for u, (v, w) in product((0, 1), triangle):
        segment_var = "x1" if u == 0 else "x0"
        labels[(u, v, w)] = ring.monomial(f"{segment_var}*{triangle[(v, w)]}")
    return labels


def prism():
    """Segment times triangle, labeled so that it resolves toric_ideal"""
    labels = prism_labels()
    return cell_complex_from_polyhedron(toric_ring(), Polyhedron(tuple(labels)), labels)


EXAMPLES = {
    "ideal-I": ideal_i,
    "ideal-I2": ideal_i2,
    "ideal-scarf2": ideal_scarf2,
    "delta": delta,
    "taylor-I": taylor_i,
    "hull-I2": hull_i2,
    "relabel-tetrahedron": relabeled_tetrahedron,
    "staircase-path": path_complex,
    "toric-prism": prism,
    "sphere2": sphere2,
    "torus3": torus3,
    "rp3": rp3,
}


def example(name):
    """Build a named example; returns a MonomialIdeal or a CellComplex"""
    logger.info(f"Building example {name}")
    return EXAMPLES[name]()
