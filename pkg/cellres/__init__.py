"""Cellular resolutions of monomial ideals."""
from cellres.complex_core import (
    Cell,
    CellComplex,
    Violation,
    boundary_cells,
    build_complex,
    cell_label,
    cells,
    face_poset,
    max_cells,
    new_cell,
    relabel,
    restrict,
    skeleton,
    validate,
)
from cellres.constructors import (
    rpn_complex,
    scarf_complex,
    simplex_complex,
    sphere_complex,
    taylor_complex,
    torus_complex,
)
from cellres.exceptions import CellResError
from cellres.homology import (
    chain_complex,
    coefficient_homology,
    graded_homology,
    rank,
    shift,
    smith_normal_form,
)
from cellres.monomials import (
    CoefficientField,
    Monomial,
    MonomialIdeal,
    RingDescriptor,
    divides,
    lcm,
    lcm_lattice,
    minimalize,
    parse_ideal,
    parse_monomial,
)
from cellres.polyhedral import (
    Polyhedron,
    bounded_faces,
    cell_complex_from_polyhedron,
    face_lattice,
    hull_complex,
    polyhedral_complex,
)
from cellres.resolution_checks import betti_table, check, is_minimal, is_resolution

__version__ = "0.1.0"
