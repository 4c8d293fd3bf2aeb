# constructors.py
"""Canonical complexes: Taylor, Scarf, sphere, real projective space, torus."""
import logging
from collections import Counter
from itertools import combinations

from cellres.complex_core import Cell, CellComplex
from cellres.config import get_settings
from cellres.exceptions import CellConstructionError, EmptyIdealError
from cellres.monomials import subset_lcms

logger = logging.getLogger(__name__)


def _subset_id(subset):
    return "-".join(str(i + 1) for i in subset)


def _check_subset_budget(q):
    limit = get_settings().max_subset_generators
    if q > limit:
        raise CellConstructionError(
            f"{q} generators need 2^{q} - 1 subsets; CELLRES_MAX_SUBSET_GENERATORS is {limit}"
        )


def _simplicial_cells(subset_labels, keep=None):
    """Cells of a simplex on the index subsets, with sign (-1)^k on the k-th face"""
    cells = []
    for subset, label in subset_labels.items():
        if keep is not None and subset not in keep:
            continue
        boundary = []
        if len(subset) > 1:
            for k in range(len(subset)):
                face = subset[:k] + subset[k + 1:]
                if keep is None or face in keep:
                    boundary.append((_subset_id(face), (-1) ** k))
        cells.append(Cell(_subset_id(subset), len(subset) - 1, tuple(boundary), label))
    return cells


def simplex_complex(ring, vertex_labels):
    """Full simplex on the given vertex labels, faces labeled by lcms

    Args:
        ring (RingDescriptor): ring of the labels
        vertex_labels (list): one Monomial per vertex, in vertex order

    Returns:
        CellComplex: the labeled simplex
    """
    vertex_labels = list(vertex_labels)
    if not vertex_labels:
        raise EmptyIdealError("a simplex needs at least one vertex")
    _check_subset_budget(len(vertex_labels))
    cells = _simplicial_cells(subset_lcms(vertex_labels))
    return CellComplex.from_records(ring, cells)


def taylor_complex(ideal):
    """Full simplex on the minimal generators, labeled by subset lcms"""
    if len(ideal) == 0:
        raise EmptyIdealError("the Taylor complex needs at least one generator")
    complex_ = simplex_complex(ideal.ring, ideal.generators)
    logger.info(f"Taylor complex of {ideal}: f-vector {complex_.f_vector}")
    return complex_


def scarf_complex(ideal):
    """Subcomplex of the Taylor complex on subsets with a unique lcm

    Enumerates all 2^q - 1 subsets of the q generators.
    """
    if len(ideal) == 0:
        raise EmptyIdealError("the Scarf complex needs at least one generator")
    _check_subset_budget(len(ideal))
    labels = subset_lcms(ideal.generators)
    multiplicity = Counter(labels.values())
    keep = {subset for subset, label in labels.items() if multiplicity[label] == 1}
    complex_ = CellComplex.from_records(ideal.ring, _simplicial_cells(labels, keep))
    logger.info(f"Scarf complex of {ideal}: f-vector {complex_.f_vector}")
    return complex_


def _check_dimension(n):
    if int(n) < 1:
        raise CellConstructionError(f"dimension must be at least 1, got {n}")
    return int(n)


def sphere_complex(ring, n):
    """n-sphere as one vertex and one n-cell, all labels 1"""
    n = _check_dimension(n)
    one = ring.one()
    top_boundary = (("s0", 0),) if n == 1 else ()
    cells = [Cell("s0", 0, (), one), Cell(f"s{n}", n, top_boundary, one)]
    return CellComplex.from_records(ring, cells)


def rpn_complex(ring, n):
    """Real projective n-space: one cell per dimension, degree 1 + (-1)^k"""
    n = _check_dimension(n)
    one = ring.one()
    cells = [Cell("p0", 0, (), one)]
    for k in range(1, n + 1):
        cells.append(Cell(f"p{k}", k, ((f"p{k - 1}", 1 + (-1) ** k),), one))
    return CellComplex.from_records(ring, cells)


def torus_complex(ring, n):
    """Product of n circles: one cell per subset of {1..n}, all degrees 0"""
    n = _check_dimension(n)
    one = ring.one()

    def torus_id(subset):
        return "t" + "-".join(str(i) for i in subset)

    cells = []
    for size in range(n + 1):
        for subset in combinations(range(1, n + 1), size):
            boundary = tuple(
                (torus_id(subset[:k] + subset[k + 1:]), 0) for k in range(size)
            )
            cells.append(Cell(torus_id(subset), size, boundary, one))
    return CellComplex.from_records(ring, cells)
