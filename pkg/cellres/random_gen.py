# random_gen.py
"""Seeded random ideals and labeled complexes for property checks."""
import logging
from itertools import combinations

from cellres.complex_core import Cell, CellComplex
from cellres.exceptions import CellResError
from cellres.monomials import Monomial, RingDescriptor, divides, lcm_all, minimalize

logger = logging.getLogger(__name__)

_SMALL_NAMES = ("x", "y", "z", "w")


def default_ring(nvars, coefficient_field=None):
    """x, y, z, w for up to four variables, x0, x1, ... beyond"""
    names = _SMALL_NAMES[:nvars] if nvars <= len(_SMALL_NAMES) else tuple(f"x{i}" for i in range(nvars))
    if coefficient_field is None:
        return RingDescriptor(names)
    return RingDescriptor(names, coefficient_field)


def random_monomial(rng, ring, max_exponent, allow_one=True):
    while True:
        m = Monomial(ring, tuple(rng.randint(0, max_exponent) for _ in range(ring.nvars)))
        if allow_one or not m.is_one():
            return m


def random_ideal(rng, generators, variables, max_exponent, ring=None):
    """Minimalized ideal from `generators` random non-unit monomials

    The result may have fewer generators when some draw divides another.
    """
    ring = ring or default_ring(variables)
    gens = [random_monomial(rng, ring, max_exponent, allow_one=False) for _ in range(generators)]
    return minimalize(gens)


def is_generic(ideal):
    """No two generators share the same nonzero exponent in any variable"""
    for k in range(ideal.ring.nvars):
        seen = [g.exponents[k] for g in ideal.generators if g.exponents[k]]
        if len(seen) != len(set(seen)):
            return False
    return True


def random_generic_ideal(rng, generators, variables, max_exponent, ring=None, max_attempts=1000):
    """Generic ideal with exactly `generators` minimal generators, by rejection sampling"""
    ring = ring or default_ring(variables)
    if max_exponent < 1:
        raise CellResError("max_exponent must be at least 1 for a generic ideal")
    for attempt in range(max_attempts):
        columns = []
        for _ in range(ring.nvars):
            values = rng.sample(range(1, max_exponent + 1), min(generators, max_exponent))
            values += [0] * (generators - len(values))
            column = [v if rng.random() < 0.8 else 0 for v in values]
            rng.shuffle(column)
            columns.append(column)
        gens = [Monomial(ring, tuple(col[i] for col in columns)) for i in range(generators)]
        if any(g.is_one() for g in gens) or len(set(gens)) != len(gens):
            continue
        if any(divides(a, b) for a in gens for b in gens if a != b):
            continue
        ideal = minimalize(gens)
        if is_generic(ideal):
            logger.debug(f"Generic ideal after {attempt + 1} attempts: {ideal}")
            return ideal
    raise CellResError(f"no generic ideal with {generators} generators found in {max_attempts} attempts")


def _subset_id(subset):
    return "-".join(str(i + 1) for i in subset)


def random_labeled_complex(rng, ring, max_vertices=4, max_cells=10, max_exponent=3, extra_factor=0.3):
    """Random simplicial complex with random labels

    Vertex labels are random monomials; every higher label is the lcm of
    its boundary labels, multiplied by a random variable with probability
    `extra_factor`, so labels need not be lcms of vertex labels.
    """
    nvertices = rng.randint(1, max_vertices)
    faces = [(i,) for i in range(nvertices)]
    present = set(faces)
    for size in range(2, nvertices + 1):
        candidates = list(combinations(range(nvertices), size))
        rng.shuffle(candidates)
        for subset in candidates:
            if len(faces) >= max_cells:
                break
            facets = [subset[:k] + subset[k + 1:] for k in range(size)]
            if all(f in present for f in facets) and rng.random() < 0.6:
                faces.append(subset)
                present.add(subset)

    labels = {}
    cells = []
    for subset in sorted(faces, key=lambda s: (len(s), s)):
        if len(subset) == 1:
            label = random_monomial(rng, ring, max_exponent)
            boundary = ()
        else:
            facets = [subset[:k] + subset[k + 1:] for k in range(len(subset))]
            label = lcm_all((labels[f] for f in facets), ring)
            if rng.random() < extra_factor:
                label = label * ring.variable(rng.choice(ring.variables))
            boundary = tuple((_subset_id(f), (-1) ** k) for k, f in enumerate(facets))
        labels[subset] = label
        cells.append(Cell(_subset_id(subset), len(subset) - 1, boundary, label))
    return CellComplex.from_records(ring, cells)
