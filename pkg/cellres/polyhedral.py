# polyhedral.py
"""Exact rational polyhedra and their conversion to cell complexes.

A polyhedron is conv(vertices) + cone(rays). Facets are found by brute
force over candidate supporting hyperplanes spanned by a vertex plus
d - 1 further generators (d the dimension of the polyhedron); the face
lattice is the closure of the facets under intersection. All arithmetic
is over sympy's QQ, so results never depend on floating point.
"""
import logging
import math
import re
from dataclasses import dataclass, field
from itertools import combinations

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from cellres.complex_core import build_complex, cell_sort_key, new_cell
from cellres.exceptions import ParseError, PolyhedralError
from cellres.monomials import Monomial

logger = logging.getLogger(__name__)

_RATIONAL = re.compile(r"\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?")
_QQ_TYPE = type(QQ(0))


def parse_rational(value):
    """Parse an integer or a "p/q" string into an exact rational"""
    if isinstance(value, _QQ_TYPE):
        return value
    if isinstance(value, bool):
        raise ParseError(f"not a rational number: {value!r}")
    if isinstance(value, int):
        return QQ(value)
    if isinstance(value, str):
        match = _RATIONAL.fullmatch(value)
        if match:
            denominator = int(match.group(2)) if match.group(2) else 1
            if denominator == 0:
                raise ParseError(f"zero denominator in {value!r}")
            return QQ(int(match.group(1)), denominator)
    raise ParseError(f"not a rational number: {value!r}")


def render_rational(x):
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def to_point(coordinates):
    return tuple(parse_rational(c) for c in coordinates)


def render_point(point):
    """Coordinate key used in label files, e.g. "5,1" or "1/2,0" """
    return ",".join(render_rational(x) for x in point)


def parse_point_key(key):
    return tuple(parse_rational(part) for part in key.split(","))


def _sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def _dot(u, v):
    return sum((a * b for a, b in zip(u, v)), QQ(0))


def _domain_matrix(rows, ncols):
    return DomainMatrix([list(r) for r in rows], (len(rows), ncols), QQ)


def _rank(vectors, ncols):
    if not vectors:
        return 0
    return _domain_matrix(vectors, ncols).rank()


def _row_basis(vectors, ncols):
    """Basis of the row space (nonzero rows of the reduced echelon form)"""
    if not vectors:
        return []
    reduced, pivots = _domain_matrix(vectors, ncols).rref()
    rows = reduced.to_list()
    return [tuple(rows[i]) for i in range(len(pivots))]


def _nullspace(vectors, ncols):
    """Basis of {x : v.x = 0 for every v in vectors}"""
    if not vectors:
        return [tuple(QQ(1) if i == j else QQ(0) for j in range(ncols)) for i in range(ncols)]
    return [tuple(row) for row in _domain_matrix(vectors, ncols).nullspace().to_list()]


@dataclass(frozen=True)
class Polyhedron:
    """conv(vertices) + cone(rays) with exact rational coordinates"""

    vertices: tuple
    rays: tuple = ()

    def __post_init__(self):
        vertices = [to_point(v) for v in self.vertices]
        rays = [to_point(r) for r in self.rays]
        if not vertices:
            raise PolyhedralError("a polyhedron needs at least one vertex")
        ambient = {len(p) for p in vertices + rays}
        if len(ambient) != 1:
            raise PolyhedralError(f"inconsistent coordinate dimensions {sorted(ambient)}")
        if any(all(x == 0 for x in r) for r in rays):
            raise PolyhedralError("rays must be nonzero")
        object.__setattr__(self, "vertices", tuple(sorted(set(vertices))))
        object.__setattr__(self, "rays", tuple(sorted(set(rays))))

    @property
    def ambient_dim(self):
        return len(self.vertices[0])

    @property
    def is_bounded(self):
        return not self.rays


@dataclass(frozen=True)
class Face:
    """A nonempty face, given by the generators it contains"""

    vertices: frozenset
    rays: frozenset
    dim: int

    @property
    def is_bounded(self):
        return not self.rays

    def __le__(self, other):
        return self.vertices <= other.vertices and self.rays <= other.rays

    def sort_key(self):
        return (self.dim, tuple(sorted(self.vertices)), tuple(sorted(self.rays)))


@dataclass(frozen=True)
class FaceLattice:
    """Nonempty faces of a polyhedron with their covering relations

    Vertex indices refer to `points`, ray indices to `rays`.
    """

    points: tuple
    rays: tuple
    faces: tuple
    covers: tuple
    inequalities: tuple = field(default=(), repr=False)
    equations: tuple = field(default=(), repr=False)

    @property
    def dim(self):
        return max(f.dim for f in self.faces)

    @property
    def f_vector(self):
        return tuple(sum(1 for f in self.faces if f.dim == d) for d in range(self.dim + 1))

    @property
    def facets(self):
        return [f for f in self.faces if f.dim == self.dim - 1]

    def bounded(self):
        """Sub-lattice of the bounded faces with the induced covers"""
        keep = [i for i, f in enumerate(self.faces) if f.is_bounded]
        index = {old: new for new, old in enumerate(keep)}
        covers = tuple(
            (index[lo], index[hi]) for lo, hi in self.covers if lo in index and hi in index
        )
        return FaceLattice(
            self.points, self.rays, tuple(self.faces[i] for i in keep), covers,
            self.inequalities, self.equations,
        )

    def faces_below(self, i):
        return [lo for lo, hi in self.covers if hi == i]

    def satisfies_diamond(self):
        """Every interval spanning two dimensions has exactly two middle faces"""
        for lo in self.faces:
            for hi in self.faces:
                if hi.dim != lo.dim + 2 or not lo <= hi:
                    continue
                middle = [g for g in self.faces if g.dim == lo.dim + 1 and lo <= g and g <= hi]
                if len(middle) != 2:
                    return False
        return True


def _facets(points, rays):
    """Supporting hyperplanes a.x <= b of facets, keyed by their tight generator sets

    Returns:
        tuple: (dimension, basis of the direction space, {(vertex set, ray set): (a, b)})
    """
    n = len(points[0])
    origin = points[0]
    directions = [_sub(p, origin) for p in points[1:]] + list(rays)
    basis = _row_basis(directions, n)
    d = len(basis)
    if d == 0:
        return 0, basis, {}

    generators = [("v", i) for i in range(len(points))] + [("r", j) for j in range(len(rays))]
    facets = {}
    for combo in combinations(generators, d):
        vertex_ids = [i for kind, i in combo if kind == "v"]
        if not vertex_ids:
            continue
        base = points[vertex_ids[0]]
        spans = [_sub(points[i], base) for i in vertex_ids[1:]]
        spans += [rays[j] for kind, j in combo if kind == "r"]
        if d == 1:
            weights = (QQ(1),)
        else:
            gram = [[_dot(u, b) for b in basis] for u in spans]
            kernel = _nullspace(gram, d)
            if len(kernel) != 1:
                continue
            weights = kernel[0]
        normal = tuple(sum((weights[k] * basis[k][c] for k in range(d)), QQ(0)) for c in range(n))
        rhs = _dot(normal, base)
        slack = [_dot(normal, p) - rhs for p in points]
        ray_slack = [_dot(normal, r) for r in rays]
        if all(s <= 0 for s in slack) and all(s <= 0 for s in ray_slack):
            pass
        elif all(s >= 0 for s in slack) and all(s >= 0 for s in ray_slack):
            normal = tuple(-x for x in normal)
            rhs = -rhs
        else:
            continue
        tight = (
            frozenset(i for i, s in enumerate(slack) if s == 0),
            frozenset(j for j, s in enumerate(ray_slack) if s == 0),
        )
        if tight not in facets:
            logger.debug(f"Facet through vertices {sorted(tight[0])} and rays {sorted(tight[1])}")
            facets[tight] = (normal, rhs)
    return d, basis, facets


def _face_dim(points, rays, face_vertices, face_rays):
    vs = sorted(face_vertices)
    first = points[vs[0]]
    directions = [_sub(points[i], first) for i in vs[1:]] + [rays[j] for j in sorted(face_rays)]
    return _rank(directions, len(first))


def face_lattice(polyhedron):
    """Complete lattice of nonempty faces, the polyhedron itself included

    Input points that are not vertices are dropped with a warning.
    """
    points = list(polyhedron.vertices)
    rays = list(polyhedron.rays)
    n = polyhedron.ambient_dim

    d, basis, facets = _facets(points, rays)
    whole = (frozenset(range(len(points))), frozenset(range(len(rays))))
    found = {whole}
    frontier = list(facets)
    found.update(frontier)
    while frontier:
        current = frontier.pop()
        for other in facets:
            meet = (current[0] & other[0], current[1] & other[1])
            if meet[0] and meet not in found:
                found.add(meet)
                frontier.append(meet)

    faces = [Face(vs, rs, _face_dim(points, rays, vs, rs)) for vs, rs in found]
    extreme = sorted(next(iter(f.vertices)) for f in faces if f.dim == 0 and not f.rays)
    if len(extreme) < len(points):
        dropped = [render_point(points[i]) for i in range(len(points)) if i not in extreme]
        logger.warning(f"Dropping {len(dropped)} input points that are not vertices: {dropped}")
        return face_lattice(Polyhedron(tuple(points[i] for i in extreme), tuple(rays)))

    faces.sort(key=Face.sort_key)
    covers = tuple(
        (i, j)
        for j, hi in enumerate(faces)
        for i, lo in enumerate(faces)
        if lo.dim == hi.dim - 1 and lo <= hi
    )
    equations = tuple((c, _dot(c, points[0])) for c in _nullspace(basis, n))
    lattice = FaceLattice(
        tuple(points), tuple(rays), tuple(faces), covers,
        tuple(facets.values()), equations,
    )
    logger.debug(f"Face lattice of dimension {d} with f-vector {lattice.f_vector}")
    return lattice


def bounded_faces(polyhedron):
    return face_lattice(polyhedron).bounded()


@dataclass(frozen=True)
class PolyhedralComplex:
    """Polytopes glued along common faces, faces keyed by global vertex indices"""

    points: tuple
    faces: tuple
    polytopes: tuple = field(default=(), repr=False)

    @property
    def dim(self):
        return max(f.dim for f in self.faces)

    @property
    def f_vector(self):
        return tuple(sum(1 for f in self.faces if f.dim == d) for d in range(self.dim + 1))


def _solve_unique(rows, rhs, n):
    """Unique solution of rows.x = rhs, or None"""
    augmented = [list(r) + [b] for r, b in zip(rows, rhs)]
    reduced, pivots = _domain_matrix(augmented, n + 1).rref()
    if n in pivots or tuple(pivots) != tuple(range(n)):
        return None
    values = reduced.to_list()
    return tuple(values[i][n] for i in range(n))


def _intersection_vertices(first, second, n):
    """Vertices of the intersection of two polytopes, from both H-representations"""
    equations = list(first.equations) + list(second.equations)
    inequalities = list(first.inequalities) + list(second.inequalities)
    eq_rank = _rank([c for c, _ in equations], n)
    found = set()
    for chosen in combinations(inequalities, n - eq_rank):
        rows = [c for c, _ in equations] + [a for a, _ in chosen]
        if _rank(rows, n) != n:
            continue
        point = _solve_unique(rows, [e for _, e in equations] + [b for _, b in chosen], n)
        if point is None:
            continue
        if all(_dot(c, point) == e for c, e in equations) and all(
            _dot(a, point) <= b for a, b in inequalities
        ):
            found.add(point)
    return found


def _vertex_sets(lattice):
    return {frozenset(lattice.points[i] for i in f.vertices) for f in lattice.faces}


def polyhedral_complex(polytopes):
    """Glue polytopes whose pairwise intersections are common faces

    Args:
        polytopes (list): bounded Polyhedron objects in a common ambient space

    Returns:
        PolyhedralComplex: shared faces identified by their vertex coordinates
    """
    polytopes = list(polytopes)
    if not polytopes:
        raise PolyhedralError("a polyhedral complex needs at least one polytope")
    if any(not p.is_bounded for p in polytopes):
        raise PolyhedralError("polyhedral complexes are built from bounded polytopes only")
    ambient = {p.ambient_dim for p in polytopes}
    if len(ambient) != 1:
        raise PolyhedralError(f"polytopes live in different dimensions {sorted(ambient)}")
    n = ambient.pop()

    lattices = [face_lattice(p) for p in polytopes]
    for (i, first), (j, second) in combinations(enumerate(lattices), 2):
        common = frozenset(first.points) & frozenset(second.points)
        if common and (common not in _vertex_sets(first) or common not in _vertex_sets(second)):
            raise PolyhedralError(f"polytopes {i} and {j} share vertices that do not form a common face")
        stray = _intersection_vertices(first, second, n) - common
        if stray:
            raise PolyhedralError(
                f"polytopes {i} and {j} intersect outside a common face, e.g. at {render_point(min(stray))}"
            )

    points = tuple(sorted({p for lattice in lattices for p in lattice.points}))
    index = {p: k for k, p in enumerate(points)}
    faces = {}
    for lattice in lattices:
        for f in lattice.faces:
            key = frozenset(index[lattice.points[i]] for i in f.vertices)
            faces[key] = Face(key, frozenset(), f.dim)
    ordered = tuple(sorted(faces.values(), key=Face.sort_key))
    logger.info(f"Polyhedral complex of {len(polytopes)} polytopes with {len(points)} vertices")
    return PolyhedralComplex(points, ordered, tuple(polytopes))


def _face_id(vertices):
    return "-".join(str(i + 1) for i in sorted(vertices))


def _complex_from_faces(ring, points, faces, labels):
    """Cell complex with one cell per face, orientations inferred bottom-up"""
    labels = labels or {}
    cells = {}
    for f in sorted(faces, key=Face.sort_key):
        key = _face_id(f.vertices)
        if f.dim == 0:
            point = points[next(iter(f.vertices))]
            if labels:
                if point not in labels:
                    raise PolyhedralError(f"no label for vertex ({render_point(point)})")
                label = labels[point]
            else:
                label = ring.one()
            cells[key] = new_cell((), label=label, cell_id=key)
        else:
            boundary = [
                cells[_face_id(g.vertices)]
                for g in faces
                if g.dim == f.dim - 1 and g.vertices <= f.vertices
            ]
            cells[key] = new_cell(sorted(boundary, key=cell_sort_key), cell_id=key)
    return build_complex(ring, list(cells.values()))


def cell_complex_from_polyhedron(ring, polyhedral, labels=None):
    """Cell complex of the bounded faces of a polyhedron or polyhedral complex

    Args:
        ring (RingDescriptor): ring for the labels
        polyhedral (Polyhedron or PolyhedralComplex): the geometry
        labels (dict, optional): vertex point -> Monomial; defaults to 1 everywhere

    Returns:
        CellComplex: labeled complex, higher labels the lcm of their vertex labels
    """
    if labels:
        labels = {to_point(k): v for k, v in labels.items()}
        for point, label in labels.items():
            if not isinstance(label, Monomial) or label.ring.variables != ring.variables:
                raise PolyhedralError(f"label for ({render_point(point)}) is not a monomial of the ring")
    if isinstance(polyhedral, PolyhedralComplex):
        return _complex_from_faces(ring, polyhedral.points, polyhedral.faces, labels)
    lattice = bounded_faces(polyhedral)
    return _complex_from_faces(ring, lattice.points, lattice.faces, labels)


def default_hull_parameter(nvars):
    """(n + 1)! + 1"""
    return math.factorial(nvars + 1) + 1


def _hull_polyhedron(ideal, t):
    n = ideal.ring.nvars
    points = {tuple(QQ(t ** e) for e in g.exponents): g for g in ideal.generators}
    rays = [tuple(QQ(1) if i == j else QQ(0) for j in range(n)) for i in range(n)]
    return Polyhedron(tuple(points), tuple(rays)), points


def _resolve_t(ideal, t):
    if t is None:
        t = default_hull_parameter(ideal.ring.nvars)
    t = int(t)
    if t < 2:
        raise PolyhedralError(f"hull parameter t must be at least 2, got {t}")
    return t


def hull_complex(ideal, t=None):
    """Hull complex: bounded faces of conv{t^a} + nonnegative orthant

    Args:
        ideal (MonomialIdeal): nonempty ideal
        t (int, optional): base of the exponential; defaults to (n + 1)! + 1

    Returns:
        CellComplex: vertices labeled by generators, faces by lcms
    """
    if len(ideal) == 0:
        raise PolyhedralError("the hull complex needs at least one generator")
    t = _resolve_t(ideal, t)
    polyhedron, labels = _hull_polyhedron(ideal, t)
    lattice = bounded_faces(polyhedron)
    complex_ = _complex_from_faces(ideal.ring, lattice.points, lattice.faces, labels)
    logger.info(f"Hull complex of {ideal} at t={t}: f-vector {complex_.f_vector}")
    return complex_


def hull_face_signature(ideal, t=None):
    """Bounded faces of the hull polyhedron as sets of generator positions"""
    t = _resolve_t(ideal, t)
    polyhedron, labels = _hull_polyhedron(ideal, t)
    lattice = bounded_faces(polyhedron)
    position = {g: k for k, g in enumerate(ideal.generators)}
    return frozenset(
        frozenset(position[labels[lattice.points[i]]] for i in f.vertices)
        for f in lattice.faces
    )
