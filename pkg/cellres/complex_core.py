# complex_core.py
"""Combinatorial cell complexes labeled by monomials.

A cell records only its attaching degrees to cells one dimension lower;
no topological attaching data is kept. A complex is valid when

* the attaching degrees compose to zero (the boundary squares to zero),
* every 1-cell has either 0 or 2 nonzero attaching degrees, each ±1,
* the label of every face with a nonzero degree divides the cell's label.
"""
import logging
import re
from collections import defaultdict, deque
from dataclasses import dataclass, field

import networkx as nx

from cellres.exceptions import (
    CellConstructionError,
    ComplexValidationError,
    OrientationError,
    RingMismatchError,
)
from cellres.monomials import Monomial, divides, lcm_all

logger = logging.getLogger(__name__)


def _natural_key(cell_id):
    return tuple(
        (0, int(chunk), "") if chunk.isdigit() else (1, 0, chunk)
        for chunk in re.split(r"(\d+)", cell_id)
        if chunk
    )


def cell_sort_key(cell):
    """Canonical cell order: dimension, then id"""
    return (cell.dim, _natural_key(cell.id))


@dataclass(frozen=True)
class Cell:
    """A cell with its attaching degrees

    Attributes:
        id (str): unique identifier inside a complex
        dim (int): dimension
        boundary (tuple): (target id, attaching degree) pairs, targets one dimension lower
        label (Monomial or None): monomial label; None stands for the unit monomial
        faces (tuple): the boundary Cell objects, used to close a complex over its boundaries
    """

    id: str
    dim: int
    boundary: tuple = ()
    label: Monomial = None
    faces: tuple = field(default=(), compare=False, repr=False)

    def degree_of(self, target_id):
        for target, degree in self.boundary:
            if target == target_id:
                return degree
        return 0

    def nonzero_boundary(self):
        return tuple((t, d) for t, d in self.boundary if d != 0)


@dataclass(frozen=True)
class Violation:
    """One failed rule, naming the cells involved"""

    rule: str
    cells: tuple
    message: str

    def __str__(self):
        return f"{self.rule}: {self.message}"


def new_cell(boundary=(), label=None, cell_id=None, dim=None):
    """Create a cell from its boundary cells and an optional label

    Args:
        boundary (list): boundary Cells, or (Cell, degree) pairs
        label (Monomial, optional): defaults to the lcm of the boundary labels
        cell_id (str, optional): identifier; derived from the boundary ids
            (or the label of a boundary-free cell) when omitted
        dim (int, optional): dimension of a cell with empty boundary (default 0)

    Returns:
        Cell: the new cell
    """
    entries = list(boundary)
    explicit = [isinstance(e, tuple) for e in entries]
    if any(explicit) and not all(explicit):
        raise CellConstructionError("boundary must be all cells or all (cell, degree) pairs")
    if entries and all(explicit):
        faces = [c for c, _ in entries]
        degrees = [int(d) for _, d in entries]
    else:
        faces = entries
        degrees = None

    face_dims = {c.dim for c in faces}
    if len(face_dims) > 1:
        raise CellConstructionError(f"boundary cells have mixed dimensions {sorted(face_dims)}")
    if faces:
        cell_dim = face_dims.pop() + 1
        if dim is not None and dim != cell_dim:
            raise CellConstructionError(f"dimension {dim} does not match boundary of dimension {cell_dim - 1}")
    else:
        cell_dim = 0 if dim is None else int(dim)
        if cell_dim < 0:
            raise CellConstructionError(f"negative dimension {cell_dim}")

    face_ids = [c.id for c in faces]
    if len(set(face_ids)) != len(face_ids):
        raise CellConstructionError(f"repeated boundary cells {face_ids}")

    if degrees is None:
        degrees = infer_degrees(faces)

    boundary_labels = [c.label for c in faces if c.label is not None]
    if label is None:
        label = lcm_all(boundary_labels) if boundary_labels else None
    else:
        for c in faces:
            if c.label is not None and not divides(c.label, label):
                raise CellConstructionError(
                    f"label {label} is not divisible by the boundary label {c.label} of {c.id}"
                )

    if cell_id is None:
        cell_id = _default_id(face_ids, label, cell_dim)
    return Cell(
        id=str(cell_id),
        dim=cell_dim,
        boundary=tuple(zip(face_ids, degrees)),
        label=label,
        faces=tuple(faces),
    )


def _default_id(face_ids, label, dim):
    if face_ids:
        return "<" + " ".join(face_ids) + ">"
    name = label.render() if label is not None else "1"
    return f"<{name}>" if dim == 0 else f"<{name}:{dim}>"


def infer_degrees(faces):
    """Orient a boundary so that the boundary of the boundary vanishes

    A 1-cell over two vertices gets (+1, -1) and a loop gets 0. Above
    dimension 1 the signs follow the diamond rule: a codimension-2 face
    shared by exactly two boundary faces forces their signs to cancel.
    Signs spread by breadth-first search from a +1 seed per component.
    """
    if not faces:
        return []
    if faces[0].dim == 0:
        if len(faces) == 2:
            return [1, -1]
        if len(faces) == 1:
            return [0]
        raise OrientationError(f"a 1-cell needs one or two vertices, got {len(faces)}")

    incidences = defaultdict(list)
    for i, face in enumerate(faces):
        for target, degree in face.nonzero_boundary():
            incidences[target].append((i, degree))

    neighbours = defaultdict(list)
    for target, entries in incidences.items():
        if len(entries) != 2:
            continue
        (i, a), (j, b) = entries
        if abs(a) != abs(b):
            raise OrientationError(
                f"faces {faces[i].id} and {faces[j].id} meet {target} with degrees {a} and {b}"
            )
        # s_i * a + s_j * b = 0
        ratio = -1 if a == b else 1
        neighbours[i].append((j, ratio))
        neighbours[j].append((i, ratio))

    signs = [0] * len(faces)
    for start in range(len(faces)):
        if signs[start]:
            continue
        signs[start] = 1
        queue = deque([start])
        while queue:
            i = queue.popleft()
            for j, ratio in neighbours[i]:
                wanted = signs[i] * ratio
                if signs[j] == 0:
                    signs[j] = wanted
                    queue.append(j)
                elif signs[j] != wanted:
                    raise OrientationError(
                        f"inconsistent orientation between {faces[i].id} and {faces[j].id}"
                    )

    for target, entries in incidences.items():
        total = sum(signs[i] * degree for i, degree in entries)
        if total != 0:
            raise OrientationError(f"no orientation cancels the boundary at {target}")
    return signs


class CellComplex:
    """Immutable collection of cells over a ring, indexed by dimension"""

    def __init__(self, ring, cells):
        self.ring = ring
        ordered = sorted(cells, key=cell_sort_key)
        self._cells = {c.id: c for c in ordered}
        if len(self._cells) != len(ordered):
            raise CellConstructionError("duplicate cell ids")
        by_dim = defaultdict(list)
        for c in ordered:
            by_dim[c.dim].append(c)
        self._by_dim = {d: tuple(cs) for d, cs in by_dim.items()}
        self._ordered = tuple(ordered)

    @classmethod
    def from_records(cls, ring, cells, check=True):
        """Build a complex from cells whose boundaries are given by id

        Args:
            ring (RingDescriptor): ring of the labels
            cells (list): Cells; unlabeled cells get the unit label
            check (bool): raise ComplexValidationError on violations

        Returns:
            CellComplex: the complex
        """
        resolved = [_resolve_label(ring, c) for c in cells]
        complex_ = cls(ring, resolved)
        if check:
            _raise_on_violations(complex_)
        return complex_

    def __len__(self):
        return len(self._ordered)

    def __iter__(self):
        return iter(self._ordered)

    def __contains__(self, cell_id):
        return cell_id in self._cells

    def __repr__(self):
        return f"CellComplex(f_vector={self.f_vector}, variables={list(self.ring.variables)})"

    def cell(self, cell_id):
        try:
            return self._cells[cell_id]
        except KeyError:
            raise CellConstructionError(f"no cell with id {cell_id!r}") from None

    def cells_of_dim(self, d):
        return list(self._by_dim.get(d, ()))

    @property
    def ordered_cells(self):
        return self._ordered

    @property
    def dim(self):
        """Top dimension; -1 for the void complex"""
        return max(self._by_dim) if self._by_dim else -1

    @property
    def f_vector(self):
        return tuple(len(self._by_dim.get(d, ())) for d in range(self.dim + 1))

    @property
    def vertices(self):
        return self.cells_of_dim(0)

    def labels(self):
        return [c.label for c in self._ordered]


def _resolve_label(ring, cell):
    label = cell.label
    if label is None:
        label = ring.one()
    elif label.ring.variables != ring.variables:
        raise RingMismatchError(f"cell {cell.id} is labeled over {list(label.ring.variables)}")
    elif label.ring != ring:
        label = Monomial(ring, label.exponents)
    return Cell(cell.id, cell.dim, cell.boundary, label)


def _raise_on_violations(complex_):
    violations = validate(complex_)
    if violations:
        logger.error(f"Cell complex failed validation with {len(violations)} violations")
        raise ComplexValidationError(violations)


def build_complex(ring, maximal_cells, check=True):
    """Close a list of cells over their boundaries and validate

    Args:
        ring (RingDescriptor): ring for the labels
        maximal_cells (list): cells whose boundaries are followed transitively
        check (bool): validate the result

    Returns:
        CellComplex: the complex containing every reachable cell once
    """
    found = {}
    stack = list(maximal_cells)
    while stack:
        cell = stack.pop()
        seen = found.get(cell.id)
        if seen is not None:
            if seen != cell:
                raise CellConstructionError(f"conflicting cells share the id {cell.id!r}")
            continue
        found[cell.id] = cell
        stack.extend(cell.faces)

    complex_ = CellComplex.from_records(ring, found.values(), check=check)
    logger.info(f"Built cell complex with f-vector {complex_.f_vector}")
    return complex_


def validate(complex_):
    """Check every rule and report violations instead of raising

    Returns:
        list: Violation objects; empty when the complex is valid
    """
    violations = []
    cells = {c.id: c for c in complex_}

    for c in complex_:
        if c.dim < 0:
            violations.append(Violation("structure", (c.id,), f"cell {c.id} has negative dimension"))
        if c.dim == 0 and c.boundary:
            violations.append(Violation("structure", (c.id,), f"0-cell {c.id} has a boundary"))
        targets = [t for t, _ in c.boundary]
        if len(set(targets)) != len(targets):
            violations.append(Violation("structure", (c.id,), f"cell {c.id} repeats a boundary target"))
        for target, degree in c.boundary:
            face = cells.get(target)
            if face is None:
                violations.append(
                    Violation("structure", (c.id, target), f"cell {c.id} refers to unknown cell {target}")
                )
            elif face.dim != c.dim - 1:
                violations.append(
                    Violation(
                        "structure", (c.id, target),
                        f"cell {c.id} of dimension {c.dim} attaches to {target} of dimension {face.dim}",
                    )
                )
            elif degree != 0 and not divides(face.label, c.label):
                violations.append(
                    Violation(
                        "divisibility", (c.id, target),
                        f"label {face.label} of {target} does not divide label {c.label} of {c.id}",
                    )
                )

    for c in complex_.cells_of_dim(1):
        nonzero = c.nonzero_boundary()
        if len(nonzero) not in (0, 2) or any(abs(d) != 1 for _, d in nonzero):
            violations.append(
                Violation(
                    "one-cell", (c.id,),
                    f"1-cell {c.id} has nonzero degrees {[d for _, d in nonzero]}; need none or two of ±1",
                )
            )

    for a in complex_:
        if a.dim < 2:
            continue
        totals = defaultdict(int)
        for b_id, ab in a.nonzero_boundary():
            b = cells.get(b_id)
            if b is None:
                continue
            for c_id, bc in b.nonzero_boundary():
                totals[c_id] += ab * bc
        for c_id, total in sorted(totals.items()):
            if total != 0:
                violations.append(
                    Violation(
                        "d-squared", (a.id, c_id),
                        f"attaching degrees from {a.id} to {c_id} sum to {total}",
                    )
                )
    return violations


def cells(complex_, d=None):
    """Cells by dimension, or the cells of one dimension

    Returns:
        dict or list: {dim: [cells]} when d is None, otherwise a list
    """
    if d is not None:
        return complex_.cells_of_dim(d)
    return {dim: complex_.cells_of_dim(dim) for dim in sorted({c.dim for c in complex_})}


def restrict(complex_, b):
    """Subcomplex of the cells whose label divides b

    Recorded boundary entries into dropped cells are removed; by the
    divisibility rule those entries all have degree 0.
    """
    if b.ring.variables != complex_.ring.variables:
        raise RingMismatchError(f"multidegree {b} is not over the ring of the complex")
    kept = {c.id for c in complex_ if divides(c.label, b)}
    restricted = [
        Cell(c.id, c.dim, tuple((t, d) for t, d in c.boundary if t in kept), c.label)
        for c in complex_
        if c.id in kept
    ]
    return CellComplex(complex_.ring, restricted)


@dataclass(frozen=True)
class FacePoset:
    """Cells ordered by iterated boundary containment"""

    cell_ids: tuple
    matrix: tuple
    graph: object = field(compare=False, repr=False, default=None)

    def leq(self, a, b):
        return self.matrix[self.cell_ids.index(a)][self.cell_ids.index(b)] == 1

    def render(self):
        rows = ["| " + " ".join(str(x) for x in row) + " |" for row in self.matrix]
        return "\n".join(rows)


def face_poset(complex_):
    """Relation matrix of the face poset

    Entry [i][j] is 1 when cell i lies below cell j in the reflexive and
    transitive closure of "is a recorded boundary entry of".
    """
    ids = tuple(c.id for c in complex_)
    graph = nx.DiGraph()
    graph.add_nodes_from(ids)
    for c in complex_:
        for target, _ in c.boundary:
            if target in complex_:
                graph.add_edge(target, c.id)
    closure = nx.transitive_closure(graph, reflexive=True)
    matrix = tuple(
        tuple(1 if closure.has_edge(a, b) else 0 for b in ids)
        for a in ids
    )
    return FacePoset(ids, matrix, closure)


def relabel(complex_, vertex_labels):
    """Replace the vertex labels and recompute every higher label as an lcm

    Args:
        complex_ (CellComplex): complex to relabel
        vertex_labels (dict): 0-cell id -> Monomial

    Returns:
        CellComplex: validated relabeled complex
    """
    vertex_ids = {c.id for c in complex_.vertices}
    missing = sorted(vertex_ids - set(vertex_labels), key=_natural_key)
    if missing:
        raise CellConstructionError(f"no new label for vertices {missing}")
    unknown = sorted(set(vertex_labels) - vertex_ids)
    if unknown:
        raise CellConstructionError(f"labels given for non-vertices {unknown}")

    ring = complex_.ring
    labels = {}
    relabeled = []
    for c in complex_:
        if c.dim == 0:
            label = vertex_labels[c.id]
            if label.ring.variables != ring.variables:
                raise RingMismatchError(f"label {label} for {c.id} is over a different ring")
        else:
            label = lcm_all((labels[t] for t, _ in c.boundary if t in labels), ring)
        labels[c.id] = label
        relabeled.append(Cell(c.id, c.dim, c.boundary, label))
    return CellComplex.from_records(ring, relabeled)


def skeleton(complex_, k):
    """Subcomplex of the cells of dimension at most k"""
    return CellComplex(complex_.ring, [c for c in complex_ if c.dim <= k])


def max_cells(complex_):
    """Cells that are no recorded boundary entry of another cell"""
    covered = {t for c in complex_ for t, _ in c.boundary}
    return [c for c in complex_ if c.id not in covered]


def boundary_cells(complex_, cell_id):
    return [complex_.cell(t) for t, _ in complex_.cell(cell_id).boundary]


def cell_label(complex_, cell_id):
    return complex_.cell(cell_id).label
