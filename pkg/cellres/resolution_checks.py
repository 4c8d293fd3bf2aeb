# resolution_checks.py
"""Resolution and minimality tests for labeled complexes, and Betti tables.

F(X) resolves S/I exactly when every restriction X_{<= b} is acyclic over
the coefficient field. It suffices to test b in the lcm lattice of the
cell labels, since restricting to any other b gives the same subcomplex as
the lcm of the labels that divide it.
"""
import logging
from collections import Counter
from dataclasses import dataclass, field

from cellres.exceptions import NotAResolutionError, NotMinimalError, ResolutionError
from cellres.homology import ranks_by_multidegree
from cellres.monomials import sort_key

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Witness:
    """Multidegree b with nonzero reduced homology of X_{<= b} in degree i"""

    multidegree: object
    degree: int
    rank: int

    def to_dict(self):
        return {"multidegree": self.multidegree.render(), "degree": self.degree, "rank": self.rank}

    def __str__(self):
        return f"H_{self.degree} has rank {self.rank} at multidegree {self.multidegree}"


@dataclass(frozen=True)
class ResolutionReport:
    is_resolution: bool
    witness: Witness
    is_minimal: bool

    def to_dict(self):
        return {
            "isResolution": self.is_resolution,
            "witness": self.witness.to_dict() if self.witness else None,
            "isMinimal": self.is_minimal,
        }


def find_witness(complex_, workers=None):
    """First multidegree, in canonical order, where X_{<= b} fails to be acyclic

    Returns:
        Witness or None: None when F(X) is a resolution
    """
    if not complex_.vertices:
        raise ResolutionError("a complex without vertices supports no resolution")
    for b, ranks in ranks_by_multidegree(complex_, workers=workers):
        for i in sorted(d for d in ranks if d >= 0):
            if ranks[i]:
                return Witness(b, i, ranks[i])
    return None


def is_resolution(complex_, workers=None):
    """Return (True, None) or (False, witness)"""
    witness = find_witness(complex_, workers=workers)
    if witness is not None:
        logger.info(f"Not a resolution: {witness}")
    return witness is None, witness


def non_minimal_incidence(complex_):
    """First (cell, face) pair with a nonzero degree and equal labels, or None"""
    for c in complex_:
        for target, _ in c.nonzero_boundary():
            if complex_.cell(target).label == c.label:
                return c, complex_.cell(target)
    return None


def is_minimal(complex_):
    """True iff no nonzero incidence joins two cells with the same label"""
    return non_minimal_incidence(complex_) is None


def check(complex_, workers=None):
    resolution, witness = is_resolution(complex_, workers=workers)
    return ResolutionReport(resolution, witness, is_minimal(complex_))


@dataclass(frozen=True)
class BettiTable:
    """Betti numbers keyed by (homological degree, multidegree)

    In the shifted table the ambient module sits in degree 0 with
    multidegree 1 and the cells of dimension i sit in degree i + 1.
    """

    ring: object
    entries: dict
    shifted: bool = True
    degrees: tuple = field(default=())

    def totals(self):
        sums = Counter()
        for (i, _), n in self.entries.items():
            sums[i] += n
        return tuple(sums[i] for i in self.degrees)

    def at(self, i, b):
        return self.entries.get((i, b), 0)

    def by_degree(self, i):
        """Multidegree counts in degree i, canonically ordered"""
        found = [(b, n) for (j, b), n in self.entries.items() if j == i]
        return sorted(found, key=lambda bn: sort_key(bn[0]))

    def graded(self):
        """Counts keyed by (i, total degree - i), the usual Betti diagram"""
        table = Counter()
        for (i, b), n in self.entries.items():
            table[(i, b.degree - i)] += n
        return dict(table)

    def euler_characteristic(self):
        return euler_characteristic(self.totals())

    def render_text(self):
        """One row per homological degree: total, then multidegree counts"""
        width = max(len(str(i)) for i in self.degrees)
        total_width = max(len(str(t)) for t in self.totals())
        rows = []
        for i, total in zip(self.degrees, self.totals()):
            parts = [f"{b.render_compact()}" + (f":{n}" if n > 1 else "") for b, n in self.by_degree(i)]
            rows.append(f"{str(i).rjust(width)} : {str(total).rjust(total_width)} | {' '.join(parts)}")
        return "\n".join(rows)

    def render_diagram(self):
        """Betti diagram with rows j = total degree - i and "." for zero"""
        graded = self.graded()
        rows_j = sorted({j for _, j in graded})
        cells = [[str(graded.get((i, j), ".")) for i in self.degrees] for j in rows_j]
        header = [str(i) for i in self.degrees]
        totals = [str(t) for t in self.totals()]
        widths = [
            max(len(h), len(t), *(len(row[k]) for row in cells))
            for k, (h, t) in enumerate(zip(header, totals))
        ]
        label_width = max([len("total:")] + [len(f"{j}:") for j in rows_j])

        def line(label, values):
            return label.rjust(label_width) + " " + " ".join(v.rjust(w) for v, w in zip(values, widths))

        lines = [line("", header), line("total:", totals)]
        lines.extend(line(f"{j}:", row) for j, row in zip(rows_j, cells))
        return "\n".join(l.rstrip() for l in lines)

    def to_dict(self):
        return {
            "shifted": self.shifted,
            "degrees": list(self.degrees),
            "totals": list(self.totals()),
            "entries": [
                {"degree": i, "multidegree": b.render(), "count": n}
                for i in self.degrees
                for b, n in self.by_degree(i)
            ],
        }


def euler_characteristic(totals):
    """Alternating sum of the Betti totals"""
    return sum((-1) ** i * n for i, n in enumerate(totals))


def betti_table(complex_, shifted=True, workers=None):
    """Betti numbers of the minimal resolution supported on a complex

    Args:
        complex_ (CellComplex): labeled complex
        shifted (bool): index as a resolution of S/I (ambient module in degree 0)
        workers (int, optional): thread count for the acyclicity check

    Returns:
        BettiTable: counts of cells per dimension and label

    Raises:
        NotAResolutionError: some restriction has homology
        NotMinimalError: a nonzero incidence joins equal labels
    """
    resolution, witness = is_resolution(complex_, workers=workers)
    if not resolution:
        logger.error(f"Betti table requested for a non-resolution: {witness}")
        raise NotAResolutionError(witness)
    offending = non_minimal_incidence(complex_)
    if offending is not None:
        c, face = offending
        logger.error(f"Betti table requested for a non-minimal complex at {c.id}")
        raise NotMinimalError(c.id, face.id, c.label)

    offset = 1 if shifted else 0
    entries = Counter((c.dim + offset, c.label) for c in complex_)
    if shifted:
        entries[(0, complex_.ring.one())] = 1
    degrees = tuple(range(0, complex_.dim + offset + 1))
    return BettiTable(complex_.ring, dict(entries), shifted, degrees)
