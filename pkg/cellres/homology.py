# homology.py
"""Chain complexes supported on labeled cell complexes and their homology.

F(X) has one free summand per cell, twisted by the cell's label; the
differential sends a cell C to the sum of alpha(C, D) * (label C / label D) * D.
The reduced complex adds the ambient ring in homological degree -1, with
the augmentation sending each vertex v to label(v).
"""
import logging
from collections import defaultdict
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from sympy import GF, QQ
from sympy.polys.matrices import DomainMatrix

from cellres.complex_core import restrict
from cellres.config import get_settings
from cellres.exceptions import ParseError, RingMismatchError
from cellres.monomials import CoefficientField, divides, sort_key, sorted_lattice

logger = logging.getLogger(__name__)

AMBIENT = "ambient"
INTEGERS = "Z"


@dataclass(frozen=True)
class Differential:
    """Matrix of d_i : F_i -> F_{i-1}

    Entries are (row, column, integer coefficient, monomial quotient).
    """

    degree: int
    rows: tuple
    cols: tuple
    entries: tuple

    def integer_matrix(self, keep_rows=None, keep_cols=None):
        """Dense coefficient matrix, optionally restricted to some rows and columns"""
        row_index = [i for i, r in enumerate(self.rows) if keep_rows is None or r in keep_rows]
        col_index = [j for j, c in enumerate(self.cols) if keep_cols is None or c in keep_cols]
        rpos = {old: new for new, old in enumerate(row_index)}
        cpos = {old: new for new, old in enumerate(col_index)}
        matrix = [[0] * len(col_index) for _ in row_index]
        for r, c, coeff, _ in self.entries:
            if r in rpos and c in cpos:
                matrix[rpos[r]][cpos[c]] = coeff
        return matrix

    def to_dict(self):
        return {
            "degree": self.degree,
            "rows": list(self.rows),
            "cols": list(self.cols),
            "entries": [[r, c, coeff, m.render()] for r, c, coeff, m in self.entries],
        }


@dataclass(frozen=True)
class ChainComplexData:
    """Bases and differentials of F(X) in homological degrees lo..hi"""

    ring: object
    lo: int
    hi: int
    bases: dict
    labels: dict
    differentials: dict

    def degrees(self):
        return list(range(self.lo, self.hi + 1))

    def ranks(self):
        return [len(self.bases[i]) for i in self.degrees()]

    def differential(self, i):
        return self.differentials.get(i)

    def is_complex(self):
        """True when every composite d_i d_{i+1} is zero, monomials included"""
        for i in self.degrees():
            outer, inner = self.differentials.get(i), self.differentials.get(i + 1)
            if outer is None or inner is None:
                continue
            by_source = defaultdict(list)
            for k, c, coeff, m in inner.entries:
                by_source[k].append((c, coeff, m))
            totals = defaultdict(int)
            for r, k, coeff, m in outer.entries:
                for c, inner_coeff, inner_m in by_source[k]:
                    totals[(r, c, m * inner_m)] += coeff * inner_coeff
            if any(totals.values()):
                return False
        return True

    def strand(self, b):
        """Integer matrices of the degree-b strand: basis elements whose label divides b"""
        keep = {cell_id for cell_id, label in self.labels.items() if divides(label, b)}
        sizes = {i: sum(1 for c in self.bases[i] if c in keep) for i in self.degrees()}
        matrices = {
            i: d.integer_matrix(keep_rows=keep, keep_cols=keep)
            for i, d in self.differentials.items()
        }
        return sizes, matrices

    def strand_homology(self, b, coefficients=None):
        """Ranks of the homology of the degree-b strand over a field"""
        coefficients = coefficients or self.ring.field
        sizes, matrices = self.strand(b)
        return _field_homology(self.degrees(), sizes, matrices, coefficients)

    def to_dict(self):
        return {
            "degrees": self.degrees(),
            "ranks": self.ranks(),
            "bases": {str(i): list(self.bases[i]) for i in self.degrees()},
            "differentials": [self.differentials[i].to_dict() for i in sorted(self.differentials)],
        }

    def render(self):
        """Listing such as "S^1 <-- S^4 <-- S^6" over the degree row"""
        terms = [f"S^{r}" for r in self.ranks()]
        widths = [max(len(t), len(str(d))) for t, d in zip(terms, self.degrees())]
        top = " <-- ".join(t.ljust(w) for t, w in zip(terms, widths))
        bottom = "     ".join(str(d).ljust(w) for d, w in zip(self.degrees(), widths))
        return f"{top.rstrip()}\n{bottom.rstrip()}"


def chain_complex(complex_, reduced=True):
    """Chain complex F(X) supported on a labeled cell complex

    Args:
        complex_ (CellComplex): a valid complex
        reduced (bool): add the ambient module in degree -1

    Returns:
        ChainComplexData: bases in canonical cell order with symbolic differentials
    """
    lo = -1 if reduced else 0
    hi = max(complex_.dim, lo)
    bases = {d: tuple(c.id for c in complex_.cells_of_dim(d)) for d in range(max(lo, 0), hi + 1)}
    labels = {c.id: c.label for c in complex_}
    if reduced:
        bases[-1] = (AMBIENT,)
        labels[AMBIENT] = complex_.ring.one()
    if not reduced and complex_.dim < 0:
        hi = -1

    differentials = {}
    for i in range(lo + 1, hi + 1):
        rows, cols = bases[i - 1], bases[i]
        row_pos = {r: k for k, r in enumerate(rows)}
        entries = []
        for col, cell_id in enumerate(cols):
            cell = complex_.cell(cell_id)
            if i == 0:
                entries.append((0, col, 1, cell.label))
                continue
            for target, degree in cell.nonzero_boundary():
                entries.append((row_pos[target], col, degree, cell.label.quotient(labels[target])))
        entries.sort(key=lambda e: (e[0], e[1]))
        differentials[i] = Differential(i, rows, cols, tuple(entries))
    return ChainComplexData(complex_.ring, lo, hi, bases, labels, differentials)


def shift(chain, s):
    """Re-index homological degrees: degree i moves to i - s"""
    return ChainComplexData(
        chain.ring,
        chain.lo - s,
        chain.hi - s,
        {i - s: basis for i, basis in chain.bases.items()},
        chain.labels,
        {
            i - s: Differential(d.degree - s, d.rows, d.cols, d.entries)
            for i, d in chain.differentials.items()
        },
    )


def _coefficient_domain(coefficients):
    if coefficients.characteristic == 0:
        return QQ
    return GF(coefficients.characteristic)


def rank(matrix, coefficients=None):
    """Exact rank over QQ or GF(p)

    Args:
        matrix (list): rows of integers (or exact rationals over QQ)
        coefficients (CoefficientField, optional): defaults to QQ

    Returns:
        int: the rank
    """
    coefficients = coefficients or CoefficientField()
    if not matrix or not matrix[0]:
        return 0
    domain = _coefficient_domain(coefficients)
    rows = [[domain(e) for e in row] for row in matrix]
    return DomainMatrix(rows, (len(rows), len(rows[0])), domain).rank()


def smith_normal_form(matrix):
    """Nonzero invariant factors d_1 | d_2 | ... of an integer matrix

    Row and column reduction with the smallest nonzero absolute value as
    pivot; entries stay Python integers throughout.
    """
    a = [[int(e) for e in row] for row in matrix]
    nrows = len(a)
    ncols = len(a[0]) if nrows else 0
    factors = []
    t = 0
    while t < min(nrows, ncols):
        pivot = _smallest_entry(a, range(t, nrows), range(t, ncols))
        if pivot is None:
            break
        _move_to(a, pivot, t)
        while True:
            p = a[t][t]
            for i in range(t + 1, nrows):
                q = a[i][t] // p
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
            for j in range(t + 1, ncols):
                q = a[t][j] // p
                if q:
                    for row in a:
                        row[j] -= q * row[t]
            line = [(i, t) for i in range(t + 1, nrows) if a[i][t]] + [(t, j) for j in range(t + 1, ncols) if a[t][j]]
            if line:
                _move_to(a, min(line, key=lambda ij: abs(a[ij[0]][ij[1]])), t)
                continue
            # d_t must divide every remaining entry
            bad = next(
                (i for i in range(t + 1, nrows) for j in range(t + 1, ncols) if a[i][j] % p),
                None,
            )
            if bad is None:
                break
            a[t] = [x + y for x, y in zip(a[t], a[bad])]
        factors.append(abs(a[t][t]))
        t += 1
    return factors


def _smallest_entry(a, rows, cols):
    best = None
    for i in rows:
        for j in cols:
            if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                best = (i, j)
    return best


def _move_to(a, position, t):
    i, j = position
    a[t], a[i] = a[i], a[t]
    if j != t:
        for row in a:
            row[t], row[j] = row[j], row[t]


def _field_homology(degrees, sizes, matrices, coefficients):
    ranks = {i: rank(m, coefficients) for i, m in matrices.items()}
    return {
        i: sizes[i] - ranks.get(i, 0) - ranks.get(i + 1, 0)
        for i in degrees
    }


@dataclass(frozen=True)
class HomologySummary:
    """Homology per homological degree

    `ranks` holds field ranks (or free ranks over ZZ), `torsion` the
    invariant factors above 1 over ZZ, `graded` the nonzero ranks per
    multidegree, `cokernel` the generators shown for degree -1 in graded mode.
    """

    coefficients: str
    reduced: bool
    degrees: tuple
    ranks: dict
    torsion: dict = field(default_factory=dict)
    graded: dict = field(default_factory=dict)
    cokernel: tuple = None
    graded_mode: bool = False

    def rank(self, i):
        return self.ranks.get(i, 0)

    def _term(self, i):
        if self.graded_mode:
            if i == -1:
                return _render_cokernel(self.cokernel)
            r = self.ranks.get(i, 0)
            return f"S^{r}" if r else "0"
        parts = []
        r = self.ranks.get(i, 0)
        if r:
            parts.append(f"{self.coefficients}^{r}")
        parts.extend(f"ZZ/{t}" for t in self.torsion.get(i, ()))
        return " + ".join(parts) if parts else "0"

    def render_text(self):
        width = max(len(str(i)) for i in self.degrees) if self.degrees else 1
        return "\n".join(f"{str(i).rjust(width)} : {self._term(i)}" for i in self.degrees)

    def to_dict(self):
        result = {}
        for i in self.degrees:
            if self.graded_mode and i == -1:
                result[str(i)] = _render_cokernel(self.cokernel)
            elif self.graded_mode:
                result[str(i)] = {
                    "total": self.ranks.get(i, 0),
                    "multidegrees": {b.render(): r for b, r in self.graded.get(i, {}).items()},
                }
            elif self.coefficients == "ZZ":
                result[str(i)] = {"free": self.ranks.get(i, 0), "torsion": list(self.torsion.get(i, ()))}
            else:
                result[str(i)] = self.ranks.get(i, 0)
        return {"coefficients": self.coefficients, "reduced": self.reduced, "homology": result}


def _render_cokernel(generators):
    if generators is None or not generators:
        return "S^1"
    if any(g.is_one() for g in generators):
        return "0"
    return "cokernel | " + " ".join(g.render_compact() for g in generators) + " |"


def parse_coefficients(text, ring):
    """"Q", "Fp:<p>" or "Z"; None means the ring's own field"""
    if text is None:
        return ring.field
    if isinstance(text, CoefficientField):
        return text
    if text.strip() in (INTEGERS, "ZZ"):
        return INTEGERS
    try:
        return CoefficientField.parse(text)
    except ParseError:
        raise ParseError(f"unknown coefficients {text!r}; expected Q, Fp:<p> or Z") from None


def coefficient_homology(complex_, coefficients=None, reduced=True):
    """Cellular homology of the underlying complex, labels ignored

    Args:
        complex_ (CellComplex): valid complex
        coefficients: "Q", "Fp:<p>", "Z", a CoefficientField, or None for the ring's field
        reduced (bool): use the augmented complex

    Returns:
        HomologySummary: ranks per degree (free rank and torsion over ZZ)
    """
    coefficients = parse_coefficients(coefficients, complex_.ring)
    chain = chain_complex(complex_, reduced=reduced)
    degrees = chain.degrees()
    sizes = {i: len(chain.bases[i]) for i in degrees}
    matrices = {i: d.integer_matrix() for i, d in chain.differentials.items()}

    if coefficients == INTEGERS:
        factors = {i: smith_normal_form(m) for i, m in matrices.items()}
        ranks = {
            i: sizes[i] - len(factors.get(i, ())) - len(factors.get(i + 1, ()))
            for i in degrees
        }
        torsion = {
            i: tuple(f for f in factors.get(i + 1, ()) if f > 1)
            for i in degrees
            if any(f > 1 for f in factors.get(i + 1, ()))
        }
        return HomologySummary("ZZ", reduced, tuple(degrees), ranks, torsion)

    ranks = _field_homology(degrees, sizes, matrices, coefficients)
    return HomologySummary(coefficients.short_name(), reduced, tuple(degrees), ranks)


def reduced_ranks(complex_, coefficients=None):
    """Reduced homology ranks over a field, keyed by degree from -1"""
    coefficients = coefficients or complex_.ring.field
    return coefficient_homology(complex_, coefficients, reduced=True).ranks


def _ranks_at(complex_, b, coefficients):
    return b, reduced_ranks(restrict(complex_, b), coefficients)


def lattice_degrees(complex_):
    """lcm lattice of every cell label, in canonical order"""
    labels = complex_.labels()
    return sorted_lattice(labels) if labels else []


def ranks_by_multidegree(complex_, degrees=None, coefficients=None, workers=None):
    """Reduced homology ranks of each restriction X_{<= b}

    Returns:
        list: (b, {degree: rank}) pairs in canonical order of b
    """
    coefficients = coefficients or complex_.ring.field
    degrees = lattice_degrees(complex_) if degrees is None else sorted(degrees, key=sort_key)
    for b in degrees:
        if b.ring.variables != complex_.ring.variables:
            raise RingMismatchError(f"multidegree {b} is not over the ring of the complex")
    workers = workers or get_settings().workers
    logger.info(f"Computing homology at {len(degrees)} multidegrees with {workers} workers")
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda b: _ranks_at(complex_, b, coefficients), degrees))
    else:
        results = [_ranks_at(complex_, b, coefficients) for b in degrees]
    for b, ranks in results:
        logger.debug(f"Multidegree {b}: {ranks}")
    return results


def graded_homology(complex_, degrees=None, workers=None, coefficients=None):
    """Multigraded homology of F(X) through the restrictions X_{<= b}

    Args:
        complex_ (CellComplex): labeled complex
        degrees (list, optional): multidegrees; defaults to the lcm lattice of all labels
        workers (int, optional): thread count; defaults to CELLRES_WORKERS
        coefficients (CoefficientField, optional): defaults to the ring's field

    Returns:
        HomologySummary: per degree >= 0 the nonzero ranks per multidegree
    """
    coefficients = coefficients or complex_.ring.field
    results = ranks_by_multidegree(complex_, degrees, coefficients, workers=workers)
    top = max(complex_.dim, 0)
    graded = {i: {} for i in range(0, top + 1)}
    for b, ranks in results:
        for i in range(0, top + 1):
            if ranks.get(i, 0):
                graded[i][b] = ranks[i]
    totals = {i: sum(graded[i].values()) for i in graded}
    cokernel = tuple(sorted((v.label for v in complex_.vertices), key=sort_key))
    return HomologySummary(
        coefficients.short_name(),
        True,
        tuple(range(-1, top + 1)),
        totals,
        graded=graded,
        cokernel=cokernel,
        graded_mode=True,
    )
