# monomials.py
"""Exact monomial arithmetic over a fine-graded polynomial ring.

Monomials are exponent vectors over a named, ordered variable list. They
double as multidegrees. Every value here is immutable.
"""
import logging
import re
from dataclasses import dataclass, field
from itertools import combinations

from sympy import isprime

from cellres.exceptions import EmptyIdealError, ParseError, RingMismatchError

logger = logging.getLogger(__name__)

_VARIABLE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_FACTOR = re.compile(r"\s*([A-Za-z_][A-Za-z0-9_]*)\s*(?:\^\s*([1-9]\d*|-\d+))?\s*")


@dataclass(frozen=True)
class CoefficientField:
    """Coefficient field: the rationals (characteristic 0) or GF(p)"""

    characteristic: int = 0

    def __post_init__(self):
        if self.characteristic != 0 and not isprime(self.characteristic):
            raise ParseError(f"field characteristic {self.characteristic} is not prime")

    @classmethod
    def parse(cls, text):
        """Parse "Q" or "Fp:<p>"

        Args:
            text (str): field name

        Returns:
            CoefficientField: the parsed field
        """
        text = (text or "").strip()
        if text in ("Q", "QQ"):
            return cls(0)
        if text.startswith("Fp:"):
            try:
                p = int(text[3:])
            except ValueError:
                raise ParseError(f"bad prime in field {text!r}") from None
            return cls(p)
        raise ParseError(f"unknown field {text!r}; expected 'Q' or 'Fp:<p>'")

    @property
    def is_rational(self):
        return self.characteristic == 0

    def render(self):
        return "Q" if self.characteristic == 0 else f"Fp:{self.characteristic}"

    def short_name(self):
        """Name used in homology listings (QQ, ZZ/2, ...)"""
        return "QQ" if self.characteristic == 0 else f"ZZ/{self.characteristic}"

    def __str__(self):
        return self.render()


@dataclass(frozen=True)
class RingDescriptor:
    """Polynomial ring k[x_1..x_n] with named variables"""

    variables: tuple
    field: CoefficientField = field(default_factory=CoefficientField)

    def __post_init__(self):
        variables = tuple(self.variables)
        object.__setattr__(self, "variables", variables)
        if not variables:
            raise ParseError("a ring needs at least one variable")
        for name in variables:
            if not isinstance(name, str) or not _VARIABLE.fullmatch(name):
                raise ParseError(f"invalid variable name {name!r}")
        if len(set(variables)) != len(variables):
            raise ParseError(f"duplicate variable names in {list(variables)}")

    @property
    def nvars(self):
        return len(self.variables)

    def one(self):
        return Monomial(self, (0,) * self.nvars)

    def variable(self, name):
        """Return the monomial of a single variable"""
        exps = [0] * self.nvars
        exps[self.variables.index(name)] = 1
        return Monomial(self, tuple(exps))

    def with_field(self, coefficient_field):
        return RingDescriptor(self.variables, coefficient_field)

    def monomial(self, text):
        return parse_monomial(text, self)


@dataclass(frozen=True)
class Monomial:
    """A monomial x^a, stored as its exponent vector a"""

    ring: RingDescriptor
    exponents: tuple

    def __post_init__(self):
        exps = tuple(int(e) for e in self.exponents)
        object.__setattr__(self, "exponents", exps)
        if len(exps) != self.ring.nvars:
            raise RingMismatchError(
                f"exponent vector of length {len(exps)} over a ring with {self.ring.nvars} variables"
            )
        if any(e < 0 for e in exps):
            raise ParseError(f"negative exponent in {list(exps)}")

    def _check(self, other):
        if not isinstance(other, Monomial) or other.ring.variables != self.ring.variables:
            raise RingMismatchError(f"cannot combine {self} with {other}: different rings")

    def __mul__(self, other):
        self._check(other)
        return Monomial(self.ring, tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def lcm(self, other):
        return lcm(self, other)

    def divides(self, other):
        return divides(self, other)

    def quotient(self, other):
        """Return self / other; other must divide self"""
        self._check(other)
        if not divides(other, self):
            raise RingMismatchError(f"{other} does not divide {self}")
        return Monomial(self.ring, tuple(a - b for a, b in zip(self.exponents, other.exponents)))

    @property
    def degree(self):
        return sum(self.exponents)

    def is_one(self):
        return not any(self.exponents)

    def sort_key(self):
        return sort_key(self)

    def render(self):
        """Render as "x^2*y" ("1" for the unit)"""
        factors = []
        for name, e in zip(self.ring.variables, self.exponents):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        return "*".join(factors) if factors else "1"

    def render_compact(self):
        """Render as "x2y", the form used inside cokernel listings"""
        parts = []
        for name, e in zip(self.ring.variables, self.exponents):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}{e}")
        return "".join(parts) if parts else "1"

    def __str__(self):
        return self.render()


def sort_key(m):
    """Canonical total order: total degree, then exponent vector"""
    return (sum(m.exponents), m.exponents)


def lcm(a, b):
    """Least common multiple: componentwise max of exponents"""
    a._check(b)
    return Monomial(a.ring, tuple(max(x, y) for x, y in zip(a.exponents, b.exponents)))


def lcm_all(monomials, ring=None):
    """lcm of a collection; the unit monomial of `ring` when empty"""
    result = None
    for m in monomials:
        result = m if result is None else lcm(result, m)
    if result is None:
        if ring is None:
            raise EmptyIdealError("lcm of an empty collection needs a ring")
        return ring.one()
    return result


def divides(a, b):
    """True iff every exponent of a is at most the matching exponent of b"""
    a._check(b)
    return all(x <= y for x, y in zip(a.exponents, b.exponents))


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal given by its minimal generators in canonical order"""

    ring: RingDescriptor
    generators: tuple

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def contains(self, m):
        return any(divides(g, m) for g in self.generators)

    def render(self):
        return ", ".join(g.render() for g in self.generators)

    def __str__(self):
        return f"<{self.render()}>"


def minimalize(gens):
    """Keep the divisibility-minimal generators, canonically sorted

    Args:
        gens (list): monomials over a common ring

    Returns:
        MonomialIdeal: ideal with its minimal generating set
    """
    gens = list(gens)
    if not gens:
        raise EmptyIdealError("a monomial ideal needs at least one generator")
    ring = gens[0].ring
    for g in gens[1:]:
        if g.ring.variables != ring.variables:
            raise RingMismatchError(f"generator {g} lives over a different ring")

    unique = sorted(set(gens), key=sort_key)
    minimal = [
        g for g in unique
        if not any(h != g and divides(h, g) for h in unique)
    ]
    return MonomialIdeal(ring, tuple(minimal))


def lcm_lattice(monomials):
    """Close a set of monomials under pairwise lcm

    Saturation by pairwise joins; reaches the closure in at most
    len(monomials) rounds.

    Returns:
        frozenset: every lcm of a nonempty subset of the inputs
    """
    current = set(monomials)
    if not current:
        raise EmptyIdealError("the lcm lattice of an empty set is undefined")
    frontier = set(current)
    while frontier:
        joins = {lcm(a, b) for a in frontier for b in current}
        frontier = joins - current
        current |= frontier
    return frozenset(current)


def sorted_lattice(monomials):
    """lcm lattice as a list in canonical order"""
    return sorted(lcm_lattice(monomials), key=sort_key)


def subset_lcms(monomials):
    """Map each nonempty index subset (as a sorted tuple) to its lcm"""
    monomials = list(monomials)
    result = {}
    for size in range(1, len(monomials) + 1):
        for subset in combinations(range(len(monomials)), size):
            if size == 1:
                result[subset] = monomials[subset[0]]
            else:
                result[subset] = lcm(result[subset[:-1]], monomials[subset[-1]])
    return result


def parse_monomial(text, ring):
    """Parse `1` or factors `var^k` joined by `*`

    Args:
        text (str): monomial text such as "x^2*y"
        ring (RingDescriptor): ring providing the variable names

    Returns:
        Monomial: the parsed monomial
    """
    if not isinstance(text, str):
        raise ParseError(f"monomial must be a string, got {text!r}")
    stripped = text.strip()
    if stripped == "1":
        return ring.one()
    if not stripped:
        raise ParseError("empty monomial text")

    exps = [0] * ring.nvars
    for chunk in stripped.split("*"):
        match = _FACTOR.fullmatch(chunk)
        if match is None:
            raise ParseError(f"malformed factor {chunk!r} in {text!r}")
        name, power = match.group(1), match.group(2)
        if name not in ring.variables:
            raise ParseError(f"unknown variable {name!r} in {text!r}; ring has {list(ring.variables)}")
        e = 1 if power is None else int(power)
        if e <= 0:
            raise ParseError(f"non-positive exponent {e} for {name} in {text!r}")
        exps[ring.variables.index(name)] += e
    return Monomial(ring, tuple(exps))


def parse_ideal(texts, ring):
    """Parse generator strings and minimalize them

    Logs a warning when non-minimal generators were dropped.
    """
    texts = list(texts)
    if not texts:
        raise EmptyIdealError("a monomial ideal needs at least one generator")
    return ideal_from_generators(texts, lambda text: parse_monomial(text, ring))


def ideal_from_generators(items, convert):
    """Convert each generator and minimalize, warning when any were dropped

    Args:
        items (list): raw generators
        convert (callable): raw generator to Monomial; ParseErrors gain the generator position

    Returns:
        MonomialIdeal: the minimal ideal
    """
    gens = []
    for position, item in enumerate(items):
        try:
            gens.append(convert(item))
        except ParseError as e:
            raise ParseError(f"generator {position}: {e}") from None
    ideal = minimalize(gens)
    if len(ideal) != len(gens):
        logger.warning(f"Minimalized {len(gens)} generators to {len(ideal)}: {ideal}")
    return ideal
