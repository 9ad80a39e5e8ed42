"""Root systems, parabolic markings, and flag-variety combinatorics.

Simple types A-G with Bourbaki numbering of simple roots throughout; all
I/O (the ``"A3:{1,3}"`` grammar, JSON reports) uses that numbering.

Roots live in simple-root coordinates as integer tuples. Root systems are
generated by closing the simple roots under simple reflections and then
validated against the classical cardinalities, so there is a single code
path for all types and it is self-checking.

Poincare polynomials of Weyl groups and their parabolic quotients are
computed from Macdonald's height product

    W(t) = prod_{alpha > 0} (1 - t^{ht(alpha)+1}) / (1 - t^{ht(alpha)})

which needs only the positive roots, never an enumeration of W. Weyl
groups themselves are materialized (``weyl_elements``) only up to rank 6,
for use as an independent cross-check at small rank.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import DimensionMismatch, EmptyMarking, InvalidRank
from .ratlinalg import inverse

RANK_BOUNDS = {
    "A": (1, None),
    "B": (2, None),
    "C": (2, None),
    "D": (3, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}

# Number of positive roots per family, as a function of the rank.
_POSITIVE_ROOT_COUNT = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "E": lambda n: {6: 36, 7: 63, 8: 120}[n],
    "F": lambda n: 24,
    "G": lambda n: 6,
}

DUAL_COXETER_NUMBER = {
    "A": lambda n: n + 1,
    "B": lambda n: 2 * n - 1,
    "C": lambda n: n + 1,
    "D": lambda n: 2 * n - 2,
    "E": lambda n: {6: 12, 7: 18, 8: 30}[n],
    "F": lambda n: 9,
    "G": lambda n: 4,
}

WEYL_ENUMERATION_MAX_RANK = 6


@dataclass(frozen=True)
class SimpleType:
    """A simple complex Lie algebra type: family letter plus rank."""

    family: str
    rank: int

    def __post_init__(self):
        if self.family not in RANK_BOUNDS:
            raise InvalidRank(f"unknown family {self.family!r}")
        lo, hi = RANK_BOUNDS[self.family]
        if self.rank < lo or (hi is not None and self.rank > hi):
            raise InvalidRank(
                f"rank {self.rank} out of bounds for type {self.family}")

    def __str__(self):
        return f"{self.family}{self.rank}"

    @property
    def dual_coxeter_number(self) -> int:
        return DUAL_COXETER_NUMBER[self.family](self.rank)

    @property
    def is_classical(self) -> bool:
        return self.family in "ABCD"


@dataclass(frozen=True)
class RootSystemData:
    """Cartan matrix, positive roots, and fundamental weights of a type.

    Conventions: ``cartan_matrix[i][j] = <alpha_i, alpha_j-check>`` (zero
    based), positive roots are integer tuples of simple-root coefficients,
    and ``fundamental_weights`` holds the weight basis in simple-root
    coordinates, i.e. the inverse of the Cartan matrix, one weight per row.
    """

    simple_type: SimpleType
    cartan_matrix: tuple[tuple[int, ...], ...]
    positive_roots: tuple[tuple[int, ...], ...]
    fundamental_weights: tuple[tuple[Fraction, ...], ...]

    @property
    def rank(self) -> int:
        return self.simple_type.rank

    @property
    def num_positive_roots(self) -> int:
        return len(self.positive_roots)

    @property
    def dim_algebra(self) -> int:
        return 2 * len(self.positive_roots) + self.rank


def _cartan_matrix(family: str, n: int) -> list[list[int]]:
    c = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def bond(i, j, cij=-1, cji=-1):
        # 1-based node labels, as in the Bourbaki plates
        c[i - 1][j - 1] = cij
        c[j - 1][i - 1] = cji

    if family in "ABC":
        for i in range(1, n):
            bond(i, i + 1)
        if family == "B" and n >= 2:
            bond(n - 1, n, -2, -1)  # alpha_n short
        if family == "C" and n >= 2:
            bond(n - 1, n, -1, -2)  # alpha_n long
    elif family == "D":
        for i in range(1, n - 1):
            bond(i, i + 1)
        bond(n - 2, n)
    elif family == "E":
        for i, j in [(1, 3), (3, 4), (4, 5), (5, 6), (2, 4)]:
            bond(i, j)
        if n >= 7:
            bond(6, 7)
        if n == 8:
            bond(7, 8)
    elif family == "F":
        bond(1, 2)
        bond(2, 3, -2, -1)  # alpha_3 short
        bond(3, 4)
    elif family == "G":
        bond(1, 2, -1, -3)  # alpha_1 short
    return c


def _pairing_with_coroot(coeffs, cartan, j) -> int:
    """<beta, alpha_j-check> for beta given by simple-root coefficients."""
    return sum(ci * cartan[i][j] for i, ci in enumerate(coeffs))


def _generate_roots(cartan) -> set[tuple[int, ...]]:
    n = len(cartan)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    roots = set(simple)
    frontier = list(simple)
    while frontier:
        beta = frontier.pop()
        for j in range(n):
            k = _pairing_with_coroot(beta, cartan, j)
            if k == 0:
                continue
            image = list(beta)
            image[j] -= k
            image = tuple(image)
            if image not in roots:
                roots.add(image)
                frontier.append(image)
    return roots


@lru_cache(maxsize=None)
def build_root_system(t: SimpleType) -> RootSystemData:
    """Generate the full root-system data for a simple type.

    Roots are produced by reflection closure and validated against the
    classical positive-root count, so a bad Cartan matrix cannot slip
    through silently.
    """
    cartan = _cartan_matrix(t.family, t.rank)
    roots = _generate_roots(cartan)
    positive = sorted(r for r in roots if all(c >= 0 for c in r))
    expected = _POSITIVE_ROOT_COUNT[t.family](t.rank)
    if len(positive) != expected or 2 * len(positive) != len(roots):
        raise AssertionError(
            f"root generation for {t} produced {len(positive)} positive "
            f"roots, expected {expected}")
    weights = inverse(cartan)
    assert weights is not None, "Cartan matrix must be invertible"
    return RootSystemData(
        simple_type=t,
        cartan_matrix=tuple(tuple(row) for row in cartan),
        positive_roots=tuple(positive),
        fundamental_weights=tuple(tuple(row) for row in weights),
    )


@dataclass(frozen=True)
class ParabolicType:
    """A conjugacy class of parabolics: a marked subset of simple roots.

    ``marked`` uses 1-based Bourbaki indices. The empty marking stands for
    the whole group; operations that need a proper parabolic raise
    :class:`EmptyMarking` on it.
    """

    root_system: RootSystemData
    marked: tuple[int, ...]

    def __post_init__(self):
        n = self.root_system.rank
        cleaned = tuple(sorted(set(self.marked)))
        if cleaned and (cleaned[0] < 1 or cleaned[-1] > n):
            raise DimensionMismatch(
                f"marked roots {self.marked} outside 1..{n}")
        object.__setattr__(self, "marked", cleaned)

    def __str__(self):
        inner = ",".join(str(i) for i in self.marked)
        return f"{self.root_system.simple_type}:{{{inner}}}"

    @property
    def unmarked(self) -> tuple[int, ...]:
        return tuple(i for i in range(1, self.root_system.rank + 1)
                     if i not in self.marked)


def parabolic(t: SimpleType, marked) -> ParabolicType:
    return ParabolicType(build_root_system(t), tuple(marked))


def _supported_on(root, indices_zero_based) -> bool:
    return any(root[i] != 0 for i in indices_zero_based)


def flag_dimension(p: ParabolicType) -> int:
    """dim G/P = number of positive roots in the nilradical of P.

    Those are exactly the positive roots with a nonzero coefficient on
    some marked simple root.
    """
    if not p.marked:
        raise EmptyMarking("flag dimension needs a proper parabolic")
    marked0 = [i - 1 for i in p.marked]
    return sum(1 for r in p.root_system.positive_roots
               if _supported_on(r, marked0))


@dataclass(frozen=True)
class CurveDivisorLattice:
    """Curve/divisor lattices N_1 and N^1 shared by the Springer map,
    its punctured restriction, and the projectivised contact resolution.

    Schubert curves C_alpha (alpha marked) give the curve basis, the
    matching fundamental weights give the divisor basis, and the pairing
    is the identity in these bases.
    """

    parabolic: ParabolicType
    curve_basis: tuple[str, ...]
    divisor_basis: tuple[str, ...]
    pairing: tuple[tuple[int, ...], ...]

    @property
    def rank(self) -> int:
        return len(self.curve_basis)


def curve_divisor_lattice(p: ParabolicType) -> CurveDivisorLattice:
    if not p.marked:
        raise EmptyMarking("curve/divisor lattice needs a proper parabolic")
    k = len(p.marked)
    return CurveDivisorLattice(
        parabolic=p,
        curve_basis=tuple(f"C_{i}" for i in p.marked),
        divisor_basis=tuple(f"w_{i}" for i in p.marked),
        pairing=tuple(tuple(int(i == j) for j in range(k)) for i in range(k)),
    )


# --- Poincare polynomials ---------------------------------------------------

def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_divmod(num, den):
    num = list(num)
    q = [0] * (len(num) - len(den) + 1)
    for k in range(len(q) - 1, -1, -1):
        coeff = num[k + len(den) - 1]
        lead = den[-1]
        assert coeff % lead == 0
        c = coeff // lead
        q[k] = c
        if c:
            for j, y in enumerate(den):
                num[k + j] -= c * y
    return q, num


def _poly_div_exact(num, den):
    q, rem = _poly_divmod(num, den)
    assert all(x == 0 for x in rem), "inexact polynomial division"
    while len(q) > 1 and q[-1] == 0:
        q.pop()
    return q


def _length_generating_function(positive_roots) -> list[int]:
    """Macdonald's product over root heights; [1] for the empty system."""
    num = [1]
    den = [1]
    for root in positive_roots:
        h = sum(root)
        f_num = [0] * (h + 2)
        f_num[0], f_num[h + 1] = 1, -1
        f_den = [0] * (h + 1)
        f_den[0], f_den[h] = 1, -1
        num = _poly_mul(num, f_num)
        den = _poly_mul(den, f_den)
    return _poly_div_exact(num, den)


def _levi_positive_roots(p: ParabolicType):
    """Positive roots of the Levi: those supported only on unmarked roots."""
    marked0 = [i - 1 for i in p.marked]
    return [r for r in p.root_system.positive_roots
            if not _supported_on(r, marked0)]


def weyl_order(rs: RootSystemData) -> int:
    """|W|, evaluated from the height product at t = 1."""
    prod = Fraction(1)
    for root in rs.positive_roots:
        h = sum(root)
        prod *= Fraction(h + 1, h)
    assert prod.denominator == 1
    return prod.numerator


def poincare_polynomial(p: ParabolicType) -> tuple[int, ...]:
    """Coefficients (b_0, b_2, b_4, ...) of the Poincare polynomial of G/P.

    Computed as the exact quotient of the length generating functions of W
    and of the Levi Weyl group. The degree always equals dim G/P.
    """
    if not p.marked:
        raise EmptyMarking("Poincare polynomial needs a proper parabolic")
    full = _length_generating_function(p.root_system.positive_roots)
    levi = _length_generating_function(_levi_positive_roots(p))
    quot = _poly_div_exact(full, levi)
    assert len(quot) - 1 == flag_dimension(p)
    return tuple(quot)


def is_projective_space(p: ParabolicType) -> bool:
    """Whether G/P is a projective space, by the all-ones Betti criterion.

    Every coefficient of the Poincare polynomial of G/P must equal one,
    i.e. all even Betti numbers are 1, exactly the Betti numbers of P^n.
    The condition is necessary but famously not sufficient in general:
    odd-dimensional quadrics (type B, first node marked) share the
    pattern. Type A is unaffected. Swap this one function to sharpen the
    criterion.
    """
    return all(c == 1 for c in poincare_polynomial(p))


# --- Weyl group materialization (small rank only) ---------------------------

def _reflection_matrix(cartan, j):
    n = len(cartan)
    m = [[int(i == k) for k in range(n)] for i in range(n)]
    for i in range(n):
        m[j][i] = int(i == j) - cartan[i][j]
    return tuple(tuple(row) for row in m)


def weyl_elements(rs: RootSystemData) -> list[tuple[tuple[int, ...], ...]]:
    """All elements of W as matrices on simple-root coordinates.

    Coset enumeration is only sane at desk scale; ranks above
    ``WEYL_ENUMERATION_MAX_RANK`` must use the generating-function path.
    """
    if rs.rank > WEYL_ENUMERATION_MAX_RANK:
        raise DimensionMismatch(
            f"refusing to enumerate W for rank {rs.rank} > "
            f"{WEYL_ENUMERATION_MAX_RANK}")
    cartan = rs.cartan_matrix
    n = rs.rank
    gens = [_reflection_matrix(cartan, j) for j in range(n)]
    identity = tuple(tuple(int(i == k) for k in range(n)) for i in range(n))
    seen = {identity}
    frontier = [identity]
    while frontier:
        w = frontier.pop()
        for g in gens:
            prod = tuple(
                tuple(sum(g[i][k] * w[k][j] for k in range(n))
                      for j in range(n))
                for i in range(n))
            if prod not in seen:
                seen.add(prod)
                frontier.append(prod)
    return sorted(seen)


def weyl_length(rs: RootSystemData, w) -> int:
    """Length of w = number of positive roots mapped to negative roots."""
    n = rs.rank
    count = 0
    for root in rs.positive_roots:
        image = [sum(w[i][k] * root[k] for k in range(n)) for i in range(n)]
        if all(c <= 0 for c in image):
            count += 1
    return count


# --- text grammar ------------------------------------------------------------

_TYPE_RE = re.compile(r"^([A-G])([0-9]+)$")


def parse_simple_type(text: str) -> SimpleType:
    m = _TYPE_RE.match(text.strip())
    if not m:
        raise InvalidRank(f"cannot parse simple type from {text!r}")
    return SimpleType(m.group(1), int(m.group(2)))


def parse_parabolic(text: str) -> ParabolicType:
    """Parse the parabolic grammar, e.g. ``"A3:{1,3}"``."""
    head, sep, tail = text.partition(":")
    tail = tail.strip()
    if not sep or not tail.startswith("{") or not tail.endswith("}"):
        raise DimensionMismatch(
            f"cannot parse parabolic from {text!r}; expected TYPE:{{i,j,...}}")
    t = parse_simple_type(head)
    inner = tail[1:-1].strip()
    marked = tuple(int(tok) for tok in inner.split(",") if tok.strip()) \
        if inner else ()
    return parabolic(t, marked)
