"""Exact rational polyhedral cones and movable-cone chamber complexes.

Cones are stored by canonical generators: the extreme rays of the pointed
part (primitive integer vectors, sorted) plus a +/- pair for each vector
of the reduced-echelon lineality basis. Canonicalization and duality both
go through one naive double-description pass: candidate rays are
nullspaces of (d-1)-subsets of the constraint rows, kept when they clear
every constraint. That is quadratic-ish and entirely adequate at desk
scale; the ambient dimension is capped accordingly.

The chamber complex of the movable cone has one chamber per equivalent
parabolic, each carrying its ample cone in its own weight basis, and, in
type A, one wall for each adjacent transposition of distinct entries of
the composition. Only the combinatorial gluing is recorded; no common
linear embedding of all chambers is attempted (none is available at this
level of the theory).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import (
    DimensionMismatch,
    EmptyMarking,
    NoPolarization,
    SizeCapExceeded,
    UnknownClassification,
)
from .lie_core import ParabolicType
from .orbits import OrbitLabel
from .ratlinalg import dot, nullspace, primitive, rank, rref

MAX_AMBIENT_DIM = 8


def _identity_rows(dim):
    return [tuple(int(i == j) for j in range(dim)) for i in range(dim)]


def _nullspace_rows(rows, dim):
    if not rows:
        return _identity_rows(dim)
    return nullspace([list(r) for r in rows])


def _canonical_lineality(basis_rows):
    if not basis_rows:
        return ()
    red, _ = rref([list(r) for r in basis_rows])
    return tuple(primitive(r) for r in red)


def _polar_rays(constraints, dim):
    """Generators of {y : <c, y> >= 0 for all c}: (extreme rays, lineality).

    The pointed part is taken inside the orthogonal complement of the
    lineality, which makes the answer canonical.
    """
    constraints = [primitive(c) for c in constraints]
    constraints = [c for c in constraints if any(c)]
    lineality = _canonical_lineality(_nullspace_rows(constraints, dim))
    rows = list(dict.fromkeys(constraints))
    for vec in lineality:
        rows.append(vec)
        rows.append(tuple(-x for x in vec))
    rays = set()
    if dim == 1:
        candidates = [(1,)]
    else:
        candidates = []
        for subset in combinations(range(len(rows)), dim - 1):
            sub = [rows[i] for i in subset]
            kernel = _nullspace_rows(sub, dim)
            if len(kernel) == 1:
                candidates.append(kernel[0])
    for cand in candidates:
        signs = [dot(row, cand) for row in rows]
        if all(s == 0 for s in signs):
            continue  # lineality direction, carried separately
        if all(s >= 0 for s in signs):
            rays.add(primitive(cand))
        elif all(s <= 0 for s in signs):
            rays.add(primitive([-x for x in cand]))
    return tuple(sorted(rays)), lineality


@dataclass(frozen=True)
class RationalCone:
    """A rational polyhedral cone in canonical double-description form."""

    ambient_dim: int
    extreme_rays: tuple[tuple[int, ...], ...]
    lineality_basis: tuple[tuple[int, ...], ...]
    _facets: tuple[tuple[int, ...], ...] | None = None

    @property
    def generators(self) -> tuple[tuple[int, ...], ...]:
        gens = list(self.extreme_rays)
        for vec in self.lineality_basis:
            gens.append(vec)
            gens.append(tuple(-x for x in vec))
        return tuple(gens)

    @property
    def facet_normals(self) -> tuple[tuple[int, ...], ...]:
        if self._facets is not None:
            return self._facets
        rays, lin = _polar_rays(self.generators, self.ambient_dim)
        facets = RationalCone(self.ambient_dim, rays, lin).generators
        object.__setattr__(self, "_facets", facets)
        return facets

    @property
    def is_pointed(self) -> bool:
        return not self.lineality_basis

    @property
    def span_dim(self) -> int:
        gens = self.generators
        return rank([list(g) for g in gens]) if gens else 0

    @property
    def is_simplicial(self) -> bool:
        return self.is_pointed and len(self.extreme_rays) == self.span_dim

    def contains(self, vector) -> bool:
        if len(vector) != self.ambient_dim:
            raise DimensionMismatch(
                f"vector of length {len(vector)} in dim {self.ambient_dim}")
        return all(dot(h, vector) >= 0 for h in self.facet_normals)

    def __eq__(self, other):
        return (isinstance(other, RationalCone)
                and self.ambient_dim == other.ambient_dim
                and self.extreme_rays == other.extreme_rays
                and self.lineality_basis == other.lineality_basis)

    def __hash__(self):
        return hash((self.ambient_dim, self.extreme_rays,
                     self.lineality_basis))


def cone_from_generators(dim: int, gens) -> RationalCone:
    """Build the cone spanned by ``gens`` in canonical form.

    Canonicalization runs generators -> facets -> generators; by the
    bipolar theorem the result is the same cone, now presented by its
    extreme rays in primitive sorted form.
    """
    if dim < 1:
        raise DimensionMismatch("ambient dimension must be positive")
    if dim > MAX_AMBIENT_DIM:
        raise SizeCapExceeded(
            f"ambient dimension {dim} exceeds cap {MAX_AMBIENT_DIM}")
    cleaned = []
    for g in gens:
        if len(g) != dim:
            raise DimensionMismatch(
                f"generator {g} has length {len(g)}, expected {dim}")
        p = primitive(g)
        if any(p):
            cleaned.append(p)
    facet_rays, facet_lin = _polar_rays(cleaned, dim)
    facets = RationalCone(dim, facet_rays, facet_lin).generators
    rays, lin = _polar_rays(facets, dim)
    cone = RationalCone(dim, rays, lin, _facets=facets)
    assert all(dot(h, g) >= 0 for h in facets for g in cone.generators)
    return cone


def dual_cone(c: RationalCone) -> RationalCone:
    """{y : <y, x> >= 0 for all x in c}; an involution on closed cones."""
    rays, lin = _polar_rays(c.generators, c.ambient_dim)
    return RationalCone(c.ambient_dim, rays, lin, _facets=c.generators)


def ample_cone(p: ParabolicType) -> RationalCone:
    """Relative ample cone of the resolutions attached to P.

    In the fundamental-weight basis indexed by the marked roots this is
    the coordinate cone: the dual of the Schubert-curve cone under the
    identity pairing. Simplicial with exactly |I| rays, by construction.
    """
    if not p.marked:
        raise EmptyMarking("ample cone needs a proper parabolic")
    k = len(p.marked)
    if k > MAX_AMBIENT_DIM:
        raise SizeCapExceeded(f"lattice rank {k} exceeds {MAX_AMBIENT_DIM}")
    return cone_from_generators(k, _identity_rows(k))


# --- chamber complexes --------------------------------------------------------

@dataclass(frozen=True)
class Chamber:
    """One chamber of the movable cone: the ample cone of one parabolic,
    written in that parabolic's own weight basis."""

    marked_roots: tuple[int, ...]
    composition: tuple[int, ...] | None
    ample: RationalCone

    @property
    def label(self) -> tuple[int, ...]:
        return self.composition if self.composition is not None \
            else self.marked_roots


@dataclass(frozen=True)
class Wall:
    """Codimension-one contact between two chambers. In type A the move
    is the adjacent transposition swapping ``entries`` at ``position``
    (1-based) of chamber_a's composition."""

    chamber_a: tuple[int, ...]
    chamber_b: tuple[int, ...]
    position: int
    entries: tuple[int, int]


@dataclass(frozen=True)
class ChamberComplex:
    orbit: OrbitLabel
    chambers: tuple[Chamber, ...]
    walls: tuple[Wall, ...]

    @property
    def chamber_count(self) -> int:
        return len(self.chambers)

    def degree(self, label) -> int:
        return sum(1 for w in self.walls
                   if w.chamber_a == label or w.chamber_b == label)

    @property
    def is_connected(self) -> bool:
        if not self.chambers:
            return False
        labels = [c.label for c in self.chambers]
        adjacency = {lab: set() for lab in labels}
        for w in self.walls:
            adjacency[w.chamber_a].add(w.chamber_b)
            adjacency[w.chamber_b].add(w.chamber_a)
        seen = {labels[0]}
        frontier = [labels[0]]
        while frontier:
            for nxt in adjacency[frontier.pop()]:
                if nxt not in seen:
                    seen.add(nxt)
                    frontier.append(nxt)
        return len(seen) == len(labels)


def chamber_complex_for(orbit: OrbitLabel, polarization_list) -> ChamberComplex:
    """Assemble the chamber complex from an explicit polarization list.

    Type A: chambers are the distinct orderings of the dual partition and
    walls are adjacent transpositions of distinct entries. Other types:
    only single-chamber complexes are constructible from the shipped
    classification data.
    """
    if not polarization_list:
        raise NoPolarization(f"{orbit} has no polarization")
    chambers = []
    for pol in sorted(polarization_list,
                      key=lambda q: q.composition or q.parabolic.marked):
        chambers.append(Chamber(
            marked_roots=pol.parabolic.marked,
            composition=pol.composition,
            ample=ample_cone(pol.parabolic),
        ))
    type_a = orbit.simple_type.family == "A"
    if not type_a and len(chambers) > 1:
        raise UnknownClassification(
            "wall structure outside type A is not curated")
    walls = []
    if type_a:
        labels = {c.composition for c in chambers}
        for comp in sorted(labels):
            for i in range(len(comp) - 1):
                if comp[i] == comp[i + 1]:
                    continue
                swapped = list(comp)
                swapped[i], swapped[i + 1] = swapped[i + 1], swapped[i]
                swapped = tuple(swapped)
                assert swapped in labels, "orbit orderings must be closed " \
                    "under adjacent transpositions"
                if comp < swapped:
                    walls.append(Wall(
                        chamber_a=comp,
                        chamber_b=swapped,
                        position=i + 1,
                        entries=(comp[i], comp[i + 1]),
                    ))
    complex_ = ChamberComplex(orbit=orbit, chambers=tuple(chambers),
                              walls=tuple(walls))
    assert complex_.is_connected, "wall graph must be connected"
    return complex_


def movable_chambers(o: OrbitLabel) -> ChamberComplex:
    """Chamber structure of the movable cone of a contact resolution:
    one ample-cone chamber per equivalent parabolic."""
    from .resolutions import polarizations
    return chamber_complex_for(o, polarizations(o))
