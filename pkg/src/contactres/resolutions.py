"""Decision procedures for contact resolutions of projectivised orbit
closures.

The central facts this module operationalizes:

* Contact resolutions, crepant resolutions, and minimal models of the
  projectivised closure are one and the same notion, so a report carries
  a single predicate, never three.
* Every contact resolution is the projectivised cotangent bundle of a
  flag variety G/P with P a polarization (birational Springer map), so
  deciding existence and enumerating resolutions reduce to classification
  data about polarizations.
* Existence trichotomy: the projectivised normalization is already
  smooth exactly for minimal orbits and for the 8-dimensional orbit of
  G2; otherwise a contact resolution exists iff the affine closure has a
  symplectic resolution. In type A that is always the case and the
  polarizations are the orderings of the dual partition; outside type A
  the answer comes from curated classification data and absent entries
  yield an honest Unknown.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations

from . import oracle_lab
from .cones import ChamberComplex, chamber_complex_for
from .errors import (
    ContactresError,
    EmptyMarking,
    UnknownClassification,
    UnsupportedType,
    ZeroOrbit,
)
from .lie_core import (
    ParabolicType,
    SimpleType,
    flag_dimension,
    is_projective_space,
    parabolic,
)
from .orbits import (
    OrbitLabel,
    OrbitRecord,
    dual_partition,
    exceptional_entry,
    is_zero_orbit,
    orbit_dimension,
    orbit_record,
    regular_orbit_label,
    validate_orbit,
)

VERDICT_SMOOTH = "SmoothAlready"
VERDICT_EXISTS = "ContactResolutionsExist"
VERDICT_NONE = "NoContactResolution"
VERDICT_UNKNOWN = "Unknown"

REASON_MINIMAL = "Minimal"
REASON_G2DIM8 = "G2dim8"
REASON_SYMPLECTIC = "SymplecticResolution"
REASON_TABLE = "ClassificationTable"
REASON_INDETERMINATE = "Indeterminate"

# Text for the two pinned boundary examples where resolutions of the
# punctured closure and of the affine closure genuinely differ.
NOTE_MINIMAL_NON_A = (
    "boundary case: the punctured affine closure is smooth, but the affine "
    "closure itself admits no symplectic resolution outside type A")


def compositions_of(n: int):
    """All compositions of n (ordered tuples of positive parts)."""
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in compositions_of(n - first):
            yield (first,) + rest


def parabolic_from_composition(comp) -> ParabolicType:
    """Block composition of n -> parabolic of A_{n-1} (marked partial sums)."""
    comp = tuple(int(c) for c in comp)
    if not comp or any(c <= 0 for c in comp):
        raise ContactresError(f"composition parts must be positive: {comp}")
    n = sum(comp)
    if n < 2:
        raise ContactresError("composition must sum to at least 2")
    marks = []
    acc = 0
    for c in comp[:-1]:
        acc += c
        marks.append(acc)
    return parabolic(SimpleType("A", n - 1), marks)


def composition_from_marking(p: ParabolicType) -> tuple[int, ...]:
    """Marked roots of A_{n-1} -> block composition of n."""
    if p.root_system.simple_type.family != "A":
        raise UnsupportedType("compositions describe type A parabolics only")
    n = p.root_system.rank + 1
    cuts = list(p.marked) + [n]
    comp = []
    prev = 0
    for c in cuts:
        comp.append(c - prev)
        prev = c
    return tuple(comp)


@dataclass(frozen=True)
class Polarization:
    """A parabolic whose Springer map resolves the orbit closure."""

    parabolic: ParabolicType
    richardson_orbit: OrbitLabel
    springer_degree: int | None
    is_birational: bool | None

    def __post_init__(self):
        if self.is_birational:
            assert orbit_dimension(self.richardson_orbit) == \
                2 * flag_dimension(self.parabolic), \
                "birational polarization must have dim O = 2 dim G/P"

    @property
    def composition(self) -> tuple[int, ...] | None:
        if self.parabolic.root_system.simple_type.family != "A":
            return None
        return composition_from_marking(self.parabolic)

    @property
    def flag_dimension(self) -> int:
        return flag_dimension(self.parabolic)


def richardson_partition(t: SimpleType, p: ParabolicType) -> OrbitLabel:
    """Richardson orbit of a parabolic: the dense orbit in G . nilradical.

    Type A: the composition's sorted transpose. The analogous recipes for
    B/C/D involve partition collapses that no shipped data anchors, so
    they are refused rather than guessed.
    """
    if t.family != "A":
        raise UnsupportedType(
            f"no Richardson recipe shipped for type {t.family}")
    comp = composition_from_marking(p)
    part = dual_partition(tuple(sorted(comp, reverse=True)))
    return validate_orbit(t, part)


def _type_a_polarizations(o: OrbitLabel) -> list[Polarization]:
    dual = dual_partition(o.partition)
    comps = sorted(set(permutations(dual)))
    out = []
    for comp in comps:
        out.append(Polarization(
            parabolic=parabolic_from_composition(comp),
            richardson_orbit=o,
            springer_degree=1,  # Springer maps are birational in type A
            is_birational=True,
        ))
    return out


def _full_marking_polarization(o: OrbitLabel, degree=1) -> Polarization:
    t = o.simple_type
    return Polarization(
        parabolic=parabolic(t, range(1, t.rank + 1)),
        richardson_orbit=o,
        springer_degree=degree,
        is_birational=True,
    )


def polarizations(o: OrbitLabel) -> list[Polarization]:
    """All polarizations of the orbit closure (its equivalence class).

    Sorted lexicographically by composition (type A) or marking.
    Raises :class:`UnknownClassification` where the curated data is
    silent; returns the empty list only when non-existence is definitive.
    """
    if is_zero_orbit(o):
        raise ZeroOrbit(f"{o} is the zero orbit")
    t = o.simple_type
    if t.family == "A":
        return _type_a_polarizations(o)
    if o.is_exceptional:
        entry = exceptional_entry(o)
        if entry.polarizations is not None:
            return sorted(
                (Polarization(
                    parabolic=parabolic(t, marks),
                    richardson_orbit=o,
                    springer_degree=entry.springer_degree,
                    is_birational=True,
                ) for marks in entry.polarizations),
                key=lambda q: q.parabolic.marked)
        if entry.admits_symplectic_resolution is False:
            return []
        raise UnknownClassification(
            f"polarization data for {o} not in the shipped table")
    # classical non-A: only two rank-uniform facts are curated in code
    if orbit_dimension(o) == 2 * t.dual_coxeter_number - 2:
        # minimal orbits outside type A admit no symplectic resolution
        return []
    if o == regular_orbit_label(t):
        # the nilpotent cone always has its Springer resolution
        return [_full_marking_polarization(o)]
    raise UnknownClassification(
        f"symplectic-resolution data for {o} is not curated")


def equivalent_parabolics(p: ParabolicType) -> list[ParabolicType]:
    """The equivalence class of P: parabolics resolving the same closure.

    Type A: all permutations of the block composition. Elsewhere only the
    Borel is supported (it is alone in its class by a dimension count).
    """
    if not p.marked:
        raise EmptyMarking("equivalence needs a proper parabolic")
    t = p.root_system.simple_type
    if t.family == "A":
        comp = composition_from_marking(p)
        classes = sorted(set(permutations(comp)))
        return [parabolic_from_composition(c) for c in classes]
    if p.marked == tuple(range(1, t.rank + 1)):
        return [p]
    raise UnknownClassification(
        f"equivalence classes outside type A are not curated ({p})")


def canonical_degree_on_curve(n_contact: int, l_degree) -> Fraction:
    """Degree of the canonical bundle on a curve class: -(n+1) L . C.

    Exceptional curve classes have L-degree zero, hence K-degree zero.
    """
    if n_contact < 0:
        raise ContactresError("contact dimension n must be nonnegative")
    return Fraction(-(n_contact + 1)) * Fraction(l_degree)


def is_twistor_space(p: ParabolicType) -> bool:
    """Whether the projectivised cotangent bundle of G/P is a twistor
    space of a quaternion-Kahler manifold: exactly when G/P is P^n."""
    return is_projective_space(p)


@dataclass(frozen=True)
class OracleCheck:
    """One cross-check of a combinatorial value against a matrix oracle."""

    oracle: str
    inputs: str
    seeds: tuple[str, ...]
    value: object
    formula_value: object
    agrees_with_formula: bool


@dataclass(frozen=True)
class ResolutionReport:
    """The full answer for one orbit."""

    orbit: OrbitRecord
    verdict: str
    reason: str
    polarizations: tuple[Polarization, ...]
    chamber_complex: ChamberComplex | None
    affine_closure_admits_symplectic_resolution: bool | None
    oracle_checks: tuple[OracleCheck, ...]
    notes: tuple[str, ...]
    # crepant = minimal model = contact: one predicate by construction.
    crepant_equals_contact_equals_minimal: bool = True

    @property
    def canonical_bundle_exponent(self) -> int | None:
        return self.orbit.canonical_bundle_exponent

    @property
    def resolution_exists(self) -> bool:
        return self.verdict in (VERDICT_SMOOTH, VERDICT_EXISTS)


def _affine_resolution_flag(o: OrbitLabel, polar) -> bool | None:
    t = o.simple_type
    if t.family == "A":
        return True
    if o.is_exceptional:
        return exceptional_entry(o).admits_symplectic_resolution
    if polar is None:
        return None
    return bool(polar)


def _oracle_block(o: OrbitLabel, record: OrbitRecord, polar,
                  seed: int) -> tuple[OracleCheck, ...]:
    if o.simple_type.family != "A":
        return ()
    n = o.simple_type.rank + 1
    checks = []
    if n <= oracle_lab.ADDIM_SIZE_CAP:
        model = oracle_lab.jordan_nilpotent(o.partition)
        value = oracle_lab.addim(model)
        checks.append(OracleCheck(
            oracle="ad-rank", inputs=str(o), seeds=(),
            value=value, formula_value=record.dim_orbit,
            agrees_with_formula=value == record.dim_orbit))
        if n <= 5:
            value = oracle_lab.kks_rank(model)
            checks.append(OracleCheck(
                oracle="kks-rank", inputs=str(o), seeds=(),
                value=value, formula_value=record.dim_orbit,
                agrees_with_formula=value == record.dim_orbit))
    for pol in polar or ():
        comp = pol.composition
        if comp is None or n > 6:
            continue
        observed = oracle_lab.generic_jordan_type(comp, seed=seed)
        checks.append(OracleCheck(
            oracle="richardson-jordan-type",
            inputs=f"composition {comp}",
            seeds=tuple(oracle_lab.trial_seeds(seed)),
            value=list(observed), formula_value=list(o.partition),
            agrees_with_formula=observed == o.partition))
        if n <= oracle_lab.FIBER_SIZE_CAP:
            count = oracle_lab.generic_fiber_count(comp, seed=seed)
            checks.append(OracleCheck(
                oracle="springer-fiber-count",
                inputs=f"composition {comp}",
                seeds=tuple(oracle_lab.trial_seeds(seed)),
                value=count, formula_value=pol.springer_degree,
                agrees_with_formula=count == pol.springer_degree))
    return tuple(checks)


def contact_resolution_exists(o: OrbitLabel, seed: int = 0,
                              with_oracles: bool = True) -> ResolutionReport:
    """Decide the existence trichotomy and assemble the full report."""
    record = orbit_record(o)
    if record.is_zero:
        raise ZeroOrbit(f"{o} is the zero orbit")

    try:
        polar = polarizations(o)
    except UnknownClassification:
        polar = None

    t = o.simple_type
    g2dim8 = (t.family, t.rank, record.dim_orbit) == ("G", 2, 8)
    notes: list[str] = []
    if o.is_exceptional:
        entry = exceptional_entry(o)
        if entry.note:
            notes.append(entry.note)

    if record.proj_normalization_smooth:
        verdict = VERDICT_SMOOTH
        reason = REASON_G2DIM8 if g2dim8 else REASON_MINIMAL
        if reason == REASON_MINIMAL and t.family != "A" and not o.is_exceptional:
            notes.append(NOTE_MINIMAL_NON_A)
    elif polar:
        verdict = VERDICT_EXISTS
        reason = REASON_SYMPLECTIC
    elif polar is not None:
        verdict = VERDICT_NONE
        reason = REASON_TABLE
    else:
        verdict = VERDICT_UNKNOWN
        reason = REASON_INDETERMINATE

    chambers = chamber_complex_for(o, polar) if polar else None
    affine = _affine_resolution_flag(o, polar)
    oracle_checks = _oracle_block(o, record, polar, seed) \
        if with_oracles else ()

    report = ResolutionReport(
        orbit=record,
        verdict=verdict,
        reason=reason,
        polarizations=tuple(polar or ()),
        chamber_complex=chambers,
        affine_closure_admits_symplectic_resolution=affine,
        oracle_checks=oracle_checks,
        notes=tuple(notes),
    )
    assert report.resolution_exists == (
        bool(report.polarizations)
        or report.reason in (REASON_MINIMAL, REASON_G2DIM8))
    assert (report.verdict == VERDICT_SMOOTH) == \
        record.proj_normalization_smooth
    return report
