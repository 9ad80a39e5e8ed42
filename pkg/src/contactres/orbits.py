"""Nilpotent orbits: partition labels, validity, dimensions, minimality.

Classical orbits are labeled by partitions subject to the usual
parity-multiplicity rules; exceptional orbits by opaque keys from the
curated table shipped in ``data/exceptional_orbits.txt``. Dimension
formulas for the classical types are the standard closed forms; the type
A formula is additionally cross-validated against the exact ad-rank
oracle in the test suite and verification harness, which is the ground
truth here.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .errors import (
    InvalidPartition,
    TableFormatError,
    UnknownExceptionalKey,
    ZeroOrbit,
)
from .lie_core import SimpleType, parse_simple_type

Partition = tuple[int, ...]

# Constant: these are theorems about the projectivised normalization,
# carried on every record as metadata.
SINGULARITY_FLAGS = {"projectively_normal": True, "rational_gorenstein": True}


# --- partitions ---------------------------------------------------------------

def dual_partition(part: Partition) -> Partition:
    """Transpose of the Young diagram."""
    part = tuple(part)
    if not part:
        return ()
    return tuple(sum(1 for p in part if p >= j) for j in range(1, part[0] + 1))


def partitions_of(n: int):
    """Weakly decreasing partitions of n, in reverse-lex order."""

    def rec(remaining, cap):
        if remaining == 0:
            yield ()
            return
        for first in range(min(cap, remaining), 0, -1):
            for rest in rec(remaining - first, first):
                yield (first,) + rest

    yield from rec(n, n)


def _multiplicities(part: Partition) -> dict[int, int]:
    mult: dict[int, int] = {}
    for p in part:
        mult[p] = mult.get(p, 0) + 1
    return mult


# --- orbit labels -------------------------------------------------------------

@dataclass(frozen=True)
class OrbitLabel:
    """A nilpotent orbit: partition (classical) or table key (exceptional).

    Very even type-D partitions label two orbits; ``very_even_tag`` keeps
    the I/II disambiguation. Nothing computed in this package
    distinguishes the two, so the tag is carried but never branched on.
    """

    simple_type: SimpleType
    partition: Partition | None = None
    exceptional_key: str | None = None
    very_even_tag: str | None = None

    @property
    def is_exceptional(self) -> bool:
        return self.exceptional_key is not None

    def __str__(self):
        if self.is_exceptional:
            return f"{self.simple_type}:{self.exceptional_key}"
        body = ",".join(str(p) for p in self.partition)
        tag = f"/{self.very_even_tag}" if self.very_even_tag else ""
        return f"{self.simple_type}:{body}{tag}"


def _partition_total(t: SimpleType) -> int:
    return {"A": t.rank + 1, "B": 2 * t.rank + 1,
            "C": 2 * t.rank, "D": 2 * t.rank}[t.family]


def is_very_even(t: SimpleType, part: Partition) -> bool:
    return t.family == "D" and all(p % 2 == 0 for p in part)


def validate_orbit(t: SimpleType, raw, very_even_tag: str | None = None) -> OrbitLabel:
    """Validate and canonicalize an orbit label.

    ``raw`` is a partition (any order; canonicalized to weakly decreasing)
    for classical types, or a table key string for E/F/G.
    """
    if isinstance(raw, str):
        if t.is_classical:
            raise InvalidPartition(
                f"classical type {t} takes a partition, not a key")
        table = exceptional_table()
        if (t.family, t.rank, raw) not in table:
            raise UnknownExceptionalKey(f"{t}:{raw} not in the shipped table")
        return OrbitLabel(simple_type=t, exceptional_key=raw)

    if not t.is_classical:
        raise InvalidPartition(f"exceptional type {t} takes a table key")
    part = tuple(sorted((int(p) for p in raw), reverse=True))
    if not part or any(p <= 0 for p in part):
        raise InvalidPartition(f"parts must be positive integers: {raw}")
    total = _partition_total(t)
    if sum(part) != total:
        raise InvalidPartition(
            f"partition {part} sums to {sum(part)}, type {t} needs {total}")
    mult = _multiplicities(part)
    if t.family in ("B", "D"):
        bad = [p for p, m in mult.items() if p % 2 == 0 and m % 2 == 1]
        if bad:
            raise InvalidPartition(
                f"type {t}: even parts {bad} must have even multiplicity")
    elif t.family == "C":
        bad = [p for p, m in mult.items() if p % 2 == 1 and m % 2 == 1]
        if bad:
            raise InvalidPartition(
                f"type {t}: odd parts {bad} must have even multiplicity")
    if very_even_tag is not None:
        if very_even_tag not in ("I", "II"):
            raise InvalidPartition(f"very-even tag must be I or II, got "
                                   f"{very_even_tag!r}")
        if not is_very_even(t, part):
            raise InvalidPartition(
                f"{t}:{part} is not very even; no I/II tag applies")
    return OrbitLabel(simple_type=t, partition=part,
                      very_even_tag=very_even_tag)


def is_zero_orbit(o: OrbitLabel) -> bool:
    if o.is_exceptional:
        return exceptional_entry(o).dimension == 0
    return all(p == 1 for p in o.partition)


# --- dimension formulas -------------------------------------------------------

def orbit_dimension(o: OrbitLabel) -> int:
    """Orbit dimension from the standard closed forms (table for E/F/G)."""
    if o.is_exceptional:
        return exceptional_entry(o).dimension
    part = o.partition
    dual = dual_partition(part)
    sq = sum(c * c for c in dual)
    n = o.simple_type.rank
    fam = o.simple_type.family
    if fam == "A":
        dim = (n + 1) ** 2 - sq
    elif fam in ("B", "D"):
        big = 2 * n + 1 if fam == "B" else 2 * n
        odd = sum(1 for p in part if p % 2 == 1)
        dim2 = big * big - big - sq + odd
        assert dim2 % 2 == 0
        dim = dim2 // 2
    else:  # C
        odd = sum(1 for p in part if p % 2 == 1)
        dim2 = 2 * (2 * n * n + n) - sq - odd
        assert dim2 % 2 == 0
        dim = dim2 // 2
    assert dim % 2 == 0, f"orbit dimension must be even, got {dim} for {o}"
    return dim


def minimal_orbit_dimension(t: SimpleType) -> int:
    """Dimension of the minimal nonzero orbit: 2 h-check - 2."""
    return 2 * t.dual_coxeter_number - 2


def minimal_orbit_label(t: SimpleType) -> OrbitLabel:
    """The minimal nonzero nilpotent orbit of a simple type."""
    fam, n = t.family, t.rank
    if fam == "A":
        part = (2,) + (1,) * (n - 1)
    elif fam == "B":
        part = (2, 2) + (1,) * (2 * n - 3)
    elif fam == "C":
        part = (2,) + (1,) * (2 * n - 2)
    elif fam == "D":
        part = (2, 2) + (1,) * (2 * n - 4)
    else:
        want = minimal_orbit_dimension(t)
        for (f, r, key), entry in exceptional_table().items():
            if (f, r) == (fam, n) and entry.dimension == want:
                return OrbitLabel(simple_type=t, exceptional_key=key)
        raise UnknownExceptionalKey(f"no minimal-orbit entry for {t}")
    label = validate_orbit(t, part)
    assert orbit_dimension(label) == minimal_orbit_dimension(t)
    return label


def regular_orbit_label(t: SimpleType) -> OrbitLabel | None:
    """The regular orbit (dense in the nilpotent cone), if representable."""
    fam, n = t.family, t.rank
    if fam == "A":
        return validate_orbit(t, (n + 1,))
    if fam == "B":
        return validate_orbit(t, (2 * n + 1,))
    if fam == "C":
        return validate_orbit(t, (2 * n,))
    if fam == "D":
        return validate_orbit(t, (2 * n - 1, 1))
    from .lie_core import build_root_system
    want = build_root_system(t).dim_algebra - n
    for (f, r, key), entry in exceptional_table().items():
        if (f, r) == (fam, n) and entry.dimension == want:
            return OrbitLabel(simple_type=t, exceptional_key=key)
    return None


def is_minimal_orbit(o: OrbitLabel) -> bool:
    """Whether o is the minimal nonzero orbit of its type."""
    if is_zero_orbit(o):
        raise ZeroOrbit(f"{o} is the zero orbit")
    return orbit_dimension(o) == minimal_orbit_dimension(o.simple_type)


# --- orbit records ------------------------------------------------------------

@dataclass(frozen=True)
class OrbitRecord:
    """Everything the resolution machinery needs to know about one orbit."""

    label: OrbitLabel
    dim_orbit: int
    is_minimal: bool
    is_zero: bool
    contact_n: int | None
    proj_normalization_smooth: bool

    @property
    def singularity_flags(self) -> dict[str, bool]:
        return dict(SINGULARITY_FLAGS)

    @property
    def canonical_bundle_exponent(self) -> int | None:
        # K = L^{-(n+1)} on the contact side, so the exponent is n+1.
        return None if self.contact_n is None else self.contact_n + 1


def orbit_record(o: OrbitLabel) -> OrbitRecord:
    dim = orbit_dimension(o)
    zero = is_zero_orbit(o)
    minimal = False if zero else is_minimal_orbit(o)
    g2dim8 = (o.simple_type.family, o.simple_type.rank, dim) == ("G", 2, 8)
    return OrbitRecord(
        label=o,
        dim_orbit=dim,
        is_minimal=minimal,
        is_zero=zero,
        contact_n=None if zero else (dim - 2) // 2,
        proj_normalization_smooth=minimal or g2dim8,
    )


# --- exceptional table --------------------------------------------------------

@dataclass(frozen=True)
class ExceptionalOrbitEntry:
    family: str
    rank: int
    key: str
    dimension: int
    is_richardson: bool | None = None
    admits_symplectic_resolution: bool | None = None
    polarizations: tuple[tuple[int, ...], ...] | None = None
    springer_degree: int | None = None
    note: str | None = None
    provenance: str | None = None


def _parse_bool(value: str, where: str) -> bool:
    if value == "true":
        return True
    if value == "false":
        return False
    raise TableFormatError(f"{where}: expected true/false, got {value!r}")


def _parse_polarizations(value: str, rank: int):
    marks = []
    for chunk in value.split(";"):
        chunk = chunk.strip()
        if chunk == "full":
            marks.append(tuple(range(1, rank + 1)))
        else:
            m = re.match(r"^\{([0-9,\s]*)\}$", chunk)
            if not m:
                raise TableFormatError(f"bad polarization entry {chunk!r}")
            marks.append(tuple(sorted(int(x) for x in m.group(1).split(","))))
    return tuple(marks)


def _table_text() -> str:
    return resources.files("contactres").joinpath(
        "data/exceptional_orbits.txt").read_text(encoding="utf-8")


@lru_cache(maxsize=1)
def _load_table() -> tuple[str, dict]:
    version = None
    table: dict[tuple[str, int, str], ExceptionalOrbitEntry] = {}
    record: dict[str, str] = {}

    def flush():
        if not record:
            return
        if "orbit" not in record or "dimension" not in record:
            raise TableFormatError(f"record missing orbit/dimension: {record}")
        t = parse_simple_type(record["orbit"].split(":")[0])
        key = record["orbit"].split(":", 1)[1]
        if (t.family, t.rank, key) in table:
            raise TableFormatError(f"duplicate table key {record['orbit']}")
        where = record["orbit"]
        entry = ExceptionalOrbitEntry(
            family=t.family,
            rank=t.rank,
            key=key,
            dimension=int(record["dimension"]),
            is_richardson=(_parse_bool(record["is_richardson"], where)
                           if "is_richardson" in record else None),
            admits_symplectic_resolution=(
                _parse_bool(record["admits_symplectic_resolution"], where)
                if "admits_symplectic_resolution" in record else None),
            polarizations=(_parse_polarizations(record["polarizations"], t.rank)
                           if "polarizations" in record else None),
            springer_degree=(int(record["springer_degree"])
                             if "springer_degree" in record else None),
            note=record.get("note"),
            provenance=record.get("provenance"),
        )
        if entry.dimension % 2 != 0:
            raise TableFormatError(f"{where}: odd orbit dimension")
        if (entry.admits_symplectic_resolution is True
                and entry.polarizations is None):
            # Existence without the witness list would force reports to
            # assert a resolution they cannot enumerate.
            raise TableFormatError(
                f"{where}: admits_symplectic_resolution without polarizations")
        table[(t.family, t.rank, key)] = entry
        record.clear()

    for line in _table_text().splitlines():
        stripped = line.strip()
        if stripped.startswith("#"):
            m = re.match(r"#\s*table_version:\s*(\S+)", stripped)
            if m:
                version = m.group(1)
            continue
        if not stripped:
            flush()
            continue
        if ":" not in stripped:
            raise TableFormatError(f"expected 'key: value', got {line!r}")
        k, v = stripped.split(":", 1)
        record[k.strip()] = v.strip()
    flush()
    if version is None:
        raise TableFormatError("table is missing a table_version header")
    return version, table


def exceptional_table() -> dict:
    return _load_table()[1]


def table_version() -> str:
    return _load_table()[0]


def exceptional_entry(o: OrbitLabel) -> ExceptionalOrbitEntry:
    t = o.simple_type
    try:
        return exceptional_table()[(t.family, t.rank, o.exceptional_key)]
    except KeyError:
        raise UnknownExceptionalKey(str(o)) from None


# --- text grammar -------------------------------------------------------------

_PARTITION_RE = re.compile(r"^[0-9]+(,[0-9]+)*$")


def parse_orbit(text: str) -> OrbitLabel:
    """Parse the orbit grammar: ``"A3:2,1,1"``, ``"G2:dim8"``,
    ``"D4:2,2,2,2/I"``."""
    head, sep, tail = text.partition(":")
    if not sep or not tail:
        raise InvalidPartition(
            f"cannot parse orbit from {text!r}; expected TYPE:parts or TYPE:key")
    t = parse_simple_type(head)
    tag = None
    if "/" in tail:
        tail, tag = tail.split("/", 1)
    if _PARTITION_RE.match(tail.strip()):
        parts = tuple(int(x) for x in tail.split(","))
        return validate_orbit(t, parts, very_even_tag=tag)
    if tag is not None:
        raise InvalidPartition("very-even tag applies only to partitions")
    return validate_orbit(t, tail.strip())
