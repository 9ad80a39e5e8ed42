"""JSON-ready dictionaries for every answer object.

One function per object; the CLI and the test suite both go through
these, so text and JSON renderings can never drift apart. Everything
returned is plain JSON types with deterministic key order left to the
serializer.
"""

from __future__ import annotations

from fractions import Fraction

from .cones import ChamberComplex, RationalCone
from .orbits import OrbitRecord
from .resolutions import OracleCheck, Polarization, ResolutionReport


def _num(x):
    if isinstance(x, Fraction):
        if x.denominator == 1:
            return int(x)
        return {"numerator": x.numerator, "denominator": x.denominator}
    return x


def orbit_record_dict(rec: OrbitRecord) -> dict:
    label = rec.label
    return {
        "orbit": str(label),
        "simple_type": str(label.simple_type),
        "partition": list(label.partition) if label.partition else None,
        "exceptional_key": label.exceptional_key,
        "very_even_tag": label.very_even_tag,
        "dimension": rec.dim_orbit,
        "is_minimal": rec.is_minimal,
        "is_zero": rec.is_zero,
        "contact_n": rec.contact_n,
        "proj_normalization_smooth": rec.proj_normalization_smooth,
        "singularity_flags": rec.singularity_flags,
    }


def polarization_dict(pol: Polarization) -> dict:
    comp = pol.composition
    return {
        "composition": list(comp) if comp is not None else None,
        "marked_roots": list(pol.parabolic.marked),
        "flag_dimension": pol.flag_dimension,
        "springer_degree": pol.springer_degree,
        "is_birational": pol.is_birational,
    }


def cone_dict(c: RationalCone) -> dict:
    return {
        "ambient_dim": c.ambient_dim,
        "extreme_rays": [list(r) for r in c.extreme_rays],
        "lineality_basis": [list(r) for r in c.lineality_basis],
    }


def chamber_complex_dict(cc: ChamberComplex | None) -> dict | None:
    if cc is None:
        return None
    return {
        "chamber_count": cc.chamber_count,
        "chambers": [
            {
                "label": list(ch.label),
                "composition": list(ch.composition)
                               if ch.composition is not None else None,
                "marked_roots": list(ch.marked_roots),
                "ample_cone": cone_dict(ch.ample),
            }
            for ch in cc.chambers
        ],
        "walls": [
            {
                "chamber_a": list(w.chamber_a),
                "chamber_b": list(w.chamber_b),
                "position": w.position,
                "entries": list(w.entries),
            }
            for w in cc.walls
        ],
        "connected": cc.is_connected,
    }


def oracle_check_dict(check: OracleCheck) -> dict:
    return {
        "oracle_name": check.oracle,
        "inputs": check.inputs,
        "seeds": list(check.seeds),
        "value": _num(check.value),
        "formula_value": _num(check.formula_value),
        "agrees_with_formula": check.agrees_with_formula,
    }


def resolution_report_dict(r: ResolutionReport) -> dict:
    return {
        "orbit": orbit_record_dict(r.orbit),
        "verdict": r.verdict,
        "reason": r.reason,
        "resolution_exists": r.resolution_exists,
        "crepant_equals_contact_equals_minimal":
            r.crepant_equals_contact_equals_minimal,
        "canonical_bundle_exponent": r.canonical_bundle_exponent,
        "affine_closure_admits_symplectic_resolution":
            r.affine_closure_admits_symplectic_resolution,
        "polarizations": [polarization_dict(p) for p in r.polarizations],
        "chamber_complex": chamber_complex_dict(r.chamber_complex),
        "oracle_checks": [oracle_check_dict(c) for c in r.oracle_checks],
        "notes": list(r.notes),
    }
