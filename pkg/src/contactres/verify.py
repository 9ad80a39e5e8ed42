"""Verification suites: formula vs independent oracle, row by row.

Each suite replays one family of invariants at configurable caps and
reports one row per case with the formula value, the oracle value, and
an agreement flag. Suites are deterministic given the seed; row order is
fixed by construction.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from . import oracle_lab
from .cones import ample_cone, chamber_complex_for, cone_from_generators, dual_cone
from .errors import UnknownSuite
from .lie_core import SimpleType, parabolic
from .orbits import (
    dual_partition,
    orbit_dimension,
    partitions_of,
    validate_orbit,
)
from .resolutions import compositions_of, polarizations

SUITE_DEFAULTS = {
    "ad-rank": {"max_n": 5},
    "kks": {"max_n": 5},
    "contact": {"max_n": 5},
    "richardson": {"max_n": 6},
    "fibers": {"max_n": 4},
    "chambers": {"max_n": 7},
    "cones": {"count": 100, "max_dim": 4},
}


@dataclass(frozen=True)
class VerifyRow:
    suite: str
    case: str
    formula_value: object
    oracle_value: object
    agrees: bool
    seeds: tuple[str, ...] = ()

    def as_dict(self) -> dict:
        return {
            "suite": self.suite,
            "case": self.case,
            "formula_value": self.formula_value,
            "oracle_value": self.oracle_value,
            "agrees": self.agrees,
            "seeds": list(self.seeds),
        }


def _type_a_orbits(max_n, nonzero=False):
    for n in range(2, max_n + 1):
        t = SimpleType("A", n - 1)
        for part in partitions_of(n):
            if nonzero and all(p == 1 for p in part):
                continue
            yield validate_orbit(t, part)


def _suite_ad_rank(max_n, seed):
    rows = []
    for o in _type_a_orbits(max_n):
        formula = orbit_dimension(o)
        oracle = oracle_lab.addim(oracle_lab.jordan_nilpotent(o.partition))
        rows.append(VerifyRow("ad-rank", str(o), formula, oracle,
                              formula == oracle))
    return rows


def _suite_kks(max_n, seed):
    rows = []
    for o in _type_a_orbits(max_n):
        formula = orbit_dimension(o)
        oracle = oracle_lab.kks_rank(oracle_lab.jordan_nilpotent(o.partition))
        rows.append(VerifyRow("kks", str(o), formula, oracle,
                              formula == oracle))
    return rows


def _suite_contact(max_n, seed):
    rows = []
    for o in _type_a_orbits(max_n, nonzero=True):
        base = oracle_lab.jordan_nilpotent(o.partition)
        d = orbit_dimension(o)
        expected = {"kks_rank": d, "theta_kernel_dim": d - 1,
                    "omega_rank_on_kernel": d - 2,
                    "radical_is_euler_line": True}
        models = [("jordan form", None, base)]
        for trial in range(3):
            conj_seed = seed * 1000 + trial
            models.append((f"conjugate[{conj_seed}]", f"{conj_seed}:conj",
                           oracle_lab.random_conjugate(base, conj_seed)))
        for tag, seed_string, model in models:
            res = oracle_lab.contact_check(model)
            observed = {"kks_rank": oracle_lab.kks_rank(model),
                        "theta_kernel_dim": res.theta_kernel_dim,
                        "omega_rank_on_kernel": res.omega_rank_on_kernel,
                        "radical_is_euler_line": res.radical_is_euler_line}
            rows.append(VerifyRow(
                "contact", f"{o} {tag}", expected, observed,
                expected == observed,
                seeds=(seed_string,) if seed_string else ()))
    return rows


def _suite_richardson(max_n, seed):
    rows = []
    for n in range(1, max_n + 1):
        for comp in compositions_of(n):
            formula = dual_partition(tuple(sorted(comp, reverse=True)))
            oracle = oracle_lab.generic_jordan_type(comp, seed=seed)
            rows.append(VerifyRow(
                "richardson", f"composition {comp}",
                list(formula), list(oracle), formula == oracle,
                seeds=tuple(oracle_lab.trial_seeds(seed))))
    return rows


def _suite_fibers(max_n, seed):
    rows = []
    for n in range(1, max_n + 1):
        for comp in compositions_of(n):
            count = oracle_lab.generic_fiber_count(comp, seed=seed)
            rows.append(VerifyRow(
                "fibers", f"composition {comp}", 1, count, count == 1,
                seeds=tuple(oracle_lab.trial_seeds(seed))))
    return rows


def _expected_chamber_count(part) -> int:
    dual = dual_partition(part)
    mult: dict[int, int] = {}
    for p in dual:
        mult[p] = mult.get(p, 0) + 1
    count = math.factorial(len(dual))
    for m in mult.values():
        count //= math.factorial(m)
    return count


def _suite_chambers(max_n, seed):
    rows = []
    for o in _type_a_orbits(max_n, nonzero=True):
        expected = {"count": _expected_chamber_count(o.partition),
                    "connected": True, "degree_rule": True}
        cc = chamber_complex_for(o, polarizations(o))
        degree_rule = all(
            cc.degree(ch.composition) == sum(
                1 for i in range(len(ch.composition) - 1)
                if ch.composition[i] != ch.composition[i + 1])
            for ch in cc.chambers)
        observed = {"count": cc.chamber_count,
                    "connected": cc.is_connected,
                    "degree_rule": degree_rule}
        rows.append(VerifyRow("chambers", str(o), expected, observed,
                              expected == observed))
    return rows


_AMPLE_CONE_PARABOLICS = [
    ("A", 1, (1,)), ("A", 3, (1,)), ("A", 3, (1, 3)), ("A", 3, (1, 2, 3)),
    ("A", 4, (2, 4)), ("B", 2, (1,)), ("B", 3, (1, 3)), ("C", 3, (2,)),
    ("D", 4, (1, 3, 4)), ("F", 4, (1, 2, 3, 4)), ("G", 2, (1, 2)),
]


def _suite_cones(count, max_dim, seed):
    rows = []
    rng = random.Random(f"cones:{seed}")
    for i in range(count):
        dim = rng.randint(1, max_dim)
        m = rng.randint(1, dim + 3)
        gens = [tuple(rng.randint(-5, 5) for _ in range(dim))
                for _ in range(m)]
        cone = cone_from_generators(dim, gens)
        # generators -> facets -> generators: the facet normals cut out
        # the dual of the cone they generate
        from_facets = dual_cone(cone_from_generators(dim, cone.facet_normals))
        roundtrip_ok = from_facets == cone
        involution_ok = dual_cone(dual_cone(cone)) == cone
        rows.append(VerifyRow(
            "cones", f"random cone {i} dim {dim} gens {sorted(gens)}",
            {"roundtrip": True, "dual_involution": True},
            {"roundtrip": roundtrip_ok, "dual_involution": involution_ok},
            roundtrip_ok and involution_ok,
            seeds=(f"cones:{seed}",)))
    for fam, rank_, marks in _AMPLE_CONE_PARABOLICS:
        p = parabolic(SimpleType(fam, rank_), marks)
        cone = ample_cone(p)
        ok = cone.is_simplicial and len(cone.extreme_rays) == len(marks)
        rows.append(VerifyRow(
            "cones", f"ample cone {p}",
            {"simplicial": True, "rays": len(marks)},
            {"simplicial": cone.is_simplicial,
             "rays": len(cone.extreme_rays)},
            ok))
    return rows


_RUNNERS = {
    "ad-rank": lambda max_n, seed, count, max_dim: _suite_ad_rank(max_n, seed),
    "kks": lambda max_n, seed, count, max_dim: _suite_kks(max_n, seed),
    "contact": lambda max_n, seed, count, max_dim: _suite_contact(max_n, seed),
    "richardson": lambda max_n, seed, count, max_dim:
        _suite_richardson(max_n, seed),
    "fibers": lambda max_n, seed, count, max_dim: _suite_fibers(max_n, seed),
    "chambers": lambda max_n, seed, count, max_dim:
        _suite_chambers(max_n, seed),
    "cones": lambda max_n, seed, count, max_dim:
        _suite_cones(count, max_dim, seed),
}


def suite_names() -> tuple[str, ...]:
    return tuple(SUITE_DEFAULTS)


def run_suite(name: str, max_n: int | None = None, seed: int = 0,
              count: int | None = None,
              max_dim: int | None = None) -> list[VerifyRow]:
    """Run one named suite; None caps fall back to the suite defaults."""
    if name not in SUITE_DEFAULTS:
        raise UnknownSuite(
            f"unknown suite {name!r}; known: {', '.join(SUITE_DEFAULTS)}")
    defaults = SUITE_DEFAULTS[name]
    return _RUNNERS[name](
        max_n if max_n is not None else defaults.get("max_n"),
        seed,
        count if count is not None else defaults.get("count"),
        max_dim if max_dim is not None else defaults.get("max_dim"),
    )
