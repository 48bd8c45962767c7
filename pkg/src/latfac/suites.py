"""Exhaustive theorem-verification suites behind the ``verify`` CLI verb.

Each suite enumerates a universe of structures on one lattice, runs the
corresponding invariants, and reports per-check pass/fail with a witness for
any failure.  Reports are plain data so the CLI can render them as text or
JSON deterministically.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Callable

from .bijections import (
    enumerate_closure_operators,
    enumerate_interior_operators,
    enumerate_submonoids,
    fac_to_submonoid,
    galois_check,
    is_comonad,
    is_model_structure,
    is_monad,
    make_cofibrant,
    make_fibrant,
    maximal_fs,
    minimal_fs,
    submonoid_to_fac,
    weak_composite,
)
from .counting import count_saturated_grid, poly_bernoulli
from .errors import BadParams
from .factorization import (
    dual_fs,
    enumerate_fac,
    from_transfer,
    is_coreflective,
    is_reflective,
    to_transfer,
    validate_fs,
)
from .lattice import Lattice, dual_lattice, make_standard
from .operators import (
    characteristic,
    classify,
    closure_from_submonoid,
    cocharacteristic,
    enumerate_monotone_endos,
    fiber,
    fixed_points,
    interior_from_submonoid,
    verify_duality,
)
from .relations import three_for_two
from .transfer import (
    DEFAULT_MAX_STRUCTURES,
    cover_of,
    enumerate_saturated,
    enumerate_saturated_covers,
    enumerate_transfer,
    is_disklike,
    is_saturated,
    ts_of,
)
from .util import pmap

SUITE_NAMES = (
    "fooqw",
    "fibers",
    "refdisk",
    "satdisk-duality",
    "matchstick",
    "clsubmon",
    "submonoid",
    "monad",
    "model",
    "polybernoulli",
)

GALOIS_SUBSET_CAP = 12  # 2^n subsets; keep the exhaustive sweep desk-sized
MONAD_ENDO_CAP = 200_000


@dataclass
class SuiteReport:
    suite: str
    target: str
    sizes: dict[str, int] = field(default_factory=dict)
    checks: list[dict[str, Any]] = field(default_factory=list)

    def record(self, name: str, ok: bool, witness: Any = None) -> None:
        entry: dict[str, Any] = {"name": name, "passed": bool(ok)}
        if not ok and witness is not None:
            entry["witness"] = witness
        self.checks.append(entry)

    @property
    def passed(self) -> bool:
        return all(c["passed"] for c in self.checks)

    def as_dict(self) -> dict:
        return {
            "suite": self.suite,
            "target": self.target,
            "sizes": self.sizes,
            "checks": self.checks,
            "passed": self.passed,
        }


def _describe(lattice: Lattice) -> str:
    return f"lattice[{lattice.n}: {' '.join(lattice.labels)}]"


def _suite_fooqw(lattice: Lattice, limit: int, threads: int) -> SuiteReport:
    """Round-trip and order properties of the transfer <-> factorization maps."""
    report = SuiteReport("fooqw", _describe(lattice))
    systems = enumerate_transfer(lattice, limit=limit)
    report.sizes["transfer"] = len(systems)
    facs = [from_transfer(s) for s in systems]
    bad = [s.pairs for s, f in zip(systems, facs) if to_transfer(f).rel != s.rel]
    report.record("roundtrip-identity", not bad, bad[:1])
    verdicts = pmap(lambda f: validate_fs(lattice, f.left, f.right.relation), facs, threads)
    bad = [str(v) for v in verdicts if v is not True]
    report.record("results-validate", not bad, bad[:1])
    if len(systems) <= 200:
        # containment of right classes must mirror reverse containment on the left
        order_ok = all(
            (a.rel | b.rel == b.rel)
            == (fb.left.mask | fa.left.mask == fa.left.mask)
            for (a, fa), (b, fb) in combinations(zip(systems, facs), 2)
        )
        report.record("order-preserving", order_ok)
    return report


def _suite_fibers(lattice: Lattice, limit: int, threads: int) -> SuiteReport:
    """Operator images and interval fibers of the two assignments."""
    report = SuiteReport("fibers", _describe(lattice))
    facs = enumerate_fac(lattice, limit=limit)
    report.sizes["fac"] = len(facs)
    closure_ops = enumerate_closure_operators(lattice, limit=limit)
    interior_ops = enumerate_interior_operators(lattice, limit=limit)
    report.sizes["closure"] = len(closure_ops)
    report.sizes["interior"] = len(interior_ops)

    lam_tables = pmap(lambda f: cocharacteristic(f, cross_check=True).table, facs, threads)
    chi_tables = pmap(lambda f: characteristic(f, cross_check=True).table, facs, threads)
    report.record(
        "lambda-image-is-closure-operators",
        set(lam_tables) == {op.table for op in closure_ops},
    )
    report.record(
        "chi-image-is-interior-operators",
        set(chi_tables) == {op.table for op in interior_ops},
    )

    lam_fibers = [
        fiber(lattice, "lambda", op, systems=facs) for op in closure_ops
    ]
    chi_fibers = [
        fiber(lattice, "chi", op, systems=facs) for op in interior_ops
    ]
    report.sizes["lambda-fibers"] = len(lam_fibers)
    report.sizes["chi-fibers"] = len(chi_fibers)
    bad = [f.operator.table for f in lam_fibers + chi_fibers if not f.is_interval]
    report.record("fibers-are-intervals", not bad, bad[:1])
    lam_minima = {f.lower.key for f in lam_fibers}
    reflective = {f.key for f in facs if is_reflective(f)}
    report.record("lambda-minima-are-reflective", lam_minima == reflective)
    chi_maxima = {f.upper.key for f in chi_fibers}
    coreflective = {f.key for f in facs if is_coreflective(f)}
    report.record("chi-maxima-are-coreflective", chi_maxima == coreflective)
    duality = pmap(verify_duality, facs, threads)
    report.record("chi-lambda-mirror-duality", all(duality))
    return report


def _suite_refdisk(lattice: Lattice, limit: int, threads: int) -> SuiteReport:
    """(Co)reflectivity matches disklike/saturated right classes, system by system."""
    report = SuiteReport("refdisk", _describe(lattice))
    facs = enumerate_fac(lattice, limit=limit)
    report.sizes["fac"] = len(facs)
    bad = [
        f.right.pairs
        for f in facs
        if is_reflective(f) != is_disklike(f.right)
    ]
    report.record("reflective-iff-disklike", not bad, bad[:1])
    bad = [
        f.right.pairs
        for f in facs
        if is_coreflective(f) != is_saturated(f.right)
    ]
    report.record("coreflective-iff-saturated", not bad, bad[:1])
    return report


def _suite_satdisk(lattice: Lattice, limit: int, threads: int) -> SuiteReport:
    """Saturated systems mirror to disklike systems on the order-reversed lattice."""
    report = SuiteReport("satdisk-duality", _describe(lattice))
    mirror = dual_lattice(lattice)
    saturated = enumerate_saturated(lattice, limit=limit)
    disk_mirror = {
        s.rel for s in enumerate_transfer(mirror, limit=limit) if is_disklike(s)
    }
    report.sizes["saturated"] = len(saturated)
    report.sizes["disklike-on-dual"] = len(disk_mirror)
    report.record("counts-agree", len(saturated) == len(disk_mirror))
    mapped = {dual_fs(from_transfer(s)).right.rel for s in saturated}
    report.record("mirror-map-is-bijection", mapped == disk_mirror)
    return report


def _suite_matchstick(lattice: Lattice, limit: int, threads: int) -> SuiteReport:
    """Saturated systems versus saturated covers, both round trips."""
    report = SuiteReport("matchstick", _describe(lattice))
    systems = enumerate_saturated(lattice, limit=limit)
    covers = enumerate_saturated_covers(lattice, limit=limit)
    report.sizes["saturated"] = len(systems)
    report.sizes["saturated-covers"] = len(covers)
    report.record("counts-agree", len(systems) == len(covers))
    system_covers = pmap(lambda s: cover_of(s).covers, systems, threads)
    report.record(
        "cover-sets-coincide", set(system_covers) == {q.covers for q in covers}
    )
    bad = [
        s.pairs
        for s, q in zip(systems, system_covers)
        if ts_of(cover_of(s)).rel != s.rel
    ]
    report.record("system-roundtrip-identity", not bad, bad[:1])
    bad = [q.pairs for q in covers if cover_of(ts_of(q)).covers != q.covers]
    report.record("cover-roundtrip-identity", not bad, bad[:1])
    return report


def _suite_clsubmon(lattice: Lattice, limit: int, threads: int) -> SuiteReport:
    """Closure/interior operators versus their fixed-point submonoids."""
    report = SuiteReport("clsubmon", _describe(lattice))
    meet_subs = enumerate_submonoids(lattice, "meet", limit=limit)
    join_subs = enumerate_submonoids(lattice, "join", limit=limit)
    report.sizes["submonoid-meet"] = len(meet_subs)
    report.sizes["submonoid-join"] = len(join_subs)
    closure_ops = [closure_from_submonoid(lattice, s.members) for s in meet_subs]
    ok = all(classify(c).is_closure for c in closure_ops)
    report.record("submonoids-give-closure-operators", ok)
    ok = all(
        fixed_points(c) == s.members for c, s in zip(closure_ops, meet_subs)
    )
    report.record("closure-fixed-points-roundtrip", ok)
    interior_ops = [interior_from_submonoid(lattice, s.members) for s in join_subs]
    ok = all(classify(i).is_interior for i in interior_ops)
    report.record("submonoids-give-interior-operators", ok)
    ok = all(
        fixed_points(i) == s.members for i, s in zip(interior_ops, join_subs)
    )
    report.record("interior-fixed-points-roundtrip", ok)
    report.record(
        "distinct-operators", len({c.table for c in closure_ops}) == len(meet_subs)
        and len({i.table for i in interior_ops}) == len(join_subs),
    )
    return report


def _suite_submonoid(lattice: Lattice, limit: int, threads: int) -> SuiteReport:
    """Reflective/coreflective systems versus submonoids, plus the adjunction."""
    report = SuiteReport("submonoid", _describe(lattice))
    facs = enumerate_fac(lattice, limit=limit)
    reflective = [f for f in facs if is_reflective(f)]
    coreflective = [f for f in facs if is_coreflective(f)]
    meet_subs = enumerate_submonoids(lattice, "meet", limit=limit)
    join_subs = enumerate_submonoids(lattice, "join", limit=limit)
    report.sizes["reflective"] = len(reflective)
    report.sizes["coreflective"] = len(coreflective)
    report.sizes["submonoid-meet"] = len(meet_subs)
    report.sizes["submonoid-join"] = len(join_subs)

    mapped = {fac_to_submonoid(f, "reflective").members for f in reflective}
    report.record(
        "reflective-submonoid-bijection",
        mapped == {s.members for s in meet_subs}
        and len(mapped) == len(reflective),
    )
    bad = [
        sorted(s.members)
        for s in meet_subs
        if fac_to_submonoid(submonoid_to_fac(s), "reflective").members != s.members
    ]
    report.record("meet-roundtrip-identity", not bad, bad[:1])
    mapped = {fac_to_submonoid(f, "coreflective").members for f in coreflective}
    report.record(
        "coreflective-submonoid-bijection",
        mapped == {s.members for s in join_subs}
        and len(mapped) == len(coreflective),
    )
    bad = [
        sorted(s.members)
        for s in join_subs
        if fac_to_submonoid(submonoid_to_fac(s), "coreflective").members != s.members
    ]
    report.record("join-roundtrip-identity", not bad, bad[:1])

    if lattice.n <= GALOIS_SUBSET_CAP:
        subsets = [
            frozenset(c)
            for r in range(lattice.n + 1)
            for c in combinations(range(lattice.n), r)
        ]
        checks = pmap(
            lambda f: all(galois_check(lattice, s, f) for s in subsets),
            facs,
            threads,
        )
        report.sizes["galois-pairs"] = len(subsets) * len(facs)
        report.record("galois-adjunction", all(checks))
    return report


def _suite_monad(lattice: Lattice, limit: int, threads: int) -> SuiteReport:
    """Monads are exactly closure operators, comonads interior operators."""
    report = SuiteReport("monad", _describe(lattice))
    endos = enumerate_monotone_endos(lattice, limit=min(limit, MONAD_ENDO_CAP))
    report.sizes["monotone-endos"] = len(endos)
    monads = {e.table for e in endos if is_monad(lattice, e)}
    closures = {e.table for e in endos if classify(e).is_closure}
    report.record("monads-are-closure-operators", monads == closures)
    comonads = {e.table for e in endos if is_comonad(lattice, e)}
    interiors = {e.table for e in endos if classify(e).is_interior}
    report.record("comonads-are-interior-operators", comonads == interiors)
    by_submonoid = {op.table for op in enumerate_closure_operators(lattice)}
    report.record("monads-match-submonoid-route", monads == by_submonoid)
    return report


def _suite_model(lattice: Lattice, limit: int, threads: int) -> SuiteReport:
    """Fibrant/cofibrant model structures versus (co)reflective systems."""
    report = SuiteReport("model", _describe(lattice))
    facs = enumerate_fac(lattice, limit=limit)
    coreflective = [f for f in facs if is_coreflective(f)]
    reflective = [f for f in facs if is_reflective(f)]
    report.sizes["fac"] = len(facs)
    report.sizes["coreflective"] = len(coreflective)
    report.sizes["reflective"] = len(reflective)

    fibrant = [make_fibrant(f) for f in coreflective]
    report.record("fibrant-models-validate", all(is_model_structure(m) for m in fibrant))
    report.record(
        "fibrant-recovers-system",
        all(m.lower.key == f.key for m, f in zip(fibrant, coreflective)),
    )
    top_fs = maximal_fs(lattice)
    candidates = [
        f for f in facs if three_for_two(lattice, weak_composite(f, top_fs))
    ]
    report.record(
        "fibrant-universe-is-coreflective",
        {f.key for f in candidates} == {f.key for f in coreflective},
    )
    cofibrant = [make_cofibrant(f) for f in reflective]
    report.record(
        "cofibrant-models-validate", all(is_model_structure(m) for m in cofibrant)
    )
    bottom_fs = minimal_fs(lattice)
    candidates = [
        f for f in facs if three_for_two(lattice, weak_composite(bottom_fs, f))
    ]
    report.record(
        "cofibrant-universe-is-reflective",
        {f.key for f in candidates} == {f.key for f in reflective},
    )
    return report


def _suite_polybernoulli(m: int, n: int, limit: int, threads: int) -> SuiteReport:
    """Half poly-Bernoulli formula versus enumeration on one grid."""
    report = SuiteReport("polybernoulli", f"grid({m},{n})")
    formula = count_saturated_grid(m, n)
    lattice = make_standard("grid", m, n)
    saturated = len(enumerate_saturated(lattice, limit=limit))
    join_subs = len(enumerate_submonoids(lattice, "join", limit=limit))
    report.sizes["poly-bernoulli"] = poly_bernoulli(m + 1, n + 1)
    report.sizes["formula"] = formula
    report.sizes["saturated"] = saturated
    report.sizes["submonoid-join"] = join_subs
    report.record(
        "formula-matches-enumeration", formula == saturated == join_subs,
        {"formula": formula, "saturated": saturated, "submonoid-join": join_subs},
    )
    return report


_LATTICE_SUITES: dict[str, Callable[[Lattice, int, int], SuiteReport]] = {
    "fooqw": _suite_fooqw,
    "fibers": _suite_fibers,
    "refdisk": _suite_refdisk,
    "satdisk-duality": _suite_satdisk,
    "matchstick": _suite_matchstick,
    "clsubmon": _suite_clsubmon,
    "submonoid": _suite_submonoid,
    "monad": _suite_monad,
    "model": _suite_model,
}


def verify_suite(
    name: str,
    lattice: Lattice | None = None,
    *,
    m: int | None = None,
    n: int | None = None,
    limit: int = DEFAULT_MAX_STRUCTURES,
    threads: int = 1,
) -> SuiteReport:
    """Run one named verification suite and return its report."""
    if name == "polybernoulli":
        if m is None or n is None:
            raise BadParams("polybernoulli needs grid dimensions m and n")
        return _suite_polybernoulli(m, n, limit, threads)
    if name not in _LATTICE_SUITES:
        raise BadParams(f"unknown suite {name!r}; choose from {', '.join(SUITE_NAMES)}")
    if lattice is None:
        raise BadParams(f"suite {name!r} needs a lattice")
    return _LATTICE_SUITES[name](lattice, limit, threads)
