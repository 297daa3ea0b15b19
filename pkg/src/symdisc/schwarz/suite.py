"""Fixture runs plus randomized property sweeps, aggregated deterministically."""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..automorphism import (DiscAutomorphism, lift_eval, lift_eval_roots, lift_jacobian,
                            random_automorphism, royal_jacobian)
from ..geometry import Direction, Membership, Point, classify
from ..metric import contraction_check, fc_origin, fc_royal, fc_s_axis, fc_sup, fc_sup_alt
from ..sampling import box_points, circle_point, directions, disc_point, interior_points
from .checks import (check_theorem_3_1, check_theorem_3_2, check_theorem_3_3,
                     interior_schwarz_check, self_map_spot_check)
from .families import (random_interior_fixing, random_p_axis_fixing, random_royal_fixing,
                       random_s_axis_fixing, random_self_map)
from .fixtures import check_fixture, fixtures
from .report import TOL_FIRST

DEFAULT_COUNTS = {
    "membership": 2000,
    "metric": 50,
    "automorphism": 50,
    "contraction": 200,
    "s-axis": 20,
    "p-axis": 50,
    "royal": 20,
    "interior": 30,
}
SPOT_SAMPLES = 200
# inequality clauses of the p-axis result; "i" and "iii" are reported separately
P_AXIS_CORE = ("ii-real", "ii", "iv-mu", "iv-f2s", "v-det", "v-tr")


@dataclass
class SuiteResult:
    name: str
    passed: bool
    count: int
    worst: float = 0.0
    failures: list = field(default_factory=list)
    detail: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        from .report import _jsonable

        return _jsonable({"name": self.name, "passed": self.passed, "count": self.count,
                          "worst": self.worst, "failures": self.failures,
                          "detail": self.detail})


def _rel(a: float, b: float) -> float:
    return abs(a - b) / max(1.0, abs(b))


def fixture_results(tol: float = TOL_FIRST, seed: int = 0) -> list[SuiteResult]:
    rng = np.random.default_rng(seed)
    pts = interior_points(rng, SPOT_SAMPLES)
    out = []
    for fx in fixtures():
        rep = check_fixture(fx, tol)
        spot = self_map_spot_check(fx.map, pts)
        failures = [c.id for c in rep.failed()]
        if spot >= 0:
            failures.append("self-map")
        if fx.origin_fixing:
            zero = (0j,) * fx.map.arity.n_in
            if max(abs(w) for w in fx.map.values(zero)) > 1e-10:
                failures.append("origin")
        out.append(SuiteResult(f"fixture:{fx.name}", not failures, len(rep.clauses),
                               spot, failures, {"report": rep.to_dict()}))
    return out


def membership_sweep(rng, n: int) -> SuiteResult:
    bad = []
    for z in box_points(rng, n):
        v = classify(z)
        if v.status is Membership.BOUNDARY:
            continue
        inside = v.status is Membership.INTERIOR
        if any(c != inside for c in v.per_condition.values()):
            bad.append([z.s, z.p])
    return SuiteResult("property:membership", not bad, n, float(len(bad)), bad[:5])


def metric_sweep(rng, n: int) -> SuiteResult:
    worst = 0.0
    for _ in range(n):
        a = disc_point(rng, 0.95)
        xi = Direction(*directions(rng, 1)[0])
        ref = fc_royal(a, xi)
        z = Point(2 * a, a * a)
        worst = max(worst, _rel(fc_sup(z, xi).value, ref), _rel(fc_sup_alt(z, xi).value, ref))
        s = disc_point(rng, 0.95)
        beta = complex(*rng.normal(size=2))
        ref = fc_s_axis(s, beta)
        zs = Point(s, 0)
        d = Direction(beta, s * beta)
        worst = max(worst, _rel(fc_sup(zs, d).value, ref), _rel(fc_sup_alt(zs, d).value, ref))
        v = Direction(*directions(rng, 1)[0])
        worst = max(worst, _rel(fc_sup(Point(0, 0), v).value, fc_origin(v)))
    return SuiteResult("property:metric-closed-forms", worst <= 1e-9, n, worst)


def automorphism_sweep(rng, n: int) -> SuiteResult:
    law = inv = jac = inv_metric = 0.0
    for _ in range(n):
        h1, h2 = random_automorphism(rng, 0.8), random_automorphism(rng, 0.8)
        z = interior_points(rng, 1, 0.9)[0]
        composed = lift_eval(h1.compose(h2), z)
        nested = lift_eval(h1, lift_eval(h2, z))
        law = max(law, abs(composed.s - nested.s), abs(composed.p - nested.p))
        back = lift_eval(h1.inverse(), lift_eval(h1, z))
        inv = max(inv, abs(back.s - z.s), abs(back.p - z.p))
        roots = lift_eval_roots(h1, z)
        law = max(law, abs(roots.s - lift_eval(h1, z).s), abs(roots.p - lift_eval(h1, z).p))
        alpha = disc_point(rng, 0.8)
        ha = DiscAutomorphism(1, alpha)
        jac = max(jac, float(np.abs(lift_jacobian(ha, (2 * alpha, alpha * alpha))
                                    - royal_jacobian(alpha)).max()))
        xi = directions(rng, 1)[0]
        image = lift_eval(h1, z)
        pushed = lift_jacobian(h1, z) @ xi
        inv_metric = max(inv_metric, _rel(fc_sup(image, pushed).value, fc_sup(z, xi).value))
    ok = law <= 1e-10 and inv <= 1e-10 and jac <= 1e-8 and inv_metric <= 1e-8
    return SuiteResult("property:automorphism", ok, n, max(law, inv, jac, inv_metric),
                       detail={"group_law": law, "inverse": inv, "royal_jacobian": jac,
                               "metric_invariance": inv_metric})


def contraction_sweep(rng, n: int) -> SuiteResult:
    gap, bad = -np.inf, []
    for _ in range(n):
        f = random_self_map(rng)
        z = interior_points(rng, 1)[0]
        xi = directions(rng, 1)[0]
        c = contraction_check(f, z, xi)
        gap = max(gap, c.lhs - c.rhs)
        if not c.holds:
            bad.append(f.name)
    return SuiteResult("property:contraction", not bad, n, float(gap), bad[:5])


def _theorem_sweep(name, rng, n, make, check, clause_ids=None) -> SuiteResult:
    worst, bad, other = -np.inf, [], {}
    for _ in range(n):
        f, arg = make(rng)
        rep = check(f, arg)
        for c in rep.clauses:
            if clause_ids is None or c.id in clause_ids:
                worst = max(worst, c.residual - c.tolerance)
                if not c.passed:
                    bad.append(f"{f.name}:{c.id}")
            elif not c.passed:
                other[c.id] = other.get(c.id, 0) + 1
    return SuiteResult(name, not bad, n, float(worst), bad[:5], {"unchecked_failures": other})


def _s_axis(rng):
    th = rng.uniform(0, 2 * np.pi)
    return random_s_axis_fixing(rng, th), th


def _p_axis(rng):
    th = rng.uniform(0, 2 * np.pi)
    return random_p_axis_fixing(rng, th), th


def _royal(rng):
    a = circle_point(rng)
    return random_royal_fixing(rng, a), a


def interior_sweep(rng, n: int) -> SuiteResult:
    worst, bad = -np.inf, []
    for _ in range(n):
        f, z = random_interior_fixing(rng)
        rep = interior_schwarz_check(f, z)
        worst = max(worst, max(c.residual for c in rep.clauses))
        if not rep.overall:
            bad.append(f.name)
    return SuiteResult("property:interior", not bad, n, float(worst), bad[:5])


def property_results(seed: int = 0, counts: dict | None = None) -> list[SuiteResult]:
    counts = {**DEFAULT_COUNTS, **(counts or {})}
    # independent streams so changing one count leaves the others' samples alone
    streams = np.random.SeedSequence(seed).spawn(len(DEFAULT_COUNTS))
    rngs = {k: np.random.default_rng(s) for k, s in zip(sorted(DEFAULT_COUNTS), streams)}
    return [
        membership_sweep(rngs["membership"], counts["membership"]),
        metric_sweep(rngs["metric"], counts["metric"]),
        automorphism_sweep(rngs["automorphism"], counts["automorphism"]),
        contraction_sweep(rngs["contraction"], counts["contraction"]),
        _theorem_sweep("property:s-axis-random", rngs["s-axis"], counts["s-axis"], _s_axis,
                       check_theorem_3_1),
        _theorem_sweep("property:p-axis-random", rngs["p-axis"], counts["p-axis"], _p_axis,
                       check_theorem_3_2, P_AXIS_CORE),
        _theorem_sweep("property:royal-random", rngs["royal"], counts["royal"], _royal,
                       check_theorem_3_3),
        interior_sweep(rngs["interior"], counts["interior"]),
    ]


def run_suite(seed: int = 0, counts: dict | None = None, tol: float = TOL_FIRST,
              include_properties: bool = True) -> list[SuiteResult]:
    """Every fixture and property sweep, sorted by name."""
    results = fixture_results(tol, seed)
    if include_properties:
        results += property_results(seed, counts)
    return sorted(results, key=lambda r: r.name)
