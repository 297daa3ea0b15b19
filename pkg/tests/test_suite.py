import json

import numpy as np

from symdisc.schwarz.suite import (DEFAULT_COUNTS, contraction_sweep, membership_sweep,
                                   property_results, run_suite)

QUICK = {k: max(1, v // 10) for k, v in DEFAULT_COUNTS.items()}


def test_quick_suite_passes_for_two_seeds():
    for seed in (0, 7):
        results = run_suite(seed, QUICK)
        assert [r.name for r in results] == sorted(r.name for r in results)
        assert all(r.passed for r in results), [r.name for r in results if not r.passed]


def test_suite_is_deterministic():
    a = [r.to_dict() for r in run_suite(3, QUICK)]
    b = [r.to_dict() for r in run_suite(3, QUICK)]
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)


def test_sweeps_use_independent_streams():
    # changing one count must leave the other sweeps' samples alone
    a = {r.name: r.worst for r in property_results(1, QUICK)}
    b = {r.name: r.worst for r in property_results(1, {**QUICK, "membership": 50})}
    a.pop("property:membership"), b.pop("property:membership")
    assert a == b


def test_individual_sweeps():
    rng = np.random.default_rng(0)
    assert membership_sweep(rng, 500).passed
    res = contraction_sweep(rng, 20)
    assert res.passed and res.worst <= 1e-8


def test_results_serialize_to_json():
    for r in run_suite(0, QUICK, include_properties=False):
        json.dumps(r.to_dict(), allow_nan=False)
