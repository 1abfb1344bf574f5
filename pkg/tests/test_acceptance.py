"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

Run alone with ``pytest tests/test_acceptance.py -v``. Criteria that the
implementation cannot meet are left failing, not relaxed.
"""

import time
from collections import Counter
from math import comb

import pytest

from tangentcone.bresinsky import check_restrictions, solve_structure
from tangentcone.errors import (
    CompleteIntersection,
    GcdNotOne,
    NotMinimallyGenerated,
    NotSymmetric,
    PipelineRejection,
    UnsupportedCase,
)
from tangentcone.hilbert import compare_with_oracle, hf_from_resolution
from tangentcone.pipeline import STATUS_OK, STATUS_REJECTED, analyze, distinct_families, sweep
from tangentcone.polyalg import all_minors_vanish, parse_poly
from tangentcone.resolution import verify_complex, verify_ranks
from tangentcone.semigroup import NumericalSemigroup

BETTI_TABLE = {
    "1a": {1: (1, 5, 6, 2), 2: (1, 5, 6, 2)},
    "1b": {1: (1, 5, 6, 2), 2: (1, 5, 6, 2), 3: (1, 5, 5, 1), 4: (1, 5, 5, 1)},
    "2b": {1: (1, 5, 6, 2), 2: (1, 5, 6, 2), 3: (1, 5, 5, 1), 4: (1, 5, 5, 1)},
    "3a": {v: (1, 5, 6, 2) for v in (1, 2, 3, 4)},
}


def report(capsys, n, ok, detail):
    with capsys.disabled():
        print(f"\nCRITERION {n}: {'PASS' if ok else 'FAIL'} - {detail}", flush=True)


@pytest.fixture(scope="module")
def sweep3():
    t0 = time.perf_counter()
    res = sweep(3, workers=1)
    return res, time.perf_counter() - t0


def supported(res):
    return [r for r in res.records if r.status != STATUS_REJECTED]


def test_criterion_1_betti_dichotomy(capsys, sweep3):
    res, elapsed = sweep3
    fams = supported(res)
    wrong = [r.generators for r in fams if r.betti != BETTI_TABLE[r.case][r.variant]
             or r.betti not in ((1, 5, 6, 2), (1, 5, 5, 1))]
    counts = Counter(f"{r.case}/v{r.variant}" for r in fams)
    ok = len(fams) >= 50 and not wrong and elapsed < 60
    report(capsys, 1, ok, f"{len(fams)} supported families (target >= 50), {len(wrong)} Betti exceptions, "
                          f"{elapsed:.2f}s; by variant {dict(sorted(counts.items()))}")
    assert not wrong
    assert elapsed < 60
    assert len(fams) >= 50, f"only {len(fams)} distinct supported families at alpha_max 3"


def test_criterion_2_exactness_certificate(capsys, sweep3):
    res, _ = sweep3
    bad = []
    for r in supported(res):
        v = r.verification
        top = all_minors_vanish(r.resolution.phi2, 5)
        if not (v.complex_ok and v.rank_ok and top and v.witnesses_ok):
            why = [k for k in ("complex_ok", "rank_ok", "witnesses_ok") if not getattr(v, k)]
            bad.append((r.generators, f"{r.case}/v{r.variant}", why or ["top minors"]))
    n = len(supported(res))
    report(capsys, 2, not bad, f"{n - len(bad)}/{n} families certified with the stated witnesses; failures {bad}")
    assert not bad


def test_criterion_3_minimality(capsys, sweep3):
    res, _ = sweep3
    bad = [r.generators for r in supported(res) if not r.verification.minimal_ok]
    report(capsys, 3, not bad, f"{len(supported(res)) - len(bad)}/{len(supported(res))} minimal")
    assert not bad


def test_criterion_4_hilbert_cross_validation(capsys, sweep3):
    res, _ = sweep3
    bad = []
    for r in supported(res):
        h = r.hilbert
        bound = max(abs(t) for ts in r.resolution.twists for t in ts) + 4
        if not (h.equal and h.bound >= bound):
            bad.append(r.generators)
    report(capsys, 4, not bad, f"{len(supported(res)) - len(bad)}/{len(supported(res))} exact matches with the oracle")
    assert not bad


def test_criterion_5_nondecreasing(capsys, sweep3):
    res, _ = sweep3
    bad = [r.generators for r in supported(res) if not r.hilbert.nondecreasing]
    report(capsys, 5, not bad, f"{len(supported(res)) - len(bad)}/{len(supported(res))} non-decreasing")
    assert not bad


def test_criterion_6_golden_example(capsys):
    t0 = time.perf_counter()
    rec = analyze((5, 6, 7, 8), upto=20)
    elapsed = time.perf_counter() - t0
    expected_tc = [parse_poly(s) for s in ("x3*x4", "x2^2 - x1*x3", "x3^2 - x2*x4", "x4^2", "x2*x3 - x1*x4")]
    series = [sum(c * comb(i - k + 3, 3) for k, c in enumerate([1, 0, -5, 5, 0, -1]) if i >= k) for i in range(21)]
    checks = {
        "case/variant": (rec.case, rec.variant) == ("1b", 4),
        "tangent cone": list(rec.tangent_cone.generators) == expected_tc,
        "betti": rec.betti == (1, 5, 5, 1),
        "twists": rec.resolution.twists == ((0,), (-2,) * 5, (-3,) * 5, (-5,)),
        "hilbert": rec.hilbert.values == [1, 4] + [5] * 19 == rec.hilbert.oracle_values == series,
        "homogeneous type": rec.homogeneous_type is True,
        "verified": rec.status == STATUS_OK,
        "time": elapsed < 1.0,
    }
    failed = [k for k, v in checks.items() if not v]
    report(capsys, 6, not failed, f"{elapsed * 1000:.1f} ms; failed checks {failed}")
    assert not failed


def closed_form_hf(a, i):
    """The fourteen-term closed form for case 1a variant 1, typed in by hand."""
    def C(m):
        return comb(m, 3) if m >= 3 else 0
    return (C(i + 3)
            - C(i - a["a13"] - a["a14"] + 3) - C(i - a["a2"] + 3) - C(i - a["a3"] + 3)
            - C(i - a["a4"] + 3) - C(i - a["a32"] - a["a14"] + 3) + C(i - a["a3"] - a["a14"] + 3)
            + C(i - a["a2"] - a["a3"] + 3) + C(i - a["a4"] - a["a13"] + 3)
            + C(i - a["a32"] - a["a13"] - a["a14"] + 3)
            + C(i - a["a32"] - a["a4"] + 3) + C(i - a["a14"] - a["a2"] + 3)
            - C(i - a["a2"] - a["a3"] - a["a14"] + 3)
            - C(i - a["a4"] - a["a13"] - a["a32"] + 3))


def test_criterion_7_case_1a_closed_forms(capsys):
    # no case 1a family exists at alpha_max 3 or 4 with a strict f2 restriction,
    # so the search widens until one appears
    found = None
    for bound in (3, 4, 5):
        gens, _, _ = distinct_families(bound)
        for g in gens:
            try:
                d = solve_structure(NumericalSemigroup(g))
                rep = check_restrictions(d)
            except PipelineRejection:
                continue
            if d.case == "1a" and not rep.equalities():
                found = (bound, g)
                break
        if found:
            break
    assert found, "no case 1a variant 1 family in the sweep"
    bound, g = found
    rec = analyze(g)
    a = rec.structure.env()
    deg1 = [a["a13"] + a["a14"], a["a2"], a["a3"], a["a4"], a["a32"] + a["a14"]]
    deg2 = [a["a3"] + a["a14"], a["a2"] + a["a3"], a["a4"] + a["a13"],
            a["a32"] + a["a13"] + a["a14"], a["a32"] + a["a4"], a["a14"] + a["a2"]]
    deg3 = [a["a2"] + a["a3"] + a["a14"], a["a4"] + a["a13"] + a["a32"]]
    tw = rec.resolution.twists
    twists_ok = (list(tw[1]) == [-x for x in deg1]
                 and Counter(tw[2]) == Counter(-x for x in deg2)
                 and Counter(tw[3]) == Counter(-x for x in deg3))
    hf_ok = all(closed_form_hf(a, i) == hf_from_resolution(rec.resolution, i) for i in range(31))
    oracle_ok = compare_with_oracle(rec.resolution, NumericalSemigroup(g), 30).equal
    ok = rec.variant == 1 and twists_ok and hf_ok
    report(capsys, 7, ok, f"family {g} (alpha_max {bound}): twists {twists_ok}, closed form {hf_ok}, "
                          f"oracle {oracle_ok}")
    assert ok and oracle_ok


def test_criterion_8_mutation_sensitivity(capsys):
    rec = analyze((5, 6, 7, 8))
    r = rec.resolution
    positions = r.phi2.nonzero_positions()
    caught = 0
    for i, j in positions:
        bad = r.with_matrix(2, r.phi2.replace(i, j, -r.phi2[i, j]))
        if not verify_complex(bad) or not verify_ranks(bad):
            caught += 1
    rate = caught / len(positions)
    report(capsys, 8, rate >= 0.95, f"{caught}/{len(positions)} single sign flips detected ({rate:.0%})")
    assert rate >= 0.95


REJECTIONS = [
    ((4, 5, 6, 7), NotSymmetric),
    ((5, 6, 7, 18), NotMinimallyGenerated),
    ((2, 4, 6, 8), GcdNotOne),
    ((8, 9, 10, 12), CompleteIntersection),
    ((6, 7, 10, 11), UnsupportedCase),
    ((10, 11, 18, 26), UnsupportedCase),
]


def test_criterion_9_rejections(capsys):
    got = {}
    for gens, exc in REJECTIONS:
        got[gens] = (analyze(gens).reason, exc.reason)
    bad = {g: v for g, v in got.items() if v[0] != v[1]}
    report(capsys, 9, not bad, f"{len(got) - len(bad)}/{len(got)} inputs rejected with the expected reason; {bad}")
    assert not bad
