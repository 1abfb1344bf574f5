import itertools
from collections import Counter

import pytest

from conftest import REPRESENTATIVES, pipeline_objects
from tangentcone.errors import CoprimalityFailure, InhomogeneousEntry
from tangentcone.polyalg import (
    FactoredPoly,
    Poly,
    PolyMatrix,
    all_minors_vanish,
    coprimality_verdict,
    det_by_permutations,
    minor,
    parse_poly,
)
from tangentcone.resolution import (
    betti_sequence,
    exactness_witnesses,
    factor_over,
    gorenstein_symmetric,
    homogeneous_type,
    infer_twists,
    instantiate,
    verify,
    verify_complex,
    verify_minimality,
    verify_ranks,
)
from tangentcone.templates import TEMPLATES, get_template

EXPECTED_BETTI = {
    ("1a", 1): (1, 5, 6, 2), ("1a", 2): (1, 5, 6, 2),
    ("1b", 1): (1, 5, 6, 2), ("1b", 2): (1, 5, 6, 2), ("1b", 3): (1, 5, 5, 1), ("1b", 4): (1, 5, 5, 1),
    ("2b", 1): (1, 5, 6, 2), ("2b", 2): (1, 5, 6, 2), ("2b", 3): (1, 5, 5, 1), ("2b", 4): (1, 5, 5, 1),
    ("3a", 1): (1, 5, 6, 2), ("3a", 2): (1, 5, 6, 2), ("3a", 3): (1, 5, 6, 2), ("3a", 4): (1, 5, 6, 2),
}


def P(s, env=None):
    return parse_poly(s, env or {})


def submatrix_det(m, del_rows, del_cols):
    """Leibniz determinant after deleting 1-based rows/cols (independent of `minor`)."""
    rows = [i for i in range(m.rows) if i + 1 not in del_rows]
    cols = [j for j in range(m.cols) if j + 1 not in del_cols]
    return det_by_permutations(PolyMatrix.from_rows([[m[i, j] for j in cols] for i in rows]))


@pytest.fixture(scope="module")
def golden():
    return pipeline_objects((5, 6, 7, 8))


# ---------------------------------------------------------------- templates

def test_fourteen_templates():
    assert len(TEMPLATES) == 14
    assert {(t.case, t.variant): t.betti for t in TEMPLATES} == EXPECTED_BETTI
    for t in TEMPLATES:
        assert len(t.phi1) == 5
        assert len(t.phi2) == 5 and len(t.phi3) == t.betti[2]
        assert 1 - 5 + t.betti[2] - t.betti[3] == 0


def test_golden_phi3_column(golden):
    _, _, _, r = golden
    expected = ["x2^2 - x1*x3", "x2*x3 - x1*x4", "x3^2 - x2*x4", "x3*x4", "x4^2"]
    assert r.phi3.column(0) == [P(s) for s in expected]
    assert r.ranks == (1, 5, 5, 1)


def test_case_1a_v1_phi3_first_column(representatives):
    _, d, _, r = representatives[("1a", 1)]
    env = d.env()
    expected = ["x2^a2", "-x4^a14", "0", "-x2^a42*x3^a43", "0", "x3^a3"]
    assert r.phi3.column(0) == [P(s, env) for s in expected]


def test_case_3a_v4_uses_alpha1(representatives):
    _, d, _, r = representatives[("3a", 4)]
    assert r.phi3[4, 1] == Poly.var(1, d.a(1))
    assert d.a(1) == d.a(2, 1) + d.a(3, 1)


def test_printed_1b_v2_column_fails_and_corrected_one_passes(representatives):
    _, d, tc, r = representatives[("1b", 2)]
    t = get_template("1b", 2)
    assert t.corrections
    printed = [list(row) for row in t.phi2]
    for _, i, j, was, _ in t.corrections:
        printed[i - 1][j - 1] = was
    bad = instantiate(printed, d.env())
    assert not (r.phi1 @ bad).is_zero()
    assert verify_complex(r)


# ---------------------------------------------------------- complex checks

@pytest.mark.parametrize("key", sorted(REPRESENTATIVES))
def test_every_variant_verifies(representatives, key):
    S, d, tc, r = representatives[key]
    assert verify_complex(r)
    assert verify_minimality(r)
    assert verify_ranks(r)
    assert tuple(betti_sequence(r)) == EXPECTED_BETTI[key]
    assert homogeneous_type(r) == (EXPECTED_BETTI[key] == (1, 5, 5, 1))
    assert list(r.phi1.row(0)) == list(tc.generators)


def test_bound4_sweep_complexes(supported_bound4):
    assert len(supported_bound4) == 80
    for S, d, tc, r in supported_bound4:
        assert verify_complex(r) and verify_minimality(r) and verify_ranks(r)
        if r.ranks == (1, 5, 5, 1):
            assert gorenstein_symmetric(r.twists)


def test_sign_flip_breaks_complex(golden):
    *_, r = golden
    for i, j in r.phi2.nonzero_positions():
        bad = r.with_matrix(2, r.phi2.replace(i, j, -r.phi2[i, j]))
        assert not verify_complex(bad)


def test_constant_entry_breaks_minimality(golden):
    *_, r = golden
    bad = r.with_matrix(2, r.phi2.replace(0, 0, r.phi2[0, 0] + 1))
    assert not verify_minimality(bad)
    assert verify_minimality(r)


def test_zero_matrix_breaks_ranks(golden):
    *_, r = golden
    zero = PolyMatrix(r.phi2.rows, r.phi2.cols, [0] * (r.phi2.rows * r.phi2.cols))
    assert not verify_ranks(r.with_matrix(2, zero))
    zero3 = PolyMatrix(r.phi3.rows, r.phi3.cols, [0] * (r.phi3.rows * r.phi3.cols))
    assert not verify_ranks(r.with_matrix(3, zero3))


def test_case_1a_v1_all_5x5_minors_of_phi2_vanish(representatives):
    *_, r = representatives[("1a", 1)]
    assert all_minors_vanish(r.phi2, 5)
    rep = verify_ranks(r)
    assert rep.phi2_top_minors_vanish and rep.phi2_nonzero_minor and rep.telescopes


def test_golden_rank_pattern(golden):
    *_, r = golden
    rep = verify_ranks(r)
    assert rep.rank_phi1 == 1
    assert det_by_permutations(r.phi2).is_zero()
    assert rep.ok


# ------------------------------------------------------------------ twists

def test_golden_twists(golden):
    *_, r = golden
    assert r.twists == ((0,), (-2,) * 5, (-3,) * 5, (-5,))
    assert gorenstein_symmetric(r.twists)


def test_case_1a_v1_twists_match_the_displayed_resolution(representatives):
    _, d, _, r = representatives[("1a", 1)]
    a = d.a
    deg1 = [a(1, 3) + a(1, 4), a(2), a(3), a(4), a(3, 2) + a(1, 4)]
    deg2 = [a(3) + a(1, 4), a(2) + a(3), a(4) + a(1, 3), a(3, 2) + a(1, 3) + a(1, 4), a(3, 2) + a(4), a(1, 4) + a(2)]
    deg3 = [a(2) + a(3) + a(1, 4), a(4) + a(1, 3) + a(3, 2)]
    assert list(r.twists[1]) == [-x for x in deg1]
    assert Counter(r.twists[2]) == Counter(-x for x in deg2)
    assert Counter(r.twists[3]) == Counter(-x for x in deg3)


def test_inhomogeneous_entry_detected(golden):
    *_, r = golden
    x1 = Poly.var(1)
    with pytest.raises(InhomogeneousEntry):
        infer_twists(r.with_matrix(2, r.phi2.replace(0, 0, r.phi2[0, 0] + x1**3)))
    # homogeneous but of the wrong degree: the column disagrees with itself
    i, j = r.phi2.nonzero_positions()[0]
    with pytest.raises(InhomogeneousEntry):
        infer_twists(r.with_matrix(2, r.phi2.replace(i, j, r.phi2[i, j] * x1)))


# --------------------------------------------------------------- witnesses

def test_golden_witness_is_f2_squared(golden):
    *_, r = golden
    f2 = P("x2^2 - x1*x3")
    assert submatrix_det(r.phi2, {2}, {1}) == f2 * f2
    rep = exactness_witnesses(r)
    assert rep.ok
    first = rep.checks[0]
    assert first.located_as_stated and first.sign_agrees
    assert first.factored.expand() == f2 * f2


def test_case_1a_v1_witness_values(representatives):
    _, d, _, r = representatives[("1a", 1)]
    env = d.env()
    assert submatrix_det(r.phi2, {2}, {1, 3}) == P("-x2^(2*a2+a32)", env)
    assert submatrix_det(r.phi2, {1}, {5, 6}) == P("x3^(a3+2*a13)*x4^a14", env)
    two_minors = {minor(r.phi3, rows, (0, 1)) for rows in itertools.combinations(range(6), 2)}
    two_minors |= {-m for m in two_minors}
    for s in ("x2^(a2+a32)", "x3^(a3+a13)", "x4^a4"):
        assert P(s, env) in two_minors
    rep = exactness_witnesses(r)
    assert rep.ok and all(c.matched for c in rep.checks)


def test_case_3a_v1_witness_values(representatives):
    _, d, _, r = representatives[("3a", 1)]
    env = d.env()
    assert submatrix_det(r.phi2, {3}, {5, 6}) == P("-x2^a12*x3^(2*a3)", env)
    assert submatrix_det(r.phi2, {4}, {2, 3}) == P("-x4^(2*a4)", env)


@pytest.mark.parametrize("key", sorted(k for k in REPRESENTATIVES if k != ("3a", 4)))
def test_witnesses_pass(representatives, key):
    *_, r = representatives[key]
    rep = exactness_witnesses(r, strict=True)
    assert rep.ok and rep.certified
    for c in rep.checks:
        # the factored form really is the computed minor
        rows, cols = c.realized
        m = r.phi2 if c.matrix == "phi2" else r.phi3
        assert minor(m, [i - 1 for i in rows], [j - 1 for j in cols]) == c.factored.expand()


def test_case_1a_v2_records_which_phi3_reading_matched(representatives):
    *_, r = representatives[("1a", 2)]
    rep = exactness_witnesses(r)
    c = rep.checks[2]
    assert [o for _, _, o in c.readings] == [None, "exact"]


def test_case_3a_v4_stated_phi3_triple_is_not_coprime(representatives):
    _, d, _, r = representatives[("3a", 4)]
    rep = exactness_witnesses(r)
    assert rep.all_matched
    phi3 = [g for g in rep.groups if g.matrix == "phi3"][0]
    assert not phi3.coprime
    assert all(c.factored.monomial[3] > 0 for c in (rep.checks[i] for i in phi3.members))
    assert not rep.ok
    with pytest.raises(CoprimalityFailure):
        exactness_witnesses(r, strict=True)
    # a coprime replacement exists among the 2-minors
    assert rep.certified and len(phi3.substitute) == 3
    for rows, cols, f in phi3.substitute:
        assert minor(r.phi3, [i - 1 for i in rows], [j - 1 for j in cols]) == f.expand()
    for (_, _, a), (_, _, b) in itertools.combinations(phi3.substitute, 2):
        assert coprimality_verdict(a, b)[0]


def test_factor_over():
    f2 = P("x2^2 - x1*x3")
    f3 = P("x3^3 - x1^2*x4")
    p = P("-x2*x4") * f2 * f3
    fp = factor_over(p, [f2, f3])
    assert isinstance(fp, FactoredPoly) and fp.expand() == p
    assert factor_over(P("x1 + x2 + x3"), [f2]) is None
    assert factor_over(Poly(), [f2]) is None


def test_verify_report(golden):
    *_, r = golden
    v = verify(r)
    assert v.passed and tuple(v.betti) == (1, 5, 5, 1)
    js = v.to_json()
    assert js["complex_ok"] and js["witnesses_ok"] and js["exactness_certified"]
