import pytest

from tangentcone.bresinsky import check_restrictions, solve_structure
from tangentcone.errors import PipelineRejection
from tangentcone.pipeline import distinct_families
from tangentcone.resolution import build_resolution
from tangentcone.semigroup import NumericalSemigroup
from tangentcone.tangent_cone import tangent_generators

# One family per supported (case, variant), found by sweeping the
# parametrization (bound 5; bound 6 for the two rarest 1b variants).
REPRESENTATIVES = {
    ("1a", 1): (10, 17, 22, 28),
    ("1a", 2): (7, 10, 12, 16),
    ("1b", 1): (18, 32, 51, 57),
    ("1b", 2): (13, 18, 38, 40),
    ("1b", 3): (5, 11, 12, 13),
    ("1b", 4): (5, 6, 7, 8),
    ("2b", 1): (10, 19, 31, 36),
    ("2b", 2): (12, 19, 41, 47),
    ("2b", 3): (5, 12, 13, 14),
    ("2b", 4): (5, 7, 8, 9),
    ("3a", 1): (7, 13, 18, 22),
    ("3a", 2): (7, 10, 13, 18),
    ("3a", 3): (7, 11, 12, 17),
    ("3a", 4): (7, 8, 9, 13),
}


def pipeline_objects(gens):
    S = NumericalSemigroup(gens)
    d = solve_structure(S)
    rep = check_restrictions(d)
    tc = tangent_generators(d, rep)
    return S, d, tc, build_resolution(tc, d)


@pytest.fixture(scope="session")
def representatives():
    return {k: pipeline_objects(g) for k, g in REPRESENTATIVES.items()}


@pytest.fixture(scope="session")
def supported_bound4():
    out = []
    gens, _, _ = distinct_families(4)
    for g in gens:
        try:
            out.append(pipeline_objects(g))
        except PipelineRejection:
            pass
    return out
