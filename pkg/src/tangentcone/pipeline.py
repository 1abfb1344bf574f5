"""End-to-end analysis of one semigroup, and the parameter sweep."""

from __future__ import annotations

import itertools
import math
import os
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .bresinsky import PARAM_KEYS, check_restrictions, semigroup_from_parameters, solve_structure
from .errors import PipelineRejection
from .hilbert import compare_with_oracle
from .resolution import build_resolution, homogeneous_type, verify
from .semigroup import NumericalSemigroup
from .tangent_cone import tangent_generators

SCHEMA_VERSION = 1
WORKERS_ENV = "TANGENTCONE_WORKERS"

STATUS_OK = "ok"
STATUS_REJECTED = "rejected"
STATUS_FAILED = "verification_failed"


@dataclass
class AnalysisRecord:
    input_generators: tuple
    generators: tuple = ()
    permutation: tuple = ()
    gcd_one: bool | None = None
    minimally_generated: bool | None = None
    symmetric: bool | None = None
    frobenius: int | None = None
    status: str = STATUS_OK
    reason: str | None = None
    message: str | None = None
    structure: object = None
    support: object = None
    tangent_cone: object = None
    resolution: object = None
    verification: object = None
    hilbert: object = None
    seconds: float = field(default=0.0, compare=False)

    @property
    def case(self):
        return self.structure.case if self.structure else None

    @property
    def variant(self):
        return self.tangent_cone.variant if self.tangent_cone else None

    @property
    def betti(self):
        return tuple(self.resolution.ranks) if self.resolution else None

    @property
    def homogeneous_type(self):
        return homogeneous_type(self.resolution) if self.resolution else None

    @property
    def passed(self):
        return self.status != STATUS_FAILED

    def to_json(self, detail=False):
        out = {
            "schema_version": SCHEMA_VERSION,
            "input_generators": list(self.input_generators),
            "generators": list(self.generators),
            "permutation": list(self.permutation),
            "gcd_one": self.gcd_one,
            "minimally_generated": self.minimally_generated,
            "symmetric": self.symmetric,
            "frobenius": self.frobenius,
            "status": self.status,
            "reason": self.reason,
            "message": self.message,
            "case": self.case,
            "variant": self.variant,
            "structure": self.structure.to_json() if self.structure else None,
            "restrictions": self.support.to_json() if self.support else None,
            "tangent_cone": self.tangent_cone.to_strings() if self.tangent_cone else None,
            "tangent_cone_degrees": list(self.tangent_cone.degrees) if self.tangent_cone else None,
            "betti": list(self.betti) if self.betti else None,
            "twists": [list(t) for t in self.resolution.twists] if self.resolution else None,
            "homogeneous_type": self.homogeneous_type,
            "verification": None,
            "hilbert": self.hilbert.to_json() if self.hilbert else None,
        }
        if self.verification is not None:
            v = self.verification.to_json()
            if not detail:
                v.pop("witnesses")
                v.pop("ranks")
            out["verification"] = v
        return out


def analyze(gens, upto=None):
    """Run the whole pipeline; rejections end it early with a reason code."""
    t0 = time.perf_counter()
    rec = AnalysisRecord(tuple(int(g) for g in gens))
    try:
        S = NumericalSemigroup(rec.input_generators)
        rec.gcd_one = True
        rec.generators = S.generators
        rec.minimally_generated = S.is_minimally_generated()
        if rec.minimally_generated:
            rec.frobenius = S.frobenius
            rec.symmetric = S.is_symmetric()
            rec.permutation = tuple(sorted(range(4), key=lambda k: rec.input_generators[k]))
        rec.structure = solve_structure(S)
        rec.support = check_restrictions(rec.structure)
        rec.tangent_cone = tangent_generators(rec.structure, rec.support)
    except PipelineRejection as e:
        if e.reason == "GcdNotOne":
            rec.gcd_one = False
        rec.support = rec.support or e.detail.get("report")
        rec.status, rec.reason, rec.message = STATUS_REJECTED, e.reason, str(e)
        rec.seconds = time.perf_counter() - t0
        return rec

    rec.resolution = build_resolution(rec.tangent_cone, rec.structure)
    rec.verification = verify(rec.resolution)
    rec.hilbert = compare_with_oracle(rec.resolution, S, upto)
    ok = rec.verification.passed and rec.hilbert.equal and rec.hilbert.nondecreasing
    if not ok:
        rec.status = STATUS_FAILED
        failed = [k for k in ("complex_ok", "minimal_ok", "rank_ok", "witnesses_ok")
                  if not getattr(rec.verification, k)]
        if not rec.hilbert.equal:
            failed.append("hf_equal")
        if not rec.hilbert.nondecreasing:
            failed.append("nondecreasing")
        rec.message = "failed: " + ", ".join(failed)
    rec.seconds = time.perf_counter() - t0
    return rec


# ------------------------------------------------------------------- sweep

CSV_COLUMNS = (
    "generators", "status", "reason", "case", "variant", "betti",
    "complex_ok", "minimal_ok", "rank_ok", "witnesses_ok", "exactness_certified",
    "hf_equal", "nondecreasing", "homogeneous_type", "seconds",
)


def _flag(x):
    return "" if x is None else str(bool(x)).lower()


def csv_row(rec):
    v, h = rec.verification, rec.hilbert
    return {
        "generators": " ".join(map(str, rec.generators or rec.input_generators)),
        "status": rec.status,
        "reason": rec.reason or "",
        "case": rec.case or "",
        "variant": "" if rec.variant is None else rec.variant,
        "betti": " ".join(map(str, rec.betti)) if rec.betti else "",
        "complex_ok": _flag(v and v.complex_ok),
        "minimal_ok": _flag(v and v.minimal_ok),
        "rank_ok": _flag(v and v.rank_ok),
        "witnesses_ok": _flag(v and v.witnesses_ok),
        "exactness_certified": _flag(v and v.witnesses.certified),
        "hf_equal": _flag(h and h.equal),
        "nondecreasing": _flag(h and h.nondecreasing),
        "homogeneous_type": _flag(rec.homogeneous_type),
        "seconds": f"{rec.seconds:.4f}",
    }


def parameter_tuples(alpha_max):
    """All positive exponent tuples whose pair sums alpha_1..alpha_4 lie in [2, alpha_max]."""
    if alpha_max < 2:
        raise ValueError("alpha_max must be at least 2")
    pairs = [(a, b) for a in range(1, alpha_max) for b in range(1, alpha_max) if a + b <= alpha_max]
    for combo in itertools.product(pairs, repeat=4):
        yield dict(zip(PARAM_KEYS, (x for p in combo for x in p)))


@dataclass
class SweepResult:
    records: list
    dropped: Counter
    tuples: int

    def summary(self):
        by = Counter()
        for r in self.records:
            key = f"{r.case}/v{r.variant}" if r.status == STATUS_OK else f"{r.case or '-'}:{r.reason or r.status}"
            by[key] += 1
        return by

    @property
    def supported(self):
        return [r for r in self.records if r.status != STATUS_REJECTED]


def distinct_families(alpha_max):
    """Sorted generator tuples of the valid semigroups, plus counts of dropped tuples."""
    seen, dropped, n = set(), Counter(), 0
    for p in parameter_tuples(alpha_max):
        n += 1
        try:
            S = semigroup_from_parameters(p)
        except PipelineRejection as e:
            dropped[e.reason] += 1
            continue
        seen.add(S.generators)
    return sorted(seen), dropped, n


def worker_count():
    raw = os.environ.get(WORKERS_ENV)
    if raw:
        return max(1, int(raw))
    return max(1, min(8, os.cpu_count() or 1))


def sweep(alpha_max, workers=None):
    gens, dropped, n = distinct_families(alpha_max)
    workers = worker_count() if workers is None else workers
    if workers > 1 and len(gens) > 8:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            records = list(ex.map(analyze, gens, chunksize=max(1, math.ceil(len(gens) / (4 * workers)))))
    else:
        records = [analyze(g) for g in gens]
    records.sort(key=lambda r: r.generators)
    return SweepResult(records, dropped, n)
