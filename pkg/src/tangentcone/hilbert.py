"""Hilbert function of the tangent cone from graded twists, and its oracle check."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .resolution import infer_twists


def binom3(m):
    """C(m, 3), taken to be 0 for m < 3."""
    return comb(m, 3) if m >= 3 else 0


def _twists(r):
    return r.twists if r.twists is not None else infer_twists(r)


def hf_from_twists(twists, i):
    if i < 0:
        raise ValueError("negative degree")
    return sum((-1) ** k * sum(binom3(i + t + 3) for t in ts) for k, ts in enumerate(twists))


def hf_from_resolution(r, i):
    """H(i) = sum_k (-1)^k sum_{t in twists_k} C(i + t + 3, 3)."""
    return hf_from_twists(_twists(r), i)


def numerator(twists):
    """Coefficients of N(t) with HS(t) = N(t) / (1 - t)^4."""
    top = max(-t for ts in twists for t in ts)
    coeffs = [0] * (top + 1)
    for k, ts in enumerate(twists):
        for t in ts:
            coeffs[-t] += (-1) ** k
    return coeffs


def default_bound(r):
    return max(abs(t) for ts in _twists(r) for t in ts) + 4


@dataclass
class HilbertReport:
    bound: int
    values: list
    oracle_values: list
    equal: bool
    nondecreasing: bool
    stabilization_value: int | None
    multiplicity: int | None = None
    numerator: list = field(default_factory=list)

    def to_json(self):
        return {
            "bound": self.bound,
            "values": self.values,
            "oracle_values": self.oracle_values,
            "equal": self.equal,
            "nondecreasing": self.nondecreasing,
            "stabilization_value": self.stabilization_value,
            "stabilizes_to_multiplicity": (
                None if self.stabilization_value is None else self.stabilization_value == self.multiplicity
            ),
            "numerator": self.numerator,
        }

    def rows(self):
        return [(i, h, o, h == o) for i, (h, o) in enumerate(zip(self.values, self.oracle_values))]


def check_nondecreasing(report):
    v = report.values
    return all(v[i + 1] >= v[i] for i in range(len(v) - 1))


def stabilization(values, run=3):
    """Final value if the last ``run`` values agree, else None."""
    if len(values) < run or len(set(values[-run:])) != 1:
        return None
    return values[-1]


def compare_with_oracle(r, S, bound=None):
    twists = _twists(r)
    if bound is None:
        bound = max(abs(t) for ts in twists for t in ts) + 4
    values = [hf_from_twists(twists, i) for i in range(bound + 1)]
    oracle = S.hilbert_oracle_values(bound)
    rep = HilbertReport(
        bound=bound, values=values, oracle_values=oracle, equal=values == oracle,
        nondecreasing=False, stabilization_value=stabilization(values),
        multiplicity=S.multiplicity, numerator=numerator(twists),
    )
    rep.nondecreasing = check_nondecreasing(rep)
    return rep
