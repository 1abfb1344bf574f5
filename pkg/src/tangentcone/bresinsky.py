"""Exponent structure of a non-complete-intersection symmetric semigroup.

For sorted generators n1 < n2 < n3 < n4 each ``alpha[i]`` is the least
multiple of n_i lying in the semigroup of the other three, and
``alpha[i] * n_i = alpha_ij * n_j + alpha_ik * n_k`` for exactly one pair
(j, k). The pattern of pairs identifies one of six cases.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import (
    CompleteIntersection,
    GcdNotOne,
    InternalInconsistency,
    NotMinimallyGenerated,
    NotSymmetric,
    RestrictionViolated,
    StructureAmbiguous,
    UnsupportedCase,
)
from .polyalg import Poly
from .semigroup import NumericalSemigroup, in_subsemigroup

# i -> (j, k): f_i = x_i^{a_i} - x_j^{a_ij} x_k^{a_ik}
PATTERNS = {
    "1a": {1: (3, 4), 2: (1, 4), 3: (1, 2), 4: (2, 3)},
    "1b": {1: (3, 4), 2: (1, 3), 3: (2, 4), 4: (1, 2)},
    "2a": {1: (2, 3), 2: (3, 4), 3: (1, 4), 4: (1, 2)},
    "2b": {1: (2, 3), 2: (1, 4), 3: (2, 4), 4: (1, 3)},
    "3a": {1: (2, 4), 2: (1, 3), 3: (1, 4), 4: (2, 3)},
    "3b": {1: (2, 4), 2: (3, 4), 3: (1, 2), 4: (1, 3)},
}

# f5 = x_p^{a_(.)} x_q^{a_(.)} - x_r^{a_(.)} x_s^{a_(.)}; each factor is
# (variable, key of its exponent in alpha_ij). Orientation as printed for
# the supported cases.
F5_TERMS = {
    "1a": (((1, (2, 1)), (3, (4, 3))), ((2, (3, 2)), (4, (1, 4)))),
    "1b": (((2, (4, 2)), (3, (1, 3))), ((1, (2, 1)), (4, (3, 4)))),
    "2a": (((2, (1, 2)), (4, (3, 4))), ((1, (4, 1)), (3, (2, 3)))),
    "2b": (((1, (4, 1)), (2, (3, 2))), ((3, (1, 3)), (4, (2, 4)))),
    "3a": (((1, (3, 1)), (2, (4, 2))), ((3, (2, 3)), (4, (1, 4)))),
    "3b": (((2, (1, 2)), (3, (4, 3))), ((1, (3, 1)), (4, (2, 4)))),
}

SUPPORTED_CASES = ("1a", "1b", "2b", "3a")

# Generators whose lowest-degree form can be the whole binomial; each
# restriction reads alpha_i <= alpha_ij + alpha_ik.
RESTRICTED = {"1a": (2,), "1b": (2, 3), "2b": (2, 3), "3a": (2, 3)}

PARAM_KEYS = ("a21", "a31", "a32", "a42", "a13", "a43", "a14", "a24")


@dataclass(frozen=True)
class BresinskyData:
    generators: tuple          # sorted n1 < n2 < n3 < n4
    alpha: tuple               # alpha_1..alpha_4
    alpha_ij: dict             # (i, j) -> exponent of x_j in f_i
    case: str
    permutation: tuple = (0, 1, 2, 3)   # sorted position k holds input index permutation[k]
    input_generators: tuple = ()

    def a(self, i, j=None):
        return self.alpha[i - 1] if j is None else self.alpha_ij[(i, j)]

    def env(self):
        """Exponent symbols a1..a4 and a_ij for template substitution."""
        out = {f"a{i}": v for i, v in enumerate(self.alpha, start=1)}
        out.update({f"a{i}{j}": v for (i, j), v in self.alpha_ij.items()})
        return out

    @property
    def pattern(self):
        return PATTERNS[self.case]

    @property
    def supported(self):
        return self.case in SUPPORTED_CASES

    def to_json(self):
        return {
            "case": self.case,
            "alpha": list(self.alpha),
            "alpha_ij": {f"a{i}{j}": v for (i, j), v in sorted(self.alpha_ij.items())},
            "pattern": {f"f{i}": list(jk) for i, jk in sorted(self.pattern.items())},
            "permutation": list(self.permutation),
        }


@dataclass
class SupportReport:
    case: str
    supported: bool
    restrictions: list = field(default_factory=list)    # (text, lhs, rhs, holds, equality)
    consequences: list = field(default_factory=list)    # (text, holds)

    def equalities(self):
        """Generator indices whose restriction holds with equality."""
        return tuple(i for i, (_, lhs, rhs, _, eq) in zip(RESTRICTED.get(self.case, ()), self.restrictions) if eq)

    def to_json(self):
        return {
            "case": self.case,
            "supported": self.supported,
            "restrictions": [
                {"inequality": t, "lhs": lhs, "rhs": rhs, "holds": ok, "equality": eq}
                for t, lhs, rhs, ok, eq in self.restrictions
            ],
            "consequences": [{"inequality": t, "holds": ok} for t, ok in self.consequences],
        }


def least_multiple_in_others(gens, i):
    """Smallest k >= 1 with k * n_i in the semigroup of the other generators."""
    others = [g for k, g in enumerate(gens) if k != i]
    n = gens[i]
    # k = min(others) always works
    for k in range(1, min(others) + 1):
        if in_subsemigroup(k * n, others):
            return k
    raise InternalInconsistency(f"no multiple of {n} found in <{others}>")


def two_term_representations(gens, alpha, i):
    """All (j, k, a, b) with alpha_i n_i = a n_j + b n_k, 0 < a < alpha_j, 0 < b < alpha_k (1-based)."""
    target = alpha[i - 1] * gens[i - 1]
    found = []
    others = [j for j in range(1, 5) if j != i]
    for x in range(3):
        for y in range(x + 1, 3):
            j, k = others[x], others[y]
            nj, nk = gens[j - 1], gens[k - 1]
            for a in range(1, alpha[j - 1]):
                rest = target - a * nj
                if rest <= 0:
                    break
                if rest % nk == 0 and 0 < rest // nk < alpha[k - 1]:
                    found.append((j, k, a, rest // nk))
    return found


def solve_structure(S):
    """Exponents and case label for a symmetric, minimally 4-generated S."""
    if len(S.generators) != 4 or not S.is_minimally_generated():
        raise NotMinimallyGenerated(f"{S!r} is not minimally generated by four elements")
    if not S.is_symmetric():
        raise NotSymmetric(f"{S!r} is not symmetric")
    gens = S.generators
    alpha = tuple(least_multiple_in_others(gens, i) for i in range(4))
    if min(alpha) < 2:
        raise InternalInconsistency(f"alpha {alpha} has an entry below 2")

    pattern, alpha_ij = {}, {}
    for i in range(1, 5):
        reps = two_term_representations(gens, alpha, i)
        if not reps:
            raise CompleteIntersection(
                f"{alpha[i - 1]}*{gens[i - 1]} has no two-generator representation", generator=i
            )
        if len(reps) > 1:
            raise StructureAmbiguous(f"several representations for generator {i}: {reps}", generator=i)
        j, k, a, b = reps[0]
        pattern[i] = (j, k)
        alpha_ij[(i, j)] = a
        alpha_ij[(i, k)] = b

    case = next((c for c, p in PATTERNS.items() if p == pattern), None)
    if case is None:
        raise CompleteIntersection(f"representation pattern {pattern} matches no five-generator case")

    # each variable occurs in exactly two other generators and its alpha is
    # the sum of those two exponents
    for j in range(1, 5):
        parts = [alpha_ij[(i, j)] for i in range(1, 5) if (i, j) in alpha_ij]
        if len(parts) != 2 or sum(parts) != alpha[j - 1]:
            raise CompleteIntersection(f"sum identity fails for alpha_{j}: {alpha[j - 1]} vs {parts}")

    order = sorted(range(4), key=lambda k: S.input_generators[k])
    data = BresinskyData(
        generators=gens,
        alpha=alpha,
        alpha_ij=dict(sorted(alpha_ij.items())),
        case=case,
        permutation=tuple(order) if len(S.input_generators) == 4 else (0, 1, 2, 3),
        input_generators=S.input_generators,
    )
    for f in build_ideal_generators(data, allow_unsupported=True):
        if f.evaluate_monomial_curve(gens):
            raise InternalInconsistency(f"{f} does not vanish on t^{gens}")
    return data


def sum_identities(d):
    out = []
    for j in range(1, 5):
        keys = [(i, j) for i in range(1, 5) if (i, j) in d.alpha_ij]
        rhs = "+".join(f"a{i}{jj}" for i, jj in keys)
        out.append((f"a{j}={rhs}", d.alpha[j - 1] == sum(d.alpha_ij[k] for k in keys)))
    return out


def implied_inequalities(d):
    """Inequalities forced by n1 < n2 < n3 < n4 for the matched pattern."""
    out = []
    for i, (j, k) in sorted(d.pattern.items()):
        lhs, rhs = d.a(i), d.a(i, j) + d.a(i, k)
        if j > i and k > i:
            out.append((f"a{i} > a{i}{j}+a{i}{k}", lhs > rhs))
        elif j < i and k < i:
            out.append((f"a{i} < a{i}{j}+a{i}{k}", lhs < rhs))
    return out


def check_restrictions(d):
    if not d.supported:
        raise UnsupportedCase(f"case {d.case} has no published tangent cone", case=d.case)
    report = SupportReport(case=d.case, supported=True)
    for i in RESTRICTED[d.case]:
        j, k = d.pattern[i]
        lhs, rhs = d.a(i), d.a(i, j) + d.a(i, k)
        report.restrictions.append((f"a{i} <= a{i}{j}+a{i}{k}", lhs, rhs, lhs <= rhs, lhs == rhs))
    report.consequences = implied_inequalities(d)
    bad = [t for t, ok in report.consequences if not ok]
    if bad:
        raise InternalInconsistency(f"ordering consequences violated: {bad}")
    failed = [t for t, _, _, ok, _ in report.restrictions if not ok]
    if failed:
        report.supported = False
        raise RestrictionViolated(f"case {d.case}: {', '.join(failed)} fails", report=report)
    return report


def build_ideal_generators(d, allow_unsupported=False):
    """The binomials f1..f5 of the matched case."""
    if not d.supported and not allow_unsupported:
        raise UnsupportedCase(f"case {d.case}")
    fs = []
    for i in range(1, 5):
        j, k = d.pattern[i]
        exp_lead = [0] * 4
        exp_lead[i - 1] = d.a(i)
        exp_tail = [0] * 4
        exp_tail[j - 1] = d.a(i, j)
        exp_tail[k - 1] = d.a(i, k)
        fs.append(Poly.monomial(exp_lead) - Poly.monomial(exp_tail))
    halves = []
    for half in F5_TERMS[d.case]:
        exp = [0] * 4
        for var, key in half:
            exp[var - 1] = d.alpha_ij[key]
        halves.append(Poly.monomial(exp))
    fs.append(halves[0] - halves[1])
    return fs


def generators_from_parameters(params):
    """n1..n4 from the eight exponents of the canonical (case 1(a)) form, unsorted."""
    p = {k: int(params[k]) for k in PARAM_KEYS}
    a1 = p["a21"] + p["a31"]
    a2 = p["a32"] + p["a42"]
    a3 = p["a13"] + p["a43"]
    a4 = p["a14"] + p["a24"]
    n1 = a2 * a3 * p["a14"] + p["a32"] * p["a13"] * p["a24"]
    n2 = a3 * a4 * p["a21"] + p["a31"] * p["a43"] * p["a24"]
    n3 = a1 * a4 * p["a32"] + p["a14"] * p["a42"] * p["a31"]
    n4 = a1 * a2 * p["a43"] + p["a42"] * p["a21"] * p["a13"]
    return (n1, n2, n3, n4), (a1, a2, a3, a4)


def semigroup_from_parameters(params):
    """Semigroup of the parametrized family; input order kept on the result."""
    if any(int(params[k]) < 1 for k in PARAM_KEYS):
        raise ValueError("every alpha_ij must be positive")
    ns, _ = generators_from_parameters(params)
    if math.gcd(*ns) != 1:
        raise GcdNotOne(f"gcd{ns} = {math.gcd(*ns)}")
    S = NumericalSemigroup(ns)
    if not S.is_minimally_generated():
        raise NotMinimallyGenerated(f"{ns} is not a minimal generating set")
    return S
