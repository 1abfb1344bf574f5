"""Explicit graded free resolutions of the tangent cone and their certificates.

0 -> R^b3 --phi3--> R^b2 --phi2--> R^5 --phi1--> R

The matrices come from templates (see ``templates``). Exactness is
certified with the Buchsbaum-Eisenbud criterion: phi1 phi2 = phi2 phi3 = 0,
ranks telescope (via vanishing and non-vanishing minors), and each ideal
of maximal minors contains relatively prime designated minors.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import NamedTuple

from .errors import (
    CoprimalityFailure,
    InhomogeneousEntry,
    InternalInconsistency,
    UnsupportedCase,
    WitnessMismatch,
)
from .polyalg import (
    NVARS,
    FactoredPoly,
    Poly,
    PolyMatrix,
    all_minors_vanish,
    coprimality_verdict,
    first_nonzero_minor,
    has_constant_term,
    is_homogeneous,
    minor,
    parse_poly,
    render,
)
from .templates import get_template

ALLOWED_BETTI = ((1, 5, 6, 2), (1, 5, 5, 1))


class BettiSequence(NamedTuple):
    b0: int
    b1: int
    b2: int
    b3: int


@dataclass(frozen=True)
class GradedFreeResolution:
    case: str
    variant: int
    phi1: PolyMatrix
    phi2: PolyMatrix
    phi3: PolyMatrix
    env: dict = field(default_factory=dict, compare=False)
    twists: tuple | None = None

    @property
    def ranks(self):
        return (self.phi1.rows, self.phi1.cols, self.phi2.cols, self.phi3.cols)

    @property
    def template(self):
        return get_template(self.case, self.variant)

    def matrices(self):
        return (self.phi1, self.phi2, self.phi3)

    def with_matrix(self, k, m):
        """Copy with phi_k replaced; twists are dropped and must be re-inferred."""
        mats = list(self.matrices())
        mats[k - 1] = m
        return GradedFreeResolution(self.case, self.variant, *mats, env=self.env, twists=None)

    def to_json(self):
        return {
            "case": self.case,
            "variant": self.variant,
            "ranks": list(self.ranks),
            "twists": [list(t) for t in self.twists] if self.twists else None,
            "phi1": self.phi1.to_strings(),
            "phi2": self.phi2.to_strings(),
            "phi3": self.phi3.to_strings(),
        }


def instantiate(rows, env):
    return PolyMatrix.from_rows([[parse_poly(s, env) for s in row] for row in rows])


def build_resolution(tc, d):
    """Resolution for the tangent cone ``tc`` of the family ``d``."""
    if not d.supported:
        raise UnsupportedCase(f"case {d.case}")
    t = get_template(tc.case, tc.variant)
    env = d.env()
    phi1 = instantiate([t.phi1], env)
    if tuple(phi1.row(0)) != tuple(tc.generators):
        raise InternalInconsistency("phi1 differs from the tangent cone generators")
    r = GradedFreeResolution(
        tc.case, tc.variant, phi1, instantiate(t.phi2, env), instantiate(t.phi3, env), env=env,
    )
    if r.ranks not in ALLOWED_BETTI or r.ranks != t.betti:
        raise InternalInconsistency(f"unexpected ranks {r.ranks}")
    return GradedFreeResolution(r.case, r.variant, r.phi1, r.phi2, r.phi3, env=env, twists=infer_twists(r))


# ------------------------------------------------------------------ checks


def verify_complex(r):
    return (r.phi1 @ r.phi2).is_zero() and (r.phi2 @ r.phi3).is_zero()


def verify_minimality(r):
    """No entry of any map has a term of degree zero."""
    return not any(has_constant_term(e) for m in r.matrices() for e in m.entries)


@dataclass
class RankReport:
    ok: bool
    rank_phi1: int
    phi2_top_minors_vanish: bool
    phi2_nonzero_minor: tuple | None      # (rows, cols) 1-based
    phi3_nonzero_minor: tuple | None
    telescopes: bool

    def __bool__(self):
        return self.ok

    def to_json(self):
        return {
            "ok": self.ok,
            "rank_phi1": self.rank_phi1,
            "phi2_top_minors_vanish": self.phi2_top_minors_vanish,
            "phi2_nonzero_minor": _loc_json(self.phi2_nonzero_minor),
            "phi3_nonzero_minor": _loc_json(self.phi3_nonzero_minor),
            "telescopes": self.telescopes,
        }


def _loc_json(loc):
    return None if loc is None else {"rows": list(loc[0]), "cols": list(loc[1])}


def _one_based(rows, cols):
    return tuple(i + 1 for i in rows), tuple(j + 1 for j in cols)


def _designated_nonzero(m, size, witnesses):
    """A nonzero minor of the given size: a designated witness first, else search."""
    for w in witnesses:
        if w.delete is None or w.size != size:
            continue
        rows = [i for i in range(m.rows) if i + 1 not in w.delete[0]]
        cols = [j for j in range(m.cols) if j + 1 not in w.delete[1]]
        if len(rows) == len(cols) == size and not minor(m, rows, cols).is_zero():
            return _one_based(rows, cols)
    hit = first_nonzero_minor(m, size)
    return None if hit is None else _one_based(hit[0], hit[1])


def verify_ranks(r):
    """Rank certificate: rank phi1 = 1, rank phi2 = b1 - 1, rank phi3 = b3."""
    b0, b1, b2, b3 = r.ranks
    t = r.template
    rank1 = 0 if r.phi1.is_zero() else 1
    top = b1 if b1 <= b2 else None
    vanish = all_minors_vanish(r.phi2, top) if top else True
    nz2 = _designated_nonzero(r.phi2, b1 - 1, t.phi2_witnesses)
    nz3 = _designated_nonzero(r.phi3, b3, t.phi3_witnesses)
    rank2 = b1 - 1 if (vanish and nz2) else None
    rank3 = b3 if nz3 else None
    telescopes = (
        rank2 is not None and rank3 is not None
        and rank1 + rank2 == b1 and rank2 + rank3 == b2 and rank1 == b0
    )
    return RankReport(telescopes, rank1, vanish, nz2, nz3, telescopes)


# ------------------------------------------------------------------ twists


def infer_twists(r):
    """Twists per homological degree, as negative integers (R(-d) -> -d).

    The twist of a column is the twist of any row it meets minus the degree
    of the entry there; all nonzero entries of the column must agree.
    """
    out = [(0,)]
    row_twists = (0,)
    for k, m in enumerate(r.matrices(), start=1):
        cols = []
        for j in range(m.cols):
            seen = set()
            for i in range(m.rows):
                e = m[i, j]
                if e.is_zero():
                    continue
                deg = is_homogeneous(e)
                if deg is None:
                    raise InhomogeneousEntry(f"phi{k}[{i + 1},{j + 1}] = {render(e)} is not homogeneous")
                seen.add(row_twists[i] - deg)
            if len(seen) != 1:
                why = "is zero" if not seen else f"has inconsistent degrees {sorted(seen)}"
                raise InhomogeneousEntry(f"column {j + 1} of phi{k} {why}")
            cols.append(seen.pop())
        out.append(tuple(cols))
        row_twists = tuple(cols)
    return tuple(out)


def gorenstein_symmetric(twists):
    """For (1,5,5,1): degree-2 twists are the top twist minus degree-1 twists."""
    if tuple(len(t) for t in twists) != (1, 5, 5, 1):
        return None
    top = twists[3][0]
    return sorted(twists[2]) == sorted(top - t for t in twists[1])


def betti_sequence(r):
    return BettiSequence(*r.ranks)


def homogeneous_type(r):
    return tuple(r.ranks) == (1, 5, 5, 1)


# --------------------------------------------------------------- witnesses


def reading_to_factored(reading, env):
    mono = parse_poly(reading.monomial, env)
    if len(mono) != 1 or mono.leading_coefficient() != 1:
        raise ValueError(f"not a monic monomial: {reading.monomial}")
    exp = next(iter(mono.terms))
    binoms = tuple(parse_poly(b, env) for b in reading.binomials)
    return FactoredPoly(reading.sign, exp, binoms)


def _divide_monomial(p, exp):
    return Poly({tuple(a - b for a, b in zip(e, exp)): c for e, c in p.items()})


def factor_over(p, candidates, max_factors=2):
    """Write p as sign * monomial * product of candidate binomials, or None."""
    if p.is_zero():
        return None
    content = tuple(min(e[v] for e, _ in p.items()) for v in range(NVARS))
    q = _divide_monomial(p, content)
    for n in range(max_factors + 1):
        for combo in itertools.combinations_with_replacement(candidates, n):
            prod = Poly.const(1)
            for b in combo:
                prod = prod * b
            if q == prod:
                return FactoredPoly(1, content, combo)
            if q == -prod:
                return FactoredPoly(-1, content, combo)
    return None


@dataclass
class WitnessCheck:
    matrix: str
    size: int
    stated: tuple | None           # 1-based (deleted rows, deleted cols)
    realized: tuple | None         # 1-based (kept rows, kept cols)
    located_as_stated: bool | None   # None when no position is stated
    computed: str | None
    readings: list                 # (text, note, outcome) with outcome exact|sign|None
    reading: int | None
    sign_agrees: bool
    factored: FactoredPoly | None

    @property
    def matched(self):
        return self.reading is not None

    def to_json(self):
        return {
            "matrix": self.matrix,
            "size": self.size,
            "stated_deletion": None if self.stated is None else {"rows": list(self.stated[0]), "cols": list(self.stated[1])},
            "realized_at": _loc_json(self.realized),
            "located_as_stated": self.located_as_stated,
            "computed": self.computed,
            "readings": [{"prediction": t, "note": n, "outcome": o} for t, n, o in self.readings],
            "matched_reading": self.reading,
            "sign_agrees": self.sign_agrees,
            "factored": None if self.factored is None else str(self.factored),
        }


@dataclass
class CoprimeGroup:
    matrix: str
    members: tuple                 # indices into WitnessReport.checks
    verdicts: list                 # (i, j, coprime, flags)
    coprime: bool
    substitute: list | None = None  # [(rows, cols, factored)] when the stated set is not coprime

    def to_json(self):
        return {
            "matrix": self.matrix,
            "members": list(self.members),
            "coprime": self.coprime,
            "pairs": [{"a": a, "b": b, "coprime": ok, "flags": fl} for a, b, ok, fl in self.verdicts],
            "substitute": None if self.substitute is None else [
                {"rows": list(rs), "cols": list(cs), "minor": str(f)} for rs, cs, f in self.substitute
            ],
        }


@dataclass
class WitnessReport:
    checks: list
    groups: list

    @property
    def all_matched(self):
        return all(c.matched for c in self.checks)

    @property
    def ok(self):
        """Every designated minor matched and every stated set is coprime."""
        return self.all_matched and all(g.coprime for g in self.groups)

    @property
    def certified(self):
        """As ``ok``, but a non-coprime stated set may be replaced by a found substitute."""
        return self.all_matched and all(g.coprime or g.substitute for g in self.groups)

    def raise_for_status(self):
        for c in self.checks:
            if not c.matched:
                raise WitnessMismatch(f"{c.matrix} minor {c.computed} matches no prediction {[t for t, _, _ in c.readings]}")
        for g in self.groups:
            if not g.coprime:
                raise CoprimalityFailure(f"{g.matrix} witnesses are not pairwise coprime: {g.verdicts}")

    def to_json(self):
        return {
            "ok": self.ok,
            "certified": self.certified,
            "checks": [c.to_json() for c in self.checks],
            "groups": [g.to_json() for g in self.groups],
        }


def _reading_text(reading, env):
    return str(reading_to_factored(reading, env))


def _check_witness(m, w, env):
    preds = [(reading_to_factored(rd, env), rd) for rd in w.readings]
    expanded = [(f, f.expand()) for f, _ in preds]

    def outcome(val):
        for k, (f, e) in enumerate(expanded):
            if val == e:
                return k, "exact"
            if val == -e:
                return k, "sign"
        return None, None

    def result(rows, cols, val, as_stated):
        k, how = outcome(val)
        readings = [
            (str(f), rd.note, ("exact" if val == e else "sign" if val == -e else None))
            for (f, rd), (_, e) in zip(preds, expanded)
        ]
        fac = None
        if k is not None:
            f = preds[k][0]
            fac = f if how == "exact" else -f
        return WitnessCheck(
            w.matrix, w.size, w.delete, _one_based(rows, cols), as_stated if w.delete else None,
            render(val), readings, k, how == "exact", fac,
        )

    if w.delete is not None:
        rows = [i for i in range(m.rows) if i + 1 not in w.delete[0]]
        cols = [j for j in range(m.cols) if j + 1 not in w.delete[1]]
        val = minor(m, rows, cols)
        res = result(rows, cols, val, True)
        if res.matched:
            return res
    for rows in itertools.combinations(range(m.rows), w.size):
        for cols in itertools.combinations(range(m.cols), w.size):
            val = minor(m, rows, cols)
            if outcome(val)[0] is not None:
                return result(rows, cols, val, False)
    if w.delete is not None:
        return res
    return WitnessCheck(
        w.matrix, w.size, None, None, None, None,
        [(str(f), rd.note, None) for f, rd in preds], None, False, None,
    )


def _pairwise(factors):
    verdicts, ok = [], True
    for (a, fa), (b, fb) in itertools.combinations(factors, 2):
        c, flags = coprimality_verdict(fa, fb)
        verdicts.append((a, b, c, flags))
        ok = ok and c
    return verdicts, ok


def _binomial_candidates(r):
    seen = []
    for m in r.matrices():
        for e in m.entries:
            if len(e) == 2:
                for s in (e, -e):
                    try:
                        FactoredPoly(1, (0,) * NVARS, (s,))
                    except ValueError:
                        continue
                    if s not in seen and -s not in seen:
                        seen.append(s)
                    break
    return seen


def find_coprime_minors(m, size, count, candidates):
    """First set of ``count`` pairwise coprime size-minors that factor over the candidates."""
    pool = []
    for rows in itertools.combinations(range(m.rows), size):
        for cols in itertools.combinations(range(m.cols), size):
            f = factor_over(minor(m, rows, cols), candidates)
            if f is not None:
                pool.append((_one_based(rows, cols), f))
    for combo in itertools.combinations(pool, count):
        if all(coprimality_verdict(a[1], b[1])[0] for a, b in itertools.combinations(combo, 2)):
            return [(loc[0], loc[1], f) for loc, f in combo]
    return None


def exactness_witnesses(r, strict=False):
    """Check the designated minors of phi2 and phi3 and their coprimality."""
    t = r.template
    checks, groups = [], []
    cands = None
    for name, m, ws in (("phi2", r.phi2, t.phi2_witnesses), ("phi3", r.phi3, t.phi3_witnesses)):
        if not ws:
            continue
        idx = []
        for w in ws:
            idx.append(len(checks))
            checks.append(_check_witness(m, w, r.env))
        if all(checks[i].matched for i in idx):
            verdicts, ok = _pairwise([(i, checks[i].factored) for i in idx])
        else:
            verdicts, ok = [], False
        group = CoprimeGroup(name, tuple(idx), verdicts, ok)
        if not ok:
            if cands is None:
                cands = _binomial_candidates(r)
            group.substitute = find_coprime_minors(m, ws[0].size, len(ws), cands)
        groups.append(group)
    report = WitnessReport(checks, groups)
    if strict:
        report.raise_for_status()
    return report


# ------------------------------------------------------------ verification


@dataclass
class VerificationReport:
    complex_ok: bool
    minimal_ok: bool
    rank_ok: bool
    witnesses_ok: bool
    betti: BettiSequence
    ranks: RankReport | None = None
    witnesses: WitnessReport | None = None
    gorenstein_symmetric: bool | None = None

    @property
    def passed(self):
        return self.complex_ok and self.minimal_ok and self.rank_ok and self.witnesses_ok

    def to_json(self):
        return {
            "passed": self.passed,
            "complex_ok": self.complex_ok,
            "minimal_ok": self.minimal_ok,
            "rank_ok": self.rank_ok,
            "witnesses_ok": self.witnesses_ok,
            "exactness_certified": bool(self.witnesses and self.witnesses.certified),
            "betti": list(self.betti),
            "gorenstein_symmetric": self.gorenstein_symmetric,
            "ranks": self.ranks.to_json() if self.ranks else None,
            "witnesses": self.witnesses.to_json() if self.witnesses else None,
        }


def verify(r):
    ranks = verify_ranks(r)
    wit = exactness_witnesses(r)
    twists = r.twists or infer_twists(r)
    return VerificationReport(
        complex_ok=verify_complex(r),
        minimal_ok=verify_minimality(r),
        rank_ok=bool(ranks),
        witnesses_ok=wit.ok,
        betti=betti_sequence(r),
        ranks=ranks,
        witnesses=wit,
        gorenstein_symmetric=gorenstein_symmetric(twists),
    )
