"""Generators of the tangent cone ideal I(C)_* from lowest-degree forms.

A restricted generator whose inequality is strict contributes only its
pure-power term; at equality the whole binomial is homogeneous and
survives. The resulting five forms are matched against the published
variant lists (the phi1 rows of the templates), up to sign.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .bresinsky import RESTRICTED, build_ideal_generators, check_restrictions
from .errors import InternalInconsistency, VariantMismatch
from .polyalg import is_homogeneous, lowest_degree_form, parse_poly, render
from .templates import VARIANT_COUNT, get_template


@dataclass(frozen=True)
class TangentConeIdeal:
    generators: tuple            # in template orientation, phi1 order
    case: str
    variant: int
    degrees: tuple
    lowest_forms: tuple = ()     # f_i* exactly as computed
    equalities: tuple = ()       # restricted generators kept whole
    support: object = field(default=None, compare=False)

    def to_strings(self):
        return [render(g) for g in self.generators]

    def to_json(self):
        return {
            "case": self.case,
            "variant": self.variant,
            "generators": self.to_strings(),
            "degrees": list(self.degrees),
            "binomial_generators": [f"f{i}" for i in self.equalities],
        }


def variant_from_equalities(case, equalities):
    """Variant index: 1 + [f2 kept] + 2*[f3 kept] (case 1a has f2 only)."""
    allowed = RESTRICTED[case]
    if any(i not in allowed for i in equalities):
        raise ValueError(f"case {case} restricts only {allowed}")
    return 1 + (2 in equalities) + 2 * (3 in equalities)


def template_generators(case, variant, env):
    return tuple(parse_poly(s, env) for s in get_template(case, variant).phi1)


def _same_up_to_sign(a, b):
    return a == b or a == -b


def matching_variants(case, forms, env):
    hits = []
    for v in range(1, VARIANT_COUNT[case] + 1):
        tmpl = template_generators(case, v, env)
        if all(_same_up_to_sign(f, g) for f, g in zip(forms, tmpl)):
            hits.append(v)
    return hits


def tangent_generators(d, support=None):
    """TangentConeIdeal for a supported family.

    Raises VariantMismatch when the computed forms are not exactly the
    listed set for the variant the restriction equalities select.
    """
    if support is None:
        support = check_restrictions(d)
    fs = build_ideal_generators(d)
    forms = tuple(lowest_degree_form(f) for f in fs)
    for i, (f, g) in enumerate(zip(fs, forms), start=1):
        deg = is_homogeneous(g)
        if deg is None:
            raise InternalInconsistency(f"lowest form of f{i} is not homogeneous")
        if any(sum(e) < deg for e, _ in f.items()):
            raise InternalInconsistency(f"f{i} has a term below its lowest form")

    eqs = support.equalities()
    variant = variant_from_equalities(d.case, eqs)
    env = d.env()
    expected = template_generators(d.case, variant, env)
    for i, (f, g) in enumerate(zip(forms, expected), start=1):
        if not _same_up_to_sign(f, g):
            raise VariantMismatch(
                f"case {d.case} variant {variant}: f{i}* = {render(f)}, listed {render(g)}",
                generator=i, computed=render(f), listed=render(g),
            )
    hits = matching_variants(d.case, forms, env)
    if hits != [variant]:
        raise VariantMismatch(f"forms match variants {hits}, expected only {variant}", matches=hits)

    degrees = tuple(is_homogeneous(g) for g in expected)
    return TangentConeIdeal(
        generators=expected, case=d.case, variant=variant, degrees=degrees,
        lowest_forms=forms, equalities=eqs, support=support,
    )
