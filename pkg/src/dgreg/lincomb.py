"""Linear combinations of basis labels: the coefficient dictionaries used
by every multiplication, differential, and action table.

A combination is a plain dict ``{label: scalar}`` with no zero entries;
the degree is contextual (all labels of one combination live in a single
degree of a single presentation).
"""

from __future__ import annotations

from .fields import FieldSpec


def czero() -> dict:
    return {}


def cclean(field: FieldSpec, c: dict) -> dict:
    return {k: v for k, v in c.items() if not field.is_zero(v)}


def cadd(field: FieldSpec, a: dict, b: dict) -> dict:
    out = dict(a)
    for k, v in b.items():
        out[k] = field.add(out.get(k, field.zero()), v)
    return cclean(field, out)


def cscale(field: FieldSpec, s, a: dict) -> dict:
    if field.is_zero(s):
        return {}
    return cclean(field, {k: field.mul(s, v) for k, v in a.items()})


def cneg(field: FieldSpec, a: dict) -> dict:
    return {k: field.neg(v) for k, v in a.items()}

def csub(field: FieldSpec, a: dict, b: dict) -> dict:
    return cadd(field, a, cneg(field, b))


def ceq(field: FieldSpec, a: dict, b: dict) -> bool:
    return cclean(field, a) == cclean(field, b)


def to_vector(field: FieldSpec, c: dict, basis) -> tuple:
    """Coordinates of a combination in the given ordered basis."""
    unknown = set(c) - set(basis)
    if unknown:
        raise KeyError(f"labels {sorted(unknown)} not in basis")
    z = field.zero()
    return tuple(c.get(lbl, z) for lbl in basis)


def from_vector(field: FieldSpec, vec, basis) -> dict:
    return cclean(field, dict(zip(basis, vec)))


def cformat(field: FieldSpec, c: dict, basis_order=None) -> str:
    """Canonical text: `c1*lbl1 + c2*lbl2`, coefficient 1 omitted, `0` if empty."""
    if not c:
        return "0"
    labels = list(basis_order) if basis_order else sorted(c)
    terms = []
    for lbl in labels:
        if lbl not in c:
            continue
        v = c[lbl]
        terms.append(lbl if field.is_one(v) else f"{field.format(v)}*{lbl}")
    return " + ".join(terms)
