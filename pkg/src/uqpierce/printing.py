"""Canonical text for elements and tensors (re-readable by the parser)."""

from __future__ import annotations

_CARTAN = {0: ("K", "Kb", "P"), 1: ("L", "Lb", "Q")}
_OVERLINE = {"Kb": "K̄", "Lb": "L̄"}


def _power(sym, e):
    return sym if e == 1 else f"{sym}^{e}"


def format_monomial(m, unicode=False):
    side, z, j, k = m
    parts = []
    if side is None:
        if z > 0:
            parts.append(_power("k", z))
        elif z < 0:
            parts.append(_power("kinv", -z))
        e, f = "e", "f"
    else:
        pos, neg, idem = _CARTAN[side]
        if unicode:
            neg = _OVERLINE[neg]
        if z > 0:
            parts.append(_power(pos, z))
        elif z < 0:
            parts.append(_power(neg, -z))
        else:
            parts.append(idem)
        e, f = "E", "F"
    if j:
        parts.append(_power(e, j))
    if k:
        parts.append(_power(f, k))
    return "*".join(parts) if parts else "1"


def _term(coeff, body):
    if coeff.is_one():
        return body
    if (-coeff).is_one():
        return "-" + body
    text = str(coeff)
    if coeff.is_atomic():
        return f"{text}*{body}"
    return f"({text})*{body}"


def _join(terms):
    if not terms:
        return "0"
    out = terms[0]
    for t in terms[1:]:
        out += " - " + t[1:] if t.startswith("-") else " + " + t
    return out


def format_element(x, unicode=False):
    """Text of an Element, monomials ordered by (side, z, j, k)."""
    return _join([_term(c, format_monomial(m, unicode)) for m, c in x.items()])


def format_tensor(t, unicode=False):
    sep = " ⊗ " if unicode else " (x) "
    terms = []
    for key, c in t.items():
        body = sep.join(format_monomial(m, unicode) for m in key)
        terms.append(_term(c, body))
    return _join(terms)


def format_value(v, unicode=False):
    from .algebra import Element
    from .tensor import TensorElement

    if isinstance(v, Element):
        return format_element(v, unicode)
    if isinstance(v, TensorElement):
        return format_tensor(v, unicode)
    return str(v)
