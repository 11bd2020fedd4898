"""Exact sparse linear algebra over the coefficient fields.

Vectors are dicts index -> Scalar with no stored zeros.
"""

from __future__ import annotations


def _axpy(target, source, c):
    """target += c * source (in place)."""
    for i, v in source.items():
        w = target.get(i)
        w = v * c if w is None else w + v * c
        if w.is_zero():
            target.pop(i, None)
        else:
            target[i] = w


def echelon(vectors):
    """Row-reduce ``vectors``; returns a list of (pivot, row) with unit pivots."""
    basis = {}  # pivot -> row, pivot coefficient 1
    order = []
    for vec in vectors:
        row = dict(vec)
        while row:
            p = min(row)
            b = basis.get(p)
            if b is None:
                inv = row[p].inverse()
                row = {i: v * inv for i, v in row.items()}
                basis[p] = row
                order.append(p)
                break
            _axpy(row, b, -row[p])
    return [(p, basis[p]) for p in order]


def rank(vectors):
    """Exact rank of a family of sparse vectors (or a LinearOperator)."""
    if hasattr(vectors, "columns"):
        vectors = vectors.columns()
    return len(echelon(vectors))


def solve(columns, target):
    """Find x with sum_j x_j * columns[j] = target, or None if impossible.

    ``columns`` is a list of sparse vectors; the result is a dict j -> Scalar.
    """
    basis = {}  # pivot -> (row, combo) ; row = combination of columns given by combo
    for j, col in enumerate(columns):
        if not col:
            continue
        row = dict(col)
        combo = {j: next(iter(col.values())).field.one}
        while row:
            p = min(row)
            b = basis.get(p)
            if b is None:
                inv = row[p].inverse()
                basis[p] = ({i: v * inv for i, v in row.items()}, {i: v * inv for i, v in combo.items()})
                break
            c = -row[p]
            _axpy(row, b[0], c)
            _axpy(combo, b[1], c)
    rest = dict(target)
    x = {}
    while rest:
        p = min(rest)
        b = basis.get(p)
        if b is None:
            return None
        c = rest[p]
        _axpy(rest, b[0], -c)
        _axpy(x, b[1], c)
    return x
