"""Exact rank of sparse integer matrices over the rationals."""

from math import gcd


def _normalize(row):
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            break
    if g > 1:
        row = {k: v // g for k, v in row.items()}
    # fix the sign of the leading entry so pivots are positive
    lead = min(row)
    if row[lead] < 0:
        row = {k: -v for k, v in row.items()}
    return row


def sparse_rank(rows):
    """Rank over Q of a matrix given as an iterable of ``{column: int}`` rows.

    Fraction-free incremental echelon form: each incoming row is reduced
    against stored pivots by integer cross-multiplication and divided by its
    content, so entries stay small and everything is exact.
    """
    pivots = {}
    for row in rows:
        row = {k: v for k, v in row.items() if v}
        while row:
            c = min(row)
            p = pivots.get(c)
            if p is None:
                pivots[c] = _normalize(row)
                break
            a, b = row[c], p[c]
            new = {k: b * v for k, v in row.items()}
            for k, v in p.items():
                w = new.get(k, 0) - a * v
                if w:
                    new[k] = w
                else:
                    new.pop(k, None)
            row = _normalize(new) if new else new
    return len(pivots)
