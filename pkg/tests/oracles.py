"""Naive reference implementations used only by the tests.

These deliberately share no code with the package: each one follows the
definitions literally (draw the diagram, try every marking, ...) and is
only fast enough for tiny inputs.
"""

from __future__ import annotations

import itertools
from math import comb


def draw(shape, colors, n):
    """Grid of box colors: row i is a list of colors, left to right.

    Colors are filled from the right end, each step left adding one.
    """
    grid = []
    for lam, eps in zip(shape, colors):
        row = [None] * lam
        c = eps % n
        for j in range(lam - 1, -1, -1):
            row[j] = c
            c = (c + 1) % n
        grid.append(row)
    return grid


def count_colors(shape, colors, n, max_column=None):
    out = [0] * n
    for row in draw(shape, colors, n):
        for j, c in enumerate(row, start=1):
            if max_column is None or j <= max_column:
                out[c] += 1
    return tuple(out)


def all_partitions(size):
    """Every partition of ``size`` by filtering compositions."""
    found = set()
    for cuts in itertools.product([0, 1], repeat=max(size - 1, 0)):
        parts, cur = [], 1
        for c in cuts:
            if c:
                parts.append(cur)
                cur = 1
            else:
                cur += 1
        if size:
            parts.append(cur)
        found.add(tuple(sorted(parts, reverse=True)))
    return sorted(found)


def eta_by_columns(shape):
    cols = [sum(1 for p in shape if p > j) for j in range(shape[0])] if shape else []
    return sum(comb(c, 2) for c in cols)


def canonical_rows(rows):
    return tuple(sorted(rows, key=lambda r: (-r[0], r[1], -r[2] if len(r) > 2 else 0)))


def colored_partitions(xi):
    """All row-equivalence classes of signature ``xi`` via product of colors."""
    n = len(xi)
    out = set()
    for shape in all_partitions(sum(xi)):
        for colors in itertools.product(range(n), repeat=len(shape)):
            if count_colors(shape, colors, n) == tuple(xi):
                out.add(canonical_rows(list(zip(shape, colors))))
    return out


def is_bipartition(shape, marks):
    nu = [l - m for l, m in zip(shape, marks)]
    if any(m < 0 for m in marks):
        return False
    for i in range(len(shape) - 1):
        if marks[i + 1] > marks[i] or nu[i + 1] > nu[i]:
            return False
    return True


def is_k_bipartition(shape, marks, k):
    nu = [l - m for l, m in zip(shape, marks)]
    if any(m <= -k for m in marks):
        return False
    for i, j in itertools.combinations(range(len(shape)), 2):
        if marks[j] >= marks[i] + k or nu[j] >= nu[i] + k:
            return False
    return True


def row_class(lam, eps, mu, n):
    return (eps + lam - mu) % n


def cqbs(xi, m):
    """Colored n-bipartitions of class m: every row in class m (marks in (-n, lam])."""
    n = len(xi)
    out = set()
    for rows in colored_partitions(xi):
        choices = [
            [mu for mu in range(-n + 1, lam + 1) if row_class(lam, eps, mu, n) == m % n]
            for lam, eps in rows
        ]
        shape = [r[0] for r in rows]
        for marks in itertools.product(*choices):
            if is_k_bipartition(shape, marks, n):
                out.add(canonical_rows([(l, e, mu) for (l, e), mu in zip(rows, marks)]))
    return out


def orbit_classes(xi):
    """cqbs over every class color, marks clipped at zero."""
    out = set()
    for m in range(len(xi)):
        for rows in cqbs(xi, m):
            out.add(canonical_rows([(l, e, max(mu, 0)) for l, e, mu in rows]))
    return out


def min_bipartition_brute(shape, marks):
    """Componentwise minimum of every bipartition marking delta >= marks.

    Asserts the minimum is itself one of the candidates.
    """
    ranges = [range(max(mu, 0), lam + 1) for lam, mu in zip(shape, marks)]
    cands = [d for d in itertools.product(*ranges) if is_bipartition(shape, d)]
    low = tuple(min(c[i] for c in cands) for i in range(len(shape)))
    assert low in cands
    return low


def nilpotent_dim_n1(shape):
    k = sum(shape)
    cols = [sum(1 for p in shape if p > j) for j in range(shape[0])] if shape else []
    return k * k - sum(c * c for c in cols)
