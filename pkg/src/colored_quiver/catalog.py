"""Enumeration of orbit labels and closed-form orbit dimensions."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Optional, Sequence, Union

from .combinatorics import (
    ColoredPartition,
    MarkedPartition,
    box_signature,
    canonical_form,
    ceil_div,
    classify_marking,
    column_signature,
    partitions,
    rep,
    signature,
)
from .markings import OrbitClass, class_canonical


class NotColoredBipartition(ValueError):
    pass


def _row_signature(length: int, color: int, n: int) -> tuple[int, ...]:
    return box_signature(ColoredPartition((length,), (color,), n))


@lru_cache(maxsize=None)
def _colored_partitions(xi: tuple[int, ...], n: int) -> tuple[ColoredPartition, ...]:
    total = sum(xi)
    found = []
    for shape in partitions(total):
        blocks = []
        for length in sorted(set(shape), reverse=True):
            blocks.append((length, shape.count(length)))

        def extend(b, remaining, colors):
            if b == len(blocks):
                if not any(remaining):
                    found.append(ColoredPartition(shape, tuple(colors), n))
                return
            length, count = blocks[b]
            for choice in combinations_with_replacement(range(n), count):
                rest = list(remaining)
                ok = True
                for c in choice:
                    for col, k in enumerate(_row_signature(length, c, n)):
                        rest[col] -= k
                        if rest[col] < 0:
                            ok = False
                if ok:
                    extend(b + 1, rest, colors + list(choice))

        extend(0, list(xi), [])
    found.sort(key=lambda cp: (cp.shape, cp.colors))
    return tuple(found)


def enumerate_colored_partitions(xi: Sequence[int], n: Optional[int] = None) -> list[ColoredPartition]:
    """One representative per row-equivalence class with signature ``xi``."""
    xi = tuple(xi)
    n = len(xi) if n is None else n
    if len(xi) != n:
        raise ValueError("signature length must equal n")
    return list(_colored_partitions(xi, n))


def _class_marks(length: int, eps: int, m: int, n: int) -> list[int]:
    """Marks in (-n, length] that put the row in class ``m``, descending."""
    top = length - rep(m - eps, n)  # largest k <= length in class m
    return list(range(top, -n, -n))


def markings_in_class(cp: ColoredPartition, m: int) -> list[MarkedPartition]:
    """All colored n-bipartition markings of ``cp`` with class color ``m``."""
    n = cp.n
    rows = cp.rows()
    options = [_class_marks(lam, eps, m, n) for lam, eps in rows]
    found = set()

    def extend(i, marks):
        if i == len(rows):
            found.add(canonical_form(MarkedPartition(cp.shape, cp.colors, tuple(marks), n)))
            return
        lam_i = rows[i][0]
        for mu in options[i]:
            nu = lam_i - mu
            if all(
                mu < marks[j] + n and nu < (rows[j][0] - marks[j]) + n for j in range(i)
            ):
                extend(i + 1, marks + [mu])

    extend(0, [])
    return sorted(found, key=lambda x: x.marks, reverse=True)


def enumerate_cqbs(xi: Sequence[int], n: Optional[int], m: int) -> list[MarkedPartition]:
    """Colored n-bipartitions of signature ``xi`` and class color ``m``."""
    out = []
    for cp in enumerate_colored_partitions(xi, n):
        out.extend(markings_in_class(cp, m))
    return out


@dataclass(frozen=True)
class OrbitRecord:
    label: Union[OrbitClass, ColoredPartition]
    class_color: Optional[int]
    dim: int
    ambient: tuple[int, ...]


def dim_nilpotent_orbit(cp: ColoredPartition) -> int:
    """``sum_i (dim V_i)^2 - sum_k s_{lambda_k}(eps_k)``, ambient dims from the label."""
    xi = signature(cp)
    stabilizer = sum(
        column_signature(cp, lam)[eps] for lam, eps in zip(cp.shape, cp.colors)
    )
    return sum(d * d for d in xi) - stabilizer


def dim_enhanced_orbit(cqb: Union[MarkedPartition, OrbitClass]) -> int:
    if isinstance(cqb, OrbitClass):
        cqb = cqb.representative()
    if not classify_marking(cqb).is_colored_k_bipartition:
        raise NotColoredBipartition("dimension formula needs a colored n-bipartition")
    return dim_nilpotent_orbit(cqb.base) + sum(ceil_div(max(mu, 0), cqb.n) for mu in cqb.marks)


def enumerate_orbit_classes(xi: Sequence[int], n: Optional[int] = None) -> list[OrbitRecord]:
    """Every enhanced orbit label of signature ``xi`` with its dimension."""
    xi = tuple(xi)
    n = len(xi) if n is None else n
    classes = set()
    for m in range(n):
        classes.update(class_canonical(c) for c in enumerate_cqbs(xi, n, m))
    records = []
    for oc in sorted(classes, key=OrbitClass.sort_key):
        records.append(OrbitRecord(oc, oc.class_color(), dim_enhanced_orbit(oc), xi))
    return records


def nilpotent_orbit_records(xi: Sequence[int], n: Optional[int] = None) -> list[OrbitRecord]:
    xi = tuple(xi)
    return [
        OrbitRecord(cp, None, dim_nilpotent_orbit(cp), xi)
        for cp in enumerate_colored_partitions(xi, n)
    ]


def cqb_records(xi: Sequence[int], n: Optional[int], m: int) -> list[OrbitRecord]:
    xi = tuple(xi)
    return [
        OrbitRecord(class_canonical(c), rep(m, len(xi)), dim_enhanced_orbit(c), xi)
        for c in enumerate_cqbs(xi, n, m)
    ]
