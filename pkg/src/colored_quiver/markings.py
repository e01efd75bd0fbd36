"""Operations on marked colored partitions.

``minimal_bipartition`` and ``rho`` move marks left/right, ``normalize``
runs the mark-shifting loop that turns any marking with a single class
color into a colored n-bipartition, and ``minimal_marking`` goes the other
way, lowering marks as far as the orbit allows.  Row surgery (deletion,
union, color reduction) and the split into characteristic and plain parts
live here too.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Optional

from .combinatorics import (
    ColoredPartition,
    InvalidMarking,
    MarkedPartition,
    canonical_form,
    classify_marking,
    rep,
)


class ClassMismatch(ValueError):
    pass


class NotMinimal(ValueError):
    pass


# -- minimal bipartition and rho_m ------------------------------------------------


def minimal_bipartition(mcp: MarkedPartition) -> MarkedPartition:
    """Smallest bipartition marking that dominates ``mcp``'s marks."""
    lam, mu = mcp.shape, mcp.marks
    out = []
    for i in range(len(lam)):
        candidates = [0]
        candidates.extend(mu[i:])
        candidates.extend(lam[i] - lam[j] + mu[j] for j in range(i))
        out.append(max(candidates))
    return mcp.replace_marks(out)


def rho(mcp: MarkedPartition, m: int) -> MarkedPartition:
    """Shift each mark left to the nearest position of class color ``m``."""
    n = mcp.n
    out = []
    for lam, eps, mu in mcp.rows():
        # largest k <= mu with eps + [lam - k] == m
        out.append(mu - rep(m - (eps + lam - mu), n))
    return mcp.replace_marks(out)


def force_class(lam: int, eps: int, m: int, n: int) -> int:
    """The unique mark in (-n, 0] putting a row of length ``lam`` in class ``m``."""
    # nu = min{t >= lam : eps + [t] = m}
    nu = lam + rep(m - eps - lam, n)
    return lam - nu


# -- normalization ------------------------------------------------------------------


def _violations(lam, mu, n):
    out = []
    for i in range(len(lam)):
        for j in range(i + 1, len(lam)):
            if mu[i] + n <= mu[j]:
                out.append((i, i))
            elif (lam[i] - mu[i]) + n <= (lam[j] - mu[j]):
                out.append((i, j))
    return out


def normalize(
    mcp: MarkedPartition, m: int, rng: Optional[random.Random] = None
) -> MarkedPartition:
    """Bring a marking of class ``m`` to the colored n-bipartition in its fiber.

    Rows with a nonpositive mark are first moved into class ``m``.  Then,
    while some pair i < j has ``mu_i + n <= mu_j`` the mark of row i moves
    right by n, and while ``nu_i + n <= nu_j`` the mark of row j does.  Every
    pair checked shares class ``m``.  ``rng`` picks a random violating pair
    at each step instead of the first one; the result does not depend on it.
    """
    n = mcp.n
    m = rep(m, n)
    lam = mcp.shape
    mu = list(mcp.marks)
    for i, (length, eps, mark) in enumerate(mcp.rows()):
        if mark >= 1:
            if rep(eps + length - mark, n) != m:
                raise ClassMismatch(f"row {i + 1} has class {rep(eps + length - mark, n)}, not {m}")
        else:
            mu[i] = force_class(length, eps, m, n)
    while True:
        bad = _violations(lam, mu, n)
        if not bad:
            break
        _, row = bad[0] if rng is None else rng.choice(bad)
        mu[row] += n
        assert mu[row] <= lam[row]
    return mcp.replace_marks(mu)


@dataclass(frozen=True)
class OrbitClass:
    """A marked colored partition with nonpositive marks collapsed to 0.

    This is the label of one enhanced orbit: the colored n-bipartitions in
    a class agree once marks at or below zero are ignored.
    """

    base: ColoredPartition
    marks: tuple[int, ...]

    def __post_init__(self):
        if len(self.marks) != self.base.length:
            raise ValueError("one mark per row required")
        if any(mu < 0 for mu in self.marks):
            raise ValueError("class marks are clipped at zero")

    @property
    def zero_vector(self) -> bool:
        return all(mu == 0 for mu in self.marks)

    @property
    def n(self) -> int:
        return self.base.n

    def class_color(self) -> Optional[int]:
        """Class color forced by the positive marks (None for the zero vector)."""
        colors = {
            rep(e + lam - mu, self.n)
            for lam, e, mu in zip(self.base.shape, self.base.colors, self.marks)
            if mu >= 1
        }
        if len(colors) > 1:
            raise ValueError("positive marks in several class colors")
        return colors.pop() if colors else None

    def representative(self, m: Optional[int] = None) -> MarkedPartition:
        """A colored n-bipartition in this class (class ``m`` for the zero vector)."""
        forced = self.class_color()
        if forced is None:
            m = 0 if m is None else rep(m, self.n)
        elif m is not None and rep(m, self.n) != forced:
            raise ClassMismatch(f"class is {forced}, not {m}")
        else:
            m = forced
        shape, colors = self.base.shape, self.base.colors
        marks = [
            mu if mu >= 1 else force_class(lam, e, m, self.n)
            for lam, e, mu in zip(shape, colors, self.marks)
        ]
        return MarkedPartition(shape, colors, tuple(marks), self.n)

    def to_marked(self) -> MarkedPartition:
        return MarkedPartition(self.base.shape, self.base.colors, self.marks, self.n)

    def sort_key(self):
        return (self.base.size, self.base.shape, self.base.colors, self.marks)


def class_canonical(mcp: MarkedPartition) -> OrbitClass:
    clipped = MarkedPartition(mcp.shape, mcp.colors, tuple(max(mu, 0) for mu in mcp.marks), mcp.n)
    canon = canonical_form(clipped)
    return OrbitClass(canon.base, canon.marks)


# -- minimal markings ------------------------------------------------------------------


def _reductions(mcp: MarkedPartition):
    """Rows whose mark may be lowered by n without leaving the orbit."""
    lam, mu = mcp.shape, mcp.marks
    classes = mcp.row_classes()
    out = []
    for i in range(len(lam)):
        if mu[i] < 1:
            continue
        for j in range(i + 1, len(lam)):
            if mu[j] < 1 or classes[i] != classes[j]:
                continue
            if mu[i] <= mu[j]:
                out.append(i)
            elif lam[i] - mu[i] <= lam[j] - mu[j]:
                out.append(j)
    return out


def is_minimal_marking(mcp: MarkedPartition) -> bool:
    return all(mu >= 0 for mu in mcp.marks) and not _reductions(mcp)


def minimal_marking(
    mcp: MarkedPartition, rng: Optional[random.Random] = None
) -> MarkedPartition:
    """Lower marks until no same-class pair of marked rows violates
    ``mu_i > mu_j`` and ``nu_i > nu_j``.

    Each step replaces an offending mark by ``max(mark - n, 0)``; the result
    is canonical and independent of which offending row is picked.
    """
    if any(mu < 0 for mu in mcp.marks):
        raise InvalidMarking("minimal markings are defined for marks >= 0")
    cur = canonical_form(mcp)
    while True:
        rows = _reductions(cur)
        if not rows:
            return cur
        row = rows[0] if rng is None else rng.choice(rows)
        marks = list(cur.marks)
        marks[row] = max(marks[row] - cur.n, 0)
        cur = canonical_form(cur.replace_marks(marks))


# -- row surgery -------------------------------------------------------------------


def delete_rows(mcp: MarkedPartition, rows: Iterable[int]) -> MarkedPartition:
    """Drop the rows with the given 1-based indices."""
    drop = set(rows)
    for k in drop:
        if not 1 <= k <= mcp.length:
            raise IndexError(f"row {k} out of range")
    kept = [r for i, r in enumerate(mcp.rows(), start=1) if i not in drop]
    return MarkedPartition._unsorted(kept, mcp.n)


def union(a: MarkedPartition, b: MarkedPartition) -> MarkedPartition:
    """Interlace the rows of ``a`` and ``b`` and sort into canonical order."""
    if a.n != b.n:
        raise ValueError(f"cannot join markings with moduli {a.n} and {b.n}")
    return MarkedPartition.from_rows(a.rows() + b.rows(), a.n)


def reduce_colors(mcp: MarkedPartition, k: int) -> MarkedPartition:
    """Reduce colors modulo a divisor ``k`` of ``n``; marks are untouched."""
    if k < 1 or mcp.n % k:
        raise ValueError(f"{k} does not divide {mcp.n}")
    return MarkedPartition(mcp.shape, tuple(c % k for c in mcp.colors), mcp.marks, k)


@dataclass(frozen=True)
class CharacteristicDecomposition:
    characteristic: MarkedPartition
    plain: ColoredPartition

    def join(self) -> MarkedPartition:
        plain = self.plain.with_marks((0,) * self.plain.length)
        return union(self.characteristic, plain)


def characteristic_decomposition(mcp: MarkedPartition) -> CharacteristicDecomposition:
    """Split a minimal marking into its marked rows and its unmarked rows."""
    if not is_minimal_marking(mcp):
        raise NotMinimal("input is not a minimal marking; run minimal_marking first")
    marked = [r for r in mcp.rows() if r[2] > 0]
    plain = [(lam, eps) for lam, eps, mu in mcp.rows() if mu == 0]
    return CharacteristicDecomposition(
        MarkedPartition.from_rows(marked, mcp.n), ColoredPartition.from_rows(plain, mcp.n)
    )


def is_characteristic(mcp: MarkedPartition) -> bool:
    """All marks positive and strict inequalities within each class."""
    return all(mu >= 1 for mu in mcp.marks) and not _reductions(mcp)


def bipartition_condition_holds(mcp: MarkedPartition) -> bool:
    """``0 <= mu~ - mu < n`` componentwise."""
    tilde = minimal_bipartition(mcp).marks
    return all(0 <= t - mu < mcp.n for t, mu in zip(tilde, mcp.marks))


__all__ = [
    "CharacteristicDecomposition",
    "ClassMismatch",
    "NotMinimal",
    "OrbitClass",
    "bipartition_condition_holds",
    "characteristic_decomposition",
    "class_canonical",
    "classify_marking",
    "delete_rows",
    "force_class",
    "is_characteristic",
    "is_minimal_marking",
    "minimal_bipartition",
    "minimal_marking",
    "normalize",
    "reduce_colors",
    "rho",
    "union",
]
