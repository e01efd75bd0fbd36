"""Colored partitions, signatures and markings.

Colors are plain ints reduced into ``range(n)``; a signature is a tuple of
``n`` nonnegative ints indexed by color.  Rows are 1-based wherever a row
index is part of the public API (``box_color``, ``delete_rows``), matching
the usual (i, j) box coordinates of a Young diagram.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Iterable, Iterator, Optional, Sequence


def rep(i: int, n: int) -> int:
    """Smallest nonnegative representative of ``i`` modulo ``n``."""
    return i % n


def ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def clamp_mark(mark: int, n: int) -> int:
    """Move a mark <= -n into (-n, 0] without changing its residue."""
    if mark > -n:
        return mark
    return -((-mark) % n)


# -- partitions ---------------------------------------------------------------


def is_partition(parts: Sequence[int]) -> bool:
    return all(p > 0 for p in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1)
    )


def transpose(parts: Sequence[int]) -> tuple[int, ...]:
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p > j) for j in range(parts[0]))


def eta(parts: Sequence[int]) -> int:
    """sum (i-1) lambda_i, cross-checked against sum C(lambda^t_i, 2)."""
    direct = sum(i * p for i, p in enumerate(parts))
    via_transpose = sum(comb(c, 2) for c in transpose(parts))
    assert direct == via_transpose
    return direct


def partitions(size: int, max_part: Optional[int] = None) -> Iterator[tuple[int, ...]]:
    """All partitions of ``size`` in reverse lexicographic order."""
    if max_part is None:
        max_part = size
    if size == 0:
        yield ()
        return
    for first in range(min(size, max_part), 0, -1):
        for rest in partitions(size - first, first):
            yield (first,) + rest


# -- signatures -----------------------------------------------------------------


def zero_signature(n: int) -> tuple[int, ...]:
    return (0,) * n


def add_signatures(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    if len(a) != len(b):
        raise ValueError("signatures of different moduli")
    return tuple(x + y for x, y in zip(a, b))


def signature_leq(a: Sequence[int], b: Sequence[int]) -> bool:
    return all(x <= y for x, y in zip(a, b))


# -- value types ----------------------------------------------------------------


def _check_shape(shape: tuple[int, ...]) -> None:
    if not is_partition(shape):
        raise ValueError(f"not a partition: {shape}")


@dataclass(frozen=True)
class ColoredPartition:
    """A partition with a color in Z/n attached to each nonzero row.

    ``colors[i]`` is the color of the rightmost box of row ``i``.  Rows are
    stored in canonical order (length descending, color ascending); use
    :meth:`from_rows` to build one from rows in any order.
    """

    shape: tuple[int, ...]
    colors: tuple[int, ...]
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("modulus must be positive")
        object.__setattr__(self, "shape", tuple(int(p) for p in self.shape))
        object.__setattr__(self, "colors", tuple(rep(int(c), self.n) for c in self.colors))
        _check_shape(self.shape)
        if len(self.colors) != len(self.shape):
            raise ValueError("need exactly one color per nonzero row")
        rows = sorted(zip(self.shape, self.colors), key=lambda r: (-r[0], r[1]))
        object.__setattr__(self, "shape", tuple(r[0] for r in rows))
        object.__setattr__(self, "colors", tuple(r[1] for r in rows))

    @classmethod
    def from_rows(cls, rows: Iterable[tuple[int, int]], n: int) -> "ColoredPartition":
        rows = [(length, color) for length, color in rows if length > 0]
        rows.sort(key=lambda r: (-r[0], rep(r[1], n)))
        return cls(tuple(r[0] for r in rows), tuple(r[1] for r in rows), n)

    @classmethod
    def empty(cls, n: int) -> "ColoredPartition":
        return cls((), (), n)

    @property
    def size(self) -> int:
        return sum(self.shape)

    @property
    def length(self) -> int:
        return len(self.shape)

    def rows(self) -> list[tuple[int, int]]:
        return list(zip(self.shape, self.colors))

    def box_color(self, i: int, j: int) -> int:
        return box_color(self, i, j)

    def signature(self) -> tuple[int, ...]:
        return signature(self)

    def with_marks(self, marks: Sequence[int]) -> "MarkedPartition":
        return MarkedPartition(self.shape, self.colors, tuple(marks), self.n)


@dataclass(frozen=True)
class MarkedPartition:
    """A colored partition together with an integer mark per row.

    The mark ``mu_i`` places a wall after box ``mu_i`` of row ``i``; marks
    at or below zero put the wall at the left end.  Marks are kept in the
    range ``-n < mu_i <= lambda_i``: anything lower is moved up by multiples
    of ``n``, which keeps the row's class color ``eps_i + [lambda_i - mu_i]``.

    Rows keep the order they were given in (the shape must still be weakly
    decreasing); see :func:`canonical_form`.
    """

    shape: tuple[int, ...]
    colors: tuple[int, ...]
    marks: tuple[int, ...]
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("modulus must be positive")
        object.__setattr__(self, "shape", tuple(int(p) for p in self.shape))
        object.__setattr__(self, "colors", tuple(rep(int(c), self.n) for c in self.colors))
        _check_shape(self.shape)
        if not (len(self.colors) == len(self.marks) == len(self.shape)):
            raise ValueError("need exactly one color and one mark per nonzero row")
        for lam, mu in zip(self.shape, self.marks):
            if mu > lam:
                raise InvalidMarking(f"mark {mu} exceeds row length {lam}")
        object.__setattr__(self, "marks", tuple(clamp_mark(int(m), self.n) for m in self.marks))

    @classmethod
    def from_rows(cls, rows: Iterable[tuple[int, int, int]], n: int) -> "MarkedPartition":
        """Build from (length, color, mark) rows in any order; result is canonical."""
        rows = [r for r in rows if r[0] > 0]
        return canonical_form(cls._unsorted(rows, n))

    @classmethod
    def _unsorted(cls, rows, n):
        rows = sorted(rows, key=lambda r: -r[0])
        return cls(
            tuple(r[0] for r in rows), tuple(r[1] for r in rows), tuple(r[2] for r in rows), n
        )

    @classmethod
    def empty(cls, n: int) -> "MarkedPartition":
        return cls((), (), (), n)

    @property
    def base(self) -> ColoredPartition:
        return ColoredPartition(self.shape, self.colors, self.n)

    @property
    def nu(self) -> tuple[int, ...]:
        return tuple(lam - mu for lam, mu in zip(self.shape, self.marks))

    @property
    def length(self) -> int:
        return len(self.shape)

    def rows(self) -> list[tuple[int, int, int]]:
        return list(zip(self.shape, self.colors, self.marks))

    def row_classes(self) -> tuple[int, ...]:
        """The color ``eps_i + [nu_i]`` of the box just left of each mark."""
        return tuple(
            rep(e + lam - mu, self.n) for lam, e, mu in zip(self.shape, self.colors, self.marks)
        )

    def replace_marks(self, marks: Sequence[int]) -> "MarkedPartition":
        return MarkedPartition(self.shape, self.colors, tuple(marks), self.n)

    def signature(self) -> tuple[int, ...]:
        return signature(self.base)


class InvalidMarking(ValueError):
    pass


# -- box geometry ---------------------------------------------------------------


def box_color(cp: ColoredPartition, i: int, j: int) -> int:
    """Color of box (i, j), both 1-based: ``eps_i + [lambda_i - j]``."""
    if not 1 <= i <= cp.length:
        raise IndexError(f"row {i} out of range")
    lam = cp.shape[i - 1]
    if not 1 <= j <= lam:
        raise IndexError(f"column {j} out of range for row of length {lam}")
    return rep(cp.colors[i - 1] + lam - j, cp.n)


def box_signature(cp: ColoredPartition, max_column: Optional[int] = None) -> tuple[int, ...]:
    counts = [0] * cp.n
    for lam, eps in zip(cp.shape, cp.colors):
        top = lam if max_column is None else min(lam, max_column)
        for j in range(1, top + 1):
            counts[rep(eps + lam - j, cp.n)] += 1
    return tuple(counts)


def signature_closed_form(cp: ColoredPartition) -> tuple[int, ...]:
    # xi_m = sum_i ceil((lambda_i - rep(m - eps_i)) / n)
    n = cp.n
    return tuple(
        sum(ceil_div(lam - rep(m - eps, n), n) for lam, eps in zip(cp.shape, cp.colors))
        for m in range(n)
    )


def signature(cp: ColoredPartition) -> tuple[int, ...]:
    """Per-color box counts; the closed form and direct count must agree."""
    closed = signature_closed_form(cp)
    counted = box_signature(cp)
    if closed != counted:
        raise AssertionError(f"signature mismatch {closed} != {counted}")
    return closed


def column_signature(cp: ColoredPartition, k: int) -> tuple[int, ...]:
    """Signature of the boxes in the first ``k`` columns."""
    if k <= 0:
        raise ValueError("column count must be positive")
    return box_signature(cp, k)


# -- canonical form and classification --------------------------------------------


def _row_key(row):
    lam, eps, mu = row
    return (-lam, eps, -mu)


def canonical_form(mcp: MarkedPartition) -> MarkedPartition:
    """Sort rows by (length desc, color asc, mark desc)."""
    rows = sorted(mcp.rows(), key=_row_key)
    return MarkedPartition(
        tuple(r[0] for r in rows), tuple(r[1] for r in rows), tuple(r[2] for r in rows), mcp.n
    )


@dataclass(frozen=True)
class MarkingClassification:
    is_bipartition: bool
    is_k_bipartition: bool
    is_colored_k_bipartition: bool
    is_generalized_k_bipartition: bool
    class_color: Optional[int] = field(default=None)


def _is_bipartition(shape, marks) -> bool:
    nu = [lam - mu for lam, mu in zip(shape, marks)]
    if any(mu < 0 for mu in marks):
        return False
    return all(
        marks[i + 1] <= marks[i] and nu[i + 1] <= nu[i] for i in range(len(shape) - 1)
    )


def _pair_ok(mu_i, nu_i, mu_j, nu_j, k) -> bool:
    return mu_j < mu_i + k and nu_j < nu_i + k


def _is_k_bipartition(shape, marks, k, classes=None) -> bool:
    if any(mu <= -k for mu in marks):
        return False
    nu = [lam - mu for lam, mu in zip(shape, marks)]
    for i in range(len(shape)):
        for j in range(i + 1, len(shape)):
            if classes is not None and classes[i] != classes[j]:
                continue
            if not _pair_ok(marks[i], nu[i], marks[j], nu[j], k):
                return False
    return True


def common_class(mcp: MarkedPartition) -> Optional[int]:
    """Shared class color of the positively marked rows.

    With no positive marks, falls back to the class shared by all rows (as
    for ``rho_m(lambda, eps, 0)``); returns None if there is none.
    """
    classes = mcp.row_classes()
    positive = {c for c, mu in zip(classes, mcp.marks) if mu >= 1}
    if positive:
        return positive.pop() if len(positive) == 1 else None
    every = set(classes)
    return every.pop() if len(every) == 1 else None


def classify_marking(mcp: MarkedPartition, k: Optional[int] = None) -> MarkingClassification:
    """Evaluate the bipartition predicates for ``mcp`` (default ``k = n``).

    Colored-ness only constrains rows with a positive mark: a row marked at
    or below zero contributes nothing to the enhancing vector.
    """
    if k is None:
        k = mcp.n
    for lam, mu in zip(mcp.shape, mcp.marks):
        if mu > lam:
            raise InvalidMarking(f"mark {mu} exceeds row length {lam}")
    shape, marks = mcp.shape, mcp.marks
    # congruence classes mod k, not mod n
    classes = tuple(rep(e + lam - mu, k) for lam, e, mu in zip(shape, mcp.colors, marks))
    positive = {c for c, mu in zip(classes, marks) if mu >= 1}
    k_bip = _is_k_bipartition(shape, marks, k)
    return MarkingClassification(
        is_bipartition=_is_bipartition(shape, marks),
        is_k_bipartition=k_bip,
        is_colored_k_bipartition=k_bip and len(positive) <= 1,
        is_generalized_k_bipartition=_is_k_bipartition(shape, marks, k, classes),
        class_color=common_class(mcp) if k == mcp.n else None,
    )


def is_colored_bipartition(mcp: MarkedPartition) -> bool:
    """Shorthand: colored n-bipartition with n the modulus of ``mcp``."""
    return classify_marking(mcp).is_colored_k_bipartition
