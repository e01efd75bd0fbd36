"""Exact dense/sparse linear algebra over Q or a prime field GF(p).

Scalars are ``Fraction`` when ``p is None`` and ints in ``range(p)``
otherwise.  Matrices are lists of row lists.  Rank and nullspace go through
:class:`Echelon`, an incremental row-echelon form over sparse rows, which
keeps the commutator systems (a few nonzeros per equation) cheap.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional, Sequence


def scalar(a, p: Optional[int] = None):
    """Coerce an int, Fraction or ``"a/b"`` string into the field."""
    if isinstance(a, str):
        a = Fraction(a)
    if p is None:
        return Fraction(a)
    a = Fraction(a)
    return (a.numerator * pow(a.denominator, -1, p)) % p


def inverse(a, p: Optional[int]):
    if p is None:
        return 1 / Fraction(a)
    return pow(a, -1, p)


def zeros(rows: int, cols: int, p: Optional[int] = None) -> list[list]:
    z = scalar(0, p)
    return [[z] * cols for _ in range(rows)]


def identity(size: int, p: Optional[int] = None) -> list[list]:
    out = zeros(size, size, p)
    for i in range(size):
        out[i][i] = scalar(1, p)
    return out


def matmul(a, b, p: Optional[int] = None) -> list[list]:
    if not a or not b:
        return zeros(len(a), len(b[0]) if b else 0, p)
    cols = len(b[0])
    out = []
    for row in a:
        acc = [0] * cols
        for k, x in enumerate(row):
            if x:
                bk = b[k]
                for c in range(cols):
                    if bk[c]:
                        acc[c] += x * bk[c]
        out.append([_red(v, p) for v in acc])
    return out


def matvec(a, v, p: Optional[int] = None) -> list:
    return [_red(sum(x * y for x, y in zip(row, v)), p) for row in a]


def _red(v, p):
    return Fraction(v) if p is None else v % p


def is_zero_matrix(a) -> bool:
    return all(not x for row in a for x in row)


def matpow(a, k: int, p: Optional[int] = None):
    out = identity(len(a), p)
    for _ in range(k):
        out = matmul(out, a, p)
    return out


def det(a, p: Optional[int] = None):
    """Determinant by elimination (used for small invertibility checks)."""
    m = [list(r) for r in a]
    size = len(m)
    result = scalar(1, p)
    for c in range(size):
        piv = next((r for r in range(c, size) if m[r][c]), None)
        if piv is None:
            return scalar(0, p)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            result = _red(-result, p)
        result = _red(result * m[c][c], p)
        inv = inverse(m[c][c], p)
        for r in range(c + 1, size):
            if m[r][c]:
                f = _red(m[r][c] * inv, p)
                m[r] = [_red(x - f * y, p) for x, y in zip(m[r], m[c])]
    return result


class Echelon:
    """Incremental row-echelon form over sparse ``{column: value}`` rows.

    Each stored row has leading entry 1 at its pivot column and no entries
    to the left of it.
    """

    def __init__(self, ncols: int, p: Optional[int] = None):
        self.ncols = ncols
        self.p = p
        self.pivots: dict[int, dict[int, object]] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def _reduce(self, row: dict) -> dict:
        p = self.pivots
        mod = self.p
        row = dict(row)
        while True:
            hit = [c for c in row if c in p]
            if not hit:
                return row
            c = min(hit)
            f = row[c]
            for k, v in p[c].items():
                val = row.get(k, 0) - f * v
                if mod is not None:
                    val %= mod
                if val:
                    row[k] = val
                else:
                    row.pop(k, None)

    def _coerce(self, row) -> dict:
        items = row.items() if isinstance(row, dict) else enumerate(row)
        out = {}
        for c, v in items:
            if not v:
                continue
            if self.p is None:
                v = v if isinstance(v, Fraction) else Fraction(v)
            elif not isinstance(v, int):
                v = scalar(v, self.p)
            else:
                v %= self.p
            if v:
                out[c] = v
        return out

    def add(self, row) -> bool:
        """Insert a row (dense list or sparse dict); True if it raised the rank."""
        row = self._reduce(self._coerce(row))
        if not row:
            return False
        lead = min(row)
        inv = inverse(row[lead], self.p)
        if self.p is None:
            row = {c: v * inv for c, v in row.items()}
        else:
            row = {c: (v * inv) % self.p for c, v in row.items()}
        self.pivots[lead] = row
        return True

    def contains(self, row) -> bool:
        return not self._reduce(self._coerce(row))

    def reduced(self) -> dict[int, dict]:
        """Fully reduced pivot rows (zeros above every pivot)."""
        mod = self.p
        rows = {c: dict(r) for c, r in self.pivots.items()}
        for c in sorted(rows, reverse=True):
            pivot_row = rows[c]
            for other, r in rows.items():
                if other == c or c not in r:
                    continue
                f = r[c]
                for k, v in pivot_row.items():
                    val = r.get(k, 0) - f * v
                    if mod is not None:
                        val %= mod
                    if val:
                        r[k] = val
                    else:
                        r.pop(k, None)
        return rows

    def nullspace(self) -> list[list]:
        """Basis of the solution space of the stored homogeneous system."""
        rows = self.reduced()
        free = [c for c in range(self.ncols) if c not in rows]
        zero, one = scalar(0, self.p), scalar(1, self.p)
        basis = []
        for f in free:
            vec = [zero] * self.ncols
            vec[f] = one
            for c, r in rows.items():
                if f in r:
                    vec[c] = _red(-r[f], self.p)
            basis.append(vec)
        return basis


def rank(rows: Iterable, ncols: Optional[int] = None, p: Optional[int] = None) -> int:
    rows = list(rows)
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    ech = Echelon(ncols, p)
    for r in rows:
        ech.add(r)
    return ech.rank


def nullspace(rows: Iterable, ncols: int, p: Optional[int] = None) -> list[list]:
    ech = Echelon(ncols, p)
    for r in rows:
        ech.add(r)
    return ech.nullspace()


def solve_in_span(basis: Sequence[Sequence], target: Sequence, p: Optional[int] = None):
    """Coefficients c with ``sum c_i basis_i == target``, or None."""
    k = len(basis)
    dim = len(target)
    # columns are basis vectors; augmented column at index k
    rows = []
    for r in range(dim):
        rows.append({**{i: basis[i][r] for i in range(k) if basis[i][r]}, **({k: target[r]} if target[r] else {})})
    ech = Echelon(k + 1, p)
    for row in rows:
        ech.add(row)
    if k in ech.pivots:
        return None
    reduced = ech.reduced()
    coeffs = [scalar(0, p)] * k
    for c, row in reduced.items():
        coeffs[c] = row.get(k, scalar(0, p))
    return coeffs


def transpose(a) -> list[list]:
    return [list(col) for col in zip(*a)] if a else []


def inverse_matrix(a, p: Optional[int] = None) -> list[list]:
    """Gauss-Jordan inverse; raises ValueError if ``a`` is singular."""
    size = len(a)
    m = [list(row) + ident for row, ident in zip(a, identity(size, p))]
    for c in range(size):
        piv = next((r for r in range(c, size) if m[r][c]), None)
        if piv is None:
            raise ValueError("singular matrix")
        m[c], m[piv] = m[piv], m[c]
        inv = inverse(m[c][c], p)
        m[c] = [_red(x * inv, p) for x in m[c]]
        for r in range(size):
            if r != c and m[r][c]:
                f = m[r][c]
                m[r] = [_red(x - f * y, p) for x, y in zip(m[r], m[c])]
    return [row[size:] for row in m]
