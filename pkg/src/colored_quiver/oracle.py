"""Matrix-level verification of the combinatorial orbit calculus.

Everything here works with explicit matrices over Q (``p=None``) or a prime
field GF(p).  A colored space ``V = V_0 + ... + V_{n-1}`` uses standard
coordinates with the colors laid out consecutively; a colored nilpotent is
given by its blocks ``x_i: V_i -> V_{i+1}``.
"""

from __future__ import annotations

import itertools
import json
import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from . import linalg as la
from .catalog import enumerate_orbit_classes
from .combinatorics import (
    ColoredPartition,
    MarkedPartition,
    canonical_form,
    column_signature,
    eta,
    rep,
    signature,
)
from .markings import OrbitClass, class_canonical, normalize

DEFAULT_BUDGET = 5_000_000


class NotNilpotent(ValueError):
    pass


class BudgetExceeded(RuntimeError):
    def __init__(self, needed: int, budget: int):
        super().__init__(f"census needs {needed} group-element applications, budget is {budget}")
        self.needed = needed
        self.budget = budget


# -- spaces, vectors, endomorphisms -------------------------------------------------


@dataclass(frozen=True)
class ColoredSpace:
    n: int
    dims: tuple[int, ...]
    p: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "dims", tuple(self.dims))
        if len(self.dims) != self.n or any(d < 0 for d in self.dims):
            raise ValueError(f"bad dimension vector {self.dims} for n={self.n}")

    @property
    def total(self) -> int:
        return sum(self.dims)

    @property
    def offsets(self) -> tuple[int, ...]:
        return tuple(itertools.accumulate((0,) + self.dims[:-1]))

    def color_slice(self, c: int) -> range:
        start = self.offsets[c]
        return range(start, start + self.dims[c])

    def color_of(self, index: int) -> int:
        for c in range(self.n):
            if index in self.color_slice(c):
                return c
        raise IndexError(index)

    def colors(self) -> list[int]:
        return [c for c in range(self.n) for _ in range(self.dims[c])]

    def group_dim(self) -> int:
        return sum(d * d for d in self.dims)

    def zero(self) -> list:
        return [la.scalar(0, self.p)] * self.total


def vector_color(space: ColoredSpace, coords: Sequence) -> Optional[int]:
    """Color of a vector, None for zero; ValueError if it is not colored."""
    seen = {space.color_of(i) for i, a in enumerate(coords) if a}
    if len(seen) > 1:
        raise ValueError("vector has components in several colors")
    return seen.pop() if seen else None


@dataclass(frozen=True)
class ColoredVector:
    space: ColoredSpace
    coords: tuple
    color: Optional[int] = None

    def __post_init__(self):
        coords = tuple(la.scalar(a, self.space.p) for a in self.coords)
        object.__setattr__(self, "coords", coords)
        if len(coords) != self.space.total:
            raise ValueError("coordinate count does not match the space")
        actual = vector_color(self.space, coords)
        if self.color is None:
            object.__setattr__(self, "color", actual)
        elif actual is not None and actual != rep(self.color, self.space.n):
            raise ValueError("coordinates lie outside the stated color")
        elif actual is None:
            object.__setattr__(self, "color", None)

    @classmethod
    def zero(cls, space: ColoredSpace) -> "ColoredVector":
        return cls(space, tuple(space.zero()))

    @property
    def is_zero(self) -> bool:
        return self.color is None


@dataclass(frozen=True)
class BlockNilpotent:
    """Colored endomorphism given by blocks ``blocks[i]: V_i -> V_{i+1}``.

    ``blocks[i]`` has ``dims[i+1]`` rows and ``dims[i]`` columns.
    """

    space: ColoredSpace
    blocks: tuple

    def __post_init__(self):
        p, dims, n = self.space.p, self.space.dims, self.space.n
        blocks = tuple(
            tuple(tuple(la.scalar(a, p) for a in row) for row in block) for block in self.blocks
        )
        if len(blocks) != n:
            raise ValueError("one block per color required")
        for i, block in enumerate(blocks):
            rows, cols = dims[(i + 1) % n], dims[i]
            if len(block) != rows or any(len(r) != cols for r in block):
                raise ValueError(f"block {i} should be {rows}x{cols}")
        object.__setattr__(self, "blocks", blocks)

    @classmethod
    def from_matrix(cls, space: ColoredSpace, matrix) -> "BlockNilpotent":
        off, dims, n = space.offsets, space.dims, space.n
        blocks = []
        for i in range(n):
            j = (i + 1) % n
            blocks.append(
                [[matrix[off[j] + r][off[i] + c] for c in range(dims[i])] for r in range(dims[j])]
            )
        return cls(space, tuple(blocks))

    def matrix(self) -> list[list]:
        space = self.space
        out = la.zeros(space.total, space.total, space.p)
        off, n = space.offsets, space.n
        for i, block in enumerate(self.blocks):
            j = (i + 1) % n
            for r, row in enumerate(block):
                for c, a in enumerate(row):
                    out[off[j] + r][off[i] + c] = a
        return out

    def is_nilpotent(self) -> bool:
        return la.is_zero_matrix(la.matpow(self.matrix(), self.space.total, self.space.p))

    def check_nilpotent(self) -> None:
        if not self.is_nilpotent():
            raise NotNilpotent("endomorphism is not nilpotent")

    def conjugate(self, k: Sequence) -> "BlockNilpotent":
        """``k . x = k x k^-1`` for ``k = (k_0, ..., k_{n-1})`` in ``prod GL(V_i)``."""
        p, n = self.space.p, self.space.n
        inv = [la.inverse_matrix(g, p) if g else [] for g in k]
        blocks = []
        for i, block in enumerate(self.blocks):
            j = (i + 1) % n
            if not block or not block[0]:
                blocks.append(block)
                continue
            blocks.append(la.matmul(la.matmul(k[j], [list(r) for r in block], p), inv[i], p))
        return BlockNilpotent(self.space, tuple(blocks))


def act_on_vector(k: Sequence, v: ColoredVector) -> ColoredVector:
    if v.is_zero:
        return v
    space = v.space
    sl = space.color_slice(v.color)
    part = la.matvec(k[v.color], [v.coords[i] for i in sl], space.p)
    coords = list(space.zero())
    for i, a in zip(sl, part):
        coords[i] = a
    return ColoredVector(space, tuple(coords), v.color)


# -- representatives ------------------------------------------------------------------


@dataclass(frozen=True)
class JordanBasisData:
    """Labeled colored Jordan basis ``{v_(i,j)}`` (1-based) of type ``label``."""

    label: ColoredPartition
    vectors: dict = field(compare=False)

    def ordered(self) -> list[tuple[int, int]]:
        return [
            (i, j) for i, lam in enumerate(self.label.shape, start=1) for j in range(1, lam + 1)
        ]


def box_indices(cp: ColoredPartition) -> dict[tuple[int, int], int]:
    """Standard coordinate of each box: boxes of color c fill ``V_c`` row-major."""
    counts = [0] * cp.n
    dims = signature(cp)
    offsets = list(itertools.accumulate((0,) + dims[:-1]))
    out = {}
    for i, (lam, eps) in enumerate(cp.rows(), start=1):
        for j in range(1, lam + 1):
            c = rep(eps + lam - j, cp.n)
            out[(i, j)] = offsets[c] + counts[c]
            counts[c] += 1
    return out


def build_representative(mcp, p: Optional[int] = None):
    """Standard representative ``(v, x, basis)`` of the orbit labeled by ``mcp``.

    ``x`` sends box (i, j) to box (i, j-1) and ``v`` is the sum of the boxes
    sitting just left of a positive mark.
    """
    if isinstance(mcp, ColoredPartition):
        mcp = mcp.with_marks((0,) * mcp.length)
    if isinstance(mcp, OrbitClass):
        mcp = mcp.to_marked()
    mcp = canonical_form(mcp)  # row order must match the base partition's
    cp = mcp.base
    space = ColoredSpace(cp.n, signature(cp), p)
    idx = box_indices(cp)
    size = space.total
    mat = la.zeros(size, size, p)
    one = la.scalar(1, p)
    for (i, j), col in idx.items():
        if j > 1:
            mat[idx[(i, j - 1)]][col] = one
    x = BlockNilpotent.from_matrix(space, mat)
    coords = list(space.zero())
    for i, mu in enumerate(mcp.marks, start=1):
        if mu >= 1:
            coords[idx[(i, mu)]] = la.scalar(coords[idx[(i, mu)]] + 1, p)
    v = ColoredVector(space, tuple(coords))
    vectors = {}
    for key, col in idx.items():
        e = list(space.zero())
        e[col] = one
        vectors[key] = tuple(e)
    return v, x, JordanBasisData(cp, vectors)


# -- Jordan data from matrices -------------------------------------------------------


def _restricted_rank(power, space: ColoredSpace, c: int) -> int:
    cols = list(space.color_slice(c))
    return la.rank([[row[i] for i in cols] for row in power], len(cols), space.p)


def kernel_signatures(x: BlockNilpotent) -> list[tuple[int, ...]]:
    """``s_k = signature(ker x^k)`` for k = 1, 2, ... until it reaches ``dims``."""
    x.check_nilpotent()
    space = x.space
    mat = x.matrix()
    power = mat
    out = []
    while True:
        s = tuple(space.dims[c] - _restricted_rank(power, space, c) for c in range(space.n))
        out.append(s)
        if s == space.dims:
            return out
        power = la.matmul(power, mat, space.p)


def jordan_type(x: BlockNilpotent):
    """Colored Jordan type of ``x`` and its kernel signatures ``s_1, s_2, ...``."""
    space = x.space
    n = space.n
    if space.total == 0:
        return ColoredPartition.empty(n), []
    s = kernel_signatures(x)
    prev = (0,) * n
    columns = []
    for sk in s:
        columns.append(tuple(a - b for a, b in zip(sk, prev)))
        prev = sk
    columns.append((0,) * n)
    rows = []
    for k in range(1, len(columns)):
        here, right = columns[k - 1], columns[k]
        for e in range(n):
            # a box of color e-1 in column k+1 sits right of a color-e box in column k
            ending = here[e] - right[rep(e - 1, n)]
            if ending < 0:
                raise AssertionError("kernel signatures do not assemble into rows")
            rows.extend([(k, e)] * ending)
    return ColoredPartition.from_rows(rows, n), s


def _unit(space: ColoredSpace, t: int) -> list:
    e = list(space.zero())
    e[t] = la.scalar(1, space.p)
    return e


def colored_jordan_basis(x: BlockNilpotent) -> JordanBasisData:
    """Build a colored Jordan basis one chain at a time.

    At each step take a standard basis vector ``w`` whose image in
    ``V / W`` has the largest nilpotency order ``k`` (``W`` = span of the
    chains so far), write ``x^k w`` in the chain basis of ``W`` and subtract
    the matching ``x^(j-k)`` shifts so the corrected ``w`` starts a new chain
    of length ``k``.  Standard basis vectors are colored, and so is every
    correction, which keeps the whole basis colored.
    """
    x.check_nilpotent()
    space = x.space
    p = space.p
    mat = x.matrix()
    ech = la.Echelon(space.total, p)
    chains = []  # (generator, length)
    labels = []  # (chain index, power) for each vector in ``span``
    span = []

    def apply(v, times=1):
        for _ in range(times):
            v = la.matvec(mat, v, p)
        return v

    while ech.rank < space.total:
        best = None
        for t in range(space.total):
            cur = _unit(space, t)
            k = 0
            while not ech.contains(cur):
                cur = apply(cur)
                k += 1
            if best is None or k > best[1]:
                best = (t, k)
        t, k = best
        w = _unit(space, t)
        target = apply(w, k)
        if span:
            coeffs = la.solve_in_span(span, target, p)
            assert coeffs is not None
            for a, (chain, j) in zip(coeffs, labels):
                if not a:
                    continue
                assert j >= k, "correction term would need a negative power"
                shift = apply(chains[chain][0], j - k)
                w = [la._red(wi - a * si, p) for wi, si in zip(w, shift)]
        idx = len(chains)
        chains.append((w, k))
        cur = w
        for j in range(k):
            span.append(cur)
            labels.append((idx, j))
            assert ech.add(cur)
            cur = apply(cur)

    order = sorted(
        range(len(chains)),
        key=lambda c: (-chains[c][1], vector_color(space, chains[c][0])),
    )
    rows = []
    vectors = {}
    for i, c in enumerate(order, start=1):
        gen, length = chains[c]
        rows.append((length, vector_color(space, gen)))
        cur = gen
        for j in range(length, 0, -1):
            vectors[(i, j)] = tuple(cur)
            cur = apply(cur)
    label = ColoredPartition(tuple(r[0] for r in rows), tuple(r[1] for r in rows), space.n)
    return JordanBasisData(label, vectors)


def verify_jordan_basis(data: JordanBasisData, x: BlockNilpotent) -> bool:
    """Chain relations, box colors, and that the vectors form a basis."""
    space = x.space
    mat = x.matrix()
    cp = data.label
    zero = tuple(space.zero())
    keys = data.ordered()
    if set(keys) != set(data.vectors) or len(keys) != space.total:
        return False
    for i, j in keys:
        vec = data.vectors[(i, j)]
        image = tuple(la.matvec(mat, vec, space.p))
        if image != (data.vectors[(i, j - 1)] if j > 1 else zero):
            return False
        try:
            color = vector_color(space, vec)
        except ValueError:
            return False
        if color != cp.box_color(i, j):
            return False
    return la.rank([data.vectors[key] for key in keys], space.total, space.p) == space.total


def coordinates_in_basis(data: JordanBasisData, v: Sequence, p: Optional[int]) -> dict:
    keys = data.ordered()
    coeffs = la.solve_in_span([data.vectors[key] for key in keys], list(v), p)
    if coeffs is None:
        raise ValueError("vector not in span of basis")
    return dict(zip(keys, coeffs))


def classify_pair(v: ColoredVector, x: BlockNilpotent) -> OrbitClass:
    """Orbit label of ``(v, x)`` read off a colored Jordan basis."""
    if not isinstance(v, ColoredVector):
        raise TypeError("classify_pair needs a ColoredVector")
    basis = colored_jordan_basis(x)
    cp = basis.label
    if v.is_zero:
        return class_canonical(cp.with_marks((0,) * cp.length))
    coeffs = coordinates_in_basis(basis, v.coords, x.space.p)
    marks = []
    for i, lam in enumerate(cp.shape, start=1):
        # top nonzero position of the component in block i
        top = max((j for j in range(1, lam + 1) if coeffs[(i, j)]), default=0)
        marks.append(top)
    mcp = MarkedPartition(cp.shape, cp.colors, tuple(marks), cp.n)
    return class_canonical(normalize(mcp, v.color))


# -- commutants and dimensions ----------------------------------------------------------


def _commutator_system(x: BlockNilpotent, colored: bool):
    """Sparse equations ``(yx - xy)[r][c] = 0`` in the unknown entries of ``y``."""
    space = x.space
    size = space.total
    mat = x.matrix()
    colors = space.colors()
    unknowns = [
        (r, c) for r in range(size) for c in range(size) if not colored or colors[r] == colors[c]
    ]
    index = {rc: k for k, rc in enumerate(unknowns)}
    col_nz = [[(k, mat[k][c]) for k in range(size) if mat[k][c]] for c in range(size)]
    row_nz = [[(k, mat[r][k]) for k in range(size) if mat[r][k]] for r in range(size)]
    p = space.p
    equations = []
    for r in range(size):
        for c in range(size):
            eq = {}
            for k, a in col_nz[c]:  # y[r][k] x[k][c]
                u = index.get((r, k))
                if u is not None:
                    eq[u] = eq.get(u, 0) + a
            for k, a in row_nz[r]:  # - x[r][k] y[k][c]
                u = index.get((k, c))
                if u is not None:
                    eq[u] = eq.get(u, 0) - a
            eq = {u: la._red(a, p) for u, a in eq.items()}
            eq = {u: a for u, a in eq.items() if a}
            if eq:
                equations.append(eq)
    return unknowns, equations


def commutant_basis(x: BlockNilpotent, colored: bool = False) -> list[list[list]]:
    """Basis of ``E^x`` (or ``F^x`` when ``colored``) from the nullspace solve."""
    space = x.space
    unknowns, equations = _commutator_system(x, colored)
    null = la.nullspace(equations, len(unknowns), space.p)
    out = []
    for vec in null:
        y = la.zeros(space.total, space.total, space.p)
        for (r, c), a in zip(unknowns, vec):
            y[r][c] = a
        out.append(y)
    return out


def commutant_dims(x: BlockNilpotent) -> tuple[int, int]:
    """``(dim E^x, dim F^x)`` as nullspace dimensions of ``yx = xy``."""
    x.check_nilpotent()
    p = x.space.p
    dims = []
    for colored in (False, True):
        unknowns, equations = _commutator_system(x, colored)
        dims.append(len(unknowns) - la.rank(equations, len(unknowns), p))
    return dims[0], dims[1]


def commutant_dims_formula(cp: ColoredPartition) -> tuple[int, int]:
    """``(dim V + 2 eta(lambda), sum_k s_{lambda_k}(eps_k))``."""
    e_dim = cp.size + 2 * eta(cp.shape)
    f_dim = sum(column_signature(cp, lam)[eps] for lam, eps in zip(cp.shape, cp.colors))
    return e_dim, f_dim


def explicit_commutant_basis(data: JordanBasisData, x: BlockNilpotent, colored: bool = False):
    """The endomorphisms ``y_(k,a,b)``: ``v_(k,j) -> v_(a, b+j-lambda_k)``, other rows to 0.

    Returned as matrices in standard coordinates.
    """
    space = x.space
    p = space.p
    cp = data.label
    keys = data.ordered()
    basis_matrix = la.transpose([list(data.vectors[key]) for key in keys])
    to_basis = la.inverse_matrix(basis_matrix, p)
    zero = list(space.zero())
    out = []
    lam = cp.shape
    for k in range(1, cp.length + 1):
        for a in range(1, cp.length + 1):
            for b in range(1, min(lam[a - 1], lam[k - 1]) + 1):
                if colored and cp.box_color(a, b) != cp.colors[k - 1]:
                    continue
                images = []
                for key in keys:
                    i, j = key
                    target = b + j - lam[k - 1]
                    if i == k and target >= 1:
                        images.append(list(data.vectors[(a, target)]))
                    else:
                        images.append(zero)
                out.append(la.matmul(la.transpose(images), to_basis, p))
    return out


def _span_rank(ys, v, p) -> int:
    vecs = [la.matvec(y, v, p) for y in ys]
    return la.rank(vecs, len(v), p) if vecs else 0


def vector_span_dims(v, x: BlockNilpotent) -> tuple[int, int]:
    """``(dim E^x v, dim F^x v)`` by applying commutant bases to ``v``.

    ``v`` may be a ColoredVector or a raw coordinate sequence.
    """
    x.check_nilpotent()
    p = x.space.p
    coords = [la.scalar(a, p) for a in getattr(v, "coords", v)]
    return (
        _span_rank(commutant_basis(x, False), coords, p),
        _span_rank(commutant_basis(x, True), coords, p),
    )


def orbit_dimension_oracle(v, x: BlockNilpotent) -> int:
    """``dim K - dim F^x + dim F^x v`` from explicit stabilizer computations."""
    _, f_dim = commutant_dims(x)
    _, fv_dim = vector_span_dims(v, x)
    return x.space.group_dim() - f_dim + fv_dim


# -- brute-force census over a prime field -----------------------------------------------


def is_prime(q: int) -> bool:
    return q >= 2 and all(q % d for d in range(2, int(q**0.5) + 1))


def gl_order(d: int, q: int) -> int:
    out = 1
    for i in range(d):
        out *= q**d - q**i
    return out


def general_linear_group(d: int, q: int) -> list:
    if d == 0:
        return [()]
    out = []
    for entries in itertools.product(range(q), repeat=d * d):
        m = [list(entries[r * d:(r + 1) * d]) for r in range(d)]
        if la.det(m, q):
            out.append(tuple(tuple(r) for r in m))
    return out


def census_budget() -> int:
    return int(os.environ.get("COLORED_QUIVER_BUDGET", DEFAULT_BUDGET))


@dataclass
class Census:
    signature: tuple[int, ...]
    q: int
    orbits: int
    classes: int
    labels: list = field(default_factory=list)
    sizes: list = field(default_factory=list)

    @property
    def match(self) -> bool:
        expected = sorted(r.label.sort_key() for r in enumerate_orbit_classes(self.signature))
        return self.orbits == self.classes and sorted(
            lab.sort_key() for lab in self.labels
        ) == expected


def _all_blocks(dims, n, q):
    shapes = [(dims[(i + 1) % n], dims[i]) for i in range(n)]
    per_block = []
    for rows, cols in shapes:
        mats = []
        for entries in itertools.product(range(q), repeat=rows * cols):
            mats.append(tuple(tuple(entries[r * cols:(r + 1) * cols]) for r in range(rows)))
        per_block.append(mats)
    return itertools.product(*per_block)


def _all_colored_vectors(dims, q):
    yield (None, ())
    for c, d in enumerate(dims):
        for entries in itertools.product(range(q), repeat=d):
            if any(entries):
                yield (c, entries)


def brute_force_orbits(xi: Sequence[int], n: Optional[int] = None, q: int = 2,
                       budget: Optional[int] = None) -> Census:
    """Enumerate every ``(v, x)`` over GF(q) and split them into K-orbits.

    Each orbit is labeled with :func:`classify_pair` applied to its
    lexicographically least member.
    """
    xi = tuple(xi)
    n = len(xi) if n is None else n
    if not is_prime(q):
        raise ValueError(f"{q} is not prime")
    budget = census_budget() if budget is None else budget
    dims = xi
    space = ColoredSpace(n, dims, q)
    group_size = 1
    for d in dims:
        group_size *= gl_order(d, q)
    block_count = 1
    for i in range(n):
        block_count *= q ** (dims[(i + 1) % n] * dims[i])
    vector_count = 1 + sum(q**d - 1 for d in dims)
    needed = group_size * block_count * vector_count
    if needed > budget:
        raise BudgetExceeded(needed, budget)

    groups = [general_linear_group(d, q) for d in dims]
    inverses = [{g: tuple(map(tuple, la.inverse_matrix([list(r) for r in g], q))) if g else g
                 for g in grp} for grp in groups]
    elements = list(itertools.product(*groups))

    points = []
    for blocks in _all_blocks(dims, n, q):
        x = BlockNilpotent(space, blocks)
        if not x.is_nilpotent():
            continue
        for v in _all_colored_vectors(dims, q):
            points.append((blocks, v))
    points.sort(key=lambda pt: (pt[0], (-1,) if pt[1][0] is None else pt[1]))

    def act(k, pt):
        blocks, (color, coords) = pt
        new_blocks = []
        for i, block in enumerate(blocks):
            j = (i + 1) % n
            if not block or not block[0]:
                new_blocks.append(block)
                continue
            b = la.matmul(la.matmul([list(r) for r in k[j]], [list(r) for r in block], q),
                          [list(r) for r in inverses[i][k[i]]], q)
            new_blocks.append(tuple(tuple(r) for r in b))
        if color is None:
            return (tuple(new_blocks), (None, ()))
        w = la.matvec([list(r) for r in k[color]], list(coords), q)
        return (tuple(new_blocks), (color, tuple(w)))

    seen = set()
    labels = []
    sizes = []
    for pt in points:
        if pt in seen:
            continue
        orbit = {act(k, pt) for k in elements}
        seen |= orbit
        sizes.append(len(orbit))
        blocks, (color, coords) = pt  # points are sorted, so pt is the least member
        x = BlockNilpotent(space, blocks)
        if color is None:
            v = ColoredVector.zero(space)
        else:
            full = list(space.zero())
            for i, a in zip(space.color_slice(color), coords):
                full[i] = a
            v = ColoredVector(space, tuple(full), color)
        labels.append(classify_pair(v, x))
    classes = len(enumerate_orbit_classes(xi, n))
    return Census(xi, q, len(sizes), classes, labels, sizes)


# -- JSON interchange --------------------------------------------------------------------


def _entry_to_json(a):
    a = Fraction(a)
    return a.numerator if a.denominator == 1 else f"{a.numerator}/{a.denominator}"


def pair_to_json(v: Optional[ColoredVector], x: BlockNilpotent) -> dict:
    space = x.space
    vector = None
    if v is not None and not v.is_zero:
        sl = space.color_slice(v.color)
        vector = {"color": v.color, "coords": [_entry_to_json(v.coords[i]) for i in sl]}
    return {
        "n": space.n,
        "dims": list(space.dims),
        "blocks": [[[_entry_to_json(a) for a in row] for row in block] for block in x.blocks],
        "vector": vector,
    }


def pair_from_json(doc, p: Optional[int] = None):
    """Parse ``{"n", "dims", "blocks", "vector"}``; entries are ints or ``"a/b"``."""
    if isinstance(doc, str):
        doc = json.loads(doc)
    space = ColoredSpace(int(doc["n"]), tuple(int(d) for d in doc["dims"]), p)
    x = BlockNilpotent(space, tuple(tuple(tuple(r) for r in b) for b in doc["blocks"]))
    vec = doc.get("vector")
    if vec is None:
        return ColoredVector.zero(space), x
    color = int(vec["color"]) % space.n
    sl = space.color_slice(color)
    if len(vec["coords"]) != len(sl):
        raise ValueError(f"vector needs {len(sl)} coordinates in color {color}")
    full = list(space.zero())
    for i, a in zip(sl, vec["coords"]):
        full[i] = la.scalar(a, p)
    return ColoredVector(space, tuple(full), color), x
