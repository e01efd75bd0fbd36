import itertools
import json
import random

import pytest
from hypothesis import given, settings, strategies as st

from colored_quiver import linalg as la
from colored_quiver.catalog import dim_enhanced_orbit, enumerate_colored_partitions, enumerate_cqbs
from colored_quiver.combinatorics import ColoredPartition, MarkedPartition, ceil_div, eta
from colored_quiver.markings import class_canonical, minimal_bipartition, minimal_marking
from colored_quiver.oracle import (
    BlockNilpotent,
    BudgetExceeded,
    ColoredSpace,
    ColoredVector,
    NotNilpotent,
    act_on_vector,
    brute_force_orbits,
    build_representative,
    classify_pair,
    colored_jordan_basis,
    commutant_dims,
    commutant_dims_formula,
    explicit_commutant_basis,
    jordan_type,
    orbit_dimension_oracle,
    pair_from_json,
    pair_to_json,
    vector_span_dims,
    verify_jordan_basis,
)

TRICOLOR = ColoredPartition((5, 4, 4, 2, 2, 1), (0, 0, 2, 1, 0, 1), 3)
MARKED = MarkedPartition((5, 5, 3, 3, 2, 1), (2, 1, 1, 0, 0, 0), (1, 3, 1, 0, -1, 1), 3)


def signatures(max_size, n):
    for size in range(max_size + 1):
        for xi in itertools.product(range(size + 1), repeat=n):
            if sum(xi) == size:
                yield xi


def all_cqbs(max_size, max_n):
    for n in range(1, max_n + 1):
        for xi in signatures(max_size, n):
            for m in range(n):
                yield from enumerate_cqbs(xi, n, m)


def random_k(space, rng, p=None):
    out = []
    for d in space.dims:
        while True:
            g = [[rng.randint(-2, 2) if p is None else rng.randrange(p) for _ in range(d)]
                 for _ in range(d)]
            if la.det(g, p) or d == 0:
                break
        out.append([[la.scalar(a, p) for a in row] for row in g])
    return out


def zero_map(space):
    n = space.n
    return BlockNilpotent(
        space,
        tuple(
            tuple((0,) * space.dims[i] for _ in range(space.dims[(i + 1) % n])) for i in range(n)
        ),
    )


class TestRepresentatives:
    def test_single_row(self):
        v, x, _ = build_representative(MarkedPartition((2,), (0,), (2,), 2))
        assert x.space.dims == (1, 1)
        assert x.blocks == (((1,),), ((0,),))
        assert v.color == 0 and v.coords == (1, 0)
        assert x.is_nilpotent()

    def test_zero_marks_give_zero_vector(self):
        v, _, _ = build_representative(TRICOLOR.with_marks((0,) * 6))
        assert v.is_zero

    def test_tricolor_round_trip(self):
        _, x, basis = build_representative(TRICOLOR)
        assert x.space.total == 18
        assert jordan_type(x)[0] == TRICOLOR
        assert verify_jordan_basis(basis, x)

    def test_round_trip_all_small_labels(self):
        for n in (1, 2, 3):
            for xi in signatures(5, n):
                for cp in enumerate_colored_partitions(xi, n):
                    _, x, basis = build_representative(cp)
                    label, s = jordan_type(x)
                    assert label == cp
                    assert (s[-1] if s else tuple(0 for _ in xi)) == xi


class TestJordanType:
    def test_zero_map(self):
        space = ColoredSpace(3, (2, 0, 1))
        label, _ = jordan_type(zero_map(space))
        assert label.shape == (1, 1, 1) and label.colors == (0, 0, 2)

    def test_not_nilpotent(self):
        space = ColoredSpace(1, (1,))
        with pytest.raises(NotNilpotent):
            jordan_type(BlockNilpotent(space, (((1,),),)))

    def test_kernel_signatures_match_columns(self):
        _, x, _ = build_representative(TRICOLOR)
        _, s = jordan_type(x)
        assert s[0] == (1, 3, 2) and s[1] == (3, 5, 3) and s[-1] == (6, 7, 5)

    @settings(max_examples=40)
    @given(st.integers(0, 2**32))
    def test_conjugation_invariance(self, seed):
        rng = random.Random(seed)
        n = rng.randint(1, 3)
        xi = tuple(rng.randint(0, 3) for _ in range(n))
        cps = enumerate_colored_partitions(xi, n)
        cp = rng.choice(cps)
        _, x, _ = build_representative(cp)
        y = x.conjugate(random_k(x.space, rng))
        assert jordan_type(y)[0] == cp


class TestColoredJordanBasis:
    def test_zero_map(self):
        space = ColoredSpace(2, (2, 1))
        x = zero_map(space)
        data = colored_jordan_basis(x)
        assert data.label.shape == (1, 1, 1)
        assert verify_jordan_basis(data, x)

    def test_single_chain(self):
        _, x, basis = build_representative(ColoredPartition((4,), (1,), 3))
        data = colored_jordan_basis(x)
        assert data.label == basis.label
        assert verify_jordan_basis(data, x)

    def test_random_nilpotent_over_f5(self):
        rng = random.Random(7)
        space = ColoredSpace(2, (2, 2), 5)
        found = 0
        while found < 25:
            blocks = tuple(
                tuple(tuple(rng.randrange(5) for _ in range(2)) for _ in range(2)) for _ in range(2)
            )
            x = BlockNilpotent(space, blocks)
            if not x.is_nilpotent():
                continue
            found += 1
            data = colored_jordan_basis(x)
            assert verify_jordan_basis(data, x)
            assert data.label == jordan_type(x)[0]

    def test_detects_broken_basis(self):
        _, x, basis = build_representative(ColoredPartition((2, 1), (0, 1), 2))
        vectors = dict(basis.vectors)
        vectors[(1, 2)], vectors[(2, 1)] = vectors[(2, 1)], vectors[(1, 2)]
        broken = type(basis)(basis.label, vectors)
        assert not verify_jordan_basis(broken, x)


class TestClassifyPair:
    def test_zero_vector(self):
        _, x, _ = build_representative(TRICOLOR)
        oc = classify_pair(ColoredVector.zero(x.space), x)
        assert oc.zero_vector and oc.base == TRICOLOR

    def test_sum_of_two_kernel_vectors(self):
        space = ColoredSpace(2, (2, 2))
        oc = classify_pair(ColoredVector(space, (1, 1, 0, 0)), zero_map(space))
        assert oc.base.shape == (1, 1, 1, 1) and oc.base.colors == (0, 0, 1, 1)
        assert oc.marks == (1, 1, 0, 0)

    def test_rejects_uncolored(self):
        space = ColoredSpace(2, (1, 1))
        with pytest.raises(ValueError):
            ColoredVector(space, (1, 1))

    def test_round_trip_exhaustive(self):
        for c in all_cqbs(5, 3):
            v, x, _ = build_representative(c)
            assert classify_pair(v, x) == class_canonical(c)

    def test_minimal_marking_same_orbit(self):
        for c in all_cqbs(4, 3):
            low = minimal_marking(class_canonical(c).to_marked())
            v, x, _ = build_representative(low)
            assert classify_pair(v, x) == class_canonical(c)

    @settings(max_examples=40)
    @given(st.integers(0, 2**32))
    def test_k_invariance(self, seed):
        rng = random.Random(seed)
        n = rng.randint(1, 3)
        xi = tuple(rng.randint(0, 3) for _ in range(n))
        m = rng.randrange(n)
        cqbs = enumerate_cqbs(xi, n, m)
        c = rng.choice(cqbs)
        v, x, _ = build_representative(c)
        k = random_k(x.space, rng)
        assert classify_pair(act_on_vector(k, v), x.conjugate(k)) == class_canonical(c)


class TestCommutants:
    def test_one_color_example(self):
        _, x, _ = build_representative(ColoredPartition((2, 1), (0, 0), 1))
        assert commutant_dims(x)[0] == 5 == 3 + 2 * eta((2, 1))

    def test_zero_map(self):
        space = ColoredSpace(3, (2, 1, 2))
        assert commutant_dims(zero_map(space)) == (25, 4 + 1 + 4)

    def test_tricolor(self):
        _, x, _ = build_representative(TRICOLOR)
        assert commutant_dims(x)[1] == 27 == 6 + 5 + 5 + 5 + 3 + 3

    def test_formulas_small(self):
        for n in (1, 2, 3):
            for xi in signatures(4, n):
                for cp in enumerate_colored_partitions(xi, n):
                    _, x, _ = build_representative(cp)
                    assert commutant_dims(x) == commutant_dims_formula(cp)

    @pytest.mark.parametrize("colored", [False, True])
    def test_explicit_basis(self, colored):
        for cp in enumerate_colored_partitions((2, 2, 1)):
            _, x, basis = build_representative(cp)
            mat = x.matrix()
            ys = explicit_commutant_basis(basis, x, colored)
            assert all(la.matmul(y, mat) == la.matmul(mat, y) for y in ys)
            assert la.rank([sum(y, []) for y in ys]) == len(ys)
            assert len(ys) == commutant_dims(x)[1 if colored else 0]

    def test_explicit_basis_after_conjugation(self):
        rng = random.Random(3)
        _, x, _ = build_representative(ColoredPartition((3, 2, 1), (0, 1, 1), 2))
        y = x.conjugate(random_k(x.space, rng))
        ys = explicit_commutant_basis(colored_jordan_basis(y), y, colored=True)
        assert len(ys) == commutant_dims(y)[1]
        mat = y.matrix()
        assert all(la.matmul(z, mat) == la.matmul(mat, z) for z in ys)


class TestSpans:
    def test_zero_vector(self):
        _, x, _ = build_representative(TRICOLOR)
        assert vector_span_dims(ColoredVector.zero(x.space), x) == (0, 0)

    def test_marked(self):
        v, x, _ = build_representative(MARKED)
        assert vector_span_dims(v, x) == (10, 4)

    def test_single_row(self):
        v, x, _ = build_representative(MarkedPartition((4,), (0,), (4,), 2))
        assert vector_span_dims(v, x) == (4, 2)
        assert orbit_dimension_oracle(v, x) == 8

    def test_point_orbit(self):
        space = ColoredSpace(2, (1, 1))
        assert orbit_dimension_oracle(ColoredVector.zero(space), zero_map(space)) == 0

    def test_formulas_exhaustive(self):
        for c in all_cqbs(4, 3):
            v, x, _ = build_representative(c)
            tilde = minimal_bipartition(c)
            expected = (sum(tilde.marks), sum(ceil_div(max(mu, 0), c.n) for mu in c.marks))
            assert vector_span_dims(v, x) == expected
            assert orbit_dimension_oracle(v, x) == dim_enhanced_orbit(c)

    @settings(max_examples=30)
    @given(st.integers(0, 2**32))
    def test_cyclic_subspace_of_a_chain(self, seed):
        rng = random.Random(seed)
        length = rng.randint(1, 6)
        _, x, _ = build_representative(ColoredPartition((length,), (0,), 1))
        mat = x.matrix()
        v = [la.scalar(rng.randint(-2, 2)) for _ in range(length)]
        cyc, cur, d = [], v, 0
        while any(cur):
            cyc.append(cur)
            cur = la.matvec(mat, cur)
            d += 1
        assert la.rank(cyc, length) == d
        image = la.matpow(mat, length - d)
        cols = la.transpose(image)
        assert la.rank(cols, length) == d
        assert la.rank(cols + cyc, length) == d


class TestCensus:
    def test_two_colors(self):
        census = brute_force_orbits((1, 1), 2, 2)
        assert census.orbits == census.classes == 9
        assert census.match

    def test_line(self):
        census = brute_force_orbits((1,), 1, 2)
        assert census.orbits == 2 and census.match

    def test_empty(self):
        assert brute_force_orbits((0, 0), 2, 2).orbits == 1

    def test_orbit_sizes_sum_to_all_pairs(self):
        census = brute_force_orbits((2, 1), 2, 2)
        assert census.match
        assert sum(census.sizes) > census.orbits

    def test_budget(self, monkeypatch):
        monkeypatch.setenv("COLORED_QUIVER_BUDGET", "10")
        with pytest.raises(BudgetExceeded) as info:
            brute_force_orbits((1, 1), 2, 2)
        assert info.value.budget == 10 and info.value.needed > 10

    def test_non_prime(self):
        with pytest.raises(ValueError):
            brute_force_orbits((1, 1), 2, 4)


class TestJson:
    def test_round_trip(self):
        v, x, _ = build_representative(MARKED)
        doc = pair_to_json(v, x)
        v2, x2 = pair_from_json(json.dumps(doc))
        assert v2 == v and x2 == x

    def test_fraction_entries(self):
        doc = {"n": 1, "dims": [2], "blocks": [[[0, "1/2"], [0, 0]]], "vector": {"color": 0, "coords": ["3/4", 0]}}
        v, x = pair_from_json(doc)
        assert classify_pair(v, x).marks == (1,)
        assert pair_to_json(v, x) == {**doc, "blocks": [[[0, "1/2"], [0, 0]]]}

    def test_wrong_length(self):
        doc = {"n": 1, "dims": [2], "blocks": [[[0, 1], [0, 0]]], "vector": {"color": 0, "coords": [1]}}
        with pytest.raises(ValueError):
            pair_from_json(doc)
