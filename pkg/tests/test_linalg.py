"""Exact linear algebra: echelon forms, kernels, solving, quotients."""

import random

from hypothesis import given, settings, strategies as st

from algebroid.linalg import (
    AntilinearMap, Matrix, QuotientSpace, Subspace, invert, kernel,
    kron_mat, kron_vec, rank, rref, solve, unit, vadd, veq, vscale, vsub,
)
from algebroid.scalars import I, ONE, QRat, qi


def mat(rows):
    """Dense helper: rows of ints/QRat."""
    nr, nc = len(rows), len(rows[0]) if rows else 0
    return Matrix.from_entries(
        nr, nc,
        ((i, j, x if isinstance(x, QRat) else QRat(x))
         for i, r in enumerate(rows) for j, x in enumerate(r) if x))


def rand_matrix(rng, nr, nc, density=0.5):
    entries = []
    for i in range(nr):
        for j in range(nc):
            if rng.random() < density:
                entries.append((i, j, QRat(rng.randint(-4, 4), rng.randint(-2, 2))))
    return Matrix.from_entries(nr, nc, entries)


def test_kernel_identity():
    assert kernel(Matrix.identity(3)).dim == 0


def test_kernel_zero():
    assert kernel(Matrix.zero(2, 2)).dim == 2


def test_kernel_row_1_i():
    # kernel([[1, i]]) = span{(-i, 1)}
    m = mat([[ONE, I]])
    k = kernel(m)
    assert k.dim == 1
    v = k.rows[0]
    assert not m.apply(v)
    # echelon normalisation puts a 1 in the pivot slot
    assert ONE * v[0] + I * v[1] == QRat(0)


def test_solve_identity():
    b = {0: qi(3), 2: I}
    assert veq(solve(Matrix.identity(3), b), b)


def test_solve_no_solution():
    assert solve(Matrix.zero(2, 2), {0: ONE}) is None


def test_solve_free_variable_convention():
    # solve([[1,1]], [2]) -> (2, 0)
    x = solve(mat([[1, 1]]), {0: qi(2)})
    assert veq(x, {0: qi(2)})


def test_rank_nullity_random():
    rng = random.Random(7)
    for _ in range(20):
        nr, nc = rng.randint(1, 7), rng.randint(1, 7)
        m = rand_matrix(rng, nr, nc)
        assert rank(m) + kernel(m).dim == nc


def test_echelon_canonical():
    rng = random.Random(11)
    for _ in range(10):
        n = 6
        vecs = [ {j: QRat(rng.randint(-3, 3), rng.randint(-1, 1)) for j in range(n)}
                 for _ in range(3)]
        s1 = Subspace(n, vecs)
        # a different generating set of the same span
        mixed = [vadd(vecs[0], vecs[1]), vscale(qi(-2), vecs[1]),
                 vadd(vecs[2], vscale(I, vecs[0]))]
        s2 = Subspace(n, mixed)
        assert s1 == s2


def test_quotient_identity_and_zero():
    q = QuotientSpace(3, Subspace(3, []))
    assert q.dim == 3
    full = QuotientSpace(3, Subspace(3, [unit(0), unit(1), unit(2)]))
    assert full.dim == 0


def test_quotient_pair_identified():
    q = QuotientSpace(2, Subspace(2, [vsub(unit(0), unit(1))]))
    assert q.dim == 1
    assert veq(q.project(unit(0)), q.project(unit(1)))


def test_quotient_invariants_random():
    rng = random.Random(23)
    for _ in range(15):
        n = rng.randint(1, 8)
        rels = Subspace(n, [
            {j: QRat(rng.randint(-2, 2)) for j in range(n) if rng.random() < 0.5}
            for _ in range(rng.randint(0, n))])
        q = QuotientSpace(n, rels)
        # projection . section = id
        assert (q.projection @ q.section) == Matrix.identity(q.dim)
        # section . projection - id maps into the relations
        m = q.section @ q.projection
        for j in range(n):
            d = vsub(m.col(j), unit(j))
            assert rels.contains(d)
        # projection annihilates exactly the relations
        for row in rels.rows:
            assert not q.project(row)
        assert rels.dim + q.dim == n


def test_invert():
    m = mat([[1, 1], [0, 1]])
    mi = invert(m)
    assert mi and (mi.inverse @ m) == Matrix.identity(2)
    bad = invert(mat([[1, 1], [1, 1]]))
    assert not bad and bad.witness is not None


def test_kron():
    u, v = {0: ONE, 1: I}, {1: qi(2)}
    w = kron_vec(u, v, 2)
    assert w == {1: qi(2), 3: qi(0, 2)}
    a = mat([[1, 2], [0, 1]])
    b = mat([[0, 1], [1, 0]])
    ab = kron_mat(a, b)
    x = kron_vec({0: ONE}, {0: ONE}, 2)
    assert veq(ab.apply(x), kron_vec(a.apply({0: ONE}), b.apply({0: ONE}), 2))


def test_antilinear_composition():
    m1, m2 = mat([[0, 1], [1, 0]]), mat([[I, 0], [0, 1]])
    f, g = AntilinearMap(m1), AntilinearMap(m2)
    v = {0: I, 1: qi(1, 1)}
    # f(g(v)) as plain matrix
    comp = f.compose_anti(g)
    assert veq(comp.apply(v), f.apply(g.apply(v)))


@settings(max_examples=60, derandomize=True)
@given(st.integers(0, 10**6))
def test_rref_idempotent(seed):
    rng = random.Random(seed)
    n = 5
    vecs = [{j: QRat(rng.randint(-3, 3)) for j in range(n) if rng.random() < 0.6}
            for _ in range(4)]
    piv, rows = rref(vecs, n)
    piv2, rows2 = rref(rows, n)
    assert piv == piv2
    assert all(veq(a, b) for a, b in zip(rows, rows2))
