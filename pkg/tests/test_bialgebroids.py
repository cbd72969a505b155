"""Bialgebroid checkers, exercised on Hopf algebras over the trivial base
(a bialgebroid over a field is a bialgebra) plus mutation fixtures."""

import random

from algebroid.algebras import FiniteStarAlgebra, trivial_algebra
from algebroid.bialgebroids import (
    FullHopfAlgebroidData, LeftBialgebroidData, RightBialgebroidData,
    check_full_hopf, check_full_star_hopf, check_galois,
    check_left_bialgebroid, check_right_bialgebroid, cop_left, galois_maps,
    op_left, transforms,
)
from algebroid.hopf import HopfStarAlgebra, cyclic_group_hopf, dual_hopf, \
    symmetric_group_hopf, check_hopf_star
from algebroid.linalg import (
    AntilinearMap, Matrix, invert, kron_vec, unit, vaxpy, veq,
)
from algebroid.scalars import ONE, QRat


def hopf_to_left(h: HopfStarAlgebra, name=None) -> LeftBialgebroidData:
    k = trivial_algebra()
    n = h.dim
    emb = Matrix.from_cols(n, [h.alg.unit])
    return LeftBialgebroidData(h.alg, k, emb, emb, h.delta, h.eps,
                               name=name or h.alg.name)


def test_hopf_star_checks():
    assert check_hopf_star(cyclic_group_hopf(2)).passed
    rep = check_hopf_star(cyclic_group_hopf(4))
    assert rep.passed
    rep = check_hopf_star(symmetric_group_hopf(3))
    assert rep.passed
    assert check_hopf_star(dual_hopf(cyclic_group_hopf(4))).passed


def test_hopf_as_left_bialgebroid():
    d = hopf_to_left(cyclic_group_hopf(4))
    rep = check_left_bialgebroid(d)
    assert rep.passed, rep.to_text()


def test_hopf_op_as_right_bialgebroid():
    d = hopf_to_left(cyclic_group_hopf(4))
    rep = check_right_bialgebroid(op_left(d))
    assert rep.passed, rep.to_text()


def test_corrupted_counit_fails_with_witness():
    h = cyclic_group_hopf(2)
    eps_bad = Matrix.from_entries(1, 2, [(0, 0, ONE), (0, 1, QRat(2))])
    d = LeftBialgebroidData(h.alg, trivial_algebra(),
                            Matrix.from_cols(2, [h.alg.unit]),
                            Matrix.from_cols(2, [h.alg.unit]),
                            h.delta, eps_bad, name="bad-eps")
    rep = check_left_bialgebroid(d)
    bad = [c for c in rep.failures() if "counit" in c.name or "eps" in c.name]
    assert bad and any(c.witness for c in rep.failures())


def test_galois_maps_reproduce_antipode():
    # lambda^-1(X (x) 1) = h(1) (x) S h(2), independent-oracle comparison
    h = cyclic_group_hopf(4)
    d = hopf_to_left(h)
    g = galois_maps(d)
    assert g.invertible
    n = h.dim
    for x in range(n):
        expected = {}
        for idx, c in h.delta.col(x).items():
            i, j = divmod(idx, n)
            vaxpy(expected, c, kron_vec(unit(i), h.antipode.col(j), n))
        assert veq(g.plus_table[x], g.src_lam.project(expected))
    rep = check_galois(d, g)
    assert rep.passed, rep.to_text()


def idempotent_bialgebra():
    """Monoid algebra of {1, x} with x^2 = x: a bialgebra with no antipode."""
    mult = {(0, 0): {0: ONE}, (0, 1): {1: ONE}, (1, 0): {1: ONE},
            (1, 1): {1: ONE}}
    alg = FiniteStarAlgebra(2, mult, {0: ONE}, name="k[x]/(x2-x)")
    delta = Matrix.from_entries(4, 2, [(0, 0, ONE), (3, 1, ONE)])
    eps = Matrix.from_entries(1, 2, [(0, 0, ONE), (0, 1, ONE)])
    return LeftBialgebroidData(alg, trivial_algebra(),
                               Matrix.from_cols(2, [alg.unit]),
                               Matrix.from_cols(2, [alg.unit]),
                               delta, eps, name="idem")


def test_bialgebra_without_antipode_not_invertible():
    d = idempotent_bialgebra()
    assert check_left_bialgebroid(d).passed
    g = galois_maps(d)
    assert not g.lam_inv
    rep = check_galois(d, g)
    fails = [c for c in rep.failures() if "invertible" in c.name]
    assert fails and fails[0].witness


def sweedler_hopf():
    """Sweedler's 4-dimensional Hopf algebra: S^2 != id."""
    # basis 1, g, x, gx with g^2=1, x^2=0, xg=-gx
    names = ["1", "g", "x", "gx"]
    mult = {}

    def m(i, j):
        # represent i as (a, b): g^a x^b with i = a + 2b
        a1, b1 = i % 2, i // 2
        a2, b2 = j % 2, j // 2
        if b1 and b2:
            return {}
        # x g = - g x: moving g^a2 past x^b1 gives (-1)^(a2 b1)
        sign = QRat(-1) if (a2 * b1) % 2 else ONE
        return {(a1 ^ a2) + 2 * (b1 | b2): sign}

    for i in range(4):
        for j in range(4):
            mult[(i, j)] = m(i, j)
    alg = FiniteStarAlgebra(4, mult, {0: ONE}, name="H4", basis=names)
    # Delta g = g (x) g, Delta x = x (x) 1 + g (x) x
    delta_cols = {0: {0: ONE}, 1: {1 * 4 + 1: ONE},
                  2: {2 * 4 + 0: ONE, 1 * 4 + 2: ONE}}
    # Delta(gx) = Delta(g)Delta(x) = gx (x) g + 1... computed by hand:
    # (g(x)g)(x(x)1 + g(x)x) = gx (x) g + g g (x) g x = gx(x)g + 1... careful:
    # g*g = 1, g*x = gx: = gx (x) g + 1*... (g g)(x)(g x) = 1 (x) gx? no:
    # (g (x) g)(x (x) 1) = gx (x) g ; (g (x) g)(g (x) x) = g g (x) g x = 1... wait
    # product is componentwise: (g)(x) = gx and (g)(1) = g -> gx (x) g;
    # (g)(g) = 1 and (g)(x) = gx -> 1 ... no: second leg (g)(x) = gx.
    delta_cols[3] = {3 * 4 + 1: ONE, 0 * 4 + 3: ONE}
    delta = Matrix(16, 4, {k: v for k, v in delta_cols.items()})
    eps = Matrix.from_entries(1, 4, [(0, 0, ONE), (0, 1, ONE)])
    # S(g) = g, S(x) = -gx  => S(gx) = S(x)S(g) = -gx g = x g... = -g x g = x
    s = Matrix.from_entries(4, 4, [(0, 0, ONE), (1, 1, ONE),
                                   (3, 2, QRat(-1)), (2, 3, QRat(1))])
    return HopfStarAlgebra(alg, delta, eps, s)


def test_sweedler_is_full_hopf():
    h = sweedler_hopf()
    # S^2 != id
    assert h.antipode @ h.antipode != Matrix.identity(4)
    d = hopf_to_left(h)
    assert check_left_bialgebroid(d).passed
    fh = FullHopfAlgebroidData(d, h.antipode)
    rep = check_full_hopf(fh)
    assert rep.passed, rep.to_text()


def test_sweedler_wrong_antipode_fails():
    h = sweedler_hopf()
    d = hopf_to_left(h)
    s_inv = invert(h.antipode).inverse
    fh = FullHopfAlgebroidData(d, s_inv)  # S and S^-1 swapped; S^2 != id
    rep = check_full_hopf(fh)
    assert not rep.passed
    assert any(c.witness for c in rep.failures())


def test_group_hopf_full_star():
    h = cyclic_group_hopf(4)
    d = hopf_to_left(h)
    fh = FullHopfAlgebroidData(d, h.antipode, star=h.alg.star)
    assert check_full_hopf(fh).passed
    rep = check_full_star_hopf(fh)
    assert rep.passed, rep.to_text()


def test_star_scaled_by_i_fails_involutivity():
    # scale the single column g -> g^3 of the CZ4 star by i:
    # star'(star'(g)) = -i g != g
    h = cyclic_group_hopf(4)
    d = hopf_to_left(h)
    m = h.alg.star.mat
    cols = {j: dict(c) for j, c in m.cols.items()}
    cols[1] = {k: QRat(0, 1) * x for k, x in cols[1].items()}
    bad = AntilinearMap(Matrix(4, 4, cols))
    fh = FullHopfAlgebroidData(d, h.antipode, star=bad)
    rep = check_full_star_hopf(fh)
    names = {c.name: c.verdict for c in rep.checks}
    assert names["star involutive"] == "fail"


def test_transforms():
    h = cyclic_group_hopf(4)
    d = hopf_to_left(h)
    t = transforms(d)
    cc = cop_left(t["cop"])
    assert cc.delta == d.delta and cc.s == d.s  # (cop)^cop = original
    assert check_left_bialgebroid(t["cop"]).passed
    assert check_right_bialgebroid(t["op"]).passed
    assert check_right_bialgebroid(t["bop"]).passed


def test_cop_lemma_plus_data():
    # X_{[+]^cop} (x) X_{[-]^cop} = X+ (x) X-  i.e. flip(mu_cop^-1(1(x)X))
    # agrees with lambda^-1(X (x) 1)
    h = cyclic_group_hopf(4)
    d = hopf_to_left(h)
    g = galois_maps(d)
    dcop = cop_left(d)
    gcop = galois_maps(dcop)
    assert g.invertible and bool(gcop.mu_inv)
    n = h.dim
    for x in range(n):
        w = gcop.bracket_table[x]        # mu_cop^-1(1 (x) X), in L (x)^Bop L
        flipped = {}
        for idx, c in gcop.src_mu.lift(w).items():
            i, j = divmod(idx, n)
            vaxpy(flipped, c, kron_vec(unit(j), unit(i), n))
        assert veq(g.src_lam.project(flipped), g.plus_table[x])


def random_basis_change(n, seed):
    rng = random.Random(seed)
    while True:
        u = Matrix.from_entries(n, n, (
            (i, j, QRat(rng.randint(-2, 2)))
            for i in range(n) for j in range(n) if rng.random() < 0.6))
        inv = invert(u)
        if inv:
            return u, inv.inverse


def conjugate_bialgebroid(d: LeftBialgebroidData, u, ui):
    from algebroid.linalg import kron_mat
    L = d.total
    n = L.dim
    mult = {}
    for i in range(n):
        for j in range(n):
            v = L.mul(ui.col(i), ui.col(j))
            w = u.apply(v)
            if w:
                mult[(i, j)] = w
    total = FiniteStarAlgebra(n, mult, u.apply(L.unit), name=L.name + "'",
                              basis=list(L.basis))
    return LeftBialgebroidData(
        total, d.base, u @ d.s, u @ d.t,
        kron_mat(u, u) @ d.delta @ ui, d.eps @ ui, name=d.name + "'")


def test_basis_change_invariance():
    h = cyclic_group_hopf(2)
    d = hopf_to_left(h)
    u, ui = random_basis_change(2, 99)
    d2 = conjugate_bialgebroid(d, u, ui)
    r1 = check_left_bialgebroid(d)
    r2 = check_left_bialgebroid(d2)
    v1 = sorted((c.name, c.verdict) for c in r1.checks)
    v2 = sorted((c.name, c.verdict) for c in r2.checks)
    assert v1 == v2
    # and on a corrupted structure the verdicts stay equally corrupted
    h_bad_eps = Matrix.from_entries(1, 2, [(0, 0, ONE), (0, 1, QRat(2))])
    bad = LeftBialgebroidData(h.alg, trivial_algebra(), d.s, d.t, h.delta,
                              h_bad_eps, name="bad")
    bad2 = conjugate_bialgebroid(bad, u, ui)
    f1 = sorted((c.name, c.verdict) for c in check_left_bialgebroid(bad).checks)
    f2 = sorted((c.name, c.verdict) for c in check_left_bialgebroid(bad2).checks)
    assert f1 == f2
