"""Hopf *-algebras over the scalars, with group-algebra generators.

A HopfStarAlgebra bundles a FiniteStarAlgebra with coproduct, counit and
a bijective antipode, all as coordinate matrices.  check_hopf_star
verifies the classical axioms on bases, including the star
compatibilities Delta(h*) = (* (x) *)(Delta h) and S . * . S . * = id.
"""

from __future__ import annotations

from itertools import permutations

from .algebras import FiniteStarAlgebra, check_algebra
from .linalg import (
    AntilinearMap, Matrix, invert, kron_mat, kron_vec, unit, vaxpy, veq,
)
from .reports import Report
from .scalars import ONE, QRat


class HopfStarAlgebra:
    def __init__(self, alg: FiniteStarAlgebra, delta: Matrix, eps: Matrix,
                 antipode: Matrix, antipode_inv: Matrix | None = None):
        self.alg = alg
        self.delta = delta          # n -> n*n
        self.eps = eps              # n -> 1
        self.antipode = antipode
        if antipode_inv is None:
            inv = invert(antipode)
            assert inv, "antipode not invertible"
            antipode_inv = inv.inverse
        self.antipode_inv = antipode_inv

    @property
    def dim(self):
        return self.alg.dim

    def mul(self, u, v):
        return self.alg.mul(u, v)

    def mul2(self, u, v):
        """Product on H (x) H of sparse vectors in n*n coordinates."""
        n = self.dim
        out = {}
        for k1, x in u.items():
            i1, j1 = divmod(k1, n)
            for k2, y in v.items():
                i2, j2 = divmod(k2, n)
                c = x * y
                prod = kron_vec(self.alg.mult.get((i1, i2), {}),
                                self.alg.mult.get((j1, j2), {}), n)
                vaxpy(out, c, prod)
        return out

    def coproduct(self, v):
        return self.delta.apply(v)

    def counit(self, v):
        w = self.eps.apply(v)
        return w.get(0, QRat(0))

    def star_vec(self, v):
        return self.alg.star.apply(v)

    def describe(self, v):
        return self.alg.describe(v)


def check_hopf_star(h: HopfStarAlgebra) -> Report:
    alg = h.alg
    n = alg.dim
    rep = Report("Hopf *-algebra %s" % alg.name, dims={"dim": n})
    rep.merge(check_algebra(alg))
    # coproduct is an algebra map
    ok, wit = True, None
    for i in range(n):
        for j in range(n):
            lhs = h.coproduct(alg.mult.get((i, j), {}))
            rhs = h.mul2(h.delta.col(i), h.delta.col(j))
            if not veq(lhs, rhs):
                ok, wit = False, "(%s,%s)" % (alg.basis_name(i), alg.basis_name(j))
                break
        if not ok:
            break
    rep.check("coproduct multiplicative", ok, witness=wit)
    rep.check("coproduct unital", veq(h.coproduct(alg.unit),
                                      kron_vec(alg.unit, alg.unit, n)))
    idm = Matrix.identity(n)
    rep.check("coassociativity",
              kron_mat(h.delta, idm) @ h.delta == kron_mat(idm, h.delta) @ h.delta)
    # counit laws via the canonical identifications
    eps_id = Matrix.from_entries(n, n * n, (
        (i, k * n + i, h.eps.col(k).get(0)) for k in range(n) for i in range(n)
        if h.eps.col(k).get(0)))
    id_eps = Matrix.from_entries(n, n * n, (
        (i, i * n + k, h.eps.col(k).get(0)) for k in range(n) for i in range(n)
        if h.eps.col(k).get(0)))
    rep.check("counit laws", eps_id @ h.delta == idm and id_eps @ h.delta == idm)
    ok = all(h.counit(alg.mult.get((i, j), {})) == h.counit(unit(i)) * h.counit(unit(j))
             for i in range(n) for j in range(n))
    rep.check("counit multiplicative", ok and h.counit(alg.unit) == ONE)
    # antipode axiom: m (S (x) id) Delta = unit . eps = m (id (x) S) Delta
    ok, wit = True, None
    for k in range(n):
        target = {i: h.eps.col(k).get(0, QRat(0)) * x
                  for i, x in alg.unit.items() if h.eps.col(k).get(0)}
        lhs1, lhs2 = {}, {}
        for kk, x in h.delta.col(k).items():
            i, j = divmod(kk, n)
            vaxpy(lhs1, x, alg.mul(h.antipode.col(i), unit(j)))
            vaxpy(lhs2, x, alg.mul(unit(i), h.antipode.col(j)))
        if not veq(lhs1, target) or not veq(lhs2, target):
            ok, wit = False, alg.basis_name(k)
            break
    rep.check("antipode axiom", ok, witness=wit)
    rep.check("antipode bijective",
              h.antipode @ h.antipode_inv == idm and
              h.antipode_inv @ h.antipode == idm)
    ok = all(veq(h.antipode.apply(alg.mult.get((i, j), {})),
                 alg.mul(h.antipode.col(j), h.antipode.col(i)))
             for i in range(n) for j in range(n))
    rep.check("antipode anti-multiplicative", ok)
    if alg.star is not None:
        st = alg.star
        flip = Matrix.from_entries(n * n, n * n, (
            (j * n + i, i * n + j, ONE) for i in range(n) for j in range(n)))
        # Delta(h*) = (* (x) *) Delta(h)
        ss = kron_mat(st.mat, st.mat)
        ok = all(veq(h.coproduct(st.apply(unit(k))),
                     ss.apply_conj(h.delta.col(k))) for k in range(n))
        rep.check("coproduct commutes with star", ok)
        ok = all(h.counit(st.apply(unit(k))) == h.counit(unit(k)).conjugate()
                 for k in range(n))
        rep.check("counit commutes with star", ok)
        comp = (h.antipode @ st.mat) @ (h.antipode @ st.mat).conj()
        rep.check("S . * . S . * = id", comp == idm)
    return rep


# ------------------------------------------------------------- generators

def cyclic_group_hopf(n: int) -> HopfStarAlgebra:
    """C Z_n with group-likes g^k, S(g^k) = g^-k, (g^k)* = g^-k."""
    mult = {(i, j): {(i + j) % n: ONE} for i in range(n) for j in range(n)}
    alg = FiniteStarAlgebra(
        n, mult, {0: ONE},
        star=AntilinearMap(Matrix.from_entries(
            n, n, ((( -k) % n, k, ONE) for k in range(n)))),
        name="CZ%d" % n,
        basis=["1"] + ["g%s" % ("" if k == 1 else k) for k in range(1, n)])
    delta = Matrix.from_entries(n * n, n, ((k * n + k, k, ONE) for k in range(n)))
    eps = Matrix.from_entries(1, n, ((0, k, ONE) for k in range(n)))
    s = Matrix.from_entries(n, n, (((-k) % n, k, ONE) for k in range(n)))
    return HopfStarAlgebra(alg, delta, eps, s, s)


def symmetric_group_hopf(n: int = 3) -> HopfStarAlgebra:
    """C S_n group algebra (default S_3), S = inverse, g* = g^-1."""
    elems = sorted(permutations(range(n)))
    index = {g: k for k, g in enumerate(elems)}
    d = len(elems)

    def compose(g, h):
        return tuple(g[h[i]] for i in range(n))

    def inverse(g):
        out = [0] * n
        for i, gi in enumerate(g):
            out[gi] = i
        return tuple(out)

    mult = {(i, j): {index[compose(elems[i], elems[j])]: ONE}
            for i in range(d) for j in range(d)}
    inv = Matrix.from_entries(d, d, ((index[inverse(elems[k])], k, ONE)
                                     for k in range(d)))
    alg = FiniteStarAlgebra(d, mult, {index[tuple(range(n))]: ONE},
                            star=AntilinearMap(inv), name="CS%d" % n,
                            basis=[str(g) for g in elems])
    delta = Matrix.from_entries(d * d, d, ((k * d + k, k, ONE) for k in range(d)))
    eps = Matrix.from_entries(1, d, ((0, k, ONE) for k in range(d)))
    return HopfStarAlgebra(alg, delta, eps, inv, inv)


def dual_hopf(h: HopfStarAlgebra) -> HopfStarAlgebra:
    """The dual Hopf *-algebra H* on the dual basis.

    Star follows the pairing convention <a, h*> = conj(<S^-1(a*), h>), so
    a* = S_{H*}(conj . a . star_H).
    """
    n = h.dim
    mult = {}
    for i in range(n):
        for j in range(n):
            col = {}
            for k in range(n):
                x = h.delta.col(k).get(i * n + j)
                if x:
                    col[k] = x
            if col:
                mult[(i, j)] = col
    unit_vec = {k: h.eps.col(k)[0] for k in range(n) if h.eps.col(k).get(0)}
    delta = Matrix.from_entries(n * n, n, (
        (i * n + j, k, h.alg.mult.get((i, j), {}).get(k))
        for i in range(n) for j in range(n) for k in range(n)
        if h.alg.mult.get((i, j), {}).get(k)))
    eps = Matrix.from_entries(1, n, ((0, k, h.alg.unit.get(k))
                                     for k in range(n) if h.alg.unit.get(k)))
    s_dual = h.antipode.transpose()
    s_dual_inv = h.antipode_inv.transpose()
    star_mat = s_dual @ h.alg.star.mat.transpose().conj()
    alg = FiniteStarAlgebra(n, mult, unit_vec, star=AntilinearMap(star_mat),
                            name=h.alg.name + "*",
                            basis=["%s^" % b for b in h.alg.basis])
    return HopfStarAlgebra(alg, delta, eps, s_dual, s_dual_inv)
