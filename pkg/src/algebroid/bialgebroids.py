"""Left/right bialgebroids, Galois maps, full (*-)Hopf algebroids, pairs.

All structure maps are coordinate matrices on a finite-dimensional total
algebra.  Coproducts are supplied in ambient tensor-square coordinates
and projected internally onto the balanced quotient; every identity is
tested in quotient coordinates, never on arbitrary lifts, and Takeuchi
membership is established before any componentwise product is formed.
"""

from __future__ import annotations

from .algebras import BalancedTensor, FiniteStarAlgebra, opposite
from .linalg import (
    AntilinearMap, Matrix, MapInverse, Subspace, invert, kron_vec, unit,
    vaxpy, veq, vconj,
)
from .reports import Report
from .scalars import ONE, QRat


# ------------------------------------------------------- tensor square kit

def tensor_square(total: FiniteStarAlgebra, first_acts, second_acts,
                  name="LxL") -> BalancedTensor:
    """Quotient of L (x) L identifying first_acts[b] on the first leg with
    second_acts[b] on the second leg, for every base basis index b."""
    return BalancedTensor(total.dim, total.dim, len(first_acts),
                          first_acts, second_acts, name=name)


def _takeuchi_kernel(total, bt, act_pair) -> Subspace:
    """Subspace of bt's quotient killed by first[b] (x) id - id (x) second[b]
    for every base basis index b: the Takeuchi product in quotient coords."""
    first_acts, second_acts = act_pair
    n = total.dim
    from .linalg import kernel
    entries = []
    outdim = bt.dim
    for b in range(len(first_acts)):
        fa, sa = first_acts[b], second_acts[b]
        for q in range(bt.dim):
            w = bt.lift(unit(q))
            out = {}
            for idx, x in w.items():
                i, j = divmod(idx, n)
                vaxpy(out, x, kron_vec(fa.col(i), unit(j), n))
                vaxpy(out, -x, kron_vec(unit(i), sa.col(j), n))
            for k, x in bt.project(out).items():
                entries.append((b * outdim + k, q, x))
    big = Matrix.from_entries(len(first_acts) * outdim, bt.dim, entries)
    return kernel(big)


class TripleQuotient:
    """Quotient of L (x) L (x) L by balance relations at both positions."""

    def __init__(self, total, rel12, rel23):
        n = total.dim
        self.n = n
        rels = []
        for b in range(len(rel12[0])):
            fa, sa = rel12[0][b], rel12[1][b]
            for i in range(n):
                fi = fa.col(i)
                for j in range(n):
                    base = kron_vec(fi, unit(j), n)
                    sub = kron_vec(unit(i), sa.col(j), n)
                    for k in range(n):
                        r = {}
                        for idx, x in base.items():
                            r[idx * n + k] = x
                        for idx, x in sub.items():
                            r[idx * n + k] = r.get(idx * n + k, QRat(0)) - x
                        r = {kk: x for kk, x in r.items() if x}
                        if r:
                            rels.append(r)
        for b in range(len(rel23[0])):
            fa, sa = rel23[0][b], rel23[1][b]
            for j in range(n):
                fj = fa.col(j)
                for k in range(n):
                    base = kron_vec(fj, unit(k), n)
                    sub = kron_vec(unit(j), sa.col(k), n)
                    for i in range(n):
                        r = {}
                        for idx, x in base.items():
                            r[i * n * n + idx] = x
                        for idx, x in sub.items():
                            r[i * n * n + idx] = r.get(i * n * n + idx, QRat(0)) - x
                        r = {kk: x for kk, x in r.items() if x}
                        if r:
                            rels.append(r)
        from .linalg import QuotientSpace
        self.quotient = QuotientSpace(n ** 3, Subspace(n ** 3, rels))

    def project(self, v):
        return self.quotient.project(v)


# ----------------------------------------------------------- data classes

class LeftBialgebroidData:
    """Left bialgebroid over B: source s, target t, Delta (ambient), eps.

    B-bimodule convention on the total algebra: a.X.b = s(a) t(b) X, so
    the balanced square identifies t(b)X (x) Y with X (x) s(b)Y.
    """

    def __init__(self, total: FiniteStarAlgebra, base: FiniteStarAlgebra,
                 s: Matrix, t: Matrix, delta: Matrix, eps: Matrix, name="L"):
        self.total = total
        self.base = base
        self.s = s
        self.t = t
        self.delta = delta
        self.eps = eps
        self.name = name
        self._cache = {}

    def s_vec(self, a):
        return self.s.apply(a)

    def t_vec(self, a):
        return self.t.apply(a)

    def _acts(self, kind):
        L, B = self.total, self.base
        if kind == "sL_left":
            return [L.left_mult(self.s.col(b)) for b in range(B.dim)]
        if kind == "tL_left":
            return [L.left_mult(self.t.col(b)) for b in range(B.dim)]
        if kind == "sL_right":
            return [L.right_mult(self.s.col(b)) for b in range(B.dim)]
        if kind == "tL_right":
            return [L.right_mult(self.t.col(b)) for b in range(B.dim)]
        raise KeyError(kind)

    def acts(self, kind):
        if kind not in self._cache:
            self._cache[kind] = self._acts(kind)
        return self._cache[kind]

    def square(self) -> BalancedTensor:
        # L (x)_B L : t(b)X (x) Y = X (x) s(b)Y
        if "square" not in self._cache:
            self._cache["square"] = tensor_square(
                self.total, self.acts("tL_left"), self.acts("sL_left"))
        return self._cache["square"]

    def square_bop(self) -> BalancedTensor:
        # L (x)_{B^op} L : X t(b) (x) Y = X (x) t(b) Y
        if "square_bop" not in self._cache:
            self._cache["square_bop"] = tensor_square(
                self.total, self.acts("tL_right"), self.acts("tL_left"))
        return self._cache["square_bop"]

    def square_upper(self) -> BalancedTensor:
        # L (x)^B L : s(b)X (x) Y = X (x) Y s(b)
        if "square_upper" not in self._cache:
            self._cache["square_upper"] = tensor_square(
                self.total, self.acts("sL_left"), self.acts("sL_right"))
        return self._cache["square_upper"]

    def takeuchi(self) -> Subspace:
        # X t(b) (x) Y = X (x) Y s(b) inside the balanced square
        if "takeuchi" not in self._cache:
            self._cache["takeuchi"] = _takeuchi_kernel(
                self.total, self.square(),
                (self.acts("tL_right"), self.acts("sL_right")))
        return self._cache["takeuchi"]

    def delta_q(self, x_idx: int):
        return self.square().project(self.delta.col(x_idx))


class RightBialgebroidData:
    """Right bialgebroid over A, mirror conventions: a.X.b = X t(a) s(b),
    balanced square X s(a) (x) Y = X (x) Y t(a)."""

    def __init__(self, total: FiniteStarAlgebra, base: FiniteStarAlgebra,
                 s: Matrix, t: Matrix, delta: Matrix, eps: Matrix, name="R"):
        self.total = total
        self.base = base
        self.s = s
        self.t = t
        self.delta = delta
        self.eps = eps
        self.name = name
        self._cache = {}

    def _acts(self, kind):
        R, A = self.total, self.base
        if kind == "sR_left":
            return [R.left_mult(self.s.col(b)) for b in range(A.dim)]
        if kind == "tR_left":
            return [R.left_mult(self.t.col(b)) for b in range(A.dim)]
        if kind == "sR_right":
            return [R.right_mult(self.s.col(b)) for b in range(A.dim)]
        if kind == "tR_right":
            return [R.right_mult(self.t.col(b)) for b in range(A.dim)]
        raise KeyError(kind)

    def acts(self, kind):
        if kind not in self._cache:
            self._cache[kind] = self._acts(kind)
        return self._cache[kind]

    def square(self) -> BalancedTensor:
        # R (x)_A R : X s(a) (x) Y = X (x) Y t(a)
        if "square" not in self._cache:
            self._cache["square"] = tensor_square(
                self.total, self.acts("sR_right"), self.acts("tR_right"))
        return self._cache["square"]

    def square_aop(self) -> BalancedTensor:
        # R (x)_{A^op} R : X t(a) (x) Y = X (x) t(a) Y
        if "square_aop" not in self._cache:
            self._cache["square_aop"] = tensor_square(
                self.total, self.acts("tR_right"), self.acts("tR_left"))
        return self._cache["square_aop"]

    def square_upper(self) -> BalancedTensor:
        # R (x)^A R : s(a)X (x) Y = X (x) Y s(a)
        if "square_upper" not in self._cache:
            self._cache["square_upper"] = tensor_square(
                self.total, self.acts("sR_left"), self.acts("sR_right"))
        return self._cache["square_upper"]

    def takeuchi(self) -> Subspace:
        # s(a)X (x) Y = X (x) t(a)Y inside the balanced square
        if "takeuchi" not in self._cache:
            self._cache["takeuchi"] = _takeuchi_kernel(
                self.total, self.square(),
                (self.acts("sR_left"), self.acts("tR_left")))
        return self._cache["takeuchi"]

    def delta_q(self, x_idx: int):
        return self.square().project(self.delta.col(x_idx))


# ------------------------------------------------------------ left checker

def check_left_bialgebroid(d: LeftBialgebroidData) -> Report:
    L, B = d.total, d.base
    n, bd = L.dim, B.dim
    rep = Report("left bialgebroid %s over %s" % (d.name, B.name),
                 dims={"total": n, "base": bd})
    ok = all(veq(d.s.apply(B.mult.get((a, b), {})),
                 L.mul(d.s.col(a), d.s.col(b)))
             for a in range(bd) for b in range(bd))
    rep.check("s is an algebra map", ok and veq(d.s.apply(B.unit), L.unit))
    ok = all(veq(d.t.apply(B.mult.get((a, b), {})),
                 L.mul(d.t.col(b), d.t.col(a)))
             for a in range(bd) for b in range(bd))
    rep.check("t is an anti-algebra map", ok and veq(d.t.apply(B.unit), L.unit))
    ok = all(veq(L.mul(d.s.col(a), d.t.col(b)), L.mul(d.t.col(b), d.s.col(a)))
             for a in range(bd) for b in range(bd))
    rep.check("images of s and t commute", ok)

    q = d.square()
    rep.dim("L(x)_B L", q.dim)
    # Delta is a B-bimodule map: Delta(s(a)X) = (s(a) (x) 1) Delta(X),
    # Delta(t(b)X) = (1 (x) t(b)) Delta(X)
    ok, wit = True, None
    for b in range(bd):
        ls = L.left_mult(d.s.col(b))
        lt = L.left_mult(d.t.col(b))
        for x in range(n):
            amb = d.delta.col(x)
            lhs1 = q.project(d.delta.apply(ls.col(x)))
            rhs1 = q.project(_leg_map(amb, ls, None, n))
            lhs2 = q.project(d.delta.apply(lt.col(x)))
            rhs2 = q.project(_leg_map(amb, None, lt, n))
            if not veq(lhs1, rhs1) or not veq(lhs2, rhs2):
                ok, wit = False, "(b=%s, X=%s)" % (B.basis_name(b), L.basis_name(x))
                break
        if not ok:
            break
    rep.check("Delta is a B-bimodule map", ok, witness=wit)

    tak = d.takeuchi()
    rep.dim("Takeuchi LxL", tak.dim)
    ok, wit = True, None
    for x in range(n):
        if not tak.contains(d.delta_q(x)):
            ok, wit = False, L.basis_name(x)
            break
    takeuchi_ok = rep.check("Delta lands in the Takeuchi product", ok, witness=wit)

    t3 = TripleQuotient(L, (d.acts("tL_left"), d.acts("sL_left")),
                        (d.acts("tL_left"), d.acts("sL_left")))
    ok, wit = True, None
    for x in range(n):
        lhs, rhs = {}, {}
        for idx, c in d.delta.col(x).items():
            i, j = divmod(idx, n)
            vaxpy(lhs, c, kron_vec(d.delta.col(i), unit(j), n))
            vaxpy(rhs, c, kron_vec(unit(i), d.delta.col(j), n * n))
        if not veq(t3.project(lhs), t3.project(rhs)):
            ok, wit = False, L.basis_name(x)
            break
    rep.check("coassociativity", ok, witness=wit)

    ok = all(veq(d.eps.apply(L.mul(d.s.col(a), L.mul(d.t.col(b), unit(x)))),
                 B.mul(unit(a), B.mul(d.eps.col(x), unit(b))))
             for a in range(bd) for b in range(bd) for x in range(n))
    rep.check("eps is a B-bimodule map", ok)
    rep.check("eps unital", veq(d.eps.apply(L.unit), B.unit))
    ok, wit = True, None
    for x in range(n):
        acc1, acc2 = {}, {}
        for idx, c in d.delta.col(x).items():
            i, j = divmod(idx, n)
            vaxpy(acc1, c, L.mul(d.s.apply(d.eps.col(i)), unit(j)))
            vaxpy(acc2, c, L.mul(d.t.apply(d.eps.col(j)), unit(i)))
        if not veq(acc1, unit(x)) or not veq(acc2, unit(x)):
            ok, wit = False, L.basis_name(x)
            break
    rep.check("counit laws", ok, witness=wit)
    ok, wit = True, None
    for x in range(n):
        for y in range(n):
            exy = d.eps.apply(L.mult.get((x, y), {}))
            es = d.eps.apply(L.mul(unit(x), d.s.apply(d.eps.col(y))))
            et = d.eps.apply(L.mul(unit(x), d.t.apply(d.eps.col(y))))
            if not veq(exy, es) or not veq(exy, et):
                ok, wit = False, "(%s,%s)" % (L.basis_name(x), L.basis_name(y))
                break
        if not ok:
            break
    rep.check("eps(XY) = eps(X s(eps Y)) = eps(X t(eps Y))", ok, witness=wit)

    if takeuchi_ok:
        ok, wit = True, None
        for x in range(n):
            lx = q.lift(d.delta_q(x))
            for y in range(n):
                ly = q.lift(d.delta_q(y))
                prod = {}
                for i1, c1 in lx.items():
                    u1, v1 = divmod(i1, n)
                    for i2, c2 in ly.items():
                        u2, v2 = divmod(i2, n)
                        vaxpy(prod, c1 * c2,
                              kron_vec(L.mult.get((u1, u2), {}),
                                       L.mult.get((v1, v2), {}), n))
                if not veq(q.project(prod),
                           q.project(d.delta.apply(L.mult.get((x, y), {})))):
                    ok, wit = False, "(%s,%s)" % (L.basis_name(x), L.basis_name(y))
                    break
            if not ok:
                break
        rep.check("Delta multiplicative", ok, witness=wit)
    else:
        rep.inconclusive("Delta multiplicative",
                         note="skipped: Takeuchi membership failed")
    rep.check("Delta(1) = 1 (x) 1",
              veq(d.square().project(d.delta.apply(L.unit)),
                  d.square().pure(L.unit, L.unit)))
    ok = all(
        veq(d.square().project(d.delta.apply(d.s.col(b))),
            d.square().pure(d.s.col(b), L.unit)) and
        veq(d.square().project(d.delta.apply(d.t.col(b))),
            d.square().pure(L.unit, d.t.col(b)))
        for b in range(bd))
    rep.check("Delta(s(b)) = s(b)(x)1 and Delta(t(b)) = 1(x)t(b)", ok)
    return rep


def _leg_map(amb, m1, m2, n):
    """Apply m1 (x) m2 (None = identity) to an ambient tensor vector."""
    out = {}
    for idx, c in amb.items():
        i, j = divmod(idx, n)
        u = m1.col(i) if m1 is not None else unit(i)
        v = m2.col(j) if m2 is not None else unit(j)
        vaxpy(out, c, kron_vec(u, v, n))
    return out


# ----------------------------------------------------------- right checker

def check_right_bialgebroid(d: RightBialgebroidData) -> Report:
    R, A = d.total, d.base
    n, ad = R.dim, A.dim
    rep = Report("right bialgebroid %s over %s" % (d.name, A.name),
                 dims={"total": n, "base": ad})
    ok = all(veq(d.s.apply(A.mult.get((a, b), {})),
                 R.mul(d.s.col(a), d.s.col(b)))
             for a in range(ad) for b in range(ad))
    rep.check("s is an algebra map", ok and veq(d.s.apply(A.unit), R.unit))
    ok = all(veq(d.t.apply(A.mult.get((a, b), {})),
                 R.mul(d.t.col(b), d.t.col(a)))
             for a in range(ad) for b in range(ad))
    rep.check("t is an anti-algebra map", ok and veq(d.t.apply(A.unit), R.unit))
    ok = all(veq(R.mul(d.s.col(a), d.t.col(b)), R.mul(d.t.col(b), d.s.col(a)))
             for a in range(ad) for b in range(ad))
    rep.check("images of s and t commute", ok)

    q = d.square()
    rep.dim("R(x)_A R", q.dim)
    # Delta(X t(a)) = (.t(a) (x) 1) Delta X ; Delta(X s(b)) = (1 (x) .s(b)) Delta X
    ok, wit = True, None
    for b in range(ad):
        rt = R.right_mult(d.t.col(b))
        rs = R.right_mult(d.s.col(b))
        for x in range(n):
            amb = d.delta.col(x)
            if not veq(q.project(d.delta.apply(rt.col(x))),
                       q.project(_leg_map(amb, rt, None, n))) or \
               not veq(q.project(d.delta.apply(rs.col(x))),
                       q.project(_leg_map(amb, None, rs, n))):
                ok, wit = False, "(a=%s, X=%s)" % (A.basis_name(b), R.basis_name(x))
                break
        if not ok:
            break
    rep.check("Delta is an A-bimodule map", ok, witness=wit)

    tak = d.takeuchi()
    rep.dim("Takeuchi RxR", tak.dim)
    ok, wit = True, None
    for x in range(n):
        if not tak.contains(d.delta_q(x)):
            ok, wit = False, R.basis_name(x)
            break
    takeuchi_ok = rep.check("Delta lands in the Takeuchi product", ok, witness=wit)

    t3 = TripleQuotient(R, (d.acts("sR_right"), d.acts("tR_right")),
                        (d.acts("sR_right"), d.acts("tR_right")))
    ok, wit = True, None
    for x in range(n):
        lhs, rhs = {}, {}
        for idx, c in d.delta.col(x).items():
            i, j = divmod(idx, n)
            vaxpy(lhs, c, kron_vec(d.delta.col(i), unit(j), n))
            vaxpy(rhs, c, kron_vec(unit(i), d.delta.col(j), n * n))
        if not veq(t3.project(lhs), t3.project(rhs)):
            ok, wit = False, R.basis_name(x)
            break
    rep.check("coassociativity", ok, witness=wit)

    ok = all(veq(d.eps.apply(R.mul(unit(x), R.mul(d.t.col(a), d.s.col(b)))),
                 A.mul(unit(a), A.mul(d.eps.col(x), unit(b))))
             for a in range(ad) for b in range(ad) for x in range(n))
    rep.check("eps is an A-bimodule map", ok)
    rep.check("eps unital", veq(d.eps.apply(R.unit), A.unit))
    ok, wit = True, None
    for x in range(n):
        acc1, acc2 = {}, {}
        for idx, c in d.delta.col(x).items():
            i, j = divmod(idx, n)
            vaxpy(acc1, c, R.mul(unit(i), d.s.apply(d.eps.col(j))))
            vaxpy(acc2, c, R.mul(unit(j), d.t.apply(d.eps.col(i))))
        if not veq(acc1, unit(x)) or not veq(acc2, unit(x)):
            ok, wit = False, R.basis_name(x)
            break
    rep.check("counit laws", ok, witness=wit)
    ok, wit = True, None
    for x in range(n):
        for y in range(n):
            exy = d.eps.apply(R.mult.get((x, y), {}))
            es = d.eps.apply(R.mul(d.s.apply(d.eps.col(x)), unit(y)))
            et = d.eps.apply(R.mul(d.t.apply(d.eps.col(x)), unit(y)))
            if not veq(exy, es) or not veq(exy, et):
                ok, wit = False, "(%s,%s)" % (R.basis_name(x), R.basis_name(y))
                break
        if not ok:
            break
    rep.check("eps(XY) = eps(s(eps X)Y) = eps(t(eps X)Y)", ok, witness=wit)

    if takeuchi_ok:
        ok, wit = True, None
        for x in range(n):
            lx = q.lift(d.delta_q(x))
            for y in range(n):
                ly = q.lift(d.delta_q(y))
                prod = {}
                for i1, c1 in lx.items():
                    u1, v1 = divmod(i1, n)
                    for i2, c2 in ly.items():
                        u2, v2 = divmod(i2, n)
                        vaxpy(prod, c1 * c2,
                              kron_vec(R.mult.get((u1, u2), {}),
                                       R.mult.get((v1, v2), {}), n))
                if not veq(q.project(prod),
                           q.project(d.delta.apply(R.mult.get((x, y), {})))):
                    ok, wit = False, "(%s,%s)" % (R.basis_name(x), R.basis_name(y))
                    break
            if not ok:
                break
        rep.check("Delta multiplicative", ok, witness=wit)
    else:
        rep.inconclusive("Delta multiplicative",
                         note="skipped: Takeuchi membership failed")
    rep.check("Delta(1) = 1 (x) 1",
              veq(q.project(d.delta.apply(R.unit)), q.pure(R.unit, R.unit)))
    ok = all(
        veq(q.project(d.delta.apply(d.s.col(b))), q.pure(R.unit, d.s.col(b))) and
        veq(q.project(d.delta.apply(d.t.col(b))), q.pure(d.t.col(b), R.unit))
        for b in range(ad))
    rep.check("Delta(s(a)) = 1(x)s(a) and Delta(t(a)) = t(a)(x)1", ok)
    return rep


# -------------------------------------------------------------- transforms

def flip_matrix(n: int) -> Matrix:
    return Matrix.from_entries(n * n, n * n, (
        (j * n + i, i * n + j, ONE) for i in range(n) for j in range(n)))


def cop_left(d: LeftBialgebroidData) -> LeftBialgebroidData:
    n = d.total.dim
    return LeftBialgebroidData(d.total, opposite(d.base), d.t, d.s,
                               flip_matrix(n) @ d.delta, d.eps,
                               name=d.name + "^cop")


def op_left(d: LeftBialgebroidData) -> RightBialgebroidData:
    return RightBialgebroidData(opposite(d.total), d.base, d.t, d.s,
                                d.delta, d.eps, name=d.name + "^op")


def bop_left(d: LeftBialgebroidData) -> RightBialgebroidData:
    return op_left(cop_left(d))


def cop_right(d: RightBialgebroidData) -> RightBialgebroidData:
    n = d.total.dim
    return RightBialgebroidData(d.total, opposite(d.base), d.t, d.s,
                                flip_matrix(n) @ d.delta, d.eps,
                                name=d.name + "^cop")


def op_right(d: RightBialgebroidData) -> LeftBialgebroidData:
    return LeftBialgebroidData(opposite(d.total), d.base, d.t, d.s,
                               d.delta, d.eps, name=d.name + "^op")


def transforms(d: LeftBialgebroidData):
    return {"cop": cop_left(d), "op": op_left(d), "bop": bop_left(d)}


# ------------------------------------------------------------- Galois maps

class GaloisMaps:
    """Hopf/anti-Hopf Galois maps of a (left or right) bialgebroid, with
    inverses when they exist and the inverse-image tables."""

    def __init__(self, side, lam, lam_inv, mu, mu_inv, src_lam, src_mu, tgt,
                 plus_table=None, bracket_table=None):
        self.side = side
        self.lam = lam
        self.lam_inv = lam_inv          # MapInverse
        self.mu = mu
        self.mu_inv = mu_inv            # MapInverse
        self.src_lam = src_lam          # BalancedTensor
        self.src_mu = src_mu
        self.tgt = tgt
        self.plus_table = plus_table    # X -> lam^-1(X (x) 1)   [left case]
        self.bracket_table = bracket_table  # X -> mu^-1(1 (x) X) [left case]

    @property
    def invertible(self):
        return bool(self.lam_inv) and bool(self.mu_inv)


def galois_maps(d) -> GaloisMaps:
    """Builds lambda and mu (left case) or lambda-hat and mu-hat (right
    case) as matrices between quotients, inverts, and tabulates."""
    L = d.total
    n = L.dim
    tgt = d.square()
    if isinstance(d, LeftBialgebroidData):
        src_lam = d.square_bop()
        src_mu = d.square_upper()

        def lam_amb(i, j):
            # lambda(X (x) Y) = X(1) (x) X(2) Y
            out = {}
            for idx, c in d.delta.col(i).items():
                u, v = divmod(idx, n)
                vaxpy(out, c, kron_vec(unit(u), L.mult.get((v, j), {}), n))
            return out

        def mu_amb(i, j):
            # mu(X (x) Y) = Y(1) X (x) Y(2)
            out = {}
            for idx, c in d.delta.col(j).items():
                u, v = divmod(idx, n)
                vaxpy(out, c, kron_vec(L.mult.get((u, i), {}), unit(v), n))
            return out
    else:
        src_lam = d.square_aop()
        src_mu = d.square_upper()

        def lam_amb(i, j):
            # lambda-hat(X (x) Y) = X Y[1] (x) Y[2]
            out = {}
            for idx, c in d.delta.col(j).items():
                u, v = divmod(idx, n)
                vaxpy(out, c, kron_vec(L.mult.get((i, u), {}), unit(v), n))
            return out

        def mu_amb(i, j):
            # mu-hat(X (x) Y) = X[1] (x) Y X[2]
            out = {}
            for idx, c in d.delta.col(i).items():
                u, v = divmod(idx, n)
                vaxpy(out, c, kron_vec(unit(u), L.mult.get((j, v), {}), n))
            return out

    def build(src, amb_fn):
        cols = {}
        for q in range(src.dim):
            w = src.lift(unit(q))
            out = {}
            for idx, c in w.items():
                i, j = divmod(idx, n)
                vaxpy(out, c, amb_fn(i, j))
            col = tgt.project(out)
            if col:
                cols[q] = col
        return Matrix(tgt.dim, src.dim, cols)

    lam = build(src_lam, lam_amb)
    mu = build(src_mu, mu_amb)
    lam_inv = invert(lam)
    mu_inv = invert(mu)
    plus_table = bracket_table = None
    if isinstance(d, LeftBialgebroidData):
        if lam_inv:
            plus_table = [lam_inv.inverse.apply(tgt.pure(unit(x), L.unit))
                          for x in range(n)]
        if mu_inv:
            bracket_table = [mu_inv.inverse.apply(tgt.pure(L.unit, unit(x)))
                             for x in range(n)]
    else:
        if lam_inv:
            plus_table = [lam_inv.inverse.apply(tgt.pure(L.unit, unit(x)))
                          for x in range(n)]
        if mu_inv:
            bracket_table = [mu_inv.inverse.apply(tgt.pure(unit(x), L.unit))
                             for x in range(n)]
    return GaloisMaps("left" if isinstance(d, LeftBialgebroidData) else "right",
                      lam, lam_inv, mu, mu_inv, src_lam, src_mu, tgt,
                      plus_table, bracket_table)


def check_galois(d, g: GaloisMaps | None = None) -> Report:
    if g is None:
        g = galois_maps(d)
    side = g.side
    name = ("lambda", "mu") if side == "left" else ("lambda-hat", "mu-hat")
    rep = Report("Galois maps of %s" % d.name,
                 dims={"src %s" % name[0]: g.src_lam.dim,
                       "src %s" % name[1]: g.src_mu.dim,
                       "target": g.tgt.dim})
    # well-definedness on the balanced quotients is built into the
    # construction (columns are computed from canonical lifts and the map
    # kills the relations by bilinearity of the product); assert it:
    L, n = d.total, d.total.dim
    for nm, m, inv in ((name[0], g.lam, g.lam_inv), (name[1], g.mu, g.mu_inv)):
        if inv:
            rep.check("%s invertible" % nm, True)
            rep.check("%s . %s^-1 = id" % (nm, nm),
                      m @ inv.inverse == Matrix.identity(g.tgt.dim))
            rep.check("%s^-1 . %s = id" % (nm, nm),
                      inv.inverse @ m == Matrix.identity(m.ncols))
        else:
            rep.check("%s invertible" % nm, False,
                      witness="%s: %s" % (inv.reason,
                                          _fmt_vec(inv.witness)))
    # displayed cancellation identities via the tables
    if side == "left" and g.plus_table and g.bracket_table:
        ok = True
        for x in range(n):
            # X(1)+ (x) X(1)- X(2) = X (x) 1 in L (x)_{B^op} L
            acc = {}
            for idx, c in d.delta.col(x).items():
                i, j = divmod(idx, n)
                w = g.plus_table[i]
                lift = g.src_lam.lift(w)
                for idx2, c2 in lift.items():
                    u, v = divmod(idx2, n)
                    vaxpy(acc, c * c2, kron_vec(unit(u), L.mult.get((v, j), {}), n))
            if not veq(g.src_lam.project(acc), g.src_lam.pure(unit(x), L.unit)):
                ok = False
                break
        rep.check("X(1)+ (x) X(1)- X(2) = X (x) 1", ok)
        ok = True
        for x in range(n):
            # X(2)[-] X(1) (x) X(2)[+] = 1 (x) X in L (x)^B L
            acc = {}
            for idx, c in d.delta.col(x).items():
                i, j = divmod(idx, n)
                w = g.bracket_table[j]
                lift = g.src_mu.lift(w)
                for idx2, c2 in lift.items():
                    u, v = divmod(idx2, n)
                    vaxpy(acc, c * c2, kron_vec(L.mult.get((u, i), {}), unit(v), n))
            if not veq(g.src_mu.project(acc), g.src_mu.pure(L.unit, unit(x))):
                ok = False
                break
        rep.check("X(2)[-] X(1) (x) X(2)[+] = 1 (x) X", ok)
    return rep


def _fmt_vec(v):
    if not v:
        return "0"
    return ";".join("%d:%s" % (k, x.to_text()) for k, x in sorted(v.items()))


# --------------------------------------------------------- full Hopf data

class FullHopfAlgebroidData:
    """A left bialgebroid with an invertible antipode (and optional star)."""

    def __init__(self, left: LeftBialgebroidData, antipode: Matrix,
                 antipode_inv: Matrix | None = None,
                 star: AntilinearMap | None = None, name=None):
        self.left = left
        self.S = antipode
        if antipode_inv is None:
            inv = invert(antipode)
            antipode_inv = inv.inverse if inv else None
        self.S_inv = antipode_inv
        self.star = star
        self.name = name or left.name
        self._right = None

    def derived_right(self) -> RightBialgebroidData:
        """Right bialgebroid recomputed from S (never taken from input)."""
        if self._right is not None:
            return self._right
        d, S, S_inv = self.left, self.S, self.S_inv
        L, n = d.total, d.total.dim
        s_r = d.t
        t_r = S_inv @ d.t
        cols = {}
        for x in range(n):
            out = {}
            for idx, c in d.delta.apply(S_inv.col(x)).items():
                i, j = divmod(idx, n)
                vaxpy(out, c, kron_vec(S.col(j), S.col(i), n))
            if out:
                cols[x] = out
        delta_r = Matrix(n * n, n, cols)
        eps_r = d.eps @ S
        self._right = RightBialgebroidData(
            L, opposite(d.base), s_r, t_r, delta_r, eps_r,
            name=self.name + ".R")
        return self._right


def check_full_hopf(d: FullHopfAlgebroidData,
                    gal: GaloisMaps | None = None) -> Report:
    left = d.left
    L, B = left.total, left.base
    n, bd = L.dim, B.dim
    rep = Report("full Hopf algebroid %s" % d.name, dims={"total": n})
    if d.S_inv is None:
        rep.check("S invertible", False, witness="no inverse")
        return rep
    rep.check("S invertible", d.S @ d.S_inv == Matrix.identity(n) and
              d.S_inv @ d.S == Matrix.identity(n))
    ok = all(veq(d.S.apply(L.mult.get((x, y), {})),
                 L.mul(d.S.col(y), d.S.col(x)))
             for x in range(n) for y in range(n))
    rep.check("S anti-multiplicative", ok and veq(d.S.apply(L.unit), L.unit))
    rep.check("S . t_L = s_L", d.S @ left.t == left.s)

    q = left.square()
    # condition (2): (S^-1 X(2))(1) (x) (S^-1 X(2))(2) X(1) = S^-1(X) (x) 1
    ok, wit = True, None
    for x in range(n):
        acc = {}
        for idx, c in left.delta.col(x).items():
            i, j = divmod(idx, n)
            for idx2, c2 in left.delta.apply(d.S_inv.col(j)).items():
                u, v = divmod(idx2, n)
                vaxpy(acc, c * c2, kron_vec(unit(u), L.mult.get((v, i), {}), n))
        if not veq(q.project(acc), q.pure(d.S_inv.col(x), L.unit)):
            ok, wit = False, L.basis_name(x)
            break
    rep.check("condition (2)", ok, witness=wit)
    # condition (3): S(X(1))(1) X(2) (x) S(X(1))(2) = 1 (x) S(X)
    ok, wit = True, None
    for x in range(n):
        acc = {}
        for idx, c in left.delta.col(x).items():
            i, j = divmod(idx, n)
            for idx2, c2 in left.delta.apply(d.S.col(i)).items():
                u, v = divmod(idx2, n)
                vaxpy(acc, c * c2, kron_vec(L.mult.get((u, j), {}), unit(v), n))
        if not veq(q.project(acc), q.pure(L.unit, d.S.col(x))):
            ok, wit = False, L.basis_name(x)
            break
    rep.check("condition (3)", ok, witness=wit)

    right = d.derived_right()
    rep.merge(check_right_bialgebroid(right), prefix="derived right: ")
    rep.check("s_L(B) = t_R(A) as subspaces",
              Subspace(n, [left.s.col(b) for b in range(bd)]) ==
              Subspace(n, [right.t.col(b) for b in range(bd)]))
    rep.check("t_L(B) = s_R(A) as subspaces",
              Subspace(n, [left.t.col(b) for b in range(bd)]) ==
              Subspace(n, [right.s.col(b) for b in range(bd)]))

    # mixed coassociativity
    t1 = TripleQuotient(L, (left.acts("tL_left"), left.acts("sL_left")),
                        (right.acts("sR_right"), right.acts("tR_right")))
    ok, wit = True, None
    for x in range(n):
        lhs, rhs = {}, {}
        for idx, c in left.delta.col(x).items():
            i, j = divmod(idx, n)
            vaxpy(lhs, c, kron_vec(unit(i), right.delta.col(j), n * n))
        for idx, c in right.delta.col(x).items():
            u, v = divmod(idx, n)
            vaxpy(rhs, c, kron_vec(left.delta.col(u), unit(v), n))
        if not veq(t1.project(lhs), t1.project(rhs)):
            ok, wit = False, L.basis_name(x)
            break
    rep.check("mixed coassociativity (id (x) Delta_R) Delta_L", ok, witness=wit)
    t2 = TripleQuotient(L, (right.acts("sR_right"), right.acts("tR_right")),
                        (left.acts("tL_left"), left.acts("sL_left")))
    ok, wit = True, None
    for x in range(n):
        lhs, rhs = {}, {}
        for idx, c in right.delta.col(x).items():
            u, v = divmod(idx, n)
            vaxpy(lhs, c, kron_vec(unit(u), left.delta.col(v), n * n))
        for idx, c in left.delta.col(x).items():
            i, j = divmod(idx, n)
            vaxpy(rhs, c, kron_vec(right.delta.col(i), unit(j), n))
        if not veq(t2.project(lhs), t2.project(rhs)):
            ok, wit = False, L.basis_name(x)
            break
    rep.check("mixed coassociativity (id (x) Delta_L) Delta_R", ok, witness=wit)

    if gal is None:
        gal = galois_maps(left)
    rep.check("lambda invertible (left Hopf)", bool(gal.lam_inv),
              witness=None if gal.lam_inv else gal.lam_inv.reason)
    rep.check("mu invertible (anti-left Hopf)", bool(gal.mu_inv),
              witness=None if gal.mu_inv else gal.mu_inv.reason)
    if gal.invertible:
        # antipode reconstruction S(X) = s_R(eps_R(X+)) X-
        ok, wit = True, None
        for x in range(n):
            acc = {}
            for idx, c in gal.src_lam.lift(gal.plus_table[x]).items():
                p, m = divmod(idx, n)
                vaxpy(acc, c, L.mul(right.s.apply(right.eps.col(p)), unit(m)))
            if not veq(acc, d.S.col(x)):
                ok, wit = False, L.basis_name(x)
                break
        rep.check("S(X) = s_R(eps_R(X+)) X-", ok, witness=wit)
        ok, wit = True, None
        for x in range(n):
            acc = {}
            for idx, c in gal.src_mu.lift(gal.bracket_table[x]).items():
                m, p = divmod(idx, n)
                vaxpy(acc, c, L.mul(right.t.apply(right.eps.col(p)), unit(m)))
            if not veq(acc, d.S_inv.col(x)):
                ok, wit = False, L.basis_name(x)
                break
        rep.check("S^-1(X) = t_R(eps_R(X[+])) X[-]", ok, witness=wit)
        # tabulated data against the antipode formulas
        ok = True
        for x in range(n):
            acc = {}
            for idx, c in right.delta.col(x).items():
                u, v = divmod(idx, n)
                vaxpy(acc, c, kron_vec(unit(u), d.S.col(v), n))
            if not veq(gal.plus_table[x], gal.src_lam.project(acc)):
                ok = False
                break
        rep.check("X+ (x) X- = X[1] (x) S(X[2])", ok)
        ok = True
        for x in range(n):
            acc = {}
            for idx, c in right.delta.col(x).items():
                u, v = divmod(idx, n)
                vaxpy(acc, c, kron_vec(d.S_inv.col(u), unit(v), n))
            if not veq(gal.bracket_table[x], gal.src_mu.project(acc)):
                ok = False
                break
        rep.check("X[-] (x) X[+] = S^-1(X[1]) (x) X[2]", ok)
        galr = galois_maps(right)
        rep.check("lambda-hat invertible (right Hopf)", bool(galr.lam_inv))
        rep.check("mu-hat invertible (anti-right Hopf)", bool(galr.mu_inv))
        if galr.invertible:
            ok = True
            for x in range(n):
                acc = {}
                for idx, c in left.delta.col(x).items():
                    i, j = divmod(idx, n)
                    vaxpy(acc, c, kron_vec(d.S.col(i), unit(j), n))
                if not veq(galr.plus_table[x], galr.src_lam.project(acc)):
                    ok = False
                    break
            rep.check("X^- (x) X^+ = S(X(1)) (x) X(2)", ok)
            ok = True
            for x in range(n):
                acc = {}
                for idx, c in left.delta.col(x).items():
                    i, j = divmod(idx, n)
                    vaxpy(acc, c, kron_vec(unit(i), d.S_inv.col(j), n))
                if not veq(galr.bracket_table[x], galr.src_mu.project(acc)):
                    ok = False
                    break
            rep.check("X^[+] (x) X^[-] = X(1) (x) S^-1(X(2))", ok)
    return rep


def check_full_star_hopf(d: FullHopfAlgebroidData) -> Report:
    left = d.left
    L, B = left.total, left.base
    n, bd = L.dim, B.dim
    rep = Report("full *-Hopf algebroid %s" % d.name, dims={"total": n})
    if d.star is None:
        rep.check("star present", False, witness="no star supplied")
        return rep
    st = d.star
    right = d.derived_right()
    rep.check("star involutive", st.compose_anti(st) == Matrix.identity(n))
    ok, wit = True, None
    for x in range(n):
        for y in range(n):
            if not veq(st.apply(L.mult.get((x, y), {})),
                       L.mul(st.apply(unit(y)), st.apply(unit(x)))):
                ok, wit = False, "(%s,%s)" % (L.basis_name(x), L.basis_name(y))
                break
        if not ok:
            break
    rep.check("star antilinear anti-algebra map", ok, witness=wit)
    assert B.star is not None, "base star required"
    ok = all(veq(st.apply(left.s.col(b)), right.t.apply(B.star.apply(unit(b))))
             for b in range(bd))
    rep.check("s_L(b)* = t_R(b*)", ok)
    ok = all(veq(st.apply(left.t.col(b)), right.s.apply(B.star.apply(unit(b))))
             for b in range(bd))
    rep.check("t_L(b)* = s_R(b*)", ok)
    ok = all(veq(left.eps.apply(st.apply(unit(x))),
                 B.star.apply(right.eps.col(x))) for x in range(n))
    rep.check("eps_L(X*) = eps_R(X)* (underlined)", ok)
    qa = right.square()
    ok, wit = True, None
    for x in range(n):
        lhs = qa.project(right.delta.apply(st.apply(unit(x))))
        acc = {}
        for idx, c in left.delta.col(x).items():
            i, j = divmod(idx, n)
            vaxpy(acc, c.conjugate(),
                  kron_vec(st.apply(unit(i)), st.apply(unit(j)), n))
        if not veq(lhs, qa.project(acc)):
            ok, wit = False, L.basis_name(x)
            break
    rep.check("X*[1] (x) X*[2] = X(1)* (x) X(2)*", ok, witness=wit)

    gal = galois_maps(left)
    galr = galois_maps(right)
    if not (gal.invertible and galr.invertible):
        rep.inconclusive("lemma: X*+ (x) X*- = X^[+]* (x) X^[-]*",
                         note="Galois maps not all invertible")
    else:
        ok, wit = True, None
        for x in range(n):
            lhs = gal.lam_inv.inverse.apply(
                gal.tgt.project(kron_vec(st.apply(unit(x)), L.unit, n)))
            acc = {}
            for idx, c in galr.src_mu.lift(galr.bracket_table[x]).items():
                u, v = divmod(idx, n)
                vaxpy(acc, c.conjugate(),
                      kron_vec(st.apply(unit(u)), st.apply(unit(v)), n))
            if not veq(lhs, gal.src_lam.project(acc)):
                ok, wit = False, L.basis_name(x)
                break
        rep.check("lemma: X*+ (x) X*- = X^[+]* (x) X^[-]*", ok, witness=wit)
        ok, wit = True, None
        for x in range(n):
            lhs = gal.mu_inv.inverse.apply(
                gal.tgt.project(kron_vec(L.unit, st.apply(unit(x)), n)))
            acc = {}
            for idx, c in galr.src_lam.lift(galr.plus_table[x]).items():
                u, v = divmod(idx, n)
                vaxpy(acc, c.conjugate(),
                      kron_vec(st.apply(unit(u)), st.apply(unit(v)), n))
            if not veq(lhs, gal.src_mu.project(acc)):
                ok, wit = False, L.basis_name(x)
                break
        rep.check("lemma: X*[-] (x) X*[+] = X^-* (x) X^+*", ok, witness=wit)
    comp = (d.S @ st.mat) @ (d.S @ st.mat).conj()
    rep.check("S . * . S . * = id", comp == Matrix.identity(n))
    return rep


# ------------------------------------------------------------------- pairs

class PairData:
    """A left and a right bialgebroid over one base, with the antilinear
    anti-algebra map circ and the linear anti-algebra coalgebra map phi."""

    def __init__(self, left: LeftBialgebroidData, right: RightBialgebroidData,
                 circ: AntilinearMap, circ_inv: AntilinearMap,
                 phi: Matrix, phi_inv: Matrix | None = None, name="pair"):
        self.left = left
        self.right = right
        self.circ = circ
        self.circ_inv = circ_inv
        self.phi = phi
        if phi_inv is None:
            inv = invert(phi)
            phi_inv = inv.inverse if inv else None
        self.phi_inv = phi_inv
        self.name = name


def check_pair(p: PairData) -> Report:
    left, right = p.left, p.right
    L, R = left.total, right.total
    A = left.base
    n = L.dim
    rep = Report("pair (%s, %s)" % (left.name, right.name),
                 dims={"total L": n, "total R": R.dim, "base": A.dim})
    assert A.star is not None
    st = p.circ

    # --- star-related
    ok = st.compose_anti(p.circ_inv) == Matrix.identity(R.dim) and \
        p.circ_inv.compose_anti(st) == Matrix.identity(n)
    rep.check("circ invertible", ok)
    ok, wit = True, None
    for x in range(n):
        for y in range(n):
            if not veq(st.apply(L.mult.get((x, y), {})),
                       R.mul(st.apply(unit(y)), st.apply(unit(x)))):
                ok, wit = False, "(%s,%s)" % (L.basis_name(x), L.basis_name(y))
                break
        if not ok:
            break
    rep.check("circ antilinear anti-algebra map", ok, witness=wit)
    ok = all(veq(st.apply(left.s.col(a)), right.s.apply(A.star.apply(unit(a))))
             for a in range(A.dim))
    rep.check("s_R(a*) = s_L(a)circ", ok)
    ok = all(veq(st.apply(left.t.col(a)), right.t.apply(A.star.apply(unit(a))))
             for a in range(A.dim))
    rep.check("t_R(a*) = t_L(a)circ", ok)
    ok = all(veq(right.eps.apply(st.apply(unit(x))),
                 A.star.apply(left.eps.col(x))) for x in range(n))
    rep.check("eps_R(X circ) = eps_L(X)*", ok)
    qa = right.square()
    ok, wit = True, None
    for x in range(n):
        lhs = qa.project(right.delta.apply(st.apply(unit(x))))
        acc = {}
        for idx, c in left.delta.col(x).items():
            i, j = divmod(idx, n)
            vaxpy(acc, c.conjugate(),
                  kron_vec(st.apply(unit(j)), st.apply(unit(i)), R.dim))
        if not veq(lhs, qa.project(acc)):
            ok, wit = False, L.basis_name(x)
            break
    rep.check("flip(circ (x) circ) Delta_L = Delta_R circ", ok, witness=wit)
    star_related = all(c.verdict == "pass" for c in rep.checks)

    # --- flip lemma, constructively: flip(circ (x) circ) is well defined on
    # L (x)_A L and lands in the Takeuchi product of R (x)_A R
    ql = left.square()

    def flipmap(amb):
        out = {}
        for idx, c in amb.items():
            i, j = divmod(idx, n)
            vaxpy(out, c.conjugate(),
                  kron_vec(st.apply(unit(j)), st.apply(unit(i)), R.dim))
        return out

    ok = all(not qa.project(flipmap(row))
             for row in ql.quotient.relations.rows)
    rep.check("flip(circ (x) circ) well defined on L (x)_A L", ok)
    takr = right.takeuchi()
    ok = True
    for w in left.takeuchi().rows:
        img = qa.project(flipmap(ql.lift(w)))
        if not takr.contains(img):
            ok = False
            break
    rep.check("flip(circ (x) circ) maps Takeuchi into Takeuchi", ok)

    # --- reflexive
    if p.phi_inv is None:
        rep.check("phi invertible", False)
        return rep
    rep.check("phi invertible", p.phi @ p.phi_inv == Matrix.identity(n) and
              p.phi_inv @ p.phi == Matrix.identity(n))
    rep.check("phi(1) = 1", veq(p.phi.apply(L.unit), R.unit))
    ok, wit = True, None
    for x in range(n):
        for y in range(n):
            if not veq(p.phi.apply(L.mult.get((x, y), {})),
                       R.mul(p.phi.col(y), p.phi.col(x))):
                ok, wit = False, "(%s,%s)" % (L.basis_name(x), L.basis_name(y))
                break
        if not ok:
            break
    rep.check("phi anti-algebra map", ok, witness=wit)
    rep.check("phi . s_L = t_R", p.phi @ left.s == right.t)
    rep.check("phi . t_L = s_R", p.phi @ left.t == right.s)
    ok, wit = True, None
    for x in range(n):
        lhs = qa.project(right.delta.apply(p.phi.col(x)))
        acc = {}
        for idx, c in left.delta.col(x).items():
            i, j = divmod(idx, n)
            vaxpy(acc, c, kron_vec(p.phi.col(i), p.phi.col(j), R.dim))
        if not veq(lhs, qa.project(acc)):
            ok, wit = False, L.basis_name(x)
            break
    rep.check("(phi (x) phi) Delta_L = Delta_R phi (coalgebra map)", ok,
              witness=wit)
    reflexive = ok

    # --- star pair
    rep.check("phi^-1 . circ = circ^-1 . phi",
              p.phi_inv @ st.mat == p.circ_inv.mat @ p.phi.conj())

    # --- Hopf pair
    gal = galois_maps(left)
    rep.check("lambda of L invertible (Hopf pair)", bool(gal.lam_inv))
    rep.check("mu of L invertible (Hopf pair)", bool(gal.mu_inv))
    rep.check("star-related summary", star_related)
    return rep
