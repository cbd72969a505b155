"""Crossed modules and action algebroids: the pair and Weyl examples."""

import pytest

from algebroid.actions import (
    build_action_algebroid, check_action_algebroid, check_crossed_module,
    pair_example, weyl_example,
)
from algebroid.bialgebroids import (
    check_full_hopf, check_full_star_hopf, check_galois,
    check_left_bialgebroid, check_pair, check_right_bialgebroid, galois_maps,
)
from algebroid.hopf import cyclic_group_hopf
from algebroid.linalg import Matrix, kron_vec, unit, veq
from algebroid.scalars import ONE, QRat


@pytest.fixture(scope="module")
def act2():
    return build_action_algebroid(pair_example(cyclic_group_hopf(2)))


def test_pair_crossed_module_z2():
    c = pair_example(cyclic_group_hopf(2))
    rep = check_crossed_module(c)
    assert rep.passed, rep.to_text()
    # H commutative: the action is trivial
    assert all(c.act[p] == Matrix.identity(2).scale(
        c.h.eps.col(p).get(0, QRat(0))) for p in range(2))


def test_weyl_crossed_module_z2():
    c = weyl_example(cyclic_group_hopf(2))
    rep = check_crossed_module(c)
    assert rep.passed, rep.to_text()


def test_weyl_crossed_module_z4():
    c = weyl_example(cyclic_group_hopf(4))
    rep = check_crossed_module(c)
    assert rep.passed, rep.to_text()


def test_action_algebroid_dim_and_star_table(act2):
    h = cyclic_group_hopf(2)
    assert act2.left.total.dim == 4
    # (g (x) g)* = g (x) g for the pair crossed module over CZ2
    g_g = kron_vec(unit(1), unit(1), 2)
    assert veq(act2.full.star.apply(g_g), g_g)
    # eps_L(1 (x) g) = 0
    one_g = kron_vec(h.alg.unit, unit(1), 2)
    assert not act2.left.eps.apply(one_g).get(1)
    # S(1 (x) 1) = 1 (x) 1
    u = act2.left.total.unit
    assert veq(act2.full.S.apply(u), u)


def test_action_left_bialgebroid(act2):
    rep = check_left_bialgebroid(act2.left)
    assert rep.passed, rep.to_text()


def test_action_galois(act2):
    g = galois_maps(act2.left)
    assert g.invertible
    assert check_galois(act2.left, g).passed


def test_action_full_hopf(act2):
    rep = check_full_hopf(act2.full)
    assert rep.passed, rep.to_text()


def test_action_full_star_hopf(act2):
    rep = check_full_star_hopf(act2.full)
    assert rep.passed, rep.to_text()


def test_action_closed_forms(act2):
    rep = check_action_algebroid(act2)
    assert rep.passed, rep.to_text()


def test_action_right_partner(act2):
    rep = check_right_bialgebroid(act2.right_pair)
    assert rep.passed, rep.to_text()


def test_action_pair(act2):
    rep = check_pair(act2.pair)
    assert rep.passed, rep.to_text()


def test_action_rop_full_star(act2):
    rep = check_left_bialgebroid(act2.rop_full.left)
    assert rep.passed, rep.to_text()
    rep = check_full_hopf(act2.rop_full)
    assert rep.passed, rep.to_text()
    rep = check_full_star_hopf(act2.rop_full)
    assert rep.passed, rep.to_text()
