import random

import pytest

from codimtwo.binomials import (
    Form,
    Monomial,
    TermOrder,
    TieBreak,
    binomial_of_pair,
    classify_binomial,
    ideal_generators,
    is_cm,
    leading_monomial,
)
from codimtwo.fan import build_fan
from codimtwo.lattice import FiniteAbelianGroup
from codimtwo.model import ProblemSpec, TorsionData, relation_lattice, weights

from fixtures import CURVE345, FOUR_GEN, K3, QUARTIC, TORSION, TWISTED


def _analysis(problem):
    fan = build_fan(problem, relation_lattice(problem))
    return fan, ideal_generators(fan, problem)


def _key(e_z, e_y, *e_x):
    m1 = (e_z, e_y) + tuple(e_x)
    return m1


def _binomial_key(lhs, rhs):
    return (min(lhs, rhs), max(lhs, rhs))


def signless(b):
    return b.signless_key()


def test_binomial_of_pair_k3_y_pure():
    b = binomial_of_pair((0, 6), K3)
    assert b.form is Form.Y_PURE
    assert signless(b) == _binomial_key(_key(0, 6, 0, 0, 0), _key(0, 0, 4, 1, 1))
    assert b.render() == "y^6 - x1^4*x2*x3"


def test_binomial_of_pair_quartic_mixed():
    b = binomial_of_pair((1, -1), QUARTIC)
    assert b.form is Form.ZY_MIXED
    assert b.render() == "z*y - x1*x2"


def test_binomial_of_pair_twisted():
    b = binomial_of_pair((2, 1), TWISTED)
    assert b.render() == "z^2 - y*x2"
    assert b.form is Form.Z_PURE


def test_binomial_of_pair_rejects_non_lattice():
    with pytest.raises(ValueError):
        binomial_of_pair((1, 0), TWISTED)
    with pytest.raises(ValueError):
        binomial_of_pair((-3, 0), TWISTED)
    with pytest.raises(ValueError):
        binomial_of_pair((0, 0), TWISTED)


def test_classification_examples():
    fan, gens = _analysis(K3)
    by_text = {b.render(): b for b in gens.generators}
    assert by_text["z^6 - x1*x2^4*x3"].form is Form.Z_PURE
    assert by_text["z^2*x1 - y^2*x2"].form is Form.SPLIT
    assert by_text["y^6 - x1^4*x2*x3"].form is Form.Y_PURE
    for b in gens.generators:
        assert classify_binomial(b, K3) is b.form


def test_classification_pure_edges():
    # p = 0 never yields forms 2-4; s = 0 never yields forms 1, 3, 4
    for p in (K3, QUARTIC, TWISTED, CURVE345, TORSION):
        basis = relation_lattice(p)
        for s, q in basis.points(10):
            b = binomial_of_pair((s, q), p)
            if q == 0:
                assert b.form is Form.Z_PURE
            if s == 0:
                assert b.form is Form.Y_PURE


def test_weight_homogeneity_of_emitted():
    for p in (K3, QUARTIC, TWISTED, CURVE345, TORSION, FOUR_GEN):
        w = weights(p)
        _, gens = _analysis(p)
        for b in gens.generators:
            assert b.lhs.weight(w) == b.rhs.weight(w)


def test_leading_monomial_revlex():
    w = weights(QUARTIC)
    assert (w.w_z, w.w_y, w.w_x) == (4, 4, (4, 4))
    order = TermOrder(w, TieBreak.REVLEX_Z_SMALLEST)
    b = binomial_of_pair((0, 4), QUARTIC)  # y^4 - x1^3*x2
    lead = leading_monomial(b, order)
    assert (lead.e_z, lead.e_y, lead.e_x) == (0, 0, (3, 1))
    b = binomial_of_pair((2, 2), QUARTIC)  # z^2*x1 - y^2*x2
    lead = leading_monomial(b, order)
    assert (lead.e_z, lead.e_y, lead.e_x) == (0, 2, (0, 1))


def test_leading_monomial_rejects_equal_sides():
    from codimtwo.binomials import Binomial
    m = Monomial(1, 0, (0,))
    with pytest.raises(ValueError):
        leading_monomial(Binomial(m, m, Form.Z_PURE), TermOrder(weights(CURVE345)))


def test_term_orders_are_total_and_multiplicative():
    rng = random.Random(11)
    w = weights(QUARTIC)
    for tb in TieBreak:
        order = TermOrder(w, tb)
        monos = [Monomial(rng.randint(0, 4), rng.randint(0, 4),
                          (rng.randint(0, 4), rng.randint(0, 4))) for _ in range(60)]
        for i in range(0, 60, 3):
            a, b, c = monos[i], monos[i + 1], monos[i + 2]
            if a != b:
                assert order.greater(a, b) != order.greater(b, a)
                # multiplicative
                assert order.greater(a.mul(c), b.mul(c)) == order.greater(a, b)


def test_is_cm_fixtures():
    for p, expected in [(TWISTED, True), (QUARTIC, False), (K3, False),
                        (CURVE345, True), (TORSION, True), (FOUR_GEN, False)]:
        fan = build_fan(p, relation_lattice(p))
        assert is_cm(fan) is expected, p


def test_generators_twisted_cubic():
    _, gens = _analysis(TWISTED)
    assert gens.is_cm and gens.tau == 3
    got = {b.render() for b in gens.generators}
    assert got == {"z^2 - y*x2", "z*x1 - y^2", "z*y - x1*x2"}


def test_generators_curve345():
    _, gens = _analysis(CURVE345)
    assert gens.is_cm and gens.tau == 3
    got = {b.render() for b in gens.generators}
    assert got == {"z^2 - y*x1", "z*x1^2 - y^2", "z*y - x1^3"}


def test_generators_k3():
    _, gens = _analysis(K3)
    assert not gens.is_cm and gens.tau == 5
    got = {signless(b) for b in gens.generators}
    expect = {
        _binomial_key(_key(6, 0, 0, 0, 0), _key(0, 0, 1, 4, 1)),   # z^6 - x1*x2^4*x3
        _binomial_key(_key(4, 2, 0, 0, 0), _key(0, 0, 2, 3, 1)),   # y^2 z^4 - x1^2 x2^3 x3
        _binomial_key(_key(2, 4, 0, 0, 0), _key(0, 0, 3, 2, 1)),   # y^4 z^2 - x1^3 x2^2 x3
        _binomial_key(_key(2, 0, 1, 0, 0), _key(0, 2, 0, 1, 0)),   # z^2 x1 - y^2 x2
        _binomial_key(_key(0, 6, 0, 0, 0), _key(0, 0, 4, 1, 1)),   # y^6 - x1^4 x2 x3
    }
    assert got == expect


def test_generators_quartic():
    # minimal set of the classical non-CM quartic cone: one quadric, three cubics
    _, gens = _analysis(QUARTIC)
    assert not gens.is_cm and gens.tau == 4
    got = {b.render() for b in gens.generators}
    assert got == {"z^3 - y*x2^2", "z*y - x1*x2", "z^2*x1 - y^2*x2", "z*x1^2 - y^3"}


def test_generators_four_generator_case():
    _, gens = _analysis(FOUR_GEN)
    assert not gens.is_cm and gens.tau == 4


def test_generator_vectors_are_deduplicated():
    # consecutive difference series overlap; the quartic overlaps at (1,-1)
    _, gens = _analysis(QUARTIC)
    assert len(set(gens.lattice_vectors)) == len(gens.lattice_vectors) == 4
    assert (1, -1) in gens.lattice_vectors


def test_permutation_equivariance():
    rng = random.Random(12)
    for p in (K3, QUARTIC, TORSION):
        perm = list(range(p.n))
        rng.shuffle(perm)
        p2 = ProblemSpec(
            a=tuple(p.a[i] for i in perm),
            b=tuple(p.b[i] for i in perm),
            c=tuple(p.c[i] for i in perm),
            torsion=None if p.torsion is None else TorsionData(
                group=p.torsion.group,
                h_x=tuple(p.torsion.h_x[i] for i in perm),
                h_z=p.torsion.h_z, h_y=p.torsion.h_y,
            ),
        )
        _, g1 = _analysis(p)
        _, g2 = _analysis(p2)
        assert g1.is_cm == g2.is_cm and g1.tau == g2.tau

        def remap(b):
            lhs = (b.lhs.e_z, b.lhs.e_y) + tuple(b.lhs.e_x[i] for i in perm)
            rhs = (b.rhs.e_z, b.rhs.e_y) + tuple(b.rhs.e_x[i] for i in perm)
            return (min(lhs, rhs), max(lhs, rhs))

        assert {remap(b) for b in g1.generators} == {signless(b) for b in g2.generators}


def test_mirror_consistency():
    for p in (K3, QUARTIC, TWISTED, TORSION, FOUR_GEN):
        swapped = ProblemSpec(
            a=p.a, b=p.c, c=p.b,
            torsion=None if p.torsion is None else TorsionData(
                group=p.torsion.group, h_x=p.torsion.h_x,
                h_z=p.torsion.h_y, h_y=p.torsion.h_z,
            ),
        )
        _, g1 = _analysis(p)
        _, g2 = _analysis(swapped)
        assert g1.is_cm == g2.is_cm and g1.tau == g2.tau

        def zy_swap(b):
            lhs = (b.lhs.e_y, b.lhs.e_z) + b.lhs.e_x
            rhs = (b.rhs.e_y, b.rhs.e_z) + b.rhs.e_x
            return (min(lhs, rhs), max(lhs, rhs))

        assert {zy_swap(b) for b in g1.generators} == {signless(b) for b in g2.generators}


def test_zero_quotient_column_is_cohen_macaulay():
    # all slopes equal and a ray on the common line: v-column identically zero
    p = ProblemSpec(a=(2,), b=(1,), c=(1,))
    fan, gens = _analysis(p)
    assert fan.v(0) == (0,)
    assert (fan.nu, fan.mu) == (0, 1)
    assert gens.is_cm and gens.tau == 3
    assert {b.render() for b in gens.generators} == {"z - y", "y^2 - x1", "z*y - x1"}
