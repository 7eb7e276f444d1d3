import random
from fractions import Fraction

import pytest

from conftest import cofactor_det, rand_poly
from gaql.poly import (
    NEG_INF,
    PolyMap,
    Ring,
    RingMismatchError,
    embed,
    grevlex_key,
    jacobian_det,
)

R3 = Ring(("x", "y", "z"))
R4 = Ring(("x", "y", "u", "v"))
X, Y, Z = R3.gens()
X4, Y4, U4, V4 = R4.gens()


def test_ring_validation():
    with pytest.raises(ValueError):
        Ring(())
    with pytest.raises(ValueError):
        Ring(("x", "x"))
    with pytest.raises(ValueError):
        Ring(("x", ""))
    with pytest.raises(ValueError):
        Ring(("x", "3y"))


def test_basic_arithmetic():
    assert (X + Y) * (X - Y) == X**2 - Y**2
    p = 3 * X * Z + Y
    assert p + R3.zero() == p
    assert (1 + X * Z) * Y == Y + X * Y * Z


def test_ring_mismatch_is_structured():
    with pytest.raises(RingMismatchError):
        X + X4


def test_scalar_coercion():
    assert 2 * X + X == 3 * X
    assert X - 1 == X + R3.const(-1)
    assert (X + Fraction(1, 2)) * 2 == 2 * X + 1


def test_zero_terms_dropped():
    p = X + Y - X
    assert p == Y
    assert p.num_terms() == 1
    assert (X - X).is_zero


def test_partial_derivative():
    assert (X**2).partial_derivative(0) == 2 * X
    assert (X4 * U4 + Y4 * V4).partial_derivative(2) == X4
    assert R3.const(5).partial_derivative(1) == R3.zero()
    with pytest.raises(IndexError):
        X.partial_derivative(3)


def test_compose_identity_and_substitution():
    assert X.compose(list(R3.gens())) == X
    t_ring = Ring(("t",))
    t = t_ring.var(0)
    two = Ring(("a", "b"))
    p = two.var(0) + two.var(1)
    assert p.compose([t**2, t**3]) == t**2 + t**3


def test_compose_group_action_invariant():
    # substitute the flow (x, y, u - t*y, v + t*x) into x*u + y*v
    ext = Ring(("x", "y", "u", "v", "t"))
    x, y, u, v, t = ext.gens()
    p = X4 * U4 + Y4 * V4
    images = [x, y, u - t * y, v + t * x]
    assert p.compose(images) == x * u + y * v


def test_evaluate():
    assert (1 + X * Z).evaluate([0, 0, 0]) == 1
    assert R3.zero().evaluate([1, 2, 3]) == 0
    assert (X4 * U4 + Y4 * V4).evaluate([1, 1, 2, 3]) == 5
    with pytest.raises(ValueError):
        X.evaluate([1, 2])


def test_evaluate_is_hom():
    rng = random.Random(7)
    for _ in range(100):
        p = rand_poly(rng, R3)
        q = rand_poly(rng, R3)
        a = [Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(3)]
        assert (p * q).evaluate(a) == p.evaluate(a) * q.evaluate(a)
        assert (p + q).evaluate(a) == p.evaluate(a) + q.evaluate(a)


def test_ring_axioms_random():
    rng = random.Random(1)
    for _ in range(100):
        p, q, r = (rand_poly(rng, R3) for _ in range(3))
        assert (p + q) + r == p + (q + r)
        assert p + q == q + p
        assert (p * q) * r == p * (q * r)
        assert p * q == q * p
        assert p * (q + r) == p * q + p * r


def test_leibniz_rule_random():
    rng = random.Random(2)
    for _ in range(100):
        p, q = rand_poly(rng, R3), rand_poly(rng, R3)
        i = rng.randrange(3)
        lhs = (p * q).partial_derivative(i)
        rhs = p * q.partial_derivative(i) + q * p.partial_derivative(i)
        assert lhs == rhs


def test_compose_associativity_random():
    rng = random.Random(3)
    two = Ring(("a", "b"))
    for _ in range(30):
        p = rand_poly(rng, two, max_degree=2, max_terms=3)
        g = [rand_poly(rng, two, max_degree=2, max_terms=2) for _ in range(2)]
        h = [rand_poly(rng, two, max_degree=2, max_terms=2) for _ in range(2)]
        lhs = p.compose(g).compose(h)
        rhs = p.compose([gi.compose(h) for gi in g])
        assert lhs == rhs


def test_degrees():
    assert R3.zero().total_degree() == NEG_INF
    assert (X * Y**2 + Z).total_degree() == 3
    assert (X * Y**2 + Z).degree_in(1) == 2
    assert R3.one().total_degree() == 0


def test_grevlex_term_order_iteration():
    p = Y**2 + X**2 + X * Y + X + 1
    monomials = [e for e, _ in p.terms()]
    assert monomials == [(2, 0, 0), (1, 1, 0), (0, 2, 0), (1, 0, 0), (0, 0, 0)]
    assert grevlex_key((2, 0)) > grevlex_key((1, 1)) > grevlex_key((0, 2))


def test_jacobian_det_identity_and_repeat():
    assert jacobian_det(list(R3.gens())) == R3.one()
    f = X + Y * Z
    assert jacobian_det([f, f, Z]) == R3.zero()


def test_jacobian_det_slice_of_bilinear_map():
    # rows (u, x, y, x*u + y*v), variables ordered (x, y, u, v)
    val = jacobian_det([U4, X4, Y4, X4 * U4 + Y4 * V4])
    assert val == Y4
    rows = [
        [f.partial_derivative(j) for j in range(4)]
        for f in (U4, X4, Y4, X4 * U4 + Y4 * V4)
    ]
    assert cofactor_det(rows) == Y4


def test_det_matches_cofactor_oracle_random():
    rng = random.Random(4)
    for n in (2, 3, 4):
        ring = Ring(tuple(f"x{i}" for i in range(n)))
        for _ in range(15):
            fs = [rand_poly(rng, ring, max_degree=2, max_terms=3) for _ in range(n)]
            rows = [[f.partial_derivative(j) for j in range(n)] for f in fs]
            assert jacobian_det(fs) == cofactor_det(rows)


def test_jacobian_alternating_random():
    rng = random.Random(5)
    for _ in range(50):
        n = rng.choice((2, 3, 4))
        ring = Ring(tuple(f"x{i}" for i in range(n)))
        fs = [rand_poly(rng, ring, max_degree=2, max_terms=3) for _ in range(n)]
        base = jacobian_det(fs)
        i, j = rng.sample(range(n), 2)
        swapped = list(fs)
        swapped[i], swapped[j] = swapped[j], swapped[i]
        assert jacobian_det(swapped) == -base
        repeated = list(fs)
        repeated[i] = repeated[j]
        assert jacobian_det(repeated).is_zero


def test_jacobian_det_shape_errors():
    with pytest.raises(ValueError):
        jacobian_det([X, Y])
    with pytest.raises(RingMismatchError):
        jacobian_det([X, Y, X4])  # mixed rings


def test_embed_by_name():
    big = Ring(("t", "x", "y", "z"))
    q = embed(X * Y + 1, big)
    assert q.ring == big
    assert q == big.var(1) * big.var(2) + 1


def test_polymap_validation_and_helpers():
    F = PolyMap(R4, (X4, Y4, X4 * U4 + Y4 * V4))
    assert F.target_names == ("t1", "t2", "t3")
    assert F.target_ring == Ring(("t1", "t2", "t3"))
    F.require_hypersurface_count()
    assert F.evaluate([1, 1, 2, 3]) == (1, 1, 5)
    with pytest.raises(ValueError):
        PolyMap(R4, (X4,), target_names=("a", "b"))
    with pytest.raises(ValueError):
        PolyMap(R4, (X4, Y4), target_names=("a", "a"))
    G = PolyMap(R3, (X,))
    with pytest.raises(ValueError):
        G.require_hypersurface_count()


def test_immutability():
    p = X + Y
    with pytest.raises(AttributeError):
        p.ring = R4
