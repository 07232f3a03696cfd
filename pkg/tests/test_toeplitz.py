import random
from fractions import Fraction

import pytest

from ginv.errors import InvalidElement
from ginv.kinds import InverseKind as K
from ginv.toeplitz import (ToeplitzElement, ToeplitzRing, add, backward_shift, identity,
                           matrix_unit, multiply, shift, solve_linear, support_bound,
                           transpose, verify_witness)

S, T, ONE = shift(), backward_shift(), identity()


def dense_product(a, b, n):
    """Top-left n x n block of the infinite product, from entries alone."""
    reach = n + a.bandwidth + b.bandwidth + a.corr_size + b.corr_size + 2
    return [[sum((a.entry(i, k) * b.entry(k, j) for k in range(reach)), Fraction(0))
             for j in range(n)] for i in range(n)]


def rand_elem(rng):
    sym = {d: rng.randint(-3, 3) for d in range(-2, 3) if rng.random() < 0.6}
    m = rng.randint(0, 3)
    corr = [[Fraction(rng.randint(-2, 2), rng.choice((1, 2))) for _ in range(m)]
            for _ in range(m)]
    return ToeplitzElement.make(sym, corr)


def test_backward_shift_is_left_inverse():
    p = multiply(T, S)
    assert p == ONE
    assert p.correction == ()


def test_shift_times_backward_shift():
    p = multiply(S, T)
    assert p.symbol == ((0, Fraction(1)),)
    assert p.correction == ((Fraction(-1),),)


@pytest.mark.parametrize("seed", range(5))
def test_identity_is_neutral(seed):
    a = rand_elem(random.Random(seed))
    assert multiply(a, ONE) == a
    assert multiply(ONE, a) == a


@pytest.mark.parametrize("seed", range(20))
def test_product_matches_truncated_dense(seed):
    rng = random.Random(seed)
    a, b = rand_elem(rng), rand_elem(rng)
    p = multiply(a, b)
    n = support_bound(a, b) + 4
    assert p.corner(n) == dense_product(a, b, n)


@pytest.mark.parametrize("seed", range(10))
def test_transpose_reverses_products(seed):
    rng = random.Random(seed)
    a, b = rand_elem(rng), rand_elem(rng)
    assert transpose(multiply(a, b)) == multiply(transpose(b), transpose(a))
    assert transpose(transpose(a)) == a


def test_transpose_of_shift():
    assert transpose(S) == T
    assert transpose(matrix_unit(0, 2)) == matrix_unit(2, 0)


def test_canonical_form_strips_zeros():
    a = ToeplitzElement.make({0: 1, 3: 0}, [[0, 0], [0, 0]])
    assert a == ONE
    b = ToeplitzElement.make(None, [[0, 0, 0], [0, 0, 0], [0, 0, 5]])
    assert b.corr_size == 3
    assert ToeplitzElement.make(None, [[1, 0], [0, 0]]).corr_size == 1


def test_solve_identity_coefficient():
    x = solve_linear([(multiply(T, S), ONE)], T)
    assert x == T


def test_solve_in_range_of_ss_star():
    x = solve_linear([(multiply(S, T), ONE)], S)
    assert x is not None
    assert multiply(multiply(S, T), x) == S
    # x = S itself is a solution since row 0 of S is zero
    assert multiply(multiply(S, T), S) == S


def test_solve_shift_into_backward_shift_fails():
    assert solve_linear([(S, ONE)], T, band_bound=2, corr_bound=2) is None


def test_solve_rejects_negative_bounds():
    with pytest.raises(ValueError):
        solve_linear([(S, ONE)], T, band_bound=-1)


def test_solve_two_sided_terms():
    # x S + S* x = rhs, built from a known bounded solution
    x0 = ToeplitzElement.make({1: 2, 0: -1}, [[1]])
    rhs = add(multiply(x0, S), multiply(T, x0))
    x = solve_linear([(ONE, S), (T, ONE)], rhs)
    assert x is not None
    assert add(multiply(x, S), multiply(T, x)) == rhs


def test_verify_witness_right_core():
    R = ToeplitzRing()
    assert verify_witness(R.S_star, R.S, K.RIGHT_CORE)
    assert not verify_witness(R.S, R.S_star, K.RIGHT_CORE)


@pytest.mark.parametrize("kind", [K.RIGHT_CORE, K.CORE, K.MP, K.GROUP, K.DRAZIN, K.ONE_THREE])
def test_verify_witness_identity(kind):
    R = ToeplitzRing()
    assert verify_witness(R.one, R.one, kind)


def test_json_round_trip():
    rng = random.Random(3)
    for _ in range(10):
        a = rand_elem(rng)
        assert ToeplitzElement.from_json(a.to_json()) == a
        assert ToeplitzElement.from_json(str(a)) == a


@pytest.mark.parametrize("name,value", [
    ("S", S), ("S*", T), ("S^*", T), ("1", ONE), ("I", ONE),
    ("0", ToeplitzElement.make()), ("E_1_2", matrix_unit(1, 2))])
def test_named_constructors(name, value):
    assert ToeplitzElement.from_json(name) == value


def test_ring_decodes_scalars():
    R = ToeplitzRing()
    assert R.element(1) == R.one
    assert R.element(3) == R.one + R.one + R.one


def test_ring_decode_rejects_garbage():
    R = ToeplitzRing()
    with pytest.raises(InvalidElement):
        R.decode_value("not an operator")


def test_ring_spec_and_axioms_sample():
    R = ToeplitzRing(3, 2)
    assert R.spec() == {"kind": "Toeplitz", "band_bound": 3, "corr_bound": 2,
                        "involution": "transpose"}
    rng = random.Random(7)
    for _ in range(15):
        a, b, c = (R.random_element(rng) for _ in range(3))
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert (a * b).star == b.star * a.star


def test_ring_is_not_dedekind_finite():
    R = ToeplitzRing()
    assert R.S_star * R.S == R.one
    assert R.S * R.S_star != R.one
    assert R.S * R.S_star == R.one - R.E(0, 0)
