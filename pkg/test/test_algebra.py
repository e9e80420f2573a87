# -*- coding: utf-8 -*-
#
# Copyright (C) 2024 The hyperx developers
# All rights reserved.
#
# This code is licensed under the MIT License.
#
# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files(the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and / or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions :
#
# The above copyright notice and this permission notice shall be included in
# all copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT.IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN
# THE SOFTWARE.
from __future__ import print_function
import random
from fractions import Fraction

from hyperx.algebra import ComplexApprox
from hyperx.algebra import FracSeries
from hyperx.algebra import Poly
from hyperx.algebra import QuadExt
from hyperx.algebra import RationalFunction
from hyperx.algebra import embed_complex
from hyperx.algebra import format_radicals
from hyperx.algebra import format_scalar
from hyperx.algebra import parse_scalar
from hyperx.algebra import quad_arith
from hyperx.algebra import series_compose_rational
from hyperx.algebra import series_mul
from hyperx.algebra import series_pow
from hyperx.algebra import settle_radicals
from hyperx.common import Branch
from hyperx.common import DomainError
from hyperx.common import FieldError
from hyperx.common import ParameterError
from hyperx.common import PoleError

# Disable logging for a cleaner testing output
import logging
logging.disable(logging.CRITICAL)


def test_parse_scalar():
    """
    API: parse_scalar() and format_scalar()

    """
    assert parse_scalar('3') == Fraction(3)
    assert parse_scalar(' -2/7 ') == Fraction(-2, 7)
    assert parse_scalar(5) == Fraction(5)

    value = parse_scalar('sqrt(-3)')
    assert isinstance(value, QuadExt)
    assert (value.x, value.y, value.d) == (0, 1, -3)

    # A coefficient on a bare root
    value = parse_scalar('12*sqrt(-3)')
    assert (value.x, value.y, value.d) == (0, 12, -3)

    value = parse_scalar('-sqrt(5)')
    assert (value.x, value.y, value.d) == (0, -1, 5)

    value = parse_scalar('1/2+3/4*sqrt(5)')
    assert (value.x, value.y, value.d) == \
        (Fraction(1, 2), Fraction(3, 4), 5)

    value = parse_scalar('1/3-sqrt(2)')
    assert (value.x, value.y, value.d) == (Fraction(1, 3), -1, 2)

    # Objects we already understand pass straight through
    assert parse_scalar(value) is value
    assert parse_scalar(Fraction(1, 9)) == Fraction(1, 9)

    for text in ('1/2+3/4*sqrt(5)', '-sqrt(5)', '12*sqrt(-3)',
                 '-5/3-2*sqrt(-2)', '7/11'):
        assert format_scalar(parse_scalar(text)) == text

    # Rational field elements are written as plain rationals
    assert format_scalar(QuadExt(3, 0, 5)) == '3'

    for bad in ('abc', '', '1sqrt(-3)', 'sqrt(4)', 'sqrt(1)', '1/0',
                1.5, True, None):
        try:
            parse_scalar(bad)
            # We should never reach here
            assert(False)

        except ParameterError:
            # Expected
            assert(True)


def test_quadratic_field():
    """
    API: QuadExt arithmetic

    """
    root5 = QuadExt.sqrt_of(5)
    assert root5 * root5 == 5
    assert (1 + root5) * (1 - root5) == -4
    assert (1 + root5).norm() == -4
    assert (1 + root5).trace() == 2
    assert (1 + root5).conjugate() == 1 - root5

    # The golden ratio satisfies x^2 = x + 1
    phi = (1 + root5) / 2
    assert phi ** 2 == phi + 1
    assert phi * phi.inverse() == 1
    assert phi ** -1 == phi - 1
    assert 1 / phi == phi - 1

    # s^2 + 22s - 4 = 0 for s = -11 + 5 sqrt(5)
    s = parse_scalar('-11+5*sqrt(5)')
    assert s * s + 22 * s - 4 == 0

    # Rationals written as field elements mix with any field
    assert QuadExt(2, 0, -3) + root5 == parse_scalar('2+sqrt(5)')
    assert QuadExt(2, 0, -3) == Fraction(2)
    assert hash(QuadExt(2, 0, -3)) == hash(Fraction(2))

    try:
        root5 + QuadExt.sqrt_of(-3)
        # We should never reach here
        assert(False)

    except FieldError:
        # Expected
        assert(True)

    try:
        root5 / QuadExt(0, 0, 5)
        # We should never reach here
        assert(False)

    except ZeroDivisionError:
        # Expected
        assert(True)

    try:
        QuadExt(1, 1, 9)
        # We should never reach here
        assert(False)

    except ParameterError:
        # Expected
        assert(True)

    # The field operations helper
    assert quad_arith(Fraction(1, 2), root5, 'add') == \
        parse_scalar('1/2+sqrt(5)')
    assert quad_arith(root5, root5, 'mul') == 5
    assert quad_arith(root5, root5, 'div') == 1

    try:
        quad_arith(root5, root5, 'pow')
        # We should never reach here
        assert(False)

    except ParameterError:
        # Expected
        assert(True)


def test_complex_approx():
    """
    API: ComplexApprox() and embed_complex()

    """
    third = ComplexApprox(Fraction(1, 3), 128)
    assert third.prec == 128
    assert abs((third * 3 - 1).value) < 1e-35
    assert abs((1 - third * 3).value) < 1e-35

    # Mixing precisions is refused
    try:
        third + ComplexApprox(1, 256)
        # We should never reach here
        assert(False)

    except FieldError:
        # Expected
        assert(True)

    # Irrational field elements need an explicit embedding
    try:
        third + QuadExt.sqrt_of(2)
        # We should never reach here
        assert(False)

    except FieldError:
        # Expected
        assert(True)

    principal = embed_complex(QuadExt.sqrt_of(-3), prec=64)
    conjugate = embed_complex(
        QuadExt.sqrt_of(-3), branch=Branch.CONJUGATE, prec=64)
    assert principal.imag > 0
    assert conjugate.imag < 0
    assert abs((principal * principal + 3).value) < 1e-15

    # Rationals embed on the real line
    value = embed_complex(Fraction(1, 4), prec=64)
    assert value.imag == 0
    assert value.real == 0.25

    # Square roots of negative reals land on the upper half plane
    assert (ComplexApprox(-4, 64) ** Fraction(1, 2)).imag > 0

    try:
        embed_complex(Fraction(1, 4), prec=32)
        # We should never reach here
        assert(False)

    except ParameterError:
        # Expected
        assert(True)

    try:
        embed_complex(Fraction(1, 4), branch='sideways', prec=64)
        # We should never reach here
        assert(False)

    except ParameterError:
        # Expected
        assert(True)


def test_poly():
    """
    API: Poly() object

    """
    z = Poly([0, 1])
    one = Poly([1])

    assert Poly([1, 2, 0, 0]).degree == 1
    assert Poly().is_zero()
    assert Poly().degree == -1

    cube = z ** 3 - one
    q, r = divmod(cube, z - one)
    assert q == Poly([1, 1, 1])
    assert r.is_zero()
    assert cube // (z - one) == q
    assert (cube + 3) % (z - one) == Poly([3])

    assert (z * z - one).gcd(z * z + z * 2 + one) == Poly([1, 1])
    assert (z * z).compose(z + one) == Poly([1, 2, 1])
    assert Poly([5, 3, 0, 2]).derivative() == Poly([3, 0, 6])
    assert Poly([1, -3, 1])(2) == -1
    assert Poly([-1, 0, 1])(QuadExt.sqrt_of(5)) == 4

    assert Poly.monomial(3, 2) == Poly([0, 0, 0, 2])
    assert Poly.parse(['1/2', 'sqrt(-2)']) == \
        Poly([Fraction(1, 2), QuadExt.sqrt_of(-2)])
    assert Poly([2, 4]).monic() == Poly([Fraction(1, 2), 1])
    assert Poly([1, Fraction(-1, 3)]).to_list() == ['1', '-1/3']

    try:
        divmod(z, Poly())
        # We should never reach here
        assert(False)

    except ZeroDivisionError:
        # Expected
        assert(True)

    try:
        z ** -1
        # We should never reach here
        assert(False)

    except ParameterError:
        # Expected
        assert(True)


def test_rational_function():
    """
    API: RationalFunction() object

    """
    z = Poly([0, 1])

    # Common factors cancel
    rf = RationalFunction(z * z - 1, z - 1)
    assert rf.num == Poly([1, 1])
    assert rf.den == Poly([1])
    assert rf.degree == 1

    # The denominator is normalized to den(0) = 1
    rf = RationalFunction(Poly([2]), Poly([4, 2]))
    assert rf.num == Poly([Fraction(1, 2)])
    assert rf.den == Poly([1, Fraction(1, 2)])

    # A pole at the origin leaves the denominator monic
    rf = RationalFunction(Poly([1]), Poly([0, 3]))
    assert rf.den == Poly([0, 1])
    assert rf.num == Poly([Fraction(1, 3)])

    try:
        rf(0)
        # We should never reach here
        assert(False)

    except PoleError:
        # Expected
        assert(True)

    try:
        RationalFunction(Poly([1]), Poly())
        # We should never reach here
        assert(False)

    except ZeroDivisionError:
        # Expected
        assert(True)

    # z/(1 - z) undoes z/(1 + z)
    f = RationalFunction(Poly([0, 1]), Poly([1, -1]))
    g = RationalFunction(Poly([0, 1]), Poly([1, 1]))
    assert f.compose(g) == RationalFunction.identity()
    assert f(Fraction(1, 2)) == 1

    # 4z(1 - z) has derivative 4 - 8z
    kummer = RationalFunction(Poly([0, 4, -4]))
    assert kummer.derivative() == Poly([4, -8])
    assert kummer(Fraction(1, 2)) == 1

    assert (f + g) * (f - g) == f * f - g * g
    assert (f / g) * g == f
    assert f ** -2 * f ** 2 == 1
    assert 1 - f == RationalFunction(Poly([1, -2]), Poly([1, -1]))
    assert RationalFunction(Poly()).is_zero()
    assert RationalFunction(Poly([3])).is_constant()

    assert f.to_dict() == {'num': ['0', '1'], 'den': ['1', '-1']}


def test_frac_series():
    """
    API: FracSeries() object

    """
    # z^(1/2) (1 + z) known through z^(9/2)
    f = FracSeries([1, 1], offset=Fraction(1, 2), order=5)
    assert f.offset == Fraction(1, 2)
    assert f.order == 5
    assert f.coefficient(Fraction(1, 2)) == 1
    assert f.coefficient(Fraction(3, 2)) == 1
    assert f.coefficient(Fraction(5, 2)) == 0
    assert f.coefficient(1) == 0
    assert f.terms() == [(Fraction(1, 2), 1), (Fraction(3, 2), 1)]

    theta = f.theta()
    assert theta.coefficient(Fraction(1, 2)) == Fraction(1, 2)
    assert theta.coefficient(Fraction(3, 2)) == Fraction(3, 2)

    # z^(1/2) * z^(1/3) lands on the exponent 5/6
    g = FracSeries([1], offset=Fraction(1, 3), order=4)
    product = f * g
    assert product.offset == Fraction(5, 6)
    assert product.coefficient(Fraction(11, 6)) == 1

    # Mixed lattices add up on their common refinement
    total = f + g
    assert total.coefficient(Fraction(1, 3)) == 1
    assert total.coefficient(Fraction(1, 2)) == 1
    assert total.order == 4

    # Leading zeros move into the offset
    h = FracSeries([0, 0, 3, 1], order=6)
    assert h.offset == 2
    assert h.valuation == 2
    assert h.leading_coefficient() == 3
    assert h.shift(-2).coefficient(0) == 3
    assert h.derivative().coefficient(1) == 6

    try:
        h.coefficient(6)
        # We should never reach here
        assert(False)

    except ParameterError:
        # Expected
        assert(True)

    assert FracSeries.zero(10).is_zero()
    assert FracSeries.zero(10).valuation == 10

    # The first place two series part ways
    a = FracSeries([1, 2, 3, 4], order=4)
    b = FracSeries([1, 2, 5, 4], order=4)
    assert a.first_difference(b) == (2, 3, 5)
    assert a.first_difference(a) is None
    assert a != b
    assert a == FracSeries([1, 2, 3, 4, 9], order=4)

    # Products are associative and commutative
    c = FracSeries([2, -1, Fraction(1, 3), 7], order=4)
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c


def test_series_kernels():
    """
    API: series_mul(), series_pow(), series_compose_rational() and
    substitute()

    """
    order = 8
    one_minus_z = FracSeries([1, -1], order=order)

    # (1 - z)^(-1/2) = 1 + z/2 + 3z^2/8 + 5z^3/16 + ...
    s = series_pow(one_minus_z, Fraction(-1, 2))
    assert s.coeffs[:4] == (1, Fraction(1, 2), Fraction(3, 8),
                            Fraction(5, 16))

    # (1 - z)(1 + z) = 1 - z^2
    product = series_mul(one_minus_z, FracSeries([1, 1], order=order))
    assert product.order == order
    assert product.coeffs[:3] == (1, 0, -1)
    assert product == one_minus_z * FracSeries([1, 1], order=order)

    # Squaring undoes the square root
    root = series_pow(FracSeries([1, 1], order=order), Fraction(1, 2))
    assert root * root == FracSeries([1, 1], order=order)

    # Exact leading coefficients are pulled out
    root = series_pow(FracSeries([4, 4], order=order), Fraction(1, 2))
    assert root.leading_coefficient() == 2

    # Offsets scale with the exponent
    cube = series_pow(FracSeries([0, 0, 0, 8], order=9), Fraction(2, 3))
    assert cube.offset == 2
    assert cube.leading_coefficient() == 4

    try:
        series_pow(FracSeries([2, 1], order=order), Fraction(1, 2))
        # We should never reach here
        assert(False)

    except DomainError:
        # Expected
        assert(True)

    # ... unless the caller collects the radical
    radicals = {}
    root = series_pow(FracSeries([2, 1], order=order), Fraction(1, 2),
                      radicals=radicals)
    assert radicals == {2: Fraction(1, 2)}
    assert root.leading_coefficient() == 1
    assert root * root == FracSeries([1, Fraction(1, 2)], order=order)

    # 12^(3/2) = 2^3 * 3^(3/2) = 24 * 3^(1/2)
    radicals = {}
    series_pow(FracSeries([12, 1], order=order), Fraction(3, 2),
               radicals=radicals)
    assert radicals == {2: Fraction(3), 3: Fraction(3, 2)}
    settled, rest = settle_radicals(
        FracSeries([1, 1], order=order), radicals)
    assert rest == {3: Fraction(1, 2)}
    assert settled.coeffs[:2] == (24, 24)
    assert format_radicals(rest) == '3^(1/2)'

    # Powers of the same prime cancel out
    radicals = {2: Fraction(-1, 2)}
    series_pow(FracSeries([2, 1], order=order), Fraction(1, 2),
               radicals=radicals)
    assert radicals == {}

    for base in ([-2, 1], ['1+sqrt(2)', 1]):
        try:
            series_pow(FracSeries([parse_scalar(c) for c in base],
                                  order=order),
                       Fraction(1, 2), radicals={})
            # We should never reach here
            assert(False)

        except DomainError:
            # Expected
            assert(True)

    try:
        series_pow(FracSeries.zero(order), -1)
        # We should never reach here
        assert(False)

    except DomainError:
        # Expected
        assert(True)

    geometric = series_compose_rational(
        RationalFunction(Poly([1]), Poly([1, -1])), order)
    assert geometric.coeffs == tuple([Fraction(1)] * order)

    try:
        series_compose_rational(
            RationalFunction(Poly([1]), Poly([0, 1])), order)
        # We should never reach here
        assert(False)

    except PoleError:
        # Expected
        assert(True)

    # 1/(1 - 2z) by substitution
    doubled = geometric.substitute(FracSeries([0, 2], order=order))
    assert doubled.coeffs == tuple(Fraction(2 ** k) for k in range(order))

    try:
        geometric.substitute(FracSeries([1, 2], order=order))
        # We should never reach here
        assert(False)

    except DomainError:
        # Expected
        assert(True)


def random_series(rng, order):
    coeffs = [Fraction(rng.randint(-9, 9), rng.randint(1, 5))
              for _ in range(order)]
    coeffs[0] = Fraction(1)
    return FracSeries(coeffs, order=order)


def random_quad(rng, d):
    return QuadExt(Fraction(rng.randint(-20, 20), rng.randint(1, 9)),
                   Fraction(rng.randint(-20, 20), rng.randint(1, 9)), d)


def test_series_laws():
    """
    API: FracSeries ring operations and series_pow() on random series

    """
    rng = random.Random(7)
    order = 30
    for _ in range(20):
        a, b, c = (random_series(rng, order) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
        assert (a - a).is_zero()

    for _ in range(20):
        a = random_series(rng, order)
        r = Fraction(rng.choice((-1, 1)) * rng.randint(1, 7),
                     rng.randint(1, 6))
        s = Fraction(rng.randint(-7, 7), rng.randint(1, 6))
        assert series_pow(a, r) * series_pow(a, s) == series_pow(a, r + s)
        assert series_pow(series_pow(a, r), 1 / r) == a


def test_quadratic_field_laws():
    """
    API: QuadExt field axioms and embed_complex() on random elements

    """
    rng = random.Random(11)
    for _ in range(1000):
        d = rng.choice((-7, -3, -2, -1, 2, 3, 5))
        x, y, z = (random_quad(rng, d) for _ in range(3))

        assert (x + y) + z == x + (y + z)
        assert x + y == y + x
        assert (x * y) * z == x * (y * z)
        assert x * y == y * x
        assert x * (y + z) == x * y + x * z
        assert (x * y).norm() == x.norm() * y.norm()
        assert (x * y).conjugate() == x.conjugate() * y.conjugate()
        if x != 0:
            assert x * x.inverse() == 1
            assert (y / x) * x == y

    # Both embeddings respect the field operations
    for _ in range(100):
        d = rng.choice((-7, -3, -2, -1, 2, 3, 5))
        x, y = random_quad(rng, d), random_quad(rng, d)
        for branch in (Branch.PRINCIPAL, Branch.CONJUGATE):
            def embed(v):
                return embed_complex(v, branch=branch, prec=96).value

            assert abs(embed(x * y) - embed(x) * embed(y)) < 1e-20
            assert abs(embed(x + y) - embed(x) - embed(y)) < 1e-20

        assert abs(embed_complex(x.conjugate(), prec=96).value -
                   embed_complex(x, branch=Branch.CONJUGATE,
                                 prec=96).value) < 1e-20
