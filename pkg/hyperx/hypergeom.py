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
"""
Gauss hypergeometric series: Pochhammer symbols, exact truncated
expansions, numeric evaluation with a rigorous tail bound, the
hypergeometric differential operator and the classical degree one and
degree two transformations.

"""
import six
import mpmath
from collections import namedtuple
from fractions import Fraction

from .algebra import ComplexApprox
from .algebra import FracSeries
from .algebra import GUARD_BITS
from .algebra import Poly
from .algebra import QuadExt
from .algebra import RationalFunction
from .algebra import embed_complex
from .algebra import format_scalar
from .algebra import parse_scalar
from .common import DomainError
from .common import ParameterError
from .logger import logger

# Below this modulus the series is summed as it stands; above it the Pfaff
# image is tried first
DIRECT_RADIUS = mpmath.mpf('0.9')

# Summation never runs past this many terms
MAX_TERMS = 200000

# The data of a transformation  F(p; z) = base(z)^exponent * F(params; arg)
Transformation = namedtuple(
    'Transformation', ('params', 'base', 'exponent', 'argument'))


def _is_nonpositive_integer(value):
    if isinstance(value, QuadExt):
        if not value.is_rational():
            return False
        value = value.x

    return value.denominator == 1 and value <= 0


class HGParams(object):
    """
    The parameters a, b and c of 2F1(a, b; c; z).
    """

    __slots__ = ('a', 'b', 'c')

    def __init__(self, a, b, c):
        self.a = parse_scalar(a)
        self.b = parse_scalar(b)
        self.c = parse_scalar(c)

        if _is_nonpositive_integer(self.c):
            raise ParameterError(
                'c = {} is a nonpositive integer; 2F1 is undefined.'.format(
                    format_scalar(self.c)))

    @classmethod
    def from_dict(cls, content):
        try:
            return cls(content['a'], content['b'], content['c'])

        except KeyError as e:
            raise ParameterError(
                'Hypergeometric parameter {} is missing.'.format(e))

    def to_dict(self):
        return {
            'a': format_scalar(self.a),
            'b': format_scalar(self.b),
            'c': format_scalar(self.c),
        }

    def __eq__(self, other):
        if not isinstance(other, HGParams):
            return NotImplemented

        return (self.a, self.b, self.c) == (other.a, other.b, other.c)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.a, self.b, self.c))

    def __repr__(self):
        return 'HGParams({a}, {b}; {c})'.format(**self.to_dict())


def pochhammer(a, n):
    """
    The rising factorial (a)_n = a(a+1)...(a+n-1) with (a)_0 = 1.

    """
    if n < 0:
        raise ParameterError('The Pochhammer index must be nonnegative.')

    result = Fraction(1)
    for k in range(n):
        result = result * (a + k)

    return result


def hg_series(p, order):
    """
    The exact expansion of 2F1(a, b; c; z) through z^(order - 1).

    """
    order = int(order)
    coeffs = []
    term = Fraction(1)
    for n in range(order):
        coeffs.append(term)
        # ratio recurrence
        term = term * (p.a + n) * (p.b + n) / ((p.c + n) * (n + 1))

    return FracSeries(coeffs, order=order)


def _to_mpc(value, prec):
    if isinstance(value, ComplexApprox):
        return value.value

    if isinstance(value, six.integer_types + (QuadExt, Fraction)):
        return embed_complex(value, prec=max(prec, 64)).value

    return mpmath.mpc(value)


def _ratio_bound(az, a, b, c, n):
    """
    A bound on every term ratio |t(k+1) / t(k)| with k >= n > |c|, given
    the absolute values of the parameters.

    The ratio is |z| (k+a)(k+b) / ((k-c)(k+1)) at worst, which need not
    decrease in k; writing it as 1 + ((a+b+c-1) k + ab + c) / ((k-c)(k+1))
    bounds it for all k >= n at once.

    """
    slope = max(a + b + c - 1, 0)
    return az * (1 + slope / (n - c) + (a * b + c) / ((n - c) * (n + 1)))


def _sum_direct(a, b, c, z, prec):
    """
    Sums the series at z and returns the value along with the bound on the
    neglected tail.

    """
    eps = mpmath.ldexp(mpmath.mpf(1), -(prec + 2))
    az = abs(z)
    big = 2 * max(abs(a), abs(b), abs(c))

    total = mpmath.mpc(0)
    term = mpmath.mpc(1)
    n = 0
    while n < MAX_TERMS:
        total += term
        if term == 0:
            # terminating series
            return total, mpmath.mpf(0)

        term = term * (a + n) * (b + n) / ((c + n) * (n + 1)) * z
        n += 1

        if n > big:
            rho = _ratio_bound(az, abs(a), abs(b), abs(c), n)
            if rho < 1:
                tail = abs(term) / (1 - rho)
                if tail <= eps:
                    total += term
                    return total, tail * rho

    raise DomainError(
        'The hypergeometric series did not settle within {} terms at '
        '|z| = {}.'.format(MAX_TERMS, mpmath.nstr(az, 8)))


def hg_eval(p, z, prec):
    """
    Evaluates 2F1(a, b; c; z) with absolute error below 2^-prec.

    The series is summed as it stands when |z| < 0.9; otherwise the Pfaff
    image (1-z)^-a 2F1(a, c-b; c; z/(z-1)) is used when its argument is
    small enough.  Anything outside both discs raises a DomainError.

    """
    prec = int(prec)
    with mpmath.workprec(prec + GUARD_BITS):
        a = _to_mpc(p.a, prec)
        b = _to_mpc(p.b, prec)
        c = _to_mpc(p.c, prec)
        z = _to_mpc(z, prec)

        az = abs(z)
        w = z / (z - 1) if z != 1 else None
        aw = abs(w) if w is not None else mpmath.inf

        if az < DIRECT_RADIUS:
            value, _ = _sum_direct(a, b, c, z, prec)

        elif aw < DIRECT_RADIUS or (az >= 1 and aw < 1):
            logger.trace(
                'Evaluating 2F1 at z = {} through its Pfaff image'.format(
                    mpmath.nstr(z, 10)))

            value, _ = _sum_direct(a, c - b, c, w, prec)
            value = mpmath.power(1 - z, -a) * value

        elif az < 1:
            value, _ = _sum_direct(a, b, c, z, prec)

        else:
            raise DomainError(
                'z = {} lies outside |z| < 1 and outside the Pfaff '
                'region.'.format(mpmath.nstr(z, 10)))

        return ComplexApprox(value, prec)


def hg_tail_bound(p, z, terms, prec=64):
    """
    The bound on |2F1(z) - (first `terms` terms)| that hg_eval() relies on;
    returns None when the bound does not apply yet.

    """
    with mpmath.workprec(prec + GUARD_BITS):
        a = abs(_to_mpc(p.a, prec))
        b = abs(_to_mpc(p.b, prec))
        c = abs(_to_mpc(p.c, prec))
        az = abs(_to_mpc(z, prec))

        n = terms
        if n <= 2 * max(a, b, c):
            return None

        rho = _ratio_bound(az, a, b, c, n)
        if rho >= 1:
            return None

        term = mpmath.mpc(1)
        za = _to_mpc(z, prec)
        pa, pb, pc = (_to_mpc(x, prec) for x in (p.a, p.b, p.c))
        for k in range(n):
            term = term * (pa + k) * (pb + k) / ((pc + k) * (k + 1)) * za

        return abs(term) / (1 - rho)


def _theta_shift(series, shift):
    """
    (theta + shift) applied to a series.

    """
    return series.theta() + series * shift


def hg_ode_residual(p, series):
    """
    theta(theta + c - 1)F - z(theta + a)(theta + b)F for a series F.

    """
    left = _theta_shift(_theta_shift(series, p.c - 1), 0)
    right = _theta_shift(_theta_shift(series, p.b), p.a).shift(1)
    return left - right


def euler_transform(p):
    """
    2F1(a, b; c; z) = (1-z)^(c-a-b) 2F1(c-a, c-b; c; z)

    """
    return Transformation(
        params=HGParams(p.c - p.a, p.c - p.b, p.c),
        base=Poly([1, -1]),
        exponent=p.c - p.a - p.b,
        argument=RationalFunction.identity(),
    )


def pfaff_transform(p):
    """
    2F1(a, b; c; z) = (1-z)^(-a) 2F1(a, c-b; c; z/(z-1))

    """
    return Transformation(
        params=HGParams(p.a, p.c - p.b, p.c),
        base=Poly([1, -1]),
        exponent=-p.a,
        argument=RationalFunction(Poly([0, 1]), Poly([-1, 1])),
    )


def kummer_params(a, b):
    """
    Returns the two parameter sets and the argument of Kummer's quadratic
    transformation
        2F1(2a, 2b; a+b+1/2; z) = 2F1(a, b; a+b+1/2; 4z(1-z))

    """
    a, b = parse_scalar(a), parse_scalar(b)
    c = a + b + Fraction(1, 2)
    return (
        HGParams(2 * a, 2 * b, c),
        HGParams(a, b, c),
        RationalFunction(Poly([0, 4, -4])),
    )


def goursat96_params(a):
    """
    Returns (left parameters, left argument, right parameters, prefactor)
    of the cubic transformation
        2F1(a, a+1/3; 1/2; z(z-9)^2/(z+3)^3)
            = (1+z/3)^(3a) 2F1(3a, a+1/6; 1/2; z)

    The prefactor is returned as a (base, exponent) pair.

    """
    a = parse_scalar(a)
    return (
        HGParams(a, a + Fraction(1, 3), Fraction(1, 2)),
        RationalFunction(Poly([0, 81, -18, 1]), Poly([27, 27, 9, 1])),
        HGParams(3 * a, a + Fraction(1, 6), Fraction(1, 2)),
        (Poly([1, Fraction(1, 3)]), 3 * a),
    )


def elliptic_period(lam, prec=64):
    """
    The period  integral_1^oo dx / sqrt(x(x-1)(x-lambda))  of the Legendre
    curve, by numerical quadrature.

    """
    with mpmath.workprec(prec + GUARD_BITS):
        lam = _to_mpc(lam, prec).real
        if not 0 < lam < 1:
            raise ParameterError(
                'The Legendre parameter must lie strictly between 0 and 1.')

        return mpmath.quad(
            lambda x: 1 / mpmath.sqrt(x * (x - 1) * (x - lam)),
            [1, 2, mpmath.inf])


def period_constant(lam, prec=64):
    """
    The ratio of the Legendre period to 2F1(1/2, 1/2; 1; lambda).

    """
    value = hg_eval(
        HGParams(Fraction(1, 2), Fraction(1, 2), 1), parse_scalar(lam), prec)

    with mpmath.workprec(prec + GUARD_BITS):
        return elliptic_period(parse_scalar(lam), prec) / value.value.real
