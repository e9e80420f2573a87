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
Automorphic forms on compact orbifold curves: the dimension formula, and
t-expansions of basis elements built either from hypergeometric series
(triangle groups) or from the local solutions of the Schwarzian equation.

"""
import re
import math
import six
from collections import namedtuple
from fractions import Fraction

from .algebra import FracSeries
from .algebra import Poly
from .algebra import RationalFunction
from .algebra import is_zero
from .algebra import parse_scalar
from .algebra import series_compose_rational
from .algebra import series_pow
from .common import ParameterError
from .hypergeom import HGParams
from .hypergeom import hg_series
from .schwarzian import frobenius_pair

# Accepts "0;2,4,6,12", "(0; 2, 4, 6, 12)" and "0;2^3,6^3"
SIGNATURE_RE = re.compile(
    r'^\s*\(?\s*(?P<genus>\d+)\s*(;\s*(?P<orders>[0-9^,\s]*))?\)?\s*$')

# The six Prop-4 style parameters of a triangle group (e1, e2, e3)
TriangleParams = namedtuple(
    'TriangleParams', ('a', 'b', 'c', 'a2', 'b2', 'c2'))


def _frac(x):
    """
    The fractional part x - floor(x).

    """
    return x - int(math.floor(x))


def _floor_half(k, e):
    """
    floor(k (1 - 1/e) / 2), the order of vanishing forced at an elliptic
    point of order e on a form of weight k.

    """
    return int(math.floor(Fraction(k) * (1 - Fraction(1, e)) / 2))


class OrbSignature(object):
    """
    (g; e_1, ..., e_r): the genus of the curve and the orders of its
    elliptic points.

    The orders are kept in the order given (triangle parameters depend on
    it); equality and sorting look at the sorted multiset.
    """

    def __init__(self, genus, orders=()):
        self.genus = int(genus)
        if self.genus < 0:
            raise ParameterError('The genus must be nonnegative.')

        self.orders = []
        for e in orders:
            if isinstance(e, six.string_types) and \
                    e.strip().lower() in ('oo', 'inf', 'infinity'):
                raise ParameterError(
                    'Cusped signatures are not supported.')

            e = int(e)
            if e < 2:
                raise ParameterError(
                    'Elliptic orders must be at least 2 (got {}).'.format(e))

            self.orders.append(e)

    @classmethod
    def parse(cls, text):
        """
        Parses "g;e1,e2,...".  e^n is accepted as a shorthand for n copies
        of e.

        """
        if isinstance(text, OrbSignature):
            return text

        match = SIGNATURE_RE.match(text or '')
        if not match:
            raise ParameterError('Invalid signature specified: {}'.format(
                text))

        orders = []
        for entry in re.split(r'[\s,]+', match.group('orders') or ''):
            if not entry:
                continue

            base, _, repeat = entry.partition('^')
            try:
                orders.extend([int(base)] * (int(repeat) if repeat else 1))

            except ValueError:
                raise ParameterError(
                    'Invalid signature specified: {}'.format(text))

        return cls(int(match.group('genus')), orders)

    @property
    def key(self):
        return (self.genus, tuple(sorted(self.orders)))

    def covolume(self):
        """
        2g - 2 + sum (1 - 1/e)

        """
        return 2 * self.genus - 2 + sum(
            (1 - Fraction(1, e) for e in self.orders), Fraction(0))

    def is_hyperbolic(self):
        return self.covolume() > 0

    def is_triangle(self):
        return self.genus == 0 and len(self.orders) == 3

    def format(self, compact=True):
        """
        "g;e1,e2,..." with runs written as e^n when compact is set.

        """
        genus, orders = self.key
        parts = []
        for e in sorted(set(orders)):
            n = orders.count(e)
            if compact and n > 1:
                parts.append('{}^{}'.format(e, n))

            else:
                parts.extend([str(e)] * n)

        return '{};{}'.format(genus, ','.join(parts))

    def __eq__(self, other):
        if not isinstance(other, OrbSignature):
            return NotImplemented

        return self.key == other.key

    def __ne__(self, other):
        return not self == other

    def __lt__(self, other):
        return self.key < other.key

    def __hash__(self):
        return hash(self.key)

    def __str__(self):
        return '({})'.format(self.format())

    def __repr__(self):
        return 'OrbSignature({})'.format(self.format())


def dim_Sk(sig, k):
    """
    The dimension of the space of weight k automorphic forms on a compact
    curve with signature sig.

    """
    k = int(k)
    if k % 2:
        raise ParameterError('The weight must be even (got {}).'.format(k))

    if k < 0:
        return 0

    if k == 0:
        return 1

    if k == 2:
        return sig.genus

    return (k - 1) * (sig.genus - 1) + sum(
        _floor_half(k, e) for e in sig.orders)


def prop4_params(e1, e2, e3):
    """
    a = (1 - 1/e1 - 1/e2 - 1/e3)/2,  b = a + 1/e3,  c = 1 - 1/e1 and the
    companions a + 1/e1, b + 1/e1, c + 2/e1.

    """
    for e in (e1, e2, e3):
        if int(e) < 2:
            raise ParameterError(
                'Elliptic orders must be at least 2 (got {}).'.format(e))

    r1, r2, r3 = (Fraction(1, int(e)) for e in (e1, e2, e3))
    a = (1 - r1 - r2 - r3) / 2
    b = a + r3
    c = 1 - r1
    return TriangleParams(a, b, c, a + r1, b + r1, c + 2 * r1)


def prop4_dimension_check(e1, e2, e3, k):
    """
    Returns the number of admissible j in a triangle basis along with
    dim S_k; the two always agree.

    """
    count = sum(_floor_half(k, e) for e in (e1, e2, e3)) - k + 1
    return max(0, count), dim_Sk(OrbSignature(0, (e1, e2, e3)), k)


class FormSpec(object):
    """
    Selects one basis element: the weight k, the index j and the mixing
    constant C in front of the second local solution.
    """

    def __init__(self, signature, weight, constant=0, index=0):
        self.signature = OrbSignature.parse(signature)
        self.weight = int(weight)
        self.constant = parse_scalar(constant)
        self.index = int(index)

        if self.weight < 4 or self.weight % 2:
            raise ParameterError(
                'Basis elements need an even weight of at least 4.')

        dim = dim_Sk(self.signature, self.weight)
        if not 0 <= self.index < dim:
            raise ParameterError(
                'j = {} is out of range; S_{} has dimension {}.'.format(
                    self.index, self.weight, dim))


def prop4_form(spec, order):
    """
    The basis element

      t^{k(1-1/e1)/2} (1-t)^{k(1-1/e2)/2} t^j (F + C t^{1/e1} F')^k

    of a triangle group, with fractional parts taken of the two outer
    exponents and F, F' the series of prop4_params().

    """
    if not spec.signature.is_triangle():
        raise ParameterError(
            '{} is not a triangle signature.'.format(spec.signature))

    e1, e2, e3 = spec.signature.orders
    k = spec.weight
    params = prop4_params(e1, e2, e3)

    inner = hg_series(HGParams(params.a, params.b, params.c), order)
    if not is_zero(spec.constant):
        companion = hg_series(HGParams(params.a2, params.b2, params.c2), order)
        inner = inner + companion.shift(Fraction(1, e1)) * spec.constant

    result = series_pow(inner, k, order)

    outer = _frac(Fraction(k) * (1 - Fraction(1, e2)) / 2)
    if outer:
        result = result * series_pow(
            FracSeries.from_poly(Poly([1, -1]), order), outer, order)

    return result.shift(_frac(Fraction(k) * (1 - Fraction(1, e1)) / 2) +
                        spec.index)


def _denominator(q, k):
    """
    prod (t - a_i)^floor(k(1 - 1/e_i)/2) over the finite elliptic points,
    split into the power of t and the part that is a unit at 0.

    """
    at_zero = 0
    unit = Poly([1])
    for point in q.points:
        m = _floor_half(k, point.order)
        if is_zero(point.location):
            at_zero = m

        else:
            unit = unit * Poly([-point.location, 1]) ** m

    return at_zero, unit


def prop2_form(q, weight, constant=0, order=30, index=0):
    """
    The basis element  t^j (f1 + C f2)^k / prod (t - a_i)^floor(k(1-1/e_i)/2)
    built from the two local solutions of f'' + Q f = 0 at t = 0.

    Only the factor at t = 0 moves the leading exponent; it ends up at
    k mu_1 - floor(k(1 - 1/e_0)/2) + j.

    """
    k = int(weight)
    f1, f2 = frobenius_pair(q, order)

    inner = f1
    constant = parse_scalar(constant)
    if not is_zero(constant):
        inner = f1 + f2 * constant

    at_zero, unit = _denominator(q, k)
    result = series_pow(inner, k)
    if unit.degree > 0:
        result = result * series_compose_rational(
            RationalFunction(Poly([1]), unit),
            int(math.ceil(result.order - result.offset)))

    return result.shift(index - at_zero)


def q_signature(q):
    """
    The genus zero signature described by the elliptic points of Q.

    """
    orders = [p.order for p in q.points]
    if q.infinity_order:
        orders.append(q.infinity_order)

    return OrbSignature(0, orders)


def form_basis(q, weight, constant=0, order=30):
    """
    Every basis element t^j g, j = 0 .. dim S_k - 1.

    """
    dim = dim_Sk(q_signature(q), weight)
    return [prop2_form(q, weight, constant, order, j) for j in range(dim)]
