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
The Schwarzian differential equation f'' + Q(t) f = 0 attached to a genus
zero curve with elliptic points, its local solutions at t = 0 and the
automorphic derivative of rational maps.

Q has the shape

    Q(t) = sum_j (1 - 1/e_j^2) / (4 (t - a_j)^2) + sum_j B_j / (t - a_j)

summed over the finite elliptic points.  The residues B_j are pinned down
by the behaviour of Q at infinity together with any Moebius symmetries of
the point configuration.

"""
import six
from fractions import Fraction

from .algebra import FracSeries
from .algebra import Poly
from .algebra import RationalFunction
from .algebra import format_scalar
from .algebra import is_zero
from .algebra import parse_scalar
from .algebra import series_compose_rational
from .common import ContradictionError
from .common import Fiber
from .common import ParameterError
from .common import ResonanceError
from .common import UnderdeterminedError
from .logger import logger

# The point at infinity
INFINITY = Fiber.INFINITY

# Moebius maps of larger finite order are not recognized by order()
MAX_MOEBIUS_ORDER = 12


def parse_location(value):
    """
    Parses an elliptic point location; 'oo', 'inf' and 'infinity' all name
    the point at infinity.

    """
    if isinstance(value, six.string_types) and \
            value.strip().lower() in ('oo', 'inf', 'infinity', '∞'):
        return INFINITY

    return parse_scalar(value)


def format_location(value):
    return INFINITY if value == INFINITY else format_scalar(value)


class EllipticPoint(object):
    """
    A point a_j of the t-line carrying an elliptic point of order e_j.
    """

    __slots__ = ('location', 'order')

    def __init__(self, location, order):
        self.location = parse_location(location) \
            if location != INFINITY else INFINITY
        self.order = int(order)

        if self.order < 2:
            raise ParameterError(
                'An elliptic point must have order at least 2, not {}.'.format(
                    self.order))

    def is_infinite(self):
        return self.location == INFINITY

    @property
    def double_pole(self):
        """
        The coefficient (1 - 1/e^2)/4 of 1/(t - a)^2.

        """
        return (1 - Fraction(1, self.order ** 2)) / 4

    def __repr__(self):
        return 'EllipticPoint({}, {})'.format(
            format_location(self.location), self.order)


class MoebiusMap(object):
    """
    z -> (az + b)/(cz + d) with ad - bc nonzero.
    """

    __slots__ = ('a', 'b', 'c', 'd')

    def __init__(self, a, b, c, d):
        self.a, self.b, self.c, self.d = (
            parse_scalar(x) for x in (a, b, c, d))

        if is_zero(self.determinant):
            raise ParameterError('A Moebius map needs ad - bc != 0.')

    @classmethod
    def from_dict(cls, content):
        try:
            return cls(content['a'], content['b'], content['c'], content['d'])

        except KeyError as e:
            raise ParameterError(
                'Moebius coefficient {} is missing.'.format(e))

    @classmethod
    def identity(cls):
        return cls(1, 0, 0, 1)

    def to_dict(self):
        return {k: format_scalar(getattr(self, k)) for k in 'abcd'}

    @property
    def determinant(self):
        return self.a * self.d - self.b * self.c

    def apply(self, x):
        """
        Applies the map to a scalar or to the point at infinity.

        """
        if x == INFINITY:
            return INFINITY if is_zero(self.c) else self.a / self.c

        den = self.c * x + self.d
        if is_zero(den):
            return INFINITY

        return (self.a * x + self.b) / den

    __call__ = apply

    def as_rational_function(self):
        return RationalFunction(
            Poly([self.b, self.a]), Poly([self.d, self.c]))

    def compose(self, other):
        """
        Returns self o other.

        """
        return MoebiusMap(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d)

    def inverse(self):
        return MoebiusMap(self.d, -self.b, -self.c, self.a)

    def is_identity(self):
        return is_zero(self.b) and is_zero(self.c) and self.a == self.d

    def order(self):
        """
        The order of the map in PGL(2), or None if it is not finite (or
        exceeds MAX_MOEBIUS_ORDER).

        """
        power = self
        for n in range(1, MAX_MOEBIUS_ORDER + 1):
            if power.is_identity():
                return n
            power = self.compose(power)

        return None

    def __eq__(self, other):
        if not isinstance(other, MoebiusMap):
            return NotImplemented

        # projective equality
        mine = (self.a, self.b, self.c, self.d)
        theirs = (other.a, other.b, other.c, other.d)
        return all(
            mine[i] * theirs[j] == mine[j] * theirs[i]
            for i in range(4) for j in range(4))

    def __ne__(self, other):
        return not self == other

    __hash__ = None

    def __repr__(self):
        return 'MoebiusMap(({a})z + ({b}))/(({c})z + ({d}))'.format(
            **self.to_dict())


def moebius_action(R, g):
    """
    (ad - bc)^2 / (cx + d)^4 * R((ax + b)/(cx + d)), the action of g on the
    quadratic differential R(x) dx^2.

    """
    factor = RationalFunction(
        Poly([g.determinant ** 2]), Poly([g.d, g.c]) ** 4)
    return factor * R.compose(g.as_rational_function())


def check_symmetry(R, g):
    """
    Returns True if R(x) dx^2 is invariant under g.

    """
    return moebius_action(R, g) == R


class SchwarzianQ(object):
    """
    Q(t) with its finite elliptic points, their residues and the order of
    an elliptic point at infinity (None when infinity is a regular point).
    """

    def __init__(self, points, residues, infinity_order=None):
        self.points = list(points)
        self.residues = [parse_scalar(b) for b in residues]
        self.infinity_order = \
            int(infinity_order) if infinity_order else None

        if len(self.points) != len(self.residues):
            raise ParameterError(
                'Every finite elliptic point needs exactly one residue.')

    @classmethod
    def from_dict(cls, content):
        points = []
        residues = []
        infinity_order = content.get('infinity_order')
        for entry in content.get('points', []):
            point = EllipticPoint(
                parse_location(entry['location']), entry['order'])
            if point.is_infinite():
                infinity_order = point.order
                continue

            points.append(point)
            residues.append(entry.get('residue', 0))

        return cls(points, residues, infinity_order)

    def to_dict(self):
        return {
            'points': [{
                'location': format_location(p.location),
                'order': p.order,
                'residue': format_scalar(b),
            } for p, b in zip(self.points, self.residues)],
            'infinity_order': self.infinity_order,
        }

    def singular_order(self, at):
        """
        Returns the elliptic order at the given location, or None if the
        location is a regular point of Q.

        """
        if at == INFINITY:
            return self.infinity_order

        at = parse_scalar(at)
        for point in self.points:
            if point.location == at:
                return point.order

        return None

    def as_rational_function(self):
        result = RationalFunction(Poly())
        for point, residue in zip(self.points, self.residues):
            linear = Poly([-point.location, 1])
            result = result + RationalFunction(
                Poly([point.double_pole]), linear ** 2)
            result = result + RationalFunction(Poly([residue]), linear)

        return result

    def moment_defects(self):
        """
        The left hand sides of the relations the residues must satisfy for
        Q to have the declared behaviour at infinity; all zero for a valid
        Q.

        """
        rows, rhs = _moment_rows(self.points, self.infinity_order)
        return [
            sum((c * b for c, b in zip(row, self.residues)), Fraction(0)) - r
            for row, r in zip(rows, rhs)]

    def __repr__(self):
        return 'SchwarzianQ({})'.format(', '.join(
            '{}@{}:{}'.format(p.order, format_location(p.location),
                              format_scalar(b))
            for p, b in zip(self.points, self.residues)))


def _moment_rows(points, infinity_order):
    """
    The linear relations on the residues coming from infinity:

      no point at infinity:  sum B = 0,  sum (a B + A) = 0,
                             sum (a^2 B + 2 a A) = 0
      a point of order e:    sum B = 0,  sum (a B + A) = (1 - 1/e^2)/4

    Returned as (rows, right hand sides).

    """
    rows = [[Fraction(1)] * len(points)]
    rhs = [Fraction(0)]

    first = sum((p.double_pole for p in points), Fraction(0))
    rows.append([p.location for p in points])
    if infinity_order:
        rhs.append(EllipticPoint(INFINITY, infinity_order).double_pole -
                   first)
        return rows, rhs

    rhs.append(-first)
    rows.append([p.location * p.location for p in points])
    rhs.append(-sum(
        (2 * p.location * p.double_pole for p in points), Fraction(0)))
    return rows, rhs


def _symmetry_rows(points, g):
    """
    Linearizes the invariance of Q under g: after clearing denominators,
    every coefficient of the numerator is a linear form in the residues.

    """
    base = RationalFunction(Poly())
    parts = []
    for point in points:
        linear = Poly([-point.location, 1])
        base = base + RationalFunction(Poly([point.double_pole]), linear ** 2)
        parts.append(RationalFunction(Poly([1]), linear))

    terms = [moebius_action(base, g) - base] + [
        moebius_action(part, g) - part for part in parts]

    common = Poly([1])
    for term in terms:
        common = common * (term.den // common.gcd(term.den))

    numerators = [term.num * (common // term.den) for term in terms]
    degree = max(n.degree for n in numerators)

    rows, rhs = [], []
    for k in range(degree + 1):
        rows.append([n[k] for n in numerators[1:]])
        rhs.append(-numerators[0][k])

    return rows, rhs


def solve_linear(rows, rhs, names=None):
    """
    Exact Gauss-Jordan elimination.  Returns the unique solution; raises
    ContradictionError when there is none and UnderdeterminedError (with
    the free unknowns) when there are many.

    """
    n = len(rows[0]) if rows else 0
    names = names or ['x{}'.format(i) for i in range(n)]
    matrix = [list(row) + [r] for row, r in zip(rows, rhs)]

    pivots = []
    row = 0
    for col in range(n):
        pivot = next(
            (i for i in range(row, len(matrix))
             if not is_zero(matrix[i][col])), None)
        if pivot is None:
            continue

        matrix[row], matrix[pivot] = matrix[pivot], matrix[row]
        lead = matrix[row][col]
        matrix[row] = [x / lead for x in matrix[row]]
        for i in range(len(matrix)):
            if i != row and not is_zero(matrix[i][col]):
                factor = matrix[i][col]
                matrix[i] = [
                    x - factor * y for x, y in zip(matrix[i], matrix[row])]

        pivots.append(col)
        row += 1

    for i in range(row, len(matrix)):
        if not is_zero(matrix[i][n]):
            raise ContradictionError(
                'The relations on {} are inconsistent.'.format(
                    ', '.join(names)))

    if len(pivots) < n:
        free = [names[c] for c in range(n) if c not in pivots]
        raise UnderdeterminedError(
            'More symmetry is needed; {} undetermined: {}'.format(
                len(free), ', '.join(free)), free=free)

    solution = [Fraction(0)] * n
    for i, col in enumerate(pivots):
        solution[col] = matrix[i][n]

    return solution


def build_Q(points, symmetries=()):
    """
    Solves for the residues of Q from its elliptic points (at most one of
    them at infinity) and the Moebius maps the configuration is invariant
    under.

    """
    finite = [p for p in points if not p.is_infinite()]
    infinite = [p for p in points if p.is_infinite()]
    if len(infinite) > 1:
        raise ParameterError('Only one elliptic point can sit at infinity.')

    locations = [p.location for p in finite]
    if len(set(locations)) != len(locations):
        raise ParameterError('Elliptic point locations must be distinct.')

    infinity_order = infinite[0].order if infinite else None
    support = set(locations) | ({INFINITY} if infinite else set())
    names = ['B({})'.format(format_scalar(a)) for a in locations]

    rows, rhs = _moment_rows(finite, infinity_order)
    for g in symmetries:
        image = set(g.apply(x) for x in support)
        if image != support:
            raise ParameterError(
                '{} does not permute the elliptic points.'.format(g))

        more_rows, more_rhs = _symmetry_rows(finite, g)
        rows.extend(more_rows)
        rhs.extend(more_rhs)

    logger.debug('Solving {} relations for {} residues'.format(
        len(rows), len(names)))

    residues = solve_linear(rows, rhs, names)
    q = SchwarzianQ(finite, residues, infinity_order)

    if any(not is_zero(d) for d in q.moment_defects()):
        # The elimination above is exact; this can not be reached
        raise ContradictionError('The solved residues violate the moment '
                                 'relations.')

    return q


def indicial_exponents(q, at=0):
    """
    The two local exponents (1 -/+ 1/e)/2 at an elliptic point, smaller
    first.

    """
    if at != INFINITY:
        at = parse_scalar(at)

    order = q.singular_order(at)
    if order is None:
        raise ParameterError(
            '{} is a regular point of Q.'.format(format_location(at)))

    return (
        (1 - Fraction(1, order)) / 2,
        (1 + Fraction(1, order)) / 2,
    )


def frobenius(q, mu, order):
    """
    The solution t^mu (1 + c_1 t + c_2 t^2 + ...) of f'' + Q f = 0 at
    t = 0, known through t^(mu + order - 1).

    Writing t^2 Q(t) = sum p_k t^k, the coefficients obey
        c_n ((mu + n)(mu + n - 1) + p_0) = -sum_{k=1..n} p_k c_{n-k}

    """
    mu = parse_scalar(mu)
    order = int(order)

    p = series_compose_rational(
        q.as_rational_function() * RationalFunction(Poly([0, 0, 1])), order)
    p0 = p.coefficient(0)
    if not is_zero(mu * (mu - 1) + p0):
        raise ParameterError(
            '{} is not a local exponent of Q at 0.'.format(format_scalar(mu)))

    coeffs = [Fraction(1)]
    for n in range(1, order):
        factor = (mu + n) * (mu + n - 1) + p0
        if is_zero(factor):
            raise ResonanceError(
                'The exponents at 0 differ by the integer {}.'.format(n))

        acc = Fraction(0)
        for k in range(1, n + 1):
            pk = p.coefficient(k)
            if not is_zero(pk):
                acc = acc + pk * coeffs[n - k]

        coeffs.append(-acc / factor)

    return FracSeries(coeffs, offset=mu, order=mu + order)


def frobenius_pair(q, order):
    """
    Both local solutions at t = 0, the smaller exponent first.

    """
    mu1, mu2 = indicial_exponents(q, 0)
    return frobenius(q, mu1, order), frobenius(q, mu2, order)


def ode_residual(q, f):
    """
    f'' + Q f for a local solution f at 0.

    """
    q0 = series_compose_rational(
        q.as_rational_function() * RationalFunction(Poly([0, 0, 1])),
        f.order - f.offset)
    return f.derivative().derivative() + (q0 * f).shift(-2)


def schwarzian_derivative(f):
    """
    {f, z} = f'''/f' - (3/2)(f''/f')^2

    """
    if f.is_constant():
        raise ParameterError(
            'The Schwarzian derivative of a constant is undefined.')

    d1 = f.derivative()
    d2 = d1.derivative()
    d3 = d2.derivative()
    ratio = d2 / d1
    return d3 / d1 - ratio * ratio * Fraction(3, 2)


def automorphic_derivative(f):
    """
    D(f, z) = -{f, z} / (2 f'(z)^2)

    """
    if f.is_constant():
        raise ParameterError(
            'The automorphic derivative of a constant is undefined.')

    d1 = f.derivative()
    return -schwarzian_derivative(f) / (d1 * d1 * 2)
