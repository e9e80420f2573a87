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
Exact scalars (rationals and elements of a quadratic field), numeric
complex values that carry their precision, dense polynomials, rational
functions and truncated power series whose exponents live on a rational
lattice.

Rationals are plain fractions.Fraction objects; everything else in this
module is an immutable value object.

"""
import re
import math
import six
import mpmath

from fractions import Fraction
from sympy import factorint
from sympy import integer_nthroot

from .common import Branch
from .common import BRANCHES
from .common import DomainError
from .common import FieldError
from .common import ParameterError
from .common import PoleError

try:
    # Python v3.5+
    from math import gcd

except ImportError:
    # Python v2.7
    from fractions import gcd

# Extra bits carried by every numeric operation on top of the requested
# precision
GUARD_BITS = 32

# The smallest precision embed_complex() accepts
MIN_PRECISION_BITS = 64

# Scalar serialization:  p, p/q, r/s*sqrt(D), p/q+r/s*sqrt(D)
SCALAR_RE = re.compile(
    r'^\s*(?P<x>[+-]?\s*\d+(\s*/\s*\d+)?)?'
    r'(\s*(?P<sign>[+-])?\s*((?P<y>\d+(\s*/\s*\d+)?)\s*\*\s*)?'
    r'sqrt\(\s*(?P<d>[+-]?\d+)\s*\))?\s*$', re.I)

# A bare multiple of sqrt(D)
ROOT_RE = re.compile(
    r'^\s*(?P<sign>[+-])?\s*((?P<y>\d+(\s*/\s*\d+)?)\s*\*\s*)?'
    r'sqrt\(\s*(?P<d>[+-]?\d+)\s*\)\s*$', re.I)


def is_exact(value):
    """
    Returns True if the value is an exact scalar (integer, rational or
    quadratic field element).

    """
    return isinstance(value, six.integer_types + (Fraction, QuadExt))


def is_zero(value):
    return value == 0


def to_fraction(value):
    """
    Converts integers and fraction strings to a Fraction; anything else is
    rejected since floats would silently lose exactness.

    """
    if isinstance(value, Fraction):
        return value

    if isinstance(value, bool):
        raise ParameterError('A boolean is not a rational number.')

    if isinstance(value, six.integer_types):
        return Fraction(value)

    if isinstance(value, six.string_types):
        try:
            return Fraction(value.replace(' ', ''))

        except (ValueError, ZeroDivisionError):
            raise ParameterError(
                'Invalid rational number specified: {}'.format(value))

    raise ParameterError(
        'Can not use {} as an exact rational number.'.format(repr(value)))


def _is_squarefree(d):
    if d in (0, 1):
        return False

    return all(e == 1 for e in factorint(abs(d)).values())


class QuadExt(object):
    """
    The element x + y*sqrt(d) of the quadratic field Q(sqrt(d)).

    Elements with y = 0 are plain rationals and combine with any field;
    two irrational elements must share d.
    """

    __slots__ = ('_x', '_y', '_d')

    def __init__(self, x, y=0, d=-1):
        d = int(d)
        if not _is_squarefree(d):
            raise ParameterError(
                'sqrt({}) does not generate a quadratic field.'.format(d))

        self._x = to_fraction(x)
        self._y = to_fraction(y)
        self._d = d

    @classmethod
    def sqrt_of(cls, d):
        """
        Returns sqrt(d) as a field element.

        """
        return cls(0, 1, d)

    @property
    def x(self):
        return self._x

    @property
    def y(self):
        return self._y

    @property
    def d(self):
        return self._d

    def is_rational(self):
        return self._y == 0

    def _coerce(self, other):
        if isinstance(other, QuadExt):
            if other._d == self._d or other._y == 0:
                return other._x, other._y, self._d

            if self._y == 0:
                return other._x, other._y, other._d

            raise FieldError(
                'Can not combine elements of Q(sqrt({})) and '
                'Q(sqrt({})).'.format(self._d, other._d))

        if isinstance(other, six.integer_types + (Fraction, )):
            return Fraction(other), Fraction(0), self._d

        return None

    def __add__(self, other):
        coerced = self._coerce(other)
        if coerced is None:
            return NotImplemented

        x, y, d = coerced
        return QuadExt(self._x + x, self._y + y, d)

    __radd__ = __add__

    def __neg__(self):
        return QuadExt(-self._x, -self._y, self._d)

    def __pos__(self):
        return self

    def __sub__(self, other):
        coerced = self._coerce(other)
        if coerced is None:
            return NotImplemented

        x, y, d = coerced
        return QuadExt(self._x - x, self._y - y, d)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        coerced = self._coerce(other)
        if coerced is None:
            return NotImplemented

        x, y, d = coerced
        return QuadExt(
            self._x * x + d * self._y * y, self._x * y + self._y * x, d)

    __rmul__ = __mul__

    def conjugate(self):
        return QuadExt(self._x, -self._y, self._d)

    def norm(self):
        return self._x * self._x - self._d * self._y * self._y

    def trace(self):
        return 2 * self._x

    def inverse(self):
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError('Division by zero in Q(sqrt({})).'.format(
                self._d))

        return QuadExt(self._x / n, -self._y / n, self._d)

    def __truediv__(self, other):
        if isinstance(other, QuadExt):
            # mixed fields are caught by the multiplication
            return self * other.inverse()

        if isinstance(other, six.integer_types + (Fraction, )):
            if other == 0:
                raise ZeroDivisionError(
                    'Division by zero in Q(sqrt({})).'.format(self._d))
            return QuadExt(self._x / other, self._y / other, self._d)

        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, six.integer_types + (Fraction, )):
            return self.inverse() * other

        return NotImplemented

    # Python v2.7
    __div__ = __truediv__
    __rdiv__ = __rtruediv__

    def __pow__(self, n):
        if not isinstance(n, six.integer_types):
            if isinstance(n, Fraction) and n.denominator == 1:
                n = n.numerator

            else:
                return NotImplemented

        base = self if n >= 0 else self.inverse()
        result = QuadExt(1, 0, self._d)
        n = abs(n)
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1

        return result

    def __eq__(self, other):
        if isinstance(other, QuadExt):
            if self._y == 0 and other._y == 0:
                return self._x == other._x

            return (self._x, self._y, self._d) == \
                (other._x, other._y, other._d)

        if isinstance(other, six.integer_types + (Fraction, )):
            return self._y == 0 and self._x == other

        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        if self._y == 0:
            return hash(self._x)

        return hash((self._x, self._y, self._d))

    def __bool__(self):
        return bool(self._x) or bool(self._y)

    # Python v2.7
    __nonzero__ = __bool__

    def sort_key(self):
        return (self._x, self._y)

    def __repr__(self):
        return 'QuadExt({})'.format(format_scalar(self))

    def __str__(self):
        return format_scalar(self)


class ComplexApprox(object):
    """
    A complex floating point value tied to a working precision in bits.

    Every operation runs with GUARD_BITS extra bits; combining two values of
    different precision is refused.
    """

    __slots__ = ('_value', '_prec')

    def __init__(self, value, prec):
        if prec < 1:
            raise ParameterError('A precision must be a positive integer.')

        self._prec = int(prec)
        with mpmath.workprec(self._prec + GUARD_BITS):
            if isinstance(value, Fraction):
                value = mpmath.mpf(value.numerator) / value.denominator

            self._value = mpmath.mpc(value)

    @property
    def value(self):
        return self._value

    @property
    def prec(self):
        return self._prec

    @property
    def real(self):
        return self._value.real

    @property
    def imag(self):
        return self._value.imag

    def _coerce(self, other):
        if isinstance(other, ComplexApprox):
            if other._prec != self._prec:
                raise FieldError(
                    'Refusing to mix a {}-bit value with a {}-bit '
                    'value.'.format(self._prec, other._prec))
            return other._value

        if isinstance(other, QuadExt):
            if not other.is_rational():
                raise FieldError(
                    'An element of Q(sqrt({})) needs an explicit embedding '
                    'before it can meet a numeric value.'.format(other.d))
            other = other.x

        if isinstance(other, Fraction):
            with mpmath.workprec(self._prec + GUARD_BITS):
                return mpmath.mpf(other.numerator) / other.denominator

        if isinstance(other, six.integer_types):
            return other

        return None

    def _wrap(self, fn, other):
        coerced = self._coerce(other)
        if coerced is None:
            return NotImplemented

        with mpmath.workprec(self._prec + GUARD_BITS):
            return ComplexApprox(fn(self._value, coerced), self._prec)

    def __add__(self, other):
        return self._wrap(lambda a, b: a + b, other)

    __radd__ = __add__

    def __sub__(self, other):
        return self._wrap(lambda a, b: a - b, other)

    def __rsub__(self, other):
        return self._wrap(lambda a, b: b - a, other)

    def __mul__(self, other):
        return self._wrap(lambda a, b: a * b, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self._wrap(lambda a, b: a / b, other)

    def __rtruediv__(self, other):
        return self._wrap(lambda a, b: b / a, other)

    # Python v2.7
    __div__ = __truediv__
    __rdiv__ = __rtruediv__

    def __neg__(self):
        return ComplexApprox(-self._value, self._prec)

    def __pow__(self, exponent):
        """
        Principal branch power; rational exponents are exact going in.

        """
        if isinstance(exponent, QuadExt) and exponent.is_rational():
            exponent = exponent.x

        with mpmath.workprec(self._prec + GUARD_BITS):
            if isinstance(exponent, Fraction):
                if exponent.denominator == 1:
                    return ComplexApprox(
                        self._value ** exponent.numerator, self._prec)

                exponent = mpmath.mpf(exponent.numerator) / \
                    exponent.denominator

            elif isinstance(exponent, ComplexApprox):
                exponent = exponent.value

            return ComplexApprox(
                mpmath.power(self._value, exponent), self._prec)

    def __abs__(self):
        with mpmath.workprec(self._prec + GUARD_BITS):
            return abs(self._value)

    def __eq__(self, other):
        if isinstance(other, ComplexApprox):
            return self._prec == other._prec and self._value == other._value

        if isinstance(other, six.integer_types + (Fraction, )):
            return self._value == self._coerce(other)

        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self._value, self._prec))

    def __bool__(self):
        return self._value != 0

    # Python v2.7
    __nonzero__ = __bool__

    def __repr__(self):
        return 'ComplexApprox({}, prec={})'.format(
            mpmath.nstr(self._value, 20), self._prec)

    def __str__(self):
        return format_scalar(self)


def parse_scalar(value):
    """
    Parses the scalar serialization ("p", "p/q", "p/q+r/s*sqrt(D)") and
    returns a Fraction or a QuadExt.  Integers pass straight through.

    """
    if isinstance(value, (Fraction, QuadExt)):
        return value

    if isinstance(value, bool) or not isinstance(
            value, six.string_types + six.integer_types):
        raise ParameterError(
            'Can not interpret {} as an exact scalar.'.format(repr(value)))

    if isinstance(value, six.integer_types):
        return Fraction(value)

    match = ROOT_RE.match(value)
    if match:
        y = to_fraction(match.group('y')) if match.group('y') else \
            Fraction(1)
        return QuadExt(
            0, -y if match.group('sign') == '-' else y,
            int(match.group('d')))

    match = SCALAR_RE.match(value)
    if not match or not (match.group('x') or match.group('d')):
        raise ParameterError(
            'Invalid scalar specified: {}'.format(value))

    x = to_fraction(match.group('x')) if match.group('x') else Fraction(0)
    if not match.group('d'):
        return x

    y = to_fraction(match.group('y')) if match.group('y') else Fraction(1)
    if match.group('sign') == '-':
        y = -y

    elif match.group('sign') is None and match.group('x'):
        # 1sqrt(-3) is not something we accept
        raise ParameterError(
            'Invalid scalar specified: {}'.format(value))

    return QuadExt(x, y, int(match.group('d')))


def _format_fraction(value):
    if value.denominator == 1:
        return str(value.numerator)

    return '{}/{}'.format(value.numerator, value.denominator)


def format_scalar(value, digits=20):
    """
    The inverse of parse_scalar(); numeric values are written with the
    requested number of significant digits.

    """
    if isinstance(value, ComplexApprox):
        return mpmath.nstr(value.value, digits)

    if isinstance(value, six.integer_types):
        return str(value)

    if isinstance(value, Fraction):
        return _format_fraction(value)

    if value.y == 0:
        return _format_fraction(value.x)

    y = abs(value.y)
    root = 'sqrt({})'.format(value.d) if y == 1 else \
        '{}*sqrt({})'.format(_format_fraction(y), value.d)

    if value.x == 0:
        return root if value.y > 0 else '-' + root

    return '{}{}{}'.format(
        _format_fraction(value.x), '+' if value.y > 0 else '-', root)


def quad_arith(x, y, op):
    """
    Field arithmetic on two quadratic field elements (or rationals);
    op is one of 'add', 'mul' or 'div'.

    """
    if not isinstance(x, QuadExt):
        x = QuadExt(to_fraction(x), 0, y.d if isinstance(y, QuadExt) else -1)

    if op == 'add':
        return x + y

    elif op == 'mul':
        return x * y

    elif op == 'div':
        return x / y

    raise ParameterError('Unsupported field operation: {}'.format(op))


def embed_complex(x, branch=Branch.PRINCIPAL, prec=MIN_PRECISION_BITS):
    """
    Sends an exact scalar to the complex numbers.  sqrt(d) becomes the
    principal square root for the principal branch and its negative for
    the conjugate branch.

    """
    if prec < MIN_PRECISION_BITS:
        raise ParameterError(
            'A precision of at least {} bits is required.'.format(
                MIN_PRECISION_BITS))

    if branch not in BRANCHES:
        raise ParameterError('Unsupported branch: {}'.format(branch))

    if isinstance(x, ComplexApprox):
        if x.prec != prec:
            raise FieldError('Refusing to re-embed a {}-bit value at {} '
                             'bits.'.format(x.prec, prec))
        return x

    if not isinstance(x, QuadExt):
        return ComplexApprox(to_fraction(x), prec)

    with mpmath.workprec(prec + GUARD_BITS):
        root = mpmath.sqrt(mpmath.mpc(x.d))
        if branch == Branch.CONJUGATE:
            root = -root

        value = mpmath.mpf(x.x.numerator) / x.x.denominator + \
            (mpmath.mpf(x.y.numerator) / x.y.denominator) * root

        return ComplexApprox(value, prec)


def embed_scalar(x, prec, branches=None):
    """
    Like embed_complex() but the branch is looked up per field from the
    branches dictionary (d -> branch); used to sweep the sign choices of
    several independent square roots.

    """
    branch = Branch.PRINCIPAL
    if isinstance(x, QuadExt) and branches:
        branch = branches.get(x.d, Branch.PRINCIPAL)

    return embed_complex(x, branch=branch, prec=prec)


class Poly(object):
    """
    A dense univariate polynomial; coefficients[k] multiplies z^k.
    """

    __slots__ = ('_coeffs', )

    def __init__(self, coefficients=()):
        coeffs = list(coefficients)
        while coeffs and is_zero(coeffs[-1]):
            coeffs.pop()

        self._coeffs = tuple(
            Fraction(c) if isinstance(c, six.integer_types) else c
            for c in coeffs)

    @classmethod
    def monomial(cls, degree, coefficient=1):
        return cls([0] * degree + [coefficient])

    @classmethod
    def parse(cls, values):
        return cls([parse_scalar(v) for v in values])

    @property
    def coefficients(self):
        return self._coeffs

    @property
    def degree(self):
        return len(self._coeffs) - 1

    def is_zero(self):
        return not self._coeffs

    def leading(self):
        return self._coeffs[-1] if self._coeffs else Fraction(0)

    def __getitem__(self, k):
        return self._coeffs[k] if 0 <= k < len(self._coeffs) else Fraction(0)

    def __len__(self):
        return len(self._coeffs)

    def __call__(self, x):
        result = Fraction(0)
        for c in reversed(self._coeffs):
            result = result * x + c

        return result

    def _as_poly(self, other):
        return other if isinstance(other, Poly) else Poly([other])

    def __add__(self, other):
        other = self._as_poly(other)
        n = max(len(self._coeffs), len(other._coeffs))
        return Poly([self[k] + other[k] for k in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self._coeffs])

    def __sub__(self, other):
        return self + (-self._as_poly(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return Poly([c * other for c in self._coeffs])

        if self.is_zero() or other.is_zero():
            return Poly()

        out = [Fraction(0)] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if is_zero(a):
                continue
            for j, b in enumerate(other._coeffs):
                out[i + j] = out[i + j] + a * b

        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ParameterError('Polynomials only take nonnegative powers.')

        result = Poly([1])
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1

        return result

    def __divmod__(self, other):
        other = self._as_poly(other)
        if other.is_zero():
            raise ZeroDivisionError('Polynomial division by zero.')

        rem = list(self._coeffs)
        quot = [Fraction(0)] * max(0, len(rem) - len(other._coeffs) + 1)
        lead = other.leading()
        for k in range(len(quot) - 1, -1, -1):
            factor = rem[k + other.degree] / lead
            quot[k] = factor
            if is_zero(factor):
                continue
            for j, c in enumerate(other._coeffs):
                rem[k + j] = rem[k + j] - factor * c

        return Poly(quot), Poly(rem[:other.degree] if other.degree else [])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self):
        if self.is_zero():
            return self
        return self * _scalar_inverse(self.leading())

    def gcd(self, other):
        """
        Monic greatest common divisor over an exact field.

        """
        a, b = self, self._as_poly(other)
        while not b.is_zero():
            a, b = b, a % b

        return a.monic()

    def derivative(self):
        return Poly([k * c for k, c in enumerate(self._coeffs)][1:])

    def compose(self, inner):
        """
        Returns self(inner(z)).

        """
        result = Poly()
        for c in reversed(self._coeffs):
            result = result * inner + c

        return result

    def map(self, fn):
        return Poly([fn(c) for c in self._coeffs])

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self._coeffs == other._coeffs

        if isinstance(other, six.integer_types + (Fraction, QuadExt)):
            return self == Poly([other])

        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash(self._coeffs)

    def to_list(self):
        return [format_scalar(c) for c in self._coeffs]

    def __repr__(self):
        return 'Poly({})'.format(self.to_list())


def _scalar_inverse(value):
    if isinstance(value, QuadExt):
        return value.inverse()

    if isinstance(value, ComplexApprox):
        return 1 / value

    return Fraction(1) / value


class RationalFunction(object):
    """
    num/den with den nonzero.  Exact functions are reduced to lowest terms
    and scaled so that den(0) = 1 (or den is monic when den(0) = 0).
    """

    __slots__ = ('_num', '_den')

    def __init__(self, num, den=None):
        num = num if isinstance(num, Poly) else Poly(num)
        den = Poly([1]) if den is None else (
            den if isinstance(den, Poly) else Poly(den))

        if den.is_zero():
            raise ZeroDivisionError('A rational function needs a nonzero '
                                    'denominator.')

        if num.is_zero():
            num, den = Poly(), Poly([1])

        elif all(is_exact(c) for c in num.coefficients + den.coefficients):
            g = num.gcd(den)
            if g.degree > 0:
                num, den = num // g, den // g

        scale = den[0] if not is_zero(den[0]) else den.leading()
        if scale != 1:
            inv = _scalar_inverse(scale)
            num, den = num * inv, den * inv

        self._num = num
        self._den = den

    @classmethod
    def parse(cls, num, den=None):
        return cls(Poly.parse(num), Poly.parse(den) if den else None)

    @classmethod
    def identity(cls):
        return cls(Poly([0, 1]))

    @property
    def num(self):
        return self._num

    @property
    def den(self):
        return self._den

    @property
    def degree(self):
        """
        The degree as a map of the projective line.

        """
        return max(self._num.degree, self._den.degree)

    def is_zero(self):
        return self._num.is_zero()

    def is_constant(self):
        return self._num.degree <= 0 and self._den.degree <= 0

    def __call__(self, x):
        d = self._den(x)
        if is_zero(d):
            raise PoleError('The rational function has a pole at {}.'.format(
                format_scalar(x) if not isinstance(x, ComplexApprox) else x))

        return self._num(x) / d

    def _as_rf(self, other):
        if isinstance(other, RationalFunction):
            return other

        if isinstance(other, Poly):
            return RationalFunction(other)

        return RationalFunction(Poly([other]))

    def __add__(self, other):
        other = self._as_rf(other)
        return RationalFunction(
            self._num * other._den + other._num * self._den,
            self._den * other._den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self._num, self._den)

    def __sub__(self, other):
        return self + (-self._as_rf(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._as_rf(other)
        return RationalFunction(
            self._num * other._num, self._den * other._den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._as_rf(other)
        if other.is_zero():
            raise ZeroDivisionError('Division by the zero function.')

        return RationalFunction(
            self._num * other._den, self._den * other._num)

    def __rtruediv__(self, other):
        return self._as_rf(other) / self

    # Python v2.7
    __div__ = __truediv__
    __rdiv__ = __rtruediv__

    def __pow__(self, n):
        if n >= 0:
            return RationalFunction(self._num ** n, self._den ** n)

        return RationalFunction(self._den ** -n, self._num ** -n)

    def derivative(self):
        return RationalFunction(
            self._num.derivative() * self._den -
            self._num * self._den.derivative(),
            self._den * self._den)

    def compose(self, inner):
        """
        Returns self(inner(z)) where inner is a rational function.

        """
        inner = self._as_rf(inner)
        m = self.degree
        num, den = Poly(), Poly()
        for k in range(m + 1):
            term = (inner._num ** k) * (inner._den ** (m - k))
            num = num + term * self._num[k]
            den = den + term * self._den[k]

        return RationalFunction(num, den)

    def __eq__(self, other):
        if isinstance(other, (RationalFunction, Poly)) or \
                isinstance(other, six.integer_types + (Fraction, QuadExt)):
            other = self._as_rf(other)
            return (self._num * other._den - other._num * self._den).is_zero()

        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self._num, self._den))

    def to_dict(self):
        return {'num': self._num.to_list(), 'den': self._den.to_list()}

    def __repr__(self):
        return 'RationalFunction({}, {})'.format(
            self._num.to_list(), self._den.to_list())


def _lattice_gcd(*values):
    result = Fraction(0)
    for value in values:
        value = abs(Fraction(value))
        if not value:
            continue
        result = Fraction(
            gcd(result.numerator * value.denominator,
                value.numerator * result.denominator),
            result.denominator * value.denominator)

    return result


def _slots(order, offset, step):
    """
    The number of lattice points offset + k*step lying below order.

    """
    if order <= offset:
        return 0

    return int(math.ceil((order - offset) / step))


def _exact_power(c, r):
    """
    c**r for a leading coefficient, exact where possible.

    """
    if isinstance(c, ComplexApprox):
        return c ** r

    if r.denominator == 1:
        return c ** r.numerator

    if c == 1:
        return Fraction(1)

    if isinstance(c, QuadExt) and c.is_rational():
        c = c.x

    if isinstance(c, Fraction) and c > 0:
        num, num_exact = integer_nthroot(c.numerator, r.denominator)
        den, den_exact = integer_nthroot(c.denominator, r.denominator)
        if num_exact and den_exact:
            return Fraction(num, den) ** r.numerator

    raise DomainError(
        'The leading coefficient {} has no exact {} power; normalize the '
        'base first.'.format(format_scalar(c), _format_fraction(r)))


def _collect_radicals(c, r, radicals):
    """
    Adds the prime exponents of c**r for a positive rational c to radicals
    (prime -> exponent).

    """
    if isinstance(c, QuadExt) and c.is_rational():
        c = c.x

    if not isinstance(c, Fraction) or c <= 0:
        raise DomainError(
            'The leading coefficient {} has no exact {} power; only '
            'positive rationals can be carried as radicals.'.format(
                format_scalar(c), _format_fraction(r)))

    for n, sign in ((c.numerator, 1), (c.denominator, -1)):
        for p, e in factorint(n).items():
            total = radicals.get(p, Fraction(0)) + sign * e * r
            if total:
                radicals[p] = total

            else:
                radicals.pop(p, None)


def settle_radicals(series, radicals):
    """
    Moves the integer part of every radical exponent into the series and
    returns the series with the fractional exponents left over.

    """
    rest = {}
    for p, e in sorted(radicals.items()):
        whole = e.numerator // e.denominator
        if whole:
            series = series * (Fraction(p) ** whole)

        if e != whole:
            rest[p] = e - whole

    return series, rest


def format_radicals(radicals):
    return '*'.join(
        '{}^({})'.format(p, _format_fraction(e))
        for p, e in sorted(radicals.items()))


class FracSeries(object):
    """
    A truncated series  sum_k coeffs[k] * z^(offset + k*step)  known exactly
    for every exponent below order.

    The offset is chosen so that coeffs[0] is nonzero; the zero series has
    offset 0.
    """

    __slots__ = ('_offset', '_coeffs', '_step', '_order')

    def __init__(self, coeffs, offset=0, step=1, order=None):
        offset = Fraction(offset)
        step = Fraction(step)
        if step <= 0:
            raise ParameterError('A series step must be positive.')

        coeffs = [
            Fraction(c) if isinstance(c, six.integer_types) else c
            for c in coeffs]
        order = offset + len(coeffs) * step if order is None \
            else Fraction(order)

        lead = 0
        while lead < len(coeffs) and is_zero(coeffs[lead]):
            lead += 1

        offset += lead * step
        coeffs = coeffs[lead:_slots(order, offset, step) + lead]
        coeffs = coeffs[:_slots(order, offset, step)]

        if not coeffs:
            # Canonical zero
            offset, step, coeffs = Fraction(0), Fraction(1), []

        else:
            coeffs.extend(
                [Fraction(0)] * (_slots(order, offset, step) - len(coeffs)))

        self._offset = offset
        self._step = step
        self._coeffs = tuple(coeffs)
        self._order = order

    @classmethod
    def zero(cls, order):
        return cls([], order=order)

    @classmethod
    def constant(cls, value, order):
        return cls([value], order=order)

    @classmethod
    def monomial(cls, exponent, coefficient, order):
        return cls([coefficient], offset=exponent, order=order)

    @classmethod
    def from_poly(cls, poly, order):
        return cls(list(poly.coefficients), order=order)

    @property
    def offset(self):
        return self._offset

    @property
    def step(self):
        return self._step

    @property
    def order(self):
        return self._order

    @property
    def coeffs(self):
        return self._coeffs

    def is_zero(self):
        return not self._coeffs

    @property
    def valuation(self):
        """
        The leading exponent, or the truncation order for the zero series.

        """
        return self._order if self.is_zero() else self._offset

    def leading_coefficient(self):
        return self._coeffs[0] if self._coeffs else Fraction(0)

    def coefficient(self, exponent):
        exponent = Fraction(exponent)
        if exponent >= self._order:
            raise ParameterError(
                'Exponent {} lies beyond the truncation order {}.'.format(
                    exponent, self._order))

        k = (exponent - self._offset) / self._step
        if k.denominator != 1 or k < 0 or k >= len(self._coeffs):
            return Fraction(0)

        return self._coeffs[int(k)]

    def terms(self):
        """
        Returns the (exponent, coefficient) pairs with nonzero coefficient.

        """
        return [(self._offset + k * self._step, c)
                for k, c in enumerate(self._coeffs) if not is_zero(c)]

    def _on_lattice(self, offset, step):
        ratio = self._step / step
        shift = (self._offset - offset) / step
        if ratio.denominator != 1 or shift.denominator != 1 or shift < 0:
            raise ParameterError('Incompatible exponent lattice.')

        ratio, shift = int(ratio), int(shift)
        n = _slots(self._order, offset, step)
        out = [Fraction(0)] * n
        for k, c in enumerate(self._coeffs):
            if shift + k * ratio < n:
                out[shift + k * ratio] = c

        return out

    def truncate(self, order):
        return FracSeries(
            self._coeffs, self._offset, self._step,
            min(self._order, Fraction(order)))

    def __add__(self, other):
        if not isinstance(other, FracSeries):
            other = FracSeries.constant(other, self._order)

        order = min(self._order, other._order)
        if self.is_zero():
            return other.truncate(order)

        if other.is_zero():
            return self.truncate(order)

        offset = min(self._offset, other._offset)
        step = _lattice_gcd(
            self._step, other._step, self._offset - other._offset)

        a = self._on_lattice(offset, step)
        b = other._on_lattice(offset, step)
        n = _slots(order, offset, step)
        return FracSeries(
            [a[k] + b[k] for k in range(n)], offset, step, order)

    __radd__ = __add__

    def __neg__(self):
        return FracSeries(
            [-c for c in self._coeffs], self._offset, self._step, self._order)

    def __sub__(self, other):
        if not isinstance(other, FracSeries):
            other = FracSeries.constant(other, self._order)

        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, FracSeries):
            return series_mul(self, other)

        return FracSeries(
            [c * other for c in self._coeffs],
            self._offset, self._step, self._order)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        return series_pow(self, exponent)

    def shift(self, exponent):
        """
        Multiplies by z^exponent.

        """
        exponent = Fraction(exponent)
        return FracSeries(
            self._coeffs, self._offset + exponent, self._step,
            self._order + exponent)

    def theta(self):
        """
        Applies z d/dz.

        """
        return FracSeries(
            [(self._offset + k * self._step) * c
             for k, c in enumerate(self._coeffs)],
            self._offset, self._step, self._order)

    def derivative(self):
        return self.theta().shift(-1)

    def substitute(self, inner):
        """
        Returns self(inner(z)) for an integral series self (offset 0 and
        step 1) and an inner series vanishing at 0.

        """
        if self.is_zero():
            return FracSeries.zero(self._order * inner.valuation)

        if self._offset.denominator != 1 or self._step != 1:
            raise ParameterError(
                'Only integral power series can be substituted into.')

        if inner.valuation <= 0:
            raise DomainError(
                'The inner series must vanish at 0 to be substituted.')

        order = min(inner.order, self._order * inner.valuation)
        lead = int(self._offset)
        result = FracSeries.zero(order)
        for c in reversed(self._coeffs):
            result = result * inner + FracSeries.constant(c, order)

        if lead:
            result = result * series_pow(inner, Fraction(lead), order)

        return result.truncate(order)

    def map(self, fn):
        """
        Applies fn to every coefficient (used to embed exact coefficients
        into a numeric field).

        """
        return FracSeries(
            [fn(c) for c in self._coeffs],
            self._offset, self._step, self._order)

    def first_difference(self, other):
        """
        Returns (exponent, ours, theirs) for the lowest exponent where the
        two series differ below their common order, or None.

        """
        order = min(self._order, other._order)
        diff = self.truncate(order) - other.truncate(order)
        if diff.is_zero():
            return None

        exponent = diff.offset
        return exponent, self.coefficient(exponent), \
            other.coefficient(exponent)

    def __eq__(self, other):
        if isinstance(other, FracSeries):
            return self.first_difference(other) is None

        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    __hash__ = None

    def __repr__(self):
        terms = ' + '.join(
            '({})*z^{}'.format(format_scalar(c), _format_fraction(e))
            for e, c in self.terms()[:6])
        return 'FracSeries({}{}O(z^{}))'.format(
            terms, ' + ' if terms else '', _format_fraction(self._order))


def series_mul(a, b):
    """
    The product of two series, truncated at the order both factors allow.

    """
    order = min(a.order + b.valuation, b.order + a.valuation)
    if a.is_zero() or b.is_zero():
        return FracSeries.zero(order)

    step = _lattice_gcd(a.step, b.step)
    x = a._on_lattice(a.offset, step)
    y = b._on_lattice(b.offset, step)
    offset = a.offset + b.offset

    n = _slots(order, offset, step)
    out = [Fraction(0)] * n
    for i, ai in enumerate(x[:n]):
        if is_zero(ai):
            continue

        for j in range(min(len(y), n - i)):
            if not is_zero(y[j]):
                out[i + j] = out[i + j] + ai * y[j]

    return FracSeries(out, offset, step, order)


def series_pow(a, r, order=None, radicals=None):
    """
    a**r for any rational r:  the offset is scaled by r and the unit part
    is raised by the power recurrence
      w[n] = 1/n * sum_{k=1..n} ((r+1)k - n) u[k] w[n-k]
    with u the unit part normalized to u[0] = 1.

    When c0**r is not exact the call fails, unless a radicals dict is given:
    then c0**r is recorded there as prime powers and the series comes back
    scaled by 1/c0**r.

    """
    r = to_fraction(r) if not isinstance(r, Fraction) else r
    if a.is_zero():
        if r <= 0:
            raise DomainError(
                'The zero series can not be raised to the power {}.'.format(
                    _format_fraction(r)))

        return FracSeries.zero(
            a.order * r if order is None else min(a.order * r, order))

    if r == 0:
        target = Fraction(order) if order is not None else a.order - a.offset
        return FracSeries.constant(1, target)

    c0 = a.leading_coefficient()
    inv = _scalar_inverse(c0)
    unit = [c * inv for c in a.coeffs]

    offset = a.offset * r
    target = offset + (a.order - a.offset)
    if order is not None:
        target = min(target, Fraction(order))

    n = _slots(target, offset, a.step)
    w = [Fraction(1)] + [Fraction(0)] * max(0, n - 1)
    for m in range(1, n):
        acc = Fraction(0)
        for k in range(1, min(m, len(unit) - 1) + 1):
            if not is_zero(unit[k]):
                acc = acc + ((r + 1) * k - m) * unit[k] * w[m - k]

        w[m] = acc / m

    try:
        lead = _exact_power(c0, r)

    except DomainError:
        if radicals is None:
            raise

        # the caller carries c0**r as prime powers
        _collect_radicals(c0, r, radicals)
        lead = Fraction(1)

    return FracSeries([lead * c for c in w[:n]], offset, a.step, target)


def series_compose_rational(s, order):
    """
    The Taylor expansion of a rational function about 0 to the given order.

    """
    den0 = s.den[0]
    if is_zero(den0):
        raise PoleError(
            'The rational function has a pole at the origin and can not be '
            'expanded there.')

    n = int(order)
    inv = _scalar_inverse(den0)

    # 1/den by the usual recurrence
    q = [inv] + [Fraction(0)] * max(0, n - 1)
    for m in range(1, n):
        acc = Fraction(0)
        for k in range(1, min(m, s.den.degree) + 1):
            acc = acc + s.den[k] * q[m - k]

        q[m] = -acc * inv

    out = [Fraction(0)] * n
    for i, c in enumerate(s.num.coefficients[:n]):
        if is_zero(c):
            continue

        for j in range(n - i):
            out[i + j] = out[i + j] + c * q[j]

    return FracSeries(out, order=n)
