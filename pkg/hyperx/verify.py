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
Declarative transformation identities

    prod base_i(z)^e_i * 2F1(a, b; c; S(z))  =  (the same shape)

and the three ways we certify them: exact comparison of the expansions at
z = 0, high precision sampling at a few points near 0, and checking that
both sides are annihilated by a given second order operator with the same
leading data.

"""
import copy
import itertools
import threading

import mpmath
import six
from fractions import Fraction

from .algebra import ComplexApprox
from .algebra import FracSeries
from .algebra import GUARD_BITS
from .algebra import Poly
from .algebra import QuadExt
from .algebra import RationalFunction
from .algebra import embed_scalar
from .algebra import format_radicals
from .algebra import format_scalar
from .algebra import is_zero
from .algebra import parse_scalar
from .algebra import series_compose_rational
from .algebra import series_pow
from .algebra import settle_radicals
from .algebra import to_fraction
from .common import Branch
from .common import BRANCHES
from .common import CHECK_MODES
from .common import CheckMode
from .common import DomainError
from .common import FieldType
from .common import FIELD_TYPES
from .common import ParameterError
from .common import SpecError
from .hypergeom import HGParams
from .hypergeom import hg_eval
from .hypergeom import hg_series
from .logger import logger

# The segment from 0 to a sample point is walked in at least this many steps
# while continuing the prefactor powers
SEGMENT_STEPS = 64

# Refinement of the walk stops here
MAX_SEGMENT_STEPS = 1 << 14

# mpmath keeps its working precision in a process wide context
NUMERIC_LOCK = threading.RLock()


def _parse_poly(value, path):
    """
    Reads a polynomial given either as a coefficient list (constant term
    first) or in factored form
        {"scale": s, "factors": [{"base": [...], "power": n}, ...]}

    """
    try:
        if isinstance(value, dict):
            result = Poly([parse_scalar(value.get('scale', 1))])
            for factor in value.get('factors', []):
                power = int(factor.get('power', 1))
                if power < 0:
                    raise ParameterError('negative power')

                result = result * Poly(
                    [parse_scalar(c) for c in factor['base']]) ** power

            return result

        if isinstance(value, (list, tuple)):
            return Poly([parse_scalar(c) for c in value])

    except (KeyError, TypeError, ParameterError) as e:
        raise SpecError('Invalid polynomial at {}: {}'.format(path, e))

    raise SpecError('Invalid polynomial at {}.'.format(path))


def _dump_poly(poly):
    return [format_scalar(c) for c in poly.coefficients] or ['0']


class FieldSpec(object):
    """
    The field the constants of an identity live in.  A multiquadratic
    declaration lists several d; only numeric checks accept it.
    """

    def __init__(self, kind=FieldType.RATIONAL, ds=()):
        if kind not in FIELD_TYPES:
            raise SpecError('Unsupported field type: {}'.format(kind))

        self.kind = kind
        self.ds = tuple(int(d) for d in ds)

        if kind == FieldType.QUADRATIC and len(self.ds) != 1:
            raise SpecError('A quadratic field needs exactly one d.')

        if kind == FieldType.MULTIQUADRATIC and len(self.ds) < 2:
            raise SpecError('A multiquadratic field needs at least two d.')

    @classmethod
    def from_dict(cls, content):
        content = content or {'type': FieldType.RATIONAL}
        kind = content.get('type', FieldType.RATIONAL)
        d = content.get('d', [])
        if not isinstance(d, (list, tuple)):
            d = [d]

        try:
            return cls(kind, d)

        except (TypeError, ValueError) as e:
            raise SpecError('Invalid field declaration: {}'.format(e))

    def to_dict(self):
        if self.kind == FieldType.RATIONAL:
            return {'type': self.kind}

        if self.kind == FieldType.QUADRATIC:
            return {'type': self.kind, 'd': self.ds[0]}

        return {'type': self.kind, 'd': list(self.ds)}

    def admits(self, value):
        if not isinstance(value, QuadExt) or value.is_rational():
            return True

        return value.d in self.ds

    def branch_assignments(self):
        """
        Every choice of sign for the square roots of the field.

        """
        return [dict(zip(self.ds, choice))
                for choice in itertools.product(BRANCHES, repeat=len(self.ds))]


class Prefactor(object):
    """
    base(z)^exponent on the principal branch at z = 0.
    """

    def __init__(self, base, exponent):
        self.base = base
        self.exponent = to_fraction(exponent) \
            if not isinstance(exponent, Fraction) else exponent

        if base.is_zero() or is_zero(base[0]):
            raise ParameterError(
                'A prefactor base must not vanish at 0 (got {}).'.format(
                    base))

    def to_dict(self):
        return {
            'base': _dump_poly(self.base),
            'exponent': format_scalar(self.exponent),
        }


class IdentitySide(object):
    """
    prod prefactors * 2F1(hg; argument)
    """

    def __init__(self, prefactors, hg, argument):
        self.prefactors = list(prefactors)
        self.hg = hg
        self.argument = argument

        if is_zero(argument.den[0]):
            raise ParameterError(
                'The argument has a pole at 0: {}'.format(argument))

        if not is_zero(argument.num[0]):
            raise ParameterError(
                'The argument must vanish at 0: {}'.format(argument))

    @classmethod
    def from_dict(cls, content, path):
        try:
            prefactors = []
            for no, entry in enumerate(content.get('prefactors', [])):
                where = '{}.prefactors.{}'.format(path, no)
                prefactors.append(Prefactor(
                    _parse_poly(entry['base'], where + '.base'),
                    parse_scalar(entry['exponent'])))

            arg = content.get('arg', {'num': [0, 1]})
            argument = RationalFunction(
                _parse_poly(arg['num'], path + '.arg.num'),
                _parse_poly(arg.get('den', [1]), path + '.arg.den'))

            return cls(prefactors, HGParams.from_dict(content['hg']),
                       argument)

        except KeyError as e:
            raise SpecError('{} is missing {}.'.format(path, e))

        except (TypeError, AttributeError, ZeroDivisionError) as e:
            raise SpecError('{} is malformed: {}'.format(path, e))

        except ParameterError as e:
            raise SpecError('{}: {}'.format(path, e))

    def scalars(self):
        for p in self.prefactors:
            for c in p.base.coefficients:
                yield c

        for c in self.argument.num.coefficients + \
                self.argument.den.coefficients:
            yield c

        for c in (self.hg.a, self.hg.b, self.hg.c):
            yield c

    def to_dict(self):
        return {
            'prefactors': [p.to_dict() for p in self.prefactors],
            'hg': self.hg.to_dict(),
            'arg': {
                'num': _dump_poly(self.argument.num),
                'den': _dump_poly(self.argument.den),
            },
        }


class CheckSpec(object):
    """
    How an identity asks to be certified.  Unset values fall back to the
    run's HyperxAsset.
    """

    def __init__(self, mode=CheckMode.SERIES, order=None, points=None,
                 precision_bits=None, tolerance=None, ode=None):

        if mode not in CHECK_MODES:
            raise SpecError('Unsupported check mode: {}'.format(mode))

        self.mode = mode
        self.order = int(order) if order is not None else None
        self.points = [parse_scalar(p) for p in points] \
            if points is not None else None
        self.precision_bits = int(precision_bits) \
            if precision_bits is not None else None
        self.tolerance = str(tolerance) if tolerance is not None else None
        self.ode = ode

        if mode == CheckMode.ODE and ode is None:
            raise SpecError('An ode check needs the operator coefficients.')

    @classmethod
    def from_dict(cls, content):
        content = content or {}
        ode = content.get('ode')
        if ode is not None:
            try:
                ode = tuple(
                    _parse_poly(ode[k], 'check.ode.' + k)
                    for k in ('c2', 'c1', 'c0'))

            except (KeyError, TypeError) as e:
                raise SpecError('check.ode is missing {}.'.format(e))

        try:
            return cls(
                mode=content.get('mode', CheckMode.SERIES),
                order=content.get('order'),
                points=content.get('points'),
                precision_bits=content.get('precision_bits'),
                tolerance=content.get('tolerance'),
                ode=ode,
            )

        except (ValueError, TypeError) as e:
            raise SpecError('The check block is malformed: {}'.format(e))

    def to_dict(self):
        content = {'mode': self.mode}
        if self.order is not None:
            content['order'] = self.order

        if self.points is not None:
            content['points'] = [format_scalar(p) for p in self.points]

        if self.precision_bits is not None:
            content['precision_bits'] = self.precision_bits

        if self.tolerance is not None:
            content['tolerance'] = self.tolerance

        if self.ode is not None:
            content['ode'] = {
                k: _dump_poly(p) for k, p in zip(('c2', 'c1', 'c0'), self.ode)}

        return content


class IdentitySpec(object):
    """
    A named identity lhs = rhs together with its field and check request.
    """

    def __init__(self, name, field, lhs, rhs, check=None):
        self.name = name
        self.field = field
        self.lhs = lhs
        self.rhs = rhs
        self.check = check if check is not None else CheckSpec()

        for value in itertools.chain(lhs.scalars(), rhs.scalars()):
            if not field.admits(value):
                raise SpecError(
                    '{}: {} does not belong to the declared field.'.format(
                        name, format_scalar(value)))

    @classmethod
    def from_dict(cls, content):
        if not isinstance(content, dict):
            raise SpecError('An identity document must be a mapping.')

        try:
            name = content['name']
            lhs = content['lhs']
            rhs = content['rhs']

        except KeyError as e:
            raise SpecError('The identity is missing {}.'.format(e))

        if not isinstance(name, six.string_types):
            raise SpecError('The identity name must be a string.')

        return cls(
            name,
            FieldSpec.from_dict(content.get('field')),
            IdentitySide.from_dict(lhs, 'lhs'),
            IdentitySide.from_dict(rhs, 'rhs'),
            CheckSpec.from_dict(content.get('check')),
        )

    def to_dict(self):
        return {
            'name': self.name,
            'field': self.field.to_dict(),
            'lhs': self.lhs.to_dict(),
            'rhs': self.rhs.to_dict(),
            'check': self.check.to_dict(),
        }

    def __repr__(self):
        return 'IdentitySpec({}, {})'.format(self.name, self.check.mode)


def make_report(spec, mode, passed, details):
    return {
        'name': spec.name,
        'pass': bool(passed),
        'mode': mode,
        'details': details,
    }


def expand_side(side, order, radicals=None):
    """
    The exact expansion of one side at z = 0 through z^(order - 1).

    A prefactor whose base(0) has no exact power fails the expansion unless
    a radicals dict is given to collect those powers (see series_pow()).

    """
    order = int(order)
    inner = series_compose_rational(side.argument, order)
    if inner.is_zero():
        result = FracSeries.constant(1, order)

    else:
        result = hg_series(side.hg, order).substitute(inner)

    for p in side.prefactors:
        result = result * series_pow(
            FracSeries.from_poly(p.base, order), p.exponent, order,
            radicals)

    return result.truncate(order)


def _expand_settled(side, order):
    radicals = {}
    series = expand_side(side, order, radicals)
    return settle_radicals(series, radicals)


def _leading(series, radicals):
    text = format_scalar(series.leading_coefficient())
    if radicals:
        text = '{}*{}'.format(text, format_radicals(radicals))

    return text


def verify_series(spec, order):
    """
    Compares both expansions exactly; a mismatch is reported with its
    exponent and the two coefficients.

    Powers of a positive rational base(0) that are not exact are carried
    as radicals; both sides must carry the same ones.

    """
    if spec.field.kind == FieldType.MULTIQUADRATIC:
        raise ParameterError(
            '{}: exact series checks need a single quadratic field.'.format(
                spec.name))

    lhs, lhs_radicals = _expand_settled(spec.lhs, order)
    rhs, rhs_radicals = _expand_settled(spec.rhs, order)

    details = {'order': int(order)}
    if lhs_radicals != rhs_radicals:
        # the leading terms differ by an irrational factor
        exponent = min(lhs.valuation, rhs.valuation)
        mismatch = (
            exponent, _leading(lhs, lhs_radicals),
            _leading(rhs, rhs_radicals))

    else:
        mismatch = lhs.first_difference(rhs)
        if mismatch is not None:
            mismatch = (mismatch[0], format_scalar(mismatch[1]),
                        format_scalar(mismatch[2]))

    if mismatch is not None:
        exponent, ours, theirs = mismatch
        details['first_mismatch'] = {
            'exponent': format_scalar(exponent),
            'lhs': ours,
            'rhs': theirs,
        }

        if exponent == 0:
            details['diagnostic'] = \
                'the two sides are normalized differently at z = 0'

        logger.info('{}: the expansions differ at z^{}'.format(
            spec.name, format_scalar(exponent)))

    return make_report(spec, CheckMode.SERIES, mismatch is None, details)


def _embed_poly(poly, prec, branches):
    return [embed_scalar(c, prec, branches).value for c in poly.coefficients]


def _horner(coeffs, z):
    result = mpmath.mpc(0)
    for c in reversed(coeffs):
        result = result * z + c

    return result


def _continued_log(coeffs, z):
    """
    log base(z) continued from the principal value at 0 along [0, z].

    """
    steps = SEGMENT_STEPS
    while steps <= MAX_SEGMENT_STEPS:
        tiny = mpmath.ldexp(mpmath.mpf(1), -mpmath.mp.prec // 2)
        previous = _horner(coeffs, mpmath.mpc(0))
        total = mpmath.log(previous)
        for k in range(1, steps + 1):
            current = _horner(coeffs, z * k / steps)
            if abs(current) < tiny:
                raise DomainError(
                    'A prefactor base vanishes on the segment to {}.'.format(
                        mpmath.nstr(z, 10)))

            ratio = current / previous
            if abs(mpmath.arg(ratio)) >= mpmath.pi / 4:
                break

            total += mpmath.log(ratio)
            previous = current

        else:
            return total

        steps *= 4

    raise DomainError(
        'The prefactor base winds too fast near {}.'.format(
            mpmath.nstr(z, 10)))


def _check_cut(num, den, z):
    """
    Rejects points whose image path S([0, z]) crosses [1, oo).

    """
    previous = mpmath.mpc(0)
    for k in range(1, SEGMENT_STEPS + 1):
        t = z * k / SEGMENT_STEPS
        d = _horner(den, t)
        if d == 0:
            raise DomainError('The argument has a pole on the segment.')

        current = _horner(num, t) / d
        if (previous.imag > 0) != (current.imag > 0) and \
                min(previous.real, current.real) > 1:
            raise DomainError(
                'The argument crosses the branch cut [1, oo) on the way '
                'to {}.'.format(mpmath.nstr(z, 10)))

        previous = current


def evaluate_side(side, z, prec, branches=None):
    """
    A side evaluated at the exact point z with the square roots embedded
    according to branches; returns an mpmath complex number.

    """
    with mpmath.workprec(prec + GUARD_BITS):
        point = embed_scalar(z, prec, branches).value
        num = _embed_poly(side.argument.num, prec, branches)
        den = _embed_poly(side.argument.den, prec, branches)

        _check_cut(num, den, point)
        arg = _horner(num, point) / _horner(den, point)

        value = hg_eval(side.hg, ComplexApprox(arg, prec), prec).value
        for p in side.prefactors:
            log = _continued_log(_embed_poly(p.base, prec, branches), point)
            value *= mpmath.exp(
                mpmath.mpf(p.exponent.numerator) / p.exponent.denominator *
                log)

        return value


def default_tolerance(prec):
    return mpmath.ldexp(mpmath.mpf(1), -(int(prec) // 2))


def _sample(spec, points, prec, tol, branches):
    per_point = []
    worst = mpmath.mpf(0)
    rejected = False
    for z in points:
        try:
            residual = abs(
                evaluate_side(spec.lhs, z, prec, branches) -
                evaluate_side(spec.rhs, z, prec, branches))

        except DomainError as e:
            logger.warning('{}: rejected z = {}: {}'.format(
                spec.name, format_scalar(z), e))
            per_point.append({'z': format_scalar(z), 'error': str(e)})
            rejected = True
            continue

        worst = max(worst, residual)
        per_point.append({
            'z': format_scalar(z),
            'residual': mpmath.nstr(residual, 5),
        })

    passed = not rejected and bool(points) and worst <= tol
    return passed, worst, per_point


def verify_numeric(spec, points, prec, tol=None):
    """
    Evaluates both sides at the sample points and compares them.  Every
    choice of sign for the square roots of the field is tried; the check
    passes when at least one assignment does.

    """
    prec = int(prec)
    with NUMERIC_LOCK, mpmath.workprec(prec + GUARD_BITS):
        tol = default_tolerance(prec) if tol is None else mpmath.mpf(tol)

        sweep = []
        best = None
        for branches in spec.field.branch_assignments():
            passed, worst, per_point = _sample(
                spec, points, prec, tol, branches)

            entry = {
                'branches': {
                    str(d): b for d, b in sorted(branches.items())},
                'pass': passed,
                'max_residual': mpmath.nstr(worst, 5),
                'points': per_point,
            }
            sweep.append(entry)
            if best is None or (passed and not best[0]):
                best = (passed, entry)

        details = {
            'precision_bits': prec,
            'tolerance': mpmath.nstr(tol, 5),
            'max_residual': best[1]['max_residual'],
            'points': best[1]['points'],
        }

        if spec.field.ds:
            details['branches'] = sweep
            details['passing'] = [e['branches'] for e in sweep if e['pass']]

        return make_report(spec, CheckMode.NUMERIC, best[0], details)


def ode_apply(ode, series):
    """
    c2 F'' + c1 F' + c0 F for an operator given by its three polynomial
    coefficients.

    """
    order = series.order
    c2, c1, c0 = (FracSeries.from_poly(c, order) for c in ode)
    first = series.derivative()
    return c2 * first.derivative() + c1 * first + c0 * series


def verify_ode(spec, ode, order):
    """
    Both sides must be annihilated by the operator through the order the
    expansions allow and share their leading exponent and coefficient.

    """
    details = {'order': int(order)}
    passed = True
    expansions = {}
    radicals = {}
    for label, side in (('lhs', spec.lhs), ('rhs', spec.rhs)):
        expansion, radicals[label] = _expand_settled(side, order)
        expansions[label] = expansion

        residual = ode_apply(ode, expansion)
        details['{}_residual_order'.format(label)] = \
            format_scalar(residual.order)

        if not residual.is_zero():
            passed = False
            details['{}_first_bad_order'.format(label)] = \
                format_scalar(residual.offset)

    lhs, rhs = expansions['lhs'], expansions['rhs']
    if lhs.valuation != rhs.valuation or \
            lhs.leading_coefficient() != rhs.leading_coefficient() or \
            radicals['lhs'] != radicals['rhs']:
        passed = False
        details['diagnostic'] = 'the leading data at z = 0 differ'

    return make_report(spec, CheckMode.ODE, passed, details)


def _walk(content, path):
    keys = path.split('.') if isinstance(path, six.string_types) else path
    parent = None
    key = None
    node = content
    for key in keys:
        parent = node
        if isinstance(node, list):
            key = int(key)

        node = node[key]

    return parent, key


def mutate_spec(spec, path, delta=Fraction(1, 100)):
    """
    Returns a copy of spec with the scalar found at path (for instance
    "lhs.hg.c", "rhs.prefactors.0.exponent" or "lhs.arg.num.2") moved by
    delta.

    """
    content = copy.deepcopy(spec.to_dict())
    try:
        parent, key = _walk(content, path)
        parent[key] = format_scalar(
            parse_scalar(parent[key]) + parse_scalar(delta))

    except (KeyError, IndexError, ValueError, TypeError):
        raise ParameterError('There is no scalar at {}.'.format(path))

    shift = format_scalar(parse_scalar(delta))
    content['name'] = '{} [{}{}{}]'.format(
        spec.name, path, '' if shift.startswith('-') else '+', shift)
    return IdentitySpec.from_dict(content)


def mutation_paths(spec):
    """
    Every path mutate_spec() accepts for this identity.

    """
    paths = []
    for label, side in (('lhs', spec.lhs), ('rhs', spec.rhs)):
        paths.extend('{}.hg.{}'.format(label, k) for k in ('a', 'b', 'c'))
        for no, p in enumerate(side.prefactors):
            paths.append('{}.prefactors.{}.exponent'.format(label, no))
            # base(0) fixes the normalization at z = 0
            paths.extend(
                '{}.prefactors.{}.base.{}'.format(label, no, k)
                for k in range(1, len(p.base.coefficients)))

        paths.extend(
            '{}.arg.num.{}'.format(label, k)
            for k in range(1, len(side.argument.num.coefficients)))
        paths.extend(
            '{}.arg.den.{}'.format(label, k)
            for k in range(len(side.argument.den.coefficients)))

    return paths


def verify_spec(spec, asset=None):
    """
    Dispatches an identity to the backend its check block names.

    """
    from .backends import BACKEND_MAP
    from .HyperxAsset import HyperxAsset

    asset = asset if isinstance(asset, HyperxAsset) else HyperxAsset()
    try:
        backend = BACKEND_MAP[spec.check.mode]

    except KeyError:
        raise ParameterError(
            'No backend is available for the {} check.'.format(
                spec.check.mode))

    return backend(asset=asset).check(spec)


__all__ = [
    'Branch', 'FieldSpec', 'Prefactor', 'IdentitySide', 'CheckSpec',
    'IdentitySpec', 'expand_side', 'verify_series', 'verify_numeric',
    'verify_ode', 'mutate_spec', 'mutation_paths', 'verify_spec',
]
