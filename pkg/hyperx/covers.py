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
Rational maps of the projective line: ramification data, Belyi checks,
Riemann-Hurwitz accounting and a coefficient matching solver that turns
an ansatz with unknown constants into the exact list of maps satisfying
it.

The solver works on sympy expressions.  Every matching constraint is a
polynomial in the map variable whose coefficients must all vanish; the
resulting system in the unknowns is solved by eliminating variables that
occur linearly, then by resultants, and finally by factoring univariate
polynomials over Q or Q(sqrt(d)).

"""
import six
import sympy

from collections import namedtuple
from fractions import Fraction
from sympy.parsing.sympy_parser import convert_xor
from sympy.parsing.sympy_parser import parse_expr
from sympy.parsing.sympy_parser import standard_transformations

from .algebra import Poly
from .algebra import QuadExt
from .algebra import RationalFunction
from .algebra import format_scalar
from .algebra import parse_scalar
from .algebra import to_fraction
from .common import CoverResourceError
from .common import Fiber
from .common import FIBERS
from .common import FieldType
from .common import InconsistencyError
from .common import ParameterError
from .common import SpecError
from .logger import logger

# The default limit on the total degree of any eliminant
MAX_ELIMINATION_DEGREE = 400

# How many resultants are taken against the pivot at every elimination step
MAX_RESULTANTS = 4

# Nested case splits on a vanishing pivot coefficient stop here
MAX_SPLIT_DEPTH = 4

# Equations above this total degree are not factored while looking for a
# case split
MAX_FACTOR_DEGREE = 40

# Irreducible equations tried per search for a case split
MAX_FACTOR_TRIES = 3

PARSE_TRANSFORMS = standard_transformations + (convert_xor, )

# A point of a fiber; count > 1 stands for the roots of an irreducible
# factor of that degree, all sharing the same index
RamPoint = namedtuple('RamPoint', ('location', 'index', 'count'))


def to_sympy(value):
    """
    Converts an exact scalar to a sympy number.

    """
    if isinstance(value, QuadExt):
        return sympy.Rational(value.x.numerator, value.x.denominator) + \
            sympy.Rational(value.y.numerator, value.y.denominator) * \
            sympy.sqrt(value.d)

    value = to_fraction(value)
    return sympy.Rational(value.numerator, value.denominator)


def from_sympy(value, d=None):
    """
    Converts a sympy number lying in Q or Q(sqrt(d)) back to a Fraction or
    a QuadExt; returns None for anything outside that field.

    """
    value = sympy.expand(sympy.radsimp(value))
    if value.is_Rational:
        return Fraction(int(value.p), int(value.q))

    if d is None:
        return None

    root = sympy.sqrt(d)
    conj = value.subs(sympy.I, -sympy.I) if d < 0 \
        else value.subs(root, -root)

    x = sympy.expand(sympy.radsimp((value + conj) / 2))
    y = sympy.expand(sympy.radsimp((value - conj) / (2 * root)))
    if not (x.is_Rational and y.is_Rational):
        return None

    return QuadExt(Fraction(int(x.p), int(x.q)),
                   Fraction(int(y.p), int(y.q)), d)


def _field_of(*polys):
    """
    The d of the quadratic field the coefficients live in (None for Q).

    """
    for poly in polys:
        for c in poly.coefficients:
            if isinstance(c, QuadExt) and not c.is_rational():
                return c.d

    return None


def _factor(expr, x, d):
    """
    factor_list() over Q or Q(sqrt(d)).

    """
    if d is None:
        return sympy.factor_list(expr, x)

    return sympy.factor_list(expr, x, extension=sympy.sqrt(d))


def _gcd(first, second, x, d):
    """
    The gcd in x over Q or Q(sqrt(d)), returned as an expression.  With
    free parameters in the coefficients the gcd is taken over Q.

    """
    extra = (sympy.sympify(first).free_symbols |
             sympy.sympify(second).free_symbols) - set([x])
    if d is None or extra:
        return sympy.gcd(first, second)

    options = {'extension': sympy.sqrt(d)}
    return sympy.Poly(first, x, **options).gcd(
        sympy.Poly(second, x, **options)).as_expr()


def _conjugate(expr, d):
    """
    Applies sqrt(d) -> -sqrt(d).

    """
    if d is None:
        return expr

    if d < 0:
        return expr.subs(sympy.I, -sympy.I)

    root = sympy.sqrt(d)
    return expr.subs(root, -root)


def _total_degree(expr):
    if not expr.free_symbols:
        return 0

    return sympy.Poly(
        expr, *sorted(expr.free_symbols, key=str)).total_degree()


def _is_rational_poly(expr):
    try:
        domain = sympy.Poly(
            expr, *sorted(expr.free_symbols, key=str)).get_domain()

    except sympy.PolynomialError:
        return False

    return domain.is_ZZ or domain.is_QQ


def _field_roots(expr, x, d):
    """
    The roots in Q or Q(sqrt(d)) of a polynomial in x with coefficients in
    that field.

    A root in Q(sqrt(d)) is also a root of the norm f * conj(f), which has
    rational coefficients; its factors of degree one and two over Q give
    every candidate.

    """
    expr = sympy.expand(expr)
    if expr.free_symbols - set([x]):
        # the coefficients depend on free parameters
        roots = []
        try:
            factors = sympy.factor_list(expr, x)[1]

        except sympy.PolynomialError:
            return roots

        for factor, _ in factors:
            factor = sympy.Poly(factor, x)
            if factor.degree() == 1:
                a, b = factor.all_coeffs()
                roots.append(sympy.cancel(-b / a))

        return roots

    conj = sympy.expand(_conjugate(expr, d))
    exact = sympy.expand(conj - expr) == 0
    norm = expr if exact else sympy.expand(expr * conj)

    candidates = []
    for factor, _ in sympy.factor_list(norm, x)[1]:
        factor = sympy.Poly(factor, x)
        if factor.degree() == 1:
            a, b = factor.all_coeffs()
            candidates.append(-b / a)
            continue

        if factor.degree() == 2 and d is not None:
            a, b, c = factor.all_coeffs()
            ratio = sympy.sqrt((b * b - 4 * a * c) / sympy.Integer(d))
            if ratio.is_Rational:
                candidates.extend(
                    (-b + sign * ratio * sympy.sqrt(d)) / (2 * a)
                    for sign in (1, -1))
                continue

        logger.info(
            'Skipping roots of {} lying outside the working field.'.format(
                factor.as_expr()))

    roots = []
    for root in candidates:
        root = sympy.expand(sympy.radsimp(root))
        if not exact and sympy.expand(
                sympy.radsimp(expr.subs(x, root))) != 0:
            # a root of the conjugate only
            continue

        if root not in roots:
            roots.append(root)

    return roots


class RamProfile(object):
    """
    The points lying over one of 0, 1 and infinity together with their
    ramification indices.
    """

    def __init__(self, fiber, points):
        if fiber not in FIBERS:
            raise ParameterError('Unsupported fiber: {}'.format(fiber))

        self.fiber = fiber
        self.points = list(points)

    @property
    def degree(self):
        return sum(p.index * p.count for p in self.points)

    @property
    def branch_number(self):
        return sum((p.index - 1) * p.count for p in self.points)

    def indices(self):
        """
        The ramification indices, one per point, in decreasing order.

        """
        return sorted(
            (p.index for p in self.points for _ in range(p.count)),
            reverse=True)

    def to_dict(self):
        return {
            'fiber': self.fiber,
            'points': [{
                'location': p.location if isinstance(
                    p.location, six.string_types)
                else format_scalar(p.location),
                'index': p.index,
                'count': p.count,
            } for p in self.points],
        }

    def __repr__(self):
        return 'RamProfile({}: {})'.format(self.fiber, self.indices())


def _fiber_polynomial(s, fiber):
    if fiber == Fiber.ZERO:
        return s.num

    if fiber == Fiber.ONE:
        return s.num - s.den

    return s.den


def ramification_profile(s, fiber):
    """
    The points of the source line lying over the fiber with their indices.
    Roots outside the coefficient field are reported per irreducible
    factor.

    """
    if s.is_constant():
        raise ParameterError('A constant map has no ramification data.')

    fiber = Fiber.INFINITY if fiber in ('inf', 'infinity', '∞') else fiber
    poly = _fiber_polynomial(s, fiber)
    d = _field_of(s.num, s.den)

    x = sympy.Symbol('x')
    expr = sum(
        (to_sympy(c) * x ** k for k, c in enumerate(poly.coefficients)),
        sympy.Integer(0))

    points = []
    _, factors = _factor(expr, x, d)
    for factor, multiplicity in factors:
        factor = sympy.Poly(factor, x)
        if factor.degree() == 1:
            a, b = factor.all_coeffs()
            location = from_sympy(-b / a, d)
            if location is not None:
                points.append(RamPoint(location, multiplicity, 1))
                continue

        points.append(RamPoint(
            'root of {}'.format(factor.as_expr()), multiplicity,
            factor.degree()))

    # infinity of the source
    missing = s.degree - poly.degree
    if missing > 0:
        points.append(RamPoint(Fiber.INFINITY, missing, 1))

    return RamProfile(fiber, points)


def _distinct_roots(poly):
    """
    The number of distinct roots of a polynomial over the algebraic
    closure.

    """
    if poly.degree <= 0:
        return 0

    return poly.degree - poly.gcd(poly.derivative()).degree


def is_belyi(s):
    """
    True when every critical value of s lies in {0, 1, infinity}.

    The ramification over 0, 1 and infinity is counted exactly with
    square-free parts; s is Belyi precisely when it accounts for the whole
    2m - 2 that Riemann-Hurwitz allots to a map of degree m.

    """
    if s.is_constant():
        raise ParameterError('A constant map is not a covering.')

    m = s.degree
    ramified = 0
    for fiber in FIBERS:
        poly = _fiber_polynomial(s, fiber)
        preimages = _distinct_roots(poly) + (1 if poly.degree < m else 0)
        ramified += m - preimages

    return ramified == 2 * m - 2


def riemann_hurwitz(m, profiles, extra=(), target_genus=0):
    """
    Returns the genus g' of the source from
        2g' - 2 = m(2g - 2) + total branch number

    extra holds additional branch numbers (integers or RamProfiles) for
    branch points outside 0, 1 and infinity.

    """
    for profile in profiles:
        if profile.degree != m:
            raise InconsistencyError(
                'The fiber over {} accounts for {} of {} sheets.'.format(
                    profile.fiber, profile.degree, m))

    branch = sum(p.branch_number for p in profiles) + sum(
        e.branch_number if isinstance(e, RamProfile) else int(e)
        for e in extra)

    doubled = m * (2 * target_genus - 2) + branch + 2
    if doubled % 2:
        raise InconsistencyError(
            'The total branch number {} has the wrong parity.'.format(branch))

    if doubled < 0:
        raise InconsistencyError(
            'The branch data gives a negative genus.')

    return doubled // 2


class CoverSolution(object):
    """
    One assignment of the unknowns together with the resulting map.

    A solution may be a family: the unknowns named in parameters are left
    free and the other values are sympy expressions in them.  derived maps
    the name of a derived quantity to its roots in the working field.
    """

    def __init__(self, values, expression=None, variable=None,
                 parameters=(), derived=None):
        self.values = values
        self.expression = expression
        self.variable = variable
        self.parameters = tuple(parameters)
        self.derived = derived or {}

    @property
    def map(self):
        return self.expression

    def is_family(self):
        return bool(self.parameters)

    def as_rational_function(self):
        """
        The map as a RationalFunction (None when the problem had no map).

        """
        if self.expression is None:
            return None

        if self.parameters:
            raise ParameterError(
                'A family of maps in {} has no single rational '
                'function.'.format(', '.join(self.parameters)))

        num, den = sympy.fraction(sympy.cancel(sympy.together(
            self.expression)))

        d = None
        for value in self.values.values():
            if isinstance(value, QuadExt) and not value.is_rational():
                d = value.d

        def convert(expr):
            poly = sympy.Poly(sympy.expand(expr), self.variable)
            coeffs = [from_sympy(c, d) for c in reversed(poly.all_coeffs())]
            if any(c is None for c in coeffs):
                raise ParameterError(
                    'The map leaves the field of its unknowns.')
            return Poly(coeffs)

        return RationalFunction(convert(num), convert(den))

    def sort_key(self, names):
        return tuple(_scalar_key(self.values[n]) for n in names)

    def to_dict(self):
        content = {
            'values': {
                k: _format_value(v) for k, v in sorted(self.values.items())},
        }

        if self.expression is not None:
            content['map'] = str(self.expression)

        if self.parameters:
            content['parameters'] = list(self.parameters)

        if self.derived:
            content['derived'] = {
                k: [format_scalar(r) for r in roots]
                for k, roots in sorted(self.derived.items())}

        return content

    def __repr__(self):
        return 'CoverSolution({})'.format(', '.join(
            '{}={}'.format(k, _format_value(v))
            for k, v in sorted(self.values.items())))


def _format_value(value):
    if isinstance(value, sympy.Basic):
        return str(value)

    return format_scalar(value)


def _scalar_key(value):
    if isinstance(value, sympy.Basic):
        # values of a family sort after the exact ones
        return (1, Fraction(0), Fraction(0), str(value))

    if isinstance(value, QuadExt):
        return (0, ) + value.sort_key() + ('', )

    return (0, value, Fraction(0), '')


class CoverProblem(object):
    """
    An ansatz for a rational map with unknown constants.

    Constraints are expressions in the map variable (z unless stated
    otherwise) and the unknowns that must vanish identically.  relations
    tie an unknown to an expression in the others; orbits name the
    product of (den_k z - num_k) over the orbit of a seed under a Moebius
    map of finite order.  derived names a quantity tied to the unknowns by
    a polynomial whose roots are reported with every solution; exclusions
    may refer to it.
    """

    def __init__(self, name, unknowns, constraints, field_d=None,
                 variable='z', degree=None, num=None, den=None,
                 relations=None, orbits=None, exclusions=None,
                 derived=None):

        self.name = name
        self.field_d = field_d
        self.degree = int(degree) if degree else None
        self.variable = sympy.Symbol(variable)

        self.unknowns = [sympy.Symbol(u) for u in unknowns]
        if len(self.unknowns) > 6:
            raise ParameterError(
                'A cover problem may have at most 6 unknowns.')

        self.symbols = {str(s): s for s in self.unknowns}
        self.symbols[variable] = self.variable

        relations = relations or {}
        for key in relations:
            self.symbols.setdefault(key, sympy.Symbol(key))

        for orbit in orbits or []:
            self.symbols[orbit['name']] = self._expand_orbit(orbit)

        self.relations = {
            self.symbols[k]: self._parse(v) for k, v in relations.items()}

        self.constraints = [
            self._substitute(self._parse(c)) for c in constraints]

        self.num = self._substitute(self._parse(num)) if num else None
        self.den = self._substitute(self._parse(den)) if den else None

        derived = derived or {}
        for key in derived:
            self.symbols.setdefault(key, sympy.Symbol(key))

        self.derived = {
            k: self._substitute(self._parse(v)) for k, v in derived.items()}

        self.exclusions = []
        for entry in exclusions or []:
            self.exclusions.append({
                self.symbols[k]: parse_scalar(v) for k, v in entry.items()})

    @classmethod
    def from_dict(cls, content):
        """
        Builds a problem from a parsed cover problem document.

        """
        try:
            field = content.get('field', {'type': FieldType.RATIONAL})
            field_d = None
            if field.get('type') == FieldType.QUADRATIC:
                field_d = int(field['d'])

            elif field.get('type') != FieldType.RATIONAL:
                raise SpecError('Unsupported cover problem field: {}'.format(
                    field.get('type')))

            ansatz = content.get('map', {})
            return cls(
                name=content.get('name', 'cover'),
                unknowns=content['unknowns'],
                constraints=content['constraints'],
                field_d=field_d,
                variable=content.get('variable', 'z'),
                degree=content.get('degree'),
                num=ansatz.get('num'),
                den=ansatz.get('den'),
                relations=content.get('relations'),
                orbits=content.get('orbits'),
                exclusions=content.get('exclusions'),
                derived=content.get('derived'),
            )

        except (KeyError, TypeError) as e:
            raise SpecError(
                'The cover problem is missing {}.'.format(e))

        except (sympy.SympifyError, SyntaxError, ParameterError) as e:
            raise SpecError(
                'The cover problem could not be parsed: {}'.format(e))

    def _parse(self, text):
        if not isinstance(text, six.string_types):
            text = str(text)

        return parse_expr(
            text, local_dict=dict(self.symbols),
            transformations=PARSE_TRANSFORMS)

    def _substitute(self, expr):
        if self.relations:
            expr = expr.subs(self.relations)

        return sympy.expand(expr)

    def _expand_orbit(self, orbit):
        moebius = orbit['moebius']
        a, b, c, d = (
            self._parse(moebius[k]) for k in ('a', 'b', 'c', 'd'))
        seed = self._parse(orbit['seed'])

        product = sympy.Integer(1)
        point = seed
        for _ in range(12):
            num, den = sympy.fraction(sympy.cancel(point))
            product *= den * self.variable - num

            point = sympy.cancel((a * point + b) / (c * point + d))
            if sympy.cancel(point - seed) == 0:
                return sympy.expand(product)

        raise ParameterError(
            'The orbit {} is not finite under {}.'.format(
                orbit['name'], moebius))

    def equations(self):
        """
        The coefficient equations in the unknowns.

        """
        result = []
        for constraint in self.constraints:
            if constraint.has(self.variable):
                result.extend(
                    sympy.Poly(constraint, self.variable).coeffs())

            else:
                result.append(constraint)

        return [e for e in (sympy.expand(e) for e in result) if e != 0]


class _Solver(object):
    """
    Elimination over one cover problem.

    Unknowns that no equation mentions become parameters of a family.
    Otherwise an unknown with a numeric coefficient is eliminated first,
    a reducible equation splits the system into one case per irreducible
    factor, then an unknown with a polynomial coefficient is eliminated
    (with a separate case for every factor of that coefficient) and
    resultants do the rest.
    """

    def __init__(self, field_d, max_degree):
        self.field_d = field_d
        self.max_degree = max_degree

        # equations already known to be irreducible over Q
        self._irreducible = set()

    def _normalize(self, equations):
        result = []
        seen = set()
        for e in equations:
            e = sympy.expand(e)
            if e == 0:
                continue

            if not e.free_symbols:
                # a nonzero constant
                return None

            # drop content so duplicates match
            try:
                e = sympy.expand(sympy.Poly(e, *sorted(
                    e.free_symbols, key=str)).primitive()[1].as_expr())

            except sympy.PolynomialError:
                pass

            if e not in seen:
                seen.add(e)
                result.append(e)

        return result

    def _budget(self, expr):
        degree = _total_degree(expr)
        if degree > self.max_degree:
            raise CoverResourceError(
                'An eliminant of total degree {} exceeds the budget of '
                '{}.'.format(degree, self.max_degree))

    def _known(self, expr):
        return expr in self._irreducible or -expr in self._irreducible

    def _factors(self, expr):
        """
        The distinct irreducible factors of expr over Q; expressions with
        coefficients outside Q are returned whole.

        """
        if not _is_rational_poly(expr) or self._known(expr):
            return [expr]

        factors = []
        for factor, _ in sympy.factor_list(expr)[1]:
            if factor.free_symbols:
                factor = sympy.expand(factor)
                self._irreducible.add(factor)
                factors.append(factor)

        return factors

    def solve(self, equations, unknowns, depth=0):
        equations = self._normalize(equations)
        if equations is None:
            return []

        if not unknowns:
            return [{}] if not equations else []

        free = [u for u in unknowns
                if not any(e.has(u) for e in equations)]
        if free:
            logger.debug('{} stay free on this branch'.format(
                ', '.join(str(u) for u in free)))

            solutions = []
            bound = [u for u in unknowns if u not in free]
            for s in self.solve(equations, bound, depth):
                s = dict(s)
                for u in free:
                    s[u] = u
                solutions.append(s)

            return solutions

        pivot = self._linear_pivot(equations, unknowns, numeric=True)
        if pivot is not None:
            return self._eliminate_linear(
                equations, unknowns, pivot, depth)

        if len(unknowns) == 1:
            return [{unknowns[0]: r} for r in self._roots(
                equations, unknowns[0]) or []]

        split = self._split(equations)
        if split is not None:
            equation, factors = split
            rest = [e for e in equations if e is not equation]

            solutions = []
            for factor in factors:
                logger.trace('Case {} = 0'.format(factor))
                solutions.extend(self.solve(rest + [factor], unknowns, depth))

            return solutions

        if depth < MAX_SPLIT_DEPTH:
            pivot = self._linear_pivot(equations, unknowns, numeric=False)
            if pivot is not None:
                return self._eliminate_linear(
                    equations, unknowns, pivot, depth)

        return self._eliminate_resultant(equations, unknowns, depth)

    def _split(self, equations):
        """
        Looks for an equation that factors over Q.  Returns the equation
        with its distinct irreducible factors, or None.

        """
        tries = 0
        for e in sorted(equations, key=_total_degree):
            if self._known(e) or not _is_rational_poly(e):
                continue

            if tries >= MAX_FACTOR_TRIES or \
                    _total_degree(e) > MAX_FACTOR_DEGREE:
                break

            tries += 1
            _, factors = sympy.factor_list(e)
            if len(factors) == 1 and factors[0][1] == 1:
                self._irreducible.add(e)
                continue

            return e, self._factors(e)

        return None

    def _linear_pivot(self, equations, unknowns, numeric):
        """
        Looks for an unknown occurring linearly with a numeric coefficient;
        unless numeric is set, the simplest polynomial coefficient is
        accepted too.

        """
        best = None
        for u in unknowns:
            for e in equations:
                poly = sympy.Poly(e, u)
                if poly.degree() != 1:
                    continue

                coeff, rest = poly.all_coeffs()
                if not coeff.free_symbols:
                    return (u, e, coeff, rest)

                if numeric:
                    continue

                if any(sympy.fraction(sympy.cancel(coeff / other))[1]
                       .is_number for other in equations):
                    # already assumed to vanish on this branch
                    continue

                weight = (_total_degree(sympy.sqf_part(coeff)),
                          sympy.count_ops(coeff))
                if best is None or weight < best[0]:
                    best = (weight, (u, e, coeff, rest))

        return best[1] if best is not None else None

    def _eliminate_linear(self, equations, unknowns, pivot, depth):
        u, pivot_eq, coeff, rest = pivot
        others = [v for v in unknowns if v != u]
        value = -rest / coeff

        solutions = []
        if coeff.free_symbols:
            # the cases where the coefficient vanishes
            for factor in self._factors(coeff):
                logger.trace('Case {} = 0'.format(factor))
                solutions.extend(self.solve(
                    equations + [factor], unknowns, depth + 1))

            depth += 1

        reduced = []
        for e in equations:
            if e is pivot_eq:
                continue

            reduced.append(sympy.fraction(sympy.together(
                e.subs(u, value)))[0])

        logger.trace('Eliminated {} = {}'.format(u, value))
        for s in self.solve(reduced, others, depth):
            if coeff.free_symbols and _simplify(coeff.subs(s)) == 0:
                continue

            s = dict(s)
            s[u] = _simplify(value.subs(s))
            solutions.append(s)

        return solutions

    def _eliminate_resultant(self, equations, unknowns, depth, pivot=None):
        # eliminate the unknown of smallest positive degree
        choice = None
        for x in unknowns:
            for e in (equations if pivot is None else [pivot]):
                degree = sympy.degree(e, x)
                if degree > 0 and (choice is None or degree < choice[0]):
                    choice = (degree, x, e)

        _, x, pivot = choice
        others = [u for u in unknowns if u != x]

        without = [e for e in equations if not e.has(x)]
        partners = sorted(
            (e for e in equations if e.has(x) and e is not pivot),
            key=lambda e: sympy.degree(e, x))[:MAX_RESULTANTS]

        reduced = list(without)
        for q in partners:
            res = sympy.Poly(pivot, x, *others).resultant(
                sympy.Poly(q, x, *others))
            res = res.as_expr() if hasattr(res, 'as_expr') else res
            res = sympy.expand(res)
            if res == 0:
                continue

            self._budget(res)
            reduced.append(res)

        logger.trace('Eliminated {} by resultants ({} equations left)'.format(
            x, len(reduced)))

        solutions = []
        if len(reduced) > 1 and len(others) > 1:
            common = sympy.gcd_list(reduced)
            if common.free_symbols:
                # solutions on common = 0 are found with common as the
                # next pivot, the rest from the quotients
                logger.debug('Splitting off the component {} = 0'.format(
                    common))

                if depth < 2 * MAX_SPLIT_DEPTH:
                    for factor in self._factors(common):
                        solutions.extend(self._eliminate_resultant(
                            equations + [factor], unknowns, depth + 1,
                            pivot=factor))

                else:
                    logger.warning(
                        'Skipping the component {} = 0 at depth {}'.format(
                            common, depth))

                reduced = [sympy.cancel(r / common) for r in reduced]

        for s in self.solve(reduced, others, depth):
            solutions.extend(self._back_substitute(equations, s, x))

        return solutions

    def _back_substitute(self, equations, s, x):
        back = [sympy.expand(e.subs(s)) for e in equations if e.has(x)]
        roots = self._roots(back, x)
        if roots is None:
            logger.debug('{} stays free on this branch'.format(x))
            s = dict(s)
            s[x] = x
            return [s]

        solutions = []
        for root in roots:
            s2 = dict(s)
            s2[x] = root
            solutions.append(s2)

        return solutions

    def _roots(self, equations, x):
        """
        The common roots in the working field of polynomials in x, or None
        when no equation is left to determine x.

        """
        polys = [sympy.expand(e) for e in equations]
        polys = [p for p in polys if p != 0]
        if not polys:
            return None

        if any(not p.has(x) for p in polys):
            # a nonzero constant survived the substitution
            return []

        common = polys[0]
        for p in polys[1:]:
            common = _gcd(common, p, x, self.field_d)

        if not common.has(x):
            return []

        return _field_roots(common, x, self.field_d)


def _simplify(value):
    if value.free_symbols:
        return sympy.cancel(value)

    return sympy.expand(sympy.radsimp(value))


def _matches(entry, values, derived):
    """
    True when a solution agrees with every value of an exclusion; for a
    derived quantity it is enough that the value is one of its roots.

    """
    for key, value in entry.items():
        name = str(key)
        if name in derived:
            if value not in derived[name]:
                return False

        elif values.get(name) != value:
            return False

    return True


def _is_degenerate(problem, expression):
    """
    A solution is degenerate when the map collapses: a vanishing numerator
    or denominator, a common factor, or a drop in degree.

    """
    num, den = sympy.fraction(sympy.together(expression))
    num, den = sympy.expand(num), sympy.expand(den)
    if num == 0 or den == 0:
        return True

    z = problem.variable
    if sympy.degree(_gcd(num, den, z, problem.field_d), z) > 0:
        return True

    degree = max(sympy.degree(num, z), sympy.degree(den, z))
    return problem.degree is not None and degree < problem.degree


def solve_cover(problem, max_degree=MAX_ELIMINATION_DEGREE):
    """
    Every solution of the coefficient matching system of a cover problem,
    with exclusions and degenerate maps removed, sorted by the values of
    the unknowns.

    Components along which some unknowns stay free come back as families
    whose values are expressions in those unknowns.

    """
    equations = problem.equations()
    logger.debug('{}: {} equations in {}'.format(
        problem.name, len(equations),
        ', '.join(str(u) for u in problem.unknowns)))

    unknowns = [u for u in problem.unknowns if u not in problem.relations]
    raw = _Solver(problem.field_d, max_degree).solve(equations, unknowns)

    solutions = []
    seen = set()
    for assignment in raw:
        for key, expr in problem.relations.items():
            assignment[key] = _simplify(expr.subs(assignment))

        parameters = [str(u) for u in unknowns if assignment.get(u) == u]

        # exact re-substitution
        check = (lambda e: sympy.cancel(sympy.together(e))) if parameters \
            else sympy.expand
        if any(check(c.subs(assignment)) != 0
               for c in problem.constraints):
            logger.debug('Dropping a spurious candidate {}'.format(
                assignment))
            continue

        values = {}
        for key, value in assignment.items():
            converted = value if value.free_symbols \
                else from_sympy(value, problem.field_d)
            if converted is None:
                break
            values[str(key)] = converted

        else:
            derived = {}
            for name, expr in sorted(problem.derived.items()):
                if parameters:
                    break

                roots = _field_roots(
                    sympy.expand(expr.subs(assignment)),
                    problem.symbols[name], problem.field_d)
                derived[name] = sorted(
                    (from_sympy(r, problem.field_d) for r in roots),
                    key=_scalar_key)

            if any(_matches(entry, values, derived)
                   for entry in problem.exclusions):
                logger.info('Excluded {}'.format(', '.join(
                    '{}={}'.format(k, _format_value(v))
                    for k, v in sorted(values.items()))))
                continue

            expression = None
            if problem.num is not None:
                den = problem.den if problem.den is not None else 1
                expression = sympy.cancel(
                    (problem.num / den).subs(assignment))

                if _is_degenerate(problem, (problem.num / den).subs(
                        assignment)):
                    logger.info(
                        'Discarding the degenerate solution {}'.format(
                            ', '.join('{}={}'.format(k, _format_value(v))
                                      for k, v in sorted(values.items()))))
                    continue

            key = tuple(sorted(
                (k, _format_value(v)) for k, v in values.items()))
            if key in seen:
                continue

            seen.add(key)
            solutions.append(CoverSolution(
                values, expression, problem.variable,
                parameters=parameters, derived=derived))
            continue

        logger.info('Skipping a solution outside the working field: '
                    '{}'.format(assignment))

    names = [str(u) for u in problem.unknowns]
    return sorted(solutions, key=lambda s: s.sort_key(names))


def distinct_maps(solutions):
    """
    The distinct maps among a list of solutions (several assignments of
    auxiliary unknowns may describe the same map).  Families are left out.

    """
    found = []
    for solution in solutions:
        if solution.is_family():
            continue

        rf = solution.as_rational_function()
        if rf is not None and not any(rf == other for other in found):
            found.append(rf)

    return found
