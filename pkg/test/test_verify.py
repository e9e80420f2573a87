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
import copy
import json
import mpmath
import pytest

from fractions import Fraction
from os import listdir
from os.path import dirname
from os.path import join

import hyperx
from hyperx.algebra import Poly
from hyperx.common import CheckMode
from hyperx.common import DomainError
from hyperx.common import ParameterError
from hyperx.common import SpecError
from hyperx.HyperxAsset import HyperxAsset
from hyperx.verify import IdentitySpec
from hyperx.verify import expand_side
from hyperx.verify import default_tolerance
from hyperx.verify import mutate_spec
from hyperx.verify import mutation_paths
from hyperx.verify import ode_apply
from hyperx.verify import verify_numeric
from hyperx.verify import verify_ode
from hyperx.verify import verify_series
from hyperx.verify import verify_spec

# Disable logging for a cleaner testing output
import logging
logging.disable(logging.CRITICAL)

IDENTITY_PATH = join(dirname(hyperx.__file__), 'corpus', 'identities')

# A few points near the origin
POINTS = (Fraction(1, 16), Fraction(1, 10))

# Both sides scale a 2F1 by (1 + sqrt(2) z)^2
MULTIQUADRATIC = {
    'name': 'multiquadratic',
    'field': {'type': 'multiquadratic', 'd': [2, 3]},
    'lhs': {
        'prefactors': [{'base': [1, 'sqrt(2)'], 'exponent': 2}],
        'hg': {'a': '1/2', 'b': '1/3', 'c': '1/4'},
    },
    'rhs': {
        'prefactors': [
            {'base': [1, '2*sqrt(2)', 2], 'exponent': 1},
            {'base': [1, 'sqrt(3)'], 'exponent': 0},
        ],
        'hg': {'a': '1/2', 'b': '1/3', 'c': '1/4'},
    },
    'check': {'mode': 'numeric'},
}


def content(name):
    with open(join(IDENTITY_PATH, '{}.json'.format(name))) as f:
        return json.load(f)


def load(name):
    return IdentitySpec.from_dict(content(name))


def test_identity_parsing():
    """
    API: IdentitySpec.from_dict()

    """
    spec = load('kummer-quadratic')
    assert spec.name == 'kummer-quadratic'
    assert spec.check.mode == CheckMode.SERIES
    assert spec.check.order == 30
    assert spec.rhs.argument.num == Poly([0, 4, -4])
    assert spec.lhs.hg.c == Fraction(31, 30)
    assert repr(spec) == 'IdentitySpec(kummer-quadratic, series)'

    # Factored denominators are expanded
    spec = load('quadratic-z2-ode')
    assert spec.rhs.argument.den == Poly([1, 2, 1])
    assert spec.check.mode == CheckMode.ODE
    assert len(spec.check.ode) == 3

    # Our output can be read back in
    again = IdentitySpec.from_dict(spec.to_dict())
    assert again.to_dict() == spec.to_dict()


def test_identity_parsing_errors():
    """
    API: IdentitySpec.from_dict() malformed documents

    """
    def broken(path, value):
        doc = content('kummer-quadratic')
        node = doc
        keys = path.split('.')
        for key in keys[:-1]:
            node = node[key]

        if value is None:
            del node[keys[-1]]

        else:
            node[keys[-1]] = value

        return doc

    documents = (
        # Not a mapping at all
        ['kummer-quadratic'],
        broken('name', None),
        broken('name', 42),
        broken('rhs', None),
        broken('lhs.hg.c', None),
        # c may not be a nonpositive integer
        broken('lhs.hg.c', '-2'),
        # Floats are not exact
        broken('lhs.hg.a', 0.5),
        # The argument has to vanish at 0
        broken('lhs.arg', {'num': [1, 1]}),
        # A pole at 0
        broken('lhs.arg', {'num': [0, 1], 'den': [0, 1]}),
        # A prefactor vanishing at 0
        broken('lhs.prefactors', [{'base': [0, 1], 'exponent': 1}]),
        broken('field', {'type': 'cyclotomic'}),
        broken('field', {'type': 'quadratic'}),
        broken('field', {'type': 'multiquadratic', 'd': [5]}),
        # sqrt(5) outside the declared field
        broken('lhs.hg.a', '1/2+sqrt(5)'),
        broken('check', {'mode': 'symbolic'}),
        # An ode check without its operator
        broken('check', {'mode': 'ode'}),
        broken('check', {'mode': 'ode', 'ode': {'c2': [1], 'c1': [1]}}),
    )

    for doc in documents:
        try:
            IdentitySpec.from_dict(doc)
            # We should never reach here
            assert(False)

        except SpecError:
            # Expected
            assert(True)


def test_expand_side():
    """
    API: expand_side()

    """
    spec = load('kummer-quadratic')
    lhs = expand_side(spec.lhs, 4)
    assert lhs.order == 4
    assert lhs.coefficient(0) == 1
    # ab/c = (2/3)(2/5)/(31/30)
    assert lhs.coefficient(1) == Fraction(8, 31)

    rhs = expand_side(spec.rhs, 4)
    # (1/3)(1/5)/(31/30) * 4
    assert rhs.coefficient(1) == Fraction(8, 31)


def test_verify_series():
    """
    API: verify_series()

    """
    for name in ('kummer-quadratic', 'quadratic-z2-generic',
                 'cubic-3-3-6n-n2'):
        spec = load(name)
        report = verify_series(spec, spec.check.order)
        assert report['name'] == name
        assert report['mode'] == CheckMode.SERIES
        assert report['pass'] is True
        assert 'first_mismatch' not in report['details']

    # Nudging c on one side breaks the identity at z^1
    spec = mutate_spec(load('kummer-quadratic'), 'lhs.hg.c')
    assert spec.name == 'kummer-quadratic [lhs.hg.c+1/100]'
    assert spec.lhs.hg.c == Fraction(31, 30) + Fraction(1, 100)

    report = verify_series(spec, 30)
    assert report['pass'] is False
    mismatch = report['details']['first_mismatch']
    assert mismatch['exponent'] == '1'
    assert mismatch['rhs'] == '8/31'
    assert 'diagnostic' not in report['details']

    # A constant factor shows up at z^0
    doc = content('kummer-quadratic')
    doc['rhs']['prefactors'] = [{'base': [2], 'exponent': 1}]
    report = verify_series(IdentitySpec.from_dict(doc), 10)
    assert report['pass'] is False
    assert report['details']['first_mismatch']['exponent'] == '0'
    assert 'diagnostic' in report['details']

    # No single exact field holds sqrt(2) and sqrt(3)
    try:
        verify_series(IdentitySpec.from_dict(MULTIQUADRATIC), 10)
        # We should never reach here
        assert(False)

    except ParameterError:
        # Expected
        assert(True)


def test_verify_numeric():
    """
    API: verify_numeric()

    """
    spec = load('kummer-quadratic')
    report = verify_numeric(spec, POINTS, 128)
    assert report['pass'] is True
    assert report['mode'] == CheckMode.NUMERIC
    assert report['details']['precision_bits'] == 128
    assert len(report['details']['points']) == len(POINTS)
    assert 'branches' not in report['details']

    report = verify_numeric(
        mutate_spec(spec, 'rhs.hg.a', Fraction(-1, 50)), POINTS, 128)
    assert report['pass'] is False

    # A sweep over both signs of both square roots
    report = verify_numeric(
        IdentitySpec.from_dict(MULTIQUADRATIC), POINTS, 128)
    assert report['pass'] is True
    assert len(report['details']['branches']) == 4
    assert len(report['details']['passing']) == 4

    # An empty point list certifies nothing
    assert verify_numeric(spec, [], 128)['pass'] is False


def test_default_tolerance():
    """
    API: default_tolerance()

    """
    assert default_tolerance(256) == mpmath.ldexp(1, -128)
    assert default_tolerance(64) == mpmath.ldexp(1, -32)


def test_verify_ode():
    """
    API: verify_ode() and ode_apply()

    """
    spec = load('quadratic-z2-ode')
    report = verify_ode(spec, spec.check.ode, spec.check.order)
    assert report['pass'] is True
    assert report['mode'] == CheckMode.ODE

    # The leading coefficient must carry its factor 2
    c2, c1, c0 = spec.check.ode
    halved = (Poly([0, 1, 1, -1, -1]), c1, c0)
    report = verify_ode(spec, halved, spec.check.order)
    assert report['pass'] is False
    assert 'lhs_first_bad_order' in report['details']

    # Annihilated sides stay annihilated under ode_apply()
    lhs = expand_side(spec.lhs, 20)
    assert ode_apply(spec.check.ode, lhs).is_zero()
    assert not ode_apply(halved, lhs).is_zero()

    # The zeroth order coefficient carries a factor 2 as well:  at z^0 the
    # balance reads (4b + 1) f1 = K (a + b)(1 + 4b) with f1 = 2(a + b)
    halved = (c2, c1, Poly([Fraction(-5, 18), Fraction(5, 18)]))
    report = verify_ode(spec, halved, spec.check.order)
    assert report['pass'] is False
    assert report['details']['lhs_first_bad_order'] == '0'


def test_mutation_paths():
    """
    API: mutation_paths() and mutate_spec()

    """
    spec = load('kummer-quadratic')
    paths = mutation_paths(spec)
    assert 'lhs.hg.a' in paths
    assert 'rhs.hg.c' in paths
    assert 'rhs.arg.num.2' in paths
    # The constant term of the argument must stay 0
    assert 'lhs.arg.num.0' not in paths

    # Every path can be mutated
    for path in paths:
        assert mutate_spec(spec, path).name.startswith('kummer-quadratic [')

    assert mutate_spec(spec, 'lhs.hg.a', Fraction(-1, 4)).name == \
        'kummer-quadratic [lhs.hg.a-1/4]'

    for path in ('lhs.hg.d', 'lhs.prefactors.3.exponent', 'name.x'):
        try:
            mutate_spec(spec, path)
            # We should never reach here
            assert(False)

        except ParameterError:
            # Expected
            assert(True)

    # The original is left untouched
    assert spec.lhs.hg.c == Fraction(31, 30)


def test_verify_spec():
    """
    API: verify_spec()

    """
    asset = HyperxAsset(order=12)
    report = verify_spec(load('kummer-quadratic'), asset)
    assert report['pass'] is True
    # The identity's own order wins over the asset's
    assert report['details']['order'] == 30

    doc = copy.deepcopy(MULTIQUADRATIC)
    doc['check'] = {'mode': 'numeric', 'points': ['1/20'],
                    'precision_bits': 96}
    report = verify_spec(IdentitySpec.from_dict(doc))
    assert report['pass'] is True
    assert report['details']['precision_bits'] == 96

    report = verify_spec(load('quadratic-z2-ode'))
    assert report['pass'] is True

    # A base(0) without an exact power is carried as a radical
    doc = {
        'name': 'radical',
        'field': {'type': 'rational'},
        'lhs': {
            'prefactors': [{'base': [2, -2], 'exponent': '1/2'}],
            'hg': {'a': '1/3', 'b': '1/5', 'c': '1/2'},
        },
        'rhs': {
            'prefactors': [
                {'base': [2], 'exponent': '1/2'},
                {'base': [1, -1], 'exponent': '1/2'}],
            'hg': {'a': '1/3', 'b': '1/5', 'c': '1/2'},
        },
        'check': {'mode': 'series', 'order': 12},
    }
    assert verify_spec(IdentitySpec.from_dict(doc))['pass'] is True

    # 8^(1/2) = 2 * 2^(1/2)
    eight = copy.deepcopy(doc)
    eight['lhs']['prefactors'] = [{'base': [8, -8], 'exponent': '1/2'}]
    eight['rhs']['prefactors'].append({'base': [2], 'exponent': 1})
    assert verify_spec(IdentitySpec.from_dict(eight))['pass'] is True

    doc['rhs']['prefactors'][0]['base'] = [3]
    report = verify_series(IdentitySpec.from_dict(doc), 12)
    assert report['pass'] is False
    mismatch = report['details']['first_mismatch']
    assert mismatch['exponent'] == '0'
    assert mismatch['lhs'] == '1*2^(1/2)'
    assert mismatch['rhs'] == '1*3^(1/2)'
    assert 'diagnostic' in report['details']

    # The same holds for the leading data of an ODE check
    report = verify_ode(
        IdentitySpec.from_dict(doc), load('quadratic-z2-ode').check.ode, 12)
    assert report['details']['diagnostic'] == \
        'the leading data at z = 0 differ'

    # A negative base(0) has no real radical
    doc['lhs']['prefactors'][0]['base'] = [-2, 1]
    try:
        verify_series(IdentitySpec.from_dict(doc), 12)
        # We should never reach here
        assert(False)

    except DomainError:
        # Expected
        assert(True)


@pytest.mark.parametrize('name', sorted(listdir(IDENTITY_PATH)))
def test_identity_corpus(name):
    """
    API: verify_spec() over every identity we ship

    """
    with open(join(IDENTITY_PATH, name)) as f:
        spec = IdentitySpec.from_dict(json.load(f))

    report = verify_spec(spec)
    assert report['name'] == spec.name
    assert report['pass'] is True


def mutation_passes(spec, path):
    try:
        return verify_spec(mutate_spec(spec, path))['pass']

    except DomainError:
        # the mutated identity left the domain of its check
        return False


@pytest.mark.slow
def test_identity_corpus_mutations():
    """
    API: verify_spec() rejects every mutation of every identity we ship

    """
    for name in sorted(listdir(IDENTITY_PATH)):
        with open(join(IDENTITY_PATH, name)) as f:
            spec = IdentitySpec.from_dict(json.load(f))

        for path in mutation_paths(spec):
            assert not mutation_passes(spec, path), \
                '{} survives a change at {}'.format(spec.name, path)
