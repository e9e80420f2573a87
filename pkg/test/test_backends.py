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
import pytest

from hyperx import HyperxAsset
from hyperx.backends import BACKEND_MAP
from hyperx.backends.CheckBase import CheckBase
from hyperx.backends.CheckNumeric import CheckNumeric
from hyperx.backends.CheckODE import CheckODE
from hyperx.backends.CheckSeries import CheckSeries
from hyperx.common import CHECK_MODES
from hyperx.common import CheckMode
from hyperx.verify import IdentitySpec

# Disable logging for a cleaner testing output
import logging
logging.disable(logging.CRITICAL)

KUMMER = {
    'name': 'kummer-quadratic',
    'lhs': {'hg': {'a': '2/3', 'b': '2/5', 'c': '31/30'}},
    'rhs': {
        'hg': {'a': '1/3', 'b': '1/5', 'c': '31/30'},
        'arg': {'num': [0, 4, -4]},
    },
}


def test_backend_map():
    """
    API: BACKEND_MAP

    """
    assert set(BACKEND_MAP.keys()) == set(CHECK_MODES)
    assert BACKEND_MAP[CheckMode.SERIES] is CheckSeries
    assert BACKEND_MAP[CheckMode.NUMERIC] is CheckNumeric
    assert BACKEND_MAP[CheckMode.ODE] is CheckODE

    assert str(CheckSeries()) == 'series backend'


def test_check_base():
    """
    API: CheckBase() object

    """
    spec = IdentitySpec.from_dict(KUMMER)
    asset = HyperxAsset(order=12, precision_bits=96, tolerance='1e-10',
                        points=['1/7'])
    backend = CheckBase(asset=asset)
    assert backend.order(spec) == 12
    assert backend.precision(spec) == 96
    assert backend.tolerance(spec) == '1e-10'
    assert [str(p) for p in backend.points(spec)] == ['1/7']

    # Whatever the identity states takes precedence
    spec = IdentitySpec.from_dict(dict(KUMMER, check={
        'mode': 'numeric', 'order': 20, 'precision_bits': 128,
        'tolerance': '1e-30', 'points': ['1/9', '1/11']}))
    assert backend.order(spec) == 20
    assert backend.precision(spec) == 128
    assert backend.tolerance(spec) == '1e-30'
    assert len(backend.points(spec)) == 2

    # A default asset is used otherwise
    assert CheckBase().asset.order == 30

    with pytest.raises(NotImplementedError):
        CheckBase().check(spec)


def test_check_backends():
    """
    API: CheckSeries(), CheckNumeric() and CheckODE()

    """
    asset = HyperxAsset(order=10, precision_bits=96, points=['1/20'])
    spec = IdentitySpec.from_dict(KUMMER)

    report = CheckSeries(asset=asset).check(spec)
    assert report['pass'] is True
    assert report['details']['order'] == 10

    report = CheckNumeric(asset=asset).check(spec)
    assert report['pass'] is True
    assert report['details']['precision_bits'] == 96
    assert len(report['details']['points']) == 1

    # Both sides are the same function, so the equation of the left hand side
    # z(1 - z) F'' + (31/30 - (31/15) z) F' - (4/15) F = 0 holds for both
    ode = {'c2': [0, 1, -1], 'c1': ['31/30', '-31/15'], 'c0': ['-4/15']}
    spec = IdentitySpec.from_dict(dict(KUMMER, check={
        'mode': 'ode', 'ode': ode}))
    report = CheckODE(asset=asset).check(spec)
    assert report['mode'] == CheckMode.ODE
    assert report['pass'] is True
