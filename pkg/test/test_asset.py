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
from fractions import Fraction

from hyperx import HyperxAsset
from hyperx.common import ParameterError
from hyperx.utils import environ

# Disable logging for a cleaner testing output
import logging
logging.disable(logging.CRITICAL)


def test_hyperx_asset_defaults():
    """
    API: HyperxAsset() defaults

    """
    a = HyperxAsset()
    assert a.precision_bits == 256
    assert a.order == 30
    assert a.tolerance is None
    assert a.points[0] == Fraction(1, 16)
    assert len(a.points) == 5
    assert a.max_buffer_size == 131072
    assert a.max_elimination_degree == 400

    details = a.details()
    assert details['app_id'] == 'hyperx'
    assert details['points'] == ['1/16', '1/10', '1/8', '3/32', '1/12']
    assert details['precision_bits'] == 256


def test_hyperx_asset_overrides():
    """
    API: HyperxAsset() overrides

    """
    a = HyperxAsset(
        precision_bits='128', order=8, tolerance='1e-20',
        points=['1/20', '1/5'], max_buffer_size=0,
        max_elimination_degree=50)

    assert a.precision_bits == 128
    assert a.order == 8
    assert a.tolerance == '1e-20'
    assert a.points == (Fraction(1, 20), Fraction(1, 5))
    assert a.max_buffer_size == 0
    assert a.max_elimination_degree == 50

    # The class defaults are left alone
    assert HyperxAsset().order == 30

    for kwargs in ({'precision_bits': 32}, {'order': 2},
                   {'points': [0.5]}):
        try:
            HyperxAsset(**kwargs)
            # We should never reach here
            assert(False)

        except ParameterError:
            # Expected
            assert(True)


def test_hyperx_asset_environment():
    """
    API: HyperxAsset.from_env()

    """
    with environ(HX_PRECISION_BITS='512'):
        assert HyperxAsset.from_env().precision_bits == 512

        # An explicit precision wins
        assert HyperxAsset.from_env(precision_bits=96).precision_bits == 96

    with environ('HX_PRECISION_BITS'):
        assert HyperxAsset.from_env(order=12).precision_bits == 256

    # Garbage is ignored
    with environ(HX_PRECISION_BITS='lots'):
        assert HyperxAsset.from_env().precision_bits == 256

    with environ(HX_PRECISION_BITS='16'):
        try:
            HyperxAsset.from_env()
            # We should never reach here
            assert(False)

        except ParameterError:
            # Expected
            assert(True)
