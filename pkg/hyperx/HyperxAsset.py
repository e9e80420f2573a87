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

import os
from fractions import Fraction

from .algebra import GUARD_BITS
from .algebra import MIN_PRECISION_BITS
from .algebra import format_scalar
from .algebra import parse_scalar
from .common import ParameterError
from .utils import parse_int

# The environment variable overriding the default working precision
PRECISION_ENV = 'HX_PRECISION_BITS'


class HyperxAsset(object):
    """
    Provides the settings a verification run falls back on whenever an
    identity or the caller leaves one unset.

    """
    # Application Identifier
    app_id = 'hyperx'

    # Application Description
    app_desc = 'Hypergeometric transformation toolkit'

    # Working precision in bits of every numeric check
    precision_bits = 256

    # Series order of every exact check
    order = 30

    # The numeric tolerance; None stands for 2^(-precision_bits/2)
    tolerance = None

    # Extra bits carried on top of the working precision
    guard_bits = GUARD_BITS

    # Sample points of the numeric checks
    points = (
        Fraction(1, 16),
        Fraction(1, 10),
        Fraction(1, 8),
        Fraction(3, 32),
        Fraction(1, 12),
    )

    # Don't read more than this from a single document (128KB)
    max_buffer_size = 131072

    # The largest total degree an eliminant of the cover solver may reach
    max_elimination_degree = 400

    def __init__(self, precision_bits=None, order=None, tolerance=None,
                 points=None, max_buffer_size=None,
                 max_elimination_degree=None):
        """
        Asset Initialization

        """
        if precision_bits is not None:
            self.precision_bits = int(precision_bits)

        if self.precision_bits < MIN_PRECISION_BITS:
            raise ParameterError(
                'A precision of at least {} bits is required.'.format(
                    MIN_PRECISION_BITS))

        if order is not None:
            self.order = int(order)

        if self.order < 4:
            raise ParameterError('The series order must be at least 4.')

        if tolerance is not None:
            self.tolerance = str(tolerance)

        if points is not None:
            self.points = tuple(parse_scalar(p) for p in points)

        if max_buffer_size is not None:
            self.max_buffer_size = int(max_buffer_size)

        if max_elimination_degree is not None:
            self.max_elimination_degree = int(max_elimination_degree)

    @classmethod
    def from_env(cls, **kwargs):
        """
        Builds an asset honouring HX_PRECISION_BITS unless the caller passes
        an explicit precision.

        """
        if kwargs.get('precision_bits') is None:
            kwargs['precision_bits'] = parse_int(
                os.environ.get(PRECISION_ENV), default=None)

        return cls(**kwargs)

    def details(self):
        """
        Returns the details associated with the HyperxAsset object

        """
        return {
            'app_id': self.app_id,
            'app_desc': self.app_desc,
            'precision_bits': self.precision_bits,
            'order': self.order,
            'tolerance': self.tolerance,
            'guard_bits': self.guard_bits,
            'points': [format_scalar(p) for p in self.points],
            'max_buffer_size': self.max_buffer_size,
            'max_elimination_degree': self.max_elimination_degree,
        }
