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

from ..HyperxAsset import HyperxAsset
from ..logger import logger


class CheckBase(object):
    """
    This is the base class for all certification backends
    """

    # The check mode this backend answers to; set by every subclass
    mode = None

    # Use the package logger
    logger = logger

    def __init__(self, asset=None, **kwargs):
        """
        Stores the asset whose settings fill in whatever an identity leaves
        unset.

        """
        self.asset = asset if isinstance(asset, HyperxAsset) \
            else HyperxAsset()

    def order(self, spec):
        """
        The series order the identity asks for (or our default).

        """
        return spec.check.order \
            if spec.check.order is not None else self.asset.order

    def precision(self, spec):
        return spec.check.precision_bits \
            if spec.check.precision_bits is not None \
            else self.asset.precision_bits

    def tolerance(self, spec):
        """
        None stands for 2^(-precision/2).

        """
        return spec.check.tolerance \
            if spec.check.tolerance is not None else self.asset.tolerance

    def points(self, spec):
        return spec.check.points \
            if spec.check.points is not None else self.asset.points

    def check(self, spec):
        """
        Should preform the actual check and return a report; implemented
        by the child classes.

        """
        raise NotImplementedError(
            "check() is not implimented by the child class.")

    def __str__(self):
        return '{} backend'.format(self.mode)
