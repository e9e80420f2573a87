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
Covolumes of orbifold signatures and the signatures a finite index
subgroup could possibly have.

Under a covering of degree m an elliptic point of order e splits into
orbits of sizes d_1, ..., d_s with every d_i dividing e and sum d_i = m;
an orbit of size d carries an elliptic point of order e/d (dropped when
e/d = 1) and contributes d - 1 to the total branch number.

"""
import itertools
from collections import namedtuple

from .common import InconsistencyError
from .common import ParameterError
from .forms import OrbSignature
from .logger import logger

# One way an elliptic point of order e can split
SplitChoice = namedtuple('SplitChoice', ('order', 'parts', 'orders'))


def covolume(sig):
    """
    2g - 2 + sum (1 - 1/e_j)

    """
    return OrbSignature.parse(sig).covolume()


def _partitions(total, parts, largest=None):
    """
    Partitions of total (non increasing) into the allowed parts.

    """
    if total == 0:
        yield ()
        return

    largest = total if largest is None else largest
    for part in parts:
        if part <= min(total, largest):
            for rest in _partitions(total - part, parts, part):
                yield (part, ) + rest


def split_choices(e, m):
    """
    All the ways an elliptic point of order e can lie under a covering of
    degree m.

    """
    if m < 1:
        raise ParameterError('The index must be a positive integer.')

    divisors = sorted((d for d in range(1, e + 1) if e % d == 0),
                      reverse=True)

    return [
        SplitChoice(
            order=e,
            parts=parts,
            orders=tuple(sorted(e // d for d in parts if e // d > 1)))
        for parts in _partitions(m, divisors)]


def total_branch_number(choices):
    """
    The total branch number sum (d_i - 1) of a combination of split
    choices.

    """
    return sum(d - 1 for choice in choices for d in choice.parts)


def subsignature_genus(parent, m, branch):
    """
    Solves 2g' - 2 = m(2g - 2) + B for g'.

    """
    doubled = m * (2 * parent.genus - 2) + branch + 2
    if doubled % 2 or doubled < 0:
        raise InconsistencyError(
            'A total branch number of {} is impossible for a covering of '
            'degree {} of {}.'.format(branch, m, parent))

    return doubled // 2


def enumerate_subsignatures(sig, m, positive_branch=False):
    """
    Every signature a subgroup of index m could have, sorted and without
    repetitions.

    """
    parent = OrbSignature.parse(sig)
    if m == 1:
        return [parent]

    per_point = [split_choices(e, m) for e in parent.orders]

    found = set()
    for combination in itertools.product(*per_point):
        branch = total_branch_number(combination)
        if branch % 2 or (positive_branch and branch == 0):
            continue

        try:
            genus = subsignature_genus(parent, m, branch)

        except InconsistencyError:
            continue

        orders = [e for choice in combination for e in choice.orders]
        found.add(OrbSignature(genus, sorted(orders)))

    logger.debug('{} admits {} index {} subsignatures'.format(
        parent, len(found), m))

    return sorted(found)


def intersect_feasible(first, second):
    """
    The signatures that appear in both lists.

    """
    second = set(OrbSignature.parse(s) for s in second)
    return sorted(set(
        s for s in (OrbSignature.parse(s) for s in first) if s in second))
