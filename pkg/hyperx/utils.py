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

import re
import six
import contextlib
import os
from os.path import expanduser
from os.path import isdir
from os.path import isfile
from os.path import join

# The documents we pick up when scanning a directory
DOCUMENT_RE = re.compile(r'^.+\.(json|ya?ml)$', re.I)


def parse_int(arg, default=None):
    """
    Returns arg as an integer, or the default when it can not be read as
    one.

    """
    if isinstance(arg, bool):
        return default

    if isinstance(arg, six.integer_types):
        return arg

    try:
        return int(arg.strip())

    except (AttributeError, ValueError):
        return default


def find_documents(*paths):
    """
    Expands files and directories into the sorted list of document paths
    they hold; directories are scanned one level deep for .json, .yml and
    .yaml files.

    """
    found = set()
    for path in paths:
        path = expanduser(path)
        if isdir(path):
            for name in os.listdir(path):
                full = join(path, name)
                if DOCUMENT_RE.match(name) and isfile(full):
                    found.add(full)

        else:
            found.add(path)

    return sorted(found)


@contextlib.contextmanager
def environ(*remove, **update):
    """
    Temporarily updates the ``os.environ`` dictionary in-place.

    :param remove: Environment variable(s) to remove.
    :param update: Dictionary of environment variables and values to
                   add/update.
    """

    # Create a backup of our environment for restoration purposes
    env_orig = os.environ.copy()

    try:
        os.environ.update(update)
        [os.environ.pop(k, None) for k in remove]
        yield

    finally:
        # Restore our snapshot
        os.environ.clear()
        os.environ.update(env_orig)
