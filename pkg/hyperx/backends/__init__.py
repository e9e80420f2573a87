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

import six
import re

from os import listdir
from os.path import dirname
from os.path import abspath

# CheckBase object is passed in as a module not class
from . import CheckBase

from ..common import CheckMode
from ..common import CHECK_MODES
from ..logger import logger

# Maintains a mapping of every check mode to the backend handling it
BACKEND_MAP = {}

__all__ = [
    # Reference
    'CheckMode', 'CHECK_MODES', 'CheckBase',
]

# we mirror our base purely for the ability to reset everything; this
# is generally only used in testing
MODULE_MAP = {}


# Load our Lookup Matrix
def __load_matrix(path=abspath(dirname(__file__)), name='hyperx.backends'):
    """
    Dynamically load our backend map; a backend whose dependencies are not
    installed is simply skipped.

    """
    # Used for the detection of additional Check backends
    module_re = re.compile(r'^(?P<name>Check[a-z0-9]+)(\.py)?$', re.I)

    for f in listdir(path):
        match = module_re.match(f)
        if not match:
            # keep going
            continue

        backend_name = match.group('name')
        if backend_name == 'CheckBase':
            continue

        try:
            module = __import__(
                '{}.{}'.format(name, backend_name),
                globals(), locals(),
                fromlist=[backend_name])

        except ImportError as e:
            logger.debug('Backend {} is unavailable: {}'.format(
                backend_name, e))
            continue

        if not hasattr(module, backend_name):
            # The class must bear the same name as the file itself
            continue

        backend = getattr(module, backend_name)
        mode = getattr(backend, 'mode', None)
        if not isinstance(mode, six.string_types):
            # Filter out modules that are not check backends
            continue

        elif backend_name in MODULE_MAP:
            # we're already handling this object
            continue

        MODULE_MAP[backend_name] = {
            'backend': backend,
            'module': module,
        }

        __all__.append(backend_name)

        # Load our module into memory so it's accessible to all
        globals()[backend_name] = backend

        if mode not in BACKEND_MAP:
            BACKEND_MAP[mode] = backend

    return BACKEND_MAP


# Reset our Lookup Matrix
def __reset_matrix():
    """
    Restores the Lookup matrix to it's base setting. This is only used through
    testing and should not be directly called.
    """

    BACKEND_MAP.clear()

    for backend_name in MODULE_MAP.keys():
        del globals()[backend_name]
        __all__.remove(backend_name)

    MODULE_MAP.clear()


# Dynamically build our backend map
__load_matrix()
