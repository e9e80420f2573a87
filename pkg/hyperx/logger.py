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

import sys
import logging

# A level below DEBUG for the per-term chatter of the series kernels and the
# individual elimination steps of the cover solver
logging.TRACE = logging.DEBUG - 1

# A level that is shown even when no verbosity was requested; used when an
# input document relies on a key we intend to retire
logging.DEPRECATE = logging.ERROR + 1

logging.addLevelName(logging.DEPRECATE, "DEPRECATION WARNING")
logging.addLevelName(logging.TRACE, "TRACE")

# Maps the number of -v switches to a log level; anything past the last
# entry is TRACE
VERBOSITY_LEVELS = (
    logging.ERROR,
    logging.WARNING,
    logging.INFO,
    logging.DEBUG,
)

# The format used by the command line handler
LOG_FORMAT = '%(asctime)s - %(levelname)s - %(message)s'


def trace(self, message, *args, **kwargs):
    """
    Verbose Debug Logging - Trace
    """
    if self.isEnabledFor(logging.TRACE):
        self._log(logging.TRACE, message, args, **kwargs)


def deprecate(self, message, *args, **kwargs):
    """
    Deprecation Warning Logging
    """
    if self.isEnabledFor(logging.DEPRECATE):
        self._log(logging.DEPRECATE, message, args, **kwargs)


logging.Logger.trace = trace
logging.Logger.deprecate = deprecate

# The package wide logger
logger = logging.getLogger('hyperx')


def verbosity_level(verbose):
    """
    Returns the logging level associated with a count of -v switches.

    """
    if verbose >= len(VERBOSITY_LEVELS):
        return logging.TRACE

    return VERBOSITY_LEVELS[max(0, verbose)]


def attach_stream(verbose=0, stream=None):
    """
    Sets the package log level from a verbosity count and attaches a stream
    handler (stdout by default).  The handler is returned so the caller
    may detach it again.

    """
    logger.setLevel(verbosity_level(verbose))

    handler = logging.StreamHandler(sys.stdout if stream is None else stream)
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    logger.addHandler(handler)
    return handler
