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


class CheckMode(object):
    """
    The certification backends an identity document can ask for.
    """
    # Exact comparison of both expansions as fractional power series
    SERIES = 'series'

    # High precision sampling at a handful of points near the origin
    NUMERIC = 'numeric'

    # Both sides annihilated by a shared second order operator
    ODE = 'ode'


CHECK_MODES = (
    CheckMode.SERIES,
    CheckMode.NUMERIC,
    CheckMode.ODE,
)


class FieldType(object):
    """
    The coefficient fields an identity or cover problem may be declared over.
    """
    RATIONAL = 'rational'
    QUADRATIC = 'quadratic'

    # Several quadratic fields side by side; only the numeric backend can
    # handle these since no single exact field contains every constant
    MULTIQUADRATIC = 'multiquadratic'


FIELD_TYPES = (
    FieldType.RATIONAL,
    FieldType.QUADRATIC,
    FieldType.MULTIQUADRATIC,
)


class Branch(object):
    """
    Which square root of d an exact quadratic value is sent to.
    """
    PRINCIPAL = 'principal'
    CONJUGATE = 'conjugate'


BRANCHES = (
    Branch.PRINCIPAL,
    Branch.CONJUGATE,
)


class Fiber(object):
    """
    The three fibers a Belyi function is allowed to branch over.
    """
    ZERO = '0'
    ONE = '1'
    INFINITY = 'oo'


FIBERS = (
    Fiber.ZERO,
    Fiber.ONE,
    Fiber.INFINITY,
)


class OutputFormat(object):
    """
    Report formats supported by the command line tool.
    """
    TEXT = 'text'
    JSON = 'json'


OUTPUT_FORMATS = (
    OutputFormat.TEXT,
    OutputFormat.JSON,
)


class DocumentFormat(object):
    """
    Formats our input documents (identities, cover problems and point
    lists) may be written in.
    """
    JSON = 'json'
    YAML = 'yaml'


DOCUMENT_FORMATS = (
    DocumentFormat.JSON,
    DocumentFormat.YAML,
)


class HyperxError(Exception):
    """
    Base class of every error raised by the library.
    """


class ParameterError(HyperxError, ValueError):
    """
    An argument lies outside the range an operation is defined for.
    """


class DomainError(HyperxError, ValueError):
    """
    A value can not be computed at the requested point (outside every
    convergence region, branch cut crossing, 0 raised to a nonpositive
    power).
    """


class PoleError(DomainError):
    """
    A rational function has a pole where it must be expanded.
    """


class FieldError(HyperxError, TypeError):
    """
    Scalars from incompatible fields were combined.
    """


class SymmetryError(HyperxError):
    """
    The residues of a Schwarzian could not be pinned down.
    """


class UnderdeterminedError(SymmetryError):
    """
    More symmetry is needed; free holds the residues left undetermined.
    """
    def __init__(self, message, free=None):
        super(UnderdeterminedError, self).__init__(message)
        self.free = list(free or [])


class ContradictionError(SymmetryError):
    """
    The imposed relations admit no solution at all.
    """


class ResonanceError(HyperxError):
    """
    The Frobenius recursion hit a vanishing indicial factor.
    """


class InconsistencyError(HyperxError):
    """
    Branch data violates the Riemann-Hurwitz formula.
    """


class CoverResourceError(HyperxError):
    """
    The elimination grew past the configured degree budget.
    """


class SpecError(HyperxError, ValueError):
    """
    An input document is malformed.  line and column are set when the
    parser could locate the problem.
    """
    def __init__(self, message, line=None, column=None):
        if line is not None:
            message = '{} (line {}, column {})'.format(message, line, column)

        super(SpecError, self).__init__(message)
        self.line = line
        self.column = column
