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

__title__ = 'hyperx'
__version__ = '0.1.0'
__author__ = 'The hyperx developers'
__license__ = 'MIT'
__copywrite__ = 'Copyright (C) 2024 The hyperx developers'
__status__ = 'Beta'

from .common import CheckMode
from .common import CHECK_MODES
from .common import FieldType
from .common import FIELD_TYPES
from .common import Branch
from .common import BRANCHES
from .common import Fiber
from .common import FIBERS
from .common import OutputFormat
from .common import OUTPUT_FORMATS
from .common import DocumentFormat
from .common import DOCUMENT_FORMATS

from .common import HyperxError
from .common import ParameterError
from .common import DomainError
from .common import PoleError
from .common import FieldError
from .common import SymmetryError
from .common import UnderdeterminedError
from .common import ContradictionError
from .common import ResonanceError
from .common import InconsistencyError
from .common import CoverResourceError
from .common import SpecError

from .algebra import QuadExt
from .algebra import ComplexApprox
from .algebra import Poly
from .algebra import RationalFunction
from .algebra import FracSeries
from .hypergeom import HGParams
from .hypergeom import hg_series
from .hypergeom import hg_eval
from .schwarzian import SchwarzianQ
from .schwarzian import MoebiusMap
from .schwarzian import build_Q
from .forms import OrbSignature
from .forms import dim_Sk
from .covers import CoverProblem
from .covers import solve_cover
from .signatures import enumerate_subsignatures
from .verify import IdentitySpec

from .config.ConfigBase import ConfigBase
from .config.ConfigFile import ConfigFile
from .backends.CheckBase import CheckBase

from .Hyperx import Hyperx
from .HyperxAsset import HyperxAsset

# Set default logging handler to avoid "No handler found" warnings.
import logging
from logging import NullHandler
logging.getLogger(__name__).addHandler(NullHandler())

__all__ = [
    # Core
    'Hyperx', 'HyperxAsset', 'ConfigBase', 'ConfigFile', 'CheckBase',

    # Algebra
    'QuadExt', 'ComplexApprox', 'Poly', 'RationalFunction', 'FracSeries',
    'HGParams', 'hg_series', 'hg_eval', 'SchwarzianQ', 'MoebiusMap',
    'build_Q', 'OrbSignature', 'dim_Sk', 'CoverProblem', 'solve_cover',
    'enumerate_subsignatures', 'IdentitySpec',

    # Errors
    'HyperxError', 'ParameterError', 'DomainError', 'PoleError',
    'FieldError', 'SymmetryError', 'UnderdeterminedError',
    'ContradictionError', 'ResonanceError', 'InconsistencyError',
    'CoverResourceError', 'SpecError',

    # Reference
    'CheckMode', 'FieldType', 'Branch', 'Fiber', 'OutputFormat',
    'DocumentFormat', 'CHECK_MODES', 'FIELD_TYPES', 'BRANCHES', 'FIBERS',
    'OUTPUT_FORMATS', 'DOCUMENT_FORMATS',
]
