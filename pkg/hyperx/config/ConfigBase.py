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
import json
import six
import yaml

from ..HyperxAsset import HyperxAsset
from ..common import DocumentFormat
from ..common import DOCUMENT_FORMATS
from ..common import SpecError
from ..covers import CoverProblem
from ..logger import logger
from ..verify import IdentitySpec


class ConfigBase(object):
    """
    This is the base class for all document sources
    """

    # The Default Encoding to use if not otherwise detected
    encoding = 'utf-8'

    # The default expected document format unless otherwise detected by the
    # sub-modules
    default_document_format = DocumentFormat.JSON

    # This is only set if the caller enforces a format; it should always
    # initialize itself as None
    document_format = None

    # Use the package logger
    logger = logger

    def __init__(self, asset=None, **kwargs):
        """
        Initialize the settings every document source shares.

        """
        self.asset = asset if isinstance(asset, HyperxAsset) \
            else HyperxAsset()

        # Don't read more than the asset allows
        self.max_buffer_size = self.asset.max_buffer_size

        # Tracks previously parsed content
        self._cached = None

        if 'encoding' in kwargs:
            # Store the encoding
            self.encoding = kwargs.get('encoding')

        if kwargs.get('format'):
            # Store the enforced document format
            self.document_format = kwargs.get('format').lower()

            if self.document_format not in DOCUMENT_FORMATS:
                # Simple error checking
                err = 'An invalid document format ({}) was specified.'.format(
                    self.document_format)
                self.logger.warning(err)
                raise TypeError(err)

    def read(self):
        """
        This object should be implimented by the child classes; returns the
        raw content or None if it could not be retrieved.

        """
        return None

    def content(self, cache=True):
        """
        Returns the parsed document (a dict or a list) or None when it could
        not be read.  Malformed content raises a SpecError.

        """
        if cache is True and self._cached is not None:
            return self._cached

        raw = self.read()
        if not isinstance(raw, six.string_types):
            # Nothing more to do
            return None

        document_format = \
            self.default_document_format \
            if self.document_format is None else self.document_format

        # Dynamically load our parse_ function based on our format
        fn = getattr(ConfigBase, 'parse_{}'.format(document_format))
        self._cached = fn(raw)
        return self._cached

    def identities(self):
        """
        Every IdentitySpec the document holds.  A document may hold a single
        identity, a list of them, or a mapping with an "identities" list.

        """
        content = self.content()
        if content is None:
            return []

        if isinstance(content, dict) and 'identities' in content:
            content = content['identities']

        if isinstance(content, dict):
            content = [content]

        if not isinstance(content, list):
            raise SpecError('An identity document must hold a mapping or a '
                            'list of mappings.')

        return [IdentitySpec.from_dict(entry) for entry in content]

    def cover_problem(self):
        content = self.content()
        if content is None:
            return None

        if not isinstance(content, dict):
            raise SpecError('A cover problem must be a mapping.')

        return CoverProblem.from_dict(content)

    def schwarzian(self):
        """
        The point list of a Schwarzian document, with any symmetries.  The
        solved residues are not part of the input.

        """
        content = self.content()
        if content is None:
            return None

        if isinstance(content, list):
            content = {'points': content}

        if not isinstance(content, dict) or 'points' not in content:
            raise SpecError('A Schwarzian document must list its points.')

        return content

    @staticmethod
    def parse_json(content):
        """
        Parses JSON content; errors carry the line and column.

        """
        try:
            return json.loads(content)

        except ValueError as e:
            raise SpecError(
                'Invalid JSON document: {}'.format(
                    getattr(e, 'msg', str(e))),
                line=getattr(e, 'lineno', None),
                column=getattr(e, 'colno', None))

    @staticmethod
    def parse_yaml(content):
        """
        Parses YAML content (safely).

        """
        try:
            return yaml.load(content, Loader=yaml.SafeLoader)

        except yaml.error.MarkedYAMLError as e:
            mark = e.problem_mark
            ConfigBase.logger.debug(
                'YAML Exception:{}{}'.format(os.linesep, e))
            raise SpecError(
                'Invalid YAML document: {}'.format(e.problem),
                line=mark.line + 1 if mark else None,
                column=mark.column + 1 if mark else None)

        except yaml.error.YAMLError as e:
            raise SpecError('Invalid YAML document: {}'.format(e))

    def __str__(self):
        return '{}({})'.format(self.__class__.__name__, self.url())

    def url(self):
        return ''

