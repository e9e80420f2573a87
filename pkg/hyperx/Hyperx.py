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
from multiprocessing.pool import ThreadPool

from .HyperxAsset import HyperxAsset
from .common import HyperxError
from .config.ConfigBase import ConfigBase
from .config.ConfigFile import ConfigFile
from .logger import logger
from .utils import find_documents
from .verify import IdentitySpec
from .verify import make_report
from .verify import verify_spec


class Hyperx(object):
    """
    Our Verification Manager

    """
    def __init__(self, specs=None, asset=None):
        """
        Loads a set of identities (objects, dictionaries, or paths to
        documents and directories of documents) sharing one asset.

        If no asset is provided, then the default asset is used.

        """

        # The identities to verify
        self.specs = list()

        self.asset = \
            asset if isinstance(asset, HyperxAsset) else HyperxAsset()

        # The last set of reports produced by verify()
        self.reports = list()

        if specs:
            self.add(specs)

    def add(self, specs):
        """
        Adds one or more identities.  Strings are treated as paths; a
        directory contributes every document it holds.

        Returns False if anything could not be loaded.  Malformed documents
        raise a SpecError.
        """

        # Initialize our return status
        return_status = True

        if isinstance(specs, (six.string_types, dict, IdentitySpec,
                              ConfigBase)):
            specs = [specs]

        elif not isinstance(specs, (tuple, set, list)):
            logger.error(
                "An invalid identity (type={}) was specified.".format(
                    type(specs)))
            return False

        for entry in specs:
            if isinstance(entry, IdentitySpec):
                self.specs.append(entry)
                continue

            elif isinstance(entry, dict):
                self.specs.append(IdentitySpec.from_dict(entry))
                continue

            elif isinstance(entry, ConfigBase):
                sources = [entry]

            elif isinstance(entry, six.string_types):
                sources = [
                    ConfigFile(path, asset=self.asset)
                    for path in find_documents(entry)]

            else:
                logger.error(
                    "An invalid identity (type={}) was specified.".format(
                        type(entry)))
                return_status = False
                continue

            for source in sources:
                loaded = source.identities()
                if not loaded:
                    logger.warning('No identities were loaded from {}'.format(
                        source.url()))
                    return_status = False
                    continue

                logger.info('Loaded {} identities from {}'.format(
                    len(loaded), source.url()))
                self.specs.extend(loaded)

        return return_status

    def clear(self):
        """
        Empties our identity list

        """
        self.specs[:] = []
        self.reports[:] = []

    def _check(self, spec):
        try:
            return verify_spec(spec, asset=self.asset)

        except HyperxError as e:
            # an identity that can not be evaluated is a failed check
            logger.warning('{} could not be verified: {}'.format(
                spec.name, e))
            return make_report(
                spec, spec.check.mode, False, {'error': str(e)})

    def verify(self, workers=1):
        """
        Verifies every identity; the reports are kept (sorted by name) in
        self.reports.  Returns True only if every check passed and there
        was at least one.

        """
        ordered = sorted(self.specs, key=lambda s: s.name)
        if workers > 1 and len(ordered) > 1:
            pool = ThreadPool(min(workers, len(ordered)))
            try:
                reports = pool.map(self._check, ordered)

            finally:
                pool.close()
                pool.join()

        else:
            reports = [self._check(spec) for spec in ordered]

        self.reports = sorted(reports, key=lambda r: r['name'])
        for report in self.reports:
            logger.info('{}: {}'.format(
                report['name'], 'pass' if report['pass'] else 'FAIL'))

        return len(self.reports) > 0 and all(
            r['pass'] for r in self.reports)

    def details(self):
        """
        Returns the settings and the loaded identities.

        """
        return {
            'asset': self.asset.details(),
            'identities': [
                {'name': s.name, 'mode': s.check.mode}
                for s in sorted(self.specs, key=lambda s: s.name)],
        }

    def __getitem__(self, index):
        return self.specs[index]

    def __iter__(self):
        return iter(self.specs)

    def __len__(self):
        """
        Returns the number of identities loaded

        """
        return len(self.specs)
