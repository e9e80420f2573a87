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

import click
import json
import mpmath
import os
import sys
from functools import wraps
from os.path import abspath
from os.path import dirname
from os.path import isfile
from os.path import join

from . import Hyperx
from . import HyperxAsset
from .HyperxAsset import PRECISION_ENV
from .algebra import format_scalar
from .algebra import parse_scalar
from .common import HyperxError
from .common import OutputFormat
from .common import OUTPUT_FORMATS
from .config.ConfigBase import ConfigBase
from .config.ConfigFile import ConfigFile
from .covers import solve_cover
from .forms import OrbSignature
from .forms import dim_Sk
from .hypergeom import HGParams
from .hypergeom import hg_eval
from .logger import attach_stream
from .logger import logger
from .schwarzian import EllipticPoint
from .schwarzian import MoebiusMap
from .schwarzian import build_Q
from .schwarzian import frobenius_pair
from .schwarzian import parse_location
from .signatures import enumerate_subsignatures
from .signatures import intersect_feasible

from . import __title__
from . import __version__
from . import __license__
from . import __copywrite__

# Defines our click context settings adding -h to the additional options that
# can be specified to get the help menu to come up
CONTEXT_SETTINGS = dict(help_option_names=['-h', '--help'])

# The numeric policy of the command line; the library takes these as
# arguments
DEFAULT_PRECISION_BITS = 256
DEFAULT_ORDER = 30
DEFAULT_TOLERANCE = '1e-30'

# Exit codes
EXIT_SUCCESS = 0
EXIT_FAILURE = 1
EXIT_INPUT_ERROR = 2

# The bundled identities
CORPUS_PATH = join(abspath(dirname(__file__)), 'corpus', 'identities')


def print_version_msg():
    """
    Prints version message when -V or --version is specified.

    """
    result = list()
    result.append('{} v{}'.format(__title__, __version__))
    result.append(__copywrite__)
    result.append(
        'This code is licensed under the {} License.'.format(__license__))
    click.echo('\n'.join(result))


def emit(payload, fmt, text):
    """
    Writes a result either as sorted JSON or through the text renderer.

    """
    if fmt == OutputFormat.JSON:
        click.echo(json.dumps(payload, indent=2, sort_keys=True))

    else:
        click.echo(text(payload))


def _report_line(report):
    line = '{}  {} ({})'.format(
        'PASS' if report['pass'] else 'FAIL', report['name'], report['mode'])

    details = report['details']
    if 'first_mismatch' in details:
        line += ': first mismatch at z^{}'.format(
            details['first_mismatch']['exponent'])

    elif 'max_residual' in details:
        line += ': max residual {}'.format(details['max_residual'])

    elif 'error' in details:
        line += ': {}'.format(details['error'])

    return line


def render_reports(payload):
    reports = payload['reports']
    if not reports:
        return '0 checks'

    lines = [_report_line(r) for r in reports]
    summary = payload['summary']
    lines.append('{} checks, {} passed, {} failed'.format(
        summary['checks'], summary['passed'], summary['failed']))
    return '\n'.join(lines)


def emit_report(reports, fmt=OutputFormat.TEXT):
    """
    Emits verification reports (sorted by name) and returns the exit code
    they call for.

    """
    reports = sorted(reports, key=lambda r: r['name'])
    passed = sum(1 for r in reports if r['pass'])
    payload = {
        'reports': reports,
        'summary': {
            'checks': len(reports),
            'passed': passed,
            'failed': len(reports) - passed,
        },
    }

    emit(payload, fmt, render_reports)
    return EXIT_SUCCESS if passed == len(reports) else EXIT_FAILURE


def input_errors(fn):
    """
    Maps library errors raised while reading or solving input to exit
    status 2.

    """
    @wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)

        except HyperxError as e:
            logger.error(str(e))
            click.echo('error: {}'.format(e), err=True)
            sys.exit(EXIT_INPUT_ERROR)

    return wrapper


def build_asset(prec, order, tolerance):
    """
    The asset of a command line run.  HX_PRECISION_BITS stands in for a
    missing --prec; an explicit precision without a tolerance gets the
    tolerance that precision implies.

    """
    asset = HyperxAsset.from_env(
        precision_bits=prec,
        order=order if order is not None else DEFAULT_ORDER,
        tolerance=tolerance)

    if prec is None and PRECISION_ENV not in os.environ:
        asset.precision_bits = DEFAULT_PRECISION_BITS
        if tolerance is None:
            asset.tolerance = DEFAULT_TOLERANCE

    return asset


def load_document(value):
    """
    Reads a document from a path, or parses the argument itself as JSON.

    """
    if isfile(value):
        source = ConfigFile(value)
        content = source.schwarzian()
        if content is None:
            raise HyperxError('Could not read {}'.format(value))

        return content

    content = ConfigBase.parse_json(value)
    if isinstance(content, list):
        content = {'points': content}

    return content


def load_schwarzian(value):
    content = load_document(value)
    try:
        points = [
            EllipticPoint(parse_location(p['location']), p['order'])
            for p in content['points']]
        symmetries = [
            MoebiusMap.from_dict(g) for g in content.get('symmetries', [])]

    except (KeyError, TypeError) as e:
        raise HyperxError('Malformed point list: {}'.format(e))

    return build_Q(points, symmetries)


fmt_option = click.option(
    '--format', '-f', 'fmt', default=OutputFormat.TEXT,
    type=click.Choice(OUTPUT_FORMATS),
    help='Specify the output format (default=text).')

prec_option = click.option(
    '--prec', '-p', default=None,
    type=click.IntRange(min=64), metavar='BITS',
    help='Working precision in bits (default={}).'.format(
        DEFAULT_PRECISION_BITS))

order_option = click.option(
    '--order', '-o', default=None, type=click.IntRange(min=4),
    help='Series order (default={}).'.format(DEFAULT_ORDER))


@click.group(context_settings=CONTEXT_SETTINGS, invoke_without_command=True)
@click.option('-v', '--verbose', count=True,
              help='Increase the verbosity (up to -vvvv).')
@click.option('-V', '--version', is_flag=True,
              help='Display the hyperx version and exit.')
@click.pass_context
def main(ctx, verbose, version):
    """
    Certify hypergeometric transformation identities, solve covering maps
    and compute automorphic form data.
    """
    # Note: Click ignores the return values of functions it wraps, If you
    #       want to return a specific error code, you must call sys.exit()
    #       as you will see below.

    handler = attach_stream(verbose)
    ctx.call_on_close(lambda: logger.removeHandler(handler))

    if version:
        print_version_msg()
        sys.exit(EXIT_SUCCESS)

    if ctx.invoked_subcommand is None:
        click.echo(ctx.get_help())
        sys.exit(EXIT_INPUT_ERROR)


def _verify(paths, prec, order, tolerance, fmt, workers):
    asset = build_asset(prec, order, tolerance)
    hx = Hyperx(asset=asset)
    for path in paths:
        if not hx.add(path):
            raise HyperxError('Could not load identities from {}'.format(
                path))

    hx.verify(workers=workers)
    sys.exit(emit_report(hx.reports, fmt))


@main.command(context_settings=CONTEXT_SETTINGS)
@prec_option
@order_option
@click.option('--tolerance', '-t', default=None, type=str,
              help='Numeric tolerance (default={}).'.format(
                  DEFAULT_TOLERANCE))
@click.option('--workers', '-w', default=1, type=click.IntRange(min=1),
              help='Verify this many identities at once.')
@fmt_option
@click.argument('paths', nargs=-1, metavar='SPEC [SPEC2 [DIR]]')
@input_errors
def verify(paths, prec, order, tolerance, workers, fmt):
    """
    Verify the identities held by the given documents and directories.
    """
    _verify(paths, prec, order, tolerance, fmt, workers)


@main.command(context_settings=CONTEXT_SETTINGS)
@click.option('--list', '-l', 'listing', is_flag=True,
              help='List the bundled identities instead of verifying them.')
@prec_option
@order_option
@click.option('--workers', '-w', default=1, type=click.IntRange(min=1))
@fmt_option
@input_errors
def corpus(listing, prec, order, workers, fmt):
    """
    Verify (or list) the bundled identity corpus.
    """
    if listing:
        hx = Hyperx(CORPUS_PATH)
        emit(hx.details()['identities'], fmt, lambda entries: '\n'.join(
            '{name} ({mode})'.format(**e) for e in entries))
        sys.exit(EXIT_SUCCESS)

    _verify([CORPUS_PATH], prec, order, None, fmt, workers)


@main.command(context_settings=CONTEXT_SETTINGS)
@click.option('--signature', '-s', required=True,
              help='The signature, for instance "0;4,6,6".')
@click.option('--weight', '-k', required=True, type=int)
@fmt_option
@input_errors
def dim(signature, weight, fmt):
    """
    Dimension of the space of automorphic forms of the given weight.
    """
    sig = OrbSignature.parse(signature)
    emit({
        'signature': sig.format(),
        'weight': weight,
        'dimension': dim_Sk(sig, weight),
    }, fmt, lambda p: str(p['dimension']))


@main.command(context_settings=CONTEXT_SETTINGS)
@click.option('--points', '-P', 'points', required=True,
              help='A point list document or inline JSON.')
@fmt_option
@input_errors
def schwarzian(points, fmt):
    """
    Solve for the residues of Q(t) from its elliptic points.
    """
    q = load_schwarzian(points)
    emit(q.to_dict(), fmt, lambda p: '\n'.join(
        'B({location}) = {residue}  (e = {order})'.format(**entry)
        for entry in p['points']))


@main.command(context_settings=CONTEXT_SETTINGS)
@click.option('--points', '-P', 'points', required=True,
              help='A point list document or inline JSON.')
@order_option
@fmt_option
@input_errors
def frobenius(points, order, fmt):
    """
    The two local solutions of f'' + Q f = 0 at t = 0.
    """
    q = load_schwarzian(points)
    pair = frobenius_pair(q, order if order is not None else DEFAULT_ORDER)

    payload = [{
        'exponent': format_scalar(f.offset),
        'coefficients': [format_scalar(c) for c in f.coeffs],
    } for f in pair]

    emit(payload, fmt, lambda p: '\n'.join(
        't^{}: {}'.format(entry['exponent'], ', '.join(
            entry['coefficients'])) for entry in p))


@main.command('cover-solve', context_settings=CONTEXT_SETTINGS)
@click.option('--max-degree', default=None, type=click.IntRange(min=1),
              help='Budget on the total degree of any eliminant.')
@fmt_option
@click.argument('path', metavar='PROBLEM')
@input_errors
def cover_solve(max_degree, fmt, path):
    """
    Solve a covering map ansatz.
    """
    problem = ConfigFile(path).cover_problem()
    if problem is None:
        raise HyperxError('Could not read {}'.format(path))

    solutions = solve_cover(
        problem, max_degree if max_degree is not None
        else HyperxAsset.max_elimination_degree)

    payload = {
        'name': problem.name,
        'solutions': [s.to_dict() for s in solutions],
    }

    def text(p):
        lines = ['{} solutions'.format(len(p['solutions']))]
        for s in p['solutions']:
            lines.append(', '.join(
                '{}={}'.format(k, v) for k, v in sorted(s['values'].items())))
            if 'parameters' in s:
                lines.append('  free: {}'.format(', '.join(s['parameters'])))
            for name, roots in sorted(s.get('derived', {}).items()):
                lines.append('  {}: {}'.format(name, ', '.join(roots)))
            if 'map' in s:
                lines.append('  map: {}'.format(s['map']))

        return '\n'.join(lines)

    emit(payload, fmt, text)


@main.command(context_settings=CONTEXT_SETTINGS)
@click.option('--parent', required=True,
              help='The parent signature, for instance "0;2,4,6,12".')
@click.option('--index', '-m', required=True, type=click.IntRange(min=1))
@click.option('--positive-branch', is_flag=True,
              help='Skip the unramified coverings.')
@click.option('--with-parent', default=None,
              help='Intersect with the subsignatures of a second parent.')
@click.option('--with-index', default=None, type=click.IntRange(min=1))
@fmt_option
@input_errors
def signatures(parent, index, positive_branch, with_parent, with_index,
               fmt):
    """
    Enumerate the signatures a subgroup of the given index could have.
    """
    found = enumerate_subsignatures(parent, index, positive_branch)
    if with_parent:
        found = intersect_feasible(found, enumerate_subsignatures(
            with_parent, with_index or index, positive_branch))

    emit([s.format() for s in found], fmt, lambda p: '\n'.join(
        '({})'.format(s) for s in p))


@main.command('eval', context_settings=CONTEXT_SETTINGS)
@click.option('--a', 'a', required=True)
@click.option('--b', 'b', required=True)
@click.option('--c', 'c', required=True)
@click.option('--z', 'z', required=True,
              help='The argument; exact scalars only.')
@prec_option
@fmt_option
@input_errors
def evaluate(a, b, c, z, prec, fmt):
    """
    Evaluate 2F1(a, b; c; z).
    """
    prec = build_asset(prec, None, None).precision_bits
    value = hg_eval(HGParams(a, b, c), parse_scalar(z), prec)
    digits = int(prec * 0.30103)

    emit({
        'params': HGParams(a, b, c).to_dict(),
        'z': z,
        'precision_bits': prec,
        'value': {
            'real': mpmath.nstr(value.real, digits),
            'imag': mpmath.nstr(value.imag, digits),
        },
    }, fmt, lambda p: mpmath.nstr(value.value, digits))


__all__ = ['main', 'emit_report']
