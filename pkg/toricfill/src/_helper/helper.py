"""
Helper functions
=======================================

Exact-number coercion, JSON encoding of exact values and logging setup shared
by every toricfill module.
"""

import logging
import numbers
from fractions import Fraction

import numpy

logger = logging.getLogger(__name__)

#: Logger name configured by :func:`configure_logging`.
PACKAGE_LOGGER = 'toricfill'


def as_int(value, name='value'):
    """
    Coerce an integral value to a Python int (arbitrary precision).

    :param value: int, numpy integer or integral Fraction
    :param name: name used in the error message
    :type name: string
    :return: the value as int
    :rtype: int
    """
    if isinstance(value, bool):
        raise TypeError(name + ' must be an integer, not bool')
    if isinstance(value, numbers.Integral):
        return int(value)
    if isinstance(value, Fraction) and value.denominator == 1:
        return int(value.numerator)
    raise TypeError(name + ' must be an integer, got %r' % (value, ))


def as_fraction(value):
    """
    Coerce an exact number (int or Fraction) to Fraction.

    Floats are refused: a float shadow of an exact quantity is never accepted.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, numbers.Integral) and not isinstance(value, bool):
        return Fraction(int(value))
    if isinstance(value, numbers.Rational):
        return Fraction(int(value.numerator), int(value.denominator))
    raise TypeError('expected an exact rational, got %r' % (value, ))


def object_matrix(rows, convert=as_int):
    """
    Build a 2D numpy array of dtype=object holding exact Python numbers.

    :param rows: nested sequence, shape (r, c)
    :param convert: per-entry converter (as_int or as_fraction)
    :return: numpy.ndarray with dtype object
    """
    rows = [[convert(x) for x in row] for row in rows]
    ncols = len(rows[0]) if rows else 0
    out = numpy.empty((len(rows), ncols), dtype=object)
    for i, row in enumerate(rows):
        if len(row) != ncols:
            raise TypeError('ragged matrix rows')
        for j, x in enumerate(row):
            out[i, j] = x
    return out


def fraction_to_json(q):
    """Serialize a Fraction as {"num": ..., "den": ...}."""
    q = as_fraction(q)
    return {'num': q.numerator, 'den': q.denominator}


def exact(obj):
    """
    Recursively convert a result into JSON-ready exact values.

    Fractions become {"num", "den"} pairs, integral numpy scalars become int,
    numpy object arrays become nested lists and objects exposing as_dict()
    are expanded. Dict key order is preserved.
    """
    if obj is None or isinstance(obj, (bool, str)):
        return obj
    if isinstance(obj, Fraction):
        return fraction_to_json(obj)
    if isinstance(obj, numbers.Integral):
        return int(obj)
    if isinstance(obj, numpy.ndarray):
        return [exact(x) for x in obj.tolist()]
    if isinstance(obj, dict):
        return dict((str(k), exact(v)) for k, v in obj.items())
    if isinstance(obj, (list, tuple)):
        return [exact(x) for x in obj]
    if hasattr(obj, 'as_dict'):
        return exact(obj.as_dict())
    raise TypeError('cannot serialize %r exactly' % (obj, ))


def configure_logging(verbosity=0, stream=None):
    """
    Attach one stderr handler to the package logger.

    :param verbosity: 0 = warnings only, 1 = INFO, 2 or more = DEBUG
    :type verbosity: int
    :return: the package logger
    """
    if verbosity >= 2:
        level = logging.DEBUG
    elif verbosity == 1:
        level = logging.INFO
    else:
        level = logging.WARNING
    root = logging.getLogger(PACKAGE_LOGGER)
    for handler in list(root.handlers):
        if getattr(handler, '_toricfill', False):
            root.removeHandler(handler)
    handler = logging.StreamHandler(stream)
    handler.setFormatter(logging.Formatter('%(levelname)s %(name)s: %(message)s'))
    handler._toricfill = True
    root.addHandler(handler)
    root.setLevel(level)
    return root
