"""
Integral symmetric forms
=======================================

Congruence invariants of intersection forms and a bounded search for an
explicit congruence Q1 = P Q2 P^T with P in GL(n, Z).
"""

from __future__ import absolute_import

import itertools
import logging
import warnings
from dataclasses import dataclass
from fractions import Fraction

import numpy
import sympy

from ..src._helper.helper import as_fraction, as_int, object_matrix
from ..src._helper.exceptions import DimensionMismatch

logger = logging.getLogger(__name__)

#: Entry bound used by the CLI when --bound is not given.
DEFAULT_BOUND = 1

EVEN = 'even'
ODD = 'odd'


def _matrix(form):
    if hasattr(form, 'matrix'):
        form = form.matrix
    m = object_matrix(form, as_int)
    if m.shape[0] != m.shape[1]:
        raise TypeError('a form is a square matrix')
    return m


@dataclass(frozen=True)
class FormInvariants:
    """
    Congruence invariants of a symmetric integer matrix.

    :ivar signature: (n_plus, n_minus, n_zero)
    :ivar parity: 'even' iff every diagonal entry is even
    """
    determinant: int
    rank: int
    signature: tuple
    parity: str

    def as_dict(self):
        return {'determinant': self.determinant,
                'rank': self.rank,
                'signature': list(self.signature),
                'parity': self.parity}


def diagonalize(form):
    """
    Exact congruence diagonalization over the rationals.

    :param form: IntersectionForm or square nested sequence of integers
    :return: diagonal entries D with Q congruent over Q to diag(D)
    :rtype: list of Fraction
    """
    a = _matrix(form)
    n = a.shape[0]
    a = numpy.array([[as_fraction(x) for x in row] for row in a.tolist()],
                    dtype=object).reshape(n, n)
    for i in range(n):
        if a[i, i] == 0:
            swap = next((j for j in range(i + 1, n) if a[j, j] != 0), None)
            if swap is not None:
                a[[i, swap], :] = a[[swap, i], :]
                a[:, [i, swap]] = a[:, [swap, i]]
            else:
                partner = next((j for j in range(i + 1, n) if a[i, j] != 0),
                               None)
                if partner is None:
                    continue
                # both diagonals vanish, so a[i, i] becomes 2 a[i, partner]
                a[i, :] = a[i, :] + a[partner, :]
                a[:, i] = a[:, i] + a[:, partner]
        pivot = a[i, i]
        for j in range(i + 1, n):
            if a[j, i] == 0:
                continue
            f = a[j, i] / pivot
            a[j, :] = a[j, :] - f * a[i, :]
            a[:, j] = a[:, j] - f * a[:, i]
    return [a[i, i] for i in range(n)]


def form_invariants(form):
    """
    Determinant (Bareiss), rank and signature (rational diagonalization)
    and parity of a form.

    :rtype: FormInvariants
    """
    a = _matrix(form)
    n = a.shape[0]
    det = int(sympy.Matrix(a.tolist()).det(method='bareiss')) if n else 1
    diag = diagonalize(a)
    n_plus = sum(1 for d in diag if d > 0)
    n_minus = sum(1 for d in diag if d < 0)
    n_zero = n - n_plus - n_minus
    parity = EVEN if all(a[i, i] % 2 == 0 for i in range(n)) else ODD
    return FormInvariants(det, n_plus + n_minus, (n_plus, n_minus, n_zero),
                          parity)


def separating_invariant(form1, form2):
    """
    First invariant among dimension, parity, rank, signature and determinant
    on which two forms differ, or None.

    A returned name proves the forms are not congruent over Z.
    """
    a, b = _matrix(form1), _matrix(form2)
    if a.shape != b.shape:
        return 'dimension'
    inv1, inv2 = form_invariants(a), form_invariants(b)
    for name in ('parity', 'rank', 'signature', 'determinant'):
        if getattr(inv1, name) != getattr(inv2, name):
            return name
    return None


def congruent_within_bound(form1, form2, bound=DEFAULT_BOUND, verbosity=0):
    """
    Search P in GL(n, Z) with entries in [-bound, bound] and Q1 = P Q2 P^T.

    Equal forms short-circuit to the identity. Otherwise rows of P are
    chosen one at a time in lexicographic order, keeping only rows
    consistent with the entries of Q1 already fixed, so the witness is the
    lexicographically first one (rows read in order).

    :param form1: Q1
    :param form2: Q2
    :param bound: entry bound B >= 0
    :param verbosity: 0 quiet, 1 logs the outcome at INFO level
    :type bound: int
    :return: witness P, or None when no P within the bound exists
    :rtype: numpy.ndarray (dtype=object) or None
    :raises DimensionMismatch: for forms of different sizes
    """
    q1, q2 = _matrix(form1), _matrix(form2)
    bound = as_int(bound, 'bound')
    if bound < 0:
        raise TypeError('bound must be non-negative')
    if q1.shape != q2.shape:
        raise DimensionMismatch('cannot compare a %dx%d form with a %dx%d form'
                                % (q1.shape + q2.shape))
    n = q1.shape[0]
    level = logging.INFO if verbosity > 0 else logging.DEBUG
    if q1.tolist() == q2.tolist():
        return object_matrix(numpy.eye(n, dtype=int).tolist())
    separated = separating_invariant(q1, q2)
    if separated is not None:
        logger.log(level, 'forms differ in %s; no congruence exists', separated)
        return None

    candidates = []
    for entries in itertools.product(range(-bound, bound + 1), repeat=n):
        if not any(entries):
            continue
        v = numpy.array(entries, dtype=object)
        w = q2.dot(v)
        candidates.append((v, w, v.dot(w)))

    rows = []

    def extend(i):
        if i == n:
            p = object_matrix([list(v) for v, w in rows])
            det = int(sympy.Matrix(p.tolist()).det(method='bareiss'))
            return p if abs(det) == 1 else None
        for v, w, norm in candidates:
            if norm != q1[i, i]:
                continue
            if any(w.dot(rows[j][0]) != q1[i, j] for j in range(i)):
                continue
            rows.append((v, w))
            found = extend(i + 1)
            if found is not None:
                return found
            rows.pop()
        return None

    witness = extend(0)
    if witness is None:
        logger.log(level, 'no congruence with entries in [-%d, %d]',
                   bound, bound)
        warnings.warn('bounded congruence search found no witness; this does '
                      'not prove the forms are incongruent', UserWarning)
    return witness
