"""
Exact homogeneous feasibility
=======================================

Decides whether a homogeneous system

    E x = 0,   S x > 0   (every row of S strictly positive)

has a rational solution, and returns either a solution or a refutation
certificate y, y_S >= 0, y_S != 0, with S^T y_S + E^T y_E = 0.

Because the system is homogeneous, S x > 0 is solvable iff S x >= 1 is, so the
strict system becomes an ordinary phase-one linear program over Fractions,
solved with a dense simplex tableau and Bland's rule. On infeasibility the
simplex multipliers of the optimal phase-one basis are the refutation.
"""

from __future__ import absolute_import

import logging
from fractions import Fraction

import numpy

from ..src._helper.helper import object_matrix, as_fraction

logger = logging.getLogger(__name__)

ZERO = Fraction(0)
ONE = Fraction(1)


class HomogeneousSystem:
    """
    Stacked homogeneous system with equality rows and strict rows.

    :param stricts: r_S x c rows that must evaluate > 0, r_S >= 1
    :param equalities: r_E x c rows that must evaluate = 0 (may be empty)
    :type stricts: nested sequence or numpy array of exact numbers
    :type equalities: nested sequence, numpy array or None

    :Example:

    >>> from toricfill.linalg.feasibility import HomogeneousSystem
    >>> system = HomogeneousSystem([[1], [-1]])
    """
    def __init__(self, stricts, equalities=None):
        self.stricts = object_matrix(stricts, as_fraction)
        if self.stricts.shape[0] < 1:
            raise TypeError('a homogeneous system needs at least one strict row')
        self.ncols = self.stricts.shape[1]
        if self.ncols < 1:
            raise TypeError('a homogeneous system needs at least one column')
        if equalities is None or len(equalities) == 0:
            self.equalities = numpy.empty((0, self.ncols), dtype=object)
        else:
            self.equalities = object_matrix(equalities, as_fraction)
            if self.equalities.shape[1] != self.ncols:
                raise TypeError('equality and strict blocks differ in width')

    @property
    def shape(self):
        """(r_E, r_S, c)"""
        return (self.equalities.shape[0], self.stricts.shape[0], self.ncols)

    def __repr__(self):
        return 'HomogeneousSystem(r_E=%d, r_S=%d, c=%d)' % self.shape


class FeasibilityAnswer:
    """
    Solution x or refutation y of a HomogeneousSystem.

    :ivar feasible: True when x is a solution
    :ivar x: tuple of Fractions (solution case) or None
    :ivar y: tuple of Fractions, strict multipliers first then equality
             multipliers (refutation case) or None
    """
    def __init__(self, x=None, y=None, n_strict=0):
        if (x is None) == (y is None):
            raise TypeError('exactly one of x and y must be given')
        self.x = None if x is None else tuple(as_fraction(v) for v in x)
        self.y = None if y is None else tuple(as_fraction(v) for v in y)
        self.n_strict = n_strict

    @property
    def feasible(self):
        return self.x is not None

    @property
    def y_strict(self):
        return None if self.y is None else self.y[:self.n_strict]

    @property
    def y_eq(self):
        return None if self.y is None else self.y[self.n_strict:]

    def as_dict(self):
        if self.feasible:
            return {'feasible': True, 'solution': list(self.x)}
        return {'feasible': False,
                'refutation': {'strict': list(self.y_strict),
                               'equality': list(self.y_eq)}}

    def __repr__(self):
        if self.feasible:
            return 'FeasibilityAnswer(x=%s)' % (self.x, )
        return 'FeasibilityAnswer(y=%s)' % (self.y, )


def _row_values(matrix, x):
    return [sum((a * b for a, b in zip(row, x)), ZERO) for row in matrix]


def verify_answer(system, answer):
    """
    Independent exact re-substitution check of a FeasibilityAnswer.

    :param system: the system that was solved
    :param answer: the answer returned for it
    :type system: HomogeneousSystem
    :type answer: FeasibilityAnswer
    :return: True iff the solution satisfies every row, or the refutation
             satisfies the alternative system
    :rtype: bool
    """
    n_eq, n_strict, ncols = system.shape
    if answer.feasible:
        if len(answer.x) != ncols:
            return False
        if any(v != 0 for v in _row_values(system.equalities, answer.x)):
            return False
        return all(v > 0 for v in _row_values(system.stricts, answer.x))
    y = answer.y
    if len(y) != n_strict + n_eq or answer.n_strict != n_strict:
        return False
    y_strict, y_eq = y[:n_strict], y[n_strict:]
    if any(v < 0 for v in y_strict) or all(v == 0 for v in y_strict):
        return False
    for col in range(ncols):
        total = sum((y_strict[i] * system.stricts[i, col]
                     for i in range(n_strict)), ZERO)
        total += sum((y_eq[i] * system.equalities[i, col]
                      for i in range(n_eq)), ZERO)
        if total != 0:
            return False
    return True


def _phase_one_tableau(system):
    """
    Tableau for  S x+ - S x- - s + a_S = 1,  E x+ - E x- + a_E = 0.

    Column blocks: x+ (c), x- (c), surplus (r_S), artificial (r_S + r_E),
    right hand side (1).
    """
    n_eq, n_strict, c = system.shape
    m = n_strict + n_eq
    ncol = 2 * c + n_strict + m
    tableau = numpy.empty((m, ncol + 1), dtype=object)
    tableau.fill(ZERO)
    blocks = [(system.stricts, 0, ONE), (system.equalities, n_strict, ZERO)]
    for matrix, offset, rhs in blocks:
        for i in range(matrix.shape[0]):
            row = offset + i
            tableau[row, :c] = matrix[i]
            tableau[row, c:2 * c] = -matrix[i]
            tableau[row, 2 * c + n_strict + row] = ONE
            tableau[row, ncol] = rhs
    for i in range(n_strict):
        tableau[i, 2 * c + i] = -ONE
    basis = [2 * c + n_strict + i for i in range(m)]
    return tableau, basis


def _pivot(tableau, reduced, row, col):
    tableau[row] = tableau[row] / tableau[row, col]
    # only columns where the pivot row is non-zero change
    support = numpy.flatnonzero(tableau[row] != 0)
    pivot_row = tableau[row, support]
    for k in range(tableau.shape[0]):
        if k != row and tableau[k, col] != 0:
            tableau[k, support] = tableau[k, support] - tableau[k, col] * pivot_row
    if reduced[col] != 0:
        reduced[support] = reduced[support] - reduced[col] * pivot_row


def solve_homogeneous(system, verbosity=0):
    """
    Solve E x = 0, S x > 0 exactly.

    :param system: the stacked system
    :param verbosity: > 0 logs the pivot count at INFO level
    :type system: HomogeneousSystem
    :type verbosity: int
    :return: solution or refutation, both checkable by verify_answer
    :rtype: FeasibilityAnswer
    """
    n_eq, n_strict, c = system.shape
    m = n_strict + n_eq
    tableau, basis = _phase_one_tableau(system)
    ncol = tableau.shape[1] - 1
    first_artificial = 2 * c + n_strict

    # cost 1 on artificials, basis starts all-artificial
    reduced = numpy.empty((ncol + 1, ), dtype=object)
    reduced.fill(ZERO)
    reduced[first_artificial:ncol] = ONE
    for i in range(m):
        reduced[:] = reduced - tableau[i]

    pivots = 0
    while True:
        entering = None
        for j in range(ncol):
            if reduced[j] < 0:
                entering = j
                break
        if entering is None:
            break
        leaving = None
        best = None
        for i in range(m):
            if tableau[i, entering] > 0:
                ratio = tableau[i, ncol] / tableau[i, entering]
                if (best is None or ratio < best
                        or (ratio == best and basis[i] < basis[leaving])):
                    best = ratio
                    leaving = i
        if leaving is None:
            # phase one is bounded below by zero
            raise RuntimeError('phase-one simplex reported an unbounded ray')
        _pivot(tableau, reduced, leaving, entering)
        basis[leaving] = entering
        pivots += 1

    infeasibility = -reduced[ncol]
    if verbosity > 0:
        logger.info('phase one finished after %d pivots, residual %s',
                    pivots, infeasibility)
    else:
        logger.debug('phase one: %d pivots, residual %s', pivots, infeasibility)

    if infeasibility == 0:
        values = [ZERO] * ncol
        for i, col in enumerate(basis):
            values[col] = tableau[i, ncol]
        x = [values[j] - values[c + j] for j in range(c)]
        return FeasibilityAnswer(x=x)

    y = [ONE - reduced[first_artificial + i] for i in range(m)]
    return FeasibilityAnswer(y=y, n_strict=n_strict)
