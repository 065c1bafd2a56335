"""
Plumbings over spheres
=======================================

Linear and cyclic plumbing graphs, their intersection forms, the convex and
concave boundary criteria, toric blow-up/blow-down and the canonical form used
to decide equivariant distinctness.
"""

from __future__ import absolute_import

import logging
from dataclasses import dataclass
from typing import Tuple

import numpy
import sympy

from ..linalg.feasibility import HomogeneousSystem, solve_homogeneous
from ..src._helper.helper import as_int, object_matrix
from ..src._helper.exceptions import InvalidSite, NotMinusOne

logger = logging.getLogger(__name__)

LINEAR = 'linear'
CYCLIC = 'cyclic'
LEFT_END = 'left_end'
RIGHT_END = 'right_end'


@dataclass(frozen=True)
class PlumbingGraph:
    """
    Linear or cyclic plumbing graph; every base surface is a sphere.

    :ivar shape: 'linear' or 'cyclic'
    :ivar weights: self-intersection numbers s_1, ..., s_n

    :Example:

    >>> from toricfill import PlumbingGraph
    >>> PlumbingGraph.linear(1, 0, -1).unparse()
    'linear: 1, 0, -1'
    """
    shape: str
    weights: Tuple[int, ...]

    def __post_init__(self):
        if self.shape not in (LINEAR, CYCLIC):
            raise TypeError("shape must be 'linear' or 'cyclic', got %r"
                            % (self.shape, ))
        weights = tuple(as_int(s, 'weight') for s in self.weights)
        object.__setattr__(self, 'weights', weights)
        if self.shape == LINEAR and len(weights) < 1:
            raise TypeError('a linear plumbing needs at least one vertex')
        if self.shape == CYCLIC and len(weights) < 3:
            raise TypeError('a cyclic plumbing needs at least three vertices')

    @classmethod
    def linear(cls, *weights):
        return cls(LINEAR, tuple(weights))

    @classmethod
    def cyclic(cls, *weights):
        return cls(CYCLIC, tuple(weights))

    @property
    def n(self):
        return len(self.weights)

    @property
    def is_linear(self):
        return self.shape == LINEAR

    @property
    def is_cyclic(self):
        return self.shape == CYCLIC

    def unparse(self):
        """Text form accepted by the plumbing-spec parser."""
        return '%s: %s' % (self.shape, ', '.join(str(s) for s in self.weights))

    def as_dict(self):
        return {'shape': self.shape, 'weights': list(self.weights)}

    def __str__(self):
        return self.unparse()


class IntersectionForm:
    """
    Symmetric integer matrix (numpy array of Python ints, dtype=object).

    :param matrix: square symmetric nested sequence of integers
    """
    def __init__(self, matrix):
        self.matrix = object_matrix(matrix, as_int)
        rows, cols = self.matrix.shape
        if rows != cols:
            raise TypeError('an intersection form is square')
        if any(self.matrix[i, j] != self.matrix[j, i]
               for i in range(rows) for j in range(i)):
            raise TypeError('an intersection form is symmetric')

    @property
    def dimension(self):
        return self.matrix.shape[0]

    @property
    def diagonal(self):
        return tuple(self.matrix[i, i] for i in range(self.dimension))

    def to_sympy(self):
        return sympy.Matrix(self.matrix.tolist())

    def tolist(self):
        return self.matrix.tolist()

    def as_dict(self):
        return self.tolist()

    def __eq__(self, other):
        if not isinstance(other, IntersectionForm):
            return NotImplemented
        return self.tolist() == other.tolist()

    def __hash__(self):
        return hash(tuple(map(tuple, self.tolist())))

    def __repr__(self):
        return 'IntersectionForm(%s)' % (self.tolist(), )


@dataclass(frozen=True)
class ConcavityCertificate:
    """
    Witness z < 0 with -Q z = a > 0 of a concave contact type boundary.
    """
    z: tuple
    a: tuple

    def verify(self, form):
        """Exact re-check of all certificate invariants against Q."""
        if len(self.z) != form.dimension or len(self.a) != form.dimension:
            return False
        if any(v >= 0 for v in self.z) or any(v <= 0 for v in self.a):
            return False
        minus_qz = [-sum(form.matrix[i, j] * self.z[j]
                         for j in range(form.dimension))
                    for i in range(form.dimension)]
        return minus_qz == list(self.a)

    def as_dict(self):
        return {'z': list(self.z), 'a': list(self.a)}


class ConcavityCheck:
    """
    Outcome of concavity_certificate: a certificate, or the refutation of
    the feasibility system proving that none exists.
    """
    def __init__(self, certificate=None, refutation=None):
        self.certificate = certificate
        self.refutation = refutation

    @property
    def found(self):
        return self.certificate is not None

    def __bool__(self):
        return self.found

    def as_dict(self):
        if self.found:
            return {'found': True, 'certificate': self.certificate}
        return {'found': False, 'refutation': self.refutation}


def intersection_form(g):
    """
    Intersection form Q of a plumbing graph (all plumbing edges positive).

    :param g: the plumbing graph
    :type g: PlumbingGraph
    :return: diagonal s_i, 1 for adjacent vertices (and a_1n for cycles)
    :rtype: IntersectionForm
    """
    n = g.n
    matrix = [[0] * n for _ in range(n)]
    for i, s in enumerate(g.weights):
        matrix[i][i] = s
    for i in range(n - 1):
        matrix[i][i + 1] = matrix[i + 1][i] = 1
    if g.is_cyclic:
        matrix[0][n - 1] = matrix[n - 1][0] = 1
    return IntersectionForm(matrix)


def leading_minors(form):
    """Leading principal minors by exact Bareiss elimination."""
    full = form.to_sympy()
    return [int(full[:k, :k].det(method='bareiss'))
            for k in range(1, form.dimension + 1)]


def is_negative_definite(form):
    """
    Sylvester test: (-1)^k * Delta_k > 0 for every leading minor.

    Negative definite forms bound plumbings with a convex boundary.
    """
    return all((-1) ** k * minor > 0
               for k, minor in enumerate(leading_minors(form), start=1))


def concavity_certificate(form, verbosity=0):
    """
    Look for z < 0 with -Q z > 0 (concave contact type boundary criterion).

    :param form: the intersection form Q
    :param verbosity: passed to the feasibility solver
    :type form: IntersectionForm
    :return: certificate (z, a = -Q z), or the solver's refutation
    :rtype: ConcavityCheck
    """
    n = form.dimension
    minus_q = [[-form.matrix[i, j] for j in range(n)] for i in range(n)]
    minus_id = [[-1 if i == j else 0 for j in range(n)] for i in range(n)]
    system = HomogeneousSystem(minus_q + minus_id)
    answer = solve_homogeneous(system, verbosity=verbosity)
    if not answer.feasible:
        logger.debug('no concavity certificate for %s', form)
        return ConcavityCheck(refutation=answer)
    z = answer.x
    a = tuple(sum(minus_q[i][j] * z[j] for j in range(n)) for i in range(n))
    return ConcavityCheck(certificate=ConcavityCertificate(tuple(z), a))


def _check_index(g, j):
    j = as_int(j, 'vertex index')
    if not 1 <= j <= g.n:
        raise InvalidSite('vertex %d out of range 1..%d' % (j, g.n))
    return j


def blow_up_sites(g):
    """Every valid blow-up site of g, interior corners first."""
    last = g.n if g.is_cyclic else g.n - 1
    sites = list(range(1, last + 1))
    if g.is_linear:
        sites += [LEFT_END, RIGHT_END]
    return sites


def blow_up(g, site):
    """
    Toric blow-up: chop a corner of the moment image.

    :param g: the plumbing
    :param site: interior corner j (between vertices j and j+1, cyclically
                 for cycles), or 'left_end' / 'right_end' for linear graphs
    :type g: PlumbingGraph
    :rtype: PlumbingGraph
    :raises InvalidSite: for a site that is not a corner of g
    """
    w = list(g.weights)
    n = g.n
    if site in (LEFT_END, RIGHT_END):
        if not g.is_linear:
            raise InvalidSite('end sites exist only on linear plumbings')
        if site == LEFT_END:
            return PlumbingGraph(g.shape, tuple([-1, w[0] - 1] + w[1:]))
        return PlumbingGraph(g.shape, tuple(w[:-1] + [w[-1] - 1, -1]))
    if isinstance(site, str):
        raise InvalidSite('unknown blow-up site %r' % (site, ))
    j = as_int(site, 'site')
    last = n if g.is_cyclic else n - 1
    if not 1 <= j <= last:
        raise InvalidSite('no edge between vertex %d and its successor in %s'
                          % (j, g.unparse()))
    if j < n:
        new = w[:j - 1] + [w[j - 1] - 1, -1, w[j] - 1] + w[j + 1:]
    else:
        # the wrap edge between vertex n and vertex 1
        new = [w[0] - 1] + w[1:n - 1] + [w[n - 1] - 1, -1]
    return PlumbingGraph(g.shape, tuple(new))


def blow_down(g, j):
    """
    Toric blow-down of a -1 sphere; inverse of blow_up on its image.

    :param g: the plumbing
    :param j: 1-based index of a vertex with weight -1
    :type g: PlumbingGraph
    :type j: int
    :rtype: PlumbingGraph
    :raises NotMinusOne: if s_j != -1
    :raises InvalidSite: if j is out of range or the result would be too small
    """
    j = _check_index(g, j)
    w = list(g.weights)
    n = g.n
    if w[j - 1] != -1:
        raise NotMinusOne('vertex %d has weight %d, not -1' % (j, w[j - 1]))
    if g.is_linear:
        if n == 1:
            raise InvalidSite('blowing down the only vertex leaves no plumbing')
        if j > 1:
            w[j - 2] += 1
        if j < n:
            w[j] += 1
    else:
        if n == 3:
            raise InvalidSite('a cyclic plumbing keeps at least three vertices')
        w[(j - 2) % n] += 1
        w[j % n] += 1
    del w[j - 1]
    return PlumbingGraph(g.shape, tuple(w))


def is_toric_minimal(g):
    """True iff no sphere has self-intersection -1."""
    return all(s != -1 for s in g.weights)


def canonical_form(g):
    """
    Representative of g up to reversal (linear) or the dihedral action
    (cyclic): the lexicographic minimum of the orbit.

    :rtype: tuple of int
    """
    w = tuple(g.weights)
    if g.is_linear:
        return min(w, w[::-1])
    orbit = []
    for seq in (w, w[::-1]):
        orbit.extend(seq[r:] + seq[:r] for r in range(len(seq)))
    return min(orbit)


def equivariantly_distinct(g1, g2):
    """Graphs are reported distinct only when their canonical forms differ."""
    return g1.shape != g2.shape or canonical_form(g1) != canonical_form(g2)
