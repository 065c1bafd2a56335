"""
Moment images of linear plumbings
=======================================

The inward normal chain of a linear plumbing, the rays of its moment cone
(from Eq. (1)-style gluing matrices and from the chain), the exact cone
angle, rational edge lengths and the cyclic closure of a plumbing ending in
a zero-sphere.

All coordinates follow one normalisation: nu_1 = (1, 0), nu_2 = (0, 1).
Other moment images of the same plumbing differ by SL(2, Z).
"""

from __future__ import absolute_import

import logging
from collections import namedtuple
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from ..linalg.lattice import CCW, CW, LatticeMat, LatticeVec, det2, rotate90
from ..linalg.feasibility import HomogeneousSystem, solve_homogeneous
from ..src._helper.helper import as_fraction, as_int
from ..src._helper.exceptions import (DegenerateCone, EndEdgesNotParallel,
                                      InvalidSite, NoClosedRealization,
                                      NoRealization, NotClosable,
                                      RaysDoNotCoincide, TooShort)
from .plumbing import PlumbingGraph

logger = logging.getLogger(__name__)

E1 = LatticeVec(1, 0)
E2 = LatticeVec(0, 1)

#: One edge of a moment image: endpoints, sphere weight, inward normal.
Edge = namedtuple('Edge', ['start', 'end', 'weight', 'normal'])


def linear_weights(weights):
    """Weight tuple of a linear plumbing given as PlumbingGraph or ints."""
    if isinstance(weights, PlumbingGraph):
        if not weights.is_linear:
            raise TypeError('expected a linear plumbing, got %s'
                            % weights.unparse())
        return weights.weights
    return tuple(as_int(s, 'weight') for s in weights)


def gluing_matrix(s):
    """
    Gluing matrix A = [[-s, -1], [1, 0]] of a vertex with weight s.

    :type s: int
    :rtype: LatticeMat
    """
    return LatticeMat(-as_int(s, 's'), -1, 1, 0)


def rays_eq1(weights):
    """
    Rays of the moment cone by the gluing-matrix formula.

    R1 = (-1, s_1); R2 = (s_2, -1) for two vertices, otherwise
    A_2 ... A_{n-1} (s_n, -1).

    :param weights: linear plumbing with n >= 2
    :return: (R1, R2)
    :raises TooShort: for fewer than two vertices
    """
    w = linear_weights(weights)
    if len(w) < 2:
        raise TooShort('the gluing formula needs at least two vertices, got %d'
                       % len(w))
    r1 = LatticeVec(-1, w[0])
    if len(w) == 2:
        return r1, LatticeVec(w[1], -1)
    product = LatticeMat.identity()
    for s in w[1:-1]:
        product = product @ gluing_matrix(s)
    return r1, product @ LatticeVec(w[-1], -1)


@dataclass(frozen=True)
class NormalChain:
    """
    Inward normals nu_0, nu_1, ..., nu_{n+1} of a linear moment image.

    nu_0 and nu_{n+1} are the collapse normals of the two rays, nu_1..nu_n
    the normals of the edges (spheres). Consecutive normals have
    determinant 1.
    """
    normals: Tuple[LatticeVec, ...]

    def __post_init__(self):
        normals = tuple(v if isinstance(v, LatticeVec) else LatticeVec(*v)
                        for v in self.normals)
        object.__setattr__(self, 'normals', normals)
        if len(normals) < 3:
            raise TypeError('a normal chain has at least three normals')
        for j in range(len(normals) - 1):
            if det2(normals[j], normals[j + 1]) != 1:
                raise TypeError('det(nu_%d, nu_%d) = %d, expected 1'
                                % (j, j + 1,
                                   det2(normals[j], normals[j + 1])))

    @property
    def n(self):
        """Number of edges (spheres)."""
        return len(self.normals) - 2

    @property
    def left(self):
        return self.normals[0]

    @property
    def right(self):
        return self.normals[-1]

    @property
    def edge_normals(self):
        return self.normals[1:-1]

    @property
    def directions(self):
        """Edge directions d_j = rotate90(nu_j, cw), j = 1..n."""
        return tuple(rotate90(v, CW) for v in self.edge_normals)

    def __len__(self):
        return len(self.normals)

    def __getitem__(self, j):
        return self.normals[j]

    def __iter__(self):
        return iter(self.normals)

    def as_dict(self):
        return [v.as_dict() for v in self.normals]


def normal_chain(weights):
    """
    Inward normal chain of a linear plumbing.

    Seeds nu_1 = (1, 0), nu_2 = (0, 1); then nu_{j+1} = -nu_{j-1} - s_j nu_j
    for j = 2..n and nu_0 = -nu_2 - s_1 nu_1.

    :param weights: linear plumbing (PlumbingGraph or sequence of ints)
    :rtype: NormalChain

    :Example:

    >>> from toricfill.geometry.moment import normal_chain
    >>> [v.as_tuple() for v in normal_chain([1, 0, -1])]
    [(-1, -1), (1, 0), (0, 1), (-1, 0), (-1, -1)]
    """
    w = linear_weights(weights)
    n = len(w)
    if n < 1:
        raise TooShort('a linear plumbing needs at least one vertex')
    nu = [None] * (n + 2)
    nu[1] = E1
    nu[2] = E2
    for j in range(2, n + 1):
        nu[j + 1] = -nu[j - 1] - w[j - 1] * nu[j]
    nu[0] = -nu[2] - w[0] * nu[1]
    return NormalChain(tuple(nu))


def rays_from_chain(chain):
    """
    Rays read off the collapse normals: R1 = cw(nu_0), R2 = ccw(nu_{n+1}).

    :rtype: (LatticeVec, LatticeVec)
    """
    return rotate90(chain.left, CW), rotate90(chain.right, CCW)


def recover_weights(chain):
    """Determinant rule s_j = det(nu_{j+1}, nu_{j-1}); inverse of normal_chain."""
    nu = chain.normals
    return tuple(det2(nu[j + 1], nu[j - 1]) for j in range(1, chain.n + 1))


@dataclass(frozen=True)
class ConeAngle:
    """
    Angle t2 - t1 between the rays, measured in half-turns.

    exact: t2 - t1 = h pi (h >= 1). Otherwise h pi < t2 - t1 < (h + 1) pi.
    """
    half_turns: int
    exact: bool

    def __post_init__(self):
        h = as_int(self.half_turns, 'half_turns')
        object.__setattr__(self, 'half_turns', h)
        if not isinstance(self.exact, bool):
            raise TypeError('exact must be a bool')
        if h < 0:
            raise TypeError('half_turns must be non-negative')
        if self.exact and h < 1:
            raise TypeError('an exact cone angle is at least pi')

    def plus_half_turns(self, k):
        return ConeAngle(self.half_turns + k, self.exact)

    def as_dict(self):
        return {'half_turns': self.half_turns, 'exact': self.exact}


def cone_angle(chain):
    """
    Exact angle between the rays of the moment cone.

    The total counter-clockwise turning T of nu_0 -> nu_{n+1} is counted in
    half-turns: each step turns by less than pi, so a step crosses the
    next multiple of pi exactly when the determinant with the current
    reference direction +-nu_0 is <= 0. Returns t2 - t1 = T - pi.

    :type chain: NormalChain
    :rtype: ConeAngle
    :raises DegenerateCone: when T <= pi
    """
    reference = chain.left
    crossings = 0
    for v in chain.normals[1:]:
        if det2(reference, v) <= 0:
            crossings += 1
            reference = -reference
    on_multiple = det2(reference, chain.right) == 0
    if crossings == 0 or (crossings == 1 and on_multiple):
        raise DegenerateCone('the normal chain turns by at most pi; '
                             'no contact toric boundary')
    angle = ConeAngle(crossings - 1, on_multiple)
    logger.debug('cone angle: %d half-turns, exact=%s', angle.half_turns,
                 angle.exact)
    return angle


@dataclass(frozen=True)
class MomentCone:
    """Rays R1, R2 and the angle t2 - t1 of a moment cone."""
    R1: LatticeVec
    R2: LatticeVec
    angle: ConeAngle

    def __post_init__(self):
        for name in ('R1', 'R2'):
            ray = getattr(self, name)
            if not isinstance(ray, LatticeVec):
                ray = LatticeVec(*ray)
                object.__setattr__(self, name, ray)
            if not ray.is_primitive():
                raise TypeError('ray %s is not primitive' % (ray.as_tuple(), ))
        if self.angle.exact:
            expected = self.R1 if self.angle.half_turns % 2 == 0 else -self.R1
            if self.R2 != expected:
                raise TypeError('rays %s, %s do not match an angle of %d pi'
                                % (self.R1.as_tuple(), self.R2.as_tuple(),
                                   self.angle.half_turns))
        else:
            # parity of h fixes the side of R1 that R2 lies on
            turn = det2(self.R1, self.R2)
            if turn == 0 or (turn > 0) != (self.angle.half_turns % 2 == 0):
                raise TypeError('rays %s, %s do not match an angle in (%d pi, %d pi)'
                                % (self.R1.as_tuple(), self.R2.as_tuple(),
                                   self.angle.half_turns, self.angle.half_turns + 1))

    def as_dict(self):
        return {'R1': self.R1, 'R2': self.R2, 'angle': self.angle}


def moment_cone(chain):
    """MomentCone of a normal chain."""
    r1, r2 = rays_from_chain(chain)
    return MomentCone(r1, r2, cone_angle(chain))


def _walk(start, lengths, directions):
    x, y = start
    points = [(x, y)]
    for length, d in zip(lengths, directions):
        x = x + length * d.x
        y = y + length * d.y
        points.append((x, y))
    return points


class MomentImage:
    """
    Moment image of a linear plumbing (edge walk between the two rays) or
    of a cyclic plumbing obtained by closure (closed polygon).

    :param chain: normal chain of the linear plumbing; for closed images
                  the plumbing that was closed (its last weight is 0)
    :param lengths: positive rational edge lengths l_1..l_n
    :param rho: (rho_1, rho_2) ray parameters, linear images only
    :param closed: True for a cyclic image, where sum l_j d_j = 0
    :raises NoRealization: when the lengths do not close the image
    """
    def __init__(self, chain, lengths, rho=None, closed=False):
        self.chain = chain
        self.closed = bool(closed)
        self.lengths = tuple(as_fraction(v) for v in lengths)
        self.rho = None if rho is None else tuple(as_fraction(v) for v in rho)
        if len(self.lengths) != chain.n:
            raise TypeError('%d lengths for %d edges'
                            % (len(self.lengths), chain.n))
        if self.closed:
            self._check_closed()
        else:
            self._check_linear()

    def _check_linear(self):
        if self.rho is None or len(self.rho) != 2:
            raise TypeError('a linear moment image needs (rho_1, rho_2)')
        if any(v <= 0 for v in self.lengths + self.rho):
            raise NoRealization('edge lengths and ray parameters must be '
                                'positive')
        r1, r2 = rays_from_chain(self.chain)
        start = (self.rho[0] * r1.x, self.rho[0] * r1.y)
        end = _walk(start, self.lengths, self.chain.directions)[-1]
        if end != (self.rho[1] * r2.x, self.rho[1] * r2.y):
            raise NoRealization('the edge walk does not end on the ray R2')

    def _check_closed(self):
        if self.rho is not None:
            raise TypeError('a closed moment image has no rays')
        if self.chain.n < 4:
            raise NotClosable('a closed image needs at least four edges')
        if self.chain[1] != self.chain[self.chain.n]:
            raise EndEdgesNotParallel('end edges not parallel')
        if any(v <= 0 for v in self.lengths):
            raise NoClosedRealization('edge lengths must be positive')
        if _walk((0, 0), self.lengths, self.chain.directions)[-1] != (0, 0):
            raise NoClosedRealization('the edges do not close up')

    @property
    def weights(self):
        w = recover_weights(self.chain)
        return w[:-1] if self.closed else w

    @property
    def graph(self):
        if self.closed:
            return PlumbingGraph.cyclic(*self.weights)
        return PlumbingGraph.linear(*self.weights)

    @property
    def rays(self):
        """(R1, R2), or None for a closed image."""
        return None if self.closed else rays_from_chain(self.chain)

    @property
    def vertices(self):
        """
        Vertices in edge order. Linear: rho_1 R1, ..., rho_2 R2. Closed: the
        n corners of the polygon, the first edge being the merged one.
        """
        if not self.closed:
            r1 = self.rays[0]
            start = (self.rho[0] * r1.x, self.rho[0] * r1.y)
            return _walk(start, self.lengths, self.chain.directions)
        q = _walk((Fraction(0), Fraction(0)), self.lengths,
                  self.chain.directions)
        m = self.chain.n
        return [q[m - 1]] + q[1:m - 1]

    @property
    def edges(self):
        """Edges with their sphere weights, in plumbing order."""
        pts = self.vertices
        w = self.weights
        normals = self.chain.edge_normals
        if not self.closed:
            return [Edge(pts[j], pts[j + 1], w[j], normals[j])
                    for j in range(len(w))]
        count = len(w)
        return [Edge(pts[j], pts[(j + 1) % count], w[j], normals[j])
                for j in range(count)]

    @property
    def fixed_points(self):
        return list(self.vertices)

    @property
    def gluing_points(self):
        """Points where the end edges meet the rays (linear images only)."""
        if self.closed:
            return []
        pts = self.vertices
        return [pts[0], pts[-1]]

    def with_lengths(self, lengths, rho=None):
        """
        Same normals, user supplied lengths; re-validated.

        :raises NoRealization: if the new lengths do not close the image
        """
        if rho is None and not self.closed:
            rho = self.rho
        return MomentImage(self.chain, lengths, rho, self.closed)

    def as_dict(self):
        doc = {'shape': 'cyclic' if self.closed else 'linear',
               'weights': list(self.weights),
               'normals': self.chain,
               'lengths': list(self.lengths)}
        if not self.closed:
            doc['rho'] = list(self.rho)
        doc['vertices'] = [list(p) for p in self.vertices]
        doc['gluing_points'] = [list(p) for p in self.gluing_points]
        return doc


def edge_lengths(chain, verbosity=0):
    """
    Positive rational edge lengths closing the moment image.

    Unknowns (rho_1, l_1, ..., l_n, rho_2) > 0 with
    rho_1 R1 + sum_j l_j d_j - rho_2 R2 = 0, solved exactly.

    :param chain: NormalChain (or linear weights)
    :rtype: MomentImage
    :raises NoRealization: with the solver's refutation attached
    """
    if not isinstance(chain, NormalChain):
        chain = normal_chain(chain)
    r1, r2 = rays_from_chain(chain)
    dirs = chain.directions
    c = chain.n + 2
    equalities = [[r1.x] + [d.x for d in dirs] + [-r2.x],
                  [r1.y] + [d.y for d in dirs] + [-r2.y]]
    stricts = [[1 if i == j else 0 for j in range(c)] for i in range(c)]
    answer = solve_homogeneous(HomogeneousSystem(stricts, equalities),
                               verbosity=verbosity)
    if not answer.feasible:
        raise NoRealization('no positive edge lengths realize %s'
                            % PlumbingGraph.linear(
                                *recover_weights(chain)).unparse(),
                            refutation=answer)
    x = answer.x
    return MomentImage(chain, x[1:-1], (x[0], x[-1]))


@dataclass(frozen=True)
class CyclicClosure:
    """Cyclic plumbing, boundary winding N and closed moment image."""
    source: Tuple[int, ...]
    graph: PlumbingGraph
    N: int
    image: MomentImage

    def as_dict(self):
        return {'source': PlumbingGraph.linear(*self.source),
                'cyclic': self.graph,
                'N': self.N,
                'image': self.image}


def cyclic_closure(weights, verbosity=0):
    """
    Close a linear plumbing (s_1, ..., s_n, 0) into the cyclic (s_1, ..., s_n).

    Requires coinciding rays with t2 - t1 = 2N pi, parallel end edges and
    positive lengths with sum_j l_j d_j = 0.

    :param weights: linear weights ending in 0, at least four vertices
    :rtype: CyclicClosure
    :raises NotClosable: for fewer than four vertices or a non-zero last weight
    :raises RaysDoNotCoincide: unless the angle is an exact even multiple
    :raises EndEdgesNotParallel: when d_1 and d_{n+1} differ
    :raises NoClosedRealization: when no positive lengths close the polygon
    """
    w = linear_weights(weights)
    level = logging.INFO if verbosity > 0 else logging.DEBUG
    if len(w) < 4:
        raise NotClosable('cyclic closure needs at least four vertices, got %d'
                          % len(w))
    if w[-1] != 0:
        raise NotClosable('cyclic closure plumbs away a last vertex of weight '
                          '0, got %d' % w[-1])
    chain = normal_chain(w)
    angle = cone_angle(chain)
    r1, r2 = rays_from_chain(chain)
    if not (angle.exact and angle.half_turns % 2 == 0) or r1 != r2:
        raise RaysDoNotCoincide(
            'rays do not coincide: R1 = %s, R2 = %s'
            % (r1.as_tuple(), r2.as_tuple()))
    first, last = chain.edge_normals[0], chain.edge_normals[-1]
    if det2(first, last) != 0 or first != last:
        dirs = chain.directions
        raise EndEdgesNotParallel(
            'end edges not parallel: d_1 = %s, d_%d = %s'
            % (dirs[0].as_tuple(), len(w), dirs[-1].as_tuple()))
    dirs = chain.directions
    stricts = [[1 if i == j else 0 for j in range(len(w))]
               for i in range(len(w))]
    equalities = [[d.x for d in dirs], [d.y for d in dirs]]
    answer = solve_homogeneous(HomogeneousSystem(stricts, equalities),
                               verbosity=verbosity)
    if not answer.feasible:
        raise NoClosedRealization('no positive edge lengths close the polygon',
                                  refutation=answer)
    image = MomentImage(chain, answer.x, closed=True)
    closure = CyclicClosure(w, image.graph, angle.half_turns // 2, image)
    logger.log(level, 'closed %s into %s with N = %d',
               PlumbingGraph.linear(*w).unparse(), closure.graph.unparse(),
               closure.N)
    return closure


@dataclass(frozen=True)
class GluingDecomposition:
    """
    Two-vertex plumbings whose moment images glue to the linear plumbing,
    and the gluing matrices A_2 ... A_{n-1} between them.
    """
    index: int
    pieces: Tuple[PlumbingGraph, ...]
    matrices: Tuple[LatticeMat, ...]

    def glued_rays(self):
        """Rays of the glued image: R1 of the first piece, A_2...A_{n-1}
        applied to the second ray of the last piece."""
        r1 = rays_eq1(self.pieces[0])[0]
        product = LatticeMat.identity()
        for a in self.matrices:
            product = product @ a
        return r1, product @ rays_eq1(self.pieces[-1])[1]

    def as_dict(self):
        return {'index': self.index,
                'pieces': list(self.pieces),
                'matrices': list(self.matrices)}


def gluing_decomposition(weights, index=None):
    """
    Split (s_1, ..., s_n) around a vertex i with s_i >= 0 into
    (s_1, 0), ..., (s_{i-1}, 0), (s_i, s_{i+1}), (0, s_{i+2}), ..., (0, s_n).

    :param weights: linear plumbing with n >= 2
    :param index: 1-based vertex, default the first i < n with s_i >= 0
    :rtype: GluingDecomposition
    :raises TooShort: for fewer than two vertices
    :raises InvalidSite: if s_index < 0 or no admissible index exists
    """
    w = linear_weights(weights)
    n = len(w)
    if n < 2:
        raise TooShort('a gluing decomposition needs at least two vertices')
    if index is None:
        index = next((i for i in range(1, n) if w[i - 1] >= 0), None)
        if index is None:
            raise InvalidSite('no vertex among s_1..s_{n-1} is non-negative')
    index = as_int(index, 'index')
    if not 1 <= index <= n - 1:
        raise InvalidSite('decomposition index must lie in 1..%d' % (n - 1))
    if w[index - 1] < 0:
        raise InvalidSite('s_%d = %d is negative' % (index, w[index - 1]))
    pieces = ([PlumbingGraph.linear(s, 0) for s in w[:index - 1]]
              + [PlumbingGraph.linear(w[index - 1], w[index])]
              + [PlumbingGraph.linear(0, s) for s in w[index + 1:]])
    matrices = tuple(gluing_matrix(s) for s in w[1:-1])
    return GluingDecomposition(index, tuple(pieces), matrices)
