"""
Contact toric boundaries
=======================================

Classification of the contact toric boundary of a linear or cyclic plumbing
from its moment data: the underlying manifold (lens space, S1 x S2 or T3),
the number of half-Lutz twists, and SL(2, Z) equivalence of moment cones.
"""

from __future__ import absolute_import

import logging
import re
from dataclasses import dataclass

import sympy

from ..linalg.lattice import det2, sl2_sending_to_e1
from ..src._helper.helper import as_int
from ..src._helper.exceptions import (InvalidLens, NotToric, ToricFillError,
                                      UnsupportedTarget)
from .moment import cone_angle, cyclic_closure, linear_weights, normal_chain

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Lens:
    """Lens space L(k, l) with k >= 1, 0 <= l < k, gcd(k, l) = 1."""
    k: int
    l: int

    def __post_init__(self):
        k, l = as_int(self.k, 'k'), as_int(self.l, 'l')
        object.__setattr__(self, 'k', k)
        object.__setattr__(self, 'l', l)
        if k < 1 or not 0 <= l < k or sympy.igcd(k, l) != 1:
            raise InvalidLens('L(%d, %d) is not a normalised lens space'
                              % (k, l))

    def describe(self):
        return 'lens:%d,%d' % (self.k, self.l)

    def as_dict(self):
        return {'type': 'lens', 'k': self.k, 'l': self.l}


@dataclass(frozen=True)
class S1xS2:
    """The product S1 x S2."""

    def describe(self):
        return 's1xs2'

    def as_dict(self):
        return {'type': 's1xs2'}


class ContactToricClass:
    """Base of the two kinds of boundary: NonFree and Free."""

    @property
    def tight(self):
        raise NotImplementedError

    @property
    def contact_label(self):
        raise NotImplementedError

    def describe(self):
        raise NotImplementedError


@dataclass(frozen=True)
class NonFree(ContactToricClass):
    """
    Boundary with circle orbits: a lens space or S1 x S2 after H half-Lutz
    twists of its universally tight structure.
    """
    underlying: object
    half_lutz: int = 0

    def __post_init__(self):
        if not isinstance(self.underlying, (Lens, S1xS2)):
            raise TypeError('underlying must be Lens or S1xS2')
        h = as_int(self.half_lutz, 'half_lutz')
        if h < 0:
            raise TypeError('half_lutz must be non-negative')
        object.__setattr__(self, 'half_lutz', h)

    @property
    def tight(self):
        return self.half_lutz == 0

    @property
    def contact_label(self):
        """xi_t when tight; two half-Lutz twists give an isotopic structure,
        so overtwisted boundaries are xi_ot1 (H odd) or xi_ot2 (H even)."""
        if self.half_lutz == 0:
            return 'xi_t'
        return 'xi_ot1' if self.half_lutz % 2 else 'xi_ot2'

    def describe(self):
        text = self.underlying.describe()
        if self.half_lutz:
            text += ' --lutz %d' % self.half_lutz
        return text

    def as_dict(self):
        return {'kind': 'non_free',
                'underlying': self.underlying,
                'half_lutz': self.half_lutz,
                'tight': self.tight,
                'contact_structure': self.contact_label}


@dataclass(frozen=True)
class Free(ContactToricClass):
    """(T3, xi_N) with a free toric action."""
    N: int

    def __post_init__(self):
        n = as_int(self.N, 'N')
        if n < 1:
            raise TypeError('N must be at least 1')
        object.__setattr__(self, 'N', n)

    @property
    def tight(self):
        return True

    @property
    def contact_label(self):
        return 'xi_%d' % self.N

    def describe(self):
        return 't3:%d' % self.N

    def as_dict(self):
        return {'kind': 'free',
                'N': self.N,
                'tight': True,
                'contact_structure': self.contact_label}


_TARGET = re.compile(r'^\s*(?:(lens)\s*:\s*(-?\d+)\s*,\s*(-?\d+)'
                     r'|(s1xs2)|(t3)\s*:\s*(-?\d+))\s*$', re.IGNORECASE)


def parse_target(text, lutz=0):
    """
    Parse a target descriptor "lens:k,l", "s1xs2" or "t3:N".

    :param text: the descriptor
    :param lutz: number of half-Lutz twists (not allowed for t3)
    :rtype: ContactToricClass
    :raises UnsupportedTarget: for anything no family realizes
    """
    lutz = as_int(lutz, 'lutz')
    match = _TARGET.match(text or '')
    if match is None:
        raise UnsupportedTarget('unknown target %r; expected lens:k,l, s1xs2 '
                                'or t3:N' % (text, ))
    if lutz < 0:
        raise UnsupportedTarget('the number of half-Lutz twists is '
                                'non-negative')
    if match.group(1):
        k, l = int(match.group(2)), int(match.group(3))
        if k < 1 or sympy.igcd(k, l) != 1:
            raise UnsupportedTarget('lens:%d,%d does not name a lens space'
                                    % (k, l))
        return NonFree(Lens(k, l % k), lutz)
    if match.group(4):
        return NonFree(S1xS2(), lutz)
    if lutz:
        raise UnsupportedTarget('T3 boundaries are tight; --lutz is not '
                                'supported')
    n = int(match.group(6))
    if n < 1:
        raise UnsupportedTarget('t3:%d needs N >= 1' % n)
    return Free(n)


def classify_linear_boundary(weights):
    """
    Contact toric boundary of a linear plumbing.

    Exact angle h pi: S1 x S2 with H = h - 1. Otherwise L(k, l) with
    k = |det(nu_0, nu_{n+1})| and H = h, where l is the residue of U nu_{n+1}
    once U in SL(2, Z) sends nu_0 to (1, 0) (both slopes unoriented).

    :param weights: linear plumbing
    :rtype: NonFree
    :raises DegenerateCone: if the plumbing has no contact toric boundary

    :Example:

    >>> from toricfill import classify_linear_boundary
    >>> classify_linear_boundary([0, -2, -2, -2]).describe()
    'lens:3,1'
    """
    chain = normal_chain(linear_weights(weights))
    angle = cone_angle(chain)
    if angle.exact:
        return NonFree(S1xS2(), angle.half_turns - 1)
    u1, u2 = chain.left, chain.right
    k = abs(det2(u1, u2))
    v = sl2_sending_to_e1(u1) @ u2
    if v.y < 0:
        v = -v
    return NonFree(Lens(k, v.x % k), angle.half_turns)


def closing_rotation(g, verbosity=0):
    """
    First rotation r of a cyclic plumbing whose linear plumbing
    (s_{r+1}, ..., s_r, 0) passes the cyclic closure.

    :param g: cyclic PlumbingGraph (or weights)
    :return: (r, CyclicClosure)
    :raises NotToric: with one (rotation, reason) pair per rotation tried
    """
    w = tuple(g.weights) if hasattr(g, 'weights') else tuple(
        as_int(s, 'weight') for s in g)
    reasons = []
    for r in range(len(w)):
        rotated = w[r:] + w[:r]
        try:
            return r, cyclic_closure(rotated + (0, ), verbosity=verbosity)
        except ToricFillError as e:
            reasons.append((r, str(e)))
    raise NotToric('no rotation of cyclic %s closes up'
                   % (', '.join(str(s) for s in w), ), reasons)


def classify_cyclic_boundary(g, verbosity=0):
    """
    (T3, xi_N) boundary of a cyclic plumbing; N is the winding of the first
    closing rotation.

    :rtype: Free
    :raises NotToric: when no rotation closes
    """
    r, closure = closing_rotation(g, verbosity=verbosity)
    return Free(closure.N)


def _normal_ray_pair(cone):
    u = sl2_sending_to_e1(cone.R1)
    v = u @ cone.R2
    if v.y < 0 or (v.y == 0 and v.x < 0):
        v = -v
    return (v.y, v.x % v.y) if v.y else (0, v.x)


def cones_equivalent(c1, c2):
    """
    True iff the cones have the same angle and a special unimodular map
    takes the rays of one to the rays of the other.

    Both cones are normalised so that R1 = (1, 0); the images of R2 then
    agree up to a shear fixing (1, 0), i.e. modulo their second coordinate.
    """
    if c1.angle != c2.angle:
        return False
    return _normal_ray_pair(c1) == _normal_ray_pair(c2)


def shear_equivalence(k, l, m):
    """
    The shear [[1, m], [0, 1]] relabels L(k, l) as L(k, m k + l).

    :rtype: (int, int)
    """
    k, l, m = as_int(k, 'k'), as_int(l, 'l'), as_int(m, 'm')
    if k <= 0:
        raise InvalidLens('k must be positive, got %d' % k)
    return k, m * k + l


def angle_interval(angle):
    """Text form of t2 - t1: 'pi', '2pi', '(0,pi)', '(pi,2pi)', ..."""
    def pis(h):
        return {0: '0', 1: 'pi'}.get(h, '%dpi' % h)
    if angle.exact:
        return pis(angle.half_turns)
    return '(%s,%s)' % (pis(angle.half_turns), pis(angle.half_turns + 1))
