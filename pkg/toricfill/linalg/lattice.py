"""
Planar lattice arithmetic
=======================================

Exact integer vectors and 2x2 matrices used for inward normals, rays and
SL(2,Z) normalisation. Integers are Python ints, so nothing overflows.
"""

from __future__ import absolute_import

from dataclasses import dataclass

import sympy

from ..src._helper.helper import as_int
from ..src._helper.exceptions import NotPrimitive

CCW = 'ccw'
CW = 'cw'


@dataclass(frozen=True)
class LatticeVec:
    """
    Integer vector (x, y) of the plane lattice.

    :Example:

    >>> from toricfill.linalg.lattice import LatticeVec
    >>> LatticeVec(-1, 2) + LatticeVec(1, 0)
    LatticeVec(x=0, y=2)
    """
    x: int
    y: int

    def __post_init__(self):
        object.__setattr__(self, 'x', as_int(self.x, 'x'))
        object.__setattr__(self, 'y', as_int(self.y, 'y'))

    def __add__(self, other):
        return LatticeVec(self.x + other.x, self.y + other.y)

    def __sub__(self, other):
        return LatticeVec(self.x - other.x, self.y - other.y)

    def __neg__(self):
        return LatticeVec(-self.x, -self.y)

    def __mul__(self, k):
        k = as_int(k, 'scalar')
        return LatticeVec(k * self.x, k * self.y)

    __rmul__ = __mul__

    def __iter__(self):
        yield self.x
        yield self.y

    def is_zero(self):
        return self.x == 0 and self.y == 0

    def is_primitive(self):
        """True iff (x, y) != (0, 0) and gcd(|x|, |y|) = 1."""
        return sympy.igcd(self.x, self.y) == 1

    def dot(self, other):
        return self.x * other.x + self.y * other.y

    def as_tuple(self):
        return (self.x, self.y)

    def as_dict(self):
        return [self.x, self.y]


@dataclass(frozen=True)
class LatticeMat:
    """
    Integer 2x2 matrix [[a, b], [c, d]] (row-major).

    ``M @ v`` applies the matrix to a LatticeVec, ``M @ N`` multiplies.
    """
    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        for name in ('a', 'b', 'c', 'd'):
            object.__setattr__(self, name, as_int(getattr(self, name), name))

    @classmethod
    def identity(cls):
        return cls(1, 0, 0, 1)

    @classmethod
    def shear(cls, m):
        """The shear [[1, m], [0, 1]] fixing (1, 0)."""
        return cls(1, m, 0, 1)

    @classmethod
    def from_rows(cls, rows):
        (a, b), (c, d) = rows
        return cls(a, b, c, d)

    def det(self):
        return self.a * self.d - self.b * self.c

    def is_unimodular(self):
        return abs(self.det()) == 1

    def is_special(self):
        return self.det() == 1

    def transpose(self):
        return LatticeMat(self.a, self.c, self.b, self.d)

    def __matmul__(self, other):
        if isinstance(other, LatticeVec):
            return LatticeVec(self.a * other.x + self.b * other.y,
                              self.c * other.x + self.d * other.y)
        if isinstance(other, LatticeMat):
            return LatticeMat(self.a * other.a + self.b * other.c,
                              self.a * other.b + self.b * other.d,
                              self.c * other.a + self.d * other.c,
                              self.c * other.b + self.d * other.d)
        return NotImplemented

    def rows(self):
        return ((self.a, self.b), (self.c, self.d))

    def as_dict(self):
        return [[self.a, self.b], [self.c, self.d]]


def det2(u, v):
    """
    Determinant of the 2x2 matrix with columns u and v.

    :param u: first vector
    :param v: second vector
    :type u: LatticeVec
    :type v: LatticeVec
    :return: u.x * v.y - u.y * v.x
    :rtype: int
    """
    return u.x * v.y - u.y * v.x


def rotate90(v, sense=CCW):
    """
    Rotate a lattice vector by a quarter turn.

    :param v: the vector
    :param sense: 'ccw' maps (x, y) to (-y, x); 'cw' maps (x, y) to (y, -x)
    :type v: LatticeVec
    :type sense: string
    :rtype: LatticeVec
    """
    if sense == CCW:
        return LatticeVec(-v.y, v.x)
    if sense == CW:
        return LatticeVec(v.y, -v.x)
    raise TypeError("sense must be 'ccw' or 'cw', got %r" % (sense, ))


def sl2_sending_to_e1(v):
    """
    A special unimodular U with U v = (1, 0).

    Built from the extended gcd a x + b y = 1 as U = [[a, b], [-y, x]]; any
    other answer differs from it by a shear fixing (1, 0).

    :param v: primitive vector
    :type v: LatticeVec
    :rtype: LatticeMat
    :raises NotPrimitive: if v is zero or gcd(|x|, |y|) > 1
    """
    if not v.is_primitive():
        raise NotPrimitive('vector %s is not primitive' % (v.as_tuple(), ))
    a, b, g = (int(c) for c in sympy.gcdex(v.x, v.y))
    if g < 0:
        a, b = -a, -b
    return LatticeMat(a, b, -v.y, v.x)
