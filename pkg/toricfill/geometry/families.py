"""
Infinite filling families
=======================================

Continued fractions s_1 - 1/(s_2 - 1/(... - 1/s_n)) with s_1 >= 0 and
s_j <= -2, the four families of concave toric fillings (S1 x S2, lens
spaces, their half-Lutz twists, and T3) and their verification.

Every family is an unbounded stream indexed by n or m; the list functions
materialise a finite prefix.
"""

from __future__ import absolute_import

import itertools
import logging
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

import sympy

from ..src._helper.helper import as_int
from ..src._helper.exceptions import (DivisionByZero, InvalidLens, NotCoprime,
                                      UnsupportedTarget, VerificationError)
from .classify import (Free, Lens, NonFree, S1xS2, classify_cyclic_boundary,
                       classify_linear_boundary)
from .moment import cyclic_closure
from .plumbing import (PlumbingGraph, canonical_form, concavity_certificate,
                       intersection_form, is_toric_minimal)

logger = logging.getLogger(__name__)


def eval_cf(coefficients):
    """
    Evaluate s_1 - 1/(s_2 - 1/(... - 1/s_n)) exactly.

    :param coefficients: s_1, ..., s_n (n >= 1)
    :rtype: Fraction
    :raises DivisionByZero: when an inner tail evaluates to 0
    """
    coefficients = [as_int(s, 'coefficient') for s in coefficients]
    if not coefficients:
        raise TypeError('a continued fraction has at least one coefficient')
    value = Fraction(coefficients[-1])
    for s in reversed(coefficients[:-1]):
        if value == 0:
            raise DivisionByZero('continued fraction %s divides by zero'
                                 % (coefficients, ))
        value = s - 1 / value
    return value


@dataclass(frozen=True)
class ContinuedFraction:
    """Coefficients with s_1 >= 0, s_j <= -2 (j >= 2) and their value."""
    coefficients: Tuple[int, ...]
    value: Fraction

    def __post_init__(self):
        coefficients = tuple(as_int(s, 'coefficient')
                             for s in self.coefficients)
        object.__setattr__(self, 'coefficients', coefficients)
        if not coefficients or coefficients[0] < 0 or any(
                s > -2 for s in coefficients[1:]):
            raise TypeError('coefficients %s do not have the shape s_1 >= 0, '
                            's_j <= -2' % (coefficients, ))
        if eval_cf(coefficients) != self.value:
            raise TypeError('coefficients %s do not evaluate to %s'
                            % (coefficients, self.value))

    def as_plumbing(self):
        return PlumbingGraph.linear(*self.coefficients)

    def as_dict(self):
        return {'coefficients': list(self.coefficients), 'value': self.value}


def continued_fraction(k, l):
    """
    Greedy expansion of k/l with s_1 >= 0 and every later s_j <= -2.

    :param k: numerator, k > 0
    :param l: denominator, l > 0, gcd(k, l) = 1
    :rtype: ContinuedFraction
    :raises NotCoprime: if gcd(k, l) != 1

    :Example:

    >>> from toricfill import continued_fraction
    >>> continued_fraction(3, 4).coefficients
    (0, -2, -2, -2)
    """
    k, l = as_int(k, 'k'), as_int(l, 'l')
    if k <= 0 or l <= 0:
        raise InvalidLens('continued fractions are taken of k/l with '
                          'k, l > 0, got %d/%d' % (k, l))
    if sympy.igcd(k, l) != 1:
        raise NotCoprime('gcd(%d, %d) = %d' % (k, l, sympy.igcd(k, l)))
    value = Fraction(k, l)
    r = value
    coefficients = []
    while True:
        s = r.numerator // r.denominator
        coefficients.append(s)
        if r == s:
            break
        # s - r lies in (-1, 0), so the next remainder is < -1
        r = 1 / (s - r)
    return ContinuedFraction(tuple(coefficients), value)


def _check_count(count):
    count = as_int(count, 'count')
    if count < 1:
        raise TypeError('count must be at least 1')
    return count


def iter_case1(n0=0):
    """(n, linear (n, 0, -n)) for n = n0, n0 + 1, ..."""
    for n in itertools.count(as_int(n0, 'n0')):
        yield n, PlumbingGraph.linear(n, 0, -n)


def family_case1(count, n0=0):
    """
    Linear plumbings (n, 0, -n), n = n0 .. n0 + count - 1; concave fillings
    of (S1 x S2, xi_t).
    """
    count = _check_count(count)
    return [g for n, g in itertools.islice(iter_case1(n0), count)]


def _check_lens(k, l):
    k, l = as_int(k, 'k'), as_int(l, 'l')
    if k < 1:
        raise InvalidLens('k must be positive, got %d' % k)
    if sympy.igcd(k, l) != 1 or (k > 1 and l % k == 0):
        raise InvalidLens('L(%d, %d) needs gcd(k, l) = 1 and l != 0 mod k'
                          % (k, l))
    return k, l


def iter_case2(k, l, m0=0):
    """(m, continued fraction plumbing of k/(m k + l)) for m >= m0 with
    m k + l > 0."""
    k, l = _check_lens(k, l)
    for m in itertools.count(as_int(m0, 'm0')):
        if m * k + l <= 0:
            continue
        yield m, continued_fraction(k, m * k + l).as_plumbing()


def family_case2(k, l, count, m0=0):
    """
    Concave fillings of (L(k, l), xi_t): the expansions of k/(m k + l).

    :raises InvalidLens: for k < 1, gcd(k, l) != 1 or l = 0 mod k (k > 1)
    """
    count = _check_count(count)
    return [g for m, g in itertools.islice(iter_case2(k, l, m0), count)]


def family_case3(base, K):
    """
    Append 2K zero-spheres to every member of base: K half-Lutz twists of
    each member's boundary.

    :param base: linear plumbings (PlumbingGraph or weight sequences)
    :param K: number of half-Lutz twists, K >= 1
    """
    K = as_int(K, 'K')
    if K < 1:
        raise TypeError('K must be at least 1')
    padded = []
    for g in base:
        weights = g.weights if isinstance(g, PlumbingGraph) else tuple(g)
        padded.append(PlumbingGraph.linear(*(tuple(weights) + (0, ) * (2 * K))))
    return padded


def iter_free(N, n0=0):
    """(n, CyclicClosure of (n, 0, -n, 0 x (4N - 2))) for n = n0, ..."""
    N = as_int(N, 'N')
    if N < 1:
        raise TypeError('N must be at least 1')
    for n in itertools.count(as_int(n0, 'n0')):
        yield n, cyclic_closure((n, 0, -n) + (0, ) * (4 * N - 2))


def family_free(N, count, n0=0):
    """Cyclic plumbings with boundary (T3, xi_N)."""
    count = _check_count(count)
    return [c.graph for n, c in itertools.islice(iter_free(N, n0), count)]


@dataclass(frozen=True)
class FamilyRequest:
    """A target boundary, how many members, and the first index."""
    target: object
    count: int
    start: int = 0

    def __post_init__(self):
        object.__setattr__(self, 'count', _check_count(self.count))
        object.__setattr__(self, 'start', as_int(self.start, 'start'))


@dataclass(frozen=True)
class FamilyMember:
    """One verified filling and its verification record."""
    index: int
    graph: PlumbingGraph
    certificate: object
    classification: object
    canonical_form: Tuple[int, ...]
    toric_minimal: bool

    def as_dict(self):
        return {'index': self.index,
                'plumbing': self.graph,
                'certificate': self.certificate,
                'classification': self.classification,
                'canonical_form': list(self.canonical_form),
                'toric_minimal': self.toric_minimal}


@dataclass(frozen=True)
class VerifiedFamily:
    request: FamilyRequest
    case: str
    members: Tuple[FamilyMember, ...]

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    @property
    def graphs(self):
        return [m.graph for m in self.members]

    def as_dict(self):
        return {'target': self.request.target.describe(),
                'case': self.case,
                'count': len(self.members),
                'members': list(self.members)}


def _members(target, count, start):
    """(case, [(index, graph)]) realizing the target."""
    if isinstance(target, Free):
        items = [(n, c.graph) for n, c in
                 itertools.islice(iter_free(target.N, start), count)]
        return 'free', items
    if not isinstance(target, NonFree):
        raise UnsupportedTarget('no family realizes %r' % (target, ))
    underlying = target.underlying
    if isinstance(underlying, S1xS2):
        case, items = 'case1', list(itertools.islice(iter_case1(start), count))
    elif isinstance(underlying, Lens):
        if underlying.k > 1 and underlying.l == 0:
            raise UnsupportedTarget('L(%d, 0) is not a lens space'
                                    % underlying.k)
        case, items = 'case2', list(itertools.islice(
            iter_case2(underlying.k, underlying.l, start), count))
    else:
        raise UnsupportedTarget('no family realizes %r' % (target, ))
    if target.half_lutz:
        padded = family_case3([g for i, g in items], target.half_lutz)
        items = [(i, g) for (i, old), g in zip(items, padded)]
        case = 'case3'
    return case, items


def generate_fillings(request, verbosity=0):
    """
    Generate and verify a family of concave toric fillings of the target.

    Every member gets a concavity certificate (re-verified exactly), its
    boundary is classified again and must equal the target, and canonical
    forms must be pairwise distinct. Members carrying a -1 sphere are kept
    and reported with a UserWarning.

    :param request: target, count and start index
    :param verbosity: 0 quiet, 1 logs every verified member
    :type request: FamilyRequest
    :rtype: VerifiedFamily
    :raises UnsupportedTarget: for targets no family realizes
    :raises VerificationError: if any check fails
    """
    level = logging.INFO if verbosity > 0 else logging.DEBUG
    target = request.target
    case, items = _members(target, request.count, request.start)
    members = []
    seen = {}
    for index, g in items:
        form = intersection_form(g)
        check = concavity_certificate(form)
        if not check.found or not check.certificate.verify(form):
            raise VerificationError('%s has no concavity certificate'
                                    % g.unparse())
        if g.is_linear:
            got = classify_linear_boundary(g)
        else:
            got = classify_cyclic_boundary(g)
        if got != target:
            raise VerificationError('%s bounds %s, not %s'
                                    % (g.unparse(), got.describe(),
                                       target.describe()))
        canon = canonical_form(g)
        if canon in seen:
            raise VerificationError('members %d and %d are equivariantly '
                                    'equivalent' % (seen[canon], index))
        seen[canon] = index
        minimal = is_toric_minimal(g)
        if not minimal:
            warnings.warn('%s contains a -1 sphere and is a toric blow-up'
                          % g.unparse(), UserWarning)
        logger.log(level, 'member %d: %s verified', index, g.unparse())
        members.append(FamilyMember(index, g, check.certificate, got, canon,
                                    minimal))
    return VerifiedFamily(request, case, tuple(members))
