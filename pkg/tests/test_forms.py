import itertools
import warnings

import numpy
import pytest

from toricfill import (PlumbingGraph, IntersectionForm, FormInvariants, form_invariants,
                       congruent_within_bound, separating_invariant, intersection_form)
from toricfill.linalg.forms import diagonalize
from toricfill.src._helper.exceptions import DimensionMismatch


def _case1_form(n):
    return intersection_form(PlumbingGraph.linear(n, 0, -n))


def _conjugate(P, Q):
    P = numpy.array(P, dtype=object)
    Q = numpy.array(Q, dtype=object)
    return P.dot(Q).dot(P.T).tolist()


def _random_unimodular(rng, n):
    P = numpy.eye(n, dtype=int).astype(object)
    for step in range(6):
        i, j = rng.choice(n, size=2, replace=False)
        if rng.randint(3) == 0:
            P[[i, j], :] = P[[j, i], :]
        else:
            P[i, :] = P[i, :] + rng.randint(-2, 3) * P[j, :]
    if rng.randint(2):
        P[0, :] = -P[0, :]
    return P.tolist()


def test_form_invariants():
    assert form_invariants(_case1_form(1)) == FormInvariants(0, 2, (1, 1, 1), 'odd')
    assert form_invariants(_case1_form(2)) == FormInvariants(0, 2, (1, 1, 1), 'even')
    Q = intersection_form(PlumbingGraph.linear(-2, -2))
    assert form_invariants(Q) == FormInvariants(3, 2, (0, 2, 0), 'even')
    assert form_invariants(Q).as_dict()['signature'] == [0, 2, 0]


def test_diagonalize_zero_diagonal():
    diag = diagonalize(_case1_form(0))
    assert sorted(d > 0 for d in diag) == [False, False, True]
    assert sum(1 for d in diag if d < 0) == 1


def test_case1_forms():
    for n in range(51):
        inv = form_invariants(_case1_form(n))
        assert inv.determinant == 0
        assert inv.rank == 2
        assert inv.parity == ('odd' if n % 2 else 'even')
    assert separating_invariant(_case1_form(0), _case1_form(1)) == 'parity'
    assert separating_invariant(_case1_form(2), _case1_form(4)) is None
    assert separating_invariant(_case1_form(1), IntersectionForm([[1]])) == 'dimension'


def test_congruent_examples():
    Q = _case1_form(1)
    witness = congruent_within_bound(Q, Q, 1)
    assert witness.tolist() == numpy.eye(3, dtype=int).tolist()

    assert congruent_within_bound(_case1_form(0), _case1_form(1), 2) is None

    Q = intersection_form(PlumbingGraph.linear(-2, -2))
    Q2 = _conjugate([[1, 1], [0, 1]], Q.tolist())
    witness = congruent_within_bound(Q, Q2, 1)
    assert witness is not None
    assert _conjugate(witness, Q2) == Q.tolist()
    assert abs(int(numpy.round(numpy.linalg.det(numpy.array(witness, dtype=float))))) == 1


def _first_witness(Q1, Q2, bound):
    for entries in itertools.product(range(-bound, bound + 1), repeat=4):
        P = [list(entries[:2]), list(entries[2:])]
        det = P[0][0] * P[1][1] - P[0][1] * P[1][0]
        if abs(det) == 1 and _conjugate(P, Q2) == Q1:
            return P
    return None


def test_witness_is_lexicographically_first():
    # equal forms answer with the identity, not the first witness
    Q = [[-2, 1], [1, -2]]
    assert _first_witness(Q, Q, 1) == [[-1, -1], [0, 1]]
    assert congruent_within_bound(Q, Q, 1).tolist() == [[1, 0], [0, 1]]

    for Q1, Q2 in [([[-2, 1], [1, -2]], [[-2, -1], [-1, -2]]),
                   ([[0, -1], [-1, -1]], [[1, 0], [0, -1]])]:
        assert congruent_within_bound(Q1, Q2, 1).tolist() == _first_witness(Q1, Q2, 1)

    rng = numpy.random.RandomState(21)
    for trial in range(30):
        A = rng.randint(-3, 4, size=(2, 2))
        Q2 = (numpy.triu(A) + numpy.triu(A, 1).T).tolist()
        Q1 = _conjugate(_random_unimodular(rng, 2), Q2)
        if Q1 == Q2:
            continue
        with warnings.catch_warnings():
            warnings.simplefilter('ignore', UserWarning)
            witness = congruent_within_bound(Q1, Q2, 1)
        found = None if witness is None else witness.tolist()
        assert found == _first_witness(Q1, Q2, 1)


def test_bound_too_small_warns():
    Q2 = [[1, 0], [0, -1]]
    Q1 = _conjugate([[1, 1], [0, 1]], Q2)
    with pytest.warns(UserWarning):
        assert congruent_within_bound(Q1, Q2, 0) is None
    assert congruent_within_bound(Q1, Q2, 1) is not None


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        congruent_within_bound(_case1_form(1), [[1]])


def test_invariants_are_congruence_invariant():
    rng = numpy.random.RandomState(16)
    for trial in range(200):
        n = rng.randint(2, 5)
        A = rng.randint(-3, 4, size=(n, n))
        Q = (numpy.triu(A) + numpy.triu(A, 1).T).tolist()
        P = _random_unimodular(rng, n)
        assert form_invariants(Q) == form_invariants(_conjugate(P, Q))


def test_self_congruence():
    rng = numpy.random.RandomState(17)
    for trial in range(50):
        n = rng.randint(1, 4)
        A = rng.randint(-3, 4, size=(n, n))
        Q = (numpy.triu(A) + numpy.triu(A, 1).T).tolist()
        assert congruent_within_bound(Q, Q, 1) is not None


if __name__ == '__main__':
    test_form_invariants()
    test_congruent_examples()
    test_invariants_are_congruence_invariant()
