import warnings
from fractions import Fraction

import pytest
import sympy

from toricfill import (PlumbingGraph, Lens, S1xS2, NonFree, Free, FamilyRequest,
                       continued_fraction, eval_cf, family_case1, family_case2,
                       family_case3, family_free, generate_fillings, canonical_form,
                       classify_linear_boundary, concavity_certificate,
                       intersection_form)
from toricfill.src._helper.exceptions import (DivisionByZero, InvalidLens, NotCoprime,
                                              UnsupportedTarget)


def _weights(graphs):
    return [list(g.weights) for g in graphs]


def test_continued_fraction():
    assert continued_fraction(3, 4).coefficients == (0, -2, -2, -2)
    assert continued_fraction(5, 7).coefficients == (0, -2, -2, -3)
    assert continued_fraction(2, 1).coefficients == (2, )
    assert continued_fraction(3, 4).value == Fraction(3, 4)
    assert continued_fraction(3, 4).as_plumbing() == PlumbingGraph.linear(0, -2, -2, -2)
    with pytest.raises(NotCoprime):
        continued_fraction(4, 6)
    with pytest.raises(InvalidLens):
        continued_fraction(0, 1)


def test_eval_cf():
    assert eval_cf([0, -2, -2, -2]) == Fraction(3, 4)
    assert eval_cf([3]) == 3
    assert eval_cf([0, -3, -2, -2]) == Fraction(3, 7)
    with pytest.raises(DivisionByZero):
        eval_cf([1, 0])
    with pytest.raises(ZeroDivisionError):
        eval_cf([5, 1, 1, 0])


def test_expansion_shape_and_inversion():
    for k in range(1, 21):
        for l in range(1, 41):
            if sympy.igcd(k, l) != 1:
                continue
            cf = continued_fraction(k, l)
            assert cf.coefficients[0] >= 0
            assert all(s <= -2 for s in cf.coefficients[1:])
            assert eval_cf(cf.coefficients) == Fraction(k, l)


def test_greedy_expansion_is_the_only_one():
    bound = 12
    found = {}

    def record(coefficients, k, l):
        assert (k, l) not in found, (coefficients, found.get((k, l)))
        found[(k, l)] = coefficients

    for s1 in range(1, bound + 1):
        record((s1, ), s1, 1)
    # a tail (s_2, ..., s_n) evaluates to p/q with p < -q < 0
    level = [((s, ), s, 1) for s in range(-bound, -1)]
    for length in range(1, 6):
        for coefficients, p, q in level:
            for s1 in range(0, bound + 1):
                k = q - s1 * p
                if k <= bound:
                    record((s1, ) + coefficients, k, -p)
        if length == 5:
            break
        # prepending s gives (q - s p) / -p; the new denominator only grows
        level = [((s, ) + coefficients, q - s * p, -p)
                 for coefficients, p, q in level if -p <= bound
                 for s in range(-bound, -1)]
    for (k, l), coefficients in found.items():
        assert continued_fraction(k, l).coefficients == coefficients
    for k in range(1, bound + 1):
        for l in range(1, bound + 1):
            if sympy.igcd(k, l) != 1:
                continue
            greedy = continued_fraction(k, l).coefficients
            if len(greedy) <= 6 and max(abs(s) for s in greedy) <= bound:
                assert found[(k, l)] == greedy


def test_family_case1():
    assert _weights(family_case1(3)) == [[0, 0, 0], [1, 0, -1], [2, 0, -2]]
    assert _weights(family_case1(1, n0=5)) == [[5, 0, -5]]
    for g in family_case1(6):
        assert classify_linear_boundary(g) == NonFree(S1xS2(), 0)
    with pytest.raises(TypeError):
        family_case1(0)


def test_family_case2():
    assert _weights(family_case2(3, 1, 3)) == [[3], [0, -2, -2, -2], [0, -3, -2, -2]]
    assert _weights(family_case2(1, 0, 2)) == [[1], [0, -2]]
    for k, l in ((3, 3), (2, 0), (0, 1), (4, 2)):
        with pytest.raises(InvalidLens):
            family_case2(k, l, 1)


def test_family_case3():
    assert _weights(family_case3([PlumbingGraph.linear(3)], 1)) == [[3, 0, 0]]
    assert _weights(family_case3([(1, 0, -1)], 2)) == [[1, 0, -1, 0, 0, 0, 0]]
    for g, padded in zip(family_case2(5, 2, 4), family_case3(family_case2(5, 2, 4), 3)):
        base = classify_linear_boundary(g)
        assert classify_linear_boundary(padded) == NonFree(base.underlying, base.half_lutz + 3)
    with pytest.raises(TypeError):
        family_case3([PlumbingGraph.linear(3)], 0)


def test_family_free():
    assert family_free(1, 1) == [PlumbingGraph.cyclic(0, 0, 0, 0)]
    assert family_free(1, 1, n0=1) == [PlumbingGraph.cyclic(1, 0, -1, 0)]
    assert family_free(2, 1) == [PlumbingGraph.cyclic(*[0] * 8)]


def test_generate_case1():
    request = FamilyRequest(NonFree(S1xS2(), 0), 4)
    with pytest.warns(UserWarning):
        family = generate_fillings(request)
    assert family.case == 'case1'
    assert len(family) == 4
    assert [m.toric_minimal for m in family] == [True, False, True, True]
    assert len(set(m.canonical_form for m in family)) == 4


def test_generate_case2():
    target = NonFree(Lens(3, 1), 0)
    with warnings.catch_warnings():
        warnings.simplefilter('error', UserWarning)
        family = generate_fillings(FamilyRequest(target, 3))
    assert family.case == 'case2'
    assert family.graphs == family_case2(3, 1, 3)
    for member in family:
        assert member.classification == target
        assert member.certificate.verify(intersection_form(member.graph))


def test_generate_case3_and_free():
    family = generate_fillings(FamilyRequest(NonFree(Lens(3, 1), 2), 2))
    assert family.case == 'case3'
    assert _weights(family.graphs) == [[3, 0, 0, 0, 0], [0, -2, -2, -2, 0, 0, 0, 0]]

    with pytest.warns(UserWarning):
        family = generate_fillings(FamilyRequest(Free(1), 3))
    assert family.case == 'free'
    assert _weights(family.graphs) == [[0, 0, 0, 0], [1, 0, -1, 0], [2, 0, -2, 0]]
    assert family.as_dict()['target'] == 't3:1'


def test_generate_rejects_targets():
    with pytest.raises(UnsupportedTarget):
        generate_fillings(FamilyRequest('lens:3,1', 1))
    with pytest.raises(TypeError):
        FamilyRequest(Free(1), 0)


def test_case1_sweep():
    with pytest.warns(UserWarning):
        family = generate_fillings(FamilyRequest(NonFree(S1xS2(), 0), 51))
    assert len(family) == 51
    for member in family:
        assert member.classification.tight
        assert member.toric_minimal == (member.index != 1)


def test_case2_sweep():
    for k in range(2, 21):
        for l in range(1, k):
            if sympy.igcd(k, l) != 1:
                continue
            members = family_case2(k, l, 11)
            assert len(set(canonical_form(g) for g in members)) == 11
            for m, g in enumerate(members):
                assert g.weights[0] >= 0
                assert all(s <= -2 for s in g.weights[1:])
                assert eval_cf(g.weights) == Fraction(k, m * k + l)
                assert classify_linear_boundary(g) == NonFree(Lens(k, l), 0)
                form = intersection_form(g)
                check = concavity_certificate(form)
                assert check.found
                assert check.certificate.verify(form)


if __name__ == '__main__':
    test_continued_fraction()
    test_greedy_expansion_is_the_only_one()
    test_generate_case2()
