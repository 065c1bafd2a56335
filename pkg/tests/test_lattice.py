import numpy
import pytest

from toricfill import LatticeMat, LatticeVec, det2, rotate90, sl2_sending_to_e1
from toricfill.src._helper.exceptions import NotPrimitive


def test_det2():
    assert det2(LatticeVec(1, 0), LatticeVec(0, 1)) == 1
    assert det2(LatticeVec(0, 1), LatticeVec(-1, -1)) == 1
    for n in range(5):
        assert det2(LatticeVec(-n, -1), LatticeVec(-n, -1)) == 0


def test_rotate90():
    assert rotate90(LatticeVec(1, 0), 'ccw') == LatticeVec(0, 1)
    assert rotate90(LatticeVec(-1, 1), 'ccw') == LatticeVec(-1, -1)
    assert rotate90(LatticeVec(-1, -1), 'cw') == LatticeVec(-1, 1)
    with pytest.raises(TypeError):
        rotate90(LatticeVec(1, 0), 'left')


def test_sl2_sending_to_e1():
    assert sl2_sending_to_e1(LatticeVec(1, 0)) == LatticeMat.identity()
    u = sl2_sending_to_e1(LatticeVec(0, 1))
    assert u.det() == 1
    assert u @ LatticeVec(0, 1) == LatticeVec(1, 0)
    with pytest.raises(NotPrimitive):
        sl2_sending_to_e1(LatticeVec(2, 4))
    with pytest.raises(NotPrimitive):
        sl2_sending_to_e1(LatticeVec(0, 0))


def test_sl2_on_signed_vectors():
    for v in [(-1, 0), (0, -1), (-3, -7), (5, -2), (-8, 13), (1, 1)]:
        v = LatticeVec(*v)
        U = sl2_sending_to_e1(v)
        assert U.det() == 1
        assert U @ v == LatticeVec(1, 0)


def test_det2_is_multiplicative():
    rng = numpy.random.RandomState(0)
    for trial in range(1000):
        a, b, c, d, x1, y1, x2, y2 = rng.randint(-50, 51, size=8)
        U = LatticeMat(a, b, c, d)
        u, v = LatticeVec(x1, y1), LatticeVec(x2, y2)
        assert det2(U @ u, U @ v) == U.det() * det2(u, v)


def test_rotations_invert():
    rng = numpy.random.RandomState(1)
    for trial in range(1000):
        v = LatticeVec(*rng.randint(-1000, 1001, size=2))
        assert rotate90(rotate90(v, 'ccw'), 'cw') == v


def test_sl2_on_random_primitive_vectors():
    rng = numpy.random.RandomState(2)
    count = 0
    while count < 1000:
        v = LatticeVec(*rng.randint(-10 ** 6, 10 ** 6 + 1, size=2))
        if not v.is_primitive():
            continue
        U = sl2_sending_to_e1(v)
        assert U.is_special()
        assert U @ v == LatticeVec(1, 0)
        count += 1


def test_arbitrary_precision():
    big = 10 ** 40 + 1
    v = LatticeVec(big, 10 ** 40)
    U = sl2_sending_to_e1(v)
    assert U @ v == LatticeVec(1, 0)
    assert det2(v, LatticeVec(1, 1)) == 1


def test_matrix_products():
    A = LatticeMat(2, -1, 1, 0)
    assert (A @ LatticeMat.identity()) == A
    assert (A @ A).det() == A.det() ** 2
    assert A.transpose().det() == A.det()
    assert LatticeMat.shear(3) @ LatticeVec(1, 0) == LatticeVec(1, 0)


def test_rejects_non_integers():
    with pytest.raises(TypeError):
        LatticeVec(True, 0)
    with pytest.raises(TypeError):
        LatticeVec(0.5, 1)


if __name__ == '__main__':
    test_det2()
    test_rotate90()
    test_sl2_sending_to_e1()
    test_det2_is_multiplicative()
    test_sl2_on_random_primitive_vectors()
