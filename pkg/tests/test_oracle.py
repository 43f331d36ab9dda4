import pytest

from gfft.afft import add_plan
from gfft.cfft import cyclic_plan, tilde_to_std
from gfft.errors import DuplicatePoint
from gfft.gf import field_make
from gfft.mfft import mult_plan
from gfft.oracle import basis_matrix, lagrange_interpolate, mpe_horner
from gfft.poly import INF, Poly, RatFn


def test_horner_zero_and_random(F17, rng):
    assert mpe_horner(Poly.zero(F17), list(range(17))) == [0] * 17
    f = Poly(F17, [rng.randrange(17) for _ in range(6)])
    assert mpe_horner(f, [3, 5]) == [f.eval(3), f.eval(5)]


def test_horner_inf_aware(F127):
    f = Poly(F127, (1, 2))
    assert mpe_horner(f, [INF]) == [INF]
    assert mpe_horner(Poly.constant(F127, 9), [INF]) == [9]
    x1 = RatFn(F127, Poly(F127, (42, 0, 1)), Poly(F127, (21, 1)))
    assert mpe_horner(x1, [106, INF, 0]) == [INF, INF, F127.div(42, 21)]


def test_lagrange_examples(F17, rng):
    assert lagrange_interpolate(F17, [5], [9]) == Poly.constant(F17, 9)
    f = Poly(F17, [rng.randrange(17) for _ in range(8)])
    pts = rng.sample(range(17), 8)
    assert lagrange_interpolate(F17, pts, [f.eval(x) for x in pts]) == f
    with pytest.raises(DuplicatePoint):
        lagrange_interpolate(F17, [1, 1], [2, 3])


def test_lagrange_inverts_cyclic_values(rng):
    F23 = field_make(23)
    plan = cyclic_plan(F23, (2, 2, 2, 3))
    c = [rng.randrange(23) for _ in range(24)]
    from gfft.cfft import q1_fft

    ev = q1_fft(plan, c)
    finite = [(pt, v) for pt, v in zip(ev.points, ev.values) if pt is not INF]
    # 23 finite evaluations pin the interpolant of degree < 23; diff with the
    # converted polynomial (degree <= 23) is a multiple of x^23 - x
    f = Poly(F23, list(tilde_to_std(plan, c).values))
    interp = lagrange_interpolate(F23, [p for p, _ in finite], [v for _, v in finite])
    diff = f - interp
    vanishing = Poly(F23, [0, 22] + [0] * 21 + [1])  # x^23 - x
    assert diff.is_zero() or (diff % vanishing).is_zero()


def test_mult_basis_is_identity(F17):
    bm = basis_matrix(mult_plan(F17, (2, 2, 2, 2)))
    n = 16
    assert bm.matrix == [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def test_trivial_basis_matrix(F17):
    bm = basis_matrix(mult_plan(F17, ()))
    assert bm.matrix == [[1]]


def test_additive_basis_column(F9):
    plan = add_plan(F9, [1, 3])
    bm = basis_matrix(plan)
    col = [bm.matrix[i][3] for i in range(9)]  # index e = p picks ell_1
    ell1 = plan.lin_polys[1]
    assert col == [ell1[i] for i in range(9)]


def test_basis_matrix_solve_inverts_apply(F9, rng):
    plan = add_plan(F9, [1, 3])
    bm = basis_matrix(plan)
    for _ in range(20):
        v = [rng.randrange(9) for _ in range(9)]
        assert bm.solve(bm.apply(v)) == v
