import pytest

from gfft.cfft import (
    cyclic_plan,
    q1_fft,
    q1_ifft,
    ratfn_substitute,
    std_to_tilde,
    tilde_to_std,
)
from gfft.errors import (
    BasisMismatch,
    LengthMismatch,
    PrimitivityFailure,
    RadixNotDividing,
    ValidationError,
)
from gfft.gf import field_make
from gfft.oracle import basis_matrix, mpe_horner
from gfft.poly import INF, Poly
from gfft.repro import WORKED_COEFFS, WORKED_VALUES
from gfft.vectors import BASIS_STANDARD, CoeffVec


@pytest.fixture(scope="module")
def plan127():
    return cyclic_plan(field_make(127), (2,) * 7, m_pair=(126, 3))


@pytest.fixture(scope="module")
def plan7():
    return cyclic_plan(field_make(7), (2, 2, 2))


@pytest.fixture(scope="module")
def plan23():
    return cyclic_plan(field_make(23), (2, 2, 2, 3))


@pytest.fixture(scope="module")
def plan11():
    return cyclic_plan(field_make(11), (2, 2))


def test_plan_errors():
    F7 = field_make(7)
    with pytest.raises(RadixNotDividing):
        cyclic_plan(F7, (3,))
    F127 = field_make(127)
    with pytest.raises(PrimitivityFailure):
        cyclic_plan(F127, (2, 2), m_pair=(0, 1))  # irreducible but root order 4


def test_published_structure(plan127):
    assert plan127.quads[0] == Poly(plan127.field, (85, 42, 1))
    assert [lv.poles[0] for lv in plan127.levels] == [106, 85, 43, 86, 45, 90, 53]
    x1 = plan127.x_funs[1]
    assert x1.num == Poly(plan127.field, (42, 0, 1))
    assert x1.den == Poly(plan127.field, (21, 1))
    assert plan127.tower_num == Poly(plan127.field, [85, 42] + [0] * 126 + [1])
    assert plan127.scale_const == 100


def test_worked_example_reproduces(plan127):
    ev = q1_fft(plan127, list(WORKED_COEFFS))
    expected = {a: (fv, tv) for a, fv, tv in WORKED_VALUES}
    for idx, pt in enumerate(ev.points):
        key = "inf" if pt is INF else pt
        assert (ev.values[idx], ev.tilde[idx]) == expected[key]
    assert ev.inf_value == 0
    assert ev.a0 == WORKED_COEFFS[0]


def test_worked_example_inverse_roundtrip(plan127):
    ev = q1_fft(plan127, list(WORKED_COEFFS))
    assert list(q1_ifft(plan127, ev).values) == list(WORKED_COEFFS)


def test_full_case_top_basis_element(plan7):
    # single coefficient a_0: the basis polynomial is x^q - x
    c = [1] + [0] * 7
    ev = q1_fft(plan7, c)
    assert all(v == 0 for v in ev.values)
    assert ev.a0 == 1
    std = tilde_to_std(plan7, c)
    assert list(std.values) == [0, 6] + [0] * 5 + [1]  # x^7 - x


def test_full_case_oracle_equivalence(plan7, plan23, rng):
    for plan in (plan7, plan23):
        q = plan.field.q
        bm = basis_matrix(plan)
        for _ in range(60):
            c = [rng.randrange(q) for _ in range(plan.n)]
            ev = q1_fft(plan, c)
            std = tilde_to_std(plan, c)
            assert bm.apply(c) == list(std.values)
            f = Poly(plan.field, list(std.values))
            for pt, v in zip(ev.points, ev.values):
                if pt is INF:
                    assert v == 0
                else:
                    assert v == f.eval(pt)


def test_partial_case_oracle_equivalence(plan11, rng):
    bm = basis_matrix(plan11)
    for _ in range(60):
        c = [rng.randrange(11) for _ in range(4)]
        ev = q1_fft(plan11, c)
        std = tilde_to_std(plan11, c)
        assert bm.apply(c) == list(std.values)
        f = Poly(plan11.field, list(std.values))
        assert list(ev.values) == [f.eval(pt) for pt in ev.points]


def test_roundtrips(plan7, plan11, plan23, rng):
    for plan in (plan7, plan11, plan23):
        q = plan.field.q
        for _ in range(60):
            c = [rng.randrange(q) for _ in range(plan.n)]
            assert list(q1_ifft(plan, q1_fft(plan, c)).values) == c


def test_fft_of_ifft_identity(plan23, plan11, rng):
    # full plans: attainable value vectors have a zero slot at infinity,
    # arbitrary finite values, and an arbitrary carried top coefficient
    for _ in range(30):
        vals = [0 if pt is INF else rng.randrange(23) for pt in plan23.points]
        a0 = rng.randrange(23)
        coeffs = q1_ifft(plan23, vals, a0=a0)
        ev = q1_fft(plan23, coeffs)
        assert list(ev.values) == vals and ev.a0 == a0
    for _ in range(30):
        vals = [rng.randrange(11) for _ in plan11.points]
        coeffs = q1_ifft(plan11, vals)
        assert list(q1_fft(plan11, coeffs).values) == vals


def test_ifft_requires_carried_coefficient(plan7):
    vals = [0] * 8
    with pytest.raises(ValidationError):
        q1_ifft(plan7, vals)
    assert list(q1_ifft(plan7, vals, a0=0).values) == [0] * 8


def test_conversion_roundtrip_and_horner_anchor(plan23, plan127, rng):
    for _ in range(40):
        c = [rng.randrange(23) for _ in range(24)]
        std = tilde_to_std(plan23, c)
        back = std_to_tilde(plan23, std)
        assert list(back.values) == c
    std = tilde_to_std(plan127, list(WORKED_COEFFS))
    f = Poly(plan127.field, list(std.values))
    assert f.eval(106) == 123  # published value pair at 106
    assert list(std_to_tilde(plan127, std).values) == list(WORKED_COEFFS)


def test_std_to_tilde_rejects_large_degree(plan11):
    with pytest.raises(Exception):
        std_to_tilde(plan11, [0] * 5)


def test_radix_order_variants(rng):
    F23 = field_make(23)
    for radices in ((3, 2, 2, 2), (2, 3, 2, 2)):
        plan = cyclic_plan(F23, radices)
        for _ in range(25):
            c = [rng.randrange(23) for _ in range(24)]
            ev = q1_fft(plan, c)
            f = Poly(F23, list(tilde_to_std(plan, c).values))
            for pt, v in zip(ev.points, ev.values):
                if pt is not INF:
                    assert v == f.eval(pt)
            assert list(q1_ifft(plan, ev).values) == c


def test_trivial_plan(rng):
    F11 = field_make(11)
    plan = cyclic_plan(F11, ())
    ev = q1_fft(plan, [5])
    assert list(ev.values) == [5]
    assert list(q1_ifft(plan, ev).values) == [5]


def test_fiber_choice_override():
    F11 = field_make(11)
    default = cyclic_plan(F11, (2, 2))
    keys = set()
    xr = default.x_funs[2]
    for alpha in range(11):
        v = xr.eval_place(alpha)
        if v is not INF:
            keys.add(v)
    other = sorted(k for k in keys if k not in (0, default.bucket_key))
    if other:
        plan = cyclic_plan(F11, (2, 2), fiber_key=other[0])
        assert plan.bucket_key == other[0]
        c = [1, 2, 3, 4]
        f = Poly(F11, list(tilde_to_std(plan, c).values))
        ev = q1_fft(plan, c)
        assert list(ev.values) == [f.eval(pt) for pt in ev.points]
    # 0 is either not a fiber value or the unscalable one; both must raise
    with pytest.raises(ValidationError):
        cyclic_plan(F11, (2, 2), fiber_key=0)


def test_threads_match_serial(plan23, rng):
    c = [rng.randrange(23) for _ in range(24)]
    serial = q1_fft(plan23, c)
    threaded = q1_fft(plan23, c, threads=3)
    assert serial.values == threaded.values and serial.tilde == threaded.tilde


def test_basis_and_length_errors(plan7):
    with pytest.raises(LengthMismatch):
        q1_fft(plan7, [1, 2, 3])
    with pytest.raises(BasisMismatch):
        q1_fft(plan7, CoeffVec((0,) * 8, BASIS_STANDARD))
    with pytest.raises(LengthMismatch):
        q1_ifft(plan7, [1, 2, 3])


def test_tower_identities_outside_build(plan23):
    # recheck what the build asserts, from the stored plan data
    for i in range(1, plan23.r + 1):
        lv = plan23.levels[i - 1]
        mi_num, mi_den = lv.num, lv.den
        from gfft.poly import RatFn

        mi = RatFn(plan23.field, mi_num, mi_den)
        assert ratfn_substitute(mi, plan23.x_funs[i - 1]) == plan23.x_funs[i]
        assert sorted(lv.poles) == sorted(mi_den.roots())
