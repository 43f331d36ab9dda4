"""Cyclic-case transform: evaluation sets carved from the order-(q+1) cycle
of fractional-linear maps, for smooth n | q+1.

A plan builds the subfield tower x_0, x_1, ..., x_r symbolically (each x_i a
degree-|G_i| rational function of x), recovers each level's induced map on
the line below, and extracts the finite poles ("lams") of each level map by
two independent routes, failing loudly on disagreement.  Coefficients live
in the "cyclic-z" basis: products of reciprocal linear factors of the tower
coordinates, scaled so the basis spans the polynomials of degree < n.

When n = q+1 the evaluation set is every rational point including infinity;
the recursion then routes the fiber over each level's point at infinity
through precomputed constants instead of direct evaluation.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor

from .errors import (
    BasisMismatch,
    DegreeTooLarge,
    LengthMismatch,
    PrimitivityFailure,
    RadixNotDividing,
    SingularLocalSystem,
    SplitValidationFailure,
    ValidationError,
)
from .gf import Field, find_primitive_quadratic, quadratic_is_irreducible, quadratic_root_order
from .linalg import invert, mat_vec, solve
from .moebius import MoebiusMap, match_moebius
from .poly import INF, Poly, RatFn, compose_moebius, lagrange_basis_interpolate, mod_inverse
from .vectors import BASIS_CYCLIC, BASIS_STANDARD, CoeffVec, CyclicEvalVec, coeff_values


def ratfn_substitute(outer: RatFn, inner: RatFn) -> RatFn:
    """outer(inner(x)) as a reduced rational function."""
    field = outer.field
    m = outer.map_degree()
    num_p = [RatFn.constant(field, 1)]
    for _ in range(m):
        num_p.append(num_p[-1] * inner)

    def ev(poly):
        acc = RatFn.constant(field, 0)
        for k in range(m + 1):
            if poly[k]:
                acc = acc + num_p[k] * RatFn.constant(field, poly[k])
        return acc

    return ev(outer.num) / ev(outer.den)


def _quad_substitute_num(quad: Poly, num: Poly, den: Poly) -> Poly:
    """Numerator of quad(num/den) over den^2 for a quadratic quad."""
    return (num * num).scale(quad[2]) + (num * den).scale(quad[1]) + (den * den).scale(quad[0])


class CyclicLevel:
    """Connects the line in x_{i-1} to the line in x_i (radix p_i)."""

    __slots__ = ("radix", "induced", "num", "den", "poles", "wtails", "norm_const",
                 "pole_consts", "weights", "inv_local")

    def __init__(self, radix, induced, num, den, poles):
        self.radix = radix
        self.induced = induced
        self.num = num  # u(T), monic of degree radix
        self.den = den  # prod (T - pole), monic of degree radix-1
        self.poles = tuple(poles)
        self.wtails = None  # [prod_{u>k}(T - pole_u)]_k, set at build
        self.norm_const = None
        self.pole_consts = None  # {(t, k): value}, full plans only
        self.weights = None  # per point: tuple of 1/(xi - pole_u), None on pole rows
        self.inv_local = None  # per quotient: inverse local matrix, None on the pole fiber


class CyclicPlan:
    def __init__(self, field: Field, radices, m_pair=None, fiber_key=None):
        radices = tuple(int(p) for p in radices)
        for p in radices:
            if p < 2:
                raise ValidationError("radices must be >= 2")
        n = 1
        for p in radices:
            n *= p
        if (field.q + 1) % n != 0:
            raise RadixNotDividing(f"{n} does not divide q+1 = {field.q + 1}")

        self.field = field
        self.radices = radices
        self.n = n
        self.r = len(radices)
        f = field

        if m_pair is None:
            a_el, b_el = find_primitive_quadratic(field)
            a, b = a_el.raw, b_el.raw
        else:
            a, b = f(m_pair[0]).raw, f(m_pair[1]).raw
            if not quadratic_is_irreducible(field, a, b):
                raise PrimitivityFailure("x^2 + a x + b is reducible")
            if quadratic_root_order(field, a, b) != field.q**2 - 1:
                raise PrimitivityFailure("x^2 + a x + b is irreducible but not primitive")
        self.m_coeffs = (a, b)

        self.sigma = MoebiusMap(field, 0, 1, f.neg(b), f.neg(a))
        if self.sigma.order() != field.q + 1:
            raise PrimitivityFailure("companion map does not have order q+1")

        inv_b = f.inv(b)
        quad0 = Poly(field, (inv_b, f.mul(a, inv_b), 1))
        if not quadratic_is_irreducible(field, quad0[1], quad0[0]):
            raise ValidationError("ramified quadratic is reducible")
        self._check_quad_invariance(quad0)
        self.quads = [quad0]

        sizes = [1]
        for p in radices:
            sizes.append(sizes[-1] * p)
        self.subgroup_sizes = sizes  # |G_i|
        self.sizes = [n // s for s in sizes]  # evaluation count at each level

        self._build_tower()
        self._build_quads()
        self._build_points(fiber_key)
        self._extract_poles()
        self._build_scaling()
        self._build_constants_and_weights()

    # -- construction --------------------------------------------------------

    def _check_quad_invariance(self, quad):
        rf = compose_moebius(RatFn.from_poly(quad), self.sigma)
        den_lin = Poly(self.field, (self.sigma.d, self.sigma.c)).monic()
        if rf.num.monic() != quad or rf.den != den_lin * den_lin:
            raise ValidationError("quadratic is not invariant under the cyclic group")

    def _build_tower(self):
        f, q = self.field, self.field.q
        x_funs = [RatFn.x(f)]
        levels = []
        for i in range(1, self.r + 1):
            tau = self.sigma ** ((q + 1) // self.subgroup_sizes[i])
            p = self.radices[i - 1]
            shifted = compose_moebius(x_funs[i - 1], tau)
            induced = match_moebius(shifted, x_funs[i - 1])
            # x_i in x-coordinates: sum of the coset translates of x_{i-1}
            acc, cur = x_funs[i - 1], x_funs[i - 1]
            for _ in range(1, p):
                cur = compose_moebius(cur, tau)
                acc = acc + cur
            x_funs.append(acc)
            # x_i in x_{i-1}-coordinates: sum of induced-map translates of T
            mi = RatFn.x(f)
            for t in range(1, p):
                mi = mi + (induced**t).as_ratfn()
            num, den = mi.num, mi.den
            if num.degree != p or not num.is_monic():
                raise ValidationError(f"level {i} map numerator malformed: {num!r}")
            if den.degree != p - 1:
                raise ValidationError(f"level {i} map denominator degree {den.degree}")
            if ratfn_substitute(mi, x_funs[i - 1]) != x_funs[i]:
                raise ValidationError(f"tower inconsistency at level {i}")
            poles = sorted(den.roots())
            if len(poles) != p - 1 or len(set(poles)) != p - 1:
                raise SplitValidationFailure(f"level {i} denominator does not split simply")
            levels.append(CyclicLevel(p, induced, num, den, poles))
        self.x_funs = x_funs
        self.levels = levels

    def _build_quads(self):
        """Per-level quadratics 1/y_i = Q_i(x_i) and the norm constants
        relating consecutive levels, verified symbolically."""
        f = self.field
        for i in range(1, self.r + 1):
            lv = self.levels[i - 1]
            prev = self.quads[i - 1]
            p = lv.radix
            # product of prev over the induced-map translates of T
            rf = RatFn.constant(f, 1)
            for t in range(p):
                mob = (lv.induced**t).as_ratfn()
                num = _quad_substitute_num(prev, mob.num, mob.den)
                rf = rf * RatFn(f, num, mob.den * mob.den)
            mi = RatFn(f, lv.num, lv.den)
            samples, seen = [], set()
            tval = 0
            while len(samples) < 3:
                if tval >= f.q:
                    raise ValidationError("cannot sample the level map")
                mv = mi.eval_place(tval)
                rv = rf.eval_place(tval)
                if mv is not INF and rv is not INF and mv not in seen:
                    samples.append((mv, rv))
                    seen.add(mv)
                tval += 1
            rows = [[f.mul(mv, mv), mv, 1] for mv, _ in samples]
            c2, c1, c0 = solve(f, rows, [rv for _, rv in samples])
            quad = Poly(f, (c0, c1, c2))
            if quad.degree != 2:
                raise ValidationError(f"level {i} quadratic degenerate")
            # exact verification of the level identity prev^p = c * den^2 * quad(m)
            norm_const = f.div(f.pow(prev.lc(), p), quad.lc())
            lhs = prev**p
            rhs = _quad_substitute_num(quad, lv.num, lv.den).scale(norm_const)
            if lhs != rhs:
                raise ValidationError(f"level {i} norm identity failed")
            monic = quad.monic()
            if not quadratic_is_irreducible(f, monic[1], monic[0]):
                raise ValidationError(f"level {i} quadratic splits; tower corrupted")
            lv.norm_const = norm_const
            self.quads.append(quad)

    def _build_points(self, fiber_key):
        f, q, n = self.field, self.field.q, self.n
        xr = self.x_funs[self.r]
        buckets = {}
        for alpha in range(q):
            buckets.setdefault(xr.eval_place(alpha), []).append(alpha)
        buckets.setdefault(xr.eval_place(INF), []).append(INF)
        if len(buckets) != (q + 1) // n or any(len(v) != n for v in buckets.values()):
            raise ValidationError("evaluation fibers do not split evenly")
        self.is_full = n == q + 1
        if self.is_full:
            key = INF
        elif fiber_key is not None:
            key = f(fiber_key).raw
            if key not in buckets:
                raise ValidationError(f"{fiber_key} is not an evaluation fiber value")
            if key == 0:
                raise ValidationError("the fiber at 0 cannot be rescaled; choose another")
        else:
            finite = sorted(k for k in buckets if k is not INF and k != 0)
            if not finite:
                raise ValidationError("no usable evaluation fiber")
            key = finite[0]
        self.bucket_key = key

        start = INF if self.is_full else min(buckets[key])
        gen = self.sigma ** ((q + 1) // n)
        points = gen.orbit(start, length=n)
        if sorted(map(repr, points)) != sorted(map(repr, buckets[key])):
            raise ValidationError("orbit does not reproduce the evaluation fiber")
        self.points = points

        level_points = [points]
        for i in range(1, self.r + 1):
            lv = self.levels[i - 1]
            mi = RatFn(f, lv.num, lv.den)
            prev = level_points[-1]
            level_points.append([mi.eval_place(prev[s]) for s in range(self.sizes[i])])
        self.level_points = level_points

        # full fiber-constancy validation against the symbolic tower
        for i in range(1, self.r + 1):
            nq = self.sizes[i]
            xi = self.x_funs[i]
            for s, pt in enumerate(points):
                if xi.eval_place(pt) != level_points[i][s % nq]:
                    raise ValidationError(f"fiber constancy violated at level {i}")

        # the infinity fiber (poles of the full tower map), per level
        if self.is_full:
            self.inf_levels = level_points
        else:
            inf_pts = gen.orbit(INF, length=n)
            inf_levels = [inf_pts]
            for i in range(1, self.r + 1):
                lv = self.levels[i - 1]
                mi = RatFn(f, lv.num, lv.den)
                inf_levels.append([mi.eval_place(v) for v in inf_levels[-1][: self.sizes[i]]])
            self.inf_levels = inf_levels

    def _extract_poles(self):
        """Cross-validate each level's poles: cycle order read off the point
        sequence vs roots of the level denominator vs induced-map orbit."""
        for i in range(1, self.r + 1):
            lv = self.levels[i - 1]
            nq = self.sizes[i]
            seq = [self.inf_levels[i - 1][t * nq] for t in range(1, lv.radix)]
            if sorted(seq) != list(lv.poles):
                raise SplitValidationFailure(
                    f"level {i} pole sets disagree: orbit {seq} vs denominator {lv.poles}"
                )
            orbit = []
            cur = INF
            for _ in range(lv.radix - 1):
                cur = lv.induced.apply(cur)
                orbit.append(cur)
            if orbit != seq:
                raise SplitValidationFailure(
                    f"level {i} induced-map orbit {orbit} disagrees with point order {seq}"
                )
            lv.poles = tuple(seq)  # cycle order, used by the z-basis
            lv.wtails = _wtails(self.field, seq)

    def _build_scaling(self):
        f, n = self.field, self.n
        xr = self.x_funs[self.r]
        self.tower_num = xr.num
        self.tower_den = xr.den
        if not self.tower_num.is_monic() or self.tower_num.degree != n:
            raise ValidationError("tower numerator malformed")
        if self.tower_den.degree != n - 1:
            raise ValidationError("tower denominator malformed")
        for v in self.inf_levels[0]:
            if v is not INF and self.tower_den.eval(v) != 0:
                raise ValidationError("infinity fiber misidentified")

        self.scale_const = self.quads[self.r].lc()
        # exact identity pinning the scale constant against the whole tower
        lhs = (self.quads[0] ** n).scale(self.scale_const)
        rhs = _quad_substitute_num(self.quads[self.r], self.tower_num, self.tower_den)
        if lhs != rhs:
            raise ValidationError("scale constant fails the tower identity")
        if not self.is_full:
            # independent single-point route: product of the quadratic over one orbit
            probe = next(
                alpha
                for alpha in range(f.q)
                if alpha not in set(self.inf_levels[0]) and self.tower_den.eval(alpha) != 0
            )
            gen = self.sigma ** ((f.q + 1) // n)
            prod = 1
            cur = probe
            for _ in range(n):
                prod = f.mul(prod, self.quads[0].eval(cur))
                cur = gen.apply(cur)
            # 1/prod = den(probe)^2 / (c * quad0(probe)^n), so
            # c = den(probe)^2 * prod / quad0(probe)^n
            dval = self.tower_den.eval(probe)
            expected = f.div(f.mul(f.mul(dval, dval), prod), f.pow(self.quads[0].eval(probe), n))
            if expected != self.scale_const:
                raise ValidationError("scale constant disagrees with the orbit product")

        scales = []
        for pt in self.points:
            if pt is INF:
                scales.append(None)
                continue
            uval = self.tower_num.eval(pt)
            if uval == 0:
                raise ValidationError("tower numerator vanishes on an evaluation point")
            qn = self.field.pow(self.quads[0].eval(pt), n)
            scales.append(f.div(f.mul(self.scale_const, qn), uval))
        self.scales = scales

        if self.is_full:
            self.base_value = 0
        else:
            key = self.bucket_key
            self.base_value = f.div(key, self.quads[self.r].eval(key)) if key else 0
            if self.base_value == 0:
                raise ValidationError("base level value vanishes; fiber unusable")

    def _build_constants_and_weights(self):
        f = self.field
        # W chain: value of (tower map * reciprocal quadratic * level coordinate)
        # at each level's point at infinity
        w = f.inv(self.quads[self.r].lc())
        w_chain = [None] * (self.r + 1)
        w_chain[self.r] = w
        for j in range(self.r - 1, 0, -1):
            w_chain[j] = f.div(w_chain[j + 1], self.levels[j].num.lc())
        self._w_chain = w_chain

        for i in range(1, self.r + 1):
            lv = self.levels[i - 1]
            p = lv.radix
            nq = self.sizes[i]
            pts = self.level_points[i - 1]
            if self.is_full:
                consts = {}
                for t in range(1, p):
                    lam_t = lv.poles[t - 1]
                    u_at = lv.num.eval(lam_t)
                    for k in range(t, p):
                        val = w_chain[i]
                        for u_ in range(k + 1, p):
                            val = f.mul(val, f.sub(lam_t, lv.poles[u_ - 1]))
                        consts[(t, k)] = f.div(val, u_at)
                    if consts[(t, t)] == 0:
                        raise SingularLocalSystem("zero diagonal in the pole-fiber system")
                lv.pole_consts = consts
            weights = []
            for s, xi in enumerate(pts):
                if self.is_full and s % nq == 0:
                    weights.append(None)
                    continue
                if xi is INF or xi in lv.poles:
                    raise ValidationError("evaluation point collides with a level pole")
                weights.append(tuple(f.inv(f.sub(xi, lam)) for lam in lv.poles))
            lv.weights = weights
            inv_local = []
            for sq in range(nq):
                if self.is_full and sq == 0:
                    inv_local.append(None)
                    continue
                rows = []
                for t in range(p):
                    wt = weights[sq + t * nq]
                    row, acc = [1], 1
                    for u_ in range(p - 1):
                        acc = f.mul(acc, wt[u_])
                        row.append(acc)
                    rows.append(row)
                inv_local.append(invert(f, rows))
            lv.inv_local = inv_local

    # -- introspection ---------------------------------------------------------

    def pole_sequence(self):
        """The per-level pole lists in cycle order."""
        return [list(lv.poles) for lv in self.levels]

    def example_constants(self):
        """For radix-2 full plans: the single precomputed constant per level."""
        if not self.is_full or any(lv.radix != 2 for lv in self.levels):
            return None
        return [lv.pole_consts[(1, 1)] for lv in self.levels]

    def __repr__(self):
        return (
            f"CyclicPlan(q={self.field.q}, n={self.n}, radices={self.radices}, "
            f"m={self.m_coeffs}, fiber={'inf' if self.is_full else self.bucket_key})"
        )


def cyclic_plan(field: Field, radices, m_pair=None, fiber_key=None) -> CyclicPlan:
    return CyclicPlan(field, radices, m_pair, fiber_key)


def _wtails(field, poles):
    """wtails[k] = prod_{u > k} (T - pole_u), k = 0..len(poles)."""
    tails = [Poly.one(field)]
    for lam in reversed(poles):
        tails.append(tails[-1] * Poly(field, (field.neg(lam), 1)))
    tails.reverse()
    return tails


# ---------------------------------------------------------------------------
# forward / inverse transforms


def q1_fft(plan: CyclicPlan, coeffs, threads: int = 0) -> CyclicEvalVec:
    vals = coeff_values(coeffs, BASIS_CYCLIC, plan.n)
    vals = [v if isinstance(v, int) else plan.field(v).raw for v in vals]
    tilde = _forward(plan, 0, vals, threads)
    f = plan.field
    out = []
    for idx, pt in enumerate(plan.points):
        if pt is INF:
            out.append(tilde[idx])  # structurally zero; printed convention
        else:
            out.append(f.mul(plan.scales[idx], tilde[idx]))
    a0 = vals[0] if plan.is_full else None
    return CyclicEvalVec(plan.points, out, tilde, a0)


def _forward(plan, depth, coeffs, threads=0):
    f = plan.field
    if depth == plan.r:
        return [f.mul(coeffs[0], plan.base_value) if plan.base_value else 0]
    lv = plan.levels[depth]
    p = lv.radix
    nq = plan.sizes[depth + 1]
    if threads and threads > 1 and depth == 0 and plan.r >= 1:
        with ThreadPoolExecutor(max_workers=min(threads, p)) as pool:
            subs = list(pool.map(lambda k: _forward(plan, 1, coeffs[k::p]), range(p)))
    else:
        subs = [_forward(plan, depth + 1, coeffs[k::p]) for k in range(p)]
    add, mul = f.add, f.mul
    pts = plan.level_points[depth]
    out = [0] * len(pts)
    weights = lv.weights
    if plan.is_full:
        consts = lv.pole_consts
        for t in range(1, p):
            acc = 0
            for k in range(t, p):
                acc = add(acc, mul(coeffs[k], consts[(t, k)]))
            out[t * nq] = acc
    for s in range(len(pts)):
        wt = weights[s]
        if wt is None:
            continue
        sq = s % nq
        acc = subs[p - 1][sq]
        for k in range(p - 1, 0, -1):
            acc = add(subs[k - 1][sq], mul(acc, wt[k - 1]))
        out[s] = acc
    return out


def q1_ifft(plan: CyclicPlan, values, a0=None) -> CoeffVec:
    """Invert q1_fft.  Accepts the CyclicEvalVec from the forward transform,
    or a value sequence in plan point order (with a0 supplied separately for
    full plans)."""
    if isinstance(values, CyclicEvalVec):
        a0 = values.a0 if a0 is None else a0
        seq = list(values.values)
        if list(values.points) != list(plan.points):
            lookup = values.as_dict()
            seq = [lookup[pt] for pt in plan.points]
    else:
        seq = list(values)
    if len(seq) != plan.n:
        raise LengthMismatch(f"expected {plan.n} values, got {len(seq)}")
    f = plan.field
    tilde = []
    for idx, pt in enumerate(plan.points):
        if pt is INF:
            tilde.append(0)
        else:
            tilde.append(f.div(seq[idx], plan.scales[idx]))
    out = _inverse(plan, 0, tilde)
    if plan.is_full:
        if a0 is None:
            raise ValidationError(
                "full-length inversion needs the carried top coefficient a0"
            )
        out[0] = f(a0).raw if not isinstance(a0, int) else a0
    return CoeffVec(tuple(out), BASIS_CYCLIC)


def _inverse(plan, depth, values):
    f = plan.field
    if depth == plan.r:
        if plan.is_full:
            return [None]
        return [f.div(values[0], plan.base_value)]
    lv = plan.levels[depth]
    p = lv.radix
    nq = plan.sizes[depth + 1]
    subvals = [[0] * nq for _ in range(p)]
    for sq in range(nq):
        local = lv.inv_local[sq]
        if local is None:
            continue  # pole fiber: sub-values at the level point at infinity are 0
        ys = [values[sq + t * nq] for t in range(p)]
        sol = mat_vec(f, local, ys)
        for k in range(p):
            subvals[k][sq] = sol[k]
    subc = [_inverse(plan, depth + 1, subvals[k]) for k in range(p)]
    if plan.is_full:
        consts = lv.pole_consts
        recovered = {}
        for k in range(p - 1, 0, -1):
            acc = values[k * nq]
            for k2 in range(k + 1, p):
                acc = f.sub(acc, f.mul(recovered[k2], consts[(k, k2)]))
            recovered[k] = f.div(acc, consts[(k, k)])
        for k in range(1, p):
            if subc[k][0] is not None:
                raise SingularLocalSystem("pole-fiber slot doubly determined")
            subc[k][0] = recovered[k]
    out = [0] * plan.sizes[depth]
    for k in range(p):
        out[k::p] = subc[k]
    return out


# ---------------------------------------------------------------------------
# basis conversions


def tilde_to_std(plan: CyclicPlan, coeffs) -> CoeffVec:
    """Expand cyclic-z coefficients to standard polynomial coefficients."""
    vals = coeff_values(coeffs, BASIS_CYCLIC, plan.n)
    vals = [v if isinstance(v, int) else plan.field(v).raw for v in vals]
    poly = _expand(plan, 0, vals)
    if poly.degree >= plan.n:
        raise ValidationError("basis expansion exceeded the degree bound")
    out = list(poly.coeffs) + [0] * (plan.n - len(poly.coeffs))
    return CoeffVec(tuple(out), BASIS_STANDARD)


def _expand(plan, depth, vals):
    f = plan.field
    if depth == plan.r:
        return Poly.constant(f, vals[0])
    lv = plan.levels[depth]
    p = lv.radix
    nsub = plan.sizes[depth + 1]
    U, V = lv.num, lv.den
    vpow = [Poly.one(f)]
    for _ in range(nsub - 1):
        vpow.append(vpow[-1] * V)
    total = Poly.zero(f)
    for k in range(p):
        g = _expand(plan, depth + 1, vals[k::p])
        acc = Poly.constant(f, g[nsub - 1])
        for t in range(nsub - 2, -1, -1):
            acc = acc * U + vpow[nsub - 1 - t].scale(g[t])
        total = total + lv.wtails[k] * acc
    return total


def std_to_tilde(plan: CyclicPlan, coeffs) -> CoeffVec:
    """Express a standard-coefficient polynomial of degree < n in cyclic-z."""
    if isinstance(coeffs, Poly):
        vals = list(coeffs.coeffs)
    else:
        vals = coeff_values(coeffs, BASIS_STANDARD)
    if len(vals) > plan.n:
        raise DegreeTooLarge(f"degree must be < {plan.n}")
    poly = Poly(plan.field, vals)
    out = _contract(plan, 0, poly)
    return CoeffVec(tuple(out), BASIS_CYCLIC)


def _contract(plan, depth, fpoly):
    f = plan.field
    if depth == plan.r:
        return [fpoly[0]]
    lv = plan.levels[depth]
    p = lv.radix
    nsub = plan.sizes[depth + 1]
    ncur = plan.sizes[depth]
    U, V = lv.num, lv.den

    tops = [0] * p
    tops[0] = fpoly[ncur - 1]
    for s in range(p - 1, 0, -1):
        lam = lv.poles[s - 1]
        u_pow = f.pow(U.eval(lam), nsub - 1)
        acc = fpoly.eval(lam)
        for k in range(s + 1, p):
            acc = f.sub(acc, f.mul(tops[k], f.mul(lv.wtails[k].eval(lam), u_pow)))
        tops[s] = f.div(acc, f.mul(lv.wtails[s].eval(lam), u_pow))

    betas = [v for v in plan.inf_levels[depth + 1] if v is not INF]
    gvals = [[] for _ in range(p)]
    for beta in betas:
        fber = U - V.scale(beta)
        rem = fpoly % fber
        base = Poly.one(f)
        vmod = V % fber
        for _ in range(nsub - 1):
            base = (base * vmod) % fber
        s_poly = (rem * mod_inverse(base, fber)) % fber
        work = s_poly
        for k in range(p):
            c = work[p - 1 - k]
            gvals[k].append(c)
            if c:
                work = work - lv.wtails[k].scale(c)

    mpoly = Poly.from_roots(f, betas)
    out = [0] * ncur
    for k in range(p):
        h = lagrange_basis_interpolate(f, betas, gvals[k])
        g = h + mpoly.scale(tops[k])
        out[k::p] = _contract(plan, depth + 1, g)
    return out
