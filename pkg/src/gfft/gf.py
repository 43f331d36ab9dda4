"""Arithmetic in F_p and F_{p^r} with opt-in operation counting.

Elements are stored in a packed raw form: an integer in [0, q).  For prime
fields the raw value is the residue itself; for extension fields it encodes
the coefficient vector (c_0, ..., c_{r-1}) base p, i.e. raw = sum c_i p^i.
Hot code paths (polynomial cores, transforms) work on raw values through the
Field methods; FieldElement is a thin wrapper for user-facing code.

All searches (modulus, primitive element, primitive quadratic) take the
least candidate in packed-integer order, so results are reproducible.
Exhaustive checks are fine at the documented desk scale q <= 2**20.
"""

from __future__ import annotations

import contextlib
from dataclasses import dataclass

from .errors import MixedFields, NonPrimeP, ReducibleModulus, ValidationError, ZeroInverse

DESK_Q_BOUND = 1 << 20


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def factorize(n: int) -> dict:
    """Prime factorization by trial division, {prime: multiplicity}."""
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


@dataclass
class OpCounter:
    """Accumulates field operation counts inside one measurement scope."""

    adds: int = 0
    muls: int = 0
    invs: int = 0

    def total(self) -> int:
        return self.adds + self.muls + self.invs

    def snapshot(self) -> "OpCounter":
        return OpCounter(self.adds, self.muls, self.invs)


# ---------------------------------------------------------------------------
# small dense polynomial helpers over F_p (ints mod p), used only for modulus
# handling and extension-field construction


def _pp_trim(c):
    while len(c) > 1 and c[-1] == 0:
        c.pop()
    return c


def _pp_mul(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _pp_trim(out)


def _pp_mod(a, m, p):
    a = list(a)
    dm = len(m) - 1
    inv_lead = pow(m[-1], -1, p)
    while len(a) - 1 >= dm and any(a):
        if a[-1] == 0:
            a.pop()
            continue
        shift = len(a) - 1 - dm
        factor = (a[-1] * inv_lead) % p
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - factor * mi) % p
        a.pop()
    return _pp_trim(a if a else [0])


def _pp_gcd(a, b, p):
    a, b = list(a), list(b)
    while any(b):
        a, b = b, _pp_mod(a, b, p)
    return _pp_trim(a)


def _pp_powmod_x(e: int, m, p):
    """x^e mod m over F_p by square and multiply."""
    result = [1]
    base = _pp_mod([0, 1], m, p)
    while e:
        if e & 1:
            result = _pp_mod(_pp_mul(result, base, p), m, p)
        base = _pp_mod(_pp_mul(base, base, p), m, p)
        e >>= 1
    return result


def is_irreducible_modp(coeffs, p: int) -> bool:
    """Rabin's test for a monic polynomial over F_p (dense int list)."""
    r = len(coeffs) - 1
    if r < 1 or coeffs[-1] != 1:
        return False
    if r == 1:
        return True
    # x^(p^r) == x mod m, and gcd(x^(p^(r/l)) - x, m) == 1 for prime l | r
    xq = _pp_powmod_x(p**r, coeffs, p)
    if _pp_trim(list(xq)) != [0, 1]:
        return False
    for ell in factorize(r):
        g = _pp_powmod_x(p ** (r // ell), coeffs, p)
        g = list(g) + [0] * (2 - len(g))
        g[1] = (g[1] - 1) % p
        if len(_pp_gcd(coeffs, _pp_trim(g), p)) > 1:
            return False
    return True


# ---------------------------------------------------------------------------


class Field:
    """F_q for q = p^r.  Construct through field_make for validated setup."""

    def __init__(self, p: int, r: int, modulus):
        self.p = p
        self.r = r
        self.q = p**r
        self.modulus = tuple(modulus)  # monic, len r+1; () when r == 1
        self._counter = None
        self._inv_table = None
        if r > 1:
            self._build_tables()

    # -- construction helpers ------------------------------------------------

    def _build_tables(self):
        p, r, q = self.p, self.r, self.q
        if q > DESK_Q_BOUND:
            raise ValidationError(f"extension field of size {q} beyond desk bound")
        # discrete log tables over a multiplicative generator
        gen = None
        for cand in range(2, q):
            if self._raw_order_slow(cand) == q - 1:
                gen = cand
                break
        if gen is None:  # pragma: no cover - impossible for a true field
            raise ValidationError("no multiplicative generator found; modulus not irreducible?")
        exp = [1] * (2 * (q - 1))
        log = [0] * q
        acc = 1
        for i in range(q - 1):
            exp[i] = acc
            exp[i + q - 1] = acc
            log[acc] = i
            acc = self._mul_poly(acc, gen)
        self._exp = exp
        self._log = log
        self._gen = gen

    def _raw_order_slow(self, x: int) -> int:
        if x == 0:
            return 0
        acc = x
        k = 1
        while acc != 1:
            acc = self._mul_poly(acc, x)
            k += 1
            if k > self.q:
                raise ValidationError("multiplicative order overflow; modulus not irreducible?")
        return k

    def unpack(self, raw: int):
        """Raw value -> coefficient tuple (c_0, ..., c_{r-1}) over F_p."""
        p = self.p
        out = []
        for _ in range(self.r):
            raw, c = divmod(raw, p)
            out.append(c)
        return tuple(out)

    def pack(self, coeffs) -> int:
        p = self.p
        raw = 0
        for c in reversed(list(coeffs)):
            raw = raw * p + c % p
        return raw

    def _mul_poly(self, x: int, y: int) -> int:
        """Product via coefficient arithmetic; table-free fallback."""
        a, b = self.unpack(x), self.unpack(y)
        prod = [0] * (2 * self.r - 1)
        p = self.p
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    prod[i + j] = (prod[i + j] + ai * bj) % p
        m = self.modulus
        for k in range(len(prod) - 1, self.r - 1, -1):
            c = prod[k]
            if c:
                prod[k] = 0
                for i in range(self.r):
                    prod[k - self.r + i] = (prod[k - self.r + i] - c * m[i]) % p
        return self.pack(prod[: self.r])

    # -- raw arithmetic ------------------------------------------------------

    def add(self, x: int, y: int) -> int:
        c = self._counter
        if c is not None:
            c.adds += 1
        if self.r == 1:
            return (x + y) % self.p
        if self.p == 2:
            return x ^ y
        p = self.p
        out, mult = 0, 1
        for _ in range(self.r):
            x, dx = divmod(x, p)
            y, dy = divmod(y, p)
            out += ((dx + dy) % p) * mult
            mult *= p
        return out

    def sub(self, x: int, y: int) -> int:
        c = self._counter
        if c is not None:
            c.adds += 1
        if self.r == 1:
            return (x - y) % self.p
        if self.p == 2:
            return x ^ y
        p = self.p
        out, mult = 0, 1
        for _ in range(self.r):
            x, dx = divmod(x, p)
            y, dy = divmod(y, p)
            out += ((dx - dy) % p) * mult
            mult *= p
        return out

    def neg(self, x: int) -> int:
        c = self._counter
        if c is not None:
            c.adds += 1
        if self.r == 1:
            return (-x) % self.p
        if self.p == 2:
            return x
        p = self.p
        out, mult = 0, 1
        for _ in range(self.r):
            x, dx = divmod(x, p)
            out += ((-dx) % p) * mult
            mult *= p
        return out

    def mul(self, x: int, y: int) -> int:
        c = self._counter
        if c is not None:
            c.muls += 1
        if self.r == 1:
            return (x * y) % self.p
        if x == 0 or y == 0:
            return 0
        return self._exp[self._log[x] + self._log[y]]

    def inv(self, x: int) -> int:
        if x == 0:
            raise ZeroInverse("inverse of zero")
        c = self._counter
        if c is not None:
            c.invs += 1
        if self.r == 1:
            t = self._inv_table
            if t is None and self.p <= 4096:
                t = self._inv_table = [0] + [pow(v, -1, self.p) for v in range(1, self.p)]
            return t[x] if t is not None else pow(x, -1, self.p)
        return self._exp[self.q - 1 - self._log[x]]

    def div(self, x: int, y: int) -> int:
        return self.mul(x, self.inv(y))

    def pow(self, x: int, e: int) -> int:
        e = int(e)
        if e < 0:
            x = self.inv(x)
            e = -e
        if self.r == 1:
            c = self._counter
            if c is not None:
                c.muls += max(e.bit_length() * 2 - 2, 0) if e else 0
            return pow(x, e, self.p)
        if x == 0:
            return 0 if e else 1
        c = self._counter
        if c is not None:
            c.muls += max(e.bit_length() * 2 - 2, 0) if e else 0
        return self._exp[(self._log[x] * e) % (self.q - 1)]

    def element_order(self, x: int) -> int:
        """Multiplicative order of nonzero x."""
        if x == 0:
            raise ZeroInverse("order of zero undefined")
        order = self.q - 1
        for ell in factorize(self.q - 1):
            while order % ell == 0 and self.pow(x, order // ell) == 1:
                order //= ell
        return order

    # -- element API ---------------------------------------------------------

    def __call__(self, value) -> "FieldElement":
        if isinstance(value, FieldElement):
            if value.field is not self:
                raise MixedFields("element from a different field")
            return value
        if isinstance(value, (tuple, list)):
            return FieldElement(self, self.pack(value))
        return FieldElement(self, int(value) % self.q if self.r == 1 else int(value))

    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def elements(self):
        for v in range(self.q):
            yield FieldElement(self, v)

    # -- instrumentation -----------------------------------------------------

    @contextlib.contextmanager
    def count_ops(self):
        """Attach a fresh OpCounter for the duration of the scope.

        Counting state lives on this Field instance, so concurrent
        measurements need separate Field instances.
        """
        prev = self._counter
        ctr = OpCounter()
        self._counter = ctr
        try:
            yield ctr
        finally:
            self._counter = prev

    # -- misc ----------------------------------------------------------------

    def serialize_raw(self, raw: int):
        """JSON form: residue for r = 1, little-endian coefficient list else."""
        return raw if self.r == 1 else list(self.unpack(raw))

    def parse_raw(self, obj) -> int:
        if isinstance(obj, list):
            return self.pack(obj)
        return int(obj) % self.q if self.r == 1 else int(obj)

    def __repr__(self):
        if self.r == 1:
            return f"Field(p={self.p})"
        return f"Field(p={self.p}, r={self.r}, modulus={list(self.modulus)})"

    def __eq__(self, other):
        return (
            isinstance(other, Field)
            and self.p == other.p
            and self.r == other.r
            and self.modulus == other.modulus
        )

    def __hash__(self):
        return hash((self.p, self.r, self.modulus))


class FieldElement:
    """Canonical element of a Field; equality is representation equality."""

    __slots__ = ("field", "raw")

    def __init__(self, field: Field, raw: int):
        self.field = field
        self.raw = raw

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise MixedFields("operands from different fields")
            return other.raw
        return self.field(other).raw

    def __add__(self, other):
        return FieldElement(self.field, self.field.add(self.raw, self._coerce(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub(self.raw, self._coerce(other)))

    def __rsub__(self, other):
        return FieldElement(self.field, self.field.sub(self._coerce(other), self.raw))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul(self.raw, self._coerce(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FieldElement(self.field, self.field.div(self.raw, self._coerce(other)))

    def __rtruediv__(self, other):
        return FieldElement(self.field, self.field.div(self._coerce(other), self.raw))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.raw))

    def __pow__(self, e):
        return FieldElement(self.field, self.field.pow(self.raw, e))

    def inverse(self):
        return FieldElement(self.field, self.field.inv(self.raw))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.raw == other.raw
        if isinstance(other, int):
            return self.raw == (other % self.field.q if self.field.r == 1 else other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field.p, self.field.r, self.raw))

    def __bool__(self):
        return self.raw != 0

    def __repr__(self):
        if self.field.r == 1:
            return f"F{self.field.q}({self.raw})"
        return f"F{self.field.q}{self.field.unpack(self.raw)}"


# ---------------------------------------------------------------------------
# construction and searches


def field_make(p: int, r: int = 1, modulus=None) -> Field:
    """Build F_{p^r}; when r > 1 and no modulus is given, take the least
    monic irreducible of degree r in packed-integer order."""
    if not is_prime(p):
        raise NonPrimeP(f"{p} is not prime")
    if r < 1:
        raise ValidationError("extension degree must be >= 1")
    if p**r > DESK_Q_BOUND:
        raise ValidationError(f"q = {p**r} beyond desk bound 2**20")
    if r == 1:
        if modulus:
            raise ValidationError("prime field takes no modulus")
        return Field(p, 1, ())
    if modulus is not None:
        mod = [int(c) % p for c in modulus]
        if len(mod) != r + 1 or mod[-1] != 1:
            raise ReducibleModulus("modulus must be monic of degree r")
        if not is_irreducible_modp(mod, p):
            raise ReducibleModulus(f"{mod} is reducible over F_{p}")
        return Field(p, r, mod)
    for tail in range(p**r):
        mod = list(divmod_digits(tail, p, r)) + [1]
        if is_irreducible_modp(mod, p):
            return Field(p, r, mod)
    raise ReducibleModulus("no irreducible modulus found")  # pragma: no cover


def divmod_digits(n: int, p: int, width: int):
    out = []
    for _ in range(width):
        n, d = divmod(n, p)
        out.append(d)
    return tuple(out)


def find_primitive_element(field: Field) -> FieldElement:
    """Least element (packed order) of multiplicative order q - 1."""
    if field.q == 2:
        return field.one()
    for cand in range(2, field.q):
        if field.element_order(cand) == field.q - 1:
            return FieldElement(field, cand)
    raise ValidationError("no primitive element found")  # pragma: no cover


def quadratic_is_irreducible(field: Field, a: int, b: int) -> bool:
    """x^2 + a x + b irreducible over F_q (no roots; degree 2 suffices)."""
    if field.p != 2 and field.r == 1:
        disc = (a * a - 4 * b) % field.p
        return pow(disc, (field.p - 1) // 2, field.p) != 1 if disc else False
    for t in range(field.q):
        if field.add(field.mul(t, field.add(t, a)), b) == 0:
            return False
    return True


def quadratic_root_order(field: Field, a: int, b: int) -> int:
    """Multiplicative order of a root of irreducible x^2 + a x + b in F_{q^2}.

    Works in F_q[T]/(m) with elements as raw pairs (c0, c1).
    """
    f = field
    neg_a, neg_b = f.neg(a), f.neg(b)

    def mul2(u, v):
        u0, u1 = u
        v0, v1 = v
        t = f.mul(u1, v1)  # coefficient of T^2 -> reduce via T^2 = -aT - b
        c0 = f.add(f.mul(u0, v0), f.mul(t, neg_b))
        c1 = f.add(f.add(f.mul(u0, v1), f.mul(u1, v0)), f.mul(t, neg_a))
        return (c0, c1)

    def pow2(x, e):
        result = (1, 0)
        while e:
            if e & 1:
                result = mul2(result, x)
            x = mul2(x, x)
            e >>= 1
        return result

    order = f.q * f.q - 1
    for ell in factorize(order):
        while order % ell == 0 and pow2((0, 1), order // ell) == (1, 0):
            order //= ell
    return order


def find_primitive_quadratic(field: Field):
    """Least (a, b) with x^2 + a x + b irreducible and a root generating
    F_{q^2}^*.  Returns a pair of FieldElements."""
    target = field.q * field.q - 1
    for a in range(field.q):
        for b in range(field.q):
            if quadratic_is_irreducible(field, a, b) and quadratic_root_order(field, a, b) == target:
                return FieldElement(field, a), FieldElement(field, b)
    raise ValidationError("no primitive quadratic found")  # pragma: no cover
