"""Walkthrough: evaluating a polynomial on a multiplicative coset.

Over F_257 the nonzero elements form a cyclic group of order 256 = 2^8, so a
length-256 evaluation splits in half at every level: the squaring map sends
the order-2^k subgroup onto the order-2^(k-1) one, and a polynomial splits
into even and odd parts along the way.
"""

import random

from gfft import field_make, mult_fft, mult_ifft, mult_plan
from gfft.oracle import mpe_horner
from gfft.poly import Poly

field = field_make(257)
plan = mult_plan(field, (2,) * 8)
print(f"plan: {plan}")
print(f"first points: {plan.points[:8]} ...")

rng = random.Random(2)
coeffs = [rng.randrange(257) for _ in range(256)]

values = mult_fft(plan, coeffs)
print(f"f(pts[0]) = {values[0]}, f(pts[1]) = {values[1]}")

direct = mpe_horner(Poly(field, coeffs), plan.points)
print(f"matches direct evaluation at all 256 points: {values == direct}")

back = mult_ifft(plan, values)
print(f"inverse recovers the coefficients exactly: {list(back.values) == coeffs}")

with field.count_ops() as fast:
    mult_fft(plan, coeffs)
with field.count_ops() as slow:
    mpe_horner(Poly(field, coeffs), plan.points)
print(f"field ops: divide-and-conquer {fast.total()}, direct {slow.total()} "
      f"({slow.total() / fast.total():.0f}x)")
