"""Shared mixed-radix divide-and-conquer engine for the two affine cases.

Both affine instantiations reduce a length-n evaluation to radix-many
subproblems one tower level up and recombine with Horner steps in the point
value.  They differ only in how evaluation points fiber over the quotient
line: multiplicative point lists fiber as strided subsequences, additive
ones as contiguous blocks.
"""

from __future__ import annotations

from .errors import LengthMismatch
from .linalg import invert, mat_vec

MODE_STRIDE = "stride"
MODE_BLOCK = "block"


def _quotient_index(mode, s, nq, p):
    return s % nq if mode == MODE_STRIDE else s // p


def _fiber_indices(mode, sq, nq, p):
    if mode == MODE_STRIDE:
        return [sq + t * nq for t in range(p)]
    return [p * sq + t for t in range(p)]


def forward(field, radices, level_points, coeffs, mode, depth=0):
    """Evaluate sum_k coeffs-digit-k * point^k recursively; exact."""
    pts = level_points[depth]
    if len(coeffs) != len(pts):
        raise LengthMismatch(f"{len(coeffs)} coefficients for {len(pts)} points")
    if len(coeffs) == 1:
        return [coeffs[0]]
    p = radices[depth]
    subs = [forward(field, radices, level_points, coeffs[k::p], mode, depth + 1) for k in range(p)]
    nq = len(pts) // p
    add, mul = field.add, field.mul
    out = [0] * len(pts)
    for s, xi in enumerate(pts):
        sq = _quotient_index(mode, s, nq, p)
        acc = subs[p - 1][sq]
        for k in range(p - 2, -1, -1):
            acc = add(subs[k][sq], mul(acc, xi))
        out[s] = acc
    return out


def inverse(field, radices, level_points, inv_locals, values, mode, depth=0):
    pts = level_points[depth]
    if len(values) != len(pts):
        raise LengthMismatch(f"{len(values)} values for {len(pts)} points")
    if len(values) == 1:
        return [values[0]]
    p = radices[depth]
    nq = len(pts) // p
    subvals = [[0] * nq for _ in range(p)]
    for sq in range(nq):
        ys = [values[i] for i in _fiber_indices(mode, sq, nq, p)]
        sol = mat_vec(field, inv_locals[depth][sq], ys)
        for k in range(p):
            subvals[k][sq] = sol[k]
    out = [0] * len(values)
    for k in range(p):
        sub = inverse(field, radices, level_points, inv_locals, subvals[k], mode, depth + 1)
        out[k::p] = sub
    return out


def build_inverse_locals(field, radices, level_points, mode):
    """Per level, per fiber: the inverse of the local Vandermonde in the
    fiber's point values."""
    locals_per_level = []
    for depth, p in enumerate(radices):
        pts = level_points[depth]
        nq = len(pts) // p
        level = []
        for sq in range(nq):
            fiber = [pts[i] for i in _fiber_indices(mode, sq, nq, p)]
            rows = []
            for xi in fiber:
                row, acc = [], 1
                for _ in range(p):
                    row.append(acc)
                    acc = field.mul(acc, xi)
                rows.append(row)
            level.append(invert(field, rows))
        locals_per_level.append(level)
    return locals_per_level
