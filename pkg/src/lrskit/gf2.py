"""GF(2^64) and group-algebra arithmetic for algebraic run detection.

Field: GF(2^64) with the fixed irreducible reduction polynomial
x^64 + x^4 + x^3 + x + 1. Elements are plain Python ints in [0, 2^64);
addition is XOR, multiplication is carry-free polynomial multiplication
followed by reduction (x^64 == x^4 + x^3 + x + 1, i.e. 0x1B).

Group algebra: GF(2^64)[Z2^r], formal sums over the group {0,1}^r with field
coefficients. A GroupVec stores all 2^r coefficients indexed by group bitmask.
The only products the detection circuit ever needs are by single variables,
evaluated as w * (e_0 + e_v); squaring such a factor gives
(e_0 + e_v)^2 = e_0 + 2*e_v + e_{v^v} = 0 in characteristic 2, which is the
mechanism that annihilates monomials with a repeated variable.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import Instance, LrsError

# Reduction constant: x^64 = x^4 + x^3 + x + 1.
GF_POLY_LOW = 0x1B
GF_POLY_NAME = "x^64+x^4+x^3+x+1"
RNG_NAME = "numpy-PCG64"
_MASK = (1 << 64) - 1
_TOP = 1 << 63


class DimensionMismatch(LrsError):
    pass


def gf_mul(x: int, y: int) -> int:
    """Product of x and y in GF(2^64).

    Carry-free peasant multiplication: for each bit of y, XOR the running
    shift of x, reducing on overflow of the 64-bit range.
    """
    res = 0
    x &= _MASK
    y &= _MASK
    while y:
        if y & 1:
            res ^= x
        y >>= 1
        if x & _TOP:
            x = ((x << 1) & _MASK) ^ GF_POLY_LOW
        else:
            x <<= 1
    return res


def gf_pow(x: int, e: int) -> int:
    res = 1
    while e:
        if e & 1:
            res = gf_mul(res, x)
        x = gf_mul(x, x)
        e >>= 1
    return res


def gf_inv(x: int) -> int:
    """Multiplicative inverse via x^(2^64 - 2); x must be nonzero."""
    if x == 0:
        raise ZeroDivisionError("0 has no inverse in GF(2^64)")
    return gf_pow(x, (1 << 64) - 2)


@dataclass(frozen=True)
class GroupVec:
    """An element of GF(2^64)[Z2^r]: 2^r field coefficients by group bitmask."""

    r: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != 1 << self.r:
            raise DimensionMismatch(
                f"need {1 << self.r} coefficients for r={self.r}, got {len(self.coeffs)}"
            )

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)


def ga_zero(r: int) -> GroupVec:
    return GroupVec(r, (0,) * (1 << r))


def ga_unit(r: int) -> GroupVec:
    """The multiplicative unit e_0."""
    return GroupVec(r, (1,) + (0,) * ((1 << r) - 1))


def ga_add(u: GroupVec, v: GroupVec) -> GroupVec:
    """Componentwise field addition (XOR); u + u = 0."""
    if u.r != v.r:
        raise DimensionMismatch(f"group dimensions differ: {u.r} vs {v.r}")
    return GroupVec(u.r, tuple(a ^ b for a, b in zip(u.coeffs, v.coeffs)))


def ga_scale(u: GroupVec, w: int) -> GroupVec:
    """Multiply every coefficient by the field scalar w."""
    return GroupVec(u.r, tuple(gf_mul(w, c) for c in u.coeffs))


def ga_mul_var(u: GroupVec, v_a: int, w_a: int) -> GroupVec:
    """Multiply u by a variable evaluated as w_a * (e_0 + e_{v_a}).

    Group translation by v_a folds each coefficient with its XOR-partner:
    result[g] = w_a * (u[g] + u[g ^ v_a]). Cost Theta(2^r) field products.
    """
    if not 0 <= v_a < (1 << u.r):
        raise DimensionMismatch(f"bitmask {v_a} outside Z2^{u.r}")
    c = u.coeffs
    return GroupVec(u.r, tuple(gf_mul(w_a, c[g] ^ c[g ^ v_a]) for g in range(len(c))))


@dataclass(frozen=True)
class VarAssignment:
    """Per-symbol random evaluation points for one detection trial.

    v[a] is a uniform group bitmask (zero allowed; the linear-independence
    success bound prod_{i=1..r}(1 - 2^(i-1-r)) > 0.28 already accounts for
    it) and w[a] a uniform nonzero field scalar. Fixed for the whole trial
    and reproducible from rng_seed.
    """

    r: int
    v: tuple[int, ...]
    w: tuple[int, ...]
    rng_seed: int


def draw_assignment(instance: Instance, r: int, seed: int) -> VarAssignment:
    """Draw (v_a, w_a) for every symbol of the instance, deterministic per seed."""
    if r < 1:
        raise LrsError(f"group dimension r must be >= 1, got {r}")
    rng = np.random.default_rng(seed)
    sigma = instance.alphabet_size
    v = rng.integers(0, 1 << r, size=sigma, dtype=np.uint64)
    w = rng.integers(1, (1 << 64) - 1, size=sigma, dtype=np.uint64, endpoint=True)
    return VarAssignment(r, tuple(int(x) for x in v), tuple(int(x) for x in w), seed)
