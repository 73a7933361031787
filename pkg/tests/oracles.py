"""Independent reference implementations used to cross-check the package.

Everything here is deliberately written a different way than the shipped
code: full-width carry-free products instead of interleaved reduction,
explicit double-loop convolution instead of the two-term shortcut,
exhaustive subset enumeration instead of pruned search or DP, and a
symbolic monomial expansion of the counting recurrence instead of the
fingerprinted field evaluation.
"""

from __future__ import annotations

from itertools import combinations

from lrskit import Instance, gf_mul, validate_solution
from lrskit.core import LrsError
from lrskit.gf2 import GroupVec

GF_POLY_LOW = 0x1B  # x^4 + x^3 + x + 1, the low bits of the reduction polynomial


def gf_mul_schoolbook(x: int, y: int) -> int:
    """Carry-free multiply into a 127-bit product, then long-divide.

    Structurally independent of the shipped interleaved shift-reduce loop.
    """
    prod = 0
    for bit in range(64):
        if (y >> bit) & 1:
            prod ^= x << bit
    for bit in range(126, 63, -1):
        if (prod >> bit) & 1:
            prod ^= (0x1_0000_0000_0000_001B) << (bit - 64)
    return prod


def ga_convolve(u: GroupVec, t: GroupVec) -> GroupVec:
    """Full group-algebra product: sum over all pairs, group op is XOR."""
    if u.r != t.r:
        raise ValueError("dimension mismatch")
    size = 1 << u.r
    out = [0] * size
    for g in range(size):
        for h in range(size):
            out[g ^ h] ^= gf_mul(u.coeffs[g], t.coeffs[h])
    return GroupVec(u.r, tuple(out))


def var_elem(r: int, v_a: int, w_a: int) -> GroupVec:
    """The element w_a * (e_0 + e_{v_a}) as an explicit coefficient vector."""
    coeffs = [0] * (1 << r)
    coeffs[0] ^= w_a
    coeffs[v_a] ^= w_a
    return GroupVec(r, tuple(coeffs))


def count_in_window(symbols, sym: int, j: int, i: int) -> int:
    """Occurrences of sym among 1-based positions j+1 .. i, by direct scan."""
    return sum(1 for p in range(j + 1, i + 1) if symbols[p - 1] == sym)


def split_runs(symbols) -> list[tuple[int, int]]:
    """Maximal equal-symbol blocks of a sequence, as (symbol, length)."""
    runs: list[tuple[int, int]] = []
    for s in symbols:
        if runs and runs[-1][0] == s:
            runs[-1] = (s, runs[-1][1] + 1)
        else:
            runs.append((s, 1))
    return runs


def is_run_subsequence(instance: Instance, indices) -> bool:
    """Validity check written against the definition, not the package code."""
    if list(indices) != sorted(set(indices)):
        return False
    if indices and (indices[0] < 1 or indices[-1] > instance.n):
        return False
    picked = [instance.symbols[i - 1] for i in indices]
    runs = split_runs(picked)
    return len({s for s, _ in runs}) == len(runs)


def lrs_exhaustive(instance: Instance) -> int:
    """Maximum run-subsequence length over all 2^n index subsets."""
    n = instance.n
    if n > 14:
        raise ValueError("exhaustive oracle capped at n=14")
    best = 0
    for mask in range(1 << n):
        indices = [i + 1 for i in range(n) if (mask >> i) & 1]
        if len(indices) > best and is_run_subsequence(instance, indices):
            best = len(indices)
    return best


def achievable_pairs(instance: Instance) -> set[tuple[int, int]]:
    """All (run count, exact length) pairs realized by some run subsequence."""
    n = instance.n
    if n > 12:
        raise ValueError("exhaustive oracle capped at n=12")
    pairs: set[tuple[int, int]] = set()
    for mask in range(1 << n):
        indices = [i + 1 for i in range(n) if (mask >> i) & 1]
        if is_run_subsequence(instance, indices):
            picked = [instance.symbols[i - 1] for i in indices]
            pairs.add((len(split_runs(picked)), len(indices)))
    return pairs


def random_valid_solution(instance: Instance, rng) -> list[int]:
    """A random run subsequence: greedy insertion in shuffled position order."""
    order = list(rng.permutation(instance.n) + 1)
    chosen: list[int] = []
    for pos in order:
        trial = sorted(chosen + [int(pos)])
        try:
            validate_solution(instance, trial)
        except LrsError:
            continue
        chosen = trial
    return chosen


def mis_exhaustive(graph) -> int:
    """Maximum independent set size by enumerating all vertex subsets."""
    if graph.n > 16:
        raise ValueError("exhaustive oracle capped at n=16")
    adj = {v: set(graph.neighbors(v)) for v in range(1, graph.n + 1)}
    best = 0
    for size in range(graph.n, best, -1):
        for cand in combinations(range(1, graph.n + 1), size):
            cand_set = set(cand)
            if all(not (adj[v] & cand_set) for v in cand):
                return size
    return best


def recurrence_monomials(instance: Instance, r: int, kmax: int):
    """Symbolic expansion of the counting recurrence over the integers.

    Coefficients live in Z[x_0..x_{sigma-1}]; a monomial is the sorted tuple
    of symbol ids it multiplies (one factor per attached run). The group
    algebra and the per-derivation scalars only redistribute field values,
    so which monomials appear, and how often, is decided here. Returns
    root[h] = dict monomial -> integer derivation count.
    """
    n = instance.n
    table = [
        [[{} for _ in range(kmax + 1)] for _ in range(r + 1)] for _ in range(n + 1)
    ]
    for i in range(n + 1):
        table[i][0][0] = {(): 1}
    for i in range(1, n + 1):
        a = instance.symbols[i - 1]
        for l in range(1, r + 1):
            for h in range(kmax + 1):
                acc = dict(table[i - 1][l][h])
                for z in range(1, h + 1):
                    for j in range(i):
                        if count_in_window(instance.symbols, a, j, i) < z:
                            continue
                        for mono, cnt in table[j][l - 1][h - z].items():
                            grown = tuple(sorted(mono + (a,)))
                            acc[grown] = acc.get(grown, 0) + cnt
                table[i][l][h] = acc
    return [table[n][r][h] for h in range(kmax + 1)]


def has_multilinear(monomials: dict) -> bool:
    """True if some squarefree monomial has odd coefficient.

    Squarefree is what survives the (e_0+e_v)^2 = 0 annihilation; odd count
    is what survives characteristic 2 before fingerprinting. The shipped
    detector multiplies per-derivation scalars precisely so that even-count
    squarefree monomials are still caught; this helper's callers test both
    readings.
    """
    return any(
        len(set(mono)) == len(mono) and cnt % 2 == 1 for mono, cnt in monomials.items()
    )


def has_squarefree(monomials: dict) -> bool:
    """True if some squarefree monomial has nonzero integer coefficient."""
    return any(len(set(mono)) == len(mono) and cnt != 0 for mono, cnt in monomials.items())
