"""Exact, kernelized, and approximate solvers.

solve_bruteforce is the independent oracle every other solver is tested
against: exhaustive take/skip search with validity pruning, capped at n <= 18.

solve_subset_dp is the exact solver parameterized by alphabet size:
g(i, U) = max length of a run subsequence of S[1..i] whose run-symbol set is
exactly U. A run of symbol a ending within the prefix may as well take the z
last occurrences of a up to an attach position i with S[i] = a, because the
best window start for z occurrences is just before the z-th last occurrence
(g is monotone in the prefix index). Memory grows as 2^|Sigma|, capped at 24.

kernelize applies the two preprocessing rules: a symbol with >= k occurrences
is an immediate yes (all its occurrences form one run), and |Sigma| >= k is an
immediate yes (one occurrence per symbol); otherwise the instance itself is
the kernel and its size is below k^2.

approx_solve returns the longer of those same two candidate solutions, which
is within min(|Sigma|, occ) of optimal, hence within sqrt(|S|): the optimum
is at most |Sigma| * occ, so max(|Sigma|, occ) >= sqrt(OPT).
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    Instance,
    LimitExceeded,
    LrsError,
    OccIndex,
    Solution,
    build_occ_index,
    validate_solution,
)

BRUTE_FORCE_CAP = 18
SUBSET_DP_CAP = 24

_NEG = -(1 << 30)


class InstanceTooLarge(LimitExceeded):
    pass


class AlphabetTooLarge(LimitExceeded):
    pass


class ParameterOutOfRange(LrsError):
    pass


class NoSolutionFound(LrsError):
    pass


def solve_bruteforce(instance: Instance) -> Solution:
    """Exhaustive maximum run subsequence; optimal by construction; n <= 18."""
    n = instance.n
    if n > BRUTE_FORCE_CAP:
        raise InstanceTooLarge(f"brute force capped at n <= {BRUTE_FORCE_CAP}, got {n}")
    syms = instance.symbols
    best_len = 0
    best: tuple[int, ...] = ()
    cur: list[int] = []

    def rec(pos: int, last: int, closed: int) -> None:
        nonlocal best_len, best
        if len(cur) + (n - pos) <= best_len:
            return
        if pos == n:
            return
        sym = syms[pos]
        if sym == last:
            cur.append(pos + 1)
            if len(cur) > best_len:
                best_len = len(cur)
                best = tuple(cur)
            rec(pos + 1, last, closed)
            cur.pop()
        elif not closed & (1 << sym):
            cur.append(pos + 1)
            if len(cur) > best_len:
                best_len = len(cur)
                best = tuple(cur)
            rec(pos + 1, sym, closed | (0 if last < 0 else 1 << last))
            cur.pop()
        rec(pos + 1, last, closed)

    rec(0, -1, 0)
    return validate_solution(instance, best)


def solve_subset_dp(instance: Instance) -> tuple[Solution, tuple[int, ...]]:
    """Exact solver over run-symbol subsets, plus the exact-run-count profile.

    Returns (optimal solution, profile) where profile[r] is the maximum length
    achievable with exactly r runs (profile[0] = 0). Ties on the optimum are
    broken toward fewer runs, then the lexicographically smaller sorted
    symbol-id set; backtracking prefers the copy step (pushing runs toward
    smaller ending indices) and the longest run among equal attach options.
    """
    sigma = instance.alphabet_size
    if sigma > SUBSET_DP_CAP:
        raise AlphabetTooLarge(f"subset DP capped at |Sigma| <= {SUBSET_DP_CAP}, got {sigma}")
    n = instance.n
    syms = instance.symbols
    occ = build_occ_index(instance)
    # prefix_pos[i] = positions of S[i] within S[1..i], so the run taking the
    # z last occurrences up to i starts just after prefix_pos[i][-z].
    prefix_pos: list[tuple[int, ...]] = [()] * (n + 1)
    for i in range(1, n + 1):
        a = syms[i - 1]
        m = occ.occ_window(a, 0, i)
        prefix_pos[i] = occ.positions[a][:m]

    full = 1 << sigma
    g = [[_NEG] * full for _ in range(n + 1)]
    for i in range(n + 1):
        g[i][0] = 0
    for i in range(1, n + 1):
        a = syms[i - 1]
        bit = 1 << a
        row = g[i]
        prev = g[i - 1]
        p = prefix_pos[i]
        m = len(p)
        for U in range(full):
            base = prev[U]
            if U & bit:
                W = U ^ bit
                for z in range(1, m + 1):
                    gj = g[p[m - z] - 1][W]
                    if gj > _NEG and gj + z > base:
                        base = gj + z
            if base > row[U]:
                row[U] = base

    gn = g[n]
    best_val = max(gn)
    best_U = min(
        (U for U in range(full) if gn[U] == best_val),
        key=lambda U: (bin(U).count("1"), tuple(b for b in range(sigma) if U >> b & 1)),
    )

    profile = [0] * (sigma + 1)
    for U in range(full):
        r = bin(U).count("1")
        if gn[U] > profile[r]:
            profile[r] = gn[U]
    profile[0] = 0

    indices: list[int] = []
    i, U, target = n, best_U, best_val
    while U:
        while i > 0 and g[i - 1][U] == target:
            i -= 1
        a = syms[i - 1]
        bit = 1 << a
        assert U & bit, "attach step must consume the symbol at the stall position"
        W = U ^ bit
        p = prefix_pos[i]
        m = len(p)
        chosen = 0
        for z in range(1, m + 1):
            gj = g[p[m - z] - 1][W]
            if gj > _NEG and gj + z == target:
                chosen = z
        assert chosen > 0, "no attach step reproduces the table value"
        indices[:0] = p[m - chosen :]
        i, U, target = p[m - chosen] - 1, W, target - chosen
    sol = validate_solution(instance, indices)
    assert sol.length == best_val
    return sol, tuple(profile)


@dataclass(frozen=True)
class TrivialYes:
    """Preprocessing answered yes outright; solution has length >= k."""

    solution: Solution


@dataclass(frozen=True)
class Kernel:
    """No rule fired; the instance itself is the kernel, |S| < k^2."""

    instance: Instance


KernelOutcome = TrivialYes | Kernel


def kernelize(instance: Instance, k: int) -> KernelOutcome:
    """Apply the two yes-rules, else return the (size < k^2) kernel.

    Rule 1: some symbol has >= k occurrences -> all of them form one run.
    Rule 2: |Sigma| >= k -> one occurrence per symbol, first occurrences of
    the k first-seen symbols (their positions are increasing by construction).
    Otherwise |Sigma| < k and every occ < k force |S| < k^2.
    """
    if k < 1:
        raise ParameterOutOfRange(f"k must be >= 1, got {k}")
    occ = build_occ_index(instance)
    for a in range(instance.alphabet_size):
        if occ.occ(a) >= k:
            return TrivialYes(validate_solution(instance, occ.positions[a]))
    if instance.alphabet_size >= k:
        firsts = sorted(occ.positions[a][0] for a in range(k))
        return TrivialYes(validate_solution(instance, firsts))
    return Kernel(instance)


def approx_solve(instance: Instance) -> Solution:
    """min(|Sigma|, occ)-approximation, hence also sqrt(|S|)-approximation.

    Candidate 1: the first occurrence of every symbol (length |Sigma|).
    Candidate 2: every occurrence of the most frequent symbol (length occ,
    smallest id on ties). The longer wins; candidate 1 wins exact ties.
    """
    occ = build_occ_index(instance)
    firsts = sorted(occ.positions[a][0] for a in range(instance.alphabet_size))
    heavy = max(range(instance.alphabet_size), key=lambda a: (occ.occ(a), -a))
    if occ.occ(heavy) > len(firsts):
        return validate_solution(instance, occ.positions[heavy])
    return validate_solution(instance, firsts)
