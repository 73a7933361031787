"""Randomized detection of run subsequences with exactly r runs and length k.

The detector evaluates a recursively defined polynomial over the group
algebra GF(2^64)[Z2^r]. P[i][l][h] covers prefix S[1..i], l runs, total
length h, with P[i][0][0] = e_0 and P[0][l][h] = 0 for l > 0 or h > 0:

    P[i][l][h] = P[i-1][l][h]
               + x_a * sum_z alpha[i][z] * sum_j beta[j] * P[j][l-1][h-z]

where a = S[i], z ranges over 1..min(m_i, h) for m_i occurrences of a in
S[1..i], and j over window starts 0..p_{m_i-z+1}-1 (every window S[j+1..i]
that contains at least z occurrences of a). Each variable x_a evaluates to
w_a * (e_0 + e_{v_a}), so monomials that repeat a symbol vanish identically
((e_0 + e_v)^2 = 0 in characteristic 2) and the root P[|S|][r][k] is nonzero
only if some run subsequence with exactly r runs and length k exists.

The scalars alpha[i][z] and beta[j] are fresh random field elements per
trial. They are required for completeness, not a tuning knob: the recurrence
counts derivations, and a single surviving monomial can have evenly many
derivations which would cancel over characteristic 2 (smallest case S = "aa",
r = 1, k = 1, where x_a arises via three derivations whose count without the
scalars is even for S = "aba"). A derivation maps injectively to its scalar
monomial because the attach positions i_1 > j_1 >= i_2 > j_2 >= ... strictly
interleave, so distinct derivations cannot cancel except with probability
<= 3r/2^64 per trial. Combined with the standard linear-independence bound
prod_{i=1..r}(1 - 2^(i-1-r)) > 0.28 for the v_a draw, a yes-instance is
missed by T trials with probability below (1 - 0.28)^T; a no-verdict on a
yes-instance is the only possible error (one-sided).

The production path is a numba kernel that turns the j-sum into a running
prefix table Q[j][l][h] = sum_{j'<=j} beta[j'] * P[j'][l][h] and multiplies
by fixed field scalars through 8x256 byte tables. A straight-line pure-Python
evaluator of the literal double sum is kept for cross-checking.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

import numpy as np
from numba import njit

from .core import Instance, build_occ_index
from .gf2 import GroupVec, ga_add, ga_mul_var, ga_scale, ga_zero, gf_mul
from .solvers import NoSolutionFound, ParameterOutOfRange

MAX_GROUP_DIM = 16

_U64 = np.uint64
_POLY = _U64(0x1B)
_TOPBIT = _U64(1) << _U64(63)
_FF = _U64(0xFF)
_ONE = _U64(1)
_ZERO = _U64(0)


@dataclass(frozen=True)
class TrialReport:
    """Outcome of a batch of detection trials at one run count r.

    verdicts maps each examined k to its yes/no; witnesses maps every yes-k
    to the seed of the first trial whose root evaluated nonzero there.
    """

    master_seed: int
    r: int
    trials: int
    verdicts: dict[int, bool]
    witnesses: dict[int, int]
    elapsed_s: float
    trial_seeds: tuple[int, ...] = field(default=(), repr=False)

    def max_yes_k(self) -> int | None:
        yes = [k for k, v in self.verdicts.items() if v]
        return max(yes) if yes else None


@njit(cache=True)
def _build_table(y, T):  # pragma: no cover - exercised via the kernel
    """Fill T[8][256] so that multiplying by the fixed y is 8 table lookups."""
    ypow = np.empty(64, np.uint64)
    cur = y
    for t in range(64):
        ypow[t] = cur
        top = cur & _TOPBIT
        cur = cur << _ONE
        if top != _ZERO:
            cur = cur ^ _POLY
    for b in range(8):
        T[b, 0] = _ZERO
        for s in range(8):
            T[b, 1 << s] = ypow[8 * b + s]
        for vv in range(3, 256):
            if vv & (vv - 1) != 0:
                lsb = vv & (-vv)
                T[b, vv] = T[b, vv ^ lsb] ^ T[b, lsb]


@njit(cache=True, inline="always")
def _table_mul(T, x):  # pragma: no cover
    acc = _ZERO
    for b in range(8):
        acc ^= T[b, (x >> _U64(8 * b)) & _FF]
    return acc


@njit(cache=True)
def _eval_kernel(ids, bound, mcount, r, kmax, v, w, alpha, beta, root):  # pragma: no cover
    """Fill root[h][g] with the coefficients of P[n][r][h] for all h <= kmax."""
    n = ids.shape[0]
    G = 1 << r
    sigma = w.shape[0]
    zcap = alpha.shape[1] - 1

    wT = np.zeros((sigma, 8, 256), np.uint64)
    for a in range(sigma):
        _build_table(w[a], wT[a])
    aT = np.zeros((zcap + 1, 8, 256), np.uint64)
    bT = np.zeros((8, 256), np.uint64)

    # Q[j][l][h] = sum_{j'<=j} beta[j'] * P[j'][l][h], l only up to r-1.
    Q = np.zeros((n + 1, r, kmax + 1, G), np.uint64)
    Pprev = np.zeros((r + 1, kmax + 1, G), np.uint64)
    Pcur = np.zeros((r + 1, kmax + 1, G), np.uint64)
    acc = np.zeros(G, np.uint64)

    Pprev[0, 0, 0] = _ONE
    _build_table(beta[0], bT)
    Q[0, 0, 0, 0] = _table_mul(bT, Pprev[0, 0, 0])

    for i in range(1, n + 1):
        a = ids[i - 1]
        mi = mcount[i]
        va = int(v[a])
        for z in range(1, min(mi, kmax) + 1):
            _build_table(alpha[i, z], aT[z])
        for l in range(r + 1):
            for h in range(kmax + 1):
                for g in range(G):
                    Pcur[l, h, g] = Pprev[l, h, g]
        for l in range(1, r + 1):
            for h in range(l, kmax + 1):
                for g in range(G):
                    acc[g] = _ZERO
                zmax = mi if mi < h else h
                for z in range(1, zmax + 1):
                    if h - z < l - 1:
                        break
                    b = bound[i, z]
                    for g in range(G):
                        q = Q[b, l - 1, h - z, g]
                        if q != _ZERO:
                            acc[g] ^= _table_mul(aT[z], q)
                for g in range(G):
                    t = acc[g] ^ acc[g ^ va]
                    if t != _ZERO:
                        Pcur[l, h, g] ^= _table_mul(wT[a], t)
        if i < n:
            _build_table(beta[i], bT)
            for l in range(r):
                for h in range(kmax + 1):
                    for g in range(G):
                        p = Pcur[l, h, g]
                        if p != _ZERO:
                            Q[i, l, h, g] = Q[i - 1, l, h, g] ^ _table_mul(bT, p)
                        else:
                            Q[i, l, h, g] = Q[i - 1, l, h, g]
        Pprev, Pcur = Pcur, Pprev

    for h in range(kmax + 1):
        for g in range(G):
            root[h, g] = Pprev[r, h, g]


def _precompute(instance: Instance) -> tuple[np.ndarray, np.ndarray, np.ndarray, int]:
    """ids, window-start bounds, and per-prefix occurrence counts.

    bound[i][z] = p_{m_i-z+1} - 1: the largest window start j such that
    S[j+1..i] still contains z occurrences of S[i].
    """
    n = instance.n
    occ = build_occ_index(instance)
    occ_max = occ.max_occ
    ids = np.asarray(instance.symbols, dtype=np.int64)
    bound = np.full((n + 1, occ_max + 1), -1, dtype=np.int64)
    mcount = np.zeros(n + 1, dtype=np.int64)
    for i in range(1, n + 1):
        a = instance.symbols[i - 1]
        m = occ.occ_window(a, 0, i)
        mcount[i] = m
        p = occ.positions[a]
        for z in range(1, m + 1):
            bound[i, z] = p[m - z] - 1
    return ids, bound, mcount, occ_max


def _draw_trial(instance: Instance, r: int, occ_max: int, trial_seed: int):
    """All random material for one trial, in a fixed documented order.

    From default_rng(trial_seed): v (uniform group bitmasks, one per symbol),
    w (uniform nonzero field scalars, one per symbol), alpha (nonzero scalars
    indexed by attach position and run length), beta (nonzero scalars indexed
    by window start).
    """
    rng = np.random.default_rng(trial_seed)
    sigma = instance.alphabet_size
    n = instance.n
    v = rng.integers(0, 1 << r, size=sigma, dtype=np.uint64)
    w = rng.integers(1, (1 << 64) - 1, size=sigma, dtype=np.uint64, endpoint=True)
    alpha = rng.integers(
        1, (1 << 64) - 1, size=(n + 1, occ_max + 1), dtype=np.uint64, endpoint=True
    )
    beta = rng.integers(1, (1 << 64) - 1, size=max(n, 1), dtype=np.uint64, endpoint=True)
    return v, w, alpha, beta


def trial_seeds_for(master_seed: int, trials: int) -> tuple[int, ...]:
    """Deterministic per-trial seeds derived from the master seed."""
    ss = np.random.SeedSequence(master_seed)
    return tuple(int(x) for x in ss.generate_state(trials, dtype=np.uint64))


def eval_root_fast(
    instance: Instance, r: int, kmax: int, v, w, alpha, beta
) -> np.ndarray:
    """Numba path: root coefficient matrix [kmax+1, 2^r] for given trial material."""
    ids, bound, mcount, _ = _precompute(instance)
    root = np.zeros((kmax + 1, 1 << r), dtype=np.uint64)
    _eval_kernel(
        ids,
        bound,
        mcount,
        r,
        kmax,
        np.asarray(v, dtype=np.uint64),
        np.asarray(w, dtype=np.uint64),
        np.asarray(alpha, dtype=np.uint64),
        np.asarray(beta, dtype=np.uint64),
        root,
    )
    return root


def eval_root_reference(
    instance: Instance, r: int, kmax: int, v, w, alpha, beta
) -> list[GroupVec]:
    """Literal double-sum evaluation with GroupVec arithmetic (small inputs only).

    Same inputs and output semantics as eval_root_fast, but the window-start
    sum is spelled out via the occurrence condition instead of prefix tables.
    """
    n = instance.n
    occ = build_occ_index(instance)
    syms = instance.symbols
    zero = ga_zero(r)
    unit_coeffs = (1,) + (0,) * ((1 << r) - 1)
    P: list[list[list[GroupVec]]] = [
        [[zero for _ in range(kmax + 1)] for _ in range(r + 1)] for _ in range(n + 1)
    ]
    for i in range(n + 1):
        P[i][0][0] = GroupVec(r, unit_coeffs)
    for i in range(1, n + 1):
        a = syms[i - 1]
        for l in range(1, r + 1):
            for h in range(kmax + 1):
                inner = zero
                for j in range(i):
                    win = occ.occ_window(a, j, i)
                    for z in range(1, min(win, h) + 1):
                        cell = P[j][l - 1][h - z]
                        if cell.is_zero():
                            continue
                        s = gf_mul(int(alpha[i][z]), int(beta[j]))
                        inner = ga_add(inner, ga_scale(cell, s))
                term = ga_mul_var(inner, int(v[a]), int(w[a]))
                P[i][l][h] = ga_add(P[i - 1][l][h], term)
    return [P[n][r][h] for h in range(kmax + 1)]


def _run_trials(
    instance: Instance, r: int, kmax: int, trials: int, seed: int
) -> tuple[list[bool], dict[int, int], tuple[int, ...]]:
    ids, bound, mcount, occ_max = _precompute(instance)
    seeds = trial_seeds_for(seed, trials)
    flags = [False] * (kmax + 1)
    witnesses: dict[int, int] = {}
    root = np.zeros((kmax + 1, 1 << r), dtype=np.uint64)
    for ts in seeds:
        v, w, alpha, beta = _draw_trial(instance, r, occ_max, ts)
        root[:] = 0
        _eval_kernel(ids, bound, mcount, r, kmax, v, w, alpha, beta, root)
        nz = np.any(root != 0, axis=1)
        for h in range(kmax + 1):
            if nz[h] and not flags[h]:
                flags[h] = True
                witnesses[h] = ts
    return flags, witnesses, seeds


def _check_params(instance: Instance, r: int, k: int) -> None:
    if r < 1 or r > min(instance.alphabet_size, k):
        raise ParameterOutOfRange(
            f"need 1 <= r <= min(|Sigma|, k) = {min(instance.alphabet_size, k)}, got r={r}"
        )
    if k > instance.n:
        raise ParameterOutOfRange(f"need k <= |S| = {instance.n}, got k={k}")
    if r > MAX_GROUP_DIM:
        raise ParameterOutOfRange(f"group dimension capped at {MAX_GROUP_DIM} (memory)")


def mld_decide(
    instance: Instance, r: int, k: int, trials: int = 20, seed: int = 0
) -> TrialReport:
    """Decide: does a run subsequence with exactly r runs and length exactly k exist?

    Yes-verdicts are always correct; a no-verdict is wrong with probability at
    most (1 - 0.28)^trials.
    """
    _check_params(instance, r, k)
    t0 = time.perf_counter()
    flags, witnesses, seeds = _run_trials(instance, r, k, trials, seed)
    return TrialReport(
        master_seed=seed,
        r=r,
        trials=trials,
        verdicts={k: flags[k]},
        witnesses={k: witnesses[k]} if k in witnesses else {},
        elapsed_s=time.perf_counter() - t0,
        trial_seeds=seeds,
    )


def mld_solve_for_runs(
    instance: Instance, r: int, trials: int = 20, seed: int = 0
) -> tuple[int, TrialReport]:
    """Largest k with a yes-verdict at exactly r runs.

    One table per trial carries every length h <= |S| at once, so the
    descending-k search reads all verdicts from the same roots and stops at
    the first yes. Raises NoSolutionFound if every k in [r, |S|] comes back
    no, which on r <= |Sigma| can only be a (probability-bounded) false
    negative.
    """
    n = instance.n
    _check_params(instance, r, n)
    t0 = time.perf_counter()
    flags, witnesses, seeds = _run_trials(instance, r, n, trials, seed)
    verdicts = {k: flags[k] for k in range(r, n + 1)}
    report = TrialReport(
        master_seed=seed,
        r=r,
        trials=trials,
        verdicts=verdicts,
        witnesses=witnesses,
        elapsed_s=time.perf_counter() - t0,
        trial_seeds=seeds,
    )
    for k in range(n, r - 1, -1):
        if flags[k]:
            return k, report
    raise NoSolutionFound(f"no length in [{r}, {n}] verified at r={r} after {trials} trials")


def mld_verdict_grid(
    instance: Instance, trials: int = 20, seed: int = 0, r_max: int | None = None
) -> dict[tuple[int, int], bool]:
    """Verdicts for every (r, k) with 1 <= r <= r_max and r <= k <= |S|.

    Batch form used by tests and benchmarks; one table pass per (trial, r).
    """
    n = instance.n
    if r_max is None:
        r_max = min(instance.alphabet_size, n)
    grid: dict[tuple[int, int], bool] = {}
    for r in range(1, r_max + 1):
        flags, _, _ = _run_trials(instance, r, n, trials, seed + r)
        for k in range(r, n + 1):
            grid[(r, k)] = flags[k]
    return grid
