"""Seeded random instance generation for tests and benchmarks."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import Instance, LrsError, instance_from_tokens


class ParameterError(LrsError):
    pass


@dataclass(frozen=True)
class GenSpec:
    """Parameters for one generated string.

    shuffled-multiset builds exact per-symbol counts (alphabet size and the
    occurrence cap are honored exactly); uniform draws positions iid, so the
    alphabet size holds only in expectation and a cap cannot be promised
    (passing one is an error rather than silently resampling).
    """

    n: int
    sigma: int
    occ_cap: int | None = None
    distribution: str = "shuffled-multiset"
    seed: int = 0


def gen_string(spec: GenSpec) -> Instance:
    """Generate an Instance from the requested shape; deterministic for a given seed."""
    if spec.n < 1 or spec.sigma < 1:
        raise ParameterError(f"need n >= 1 and sigma >= 1, got n={spec.n}, sigma={spec.sigma}")
    rng = np.random.default_rng(spec.seed)
    if spec.distribution == "uniform":
        if spec.occ_cap is not None:
            raise ParameterError("uniform distribution cannot honor an occurrence cap")
        draws = rng.integers(0, spec.sigma, size=spec.n)
        return instance_from_tokens([f"s{int(d) + 1}" for d in draws])
    if spec.distribution != "shuffled-multiset":
        raise ParameterError(f"unknown distribution {spec.distribution!r}")
    if spec.sigma > spec.n:
        raise ParameterError(f"sigma={spec.sigma} symbols cannot all occur in n={spec.n}")
    cap = spec.occ_cap
    if cap is not None and (cap < 1 or cap * spec.sigma < spec.n):
        raise ParameterError(f"cap {cap} x sigma {spec.sigma} cannot reach n={spec.n}")
    counts = [1] * spec.sigma
    remaining = spec.n - spec.sigma
    at = 0
    while remaining > 0:
        if cap is None or counts[at] < cap:
            counts[at] += 1
            remaining -= 1
        at = (at + 1) % spec.sigma
    multiset = [f"s{i + 1}" for i in range(spec.sigma) for _ in range(counts[i])]
    order = rng.permutation(len(multiset))
    return instance_from_tokens([multiset[int(i)] for i in order])
