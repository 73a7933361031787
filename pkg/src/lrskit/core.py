"""Problem representation for the longest run subsequence problem.

A *run* in a string is a maximal block of consecutive equal symbols. A *run
subsequence* is a subsequence that contains at most one run per symbol: once a
symbol's run ends, that symbol may never reappear later in the subsequence.
The optimization problem asks for a run subsequence of maximum length.

This module holds the shared vocabulary of every solver: the instance (a
symbol sequence over a compact integer alphabet), an occurrence index with
O(1) window counts, and validated solutions with their run decomposition.

Conventions:
  - symbol ids are 0-based ints, assigned by first appearance while parsing;
  - positions handed across module boundaries are 1-based (S[1..n]);
  - all types are immutable after construction and safe to share.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence


class LrsError(Exception):
    """Base class for all errors raised by this package."""


class LimitExceeded(LrsError):
    """Base class for enforced resource caps (maps to CLI exit code 3)."""


class EmptyInstance(LrsError):
    pass


class ParseError(LrsError):
    def __init__(self, message: str, line_no: int):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class NonIncreasingIndices(LrsError):
    def __init__(self, position: int):
        super().__init__(f"indices not strictly increasing at entry {position}")
        self.position = position


class IndexOutOfRange(LrsError):
    def __init__(self, position: int, index: int, n: int):
        super().__init__(f"entry {position}: index {index} outside [1, {n}]")
        self.position = position


class RepeatedRunSymbol(LrsError):
    def __init__(self, token: str, position: int):
        super().__init__(f"symbol {token!r} opens a second run at entry {position}")
        self.token = token
        self.position = position


@dataclass(frozen=True)
class Instance:
    """A string S over a compact alphabet, plus an optional target length k.

    symbols holds 0-based ids; token_table[id] is the original token text.
    Every id in [0, alphabet_size) occurs in symbols, and token_table is a
    bijection between ids and distinct tokens.
    """

    symbols: tuple[int, ...]
    alphabet_size: int
    token_table: tuple[str, ...]
    k: int | None = None

    def __post_init__(self):
        if len(self.token_table) != self.alphabet_size:
            raise LrsError("token_table size does not match alphabet_size")
        if len(set(self.token_table)) != self.alphabet_size:
            raise LrsError("token_table has duplicate tokens")
        seen = set()
        for s in self.symbols:
            if not 0 <= s < self.alphabet_size:
                raise LrsError(f"symbol id {s} outside [0, {self.alphabet_size})")
            seen.add(s)
        if len(seen) != self.alphabet_size:
            raise LrsError("some alphabet ids never occur in symbols")

    @property
    def n(self) -> int:
        return len(self.symbols)

    def token(self, sym: int) -> str:
        return self.token_table[sym]

    def tokens(self) -> list[str]:
        return [self.token_table[s] for s in self.symbols]

    def with_k(self, k: int | None) -> "Instance":
        return Instance(self.symbols, self.alphabet_size, self.token_table, k)


@dataclass(frozen=True)
class OccIndex:
    """Occurrence positions and prefix counts for O(1) window queries.

    positions[a] is the strictly increasing tuple of 1-based positions of a.
    prefix_counts[a][i] counts occurrences of a in S[1..i] (index 0 is 0), so
    the count inside a window S[j+1..i] is prefix_counts[a][i] -
    prefix_counts[a][j].
    """

    positions: tuple[tuple[int, ...], ...]
    prefix_counts: tuple[tuple[int, ...], ...]

    def occ_window(self, sym: int, j: int, i: int) -> int:
        """Number of occurrences of sym in S[j+1..i]; requires 0 <= j <= i <= n."""
        return self.prefix_counts[sym][i] - self.prefix_counts[sym][j]

    def occ(self, sym: int) -> int:
        return len(self.positions[sym])

    @property
    def max_occ(self) -> int:
        return max(len(p) for p in self.positions)


@dataclass(frozen=True)
class Solution:
    """A validated run subsequence: strictly increasing 1-based indices.

    runs lists the maximal equal-symbol blocks as (symbol id, length, index
    sublist); no symbol appears in two blocks.
    """

    indices: tuple[int, ...]
    runs: tuple[tuple[int, int, tuple[int, ...]], ...]

    @property
    def length(self) -> int:
        return len(self.indices)

    @property
    def run_count(self) -> int:
        return len(self.runs)

    def run_symbols(self) -> tuple[int, ...]:
        return tuple(sym for sym, _len, _idx in self.runs)


def parse_instance(text: str) -> Instance:
    """Parse the whitespace-separated token format into an Instance.

    Lines whose first non-whitespace characters are "//" are comments. A "//"
    anywhere else on a line is rejected (tokens must stay unambiguous), with
    the 1-based line number reported. Ids are assigned by first appearance.
    """
    tokens: list[str] = []
    for line_no, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if stripped.startswith("//"):
            continue
        if "//" in stripped:
            raise ParseError('"//" may only start a comment line', line_no)
        tokens.extend(stripped.split())
    if not tokens:
        raise EmptyInstance("no symbol tokens found")
    ids: dict[str, int] = {}
    symbols = []
    for tok in tokens:
        if tok not in ids:
            ids[tok] = len(ids)
        symbols.append(ids[tok])
    table = tuple(sorted(ids, key=ids.get))
    return Instance(tuple(symbols), len(ids), table)


def instance_from_tokens(tokens: Sequence[str], k: int | None = None) -> Instance:
    """Build an Instance directly from a token sequence (ids by first appearance)."""
    ids: dict[str, int] = {}
    symbols = []
    for tok in tokens:
        if not tok or any(c.isspace() for c in tok):
            raise LrsError(f"token {tok!r} is empty or contains whitespace")
        if tok not in ids:
            ids[tok] = len(ids)
        symbols.append(ids[tok])
    if not symbols:
        raise EmptyInstance("no symbol tokens given")
    table = tuple(sorted(ids, key=ids.get))
    return Instance(tuple(symbols), len(ids), table, k)


def instance_to_text(instance: Instance, header: Iterable[str] = ()) -> str:
    """Serialize an Instance to the token file format.

    header lines are emitted as "//" comments. Output is deterministic for a
    given instance and header (no timestamps), 16 tokens per line.
    """
    lines = [f"// {h}" if h else "//" for h in header]
    toks = instance.tokens()
    for i in range(0, len(toks), 16):
        lines.append(" ".join(toks[i : i + 16]))
    return "\n".join(lines) + "\n"


def build_occ_index(instance: Instance) -> OccIndex:
    """Index occurrence positions and prefix counts for every symbol."""
    n = instance.n
    positions: list[list[int]] = [[] for _ in range(instance.alphabet_size)]
    counts = [[0] * (n + 1) for _ in range(instance.alphabet_size)]
    for i, sym in enumerate(instance.symbols, start=1):
        positions[sym].append(i)
        for a in range(instance.alphabet_size):
            counts[a][i] = counts[a][i - 1]
        counts[sym][i] += 1
    return OccIndex(
        tuple(tuple(p) for p in positions),
        tuple(tuple(c) for c in counts),
    )


def validate_solution(instance: Instance, indices: Sequence[int]) -> Solution:
    """Check an index list against all run subsequence invariants.

    Accepts arbitrary input, including the empty list. Raises
    NonIncreasingIndices / IndexOutOfRange / RepeatedRunSymbol naming the
    offending entry (1-based position within `indices`).
    """
    n = instance.n
    prev = 0
    for pos, idx in enumerate(indices, start=1):
        if not 1 <= idx <= n:
            raise IndexOutOfRange(pos, idx, n)
        if idx <= prev:
            raise NonIncreasingIndices(pos)
        prev = idx
    runs: list[tuple[int, int, tuple[int, ...]]] = []
    closed: set[int] = set()
    cur_sym: int | None = None
    cur_idx: list[int] = []
    for pos, idx in enumerate(indices, start=1):
        sym = instance.symbols[idx - 1]
        if sym == cur_sym:
            cur_idx.append(idx)
            continue
        if cur_sym is not None:
            runs.append((cur_sym, len(cur_idx), tuple(cur_idx)))
            closed.add(cur_sym)
        if sym in closed:
            raise RepeatedRunSymbol(instance.token(sym), pos)
        cur_sym = sym
        cur_idx = [idx]
    if cur_sym is not None:
        runs.append((cur_sym, len(cur_idx), tuple(cur_idx)))
    return Solution(tuple(indices), tuple(runs))


def run_decompose(instance: Instance) -> list[tuple[int, int]]:
    """Maximal runs of S itself, as (symbol id, length) blocks in order."""
    out: list[tuple[int, int]] = []
    for sym in instance.symbols:
        if out and out[-1][0] == sym:
            out[-1] = (sym, out[-1][1] + 1)
        else:
            out.append((sym, 1))
    return out


def format_solution(instance: Instance, sol: Solution) -> str:
    """Render the three-line solution output format."""
    runs = " ".join(f"{instance.token(sym)}:{length}" for sym, length, _ in sol.runs)
    return (
        f"length {sol.length}\n"
        f"indices {' '.join(str(i) for i in sol.indices)}\n"
        f"runs {runs}\n"
    )
