"""Hardness constructions as instance factories and round-trip validators.

Independent-set encoding (cubic graphs): a 3-regular graph G with n vertices
and m = 3n/2 edges becomes a string of length 5n + 6m + 3(n+m) over an
alphabet of 4n + 7m symbols, in which every symbol occurs at most twice.
Per vertex i (neighbors listed in ascending order):

    block(v_i)  = w_i  x_e1^i  x_e2^i  x_e3^i  w_i
    block(e), e = {i,j}, i<j:  e1  x_e^i  e2  e1  x_e^j  e2

and a three-symbol separator block follows every vertex and edge block; edge
blocks come after all vertex blocks, in lexicographic edge order. Choosing an
independent set I and keeping w_i w_i for i in I (length 2), the left
length-4 form w x x x otherwise, the x-bearing edge form for edges into I
(length 4) and e1 e1 e2 (length 3) elsewhere, plus all separators, gives a
valid run subsequence of length exactly

    threshold(q) = 5q + 4(n-q) + 3m + 3(n+m),   q = |I|,

which is strictly increasing in q. canonicalize() rewrites any valid solution
into this shape without losing length, so the optimum of the encoding equals
threshold(maximum independent set size) and decoding reads the independent
set straight off the length-2 vertex blocks.

OR-composition: t equal-size instances over equal-size alphabets are mapped
onto one shared alphabet and concatenated with 2n-symbol $ and # buffers; the
composed target k' = k + (t+1)*2n is reachable iff some input reaches k,
because at most one maximal $-run and one #-run can be kept and merging
buffer blocks across skipped inputs yields exactly (t+1)*2n buffer symbols.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import (
    Instance,
    LimitExceeded,
    LrsError,
    Solution,
    instance_from_tokens,
    validate_solution,
)

MIS_CAP = 20
PAIRING_RETRY_LIMIT = 10_000

SEP_DOLLAR = "SEP_DOLLAR"
SEP_HASH = "SEP_HASH"


class NotCubic(LrsError):
    pass


class OddVertexCount(LrsError):
    pass


class InvalidSolution(LrsError):
    pass


class NotIndependent(LrsError):
    pass


class HeterogeneousInstances(LrsError):
    pass


class InvalidN(LrsError):
    pass


class RejectionLimitExceeded(LimitExceeded):
    pass


class GraphTooLarge(LimitExceeded):
    pass


@dataclass(frozen=True)
class CubicGraph:
    """A 3-regular simple graph; vertices 1..n, edges as (i, j) with i < j."""

    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.n % 2 != 0:
            raise OddVertexCount(f"3-regular graphs need an even vertex count, got {self.n}")
        deg = [0] * (self.n + 1)
        seen = set()
        for i, j in self.edges:
            if not (1 <= i < j <= self.n):
                raise NotCubic(f"edge ({i}, {j}) is not 1-based with i < j within n={self.n}")
            if (i, j) in seen:
                raise NotCubic(f"duplicate edge ({i}, {j})")
            seen.add((i, j))
            deg[i] += 1
            deg[j] += 1
        bad = [v for v in range(1, self.n + 1) if deg[v] != 3]
        if bad:
            raise NotCubic(f"vertices with degree != 3: {bad}")

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> tuple[int, ...]:
        out = []
        for i, j in self.edges:
            if i == v:
                out.append(j)
            elif j == v:
                out.append(i)
        return tuple(sorted(out))

    def is_independent(self, vertices) -> bool:
        vs = set(vertices)
        return all(not (i in vs and j in vs) for i, j in self.edges)


@dataclass(frozen=True)
class ReductionMap:
    """The encoded instance plus the bookkeeping to decode solutions.

    roles maps each symbol-id to (role, block id) with roles "w", "x", "e1",
    "e2", "sep"; spans maps each block id ("v3", "e1_2", "sep5") to its
    1-based inclusive index range in the string.
    """

    graph: CubicGraph
    instance: Instance
    roles: dict[int, tuple[str, str]]
    spans: dict[str, tuple[int, int]]

    def threshold(self, q: int) -> int:
        n, m = self.graph.n, self.graph.m
        return 5 * q + 4 * (n - q) + 3 * m + 3 * (n + m)

    def vertex_span(self, i: int) -> tuple[int, int]:
        return self.spans[f"v{i}"]

    def edge_span(self, e: tuple[int, int]) -> tuple[int, int]:
        return self.spans[f"e{e[0]}_{e[1]}"]


@dataclass(frozen=True)
class CompositionResult:
    """OR-composition of t equal-shape instances onto one shared alphabet."""

    instance: Instance
    k_prime: int
    spans: tuple[tuple[int, int], ...]
    n: int
    m: int
    t: int


def misc_encode(graph: CubicGraph) -> ReductionMap:
    """Encode a cubic graph as a run subsequence instance (see module docstring)."""
    n, m = graph.n, graph.m
    tokens: list[str] = []
    roles: dict[str, tuple[str, str]] = {}
    spans: dict[str, tuple[int, int]] = {}
    sep_count = 0

    def emit_block(block_id: str, block_tokens: list[str], role_of: list[str]) -> None:
        start = len(tokens) + 1
        tokens.extend(block_tokens)
        spans[block_id] = (start, len(tokens))
        for tok, role in zip(block_tokens, role_of):
            roles.setdefault(tok, (role, block_id))

    def emit_separator() -> None:
        nonlocal sep_count
        sep_count += 1
        block_id = f"sep{sep_count}"
        seps = [f"sep{sep_count}_{z}" for z in (1, 2, 3)]
        emit_block(block_id, seps, ["sep"] * 3)

    def x_token(i: int, j: int, owner: int) -> str:
        a, b = min(i, j), max(i, j)
        return f"x{a}_{b}^{owner}"

    for i in range(1, n + 1):
        xs = [x_token(i, j, i) for j in graph.neighbors(i)]
        emit_block(f"v{i}", [f"w{i}"] + xs + [f"w{i}"], ["w", "x", "x", "x", "w"])
        emit_separator()
    for i, j in sorted(graph.edges):
        block = [
            f"e1_{i}_{j}",
            x_token(i, j, i),
            f"e2_{i}_{j}",
            f"e1_{i}_{j}",
            x_token(i, j, j),
            f"e2_{i}_{j}",
        ]
        emit_block(f"e{i}_{j}", block, ["e1", "x", "e2", "e1", "x", "e2"])
        emit_separator()

    instance = instance_from_tokens(tokens)
    assert instance.n == 5 * n + 6 * m + 3 * (n + m)
    assert instance.alphabet_size == 4 * n + 7 * m
    id_roles = {
        sym: roles[instance.token(sym)] for sym in range(instance.alphabet_size)
    }
    return ReductionMap(graph, instance, id_roles, spans)


def roles_to_text(rm: ReductionMap) -> str:
    """Sidecar serialization: one line per symbol, '<token> <role> <block-id>'."""
    lines = []
    for sym in range(rm.instance.alphabet_size):
        tok = rm.instance.token(sym)
        role, block = rm.roles[sym]
        lines.append(f"{tok} {role} {block}")
    return "\n".join(lines) + "\n"


def _canonical_indices(rm: ReductionMap, chosen: frozenset[int]) -> list[int]:
    """1-based indices of the canonical solution determined by a vertex set."""
    idx: list[int] = []
    for i in range(1, rm.graph.n + 1):
        s, _ = rm.vertex_span(i)
        if i in chosen:
            idx += [s, s + 4]
        else:
            idx += [s, s + 1, s + 2, s + 3]
    for e in sorted(rm.graph.edges):
        s, _ = rm.edge_span(e)
        i, j = e
        if i in chosen:
            idx += [s, s + 1, s + 2, s + 5]
        elif j in chosen:
            idx += [s, s + 3, s + 4, s + 5]
        else:
            idx += [s, s + 3, s + 5]
    for block_id, (s, t) in rm.spans.items():
        if block_id.startswith("sep"):
            idx += list(range(s, t + 1))
    return sorted(idx)


def misc_solution_from_is(rm: ReductionMap, vertices) -> Solution:
    """Canonical solution realizing threshold(|vertices|); input must be independent."""
    vs = frozenset(vertices)
    if not vs <= set(range(1, rm.graph.n + 1)):
        raise NotIndependent(f"unknown vertices: {sorted(vs - set(range(1, rm.graph.n + 1)))}")
    if not rm.graph.is_independent(vs):
        raise NotIndependent(f"vertex set {sorted(vs)} contains an edge")
    sol = validate_solution(rm.instance, _canonical_indices(rm, vs))
    assert sol.length == rm.threshold(len(vs))
    return sol


def canonicalize(rm: ReductionMap, sol: Solution) -> Solution:
    """Rewrite a valid solution into canonical shape without losing length.

    Reads off the kept length of every vertex block, marks vertices keeping
    at most 2 symbols, thins that set to a greedily maximal independent
    subset (ascending vertex index), and rebuilds the canonical solution it
    determines. Maximality matters: a marked-but-flipped vertex is guaranteed
    an IS-neighbor, which caps its number of deficit edges at two, and that
    is what makes the rebuilt length dominate the input length.
    """
    try:
        revalidated = validate_solution(rm.instance, sol.indices)
    except LrsError as exc:
        raise InvalidSolution(f"solution does not validate: {exc}") from exc

    n = rm.graph.n
    kept = [0] * (n + 1)
    for i in range(1, n + 1):
        s, t = rm.vertex_span(i)
        kept[i] = sum(1 for x in revalidated.indices if s <= x <= t)
    marked = [i for i in range(1, n + 1) if kept[i] <= 2]
    chosen: set[int] = set()
    for i in marked:
        if all(j not in chosen for j in rm.graph.neighbors(i)):
            chosen.add(i)
    out = validate_solution(rm.instance, _canonical_indices(rm, frozenset(chosen)))
    assert out.length >= revalidated.length, "canonical rebuild lost length"
    return out


def is_canonical(rm: ReductionMap, sol: Solution) -> bool:
    """Shape predicate: separators complete, blocks in the fixed canonical forms."""
    selected = set(sol.indices)
    chosen = set()
    for i in range(1, rm.graph.n + 1):
        s, _ = rm.vertex_span(i)
        block = frozenset(x - s for x in selected if s <= x <= s + 4)
        if block == frozenset({0, 4}):
            chosen.add(i)
        elif block != frozenset({0, 1, 2, 3}):
            return False
    if not rm.graph.is_independent(chosen):
        return False
    for e in sorted(rm.graph.edges):
        s, _ = rm.edge_span(e)
        block = frozenset(x - s for x in selected if s <= x <= s + 5)
        i, j = e
        if i in chosen:
            want = frozenset({0, 1, 2, 5})
        elif j in chosen:
            want = frozenset({0, 3, 4, 5})
        else:
            want = frozenset({0, 3, 5})
        if block != want:
            return False
    for block_id, (s, t) in rm.spans.items():
        if block_id.startswith("sep") and any(x not in selected for x in range(s, t + 1)):
            return False
    return True


def misc_decode(rm: ReductionMap, sol: Solution) -> tuple[int, ...]:
    """Canonicalize, then read the independent set off length-2 vertex blocks.

    If |sol| >= threshold(q) then the decoded set has size >= q, because the
    canonical length equals threshold(decoded size) and threshold is strictly
    increasing.
    """
    canon = canonicalize(rm, sol)
    selected = set(canon.indices)
    out = []
    for i in range(1, rm.graph.n + 1):
        s, t = rm.vertex_span(i)
        if sum(1 for x in selected if s <= x <= t) == 2:
            out.append(i)
    return tuple(out)


def mis_bruteforce(graph: CubicGraph) -> tuple[int, ...]:
    """Exact maximum independent set, n <= 20; lexicographically smallest on ties."""
    n = graph.n
    if n > MIS_CAP:
        raise GraphTooLarge(f"exhaustive independent set capped at n <= {MIS_CAP}, got {n}")
    adj = [0] * (n + 1)
    for i, j in graph.edges:
        adj[i] |= 1 << j
        adj[j] |= 1 << i
    full = ((1 << (n + 1)) - 1) & ~1  # vertices 1..n
    memo: dict[int, tuple[int, tuple[int, ...]]] = {}

    def rec(avail: int) -> tuple[int, tuple[int, ...]]:
        if avail == 0:
            return 0, ()
        if avail in memo:
            return memo[avail]
        v = (avail & -avail).bit_length() - 1
        size_in, set_in = rec(avail & ~((1 << v) | adj[v]))
        size_in, set_in = size_in + 1, (v,) + set_in
        size_out, set_out = rec(avail & ~(1 << v))
        if size_in > size_out or (size_in == size_out and set_in <= set_out):
            memo[avail] = (size_in, set_in)
        else:
            memo[avail] = (size_out, set_out)
        return memo[avail]

    _, best = rec(full)
    return tuple(sorted(best))


def cross_compose(instances: list[Instance], k: int) -> CompositionResult:
    """Concatenate t equal-shape instances with $/# buffers; k' = k + (t+1)*2n.

    All inputs must share string length n and alphabet size m (the shapes the
    composition relation groups together); alphabets are unified by mapping
    each input's tokens, in lexicographic order, to the shared tokens
    "1".."m". Buffer tokens are the reserved SEP_DOLLAR / SEP_HASH.
    """
    if not instances:
        raise HeterogeneousInstances("need at least one instance")
    n = instances[0].n
    m = instances[0].alphabet_size
    for pos, inst in enumerate(instances, start=1):
        if inst.n != n:
            raise HeterogeneousInstances(f"instance {pos} has length {inst.n}, expected {n}")
        if inst.alphabet_size != m:
            raise HeterogeneousInstances(
                f"instance {pos} has alphabet size {inst.alphabet_size}, expected {m}"
            )
    t = len(instances)
    tokens: list[str] = []
    spans: list[tuple[int, int]] = []
    for inst in instances:
        order = sorted(inst.token_table)
        sigma_map = {tok: str(pos + 1) for pos, tok in enumerate(order)}
        tokens += [SEP_DOLLAR] * (2 * n)
        spans.append((len(tokens) + 1, len(tokens) + n))
        tokens += [sigma_map[tok] for tok in inst.tokens()]
        tokens += [SEP_HASH] * (2 * n)
    k_prime = k + (t + 1) * 2 * n
    composed = instance_from_tokens(tokens, k=k_prime)
    assert composed.alphabet_size == m + 2
    return CompositionResult(composed, k_prime, tuple(spans), n, m, t)


def gen_random_cubic(n: int, seed: int) -> CubicGraph:
    """Random 3-regular simple graph via the pairing model with rejection.

    Three stubs per vertex are matched uniformly; matchings with loops or
    repeated edges are rejected and redrawn, up to PAIRING_RETRY_LIMIT tries.
    """
    if n < 4 or n % 2 != 0:
        raise InvalidN(f"need even n >= 4, got {n}")
    rng = np.random.default_rng(seed)
    stubs = np.repeat(np.arange(1, n + 1), 3)
    for _ in range(PAIRING_RETRY_LIMIT):
        perm = rng.permutation(stubs)
        edges = set()
        ok = True
        for a, b in zip(perm[0::2], perm[1::2]):
            i, j = int(min(a, b)), int(max(a, b))
            if i == j or (i, j) in edges:
                ok = False
                break
            edges.add((i, j))
        if ok:
            return CubicGraph(n, tuple(sorted(edges)))
    raise RejectionLimitExceeded(
        f"no simple 3-regular pairing found in {PAIRING_RETRY_LIMIT} tries for n={n}"
    )


def parse_graph(text: str) -> CubicGraph:
    """Graph file format: first line 'n m', then m lines 'i j' (1-based, i < j)."""
    rows = [line.split() for line in text.splitlines() if line.strip()]
    if not rows or len(rows[0]) != 2:
        raise LrsError("graph file must start with a line 'n m'")
    n, m = int(rows[0][0]), int(rows[0][1])
    if len(rows) - 1 != m:
        raise LrsError(f"expected {m} edge lines, found {len(rows) - 1}")
    edges = tuple((int(a), int(b)) for a, b in rows[1:])
    return CubicGraph(n, edges)


def graph_to_text(graph: CubicGraph) -> str:
    lines = [f"{graph.n} {graph.m}"]
    lines += [f"{i} {j}" for i, j in sorted(graph.edges)]
    return "\n".join(lines) + "\n"
