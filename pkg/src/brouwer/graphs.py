"""Labeled simple graphs stored as upper-triangle bit fields.

A graph on ``n`` vertices is the pair ``(n, bits)`` where bit ``e`` of
``bits`` marks the ``e``-th vertex pair in row-major order::

    (0,1), (0,2), ..., (0,n-1), (1,2), ..., (n-2,n-1)

The encoding is canonical, so equal graphs compare equal as plain values
and the integer ``bits`` doubles as an enumeration index.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache

EXHAUSTIVE_CAP = 7

_MASK64 = (1 << 64) - 1
_FAMILIES = ("complete", "star", "path", "cycle")


@lru_cache(maxsize=None)
def vertex_pairs(n: int) -> tuple[tuple[int, int], ...]:
    """All vertex pairs (i, j) with i < j, in row-major bit order."""
    return tuple((i, j) for i in range(n) for j in range(i + 1, n))


def edge_index(n: int, i: int, j: int) -> int:
    """Bit position of the pair (i, j) for a graph on n vertices."""
    if i > j:
        i, j = j, i
    return i * n - i * (i + 1) // 2 + (j - i - 1)


@dataclass(frozen=True)
class Graph:
    """Immutable labeled simple graph."""

    n: int
    bits: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"graph needs at least one vertex, got n={self.n}")
        if not 0 <= self.bits < (1 << self.n * (self.n - 1) // 2):
            raise ValueError(f"edge bit field out of range for n={self.n}")

    @property
    def m(self) -> int:
        return self.bits.bit_count()

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        deg = [0] * self.n
        for i, j in self.edges():
            deg[i] += 1
            deg[j] += 1
        return tuple(deg)

    def edges(self) -> list[tuple[int, int]]:
        """Edge list in row-major pair order."""
        pairs = vertex_pairs(self.n)
        out = []
        b = self.bits
        while b:
            low = b & -b
            out.append(pairs[low.bit_length() - 1])
            b ^= low
        return out

    def has_edge(self, i: int, j: int) -> bool:
        if i == j:
            return False
        return bool(self.bits >> edge_index(self.n, i, j) & 1)

    def complement(self) -> "Graph":
        full = (1 << self.n * (self.n - 1) // 2) - 1
        return Graph(self.n, self.bits ^ full)


def from_edge_list(n: int, edges) -> Graph:
    """Build a graph from (u, v) pairs; duplicates collapse to one edge."""
    if n < 1:
        raise ValueError(f"graph needs at least one vertex, got n={n}")
    bits = 0
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"vertex out of range: ({u}, {v}) with n={n}")
        if u == v:
            raise ValueError(f"self-loop not allowed: ({u}, {v})")
        bits |= 1 << edge_index(n, u, v)
    return Graph(n, bits)


def family(name: str, n: int) -> Graph:
    """Named family member: complete, star, path, or cycle on n vertices."""
    if name not in _FAMILIES:
        raise ValueError(f"unknown family {name!r}, expected one of {_FAMILIES}")
    if n < 1:
        raise ValueError(f"graph needs at least one vertex, got n={n}")
    if name == "complete":
        return Graph(n, (1 << n * (n - 1) // 2) - 1)
    if name == "star":
        return from_edge_list(n, [(0, v) for v in range(1, n)])
    if name == "path":
        return from_edge_list(n, [(v, v + 1) for v in range(n - 1)])
    if n < 3:
        raise ValueError(f"cycle needs n >= 3, got n={n}")
    return from_edge_list(n, [(v, (v + 1) % n) for v in range(n)])


class _SplitMix64:
    """SplitMix64 stream (Steele/Lea/Flood constants).

    The generator is pinned here rather than taken from random/numpy so
    that seeded corpora reproduce bit-for-bit on any machine.
    """

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        # rejection keeps the bounded draw exactly uniform
        lim = (1 << 64) - ((1 << 64) % bound)
        while True:
            r = self.next64()
            if r < lim:
                return r % bound


def random_gnm(n: int, m: int, seed: int) -> Graph:
    """Uniform graph with exactly m edges; pure function of (n, m, seed).

    Edges are a uniform m-subset of the C(n, 2) pair slots, drawn by a
    partial Fisher-Yates pass over pair indices with SplitMix64 randomness.
    """
    if n < 1:
        raise ValueError(f"graph needs at least one vertex, got n={n}")
    nslots = n * (n - 1) // 2
    if not 0 <= m <= nslots:
        raise ValueError(f"m={m} outside [0, {nslots}] for n={n}")
    rng = _SplitMix64(seed)
    slots = list(range(nslots))
    bits = 0
    for t in range(m):
        r = t + rng.below(nslots - t)
        slots[t], slots[r] = slots[r], slots[t]
        bits |= 1 << slots[t]
    return Graph(n, bits)


def enumerate_labeled(n: int, start: int = 0, stop: int | None = None):
    """Yield every labeled graph on n vertices in bit-field order.

    ``start``/``stop`` select a sub-range of the 2^C(n,2) indices so
    that disjoint ranges partition the corpus deterministically.
    """
    if not 1 <= n <= EXHAUSTIVE_CAP:
        raise ValueError(
            f"exhaustive cap: labeled enumeration supports 1 <= n <= "
            f"{EXHAUSTIVE_CAP}, got n={n}"
        )
    total = 1 << n * (n - 1) // 2
    if stop is None:
        stop = total
    if not 0 <= start <= stop <= total:
        raise ValueError(f"bad range [{start}, {stop}) for {total} graphs")
    for bits in range(start, stop):
        yield Graph(n, bits)


def first_zagreb(g: Graph) -> int:
    """Sum of squared vertex degrees, in exact integer arithmetic."""
    return sum(d * d for d in g.degrees)


def is_connected(g: Graph) -> bool:
    if g.n == 1:
        return True
    adj = [[] for _ in range(g.n)]
    for i, j in g.edges():
        adj[i].append(j)
        adj[j].append(i)
    seen = bytearray(g.n)
    seen[0] = 1
    stack = [0]
    count = 1
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if not seen[w]:
                seen[w] = 1
                count += 1
                stack.append(w)
    return count == g.n
