"""Simple undirected graphs with degree-based index computation and I/O.

Vertices are dense integers ``0..n-1``.  Graphs are immutable after
construction, so values can be shared freely (hashable, usable as dict
keys, safe across worker processes).

The two degree-based indices computed here are

* ``m1(g)``: the sum of squared vertex degrees, and
* ``m2(g)``: the sum over edges of the product of the endpoint degrees.

Both are exact nonnegative integers (degrees are at most ``n - 1``, so no
overflow concerns at the supported graph sizes).

Supported interchange formats:

* graph6, bit-exact for orders up to 62 (single-byte size header), and
* a plain edge-list text format: a header line ``"n m"`` followed by
  ``m`` lines ``"u v"`` with ``0 <= u < v < n``.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple, Optional

__all__ = [
    "Graph",
    "Bipartition",
    "GraphFormatError",
    "m1",
    "m2",
    "min_degree",
    "max_degree",
    "bipartition_of",
    "is_connected",
    "connected_components",
    "encode_graph6",
    "decode_graph6",
    "parse_edge_list",
    "format_edge_list",
    "read_graph_file",
]

_GRAPH6_MAX_N = 62
_GRAPH6_HEADER = b">>graph6<<"


class GraphFormatError(ValueError):
    """Malformed graph6 or edge-list input.

    ``offset`` is the byte offset (graph6) or line number (edge list) at
    which the problem was detected.
    """

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (at offset {offset})"
        super().__init__(message)
        self.offset = offset


class Graph:
    """Immutable simple undirected graph on vertices ``0..n-1``.

    The adjacency relation is symmetric and irreflexive; loops and
    duplicate edges are rejected at construction time.
    """

    __slots__ = ("n", "_masks", "_edges", "_degrees", "_hash")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        masks = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if masks[u] >> v & 1:
                raise ValueError(f"duplicate edge ({u}, {v})")
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        self.n = n
        self._masks = tuple(masks)
        self._edges = tuple(
            (u, v) for u in range(n) for v in range(u + 1, n) if masks[u] >> v & 1
        )
        self._degrees = tuple(m.bit_count() for m in masks)
        self._hash = hash((n, self._masks))

    @property
    def neighbor_masks(self) -> tuple[int, ...]:
        """Per-vertex neighbor bitmasks (bit ``v`` of entry ``u`` means ``uv`` is an edge)."""
        return self._masks

    @property
    def num_edges(self) -> int:
        return len(self._edges)

    def edges(self) -> tuple[tuple[int, int], ...]:
        """All edges as sorted ``(u, v)`` pairs with ``u < v``, in lexicographic order."""
        return self._edges

    def degree(self, u: int) -> int:
        return self._degrees[u]

    def degrees(self) -> tuple[int, ...]:
        return self._degrees

    def neighbors(self, u: int) -> tuple[int, ...]:
        m = self._masks[u]
        return tuple(v for v in range(self.n) if m >> v & 1)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._masks[u] >> v & 1)

    def with_edges_changed(
        self,
        removed: Iterable[tuple[int, int]] = (),
        added: Iterable[tuple[int, int]] = (),
    ) -> "Graph":
        """New graph with ``removed`` edges deleted and ``added`` edges inserted.

        Raises ``ValueError`` if a removed edge is absent or an added edge
        already present (after removals).
        """
        present = {(min(u, v), max(u, v)) for u, v in self._edges}
        for u, v in removed:
            e = (min(u, v), max(u, v))
            if e not in present:
                raise ValueError(f"cannot remove absent edge {e}")
            present.discard(e)
        for u, v in added:
            e = (min(u, v), max(u, v))
            if e in present:
                raise ValueError(f"cannot add existing edge {e}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            present.add(e)
        return Graph(self.n, sorted(present))

    def relabeled(self, perm: Iterable[int]) -> "Graph":
        """New graph with vertex ``u`` renamed to ``perm[u]``."""
        p = tuple(perm)
        if sorted(p) != list(range(self.n)):
            raise ValueError("perm must be a permutation of 0..n-1")
        return Graph(self.n, [(p[u], p[v]) for u, v in self._edges])

    def induced(self, keep: Iterable[int]) -> "Graph":
        """Induced subgraph on ``keep``, relabeled to ``0..len(keep)-1`` in sorted order."""
        kept = sorted(set(keep))
        index = {v: i for i, v in enumerate(kept)}
        edges = [
            (index[u], index[v]) for u, v in self._edges if u in index and v in index
        ]
        return Graph(len(kept), edges)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._masks == other._masks

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self._edges)!r})"


class Bipartition(NamedTuple):
    """Two disjoint vertex classes covering ``V``; every edge crosses them."""

    X: frozenset[int]
    Y: frozenset[int]


def m1(g: Graph) -> int:
    """First degree-power index: sum of the squared degree of every vertex."""
    return sum(d * d for d in g.degrees())


def m2(g: Graph) -> int:
    """Second degree-power index: sum over edges of the product of endpoint degrees."""
    deg = g.degrees()
    return sum(deg[u] * deg[v] for u, v in g.edges())


def min_degree(g: Graph) -> int:
    """Minimum vertex degree; 0 for edgeless graphs.  Requires ``n >= 1``."""
    if g.n < 1:
        raise ValueError("min_degree requires at least one vertex")
    return min(g.degrees())


def max_degree(g: Graph) -> int:
    if g.n < 1:
        raise ValueError("max_degree requires at least one vertex")
    return max(g.degrees())


def _reach(masks: tuple[int, ...], start_bit: int, alive: int) -> int:
    """Bitmask of vertices reachable from ``start_bit`` within ``alive``."""
    seen = start_bit
    frontier = start_bit
    while frontier:
        nxt = 0
        m = frontier
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            nxt |= masks[v]
        frontier = nxt & alive & ~seen
        seen |= frontier
    return seen


def is_connected(g: Graph) -> bool:
    """True when the graph has one connected component (vacuously for n <= 1)."""
    if g.n <= 1:
        return True
    alive = (1 << g.n) - 1
    return _reach(g.neighbor_masks, 1, alive) == alive


def connected_components(g: Graph, excluded: frozenset[int] = frozenset()) -> list[list[int]]:
    """Components of ``g`` with ``excluded`` vertices removed, as sorted vertex lists."""
    masks = g.neighbor_masks
    alive = 0
    for v in range(g.n):
        if v not in excluded:
            alive |= 1 << v
    comps = []
    remaining = alive
    while remaining:
        start = remaining & -remaining
        seen = _reach(masks, start, alive)
        comps.append([v for v in range(g.n) if seen >> v & 1])
        remaining &= ~seen
    return comps


def bipartition_of(g: Graph) -> Optional[Bipartition]:
    """Two-color the graph, or return ``None`` when an odd cycle exists.

    Coloring proceeds per connected component by breadth-first search from
    the smallest unvisited vertex, which lands in ``X``; isolated vertices
    therefore land in ``X`` as well.
    """
    color = [-1] * g.n
    masks = g.neighbor_masks
    for root in range(g.n):
        if color[root] != -1:
            continue
        color[root] = 0
        queue = [root]
        while queue:
            u = queue.pop()
            cu = color[u]
            m = masks[u]
            while m:
                v = (m & -m).bit_length() - 1
                m &= m - 1
                if color[v] == -1:
                    color[v] = 1 - cu
                    queue.append(v)
                elif color[v] == cu:
                    return None
    return Bipartition(
        frozenset(v for v in range(g.n) if color[v] == 0),
        frozenset(v for v in range(g.n) if color[v] == 1),
    )


# -- graph6 codec -----------------------------------------------------------

def encode_graph6(g: Graph) -> bytes:
    """Encode as graph6: size byte ``n + 63`` then packed upper-triangle bits.

    Bits are emitted column by column (``x_{0,1} x_{0,2} x_{1,2} x_{0,3}
    ...``), zero-padded to a multiple of six, each six-bit group offset
    by 63 into printable ASCII.  Supports ``n <= 62``.
    """
    if g.n > _GRAPH6_MAX_N:
        raise ValueError(f"graph6 single-byte header supports n <= {_GRAPH6_MAX_N}")
    out = [g.n + 63]
    acc = 0
    nbits = 0
    masks = g.neighbor_masks
    for v in range(1, g.n):
        col = masks[v]
        for u in range(v):
            acc = acc << 1 | (col >> u & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = 0
                nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return bytes(out)


def decode_graph6(data: bytes) -> Graph:
    """Decode a graph6 byte string, rejecting malformed input with an offset.

    Accepts the optional ``>>graph6<<`` prefix.  Only the single-byte size
    header (``n <= 62``) is supported; the bit body must have exactly
    ``ceil(n(n-1)/2 / 6)`` characters with zero padding bits.
    """
    if isinstance(data, str):
        data = data.encode("ascii")
    base = 0
    if data.startswith(_GRAPH6_HEADER):
        base = len(_GRAPH6_HEADER)
        data = data[base:]
    data = data.rstrip(b"\r\n")
    if not data:
        raise GraphFormatError("empty graph6 string", base)
    head = data[0]
    if head == 126:
        raise GraphFormatError(
            "multi-byte graph6 size headers (n > 62) are not supported", base
        )
    if not 63 <= head <= 63 + _GRAPH6_MAX_N:
        raise GraphFormatError(f"invalid graph6 size byte {head}", base)
    n = head - 63
    body = data[1:]
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) < need:
        raise GraphFormatError(
            f"graph6 body too short: need {need} characters, got {len(body)}",
            base + 1 + len(body),
        )
    if len(body) > need:
        raise GraphFormatError(
            f"graph6 body too long: need {need} characters, got {len(body)}",
            base + 1 + need,
        )
    edges = []
    bit_index = 0
    pairs = [(u, v) for v in range(1, n) for u in range(v)]
    for i, ch in enumerate(body):
        if not 63 <= ch <= 126:
            raise GraphFormatError(f"invalid graph6 character {ch}", base + 1 + i)
        group = ch - 63
        for b in range(5, -1, -1):
            bit = group >> b & 1
            if bit_index < len(pairs):
                if bit:
                    edges.append(pairs[bit_index])
            elif bit:
                raise GraphFormatError(
                    "nonzero padding bits in graph6 body", base + 1 + i
                )
            bit_index += 1
    return Graph(n, edges)


# -- edge-list text format ---------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    """Parse the ``"n m"`` / ``"u v"`` text format.

    Requires ``0 <= u < v < n`` on every edge line; duplicate pairs, bad
    counts and trailing junk are errors (reported with a line number).
    """
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise GraphFormatError("empty edge-list input", 1)
    header = lines[0].split()
    if len(header) != 2:
        raise GraphFormatError("header must be 'n m'", 1)
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise GraphFormatError("header must contain two integers", 1) from None
    if n < 0 or m < 0:
        raise GraphFormatError("header counts must be nonnegative", 1)
    if len(lines) - 1 != m:
        raise GraphFormatError(
            f"expected {m} edge lines, found {len(lines) - 1}", len(lines)
        )
    seen = set()
    edges = []
    for i, ln in enumerate(lines[1:], start=2):
        parts = ln.split()
        if len(parts) != 2:
            raise GraphFormatError("edge line must be 'u v'", i)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError("edge line must contain two integers", i) from None
        if not 0 <= u < v < n:
            raise GraphFormatError(f"edge ({u}, {v}) violates 0 <= u < v < n", i)
        if (u, v) in seen:
            raise GraphFormatError(f"duplicate edge ({u}, {v})", i)
        seen.add((u, v))
        edges.append((u, v))
    return Graph(n, edges)


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.num_edges}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def read_graph_file(path: str, fmt: str = "auto") -> Graph:
    """Load a graph from ``path`` in graph6 or edge-list format.

    ``fmt="auto"`` sniffs the content: a first line of two integers is
    treated as an edge list, anything else as graph6.
    """
    with open(path, "rb") as fh:
        raw = fh.read()
    if fmt == "auto":
        first = raw.splitlines()[0].split() if raw.strip() else []
        if len(first) == 2 and all(tok.isdigit() for tok in first):
            fmt = "edgelist"
        else:
            fmt = "graph6"
    if fmt == "edgelist":
        return parse_edge_list(raw.decode("ascii"))
    if fmt == "graph6":
        return decode_graph6(raw.strip())
    raise ValueError(f"unknown graph format {fmt!r}")
