"""Immutable simple graphs with exact BFS distance data.

Vertices are dense integers ``0..n-1``.  A :class:`Graph` stores one neighbor
bitmask per vertex (the representation every hot loop in this package runs
on) and derives sorted neighbor tuples lazily.  Distances are exact hop
counts from breadth-first search; disconnected input is rejected outright so
that no infinity ever reaches the integer invariants built on top.

Supported interchange formats:

* graph6 - one ASCII line per graph, 6 bits per byte offset by 63, order
  header followed by the upper triangle of the adjacency matrix column by
  column, most significant bit first, zero padded.
* edge list - UTF-8 text, ``#`` comment lines, a header line ``n m`` and
  then ``m`` lines ``u v`` with 0-based endpoints.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator, Sequence


class GraphError(Exception):
    """Invalid graph construction or malformed graph input."""


class FormatError(GraphError):
    """Malformed graph6 or edge-list text."""


class DisconnectedGraphError(GraphError):
    """An operation that presumes connectivity met a disconnected graph."""


# Above this order the per-vertex bitmasks get too wide to be a win and the
# BFS falls back to queue-based traversal.
_BITMASK_LIMIT = 1024


class Graph:
    """Simple undirected graph, immutable after construction.

    ``bits[v]`` is the neighbor set of ``v`` as a bitmask.  Instances are
    hashable, compare by structure, and are safe to share across worker
    processes.  Use :func:`from_edge_list`, :func:`parse_graph6` or the
    family constructors; ``Graph._raw`` is the internal trusted path.
    """

    __slots__ = ("n", "bits", "_adj", "_m")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        other = from_edge_list(n, edges)
        self.n = other.n
        self.bits = other.bits
        self._adj = None
        self._m = None

    @classmethod
    def _raw(cls, n: int, bits: Sequence[int]) -> "Graph":
        g = object.__new__(cls)
        g.n = n
        g.bits = tuple(bits)
        g._adj = None
        g._m = None
        return g

    @property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        """Sorted neighbor tuple for every vertex."""
        adj = self._adj
        if adj is None:
            adj = tuple(tuple(_iter_bits(b)) for b in self.bits)
            self._adj = adj
        return adj

    @property
    def m(self) -> int:
        """Number of edges."""
        m = self._m
        if m is None:
            m = sum(b.bit_count() for b in self.bits) // 2
            self._m = m
        return m

    def degree(self, v: int) -> int:
        return self.bits[v].bit_count()

    def min_degree(self) -> int:
        return min((b.bit_count() for b in self.bits), default=0)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.bits[u] >> v) & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        """All edges as pairs ``(u, v)`` with ``u < v``."""
        for u, b in enumerate(self.bits):
            rest = b >> (u + 1)
            v = u + 1
            while rest:
                if rest & 1:
                    yield (u, v)
                rest >>= 1
                v += 1

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Graph) and self.n == other.n and self.bits == other.bits
        )

    def __hash__(self) -> int:
        return hash((self.n, self.bits))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def _iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list; duplicates collapse silently.

    Rejects self-loops and out-of-range endpoints.
    """
    if n < 0:
        raise GraphError(f"vertex count must be nonnegative, got {n}")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u},{v}) out of range for n={n}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph._raw(n, rows)


def parse_edge_list(text: str) -> Graph:
    """Parse the ``n m`` / ``u v`` edge-list text format."""
    lines = [
        ln.strip()
        for ln in text.splitlines()
        if ln.strip() and not ln.lstrip().startswith("#")
    ]
    if not lines:
        raise FormatError("empty edge-list input")
    head = lines[0].split()
    if len(head) != 2:
        raise FormatError(f"expected header 'n m', got {lines[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise FormatError(f"expected header 'n m', got {lines[0]!r}") from None
    if len(lines) - 1 != m:
        raise FormatError(f"header declares {m} edges, found {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise FormatError(f"expected edge line 'u v', got {ln!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise FormatError(f"expected edge line 'u v', got {ln!r}") from None
    try:
        return from_edge_list(n, edges)
    except GraphError as exc:
        raise FormatError(str(exc)) from None


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line (trailing newline optional)."""
    s = text.rstrip("\r\n")
    if not s:
        raise FormatError("empty graph6 line")
    vals = []
    for ch in s:
        code = ord(ch) - 63
        if not 0 <= code <= 63:
            raise FormatError(f"graph6 byte out of range: {ch!r}")
        vals.append(code)
    if vals[0] != 63:
        n = vals[0]
        pos = 1
    elif len(vals) >= 2 and vals[1] != 63:
        if len(vals) < 4:
            raise FormatError("truncated graph6 order field")
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        pos = 4
        if n < 63:
            raise FormatError("non-canonical graph6 order field")
    else:
        if len(vals) < 8:
            raise FormatError("truncated graph6 order field")
        n = 0
        for code in vals[2:8]:
            n = (n << 6) | code
        pos = 8
        if n < 258048:
            raise FormatError("non-canonical graph6 order field")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(vals) - pos != nbytes:
        raise FormatError(
            f"graph6 data for n={n} needs {nbytes} bytes, got {len(vals) - pos}"
        )
    stream = 0
    for code in vals[pos:]:
        stream = (stream << 6) | code
    pad = 6 * nbytes - nbits
    if pad and stream & ((1 << pad) - 1):
        raise FormatError("nonzero graph6 padding bits")
    stream >>= pad
    rows = [0] * n
    bitpos = nbits
    for v in range(1, n):
        for u in range(v):
            bitpos -= 1
            if (stream >> bitpos) & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
    return Graph._raw(n, rows)


def emit_graph6(g: Graph) -> str:
    """Encode a graph as one graph6 line (no trailing newline)."""
    n = g.n
    if n > 68719476735:
        raise GraphError(f"order {n} exceeds the graph6 bound")
    if n <= 62:
        head = chr(n + 63)
    elif n <= 258047:
        head = "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    else:
        head = "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    bits = g.bits
    out = [head]
    acc = 0
    width = 0
    for v in range(1, n):
        col = bits[v]
        for u in range(v):
            acc = (acc << 1) | ((col >> u) & 1)
            width += 1
            if width == 6:
                out.append(chr(acc + 63))
                acc = 0
                width = 0
    if width:
        out.append(chr((acc << (6 - width)) + 63))
    return "".join(out)


class DistanceData:
    """All-pairs hop distances plus the per-vertex metrics derived from them.

    ``dist`` is a flat row-major array (``dist[u*n + v]``), ``ecc[v]`` the
    eccentricity, ``tr[v]`` the transmission (sum of distances from ``v``),
    ``diam``/``rad`` the maximum/minimum eccentricity.
    """

    __slots__ = ("n", "dist", "ecc", "tr", "diam", "rad")

    def __init__(self, n, dist, ecc, tr, diam, rad):
        self.n = n
        self.dist = dist
        self.ecc = ecc
        self.tr = tr
        self.diam = diam
        self.rad = rad

    def distance(self, u: int, v: int) -> int:
        return self.dist[u * self.n + v]

    def row(self, v: int):
        n = self.n
        return self.dist[v * n : (v + 1) * n]

    def __repr__(self) -> str:
        return f"DistanceData(n={self.n}, diam={self.diam}, rad={self.rad})"


def all_pairs_distances(g: Graph) -> DistanceData:
    """BFS all-pairs distances; raises on disconnected input."""
    n = g.n
    if n == 0:
        return DistanceData(0, [], [], [], 0, 0)
    if n > _BITMASK_LIMIT:
        return _all_pairs_queue(g)
    bits = g.bits
    full = (1 << n) - 1
    dist = [0] * (n * n)
    ecc = [0] * n
    tr = [0] * n
    for v in range(n):
        frontier = bits[v]
        if not frontier:
            if n == 1:
                continue
            raise DisconnectedGraphError("graph is disconnected")
        base = v * n
        f = frontier
        while f:
            low = f & -f
            dist[base + low.bit_length() - 1] = 1
            f ^= low
        seen = (1 << v) | frontier
        d = 1
        t = frontier.bit_count()
        while seen != full:
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= bits[low.bit_length() - 1]
                f ^= low
            nxt &= ~seen
            if not nxt:
                raise DisconnectedGraphError("graph is disconnected")
            d += 1
            f = nxt
            while f:
                low = f & -f
                dist[base + low.bit_length() - 1] = d
                f ^= low
            t += d * nxt.bit_count()
            seen |= nxt
            frontier = nxt
        ecc[v] = d
        tr[v] = t
    return DistanceData(n, dist, ecc, tr, max(ecc), min(ecc))


def _all_pairs_queue(g: Graph) -> DistanceData:
    from array import array

    n = g.n
    adj = g.adjacency
    dist = array("i", bytes(4 * n * n))
    ecc = [0] * n
    tr = [0] * n
    unvisited = array("b", bytes(n))
    for s in range(n):
        base = s * n
        visited = array("b", unvisited)
        visited[s] = 1
        q = deque((s,))
        count = 1
        far = 0
        total = 0
        while q:
            u = q.popleft()
            du = dist[base + u] + 1
            for w in adj[u]:
                if not visited[w]:
                    visited[w] = 1
                    dist[base + w] = du
                    total += du
                    count += 1
                    q.append(w)
            far = du - 1
        if count != n:
            raise DisconnectedGraphError("graph is disconnected")
        ecc[s] = far
        tr[s] = total
    return DistanceData(n, dist, ecc, tr, max(ecc), min(ecc))


def is_connected(g: Graph) -> bool:
    """True when one BFS from vertex 0 reaches everything; K1 and the empty
    graph count as connected."""
    n = g.n
    if n <= 1:
        return True
    if n > _BITMASK_LIMIT:
        return _is_connected_queue(g)
    bits = g.bits
    full = (1 << n) - 1
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= bits[low.bit_length() - 1]
            f ^= low
        frontier = nxt & ~seen
        seen |= frontier
        if seen == full:
            return True
    return False


def _is_connected_queue(g: Graph) -> bool:
    adj = g.adjacency
    seen = bytearray(g.n)
    seen[0] = 1
    q = deque((0,))
    count = 1
    while q:
        u = q.popleft()
        for w in adj[u]:
            if not seen[w]:
                seen[w] = 1
                count += 1
                q.append(w)
    return count == g.n


def complement(g: Graph) -> Graph:
    """Edge uv present in the result iff u != v and uv absent in ``g``."""
    n = g.n
    full = (1 << n) - 1
    return Graph._raw(n, [full & ~(b | (1 << v)) for v, b in enumerate(g.bits)])


def induced_subgraph(g: Graph, keep: Iterable[int]) -> Graph:
    """Subgraph induced by ``keep``, relabeled 0..k-1 in ascending order."""
    verts = sorted(set(keep))
    if verts and not (0 <= verts[0] and verts[-1] < g.n):
        raise GraphError(f"vertex set not contained in 0..{g.n - 1}")
    k = len(verts)
    rows = [0] * k
    bits = g.bits
    for i, v in enumerate(verts):
        b = bits[v]
        row = 0
        for j, u in enumerate(verts):
            if (b >> u) & 1:
                row |= 1 << j
        rows[i] = row
    return Graph._raw(k, rows)
