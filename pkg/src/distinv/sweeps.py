"""Exhaustive and randomized graph sweeps.

Three sweep targets feed the predicate checkers:

* ``connected_graphs`` - every labeled simple connected graph on n vertices,
  by scanning all 2^(n(n-1)/2) edge subsets (n <= 8; n = 8 is allowed but
  slow).  Edge subset bit ``e`` corresponds to the ``e``-th pair in the
  column-major order (0,1), (0,2), (1,2), (0,3), ... - the same order as the
  graph6 bit stream.
* ``trees`` - one representative per isomorphism class of free trees
  (2 <= n <= 18), generated through canonical level sequences with a
  constant-amortized-time successor rule.
* ``diameter2_graphs`` - random connected graphs of diameter exactly 2 by
  rejection sampling from G(n, p), p cycling over {0.3, 0.5, 0.7}.

Randomness is a pure counter-based function so streams are reproducible
across runs, worker counts, and reimplementations:

    mix64(x): x ^= x >> 30; x *= 0xBF58476D1FE4E57B; x ^= x >> 27;
              x *= 0x94D049BB133111EB; x ^= x >> 31   (all mod 2^64)
    rand64(key, counter) = mix64(key + counter * 0x9E3779B97F4A7C15)
    key(seed, n)         = mix64(seed XOR mix64(n * 0x9E3779B97F4A7C15))

Sample ``i``, attempt ``j`` draws pair ``e`` from counter
``(i * 2^21 + j) * 2^13 + e``; the pair is an edge iff
``rand64 < floor(p_num * 2^64 / p_den)`` for the attempt's probability
``p = cycle[(i + j) mod 3]``.

Sweeps partition into chunks (edge-mask ranges, tree-ordinal residues,
sample-index ranges) that merge associatively, so worker count never changes
a result.  Parallel execution forks, so it is POSIX-only.
"""

from __future__ import annotations

import multiprocessing
import time
from dataclasses import dataclass

from .graphs import Graph, GraphError, all_pairs_distances, emit_graph6

_M64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15
_MIX_A = 0xBF58476D1FE4E57B
_MIX_B = 0x94D049BB133111EB

_DIAM2_P = ((3, 10), (5, 10), (7, 10))
_DIAM2_THRESH = tuple((num << 64) // den for num, den in _DIAM2_P)
_MAX_ATTEMPTS = 10**6
_SAMPLER_MAX_N = 128

TREE_MIN_N, TREE_MAX_N = 2, 18
CONNECTED_MAX_N = 8


class SweepError(GraphError):
    """Invalid sweep parameters or a stalled sampler."""


class SweepVisitError(SweepError):
    """A visitor raised; the message carries the offending graph's graph6."""


def mix64(x: int) -> int:
    x &= _M64
    x ^= x >> 30
    x = (x * _MIX_A) & _M64
    x ^= x >> 27
    x = (x * _MIX_B) & _M64
    x ^= x >> 31
    return x


def rand64(key: int, counter: int) -> int:
    """Counter-addressable 64-bit value; pure function of its arguments."""
    return mix64((key + counter * _GOLDEN) & _M64)


def _stream_key(seed: int, n: int) -> int:
    return mix64((seed & _M64) ^ mix64((n * _GOLDEN) & _M64))


# ---------------------------------------------------------------------------
# exhaustive enumeration


def enumerate_connected_graphs(n: int):
    """Every connected simple graph on n labeled vertices, exactly once."""
    if not 1 <= n <= CONNECTED_MAX_N:
        raise SweepError(f"exhaustive bound exceeded: need 1 <= n <= 8, got {n}")
    return _connected_graphs_range(n, 0, 1 << (n * (n - 1) // 2))


def _connected_graphs_range(n, lo, hi):
    if n == 1:
        if lo <= 0 < hi:
            yield Graph._raw(1, (0,))
        return
    pairs = [(u, v) for v in range(1, n) for u in range(v)]
    uidx = [u for u, _ in pairs]
    vidx = [v for _, v in pairs]
    ubit = [1 << u for u, _ in pairs]
    vbit = [1 << v for _, v in pairs]
    full = (1 << n) - 1
    raw = Graph._raw
    for mask in range(lo, hi):
        rows = [0] * n
        mm = mask
        while mm:
            low = mm & -mm
            e = low.bit_length() - 1
            rows[uidx[e]] |= vbit[e]
            rows[vidx[e]] |= ubit[e]
            mm ^= low
        seen = 1 | rows[0]
        frontier = rows[0]
        while frontier and seen != full:
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= rows[low.bit_length() - 1]
                f ^= low
            frontier = nxt & ~seen
            seen |= frontier
        if seen == full:
            yield raw(n, rows)


def enumerate_trees(n: int):
    """One representative of every free tree on n vertices.

    Trees are produced from canonical rooted level sequences in decreasing
    lexicographic order, keeping exactly the height-balanced rootings that
    represent each free tree once.
    """
    if not TREE_MIN_N <= n <= TREE_MAX_N:
        raise SweepError(f"tree enumeration needs 2 <= n <= 18, got {n}")
    return _tree_stream(n)


def _tree_stream(n):
    levels = list(range(n // 2 + 1)) + list(range(1, (n + 1) // 2))
    while levels is not None:
        levels = _free_canonical_or_jump(levels)
        if levels is None:
            break
        yield _tree_from_levels(levels)
        levels = _rooted_successor(levels)


def _rooted_successor(levels, pos=None):
    # successor of a canonical rooted level sequence in decreasing
    # lexicographic order: chop at pos, then repeat the block that starts at
    # the chopped vertex's parent
    if pos is None:
        pos = len(levels) - 1
        while levels[pos] == 1:
            pos -= 1
    if pos == 0:
        return None
    anchor = pos - 1
    while levels[anchor] != levels[pos] - 1:
        anchor -= 1
    out = list(levels)
    period = pos - anchor
    for i in range(pos, len(out)):
        out[i] = out[i - period]
    return out


def _split_first_subtree(levels):
    # split off the subtree hanging from the root's first child
    cut = len(levels)
    seen_one = False
    for i, lev in enumerate(levels):
        if lev == 1:
            if seen_one:
                cut = i
                break
            seen_one = True
    return [lev - 1 for lev in levels[1:cut]], [0] + levels[cut:]


def _free_canonical_or_jump(levels):
    # a rooted sequence represents a free tree iff the first root subtree is
    # no taller, no bigger, and no later lexicographically than the rest;
    # otherwise skip straight to the next sequence satisfying that
    first, rest = _split_first_subtree(levels)
    h_first = max(first)
    h_rest = max(rest)
    ok = h_rest >= h_first
    if ok and h_rest == h_first:
        if len(first) > len(rest) or (len(first) == len(rest) and first > rest):
            ok = False
    if ok:
        return levels
    pos = len(first)
    nxt = _rooted_successor(levels, pos)
    if levels[pos] > 2:
        new_first, _ = _split_first_subtree(nxt)
        tail = list(range(1, max(new_first) + 2))
        nxt[len(nxt) - len(tail) :] = tail
    return nxt


def _tree_from_levels(levels):
    n = len(levels)
    rows = [0] * n
    stack = []
    for i, lev in enumerate(levels):
        while stack and levels[stack[-1]] >= lev:
            stack.pop()
        if stack:
            j = stack[-1]
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        stack.append(i)
    return Graph._raw(n, rows)


# ---------------------------------------------------------------------------
# diameter-2 rejection sampling


def sample_diameter2_graphs(n: int, count: int, seed: int):
    """``count`` connected diameter-2 graphs of order n, seeded."""
    if n < 3:
        raise SweepError(f"diameter-2 sampling needs n >= 3, got {n}")
    if n > _SAMPLER_MAX_N:
        raise SweepError(f"diameter-2 sampling supports n <= {_SAMPLER_MAX_N}")
    if count < 1:
        raise SweepError(f"sample count must be >= 1, got {count}")
    key = _stream_key(seed, n)
    for index in range(count):
        yield _diam2_graph(key, n, index)


def _diam2_graph(key, n, index):
    for attempt in range(_MAX_ATTEMPTS):
        thresh = _DIAM2_THRESH[(index + attempt) % 3]
        base = ((index << 21) | attempt) << 13
        rows = _bernoulli_rows(key, n, base, thresh)
        if _connected_diam2(rows, n):
            return Graph._raw(n, rows)
    raise SweepError("sampling stalled")


def _bernoulli_rows(key, n, counter, thresh):
    rows = [0] * n
    for v in range(1, n):
        vb = 1 << v
        rowv = rows[v]
        for u in range(v):
            x = (key + counter * _GOLDEN) & _M64
            counter += 1
            x ^= x >> 30
            x = (x * _MIX_A) & _M64
            x ^= x >> 27
            x = (x * _MIX_B) & _M64
            x ^= x >> 31
            if x < thresh:
                rows[u] |= vb
                rowv |= 1 << u
        rows[v] = rowv
    return rows


def _connected_diam2(rows, n):
    full = (1 << n) - 1
    is_complete = True
    for v in range(n):
        b = rows[v]
        closed = b | (1 << v)
        if closed == full:
            continue
        is_complete = False
        reach = closed
        while b:
            low = b & -b
            reach |= rows[low.bit_length() - 1]
            b ^= low
        if reach != full:
            return False
    return not is_complete


# ---------------------------------------------------------------------------
# sweep specs and the parallel fold


def _filter_self_centered(g: Graph) -> bool:
    d = all_pairs_distances(g)
    return d.diam == d.rad


def _filter_non_self_centered(g: Graph) -> bool:
    d = all_pairs_distances(g)
    return d.diam != d.rad


def _filter_min_degree_2(g: Graph) -> bool:
    return g.min_degree() >= 2


FILTERS = {
    "self_centered": _filter_self_centered,
    "non_self_centered": _filter_non_self_centered,
    "min_degree_2": _filter_min_degree_2,
}

_TARGETS = ("connected_graphs", "trees", "diameter2_graphs")


@dataclass(frozen=True, slots=True)
class SweepSpec:
    """Declarative sweep description; parse with :func:`parse_sweep_spec`."""

    target: str
    n_min: int
    n_max: int
    mode: str = "exhaustive"
    sample_count: int = 0
    seed: int = 0
    filter_name: str | None = None

    def validate(self) -> None:
        if self.target not in _TARGETS:
            raise SweepError(f"unknown sweep target {self.target!r}")
        if self.n_min > self.n_max:
            raise SweepError(f"empty order range {self.n_min}..{self.n_max}")
        if self.filter_name is not None and self.filter_name not in FILTERS:
            raise SweepError(f"unknown filter {self.filter_name!r}")
        if self.target == "connected_graphs":
            if self.mode != "exhaustive":
                raise SweepError("connected_graphs sweeps are exhaustive")
            if not 1 <= self.n_min or self.n_max > CONNECTED_MAX_N:
                raise SweepError("exhaustive connected sweep needs 1 <= n <= 8")
        elif self.target == "trees":
            if self.mode != "exhaustive":
                raise SweepError("tree sweeps are exhaustive")
            if not TREE_MIN_N <= self.n_min or self.n_max > TREE_MAX_N:
                raise SweepError("exhaustive tree sweep needs 2 <= n <= 18")
        else:
            if self.mode != "random":
                raise SweepError("diameter2_graphs sweeps are random")
            if self.sample_count < 1:
                raise SweepError("random sweep needs sample_count >= 1")
            if self.n_min < 3 or self.n_max > _SAMPLER_MAX_N:
                raise SweepError("diameter-2 sweep needs 3 <= n <= 128")

    def __str__(self) -> str:
        tag = {"connected_graphs": "connected", "trees": "trees"}.get(self.target)
        if tag:
            text = f"{tag}:{self.n_min}..{self.n_max}"
        else:
            text = (
                f"diam2:n={self.n_min}..{self.n_max},"
                f"count={self.sample_count},seed={self.seed}"
            )
        if self.filter_name:
            text += f",filter={self.filter_name}"
        return text


def parse_sweep_spec(text: str) -> SweepSpec:
    """Parse ``trees:2..12``, ``connected:3..7`` or
    ``diam2:n=9..12,count=100000,seed=7`` (optionally ``,filter=NAME``)."""
    head, _, rest = text.strip().partition(":")
    head = head.strip()
    if head in ("trees", "connected"):
        parts = rest.split(",") if rest else []
        if not parts or not parts[0]:
            raise SweepError(f"missing order range in sweep spec {text!r}")
        n_min, n_max = _parse_range(parts[0], text)
        filter_name = _parse_filter(parts[1:], text)
        target = "trees" if head == "trees" else "connected_graphs"
        spec = SweepSpec(target, n_min, n_max, "exhaustive", filter_name=filter_name)
    elif head == "diam2":
        kv = {}
        extras = []
        for item in rest.split(","):
            key, eq, val = item.partition("=")
            if not eq:
                raise SweepError(f"bad sweep option {item!r} in {text!r}")
            key = key.strip()
            if key == "filter":
                extras.append(item)
            else:
                kv[key] = val.strip()
        if "n" not in kv or "count" not in kv:
            raise SweepError(f"diam2 sweep needs n= and count= in {text!r}")
        n_min, n_max = _parse_range(kv.pop("n"), text)
        try:
            count = int(kv.pop("count"))
            seed = int(kv.pop("seed", "0"))
        except ValueError:
            raise SweepError(f"bad integer in sweep spec {text!r}") from None
        if kv:
            raise SweepError(f"unknown sweep option(s) {sorted(kv)} in {text!r}")
        spec = SweepSpec(
            "diameter2_graphs",
            n_min,
            n_max,
            "random",
            sample_count=count,
            seed=seed,
            filter_name=_parse_filter(extras, text),
        )
    else:
        raise SweepError(f"unknown sweep target in {text!r}")
    spec.validate()
    return spec


def _parse_range(token: str, context: str) -> tuple[int, int]:
    token = token.strip()
    try:
        if ".." in token:
            lo, hi = token.split("..")
            return int(lo), int(hi)
        n = int(token)
        return n, n
    except ValueError:
        raise SweepError(f"bad order range {token!r} in {context!r}") from None


def _parse_filter(items, context) -> str | None:
    name = None
    for item in items:
        key, eq, val = item.partition("=")
        if key.strip() != "filter" or not eq:
            raise SweepError(f"bad sweep option {item!r} in {context!r}")
        name = val.strip()
    return name


@dataclass(frozen=True, slots=True)
class SweepSummary:
    """Counts from one sweep run; identical for any worker count."""

    visited: int
    filtered: int
    elapsed: float


def _chunks(spec: SweepSpec, parts: int):
    out = []
    for n in range(spec.n_min, spec.n_max + 1):
        if spec.target == "connected_graphs":
            total = 1 << (n * (n - 1) // 2)
            step = -(-total // parts)
            for lo in range(0, total, step):
                out.append(("mask", n, lo, min(lo + step, total)))
        elif spec.target == "trees":
            k = parts
            for r in range(k):
                out.append(("mod", n, r, k))
        else:
            total = spec.sample_count
            step = -(-total // parts)
            for lo in range(0, total, step):
                out.append(("range", n, lo, min(lo + step, total)))
    return out


def _iter_chunk(spec: SweepSpec, chunk):
    kind, n, a, b = chunk
    if kind == "mask":
        yield from _connected_graphs_range(n, a, b)
    elif kind == "mod":
        for i, t in enumerate(_tree_stream(n)):
            if i % b == a:
                yield t
    else:
        key = _stream_key(spec.seed, n)
        for index in range(a, b):
            yield _diam2_graph(key, n, index)


def _fold_chunk(spec, chunk, fold, zero):
    acc = zero()
    flt = FILTERS[spec.filter_name] if spec.filter_name else None
    visited = 0
    filtered = 0
    for g in _iter_chunk(spec, chunk):
        if flt is not None and not flt(g):
            filtered += 1
            continue
        try:
            acc = fold(acc, g)
        except Exception as exc:
            raise SweepVisitError(
                f"visitor failed on {emit_graph6(g)}: {exc!r}"
            ) from exc
        visited += 1
    return acc, visited, filtered


_FORK_CTX = None


def _fold_chunk_entry(i):
    spec, fold, zero, chunks = _FORK_CTX
    return _fold_chunk(spec, chunks[i], fold, zero)


def fold_sweep(spec: SweepSpec, fold, combine, zero, *, workers: int = 1):
    """Fold a function over every graph of a sweep.

    ``fold(acc, graph) -> acc`` runs within a chunk, ``combine(acc, acc) ->
    acc`` merges chunk results in deterministic chunk order, ``zero()`` makes
    a fresh accumulator.  Returns ``(acc, SweepSummary)``.  With ``workers >
    1`` chunks run in forked processes; the callables are inherited through
    the fork, so anything defined at call time works, but side effects stay
    in the children.
    """
    spec.validate()
    start = time.perf_counter()
    chunks = _chunks(spec, max(1, workers))
    if workers <= 1 or len(chunks) <= 1:
        partials = [_fold_chunk(spec, c, fold, zero) for c in chunks]
    else:
        global _FORK_CTX
        _FORK_CTX = (spec, fold, zero, chunks)
        try:
            ctx = multiprocessing.get_context("fork")
            with ctx.Pool(workers) as pool:
                partials = pool.map(_fold_chunk_entry, range(len(chunks)))
        finally:
            _FORK_CTX = None
    acc = zero()
    visited = 0
    filtered = 0
    for part, v, f in partials:
        acc = combine(acc, part)
        visited += v
        filtered += f
    return acc, SweepSummary(visited, filtered, time.perf_counter() - start)


def iter_sweep(spec: SweepSpec):
    """All graphs of a sweep in canonical order, filter applied."""
    spec.validate()
    flt = FILTERS[spec.filter_name] if spec.filter_name else None
    for chunk in _chunks(spec, 1):
        for g in _iter_chunk(spec, chunk):
            if flt is None or flt(g):
                yield g


def run_sweep(spec: SweepSpec, visitor, *, workers: int = 1) -> SweepSummary:
    """Apply ``visitor`` to every sweep graph and return merged counts.

    In parallel mode the visitor runs in forked workers, so its side effects
    are not visible to the caller; use :func:`fold_sweep` to gather results.
    """

    def fold(acc, g):
        visitor(g)
        return acc

    _, summary = fold_sweep(
        spec, fold, lambda a, _b: a, lambda: None, workers=workers
    )
    return summary
