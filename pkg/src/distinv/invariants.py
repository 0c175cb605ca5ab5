"""Exact scalar invariants of connected graphs.

Everything here is integer or reduced-rational arithmetic; no floating point
is used anywhere, so threshold comparisons in downstream predicates stay
exact at the boundary cases where they matter.  Rational values (average
degree, average transmission) are :class:`fractions.Fraction`, which stores a
reduced numerator/denominator pair and compares by integer cross
multiplication.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .graphs import DistanceData, Graph, GraphError, all_pairs_distances, is_connected


def wiener(g: Graph, dist: DistanceData | None = None) -> int:
    """Sum of distances over unordered vertex pairs.

    Computed as half the total transmission; the total is checked to be even.
    """
    if dist is None:
        dist = all_pairs_distances(g)
    total = sum(dist.tr)
    if total % 2:
        raise GraphError("transmission total is odd; distance data corrupt")
    return total // 2


def wiener_tree_edgecut(t: Graph) -> int:
    """Wiener index of a tree via the edge-cut identity.

    Deleting an edge splits the tree into components of sizes ``n_u`` and
    ``n_v``; the index equals the sum of ``n_u * n_v`` over all edges.
    """
    n = t.n
    if t.m != n - 1 or not is_connected(t):
        raise GraphError("not a tree")
    if n <= 1:
        return 0
    adj = t.adjacency
    parent = [-1] * n
    order = [0]
    seen = bytearray(n)
    seen[0] = 1
    for u in order:
        for w in adj[u]:
            if not seen[w]:
                seen[w] = 1
                parent[w] = u
                order.append(w)
    size = [1] * n
    total = 0
    for u in reversed(order[1:]):
        size[parent[u]] += size[u]
        total += size[u] * (n - size[u])
    return total


def zagreb_ecc_1(g: Graph, dist: DistanceData | None = None) -> int:
    """First Zagreb eccentricity index: sum of squared eccentricities."""
    if dist is None:
        dist = all_pairs_distances(g)
    return sum(e * e for e in dist.ecc)


def zagreb_ecc_2(g: Graph, dist: DistanceData | None = None) -> int:
    """Second Zagreb eccentricity index: sum over edges of the endpoint
    eccentricity product."""
    if dist is None:
        dist = all_pairs_distances(g)
    ecc = dist.ecc
    bits = g.bits
    total = 0
    for u in range(g.n):
        rest = bits[u] >> (u + 1)
        if not rest:
            continue
        eu = ecc[u]
        v = u + 1
        while rest:
            low = rest & -rest
            total += eu * ecc[v + low.bit_length() - 1]
            rest ^= low
    return total


def total_eccentricity(dist: DistanceData) -> int:
    """Sum of all vertex eccentricities."""
    return sum(dist.ecc)


def eccentric_connectivity(g: Graph, dist: DistanceData | None = None) -> int:
    """Eccentric connectivity index: sum over vertices of degree times
    eccentricity."""
    if dist is None:
        dist = all_pairs_distances(g)
    ecc = dist.ecc
    return sum(b.bit_count() * ecc[v] for v, b in enumerate(g.bits))


def universal_vertices(g: Graph) -> tuple[int, ...]:
    """Vertices adjacent to every other vertex, ascending."""
    target = g.n - 1
    return tuple(v for v, b in enumerate(g.bits) if b.bit_count() == target)


def nonuniversal_edge_count(g: Graph, n_universal: int) -> int:
    """Edges of the subgraph induced by the non-universal vertices.

    Every edge either joins two universal vertices, a universal to a
    non-universal one, or lies inside the non-universal part; subtracting the
    first two exactly counts the third.
    """
    n = g.n
    k = n_universal
    return g.m - k * (k - 1) // 2 - k * (n - k)


CSV_HEADER = (
    "n,m,diam,rad,W,E1,E2,totecc,xic,nprime,"
    "avd_num,avd_den,avt_num,avt_den,self_centered"
)


@dataclass(frozen=True, slots=True)
class InvariantReport:
    """Every scalar invariant of one connected graph, all exact."""

    n: int
    m: int
    diam: int
    rad: int
    wiener: int
    e1: int
    e2: int
    total_ecc: int
    ecc_connectivity: int
    n_universal: int
    avd: Fraction
    avt: Fraction
    self_centered: bool

    def csv_row(self) -> str:
        return ",".join(
            str(x)
            for x in (
                self.n,
                self.m,
                self.diam,
                self.rad,
                self.wiener,
                self.e1,
                self.e2,
                self.total_ecc,
                self.ecc_connectivity,
                self.n_universal,
                self.avd.numerator,
                self.avd.denominator,
                self.avt.numerator,
                self.avt.denominator,
                "true" if self.self_centered else "false",
            )
        )

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "diam": self.diam,
            "rad": self.rad,
            "W": self.wiener,
            "E1": self.e1,
            "E2": self.e2,
            "totecc": self.total_ecc,
            "xic": self.ecc_connectivity,
            "nprime": self.n_universal,
            "avd_num": self.avd.numerator,
            "avd_den": self.avd.denominator,
            "avt_num": self.avt.numerator,
            "avt_den": self.avt.denominator,
            "self_centered": self.self_centered,
        }


def full_report(g: Graph, dist: DistanceData | None = None) -> InvariantReport:
    """Compute every invariant of a connected graph in one pass."""
    if g.n < 1:
        raise GraphError("invariant report needs at least one vertex")
    if dist is None:
        dist = all_pairs_distances(g)
    n = g.n
    m = g.m
    ecc = dist.ecc
    total = sum(dist.tr)
    if total % 2:
        raise GraphError("transmission total is odd; distance data corrupt")
    w = total // 2
    return InvariantReport(
        n=n,
        m=m,
        diam=dist.diam,
        rad=dist.rad,
        wiener=w,
        e1=sum(e * e for e in ecc),
        e2=zagreb_ecc_2(g, dist),
        total_ecc=sum(ecc),
        ecc_connectivity=sum(b.bit_count() * ecc[v] for v, b in enumerate(g.bits)),
        n_universal=sum(1 for b in g.bits if b.bit_count() == n - 1),
        avd=Fraction(2 * m, n),
        avt=Fraction(2 * w, n),
        self_centered=dist.diam == dist.rad,
    )
