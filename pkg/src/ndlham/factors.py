"""Exact counting of 2-factors, Hamilton cycles and perfect matchings.

A 2-factor here follows the permutation-cycle-cover reading: the vertex set
is partitioned into components, each a single edge or a graph cycle of
length >= 3.  Every component of length >= 3 contributes a factor of two in
the permanent expansion (its two orientations), which is what makes
``weighted_cycle_cover_sum`` agree with the exact permanent.
"""

import math
from dataclasses import dataclass

from .errors import InvalidParameters, check_cap

ENUM_CAP = 16
HAMILTON_CAP = 24
MATCHING_CAP = 30
PHI_CAP = 14
NEAR_CAP = 12


def canonical_component(comp):
    """Canonical rotation of one component: smallest vertex first; cycles
    additionally take the orientation whose second vertex is the smaller
    neighbor of the start."""
    comp = list(comp)
    if len(comp) == 2:
        return tuple(sorted(comp))
    k = comp.index(min(comp))
    rot = comp[k:] + comp[:k]
    if rot[1] > rot[-1]:
        rot = [rot[0]] + rot[1:][::-1]
    return tuple(rot)


@dataclass(frozen=True)
class TwoFactor:
    """Partition of the vertices into edge-components and cycles."""

    components: tuple

    @property
    def num_components(self):
        return len(self.components)

    @property
    def num_long_cycles(self):
        """c(F): components that are genuine cycles (length >= 3)."""
        return sum(1 for c in self.components if len(c) >= 3)

    def vertices(self):
        return sorted(v for c in self.components for v in c)

    def edges(self):
        out = set()
        for comp in self.components:
            if len(comp) == 2:
                out.add(tuple(sorted(comp)))
            else:
                for i in range(len(comp)):
                    out.add(tuple(sorted((comp[i], comp[(i + 1) % len(comp)]))))
        return out

    @staticmethod
    def from_components(components):
        comps = tuple(sorted(canonical_component(c) for c in components))
        return TwoFactor(comps)


def validate_two_factor(g, f):
    verts = f.vertices()
    if verts != list(range(g.n)):
        raise InvalidParameters("two-factor components must partition the vertex set")
    for comp in f.components:
        if len(comp) < 2:
            raise InvalidParameters("component shorter than 2")
        if len(comp) == 2:
            if not g.has_edge(comp[0], comp[1]):
                raise InvalidParameters(f"non-edge component {comp}")
        else:
            for i in range(len(comp)):
                u, v = comp[i], comp[(i + 1) % len(comp)]
                if not g.has_edge(u, v):
                    raise InvalidParameters(f"non-edge ({u},{v}) in component {comp}")


def _iter_covers(g, visit):
    """Backtracking core: partition vertices into edge/cycle components.

    ``visit(components)`` is called once per complete 2-factor, with
    components in canonical form.  Emission order is deterministic
    (lexicographic by the canonical encoding).
    """
    n = g.n
    rows = g.rows
    full = (1 << n) - 1
    comps = []

    def descend(free):
        if free == 0:
            visit(comps)
            return
        v = (free & -free).bit_length() - 1
        avail = free ^ (1 << v)
        # edge components {v, u}
        for u in _bit_list(rows[v] & avail):
            comps.append((v, u))
            descend(avail ^ (1 << u))
            comps.pop()
        # cycles of length >= 3 through v; canonical: v is the smallest
        # vertex, and the first step is smaller than the last step
        path = [v]

        def extend(cur, used):
            for w in _bit_list(rows[cur] & avail & ~used):
                path.append(w)
                if len(path) >= 3 and rows[w] >> v & 1 and path[1] < path[-1]:
                    comps.append(tuple(path))
                    descend(free & ~(used | (1 << w) | (1 << v)))
                    comps.pop()
                extend(w, used | (1 << w))
                path.pop()

        extend(v, 1 << v)

    descend(full)


def _bit_list(x):
    out = []
    while x:
        low = x & -x
        out.append(low.bit_length() - 1)
        x ^= low
    return out


def enumerate_two_factors(g):
    """All 2-factors of g, each exactly once, in canonical form."""
    check_cap(g.n, ENUM_CAP, "enumerate_two_factors")
    found = []
    _iter_covers(g, lambda comps: found.append(TwoFactor(tuple(comps))))
    return found


@dataclass(frozen=True)
class FactorHistogram:
    """f(G,s) by component count s, plus the total and the 2^c(F)-weighted
    total (which equals the permanent of the adjacency matrix)."""

    counts: dict
    total: int
    weighted_total: int
    weighted_by_s: dict

    def to_json_dict(self):
        return {
            "counts": {str(s): str(c) for s, c in sorted(self.counts.items())},
            "total": str(self.total),
            "weighted_total": str(self.weighted_total),
        }


def factor_histogram(g):
    check_cap(g.n, ENUM_CAP, "factor_histogram")
    counts = {}
    weighted_by_s = {}

    def visit(comps):
        s = len(comps)
        c = sum(1 for comp in comps if len(comp) >= 3)
        counts[s] = counts.get(s, 0) + 1
        weighted_by_s[s] = weighted_by_s.get(s, 0) + (1 << c)

    _iter_covers(g, visit)
    return FactorHistogram(
        counts=counts,
        total=sum(counts.values()),
        weighted_total=sum(weighted_by_s.values()),
        weighted_by_s=weighted_by_s,
    )


def weighted_cycle_cover_sum(g):
    """Sum over 2-factors F of 2^c(F); equals per(A(G)) exactly."""
    check_cap(g.n, ENUM_CAP, "weighted_cycle_cover_sum")
    acc = [0]

    def visit(comps):
        c = sum(1 for comp in comps if len(comp) >= 3)
        acc[0] += 1 << c

    _iter_covers(g, visit)
    return acc[0]


def two_factor_total(g):
    """f(G): number of 2-factors, counting only."""
    check_cap(g.n, ENUM_CAP, "two_factor_total")
    acc = [0]
    _iter_covers(g, lambda comps: acc.__setitem__(0, acc[0] + 1))
    return acc[0]


# ---------------------------------------------------------------------------
# Hamilton cycles


def hamilton_count_exact(g):
    """h(G) by dynamic programming over (visited-subset, endpoint) states.

    Paths are rooted at vertex 0 and closed back to it; each undirected
    cycle is found once per orientation, so the result is halved.
    """
    check_cap(g.n, HAMILTON_CAP, "hamilton_count_exact")
    n = g.n
    if n < 3:
        return 0
    max_deg = max(g.degrees, default=0)
    if max_deg < 2:
        return 0
    # any DP state holds at most min((n-1)!, n*(max_deg-1)^(n-1)) paths;
    # use int64 when that provably fits, arbitrary precision otherwise
    log_bound = min(
        math.lgamma(n), (n - 1) * math.log(max(2, max_deg - 1)) + math.log(n)
    )
    if log_bound < 62 * math.log(2):
        return _hamilton_dp_int64(g)
    return _hamilton_dp_bigint(g)


def _hamilton_dp_bigint(g):
    n = g.n
    rows = g.rows
    full = (1 << n) - 1
    dp = {}
    for u in _bit_list(rows[0] & ~1):
        dp[(1 | (1 << u), u)] = 1
    # process states in order of increasing mask
    for mask in range(1, 1 << n, 2):
        for v in _bit_list(mask & ~1):
            c = dp.get((mask, v))
            if not c:
                continue
            for u in _bit_list(rows[v] & ~mask):
                key = (mask | (1 << u), u)
                dp[key] = dp.get(key, 0) + c
    total = sum(dp.get((full, v), 0) for v in _bit_list(rows[0]))
    return total // 2


def _hamilton_dp_int64(g):
    import numpy as np

    n = g.n
    rows = g.rows
    # index masks containing vertex 0 as (mask - 1) // 2
    dp = np.zeros((1 << (n - 1), n), dtype=np.int64)
    for u in _bit_list(rows[0] & ~1):
        dp[(1 << u) >> 1, u] = 1
    nbrs = [_bit_list(rows[v]) for v in range(n)]
    for k in range(1 << (n - 1)):
        row = dp[k]
        if not row.any():
            continue
        mask = 2 * k + 1
        for v in np.nonzero(row)[0]:
            c = int(row[v])
            for u in nbrs[v]:
                if not mask >> u & 1:
                    dp[k + (1 << (u - 1)), u] += c
    full = (1 << (n - 1)) - 1
    total = sum(int(dp[full, v]) for v in _bit_list(rows[0]))
    return total // 2


def is_hamilton_cycle(g, seq):
    """Whether ``seq`` lists a Hamilton cycle of g."""
    if len(seq) != g.n or g.n < 3 or sorted(seq) != list(range(g.n)):
        return False
    return all(g.has_edge(seq[i], seq[(i + 1) % g.n]) for i in range(g.n))


# ---------------------------------------------------------------------------
# perfect matchings


def perfect_matching_count(g):
    """m(G): match the lowest uncovered vertex to each neighbor, memoized on
    the uncovered-vertex bitset."""
    if g.n % 2 != 0:
        raise InvalidParameters("perfect_matching_count: n must be even")
    check_cap(g.n, MATCHING_CAP, "perfect_matching_count")
    rows = g.rows
    memo = {0: 1}

    def count(free):
        hit = memo.get(free)
        if hit is not None:
            return hit
        v = (free & -free).bit_length() - 1
        rest = free ^ (1 << v)
        total = 0
        for u in _bit_list(rows[v] & rest):
            total += count(rest ^ (1 << u))
        memo[free] = total
        return total

    return count((1 << g.n) - 1)


# ---------------------------------------------------------------------------
# phi and near-Hamilton counts


def phi(g, k):
    """Maximum 2-factor count over all induced k-vertex subgraphs."""
    from itertools import combinations

    if not 2 <= k <= g.n:
        raise InvalidParameters("phi: 2 <= k <= n required")
    check_cap(g.n, PHI_CAP, "phi")
    best = 0
    for subset in combinations(range(g.n), k):
        best = max(best, two_factor_total(g.induced(subset)))
    return best


def phi_argmax(g, k):
    """(max f(G[V0]), one maximizing V0) over k-subsets."""
    from itertools import combinations

    if not 2 <= k <= g.n:
        raise InvalidParameters("phi_argmax: 2 <= k <= n required")
    check_cap(g.n, PHI_CAP, "phi_argmax")
    best, best_set = -1, None
    for subset in combinations(range(g.n), k):
        val = two_factor_total(g.induced(subset))
        if val > best:
            best, best_set = val, subset
    return best, best_set


def two_factors_near_hamilton(g, h, k):
    """Number of 2-factors within k edge replacements of the Hamilton cycle
    h: those obtainable by deleting at most k cycle edges and re-tailoring,
    i.e. |E(H) \\ E(F)| <= k."""
    if k > 3:
        raise InvalidParameters("two_factors_near_hamilton: k <= 3 required")
    check_cap(g.n, NEAR_CAP, "two_factors_near_hamilton")
    if h.num_components != 1 or not is_hamilton_cycle(g, h.components[0]):
        raise InvalidParameters("two_factors_near_hamilton: H is not a Hamilton cycle")
    h_edges = h.edges()
    count = 0
    for f in enumerate_two_factors(g):
        if len(h_edges - f.edges()) <= k:
            count += 1
    return count
