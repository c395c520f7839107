"""Convert a 2-factor into a Hamilton cycle by cycle merging and rotation.

The engine opens one component into a path, absorbs the remaining
components through connecting edges, and falls back to breadth-first
rotation search (the classical endpoint-rotation move) whenever neither
endpoint of the current path sees an unabsorbed vertex.  Every edge
deletion and insertion is logged, and each component merge is charged
against a budget proportional to log(n)/log(d/lambda).
"""

import math
from collections import deque
from dataclasses import dataclass, field

from .errors import InconsistentTrace, InvalidParameters
from .factors import is_hamilton_cycle, validate_two_factor


@dataclass(frozen=True)
class RotationTrace:
    success: bool
    hamilton_cycle: tuple
    replacements: int
    per_merge_replacements: tuple
    budget: int
    trace: tuple  # of ("delete"|"insert", u, v)
    failure_reason: str = ""

    def to_json_dict(self):
        return {
            "success": self.success,
            "hamilton_cycle": list(self.hamilton_cycle),
            "replacements": self.replacements,
            "per_merge_replacements": list(self.per_merge_replacements),
            "budget": self.budget,
            "trace": [{"op": op, "u": u, "v": v} for op, u, v in self.trace],
            "failure_reason": self.failure_reason,
        }


def merge_budget(n, d, lam, budget_constant):
    """Per-merge replacement budget ceil(C log n / log(d/lambda)); falls
    back to n outside the formula's domain d > lambda."""
    if lam <= 0 or d <= lam:
        return n
    return max(2, math.ceil(budget_constant * math.log(n) / math.log(d / lam)))


def posa_close(g, path, forbidden, budget):
    """Breadth-first rotation search from ``path``.

    Returns (kind, new_path, rotations) where kind is one of:
      "extendable" - an endpoint of new_path has a neighbor outside
                     V(path) and ``forbidden``;
      "cycle"      - the endpoints of new_path are adjacent (length >= 3);
      "failure"    - neither is reachable within ``budget`` rotations.

    Each rotation is one edge deletion plus one edge insertion, so the
    caller's trace grows by at most 2*budget entries.
    """
    path = tuple(path)
    if len(path) < 2 or len(set(path)) != len(path):
        raise InvalidParameters("posa_close: not a simple path")
    for a, b in zip(path, path[1:]):
        if not g.has_edge(a, b):
            raise InvalidParameters("posa_close: not a path in the graph")
    if budget < 1:
        raise InvalidParameters("posa_close: budget >= 1 required")
    outside = set(range(g.n)) - set(path) - set(forbidden)

    def accept(p):
        a, b = p[0], p[-1]
        if outside and (set(g.neighbors(a)) & outside or set(g.neighbors(b)) & outside):
            return "extendable"
        if len(p) >= 3 and g.has_edge(a, b):
            return "cycle"
        return None

    start = _canon_path(path)
    kind = accept(path)
    if kind:
        return kind, path, []
    seen = {start}
    queue = deque([(path, [])])
    while queue:
        cur, rots = queue.popleft()
        if len(rots) >= budget:
            continue
        for nxt, rot in _rotations(g, cur):
            key = _canon_path(nxt)
            if key in seen:
                continue
            seen.add(key)
            nrots = rots + [rot]
            kind = accept(nxt)
            if kind:
                return kind, nxt, nrots
            queue.append((nxt, nrots))
    return "failure", path, []


def _canon_path(p):
    return p if p[0] < p[-1] else tuple(reversed(p))


def _rotations(g, path):
    """All single-rotation successors, smaller pivot vertices first."""
    out = []
    for seq in (path, tuple(reversed(path))):
        end = seq[-1]
        for i in sorted(range(len(seq) - 2), key=lambda i: seq[i]):
            piv = seq[i]
            if g.has_edge(end, piv):
                nxt = seq[: i + 1] + tuple(reversed(seq[i + 1 :]))
                rot = (("delete", *_e(piv, seq[i + 1])), ("insert", *_e(end, piv)))
                out.append((tuple(nxt), rot))
    return out


def _e(u, v):
    return (u, v) if u < v else (v, u)


@dataclass
class _Engine:
    g: object
    budget: int
    trace: list = field(default_factory=list)
    per_merge: list = field(default_factory=list)
    ops_this_merge: int = 0

    def op(self, kind, u, v):
        self.trace.append((kind, *_e(u, v)))
        self.ops_this_merge += 1

    def close_merge(self):
        self.per_merge.append(self.ops_this_merge)
        self.ops_this_merge = 0

    def fail(self, reason):
        return RotationTrace(
            success=False,
            hamilton_cycle=(),
            replacements=len(self.trace),
            per_merge_replacements=tuple(self.per_merge),
            budget=self.budget,
            trace=tuple(self.trace),
            failure_reason=reason,
        )


def two_factor_to_hamilton(g, f, cert, budget_constant=10.0):
    """Merge the components of a 2-factor into a Hamilton cycle.

    Deterministic: all choices tie-break on the smallest vertex label.
    Failure (budget exhausted, or no closing/extending edge exists) is a
    reported outcome, not an exception.
    """
    validate_two_factor(g, f)
    n = g.n
    budget = merge_budget(n, cert.d, cert.lam, budget_constant)
    comps = sorted(f.components, key=min)
    eng = _Engine(g=g, budget=budget)

    if len(comps) == 1 and len(comps[0]) == n and n >= 3:
        eng.close_merge()
        return RotationTrace(
            success=True,
            hamilton_cycle=tuple(comps[0]),
            replacements=0,
            per_merge_replacements=tuple(eng.per_merge),
            budget=budget,
            trace=(),
        )

    remaining = list(comps[1:])
    path = _open_component(g, eng, comps[0], _union(remaining))
    if path is None:
        return eng.fail("initial component has no external neighbor")

    while True:
        rest = _union(remaining)
        if not rest:
            return _final_close(g, eng, path)
        hook = _absorb_edge(g, path, rest)
        if hook is None:
            kind, path, rots = posa_close(
                g, path, forbidden=(), budget=_rotation_room(eng)
            )
            if kind == "failure":
                return eng.fail("no rotation reaches an absorbing or closing edge")
            for rot in rots:
                for op in rot:
                    eng.op(*op)
            if kind == "cycle":
                # close, then reopen at a vertex with an unabsorbed neighbor
                eng.op("insert", path[0], path[-1])
                path = _reopen_cycle(g, eng, tuple(path), rest)
                if path is None:
                    return eng.fail("closed cycle has no edge to remaining components")
            hook = _absorb_edge(g, path, rest)
            if hook is None:
                return eng.fail("rotation produced no usable absorbing edge")
        path = _do_absorb(g, eng, path, remaining, hook)
        if eng.ops_this_merge > eng.budget:
            return eng.fail("per-merge budget exhausted")
        eng.close_merge()


def _union(comps):
    out = set()
    for c in comps:
        out.update(c)
    return out


def _rotation_room(eng):
    room = (eng.budget - eng.ops_this_merge - 2) // 2
    return max(1, room)


def _open_component(g, eng, comp, external):
    """Open a component into a path whose head can reach ``external``
    (or any path if external is empty)."""
    if len(comp) == 2:
        return tuple(comp)
    candidates = [v for v in sorted(comp) if set(g.neighbors(v)) - set(comp)]
    if external:
        with_hook = [v for v in candidates if set(g.neighbors(v)) & external]
        candidates = with_hook or candidates
    if not candidates:
        return None
    v = candidates[0]
    return _open_cycle_at(g, eng, comp, v)


def _open_cycle_at(g, eng, comp, v):
    """Delete one cycle edge at v, producing a path with endpoint v; of the
    two cycle neighbors the larger-labeled edge is deleted."""
    comp = list(comp)
    i = comp.index(v)
    prev = comp[i - 1]
    nxt = comp[(i + 1) % len(comp)]
    drop = max(prev, nxt)
    eng.op("delete", v, drop)
    if drop == nxt:
        seq = [v] + [comp[(i - k) % len(comp)] for k in range(1, len(comp))]
    else:
        seq = [v] + [comp[(i + k) % len(comp)] for k in range(1, len(comp))]
    return tuple(reversed(seq))  # endpoint v last; head is the far end


def _absorb_edge(g, path, rest):
    """Smallest unabsorbed vertex adjacent to an endpoint, with the side;
    ties prefer the tail endpoint."""
    best = None
    for side, end in (("tail", path[-1]), ("head", path[0])):
        for u in g.neighbors(end):
            if u in rest and (best is None or u < best[0]):
                best = (u, side)
    return best


def _do_absorb(g, eng, path, remaining, hook):
    u, side = hook
    if side == "head":
        path = tuple(reversed(path))
    comp = next(c for c in remaining if u in c)
    remaining.remove(comp)
    eng.op("insert", path[-1], u)
    if len(comp) == 2:
        other = comp[0] if comp[1] == u else comp[1]
        return path + (u, other)
    tail = _open_cycle_at(g, eng, comp, u)  # path ending at u
    return path + tuple(reversed(tail))


def _reopen_cycle(g, eng, cyc, rest):
    candidates = [v for v in sorted(cyc) if set(g.neighbors(v)) & rest]
    if not candidates:
        return None
    return _open_cycle_at(g, eng, list(cyc), candidates[0])


def _final_close(g, eng, path):
    n = g.n
    if g.has_edge(path[0], path[-1]) and len(path) >= 3:
        eng.op("insert", path[0], path[-1])
        eng.close_merge()
        return _success(eng, path)
    kind, closed, rots = posa_close(g, path, forbidden=(), budget=_rotation_room(eng))
    if kind != "cycle":
        return eng.fail("spanning path cannot be closed")
    for rot in rots:
        for op in rot:
            eng.op(*op)
    eng.op("insert", closed[0], closed[-1])
    if eng.ops_this_merge > eng.budget:
        return eng.fail("per-merge budget exhausted during closure")
    eng.close_merge()
    return _success(eng, closed)


def _success(eng, cycle_path):
    cyc = tuple(cycle_path)
    return RotationTrace(
        success=True,
        hamilton_cycle=cyc,
        replacements=len(eng.trace),
        per_merge_replacements=tuple(eng.per_merge),
        budget=eng.budget,
        trace=tuple(eng.trace),
    )


def replay(g, f, trace):
    """Audit a RotationTrace: apply its edge operations to the edge set of
    the 2-factor and check the recorded outcome.

    Returns the final edge set.  Raises InconsistentTrace on any
    discrepancy (inserting a non-edge of G, deleting an absent edge, or a
    successful trace not ending at the recorded Hamilton cycle).
    """
    validate_two_factor(g, f)
    edges = set(f.edges())
    for op, u, v in trace.trace:
        key = _e(u, v)
        if op == "insert":
            if not g.has_edge(u, v):
                raise InconsistentTrace(f"inserted non-edge {key}")
            if key in edges:
                raise InconsistentTrace(f"inserted already-present edge {key}")
            edges.add(key)
        elif op == "delete":
            if key not in edges:
                raise InconsistentTrace(f"deleted absent edge {key}")
            edges.remove(key)
        else:
            raise InconsistentTrace(f"unknown op {op!r}")
    if trace.success:
        cyc = trace.hamilton_cycle
        if not is_hamilton_cycle(g, list(cyc)):
            raise InconsistentTrace("recorded cycle is not a Hamilton cycle")
        want = {
            _e(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc))
        }
        if edges != want:
            raise InconsistentTrace("replayed edge set differs from recorded cycle")
    return edges
