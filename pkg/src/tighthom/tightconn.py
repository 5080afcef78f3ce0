"""Tight connectivity of oriented edges and homomorphic-cycle detection.

An oriented edge is an edge with an ordering of its vertices.  Two oriented
edges are adjacent when one arises from the other by replacing a single
vertex (keeping positions); "plain components" are the classes of that walk
relation.  The coarser relation ~ additionally identifies an oriented edge
with all its reorderings; each ~ class carries a connection group: the
permutations whose action on a representative stays inside the
representative's plain component.

A tight walk of stretch s appends s vertices to a start window, every
intermediate width-r window being an edge with distinct vertices.  Closed
walks (first window = last window) of stretch s = k (mod r) are exactly what
homomorphic images of long cycles with residue k unroll to, so hom-freeness
for a residue family reduces to connection groups, and shortest
homomorphic cycles come out of a product search over (window, residue mod r)
states.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass

from .hypergraph import Hypergraph
from .permgroup import Perm, all_perms, apply_to_tuple, cyc, cycle_type, identity, perm_power

Oriented = tuple[int, ...]


def oriented_edges(g: Hypergraph) -> list[Oriented]:
    """All orderings of all edges, lexicographically sorted."""
    out = []
    for e in g.edges:
        out.extend(itertools.permutations(e))
    out.sort()
    return out


def _replacement_neighbors(g: Hypergraph, x: Oriented):
    """Oriented edges that differ from x in exactly one position."""
    others = [set(x) - {v} for v in x]
    for i, v in enumerate(x):
        rest = others[i]
        for w in range(g.n):
            if w != v and w not in rest and g.has_edge(rest | {w}):
                yield x[:i] + (w,) + x[i + 1 :]


def plain_component(g: Hypergraph, x: Oriented) -> frozenset[Oriented]:
    """All oriented edges reachable from x by single-vertex replacements."""
    x = tuple(x)
    if not g.has_edge(x) or len(set(x)) != g.r:
        raise ValueError(f"{x!r} is not an oriented edge")
    seen = {x}
    queue = deque([x])
    while queue:
        cur = queue.popleft()
        for nxt in _replacement_neighbors(g, cur):
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return frozenset(seen)


def tc_group(g: Hypergraph, x: Oriented) -> frozenset[Perm]:
    """Permutations keeping x inside its own plain component, from one search."""
    comp = plain_component(g, x)
    x = tuple(x)
    return frozenset(p for p in all_perms(g.r) if apply_to_tuple(p, x) in comp)


@dataclass(frozen=True)
class TightComponent:
    """A ~ class of oriented edges with the connection group of its representative."""

    representative: Oriented
    members: frozenset[Oriented]
    tc: frozenset[Perm]

    @property
    def size(self) -> int:
        return len(self.members)

    def edge_supports(self) -> tuple[tuple[int, ...], ...]:
        return tuple(sorted({tuple(sorted(m)) for m in self.members}))


def tight_components(g: Hypergraph) -> tuple[TightComponent, ...]:
    """The ~ classes, each bundled with its connection group, sorted by representative."""
    comp_of: dict[Oriented, int] = {}
    comps: list[set[Oriented]] = []
    for x in oriented_edges(g):
        if x in comp_of:
            continue
        idx = len(comps)
        seen = {x}
        comp_of[x] = idx
        queue = deque([x])
        while queue:
            cur = queue.popleft()
            for nxt in _replacement_neighbors(g, cur):
                if nxt not in comp_of:
                    comp_of[nxt] = idx
                    seen.add(nxt)
                    queue.append(nxt)
        comps.append(seen)

    # ~ unions plain components across the orderings of each edge
    parent = list(range(len(comps)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for e in g.edges:
        ids = {find(comp_of[p]) for p in itertools.permutations(e)}
        root = min(ids)
        for i in ids:
            parent[i] = root

    grouped: dict[int, set[Oriented]] = {}
    for idx, members in enumerate(comps):
        grouped.setdefault(find(idx), set()).update(members)

    out = []
    for members in grouped.values():
        rep = min(members)
        plain = comps[comp_of[rep]]
        tc = frozenset(
            p for p in all_perms(g.r) if apply_to_tuple(p, rep) in plain
        )
        out.append(
            TightComponent(representative=rep, members=frozenset(members), tc=tc)
        )
    out.sort(key=lambda c: c.representative)
    return tuple(out)


def is_hom_free(g: Hypergraph, k: int, components=None) -> bool:
    """No homomorphic cycle image with stretch residue ``k`` exists.

    Residue 0 means cycles of length divisible by the arity; any edge at all
    admits those, so only the edgeless graph qualifies.  Other residues reduce
    to every connection group avoiding the k-th power of the rotation.
    """
    k %= g.r
    if k == 0:
        return not g.edges
    target = cycle_type(perm_power(cyc(g.r), k))
    comps = tight_components(g) if components is None else components
    for c in comps:
        if any(cycle_type(p) == target for p in c.tc):
            return False
    return True


def _closed_walk_search(g: Hypergraph, k: int, want_witness: bool):
    """Shortest closed tight walk with stretch = k (mod r); BFS per start window.

    States are (window, stretch mod r); distances are true stretches since
    every transition appends one vertex.
    """
    r = g.r
    k %= r
    if not g.edges:
        return None
    if k == 0:
        # rotating one oriented edge through itself: x then x again
        x = g.edges[0]
        return (r, x + x) if want_witness else r

    comps = tight_components(g)
    target = cycle_type(perm_power(cyc(r), k))
    bad = [c for c in comps if any(cycle_type(p) == target for p in c.tc)]
    if not bad:
        return None

    best = None
    best_walk = None
    starts = sorted(x for c in bad for x in c.members)
    for x in starts:
        goal = (x, k)
        dist = {(x, 0): 0}
        parent = {}
        queue = deque([(x, 0)])
        while queue:
            state = queue.popleft()
            d = dist[state]
            if best is not None and d + 1 >= best:
                # nothing deeper can improve the incumbent
                continue
            window, residue = state
            rest = set(window[1:])
            for v in range(g.n):
                if v in rest:
                    continue
                nxt_window = window[1:] + (v,)
                if not g.has_edge(nxt_window):
                    continue
                nxt = (nxt_window, (residue + 1) % r)
                if nxt not in dist:
                    dist[nxt] = d + 1
                    if want_witness:
                        parent[nxt] = (state, v)
                    queue.append(nxt)
        if goal in dist and (best is None or dist[goal] < best):
            best = dist[goal]
            if want_witness:
                appended = []
                state = goal
                while state != (x, 0):
                    state, v = parent[state]
                    appended.append(v)
                best_walk = x + tuple(reversed(appended))
    if best is None:
        return None
    return (best, best_walk) if want_witness else best


def min_closed_stretch(g: Hypergraph, k: int):
    """Least stretch of a closed tight walk with residue ``k``, or None."""
    return _closed_walk_search(g, k, want_witness=False)


def walk_distances(g: Hypergraph, x: Oriented) -> dict[tuple[Oriented, int], int]:
    """Least stretch of a tight walk from ``x`` to each reachable (window, residue).

    The state space is finite, so absence from the result decides
    non-reachability; the trivial walk puts (x, 0) at stretch 0.
    """
    x = tuple(x)
    if not g.has_edge(x) or len(set(x)) != g.r:
        raise ValueError(f"{x!r} is not an oriented edge")
    r = g.r
    dist = {(x, 0): 0}
    queue = deque([(x, 0)])
    while queue:
        window, residue = state = queue.popleft()
        d = dist[state]
        rest = set(window[1:])
        for v in range(g.n):
            if v in rest:
                continue
            nxt_window = window[1:] + (v,)
            if not g.has_edge(nxt_window):
                continue
            nxt = (nxt_window, (residue + 1) % r)
            if nxt not in dist:
                dist[nxt] = d + 1
                queue.append(nxt)
    return dist


@dataclass(frozen=True)
class WalkWitness:
    """A tight walk as its full vertex sequence; stretch = len - r."""

    vertices: tuple[int, ...]
    stretch: int


def is_valid_walk(g: Hypergraph, vertices) -> bool:
    seq = tuple(vertices)
    if len(seq) < g.r:
        return False
    for i in range(len(seq) - g.r + 1):
        window = seq[i : i + g.r]
        if len(set(window)) != g.r or not g.has_edge(window):
            return False
    return True


def is_valid_closed_walk(g: Hypergraph, vertices, k=None) -> bool:
    """Closed walk of stretch len - r: the last window replays the first.

    Reading the first ``stretch`` vertices cyclically gives a homomorphic
    image of the tight cycle on ``stretch`` vertices.
    """
    seq = tuple(vertices)
    if len(seq) < 2 * g.r or not is_valid_walk(g, seq):
        return False
    if seq[: g.r] != seq[-g.r :]:
        return False
    return k is None or (len(seq) - g.r) % g.r == k % g.r


def find_hom_cycle_witness(g: Hypergraph, k: int) -> WalkWitness | None:
    """A shortest closed tight walk of residue ``k`` as an explicit vertex sequence."""
    found = _closed_walk_search(g, k, want_witness=True)
    if found is None:
        return None
    stretch, walk = found
    witness = WalkWitness(vertices=walk, stretch=stretch)
    assert witness.stretch == len(witness.vertices) - g.r
    assert is_valid_closed_walk(g, witness.vertices, k)
    return witness


def witness_to_text(w: WalkWitness) -> str:
    return f"stretch {w.stretch}\n" + " ".join(map(str, w.vertices)) + "\n"


def contains_hom_cycle_of_length(g: Hypergraph, length: int) -> bool:
    """Is there a homomorphic image of the tight cycle on ``length`` vertices?

    A closed walk of stretch s <= length with the right residue pads up to
    length in rotation steps of r, so the minimum decides.
    """
    if length <= g.r:
        raise ValueError(f"cycle length {length} must exceed arity {g.r}")
    m = min_closed_stretch(g, length % g.r)
    return m is not None and m <= length


def closed_stretch_upper_bound(g: Hypergraph, k: int):
    """Upper bound on min_closed_stretch via replacement walks.

    A replacement path from x to the k-rotation of x with d steps yields a
    closed tight walk of stretch r*d + k: consecutive windows of the path
    concatenate, and k extra vertices unwind the rotation.  Finite iff
    min_closed_stretch is.
    """
    r = g.r
    k %= r
    if not g.edges:
        return None
    if k == 0:
        return r
    rot = perm_power(cyc(r), k)
    best = None
    for c in tight_components(g):
        for x in sorted(c.members):
            target = apply_to_tuple(rot, x)
            if target not in c.members:
                continue
            dist = {x: 0}
            queue = deque([x])
            while queue:
                cur = queue.popleft()
                if cur == target:
                    break
                for nxt in _replacement_neighbors(g, cur):
                    if nxt not in dist:
                        dist[nxt] = dist[cur] + 1
                        queue.append(nxt)
            if target in dist:
                bound = r * dist[target] + k
                if best is None or bound < best:
                    best = bound
    return best


def tc_family_leq(f: Hypergraph, g: Hypergraph) -> bool:
    """Every connection group of ``f`` embeds (up to conjugacy) in one of ``g``."""
    if f.r != g.r:
        raise ValueError(f"arity mismatch {f.r} != {g.r}")
    from .permgroup import embeds_in

    g_groups = [c.tc for c in tight_components(g)]
    for cf in tight_components(f):
        if not any(embeds_in(cf.tc, kg, f.r) for kg in g_groups):
            return False
    return True


def tc_nontrivial(g: Hypergraph) -> bool:
    """Some ~ class has a connection group beyond the identity."""
    return any(len(c.tc) > 1 for c in tight_components(g))
