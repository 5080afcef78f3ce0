"""Accordant edge colorings and their derived triple and link colorings.

An oriented coloring assigns to every oriented edge a color from the coset
color set of a permutation ``pi`` such that (a) the assignment is
equivariant (reordering the edge acts on the color) and (b) adjacent
oriented edges (single-vertex replacements) get equal colors.  Such a
coloring exists iff every connection group avoids ``pi``, which is the
content of ``hom_free_iff_colorable_check``.

At arity 4 with ``pi`` a rotation power, the coset data of an edge's color
projects onto its four boundary triples, giving a triple coloring over the
tags pointed/blue (stabilizer cosets), circle (alternating cosets), and
red-edge/yellow-edge (block cosets); ``verify_boundary_patterns`` recognizes
exactly the triple colorings arising this way, and the link of a vertex in a
triple coloring flattens to a pair coloring suitable for triangle censuses.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .hypergraph import Hypergraph, complete_oddly_bipartite
from .permgroup import (
    Color,
    ColorSet,
    Perm,
    all_perms,
    apply_to_tuple,
    color_set,
    compose,
    coset_rep,
    cyc,
    cycle_type,
    identity,
    inverse,
    is_even,
    perm_power,
)
from .tightconn import plain_component, tight_components

Edge = tuple[int, ...]


def _reorder_perm(base: Edge, target: Edge) -> Perm:
    """The permutation moving the sorted edge ``base`` onto the ordering ``target``."""
    return tuple(target.index(v) for v in base)


@dataclass
class OrientedColoring:
    """An equivariant, replacement-constant coloring of the oriented edges."""

    pi: Perm
    graph: Hypergraph
    colors: ColorSet
    assignment: dict[Edge, Color]

    def color_of(self, x) -> Color:
        """Color of an arbitrary orientation, derived equivariantly."""
        x = tuple(x)
        base = tuple(sorted(x))
        if base not in self.assignment:
            raise ValueError(f"{x!r} is not an edge of the colored graph")
        return self.colors.act(_reorder_perm(base, x), self.assignment[base])


def _is_point_stabilizer(cls) -> int | None:
    """The slot every element of the class representative fixes, if unique."""
    fixed = [
        i
        for i in range(cls.r)
        if all(p[i] == i for p in cls.representative)
    ]
    if len(fixed) == 1 and cls.order == _factorial(cls.r - 1):
        return fixed[0]
    return None


def _factorial(m: int) -> int:
    out = 1
    for i in range(2, m + 1):
        out *= i
    return out


def _replacement_degree(g: Hypergraph, x: Edge, slot: int) -> int:
    used = set(x)
    count = 0
    for v in range(g.n):
        if v not in used and g.has_edge(set(x) - {x[slot]} | {v}):
            count += 1
    return count


def build_accordant_coloring(g: Hypergraph, pi: Perm) -> OrientedColoring | None:
    """Construct an accordant coloring, or None when some connection group blocks it.

    Per tight component: pick the first maximal avoiding class containing a
    conjugate of the connection group (point stabilizers first, then class
    order), conjugated so the stabilized slot sits at the component
    representative's highest-replacement-degree slot; each edge then inherits
    the coset that transports it onto the representative's plain component.
    """
    if len(pi) != g.r:
        raise ValueError(f"permutation arity {len(pi)} != {g.r}")
    cs = color_set(g.r, pi)
    ranked = sorted(
        range(len(cs.classes)),
        key=lambda i: (_is_point_stabilizer(cs.classes[i]) is None, i),
    )
    assignment: dict[Edge, Color] = {}
    for comp in tight_components(g):
        rep = comp.representative
        chosen = None
        for idx in ranked:
            cls = cs.classes[idx]
            members = cls.elements
            sigmas = [
                s
                for s in all_perms(g.r)
                if all(
                    compose(inverse(s), compose(t, s)) in members for t in comp.tc
                )
            ]
            if not sigmas:
                continue
            p = _is_point_stabilizer(cls)
            if p is not None:
                best = max(_replacement_degree(g, rep, s[p]) for s in sigmas)
                sigma = min(s for s in sigmas if _replacement_degree(g, rep, s[p]) == best)
            else:
                sigma = min(sigmas)
            chosen = (idx, cls, sigma)
            break
        if chosen is None:
            return None
        idx, cls, sigma = chosen
        comp_plain = plain_component(g, rep)
        for support in comp.edge_supports():
            for tau in all_perms(g.r):
                if apply_to_tuple(tau, support) in comp_plain:
                    color = (idx, coset_rep(compose(inverse(tau), sigma), cls.representative))
                    assignment[support] = color
                    break
            else:
                raise AssertionError("every edge of a class meets the representative's plain component")
    return OrientedColoring(pi=pi, graph=g, colors=cs, assignment=assignment)


def verify_accordant(g: Hypergraph, chi: OrientedColoring) -> bool:
    """Coverage is checked loudly; replacement-constancy decides the verdict.

    Equivariance across reorderings holds structurally (colors of
    non-sorted orientations are derived), so the content is that adjacent
    oriented edges agree.
    """
    if chi.graph != g:
        raise ValueError("coloring was built for a different graph")
    if set(chi.assignment) != set(g.edges):
        raise ValueError("assignment does not cover the edge set exactly")
    for e in g.edges:
        for x in itertools.permutations(e):
            cx = chi.color_of(x)
            for i in range(g.r):
                rest = set(x) - {x[i]}
                for v in range(g.n):
                    if v != x[i] and v not in rest and g.has_edge(rest | {v}):
                        y = x[:i] + (v,) + x[i + 1 :]
                        if chi.color_of(y) != cx:
                            return False
    return True


def hom_free_iff_colorable_check(g: Hypergraph, k: int) -> tuple[bool, bool]:
    """(hom-freeness at residue k, existence of an accordant coloring for cyc^k).

    The two booleans are a theorem apart; the verified coloring is also run
    through the accordance checker before success is reported.
    """
    from .tightconn import is_hom_free

    pi = perm_power(cyc(g.r), k)
    chi = build_accordant_coloring(g, pi)
    if chi is not None:
        assert verify_accordant(g, chi)
    return (is_hom_free(g, k), chi is not None)


# ---------------------------------------------------------------------------
# arity-4 triple colorings

FaceValue = tuple

POINTED = "pointed"
BLUE = "blue"
CIRCLE = "circle"
RED_EDGE = "red-edge"
YELLOW_EDGE = "yellow-edge"
FREE = "free"


def _classify_face(u: Edge, cls, rho: Perm) -> FaceValue:
    """Face value of the triple u[:3] inside the oriented edge u, from its coset."""
    name = cls.name
    if name == "S3":
        apex_slot = rho[0]
        if apex_slot == 3:
            return (BLUE,)
        return (POINTED, u[apex_slot])
    if name == "A4":
        return (CIRCLE, 1 if is_even(rho) else -1)
    if name == "Klein-nonnormal":
        first = {rho[0], rho[1]}
        second = {rho[2], rho[3]}
        if 3 in second:
            pair = tuple(sorted(u[s] for s in first))
            return (RED_EDGE, pair)
        pair = tuple(sorted(u[s] for s in second))
        return (YELLOW_EDGE, pair)
    raise ValueError(f"no face rule for class {name!r}")


def _face_values(e: Edge, color: Color, cs: ColorSet) -> tuple[FaceValue, ...]:
    """Values of the four boundary triples of the sorted edge ``e`` under ``color``."""
    out = []
    for j in range(4):
        t = e[:j] + e[j + 1 :]
        u = t + (e[j],)
        idx, rho = cs.act(_reorder_perm(e, u), color)
        out.append(_classify_face(u, cs.classes[idx], rho))
    return tuple(out)


@dataclass
class TripleColoring4:
    """Values on all triples of 0..n-1; uncovered triples are free."""

    n: int
    k: int
    assignment: dict[tuple[int, int, int], FaceValue] = field(default_factory=dict)

    def value(self, t) -> FaceValue:
        return self.assignment[tuple(sorted(t))]


def _check_triple_residue(g: Hypergraph, k: int) -> None:
    if g.r != 4:
        raise ValueError("triple colorings need arity 4")
    if k % 4 not in (1, 2, 3):
        raise ValueError("residue must be one of 1, 2, 3")


def triple_coloring_from_accordant(chi: OrientedColoring) -> TripleColoring4:
    """Project an accordant coloring onto boundary triples.

    Accordance makes the value of a triple independent of the covering edge;
    that consistency is asserted while collecting.
    """
    g = chi.graph
    k = next(
        (k for k in (1, 2, 3) if cycle_type(perm_power(cyc(4), k)) == cycle_type(chi.pi)),
        None,
    )
    if k is None:
        raise ValueError("triple colorings need a rotation-power pi")
    _check_triple_residue(g, k)
    out = TripleColoring4(n=g.n, k=k)
    for e in g.edges:
        for j, value in enumerate(_face_values(e, chi.assignment[e], chi.colors)):
            t = e[:j] + e[j + 1 :]
            prev = out.assignment.setdefault(t, value)
            assert prev == value, f"covering edges disagree on face {t}"
    for t in itertools.combinations(range(g.n), 3):
        out.assignment.setdefault(t, (FREE,))
    return out


def verify_boundary_patterns(g: Hypergraph, tc4: TripleColoring4, k: int) -> bool:
    """Does some color of cyc^k induce exactly the stored values on each edge's faces?"""
    _check_triple_residue(g, k)
    cs = color_set(4, perm_power(cyc(4), k))
    for e in g.edges:
        stored = tuple(tc4.value(e[:j] + e[j + 1 :]) for j in range(4))
        if any(v == (FREE,) for v in stored):
            return False
        if not any(_face_values(e, c, cs) == stored for c in cs.colors):
            return False
    return True


def accordant_from_triple_coloring(
    g: Hypergraph, tc4: TripleColoring4, k: int
) -> OrientedColoring | None:
    """Rebuild the accordant coloring whose faces are the stored triple values.

    Face values pin the color of each edge uniquely; returns None when some
    edge matches no color.
    """
    _check_triple_residue(g, k)
    cs = color_set(4, perm_power(cyc(4), k))
    assignment: dict[Edge, Color] = {}
    for e in g.edges:
        stored = tuple(tc4.value(e[:j] + e[j + 1 :]) for j in range(4))
        matches = [c for c in cs.colors if _face_values(e, c, cs) == stored]
        if not matches:
            return None
        assert len(matches) == 1, f"face values fail to pin the color of {e}"
        assignment[e] = matches[0]
    chi = OrientedColoring(
        pi=perm_power(cyc(4), k), graph=g, colors=cs, assignment=assignment
    )
    assert verify_accordant(g, chi)
    return chi


# ---------------------------------------------------------------------------
# link colorings

GREEN = "green"
RED_1, RED_2, RED_3 = "red-1", "red-2", "red-3"
BLUE_1, BLUE_2, BLUE_3 = "blue-1", "blue-2", "blue-3"
PURPLE = "purple"


def link_coloring(tc4: TripleColoring4, w: int) -> dict[tuple[int, int], tuple]:
    """Pair coloring of the link of ``w``; directed tags carry (tail, head)."""
    if not 0 <= w < tc4.n:
        raise ValueError(f"vertex {w} out of range")
    out = {}
    for x, y in itertools.combinations(range(tc4.n), 2):
        if w in (x, y):
            continue
        t = tuple(sorted((w, x, y)))
        val = tc4.value(t)
        tag = val[0]
        if tag == POINTED:
            apex = val[1]
            if apex == w:
                out[(x, y)] = (GREEN,)
            elif apex == x:
                out[(x, y)] = (RED_1, y, x)
            else:
                out[(x, y)] = (RED_1, x, y)
        elif tag == BLUE:
            out[(x, y)] = (BLUE_1,)
        elif tag == CIRCLE:
            a, b, c = t
            succ = {a: b, b: c, c: a} if val[1] == 1 else {a: c, c: b, b: a}
            out[(x, y)] = (PURPLE, x, y) if succ[x] == y else (PURPLE, y, x)
        elif tag in (RED_EDGE, YELLOW_EDGE):
            pair = val[1]
            other = next(v for v in t if v not in pair)
            red, blue = (RED_3, BLUE_2) if tag == RED_EDGE else (RED_2, BLUE_3)
            if w in pair:
                head = next(v for v in pair if v != w)
                out[(x, y)] = (red, other, head)
            else:
                out[(x, y)] = (blue,)
        else:
            out[(x, y)] = (FREE,)
    return out


def simplify_link_coloring(link: dict) -> dict:
    """Merge the numbered reds and blues into plain red/blue."""
    out = {}
    for pair, tag in link.items():
        if tag[0] in (RED_1, RED_2, RED_3):
            out[pair] = ("red", tag[1], tag[2])
        elif tag[0] in (BLUE_1, BLUE_2, BLUE_3):
            out[pair] = ("blue",)
        else:
            out[pair] = tag
    return out


def redgreen_vertex(tc4: TripleColoring4) -> int:
    """A vertex whose link has at least twice as many red-1 pairs as green pairs.

    Each pointed triple contributes one green pair (at its apex) and two
    red-1 pairs (at its base vertices), so summing red-1 minus twice green
    over all vertices gives zero and some vertex is nonnegative.
    """
    if tc4.n < 1:
        raise ValueError("need at least one vertex")
    for w in range(tc4.n):
        green = red1 = 0
        for tag in link_coloring(tc4, w).values():
            if tag[0] == GREEN:
                green += 1
            elif tag[0] == RED_1:
                red1 += 1
        if red1 >= 2 * green:
            return w
    raise AssertionError("counting forces some vertex to qualify")


def godd_canonical_coloring(a: int, b: int) -> OrientedColoring:
    """The standard coloring of the odd-intersection bipartite graph: every
    edge pointed at its minority-side vertex, within-part triples blue."""
    g = complete_oddly_bipartite(a, b)
    cs = color_set(4, cyc(4))
    s3_idx = next(i for i, c in enumerate(cs.classes) if c.name == "S3")
    stab0 = cs.classes[s3_idx].representative
    assignment: dict[Edge, Color] = {}
    for e in g.edges:
        in_a = sum(1 for v in e if v < a)
        sigma = identity(4) if in_a == 1 else (3, 0, 1, 2)
        assignment[e] = (s3_idx, coset_rep(sigma, stab0))
    return OrientedColoring(pi=cyc(4), graph=g, colors=cs, assignment=assignment)
