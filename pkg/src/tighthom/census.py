"""Triangle census over four-color pair colorings, and the bounds it feeds.

A pair coloring assigns every unordered pair of vertices one of four tags:
directed red, undirected blue, undirected green, or directed purple. The
census counts green triangles, purple directed 3-cycles, and cherries (a
blue base whose endpoints both point red at a common apex), converts the
tag frequencies to exact rational densities, and checks the six bounds
those counts satisfy. The same densities drive the scalar objectives
``eval_g`` / ``eval_f`` and a certified grid maximizer, alongside the
closed-form extremal count ``e_opt`` and a few small exact checks.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from fractions import Fraction

from .hypergraph import Hypergraph

RED = "red"
BLUE = "blue"
GREEN = "green"
PURPLE = "purple"

Pair = tuple[int, int]

# derivative budget of f along the scanned coordinates (alpha, gamma, delta)
# with beta eliminated: 9 + 4.5 + 9, see maximize_f_on_R
_SCAN_LIPSCHITZ = 22.5


@dataclass(frozen=True)
class EdgeColoring2:
    """A four-tag coloring of all vertex pairs; directed tags carry (tail, head)."""

    n: int
    colors: dict[Pair, tuple]

    def __post_init__(self):
        pairs = set(itertools.combinations(range(self.n), 2))
        if set(self.colors) != pairs:
            raise ValueError("every unordered pair needs exactly one color")
        for (u, v), val in self.colors.items():
            tag = val[0]
            if tag in (BLUE, GREEN):
                if val != (tag,):
                    raise ValueError(f"undirected tag {tag} takes no endpoints")
            elif tag in (RED, PURPLE):
                if len(val) != 3 or {val[1], val[2]} != {u, v}:
                    raise ValueError(f"directed tag on {(u, v)} must orient that pair")
            else:
                raise ValueError(f"unknown tag {tag!r}")

    def value(self, u: int, v: int) -> tuple:
        return self.colors[(u, v) if u < v else (v, u)]


def edge_coloring_to_text(c: EdgeColoring2) -> str:
    lines = [str(c.n)]
    for (u, v), val in sorted(c.colors.items()):
        lines.append(" ".join(str(x) for x in (u, v) + val))
    return "\n".join(lines) + "\n"


def edge_coloring_from_text(text: str) -> EdgeColoring2:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    n = int(lines[0])
    colors = {}
    for ln in lines[1:]:
        parts = ln.split()
        u, v, tag = int(parts[0]), int(parts[1]), parts[2]
        val = (tag,) if len(parts) == 3 else (tag, int(parts[3]), int(parts[4]))
        colors[(u, v)] = val
    return EdgeColoring2(n=n, colors=colors)


def random_edge_coloring(n: int, seed) -> EdgeColoring2:
    """Uniform choice among the six tags (two orientations each for red, purple)."""
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    colors = {}
    for u, v in itertools.combinations(range(n), 2):
        roll = rng.randrange(6)
        if roll == 0:
            colors[(u, v)] = (BLUE,)
        elif roll == 1:
            colors[(u, v)] = (GREEN,)
        elif roll < 4:
            colors[(u, v)] = (RED, u, v) if roll == 2 else (RED, v, u)
        else:
            colors[(u, v)] = (PURPLE, u, v) if roll == 4 else (PURPLE, v, u)
    return EdgeColoring2(n=n, colors=colors)


def cherry_coloring(a: int, b: int) -> EdgeColoring2:
    """Two cliques: blue inside the first part, green inside the second,
    red directed from the first part into the second."""
    colors = {}
    for u, v in itertools.combinations(range(a + b), 2):
        if v < a:
            colors[(u, v)] = (BLUE,)
        elif u >= a:
            colors[(u, v)] = (GREEN,)
        else:
            colors[(u, v)] = (RED, u, v)
    return EdgeColoring2(n=a + b, colors=colors)


def purple_tournament_coloring(n: int, beats) -> EdgeColoring2:
    """All-purple coloring oriented by a tournament's beats relation."""
    beats = set(beats)
    colors = {}
    for u, v in itertools.combinations(range(n), 2):
        if (u, v) in beats:
            colors[(u, v)] = (PURPLE, u, v)
        elif (v, u) in beats:
            colors[(u, v)] = (PURPLE, v, u)
        else:
            raise ValueError(f"tournament orients neither ({u},{v}) nor ({v},{u})")
    return EdgeColoring2(n=n, colors=colors)


def edge_coloring_from_link(link: dict, n: int, w: int) -> EdgeColoring2:
    """Compact a simplified link coloring at ``w`` onto vertices 0..n-2.

    ``link`` maps pairs of vertices other than ``w`` to red/blue/green/purple
    values as produced by ``coloring.simplify_link_coloring``; free pairs are
    not allowed here.
    """
    relabel = {v: v - (v > w) for v in range(n) if v != w}
    colors = {}
    for (u, v), val in link.items():
        key = tuple(sorted((relabel[u], relabel[v])))
        if val[0] in (RED, PURPLE):
            colors[key] = (val[0], relabel[val[1]], relabel[val[2]])
        elif val[0] in (BLUE, GREEN):
            colors[key] = val
        else:
            raise ValueError(f"link pair {(u, v)} has no pair-coloring tag: {val!r}")
    return EdgeColoring2(n=n - 1, colors=colors)


@dataclass(frozen=True)
class TriangleCensus:
    """Counts of the three triangle types plus exact tag densities.

    Densities are normalized so that directed tags count each orientation:
    2*alpha*C(n,2) red pairs, beta*C(n,2) blue, gamma*C(n,2) green,
    2*delta*C(n,2) purple, whence 2*alpha + beta + gamma + 2*delta = 1.
    """

    n: int
    t_green: int
    t_purple: int
    t_cherry: int
    alpha: Fraction
    beta: Fraction
    gamma: Fraction
    delta: Fraction

    def __post_init__(self):
        if 2 * self.alpha + self.beta + self.gamma + 2 * self.delta != 1:
            raise ValueError("densities must satisfy 2a + b + c + 2d = 1")
        top = math.comb(self.n, 3)
        for t in (self.t_green, self.t_purple, self.t_cherry):
            if not 0 <= t <= top:
                raise ValueError("triangle counts must lie in [0, C(n,3)]")


def count_triangle_types(c: EdgeColoring2) -> TriangleCensus:
    """Exact counts of green triangles, purple 3-cycles, and cherries.

    A cherry is a blue pair {y, z} with both y and z pointing red at a
    common third vertex.
    """
    if c.n < 2:
        raise ValueError("densities need at least one pair, so n >= 2")
    gadj = {v: set() for v in range(c.n)}
    rout = {v: set() for v in range(c.n)}
    pout = {v: set() for v in range(c.n)}
    pin = {v: set() for v in range(c.n)}
    blues = []
    counts = {RED: 0, BLUE: 0, GREEN: 0, PURPLE: 0}
    for (u, v), val in c.colors.items():
        counts[val[0]] += 1
        if val[0] == GREEN:
            gadj[u].add(v)
            gadj[v].add(u)
        elif val[0] == BLUE:
            blues.append((u, v))
        elif val[0] == RED:
            rout[val[1]].add(val[2])
        else:
            pout[val[1]].add(val[2])
            pin[val[2]].add(val[1])

    t_green = sum(
        1
        for u in range(c.n)
        for v in gadj[u]
        if v > u
        for w in gadj[u] & gadj[v]
        if w > v
    )
    t_cherry = sum(len(rout[y] & rout[z]) for y, z in blues)
    t_purple = sum(len(pout[v] & pin[u]) for u in pout for v in pout[u]) // 3

    pairs = math.comb(c.n, 2)
    return TriangleCensus(
        n=c.n,
        t_green=t_green,
        t_purple=t_purple,
        t_cherry=t_cherry,
        alpha=Fraction(counts[RED], 2 * pairs),
        beta=Fraction(counts[BLUE], pairs),
        gamma=Fraction(counts[GREEN], pairs),
        delta=Fraction(counts[PURPLE], 2 * pairs),
    )


@dataclass(frozen=True)
class InequalityItem:
    name: str
    ok: bool
    lhs: float
    rhs: float

    @property
    def slack(self) -> float:
        return self.rhs - self.lhs


@dataclass(frozen=True)
class InequalityReport:
    n: int
    items: tuple[InequalityItem, ...]
    cherry_alt_ok: bool  # the sharper 2*sqrt(3)-3 constant, reported only
    purple_refined_ok: bool  # t_purple <= (n^3 - n)/24, reported only
    f_bound: float
    triangles_total: int

    @property
    def all_ok(self) -> bool:
        return all(item.ok for item in self.items)

    def to_record(self, census: TriangleCensus) -> dict:
        return {
            "n": self.n,
            "counts": {
                "green": census.t_green,
                "purple": census.t_purple,
                "cherry": census.t_cherry,
            },
            "densities": {
                "alpha": str(census.alpha),
                "beta": str(census.beta),
                "gamma": str(census.gamma),
                "delta": str(census.delta),
            },
            "inequalities": {
                item.name: {"ok": item.ok, "slack": item.slack} for item in self.items
            },
            "cherry_alt_ok": self.cherry_alt_ok,
            "purple_refined_ok": self.purple_refined_ok,
            "f_bound": self.f_bound,
            "all_ok": self.all_ok,
        }


def check_color_inequalities(census: TriangleCensus, n: int) -> InequalityReport:
    """Evaluate the six triangle bounds exactly; slacks are informational floats.

    Pass/fail comes from cleared rational forms (squares remove the half
    powers), so no check depends on floating point.
    """
    tg, tp, tc = census.t_green, census.t_purple, census.t_cherry
    a, b, g, d = census.alpha, census.beta, census.gamma, census.delta
    n3 = n**3
    n6 = n**6
    scale = n3 / 6

    ok1 = (6 * tg) ** 2 <= g**3 * n6
    ok2 = (6 * tp) ** 2 <= 4 * d**3 * n6
    ok3 = (6 * tc) ** 2 <= 9 * a**2 * b * n6
    ok4 = 1200 * tc <= 93 * n3
    ok5 = 24 * tp + 6 * (tg + tc) <= n3
    if a + b > 0:
        ok6 = 6 * (a + b) * tc <= 3 * a * b * n3
        rhs6 = float(3 * a * b / (a + b)) * scale
    else:
        ok6 = tc == 0
        rhs6 = 0.0

    af, bf, gf, df = float(a), float(b), float(g), float(d)
    items = (
        InequalityItem("green_tri", ok1, tg, gf * math.sqrt(gf) * scale),
        InequalityItem("purple_tri", ok2, tp, 2 * df * math.sqrt(df) * scale),
        InequalityItem("cherry_sqrt", ok3, tc, 3 * af * math.sqrt(bf) * scale),
        InequalityItem("cherry_const", ok4, tc, 0.465 * scale),
        InequalityItem("combined", ok5, tp + (tg + tc) / 4, scale / 4),
        InequalityItem("cherry_harmonic", ok6, tc, rhs6),
    )
    return InequalityReport(
        n=n,
        items=items,
        cherry_alt_ok=tc <= (2 * math.sqrt(3) - 3) * scale,
        purple_refined_ok=24 * tp <= n3 - n,
        f_bound=eval_f(a, b, g, d) * scale,
        triangles_total=tg + tp + tc,
    )


def goodman_check(c: EdgeColoring2) -> tuple[int, int, bool]:
    """For an all-purple coloring: sum of indeg*outdeg against 3T + transitive count."""
    if any(val[0] != PURPLE for val in c.colors.values()):
        raise ValueError("the degree identity applies to all-purple colorings")
    indeg = {v: 0 for v in range(c.n)}
    outdeg = {v: 0 for v in range(c.n)}
    for val in c.colors.values():
        outdeg[val[1]] += 1
        indeg[val[2]] += 1
    lhs = sum(indeg[v] * outdeg[v] for v in range(c.n))
    t = count_triangle_types(c).t_purple
    rhs = 3 * t + (math.comb(c.n, 3) - t)
    return lhs, rhs, lhs == rhs


def _require_nonnegative(**named):
    for name, x in named.items():
        if x < 0:
            raise ValueError(f"{name} must be nonnegative, got {x}")


def eval_g(alpha, beta, gamma) -> float:
    """gamma^(3/2) + min(0.465, 3ab/(a+b), 3a*sqrt(b)).

    Evaluated in binary floating point, round to nearest; half powers use
    x*sqrt(x) so the quarter/half arguments of the extremal point come out
    exact. The harmonic term is 0 by convention when alpha + beta = 0.
    """
    _require_nonnegative(alpha=alpha, beta=beta, gamma=gamma)
    a, b, g = float(alpha), float(beta), float(gamma)
    harmonic = 0.0 if a + b == 0 else 3 * a * b / (a + b)
    return g * math.sqrt(g) + min(0.465, harmonic, 3 * a * math.sqrt(b))


def eval_f(alpha, beta, gamma, delta) -> float:
    """min(2*delta^(3/2) + g, 1/4 + 3/4*g) for g = eval_g(alpha, beta, gamma)."""
    _require_nonnegative(delta=delta)
    g = eval_g(alpha, beta, gamma)
    d = float(delta)
    return min(2 * d * math.sqrt(d) + g, 0.25 + 0.75 * g)


def maximize_f_on_R(step, refinements: int = 2, region=None):
    """Grid-maximize f over {a,b,c,d >= 0, 2a+b+c+2d = 1, c <= a}.

    Scans (alpha, gamma, delta) at the given resolution with beta eliminated,
    then refines twice around the incumbent at a tenth of the step. The
    certificate's upper bound comes from the full coarse scan only: any
    feasible point has a grid point within ``step`` below it in each
    coordinate, and f moves at most 22.5*step across that box (derivative
    budget 3 per density coordinate, 1.5 in gamma, doubled through beta for
    alpha and delta). ``region`` optionally restricts the scan to points
    where region(a, b, g, d) is true; the certificate then covers only that
    subregion.

    Returns (best value, best point as exact fractions, certificate dict).
    """
    step = Fraction(step)
    if step <= 0:
        raise ValueError("step must be positive")
    if step > Fraction(1, 4):
        raise ValueError("step above 1/4 cannot see the interior")

    evaluations = 0
    best = -1.0
    best_point = None

    # coarse pass over exact grid multiples, floats precomputed once
    top = int(1 / step)
    val = [float(i * step) for i in range(top + 1)]
    rem = [float(1 - m * step) for m in range(top + 1)]
    for i in range(top // 2 + 1):
        a = val[i]
        for j in range(min(i, top - 2 * i) + 1):
            g = val[j]
            m0 = 2 * i + j
            for d in range((top - m0) // 2 + 1):
                if region is not None and not region(
                    i * step, 1 - (m0 + 2 * d) * step, j * step, d * step
                ):
                    continue
                f = eval_f(a, rem[m0 + 2 * d], g, val[d])
                evaluations += 1
                if f > best:
                    best = f
                    best_point = (i * step, 1 - (m0 + 2 * d) * step, j * step, d * step)

    if best_point is None:
        raise ValueError("region excludes every grid point")
    upper = best + _SCAN_LIPSCHITZ * float(step)

    cur = step
    for _ in range(refinements):
        prev, cur = cur, cur / 10
        a0, _, g0, d0 = best_point
        for a in _frange(a0 - prev, a0 + prev, cur):
            for g in _frange(g0 - prev, g0 + prev, cur):
                if g > a or 2 * a + g > 1:
                    continue
                for d in _frange(d0 - prev, d0 + prev, cur):
                    b = 1 - 2 * a - g - 2 * d
                    if b < 0:
                        continue
                    if region is not None and not region(a, b, g, d):
                        continue
                    f = eval_f(float(a), float(b), float(g), float(d))
                    evaluations += 1
                    if f > best:
                        best = f
                        best_point = (a, b, g, d)

    certificate = {
        "step": str(step),
        "final_step": str(cur),
        "evaluations": evaluations,
        "lipschitz": _SCAN_LIPSCHITZ,
        "upper_bound": upper,
        "gap": upper - best,
    }
    return best, best_point, certificate


def _frange(lo: Fraction, hi: Fraction, step: Fraction):
    i = max(0, math.ceil(lo / step))
    while i * step <= hi:
        yield i * step
        i += 1


def e_opt(n: int) -> tuple[int, list[tuple[int, int]]]:
    """max over a+b=n of C(a,3)*b + a*C(b,3), with every maximizing split a >= b."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    counts = {
        (a, n - a): math.comb(a, 3) * (n - a) + a * math.comb(n - a, 3)
        for a in range(n - n // 2, n + 1)
    }
    top = max(counts.values(), default=0)
    return top, sorted(k for k, v in counts.items() if v == top)


def degree_spread(g: Hypergraph) -> int:
    """Largest gap between two vertex degrees (isolated vertices count)."""
    degs = {v: 0 for v in range(g.n)}
    for e in g.edges:
        for v in e:
            degs[v] += 1
    return max(degs.values()) - min(degs.values()) if degs else 0


def milne_check(a, b) -> tuple[bool, Fraction]:
    """(sum a_i b_i/(a_i+b_i)) * (sum a_i+b_i) <= (sum a_i)(sum b_i), exactly.

    Returns the (always true) verdict together with the exact slack.
    """
    a = [Fraction(x) for x in a]
    b = [Fraction(x) for x in b]
    if len(a) != len(b):
        raise ValueError("sequences must have equal length")
    if any(x < 0 for x in a + b):
        raise ValueError("entries must be nonnegative")
    if any(x + y == 0 for x, y in zip(a, b)):
        raise ValueError("each pair needs a_i + b_i > 0")
    lhs = sum(x * y / (x + y) for x, y in zip(a, b)) * sum(x + y for x, y in zip(a, b))
    rhs = sum(a) * sum(b)
    return lhs <= rhs, rhs - lhs


def milne_stability_check(a, b, eps) -> tuple[bool, set[int]]:
    """Near-equality forces all but eps*n pairs close to (1/2,1/2) or (0,0).

    If sum a_i b_i >= (1/4) sum (a_i+b_i) - eps^3 n, at most eps*n indices may
    fall outside {both in (1/2-eps, 1/2+eps)} union {both in [0, eps)}. The
    exceptional set is returned either way. The conclusion is provable for
    eps up to about 1/5; beyond that the statement itself can fail.
    """
    a = [Fraction(x) for x in a]
    b = [Fraction(x) for x in b]
    eps = Fraction(eps)
    if len(a) != len(b):
        raise ValueError("sequences must have equal length")
    if eps <= 0:
        raise ValueError("eps must be positive")
    if any(x < 0 for x in a + b) or any(x + y > 1 for x, y in zip(a, b)):
        raise ValueError("each pair needs 0 <= a_i + b_i <= 1")
    n = len(a)
    lo, hi = Fraction(1, 2) - eps, Fraction(1, 2) + eps
    exceptional = {
        i
        for i, (x, y) in enumerate(zip(a, b))
        if not ((lo < x < hi and lo < y < hi) or (x < eps and y < eps))
    }
    hypothesis = sum(x * y for x, y in zip(a, b)) >= sum(
        x + y for x, y in zip(a, b)
    ) / 4 - eps**3 * n
    return (not hypothesis) or len(exceptional) <= eps * n, exceptional
