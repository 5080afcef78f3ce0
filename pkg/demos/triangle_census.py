"""Triangle counting under four pair tags and the certified density maximum.

Pairs carry one of four tags (two of them directed); three triangle shapes
are counted exactly and bounded by six inequalities. The scan at the end
certifies that the governing density function never exceeds 1/2, with the
unique maximizer an equal red/blue/green split and no purple at all.
"""

from fractions import Fraction

from tighthom.census import (
    check_color_inequalities,
    cherry_coloring,
    count_triangle_types,
    e_opt,
    goodman_check,
    maximize_f_on_R,
    purple_tournament_coloring,
    random_edge_coloring,
)
from tighthom.hypergraph import rotational_tournament


def main():
    c = cherry_coloring(6, 6)
    census = count_triangle_types(c)
    print("Two-clique coloring on 6+6 (blue inside, green inside, red across):")
    print(f"  densities alpha={census.alpha} beta={census.beta} "
          f"gamma={census.gamma} delta={census.delta}")
    print(f"  triangles: {census.t_green} green, {census.t_purple} purple, "
          f"{census.t_cherry} cherries")
    report = check_color_inequalities(census, 12)
    for item in report.items:
        print(f"  {item.name:<15} {'ok' if item.ok else 'VIOLATED'} "
              f"slack {item.slack:.3f}")

    tour = purple_tournament_coloring(5, rotational_tournament(5))
    lhs, rhs, ok = goodman_check(tour)
    print()
    print(f"All-purple rotational 5-tournament: degree identity {lhs} = {rhs},")
    print(f"  with {count_triangle_types(tour).t_purple} directed 3-cycles, "
          "the most a 5-tournament can have.")

    sample = count_triangle_types(random_edge_coloring(30, 7))
    print(f"A random coloring on 30 vertices stays legal too: "
          f"{check_color_inequalities(sample, 30).all_ok}")

    best, point, cert = maximize_f_on_R(Fraction(1, 100))
    a, b, g, d = point
    print()
    print(f"Certified grid maximum of the density bound: {best}")
    print(f"  attained at alpha={a} beta={b} gamma={g} delta={d}")
    print(f"  {cert['evaluations']} evaluations, upper bound {cert['upper_bound']:.4f}")

    print()
    print("Best split counts for oddly bipartite hosts:")
    for n in range(4, 9):
        top, splits = e_opt(n)
        pretty = " or ".join(f"{a}+{b}" for a, b in splits)
        print(f"  n={n}: {top} edges at split {pretty}")


if __name__ == "__main__":
    main()
