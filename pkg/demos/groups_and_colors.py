"""Tour of the subgroup classes of S4 and the oriented color sets they induce.

A coloring of oriented edges can only dodge short cycle images when every
color's symmetry group avoids the relevant rotation power. This script lists
all subgroup classes, singles out the maximal avoiding ones, and shows how
the rotation permutes the resulting colors.
"""

from tighthom import permgroup as pg


def main():
    cyc4 = pg.cyc(4)
    cyc2 = pg.perm_power(cyc4, 2)

    print("All subgroup classes of S4 (name, order, class size, avoidance):")
    for cls in pg.enumerate_subgroup_classes(4):
        a1 = "avoids" if pg.avoids(cls.elements, cyc4) else "contains"
        a2 = "avoids" if pg.avoids(cls.elements, cyc2) else "contains"
        print(
            f"  {cls.name:<16} order {cls.order:>2}, {cls.class_size} conjugates,"
            f" {a1} the 4-cycle, {a2} its square"
        )

    print()
    print("Maximal classes avoiding the 4-cycle (any of these can color a")
    print("graph with no cycle image of length 1 mod 4):")
    for cls in pg.maximal_avoiding_classes(4, cyc4):
        gens = ", ".join(
            pg.format_perm(p) for p in sorted(pg.minimal_generators(cls.elements))
        )
        print(f"  {cls.name:<16} generated by {gens}")

    cs = pg.color_set(4, cyc4)
    print()
    print(f"Their cosets give {len(cs.colors)} colors in total.")
    color = cs.colors[0]
    orbit = [color]
    while (nxt := cs.act(cyc4, orbit[-1])) != color:
        orbit.append(nxt)
    print(f"The 4-cycle pushes color {color} around an orbit of size {len(orbit)},")
    print("which is why no single color can sit on a rotating walk.")

    cs2 = pg.color_set(4, cyc2)
    print(f"Avoiding the square instead leaves only S3-cosets: {len(cs2.colors)} colors.")


if __name__ == "__main__":
    main()
