"""Braid systems, slide moves, and surface invariants.

A braid system records the branch data of a braided surface as a tuple of
braids.  Slide moves rearrange the tuple without changing the surface; the
demo runs the bounded equivalence search, then computes invariants of a
closed example and converts it into genuine plat form.
"""

from platkit.systems import (
    BraidSystem,
    MonodromyEntry,
    boundary_braid,
    branch_signs,
    hurwitz_search,
    is_two_dimensional,
    normal_euler_number,
    plat_euler_characteristic,
    ribbon_criterion,
    to_genuine_plat,
)
from platkit.words import parse_braid


def main() -> None:
    s1 = BraidSystem(2, (parse_braid("1", 2), parse_braid("-1", 2)))
    s2 = BraidSystem(2, (parse_braid("-1", 2), parse_braid("1", 2)))
    res = hurwitz_search(s1, s2)
    print(f"slide search: {res.status.value} after exploring {res.explored} systems")
    print(f"  witness moves: {res.moves}")

    # a crossing and its reverse, both conjugated by the same braid
    conj = parse_braid("-2 -2 -2", 4)
    closed = BraidSystem(
        4, (MonodromyEntry(conj, 1, 1), MonodromyEntry(conj, 1, -1))
    )
    print("closed degree-4 system:")
    boundary = boundary_braid(closed).free_reduced()
    print(f"  boundary braid reduces to: {boundary.text() or '(empty)'}")
    print(f"  two-dimensional : {is_two_dimensional(closed)}")
    print(f"  euler char      : {plat_euler_characteristic(closed)}")
    print(f"  branch signs    : {branch_signs(closed)}")
    print(f"  normal euler    : {normal_euler_number(closed)}")
    print(f"  ribbon symmetric: {ribbon_criterion(closed)}")

    genuine = to_genuine_plat(closed)
    print("genuine plat form:")
    print(f"  degree {genuine.degree}, {genuine.r} entries")
    for k, entry in enumerate(genuine.entries, start=1):
        print(
            f"  entry {k}: crossing {entry.index} sign {entry.sign:+d} "
            f"conjugated by [{entry.conjugator.text()}]"
        )


if __name__ == "__main__":
    main()
