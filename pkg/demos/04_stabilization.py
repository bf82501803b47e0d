"""Stabilizing a plat without changing the link it presents.

A stabilization profile says how many fresh strand pairs to insert after
each existing pair.  The stabilized word closes to the same link, which the
demo checks with the exact component count and the bracket polynomial.
"""

from platkit.laurent import equal_up_to_unit
from platkit.plats import component_count, kauffman_bracket, plat_closure
from platkit.stabilize import StabilizationProfile, stabilization_tail, stabilize_by_profile
from platkit.words import parse_braid


def main() -> None:
    word = parse_braid("2 2 2", 4)
    profile = StabilizationProfile((1, 1))
    bigger = stabilize_by_profile(word, profile)

    print(f"original word  : {word.text()} on {word.strands} strands")
    print(f"profile        : {profile.text()} (one new pair after each old one)")
    print(f"stabilized word: {bigger.text()} on {bigger.strands} strands")

    before = plat_closure(word)
    after = plat_closure(bigger)
    print(f"components     : {component_count(before)} -> {component_count(after)}")

    bracket_before = kauffman_bracket(before)
    bracket_after = kauffman_bracket(after)
    print(f"bracket before : {bracket_before}")
    print(f"bracket after  : {bracket_after}")
    print(f"agree up to a unit: {equal_up_to_unit(bracket_before, bracket_after)}")

    # additions after the last pair need no strand shuffling at all
    tail = stabilization_tail(StabilizationProfile((0, 2)))
    print(f"tail for two trailing pairs: {tail.text()} on {tail.strands} strands")


if __name__ == "__main__":
    main()
