"""Membership in the subgroup that preserves the plat pairing.

Words in this subgroup close to trivial links, so a factorization over its
generators is a certificate of unknottedness.  The demo searches for such
factorizations and shows an honest rejection.
"""

from platkit.hilden import (
    expand_expression,
    format_expression,
    hilden_generators,
    preserves_pairing,
    search_membership,
    verify_membership,
)
from platkit.plats import component_count, plat_closure, triviality_check
from platkit.words import parse_braid


def main() -> None:
    print("generators for two pairs:")
    for k, gen in enumerate(hilden_generators(2)):
        print(f"  g{k} = {gen.text()}")

    word = parse_braid("1 3", 4)
    expr = search_membership(word, max_len=6)
    print(f"word {word.text()!r}: preserves pairing = {preserves_pairing(word)}")
    print(f"  shortest factorization: {format_expression(expr)}")
    print(f"  verifies: {verify_membership(word, expr)}")
    print(f"  expanded: {expand_expression(expr).text()}")

    diagram = plat_closure(word)
    print(f"  plat components: {component_count(diagram)}")
    print(f"  plat triviality: {triviality_check(diagram).value}")

    # a single middle crossing moves the wickets, so it cannot be a member
    outside = parse_braid("2", 4)
    print(f"word {outside.text()!r}: preserves pairing = {preserves_pairing(outside)}")
    print(f"  search result: {search_membership(outside, max_len=6)}")


if __name__ == "__main__":
    main()
