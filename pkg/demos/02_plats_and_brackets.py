"""Plat closures and their exact polynomial invariant.

Closes braid words into links by capping adjacent strand pairs, counts
components, evaluates the Kauffman bracket, and prints a PD-style export.
"""

from platkit.plats import (
    component_count,
    kauffman_bracket,
    pd_lines,
    plat_closure,
    triviality_check,
)
from platkit.words import BraidWord, parse_braid


def describe(name: str, word: BraidWord) -> None:
    diagram = plat_closure(word)
    print(f"{name}:")
    print(f"  word       : {word.text() or '(empty)'} on {word.strands} strands")
    print(f"  components : {component_count(diagram)}")
    print(f"  bracket    : {kauffman_bracket(diagram)}")
    print(f"  triviality : {triviality_check(diagram).value}")


def main() -> None:
    describe("unknot", BraidWord.identity(2))
    describe("two-component unlink", BraidWord.identity(4))
    describe("trefoil", parse_braid("2 2 2", 4))
    describe("hopf link", parse_braid("2 2", 4))

    print("PD export of the trefoil plat:")
    for line in pd_lines(plat_closure(parse_braid("2 2 2", 4))):
        print(f"  {line}")


if __name__ == "__main__":
    main()
