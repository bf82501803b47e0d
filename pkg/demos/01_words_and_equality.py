"""Braid words and the exact word problem.

Builds a few words on three strands, checks the defining relations, and
shows how the equality decision distinguishes words that share the cheap
invariants.
"""

from platkit.words import braids_equal, exponent_sum, parse_braid, strand_permutation


def main() -> None:
    a = parse_braid("1 2 1", 3)
    b = parse_braid("2 1 2", 3)
    print(f"left side          : {a.text()}")
    print(f"right side         : {b.text()}")
    print(f"adjacent relation  : {braids_equal(a, b)}")

    # conjugating one generator by the other lands on the same element
    c = parse_braid("1 2 -1", 3)
    d = parse_braid("-2 1 2", 3)
    print(f"conjugation test   : {braids_equal(c, d)}")

    # these two share exponent sum and strand permutation but differ
    u = parse_braid("1 1 2 2", 3)
    v = parse_braid("2 2 1 1", 3)
    print(f"exponent sums      : {exponent_sum(u)} vs {exponent_sum(v)}")
    print(f"permutations agree : {strand_permutation(u) == strand_permutation(v)}")
    print(f"words equal        : {braids_equal(u, v)}")

    # the full twist commutes with everything
    twist = parse_braid("1 2 1 2 1 2", 3)
    w = parse_braid("1 -2 1", 3)
    print(f"full twist central : {braids_equal(twist * w, w * twist)}")


if __name__ == "__main__":
    main()
