"""The Hilden subgroup of the braid group on 2m strands.

These are the braids that extend to the handlebody side of a plat: the
plat closure of any word in this subgroup, with the standard pairing, is
the m-component trivial link.  The subgroup is generated by

    sigma_1,
    sigma_2 sigma_1 sigma_3 sigma_2,
    sigma_{2i} sigma_{2i-1} sigma_{2i+1}^{-1} sigma_{2i}^{-1}   (1 <= i <= m-1),

all of which map standard pairs to standard pairs.  Membership of a word
is certified by an expression in these generators; a bounded breadth-first
search finds the lexicographically least shortest expression when one
exists within the length bound.
"""

from __future__ import annotations

from dataclasses import dataclass

from .words import (
    BraidWord,
    Permutation,
    artin_apply,
    artin_fingerprint,
    braids_equal,
    exponent_sum,
    identity_images,
    product,
    strand_permutation,
)


def hilden_generators(m: int) -> list[BraidWord]:
    """Generators of the Hilden subgroup inside the braid group on 2m strands."""
    if m < 1:
        raise ValueError("need at least one pair of strands")
    n = 2 * m
    gens = [BraidWord(n, (1,))]
    if m >= 2:
        gens.append(BraidWord(n, (2, 1, 3, 2)))
        for i in range(1, m):
            k = 2 * i
            gens.append(BraidWord(n, (k, k - 1, -(k + 1), -k)))
    return gens


def preserves_pairing(word: BraidWord) -> bool:
    """Whether the word's permutation maps standard pairs to standard pairs.

    This is a necessary condition for Hilden membership, cheap enough to use
    as a search prefilter.
    """
    if word.strands % 2 != 0:
        raise ValueError("pairing test needs an even strand count")
    pi = strand_permutation(word)
    for k in range(word.strands // 2):
        a, b = pi(2 * k + 1), pi(2 * k + 2)
        if abs(a - b) != 1 or (min(a, b) % 2) != 1:
            return False
    return True


def pair_permutation(word: BraidWord) -> Permutation:
    """The induced permutation of the m standard pairs (word must preserve them)."""
    if not preserves_pairing(word):
        raise ValueError("word does not preserve the standard pairing")
    pi = strand_permutation(word)
    m = word.strands // 2
    return Permutation(tuple((pi(2 * k + 1) + 1) // 2 for k in range(m)))


@dataclass(frozen=True)
class HildenExpression:
    """A word in the Hilden generators: (generator index, +1 or -1) factors."""

    pairs: int
    factors: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        count = len(hilden_generators(self.pairs))
        for idx, exp in self.factors:
            if not 0 <= idx < count:
                raise ValueError(f"generator index {idx} out of range for m={self.pairs}")
            if exp not in (1, -1):
                raise ValueError("exponents must be +1 or -1")

    def __mul__(self, other: "HildenExpression") -> "HildenExpression":
        if self.pairs != other.pairs:
            raise ValueError("pair counts differ")
        return HildenExpression(self.pairs, self.factors + other.factors)

    def inverse(self) -> "HildenExpression":
        return HildenExpression(
            self.pairs, tuple((idx, -exp) for idx, exp in reversed(self.factors))
        )


def expand_expression(expr: HildenExpression) -> BraidWord:
    """Multiply out an expression into a braid word on 2m strands."""
    gens = hilden_generators(expr.pairs)
    parts = []
    for idx, exp in expr.factors:
        parts.append(gens[idx] if exp == 1 else gens[idx].inverse())
    return product(parts, strands=2 * expr.pairs)


def verify_membership(word: BraidWord, expr: HildenExpression) -> bool:
    """Check a claimed certificate: does the expression multiply out to the word?"""
    if word.strands != 2 * expr.pairs:
        return False
    return braids_equal(word, expand_expression(expr))


def format_expression(expr: HildenExpression) -> str:
    """Render as ``m=<pairs>`` followed by ``g<k>`` / ``g<k>^-1`` tokens."""
    toks = [f"m={expr.pairs}"]
    for idx, exp in expr.factors:
        toks.append(f"g{idx}" if exp == 1 else f"g{idx}^-1")
    return " ".join(toks)


def parse_expression(text: str) -> HildenExpression:
    toks = text.split()
    if not toks or not toks[0].startswith("m="):
        raise ValueError("expression text must start with m=<pairs>")
    try:
        pairs = int(toks[0][2:])
    except ValueError as exc:
        raise ValueError(f"bad pair count in {toks[0]!r}") from exc
    factors = []
    for tok in toks[1:]:
        exp = 1
        body = tok
        if tok.endswith("^-1"):
            exp = -1
            body = tok[:-3]
        if not body.startswith("g"):
            raise ValueError(f"bad generator token {tok!r}")
        try:
            idx = int(body[1:])
        except ValueError as exc:
            raise ValueError(f"bad generator token {tok!r}") from exc
        factors.append((idx, exp))
    return HildenExpression(pairs, tuple(factors))


def _coxeter_length(perm: Permutation) -> int:
    # inversions = least number of adjacent transpositions
    imgs = perm.images
    return sum(
        1
        for a in range(len(imgs))
        for b in range(a + 1, len(imgs))
        if imgs[a] > imgs[b]
    )


def search_membership(word: BraidWord, max_len: int) -> HildenExpression | None:
    """Bounded breadth-first search for a Hilden expression equal to ``word``.

    Explores products of at most ``max_len`` generator factors, memoising
    visited group elements by fingerprint, and returns the lexicographically
    least expression among the shortest ones, or None when the bound is
    exhausted.  The verdict None is therefore only "not found within budget".
    """
    if word.strands % 2 != 0:
        raise ValueError("membership search needs an even strand count")
    if not preserves_pairing(word):
        return None
    m = word.strands // 2
    gens = hilden_generators(m)
    target_fp = artin_fingerprint(word)
    target_sum = exponent_sum(word)
    target_pairs = pair_permutation(word)

    # per-factor steps, in the order that defines lexicographic rank
    steps = []
    for idx, gen in enumerate(gens):
        for exp in (1, -1):
            factor = gen if exp == 1 else gen.inverse()
            steps.append(
                (idx, exp, factor.letters, exponent_sum(factor), pair_permutation(factor))
            )

    max_step_sum = max(abs(exponent_sum(g)) for g in gens)

    def viable(depth: int, fp_sum: int, pair_perm: Permutation) -> bool:
        remaining = max_len - depth
        gap = abs(target_sum - fp_sum)
        if gap > remaining * max_step_sum:
            return False
        need = _coxeter_length(pair_perm.inverse() * target_pairs)
        return need <= remaining

    start_fp = identity_images(2 * m)
    if target_fp == start_fp:
        return HildenExpression(m, ())
    seen = {start_fp}
    frontier: list[tuple[tuple, int, Permutation, tuple[tuple[int, int], ...]]] = [
        (start_fp, 0, Permutation.identity(m), ())
    ]
    for depth in range(max_len):
        nxt = []
        for fp, esum, pperm, expr in frontier:
            for idx, exp, letters, step_sum, step_pperm in steps:
                new_fp = artin_apply(fp, letters)
                if new_fp in seen:
                    continue
                seen.add(new_fp)
                new_expr = expr + ((idx, exp),)
                if new_fp == target_fp:
                    return HildenExpression(m, new_expr)
                new_sum = esum + step_sum
                new_pperm = pperm * step_pperm
                if viable(depth + 1, new_sum, new_pperm):
                    nxt.append((new_fp, new_sum, new_pperm, new_expr))
        frontier = nxt
        if not frontier:
            break
    return None
