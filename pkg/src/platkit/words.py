"""Braid words on n strands and an exact solution to their word problem.

A braid word is a finite sequence of signed generator indices: the letter
``i`` (1 <= i <= n-1) crosses strand i over strand i+1, and ``-i`` is the
inverse crossing.  Words multiply by concatenation and are never normalised
internally; equality of the group elements they represent is decided by
:func:`braids_equal`.

The equality test uses the faithful action of the braid group on a free
group F_n = <x_1, ..., x_n>:

    sigma_i:  x_i -> x_i x_{i+1} x_i^{-1},   x_{i+1} -> x_i,

with all other x_j fixed.  Two words are equal exactly when the images of
all n basis letters agree as freely reduced words.  The images are the
canonical fingerprint used throughout the package for memoisation.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce as _reduce


DEFAULT_FINGERPRINT_GUARD = 10**6


class BudgetError(RuntimeError):
    """A configured resource budget (letters, crossings, nodes) ran out."""


def _free_mul(u: tuple[int, ...], v: tuple[int, ...]) -> tuple[int, ...]:
    # both inputs freely reduced, so cancellation only happens at the seam
    i = len(u)
    j = 0
    while i > 0 and j < len(v) and u[i - 1] == -v[j]:
        i -= 1
        j += 1
    return u[:i] + v[j:]


def _free_inv(u: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(-x for x in reversed(u))


@dataclass(frozen=True)
class Permutation:
    """A permutation of {1, ..., n} stored by its tuple of images."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.images)
        if sorted(self.images) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {self.images}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @property
    def size(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Diagram-order composition: (p * q)(i) = q(p(i))."""
        if self.size != other.size:
            raise ValueError("size mismatch")
        return Permutation(tuple(other.images[x - 1] for x in self.images))

    def inverse(self) -> "Permutation":
        images = [0] * self.size
        for i, x in enumerate(self.images, start=1):
            images[x - 1] = i
        return Permutation(tuple(images))

    def is_identity(self) -> bool:
        return all(x == i for i, x in enumerate(self.images, start=1))

    def cycle_type(self) -> tuple[int, ...]:
        seen = [False] * self.size
        lengths = []
        for start in range(1, self.size + 1):
            if seen[start - 1]:
                continue
            length = 0
            x = start
            while not seen[x - 1]:
                seen[x - 1] = True
                x = self(x)
                length += 1
            lengths.append(length)
        return tuple(sorted(lengths))


@dataclass(frozen=True)
class BraidWord:
    """A word in the Artin generators of the braid group on ``strands`` strands.

    Letters are nonzero integers with absolute value below ``strands``; the
    stored sequence is exactly what was written, with no reduction applied.
    """

    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.strands < 1:
            raise ValueError("strand count must be positive")
        object.__setattr__(self, "letters", tuple(self.letters))
        for g in self.letters:
            if g == 0 or abs(g) >= self.strands:
                raise ValueError(f"letter {g} out of range for {self.strands} strands")

    @classmethod
    def identity(cls, strands: int) -> "BraidWord":
        return cls(strands, ())

    @classmethod
    def generator(cls, i: int, strands: int, power: int = 1) -> "BraidWord":
        """The word sigma_i^power."""
        if power >= 0:
            return cls(strands, (i,) * power)
        return cls(strands, (-i,) * (-power))

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if self.strands != other.strands:
            raise ValueError("cannot concatenate words on different strand counts")
        return BraidWord(self.strands, self.letters + other.letters)

    def __pow__(self, k: int) -> "BraidWord":
        if k < 0:
            return self.inverse() ** (-k)
        return BraidWord(self.strands, self.letters * k)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strands, tuple(-g for g in reversed(self.letters)))

    def free_reduced(self) -> "BraidWord":
        """Cancel adjacent sigma_i sigma_i^{-1} pairs (an exact isotopy of the word)."""
        out: list[int] = []
        for g in self.letters:
            if out and out[-1] == -g:
                out.pop()
            else:
                out.append(g)
        return BraidWord(self.strands, tuple(out))

    def __len__(self) -> int:
        return len(self.letters)

    def text(self) -> str:
        return " ".join(str(g) for g in self.letters)


def parse_braid(text: str, strands: int) -> BraidWord:
    """Parse a whitespace-separated list of signed generator indices."""
    letters = []
    for tok in text.split():
        try:
            g = int(tok)
        except ValueError as exc:
            raise ValueError(f"bad braid letter {tok!r}") from exc
        letters.append(g)
    return BraidWord(strands, tuple(letters))


def embed(word: BraidWord, strands: int) -> BraidWord:
    """Reinterpret ``word`` inside a braid group on at least as many strands."""
    if strands < word.strands:
        raise ValueError("cannot embed into fewer strands")
    return BraidWord(strands, word.letters)


def strand_permutation(word: BraidWord) -> Permutation:
    """Where each bottom endpoint ends up at the top of the braid."""
    images = list(range(1, word.strands + 1))
    for g in word.letters:
        i = abs(g) - 1
        # the strands currently at positions i+1 and i+2 swap
        for p in range(word.strands):
            if images[p] == i + 1:
                images[p] = i + 2
            elif images[p] == i + 2:
                images[p] = i + 1
    return Permutation(tuple(images))


def exponent_sum(word: BraidWord) -> int:
    return sum(1 if g > 0 else -1 for g in word.letters)


def identity_images(strands: int) -> tuple[tuple[int, ...], ...]:
    return tuple((i,) for i in range(1, strands + 1))


def artin_apply(
    images: tuple[tuple[int, ...], ...],
    letters: tuple[int, ...],
    guard: int = DEFAULT_FINGERPRINT_GUARD,
) -> tuple[tuple[int, ...], ...]:
    """Extend a partial fingerprint by further letters of the same braid word.

    ``images`` is the tuple of free-group images of the basis under some
    prefix; the result is the fingerprint of the prefix followed by
    ``letters``.  Raises :class:`BudgetError` when the total letter count of
    the images passes ``guard``.
    """
    work = [tuple(u) for u in images]
    total = sum(len(u) for u in work)
    for g in letters:
        i = abs(g) - 1
        a, b = work[i], work[i + 1]
        if g > 0:
            work[i] = _free_mul(_free_mul(a, b), _free_inv(a))
            work[i + 1] = a
        else:
            work[i] = b
            work[i + 1] = _free_mul(_free_mul(_free_inv(b), a), b)
        total += len(work[i]) + len(work[i + 1]) - len(a) - len(b)
        if total > guard:
            raise BudgetError(
                f"free-group fingerprint grew past {guard} letters"
            )
    return tuple(work)


def artin_fingerprint(
    word: BraidWord, guard: int = DEFAULT_FINGERPRINT_GUARD
) -> tuple[tuple[int, ...], ...]:
    """The images of all free-group basis letters under the word's action.

    This tuple determines the braid: two words on the same strand count
    represent equal braids exactly when their fingerprints agree.
    """
    return artin_apply(identity_images(word.strands), word.letters, guard)


def braids_equal(a: BraidWord, b: BraidWord, guard: int = DEFAULT_FINGERPRINT_GUARD) -> bool:
    """Exact word-problem test for two words on the same strand count."""
    if a.strands != b.strands:
        raise ValueError("words live on different strand counts")
    if exponent_sum(a) != exponent_sum(b):
        return False
    if strand_permutation(a) != strand_permutation(b):
        return False
    return artin_fingerprint(a, guard) == artin_fingerprint(b, guard)


def product(words: list[BraidWord] | tuple[BraidWord, ...], strands: int | None = None) -> BraidWord:
    """Concatenate a sequence of words; the identity when the sequence is empty."""
    seq = list(words)
    if not seq:
        if strands is None:
            raise ValueError("empty product needs an explicit strand count")
        return BraidWord.identity(strands)
    return _reduce(lambda x, y: x * y, seq)
