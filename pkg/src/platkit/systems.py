"""Braid systems: the monodromy data of braided surfaces.

A braided surface of degree n with r branch points is recorded by the
r-tuple of monodromy braids around its branch points, each a conjugate of
a single crossing.  The tuple is considered up to slide moves

    (..., b_j, b_{j+1}, ...)  ->  (..., b_j b_{j+1} b_j^{-1}, b_j, ...)

and their inverses (Hurwitz equivalence).  This module implements the
moves, a bounded search for equivalence, the Euler characteristic and
branch-sign invariants, the degree-2 classification, conversion of a
closed-surface system to one whose closure is a plat, and the symmetric
ribbon criterion.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum

from .words import (
    BraidWord,
    artin_fingerprint,
    braids_equal,
    embed,
    exponent_sum,
    parse_braid,
    product,
    strand_permutation,
)

DEFAULT_SEARCH_BUDGET = 20000


@dataclass(frozen=True)
class MonodromyEntry:
    """A braid of the shape u sigma_k^sign u^{-1}, kept in factored form."""

    conjugator: BraidWord
    index: int
    sign: int

    def __post_init__(self) -> None:
        if not 1 <= self.index <= self.conjugator.strands - 1:
            raise ValueError(f"crossing index {self.index} out of range")
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")

    @property
    def strands(self) -> int:
        return self.conjugator.strands

    def word(self) -> BraidWord:
        core = BraidWord(self.strands, (self.index * self.sign,))
        return self.conjugator * core * self.conjugator.inverse()

    def inverse(self) -> "MonodromyEntry":
        return MonodromyEntry(self.conjugator, self.index, -self.sign)


Entry = BraidWord | MonodromyEntry


def entry_word(entry: Entry) -> BraidWord:
    return entry.word() if isinstance(entry, MonodromyEntry) else entry


def as_monodromy(word: BraidWord) -> MonodromyEntry | None:
    """Recognise words that are syntactically u sigma_k^e u-bar."""
    letters = word.letters
    n = len(letters)
    if n % 2 == 0:
        return None
    h = n // 2
    for t in range(h):
        if letters[t] != -letters[n - 1 - t]:
            return None
    center = letters[h]
    return MonodromyEntry(
        BraidWord(word.strands, letters[:h]), abs(center), 1 if center > 0 else -1
    )


@dataclass(frozen=True)
class BraidSystem:
    degree: int
    entries: tuple[Entry, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", tuple(self.entries))
        for e in self.entries:
            if e.strands != self.degree:
                raise ValueError("entry strand count must match the system degree")

    @property
    def r(self) -> int:
        return len(self.entries)

    def words(self) -> tuple[BraidWord, ...]:
        return tuple(entry_word(e) for e in self.entries)


def boundary_braid(system: BraidSystem) -> BraidWord:
    """The product of all entries; the braid the surface's boundary traces."""
    return product(system.words(), strands=system.degree)


def is_two_dimensional(system: BraidSystem) -> bool:
    """Whether the boundary braid is trivial, so the surface closes up."""
    return braids_equal(boundary_braid(system), BraidWord.identity(system.degree))


def _conjugate_entry(by: Entry, target: Entry) -> Entry:
    """by . target . by^{-1}, staying in factored form when target is factored."""
    by_word = entry_word(by)
    if isinstance(target, MonodromyEntry):
        conj = (by_word * target.conjugator).free_reduced()
        return MonodromyEntry(conj, target.index, target.sign)
    return (by_word * target * by_word.inverse()).free_reduced()


def slide(system: BraidSystem, j: int, inverse: bool = False) -> BraidSystem:
    """The slide move at slot j (1-based), or its inverse.

    Forward:  (b_j, b_{j+1}) -> (b_j b_{j+1} b_j^{-1}, b_j)
    Inverse:  (b_j, b_{j+1}) -> (b_{j+1}, b_{j+1}^{-1} b_j b_{j+1})
    """
    if not 1 <= j <= system.r - 1:
        raise ValueError(f"slide slot {j} out of range for r={system.r}")
    entries = list(system.entries)
    a, b = entries[j - 1], entries[j]
    if inverse:
        entries[j - 1] = b
        entries[j] = _conjugate_entry(b.inverse(), a)
    else:
        entries[j - 1] = _conjugate_entry(a, b)
        entries[j] = a
    return BraidSystem(system.degree, tuple(entries))


def apply_slides(system: BraidSystem, moves: list[tuple[int, bool]]) -> BraidSystem:
    """Replay a move list of (slot, inverse) pairs."""
    for j, inv in moves:
        system = slide(system, j, inverse=inv)
    return system


class HurwitzStatus(Enum):
    EQUIVALENT = "Equivalent"
    NOT_EQUIVALENT = "NotEquivalent"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class HurwitzResult:
    status: HurwitzStatus
    moves: tuple[tuple[int, bool], ...] | None = None
    reason: str | None = None
    explored: int = 0


def _system_fingerprint(system: BraidSystem) -> tuple:
    return tuple(artin_fingerprint(w) for w in system.words())


def hurwitz_search(
    s1: BraidSystem, s2: BraidSystem, budget: int = DEFAULT_SEARCH_BUDGET
) -> HurwitzResult:
    """Bounded breadth-first search for a slide sequence from s1 to s2.

    Cheap invariants decide many inequivalent pairs outright; otherwise the
    orbit of s1 is explored up to ``budget`` distinct systems.  The verdict
    is EQUIVALENT with a replayable move list, NOT_EQUIVALENT only when the
    whole (finite) orbit was enumerated, and UNKNOWN when the budget ran
    out first.
    """
    if s1.degree != s2.degree:
        return HurwitzResult(HurwitzStatus.NOT_EQUIVALENT, reason="degrees differ")
    if s1.r != s2.r:
        return HurwitzResult(HurwitzStatus.NOT_EQUIVALENT, reason="entry counts differ")
    if not braids_equal(boundary_braid(s1), boundary_braid(s2)):
        return HurwitzResult(HurwitzStatus.NOT_EQUIVALENT, reason="boundary braids differ")
    sums1 = sorted(exponent_sum(w) for w in s1.words())
    sums2 = sorted(exponent_sum(w) for w in s2.words())
    if sums1 != sums2:
        return HurwitzResult(
            HurwitzStatus.NOT_EQUIVALENT, reason="exponent-sum multisets differ"
        )
    cycles1 = sorted(strand_permutation(w).cycle_type() for w in s1.words())
    cycles2 = sorted(strand_permutation(w).cycle_type() for w in s2.words())
    if cycles1 != cycles2:
        return HurwitzResult(
            HurwitzStatus.NOT_EQUIVALENT, reason="cycle-type multisets differ"
        )
    if budget < 1:
        return HurwitzResult(HurwitzStatus.UNKNOWN, reason="budget exhausted", explored=0)

    target = _system_fingerprint(s2)
    start = _system_fingerprint(s1)
    if start == target:
        return HurwitzResult(HurwitzStatus.EQUIVALENT, moves=(), explored=1)
    moves_menu = [(j, inv) for j in range(1, s1.r) for inv in (False, True)]
    seen = {start: None}  # fingerprint -> (parent fp, move)
    frontier = [(start, s1)]
    explored = 1
    while frontier:
        nxt = []
        for fp, sys_state in frontier:
            for j, inv in moves_menu:
                child = slide(sys_state, j, inverse=inv)
                child_fp = _system_fingerprint(child)
                if child_fp in seen:
                    continue
                if explored >= budget:
                    return HurwitzResult(
                        HurwitzStatus.UNKNOWN, reason="budget exhausted", explored=explored
                    )
                seen[child_fp] = (fp, (j, inv))
                explored += 1
                if child_fp == target:
                    path = []
                    cur = child_fp
                    while seen[cur] is not None:
                        parent, move = seen[cur]
                        path.append(move)
                        cur = parent
                    return HurwitzResult(
                        HurwitzStatus.EQUIVALENT,
                        moves=tuple(reversed(path)),
                        explored=explored,
                    )
                nxt.append((child_fp, child))
        frontier = nxt
    return HurwitzResult(
        HurwitzStatus.NOT_EQUIVALENT, reason="orbit enumerated", explored=explored
    )


def plat_euler_characteristic(system: BraidSystem) -> int:
    """Euler characteristic 2m - r of the surface a 2m-degree system closes into."""
    if system.degree % 2 != 0:
        raise ValueError("plat Euler characteristic needs an even degree")
    return system.degree - system.r


def branch_signs(system: BraidSystem) -> tuple[int, int]:
    """Counts (positive, negative) of branch points; entries must be factored."""
    p = q = 0
    for e in system.entries:
        if not isinstance(e, MonodromyEntry):
            raise ValueError("branch signs need monodromy-factored entries")
        if e.sign == 1:
            p += 1
        else:
            q += 1
    return p, q


def _collapse_degree_two(entry: Entry) -> int:
    # the 2-strand braid group is infinite cyclic, so only the exponent
    # sum survives; a branch entry must collapse to a single crossing
    s = exponent_sum(entry_word(entry))
    if s not in (1, -1):
        raise ValueError(f"entry is not a single-crossing conjugate (exponent sum {s})")
    return s


@dataclass(frozen=True)
class SurfaceType:
    positive: int
    negative: int

    @property
    def is_trivial_sphere(self) -> bool:
        return self.positive == 0 and self.negative == 0

    def __str__(self) -> str:
        if self.is_trivial_sphere:
            return "Trivial2Knot"
        return f"NonorientableSum({self.positive},{self.negative})"


def classify_degree_two(system: BraidSystem) -> SurfaceType:
    """Classification of degree-2 systems by their sign counts alone.

    The closure is the trivial 2-knot when there are no branch points, and
    otherwise the connected sum of p + q unknotted projective planes, p of
    one sign and q of the other.
    """
    if system.degree != 2:
        raise ValueError("classification applies to degree-2 systems")
    signs = [_collapse_degree_two(e) for e in system.entries]
    p = sum(1 for s in signs if s == 1)
    return SurfaceType(p, len(signs) - p)


def normal_euler_number(system: BraidSystem) -> int | None:
    """Normal Euler number, when the data determines it.

    Degree-2 systems give 2(p - q); closed (two-dimensional) systems with
    factored entries give 0; anything else is undetermined here.
    """
    if system.degree == 2:
        try:
            signs = [_collapse_degree_two(e) for e in system.entries]
        except ValueError:
            signs = None
        if signs is not None:
            p = sum(1 for s in signs if s == 1)
            return 2 * p - 2 * (len(signs) - p)
    if all(isinstance(e, MonodromyEntry) for e in system.entries) and is_two_dimensional(
        system
    ):
        return 0
    return None


def staircase(m: int) -> BraidWord:
    """The descending-run braid that turns a closed 2m-braid into a plat.

    The product over k = 1..m-1 of sigma_{2k} sigma_{2k-1} ... sigma_1,
    on 2m strands; trivial when m = 1.
    """
    if m < 1:
        raise ValueError("need m >= 1")
    letters: list[int] = []
    for k in range(1, m):
        letters.extend(range(2 * k, 0, -1))
    return BraidWord(2 * m, tuple(letters))


def to_genuine_plat(system: BraidSystem) -> BraidSystem:
    """Double the degree so the closure becomes a plat with trivial boundary.

    Each entry b of the closed degree-m system becomes Delta b Delta^{-1}
    on 2m strands, with Delta the staircase braid; factored entries keep
    their crossing index and sign, only the conjugator grows.
    """
    if not is_two_dimensional(system):
        raise ValueError("only closed (two-dimensional) systems convert to plats")
    m = system.degree
    delta = staircase(m)
    out: list[Entry] = []
    for e in system.entries:
        if isinstance(e, MonodromyEntry):
            out.append(
                MonodromyEntry(delta * embed(e.conjugator, 2 * m), e.index, e.sign)
            )
        else:
            out.append(delta * embed(e, 2 * m) * delta.inverse())
    return BraidSystem(2 * m, tuple(out))


def ribbon_criterion(system: BraidSystem) -> bool:
    """The symmetric two-entry test: r = 2 and the second entry inverts the first."""
    if system.r != 2:
        return False
    w1, w2 = system.words()
    return braids_equal(w2, w1.inverse())


def system_to_obj(system: BraidSystem) -> dict:
    entries: list = []
    for e in system.entries:
        if isinstance(e, MonodromyEntry):
            entries.append(
                {"conjugator": e.conjugator.text(), "index": e.index, "sign": e.sign}
            )
        else:
            entries.append(e.text())
    return {"degree": system.degree, "entries": entries}


def system_from_obj(obj: dict, promote: bool = False) -> BraidSystem:
    """Build a system from parsed JSON; optionally factor palindromic words."""
    degree = obj["degree"]
    entries: list[Entry] = []
    for item in obj["entries"]:
        if isinstance(item, str):
            word = parse_braid(item, degree)
            if promote:
                factored = as_monodromy(word)
                entries.append(factored if factored is not None else word)
            else:
                entries.append(word)
        else:
            entries.append(
                MonodromyEntry(
                    parse_braid(item["conjugator"], degree),
                    item["index"],
                    item["sign"],
                )
            )
    return BraidSystem(degree, tuple(entries))


def system_to_json(system: BraidSystem) -> str:
    return json.dumps(system_to_obj(system), indent=2)


def system_from_json(text: str, promote: bool = False) -> BraidSystem:
    return system_from_obj(json.loads(text), promote=promote)
