"""Banded braid words and their compilation into braided surfaces.

A banded braid is a word on 2m strands together with bands: half-twist
surgeries at chosen slots and heights.  Surgering every band inserts one
crossing per band into the word.  When both the original and the surgered
plat close into trivial links, the bands describe a surface-link whose
Euler characteristic is c1 + c2 - (number of bands).

The compiler realises that surface as a braided surface over a square.
Reading the square bottom to top, the cross-section braid evolves through
seven strips:

    E0  trivial               ->  alpha1*  (stabilization scaffold, trivial)
    E1  alpha1*  --bands-->       alpha1   (tail of the first profile)
    E2  alpha1   --sides-->       beta1    (the stabilized base word)
    E3  beta1    --bands-->       beta2    (the stabilized surgered word)
    E4  beta2    --sides-->       alpha2   (tail of the second profile)
    E5  alpha2   --bands-->       alpha2*  (scaffold removed again)
    E6  alpha2*              ->   trivial

The side strips need witnesses: Hilden expressions gamma, gamma' with
beta1 = gamma alpha1 gamma' and delta, delta' with beta2 = delta alpha2
delta'.  Every band event becomes a branch point; insertions carry the
sign of the inserted crossing and the removals in E5 carry the opposite
sign.  Monodromy conjugators are transported along the right-hand edge of
the square, which makes the ordered product of the branch entries equal to
the boundary word gamma^{-1} delta delta' gamma'^{-1}.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .hilden import (
    HildenExpression,
    expand_expression,
    format_expression,
    parse_expression,
    search_membership,
)
from .plats import (
    DEFAULT_BRACKET_BUDGET,
    Triviality,
    component_count,
    plat_closure,
    triviality_check,
)
from .stabilize import StabilizationProfile, stabilize_by_profile, swap_chain
from .systems import BraidSystem, MonodromyEntry
from .words import BraidWord, braids_equal, parse_braid, product


class CertificateError(ValueError):
    """A claimed compilation certificate failed verification."""


@dataclass(frozen=True)
class Band:
    """A half-twist band: slot between strands slot and slot+1, at a height."""

    slot: int
    sign: int
    time: Fraction

    def __post_init__(self) -> None:
        raw = self.time
        # floats go through their decimal string so 0.3 means 3/10 exactly
        time = Fraction(str(raw)) if isinstance(raw, float) else Fraction(raw)
        object.__setattr__(self, "time", time)
        if self.sign not in (1, -1):
            raise ValueError("band sign must be +1 or -1")
        if not 0 < self.time < 1:
            raise ValueError("band time must lie strictly between 0 and 1")


@dataclass(frozen=True)
class BandedBraid:
    base: BraidWord
    bands: tuple[Band, ...] = ()

    def __post_init__(self) -> None:
        if self.base.strands % 2 != 0:
            raise ValueError("banded braids live on an even strand count")
        ordered = tuple(sorted(self.bands, key=lambda b: b.time))
        times = [b.time for b in ordered]
        if len(set(times)) != len(times):
            raise ValueError("band times must be distinct")
        for b in ordered:
            if not 1 <= b.slot <= self.base.strands - 1:
                raise ValueError(f"band slot {b.slot} out of range")
        object.__setattr__(self, "bands", ordered)


def _base_index(band: Band, length: int) -> int:
    """Letters of a length-L word sit at heights k/(L+1); count those below."""
    return sum(1 for k in range(1, length + 1) if Fraction(k, length + 1) <= band.time)


def surgery_events(bb: BandedBraid) -> list[tuple[int, int]]:
    """(insertion position, signed letter) per band, in time order.

    Positions are into the evolving word: band heights are monotone in
    their base positions, so each band's slot in the growing word is its
    base position plus the number of bands already inserted.
    """
    length = len(bb.base)
    events = []
    for rank, band in enumerate(bb.bands):
        events.append((_base_index(band, length) + rank, band.slot * band.sign))
    return events


def band_surgery(bb: BandedBraid) -> BraidWord:
    """The base word with every band's crossing inserted at its height."""
    letters = list(bb.base.letters)
    for pos, letter in surgery_events(bb):
        letters.insert(pos, letter)
    return BraidWord(bb.base.strands, tuple(letters))


def stabilized_copy(bb: BandedBraid, profile: StabilizationProfile) -> BandedBraid:
    """Carry the bands onto the stabilized base, at the same letter gaps."""
    new_base = stabilize_by_profile(bb.base, profile)
    length = len(bb.base)
    new_length = len(new_base)
    by_gap: dict[int, list[Band]] = {}
    for band in bb.bands:
        by_gap.setdefault(_base_index(band, length), []).append(band)
    new_bands = []
    for gap, group in by_gap.items():
        for rank, band in enumerate(group, start=1):
            t = Fraction(gap * (len(group) + 1) + rank, (len(group) + 1) * (new_length + 1))
            new_bands.append(Band(band.slot, band.sign, t))
    return BandedBraid(new_base, tuple(new_bands))


@dataclass(frozen=True)
class AdmissibilityReport:
    base_components: int
    surgered_components: int
    base_verdict: Triviality
    surgered_verdict: Triviality

    @property
    def admissible(self) -> bool:
        return (
            self.base_verdict is Triviality.CONSISTENT_WITH_TRIVIAL
            and self.surgered_verdict is Triviality.CONSISTENT_WITH_TRIVIAL
        )


def admissibility_report(
    bb: BandedBraid, budget: int = DEFAULT_BRACKET_BUDGET
) -> AdmissibilityReport:
    """Check that both the base and the surgered plat close into trivial links."""
    before = plat_closure(bb.base)
    after = plat_closure(band_surgery(bb))
    return AdmissibilityReport(
        base_components=component_count(before),
        surgered_components=component_count(after),
        base_verdict=triviality_check(before, budget),
        surgered_verdict=triviality_check(after, budget),
    )


def realizing_euler_characteristic(bb: BandedBraid) -> int:
    """Euler characteristic of the surface the bands trace between the two links."""
    before = component_count(plat_closure(bb.base))
    after = component_count(plat_closure(band_surgery(bb)))
    return before + after - len(bb.bands)


@dataclass(frozen=True)
class Certificates:
    """Witnesses for one compilation: three profiles and four side expressions."""

    profile: StabilizationProfile
    profile1: StabilizationProfile
    profile2: StabilizationProfile
    gamma: HildenExpression
    gamma_prime: HildenExpression
    delta: HildenExpression
    delta_prime: HildenExpression


@dataclass(frozen=True)
class PlanBand:
    slot: int
    sign: int
    position: int
    kind: str


@dataclass(frozen=True)
class StripRecord:
    """One horizontal strip of the compiled square, read bottom to top."""

    name: str
    bottom: BraidWord
    top: BraidWord
    left: BraidWord | None = None
    right: BraidWord | None = None
    bands: tuple[PlanBand, ...] = ()


@dataclass(frozen=True)
class BraidedSurfacePlan:
    degree: int
    strips: tuple[StripRecord, ...]
    branch_points: tuple[MonodromyEntry, ...]
    boundary: BraidWord
    boundary_factors: tuple[HildenExpression, ...]
    chi: int
    certificates: Certificates

    def as_system(self) -> BraidSystem:
        return BraidSystem(self.degree, self.branch_points)

    @property
    def positive_branch_points(self) -> int:
        return sum(1 for e in self.branch_points if e.sign == 1)

    @property
    def negative_branch_points(self) -> int:
        return sum(1 for e in self.branch_points if e.sign == -1)


def _tail_with_events(
    profile: StabilizationProfile,
) -> tuple[list[int], list[tuple[int, int]]]:
    """Scaffold word of a stabilization tail plus insertions that complete it.

    Returns the tail with its new-pair runs removed (the swap chains and
    their inverses, a word equal to the identity) and the ordered list of
    (position, letter) insertions that rebuild the full tail.
    """
    m = profile.pairs
    strands = 2 * profile.total
    scaffold: list[int] = []
    events: list[tuple[int, int]] = []
    offset = 0
    for i in range(1, m + 1):
        if profile.entries[i - 1] == 0:
            continue
        lo = profile.prefix_total(i - 1)
        hi = profile.prefix_total(i)
        chain = swap_chain(i, lo - 1, m, strands).letters
        scaffold.extend(chain)
        scaffold.extend(-g for g in reversed(chain))
        for j, k in enumerate(range(lo, hi)):
            events.append((offset + len(chain) + j, 2 * k))
        offset += 2 * len(chain) + (hi - lo)
    return scaffold, events


def _deletion_events(profile: StabilizationProfile) -> list[int]:
    """Positions that peel a tail back down to its scaffold, in removal order."""
    m = profile.pairs
    strands = 2 * profile.total
    positions: list[int] = []
    offset = 0
    for i in range(1, m + 1):
        if profile.entries[i - 1] == 0:
            continue
        lo = profile.prefix_total(i - 1)
        hi = profile.prefix_total(i)
        chain_len = len(swap_chain(i, lo - 1, m, strands).letters)
        # deleting at a fixed position eats the whole run left to right
        positions.extend([offset + chain_len] * (hi - lo))
        offset += 2 * chain_len
    return positions


def _suffix_inverse(letters: list[int], start: int) -> tuple[int, ...]:
    return tuple(-g for g in reversed(letters[start:]))


def compile_surface(
    bb: BandedBraid, certs: Certificates, budget: int = DEFAULT_BRACKET_BUDGET
) -> BraidedSurfacePlan:
    """Compile an admissible banded braid and its certificates into a plan.

    Verifies the certificates (side expressions really convert the
    stabilization tails into the stabilized words), then lays out the seven
    strips and derives one branch point per band event, conjugators
    transported along the right edge.  Raises :class:`CertificateError`
    when a verification step fails.
    """
    report = admissibility_report(bb, budget)
    if not report.admissible:
        raise CertificateError("banded braid is not admissible")
    m0 = bb.base.strands // 2
    c1, c2 = report.base_components, report.surgered_components
    lam, lam1, lam2 = certs.profile, certs.profile1, certs.profile2
    if lam.pairs != m0:
        raise CertificateError(f"profile must have {m0} entries")
    if lam1.pairs != c1 or lam2.pairs != c2:
        raise CertificateError(
            f"side profiles must have {c1} and {c2} entries"
        )
    m = lam.total
    if lam1.total != m or lam2.total != m:
        raise CertificateError("all three profiles must stabilize to the same size")
    n = 2 * m
    for expr in (certs.gamma, certs.gamma_prime, certs.delta, certs.delta_prime):
        if expr.pairs != m:
            raise CertificateError(f"side expressions must have {m} pairs")

    beta1 = stabilize_by_profile(bb.base, lam)
    beta2 = stabilize_by_profile(band_surgery(bb), lam)
    alpha1 = stabilize_by_profile(BraidWord.identity(2 * c1), lam1)
    alpha2 = stabilize_by_profile(BraidWord.identity(2 * c2), lam2)

    gamma_w = expand_expression(certs.gamma)
    gamma_p_w = expand_expression(certs.gamma_prime)
    delta_w = expand_expression(certs.delta)
    delta_p_w = expand_expression(certs.delta_prime)

    if not braids_equal(beta1, gamma_w * alpha1 * gamma_p_w):
        raise CertificateError("first side certificate failed")
    if not braids_equal(beta2, delta_w * alpha2 * delta_p_w):
        raise CertificateError("second side certificate failed")

    branch_points: list[MonodromyEntry] = []
    plan_bands: dict[str, list[PlanBand]] = {"E1": [], "E3": [], "E5": []}

    def insert_entry(section: list[int], pos: int, letter: int, r_below: tuple[int, ...]):
        u = BraidWord(n, r_below + _suffix_inverse(section, pos)).free_reduced()
        branch_points.append(
            MonodromyEntry(u, abs(letter), 1 if letter > 0 else -1)
        )
        section.insert(pos, letter)

    def delete_entry(section: list[int], pos: int, r_below: tuple[int, ...]):
        letter = section[pos]
        u = BraidWord(n, r_below + _suffix_inverse(section, pos + 1)).free_reduced()
        branch_points.append(
            MonodromyEntry(u, abs(letter), -1 if letter > 0 else 1)
        )
        del section[pos]

    # E1: rebuild the first tail from its scaffold; no side braids below
    alpha1_star, e1_events = _tail_with_events(lam1)
    section = list(alpha1_star)
    for pos, letter in e1_events:
        plan_bands["E1"].append(PlanBand(abs(letter), 1, pos, "stabilize_bottom"))
        insert_entry(section, pos, letter, ())
    if section != list(alpha1.letters):
        raise AssertionError("tail reconstruction out of step")

    # E3: the carried bands, below them the right edge contributes gamma'
    r_below_e3 = gamma_p_w.letters
    section = list(beta1.letters)
    for pos, letter in surgery_events(bb):
        plan_bands["E3"].append(
            PlanBand(abs(letter), 1 if letter > 0 else -1, pos, "surgery")
        )
        insert_entry(section, pos, letter, r_below_e3)
    if section != list(beta2.letters):
        raise AssertionError("band surgery out of step")

    # E5: peel the second tail; right edge below is gamma' then delta' reversed
    r_below_e5 = (gamma_p_w * delta_p_w.inverse()).letters
    section = list(alpha2.letters)
    for pos in _deletion_events(lam2):
        letter = section[pos]
        plan_bands["E5"].append(
            PlanBand(abs(letter), -1 if letter > 0 else 1, pos, "stabilize_top")
        )
        delete_entry(section, pos, r_below_e5)
    alpha2_star = tuple(section)

    identity = BraidWord.identity(n)
    strips = (
        StripRecord("E0", identity, BraidWord(n, tuple(alpha1_star))),
        StripRecord(
            "E1",
            BraidWord(n, tuple(alpha1_star)),
            alpha1,
            bands=tuple(plan_bands["E1"]),
        ),
        StripRecord("E2", alpha1, beta1, left=gamma_w.inverse(), right=gamma_p_w),
        StripRecord("E3", beta1, beta2, bands=tuple(plan_bands["E3"])),
        StripRecord("E4", beta2, alpha2, left=delta_w, right=delta_p_w.inverse()),
        StripRecord(
            "E5", alpha2, BraidWord(n, alpha2_star), bands=tuple(plan_bands["E5"])
        ),
        StripRecord("E6", BraidWord(n, alpha2_star), identity),
    )

    boundary = (
        gamma_w.inverse() * delta_w * delta_p_w * gamma_p_w.inverse()
    )
    boundary_factors = (
        certs.gamma.inverse(),
        certs.delta,
        certs.delta_prime,
        certs.gamma_prime.inverse(),
    )
    return BraidedSurfacePlan(
        degree=n,
        strips=strips,
        branch_points=tuple(branch_points),
        boundary=boundary,
        boundary_factors=boundary_factors,
        chi=n - len(branch_points),
        certificates=certs,
    )


def _compositions(total: int, parts: int) -> list[tuple[int, ...]]:
    """All tuples of ``parts`` non-negative ints summing to ``total``."""
    if parts == 1:
        return [(total,)]
    out = []
    for head in range(total + 1):
        for rest in _compositions(total - head, parts - 1):
            out.append((head,) + rest)
    return out


def _enumerate_expressions(m: int, depth: int):
    """Distinct Hilden subgroup elements as (expression, word), by BFS depth."""
    from .hilden import hilden_generators
    from .words import artin_fingerprint

    gens = hilden_generators(m)
    steps = []
    for idx, gen in enumerate(gens):
        for exp in (1, -1):
            steps.append((idx, exp, gen if exp == 1 else gen.inverse()))
    identity = BraidWord.identity(2 * m)
    seen = {artin_fingerprint(identity)}
    frontier = [(HildenExpression(m, ()), identity)]
    yield frontier[0]
    for _ in range(depth):
        nxt = []
        for expr, word in frontier:
            for idx, exp, factor in steps:
                new_word = word * factor
                fp = artin_fingerprint(new_word)
                if fp in seen:
                    continue
                seen.add(fp)
                item = (
                    HildenExpression(m, expr.factors + ((idx, exp),)),
                    new_word,
                )
                nxt.append(item)
                yield item
        frontier = nxt


def _find_sides(
    target: BraidWord, middle: BraidWord, m: int, depth: int
) -> tuple[HildenExpression, HildenExpression] | None:
    """Expressions (left, right) with target = left * middle * right."""
    for left_expr, left_word in _enumerate_expressions(m, depth):
        needed = middle.inverse() * left_word.inverse() * target
        right_expr = search_membership(needed.free_reduced(), depth)
        if right_expr is not None:
            return left_expr, right_expr
    return None


def search_certificates(
    bb: BandedBraid,
    max_pairs: int,
    max_factors: int = 3,
    budget: int = DEFAULT_BRACKET_BUDGET,
) -> Certificates | None:
    """Look for compilation certificates with at most ``max_pairs`` total pairs.

    Profiles are enumerated by total size and, for each size, side
    expressions are searched with increasing factor budgets, so small
    certificates are found before large ones.  Returns None when the bounds
    are exhausted.
    """
    m0 = bb.base.strands // 2
    c1 = component_count(plat_closure(bb.base))
    c2 = component_count(plat_closure(band_surgery(bb)))
    if max(m0, c1, c2) > max_pairs:
        return None
    report = admissibility_report(bb, budget)
    if not report.admissible:
        raise ValueError("banded braid is not admissible")

    surgered = band_surgery(bb)
    for m in range(max(m0, c1, c2), max_pairs + 1):
        lams = [StabilizationProfile(t) for t in _compositions(m - m0, m0)]
        lam1s = [StabilizationProfile(t) for t in _compositions(m - c1, c1)]
        lam2s = [StabilizationProfile(t) for t in _compositions(m - c2, c2)]
        for depth in range(max_factors + 1):
            for lam in lams:
                beta1 = stabilize_by_profile(bb.base, lam)
                beta2 = stabilize_by_profile(surgered, lam)
                for lam1 in lam1s:
                    alpha1 = stabilize_by_profile(BraidWord.identity(2 * c1), lam1)
                    first = _find_sides(beta1, alpha1, m, depth)
                    if first is None:
                        continue
                    for lam2 in lam2s:
                        alpha2 = stabilize_by_profile(BraidWord.identity(2 * c2), lam2)
                        second = _find_sides(beta2, alpha2, m, depth)
                        if second is None:
                            continue
                        return Certificates(
                            profile=lam,
                            profile1=lam1,
                            profile2=lam2,
                            gamma=first[0],
                            gamma_prime=first[1],
                            delta=second[0],
                            delta_prime=second[1],
                        )
    return None


def banded_to_obj(bb: BandedBraid) -> dict:
    return {
        "strands": bb.base.strands,
        "base": bb.base.text(),
        "bands": [
            {"slot": b.slot, "sign": b.sign, "time": str(b.time)} for b in bb.bands
        ],
    }


def banded_from_obj(obj: dict) -> BandedBraid:
    strands = obj["strands"]
    base = parse_braid(obj.get("base", ""), strands)
    bands = []
    for item in obj.get("bands", []):
        raw = item["time"]
        time = Fraction(raw) if isinstance(raw, str) else Fraction(str(raw))
        bands.append(Band(item["slot"], item["sign"], time))
    return BandedBraid(base, tuple(bands))


def banded_to_json(bb: BandedBraid) -> str:
    return json.dumps(banded_to_obj(bb), indent=2)


def banded_from_json(text: str) -> BandedBraid:
    return banded_from_obj(json.loads(text))


def certificates_to_obj(certs: Certificates) -> dict:
    return {
        "profile": certs.profile.text(),
        "profile1": certs.profile1.text(),
        "profile2": certs.profile2.text(),
        "gamma": format_expression(certs.gamma),
        "gamma_prime": format_expression(certs.gamma_prime),
        "delta": format_expression(certs.delta),
        "delta_prime": format_expression(certs.delta_prime),
    }


def certificates_from_obj(obj: dict) -> Certificates:
    return Certificates(
        profile=StabilizationProfile.parse(obj["profile"]),
        profile1=StabilizationProfile.parse(obj["profile1"]),
        profile2=StabilizationProfile.parse(obj["profile2"]),
        gamma=parse_expression(obj["gamma"]),
        gamma_prime=parse_expression(obj["gamma_prime"]),
        delta=parse_expression(obj["delta"]),
        delta_prime=parse_expression(obj["delta_prime"]),
    )


def _strip_to_obj(strip: StripRecord) -> dict:
    return {
        "name": strip.name,
        "bottom": strip.bottom.text(),
        "top": strip.top.text(),
        "left": strip.left.text() if strip.left is not None else None,
        "right": strip.right.text() if strip.right is not None else None,
        "bands": [
            {"slot": b.slot, "sign": b.sign, "position": b.position, "kind": b.kind}
            for b in strip.bands
        ],
    }


def plan_to_obj(plan: BraidedSurfacePlan) -> dict:
    return {
        "degree": plan.degree,
        "chi": plan.chi,
        "boundary": plan.boundary.text(),
        "boundary_factors": [format_expression(e) for e in plan.boundary_factors],
        "branch_points": [
            {"conjugator": e.conjugator.text(), "index": e.index, "sign": e.sign}
            for e in plan.branch_points
        ],
        "strips": [_strip_to_obj(s) for s in plan.strips],
        "certificates": certificates_to_obj(plan.certificates),
    }


def plan_from_obj(obj: dict) -> BraidedSurfacePlan:
    degree = obj["degree"]

    def word(text: str | None) -> BraidWord | None:
        return None if text is None else parse_braid(text, degree)

    strips = tuple(
        StripRecord(
            name=s["name"],
            bottom=word(s["bottom"]),
            top=word(s["top"]),
            left=word(s["left"]),
            right=word(s["right"]),
            bands=tuple(
                PlanBand(b["slot"], b["sign"], b["position"], b["kind"])
                for b in s["bands"]
            ),
        )
        for s in obj["strips"]
    )
    branch_points = tuple(
        MonodromyEntry(parse_braid(e["conjugator"], degree), e["index"], e["sign"])
        for e in obj["branch_points"]
    )
    return BraidedSurfacePlan(
        degree=degree,
        strips=strips,
        branch_points=branch_points,
        boundary=parse_braid(obj["boundary"], degree),
        boundary_factors=tuple(
            parse_expression(t) for t in obj["boundary_factors"]
        ),
        chi=obj["chi"],
        certificates=certificates_from_obj(obj["certificates"]),
    )


def plan_to_json(plan: BraidedSurfacePlan) -> str:
    return json.dumps(plan_to_obj(plan), indent=2)


def plan_from_json(text: str) -> BraidedSurfacePlan:
    return plan_from_obj(json.loads(text))
