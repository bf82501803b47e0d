"""Banded braids, surgery, admissibility, and the surface compiler."""

import random
from fractions import Fraction

import pytest

from platkit.bands import (
    Band,
    BandedBraid,
    CertificateError,
    Certificates,
    _deletion_events,
    _tail_with_events,
    admissibility_report,
    band_surgery,
    banded_from_json,
    banded_to_json,
    certificates_from_obj,
    certificates_to_obj,
    compile_surface,
    plan_from_json,
    plan_to_json,
    realizing_euler_characteristic,
    search_certificates,
    stabilized_copy,
    surgery_events,
)
from platkit.hilden import HildenExpression, expand_expression
from platkit.plats import Triviality, component_count, plat_closure
from platkit.stabilize import StabilizationProfile, stabilization_tail, stabilize_by_profile
from platkit.systems import is_two_dimensional
from platkit.words import BraidWord, braids_equal, parse_braid, product


def trivial_certs(profile, profile1, profile2, **sides) -> Certificates:
    m = StabilizationProfile.parse(profile).total
    empty = HildenExpression(m)
    return Certificates(
        profile=StabilizationProfile.parse(profile),
        profile1=StabilizationProfile.parse(profile1),
        profile2=StabilizationProfile.parse(profile2),
        gamma=sides.get("gamma", empty),
        gamma_prime=sides.get("gamma_prime", empty),
        delta=sides.get("delta", empty),
        delta_prime=sides.get("delta_prime", empty),
    )


TOY = BandedBraid(BraidWord.identity(4), (Band(2, 1, Fraction(1, 2)),))
TOY_CERTS = trivial_certs("0,0", "0,0", "1")


class TestBand:
    def test_validation(self):
        with pytest.raises(ValueError):
            Band(1, 0, Fraction(1, 2))
        with pytest.raises(ValueError):
            Band(1, 1, Fraction(0))
        with pytest.raises(ValueError):
            Band(1, 1, Fraction(3, 2))

    def test_float_times_become_exact_decimals(self):
        assert Band(1, 1, 0.3).time == Fraction(3, 10)
        assert Band(1, 1, 0.5).time == Fraction(1, 2)


class TestBandedBraid:
    def test_even_strands(self):
        with pytest.raises(ValueError):
            BandedBraid(BraidWord.identity(3))

    def test_slot_range(self):
        with pytest.raises(ValueError):
            BandedBraid(BraidWord.identity(4), (Band(4, 1, Fraction(1, 2)),))

    def test_distinct_times(self):
        with pytest.raises(ValueError):
            BandedBraid(
                BraidWord.identity(4),
                (Band(1, 1, Fraction(1, 2)), Band(2, 1, Fraction(1, 2))),
            )

    def test_bands_sorted_by_time(self):
        bb = BandedBraid(
            BraidWord.identity(4),
            (Band(1, 1, Fraction(2, 3)), Band(2, 1, Fraction(1, 3))),
        )
        assert [b.slot for b in bb.bands] == [2, 1]


class TestSurgery:
    def test_insertion_heights(self):
        # base letters sit at 1/3 and 2/3; bands fall into the gaps
        base = parse_braid("1 1", 2)
        for time, expected in ((Fraction(1, 4), 0), (Fraction(1, 2), 1), (Fraction(9, 10), 2)):
            bb = BandedBraid(base, (Band(1, -1, time),))
            assert surgery_events(bb) == [(expected, -1)]

    def test_letter_height_counts_as_below(self):
        bb = BandedBraid(parse_braid("1 1", 2), (Band(1, 1, Fraction(1, 3)),))
        assert surgery_events(bb) == [(1, 1)]

    def test_toy_surgery(self):
        assert band_surgery(TOY).text() == "2"

    def test_no_bands(self):
        base = parse_braid("2", 4)
        assert band_surgery(BandedBraid(base)) == base

    def test_stacked_bands_keep_time_order(self):
        bb = BandedBraid(
            BraidWord.identity(2),
            (Band(1, 1, Fraction(1, 3)), Band(1, -1, Fraction(2, 3))),
        )
        assert band_surgery(bb).letters == (1, -1)
        assert braids_equal(band_surgery(bb), BraidWord.identity(2))


class TestStabilizedCopy:
    def test_commutes_with_surgery(self):
        rng = random.Random(91)
        for _ in range(25):
            m = rng.randint(1, 2)
            length = rng.randint(0, 5)
            letters = tuple(
                rng.randint(1, 2 * m - 1) * rng.choice((1, -1)) for _ in range(length)
            )
            base = BraidWord(2 * m, letters)
            times = rng.sample(range(1, 20), k=rng.randint(0, 3))
            bands = tuple(
                Band(rng.randint(1, 2 * m - 1), rng.choice((1, -1)), Fraction(t, 20))
                for t in times
            )
            bb = BandedBraid(base, bands)
            profile = StabilizationProfile(tuple(rng.randint(0, 1) for _ in range(m)))
            lhs = band_surgery(stabilized_copy(bb, profile))
            rhs = stabilize_by_profile(band_surgery(bb), profile)
            assert lhs.letters == rhs.letters

    def test_band_data_preserved(self):
        copied = stabilized_copy(TOY, StabilizationProfile((0, 1)))
        assert len(copied.bands) == 1
        assert copied.bands[0].slot == 2
        assert copied.bands[0].sign == 1


class TestAdmissibility:
    def test_toy_admissible(self):
        report = admissibility_report(TOY)
        assert report.admissible
        assert report.base_components == 2
        assert report.surgered_components == 1

    def test_no_bands_admissible(self):
        report = admissibility_report(BandedBraid(BraidWord.identity(2)))
        assert report.admissible

    def test_knotted_base_rejected(self):
        bb = BandedBraid(parse_braid("2 2 2", 4))
        report = admissibility_report(bb)
        assert not report.admissible
        assert report.base_verdict is Triviality.NOT_TRIVIAL

    def test_knotted_surgery_rejected(self):
        bb = BandedBraid(
            BraidWord.identity(4),
            tuple(Band(2, 1, Fraction(k, 4)) for k in (1, 2, 3)),
        )
        report = admissibility_report(bb)
        assert not report.admissible
        assert report.base_verdict is Triviality.CONSISTENT_WITH_TRIVIAL
        assert report.surgered_verdict is Triviality.NOT_TRIVIAL

    def test_realizing_euler_characteristic(self):
        assert realizing_euler_characteristic(TOY) == 2
        assert realizing_euler_characteristic(BandedBraid(BraidWord.identity(2))) == 2
        two_bands = BandedBraid(
            BraidWord.identity(2),
            (Band(1, 1, Fraction(1, 3)), Band(1, -1, Fraction(2, 3))),
        )
        assert realizing_euler_characteristic(two_bands) == 0


class TestTailEvents:
    def test_replay_matches_tail(self):
        rng = random.Random(92)
        profiles = [
            StabilizationProfile(t)
            for t in [
                (1,),
                (2,),
                (1, 0),
                (0, 1),
                (1, 1),
                (2, 0),
                (1, 0, 1),
                (0, 2, 1),
            ]
        ]
        for _ in range(10):
            m = rng.randint(1, 3)
            profiles.append(
                StabilizationProfile(tuple(rng.randint(0, 2) for _ in range(m)))
            )
        for profile in profiles:
            tail = stabilization_tail(profile)
            scaffold, events = _tail_with_events(profile)
            strands = 2 * profile.total
            assert braids_equal(
                BraidWord(strands, tuple(scaffold)), BraidWord.identity(strands)
            )
            rebuilt = list(scaffold)
            for pos, letter in events:
                rebuilt.insert(pos, letter)
            assert tuple(rebuilt) == tail.letters
            # deletion events peel the same tail back to the scaffold
            peeled = list(tail.letters)
            for pos in _deletion_events(profile):
                del peeled[pos]
            assert tuple(peeled) == tuple(scaffold)


class TestCompile:
    def test_toy_plan(self):
        plan = compile_surface(TOY, TOY_CERTS)
        assert plan.degree == 4
        assert plan.chi == 2
        assert [s.name for s in plan.strips] == ["E0", "E1", "E2", "E3", "E4", "E5", "E6"]
        points = [(e.conjugator.text(), e.index, e.sign) for e in plan.branch_points]
        assert points == [("", 2, 1), ("", 2, -1)]
        assert plan.positive_branch_points == 1
        assert plan.negative_branch_points == 1
        assert plan.boundary.letters == ()
        assert is_two_dimensional(plan.as_system())

    def test_toy_strip_details(self):
        plan = compile_surface(TOY, TOY_CERTS)
        by_name = {s.name: s for s in plan.strips}
        e3 = by_name["E3"]
        assert [(b.slot, b.sign, b.position, b.kind) for b in e3.bands] == [
            (2, 1, 0, "surgery")
        ]
        e5 = by_name["E5"]
        assert [(b.slot, b.sign, b.kind) for b in e5.bands] == [(2, -1, "stabilize_top")]
        assert by_name["E1"].bands == ()
        assert by_name["E2"].left is not None and by_name["E2"].right is not None

    def test_bottom_stabilization_branch_point(self):
        # base sigma2 with a cancelling band: the first side needs a new pair
        bb = BandedBraid(parse_braid("2", 4), (Band(2, -1, Fraction(1, 2)),))
        certs = trivial_certs("0,0", "1", "0,0")
        plan = compile_surface(bb, certs)
        points = [(e.conjugator.text(), e.index, e.sign) for e in plan.branch_points]
        assert points == [("", 2, 1), ("", 2, -1)]
        kinds = [b.kind for s in plan.strips for b in s.bands]
        assert kinds == ["stabilize_bottom", "surgery"]
        assert plan.chi == 2

    def test_projective_plane(self):
        bb = BandedBraid(BraidWord.identity(2), (Band(1, 1, Fraction(1, 2)),))
        certs = trivial_certs("0", "0", "0", delta=HildenExpression(1, ((0, 1),)))
        plan = compile_surface(bb, certs)
        assert plan.chi == 1
        assert len(plan.branch_points) == 1
        assert plan.branch_points[0].sign == 1
        assert plan.boundary.letters == (1,)
        assert not is_two_dimensional(plan.as_system())

    def test_certificate_failures(self):
        with pytest.raises(CertificateError, match="not admissible"):
            compile_surface(BandedBraid(parse_braid("2 2 2", 4)), TOY_CERTS)
        with pytest.raises(CertificateError, match="profile must have"):
            compile_surface(TOY, trivial_certs("0", "0,0", "1"))
        with pytest.raises(CertificateError, match="side profiles"):
            compile_surface(TOY, trivial_certs("0,0", "1", "1"))
        with pytest.raises(CertificateError, match="same size"):
            compile_surface(TOY, trivial_certs("0,0", "0,0", "2"))
        with pytest.raises(CertificateError, match="first side certificate"):
            bad = trivial_certs("0,0", "0,0", "1", gamma=HildenExpression(2, ((0, 1),)))
            compile_surface(TOY, bad)
        with pytest.raises(CertificateError, match="second side certificate"):
            bad = trivial_certs("0,0", "0,0", "1", delta=HildenExpression(2, ((0, 1),)))
            compile_surface(TOY, bad)
        with pytest.raises(CertificateError, match="pairs"):
            bad = trivial_certs("0,0", "0,0", "1", gamma=HildenExpression(3))
            compile_surface(TOY, bad)

    def compile_cases(self):
        two_bands_b2 = BandedBraid(
            BraidWord.identity(2),
            (Band(1, 1, Fraction(1, 3)), Band(1, -1, Fraction(2, 3))),
        )
        two_bands_b4 = BandedBraid(
            BraidWord.identity(4),
            (Band(2, 1, Fraction(1, 3)), Band(2, -1, Fraction(2, 3))),
        )
        cancelling = BandedBraid(parse_braid("2", 4), (Band(2, -1, Fraction(1, 2)),))
        projective = BandedBraid(BraidWord.identity(2), (Band(1, 1, Fraction(1, 2)),))
        return [
            (TOY, TOY_CERTS),
            (two_bands_b2, trivial_certs("0", "0", "0")),
            (two_bands_b4, trivial_certs("0,0", "0,0", "0,0")),
            (cancelling, trivial_certs("0,0", "1", "0,0")),
            (
                projective,
                trivial_certs("0", "0", "0", delta=HildenExpression(1, ((0, 1),))),
            ),
        ]

    def test_branch_product_is_boundary(self):
        for bb, certs in self.compile_cases():
            plan = compile_surface(bb, certs)
            n = plan.degree
            prod = product([e.word() for e in plan.branch_points], strands=n)
            assert braids_equal(prod, plan.boundary)
            factors = product(
                [expand_expression(e) for e in plan.boundary_factors], strands=n
            )
            assert braids_equal(factors, plan.boundary)

    def test_chi_matches_realizing(self):
        for bb, certs in self.compile_cases():
            plan = compile_surface(bb, certs)
            assert plan.chi == realizing_euler_characteristic(bb)

    def test_strip_relations(self):
        for bb, certs in self.compile_cases():
            plan = compile_surface(bb, certs)
            by_name = {s.name: s for s in plan.strips}
            for name in ("E0", "E6"):
                strip = by_name[name]
                assert braids_equal(strip.bottom, strip.top)
            for name in ("E2", "E4"):
                strip = by_name[name]
                expected = strip.left.inverse() * strip.bottom * strip.right
                assert braids_equal(strip.top, expected)

    def test_surgery_bands_carry_signs(self):
        for bb, certs in self.compile_cases():
            plan = compile_surface(bb, certs)
            marks = [
                b for s in plan.strips for b in s.bands if b.kind == "surgery"
            ]
            assert [(b.slot, b.sign) for b in marks] == [
                (b.slot, b.sign) for b in bb.bands
            ]

    def test_branch_point_count(self):
        for bb, certs in self.compile_cases():
            plan = compile_surface(bb, certs)
            m = certs.profile.total
            c1 = certs.profile1.pairs
            c2 = certs.profile2.pairs
            expected = (m - c1) + len(bb.bands) + (m - c2)
            assert len(plan.branch_points) == expected


class TestSearch:
    def test_toy_search(self):
        certs = search_certificates(TOY, 2)
        assert certs is not None
        obj = certificates_to_obj(certs)
        assert obj == {
            "profile": "0,0",
            "profile1": "0,0",
            "profile2": "1",
            "gamma": "m=2",
            "gamma_prime": "m=2",
            "delta": "m=2",
            "delta_prime": "m=2",
        }
        compile_surface(TOY, certs)

    def test_trivial_banded_braid(self):
        certs = search_certificates(BandedBraid(BraidWord.identity(2)), 1)
        assert certs is not None
        assert certs.profile.text() == "0"
        assert certs.gamma.factors == ()

    def test_projective_search(self):
        bb = BandedBraid(BraidWord.identity(2), (Band(1, 1, Fraction(1, 2)),))
        certs = search_certificates(bb, 1)
        assert certs is not None
        plan = compile_surface(bb, certs)
        assert plan.chi == 1

    def test_bound_too_small_is_cheap(self):
        # the pair floor test runs before any admissibility work
        big = BandedBraid(parse_braid("2 2 2", 4))
        assert search_certificates(big, 0) is None
        assert search_certificates(TOY, 1) is None

    def test_inadmissible_raises(self):
        with pytest.raises(ValueError, match="not admissible"):
            search_certificates(BandedBraid(parse_braid("2 2 2", 4)), 2)

    def test_found_certificates_always_compile(self):
        cases = [
            TOY,
            BandedBraid(
                BraidWord.identity(2),
                (Band(1, 1, Fraction(1, 3)), Band(1, -1, Fraction(2, 3))),
            ),
            BandedBraid(parse_braid("2", 4), (Band(2, -1, Fraction(1, 2)),)),
        ]
        for bb in cases:
            certs = search_certificates(bb, 2)
            assert certs is not None
            plan = compile_surface(bb, certs)
            assert plan.chi == realizing_euler_characteristic(bb)


class TestSerialization:
    def test_banded_round_trip(self):
        text = banded_to_json(TOY)
        assert banded_from_json(text) == TOY

    def test_banded_time_formats(self):
        bb = banded_from_json(
            '{"strands": 2, "base": "", "bands": [{"slot": 1, "sign": 1, "time": 0.3},'
            ' {"slot": 1, "sign": -1, "time": "2/3"}]}'
        )
        assert [b.time for b in bb.bands] == [Fraction(3, 10), Fraction(2, 3)]

    def test_certificates_round_trip(self):
        certs = trivial_certs("0,0", "0,0", "1", gamma=HildenExpression(2, ((0, 1), (1, -1))))
        assert certificates_from_obj(certificates_to_obj(certs)) == certs

    def test_plan_round_trip(self):
        plan = compile_surface(TOY, TOY_CERTS)
        assert plan_from_json(plan_to_json(plan)) == plan
