"""Braid systems: slides, Hurwitz search, surface invariants, conversions."""

import random

import pytest

from platkit.systems import (
    BraidSystem,
    HurwitzStatus,
    MonodromyEntry,
    SurfaceType,
    apply_slides,
    as_monodromy,
    boundary_braid,
    branch_signs,
    classify_degree_two,
    entry_word,
    hurwitz_search,
    is_two_dimensional,
    normal_euler_number,
    plat_euler_characteristic,
    ribbon_criterion,
    slide,
    staircase,
    system_from_json,
    system_to_json,
    to_genuine_plat,
)
from platkit.words import (
    BraidWord,
    braids_equal,
    exponent_sum,
    parse_braid,
    strand_permutation,
)


def random_word(rng: random.Random, strands: int, length: int) -> BraidWord:
    letters = []
    for _ in range(length):
        g = rng.randint(1, strands - 1)
        letters.append(g if rng.random() < 0.5 else -g)
    return BraidWord(strands, tuple(letters))


def random_system(rng: random.Random, degree: int, r: int) -> BraidSystem:
    entries = []
    for _ in range(r):
        if rng.random() < 0.5:
            entries.append(
                MonodromyEntry(
                    random_word(rng, degree, rng.randint(0, 3)),
                    rng.randint(1, degree - 1),
                    rng.choice((1, -1)),
                )
            )
        else:
            entries.append(random_word(rng, degree, rng.randint(1, 4)))
    return BraidSystem(degree, tuple(entries))


def invariant_data(system: BraidSystem):
    return (
        sorted(exponent_sum(w) for w in system.words()),
        sorted(strand_permutation(w).cycle_type() for w in system.words()),
    )


class TestEntries:
    def test_monodromy_word(self):
        e = MonodromyEntry(parse_braid("1 2", 3), 2, -1)
        assert e.word().letters == (1, 2, -2, -2, -1)

    def test_monodromy_validation(self):
        with pytest.raises(ValueError):
            MonodromyEntry(BraidWord.identity(3), 3, 1)
        with pytest.raises(ValueError):
            MonodromyEntry(BraidWord.identity(3), 1, 0)

    def test_inverse_flips_sign(self):
        e = MonodromyEntry(parse_braid("1", 3), 2, 1)
        assert e.inverse().sign == -1
        assert braids_equal(e.inverse().word(), e.word().inverse())

    def test_as_monodromy_recognizes_mirror_words(self):
        e = as_monodromy(parse_braid("1 2 -1", 3))
        assert e is not None
        assert (e.conjugator.letters, e.index, e.sign) == ((1,), 2, 1)
        bare = as_monodromy(parse_braid("-2", 3))
        assert bare is not None
        assert (bare.conjugator.letters, bare.index, bare.sign) == ((), 2, -1)

    def test_as_monodromy_rejects_others(self):
        assert as_monodromy(parse_braid("1 2", 3)) is None
        assert as_monodromy(parse_braid("1 2 1", 3)) is None
        assert as_monodromy(BraidWord.identity(3)) is None

    def test_as_monodromy_round_trip(self):
        rng = random.Random(71)
        for _ in range(20):
            e = MonodromyEntry(
                random_word(rng, 4, rng.randint(0, 4)),
                rng.randint(1, 3),
                rng.choice((1, -1)),
            )
            back = as_monodromy(e.word())
            assert back == e


class TestSystems:
    def test_degree_check(self):
        with pytest.raises(ValueError):
            BraidSystem(3, (parse_braid("1", 2),))

    def test_r_and_words(self):
        s = BraidSystem(3, (parse_braid("1", 3), MonodromyEntry(BraidWord.identity(3), 2, 1)))
        assert s.r == 2
        assert [w.letters for w in s.words()] == [(1,), (2,)]

    def test_boundary_and_two_dimensional(self):
        s = BraidSystem(3, (parse_braid("1", 3), parse_braid("-1", 3)))
        assert boundary_braid(s).letters == (1, -1)
        assert is_two_dimensional(s)
        assert not is_two_dimensional(BraidSystem(3, (parse_braid("1", 3),)))


class TestSlides:
    def test_forward_formula(self):
        s = BraidSystem(3, (parse_braid("1", 3), parse_braid("2", 3)))
        t = slide(s, 1)
        assert braids_equal(t.words()[0], parse_braid("1 2 -1", 3))
        assert t.words()[1].letters == (1,)

    def test_slot_range(self):
        s = BraidSystem(3, (parse_braid("1", 3), parse_braid("2", 3)))
        with pytest.raises(ValueError):
            slide(s, 0)
        with pytest.raises(ValueError):
            slide(s, 2)

    def test_forward_then_inverse_is_identity(self):
        rng = random.Random(72)
        for _ in range(40):
            s = random_system(rng, rng.randint(2, 4), rng.randint(2, 5))
            j = rng.randint(1, s.r - 1)
            back = slide(slide(s, j), j, inverse=True)
            for a, b in zip(back.words(), s.words()):
                assert braids_equal(a, b)

    def test_slide_braid_relation(self):
        rng = random.Random(73)
        for _ in range(25):
            s = random_system(rng, rng.randint(2, 4), 3)
            lhs = slide(slide(slide(s, 1), 2), 1)
            rhs = slide(slide(slide(s, 2), 1), 2)
            for a, b in zip(lhs.words(), rhs.words()):
                assert braids_equal(a, b)

    def test_far_slides_commute(self):
        rng = random.Random(74)
        for _ in range(25):
            s = random_system(rng, rng.randint(2, 4), 4)
            lhs = slide(slide(s, 1), 3)
            rhs = slide(slide(s, 3), 1)
            for a, b in zip(lhs.words(), rhs.words()):
                assert braids_equal(a, b)

    def test_invariants_preserved(self):
        rng = random.Random(75)
        for _ in range(30):
            s = random_system(rng, rng.randint(2, 4), rng.randint(2, 4))
            j = rng.randint(1, s.r - 1)
            t = slide(s, j, inverse=rng.random() < 0.5)
            assert braids_equal(boundary_braid(t), boundary_braid(s))
            assert invariant_data(t) == invariant_data(s)

    def test_factored_entries_stay_factored(self):
        e1 = MonodromyEntry(parse_braid("1", 3), 2, 1)
        e2 = MonodromyEntry(BraidWord.identity(3), 1, -1)
        s = BraidSystem(3, (e1, e2))
        t = slide(s, 1)
        assert all(isinstance(e, MonodromyEntry) for e in t.entries)
        assert t.entries[0].index == 1 and t.entries[0].sign == -1
        assert t.entries[1] is e1

    def test_apply_slides_replays(self):
        rng = random.Random(76)
        s = random_system(rng, 3, 4)
        moves = [(rng.randint(1, 3), rng.random() < 0.5) for _ in range(5)]
        t = apply_slides(s, moves)
        step = s
        for j, inv in moves:
            step = slide(step, j, inverse=inv)
        for a, b in zip(t.words(), step.words()):
            assert braids_equal(a, b)


class TestHurwitz:
    def test_equal_systems(self):
        s = BraidSystem(3, (parse_braid("1", 3), parse_braid("2", 3)))
        res = hurwitz_search(s, s)
        assert res.status is HurwitzStatus.EQUIVALENT
        assert res.moves == ()

    def test_one_slide_apart(self):
        s1 = BraidSystem(3, (parse_braid("1", 3), parse_braid("2", 3)))
        s2 = BraidSystem(3, (parse_braid("1 2 -1", 3), parse_braid("1", 3)))
        res = hurwitz_search(s1, s2)
        assert res.status is HurwitzStatus.EQUIVALENT
        assert res.moves is not None and len(res.moves) == 1
        replayed = apply_slides(s1, list(res.moves))
        for a, b in zip(replayed.words(), s2.words()):
            assert braids_equal(a, b)

    def test_distant_pair_swap(self):
        s1 = BraidSystem(4, (parse_braid("1", 4), parse_braid("3", 4)))
        s2 = BraidSystem(4, (parse_braid("3", 4), parse_braid("1", 4)))
        res = hurwitz_search(s1, s2)
        assert res.status is HurwitzStatus.EQUIVALENT

    def test_not_equivalent_by_boundary(self):
        s1 = BraidSystem(3, (parse_braid("1", 3),))
        s2 = BraidSystem(3, (parse_braid("2", 3),))
        res = hurwitz_search(s1, s2)
        assert res.status is HurwitzStatus.NOT_EQUIVALENT
        assert res.reason == "boundary braids differ"

    def test_not_equivalent_by_exhaustion(self):
        # both factor sigma1^2 into two transposition-like entries with
        # exponent sum one, but the orbit of (s1, s1) is a fixed point
        s1 = BraidSystem(3, (parse_braid("1", 3), parse_braid("1", 3)))
        s2 = BraidSystem(
            3, (parse_braid("2 1 -2", 3), parse_braid("2 -1 -2 1 1", 3))
        )
        assert braids_equal(boundary_braid(s1), boundary_braid(s2))
        assert invariant_data(s1) == invariant_data(s2)
        res = hurwitz_search(s1, s2)
        assert res.status is HurwitzStatus.NOT_EQUIVALENT
        assert res.reason == "orbit enumerated"
        assert res.explored == 1

    def test_unknown_on_budget(self):
        s1 = BraidSystem(3, (parse_braid("1", 3), parse_braid("2", 3)))
        s2 = BraidSystem(3, (parse_braid("1 2 -1", 3), parse_braid("1", 3)))
        res = hurwitz_search(s1, s2, budget=1)
        assert res.status is HurwitzStatus.UNKNOWN
        assert res.reason == "budget exhausted"

    def test_size_mismatches(self):
        s1 = BraidSystem(3, (parse_braid("1", 3),))
        assert (
            hurwitz_search(s1, BraidSystem(4, (parse_braid("1", 4),))).status
            is HurwitzStatus.NOT_EQUIVALENT
        )
        assert (
            hurwitz_search(s1, BraidSystem(3, ())).status
            is HurwitzStatus.NOT_EQUIVALENT
        )


class TestInvariants:
    def test_plat_euler_characteristic(self):
        s = BraidSystem(4, (parse_braid("1", 4), parse_braid("2", 4)))
        assert plat_euler_characteristic(s) == 2
        with pytest.raises(ValueError):
            plat_euler_characteristic(BraidSystem(3, ()))

    def test_branch_signs(self):
        s = BraidSystem(
            2,
            (
                MonodromyEntry(BraidWord.identity(2), 1, 1),
                MonodromyEntry(BraidWord.identity(2), 1, -1),
                MonodromyEntry(BraidWord.identity(2), 1, 1),
            ),
        )
        assert branch_signs(s) == (2, 1)
        with pytest.raises(ValueError):
            branch_signs(BraidSystem(2, (parse_braid("1", 2),)))

    def test_classify_degree_two(self):
        empty = BraidSystem(2, ())
        assert classify_degree_two(empty) == SurfaceType(0, 0)
        assert str(classify_degree_two(empty)) == "Trivial2Knot"
        one = BraidSystem(2, (parse_braid("1", 2),))
        assert str(classify_degree_two(one)) == "NonorientableSum(1,0)"
        mixed = BraidSystem(
            2,
            (
                MonodromyEntry(parse_braid("1 1", 2), 1, -1),
                parse_braid("1", 2),
                parse_braid("1 1 -1", 2),
            ),
        )
        assert classify_degree_two(mixed) == SurfaceType(2, 1)

    def test_classify_rejects_bad_input(self):
        with pytest.raises(ValueError):
            classify_degree_two(BraidSystem(3, ()))
        with pytest.raises(ValueError):
            classify_degree_two(BraidSystem(2, (parse_braid("1 1 1", 2),)))

    def test_normal_euler_number_degree_two(self):
        s = BraidSystem(2, (parse_braid("1", 2), parse_braid("-1", 2)))
        assert normal_euler_number(s) == 0
        t = BraidSystem(2, (parse_braid("1", 2), parse_braid("1", 2)))
        assert normal_euler_number(t) == 4  # 2(p - q) with p=2, q=0

    def test_normal_euler_number_closed_factored(self):
        e = MonodromyEntry(parse_braid("2", 4), 1, 1)
        s = BraidSystem(4, (e, e.inverse()))
        assert is_two_dimensional(s)
        assert normal_euler_number(s) == 0

    def test_normal_euler_number_undetermined(self):
        s = BraidSystem(4, (parse_braid("1", 4), parse_braid("-1", 4)))
        assert normal_euler_number(s) is None
        t = BraidSystem(4, (MonodromyEntry(BraidWord.identity(4), 1, 1),))
        assert normal_euler_number(t) is None


class TestGenuinePlat:
    def test_staircase(self):
        assert staircase(1).letters == ()
        assert staircase(2).letters == (2, 1)
        assert staircase(3).letters == (2, 1, 4, 3, 2, 1)
        with pytest.raises(ValueError):
            staircase(0)

    def test_requires_closed_system(self):
        with pytest.raises(ValueError):
            to_genuine_plat(BraidSystem(2, (parse_braid("1", 2),)))

    def test_empty_system(self):
        out = to_genuine_plat(BraidSystem(3, ()))
        assert out.degree == 6
        assert out.r == 0

    def test_degree_two_pair(self):
        e = MonodromyEntry(BraidWord.identity(2), 1, 1)
        s = BraidSystem(2, (e, e.inverse()))
        out = to_genuine_plat(s)
        assert out.degree == 4
        delta = staircase(2)
        for got, src in zip(out.words(), s.words()):
            expected = delta * parse_braid(src.text(), 4) * delta.inverse()
            assert braids_equal(got, expected)
        assert is_two_dimensional(out)
        assert all(isinstance(e, MonodromyEntry) for e in out.entries)
        assert [e.index for e in out.entries] == [1, 1]
        assert [e.sign for e in out.entries] == [1, -1]

    def test_preserves_entry_count_and_euler(self):
        rng = random.Random(81)
        for _ in range(15):
            m = rng.randint(1, 3)
            entries = []
            for _ in range(rng.randint(0, 2)):
                if m == 1:
                    break
                w = random_word(rng, m, rng.randint(1, 3))
                entries.extend([w, w.inverse()])
            s = BraidSystem(m, tuple(entries))
            out = to_genuine_plat(s)
            assert out.r == s.r
            assert plat_euler_characteristic(out) == 2 * m - s.r


class TestRibbon:
    def test_symmetric_pair(self):
        u = parse_braid("2 -1", 3)
        w = u * parse_braid("1", 3) * u.inverse()
        s = BraidSystem(3, (w, w.inverse()))
        assert ribbon_criterion(s)

    def test_rejects_non_symmetric(self):
        s = BraidSystem(2, (parse_braid("1", 2), parse_braid("1", 2)))
        assert not ribbon_criterion(s)

    def test_rejects_wrong_entry_count(self):
        assert not ribbon_criterion(BraidSystem(2, ()))
        assert not ribbon_criterion(BraidSystem(2, (parse_braid("1", 2),) * 3))


class TestSerialization:
    def test_round_trip_mixed(self):
        s = BraidSystem(
            3,
            (
                parse_braid("1 2", 3),
                MonodromyEntry(parse_braid("-2", 3), 1, -1),
            ),
        )
        back = system_from_json(system_to_json(s))
        assert back == s

    def test_promote_factors_mirror_words(self):
        text = system_to_json(BraidSystem(3, (parse_braid("2 1 -2", 3),)))
        plain = system_from_json(text)
        assert isinstance(plain.entries[0], BraidWord)
        promoted = system_from_json(text, promote=True)
        assert isinstance(promoted.entries[0], MonodromyEntry)
        assert promoted.entries[0].index == 1

    def test_json_is_deterministic(self):
        s = BraidSystem(2, (parse_braid("1", 2),))
        assert system_to_json(s) == system_to_json(s)
