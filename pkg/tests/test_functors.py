from __future__ import annotations

import pytest

from orbiflip import (
    IdealImage,
    PreconditionKLevel,
    PushforwardNotClosedForm,
    Unsupported,
    WeightSequence,
    adjunction_check,
    apply,
    as_complex,
    equivalence_suite,
    example51_verify,
    roundtrip_check,
)
from orbiflip.functors import (
    FunctorSpec,
    pull_complex,
    pushforward_oracle_suite,
    serre_duality_suite,
)


def seq(text: str) -> WeightSequence:
    return WeightSequence.parse(text)


ATIYAH = seq("1,1;1,1")
FLOP = seq("1,2;1,1,1")


class TestFunctorSpecs:
    def test_pipelines(self):
        f = FunctorSpec.for_sequence("F", FLOP)
        assert (f.pull_side, f.push_side, f.ebar_power) == ("minus", "plus", 0)
        g = FunctorSpec.for_sequence("G", FLOP)
        assert (g.pull_side, g.push_side, g.ebar_power) == ("plus", "minus", 2)
        h = FunctorSpec.for_sequence("H", FLOP)
        assert h.ebar_power == FLOP.sum_b - 1
        gp = FunctorSpec.for_sequence("Gprime", seq("1,1;2,1"))
        assert gp.ebar_power == -1


class TestApply:
    def test_f_image_is_threshold_ideal(self):
        for k in range(1, 6):
            image = apply(ATIYAH, "F", k)
            assert isinstance(image, IdealImage)
            assert (image.side, image.index, image.twist) == ("plus", k, -k)

    def test_f_of_structure_sheaf(self):
        image = apply(ATIYAH, "F", 0)
        assert image.summary()["terms"] == {"0": [0]}

    def test_gf_complex_terms(self):
        image = as_complex(FLOP, apply(FLOP, "F", 1))
        out = apply(FLOP, "G", image)
        assert out.summary()["terms"] == {"-1": [-2], "0": [-1, 0]}

    def test_not_closed_form_propagates(self):
        # F' on O(0) for a flip with sum(b) - sum(a) = 1 leaves closed form.
        flip = seq("1,1;2,1")
        with pytest.raises(PushforwardNotClosedForm):
            apply(flip, "Fprime", 0)

    def test_twist_commutation(self):
        # apply(G, cx tensor O(t)) = apply(G, cx) tensor O(-t), structurally;
        # the flip's K-level gap leaves room for t = -1 in closed form.
        flip = seq("1,1;2,1")
        mid = as_complex(flip, apply(flip, "F", 1))
        base = apply(flip, "G", mid)
        shifted = apply(flip, "G", mid.tensor(-1))
        assert shifted.terms == base.tensor(1).terms
        assert shifted.diffs == base.diffs


class TestRoundtrips:
    def test_atiyah_gf_identity(self):
        rep = roundtrip_check(ATIYAH, 0, "GF")
        assert rep.verdict

    def test_francia_flop_gf(self):
        assert roundtrip_check(FLOP, 1, "GF").verdict

    def test_wrong_direction_raises(self):
        with pytest.raises(PreconditionKLevel):
            roundtrip_check(seq("2,1;1,1"), 0, "GF")

    def test_primed_pairs_on_flop(self):
        assert roundtrip_check(ATIYAH, 0, "G'F'").verdict
        assert roundtrip_check(ATIYAH, 2, "H'F'").verdict

    def test_flip_primed_pair_in_range(self):
        flip = seq("1,1;2,1")
        assert roundtrip_check(flip, 2, "G'F'").verdict
        assert roundtrip_check(flip, 1, "H'F'").verdict

    def test_intermediate_ebar_powers_recorded(self):
        rep = roundtrip_check(FLOP, 2, "GF")
        top = FLOP.sum_b - 1
        assert all(0 <= p <= top for p in rep.details["ebar_powers"])

    def test_report_serializes(self):
        rep = roundtrip_check(ATIYAH, 1, "HF")
        data = rep.to_json_dict()
        assert data["schema"] == "orbiflip/1"
        assert data["verdict"] is True


class TestEquivalenceSuite:
    def test_atiyah_small_range(self):
        rep = equivalence_suite(ATIYAH, range(0, 3))
        assert rep.verdict
        # GF, HF, G'F', H'F' for each k, plus the mirrored GF/HF pairs.
        assert len(rep.children) == 3 * 4 + 3 * 2

    def test_flip_runs_unprimed_and_in_range_primed(self):
        rep = equivalence_suite(seq("1,1;2,1"), range(0, 3))
        assert rep.verdict
        pairs = [c.inputs["pair"] for c in rep.children]
        assert pairs.count("GF") == 3
        assert pairs.count("G'F'") == 2  # k >= sum(b) - sum(a) = 1

    def test_threaded_matches_serial(self):
        serial = equivalence_suite(ATIYAH, range(0, 2))
        threaded = equivalence_suite(ATIYAH, range(0, 2), threads=4)
        assert [c.inputs for c in serial.children] == [
            c.inputs for c in threaded.children
        ]
        assert serial.verdict == threaded.verdict


class TestAdjunction:
    def test_structure_sheaves(self):
        assert adjunction_check(ATIYAH, 0, 0).verdict

    def test_flop_mixed_twists(self):
        assert adjunction_check(FLOP, 1, 0).verdict

    def test_degenerate_box_vacuous(self):
        rep = adjunction_check(ATIYAH, 0, 0, box=0)
        assert rep.verdict


class TestSuites:
    def test_pushforward_oracle_small(self):
        rep = pushforward_oracle_suite(ATIYAH, s_box=3, char_box=4)
        assert rep.verdict
        ncf_rows = [r for r in rep.details["rows"] if r["image"] == "NotClosedForm"]
        assert ncf_rows and ncf_rows[0]["fiber_cohomology"][ATIYAH.n - 1] > 0

    def test_serre_suite(self):
        assert serre_duality_suite([(1, 1), (1, 2)], k_bound=6).verdict

    def test_example51_small(self):
        rep = example51_verify(s_values=(0, 1), box=4)
        assert rep.verdict

    def test_example51_rejects_other_sequences(self):
        with pytest.raises(Unsupported):
            example51_verify(seq("1,1;1,1"))


class TestSheafLevelCrossCheck:
    def test_single_twist_hypercohomology_matches_table(self):
        # The Cech double complex engine and the memoized pattern tables are
        # different code paths; on one-term complexes they must agree.
        from orbiflip import cohomology_table, hypercohomology_table
        from orbiflip.linalg import single_twist_complex

        for space, twist in [("minus", 0), ("minus", -2), ("plus", 1), ("Y", (1, 1))]:
            cx = single_twist_complex(FLOP, space, twist)
            assert hypercohomology_table(cx, 3) == cohomology_table(
                FLOP, space, twist, 3
            ), (space, twist)

    def test_roundtrip_quasi_isomorphism_at_sheaf_level(self):
        # Beyond section strands: the full Cech hypercohomology of the GF
        # complex must equal the cohomology table of O(k), higher rows
        # included.  Both tables are clipped to the common exponent range
        # (the complex's offset envelope widens its enumeration region).
        from orbiflip import cohomology_table, hypercohomology_table

        def clip(table, bound):
            return {
                ch: dims
                for ch, dims in table.items()
                if all(-bound <= e <= bound for e in ch.alpha + ch.beta)
            }

        k = 1
        mid = as_complex(FLOP, apply(FLOP, "F", k))
        out = apply(FLOP, "G", mid)
        left = clip(hypercohomology_table(out, 3), 3)
        right = clip(cohomology_table(FLOP, "minus", k, 3), 3)
        assert left == right
        assert any(0 not in dims for dims in right.values()) or right


class TestSweepInvariant:
    def test_small_flop_sweep(self):
        # Round trips hold for every small well-formed flop in this family.
        for text in ["1,1;1,1", "1,2;1,2", "2,1;1,2"]:
            s = seq(text)
            if s.klevel() != 0 or s.sum_a > s.sum_b:
                continue
            for k in range(0, 3):
                assert roundtrip_check(s, k, "GF").verdict, (text, k)
                assert roundtrip_check(s, k, "HF").verdict, (text, k)

    def test_corkey_family_sample(self):
        # Deterministic sample of the well-formed m,n >= 2 family with
        # entries <= 4 and sum(a) <= sum(b): GF/HF for k in [0,6], primed
        # pairs from sum(b) - 1 on; every intermediate Ebar power inside GF
        # stays in [0, sum(a) - 1].
        from orbiflip import is_well_formed

        family = [
            "1,1;1,1",
            "1,2;1,2",
            "1,2;2,1",
            "1,3;1,3",
            "1,1;1,2",
            "1,1;2,2",  # not well-formed; must be skipped
            "1,2;1,1,1",
            "1,1;1,1,2",
            "2,3;1,4",
            "1,4;2,3",
            "1,1,2;1,3",
        ]
        checked = 0
        for text in family:
            s = seq(text)
            if not is_well_formed(s) or s.sum_a > s.sum_b:
                continue
            for k in (0, 2, 4, 6):
                gf = roundtrip_check(s, k, "GF")
                assert gf.verdict, (text, k)
                top = s.sum_a - 1
                assert all(0 <= p <= top for p in gf.details["ebar_powers"]), (
                    text,
                    k,
                    gf.details["ebar_powers"],
                )
                assert roundtrip_check(s, k, "HF").verdict, (text, k)
                if k >= s.sum_b - 1:
                    assert roundtrip_check(s, k, "G'F'").verdict, (text, k)
                    assert roundtrip_check(s, k, "H'F'").verdict, (text, k)
                checked += 1
        assert checked >= 20
