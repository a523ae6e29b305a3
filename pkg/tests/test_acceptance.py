"""Acceptance suite: the eight exit criteria, all integer-exact (tolerance zero).

Each criterion prints one PASS/FAIL line with its runtime (visible with
pytest -s, or on failure).  Budgets are stated per criterion; all checks are
exact property verification at desk scale.
"""

from __future__ import annotations

import itertools
import time

from orbiflip import (
    IdealImage,
    WeightSequence,
    apply,
    atlas_report,
    canonical_extension,
    classify,
    equivalence_suite,
    example51_verify,
    minimal_resolution_degrees,
    verify_degree_bounds,
    wps_cohomology_totals,
)
from orbiflip.functors import pushforward_oracle_suite
from orbiflip.weights import KIND_FLIP, KIND_FLOP


def seq(text: str) -> WeightSequence:
    return WeightSequence.parse(text)


def report(name: str, ok: bool, started: float, budget: float) -> None:
    elapsed = time.time() - started
    print(f"[{'PASS' if ok else 'FAIL'}] {name} ({elapsed:.1f}s, budget {budget:.0f}s)")
    assert ok, name
    assert elapsed < budget, f"{name} exceeded its {budget:.0f}s budget ({elapsed:.1f}s)"


def test_criterion_1_lemma_graded_sweep():
    started = time.time()
    ok = True
    for m in range(1, 5):
        for weights in itertools.product(range(1, 7), repeat=m):
            for k in range(0, 13):
                res = minimal_resolution_degrees(weights, k)
                if not verify_degree_bounds(res):
                    ok = False
    report(
        "criterion 1: resolution degrees satisfy k <= e < k + sum(a) "
        "for all m <= 4, entries <= 6, k <= 12",
        ok,
        started,
        60,
    )


def test_criterion_2_pushforward_oracle_agreement():
    started = time.time()
    ok = True
    for text in ["1,1;1,1", "1,2;1,1,1", "1,5;2,3", "1,2,3;1,5"]:
        rep = pushforward_oracle_suite(seq(text), s_box=6, char_box=6)
        ok = ok and rep.verdict
    report(
        "criterion 2: closed-form pushforwards match the Cech oracle; "
        "q = -sum(b) exhibits a nonzero higher direct image",
        ok,
        started,
        120,
    )


def test_criterion_3_roundtrip_equivalences():
    started = time.time()
    ok = True
    for text in ["1,1;1,1", "1,2;1,1,1", "1,2,3;1,5"]:
        rep = equivalence_suite(seq(text), range(0, 7))
        ok = ok and rep.verdict
    flip = equivalence_suite(seq("1,1;2,1"), range(0, 7))
    ok = ok and flip.verdict
    report(
        "criterion 3: round-trip equivalences on three flops and "
        "full-faithfulness on the flip (1,1;2,1), k in [0,6]",
        ok,
        started,
        300,
    )


def test_criterion_4_f_image_identity():
    started = time.time()
    ok = True
    for text in ["1,1;1,1", "1,2;1,1,1", "1,5;2,3", "1,2,3;1,5", "1,1;2,1"]:
        s = seq(text)
        for k in range(0, 9):
            image = apply(s, "F", k)
            if k == 0:
                good = (
                    not isinstance(image, IdealImage)
                    and image.summary()["terms"] == {"0": [0]}
                )
            else:
                good = isinstance(image, IdealImage) and (
                    image.side,
                    image.index,
                    image.twist,
                ) == ("plus", k, -k)
            ok = ok and good
    report(
        "criterion 4: F(O(k)) = I_k^+(-k) as twist data for k in [0,8]",
        ok,
        started,
        10,
    )


def test_criterion_5_serre_duality():
    started = time.time()
    ok = True
    for weights in [(1, 1), (1, 2), (1, 1, 2), (1, 2, 3)]:
        dim = len(weights) - 1
        for k in range(-12, 13):
            left = wps_cohomology_totals(weights, k)
            right = wps_cohomology_totals(weights, -sum(weights) - k)
            if left != right[::-1]:
                ok = False
        assert dim + 1 == len(wps_cohomology_totals(weights, 0))
    report(
        "criterion 5: h^i(O(k)) = h^(dim-i)(O(-sum-k)) on P(1,1), P(1,2), "
        "P(1,1,2), P(1,2,3) for |k| <= 12, exactly",
        ok,
        started,
        30,
    )


def test_criterion_6_cotangent_example():
    started = time.time()
    rep = example51_verify()
    report(
        "criterion 6: transformed cotangent object on (1,2;1,1,1) has the "
        "skyscraper signature (degree 1, dim 1 at odd twists, 0 at even)",
        rep.verdict,
        started,
        60,
    )


def test_criterion_7_chart_and_classification_facts():
    started = time.time()
    ok = classify(seq("1,1;1,1")).kind == KIND_FLOP
    francia = classify(seq("2,1;1,1"))
    ok = ok and francia.kind == KIND_FLIP and francia.klevel == 1

    entries = atlas_report(seq("1,2;1,1,1"))
    minus_sing = [e for e in entries if e.space == "minus" and not e.chart.is_trivial()]
    ok = ok and len(minus_sing) == 1
    ok = ok and minus_sing[0].chart.group_orders == (2,)
    ok = ok and minus_sing[0].chart.weight_rows == ((1, 1, 1, 1),)
    ok = ok and all(e.chart.is_trivial() for e in entries if e.space == "plus")
    y_sing = [e for e in entries if e.space == "Y" and not e.chart.is_trivial()]
    ok = ok and len(y_sing) == 3
    for e in y_sing:
        forms = [nf.weights for nf in e.normal_forms if nf.order == 2]
        ok = ok and forms == [(0, 0, 1, 1)]  # A_1 transverse type
    ok = ok and all(e.small for e in entries)
    report(
        "criterion 7: Atiyah flop, Francia flip, the 1/2(1,1,1,1) point, "
        "smooth X+, A_1 locus on Y, all actions small",
        ok,
        started,
        5,
    )


def test_criterion_8_five_case_canonical_extension():
    started = time.time()
    target = (tuple(sorted((1, 2, 3))), tuple(sorted((1, 5))))
    ok = True
    for text in ["1,2,3;5", "1,2,3;1", "1,5;2,3", "1,5;1,2", "1,5;1,3"]:
        ext = canonical_extension(seq(text))
        got = (tuple(sorted(ext.a)), tuple(sorted(ext.b)))
        ok = ok and got in (target, (target[1], target[0]))
    report(
        "criterion 8: the five contraction/flip sequences with (a,b) = (2,3) "
        "extend to a permutation of (1,2,3;1,5)",
        ok,
        started,
        1,
    )
