"""Closed-form constructions against the enumerative classifier."""

import pytest

from aswcurves.curves import (
    CurveSpec,
    brute_count,
    classify_small_kernel,
    classify_subfield_kernel,
    classify_twists,
    extremal_from_subspace,
    hermitian_twist,
    palindromic_family,
    recover_head,
)
from aswcurves.errors import (
    FieldTooSmall,
    FOneNonzero,
    HypothesisFailed,
    OddDegree,
    PairingConditionFailed,
    RootsNotSimple,
)
from aswcurves.gf2field import Fp2Subspace, make_field
from aswcurves.witt2 import psi_char, q_char

F4 = make_field(2)
F8 = make_field(3)
F16 = make_field(4)
F64 = make_field(6)
F16_P4 = make_field(4, None, 2)
F256_P4 = make_field(8, None, 2)
W = 0b10

SINGLE_HEADS_16 = [(0, 1), (0, 8), (0, 10), (0, 12), (0, 15)]
DOUBLE_HEADS_16 = [(0, 0, 1), (0, 0, 6), (0, 0, 7)]


def param_sets(tc):
    return (tc.extremal_parameters, tc.maximal_parameters, tc.minimal_parameters)


def twist_sets(tc):
    return (tc.maximal_twists, tc.minimal_twists, tc.neutral_twists)


def admissible_parameters(ctx, space, q_deg):
    """Twist parameters matching the quadratic character on the subspace."""
    return [
        t
        for t in ctx.subfield_elements(q_deg)
        if all(
            not v or q_char(ctx, v, q_deg) == psi_char(ctx, ctx.mul(t, v), q_deg)
            for v in space.elements()
        )
    ]


class TestRecipe:
    def test_span_one_over_f4(self):
        rec = extremal_from_subspace(Fp2Subspace.from_vectors(F4, [1]), W, 2)
        assert rec.curve == CurveSpec(F4, 2, (0, 1))
        assert rec.parameter == W
        assert rec.is_maximal
        assert rec.lpoly.point_count(1) == 9
        assert rec.counting_checked

    def test_span_one_over_f16_hits_both_signs(self):
        space = Fp2Subspace.from_vectors(F16, [1])
        admissible = admissible_parameters(F16, space, 4)
        assert len(admissible) == 8
        verdicts = set()
        for t in admissible:
            rec = extremal_from_subspace(space, t, 4)
            assert rec.lpoly.is_extremal
            assert rec.counting_checked
            verdicts.add(rec.is_maximal)
        assert verdicts == {True, False}

    def test_parameters_agree_with_classifier(self):
        space = Fp2Subspace.from_vectors(F16, [1])
        admissible = admissible_parameters(F16, space, 4)
        rec = extremal_from_subspace(space, admissible[0], 4)
        tc = classify_twists(rec.curve.head(), datum=rec.datum)
        assert tuple(admissible) == tc.extremal_parameters
        maximal = [
            t for t in admissible if extremal_from_subspace(space, t, 4).is_maximal
        ]
        assert tuple(maximal) == tc.maximal_parameters

    def test_two_dimensional_subspace(self):
        hits = 0
        for v in range(2, 16):
            space = Fp2Subspace.from_vectors(F16, [1, v])
            if space.dim_p != 2:
                continue
            for t in admissible_parameters(F16, space, 4):
                rec = extremal_from_subspace(space, t, 4)
                assert rec.datum.e == 2
                assert rec.curve.genus == 2
                assert rec.counting_checked
                hits += 1
        assert hits > 0

    def test_rescaling_reaches_every_maximal_twist(self):
        target = CurveSpec(F16, 4, (4, 8))
        assert classify_twists(target.head()).twist_class(4) == "maximal"
        space = recover_head(target.head()).adjoint_kernel
        found = False
        for t in admissible_parameters(F16, space, 4):
            rec = extremal_from_subspace(space, t, 4)
            for c in range(1, 16):
                scaled = tuple(
                    F16.mul(F16.pow(c, 1 + F16.p**i), r)
                    for i, r in enumerate(rec.curve.coeffs)
                )
                if scaled == target.coeffs:
                    found = True
        assert found

    def test_pairing_failure(self):
        with pytest.raises(PairingConditionFailed):
            extremal_from_subspace(Fp2Subspace.from_vectors(F4, [1]), 0, 2)

    def test_odd_degree(self):
        with pytest.raises(OddDegree):
            extremal_from_subspace(Fp2Subspace.from_vectors(F4, [1]), 0, 1)

    def test_subspace_must_contain_one(self):
        with pytest.raises(ValueError):
            extremal_from_subspace(Fp2Subspace.from_vectors(F4, [W]), W, 2)

    def test_subspace_must_fit_the_field(self):
        with pytest.raises(ValueError):
            extremal_from_subspace(Fp2Subspace.from_vectors(F16, [1, W]), 0, 2)


class TestSmallKernel:
    def test_matches_classifier_on_all_single_heads(self):
        for coeffs in SINGLE_HEADS_16:
            head = CurveSpec(F16, 4, coeffs)
            fd = recover_head(head)
            tc = classify_small_kernel(fd)
            ref = classify_twists(head, datum=fd)
            assert param_sets(tc) == param_sets(ref), coeffs
            assert twist_sets(tc) == twist_sets(ref), coeffs
            assert not tc.counting_checked

    def test_zero_shift_is_maximal_when_quarter_odd(self):
        fd = recover_head(CurveSpec(F16, 4, (0, 1)))
        tc = classify_small_kernel(fd)
        assert 0 in tc.extremal_parameters
        assert (0 in tc.maximal_parameters) == ((4 // 4) % 2 == 1)

    def test_degree_not_divisible_by_four(self):
        with pytest.raises(HypothesisFailed):
            classify_small_kernel(recover_head(CurveSpec(F4, 2, (0, 1))))
        with pytest.raises(HypothesisFailed):
            classify_small_kernel(recover_head(CurveSpec(F16_P4, 4, (0, 1))))

    def test_kernel_outside_quarter_subfield(self):
        for coeffs in DOUBLE_HEADS_16:
            fd = recover_head(CurveSpec(F16, 4, coeffs))
            with pytest.raises(HypothesisFailed):
                classify_small_kernel(fd)


class TestSubfieldKernel:
    def test_pivot_anchor_over_f4(self):
        head = CurveSpec(F4, 2, (0, 1))
        fd = recover_head(head)
        tc, pivot = classify_subfield_kernel(fd, 1)
        assert pivot == W
        assert F4.sqr(pivot) ^ pivot == 1
        ref = classify_twists(head, datum=fd)
        assert param_sets(tc) == param_sets(ref)
        assert twist_sets(tc) == twist_sets(ref)

    def test_matches_classifier_for_both_subfields(self):
        for coeffs in SINGLE_HEADS_16:
            head = CurveSpec(F16, 4, coeffs)
            fd = recover_head(head)
            ref = classify_twists(head, datum=fd)
            for q1_deg in (1, 2):
                tc, _ = classify_subfield_kernel(fd, q1_deg)
                assert param_sets(tc) == param_sets(ref), (coeffs, q1_deg)
                assert twist_sets(tc) == twist_sets(ref), (coeffs, q1_deg)

    def test_half_degree_pivot_is_maximal(self):
        cases = [
            (CurveSpec(F4, 2, (0, 1)), 1),
            (CurveSpec(F16, 4, (0, 8)), 2),
            (CurveSpec(F16_P4, 4, (0, 1)), 2),
        ]
        for head, q1_deg in cases:
            tc, pivot = classify_subfield_kernel(recover_head(head), q1_deg)
            assert pivot in tc.maximal_parameters, head

    def test_p4_anchor(self):
        fd = recover_head(CurveSpec(F16_P4, 4, (0, 1)))
        tc, pivot = classify_subfield_kernel(fd, 2)
        assert pivot == W
        assert tc.maximal_twists == (0,)
        assert tc.minimal_twists == ()

    def test_subfield_degree_not_a_power_of_p(self):
        fd = recover_head(CurveSpec(F16_P4, 4, (0, 1)))
        with pytest.raises(HypothesisFailed):
            classify_subfield_kernel(fd, 1)

    def test_tower_not_even(self):
        fd = recover_head(CurveSpec(F16, 4, (0, 1)))
        with pytest.raises(HypothesisFailed):
            classify_subfield_kernel(fd, 3)

    def test_kernel_outside_subfield(self):
        fd = recover_head(CurveSpec(F16, 4, (0, 0, 1)))
        with pytest.raises(HypothesisFailed):
            classify_subfield_kernel(fd, 1)


class TestPalindromic:
    def test_linear_anchor_over_f4(self):
        fam = palindromic_family(F4, 2, (1, 1))
        assert fam.order == 2
        assert fam.power == 1
        assert fam.pivot == W
        assert fam.head == CurveSpec(F4, 2, (0, 1))
        assert fam.classification.maximal_twists == (0,)
        assert fam.classification.minimal_twists == ()
        assert fam.classification.counting_checked

    def test_linear_polynomial_tower_two(self):
        fam = palindromic_family(F16, 4, (1, 1))
        assert fam.power == 2
        assert fam.classification.maximal_twists == (1, 6, 7)
        assert fam.classification.minimal_twists == (0,)

    def test_cubic_over_f64(self):
        fam = palindromic_family(F64, 6, (1, 0, 0, 1))
        assert fam.order == 6
        assert fam.head == CurveSpec(F64, 6, (0, 0, 0, 1))
        ref = classify_twists(fam.head, datum=fam.datum)
        assert param_sets(fam.classification) == param_sets(ref)
        assert twist_sets(fam.classification) == twist_sets(ref)

    def test_p4_linear_polynomial(self):
        fam = palindromic_family(F16_P4, 4, (1, 1))
        assert fam.order == 2
        assert fam.head == CurveSpec(F16_P4, 4, (0, 1))
        ref = classify_twists(fam.head, datum=fam.datum)
        assert param_sets(fam.classification) == param_sets(ref)
        assert twist_sets(fam.classification) == twist_sets(ref)

    def test_quartic_order_fourteen(self):
        ctx = make_field(14)
        fam = palindromic_family(ctx, 14, (1, 0, 1, 1, 1), counting=False)
        assert fam.order == 14
        assert fam.power == 1
        assert not fam.classification.counting_checked
        tc = fam.classification
        assert len(tc.extremal_parameters) * 16 == 1 << 14
        a_max = tc.maximal_twists[0]
        gap = (2 - 1) * 2**4 * 2**7
        head = fam.head
        assert brute_count(head.with_a0(a_max), 1) == (1 << 14) + gap + 1
        a_neutral = tc.neutral_twists[0]
        assert brute_count(head.with_a0(a_neutral), 1) == (1 << 14) + 1

    def test_rejects_nonvanishing_at_one(self):
        with pytest.raises(FOneNonzero):
            palindromic_family(F64, 6, (1, 1, 1))

    def test_rejects_repeated_roots(self):
        with pytest.raises(RootsNotSimple):
            palindromic_family(F64, 6, (1, 0, 1))

    def test_rejects_small_field(self):
        with pytest.raises(FieldTooSmall):
            palindromic_family(F4, 2, (1, 0, 0, 1))

    def test_rejects_bad_coefficients(self):
        with pytest.raises(ValueError):
            palindromic_family(F4, 2, (0, 1))
        with pytest.raises(ValueError):
            palindromic_family(F4, 2, (1,))
        with pytest.raises(ValueError):
            palindromic_family(F16_P4, 4, (1, W))


class TestHermitian:
    def test_zero_coefficient_over_f4(self):
        rep = hermitian_twist(F4, 0)
        assert rep.relative_trace == 0
        assert rep.is_extremal
        assert rep.is_maximal
        assert rep.lpoly.point_count(1) == 9
        assert rep.counting_checked

    def test_only_zero_is_extremal_over_f4(self):
        extremal = [a for a in range(4) if hermitian_twist(F4, a).is_extremal]
        assert extremal == [0]

    def test_nonzero_trace_over_f16(self):
        seen = 0
        for a in range(16):
            rep = hermitian_twist(F16, a)
            if rep.relative_trace == 0:
                assert rep.is_extremal
                continue
            seen += 1
            assert not rep.is_extremal
            assert rep.is_maximal is None
            assert rep.lpoly.point_count(1) == 17
            assert rep.eigenvalues[1] == -rep.eigenvalues[0]
        assert seen == 12

    def test_zero_trace_over_f16(self):
        kernel = [a for a in range(16) if F16.trace(a, 4, 2) == 0]
        assert len(kernel) == 4
        for a in kernel:
            rep = hermitian_twist(F16, a)
            assert rep.is_extremal
            assert rep.counting_checked
            sign = -1 if rep.is_maximal else 1
            root = rep.eigenvalues[0]
            assert (root.re, root.im) == (sign * 4, 0)

    def test_p4_both_branches(self):
        rep = hermitian_twist(F16_P4, 0)
        assert rep.is_maximal
        assert rep.lpoly.point_count(1) == 65
        rep = hermitian_twist(F16_P4, W)
        assert rep.relative_trace == W
        assert not rep.is_extremal
        assert rep.lpoly.point_count(1) == 17

    def test_p4_zero_trace_tower(self):
        kernel = [
            a for a in F256_P4.subfield_elements(8) if F256_P4.trace(a, 8, 4) == 0
        ]
        assert len(kernel) == 16
        for a in kernel[:4]:
            rep = hermitian_twist(F256_P4, a)
            assert rep.is_extremal
            assert rep.counting_checked

    def test_odd_degree(self):
        with pytest.raises(OddDegree):
            hermitian_twist(F8, 0)
        with pytest.raises(OddDegree):
            hermitian_twist(make_field(6, None, 2), 0)

    def test_coefficient_outside_field(self):
        with pytest.raises(ValueError):
            hermitian_twist(F16, W, q_deg=2)
