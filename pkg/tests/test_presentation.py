"""Existence flags for a datum behind a given curve, and recovery."""

import itertools

import pytest

from aswcurves.curves import CurveSpec, build_curve, head_curve
from aswcurves.curves.presentation import (
    presentation_conditions,
    recover_datum,
    recover_head,
)
from aswcurves.errors import KernelNotRational, NoTwistParameter
from aswcurves.gf2field import make_field
from aswcurves.skew import SkewPoly

F2 = make_field(1)
F4 = make_field(2)
F16 = make_field(4)
W = 2


class TestPresentationConditions:
    def test_kernel_in_subfield_all_flags_hold(self):
        report = presentation_conditions(CurveSpec(F4, 2, (0, 1)))
        assert report.flags == (True,) * 4
        fd, t = report.witness
        assert fd.F == SkewPoly.from_coeffs(F4, [1, 1])
        assert t == W

    def test_quadratic_kernel_but_trace_fails(self):
        # x^2 over F_2: the kernel is all of F_4, inside the quadratic
        # extension, but the trace form is nonzero on the radical.
        report = presentation_conditions(CurveSpec(F2, 1, (0, 1)))
        assert report.flags == (False,) * 4
        assert report.witness is None

    def test_kernel_outside_quadratic_extension(self):
        # x^4 over F_2: the kernel splits only over degree 4.
        report = presentation_conditions(CurveSpec(F2, 1, (0, 0, 1)))
        assert report.flags == (False,) * 4

    def test_every_family_member_witnessed_when_kernel_rational(self):
        # With ker(R + R*) inside F_q, every linear coefficient admits
        # a witness, though possibly through different Lagrangians.
        for a0 in range(4):
            report = presentation_conditions(CurveSpec(F4, 2, (a0, 1)))
            assert report.flags == (True,) * 4
            fd, t = report.witness
            assert build_curve(fd, t) == CurveSpec(F4, 2, (a0, 1))

    def test_exhaustive_agreement_small_field(self):
        # Flags must agree (the op raises otherwise) on every curve
        # over F_4 with e <= 2; witnesses must rebuild exactly.
        seen = {True: 0, False: 0}
        for coeffs in itertools.product(range(4), repeat=3):
            if coeffs[-1] == 0:
                continue
            spec = CurveSpec(F4, 2, coeffs)
            report = presentation_conditions(spec)
            seen[report.witnessed] += 1
            if report.witnessed:
                fd, t = report.witness
                assert build_curve(fd, t) == spec
        assert seen[True] > 0 and seen[False] > 0

    def test_degenerate_radical_case_over_f4(self):
        # e = 2 with kernel of the symmetrization meeting F_4 in a
        # proper subspace exercises the radical handling.
        spec = CurveSpec(F4, 2, (0, 0, 1))
        report = presentation_conditions(spec)
        assert report.flags[0] == report.flags[1] == report.flags[2]


class TestRecovery:
    def test_recover_head_anchor(self):
        fd = recover_head(CurveSpec(F4, 2, (0, 1)))
        assert fd.F == SkewPoly.from_coeffs(F4, [1, 1])
        assert fd.conditions == (True,) * 4

    def test_recover_datum_anchor(self):
        fd, t = recover_datum(CurveSpec(F4, 2, (0, 1)))
        assert t == W
        assert build_curve(fd, t) == CurveSpec(F4, 2, (0, 1))

    def test_round_trip_from_datum(self):
        # p^(2e) elements must fit in F_q, so e = 2 needs q >= 16.
        for head in [(0, 1), (0, 0, 1)]:
            fd = recover_head(CurveSpec(F16, 4, head))
            for t in range(16):
                spec = build_curve(fd, t)
                fd2, t2 = recover_datum(spec)
                assert build_curve(fd2, t2) == spec

    def test_no_twist_parameter(self):
        # The twist image of the recovered datum for head x^2 over F_4
        # is {0, 1}; the other two linear coefficients have witnesses
        # only through other Lagrangians.
        for a0 in (W, W ^ 1):
            with pytest.raises(NoTwistParameter):
                recover_datum(CurveSpec(F4, 2, (a0, 1)))

    def test_kernel_not_rational(self):
        with pytest.raises(KernelNotRational):
            recover_head(CurveSpec(F2, 1, (0, 1)))

    def test_head_required(self):
        with pytest.raises(ValueError):
            recover_head(CurveSpec(F4, 2, (1, 1)))

    def test_recovered_head_matches(self):
        hit = 0
        for coeffs in [(0, 1), (0, W), (0, 1, W), (0, 0, 1)]:
            for ctx, q_deg in [(F4, 2), (F16, 4)]:
                spec = CurveSpec(ctx, q_deg, coeffs)
                try:
                    fd = recover_head(spec)
                except KernelNotRational:
                    continue
                hit += 1
                assert head_curve(fd) == spec
        assert hit >= 3

    def test_kernel_sizes_multiply(self):
        fd = recover_head(CurveSpec(F16, 4, (0, 0, 1)))
        assert (
            fd.composite_kernel.dim_p
            == fd.kernel.dim_p + fd.adjoint_kernel.dim_p
        )

    def test_ambient_independence(self):
        # Recovery canonicalizes internally, so the datum coefficients
        # agree no matter which ambient holds the input.
        from aswcurves.gf2field import transport

        big_ctx = make_field(8)
        small = recover_head(CurveSpec(F16, 4, (0, 0, 1)))
        big = recover_head(CurveSpec(F16, 4, (0, 0, 1)).transport_to(big_ctx))
        lifted = {i: transport(F16, c, big_ctx, 4) for i, c in small.F.coeffs.items()}
        assert big.F == SkewPoly(big_ctx, lifted)
