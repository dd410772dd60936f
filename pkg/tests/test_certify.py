"""The per-candidate elimination algorithm and its building blocks."""

import random
from fractions import Fraction

import pytest

from rhomax import certify as ct
from rhomax import exactpoly as xp
from rhomax import graphs as gr
from rhomax import oracle as orc
from rhomax import tsubenum as te
from rhomax.errors import Degenerate, InvalidRegime, OrderTooSmall
from rhomax.exactpoly import IntPoly, X
from rhomax.graphs import StepSequence


class TestQPoly:
    def test_identical_inputs_vanish(self):
        s = StepSequence((4, 1))
        assert ct.q_poly(s, s).q.is_zero

    def test_antisymmetry(self):
        a, b = StepSequence((4, 1)), StepSequence((3, 2))
        assert ct.q_poly(a, b).q == -ct.q_poly(b, a).q

    def test_e5_vs_star_positive_leading(self):
        q = ct.q_poly(StepSequence((4, 1)), StepSequence((5,))).q
        assert not q.is_zero
        assert q.leading > 0


class TestClosedForms:
    def test_r_d_e5(self):
        num, den = ct.r_D_closed_form(5)
        assert num == X * (X + 1) * IntPoly([0, -6, -2, 1])
        assert den == IntPoly([0, -4, -1, 1])

    def test_d_cubic_e7(self):
        assert ct.d_cubic(7) == IntPoly([4, -6, -3, 1])

    def test_r_d_degree_bookkeeping(self):
        # num/den ~ lambda^2 at large argument
        for e in (5, 7, 8, 12):
            num, den = ct.r_D_closed_form(e)
            assert num.degree - den.degree == 2
            big = Fraction(10**6)
            ratio = num(big) / den(big)
            assert abs(ratio / big**2 - 1) < Fraction(1, 100)

    def test_r_d_t0_rejected(self):
        with pytest.raises(InvalidRegime):
            ct.r_D_closed_form(10)

    def test_r_v_e4_root_matches_numeric(self):
        # largest root of x^2 - x - 8 is (1+sqrt(33))/2 = rho(K_2 join 4K_1)
        r = xp.kth_largest_root(ct.v_quadratic(4) - 0, 1)
        numeric = orc.spectral_radius(gr.adjacency(gr.build_V(6, 4))).rho
        r = r.refined(Fraction(1, 10**9))
        assert abs(float(r.interval.mid) - numeric) < 1e-8
        assert abs(numeric - (1 + 33**0.5) / 2) < 1e-9

    def test_r_v_e10_at_8(self):
        num, den = ct.r_V_closed_form(10)
        assert num(8) / den(8) == 48
        assert num(0) == 0


class TestRhoOfThreshold:
    def test_matches_numeric_v(self):
        r = ct.rho_of_threshold(StepSequence((4,)), 10).refined(Fraction(1, 10**9))
        num = orc.spectral_radius(gr.adjacency(gr.build_V(10, 4)), tol=1e-12).rho
        assert abs(float(r.interval.mid) - num) < 1e-8

    def test_matches_numeric_d(self):
        r = ct.rho_of_threshold(StepSequence((3, 1)), 6).refined(Fraction(1, 10**9))
        num = orc.spectral_radius(gr.adjacency(gr.build_D(6, 4)), tol=1e-12).rho
        assert abs(float(r.interval.mid) - num) < 1e-8

    def test_minimal_order_star(self):
        # n = s1 + 2 makes the pendant term vanish; rho is the root of the
        # cone polynomial itself
        e = 5
        r = ct.rho_of_threshold(StepSequence((e,)), e + 2)
        s = xp.kth_largest_root(ct.v_quadratic(e), 1)
        assert xp.compare(r, s) == 0

    def test_order_too_small(self):
        with pytest.raises(OrderTooSmall):
            ct.rho_of_threshold(StepSequence((4,)), 5)


class TestCharpolyViaModules:
    def test_agrees_with_dense_on_threshold_graphs(self):
        rng = random.Random(11)
        for _ in range(15):
            e = rng.randint(1, 12)
            seqs = list(te.enumerate_S(e))
            steps = rng.choice(seqs)
            n = steps[0] + 2 + rng.randint(0, 3)
            a = gr.adjacency(gr.ThresholdGraph(n, steps)).a
            assert ct.charpoly_via_modules(a) == xp.charpoly(a.astype(int).tolist())


class TestCertifyCandidate:
    def test_e5_certificate(self):
        cert = ct.certify_candidate(5, StepSequence((4, 1)))
        assert cert.coverage in (ct.COVER_ALL_N, ct.COVER_SPLIT)

    def test_degenerate_rejected(self):
        with pytest.raises(Degenerate):
            ct.certify_candidate(5, StepSequence((5,)))
        with pytest.raises(Degenerate):
            ct.certify_candidate(5, StepSequence((3, 2)))

    def test_t0_rejected(self):
        with pytest.raises(InvalidRegime):
            ct.certify_candidate(10, StepSequence((5, 4, 1)))

    @pytest.mark.parametrize("e,steps,n_range", [
        (5, (4, 1), range(7, 13)),
        (7, (4, 3), range(8, 15)),
    ])
    def test_oracle_consistency(self, e, steps, n_range):
        # every certified candidate is numerically below the best family
        ct.certify_candidate(e, StepSequence(steps))
        for n in n_range:
            rho_c = orc.spectral_radius(
                gr.adjacency(gr.ThresholdGraph(n, StepSequence(steps))),
                tol=1e-12).rho
            rho_d = orc.spectral_radius(gr.adjacency(gr.build_D(n, e)),
                                        tol=1e-12).rho
            best = rho_d
            if n >= e + 2:
                best = max(best, orc.spectral_radius(
                    gr.adjacency(gr.build_V(n, e)), tol=1e-12).rho)
            assert rho_c < best - 1e-9


class TestCertifyAll:
    def test_e4_vacuous(self):
        assert list(ct.certify_all(4)) == []

    def test_e5_one(self):
        assert len(list(ct.certify_all(5))) == 1

    def test_e12_thirteen(self):
        assert len(list(ct.certify_all(12))) == 13

    def test_certificates_sample_verified_numerically(self):
        # sample orders inside each claimed region and confirm the claim
        rng = random.Random(5)
        for cert in ct.certify_all(8):
            if cert.coverage == ct.COVER_ALL_N:
                ns = [6, 8, 11, 15, 25]
            else:
                lo = int(cert.n_U.lo) + 1
                ns = sorted({max(6, lo - 7), lo - 1, lo, lo + 3, lo + 12})
            for n in ns:
                if n < cert.steps[0] + 2:
                    continue
                rho_c = orc.spectral_radius(
                    gr.adjacency(gr.ThresholdGraph(n, cert.steps)),
                    tol=1e-12).rho
                rho_d = orc.spectral_radius(gr.adjacency(gr.build_D(n, 8)),
                                            tol=1e-12).rho
                best = rho_d
                if n >= 10:
                    best = max(best, orc.spectral_radius(
                        gr.adjacency(gr.build_V(n, 8)), tol=1e-12).rho)
                assert rho_c < best - 1e-9

    def test_parallel_matches_serial(self):
        serial = [c.to_dict() for c in ct.certify_all(13)]
        parallel = [c.to_dict() for c in ct.certify_all(13, jobs=2)]
        assert serial == parallel

    def test_resume(self):
        certs = list(ct.certify_all(13))
        mid = certs[len(certs) // 2]
        rest = list(ct.certify_all(13, resume_after=mid.steps.steps))
        assert [c.to_dict() for c in rest] == \
            [c.to_dict() for c in certs[len(certs) // 2 + 1:]]


class TestInverseLinkFunction:
    def test_rho_of_shifted_polynomial_is_inverse_image(self):
        # largest root of x*P_T1 - alpha*P_T maps back to alpha under the
        # link function
        rng = random.Random(3)
        for alpha in (Fraction(0), Fraction(1), Fraction(5), Fraction(17, 2)):
            e = rng.randint(4, 12)
            steps = rng.choice(list(te.enumerate_S(e)))
            num, den = ct.generic_r_poly(steps)
            poly = (num * alpha.denominator
                    - alpha.numerator * den)
            root = xp.kth_largest_root(poly, 1)
            assert root is not None
            iv = xp.eval_ratfun(num, den, root, Fraction(1, 10**6))
            assert iv.lo <= alpha <= iv.hi
