import math
from fractions import Fraction

import numpy as np
import pytest

from conftest import make_config
from edgewave import angles, vanish
from edgewave.vanish import (CaseKind, INFINITE, RankAmbiguityError,
                             UnsupportedPairingError, assemble_order_system,
                             block_det, closed_det_A, closed_det_B,
                             nullspace_dim, theorem_bound, vanishing_order)


class TestAssembly:
    def test_first_order_block_determinant(self):
        # eta1 = eta2 = 1, k = 1, alpha = 1/3: det of the 3x3 head block
        cfg = make_config("1/3")
        system = assemble_order_system(1, cfg)
        c0 = math.sqrt(3 / (4 * math.pi))
        c1 = math.sqrt(3 / (8 * math.pi))
        expect = (-1j * (2 / 3) ** 3 * (math.sqrt(2) / 2) * c1 ** 2 * c0
                  * math.sin(math.pi / 3) ** 2)
        assert np.linalg.det(system.block_A) == pytest.approx(expect, rel=1e-12)

    def test_pecpmc_first_order_two_by_two_blocks(self):
        cfg = make_config("1/3", case="pec-pmc")
        system = assemble_order_system(1, cfg)
        ix = system.column_index
        phase = math.pi / 3
        # the a-sector rows reduce to [[1, -1], [e^{i a pi}, e^{-i a pi}]]
        diff = next(r for r, t in zip(system.rows, system.provenance)
                    if t == "face1-pec coupling-diff m=1")
        assert diff[ix[("a", 1)]] == 1.0 and diff[ix[("a", -1)]] == -1.0
        phased = next(r for r, t in zip(system.rows, system.provenance)
                      if t == "face2-pmc phased-sum m=1")
        ratio = phased[ix[("a", 1)]] / phased[ix[("a", -1)]]
        assert ratio == pytest.approx(np.exp(2j * phase))
        # and the b-sector to [[1, 1], [e^{i a pi}, -e^{-i a pi}]]
        bsum = next(r for r, t in zip(system.rows, system.provenance)
                    if t == "face1-pec sum m=1")
        assert bsum[ix[("b", 1)]] == bsum[ix[("b", -1)]] != 0

    def test_row_count_second_order(self):
        cfg = make_config("0.41", eta1=1.7 - 0.3j, eta2=0.9)
        system = assemble_order_system(2, cfg)
        # 2(n+1) chain rows per face + 3 matching + 3 face-2 edge rows
        assert system.rows.shape == (18, 10)

    def test_every_row_tagged(self):
        cfg = make_config("0.41")
        for n in (1, 2, 4):
            system = assemble_order_system(n, cfg)
            assert len(system.provenance) == system.rows.shape[0]
            assert len(set(system.provenance)) == len(system.provenance)

    def test_column_order(self):
        system = assemble_order_system(2, make_config("0.41"))
        assert system.columns == [("b", 0), ("a", 0), ("a", 1), ("a", -1),
                                  ("b", 1), ("b", -1), ("a", 2), ("a", -2),
                                  ("b", 2), ("b", -2)]

    def test_unsupported_pairings(self):
        from edgewave.corner import EdgeCornerConfig, ImpedanceSpec
        cfg = EdgeCornerConfig(angles.parse_angle("1/3"),
                               ImpedanceSpec.infinite(),
                               ImpedanceSpec.infinite(), 1.0)
        with pytest.raises(UnsupportedPairingError):
            assemble_order_system(1, cfg)

    def test_impmc_domain(self):
        with pytest.raises(ValueError):
            assemble_order_system(1, make_config("3/2", case="imp-pmc"))


class TestNullspace:
    def test_identity_rows(self):
        system = np.eye(6, dtype=complex)
        assert nullspace_dim(system) == 0

    def test_degenerate_half(self):
        # the B-block determinant carries cos^2(alpha pi)
        assert nullspace_dim(assemble_order_system(1, make_config("1/2"))) >= 1

    def test_trivial_at_irrational_proxy(self):
        cfg = make_config(repr(1 / math.sqrt(2)))
        assert nullspace_dim(assemble_order_system(1, cfg)) == 0

    def test_ambiguity_band_raises(self):
        # nearly dependent rows survive equilibration and land in the band
        rows = np.array([[1.0, 1.0], [1.0, 1.0 + 3e-9]], dtype=complex)
        with pytest.raises(RankAmbiguityError):
            nullspace_dim(rows)

    def test_scaling_invariance(self, rng):
        system = assemble_order_system(3, make_config("1/3"))
        base = nullspace_dim(system)
        for _ in range(5):
            scale = complex(*rng.standard_normal(2))
            assert nullspace_dim(system.rows * scale) == base


class TestClosedDeterminants:
    @pytest.mark.parametrize("n", [1, 2, 3, 5, 10])
    def test_match_numeric(self, n, rng):
        alpha = float(rng.uniform(0.06, 0.94))
        cfg = make_config(repr(alpha), eta1=complex(*rng.standard_normal(2)),
                          eta2=complex(*rng.standard_normal(2)),
                          k=float(rng.uniform(0.5, 2)))
        system = assemble_order_system(n, cfg)
        ca, cb = closed_det_A(n, cfg), closed_det_B(n, cfg)
        assert abs(np.linalg.det(system.block_A) - ca) / abs(ca) < 1e-10
        assert abs(np.linalg.det(system.block_B) - cb) / abs(cb) < 1e-10

    def test_explicit_configuration(self):
        cfg = make_config("1/5", eta1=2.0 + 0j, eta2=1.0, k=1.5)
        system = assemble_order_system(3, cfg)
        ca = closed_det_A(3, cfg)
        assert abs(np.linalg.det(system.block_A) - ca) / abs(ca) < 1e-10

    def test_b_vanishes_at_right_angles(self):
        for alpha in ("1/2", "3/2"):
            assert closed_det_B(3, make_config(alpha)) == pytest.approx(0.0, abs=1e-30)

    def test_case_error(self):
        with pytest.raises(UnsupportedPairingError):
            closed_det_A(1, make_config("1/3", case="pec-pmc"))

    def test_first_order_reduction(self):
        # at n = 1 the prefactor reduces to (2/3)^3 (sqrt2/2) (c_1^1)^2 c_1^0
        cfg = make_config("0.37", eta1=1.0, k=1.0)
        c0, c1 = math.sqrt(3 / (4 * math.pi)), math.sqrt(3 / (8 * math.pi))
        expect = (-1j * (2 / 3) ** 3 * math.sqrt(2) / 2 * c1 ** 2 * c0
                  * math.sin(0.37 * math.pi) ** 2)
        assert closed_det_A(1, cfg) == pytest.approx(expect, rel=1e-14)


class TestBlockDet:
    def test_examples(self):
        assert block_det(2, angles.parse_angle("1/4"), "sin") == pytest.approx(-2j)
        assert block_det(1, angles.parse_angle("1/2"), "cos") == pytest.approx(0.0, abs=1e-15)
        assert block_det(3, angles.parse_angle("1/3"), "sin") == pytest.approx(0.0, abs=1e-14)

    def test_bad_kind(self):
        with pytest.raises(ValueError):
            block_det(1, 0.3, "tan")


class TestTheoremBound:
    @pytest.mark.parametrize("alpha,case,expect", [
        ("1/3", "imp-imp", 2),
        ("1/2", "imp-imp", 0),
        ("1/3", "imp-pec", 2),
        ("5/3", "imp-imp", 2),
        ("3/2", "imp-imp", 0),
        ("1/4", "imp-pec", 0),
        ("1/4", "pec-pmc", 1),
        ("2/5", "imp-imp", 4),
    ])
    def test_examples(self, alpha, case, expect):
        a = angles.parse_angle(alpha)
        assert theorem_bound(a, CaseKind.parse(case), 10) == expect

    def test_irrational_infinite(self):
        a = angles.Angle(0.6180339887)
        assert theorem_bound(a, CaseKind.IMP_IMP, 8) == INFINITE


class TestVanishingOrder:
    def test_one_third(self):
        report = vanishing_order(make_config("1/3"), 6)
        assert report.order_lower_bound == 2
        assert report.theorem_bound == 2
        dims = [d.nullspace_dim for d in report.per_order]
        assert dims[:3] == [0, 0, 2]

    def test_pecpmc_quarter(self):
        report = vanishing_order(make_config("1/4", case="pec-pmc"), 6)
        assert report.order_lower_bound == 1
        assert report.per_order[1].nullspace_dim > 0

    def test_irrational_runs_to_nmax(self):
        report = vanishing_order(make_config("0.6180339887"), 10)
        assert report.at_nmax and report.order_lower_bound == 10
        assert report.theorem_bound == INFINITE

    def test_invariant_bound_ge_theorem(self, rng):
        for _ in range(8):
            p = int(rng.integers(2, 13))
            q = int(rng.integers(1, 2 * p))
            fr = Fraction(q, p)
            if fr == 1:
                continue
            for case in ("imp-imp", "pec-pmc", "imp-pec", "imp-pmc"):
                if case == "imp-pmc" and fr >= 1:
                    continue
                cfg = make_config(f"{fr.numerator}/{fr.denominator}", case=case,
                                  eta1=complex(*rng.standard_normal(2)),
                                  eta2=complex(*rng.standard_normal(2)),
                                  k=float(rng.uniform(0.5, 2)))
                report = vanishing_order(cfg, 6)
                if report.theorem_bound != INFINITE:
                    assert report.order_lower_bound >= min(report.theorem_bound, 6)

    def test_strict_excess_flagged(self):
        # pec-pmc at 1/3 never degenerates (cos(m pi / 3) never vanishes) but
        # the grid bound is finite: the excess must be flagged
        report = vanishing_order(make_config("1/3", case="pec-pmc"), 6)
        assert report.at_nmax
        assert report.theorem_bound == 2
        assert report.strict_excess

    def test_json_round_trip(self):
        report = vanishing_order(make_config("1/3"), 4)
        data = report.to_json_dict()
        back = vanish.VanishReport.from_json_dict(data)
        assert back.to_json_dict() == data

    def test_json_schema_keys(self):
        report = vanishing_order(make_config("0.6180339887"), 3)
        data = report.to_json_dict()
        assert set(data) == {"alpha", "case", "per_order", "order_lower_bound",
                             "theorem_bound"}
        assert data["order_lower_bound"] == "gte_nmax"
        assert data["theorem_bound"] == "infinite"
        assert data["alpha"]["rational"] is None
        assert set(data["per_order"][0]) == {"n", "nullspace_dim", "det_A",
                                             "det_B", "block_dets"}


class TestReflection:
    def test_row_equivalence_one_fifth(self):
        eta = 1.3 + 0.2j
        mixed = make_config("1/5", case="imp-pec", eta2=eta, k=1.1)
        direct = make_config("2/5", eta1=eta, eta2=eta, k=1.1)
        for n in range(1, 5):
            s_ref = assemble_order_system(n, mixed)
            s_dir = assemble_order_system(n, direct)
            assert np.allclose(s_ref.rows, s_dir.rows, atol=1e-15)
            assert nullspace_dim(s_ref) == nullspace_dim(s_dir)
            assert s_ref.source_case == CaseKind.IMP_PEC

    @pytest.mark.parametrize("alpha,expect", [
        ("1/5", (2, 5)),    # 2a
        ("3/4", (1, 2)),    # 2(1-a)
        ("6/5", (2, 5)),    # 2(a-1)
        ("9/5", (2, 5)),    # 2(2-a)
        ("3/2", (1, 1)),    # boundary of the fourth branch
    ])
    def test_four_branch_table(self, alpha, expect):
        eff = vanish.reflected_angle(angles.parse_angle(alpha), CaseKind.IMP_PEC)
        assert eff.rational == expect

    def test_boundary_half(self):
        eff = vanish.reflected_angle(angles.parse_angle("1/2"), CaseKind.IMP_PEC)
        assert eff.rational == (1, 1)
        report = vanishing_order(make_config("1/2", case="imp-pec"), 3)
        assert report.order_lower_bound == 0
