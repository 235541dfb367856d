from eqhom.cli import parse_group_spec, run
from eqhom.groups import FreeAbelianGroup, FreeGroup, ProductGroup

from conftest import fixture_path


def invoke(*argv):
    return run(list(argv))


class TestGroupSpecs:
    def test_shorthands(self):
        assert isinstance(parse_group_spec("f2"), FreeGroup)
        assert parse_group_spec("f2").rank == 2
        assert isinstance(parse_group_spec("z2"), FreeAbelianGroup)
        assert parse_group_spec("z^5").rank == 5
        assert parse_group_spec("z").rank == 1

    def test_product(self):
        model = parse_group_spec("z^5*f2")
        assert isinstance(model, ProductGroup)
        assert model.describe() == "Z^5 x F_2"

    def test_bad_spec(self):
        code, text = invoke("ball", "q3", "--radius", "2")
        assert code == 1 and text.startswith("error:")


class TestGoldenOutputs:
    def test_homology_t2(self):
        code, text = invoke("homology", fixture_path("t2.cplx"))
        assert code == 0
        assert text == "H0 = Z^1\nH1 = Z^2\nH2 = Z^1\n"

    def test_homology_matches_golden_files(self):
        for name in ("circle", "t2", "s2", "s3", "rp2", "rp3", "t3"):
            code, text = invoke("homology", fixture_path(f"{name}.cplx"))
            assert code == 0
            with open(fixture_path(f"{name}.golden")) as fh:
                assert text == fh.read()

    def test_group_homology_both(self):
        code, text = invoke("group-homology", fixture_path("z2.pres"),
                            "--n", "3", "--method", "both")
        assert code == 0
        assert text == "bar   = Z/2\nshift = Z/2\nAGREE\n"

    def test_shift_chain(self):
        code, text = invoke("shift-chain", fixture_path("z2.pres"), "--n", "3")
        assert code == 0
        assert text.endswith("EQUAL\n")
        assert text.count("Z/2") == 3

    def test_ponzi_f2(self):
        code, text = invoke("ponzi", "f2", "--radius", "4", "--bound", "1")
        assert code == 0
        assert "FEASIBLE" in text and "verified" in text

    def test_twisted_homology(self):
        code, text = invoke("homology", fixture_path("rp3.cplx"),
                            "--coeff", fixture_path("i.rep"))
        assert code == 0
        assert text == "H0 = Z/2\nH1 = 0\nH2 = Z/2\nH3 = 0\n"

    def test_twisted_cohomology(self):
        code, text = invoke("cohomology", fixture_path("rp3.cplx"),
                            "--coeff", fixture_path("i3.rep"))
        assert code == 0
        assert text == "H^0 = 0\nH^1 = Z/2\nH^2 = 0\nH^3 = Z/2\n"

    def test_cover_rp2(self):
        code, text = invoke("cover", fixture_path("rp2.cplx"))
        assert code == 0
        assert "pi1 order = 2" in text
        assert "dim 2: 20 cells" in text
        assert text.endswith("H0 = Z^1\nH1 = 0\nH2 = Z^1\n")

    def test_pd_check_t2(self):
        code, text = invoke("pd-check", fixture_path("t2.cplx"))
        assert code == 0
        assert text.endswith("PD CHECK: PASS\n")

    def test_essential_rp3(self):
        code, text = invoke("essential", fixture_path("rp3.cplx"))
        assert code == 0
        assert "ESSENTIAL" in text and "nonzero" in text

    def test_inessential_sphere(self):
        code, text = invoke("essential", fixture_path("s3.cplx"))
        assert code == 0
        assert "INESSENTIAL" in text

    def test_bs_class(self):
        code, text = invoke("bs-class", fixture_path("rp2.cplx"),
                            "--power", "1")
        assert code == 0
        assert "Z/2 [nonzero]" in text

    def test_pert(self):
        code, text = invoke("pert", fixture_path("rp3.cplx"), "--power", "3")
        assert code == 0
        assert "[zero]" in text

    def test_ball(self):
        code, text = invoke("ball", "z2", "--radius", "2")
        assert code == 0
        assert "vertices = 13" in text and "inner = 5" in text

    def test_min_bound(self):
        code, text = invoke("min-bound", "z1", "--radius", "8")
        assert code == 0
        assert "t_min = 8" in text

    def test_product_group_probe(self):
        code, text = invoke("ponzi", "z1*f2", "--radius", "2")
        assert code == 0
        assert "group = Z^1 x F_2" in text
        assert "FEASIBLE" in text and "verified" in text

    def test_folner(self):
        code, text = invoke("folner", "z2", "--radius", "6")
        assert code == 0
        assert text.splitlines()[-1] == "R=6 inner=61 crossing=44 ratio=61/44"

    def test_pi1(self):
        code, text = invoke("pi1", fixture_path("rp2.cplx"))
        assert code == 0
        assert "order = 2" in text


class TestDeterminism:
    def test_byte_identical_repeats(self):
        for argv in (["homology", fixture_path("rp3.cplx")],
                     ["gromov-report", "--rank", "5", "--radius", "3"],
                     ["min-bound", "z2", "--radius", "5"],
                     ["cover", fixture_path("rp2.cplx")]):
            first = invoke(*argv)
            second = invoke(*argv)
            assert first == second


class TestExitCodes:
    def test_missing_file(self):
        code, text = invoke("homology", "nope.cplx")
        assert code == 1 and text.startswith("error:")

    def test_unknown_flag(self):
        code, text = invoke("homology", fixture_path("t2.cplx"), "--bogus")
        assert code == 1 and text.startswith("error:")

    def test_nonorientable_input(self):
        code, text = invoke("pd-check", fixture_path("rp2.cplx"))
        assert code == 2 and "error:" in text

    def test_infinite_group(self):
        code, text = invoke("essential", fixture_path("t2.cplx"),
                            "--max-cosets", "500")
        assert code == 2 and "error:" in text

    def test_budget_exceeded(self):
        code, text = invoke("group-homology", fixture_path("s3.pres"),
                            "--n", "7")
        assert code == 3 and "error:" in text

    def test_error_is_single_line_prefixed(self):
        code, text = invoke("homology", "nope.cplx")
        lines = [l for l in text.splitlines() if l]
        assert len(lines) == 1 and lines[0].startswith("error: ")

    def test_bad_radius(self):
        code, text = invoke("ball", "z2", "--radius", "0")
        assert code == 1 and text.startswith("error:")
        code, text = invoke("gromov-report", "--rank", "5", "--radius", "1")
        assert code == 1 and text.startswith("error:")

    def test_bad_coeff_descriptor(self, tmp_path):
        bad = tmp_path / "bad.rep"
        bad.write_text("module: J^2\n")
        code, text = invoke("homology", fixture_path("rp3.cplx"),
                            "--coeff", str(bad))
        assert code == 1 and "error:" in text


class TestGromovReport:
    def test_kv_golden_files(self):
        import os
        golden_dir = os.path.join(os.path.dirname(__file__), "golden")
        for argv, name in (
                (["gromov-report", "--rank", "5", "--radius", "4",
                  "--format", "kv"], "gromov_rank5_r4.kv"),
                (["gromov-report", "--rank", "5", "--radius", "4",
                  "--factor", "z2", "--format", "kv"], "gromov_rank5_r4_z2.kv")):
            code, text = invoke(*argv)
            assert code == 0
            with open(os.path.join(golden_dir, name)) as fh:
                assert text == fh.read()

    def test_text_sections(self):
        code, text = invoke("gromov-report", "--rank", "5", "--radius", "4")
        assert code == 0
        for header in ("[H_n(Z^n)]", "[F2 ponzi]", "[tensor argument]"):
            assert header in text
        assert "MECHANISM CERTIFIED AT RADIUS 4" in text

    def test_kv_format(self):
        code, text = invoke("gromov-report", "--rank", "5", "--radius", "4",
                            "--format", "kv")
        assert code == 0
        assert "verdict = certified" in text
        assert all("=" in l for l in text.splitlines() if l)

    def test_amenable_factor_declined(self):
        code, text = invoke("gromov-report", "--rank", "5", "--radius", "4",
                            "--factor", "z2")
        assert code == 0
        assert "DECLINED" in text
        assert "t_min=2" in text

    def test_kv_format_is_pure_key_value(self):
        for extra in ((), ("--factor", "z2")):
            code, text = invoke("gromov-report", "--rank", "5", "--radius",
                                "4", "--format", "kv", *extra)
            assert code == 0
            assert all("=" in l for l in text.splitlines() if l)
