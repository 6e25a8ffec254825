import json

from fareycf.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestSubcommands:
    def test_farey_list_display(self, capsys):
        code, out, _ = run(capsys, "farey", "list", "--level", "2")
        assert code == 0 and out.strip() == "0 001 01 011 1"

    def test_farey_word(self, capsys):
        code, out, _ = run(capsys, "farey", "word", "--rational", "2/5")
        assert code == 0 and out.strip() == "00101"

    def test_cardioid_example(self, capsys):
        code, out, _ = run(capsys, "cardioid", "--rational", "2/5")
        assert code == 0 and out.strip() == "theta_minus=9/31 theta_plus=10/31"

    def test_match_certificate(self, capsys):
        code, out, _ = run(capsys, "match", "verify", "--word", "01", "--alpha", "1/2")
        assert code == 0
        payload = json.loads(out)
        # T * M is [[1,1],[1,2]]: with M = [[0,-1],[1,2]] stored here
        assert payload["M"] == [[0, -1], [1, 2]]
        assert payload["identity_holds"] and payload["all_exact"]
        assert payload["alphas_checked"][0]["status"] == "exact"

    def test_match_outside_alpha_fails(self, capsys):
        code, out, _ = run(capsys, "match", "verify", "--word", "01", "--alpha", "1/5")
        assert code == 1
        assert json.loads(out)["alphas_checked"][0]["status"] == "outside"

    def test_ebif(self, capsys):
        assert run(capsys, "ebif", "check", "--x", "5/31")[1].strip() == "member"
        assert run(capsys, "ebif", "check", "--x", "1/4")[1].strip() == "not-member"
        _, out, _ = run(capsys, "ebif", "interval", "--word", "00101")
        assert "a_minus=9/62" in out and "a_plus=5/31" in out

    def test_orbit_csv(self, capsys):
        code, out, _ = run(capsys, "orbit", "--alpha", "1/3", "--x=-2/3", "--steps", "2")
        lines = out.strip().splitlines()
        assert lines[0] == "step,point_exact,point_decimal50,digit"
        assert lines[1].startswith("0,-2/3,")
        assert lines[2].startswith("1,-1/2,") and lines[2].endswith(",2")

    def test_qumterval_info_and_locate(self, capsys):
        _, out, _ = run(capsys, "qumterval", "info", "--word", "001")
        assert "alpha_plus=(-1+1*sqrt(3))/2" in out
        assert "alpha_minus=(2-1*sqrt(3))/1" in out
        assert "pseudocenter=1/3" in out
        _, out, _ = run(capsys, "qumterval", "info", "--alpha", "4/15")
        assert "word=0001001" in out

    def test_qumterval_atlas_json(self, capsys):
        code, out, _ = run(capsys, "qumterval", "atlas", "--max-len", "3", "--format", "json")
        rows = json.loads(out)
        assert [r["word"] for r in rows] == ["001", "01", "011"]
        assert rows[1]["pseudocenter"] == "1/2"

    def test_qumterval_atlas_csv(self, capsys):
        code, out, _ = run(capsys, "qumterval", "atlas", "--max-len", "3", "--format", "csv")
        lines = out.strip().splitlines()
        assert lines[0] == "word,S,alpha_minus,alpha_plus,pseudocenter,m0,m1"
        assert lines[1].startswith('001,"[2,1]",0.2679491924311227064725536584941276330571947461896')
        assert lines[1].endswith(",1/3,2,1")

    def test_attractor_json(self, capsys):
        code, out, _ = run(capsys, "attractor", "--alpha", "9/20", "--json")
        payload = json.loads(out)
        assert payload["word"] == "01"
        assert len(payload["rects"]) == 3
        assert payload["corner_x"]["exact"] == "(-1+1*sqrt(5))/2"

    def test_entropy_point(self, capsys):
        code, out, _ = run(capsys, "entropy", "point", "--alpha", "9/20")
        assert code == 0
        assert "h=3.4183159706112438529" in out

    def test_entropy_curve_csv(self, capsys, tmp_path):
        target = tmp_path / "curve.csv"
        code, out, _ = run(
            capsys,
            "entropy",
            "curve",
            "--from",
            "2/5",
            "--to",
            "3/5",
            "--samples",
            "5",
            "--out",
            str(target),
        )
        assert code == 0
        lines = target.read_text().strip().splitlines()
        assert lines[0] == "alpha,word,m0,m1,A,h,err_bound"
        assert len(lines) == 6

    def test_probe_asymptotic(self, capsys):
        code, out, _ = run(capsys, "probe", "asymptotic", "--N", "10", "--N", "20")
        lines = out.strip().splitlines()
        assert lines[0].startswith("N,alpha,h,target,ratio")
        assert lines[1].startswith("10,1/11,")

    def test_probe_zeta(self, capsys):
        code, out, _ = run(capsys, "probe", "zeta", "--s", "1.0", "--depth", "10", "--variant", "binary")
        assert code == 0 and "zeta_partial" in out


class TestBehaviour:
    def test_deterministic_reruns(self, capsys):
        a = run(capsys, "entropy", "point", "--alpha", "4/15")
        b = run(capsys, "entropy", "point", "--alpha", "4/15")
        assert a == b

    def test_validation_errors_exit_2(self, capsys):
        assert run(capsys, "farey", "list", "--level", "99")[0] == 2
        assert run(capsys, "entropy", "point", "--alpha", "3/2")[0] == 2
        assert run(capsys, "qumterval", "info", "--word", "0011")[0] == 2
        assert run(capsys, "entropy", "point")[0] == 2

    def test_precision_floor(self, capsys):
        assert run(capsys, "entropy", "point", "--alpha", "1/2", "--precision", "32")[0] == 2

    def test_selftests(self, capsys):
        for cmd in ("farey", "qumterval", "ebif", "cardioid", "orbit", "match", "attractor", "entropy", "probe"):
            code, out, _ = run(capsys, cmd, "--selftest")
            assert code == 0, (cmd, out)
            assert "FAIL" not in out

    def test_unknown_flag_exits_2(self, capsys):
        code, _, err = run(capsys, "farey", "--bogus")
        assert code == 2 and "usage" in err
