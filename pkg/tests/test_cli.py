import json

from cyclo4.cli import CSV_HEADER, main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestClasses:
    def test_json_output(self, capsys):
        code, out, _ = run(capsys, "classes", "--p", "5", "--format", "json")
        assert code == 0
        obj = json.loads(out)
        assert obj["D0"] == [1, 9] and obj["g"] == 3

    def test_rejects_composite(self, capsys):
        code, _, err = run(capsys, "classes", "--p", "4")
        assert code == 1 and "odd prime" in err

    def test_text_output(self, capsys):
        code, out, _ = run(capsys, "classes", "--p", "3")
        assert code == 0
        assert "D1 = [5]" in out

    def test_json_round_trips_bytewise(self, capsys):
        code, out, _ = run(capsys, "classes", "--p", "7", "--format", "json")
        assert code == 0
        redumped = json.dumps(json.loads(out), sort_keys=True, separators=(",", ":")) + "\n"
        assert redumped == out


class TestSeq:
    def test_digit_line(self, capsys):
        code, out, _ = run(capsys, "seq", "--p", "3")
        assert code == 0 and out == "002231\n"

    def test_p5(self, capsys):
        _, out, _ = run(capsys, "seq", "--p", "5")
        assert out == "0021323120\n"

    def test_json_array(self, capsys):
        code, out, _ = run(capsys, "seq", "--p", "7", "--format", "json")
        assert code == 0
        assert json.loads(out) == [0, 0, 2, 1, 2, 1, 3, 2, 2, 0, 3, 0, 3, 1]


class TestLc:
    def test_theorem_method(self, capsys):
        code, out, _ = run(capsys, "lc", "--p", "41", "--method", "theorem")
        assert code == 0 and "lc = 22" in out

    def test_brute_with_witness(self, capsys):
        code, out, _ = run(capsys, "lc", "--p", "3", "--method", "brute", "--format", "json")
        assert code == 0
        obj = json.loads(out)
        assert obj["lc"] == 5
        assert obj["connection"][0] == 1 and len(obj["connection"]) == 6

    def test_reeds_sloane_p31(self, capsys):
        code, out, _ = run(capsys, "lc", "--p", "31", "--method", "reeds-sloane")
        assert code == 0 and "lc = 31" in out

    def test_brute_refuses_large_p(self, capsys):
        code, _, err = run(capsys, "lc", "--p", "11", "--method", "brute")
        assert code == 1 and "--force" in err

    def test_force_flag_accepted(self, capsys):
        code, out, _ = run(capsys, "lc", "--p", "7", "--method", "brute", "--force")
        assert code == 0 and "lc = 4" in out


class TestVerify:
    def test_all_checks_pass(self, capsys):
        code, out, _ = run(capsys, "verify", "--p", "7")
        assert code == 0
        assert "FAIL" not in out
        assert "theorem PASS" in out

    def test_filtered_two_lines(self, capsys):
        code, out, _ = run(capsys, "verify", "--p", "7", "--lemmas", "6,7")
        assert code == 0
        lines = out.strip().splitlines()
        assert len(lines) == 2
        assert lines[0].startswith("lemma6 PASS")
        assert lines[1].startswith("lemma7 PASS")

    def test_rejects_unknown_lemma(self, capsys):
        code, _, err = run(capsys, "verify", "--p", "7", "--lemmas", "12")
        assert code == 1 and "unknown check" in err

    def test_rejects_p2(self, capsys):
        code, _, err = run(capsys, "verify", "--p", "2")
        assert code == 1

    def test_skip_reported_for_pm3(self, capsys):
        code, out, _ = run(capsys, "verify", "--p", "5", "--lemmas", "9")
        assert code == 0
        assert out.startswith("lemma9 SKIP")

    def test_expansion_cap_env(self, capsys, monkeypatch):
        monkeypatch.setenv("CYCLO4_EXPANSION_CAP", "3")
        code, out, _ = run(capsys, "verify", "--p", "5", "--lemmas", "factorization")
        assert code == 0 and "SKIP" in out
        monkeypatch.setenv("CYCLO4_EXPANSION_CAP", "not-a-number")
        code, _, err = run(capsys, "verify", "--p", "5")
        assert code == 1


class TestSweep:
    def test_csv_shape(self, capsys):
        code, out, err = run(capsys, "sweep", "--from", "3", "--to", "50")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == CSV_HEADER
        assert len(lines) == 1 + 14  # fourteen odd primes in [3, 50]
        assert "14 primes, 0 mismatches" in err

    def test_record_for_p17(self, capsys):
        _, out, _ = run(capsys, "sweep", "--from", "17", "--to", "17")
        row = out.strip().splitlines()[1].split(",")
        assert row[0] == "17"
        assert row[1] == "1 mod 16"
        assert row[3] == "18" and row[4] == "18" and row[5] == "true"

    def test_reversed_range_rejected(self, capsys):
        code, _, err = run(capsys, "sweep", "--from", "10", "--to", "3")
        assert code == 1

    def test_json_document(self, capsys):
        code, out, _ = run(capsys, "sweep", "--from", "3", "--to", "20", "--format", "json")
        assert code == 0
        doc = json.loads(out)
        assert doc["summary"] == {"primes": 7, "mismatches": 0}
        assert all(rec["match"] for rec in doc["records"])
        redumped = json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"
        assert redumped == out

    def test_output_file(self, capsys, tmp_path):
        target = tmp_path / "sweep.csv"
        code, out, _ = run(capsys, "sweep", "--from", "3", "--to", "10", "--out", str(target))
        assert code == 0 and out == ""
        content = target.read_text().splitlines()
        assert content[0] == CSV_HEADER and len(content) == 4

    def test_unwritable_output(self, capsys, tmp_path):
        code, _, err = run(capsys, "sweep", "--from", "3", "--to", "10",
                           "--out", str(tmp_path / "missing" / "x.csv"))
        assert code == 1


class TestExitCodes:
    def test_verification_failure_maps_to_exit_2(self, capsys, monkeypatch):
        import cyclo4.cli as cli
        from cyclo4.verify import CheckResult, CheckStatus, LemmaReport

        def fake_report(p, expansion_cap=None, only=None):
            return LemmaReport(
                p=p, checks=(CheckResult("lemma6", CheckStatus.FAIL, "forced"),)
            )

        monkeypatch.setattr(cli, "full_report", fake_report)
        code, out, _ = run(capsys, "verify", "--p", "7")
        assert code == 2 and "lemma6 FAIL" in out

    def test_unexpected_error_maps_to_exit_3(self, capsys, monkeypatch):
        import cyclo4.cli as cli

        def boom(p, expansion_cap=None, only=None):
            raise RuntimeError("internal: synthetic")

        monkeypatch.setattr(cli, "full_report", boom)
        code, _, err = run(capsys, "verify", "--p", "7")
        assert code == 3 and "internal error" in err

    def test_usage_errors_map_to_exit_1(self, capsys):
        assert main(["lc", "--p", "abc"]) == 1
        assert main(["nonsense"]) == 1
        assert main(["--help"]) == 0
        capsys.readouterr()
