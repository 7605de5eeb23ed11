import json
from fractions import Fraction

import pytest

from quadfib import serialize
from quadfib.cli import run
from quadfib.identities import verify_all
from quadfib.sequences import context, slice_terms


def invoke(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestPlainOutput:
    def test_fib_row(self, capsys):
        code, out, err = invoke(capsys, "fib", "2", "--from", "1", "--to", "6")
        assert (code, out) == (0, "1 2 5 12 29 70\n")

    def test_lucas_row_keeps_rationals(self, capsys):
        code, out, _ = invoke(capsys, "lucas", "3", "--from", "1", "--to", "4")
        assert (code, out) == (0, "1 7/2 13 97/2\n")

    def test_negative_window(self, capsys):
        code, out, _ = invoke(capsys, "fib", "5", "--from", "-3", "--to", "3")
        assert (code, out) == (0, "2 -1 1 0 1 1 2\n")

    def test_kfib_mapping_line(self, capsys):
        code, out, _ = invoke(capsys, "kfib", "3")
        lines = out.splitlines()
        assert code == 0
        assert lines[0] == "d=13 r=1 unit=(3+√13)/2 norm=-1"
        assert lines[1] == "F: 1 3 10 33 109 360 1189 3927"

    def test_unit_line(self, capsys):
        code, out, _ = invoke(capsys, "unit", "5")
        assert code == 0
        assert out == "d=5 epsilon=(1+√5)/2 delta=-1 discriminant=5\n"

    def test_unit_power_flags(self, capsys):
        code, out, _ = invoke(
            capsys, "fib", "5", "--from", "1", "--to", "4", "--unit-power", "-1"
        )
        assert (code, out) == (0, "1 -1 2 -3\n")

    def test_gf_rows(self, capsys):
        code, out, _ = invoke(capsys, "gf", "5", "--x", "1/2", "--terms", "30")
        lines = out.splitlines()
        assert code == 0
        assert lines[0].startswith("fib: closed=4 truncated=1071979535/268435456")
        assert len(lines) == 4


class TestVerifyCommand:
    def test_single_identity_passes(self, capsys):
        code, out, _ = invoke(
            capsys, "verify", "5", "--identity", "T25.ii", "--range", "-20..20"
        )
        assert code == 0
        assert out == "T25.ii d=5 range=-20..20 pass\n"

    def test_all_identities(self, capsys):
        code, out, _ = invoke(capsys, "verify", "3", "--range", "-8..8")
        assert code == 0
        assert len(out.splitlines()) == 21

    def test_unknown_identity_is_usage_error(self, capsys):
        code, _, err = invoke(capsys, "verify", "5", "--identity", "T99")
        assert code == 2
        assert err.strip().startswith("quadfib:")

    def test_bad_range_is_usage_error(self, capsys):
        code, _, err = invoke(capsys, "verify", "5", "--range", "20..-20")
        assert code == 2
        assert "quadfib:" in err


class TestUsageErrors:
    def test_non_squarefree_d(self, capsys):
        code, _, err = invoke(capsys, "unit", "12")
        assert code == 2
        assert err == "quadfib: 12 is divisible by 2^2\n"

    def test_missing_subcommand(self, capsys):
        code, _, _ = invoke(capsys)
        assert code == 2

    def test_csv_refused_outside_term_listings(self, capsys):
        code, _, err = invoke(capsys, "unit", "5", "--format", "csv")
        assert code == 2
        assert "csv" in err

    def test_gf_outside_radius(self, capsys):
        code, _, err = invoke(capsys, "gf", "5", "--x", "9/10")
        assert code == 2
        assert "radius" in err


class TestJsonOutput:
    def test_fib_payload_round_trips(self, capsys):
        code, out, _ = invoke(
            capsys, "fib", "13", "--from", "-2", "--to", "5", "--format", "json"
        )
        assert code == 0
        payload = serialize.parse_json(out)
        assert payload["command"] == "fib"
        assert payload["d"] == 13
        assert payload["unit"] == {"x": "3/2", "y": "1/2"}
        assert payload["delta"] == -1
        terms = [serialize.term_from_json(t) for t in payload["terms"]]
        assert terms == slice_terms(context(13), -2, 5)

    def test_verify_payload_round_trips(self, capsys):
        code, out, _ = invoke(
            capsys, "verify", "5", "--range", "-6..6", "--format", "json"
        )
        assert code == 0
        payload = serialize.parse_json(out)
        reports = [serialize.identity_report_from_json(r) for r in payload["reports"]]
        assert reports == verify_all(context(5), (-6, 6))

    def test_unit_payload(self, capsys):
        code, out, _ = invoke(capsys, "unit", "2", "--format", "json")
        payload = serialize.parse_json(out)
        assert (code, payload["discriminant"]) == (0, 8)
        assert payload["unit"] == {"x": "1", "y": "1"}

    def test_kfib_payload(self, capsys):
        code, out, _ = invoke(capsys, "kfib", "2", "--format", "json")
        payload = serialize.parse_json(out)
        assert (payload["k"], payload["r"], payload["d"]) == (2, 2, 2)

    def test_rationals_never_serialized_as_floats(self, capsys):
        _, out, _ = invoke(capsys, "lucas", "3", "--from", "1", "--to", "6", "--format", "json")
        payload = serialize.parse_json(out)
        for term in payload["terms"]:
            assert isinstance(term["lucas"], str)


class TestCsvOutput:
    def test_term_rows(self, capsys):
        code, out, _ = invoke(
            capsys, "fib", "2", "--from", "1", "--to", "3", "--format", "csv"
        )
        assert code == 0
        assert out == "n,fib,lucas\n1,1,1\n2,2,3\n3,5,7\n"
        assert serialize.parse_terms_csv(out) == slice_terms(context(2), 1, 3)


class TestOutputFile:
    def test_out_flag_writes_file(self, capsys, tmp_path):
        target = tmp_path / "row.txt"
        code, out, _ = invoke(
            capsys, "fib", "2", "--from", "1", "--to", "6", "--out", str(target)
        )
        assert code == 0
        assert out == ""
        assert target.read_text() == "1 2 5 12 29 70\n"


class TestOeisCheckCommand:
    def test_cited_match_offline(self, capsys, fixture_dir):
        code, out, _ = invoke(
            capsys, "oeis-check", "2", "--offline", "--cache-dir", str(fixture_dir)
        )
        assert code == 0
        assert "fib A000129 verdict=match" in out
        assert "lucas A001333 verdict=match" in out

    def test_explicit_a_number(self, capsys, fixture_dir):
        code, out, _ = invoke(
            capsys,
            "oeis-check", "2", "--a", "A000129", "--offline",
            "--cache-dir", str(fixture_dir),
        )
        assert code == 0

    def test_wrong_a_number_mismatches(self, capsys, fixture_dir):
        code, out, _ = invoke(
            capsys,
            "oeis-check", "3", "--a", "A000045", "--offline",
            "--cache-dir", str(fixture_dir),
        )
        assert code == 1
        assert "verdict=mismatch" in out

    def test_uncited_d_requires_explicit_a(self, capsys, fixture_dir):
        code, _, err = invoke(
            capsys, "oeis-check", "39", "--offline", "--cache-dir", str(fixture_dir)
        )
        assert code == 2
        assert "--a" in err

    def test_offline_cache_miss_is_io_error(self, capsys, tmp_path):
        code, _, err = invoke(
            capsys, "oeis-check", "2", "--offline", "--cache-dir", str(tmp_path)
        )
        assert code == 3
        assert "quadfib:" in err

    def test_env_var_supplies_cache_dir(self, capsys, monkeypatch, fixture_dir):
        monkeypatch.setenv("QUADFIB_CACHE_DIR", str(fixture_dir))
        code, out, _ = invoke(capsys, "oeis-check", "5", "--offline")
        assert code == 0
        assert out.count("verdict=match") == 2


class TestDeterminism:
    @pytest.mark.parametrize(
        "argv",
        [
            ("fib", "10", "--from", "-10", "--to", "10", "--format", "json"),
            ("verify", "13", "--range", "-5..5", "--format", "json"),
            ("kfib", "7", "--format", "plain"),
        ],
    )
    def test_identical_invocations_are_byte_identical(self, capsys, argv):
        _, first, _ = invoke(capsys, *argv)
        _, second, _ = invoke(capsys, *argv)
        assert first == second


class TestJsonValueEncoding:
    def test_fraction_strings(self):
        assert serialize.frac_to_str(Fraction(7, 2)) == "7/2"
        assert serialize.frac_to_str(Fraction(8)) == "8"
        assert serialize.frac_from_str("7/2") == Fraction(7, 2)
        assert serialize.frac_from_str("-13") == -13

    def test_report_with_counterexamples_round_trips(self, ctx):
        from quadfib.identities import Counterexample, IdentityReport
        from quadfib.quadfield import QuadElement, validate_d

        d = validate_d(5)
        report = IdentityReport(
            identity="T21",
            d=d,
            index_range=(-2, 3),
            passed=False,
            counterexamples=(
                Counterexample((2,), QuadElement(d, 1, 1), QuadElement(d, 1, 2)),
                Counterexample((1, -4), Fraction(3, 2), Fraction(5)),
            ),
            skipped=1,
        )
        blob = serialize.emit_json(serialize.identity_report_to_json(report))
        assert serialize.identity_report_from_json(json.loads(blob)) == report

    def test_match_report_round_trips(self, ctx, fixture_dir):
        from quadfib.oeis import oeis_fetch, oeis_match

        ref = oeis_fetch("A000129", fixture_dir, offline=True)
        report = oeis_match(ctx(2), "fib", ref)
        blob = serialize.match_report_to_json(report)
        assert serialize.match_report_from_json(blob) == report
        assert serialize.oeis_ref_from_json(serialize.oeis_ref_to_json(ref)) == ref
