import json

import pytest

from stirperm.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_triangle_csv_matches_expected_rows(capsys):
    code, out, _ = run(capsys, "triangle", "--n-max", "2", "--format", "csv")
    assert code == 0
    assert out == "n,i,count\n1,1,1\n2,1,1\n2,2,2\n"


def test_triangle_oracle_agreement(capsys):
    code, _, err = run(capsys, "triangle", "--n-max", "3", "--oracle")
    assert code == 0
    assert "oracle agreement" in err


def test_triangle_usage_error_exit_two(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["triangle", "--n-max", "0"])
    assert exc.value.code == 2


def test_triangle_json_round_trips_byte_identical(capsys):
    code, out, _ = run(capsys, "triangle", "--n-max", "7", "--format", "json")
    assert code == 0
    parsed = json.loads(out)
    assert json.dumps(parsed, sort_keys=True, separators=(",", ":")) + "\n" == out


def test_triangle_cache_reuse(tmp_path, capsys):
    cache = tmp_path / "triangle.cache"
    code, first, _ = run(capsys, "triangle", "--n-max", "9", "--cache", str(cache))
    assert code == 0 and cache.exists()
    code, second, _ = run(capsys, "triangle", "--n-max", "9", "--cache", str(cache))
    assert code == 0
    assert first == second


def test_poly_json_with_checks(capsys):
    code, out, _ = run(
        capsys, "poly", "--n", "5", "--wilf", "--eval", "1", "--format", "json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["coefficients"] == [0, 1, 52, 328, 444, 120]
    assert payload["wilf_identity"] is True
    assert payload["evaluation"] == {"point": [1, 1], "value": [945, 1]}


def test_poly_csv_flags_need_json(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["poly", "--n", "3", "--wilf", "--format", "csv"])
    assert exc.value.code == 2


def test_roots_certificate_known_intervals(capsys):
    code, out, _ = run(capsys, "roots", "--n", "2")
    assert code == 0
    payload = json.loads(out)
    assert payload["verified"] is True and payload["count"] == 2
    (a, b, c, d), (e, f, g, h) = payload["intervals"]
    from fractions import Fraction

    # first interval holds -1/2, second holds 0
    lo1, hi1 = Fraction(a, b), Fraction(c, d)
    lo2, hi2 = Fraction(e, f), Fraction(g, h)
    assert lo1 < Fraction(-1, 2) <= hi1
    assert lo2 < 0 <= hi2


def test_roots_single_root_at_order_one(capsys):
    code, out, _ = run(capsys, "roots", "--n", "1")
    assert code == 0
    payload = json.loads(out)
    assert payload["count"] == 1 and len(payload["intervals"]) == 1


def test_roots_with_interlace_and_width(capsys):
    code, out, _ = run(
        capsys, "roots", "--n", "8", "--interlace", "--width", "1/64"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["real_roots"]["verified"] is True
    assert payload["interlacing"]["verified"] is True
    for lo_n, lo_d, hi_n, hi_d in payload["real_roots"]["intervals"]:
        from fractions import Fraction

        assert Fraction(hi_n, hi_d) - Fraction(lo_n, lo_d) <= Fraction(1, 64)


def test_moments_csv_and_json(capsys):
    code, out, _ = run(capsys, "moments", "--n", "2")
    assert code == 0
    assert out == "n,mean,variance,s_n\n2,5/3,2/9,3/1\n"
    code, out, _ = run(capsys, "moments", "--n", "2", "--format", "json")
    payload = json.loads(out)
    assert payload["mean"] == [5, 3]
    assert payload["variance"] == [2, 9]
    assert payload["s_n"] == [3, 1]


def test_mode_output(capsys):
    code, out, _ = run(capsys, "mode", "--n", "4", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["mean"] == [3, 1]
    assert payload["argmax"] == [3]
    assert payload["argmax_in_predicted"] is True


def test_normality_exact_and_empirical(capsys):
    code, out, _ = run(
        capsys,
        "normality", "--n", "10", "--samples", "2000", "--seed", "4",
        "--format", "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert abs(payload["ks_exact"] - 0.18587095509696128) < 1e-9
    assert 0 < payload["ks_empirical"] < 1


def test_normality_requires_seed_with_samples(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["normality", "--n", "5", "--samples", "100"])
    assert exc.value.code == 2


def test_normality_resource_refusal_exit_three(capsys):
    code, _, err = run(capsys, "normality", "--n", "6000")
    assert code == 3
    assert "resource refusal" in err


def test_normality_plot_files(tmp_path, capsys):
    pmf_path = tmp_path / "pmf.csv"
    normal_path = tmp_path / "normal.csv"
    code, _, _ = run(
        capsys,
        "normality", "--n", "12",
        "--plot-out", str(pmf_path),
        "--plot-normal-out", str(normal_path),
    )
    assert code == 0
    pmf_lines = pmf_path.read_text().splitlines()
    assert pmf_lines[0] == "t,density"
    assert len(pmf_lines) == 13
    assert normal_path.read_text().startswith("t,density\n")


def test_sample_streams_words_and_stats_deterministically(capsys):
    code, words, _ = run(capsys, "sample", "--n", "3", "--count", "4", "--seed", "42")
    assert code == 0
    code, again, _ = run(capsys, "sample", "--n", "3", "--count", "4", "--seed", "42")
    assert words == again
    assert len(words.splitlines()) == 4
    code, stats, _ = run(
        capsys, "sample", "--n", "3", "--count", "2", "--seed", "42", "--stats"
    )
    assert stats.splitlines()[0] == "ascents,descents,plateaux"
    first = tuple(int(v) for v in stats.splitlines()[1].split(","))
    assert sum(first) == 7


def test_sample_requires_seed(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["sample", "--n", "3"])
    assert exc.value.code == 2


def test_sample_enumeration_cap_not_applied_to_sampling(capsys):
    # sampling has no order cap; order 40 words stream fine
    code, out, _ = run(capsys, "sample", "--n", "40", "--count", "1", "--seed", "1")
    assert code == 0
    assert out.count(",") == 79


def test_verify_suite_exit_codes(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "sampler", "--quick")
    assert code == 0
    assert "PASS" in out and "FAIL" not in out


def test_output_file_writing(tmp_path, capsys):
    target = tmp_path / "rows.csv"
    code, out, _ = run(
        capsys, "triangle", "--n-max", "2", "--out", str(target)
    )
    assert code == 0
    assert out == ""
    assert target.read_text() == "n,i,count\n1,1,1\n2,1,1\n2,2,2\n"
