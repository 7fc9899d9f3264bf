"""End-to-end command line behaviour, run in-process through main()."""

import pytest

from fparray import (
    FrequencyPermutationArray,
    affine_classes_from_mols,
    canonical_max_distance_fpa,
    fpa_steiner_848,
    hadamard_matrix,
    mols_from_field,
    oa_from_mols,
    separable_from_mols,
    verify,
)
from fparray.cli import main
from fparray.cli.formats import (
    FormatError,
    parse_design,
    parse_fpa,
    parse_hadamard,
    parse_oa,
    parse_squares,
    write_design,
    write_fpa,
    write_hadamard,
    write_oa,
    write_squares,
)

# ---------------------------------------------------------------------------
# construct: files, summaries, stream conventions


def test_steiner_file_and_summary(tmp_path, capsys):
    out = tmp_path / "s.fpa"
    assert main(["construct", "steiner-848", "-o", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "#fpa v1"
    assert lines[1] == "n=8 lambda=4 m=2 d=4 size=14"
    assert lines[2] == "1 0 1 1 0 0 0 1"
    assert len(lines) == 2 + 14
    captured = capsys.readouterr()
    assert captured.out == "FPA(n=8, m=2, lambda=4, d=4, size=14)\n"
    assert captured.err == ""


def test_array_on_stdout_summary_on_stderr(capsys):
    assert main(["construct", "steiner-848"]) == 0
    captured = capsys.readouterr()
    assert captured.out.startswith("#fpa v1\n")
    assert "FPA(n=8, m=2, lambda=4, d=4, size=14)" in captured.err


def test_one_based_is_display_only(tmp_path, capsys):
    assert main(["construct", "steiner-848", "--one-based"]) == 0
    captured = capsys.readouterr()
    assert "\n2 1 2 2 1 1 1 2\n" in captured.out
    out = tmp_path / "s.fpa"
    assert main(["construct", "steiner-848", "--one-based", "-o", str(out)]) == 2
    assert "error" in capsys.readouterr().err


# ---------------------------------------------------------------------------
# verify


def _write_steiner(tmp_path):
    out = tmp_path / "s.fpa"
    assert main(["construct", "steiner-848", "-o", str(out)]) == 0
    return out


def test_verify_accepts_a_good_file(tmp_path, capsys):
    out = _write_steiner(tmp_path)
    assert main(["verify", str(out), "--expect-d", "4", "--expect-size", "14"]) == 0
    stdout = capsys.readouterr().out
    assert "valid: true" in stdout
    assert "size: 14" in stdout
    assert "actual_min_distance: 4" in stdout
    assert "equidistant: false" in stdout
    assert "pair_profile: none" in stdout


def test_verify_reports_profile_of_an_equidistant_array(tmp_path, capsys):
    out = tmp_path / "a.fpa"
    assert main(["construct", "oa", "--q", "3", "-o", str(out)]) == 0
    capsys.readouterr()
    assert main(["verify", str(out)]) == 0
    stdout = capsys.readouterr().out
    assert "equidistant: true" in stdout
    assert "pair_profile: (0,0)=1 (0,1)=1" in stdout


def test_verify_expectation_mismatch_fails(tmp_path, capsys):
    out = _write_steiner(tmp_path)
    assert main(["verify", str(out), "--expect-d", "5"]) == 1
    stdout = capsys.readouterr().out
    assert "reason: expected min distance 5, measured 4" in stdout


def test_verify_catches_an_overclaimed_distance(tmp_path, capsys):
    rows = fpa_steiner_848().row_symbols()
    bogus = FrequencyPermutationArray.from_rows(rows, 2, 4, 5)
    path = tmp_path / "bogus.fpa"
    path.write_text(write_fpa(bogus))
    assert main(["verify", str(path)]) == 1
    stdout = capsys.readouterr().out
    assert "valid: false" in stdout
    assert "reason: minimum distance 4 below claim 5" in stdout


@pytest.mark.parametrize(
    "mutation",
    [
        lambda text: text.replace("#fpa v1", "#fpa v2"),
        lambda text: text.replace("size=14", "size=13"),
        lambda text: text.replace("n=8", "n=8 n=8"),
        lambda text: text.replace("n=8", "n=8 colour=3"),
        lambda text: text.replace("1 0 1 1 0 0 0 1", "1 0 1 1 0 0 0 0"),
    ],
)
def test_corrupt_files_exit_two(tmp_path, capsys, mutation):
    out = _write_steiner(tmp_path)
    capsys.readouterr()
    out.write_text(mutation(out.read_text()))
    assert main(["verify", str(out)]) == 2
    assert "error:" in capsys.readouterr().err


# ---------------------------------------------------------------------------
# the three routes to one array, via files


def test_triple_agreement_byte_for_byte(tmp_path, capsys):
    oa_file = tmp_path / "oa.fpa"
    ard_file = tmp_path / "ard.fpa"
    mds_file = tmp_path / "mds.fpa"
    gen = tmp_path / "g.txt"
    gen.write_text("# generator rows\n1 0 1 2\n0 1 1 1\n")

    assert main(["construct", "oa", "--q", "3", "-o", str(oa_file)]) == 0
    assert main(["construct", "ard", "--q", "3", "-o", str(ard_file)]) == 0
    assert main(["construct", "mds", "--q", "3", "--gen", str(gen), "-o", str(mds_file)]) == 0

    data = oa_file.read_text()
    assert data == ard_file.read_text() == mds_file.read_text()
    assert "n=9 lambda=3 m=3 d=6 size=4" in data
    summaries = capsys.readouterr().out
    assert summaries.count("FPA(n=9, m=3, lambda=3, d=6, size=4)") == 3


def test_rs_convenience_generator_is_also_valid(tmp_path, capsys):
    out = tmp_path / "rs.fpa"
    assert main(["construct", "mds", "--q", "3", "--k", "2", "--n", "4", "-o", str(out)]) == 0
    assert capsys.readouterr().out == "FPA(n=9, m=3, lambda=3, d=6, size=4)\n"
    assert main(["verify", str(out), "--expect-d", "6"]) == 0


def test_mds_requires_exactly_one_source(tmp_path, capsys):
    gen = tmp_path / "g.txt"
    gen.write_text("1 0 1 2\n0 1 1 1\n")
    assert main(["construct", "mds", "--q", "3", "--gen", str(gen), "--k", "2"]) == 2
    assert main(["construct", "mds", "--q", "3"]) == 2


def test_oa_ingredient_roundtrip(tmp_path):
    a = tmp_path / "a.fpa"
    b = tmp_path / "b.fpa"
    c = tmp_path / "c.fpa"
    oa_txt = tmp_path / "oa.txt"
    sq_txt = tmp_path / "sq.txt"

    assert main(["construct", "oa", "--q", "3", "--ingredient-out", str(oa_txt), "-o", str(a)]) == 0
    assert oa_txt.read_text().startswith("#ing v1 oa\nv=9 r=4 s=3 t=2\n")
    assert main(["construct", "oa", "--oa", str(oa_txt), "-o", str(b)]) == 0
    assert main(["construct", "mols", "--q", "3", "-o", str(sq_txt)]) == 0
    assert main(["construct", "oa", "--squares", str(sq_txt), "-o", str(c)]) == 0
    assert a.read_text() == b.read_text() == c.read_text()

    assert main(["construct", "oa", "--q", "3", "--squares", str(sq_txt)]) == 2
    assert main(["construct", "oa"]) == 2


# ---------------------------------------------------------------------------
# remaining construct methods


def test_linearized_summaries(tmp_path, capsys):
    f = tmp_path / "x.fpa"
    assert main(
        ["construct", "linearized", "--q", "3", "--i", "2", "--kind", "trace",
         "--h", "1", "--d", "1", "-o", str(f)]
    ) == 0
    assert capsys.readouterr().out == "FPA(n=9, m=3, lambda=3, d=6, size=24)\n"

    assert main(
        ["construct", "linearized", "--q", "2", "--i", "4", "--kind", "subfield",
         "--subfield-n", "2", "--d", "1", "-o", str(f)]
    ) == 0
    assert capsys.readouterr().out == "FPA(n=16, m=4, lambda=4, d=12, size=60)\n"

    assert main(
        ["construct", "linearized", "--q", "2", "--i", "2", "--kind", "monomial",
         "--d", "1", "-o", str(f)]
    ) == 0
    assert capsys.readouterr().out == "FPA(n=4, m=4, lambda=1, d=2, size=12)\n"

    assert main(
        ["construct", "linearized", "--q", "2", "--i", "4", "--kind", "subfield",
         "--d", "1"]
    ) == 2
    assert main(
        ["construct", "linearized", "--q", "3", "--i", "2", "--kind", "trace",
         "--h", "1", "--d", "3"]
    ) == 2


def test_hadamard_modes(tmp_path, capsys):
    assert main(["construct", "hadamard", "--order", "12"]) == 0
    captured = capsys.readouterr()
    assert captured.out.startswith("#ing v1 had\nn=12\n")
    assert "HAD(n=12)" in captured.err

    f = tmp_path / "h.fpa"
    assert main(["construct", "hadamard", "--order", "12", "--to-fpa", "-o", str(f)]) == 0
    assert capsys.readouterr().out == "FPA(n=12, m=2, lambda=6, d=6, size=22)\n"
    assert main(["construct", "hadamard", "--order", "6"]) == 2


def test_mofs_pipeline(tmp_path, capsys):
    sq = tmp_path / "sq.txt"
    f = tmp_path / "f.fpa"
    assert main(["construct", "mofs", "--q", "2", "--i", "2", "-o", str(sq)]) == 0
    assert capsys.readouterr().out == "FSQ(n=4, m=2, lambda=2, count=9)\n"
    assert main(["construct", "fpa-from-mofs", "--squares", str(sq), "-o", str(f)]) == 0
    assert capsys.readouterr().out == "FPA(n=8, m=4, lambda=2, d=4, size=18)\n"


# ---------------------------------------------------------------------------
# transform


def test_split_transforms_match_the_size_ladder(tmp_path, capsys):
    h = tmp_path / "h.fpa"
    r = tmp_path / "r.fpa"
    p = tmp_path / "p.fpa"
    assert main(["construct", "hadamard", "--order", "12", "--to-fpa", "-o", str(h)]) == 0
    assert main(["transform", "refine", str(h), "--l", "3", "-o", str(r)]) == 0
    assert main(["transform", "expand-to-pa", str(r), "-o", str(p)]) == 0
    out = capsys.readouterr().out
    assert "FPA(n=12, m=4, lambda=3, d=6, size=44)" in out
    assert "FPA(n=12, m=12, lambda=1, d=6, size=132)" in out
    assert main(["verify", str(p), "--expect-size", "132"]) == 0


def test_reduce_mod_transform(tmp_path, capsys):
    a = tmp_path / "a.fpa"
    b = tmp_path / "b.fpa"
    assert main(["construct", "oa", "--q", "4", "-o", str(a)]) == 0
    assert main(["transform", "reduce-mod", str(a), "--r", "2", "-o", str(b)]) == 0
    out = capsys.readouterr().out
    assert "FPA(n=16, m=2, lambda=8, d=8, size=5)" in out
    assert main(["transform", "reduce-mod", str(a)]) == 2  # missing --r
    assert main(["transform", "refine", str(a)]) == 2  # missing --l


def test_pad_juxtapose_product_compose(tmp_path, capsys):
    base = tmp_path / "base.fpa"
    assert main(["construct", "oa", "--q", "3", "-o", str(base)]) == 0

    assert main(["transform", "pad", str(base)]) == 0
    assert main(["transform", "juxtapose", str(base), str(base)]) == 0
    assert main(["transform", "product", str(base), str(base)]) == 0
    err_before = capsys.readouterr().err
    assert "FPA(n=12, m=4, lambda=3, d=6, size=4)" in err_before
    assert "FPA(n=18, m=3, lambda=6, d=12, size=4)" in err_before
    assert "FPA(n=18, m=6, lambda=3, d=6, size=16)" in err_before
    assert main(["transform", "juxtapose", str(base)]) == 2  # arity

    ing = tmp_path / "ing.fpa"
    coarse = tmp_path / "coarse.fpa"
    ing.write_text(write_fpa(canonical_max_distance_fpa(2, 2)))
    coarse.write_text(write_fpa(canonical_max_distance_fpa(3, 4)))
    assert main(
        ["transform", "compose", str(ing), str(ing), str(ing), "--c", str(coarse)]
    ) == 0
    assert "FPA(n=12, m=6, lambda=2, d=12, size=6)" in capsys.readouterr().err
    assert main(["transform", "compose", str(ing)]) == 2  # missing --c


def test_sep_product_transform(tmp_path, capsys):
    sep = separable_from_mols(mols_from_field(4))
    rows = [row for cls in sep.classes for row in cls.row_symbols()]
    stacked = tmp_path / "классы.fpa"
    stacked.write_text(write_fpa(FrequencyPermutationArray.from_rows(rows, 4, 1, 3)))

    out = tmp_path / "prod.fpa"
    assert main(
        ["transform", "sep-product", str(stacked), str(stacked),
         "--classes", "3", "-o", str(out)]
    ) == 0
    assert capsys.readouterr().out == "FPA(n=8, m=4, lambda=2, d=4, size=48)\n"
    assert main(["verify", str(out), "--expect-size", "48", "--expect-d", "4"]) == 0
    assert main(["transform", "sep-product", str(stacked)]) == 2  # missing --classes


# ---------------------------------------------------------------------------
# bounds and search


def test_bounds_table_and_machine_line(capsys):
    assert main(["bounds", "--n", "4", "--lambda", "2", "--d", "3", "--exact", "--machine"]) == 0
    stdout = capsys.readouterr().out
    assert "parameters      n=4 m=2 lambda=2 d=3" in stdout
    assert "total           6" in stdout
    assert "exact           2 (proven)" in stdout
    assert "pa_chain_upper  6" in stdout
    assert stdout.rstrip().endswith("gv=2 hamming=6 plotkin=3 trivial=6 exact=2")


def test_bounds_without_search_reports_unknown(capsys):
    assert main(["bounds", "--n", "6", "--lambda", "3", "--d", "4", "--machine"]) == 0
    stdout = capsys.readouterr().out
    assert "exact          unknown" in stdout
    assert stdout.rstrip().endswith("gv=2 hamming=20 plotkin=4 trivial=40 exact=?")


def test_bounds_small_distance_is_exact_without_search(capsys):
    assert main(["bounds", "--n", "10", "--lambda", "5", "--d", "2", "--machine"]) == 0
    stdout = capsys.readouterr().out
    assert "exact          252 (proven)" in stdout
    assert "plotkin=NA" in stdout
    assert "exact=252" in stdout


def test_bounds_rejects_bad_parameters(capsys):
    assert main(["bounds", "--n", "6", "--lambda", "4", "--d", "3"]) == 2
    assert main(["bounds", "--n", "6", "--lambda", "3", "--d", "7"]) == 2


def test_search_with_witness(tmp_path, capsys):
    w = tmp_path / "w.fpa"
    assert main(["search", "--n", "6", "--lambda", "3", "--d", "4", "-o", str(w)]) == 0
    stdout = capsys.readouterr().out
    assert stdout.splitlines()[0] == "M(n=6, lambda=3, d=4) = 4 (proven)"
    assert "FPA(n=6, m=2, lambda=3, d=4, size=4)" in stdout
    array = parse_fpa(w.read_text())
    assert verify(array).valid and array.size == 4


def test_search_reports_incomplete_runs(capsys):
    assert main(["search", "--n", "6", "--lambda", "1", "--d", "5", "--budget", "50"]) == 0
    assert "(search incomplete)" in capsys.readouterr().out


def test_search_vertex_budget_exit(capsys):
    assert main(["search", "--n", "8", "--lambda", "2", "--d", "4"]) == 2
    assert "work limit exceeded" in capsys.readouterr().err


# ---------------------------------------------------------------------------
# on-disk format round trips (library level)


def test_fpa_format_roundtrip():
    array = fpa_steiner_848()
    text = write_fpa(array)
    back = parse_fpa(text)
    assert back.row_symbols() == array.row_symbols()
    assert (back.n, back.m, back.lam, back.min_distance_claim) == (8, 2, 4, 4)
    assert write_fpa(back) == text


def test_squares_format_roundtrip():
    squares = mols_from_field(4)
    text = write_squares(squares)
    back = parse_squares(text)
    assert [sq.cells for sq in back] == [sq.cells for sq in squares]
    assert write_squares(back) == text


def test_oa_format_roundtrip():
    oa = oa_from_mols(mols_from_field(3))
    text = write_oa(oa)
    back = parse_oa(text)
    assert back == oa
    assert write_oa(back) == text


def test_design_format_roundtrip():
    design = affine_classes_from_mols(mols_from_field(3))
    text = write_design(design)
    back = parse_design(text)
    assert back == design
    assert write_design(back) == text


def test_hadamard_format_roundtrip():
    H = hadamard_matrix(8)
    text = write_hadamard(H)
    back = parse_hadamard(text)
    assert back == H
    assert write_hadamard(back) == text


def test_parsers_reject_mismatched_kinds():
    oa_text = write_oa(oa_from_mols(mols_from_field(3)))
    with pytest.raises(FormatError):
        parse_squares(oa_text)
    with pytest.raises(FormatError):
        parse_fpa(oa_text)
