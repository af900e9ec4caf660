import subprocess
import sys

import pytest

from splitcert.cli import main

ASSET_SRC = "src/splitcert/assets"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.fixture
def triangle_file(tmp_path):
    p = tmp_path / "tri.scx"
    p.write_text("a b c\n")
    return str(p)


# ----------------------------------------------------------------- complex

def test_complex_chi_empty_file(tmp_path, capsys):
    f = tmp_path / "empty.scx"
    f.write_text("")
    code, out, _ = run(capsys, "complex", "chi", str(f))
    assert code == 0
    assert out == "chi: 0\n"


def test_complex_validate(triangle_file, capsys):
    code, out, _ = run(capsys, "complex", "validate", triangle_file)
    assert code == 0
    assert "7 simplices" in out and "chi 1" in out


def test_complex_validate_bad_file(tmp_path, capsys):
    f = tmp_path / "bad.scx"
    f.write_text("a a\n")
    code, _, err = run(capsys, "complex", "validate", str(f))
    assert code == 1
    assert "invalid" in err


def test_complex_free_faces(triangle_file, capsys):
    code, out, _ = run(capsys, "complex", "free-faces", triangle_file)
    assert code == 0
    assert out.splitlines()[0] == "free faces: 3"


def test_complex_collapse_and_search(triangle_file, capsys):
    code, out, _ = run(capsys, "complex", "collapse", triangle_file)
    assert code == 0
    assert "collapsed to point: yes" in out

    code, out, _ = run(capsys, "complex", "search", triangle_file)
    assert code == 0
    assert out.startswith("verdict: yes")


def test_complex_search_dunce_says_no(capsys):
    code, out, _ = run(capsys, "complex", "search",
                       f"{ASSET_SRC}/dunce_hat.scx")
    assert code == 1
    assert out.startswith("verdict: no")


def test_complex_search_budget_unknown(triangle_file, capsys):
    code, out, _ = run(capsys, "complex", "search", triangle_file,
                       "--budget", "1")
    assert code == 1
    assert "unknown" in out


def test_missing_file_is_exit_2(capsys):
    code, _, err = run(capsys, "complex", "chi", "/no/such/file.scx")
    assert code == 2
    assert err.startswith("error:")


# -------------------------------------------------------------------- cert

def test_cert_replay_pass(capsys):
    code, out, _ = run(capsys, "cert", "replay",
                       f"{ASSET_SRC}/jester_C.scx",
                       f"{ASSET_SRC}/jester_C.cert")
    assert code == 0
    assert "collapsed to point: yes (vertex v)" in out


def test_cert_replay_fails_on_wrong_complex(capsys, tmp_path):
    f = tmp_path / "tri.scx"
    f.write_text("a b c\n")
    code, out, _ = run(capsys, "cert", "replay", str(f),
                       f"{ASSET_SRC}/jester_C.cert")
    assert code == 1
    assert "replay failed at step 0" in out


def test_cert_replay_partial(capsys, tmp_path):
    f = tmp_path / "tri.scx"
    f.write_text("a b c\n")
    cert = tmp_path / "half.cert"
    cert.write_text("a b\n")  # one collapse, leaves an arc
    code, out, _ = run(capsys, "cert", "replay", str(f), str(cert))
    assert code == 1
    assert "collapsed to point: no" in out


# ----------------------------------------------------------- named checks

def test_dunce_check(capsys):
    code, out, _ = run(capsys, "dunce", "check")
    assert code == 0
    assert "dunce hat: PASS" in out


def test_jester_verify_split(capsys):
    code, out, _ = run(capsys, "jester", "verify-split")
    assert code == 0
    assert "conclusion: splits-into-closed-balls" in out


def test_jester_verify_split_detects_tampering(capsys, asset_copy):
    spine = asset_copy / "jester_hat.scx"
    lines = [l for l in spine.read_text().splitlines()
             if l.strip() and not l.startswith("#")]
    spine.write_text("\n".join(lines[:-1]) + "\n")  # drop one triangle
    code, out, _ = run(capsys, "jester", "verify-split",
                       "--assets", str(asset_copy))
    assert code == 1
    assert "jester split: FAIL" in out


def test_mazur_certify(capsys):
    code, out, _ = run(capsys, "mazur", "certify")
    assert code == 0
    assert "PI1_BOUNDARY_NONTRIVIAL: PASS" in out
    assert "MERIDIAN_NONTRIVIAL: PASS" in out
    assert "meridian displacement: 3.328648500" in out


# ------------------------------------------------------------------- group

def test_wirtinger_output(capsys):
    code, out, _ = run(capsys, "wirtinger", f"{ASSET_SRC}/mazur_link.lnk")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("gens: ")
    assert len([l for l in lines if l.startswith("rel: ")]) == 9


def test_group_reduce(capsys):
    code, out, _ = run(capsys, "group", "reduce", "a A b B b")
    assert code == 0
    assert out == "b\n"


def test_group_subst(capsys):
    code, out, _ = run(capsys, "group", "subst", "a B",
                       "-m", "a=x y", "-m", "b=y")
    assert code == 0
    assert out == "x\n"


def test_group_abelianize(capsys, tmp_path):
    f = tmp_path / "p.fp"
    f.write_text("gens: a b\nrel: a b A B\n")
    code, out, _ = run(capsys, "group", "abelianize", str(f))
    assert code == 0
    assert out == "Z + Z\n"


def test_group_tietze_add_gen(capsys, tmp_path):
    f = tmp_path / "p.fp"
    f.write_text("gens: a\nrel: a a a\n")
    code, out, _ = run(capsys, "group", "tietze", str(f),
                       "--add-gen", "b=a a")
    assert code == 0
    assert "gens: a b" in out
    assert "rel: b A A" in out


def test_group_tietze_add_and_remove_rel(capsys, tmp_path):
    f = tmp_path / "p.fp"
    f.write_text("gens: a b\nrel: a a a\nrel: b b\n")
    code, out, _ = run(capsys, "group", "tietze", str(f),
                       "--add-rel", "B a a a b b b", "--by", "0:+:b,1:+:")
    assert code == 0
    assert out.count("rel: ") == 3

    code, out, _ = run(capsys, "group", "tietze", str(f),
                       "--remove-rel", "0", "--by", "1:+:")
    assert code == 1  # a^3 is not a consequence of b^2


def test_group_tietze_remove_gen(capsys, tmp_path):
    f = tmp_path / "p.fp"
    f.write_text("gens: a b\nrel: b A A\nrel: b b b\n")
    code, out, _ = run(capsys, "group", "tietze", str(f),
                       "--remove-gen", "b", "--using", "0")
    assert code == 0
    assert "gens: a" in out
    assert "rel: a a a a a a" in out


def test_group_tietze_bad_certificate_exit_1(capsys, tmp_path):
    f = tmp_path / "p.fp"
    f.write_text("gens: a\nrel: a a\n")
    code, _, err = run(capsys, "group", "tietze", str(f),
                       "--add-rel", "a", "--by", "0:+:")
    assert code == 1
    assert "rejected" in err


def test_group_tietze_needs_a_move(capsys, tmp_path):
    f = tmp_path / "p.fp"
    f.write_text("gens: a\n")
    code, _, err = run(capsys, "group", "tietze", str(f))
    assert code == 2
    assert "choose one" in err


# --------------------------------------------------------------------- csi

def test_csi_distinguish(capsys):
    code, out, _ = run(capsys, "csi", "distinguish", "J1:2,J5:w", "J1:2")
    assert code == 0
    assert out == "distinguishable: yes\n"

    code, out, _ = run(capsys, "csi", "distinguish", "J1:w", "J1:w")
    assert code == 1
    assert out == "distinguishable: no\n"

    code, out, _ = run(capsys, "csi", "distinguish", "-", "-")
    assert code == 1


def test_csi_bad_literal(capsys):
    code, _, err = run(capsys, "csi", "distinguish", "J1", "J2:1")
    assert code == 2
    assert "LABEL:COUNT" in err


# -------------------------------------------------------------- verify-all

def test_verify_all_passes_and_is_byte_stable(capsys):
    code1, out1, _ = run(capsys, "verify-all")
    code2, out2, _ = run(capsys, "verify-all")
    assert code1 == code2 == 0
    assert out1 == out2
    assert out1.strip().endswith("overall PASS")


def test_verify_all_corrupt_complex_fails_named_checks(capsys, asset_copy):
    spine = asset_copy / "jester_hat.scx"
    lines = [l for l in spine.read_text().splitlines()
             if l.strip() and not l.startswith("#")]
    spine.write_text("\n".join(lines[:-1]) + "\n")
    code, out, _ = run(capsys, "verify-all", "--assets", str(asset_copy))
    assert code == 1
    report = {line.split()[0]: line.split()[1]
              for line in out.splitlines() if line and " " in line}
    assert report["JESTER_DECOMPOSITION"] == "FAIL"
    assert report["DUNCE_FREE_FACES"] == "PASS"
    assert report["DUNCE_EULER"] == "PASS"
    assert report["overall"] == "FAIL"


def test_verify_all_missing_diagram_fails_only_its_checks(capsys, asset_copy):
    (asset_copy / "mazur_link.lnk").unlink()
    code, out, _ = run(capsys, "verify-all", "--assets", str(asset_copy))
    assert code == 1
    report = {line.split()[0]: line.split()[1]
              for line in out.splitlines() if line and " " in line}
    assert report["MAZUR_WIRTINGER_SHAPE"] == "FAIL"
    assert report["MAZUR_DERIVATION_CHAIN"] == "FAIL"
    assert report["DUNCE_FREE_FACES"] == "PASS"
    assert report["JESTER_SPLIT_CERT"] == "PASS"
    # the pure-geometry checks do not touch assets at all
    assert report["TRIANGLE_RELATORS"] == "PASS"
    assert report["overall"] == "FAIL"


# ------------------------------------------------------------------- misc

def test_unknown_subcommand_is_exit_2():
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_console_script_version():
    out = subprocess.run([sys.executable, "-m", "splitcert.cli", "--version"],
                         capture_output=True, text=True)
    assert out.returncode == 0
    assert out.stdout.strip() == "0.1.0"
