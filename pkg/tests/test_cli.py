"""End-to-end runs of the command line entry point."""

import json

import pytest

from semiab import (
    algebra_to_doc,
    corpus_to_doc,
    cube_to_doc,
    cyclic_group,
    identity_morphism,
    morphism,
    morphism_to_doc,
    morphism_from_doc,
    square,
    zring,
)
from semiab.cli import run
from semiab.corpus import CORPUS_DIR_VAR


def _write(path, doc):
    path.write_text(json.dumps(doc))
    return str(path)


def _ring_mod(m, n):
    return morphism(zring(m), zring(n), [x % n for x in range(m)])


def test_check_protoadditive_pass(capsys):
    assert run(["check-protoadditive", "--reflector", "reduced", "--corpus", "rings"]) == 0
    out = capsys.readouterr().out
    assert "protoadditive" in out
    assert "41" in out  # split sequences examined


def test_check_protoadditive_failure_exit_code(capsys):
    assert run(["check-protoadditive", "--reflector", "ab", "--corpus", "groups"]) == 2
    out = capsys.readouterr().out
    assert "not protoadditive" in out


def test_check_protoadditive_json(capsys):
    assert run(["check-protoadditive", "--reflector", "ab", "--corpus", "groups", "--json"]) == 2
    doc = json.loads(capsys.readouterr().out)
    assert doc["format"] == "semiab-report"
    assert doc["verdict"] == "fail"
    assert doc["witnesses"]


def test_radical_by_name(capsys):
    assert run(["radical", "--reflector", "ab", "--algebra", "s3"]) == 0
    out = capsys.readouterr().out
    assert "{0, 3, 4}" in out or "[0, 3, 4]" in out


def test_radical_json(capsys):
    assert run(["radical", "--reflector", "reduced", "--algebra", "z12", "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["format"] == "semiab-radical"
    assert doc["radical"] == [0, 6]
    assert doc["reflection"]["order"] == 6


def test_radical_from_file(tmp_path, capsys):
    path = _write(tmp_path / "alg.json", algebra_to_doc(zring(8)))
    assert run(["radical", "--reflector", "reduced", "--algebra", path, "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["radical"] == [0, 2, 4, 6]


def test_radical_unknown_name_is_usage_error(capsys):
    assert run(["radical", "--reflector", "ab", "--algebra", "missing-thing"]) == 1
    assert "error" in capsys.readouterr().err.lower()


def test_radical_wrong_kind_is_usage_error(capsys):
    assert run(["radical", "--reflector", "reduced", "--algebra", "s3"]) == 1


def test_malformed_json_is_exit_3(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{broken")
    assert run(["radical", "--reflector", "reduced", "--algebra", str(bad)]) == 3
    err = capsys.readouterr().err
    assert "bad.json" in err


def test_wrong_format_doc_is_exit_3(tmp_path, capsys):
    path = _write(tmp_path / "m.json", morphism_to_doc(_ring_mod(4, 2)))
    assert run(["radical", "--reflector", "reduced", "--algebra", path]) == 3


def test_factorize_writes_both_parts(tmp_path, capsys):
    path = _write(tmp_path / "f.json", morphism_to_doc(_ring_mod(12, 2)))
    assert run(["factorize", "--reflector", "reduced", "--morphism", path]) == 0
    out = capsys.readouterr().out
    e_doc = json.loads((tmp_path / "f.e.json").read_text())
    m_doc = json.loads((tmp_path / "f.m.json").read_text())
    e = morphism_from_doc(e_doc)
    m = morphism_from_doc(m_doc)
    assert e.cod.order == 6
    from semiab import compose

    assert compose(m, e) == _ring_mod(12, 2)
    assert "e:" in out and "m:" in out


def test_factorize_json_mode(tmp_path, capsys):
    path = _write(tmp_path / "g.json", morphism_to_doc(_ring_mod(4, 2)))
    assert run(["factorize", "--reflector", "reduced", "--morphism", path, "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["format"] == "semiab-factorisation"
    assert doc["middle"]["order"] == 2
    assert doc["files"]["e"].endswith("g.e.json")
    assert morphism_from_doc(doc["m"]).dom.order == 2


def test_extension_check_trivial_and_normal(tmp_path, capsys):
    path = _write(tmp_path / "f.json", morphism_to_doc(_ring_mod(6, 2)))
    assert run(["extension-check", "--reflector", "reduced", "--morphism", path, "--kind", "trivial"]) == 0
    path2 = _write(tmp_path / "g.json", morphism_to_doc(_ring_mod(12, 2)))
    assert run(["extension-check", "--reflector", "reduced", "--morphism", path2, "--kind", "normal"]) == 2


def test_extension_check_double_needs_square(tmp_path, capsys):
    f = _ring_mod(4, 2)
    sq = square(f, f, identity_morphism(f.cod), identity_morphism(f.cod))
    path = _write(tmp_path / "sq.json", cube_to_doc(sq))
    code = run(["extension-check", "--reflector", "reduced", "--cube", path, "--kind", "double"])
    assert code in (0, 2)
    # a morphism is not enough for the double check
    mpath = _write(tmp_path / "f.json", morphism_to_doc(f))
    assert run(["extension-check", "--reflector", "reduced", "--morphism", mpath, "--kind", "double"]) == 1


def test_homology_command(capsys):
    assert run([
        "homology", "--variety", "zmod:4", "--coeff", "burnside:2",
        "--object", "m4-c2", "--degree", "2",
    ]) == 0
    out = capsys.readouterr().out
    assert "H2" in out and "C2" in out
    assert "presentation pair" in out


def test_homology_json(capsys):
    assert run([
        "homology", "--variety", "zmod:4", "--coeff", "burnside:2",
        "--object", "m4-c2", "--degree", "2", "--json",
    ]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["format"] == "semiab-homology"
    assert doc["label"] == "C2"
    assert doc["module"]["order"] == 2
    assert [p["rank-order"] for p in doc["presentations"]] == [4, 16]


def test_verify_single_suite(capsys):
    assert run(["verify", "--suite", "thm-1.6"]) == 0
    out = capsys.readouterr().out
    assert "thm-1.6" in out and "pass" in out
    assert "claim:" in out


def test_verify_failing_configuration(capsys):
    code = run([
        "verify", "--suite", "thm-1.6",
        "--reflector", "burnside:2", "--corpus", "abelian-groups",
    ])
    assert code == 2
    assert "fail" in capsys.readouterr().out


def test_verify_json_report(capsys):
    assert run(["verify", "--suite", "prop-2.2", "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["format"] == "semiab-report"
    assert doc["suite"] == "prop-2.2"


def test_verify_unknown_suite(capsys):
    assert run(["verify", "--suite", "thm-0.0"]) == 1


def test_verify_incompatible_pair_is_usage_error(capsys):
    code = run([
        "verify", "--suite", "prop-3.1",
        "--reflector", "burnside:2", "--corpus", "zmod4-modules",
    ])
    assert code == 1


def test_verify_all_forbids_overrides(capsys):
    assert run(["verify", "--suite", "all", "--reflector", "ab"]) == 1


def test_usage_errors_are_exit_1(capsys):
    assert run([]) == 1
    assert run(["radical"]) == 1
    assert run(["radical", "--reflector", "nope", "--algebra", "s3"]) == 1
    assert run(["no-such-command"]) == 1


def test_corpus_override_reaches_cli(tmp_path, capsys, monkeypatch):
    doc = corpus_to_doc((cyclic_group(2, name="only2"),))
    (tmp_path / "groups.json").write_text(json.dumps(doc))
    monkeypatch.setenv(CORPUS_DIR_VAR, str(tmp_path))
    assert run(["check-protoadditive", "--reflector", "ab", "--corpus", "groups"]) == 0
    out = capsys.readouterr().out
    assert "protoadditive" in out
