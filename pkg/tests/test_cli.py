import json

import pytest

from sdc.cli import main
from sdc.codes import construct
from sdc.genfile import parse_code_file, save_code_file


@pytest.fixture
def files(tmp_path):
    out = {}
    for name in ["golay_24", "extended_hamming_8", "c4", "repetition_3", "i2_2"]:
        p = tmp_path / f"{name}.gen"
        save_code_file(p, construct(name), name)
        out[name] = str(p)
    return out


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr()


def test_info(files, capsys):
    code, out = run(capsys, "--json", "info", files["golay_24"])
    assert code == 0
    rec = json.loads(out.out)
    assert rec == {
        "label": "golay_24", "n": 24, "k": 12, "min_distance": 8,
        "self_dual": True, "doubly_even": True, "extremal": True,
    }
    code, out = run(capsys, "info", files["repetition_3"])
    assert "extremal: None" in out.out


def test_mindist(files, capsys):
    code, out = run(capsys, "mindist", files["golay_24"])
    assert (code, out.out.strip()) == (0, "8")
    code, out = run(capsys, "mindist", "--brute", files["extended_hamming_8"])
    assert (code, out.out.strip()) == (0, "4")


def test_dual(files, capsys):
    code, out = run(capsys, "dual", files["repetition_3"])
    assert code == 0
    assert parse_code_file(out.out).code.k == 2


def test_shadow(files, capsys):
    code, out = run(capsys, "--json", "shadow", files["c4"])
    rec = json.loads(out.out)
    assert code == 0 and rec["equals_code"] is False and rec["min_weight"] == 2
    code, _ = run(capsys, "shadow", files["repetition_3"])
    assert code == 2


def test_decompose_and_fixedcode(files, capsys):
    code, out = run(capsys, "--json", "decompose", files["c4"], "--perm", "(1,2)(3,4)")
    rec = json.loads(out.out)
    assert code == 0 and rec["rank_profile"] == [2, 1, 0] and rec["free"]
    code, out = run(capsys, "fixedcode", files["c4"], "--perm", "(1,2)(3,4)")
    assert out.out.strip().splitlines() == ["4 1", "1111"]
    code, out = run(capsys, "decompose", files["c4"], "--perm", "(1,2)")
    assert code == 2 and "does not stabilize" in out.err


def test_dualitychain(files, capsys):
    code, out = run(capsys, "--json", "dualitychain", files["c4"], "--perm", "(1,2)(3,4)")
    assert code == 0 and json.loads(out.out)["holds"]
    code, _ = run(capsys, "dualitychain", files["repetition_3"], "--perm", "(1,2)")
    assert code == 2


def test_overcodes(files, capsys):
    code, out = run(capsys, "overcodes", files["extended_hamming_8"], "--distance", "3")
    assert (code, out.out.strip()) == (0, "none")
    code, out = run(capsys, "--json", "overcodes", files["extended_hamming_8"], "--distance", "2")
    assert json.loads(out.out)["overcode_distance"] == 2


def test_autsearch(files, capsys):
    code, out = run(capsys, "autsearch", files["extended_hamming_8"], "--cycle-type", "8")
    assert (code, out.out.strip()) == (0, "none")
    code, out = run(capsys, "autsearch", files["golay_24"], "--cycle-type", "2^12")
    assert code == 0 and out.out.count("(") == 12
    code, _ = run(capsys, "autsearch", files["c4"], "--cycle-type", "4^9")
    assert code == 2
    code, _ = run(capsys, "autsearch", files["c4"], "--cycle-type", "x")
    assert code == 2


def test_fixture_spec(capsys):
    code, out = run(capsys, "mindist", "fixture:golay_24")
    assert out.out.strip() == "8"
    code, _ = run(capsys, "mindist", "fixture:bogus")
    assert code == 2


def test_input_errors(tmp_path, capsys):
    bad = tmp_path / "bad.gen"
    bad.write_text("4 2\n1100\n1100\n")
    code, out = run(capsys, "info", str(bad))
    assert code == 2 and "rank 1" in out.err
    code, _ = run(capsys, "info", str(tmp_path / "missing.gen"))
    assert code == 2
    code, _ = run(capsys, "verify-paper", str(tmp_path / "nodir"))
    assert code == 2
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2
