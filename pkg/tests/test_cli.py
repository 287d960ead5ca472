import pytest

from codetuples.cli import main
from codetuples.core import serialize_code_tuple, serialize_dist
from codetuples.reference import TUPLES, main_dist


@pytest.fixture
def files(tmp_path):
    def write(name, text):
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)

    paths = {key: write(key + ".ct", serialize_code_tuple(TUPLES[key]))
             for key in ("r1", "r2", "r3", "r5", "r7", "r10")}
    paths["dist"] = write("main.dist", serialize_dist(main_dist()))
    paths["skew"] = write("skew.dist", "a 9/10\nb 1/10\n")
    return paths


def run(capsys, argv):
    rc = main(argv)
    captured = capsys.readouterr()
    return rc, captured.out.splitlines(), captured.err


def test_psets_output(files, capsys):
    rc, lines, _ = run(capsys, ["psets", "--tuple", files["r3"], "--k", "2"])
    assert rc == 0
    assert lines == ["P2[0]={01,10}", "P2[1]={00,01,10}", "P2[2]={11}"]


def test_check_output(files, capsys):
    rc, lines, _ = run(capsys, ["check", "--tuple", files["r1"]])
    assert rc == 0
    assert "extendable = no" in lines
    assert "dead = 2" in lines
    assert "regular = yes" in lines
    assert "core = 2" in lines
    assert "decodable = yes" in lines


def test_check_reports_violations(files, capsys):
    rc, lines, _ = run(capsys, ["check", "--tuple", files["r2"]])
    assert rc == 0
    assert "decodable = no" in lines
    assert any(line.startswith("violation = ") for line in lines)


def test_classify_output(files, capsys):
    rc, lines, _ = run(capsys, ["classify", "--tuple", files["r10"]])
    assert rc == 0
    assert lines[0] == "extendable PASS"
    assert lines[-1] == "finest = aifv"
    rc2, lines2, _ = run(capsys, ["classify", "--tuple", files["r2"]])
    assert rc2 == 0
    assert lines2[-1] == "finest = -"


def test_encode_output(files, capsys):
    rc, lines, _ = run(capsys, ["encode", "--tuple", files["r3"],
                                "--start", "0", "--symbols", "badb"])
    assert rc == 0
    assert lines == ["bits = 1000001111110", "end_table = 0"]


def test_decode_output(files, capsys):
    rc, lines, _ = run(capsys, ["decode", "--tuple", files["r3"],
                                "--bits", "1000001111110"])
    assert rc == 0
    assert lines[0] == "decoded = b a d b"
    assert lines[1] == "end_table = 0"
    assert "TAIL" in lines
    assert "resolved = yes" in lines


def test_decode_dangling_tail(files, capsys):
    rc, lines, _ = run(capsys, ["decode", "--tuple", files["r3"],
                                "--bits", "1000111"])
    assert rc == 0
    assert lines[0] == "decoded = b"
    assert "bits = 00111" in lines
    assert "resolved = no" in lines
    assert "completion = c" in lines
    assert "completion = d" in lines
    assert "capped = no" in lines


def test_decode_bits_file(files, tmp_path, capsys):
    path = tmp_path / "stream.bits"
    path.write_text("10000\n01111110\n", encoding="utf-8")
    rc, lines, _ = run(capsys, ["decode", "--tuple", files["r3"],
                                "--bits-file", str(path)])
    assert rc == 0
    assert lines[0] == "decoded = b a d b"


def test_decode_needs_bits_or_roundtrip(files, capsys):
    with pytest.raises(SystemExit) as exit_info:
        main(["decode", "--tuple", files["r3"]])
    assert exit_info.value.code == 2


def test_roundtrip_requires_seed(files, capsys):
    with pytest.raises(SystemExit) as exit_info:
        main(["decode", "--tuple", files["r3"], "--roundtrip"])
    assert exit_info.value.code == 2


def test_roundtrip_success(files, capsys):
    rc, lines, _ = run(capsys, ["decode", "--tuple", files["r3"],
                                "--roundtrip", "--seed", "7",
                                "--trials", "100"])
    assert rc == 0
    assert "trials = 100" in lines
    assert "failures = 0" in lines


def test_roundtrip_failures_exit_nonzero(files, capsys):
    rc, lines, _ = run(capsys, ["decode", "--tuple", files["r2"],
                                "--roundtrip", "--seed", "3",
                                "--trials", "100"])
    assert rc == 1
    assert any(line.startswith("failure = trial") for line in lines)


def test_transform_rotate(files, capsys):
    rc, lines, _ = run(capsys, ["transform", "--tuple", files["r3"],
                                "--op", "rotate"])
    assert rc == 0
    assert lines[0] == "# op = rotate"
    assert lines[1] == "# bits = - - 1"
    body = "\n".join(lines[2:]) + "\n"
    assert body == serialize_code_tuple(TUPLES["r4"])


def test_transform_chain(files, capsys):
    rc, lines, _ = run(capsys, ["transform", "--tuple", files["r5"],
                                "--op", "chain", "--target", "f2",
                                "--dist", files["dist"]])
    assert rc == 0
    assert lines[0] == "# target = f2"
    assert lines[1] == "# steps = 2"
    assert "# step 1 op = dot" in lines
    assert "# step 2 op = rotate" in lines
    assert sum(1 for line in lines if line.startswith("# L = ")) == 2


def test_transform_chain_requires_target(files, capsys):
    with pytest.raises(SystemExit) as exit_info:
        main(["transform", "--tuple", files["r5"], "--op", "chain"])
    assert exit_info.value.code == 2


def test_transform_outside_class_fails(files, capsys):
    rc, lines, err = run(capsys, ["transform", "--tuple", files["r3"],
                                  "--op", "dot"])
    assert rc == 1
    assert err.startswith("error: ")


def test_stationary_output(files, capsys):
    rc, lines, _ = run(capsys, ["stationary", "--tuple", files["r3"],
                                "--dist", files["dist"]])
    assert rc == 0
    assert lines[0] == "pi[0] = 1/4 ≈ 0.2500"
    assert lines[1] == "pi[1] = 5/28 ≈ 0.1786"
    assert lines[2] == "pi[2] = 4/7 ≈ 0.5714"
    assert lines[3] == "len[0] = 13/5 ≈ 2.6000"


def test_avglen_output(files, capsys):
    rc, lines, _ = run(capsys, ["avglen", "--tuple", files["r3"],
                                "--dist", files["dist"]])
    assert rc == 0
    assert lines == ["L = 1039/280 ≈ 3.7107"]


def test_search_output(files, capsys):
    rc, lines, _ = run(capsys, ["search", "--sigma", "2", "--tables", "2",
                                "--max-len", "2", "--filter", "aifv",
                                "--dist", files["skew"]])
    assert rc == 0
    assert lines[0] == "alphabet a b"
    assert "examined = 38416" in lines
    assert lines[-1] == "L = 119/190 ≈ 0.6263"


def test_huffman_output(files, capsys):
    rc, lines, _ = run(capsys, ["huffman", "--dist", files["dist"]])
    assert rc == 0
    assert lines == ["lengths = 3 3 2 1", "L = 19/10 ≈ 1.9000"]


def test_goldens_pass(capsys):
    rc, lines, _ = run(capsys, ["goldens"])
    assert rc == 0
    assert len(lines) == 10
    assert all(line.startswith("PASS ") for line in lines)


def test_missing_file_is_a_domain_error(capsys):
    rc, lines, err = run(capsys, ["classify", "--tuple", "/nonexistent.ct"])
    assert rc == 1
    assert err.startswith("error: ")


def test_unknown_verb_is_a_usage_error(capsys):
    with pytest.raises(SystemExit) as exit_info:
        main(["frobnicate"])
    assert exit_info.value.code == 2
