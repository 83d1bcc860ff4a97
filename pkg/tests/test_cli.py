import json

import pytest

from sumchannel.cli import main, parse_range
from sumchannel.errors import InvalidArgument


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_encode_c3(capsys):
    code, out, _ = run(capsys, "encode", "--construction", "c3", "--n", "5", "--index", "0")
    header, *rows = out.strip().splitlines()
    assert code == 0 and rows == ["00000", "00000"]
    assert json.loads(header)["codebook_size"] == 256


def test_encode_out_of_range(capsys):
    code, _, err = run(capsys, "encode", "--construction", "c3", "--n", "5", "--index", "256")
    assert code == 2 and "256" in err


def test_pipeline_round_trip(tmp_path, capsys):
    cw, rx = tmp_path / "cw.txt", tmp_path / "rx.txt"
    assert main(["encode", "--construction", "c1", "--n", "8", "--auto-coset", "--index", "3",
                 "-o", str(cw)]) == 0
    encoded = cw.read_text().splitlines()[1:3]
    for seed in range(8):
        assert main(["corrupt", "-i", str(cw), "--t", "2", "--kind", "D", "--seed", str(seed),
                     "-o", str(rx)]) == 0
        first = rx.read_bytes()
        main(["corrupt", "-i", str(cw), "--t", "2", "--kind", "D", "--seed", str(seed), "-o", str(rx)])
        assert rx.read_bytes() == first
        capsys.readouterr()
        code, out, _ = run(capsys, "--format", "json", "decode", "-i", str(rx))
        assert code == 0 and json.loads(out)["matrix"] == encoded


def test_decode_identity_and_three_deletions(tmp_path, capsys):
    cw = tmp_path / "cw.txt"
    main(["encode", "--construction", "c1", "--n", "8", "--auto-coset", "--index", "0", "-o", str(cw)])
    rx = tmp_path / "rx.txt"
    main(["corrupt", "-i", str(cw), "--t", "0", "--kind", "D", "--seed", "1", "-o", str(rx)])
    capsys.readouterr()
    code, out, _ = run(capsys, "decode", "-i", str(rx))
    assert code == 0 and out.splitlines()[1:3] == cw.read_text().splitlines()[1:3]
    main(["corrupt", "-i", str(cw), "--t", "3", "--kind", "D", "--seed", "1", "-o", str(rx)])
    capsys.readouterr()
    code, _, err = run(capsys, "decode", "-i", str(rx))
    assert code == 3 and "error" in err


def test_corrupt_substitution_on_c4(tmp_path, capsys):
    cw = tmp_path / "cw.txt"
    main(["encode", "--construction", "c4", "--l", "3", "--n", "4", "--index", "11", "-o", str(cw)])
    capsys.readouterr()
    code, out, _ = run(capsys, "corrupt", "-i", str(cw), "--t", "1", "--kind", "S", "--seed", "4")
    meta = json.loads(out.splitlines()[0])
    assert code == 0 and len(meta["events"]) == 1 and meta["events"][0]["kind"] == "substitute"
    (tmp_path / "rx.txt").write_text(out)
    code, out, _ = run(capsys, "decode", "-i", str(tmp_path / "rx.txt"))
    assert code == 0 and out.splitlines()[1:4] == cw.read_text().splitlines()[1:4]


def test_verify_c3(capsys):
    code, out, _ = run(capsys, "verify", "--construction", "c3", "--n", "4", "--t", "1", "--kind", "SID")
    rep = json.loads(out)
    assert code == 0 and rep["pass"] and rep["roundtrip"]["failures"] == 0 and rep["schema"] == 1


@pytest.mark.parametrize("kind", ["D", "I"])
def test_verify_c1(capsys, kind):
    code, out, _ = run(capsys, "verify", "--construction", "c1", "--n", "8", "--t", "2",
                       "--kind", kind, "--auto-coset")
    assert code == 0 and json.loads(out)["pass"]


def test_verify_failure_exit(capsys):
    # a single-edit code cannot survive two deletions
    code, out, _ = run(capsys, "verify", "--construction", "c3", "--n", "4", "--t", "2", "--kind", "D")
    rep = json.loads(out)
    assert code == 1 and not rep["pass"] and "pair" in rep["disjoint_balls"]


def test_bounds_commands(capsys):
    code, out, _ = run(capsys, "--format", "csv", "bounds", "--edit", "--l", "3", "--n", "1..8")
    lines = out.strip().splitlines()
    assert code == 0 and lines[0] == "l,n,sphere_packing,construction4"
    for line in lines[1:]:
        ell, n, sp, c4 = map(int, line.split(","))
        assert sp == c4 == 2 ** (3 * n - 2)
    code, out, _ = run(capsys, "--format", "json", "bounds", "--twodel", "--n", "4..8")
    rows = json.loads(out)["rows"]
    assert all(int(r["value"]) == int(r["constructed"]) for r in rows)
    code, out, _ = run(capsys, "--format", "csv", "bounds", "--exact", "--l", "2", "--n", "2..3",
                       "--t", "1", "--kind", "SID")
    assert [int(line.split(",")[-1]) for line in out.strip().splitlines()[1:]] == [4, 16]


def test_dna_command(capsys):
    code, out, _ = run(capsys, "dna", "AGGTC")
    assert code == 0 and out.splitlines()[:3] == ["01110", "00011", "01101"] and "OK" in out
    for seed in range(10):
        code, out, _ = run(capsys, "--format", "json", "dna", "AGGTC", "--corrupt", "--seed", str(seed))
        rep = json.loads(out)
        assert code == 0 and rep["recovered"] == "AGGTC"
    code, _, err = run(capsys, "dna", "AGXTC")
    assert code == 2 and "position 3" in err


def test_resource_limit_exit(capsys):
    code, _, err = run(capsys, "encode", "--construction", "c3", "--n", "13", "--index", "0")
    assert code == 5


def test_parse_range():
    assert parse_range("1..3") == [1, 2, 3]
    assert parse_range("2,4") == [2, 4]
    with pytest.raises(InvalidArgument):
        parse_range("a..b")
