"""CLI behavior: exit codes, JSON determinism, sweep output."""

import json

from ckn.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


BASE = ["--n", "3", "--p", "2", "--q", "2", "--r", "2", "--a", "0", "--b", "0"]


def test_classify_embeds_exit_zero(capsys):
    code, out, _ = run(capsys, "classify", *BASE, "--c", "0")
    assert code == 0
    payload = json.loads(out)
    assert payload["decision"] == "Embeds"
    assert payload["case"] == "III"


def test_classify_no_embed_exit_one(capsys):
    code, out, _ = run(
        capsys, "classify", "--n", "3", "--p", "2", "--q", "2", "--r", "7",
        "--a", "0", "--b", "0", "--c", "0",
    )
    assert code == 1
    assert json.loads(out)["reason"] == "ROutOfRange"


def test_decimal_input_rejected_exit_two(capsys):
    code, _, err = run(capsys, "classify", "--n", "3", "--p", "2.5", "--q", "2",
                       "--r", "2", "--a", "0", "--b", "0", "--c", "0")
    assert code == 2
    assert "--p" in err


def test_radial_classify(capsys):
    code, out, _ = run(
        capsys, "classify", "--radial", "--n", "2", "--p", "2", "--q", "1",
        "--r", "2", "--a", "-2", "--b", "0", "--c", "-2",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["mode"] == "radial"
    assert payload["case"] == "V"
    assert payload["derived"]["theta_breve"] == "1/3"


def test_interval_output(capsys):
    code, out, _ = run(capsys, "interval", *BASE)
    assert code == 0
    payload = json.loads(out)
    interval = payload["admissible"]["interval"]
    assert (interval["lo"], interval["hi"]) == ("-2", "0")
    assert interval["lo_included"] and interval["hi_included"]


def test_theta_single(capsys):
    code, out, _ = run(capsys, "theta", *BASE, "--c", "-1")
    assert code == 0
    assert json.loads(out)["theta_set"] == {"kind": "Single", "theta": "1/2"}


def test_theta_empty_note(capsys):
    code, out, _ = run(
        capsys, "theta", "--n", "2", "--p", "2", "--q", "2", "--r", "4",
        "--a", "-2", "--b", "0", "--c", "-2",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["theta_set"]["kind"] == "Empty"
    assert "multiplicative" in payload["theta_set"]["note"]


def test_theta_on_non_embedding_instance(capsys):
    code, out, _ = run(
        capsys, "theta", "--n", "3", "--p", "2", "--q", "2", "--r", "7",
        "--a", "0", "--b", "0", "--c", "0",
    )
    assert code == 1
    payload = json.loads(out)
    assert payload["theta_set"] is None
    assert payload["reason"] == "ROutOfRange"


def test_byte_identical_output(capsys):
    _, out1, _ = run(capsys, "classify", *BASE, "--c", "-1")
    _, out2, _ = run(capsys, "classify", *BASE, "--c", "-1")
    assert out1 == out2


def test_verify_exit_codes(capsys):
    code, out, _ = run(capsys, "verify", *BASE, "--c", "-1")
    assert code == 0
    payload = json.loads(out)
    assert payload["ok"] and payload["defect"] <= 1e-6

    code_bad, out_bad, _ = run(capsys, "verify", *BASE, "--c", "-1", "--theta", "9/10")
    assert code_bad == 3
    assert json.loads(out_bad)["defect"] > 1e-6


def test_falsify_cli(capsys):
    code, out, _ = run(
        capsys, "falsify", "--n", "3", "--p", "2", "--q", "2", "--r", "2",
        "--a", "0", "--b", "0", "--c", "-3",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["certificate"] is True


def test_falsify_on_embedding_is_exit_one(capsys):
    code, _, _ = run(capsys, "falsify", *BASE, "--c", "0")
    assert code == 1


def test_multiweight_file(tmp_path, capsys):
    spec = {
        "n": 3, "p": "2", "q": "2", "r": "2",
        "singularities": [{"a": "0", "b": "0", "c": "-1"}],
        "infinity": {"a": "0", "b": "0", "c": "-1"},
    }
    path = tmp_path / "mw.json"
    path.write_text(json.dumps(spec))
    code, out, _ = run(capsys, "classify", *BASE, "--c", "-1", "--multiweight", str(path))
    assert code == 0
    assert json.loads(out)["decision"] == "Embeds"


def test_sweep_csv_matches_classify(tmp_path, capsys):
    spec = {
        "fixed": {"n": "3", "p": "2", "q": "2", "r": "2", "a": "0", "b": "0"},
        "axes": [{"param": "c", "start": "-3", "stop": "1", "step": "1/4"}],
        "format": "csv",
    }
    path = tmp_path / "sweep.json"
    path.write_text(json.dumps(spec))
    code, out, _ = run(capsys, "sweep", str(path))
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("n,p,q,r,a,b,c,decision")
    rows = [line.split(",") for line in lines[1:]]
    assert len(rows) == 17
    embeds_c = [row[6] for row in rows if row[7] == "Embeds"]
    # the admissible interval is exactly [-2, 0]
    assert embeds_c[0] == "-2" and embeds_c[-1] == "0"
    assert len(embeds_c) == 9


def test_sweep_empty_grid(tmp_path, capsys):
    spec = {
        "fixed": {"n": "3", "p": "2", "q": "2", "r": "2", "a": "0", "b": "0"},
        "axes": [{"param": "c", "start": "1", "stop": "0", "step": "1"}],
        "format": "csv",
    }
    path = tmp_path / "sweep.json"
    path.write_text(json.dumps(spec))
    code, out, _ = run(capsys, "sweep", str(path))
    assert code == 0
    assert len(out.strip().splitlines()) == 1  # header only


def test_sweep_cap(tmp_path, capsys):
    spec = {
        "fixed": {"n": "3", "p": "2", "q": "2", "r": "2", "a": "0", "b": "0"},
        "axes": [{"param": "c", "start": "0", "stop": "100", "step": "1/1000"}],
        "cap": 1000,
    }
    path = tmp_path / "sweep.json"
    path.write_text(json.dumps(spec))
    code, _, err = run(capsys, "sweep", str(path))
    assert code == 2
    assert "cap" in err
