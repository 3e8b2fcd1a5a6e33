import pytest

from idealpack.cli import EXIT_DATA_MISSING, EXIT_NUMERICAL, \
    EXIT_VALIDATION, main

QUARTIC_ARGS = ["--poly", "1,1,-1,-1,1", "--prime", "3", "--gens", "2,1,1"]


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_field_kv(capsys):
    code, out, _ = run(capsys, "field", *QUARTIC_ARGS, "--format", "kv")
    assert code == 0
    kv = dict(line.split("=", 1) for line in out.strip().splitlines())
    assert kv["degree"] == "4"
    assert kv["abs_disc"] == "117"
    assert kv["residue_field_size"] == "9"
    assert kv["ramification_e"] == "2"


def test_field_validation_errors(capsys):
    code, _, err = run(capsys, "field", "--poly=-1,0,1")
    assert code == EXIT_VALIDATION and "root" in err.lower()
    code, _, err = run(capsys, "field", "--poly=-8,-2,-1,1")
    assert code == EXIT_VALIDATION and "2" in err


def test_density_kv_golden(capsys):
    code, out, _ = run(capsys, "density", *QUARTIC_ARGS, "--n", "64",
                       "--format", "kv")
    assert code == 0
    kv = dict(line.split("=", 1) for line in out.strip().splitlines())
    assert list(kv) == ["poly", "prime", "ideal_generator",
                        "residue_field_size", "code_length", "levels",
                        "dimension", "required_distances", "code_dimensions",
                        "log2_center_density", "log2_density", "notes"]
    assert kv["dimension"] == "256"
    assert kv["required_distances"] == "27,9,3"
    assert abs(float(kv["log2_center_density"]) - 208.088204168043) < 1e-3


def test_density_missing_entry(capsys):
    code, _, err = run(capsys, "density", "--poly", "1,1,-1,-1,1",
                       "--prime", "7", "--gens", "4,1", "--n", "64")
    assert code == EXIT_DATA_MISSING
    assert "q=7" in err and "n=64" in err


def test_asymptotic_validation(capsys):
    code, _, err = run(capsys, "asymptotic", *QUARTIC_ARGS, "--lmax", "5")
    assert code == EXIT_VALIDATION
    assert "lmax" in err


def test_asymptotic_shallow(capsys):
    code, out, _ = run(capsys, "asymptotic", *QUARTIC_ARGS, "--lmax", "40",
                       "--format", "kv")
    assert code == 0
    kv = dict(line.split("=", 1) for line in out.strip().splitlines())
    assert kv["l_max"] == "40"
    assert -2 < float(kv["lambda_lower"]) < 0


def test_tables_empty_snapshot(tmp_path, capsys):
    empty = tmp_path / "table.txt"
    empty.write_text("# nothing here\n")
    code, out, err = run(capsys, "tables", "--code-table", str(empty),
                         "--format", "kv")
    assert code == 0
    assert "warning" in err
    for line in out.strip().splitlines():
        assert "data-missing" in line


def test_tables_bundled(capsys):
    code, out, _ = run(capsys, "tables", "--format", "kv")
    assert code == 0
    kv = dict(line.split("=", 1) for line in out.strip().splitlines())
    assert kv["table1_p3_dim256_log2_center_density"] == "208.09"


def test_config_file_and_precedence(tmp_path, capsys):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("poly = 1,1,-1,-1,1\nprime = 3\ngens = 2,1,1\nn = 2\n"
                   "format = kv\n")
    code, out, _ = run(capsys, "density", "--config", str(cfg))
    assert code == 0
    assert "code_length=2" in out and "levels=0" in out
    # explicit flag wins over the file
    code, out, _ = run(capsys, "density", "--config", str(cfg), "--n", "64")
    assert code == 0
    assert "code_length=64" in out
    bad = tmp_path / "bad.cfg"
    bad.write_text("no_such_key = 1\n")
    assert run(capsys, "density", "--config", str(bad))[0] == EXIT_VALIDATION


def test_verify_deterministic(capsys):
    code1, out1, _ = run(capsys, "verify", "--seed", "3", "--format", "kv")
    code2, out2, _ = run(capsys, "verify", "--seed", "3", "--format", "kv")
    assert code1 == code2 == 0
    assert out1 == out2
    assert out1.count("pass") == 5


def test_verify_fault_injection(capsys):
    code, _, err = run(capsys, "verify", "--inject-precision-fault")
    assert code == EXIT_NUMERICAL
    assert "injected fault" in err
