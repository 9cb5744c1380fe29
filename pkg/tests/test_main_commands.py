import json
import logging

import pytest

from fusionkit.main import run

from conftest import FIXTURES


@pytest.fixture(autouse=True)
def _restore_root_logging():
    root = logging.getLogger()
    handlers, level = list(root.handlers), root.level
    yield
    for handler in root.handlers[:]:
        if handler not in handlers:
            root.removeHandler(handler)
    root.setLevel(level)


def _run(capsys, *argv):
    code = run([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_validate_ring(capsys):
    code, out, _ = _run(capsys, "validate", FIXTURES / "ising.ring")
    assert code == 0
    assert out == "ring Ising: valid\n"


def test_validate_group_and_functor(capsys):
    code, out, _ = _run(capsys, "validate", FIXTURES / "s3.group")
    assert (code, out) == (0, "group S3: valid\n")
    code, out, _ = _run(capsys, "validate", FIXTURES / "res_s3_z3.functor", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["kind"] == "functor"
    assert payload["name"] == "Res(S3,Z3)"
    assert payload["valid"] is True


def test_validate_reports_violations_with_exit_1(capsys, tmp_path):
    text = (FIXTURES / "ising.ring").read_text(encoding="utf-8")
    broken = tmp_path / "broken.ring"
    broken.write_text(text.replace("nz 1 1 0 1", "nz 1 1 0 1\nnz 1 1 2 1"), encoding="utf-8")
    code, out, _ = _run(capsys, "validate", broken)
    assert code == 1
    assert out.startswith("ring Ising: INVALID")


def test_fpdim_on_an_invalid_ring_exits_1(capsys, tmp_path):
    text = (FIXTURES / "ising.ring").read_text(encoding="utf-8")
    broken = tmp_path / "broken.ring"
    broken.write_text(text.replace("nz 1 1 0 1", "nz 1 1 0 1\nnz 1 1 2 1"), encoding="utf-8")
    code, _, err = _run(capsys, "fpdim", broken)
    assert code == 1
    assert "fails the ring axioms" in err


def test_fpdim_json(capsys):
    code, out, _ = _run(capsys, "fpdim", FIXTURES / "ising.ring", "--json", "--seed", "3")
    assert code == 0
    payload = json.loads(out)
    assert payload["labels"] == ["1", "ψ", "σ"]
    assert payload["dims"] == pytest.approx([1.0, 1.0, 2**0.5], abs=1e-9)
    assert payload["ring_dim"] == pytest.approx(4.0, abs=1e-9)


def test_cosets_text_output(capsys):
    code, out, _ = _run(capsys, "cosets", FIXTURES / "ising.ring", "--left", "gen=1", "--verify")
    assert code == 0
    assert "blocks: {1,ψ} {σ}" in out
    assert "principal eigenvalue 2" in out
    assert "fail" not in out


def test_cosets_accepts_labels(capsys):
    code, out, _ = _run(capsys, "cosets", FIXTURES / "rep_s3.ring", "--left", "0,sgn", "--right", "gen=sgn")
    assert code == 0
    assert "blocks: {1,sgn} {rho}" in out


def test_adjoint_subring(capsys):
    code, out, _ = _run(capsys, "adjoint", FIXTURES / "ising.ring")
    assert code == 0
    assert out == "adjoint({1,ψ,σ}) in Ising: {1,ψ}\n"


@pytest.mark.parametrize("spec", ["2", "zz", "0,,1", "7"])
def test_bad_subring_spec_is_a_usage_error(capsys, spec):
    code, _, err = _run(capsys, "radical", FIXTURES / "ising.ring", "--sub", spec)
    assert code == 2
    assert err.startswith("error: --sub")


def test_missing_file_exits_2(capsys):
    code, _, err = _run(capsys, "validate", "/nonexistent/ring.ring")
    assert code == 2
    assert err.startswith("error:")


def test_parse_error_exits_2(capsys, tmp_path):
    path = tmp_path / "bad.ring"
    path.write_text("ring X\nrank 1\nlabels 1\n", encoding="utf-8")
    code, _, err = _run(capsys, "validate", path)
    assert code == 2
    assert "missing end" in err


@pytest.mark.parametrize(
    "argv,code",
    [
        (["--help"], 0),
        ([], 2),
        (["transmogrify"], 2),
        (["fpdim", "x.ring", "--tol", "abc"], 2),
        (["gen"], 2),
    ],
)
def test_argument_errors(capsys, argv, code):
    assert run(argv) == code
    capsys.readouterr()


def test_functor_analysis(capsys):
    code, out, _ = _run(capsys, "functor", FIXTURES / "res_s3_z3.functor", "--analyze")
    assert code == 0
    assert "kernel          {1,sgn}" in out
    assert "normal          yes" in out
    assert "index           2" in out
    assert "\nfail" not in out


def test_functor_json_with_explicit_rings(capsys):
    code, out, _ = _run(
        capsys,
        "functor",
        FIXTURES / "res_s4_s3.functor",
        "--rings",
        FIXTURES / "rep_s4.ring",
        FIXTURES / "rep_s3.ring",
        "--json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["is_normal"] is False
    assert payload["is_dominant"] is True
    assert payload["kernel"] == ["1"]
    assert payload["up_transitive"] is False
    assert payload["checks"] == []


def test_universal_grading(capsys):
    code, out, _ = _run(capsys, "grading", FIXTURES / "ising.ring")
    assert code == 0
    assert out.startswith("universal grading of Ising: group of order 2\n")
    assert "pass intermediate-subrings" in out


def test_explicit_grading_with_extension(capsys):
    code, out, _ = _run(capsys, "grading", FIXTURES / "ty_z2z2.ring", "--explicit", "--json")
    assert code == 0
    payload = json.loads(out)
    assert [c["label"] for c in payload["components"]] == ["even", "odd"]
    assert payload["source"] == "explicit"

    code, out, _ = _run(
        capsys,
        "grading",
        FIXTURES / "rep_d4.ring",
        "--verify-extension",
        FIXTURES / "res_d4_center.functor",
    )
    assert code == 0
    assert "pass commutator-full" in out


def test_gen_group_ring_to_stdout(capsys):
    code, out, _ = _run(capsys, "gen", "group-ring", FIXTURES / "s3.group")
    assert code == 0
    assert out.startswith("ring Z[S3]\nrank 6\n")
    assert out.endswith("end\n")


def test_gen_quotient_functor_writes_valid_fixtures(capsys, tmp_path):
    code, _, _ = _run(
        capsys, "gen", "quotient-functor", FIXTURES / "s3.group", "--n", "e,(012),(021)", "--out-dir", tmp_path
    )
    assert code == 0
    assert len(list(tmp_path.glob("*.ring"))) == 2
    (functor_path,) = tmp_path.glob("*.functor")
    for path in sorted(tmp_path.iterdir()):
        code, out, _ = _run(capsys, "validate", path)
        assert code == 0, out

    code, out, _ = _run(capsys, "functor", functor_path, "--json")
    payload = json.loads(out)
    assert payload["kernel"] == ["e", "(012)", "(021)"]
    assert payload["is_normal"] is True


def test_gen_quotient_rejects_a_non_normal_subgroup(capsys):
    code, _, err = _run(capsys, "gen", "quotient-functor", FIXTURES / "s3.group", "--n", "0,1")
    assert code == 1
    assert "not a normal subgroup" in err


def test_double_coset_oracle(capsys):
    code, out, _ = _run(capsys, "oracle", "double-cosets", FIXTURES / "s3.group", "--k", "e,(01)", "--l", "0,1")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "S3: K={e,(01)} L={e,(01)}"
    assert len(lines) == 3


@pytest.mark.parametrize("filename", ["bad.ring", "bad.group", "bad.functor"])
def test_non_utf8_file_is_a_parse_error(capsys, tmp_path, filename):
    path = tmp_path / filename
    path.write_bytes(b"labels \xff\xfe")
    code, _, err = _run(capsys, "validate", path)
    assert code == 2
    assert "not valid utf-8" in err
