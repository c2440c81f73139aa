"""Command line interface: output text, JSON schemas, and exit codes.

Exit code contract: 0 on success, 1 when verification finds a failure or
an internal consistency check trips, 2 on usage and input errors.
"""

import json
import subprocess
import sys

import pytest

import bfredholm.harness
from bfredholm.cli import main


@pytest.fixture()
def run(capsys):
    """Invoke main() and return (exit code, stdout, stderr)."""

    def invoke(*args):
        rc = main(list(args))
        captured = capsys.readouterr()
        return rc, captured.out, captured.err

    return invoke


class TestClassify:
    def test_offdiagonal_unit_text(self, run, workspace_file):
        rc, out, err = run(
            "classify", "-w", str(workspace_file), "--hom", "T", "e12"
        )
        assert rc == 0 and err == ""
        assert out.splitlines() == [
            "classification of 'e12' under 'T'",
            "  fredholm:         false",
            "  weyl:             false",
            "  browder:          false",
            "  bfredholm:        true (degree 1)",
            "  bweyl degrees:    {1, 2} (witnesses-only)",
            "  bbrowder degrees: {1, 2} (witnesses-only)",
            "  gbf: true   gbw: true   gbb: true",
            "  riesz: true   t-nilpotent: true",
        ]

    def test_offdiagonal_unit_json(self, run, workspace_file):
        rc, out, _ = run(
            "classify", "-w", str(workspace_file), "--hom", "T", "e12",
            "--format", "json",
        )
        assert rc == 0
        doc = json.loads(out)
        assert doc["element"] == "e12"
        assert doc["fredholm"] is False
        assert doc["weyl"] is False
        assert doc["browder"] is False
        assert doc["bfredholm"] is True
        assert doc["bfredholm_degree"] == 1
        # Degree sets are witness lists: supersets may appear, but the
        # minimal degree must be present.
        assert 1 in doc["bweyl"]["degrees"]
        assert doc["bweyl"]["completeness"] == "witnesses-only"
        assert doc["gbf"] and doc["gbw"] and doc["gbb"]
        assert doc["riesz"] is True and doc["t_nilpotent"] is True
        assert doc["weyl_witness"] is None
        assert doc["browder_witness"] is None

    def test_identity_element(self, run, workspace_file):
        rc, out, _ = run(
            "classify", "-w", str(workspace_file), "--hom", "T", "one",
            "--format", "json",
        )
        assert rc == 0
        doc = json.loads(out)
        assert doc["fredholm"] is True
        assert doc["bfredholm_degree"] == 0
        assert 0 in doc["bweyl"]["degrees"]
        assert doc["riesz"] is False
        witness = doc["weyl_witness"]
        assert set(witness) == {"invertible_part", "kernel_part"}
        assert witness["kernel_part"] == ["0", "0", "0"]

    def test_unknown_element(self, run, workspace_file):
        rc, out, err = run(
            "classify", "-w", str(workspace_file), "--hom", "T", "nope"
        )
        assert rc == 2 and out == ""
        assert err.startswith("error: unknown element 'nope' (available: ")

    def test_unknown_homomorphism(self, run, workspace_file):
        rc, _, err = run(
            "classify", "-w", str(workspace_file), "--hom", "Q", "e12"
        )
        assert rc == 2
        assert err.startswith("error: unknown homomorphism 'Q'")

    def test_algebra_mismatch(self, run, workspace_file):
        rc, _, err = run(
            "classify", "-w", str(workspace_file), "--hom", "T", "nilp3"
        )
        assert rc == 2
        assert err == (
            "error: element 'nilp3' lives in 'U3', "
            "but 'T' starts at 'U2'\n"
        )


class TestDrazin:
    def test_nilpotent_text(self, run, workspace_file):
        rc, out, _ = run("drazin", "-w", str(workspace_file), "nilp3")
        assert rc == 0
        assert out.splitlines() == [
            "drazin data for 'nilp3'",
            "  index:               3",
            "  inverse:             [[0, 0, 0]; [0, 0, 0]; [0, 0, 0]]",
            "  spectral idempotent: [[1, 0, 0]; [0, 1, 0]; [0, 0, 1]]",
        ]

    def test_nilpotent_json(self, run, workspace_file):
        rc, out, _ = run(
            "drazin", "-w", str(workspace_file), "nilp3", "--format", "json"
        )
        assert rc == 0
        doc = json.loads(out)
        assert doc["index"] == 3
        assert doc["inverse"] == ["0"] * 6
        assert doc["inverse_matrix"] == [["0"] * 3] * 3
        assert doc["spectral_idempotent"] == ["1", "0", "0", "1", "0", "1"]

    def test_identity_has_index_zero(self, run, workspace_file):
        rc, out, _ = run(
            "drazin", "-w", str(workspace_file), "one", "--format", "json"
        )
        assert rc == 0
        doc = json.loads(out)
        assert doc["index"] == 0
        assert doc["inverse"] == ["1", "0", "1"]
        assert doc["spectral_idempotent"] == ["0", "0", "0"]


class TestSpectra:
    def test_with_homomorphism_text(self, run, workspace_file):
        rc, out, _ = run(
            "spectra", "-w", str(workspace_file), "--hom", "T", "e12", "mix"
        )
        assert rc == 0
        assert out.splitlines() == [
            "spectra of 'e12'",
            "  sigma:    {0 (x2)}",
            "  sigma_f:  {0 (x2)}   (under 'T')",
            "  sigma_w:  {0}",
            "  sigma_b:  {0}",
            "  b-spectra: all empty (every element here is algebraic)",
            "spectra of 'mix'",
            "  sigma:    {1/2, 0}",
            "  sigma_f:  {1/2, 0}   (under 'T')",
            "  sigma_w:  {1/2, 0}",
            "  sigma_b:  {1/2, 0}",
            "  b-spectra: all empty (every element here is algebraic)",
        ]

    def test_json_schema(self, run, workspace_file):
        rc, out, _ = run(
            "spectra", "-w", str(workspace_file), "--hom", "T", "e12",
            "--format", "json",
        )
        assert rc == 0
        (doc,) = json.loads(out)
        assert doc["element"] == "e12"
        assert doc["sigma"]["explicit"] == [
            {"point": "0", "multiplicity": 2}
        ]
        assert doc["sigma_w"]["explicit"] == [
            {"point": "0", "multiplicity": 1}
        ]
        assert doc["b_spectra"] == (
            "all empty (every element here is algebraic)"
        )

    def test_without_homomorphism(self, run, workspace_file):
        rc, out, _ = run("spectra", "-w", str(workspace_file), "nilp3")
        assert rc == 0
        assert out.splitlines() == [
            "spectra of 'nilp3'",
            "  sigma:    {0 (x3)}",
        ]

    def test_mismatched_element(self, run, workspace_file):
        rc, _, err = run(
            "spectra", "-w", str(workspace_file), "--hom", "T", "nilp3"
        )
        assert rc == 2 and "starts at 'U2'" in err


class TestDiag:
    def test_harmonic_tail(self, run):
        rc, out, _ = run("diag", "tail 1/n -> 0")
        assert rc == 0
        assert out.splitlines() == [
            "diagonal element: tail 1/n -> 0",
            "  sigma:     tail 1/n -> 0",
            "  sigma_f:   {0}",
            "  sigma_bf:  {}",
            "  sigma_gbf: {}",
            "  fredholm at 0:  false",
            "  bfredholm at 0: true",
            "  riesz:          true",
        ]

    def test_two_index_family(self, run):
        rc, out, _ = run("diag", "family (1/m + 1/n)")
        assert rc == 0
        assert out.splitlines() == [
            "diagonal element: family (1/m + 1/n)",
            "  sigma:     family (1/m + 1/n)",
            "  sigma_f:   tail 1/n -> 0",
            "  sigma_bf:  {0}",
            "  sigma_gbf: {0}",
            "  fredholm at 0:  false",
            "  bfredholm at 0: false",
            "  riesz:          false",
        ]

    def test_constant(self, run):
        rc, out, _ = run("diag", "const 5")
        assert rc == 0
        lines = out.splitlines()
        assert "  sigma:     {5}" in lines
        assert "  sigma_bf:  {}" in lines
        assert "  fredholm at 0:  true" in lines

    def test_family_json(self, run):
        rc, out, _ = run("diag", "family (1/m + 1/n)", "--format", "json")
        assert rc == 0
        doc = json.loads(out)
        assert doc["element"] == "family (1/m + 1/n)"
        assert doc["sigma_bf"]["finite_points"] == ["0"]
        assert doc["sigma_f"]["tails"] == ["tail 1/n -> 0"]
        assert doc["fredholm_at_0"] is False
        assert doc["bfredholm_at_0"] is False

    def test_constant_json_has_empty_bf_spectrum(self, run):
        rc, out, _ = run("diag", "const 5", "--format", "json")
        doc = json.loads(out)
        assert rc == 0
        assert doc["sigma_bf"]["finite_points"] == []
        assert doc["sigma_bf"]["countable"] is True

    def test_malformed_expression(self, run):
        rc, out, err = run("diag", "tail 1/n -> 1")
        assert rc == 2 and out == ""
        assert err == (
            "error: expr:5: the rule tends to 0, not the declared 1\n"
        )


class TestWorkspaceInput:
    def test_missing_file(self, run, tmp_path):
        rc, _, err = run(
            "classify", "-w", str(tmp_path / "absent.json"), "--hom", "T", "x"
        )
        assert rc == 2 and "absent.json" in err

    def test_bad_document(self, run, tmp_path):
        path = tmp_path / "ws.json"
        path.write_text('{"algebras": {"A": {"basis": [[[0, 1], [0, 0]]]}}}')
        rc, _, err = run("classify", "-w", str(path), "--hom", "T", "x")
        assert rc == 2
        assert err == (
            f"error: {path}.algebras.A: identity matrix does not lie in "
            f"the algebra span\n"
        )

    def test_usage_error_exits_two(self, workspace_file):
        with pytest.raises(SystemExit) as info:
            main(["classify", "-w", str(workspace_file), "e12"])
        assert info.value.code == 2


class TestVerify:
    def test_filtered_run_passes(self, run):
        rc, out, _ = run(
            "verify", "--seed", "5", "--trials", "2", "--family", "u2",
            "--filter", "R4.4", "--filter", "T5.6",
        )
        assert rc == 0
        lines = out.splitlines()
        assert lines[0] == "verification suite"
        assert any(line.startswith("R4.4") for line in lines)
        assert lines[-1] == "total: 4 instances, 0 failures"

    def test_zero_trials_skips_everything(self, run):
        rc, out, _ = run(
            "verify", "--trials", "0", "--filter", "P4.1", "--format", "json"
        )
        assert rc == 0
        doc = json.loads(out)
        assert doc["all_passed"] is True
        (result,) = doc["results"]
        assert result["tag"] == "P4.1"
        assert result["instances"] == 0
        assert result["skipped"][0]["reason"] == "zero-trial-budget"

    def test_json_schema(self, run):
        rc, out, _ = run(
            "verify", "--seed", "1", "--trials", "1", "--family", "u2",
            "--filter", "T5.6", "--format", "json",
        )
        assert rc == 0
        doc = json.loads(out)
        assert doc["plan"] == {
            "seed": 1,
            "trials": 1,
            "max_ambient_dim": 6,
            "families": ["u2"],
            "theorem_filter": ["T5.6"],
        }
        assert doc["totals"] == {"instances": 1, "failures": 0}

    def test_planted_failure_exits_one(self, run, monkeypatch):
        def broken(plan, homs, diags, run_acc):
            fam = bfredholm.harness.diagonal_part_hom(2)
            one = fam.source.one()
            run_acc.fail("u2", "planted defect", a=one)

        monkeypatch.setattr(bfredholm.harness, "_check_p41", broken)
        rc, out, _ = run(
            "verify", "--trials", "1", "--family", "u2", "--filter", "P4.1"
        )
        assert rc == 1
        assert "P4.1       FAIL instances=0 failures=1" in out
        assert "    failure [u2]: planted defect" in out
        assert "        a = [1, 0, 1]" in out
        assert out.splitlines()[-1] == "total: 0 instances, 1 failures"

    def test_planted_failure_json(self, run, monkeypatch):
        def broken(plan, homs, diags, run_acc):
            run_acc.check(False, "u2", "planted defect")

        monkeypatch.setattr(bfredholm.harness, "_check_p41", broken)
        rc, out, _ = run(
            "verify", "--trials", "1", "--family", "u2", "--filter", "P4.1",
            "--format", "json",
        )
        assert rc == 1
        doc = json.loads(out)
        assert doc["all_passed"] is False
        (result,) = doc["results"]
        (failure,) = result["failures"]
        assert failure["family"] == "u2"
        assert failure["detail"] == "planted defect"


class TestConsoleEntry:
    def test_module_runs_as_script(self):
        proc = subprocess.run(
            [sys.executable, "-m", "bfredholm.cli", "diag", "const 5"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        assert "sigma:     {5}" in proc.stdout

    def test_unknown_subcommand_is_a_usage_error(self):
        proc = subprocess.run(
            [sys.executable, "-m", "bfredholm.cli", "frobnicate"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 2
        assert "invalid choice" in proc.stderr
