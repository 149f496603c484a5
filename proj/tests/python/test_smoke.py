"""End-to-end checks of the python module and the command line tool."""

import json
import os
import subprocess
from fractions import Fraction

import jsonschema
import numpy as np
import pytest

import dicke_npt

CLI = os.environ["DICKE_CLI"]
SCHEMA_PATH = os.environ["DICKE_SCHEMA"]


def run_cli(*args, expect=0):
    result = subprocess.run(
        [CLI, *args], capture_output=True, text=True, timeout=300
    )
    assert result.returncode == expect, result.stderr
    return result.stdout


class TestModule:
    def test_version(self):
        assert dicke_npt.__version__

    def test_counting(self):
        assert dicke_npt.multinomial([7, 3]) == 120
        assert dicke_npt.enumerate_full(2, 2) == [(2, 0), (1, 1), (0, 2)]
        assert dicke_npt.enumerate_restricted(6, [7, 3]) == [
            (6, 0),
            (5, 1),
            (4, 2),
            (3, 3),
        ]
        assert dicke_npt.qubit_bounds(10, 3, 6) == (0, 3)

    def test_exact_weights(self):
        assert dicke_npt.schmidt_coefficient([1, 2], [1, 1]) == Fraction(2, 3)
        assert dicke_npt.schmidt_coefficient([1, 2], [0, 2]) == Fraction(1, 3)
        weights = dict(dicke_npt.reduced_state([2, 2], 2))
        assert weights[(1, 1)] == Fraction(2, 3)
        assert weights[(2, 0)] == Fraction(1, 6)
        assert sum(weights.values()) == 1

    def test_decomposition_terms(self):
        terms = dicke_npt.schmidt_decomposition([1, 2], 1)
        assert terms == [((1, 0), Fraction(1, 3)), ((0, 1), Fraction(2, 3))]

    def test_matrices(self):
        matrix = dicke_npt.bipartite_matrix([1, 2], 2, 1)
        assert matrix.shape == (4, 4)
        assert np.allclose(matrix, matrix.T)
        assert abs(np.trace(matrix) - 1) < 1e-14

        spectrum = dicke_npt.ppt_spectrum([1, 2], 2, 1)
        assert np.all(np.diff(spectrum) >= 0)
        assert abs(spectrum[0] - (1 - 5**0.5) / 6) < 1e-12
        assert abs(spectrum[0] - dicke_npt.spectral_min([1, 2], 2, 1)) < 1e-15

    def test_witness(self):
        choice = dicke_npt.choose_witness([1, 2], 2, 1)
        assert choice["m_hat"] == (1, 1)
        assert choice["k_hat"] == (0, 1)
        assert choice["k_hat_prime"] == (1, 0)

        form = dicke_npt.hermitian_form([1, 2], 2, 1)
        assert form["A"] == Fraction(1, 3)
        assert form["B"] == 0
        assert form["C_squared"] == Fraction(1, 9)
        assert form["discriminant"] == Fraction(-1, 9)
        assert abs(form["witness_value"] - (1 - 5**0.5) / 6) < 1e-12

    def test_certify(self):
        report = dicke_npt.certify([1, 2])
        assert report["verdict"] == "NPT-GME for all subsystems"
        assert [(r["m"], r["k"]) for r in report["records"]] == [
            (2, 1),
            (3, 1),
            (3, 2),
        ]
        assert all(r["is_npt"] for r in report["records"])
        assert report["records"][0]["discriminant"] == "-1/9"

        separable = dicke_npt.certify([0, 3])
        assert separable["verdict"] == "fully separable"
        assert separable["records"] == []

    def test_dense_oracle(self):
        state = dicke_npt.dense_dicke([1, 2])
        assert state.shape == (8,)
        assert abs(np.linalg.norm(state) - 1) < 1e-14

        reduced = dicke_npt.dense_partial_trace(state, 2, 3, 2)
        assert reduced.shape == (4, 4)
        assert abs(np.trace(reduced).real - 1) < 1e-14

        transposed = dicke_npt.dense_partial_transpose(reduced, 2, 2, 1)
        minimum = dicke_npt.dense_min_eigenvalue(transposed, 2, 2)
        assert abs(minimum - (1 - 5**0.5) / 6) < 1e-10

    def test_expansion_structure(self):
        report = dicke_npt.verify_schmidt_identity([2, 2], 2)
        assert report["ok"]
        assert all(
            report[key]
            for key in (
                "coefficients_all_one",
                "supports_disjoint",
                "parent_covered",
                "terms_contained",
                "sum_matches",
            )
        )

    def test_invalid_inputs(self):
        with pytest.raises(ValueError):
            dicke_npt.schmidt_coefficient([1, 2], [2, 0])
        with pytest.raises(ValueError):
            dicke_npt.choose_witness([0, 3], 2, 1)


class TestCli:
    def test_certify_json_validates_against_schema(self):
        stdout = run_cli("certify", "--occupation", "1,2", "--format", "json")
        document = json.loads(stdout)
        with open(SCHEMA_PATH) as handle:
            schema = json.load(handle)
        jsonschema.validate(document, schema)
        assert document["verdict"] == "NPT-GME for all subsystems"
        assert document["records"][0]["discriminant"] == "-1/9"

    def test_certify_matches_module(self):
        stdout = run_cli("certify", "--occupation", "2,2", "--format", "json")
        cli_report = json.loads(stdout)
        module_report = dicke_npt.certify([2, 2])
        for lhs, rhs in zip(cli_report["records"], module_report["records"]):
            assert lhs["m"] == rhs["m"]
            assert lhs["k"] == rhs["k"]
            assert lhs["discriminant"] == rhs["discriminant"]
            assert lhs["witness_value"] == rhs["witness_value"]
            assert lhs["spectral_min"] == rhs["spectral_min"]

    def test_certify_defaults_to_json(self):
        stdout = run_cli("certify", "--occupation", "1,2")
        report = json.loads(stdout)
        assert report["verdict"] == "NPT-GME for all subsystems"

    def test_separable_exit_code(self):
        stdout = run_cli("certify", "--occupation", "0,3", expect=2)
        assert "fully separable" in stdout

    def test_error_exit_code(self):
        run_cli("certify", "--occupation", "nonsense", expect=1)
        run_cli("reduce", "--occupation", "1,2", "-m", "9", expect=1)

    def test_reduce_text(self):
        stdout = run_cli("reduce", "--occupation", "1,2", "-m", "2")
        assert stdout == "(1,1): 2/3, (0,2): 1/3\n"

    def test_enumerate_text(self):
        stdout = run_cli("enumerate", "-n", "6", "--bound", "7,3")
        assert stdout.splitlines() == ["(6,0)", "(5,1)", "(4,2)", "(3,3)"]

    def test_csv_and_json_numbers_agree(self):
        json_doc = json.loads(
            run_cli("certify", "--occupation", "2,2", "--format", "json")
        )
        csv_lines = run_cli(
            "certify", "--occupation", "2,2", "--format", "csv"
        ).splitlines()
        assert csv_lines[0] == "m,k,discriminant,witness_value,spectral_min,is_npt"
        assert len(csv_lines) == 1 + len(json_doc["records"])
        for line, record in zip(csv_lines[1:], json_doc["records"]):
            m, k, disc, witness, spectral, npt = line.split(",")
            assert int(m) == record["m"]
            assert int(k) == record["k"]
            assert disc == record["discriminant"]
            assert float(witness) == record["witness_value"]
            assert float(spectral) == record["spectral_min"]
            assert npt == ("true" if record["is_npt"] else "false")

    def test_ppt_spectrum_text(self):
        stdout = run_cli("ppt", "--occupation", "1,2", "-m", "2", "-k", "1")
        values = [float(line) for line in stdout.splitlines()]
        assert values == sorted(values)
        assert abs(values[0] - (1 - 5**0.5) / 6) < 1e-10

    def test_output_file(self, tmp_path):
        target = tmp_path / "report.json"
        run_cli(
            "certify",
            "--occupation",
            "1,2",
            "--format",
            "json",
            "--output",
            str(target),
        )
        document = json.loads(target.read_text())
        assert document["verdict"] == "NPT-GME for all subsystems"

    def test_oracle_check(self):
        stdout = run_cli("oracle-check", "--max-d", "2", "--max-n", "4")
        assert "FAIL" not in stdout
