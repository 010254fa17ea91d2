import io
import json
import unittest
from contextlib import redirect_stdout
from pathlib import Path
from tempfile import TemporaryDirectory
from unittest import mock

from qratio.__main__ import EXIT_BAD_INPUT, EXIT_OK, EXIT_SOUNDNESS, run
from qratio.criteria import BoundCertificate
from qratio.enums import Criterion, Direction

FIXTURES = Path(__file__).parent / "fixtures"


def run_cli(*argv: str) -> tuple[int, str]:
    buffer = io.StringIO()
    with redirect_stdout(buffer):
        code = run(["--consoleLogLevel", "CRITICAL", *argv])
    return code, buffer.getvalue()


class AnalyzeCommandTest(unittest.TestCase):

    def test_q15(self):
        code, out = run_cli("analyze", str(FIXTURES / "q15.txt"))
        self.assertEqual(code, EXIT_OK)
        report = json.loads(out)
        self.assertEqual(report["input"]["degree"], 15)
        self.assertEqual(report["oracle"]["total_with_multiplicity"], 13)
        self.assertTrue(report["agreement"])
        conjectures = {c["conjecture"]: c for c in report["conjectures"]}
        self.assertTrue(conjectures["LogConcaveC3"]["violated"])
        self.assertEqual(report["q_sequence"]["8"], "27/28")

    def test_no_real_roots(self):
        code, out = run_cli("analyze", str(FIXTURES / "x2_plus_1.txt"))
        self.assertEqual(code, EXIT_OK)
        report = json.loads(out)
        self.assertEqual(report["oracle"]["total_with_multiplicity"], 0)
        self.assertEqual(report["positivity"], "EvenPositive")
        self.assertEqual(report["conjectures"], [])
        fired = [c["criterion"] for c in report["certificates"] if c["fired"]]
        self.assertIn("ThmD", fired)

    def test_sharp_family_fires_no_upper_bound(self):
        code, out = run_cli("analyze", str(FIXTURES / "sharp_thm2_10.txt"))
        self.assertEqual(code, EXIT_OK)
        report = json.loads(out)
        self.assertEqual(report["oracle"]["total_with_multiplicity"], 8)
        for certificate in report["certificates"]:
            if certificate["fired"]:
                self.assertNotEqual(certificate["direction"], "UpperBound", certificate["criterion"])

    def test_refuted_end_ratio_claim_is_not_a_soundness_failure(self):
        for name in ("thm1_sum_degree5.txt", "thm1_sum_degree5_b.txt"):
            code, out = run_cli("analyze", str(FIXTURES / name))
            self.assertEqual(code, EXIT_OK, name)
            report = json.loads(out)
            self.assertEqual(report["oracle"]["total_with_multiplicity"], 3)
            self.assertEqual(report["refuted_claims"], ["Thm1"])
            self.assertTrue(report["agreement"])
            self.assertEqual(report["combined_interval"][1], 3)
            thm1 = next(c for c in report["certificates"] if c["criterion"] == "Thm1")
            self.assertTrue(thm1["fired"])
            self.assertFalse(thm1["certifying"])
        code, out = run_cli("--format", "text", "analyze", str(FIXTURES / "thm1_sum_degree5.txt"))
        self.assertIn("Thm1: UpperBound 1 (claim only)", out)
        self.assertIn("Refuted by the oracle: Thm1", out)

    def test_text_format(self):
        code, out = run_cli("--format", "text", "analyze", str(FIXTURES / "x2_plus_1.txt"))
        self.assertEqual(code, EXIT_OK)
        self.assertIn("Real roots (oracle): 0", out)
        self.assertIn("agreement: yes", out)

    def test_repeated_runs_are_identical(self):
        _, first = run_cli("analyze", str(FIXTURES / "q15.txt"))
        _, second = run_cli("analyze", str(FIXTURES / "q15.txt"))
        self.assertEqual(first, second)

    def test_parse_error(self):
        with TemporaryDirectory() as tmp:
            path = Path(tmp) / "bad.txt"
            path.write_text("1\nabc\n")
            code, out = run_cli("analyze", str(path))
        self.assertEqual(code, EXIT_BAD_INPUT)
        self.assertEqual(out, "")

    def test_degree_too_small(self):
        with TemporaryDirectory() as tmp:
            path = Path(tmp) / "linear.txt"
            path.write_text("1\n1\n")
            code, _ = run_cli("analyze", str(path))
        self.assertEqual(code, EXIT_BAD_INPUT)

    def test_soundness_violation(self):
        bogus = BoundCertificate(Criterion.ThmA, 2, True, fired=True, direction=Direction.Positivity, bound=0)
        with TemporaryDirectory() as tmp:
            path = Path(tmp) / "square.txt"
            path.write_text("1\n2\n1\n")  # (x + 1)^2
            with mock.patch("qratio.commands.run_all_criteria", return_value=[bogus]):
                code, out = run_cli("analyze", str(path))
        self.assertEqual(code, EXIT_SOUNDNESS)
        self.assertEqual(out, "")


class OtherCommandTest(unittest.TestCase):

    def test_oracle_width(self):
        with TemporaryDirectory() as tmp:
            path = Path(tmp) / "p.txt"
            path.write_text("-2\n0\n1\n")
            code, out = run_cli("oracle", str(path), "--width", "1/1000")
            self.assertEqual(code, EXIT_OK)
            self.assertEqual(run_cli("oracle", str(path), "--width", "abc")[0], EXIT_BAD_INPUT)
            self.assertEqual(run_cli("oracle", str(path), "--width", "0")[0], EXIT_BAD_INPUT)
        report = json.loads(out)
        self.assertEqual(report["total_with_multiplicity"], 2)
        self.assertEqual(len(report["isolating_intervals"]), 2)

    def test_gen_then_analyze(self):
        code, out = run_cli("gen", "sharp-thm2", "--n", "5")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(len(out.splitlines()), 6)
        with TemporaryDirectory() as tmp:
            path = Path(tmp) / "sharp5.txt"
            code, out = run_cli("gen", "sharp-thm2", "--n", "5", "--output", str(path))
            self.assertEqual((code, out), (EXIT_OK, ""))
            code, out = run_cli("analyze", str(path))
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(json.loads(out)["oracle"]["total_with_multiplicity"], 3)

    def test_gen_bad_params(self):
        self.assertEqual(run_cli("gen", "sharp-pr1", "--n", "6")[0], EXIT_BAD_INPUT)
        self.assertEqual(run_cli("gen", "counterexample-q", "--n", "12")[0], EXIT_BAD_INPUT)

    def test_verify_conjecture(self):
        code, out = run_cli("verify-conjecture", "--id", "3", "--n-max", "20")
        self.assertEqual(code, EXIT_OK)
        reports = json.loads(out)
        self.assertEqual([r["label"] for r in reports], [f"Q_{n}" for n in range(15, 21)])
        self.assertTrue(all(r["violated"] for r in reports))
        self.assertEqual(run_cli("verify-conjecture", "--id", "3", "--n-max", "10")[0], EXIT_BAD_INPUT)

    def test_cone_check(self):
        code, out = run_cli(
            "cone-check", str(FIXTURES / "hutchinson_4.json"), str(FIXTURES / "hutchinson_extremal_4.txt")
        )
        self.assertEqual(code, EXIT_OK)
        result = json.loads(out)
        self.assertTrue(result["member"])
        self.assertEqual(result["q"], ["4", "4", "4"])
        code, out = run_cli("cone-check", "newton", str(FIXTURES / "hutchinson_extremal_4.txt"))
        self.assertFalse(json.loads(out)["member"])

    def test_cone_check_degree_mismatch(self):
        code, _ = run_cli("cone-check", str(FIXTURES / "hutchinson_4.json"), str(FIXTURES / "x2_plus_1.txt"))
        self.assertEqual(code, EXIT_BAD_INPUT)

    def test_cone_sample(self):
        argv = ("--seed", "7", "cone-sample", "hutchinson", "--n", "4", "--count", "50")
        code, out = run_cli(*argv)
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(json.loads(out)["histogram"], {"4": 50})
        self.assertEqual(run_cli(*argv)[1], out)
        self.assertEqual(run_cli("cone-sample", "hutchinson", "--count", "5")[0], EXIT_BAD_INPUT)

    def test_missing_config(self):
        code, _ = run_cli("--config", "does/not/exist.json", "analyze", str(FIXTURES / "x2_plus_1.txt"))
        self.assertEqual(code, EXIT_BAD_INPUT)

    def test_bad_log_level(self):
        code = run(["--consoleLogLevel", "LOUD", "analyze", str(FIXTURES / "x2_plus_1.txt")])
        self.assertEqual(code, EXIT_BAD_INPUT)


if __name__ == '__main__':
    unittest.main()
