"""Tests for cli module."""

from fractions import Fraction

import mpmath as mp
import pytest
from click.testing import CliRunner

from witten_g2.algebra import ConsistencyError
from witten_g2.cli import (
    EXIT_CONSISTENCY,
    EXIT_DOMAIN,
    EXIT_SINGULAR,
    BernoulliOutput,
    ErrorOutput,
    RelationOutput,
    SelfCheckOutput,
    SingularitiesOutput,
    SumOutput,
    ValueOutput,
    ValueTableOutput,
    WeylSumOutput,
    WittenOutput,
    cli,
)
from witten_g2.numeric import NumericValue
from witten_g2.util import format_rational


@pytest.fixture
def runner():
    return CliRunner()


def invoke(runner, *args, **kwargs):
    return runner.invoke(cli, list(args), **kwargs)


class TestValueCommand:
    """Test ``value``."""

    def test_weight_twelve(self, runner):
        """The weight-12 orbit value."""
        result = invoke(runner, "value", "--k", "2,2,2,2,2,2")
        assert result.exit_code == 0, result.stderr
        output = ValueOutput.model_validate_json(result.stdout)
        assert output.coefficient == "23/297904566960"
        assert output.pi_power == 12
        assert output.method == "A"
        assert output.pi_digits_used == 50
        assert output.decimal.startswith("7.1")

    def test_table(self, runner):
        """--table 1 has a single row."""
        result = invoke(runner, "value", "--table", "1")
        assert result.exit_code == 0, result.stderr
        rows = ValueTableOutput.model_validate_json(result.stdout).rows
        assert [row.k for row in rows] == [[2, 2, 2, 2, 2, 2]]

    def test_odd_entries(self, runner):
        """Odd entries are a domain error."""
        result = invoke(runner, "value", "--k", "1,2,2,2,1,1")
        assert result.exit_code == EXIT_DOMAIN
        error = ErrorOutput.model_validate_json(result.stderr)
        assert error.error == "domain"
        assert "short roots" in error.message

    def test_malformed_k(self, runner):
        """Malformed tuples are usage errors."""
        result = invoke(runner, "value", "--k", "2,2,x")
        assert result.exit_code == 2

    def test_missing_k(self, runner):
        """Either --k or --table is required."""
        result = invoke(runner, "value")
        assert result.exit_code == 2
        assert "Give --k or --table" in result.stderr

    def test_consistency_error(self, runner, mocker):
        """Internal failures exit with 3."""
        mocker.patch("witten_g2.cli.zeta2_exact", side_effect=ConsistencyError("layer 12 left a remainder"))
        result = invoke(runner, "value", "--k", "2,2,2,2,2,2")
        assert result.exit_code == EXIT_CONSISTENCY
        assert ErrorOutput.model_validate_json(result.stderr).error == "consistency"

    def test_deterministic(self, runner):
        """Repeated runs print identical bytes."""
        first = invoke(runner, "value", "--k", "2,2,2,2,2,2")
        second = invoke(runner, "value", "--k", "2,2,2,2,2,2")
        assert first.stdout_bytes == second.stdout_bytes

    @pytest.mark.slow
    def test_weight_eighteen(self, runner):
        """A weight-18 orbit value."""
        result = invoke(runner, "value", "--k", "2,4,4,4,2,2")
        assert result.exit_code == 0, result.stderr
        output = ValueOutput.model_validate_json(result.stdout)
        assert output.coefficient == "467/213955059990672000"
        assert output.pi_power == 18


class TestBernoulliCommand:
    """Test ``bernoulli``."""

    def test_weight_twelve(self, runner):
        """P(2, …, 2) without the second algorithm."""
        result = invoke(runner, "bernoulli", "--k", "2,2,2,2,2,2", "--no-cross-check")
        assert result.exit_code == 0, result.stderr
        output = BernoulliOutput.model_validate_json(result.stdout)
        assert output.P == "23/1588824357120"
        assert output.y == ["0", "0"]
        assert output.method == "A"

    def test_bad_y(self, runner):
        """y needs two rationals."""
        result = invoke(runner, "bernoulli", "--k", "0,0,0,0,0,0", "--y", "1/2")
        assert result.exit_code == 2

    @pytest.mark.slow
    def test_cross_checked(self, runner):
        """Low degrees are computed by both algorithms."""
        result = invoke(runner, "bernoulli", "--k", "1,1,0,0,0,0")
        assert result.exit_code == 0, result.stderr
        assert BernoulliOutput.model_validate_json(result.stdout).method == "A+B"


class TestWeylSumCommand:
    """Test ``weyl-sum``."""

    def test_exact_only(self, runner):
        """S(2, …, 2) without the numeric sum."""
        result = invoke(runner, "weyl-sum", "--k", "2,2,2,2,2,2", "--exact-only")
        assert result.exit_code == 0, result.stderr
        output = WeylSumOutput.model_validate_json(result.stdout)
        assert output.exact_real == "23/24825380580"
        assert output.exact_imag == "0"
        assert output.numeric is None

    def test_with_numeric(self, runner):
        """The numeric sum brackets the exact value."""
        result = invoke(runner, "weyl-sum", "--k", "2,2,2,2,2,2", "--limit", "64")
        assert result.exit_code == 0, result.stderr
        output = WeylSumOutput.model_validate_json(result.stdout)
        exact = mp.mpf(23) / 24825380580 * mp.pi**12
        assert abs(mp.mpf(output.numeric.real) - exact) < mp.mpf(10) ** -12
        assert output.limit == 64


class TestSumCommand:
    """Test ``sum``."""

    def test_weight_seven(self, runner):
        """ζ₂(2, 1, 1, 1, 1, 1) ≈ 0.0099527234."""
        result = invoke(runner, "sum", "--s", "2,1,1,1,1,1", "--limit", "1000", "--engine", "numpy")
        assert result.exit_code == 0, result.stderr
        output = SumOutput.model_validate_json(result.stdout)
        assert abs(mp.mpf(output.value.real) - mp.mpf("0.0099527234")) < 1e-8
        assert output.engine == "numpy"

    def test_outside_domain(self, runner):
        """Divergent arguments are a domain error."""
        result = invoke(runner, "sum", "--s", "0,0,0,0,0,1", "--limit", "64")
        assert result.exit_code == EXIT_DOMAIN
        assert "must exceed 1" in ErrorOutput.model_validate_json(result.stderr).message

    def test_env_override(self, runner):
        """WITTEN_G2_LIMIT sets the default cutoff."""
        result = invoke(runner, "sum", "--s", "2,2,2,2,2,2", env={"WITTEN_G2_LIMIT": "48"})
        assert result.exit_code == 0, result.stderr
        output = SumOutput.model_validate_json(result.stdout)
        assert output.limit == 48
        assert output.engine == "mpmath"

    def test_option_beats_env(self, runner):
        """--limit and --precision override the environment defaults."""
        result = invoke(
            runner,
            "sum",
            *"--s 2,2,2,2,2,2 --limit 32 --precision 20".split(),
            env={"WITTEN_G2_LIMIT": "48", "WITTEN_G2_PRECISION": "40"},
        )
        assert result.exit_code == 0, result.stderr
        output = SumOutput.model_validate_json(result.stdout)
        assert output.limit == 32
        assert output.precision == 20

    def test_env_invalid(self, runner):
        """Invalid environment overrides are a domain error."""
        result = invoke(runner, "sum", "--s", "2,2,2,2,2,2", env={"WITTEN_G2_ALGORITHM": "C"})
        assert result.exit_code == EXIT_DOMAIN


class TestWittenCommand:
    """Test ``witten``."""

    def test_even_argument(self, runner):
        """At s = 2 the closed form is reported next to the sum."""
        result = invoke(runner, "witten", "--s", "2", "--limit", "100")
        assert result.exit_code == 0, result.stderr
        output = WittenOutput.model_validate_json(result.stdout)
        assert output.exact == format_rational(Fraction(23 * 14400, 297904566960))
        assert output.pi_power == 12

    def test_fractional_argument(self, runner):
        """Non-even arguments have no closed form."""
        result = invoke(runner, "witten", "--s", "5/2", "--limit", "100")
        assert result.exit_code == 0, result.stderr
        output = WittenOutput.model_validate_json(result.stdout)
        assert output.exact is None
        assert output.s == "5/2"


class TestRelationCommand:
    """Test ``relation``."""

    def test_passes(self, runner):
        """The relation holds at s = 2."""
        result = invoke(runner, "relation", *"--p 1 --q 1 --r 1 --u 1 --v 1 --s 2 --limit 1000".split())
        assert result.exit_code == 0, result.stderr
        output = RelationOutput.model_validate_json(result.stdout)
        assert output.passed
        assert len(output.six_terms) == 6
        assert output.six_terms[0].label == "zeta2(2,2,2,2,2,2)"

    def test_pole(self, runner):
        """s = −7 hits the pole of a correction row."""
        result = invoke(runner, "relation", *"--p 1 --q 1 --r 1 --u 1 --v 1 --s=-7".split())
        assert result.exit_code == EXIT_SINGULAR
        assert ErrorOutput.model_validate_json(result.stderr).error == "singular"

    def test_failure(self, runner, mocker):
        """A failing check still prints its report and exits with 3."""
        mocker.patch("witten_g2.relations.zeta2_numeric", return_value=NumericValue(mp.mpf(1), 0))
        result = invoke(runner, "relation", *"--p 1 --q 1 --r 1 --u 1 --v 1 --s 2".split())
        assert result.exit_code == EXIT_CONSISTENCY
        assert not RelationOutput.model_validate_json(result.stdout).passed

    def test_invalid_params(self, runner):
        """Parameters must be positive."""
        result = invoke(runner, "relation", *"--p 0 --q 1 --r 1 --u 1 --v 1 --s 2".split())
        assert result.exit_code == EXIT_DOMAIN


class TestSingularitiesCommand:
    """Test ``singularities``."""

    def test_hits(self, runner):
        """(0, 0, 0, 0, 0, 1) lies on the first two families."""
        result = invoke(runner, "singularities", "--s", "0,0,0,0,0,1")
        assert result.exit_code == 0, result.stderr
        output = SingularitiesOutput.model_validate_json(result.stdout)
        assert [(hit.family, hit.l) for hit in output.hits] == [(1, 0), (2, 0)]

    def test_family_three(self, runner):
        """Σs = 2 is reported without l."""
        result = invoke(runner, "singularities", "--s", "1/2,3/2,0,0,0,0")
        output = SingularitiesOutput.model_validate_json(result.stdout)
        assert [(hit.family, hit.l) for hit in output.hits] == [(3, None)]

    def test_wrong_length(self, runner):
        """Six rationals are required."""
        result = invoke(runner, "singularities", "--s", "1,2")
        assert result.exit_code == 2


class TestSelfCheckCommand:
    """Test ``self-check``."""

    @pytest.mark.slow
    def test_all_pass(self, runner):
        """Every built-in check passes."""
        result = invoke(runner, "self-check")
        assert result.exit_code == 0, result.stdout
        output = SelfCheckOutput.model_validate_json(result.stdout)
        assert output.passed
        assert len(output.checks) == 10

    def test_failure_exit_code(self, runner, mocker):
        """A failing check exits with 3."""
        mocker.patch(
            "witten_g2.cli._self_checks",
            return_value=iter([("ok", lambda: True), ("broken", lambda: False)]),
        )
        result = invoke(runner, "self-check")
        assert result.exit_code == EXIT_CONSISTENCY
        checks = SelfCheckOutput.model_validate_json(result.stdout).checks
        assert [(check.name, check.passed) for check in checks] == [("ok", True), ("broken", False)]

    def test_consistency_error_recorded(self, runner, mocker):
        """A ConsistencyError inside a check is reported, not raised."""

        def broken():
            raise ConsistencyError("remainder at monomial (0, 0, 1, 0, 0, 0)")

        mocker.patch("witten_g2.cli._self_checks", return_value=iter([("division", broken)]))
        result = invoke(runner, "self-check")
        assert result.exit_code == EXIT_CONSISTENCY
        (check,) = SelfCheckOutput.model_validate_json(result.stdout).checks
        assert "remainder" in check.detail
