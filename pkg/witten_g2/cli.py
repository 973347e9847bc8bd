"""Command line front end.

Every command prints one JSON document on standard output. Errors are
printed as ``{"error": ..., "message": ...}`` on standard error with exit
code 2 for usage and domain errors, 3 for internal consistency failures
and 4 when a relation argument sits on a zeta pole.
"""

import logging
import sys
from fractions import Fraction

import click
import mpmath as mp
import numpy as np
import pydantic

from witten_g2.algebra import ConsistencyError, PiValue
from witten_g2.config import RelationConfig, Settings
from witten_g2.generating import (
    AlgorithmMismatchError,
    bernoulli_coefficient,
    cross_check,
    laurent_cancellation_failures,
    orbit_value_table,
    weyl_sum_exact,
    witten_volume_constant,
    zeta2_exact,
)
from witten_g2.numeric import riemann_zeta_numeric, weyl_sum_numeric, witten_numeric, zeta2_numeric_twisted
from witten_g2.relations import (
    RelationParams,
    SingularArgumentError,
    check_relation,
    reduce_even,
    singular_locus_check,
    symbolic_relation,
    verify_alternating_convolution,
    verify_even_zeta_inversion,
    weyl_orbit_value,
)
from witten_g2.util import format_rational, parse_int_tuple, parse_rational

logger = logging.getLogger("witten_g2.cli")

DIGITS = 30
PI_DIGITS = 50

EXIT_DOMAIN = 2
EXIT_CONSISTENCY = 3
EXIT_SINGULAR = 4


class ErrorOutput(pydantic.BaseModel):
    error: str
    message: str


class ValueOutput(pydantic.BaseModel):
    k: list[int]
    coefficient: str
    pi_power: int
    decimal: str
    method: str
    pi_digits_used: int = PI_DIGITS


class ValueTableOutput(pydantic.BaseModel):
    rows: list[ValueOutput]


class BernoulliOutput(pydantic.BaseModel):
    k: list[int]
    y: list[str]
    P: str
    method: str


class NumericOutput(pydantic.BaseModel):
    real: str
    imag: str
    error_bound: str


class WeylSumOutput(pydantic.BaseModel):
    k: list[int]
    y: list[str]
    exact_real: str
    exact_imag: str
    pi_power: int
    numeric: NumericOutput | None = None
    limit: int


class SumOutput(pydantic.BaseModel):
    s: list[str]
    y: list[str]
    value: NumericOutput
    limit: int
    precision: int
    engine: str


class WittenOutput(pydantic.BaseModel):
    s: str
    value: NumericOutput
    exact: str | None = None
    pi_power: int | None = None
    limit: int


class RelationTermOutput(pydantic.BaseModel):
    label: str
    value: NumericOutput


class RelationOutput(pydantic.BaseModel):
    params: dict[str, int]
    s: str
    six_terms: list[RelationTermOutput]
    parts: list[RelationTermOutput]
    residual: str
    tolerance: str
    passed: bool


class SingularHitOutput(pydantic.BaseModel):
    family: int
    l: int | None = None


class SingularitiesOutput(pydantic.BaseModel):
    s: list[str]
    hits: list[SingularHitOutput]


class CheckOutput(pydantic.BaseModel):
    name: str
    passed: bool
    detail: str = ""


class SelfCheckOutput(pydantic.BaseModel):
    checks: list[CheckOutput]
    passed: bool


def _emit(model):
    click.echo(model.model_dump_json(indent=2))


def _fail(kind, message, code):
    click.echo(ErrorOutput(error=kind, message=message).model_dump_json(), err=True)
    raise click.exceptions.Exit(code)


class ExitCodeGroup(click.Group):
    """Maps library exceptions to JSON errors and exit codes."""

    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except SingularArgumentError as exc:
            _fail("singular", str(exc), EXIT_SINGULAR)
        except ConsistencyError as exc:
            _fail("consistency", str(exc), EXIT_CONSISTENCY)
        except (ValueError, TypeError) as exc:
            _fail("domain", str(exc), EXIT_DOMAIN)


def _int_tuple(ctx, param, value):
    if value is None:
        return None
    try:
        return parse_int_tuple(value, 6)
    except ValueError as exc:
        raise click.BadParameter(str(exc)) from None


def _rational_tuple(length):
    def convert(ctx, param, value):
        if value is None:
            return None
        try:
            values = tuple(parse_rational(item) for item in value.split(","))
        except (ValueError, TypeError) as exc:
            raise click.BadParameter(str(exc)) from None
        if len(values) != length:
            raise click.BadParameter(f"Expected {length} comma separated rationals, got {len(values)}")
        return values

    return convert


def _rational(ctx, param, value):
    try:
        return parse_rational(value)
    except (ValueError, TypeError) as exc:
        raise click.BadParameter(str(exc)) from None


def _numeric(value):
    return NumericOutput(
        real=mp.nstr(value.real, DIGITS),
        imag=mp.nstr(value.imag, DIGITS),
        error_bound=mp.nstr(value.error_bound, 5),
    )


def _rationals(values):
    return [format_rational(value) for value in values]


def _value_output(k, value, method):
    return ValueOutput(
        k=list(k),
        coefficient=format_rational(value.real),
        pi_power=value.pi_power,
        decimal=mp.nstr(value.to_decimal(DIGITS), DIGITS),
        method=method,
    )


def _other(algorithm):
    return "B" if algorithm == "A" else "A"


@click.group(cls=ExitCodeGroup)
@click.option("--verbose", is_flag=True, help="Log debug output on standard error.")
@click.pass_context
def cli(ctx, verbose):
    """Exact and numeric values of the G2 Witten zeta function."""
    logging.basicConfig(level=logging.DEBUG if verbose else logging.WARNING, stream=sys.stderr)
    ctx.obj = Settings.from_env()


algorithm_option = click.option("--algorithm", type=click.Choice(["A", "B"]), default=None, help="Coefficient algorithm.")
limit_option = click.option("--limit", type=int, default=None, help="Summation cutoff N.")
precision_option = click.option("--precision", type=int, default=None, help="Working precision in digits.")


@cli.command()
@click.option("--k", "k", callback=_int_tuple, help="Six even integers of the shape 2p,2q,2q,2q,2p,2p.")
@click.option("--table", type=int, default=None, help="Emit the value table for 1 <= p, q <= TABLE.")
@algorithm_option
@click.option("--no-cross-check", is_flag=True, help="Skip the second algorithm.")
@click.pass_obj
def value(settings, k, table, algorithm, no_cross_check):
    """Exact ζ₂ value at an orbit tuple."""
    algorithm = algorithm or settings.algorithm
    if table is not None:
        if table < 1:
            raise ValueError(f"--table must be >= 1, got {table}")
        rows = [_value_output(kk, result, algorithm) for kk, result in orbit_value_table(table, algorithm)]
        _emit(ValueTableOutput(rows=rows))
        return
    if k is None:
        raise click.UsageError("Give --k or --table")
    result = zeta2_exact(k, algorithm)
    method = algorithm
    if not no_cross_check and sum(k) <= settings.cross_check_degree:
        other = zeta2_exact(k, _other(algorithm))
        if other != result:
            raise AlgorithmMismatchError(f"zeta2{k}: {algorithm} gives {result}, {_other(algorithm)} gives {other}")
        method = "A+B"
    _emit(_value_output(k, result, method))


@cli.command()
@click.option("--k", "k", callback=_int_tuple, required=True, help="Six non-negative integers.")
@click.option("--y", "y", callback=_rational_tuple(2), default="0,0", show_default=True, help="Rational pair.")
@algorithm_option
@click.option("--no-cross-check", is_flag=True, help="Skip the second algorithm.")
@click.pass_obj
def bernoulli(settings, k, y, algorithm, no_cross_check):
    """Generalized Bernoulli coefficient P(k, y)."""
    algorithm = algorithm or settings.algorithm
    if not no_cross_check and sum(k) <= settings.cross_check_degree:
        result, method = cross_check(k, y), "A+B"
    else:
        result, method = bernoulli_coefficient(k, y, algorithm), algorithm
    _emit(BernoulliOutput(k=list(k), y=_rationals(y), P=format_rational(result), method=method))


@cli.command("weyl-sum")
@click.option("--k", "k", callback=_int_tuple, required=True, help="Six non-negative integers.")
@click.option("--y", "y", callback=_rational_tuple(2), default="0,0", show_default=True, help="Rational pair.")
@algorithm_option
@limit_option
@precision_option
@click.option("--exact-only", is_flag=True, help="Skip the numeric sum.")
@click.pass_obj
def weyl_sum(settings, k, y, algorithm, limit, precision, exact_only):
    """Weyl-symmetric sum S(k, y), exactly and numerically."""
    exact = weyl_sum_exact(k, y, algorithm or settings.algorithm)
    cfg = settings.summation(limit, precision)
    numeric = None if exact_only else _numeric(weyl_sum_numeric(k, y, cfg))
    _emit(
        WeylSumOutput(
            k=list(k),
            y=_rationals(y),
            exact_real=format_rational(exact.real),
            exact_imag=format_rational(exact.imag),
            pi_power=exact.pi_power,
            numeric=numeric,
            limit=cfg.limit,
        )
    )


@cli.command("sum")
@click.option("--s", "s", callback=_rational_tuple(6), required=True, help="Six non-negative reals.")
@click.option("--y", "y", callback=_rational_tuple(2), default="0,0", show_default=True, help="Rational pair.")
@limit_option
@precision_option
@click.option("--engine", type=click.Choice(["auto", "mpmath", "numpy"]), default="auto", show_default=True)
@click.pass_obj
def sum_command(settings, s, y, limit, precision, engine):
    """Numeric value of the twisted double series."""
    cfg = settings.summation(limit, precision, engine=engine)
    result = zeta2_numeric_twisted(s, y, cfg)
    _emit(
        SumOutput(
            s=_rationals(s),
            y=_rationals(y),
            value=_numeric(result),
            limit=cfg.limit,
            precision=cfg.working_precision,
            engine=cfg.resolved_engine(),
        )
    )


@cli.command()
@click.option("--s", "s", callback=_rational, required=True, help="Real argument.")
@limit_option
@precision_option
@click.option("--algorithm", type=click.Choice(["A", "B"]), default=None)
@click.pass_obj
def witten(settings, s, limit, precision, algorithm):
    """Witten zeta function ζ_W(s) = K^s·ζ₂(s, …, s)."""
    cfg = settings.summation(limit, precision)
    result = witten_numeric(s, cfg)
    exact, pi_power = None, None
    if s.denominator == 1 and s.numerator >= 2 and s.numerator % 2 == 0:
        closed = witten_volume_constant(s.numerator // 2, algorithm or settings.algorithm)
        exact, pi_power = format_rational(closed.real), closed.pi_power
    _emit(WittenOutput(s=format_rational(s), value=_numeric(result), exact=exact, pi_power=pi_power, limit=cfg.limit))


@cli.command()
@click.option("--p", type=int, required=True)
@click.option("--q", type=int, required=True)
@click.option("--r", type=int, required=True)
@click.option("--u", type=int, required=True)
@click.option("--v", type=int, required=True)
@click.option("--s", "s", callback=_rational, required=True, help="Real value of the free argument.")
@limit_option
@precision_option
@click.pass_context
def relation(ctx, p, q, r, u, v, s, limit, precision):
    """Numeric check of the six-term functional relation."""
    params = RelationParams.of(p, q, r, u, v)
    cfg = RelationConfig(summation=ctx.obj.summation(limit, precision))
    report = check_relation(params, s, cfg)
    _emit(
        RelationOutput(
            params=params.model_dump(),
            s=format_rational(s),
            six_terms=[
                RelationTermOutput(label="zeta2(" + ",".join(format_rational(x) for x in arguments) + ")", value=_numeric(result))
                for arguments, result in report.six_terms
            ],
            parts=[RelationTermOutput(label=f"part{part}", value=_numeric(result)) for part, result in report.part_values.items()],
            residual=mp.nstr(report.residual, 5),
            tolerance=mp.nstr(report.tolerance, 5),
            passed=report.passed,
        )
    )
    if not report.passed:
        ctx.exit(EXIT_CONSISTENCY)


@cli.command()
@click.option("--s", "s", callback=_rational_tuple(6), required=True, help="Six rationals.")
def singularities(s):
    """Singular hyperplane families containing s."""
    hits = [SingularHitOutput(family=hit.family, l=hit.l) for hit in singular_locus_check(s)]
    _emit(SingularitiesOutput(s=_rationals(s), hits=hits))


SINGULARITY_TABLE = (
    ((0, 0, 0, 0, 0, 1), [(1, 0), (2, 0)]),
    ((2, 2, 2, 2, 2, 2), []),
    ((1, 1, 0, 0, 0, 0), [(1, 0), (2, 0), (3, None)]),
    ((-1, 0, 0, 0, 0, 0), [(1, 2), (2, 1)]),
    ((Fraction(1, 2), Fraction(3, 2), 0, 0, 0, 0), [(3, None)]),
    ((Fraction(1, 3), 0, 0, 0, 0, 0), [(2, 1)]),
)


def _self_checks(seed=20240611):
    rng = np.random.default_rng(seed)

    def random_sequence(length):
        return [Fraction(int(n), int(d)) for n, d in zip(rng.integers(-9, 10, length), rng.integers(1, 10, length))]

    yield "zeta2(2,2,2,2,2,2)", lambda: zeta2_exact((2,) * 6) == PiValue(Fraction(23, 297904566960), 0, 12)
    yield "zeta2(2,4,4,4,2,2)", lambda: zeta2_exact((2, 4, 4, 4, 2, 2)) == PiValue(Fraction(467, 213955059990672000), 0, 18)
    yield "P(2,2,2,2,2,2)", lambda: bernoulli_coefficient((2,) * 6) == Fraction(23, 1588824357120)
    yield "symbolic relation (1,1,1,1,1)", lambda: {
        k: (c0 / 2, c1 / 2) for k, (c0, c1) in symbolic_relation((1, 1, 1, 1, 1)).items()
    } == {0: (Fraction(-27595, 5832), Fraction(-5, 1458)), 1: (Fraction(466, 162), Fraction(-1, 162))}
    yield "even reduction against the Weyl orbit", lambda: reduce_even((1, 1, 1, 1, 1), 1).value == weyl_orbit_value((1, 1, 1, 1, 1), 1)
    yield "Laurent cancellation through degree 3", lambda: not laurent_cancellation_failures(max_degree=3)
    yield "alternating convolution", lambda: all(
        verify_alternating_convolution(a, random_sequence(a + 1), random_sequence(a + 1)) for a in range(1, 6)
    )
    yield "even zeta inversion", lambda: verify_even_zeta_inversion(4, random_sequence(3))
    yield "singularity table", lambda: all(
        [(hit.family, hit.l) for hit in singular_locus_check(s)] == expected for s, expected in SINGULARITY_TABLE
    )
    yield "zeta(2) numeric", lambda: riemann_zeta_numeric(2).contains(mp.pi**2 / 6)


@cli.command("self-check")
@click.pass_context
def self_check(ctx):
    """Run a quick set of exact and numeric checks."""
    checks = []
    for name, check in _self_checks():
        try:
            passed, detail = bool(check()), ""
        except ConsistencyError as exc:
            passed, detail = False, str(exc)
        logger.debug("self-check %s: %s", name, passed)
        checks.append(CheckOutput(name=name, passed=passed, detail=detail))
    output = SelfCheckOutput(checks=checks, passed=all(check.passed for check in checks))
    _emit(output)
    if not output.passed:
        ctx.exit(EXIT_CONSISTENCY)


def main():
    cli(prog_name="witten-g2")
