"""Verification and classification for the bracket-generalizing functional equations.

The families of continuous solutions of  f(a)g(x) = f(ax) + f(a/x)  on the
positive reals are: f identically zero; f = c1 + c2*log(x) with g = 2; and
f = c1*x^alpha + c2*x^(-alpha) with g(x) = x^alpha + x^(-alpha) for a real or
purely imaginary alpha.  A purely imaginary alpha = i*t is kept in real
arithmetic via g(x) = 2*cos(t*log x) (and f = c1*cos + c2*sin of t*log x).

Relations are referred to by the fixed identifiers

    6.1   f(a)g(x) = f(ax) + f(a/x)
    6.14  g(x) = g(1/x)
    6.15  g(x^2) = g(x)^2 - 2
    6.16  g(x^3) = g(x)^3 - 3g(x)
    6.17  g(a)g(x) = g(ax) + g(a/x)

check_relation evaluates residuals of these identities at log-uniform sample
points.  The closed forms are exact identities, so residuals are computed in
extended precision (mpmath); plain double evaluation leaves libm noise of
order 1e-8 at the large end of the sampling box, which would drown the
1e-9 verification tolerance.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from enum import Enum
from typing import Callable

import mpmath

RELATIONS = ("6.1", "6.14", "6.15", "6.16", "6.17")
_TWO_ARG = {"6.1", "6.17"}

_MP_DPS = 40


class FamilyKind(Enum):
    ZERO = "zero"
    LOG_AFFINE = "log_affine"
    POWER_SYMMETRIC = "power_symmetric"


class DomainError(ValueError):
    """Argument outside the positive reals."""


class UnknownRelationError(ValueError):
    """Relation identifier not in RELATIONS."""


class UnclassifiableError(ValueError):
    """The oracle is outside the characterized solution families."""


@dataclass(frozen=True)
class FamilySpec:
    """One solution family; alpha is the exponent (magnitude t when imaginary)."""

    kind: FamilyKind
    alpha: float = 0.0
    imaginary: bool = False
    c1: float = 1.0
    c2: float = 1.0


@dataclass(frozen=True)
class ResidualReport:
    relation: str
    samples: int
    max_residual: float
    argmax: tuple[float, ...]

    def to_json_dict(self) -> dict:
        return {
            "relation": self.relation,
            "samples": self.samples,
            "max_residual": self.max_residual,
            "argmax": list(self.argmax),
        }


def _check_positive(x: float) -> float:
    if not x > 0:
        raise DomainError(f"argument must be positive, got {x!r}")
    return x


def eval_g(spec: FamilySpec, x: float) -> float:
    """x^alpha + x^(-alpha), 2*cos(t*log x) for imaginary alpha, else 2."""
    _check_positive(x)
    if spec.kind is FamilyKind.POWER_SYMMETRIC:
        if spec.imaginary:
            return 2.0 * math.cos(spec.alpha * math.log(x))
        return math.pow(x, spec.alpha) + math.pow(x, -spec.alpha)
    return 2.0


def eval_f(spec: FamilySpec, x: float) -> float:
    """The f member of the family at x."""
    _check_positive(x)
    if spec.kind is FamilyKind.ZERO:
        return 0.0
    if spec.kind is FamilyKind.LOG_AFFINE:
        return spec.c1 + spec.c2 * math.log(x)
    if spec.imaginary:
        t = spec.alpha * math.log(x)
        return spec.c1 * math.cos(t) + spec.c2 * math.sin(t)
    return spec.c1 * math.pow(x, spec.alpha) + spec.c2 * math.pow(x, -spec.alpha)


def _g_mp(spec: FamilySpec, x):
    if spec.kind is FamilyKind.POWER_SYMMETRIC:
        alpha = mpmath.mpf(spec.alpha)
        if spec.imaginary:
            return 2 * mpmath.cos(alpha * mpmath.log(x))
        return mpmath.power(x, alpha) + mpmath.power(x, -alpha)
    return mpmath.mpf(2)


def _f_mp(spec: FamilySpec, x):
    if spec.kind is FamilyKind.ZERO:
        return mpmath.mpf(0)
    c1, c2 = mpmath.mpf(spec.c1), mpmath.mpf(spec.c2)
    if spec.kind is FamilyKind.LOG_AFFINE:
        return c1 + c2 * mpmath.log(x)
    alpha = mpmath.mpf(spec.alpha)
    if spec.imaginary:
        t = alpha * mpmath.log(x)
        return c1 * mpmath.cos(t) + c2 * mpmath.sin(t)
    return c1 * mpmath.power(x, alpha) + c2 * mpmath.power(x, -alpha)


def _residual_mp(spec: FamilySpec, relation: str, a, x):
    g = lambda v: _g_mp(spec, v)
    f = lambda v: _f_mp(spec, v)
    if relation == "6.1":
        return f(a) * g(x) - f(a * x) - f(a / x)
    if relation == "6.14":
        return g(x) - g(1 / x)
    if relation == "6.15":
        return g(x * x) - (g(x) ** 2 - 2)
    if relation == "6.16":
        return g(x ** 3) - (g(x) ** 3 - 3 * g(x))
    if relation == "6.17":
        return g(a) * g(x) - g(a * x) - g(a / x)
    raise UnknownRelationError(f"unknown relation {relation!r}")


def _sample_log_uniform(seed: int, index: int, count: int = 2) -> tuple[float, ...]:
    """Per-sample point(s) in [0.1, 10], depending only on (seed, index)."""
    rng = random.Random(f"funceq:{seed}:{index}")
    return tuple(10.0 ** rng.uniform(-1.0, 1.0) for _ in range(count))


def check_relation(spec: FamilySpec, relation: str, samples: int, seed: int) -> ResidualReport:
    """Max |lhs - rhs| of the named relation over log-uniform samples in [0.1, 10]."""
    if relation not in RELATIONS:
        raise UnknownRelationError(f"unknown relation {relation!r}")
    if samples < 1:
        raise ValueError("samples must be >= 1")
    two_arg = relation in _TWO_ARG
    worst = -1.0
    argmax: tuple[float, ...] = ()
    with mpmath.workdps(_MP_DPS):
        for i in range(samples):
            a, x = _sample_log_uniform(seed, i)
            r = abs(_residual_mp(spec, relation, mpmath.mpf(a), mpmath.mpf(x)))
            if r > worst:
                worst = float(r)
                argmax = (a, x) if two_arg else (x,)
    return ResidualReport(relation, samples, worst, argmax)


def classify(oracle: Callable[[float], float], samples: int, seed: int,
             tolerance: float = 1e-9) -> FamilySpec:
    """Fit a FamilySpec to a black-box g assumed to satisfy relations 6.14-6.16.

    alpha is estimated from g at the base point x0 = 2: for g(x0) >= 2 the
    real exponent is the base-2 log of the larger root of z^2 - g*z + 1 = 0;
    for |g(x0)| < 2 the smallest t >= 0 with 2*cos(t*log 2) = g(x0) is used.
    The fitted spec is validated against the oracle on sample points and via
    check_relation on 6.17.  alpha (or t) is normalised to be >= 0, matching
    the evenness of x^alpha + x^(-alpha).
    """
    x0 = 2.0
    g0 = oracle(x0)
    if g0 < -2.0:
        raise UnclassifiableError(f"g({x0}) = {g0} < -2 is outside the characterized class")
    if g0 >= 2.0:
        z = (g0 + math.sqrt(g0 * g0 - 4.0)) / 2.0
        fitted = FamilySpec(FamilyKind.POWER_SYMMETRIC, alpha=math.log(z) / math.log(x0))
    else:
        t = math.acos(g0 / 2.0) / math.log(x0)
        fitted = FamilySpec(FamilyKind.POWER_SYMMETRIC, alpha=t, imaginary=True)
    mismatch = 0.0
    for i in range(samples):
        (x,) = _sample_log_uniform(seed, i, count=1)
        mismatch = max(mismatch, abs(oracle(x) - eval_g(fitted, x)))
    if mismatch > tolerance:
        raise UnclassifiableError(
            f"fitted family deviates from the oracle by {mismatch:.3g} > {tolerance:.3g}")
    report = check_relation(fitted, "6.17", samples, seed)
    if report.max_residual > tolerance:
        raise UnclassifiableError(
            f"fitted family violates 6.17 by {report.max_residual:.3g}")
    return fitted
