"""Exact sparse Laurent-polynomial arithmetic in the variables a, b, c, x, y.

Exponents live in half-integer units: every exponent is stored as a *doubled*
integer, so the monomial b**(1/2) has the doubled vector (0, 1, 0, 0, 0) and an
ordinary integer exponent is an even doubled value.  This keeps all arithmetic
in plain Python integers while still admitting the half-integer powers that
show up inside bracket/angle factorisations.

A polynomial is a dict mapping exponent vectors (5-tuples of doubled ints) to
nonzero arbitrary-precision integer coefficients; the zero polynomial is the
empty dict.  Every operation returns a canonical value (no zero coefficient is
ever stored), so two polynomials are equal iff their term dicts are equal.
Values are never mutated after construction and all operations are pure, so
everything here is safe to use from concurrent threads.

The two building blocks used throughout the package are

    bracket(m) = m - 1/m        angle(m) = m + 1/m

for a monomial m, which satisfy  bracket(a)*angle(x) = bracket(a*x) +
bracket(a/x)  and  bracket(a)*bracket(x) = angle(a*x) - angle(a/x).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

VARIABLES = ("a", "b", "c", "x", "y")
NVARS = len(VARIABLES)
_VAR_INDEX = {name: i for i, name in enumerate(VARIABLES)}

#: Exponent vector: 5 doubled-integer exponents, ordered as VARIABLES.
#: Plain tuples are used so that lexicographic comparison (canonical term
#: order) and hashing come for free.
ExponentVector = tuple

ZERO_VECTOR: ExponentVector = (0,) * NVARS

ExponentLike = Union[int, Fraction]


class ZeroCoordinateError(ValueError):
    """An evaluation point contains a zero coordinate."""


def exponents(a: ExponentLike = 0, b: ExponentLike = 0, c: ExponentLike = 0,
              x: ExponentLike = 0, y: ExponentLike = 0) -> ExponentVector:
    """Build an exponent vector from true exponents (ints or half-integer Fractions).

    >>> exponents(a=1, b=Fraction(1, 2))
    (2, 1, 0, 0, 0)
    """
    vec = []
    for e in (a, b, c, x, y):
        d = 2 * Fraction(e)
        if d.denominator != 1:
            raise ValueError(f"exponent {e!r} is not an integer or half-integer")
        vec.append(int(d))
    return tuple(vec)


def as_exponent_vector(seq: Iterable[int]) -> ExponentVector:
    """Validate and normalise a raw doubled-exponent sequence."""
    vec = tuple(seq)
    if len(vec) != NVARS:
        raise ValueError(f"exponent vector must have {NVARS} entries, got {len(vec)}")
    if not all(isinstance(d, int) for d in vec):
        raise TypeError("doubled exponents must be ints")
    return vec


def _negate(vec: ExponentVector) -> ExponentVector:
    return tuple(-d for d in vec)


def _vadd(u: ExponentVector, v: ExponentVector) -> ExponentVector:
    return tuple(p + q for p, q in zip(u, v))


class LaurentPoly:
    """Canonical sparse Laurent polynomial with integer coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[ExponentVector, int] | None = None):
        clean: dict[ExponentVector, int] = {}
        if terms:
            for vec, coeff in terms.items():
                vec = as_exponent_vector(vec)
                if not isinstance(coeff, int):
                    raise TypeError(f"coefficient {coeff!r} is not an integer")
                if coeff:
                    clean[vec] = coeff
        self.terms = clean

    @classmethod
    def _raw(cls, terms: dict[ExponentVector, int]) -> "LaurentPoly":
        """Wrap an already-canonical term dict without re-validating."""
        poly = object.__new__(cls)
        poly.terms = terms
        return poly

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls._raw({})

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls._raw({ZERO_VECTOR: 1})

    @classmethod
    def constant(cls, value: int) -> "LaurentPoly":
        return cls._raw({ZERO_VECTOR: value} if value else {})

    @classmethod
    def monomial(cls, vec: ExponentVector, coeff: int = 1) -> "LaurentPoly":
        vec = as_exponent_vector(vec)
        return cls._raw({vec: coeff} if coeff else {})

    @classmethod
    def variable(cls, name: str) -> "LaurentPoly":
        vec = [0] * NVARS
        vec[_VAR_INDEX[name]] = 2
        return cls._raw({tuple(vec): 1})

    # -- ring structure ----------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LaurentPoly):
            return self.terms == other.terms
        if isinstance(other, int):
            return self.terms == ({} if other == 0 else {ZERO_VECTOR: other})
        return NotImplemented

    def __add__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out = dict(self.terms)
        for vec, coeff in other.terms.items():
            s = out.get(vec, 0) + coeff
            if s:
                out[vec] = s
            else:
                out.pop(vec, None)
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._raw({vec: -c for vec, c in self.terms.items()})

    def __sub__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly":
        return (-self) + other

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            if not other:
                return LaurentPoly.zero()
            return LaurentPoly._raw({vec: c * other for vec, c in self.terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out: dict[ExponentVector, int] = {}
        for u, cu in self.terms.items():
            for v, cv in other.terms.items():
                w = _vadd(u, v)
                s = out.get(w, 0) + cu * cv
                if s:
                    out[w] = s
                else:
                    out.pop(w, None)
        return LaurentPoly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, power: int) -> "LaurentPoly":
        if not isinstance(power, int) or power < 0:
            raise ValueError("only non-negative integer powers are supported")
        result = LaurentPoly.one()
        base = self
        while power:
            if power & 1:
                result = result * base
            base = base * base
            power >>= 1
        return result

    # -- structure queries -------------------------------------------------

    def half_support(self) -> tuple[bool, ...]:
        """Per-variable flag: does any term carry a half-integer exponent?"""
        flags = [False] * NVARS
        for vec in self.terms:
            for i, d in enumerate(vec):
                if d % 2:
                    flags[i] = True
        return tuple(flags)

    def has_half_exponents(self) -> bool:
        return any(self.half_support())

    def set_y_to_x(self) -> "LaurentPoly":
        """Substitute y := x (fold every y exponent onto x)."""
        out: dict[ExponentVector, int] = {}
        for (ea, eb, ec, ex, ey), coeff in self.terms.items():
            vec = (ea, eb, ec, ex + ey, 0)
            s = out.get(vec, 0) + coeff
            if s:
                out[vec] = s
            else:
                out.pop(vec, None)
        return LaurentPoly._raw(out)

    def __repr__(self) -> str:
        return f"LaurentPoly({to_string(self)})"

    __str__ = __repr__


def add(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """Canonical sum of two polynomials."""
    return p + q


def mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """Canonical product; exponent vectors add componentwise."""
    return p * q


def bracket(vec: ExponentVector) -> LaurentPoly:
    """m - 1/m for the monomial m with the given exponents; 0 for the empty monomial."""
    vec = as_exponent_vector(vec)
    if vec == ZERO_VECTOR:
        return LaurentPoly.zero()
    return LaurentPoly._raw({vec: 1, _negate(vec): -1})


def angle(vec: ExponentVector) -> LaurentPoly:
    """m + 1/m for the monomial m with the given exponents; 2 for the empty monomial."""
    vec = as_exponent_vector(vec)
    if vec == ZERO_VECTOR:
        return LaurentPoly.constant(2)
    return LaurentPoly._raw({vec: 1, _negate(vec): 1})


def evaluate(p: LaurentPoly, point: Sequence[ExponentLike]) -> Fraction:
    """Exact rational value of p at a point of 5 nonzero rationals.

    For a variable on which p carries half-integer exponents, the supplied
    coordinate is read as the value of the variable's *square root* (callers
    substitute squares for those slots elsewhere), so the result stays an
    exact rational.  Variables with integer exponents only are read directly.
    """
    coords = [Fraction(v) for v in point]
    if len(coords) != NVARS:
        raise ValueError(f"evaluation point must have {NVARS} coordinates")
    for v in coords:
        if v == 0:
            raise ZeroCoordinateError("evaluation point has a zero coordinate")
    if not p.terms:
        return Fraction(0)
    half = p.half_support()
    # Factor out the per-variable minimum exponent so the inner loop runs on
    # nonnegative powers; big formulas then evaluate in pure integer
    # arithmetic when the point is integral.
    effective = {
        vec: tuple((d if half[i] else d // 2) for i, d in enumerate(vec))
        for vec in p.terms
    }
    mins = [min(es[i] for es in effective.values()) for i in range(NVARS)]
    caches: list[dict[int, object]] = [{} for _ in range(NVARS)]
    integral = all(v.denominator == 1 for v in coords)
    bases = [v.numerator if integral else v for v in coords]

    def power(i: int, e: int):
        value = caches[i].get(e)
        if value is None:
            value = bases[i] ** e
            caches[i][e] = value
        return value

    total = 0 if integral else Fraction(0)
    for vec, coeff in p.terms.items():
        term = coeff
        es = effective[vec]
        for i in range(NVARS):
            e = es[i] - mins[i]
            if e:
                term = term * power(i, e)
        total = total + term
    scale = Fraction(1)
    for i, m in enumerate(mins):
        if m:
            scale *= coords[i] ** m
    return total * scale


# -- serialization ----------------------------------------------------------


def to_records(p: LaurentPoly) -> list[dict]:
    """Structured form: one record per term, in lexicographic exponent order."""
    records = []
    for vec in sorted(p.terms):
        records.append({
            "coefficient": p.terms[vec],
            "exponents": [str(Fraction(d, 2)) for d in vec],
        })
    return records


def from_records(records: Iterable[Mapping]) -> LaurentPoly:
    terms: dict[ExponentVector, int] = {}
    for rec in records:
        vec = exponents(*[Fraction(e) for e in rec["exponents"]])
        coeff = rec["coefficient"]
        if not isinstance(coeff, int):
            raise TypeError(f"coefficient {coeff!r} is not an integer")
        terms[vec] = terms.get(vec, 0) + coeff
    return LaurentPoly(terms)


def _format_power(name: str, doubled: int) -> str:
    if doubled % 2 == 0:
        e = doubled // 2
        return name if e == 1 else f"{name}^{e}"
    return f"{name}^({doubled}/2)"


def to_string(p: LaurentPoly) -> str:
    """Human-readable form like ``a*b^2*c^(1/2)*x^-3``; terms in canonical order."""
    if not p.terms:
        return "0"
    chunks = []
    for vec in sorted(p.terms):
        coeff = p.terms[vec]
        factors = [_format_power(name, d) for name, d in zip(VARIABLES, vec) if d]
        mag = abs(coeff)
        if not factors:
            body = str(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = "*".join([str(mag)] + factors)
        if not chunks:
            chunks.append(body if coeff > 0 else f"-{body}")
        else:
            chunks.append(f"+ {body}" if coeff > 0 else f"- {body}")
    return " ".join(chunks)


def _split_terms(s: str) -> list[tuple[int, str]]:
    """Split on top-level +/- (ignoring signs inside parens and after '^')."""
    parts: list[tuple[int, str]] = []
    sign, start, depth = 1, 0, 0
    i = 0
    while i < len(s):
        ch = s[i]
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch in "+-" and depth == 0:
            prev = s[:i].rstrip()
            if prev and not prev.endswith("^"):
                parts.append((sign, s[start:i]))
                sign = 1 if ch == "+" else -1
                start = i + 1
            elif not prev:
                sign = 1 if ch == "+" else -1
                start = i + 1
        i += 1
    parts.append((sign, s[start:]))
    return parts


def from_string(s: str) -> LaurentPoly:
    """Parse the output of :func:`to_string` back into a polynomial."""
    s = s.strip()
    if not s or s == "0":
        return LaurentPoly.zero()
    terms: dict[ExponentVector, int] = {}
    for sign, chunk in _split_terms(s):
        chunk = chunk.strip()
        if not chunk:
            raise ValueError(f"empty term in {s!r}")
        coeff = sign
        vec = [0] * NVARS
        for factor in chunk.split("*"):
            factor = factor.strip()
            if not factor:
                raise ValueError(f"empty factor in {chunk!r}")
            if factor[0] not in _VAR_INDEX:
                coeff *= int(factor)
                continue
            name, _, exp = factor.partition("^")
            if name not in _VAR_INDEX:
                raise ValueError(f"unknown variable {name!r}")
            if not exp:
                doubled = 2
            else:
                d = 2 * Fraction(exp.strip().strip("()"))
                if d.denominator != 1:
                    raise ValueError(f"exponent {exp!r} is not a half-integer")
                doubled = int(d)
            vec[_VAR_INDEX[name]] += doubled
        key = tuple(vec)
        total = terms.get(key, 0) + coeff
        if total:
            terms[key] = total
        else:
            terms.pop(key, None)
    return LaurentPoly._raw(terms)
