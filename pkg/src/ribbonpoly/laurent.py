"""Sparse multivariate Laurent polynomials with integer coefficients.

A polynomial is a map from exponent vectors (one int per variable, negatives
allowed) to nonzero Python ints.  Values are immutable; every operation returns
a new canonical polynomial.  Terms iterate in graded-lexicographic order,
highest total degree first, ties broken lexicographically in variable order.

Text grammar accepted by :func:`parse`::

    poly := ['+'|'-'] term (('+'|'-') term)*
    term := power ('*' power)*
    power := atom ('^' ['-'] int)?
    atom := int | var | '(' poly ')'
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence, Union

Exps = tuple[int, ...]

# exponents are bounded by edge counts and genera; this only catches runaway input
MAX_EXPONENT = 2**31 - 1


class LaurentError(ValueError):
    pass


class VarSetMismatch(LaurentError):
    pass


class NonInvertibleSubstituent(LaurentError):
    """A negative power was requested of something that is not a unit monomial."""


class MissingAssignment(LaurentError):
    pass


class ZeroAtNegativeExponent(ZeroDivisionError):
    pass


class PolySyntaxError(LaurentError):
    pass


class UnknownVariable(LaurentError):
    pass


class NotExactlyDivisible(LaurentError):
    pass


def _check_exps(exps: Exps) -> Exps:
    for e in exps:
        if e > MAX_EXPONENT or e < -MAX_EXPONENT:
            raise OverflowError(f"exponent {e} out of range")
    return exps


def _order_key(exps: Exps):
    return (sum(exps), exps)


class LaurentPoly:
    """Immutable Laurent polynomial over a fixed ordered variable set."""

    __slots__ = ("vars", "_terms", "_hash")

    def __init__(self, vars: Sequence[str], terms: Mapping[Exps, int] | None = None):
        vars = tuple(vars)
        if len(set(vars)) != len(vars):
            raise LaurentError(f"duplicate variable names in {vars}")
        self.vars = vars
        clean = {}
        if terms:
            n = len(vars)
            for exps, c in terms.items():
                exps = tuple(int(e) for e in exps)
                if len(exps) != n:
                    raise LaurentError(f"exponent vector {exps} does not match {vars}")
                if c:
                    clean[_check_exps(exps)] = int(c)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, vars: tuple[str, ...], terms: dict[Exps, int]) -> LaurentPoly:
        # trusted fast path: terms already clean
        p = object.__new__(cls)
        p.vars = vars
        p._terms = terms
        p._hash = None
        return p

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, vars: Sequence[str]) -> LaurentPoly:
        return cls(vars)

    @classmethod
    def const(cls, vars: Sequence[str], c: int) -> LaurentPoly:
        vars = tuple(vars)
        return cls(vars, {(0,) * len(vars): c})

    @classmethod
    def var(cls, vars: Sequence[str], name: str, power: int = 1) -> LaurentPoly:
        vars = tuple(vars)
        if name not in vars:
            raise UnknownVariable(name)
        exps = [0] * len(vars)
        exps[vars.index(name)] = power
        return cls(vars, {tuple(exps): 1})

    # -- inspection ---------------------------------------------------------

    def terms(self) -> list[tuple[Exps, int]]:
        """(exponents, coefficient) pairs in canonical order."""
        return sorted(self._terms.items(), key=lambda t: _order_key(t[0]), reverse=True)

    def __iter__(self) -> Iterator[tuple[Exps, int]]:
        return iter(self.terms())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def coeff(self, exps: Sequence[int]) -> int:
        return self._terms.get(tuple(exps), 0)

    def is_laurent_free(self) -> bool:
        return all(e >= 0 for exps in self._terms for e in exps)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def degree(self, name: str) -> int:
        i = self.vars.index(name)
        return max((exps[i] for exps in self._terms), default=0)

    def min_degree(self, name: str) -> int:
        i = self.vars.index(name)
        return min((exps[i] for exps in self._terms), default=0)

    # -- equality -----------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.const(self.vars, other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.vars == other.vars and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.vars, frozenset(self._terms.items())))
        return self._hash

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> LaurentPoly:
        if isinstance(other, LaurentPoly):
            if other.vars != self.vars:
                raise VarSetMismatch(f"{self.vars} vs {other.vars}")
            return other
        if isinstance(other, int):
            return LaurentPoly.const(self.vars, other)
        raise TypeError(f"cannot combine LaurentPoly with {type(other).__name__}")

    def __add__(self, other) -> LaurentPoly:
        other = self._coerce(other)
        out = dict(self._terms)
        for exps, c in other._terms.items():
            s = out.get(exps, 0) + c
            if s:
                out[exps] = s
            else:
                out.pop(exps, None)
        return LaurentPoly._raw(self.vars, out)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly._raw(self.vars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> LaurentPoly:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> LaurentPoly:
        return self._coerce(other) - self

    def __mul__(self, other) -> LaurentPoly:
        other = self._coerce(other)
        out: dict[Exps, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    del out[e]
        return LaurentPoly._raw(self.vars, out)

    __rmul__ = __mul__

    def inverse(self) -> LaurentPoly:
        """Inverse of a unit monomial (coefficient +1 or -1)."""
        if len(self._terms) != 1:
            raise NonInvertibleSubstituent(f"{self} is not a monomial")
        (exps, c), = self._terms.items()
        if c not in (1, -1):
            raise NonInvertibleSubstituent(f"coefficient {c} is not a unit")
        return LaurentPoly._raw(self.vars, {_check_exps(tuple(-e for e in exps)): c})

    def __pow__(self, k: int) -> LaurentPoly:
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        if len(self._terms) == 1:
            (exps, c), = self._terms.items()
            return LaurentPoly._raw(self.vars, {_check_exps(tuple(e * k for e in exps)): c**k})
        result = LaurentPoly.const(self.vars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def shift(self, exps: Sequence[int]) -> LaurentPoly:
        """Multiply by the monomial with the given exponents."""
        exps = tuple(exps)
        return LaurentPoly._raw(
            self.vars,
            {_check_exps(tuple(a + b for a, b in zip(e, exps))): c for e, c in self._terms.items()},
        )

    def __repr__(self) -> str:
        return f"LaurentPoly({format_poly(self)!r}, vars={self.vars})"

    def __str__(self) -> str:
        return format_poly(self)


Substituent = Union[LaurentPoly, int, str]


def monomial(vars: Sequence[str], exps: Sequence[int], coeff: int = 1) -> LaurentPoly:
    return LaurentPoly(vars, {tuple(exps): coeff})


def add(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p + q


def mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p * q


def from_counts(vars: Sequence[str], counts: Mapping[Exps, int]) -> LaurentPoly:
    return LaurentPoly(vars, counts)


def substitute(
    p: LaurentPoly,
    assignment: Mapping[str, Substituent],
    target: Sequence[str] | None = None,
) -> LaurentPoly:
    """Simultaneously replace every variable of ``p``.

    Values in ``assignment`` may be polynomials over ``target``, ints, or
    polynomial text (parsed over ``target``).  Negative exponents are only
    allowed where the substituent is a unit monomial.
    """
    if target is None:
        for v in assignment.values():
            if isinstance(v, LaurentPoly):
                target = v.vars
                break
        else:
            target = p.vars
    target = tuple(target)
    subs = []
    for name in p.vars:
        if name not in assignment:
            raise MissingAssignment(name)
        v = assignment[name]
        if isinstance(v, str):
            v = parse(v, target)
        elif isinstance(v, int):
            v = LaurentPoly.const(target, v)
        elif v.vars != target:
            raise VarSetMismatch(f"substituent for {name} is over {v.vars}, expected {target}")
        subs.append(v)

    cache: dict[tuple[int, int], LaurentPoly] = {}

    def power(i: int, k: int) -> LaurentPoly:
        key = (i, k)
        if key not in cache:
            if k < 0 and not _is_unit_monomial(subs[i]):
                raise NonInvertibleSubstituent(
                    f"{p.vars[i]} appears with exponent {k} but its substituent {subs[i]} is not invertible"
                )
            cache[key] = subs[i] ** k
        return cache[key]

    result = LaurentPoly.zero(target)
    one = LaurentPoly.const(target, 1)
    for exps, c in p._terms.items():
        t = one
        for i, k in enumerate(exps):
            if k:
                t = t * power(i, k)
        result = result + t * c
    return result


def _is_unit_monomial(q: LaurentPoly) -> bool:
    return len(q._terms) == 1 and next(iter(q._terms.values())) in (1, -1)


def rename(p: LaurentPoly, mapping: Mapping[str, str], target: Sequence[str]) -> LaurentPoly:
    """Variable permutation/renaming, a cheap special case of substitution."""
    target = tuple(target)
    idx = [target.index(mapping[v]) for v in p.vars]
    out = {}
    for exps, c in p._terms.items():
        e = [0] * len(target)
        for i, k in zip(idx, exps):
            e[i] += k
        out[tuple(e)] = out.get(tuple(e), 0) + c
    return LaurentPoly(target, out)


def evaluate(p: LaurentPoly, point: Mapping[str, int | Fraction]) -> Fraction:
    vals = []
    for name in p.vars:
        if name not in point:
            raise MissingAssignment(name)
        vals.append(Fraction(point[name]))
    total = Fraction(0)
    for exps, c in p._terms.items():
        t = Fraction(c)
        for v, k in zip(vals, exps):
            if k < 0 and v == 0:
                raise ZeroAtNegativeExponent("zero value for a variable with negative exponent")
            if k:
                t *= v**k
        total += t
    return total


def coefficient_sum(p: LaurentPoly) -> int:
    return sum(c for _, c in p._terms.items())


def divide_exact(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """Quotient ``p / q`` when ``q`` divides ``p`` in the polynomial ring.

    Both operands must be Laurent-free.  Raises NotExactlyDivisible when a
    nonzero remainder would be left.
    """
    q = p._coerce(q)
    if not q:
        raise ZeroDivisionError("division by the zero polynomial")
    if not (p.is_laurent_free() and q.is_laurent_free()):
        raise NotExactlyDivisible("exact division requires nonnegative exponents")
    lead_e, lead_c = max(q._terms.items(), key=lambda t: t[0])
    rem = p
    quot: dict[Exps, int] = {}
    while rem:
        e, c = max(rem._terms.items(), key=lambda t: t[0])
        de = tuple(a - b for a, b in zip(e, lead_e))
        if any(x < 0 for x in de) or c % lead_c:
            raise NotExactlyDivisible(f"{q} does not divide {p}")
        qc = c // lead_c
        quot[de] = quot.get(de, 0) + qc
        rem = rem - q * LaurentPoly._raw(p.vars, {de: qc})
    return LaurentPoly(p.vars, quot)


# -- text ---------------------------------------------------------------------


def _format_term(vars: tuple[str, ...], exps: Exps, c: int) -> str:
    factors = []
    for name, k in zip(vars, exps):
        if k == 1:
            factors.append(name)
        elif k:
            factors.append(f"{name}^{k}")
    if not factors:
        return str(c)
    body = "*".join(factors)
    if c == 1:
        return body
    if c == -1:
        return "-" + body
    return f"{c}*{body}"


def format_poly(p: LaurentPoly) -> str:
    if not p:
        return "0"
    out = ""
    for exps, c in p.terms():
        t = _format_term(p.vars, exps, c)
        if out and not t.startswith("-"):
            out += "+"
        out += t
    return out


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_']*)|(.))")


def _tokenize(text: str) -> list[tuple[str, str]]:
    toks = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        pos = m.end()
        num, name, op = m.groups()
        if num is not None:
            toks.append(("int", num))
        elif name is not None:
            toks.append(("var", name))
        elif op in "+-*^()":
            toks.append(("op", op))
        else:
            raise PolySyntaxError(f"unexpected character {op!r} at offset {m.start(3)}")
    return toks


class _Parser:
    def __init__(self, text: str, vars: tuple[str, ...]):
        self.toks = _tokenize(text)
        self.i = 0
        self.vars = vars

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expect(self, op):
        kind, val = self.take()
        if kind != "op" or val != op:
            raise PolySyntaxError(f"expected {op!r}, got {val!r}")

    def poly(self) -> LaurentPoly:
        sign = 1
        kind, val = self.peek()
        if kind == "op" and val in "+-":
            self.take()
            sign = -1 if val == "-" else 1
        result = self.term() * sign
        while True:
            kind, val = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                t = self.term()
                result = result + t if val == "+" else result - t
            else:
                return result

    def term(self) -> LaurentPoly:
        result = self.power()
        while self.peek() == ("op", "*"):
            self.take()
            result = result * self.power()
        return result

    def power(self) -> LaurentPoly:
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            sign = 1
            if self.peek() == ("op", "-"):
                self.take()
                sign = -1
            kind, val = self.take()
            if kind != "int":
                raise PolySyntaxError(f"expected integer exponent, got {val!r}")
            base = base ** (sign * int(val))
        return base

    def atom(self) -> LaurentPoly:
        kind, val = self.take()
        if kind == "int":
            return LaurentPoly.const(self.vars, int(val))
        if kind == "var":
            if val not in self.vars:
                raise UnknownVariable(f"unknown variable {val!r}; expected one of {self.vars}")
            return LaurentPoly.var(self.vars, val)
        if (kind, val) == ("op", "("):
            inner = self.poly()
            self.expect(")")
            return inner
        raise PolySyntaxError(f"unexpected token {val!r}")


def parse(text: str, vars: Sequence[str]) -> LaurentPoly:
    vars = tuple(vars)
    parser = _Parser(text, vars)
    if not parser.toks:
        raise PolySyntaxError("empty polynomial text")
    try:
        result = parser.poly()
    except NonInvertibleSubstituent as exc:
        raise PolySyntaxError(str(exc)) from exc
    if parser.i != len(parser.toks):
        raise PolySyntaxError(f"trailing input at token {parser.toks[parser.i][1]!r}")
    return result


def to_json(p: LaurentPoly) -> dict:
    return {
        "vars": list(p.vars),
        "terms": [{"exps": list(e), "coeff": c} for e, c in p.terms()],
        "text": format_poly(p),
    }


def from_json(data: Mapping) -> LaurentPoly:
    return LaurentPoly(data["vars"], {tuple(t["exps"]): t["coeff"] for t in data["terms"]})


def poly_sum(vars: Sequence[str], polys: Iterable[LaurentPoly]) -> LaurentPoly:
    total = LaurentPoly.zero(vars)
    for p in polys:
        total = total + p
    return total


KRUSHKAL_VARS = ("X", "Y", "A", "B")
LV_VARS = ("x", "y", "z")
BR_VARS = ("X", "Y", "Z")
TUTTE_VARS = ("x", "y")
