"""Weighted homogeneous complete intersections: polynomials, order bounds and classification."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .exactq import fmt_rat, rat


class PolynomialSyntaxError(ValueError):
    def __init__(self, message: str, position: int, text: str = ""):
        self.position = position
        self.text = text
        super().__init__(f"{message} at position {position}")


class UnknownVariable(ValueError):
    def __init__(self, name: str, position: int):
        self.name = name
        self.position = position
        super().__init__(f"unknown variable {name!r} at position {position}")


class NotHomogeneous(ValueError):
    def __init__(self, degrees: dict):
        self.degrees = degrees
        shown = ", ".join(f"{t}: {d}" for t, d in degrees.items())
        super().__init__(f"terms have different weighted degrees ({shown})")


class LengthMismatch(ValueError):
    pass


@dataclass(frozen=True)
class Polynomial:
    variables: tuple[str, ...]
    terms: tuple[tuple[tuple[int, ...], Fraction], ...]

    @classmethod
    def from_terms(cls, variables: Sequence[str], terms: dict) -> "Polynomial":
        variables = tuple(variables)
        clean = {}
        for exps, c in terms.items():
            exps = tuple(exps)
            if len(exps) != len(variables):
                raise LengthMismatch("exponent vector length differs from the number of variables")
            c = rat(c)
            if c:
                clean[exps] = c
        order = sorted(clean, key=lambda e: (-sum(e), tuple(-x for x in e)))
        return cls(variables, tuple((e, clean[e]) for e in order))

    def as_dict(self) -> dict[tuple[int, ...], Fraction]:
        return dict(self.terms)

    def monomial(self, exps: tuple[int, ...]) -> str:
        parts = []
        for name, e in zip(self.variables, exps):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for n, (exps, c) in enumerate(self.terms):
            mono = self.monomial(exps)
            mag = abs(c)
            if not mono:
                body = fmt_rat(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{fmt_rat(mag)}*{mono}"
            if n == 0:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append(("- " if c < 0 else "+ ") + body)
        return " ".join(out)


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*^]))")


def _tokens(text: str):
    pos = 0
    out = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            start = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise PolynomialSyntaxError(f"unexpected character {text[start]!r}", start, text)
        kind = m.lastgroup
        start = m.start(kind)
        out.append((kind, m.group(kind), start))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


def parse(text: str, variables: Sequence[str]) -> Polynomial:
    """Parse signed sums of products of rational numbers and powers of variables.

    Grammar: poly := [sign] term (sign term)*; term := factor ('*' factor)*;
    factor := number | name ['^' integer].
    """
    variables = tuple(variables)
    index = {v: i for i, v in enumerate(variables)}
    toks = _tokens(text)
    pos = 0

    def peek():
        return toks[pos]

    def take():
        nonlocal pos
        tok = toks[pos]
        pos += 1
        return tok

    def factor(exps, coeff):
        kind, val, at = take()
        if kind == "num":
            return exps, coeff * Fraction(val)
        if kind == "name":
            if val not in index:
                raise UnknownVariable(val, at)
            e = 1
            if peek()[1] == "^":
                take()
                k2, v2, a2 = take()
                if k2 != "num" or "/" in v2:
                    raise PolynomialSyntaxError("expected a non-negative integer exponent", a2, text)
                e = int(v2)
            exps[index[val]] += e
            return exps, coeff
        raise PolynomialSyntaxError(f"expected a number or a variable, got {val or 'end of input'!r}", at, text)

    terms: dict[tuple[int, ...], Fraction] = {}
    sign = 1
    if peek()[1] in "+-" and peek()[0] == "op":
        sign = -1 if take()[1] == "-" else 1
    while True:
        exps, coeff = [0] * len(variables), Fraction(sign)
        exps, coeff = factor(exps, coeff)
        while peek()[1] == "*":
            take()
            exps, coeff = factor(exps, coeff)
        key = tuple(exps)
        terms[key] = terms.get(key, Fraction(0)) + coeff
        kind, val, at = peek()
        if kind == "end":
            break
        if val in ("+", "-"):
            take()
            sign = -1 if val == "-" else 1
            continue
        raise PolynomialSyntaxError(f"unexpected {val!r}", at, text)
    return Polynomial.from_terms(variables, terms)


def _check_weights(w: Sequence[int]) -> tuple[int, ...]:
    w = tuple(w)
    if any(not isinstance(x, int) or isinstance(x, bool) or x < 1 for x in w):
        raise ValueError("weights are positive integers")
    return w


def check_weighted_homogeneous(f: Polynomial, w: Sequence[int]) -> int:
    """The weighted degree shared by all terms of f."""
    w = _check_weights(w)
    if len(w) != len(f.variables):
        raise LengthMismatch(f"{len(w)} weights for {len(f.variables)} variables")
    if not f.terms:
        raise NotHomogeneous({})
    degs = {f.monomial(e) or "1": sum(a * b for a, b in zip(w, e)) for e, _ in f.terms}
    if len(set(degs.values())) != 1:
        raise NotHomogeneous(degs)
    return next(iter(degs.values()))


def element_order_bound(alpha: Sequence[int], beta: Sequence[int], w: Sequence[int], d: Sequence[int]) -> Fraction:
    """min(|L|, |w| + w.alpha - L(beta)) for L = sum d_i s_i."""
    if len(alpha) != len(w):
        raise LengthMismatch("alpha and weights differ in length")
    if len(beta) != len(d):
        raise LengthMismatch("beta and degrees differ in length")
    total = sum(d)
    return Fraction(min(total, sum(w) + sum(a * x for a, x in zip(w, alpha)) - sum(b * x for b, x in zip(d, beta))))


def hodge_containment(k: int, w: Sequence[int], d: Sequence[int]) -> bool:
    """Whether F_{k+r} lies in the |L|-th step: |w| - sum d >= k max(d)."""
    if k < 0:
        raise ValueError("k must be non-negative")
    return sum(w) - sum(d) >= k * max(d)


HYPOTHESES = (
    "0 is an isolated singular point of Z",
    "Z is a complete intersection of codimension r",
)


@dataclass(frozen=True)
class WHCIInput:
    n: int
    r: int
    weights: tuple[int, ...]
    degrees: tuple[int, ...]
    polynomials: Optional[tuple[Polynomial, ...]] = None

    @classmethod
    def make(cls, n: int, r: int, weights, degrees, polynomials=None, variables=None) -> "WHCIInput":
        weights = _check_weights(weights)
        degrees = tuple(degrees)
        if any(not isinstance(x, int) or isinstance(x, bool) or x < 1 for x in degrees):
            raise ValueError("degrees are positive integers")
        if len(weights) != n:
            raise LengthMismatch(f"{len(weights)} weights for n = {n}")
        if len(degrees) != r:
            raise LengthMismatch(f"{len(degrees)} degrees for r = {r}")
        if not 1 <= r <= n:
            raise ValueError("need 1 <= r <= n")
        polys = None
        if polynomials is not None:
            if len(polynomials) != r:
                raise LengthMismatch(f"{len(polynomials)} polynomials for r = {r}")
            names = tuple(variables) if variables else tuple(f"x{i + 1}" for i in range(n))
            if len(names) != n:
                raise LengthMismatch(f"{len(names)} variable names for n = {n}")
            polys = tuple(p if isinstance(p, Polynomial) else parse(p, names) for p in polynomials)
            order = sorted(range(r), key=lambda j: degrees[j])
            degrees = tuple(degrees[j] for j in order)
            polys = tuple(polys[j] for j in order)
        else:
            degrees = tuple(sorted(degrees))
        return cls(n, r, weights, degrees, polys)


@dataclass(frozen=True)
class ClassificationReport:
    du_bois: bool
    verdict: str
    k: Optional[int] = None
    lower_bound: Optional[Fraction] = None
    upper_bound: Optional[Fraction] = None
    exact_minexp: Optional[Fraction] = None
    hypotheses_assumed: tuple[str, ...] = field(default=HYPOTHESES)

    def as_json(self) -> dict:
        out = {"du_bois": self.du_bois, "verdict": self.verdict}
        if self.k is not None:
            out["k"] = self.k
        for key in ("lower_bound", "upper_bound", "exact_minexp"):
            v = getattr(self, key)
            if v is not None:
                out[key] = fmt_rat(v)
        return out


def classify(inp: WHCIInput) -> ClassificationReport:
    if inp.polynomials is not None:
        for f, d in zip(inp.polynomials, inp.degrees):
            got = check_weighted_homogeneous(f, inp.weights)
            if got != d:
                raise NotHomogeneous({str(f): got})
    excess = sum(inp.weights) - sum(inp.degrees)
    top = inp.degrees[-1]
    if excess < 0:
        return ClassificationReport(False, "NotDuBois")
    k = excess // top
    lower = Fraction(inp.r + k)
    upper = inp.r + Fraction(excess, top)
    if excess % top == 0:
        return ClassificationReport(True, f"kLiminal({k})", k, lower, upper, lower)
    return ClassificationReport(True, f"kRational({k})", k, lower, upper)
