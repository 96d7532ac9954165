"""Sparse multivariate polynomials with exact integer coefficients."""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Mapping

from .errors import MissingVariableError


class SparsePoly:
    """Map from exponent vectors to nonzero ``int`` coefficients.

    Variables are named; binary operations merge variable lists by name
    (left operand's order first). Equality and hashing ignore variables that
    appear with exponent zero everywhere, so ``x`` over ``(x,)`` equals ``x``
    over ``(x, y)``.
    """

    __slots__ = ("vars", "terms", "_key")

    def __init__(self, vars=(), terms: Mapping[tuple, int] | None = None):
        self.vars = tuple(vars)
        if len(set(self.vars)) != len(self.vars):
            raise ValueError(f"duplicate variable names in {self.vars}")
        clean = {}
        for exp, c in (terms or {}).items():
            exp = tuple(int(x) for x in exp)
            if len(exp) != len(self.vars):
                raise ValueError(f"exponent {exp} does not match variables {self.vars}")
            if any(x < 0 for x in exp):
                raise ValueError(f"negative exponent in {exp}")
            if c:
                clean[exp] = clean.get(exp, 0) + int(c)
                if not clean[exp]:
                    del clean[exp]
        self.terms = clean
        self._key = None

    @classmethod
    def const(cls, c: int, vars=()) -> "SparsePoly":
        return cls(vars, {(0,) * len(tuple(vars)): c})

    @classmethod
    def var(cls, name: str, vars=None) -> "SparsePoly":
        vars = tuple(vars) if vars is not None else (name,)
        if name not in vars:
            raise ValueError(f"{name!r} is not among {vars}")
        return cls(vars, {tuple(int(v == name) for v in vars): 1})

    @classmethod
    def monomial(cls, coef: int, exponents: Mapping[str, int], vars=None) -> "SparsePoly":
        vars = tuple(vars) if vars is not None else tuple(exponents)
        return cls(vars, {tuple(exponents.get(v, 0) for v in vars): coef})

    # structure

    def extend(self, vars) -> "SparsePoly":
        """Same polynomial over a superset of variables (in the given order)."""
        vars = tuple(vars)
        missing = [v for v in self.vars if v not in vars]
        if missing:
            raise ValueError(f"cannot drop variables {missing}")
        pos = [self.vars.index(v) if v in self.vars else None for v in vars]
        out = {}
        for exp, c in self.terms.items():
            out[tuple(exp[p] if p is not None else 0 for p in pos)] = c
        return SparsePoly(vars, out)

    def _align(self, other):
        if not isinstance(other, SparsePoly):
            other = SparsePoly.const(other, self.vars)
        if other.vars == self.vars:
            return self.vars, self.terms, other.terms
        vars = self.vars + tuple(v for v in other.vars if v not in self.vars)
        return vars, self.extend(vars).terms, other.extend(vars).terms

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def coefficient(self, **exponents) -> int:
        exp = tuple(exponents.pop(v, 0) for v in self.vars)
        if any(exponents.values()):
            return 0
        return self.terms.get(exp, 0)

    def sorted_terms(self) -> list[tuple[tuple[int, ...], int]]:
        """Terms in graded lexicographic order, leading term first."""
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    # ring operations

    def __add__(self, other):
        if not isinstance(other, (SparsePoly, int)):
            return NotImplemented
        vars, a, b = self._align(other)
        out = dict(a)
        for exp, c in b.items():
            out[exp] = out.get(exp, 0) + c
        return SparsePoly(vars, out)

    __radd__ = __add__

    def __neg__(self):
        return SparsePoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, (SparsePoly, int)):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if not isinstance(other, SparsePoly):
            return NotImplemented
        vars, a, b = self._align(other)
        out: dict[tuple, int] = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                exp = tuple(x + y for x, y in zip(ea, eb))
                out[exp] = out.get(exp, 0) + ca * cb
        return SparsePoly(vars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = SparsePoly.const(1, self.vars)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def scale(self, c: int) -> "SparsePoly":
        return SparsePoly(self.vars, {e: c * v for e, v in self.terms.items()})

    # evaluation

    def eval(self, assignment: Mapping[str, object]) -> Fraction:
        """Exact value; every variable with a nonzero exponent must be assigned."""
        values = []
        for v in self.vars:
            if v in assignment:
                values.append(Fraction(assignment[v]))
            elif any(exp[len(values)] for exp in self.terms):
                raise MissingVariableError(v)
            else:
                values.append(Fraction(0))
        total = Fraction(0)
        for exp, c in self.terms.items():
            term = Fraction(c)
            for x, k in zip(values, exp):
                if k:
                    term *= x ** k
            total += term
        return total

    def substitute(self, mapping: Mapping[str, "SparsePoly | int"]) -> "SparsePoly":
        """Replace variables by polynomials; unmapped variables are kept."""
        keep = tuple(v for v in self.vars if v not in mapping)
        images = [mapping[v] if v in mapping else SparsePoly.var(v) for v in self.vars]
        total = SparsePoly(keep)
        for exp, c in self.terms.items():
            term = SparsePoly.const(c, keep)
            for img, k in zip(images, exp):
                if k:
                    term = term * (img ** k)
            total = total + term
        return total

    # comparison

    def _canonical(self):
        if self._key is None:
            self._key = frozenset(
                (tuple(sorted((v, k) for v, k in zip(self.vars, exp) if k)), c)
                for exp, c in self.terms.items()
            )
        return self._key

    def __eq__(self, other):
        if isinstance(other, int):
            other = SparsePoly.const(other)
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return self._canonical() == other._canonical()

    def __hash__(self):
        return hash(self._canonical())

    def diff(self, other: "SparsePoly") -> dict[str, dict[str, int]]:
        """Terms where the two polynomials disagree, keyed by monomial string."""
        vars, a, b = self._align(other)
        out = {}
        for exp in sorted(set(a) | set(b), key=lambda e: (sum(e), e), reverse=True):
            if a.get(exp, 0) != b.get(exp, 0):
                out[_monomial_str(vars, exp) or "1"] = {"left": a.get(exp, 0), "right": b.get(exp, 0)}
        return out

    # serialization

    def to_dict(self) -> dict:
        return {
            "vars": list(self.vars),
            "terms": [{"coef": str(c), "exp": list(e)} for e, c in self.sorted_terms()],
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> "SparsePoly":
        return cls(data["vars"], {tuple(t["exp"]): int(t["coef"]) for t in data["terms"]})

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> "SparsePoly":
        return cls.from_dict(json.loads(text))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exp, c in self.sorted_terms():
            mono = _monomial_str(self.vars, exp)
            mag = abs(c)
            body = mono if mag == 1 and mono else (f"{mag}*{mono}" if mono else str(mag))
            parts.append(("-" if c < 0 else "+", body))
        text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"SparsePoly({self})"


def _monomial_str(vars, exp):
    return "*".join(v if k == 1 else f"{v}^{k}" for v, k in zip(vars, exp) if k)


def add(p: SparsePoly, q: SparsePoly) -> SparsePoly:
    return p + q


def mul(p: SparsePoly, q: SparsePoly) -> SparsePoly:
    return p * q


def power(p: SparsePoly, k: int) -> SparsePoly:
    return p ** k


def scale(p: SparsePoly, c: int) -> SparsePoly:
    return p.scale(c)
