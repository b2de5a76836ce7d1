"""Sparse multivariate polynomial arithmetic with exact integer coefficients.

Every graph polynomial in this package is an :class:`MPoly`: a finite map
from exponent vectors to nonzero arbitrary-precision integers, over an
ordered tuple of named variables.  Values are immutable by convention (no
method mutates its receiver), so they can be shared freely across threads
or worker processes.
"""

from __future__ import annotations

import re
from fractions import Fraction

# Canonical precedence for bare variable names; indexed families such as
# t_a, v_b or x_1 sort after all bare names, grouped by family.
BASE_VAR_ORDER = ("x", "y", "z", "q", "v", "lambda", "tau", "u", "omega", "w", "t")

# Plain-text output prints `l` for lambda; structured records keep the full name.
DISPLAY_ALIASES = {"lambda": "l"}
_INPUT_ALIASES = {alias: name for name, alias in DISPLAY_ALIASES.items()}


class ExactDivisionError(ArithmeticError):
    """Division left a remainder where an identity promised none."""


def var_sort_key(name):
    """Total ordering over variable names used for canonical serialization."""
    if "_" in name:
        family, index = name.split("_", 1)
        if index.isdigit():
            return (2, family, 0, "%012d" % int(index))
        return (2, family, 1, index)
    if name in BASE_VAR_ORDER:
        return (0, "%02d" % BASE_VAR_ORDER.index(name), 0, "")
    return (1, name, 0, "")


def _grlex(exps):
    # graded lexicographic key: total degree first, then the exponent vector
    return (sum(exps), exps)


class MPoly:
    """Polynomial with integer coefficients in named variables.

    ``vars`` is a tuple of names sorted by :func:`var_sort_key`; ``terms``
    maps exponent tuples (one entry per variable) to nonzero integers.
    Variables that occur in no term are pruned, so equal polynomials have
    identical representations.
    """

    __slots__ = ("vars", "terms")

    def __init__(self, vars=(), terms=None):
        vars = tuple(vars)
        if len(set(vars)) != len(vars):
            raise ValueError("duplicate variable names: %r" % (vars,))
        clean = {}
        for exps, coeff in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != len(vars):
                raise ValueError("exponent vector %r does not match %r" % (exps, vars))
            if any(e < 0 for e in exps):
                raise ValueError("negative exponent in %r" % (exps,))
            if coeff:
                clean[exps] = clean.get(exps, 0) + int(coeff)
        clean = {e: c for e, c in clean.items() if c}
        used = [i for i in range(len(vars)) if any(e[i] for e in clean)]
        if len(used) != len(vars):
            vars = tuple(vars[i] for i in used)
            clean = {tuple(e[i] for i in used): c for e, c in clean.items()}
        order = sorted(range(len(vars)), key=lambda i: var_sort_key(vars[i]))
        if order != list(range(len(vars))):
            vars = tuple(vars[i] for i in order)
            clean = {tuple(e[i] for i in order): c for e, c in clean.items()}
        self.vars = vars
        self.terms = clean

    # ----- constructors -------------------------------------------------

    @classmethod
    def zero(cls):
        return cls((), None)

    @classmethod
    def const(cls, value):
        value = int(value)
        return cls((), {(): value} if value else None)

    @classmethod
    def variable(cls, name):
        return cls((name,), {(1,): 1})

    @classmethod
    def monomial(cls, coeff, powers):
        """Build ``coeff * prod(var**exp)`` from a name -> exponent map."""
        names = tuple(powers)
        return cls(names, {tuple(powers[n] for n in names): int(coeff)})

    @staticmethod
    def _promote(value):
        if isinstance(value, MPoly):
            return value
        if isinstance(value, int):
            return MPoly.const(value)
        raise TypeError("cannot use %r as a polynomial" % (value,))

    # ----- alignment ----------------------------------------------------

    def _aligned(self, other):
        if self.vars == other.vars:
            return self.vars, self.terms, other.terms
        merged = tuple(sorted(set(self.vars) | set(other.vars), key=var_sort_key))
        return merged, _remap(self.terms, self.vars, merged), _remap(other.terms, other.vars, merged)

    # ----- ring operations ----------------------------------------------

    def __add__(self, other):
        other = self._promote(other)
        vars, a, b = self._aligned(other)
        out = dict(a)
        for exps, coeff in b.items():
            out[exps] = out.get(exps, 0) + coeff
        return MPoly(vars, out)

    __radd__ = __add__

    def __neg__(self):
        return MPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._promote(other))

    def __rsub__(self, other):
        return self._promote(other) - self

    def __mul__(self, other):
        other = self._promote(other)
        vars, a, b = self._aligned(other)
        out = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                key = tuple(i + j for i, j in zip(e1, e2))
                out[key] = out.get(key, 0) + c1 * c2
        return MPoly(vars, out)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if exponent < 0:
            raise ValueError("negative power of a polynomial")
        result = MPoly.const(1)
        base = self
        k = exponent
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        try:
            other = self._promote(other)
        except TypeError:
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    @property
    def is_zero(self):
        return not self.terms

    # ----- inspection ---------------------------------------------------

    def total_degree(self):
        return max((sum(e) for e in self.terms), default=0)

    def degree(self, name):
        if name not in self.vars:
            return 0
        i = self.vars.index(name)
        return max((e[i] for e in self.terms), default=0)

    def coefficient(self, powers):
        """Integer coefficient of the monomial given as a name -> exponent map."""
        for name in powers:
            if powers[name] and name not in self.vars:
                return 0
        target = tuple(powers.get(name, 0) for name in self.vars)
        return self.terms.get(target, 0)

    def sorted_terms(self):
        """Terms in graded-lex descending order (the serialization order)."""
        return sorted(self.terms.items(), key=lambda kv: _grlex(kv[0]), reverse=True)

    # ----- substitution and evaluation ------------------------------------

    def substitute(self, bindings):
        """Simultaneous substitution of polynomials (or ints) for variables.

        Bindings for variables absent from the polynomial are ignored.
        Substituting zero follows the 0**0 == 1 convention: a variable in
        power zero contributes the factor 1.
        """
        subs = {}
        for name, value in bindings.items():
            if name in self.vars:
                subs[self.vars.index(name)] = self._promote(value)
        if not subs:
            return self
        keep = [i for i in range(len(self.vars)) if i not in subs]
        keep_vars = tuple(self.vars[i] for i in keep)
        powers = {}

        def power(i, k):
            if (i, k) not in powers:
                powers[(i, k)] = subs[i] ** k
            return powers[(i, k)]

        result = MPoly.zero()
        for exps, coeff in self.terms.items():
            factor = MPoly(keep_vars, {tuple(exps[i] for i in keep): coeff})
            for i in subs:
                if exps[i]:
                    factor = factor * power(i, exps[i])
            result = result + factor
        return result

    def evaluate(self, point):
        """Exact rational value of the polynomial at the given point."""
        values = {}
        for name in self.vars:
            if name not in point:
                raise ValueError("unbound variable %r" % name)
            values[name] = Fraction(point[name])
        total = Fraction(0)
        for exps, coeff in self.terms.items():
            term = Fraction(coeff)
            for name, k in zip(self.vars, exps):
                if k:
                    term *= values[name] ** k
            total += term
        return total

    # ----- exact division -------------------------------------------------

    def exact_div(self, divisor):
        """Quotient q with self == q * divisor; raises on any remainder."""
        divisor = self._promote(divisor)
        if divisor.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        vars, rem, div = self._aligned(divisor)
        rem = dict(rem)
        lead = max(div, key=_grlex)
        lead_coeff = div[lead]
        quotient = {}
        while rem:
            top = max(rem, key=_grlex)
            shift = tuple(i - j for i, j in zip(top, lead))
            if any(k < 0 for k in shift):
                raise ExactDivisionError("nonzero remainder: %s not divisible" % self)
            q, r = divmod(rem[top], lead_coeff)
            if r:
                raise ExactDivisionError("nonzero remainder: %s not divisible" % self)
            quotient[shift] = quotient.get(shift, 0) + q
            for exps, coeff in div.items():
                key = tuple(i + j for i, j in zip(shift, exps))
                value = rem.get(key, 0) - q * coeff
                if value:
                    rem[key] = value
                else:
                    rem.pop(key, None)
        return MPoly(vars, quotient)

    # ----- serialization --------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        names = [DISPLAY_ALIASES.get(n, n) for n in self.vars]
        chunks = []
        for exps, coeff in self.sorted_terms():
            body = "*".join(
                name if e == 1 else "%s^%d" % (name, e)
                for name, e in zip(names, exps) if e
            )
            mag = abs(coeff)
            if not body:
                core = str(mag)
            elif mag == 1:
                core = body
            else:
                core = "%d*%s" % (mag, body)
            if not chunks:
                chunks.append(core if coeff > 0 else "-" + core)
            else:
                chunks.append((" + " if coeff > 0 else " - ") + core)
        return "".join(chunks)

    def __repr__(self):
        return "MPoly(%s)" % self

    def to_record(self):
        """Structured form: variable names plus graded-lex ordered terms."""
        return {
            "vars": list(self.vars),
            "terms": [
                {"exponents": list(exps), "coeff": str(coeff)}
                for exps, coeff in self.sorted_terms()
            ],
        }

    @classmethod
    def from_record(cls, record):
        vars = tuple(record["vars"])
        terms = {}
        for item in record["terms"]:
            exps = tuple(int(e) for e in item["exponents"])
            terms[exps] = terms.get(exps, 0) + int(item["coeff"])
        return cls(vars, terms)

    @classmethod
    def parse(cls, text):
        """Inverse of ``str``; accepts any sum of integer-coefficient monomials."""
        tokens = _tokenize(text)
        if tokens == ["0"]:
            return cls.zero()
        result = cls.zero()
        pos = 0
        sign = 1
        if pos < len(tokens) and tokens[pos] in "+-":
            sign = -1 if tokens[pos] == "-" else 1
            pos += 1
        while pos < len(tokens):
            coeff, powers, pos = _parse_term(tokens, pos, text)
            result = result + cls.monomial(sign * coeff, powers)
            if pos < len(tokens):
                if tokens[pos] not in "+-":
                    raise ValueError("cannot parse polynomial %r" % text)
                sign = -1 if tokens[pos] == "-" else 1
                pos += 1
                if pos == len(tokens):
                    raise ValueError("cannot parse polynomial %r" % text)
        return result


def _remap(terms, old_vars, new_vars):
    if old_vars == new_vars:
        return terms
    where = [new_vars.index(v) for v in old_vars]
    width = len(new_vars)
    out = {}
    for exps, coeff in terms.items():
        vec = [0] * width
        for slot, e in zip(where, exps):
            vec[slot] = e
        out[tuple(vec)] = coeff
    return out


_TOKEN_RE = re.compile(r"\d+|[A-Za-z][A-Za-z0-9]*(?:_[A-Za-z0-9]+)*|[\^*+\-]|\S")


def _tokenize(text):
    tokens = []
    for match in _TOKEN_RE.finditer(text):
        tok = match.group()
        if tok in "^*+-" or tok.isdigit() or tok[0].isalpha():
            tokens.append(tok)
        else:
            raise ValueError("unexpected character %r in %r" % (tok, text))
    if not tokens:
        raise ValueError("empty polynomial text")
    return tokens


def _parse_term(tokens, pos, text):
    coeff = 1
    powers = {}
    expect_factor = True
    while pos < len(tokens):
        tok = tokens[pos]
        if tok in "+-":
            break
        if tok == "*":
            pos += 1
            expect_factor = True
            continue
        if not expect_factor:
            raise ValueError("cannot parse polynomial %r" % text)
        if tok.isdigit():
            coeff *= int(tok)
            pos += 1
        else:
            name = _INPUT_ALIASES.get(tok, tok)
            exp = 1
            pos += 1
            if pos + 1 < len(tokens) and tokens[pos] == "^" and tokens[pos + 1].isdigit():
                exp = int(tokens[pos + 1])
                pos += 2
            elif pos < len(tokens) and tokens[pos] == "^":
                raise ValueError("cannot parse polynomial %r" % text)
            powers[name] = powers.get(name, 0) + exp
        expect_factor = False
    if expect_factor:
        raise ValueError("cannot parse polynomial %r" % text)
    return coeff, powers, pos
