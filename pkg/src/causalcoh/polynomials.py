"""Sparse multivariate polynomials and rational functions over the rationals.

Polynomials are dicts from packed exponent keys to nonzero coefficients.
A monomial x0^e0 * x1^e1 * ... is stored as the single integer
sum(e_i << (16 i)), so multiplying monomials is integer addition and the
exponents may reach 2^16 - 1 per variable (far beyond desk scale).
Coefficients are plain ints whenever they are integral (int arithmetic is
an order of magnitude faster than Fraction arithmetic, and both mix
transparently), with Fractions appearing only where genuinely needed.

Rational functions are normalized by cancelling any common monomial
factor and the joint rational content, leaving numerator and denominator
jointly integer-primitive with a positive graded-lex leading denominator
coefficient.  On the conformally flat charts used in this package every
denominator is a constant times a monomial, so this normalization is a
full canonical form there; equality always goes through
cross-multiplication and never relies on cancellation.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

_F0 = Fraction(0)
_F1 = Fraction(1)

_SHIFT = 16
_MASK = (1 << _SHIFT) - 1


def _coerce(c):
    """Normalize a coefficient: ints stay ints, integral Fractions become ints."""
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    raise TypeError(f"expected int or Fraction coefficient, got {type(c).__name__}")


def _pack(exponents) -> int:
    key = 0
    for i, e in enumerate(exponents):
        if e < 0 or e > _MASK:
            raise ValueError(f"exponent {e} out of storable range")
        key |= e << (_SHIFT * i)
    return key


def _unpack(key: int, nvars: int) -> tuple[int, ...]:
    return tuple((key >> (_SHIFT * i)) & _MASK for i in range(nvars))


def _total_degree(key: int) -> int:
    total = 0
    while key:
        total += key & _MASK
        key >>= _SHIFT
    return total


def _grlex_key(key: int, nvars: int) -> tuple:
    return (_total_degree(key), _unpack(key, nvars))


class MultiPolynomial:
    """Polynomial in ``nvars`` variables; ``terms`` maps packed keys to
    coefficients (ints or Fractions)."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: dict | None = None):
        self.nvars = nvars
        self.terms = terms if terms is not None else {}

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "MultiPolynomial":
        return cls(nvars, {})

    @classmethod
    def constant(cls, nvars: int, c) -> "MultiPolynomial":
        c = _coerce(c if isinstance(c, (int, Fraction)) else Fraction(c))
        if not c:
            return cls(nvars, {})
        return cls(nvars, {0: c})

    @classmethod
    def variable(cls, nvars: int, index: int) -> "MultiPolynomial":
        if not 0 <= index < nvars:
            raise ValueError(f"variable index {index} out of range")
        return cls(nvars, {1 << (_SHIFT * index): 1})

    @classmethod
    def from_terms(cls, nvars: int, items) -> "MultiPolynomial":
        """Build from (exponent tuple, coefficient) pairs."""
        terms = {}
        for mono, c in items:
            c = _coerce(c if isinstance(c, (int, Fraction)) else Fraction(c))
            if not c:
                continue
            key = _pack(mono)
            acc = terms.get(key)
            if acc is None:
                terms[key] = c
            else:
                acc += c
                if acc:
                    terms[key] = acc
                else:
                    del terms[key]
        return cls(nvars, terms)

    def items_unpacked(self):
        """Iterate (exponent tuple, coefficient) pairs."""
        n = self.nvars
        for key, c in self.terms.items():
            yield _unpack(key, n), c

    # -- predicates -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and 0 in self.terms)

    def constant_value(self):
        if not self.terms:
            return 0
        if not self.is_constant():
            raise ValueError("not a constant polynomial")
        return self.terms[0]

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def total_degree(self) -> int:
        if not self.terms:
            return 0
        return max(_total_degree(k) for k in self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiPolynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    __hash__ = None

    # -- arithmetic -----------------------------------------------------

    def __add__(self, other: "MultiPolynomial") -> "MultiPolynomial":
        if not self.terms:
            return other
        if not other.terms:
            return self
        out = dict(self.terms)
        for m, c in other.terms.items():
            acc = out.get(m)
            if acc is None:
                out[m] = c
            else:
                acc += c
                if acc:
                    out[m] = acc
                else:
                    del out[m]
        return MultiPolynomial(self.nvars, out)

    def __sub__(self, other: "MultiPolynomial") -> "MultiPolynomial":
        if not other.terms:
            return self
        out = dict(self.terms)
        for m, c in other.terms.items():
            acc = out.get(m)
            if acc is None:
                out[m] = -c
            else:
                acc -= c
                if acc:
                    out[m] = acc
                else:
                    del out[m]
        return MultiPolynomial(self.nvars, out)

    def __neg__(self) -> "MultiPolynomial":
        return MultiPolynomial(self.nvars, {m: -c for m, c in self.terms.items()})

    def __mul__(self, other: "MultiPolynomial") -> "MultiPolynomial":
        a, b = self.terms, other.terms
        if not a or not b:
            return MultiPolynomial(self.nvars, {})
        if len(a) > len(b):
            a, b = b, a
        out = {}
        for ma, ca in a.items():
            for mb, cb in b.items():
                m = ma + mb
                c = ca * cb
                acc = out.get(m)
                if acc is None:
                    out[m] = c
                else:
                    acc += c
                    if acc:
                        out[m] = acc
                    else:
                        del out[m]
        return MultiPolynomial(self.nvars, out)

    def scale(self, c) -> "MultiPolynomial":
        c = _coerce(c if isinstance(c, (int, Fraction)) else Fraction(c))
        if not c:
            return MultiPolynomial(self.nvars, {})
        if isinstance(c, int):
            return MultiPolynomial(self.nvars, {m: c * v for m, v in self.terms.items()})
        return MultiPolynomial(self.nvars,
                               {m: _coerce(c * v) for m, v in self.terms.items()})

    def scale_coerced(self, c) -> "MultiPolynomial":
        """Scale and force integral Fraction coefficients back to ints."""
        if not c:
            return MultiPolynomial(self.nvars, {})
        return MultiPolynomial(self.nvars,
                               {m: _coerce(c * v) for m, v in self.terms.items()})

    def __pow__(self, k: int) -> "MultiPolynomial":
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = MultiPolynomial.constant(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def derivative(self, var: int) -> "MultiPolynomial":
        shift = _SHIFT * var
        step = 1 << shift
        out = {}
        for m, c in self.terms.items():
            e = (m >> shift) & _MASK
            if e:
                nm = m - step
                nc = c * e
                acc = out.get(nm)
                out[nm] = nc if acc is None else acc + nc
        return MultiPolynomial(self.nvars, {m: c for m, c in out.items() if c})

    def evaluate(self, point) -> Fraction:
        total = _F0
        for mono, c in self.items_unpacked():
            v = Fraction(c)
            for x, e in zip(point, mono):
                if e:
                    v *= x ** e
            total += v
        return total

    # -- normalization helpers -------------------------------------------

    def min_exponents(self) -> tuple:
        if not self.terms:
            return (0,) * self.nvars
        it = iter(self.terms)
        mins = list(_unpack(next(it), self.nvars))
        for key in it:
            for i in range(self.nvars):
                e = (key >> (_SHIFT * i)) & _MASK
                if e < mins[i]:
                    mins[i] = e
        return tuple(mins)

    def shift_down(self, shift: tuple) -> "MultiPolynomial":
        if not any(shift):
            return self
        delta = _pack(shift)
        return MultiPolynomial(self.nvars, {m - delta: c for m, c in self.terms.items()})

    def content_and_sign(self) -> Fraction:
        """Signed content: |gcd of coefficients| with the sign of the
        graded-lex leading coefficient."""
        if not self.terms:
            return _F1
        gn, ld = self._content_accumulate(0, 1)
        content = Fraction(gn, ld)
        if self.terms[self._leading_key()] < 0:
            content = -content
        return content

    def _content_accumulate(self, gn: int, ld: int) -> tuple[int, int]:
        for c in self.terms.values():
            gn = gcd(gn, abs(c.numerator))
            ld = lcm(ld, c.denominator)
        return gn, ld

    def _leading_key(self) -> int:
        return max(self.terms, key=lambda k: _grlex_key(k, self.nvars))

    def leading_term(self) -> tuple:
        lead = self._leading_key()
        return _unpack(lead, self.nvars), self.terms[lead]

    def sorted_terms(self) -> list:
        return sorted(self.items_unpacked(),
                      key=lambda kv: (sum(kv[0]), kv[0]), reverse=True)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for m, c in self.sorted_terms():
            mono = "*".join(f"x{i}^{e}" if e > 1 else f"x{i}"
                            for i, e in enumerate(m) if e)
            bits.append(f"{c}" if not mono else (f"{c}*{mono}" if c != 1 else mono))
        return " + ".join(bits)


class RationalFunction:
    """Quotient of two multivariate polynomials, normalized on construction."""

    __slots__ = ("num", "den")

    def __init__(self, num: MultiPolynomial, den: MultiPolynomial, _normalized=False):
        if _normalized:
            self.num = num
            self.den = den
            return
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            self.num = num
            self.den = MultiPolynomial.constant(num.nvars, 1)
            return
        if len(den.terms) != 1 or 0 not in den.terms:
            shift = tuple(min(a, b)
                          for a, b in zip(num.min_exponents(), den.min_exponents()))
            if any(shift):
                num = num.shift_down(shift)
                den = den.shift_down(shift)
        # joint content: leaves both polynomials integer-primitive together,
        # with the denominator's graded-lex leading coefficient positive
        gn, ld = num._content_accumulate(0, 1)
        gn, ld = den._content_accumulate(gn, ld)
        g = Fraction(gn, ld)
        if den.terms[den._leading_key()] < 0:
            g = -g
        if g != 1:
            inv = 1 / g
            num = num.scale_coerced(inv)
            den = den.scale_coerced(inv)
        self.num = num
        self.den = den

    # -- constructors ---------------------------------------------------

    @classmethod
    def from_polynomial(cls, p: MultiPolynomial) -> "RationalFunction":
        return cls(p, MultiPolynomial.constant(p.nvars, 1))

    @classmethod
    def constant(cls, nvars: int, c) -> "RationalFunction":
        return cls.from_polynomial(MultiPolynomial.constant(nvars, c))

    @classmethod
    def variable(cls, nvars: int, index: int) -> "RationalFunction":
        return cls.from_polynomial(MultiPolynomial.variable(nvars, index))

    # -- predicates -----------------------------------------------------

    @property
    def nvars(self) -> int:
        return self.num.nvars

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.is_constant()

    def den_is_one(self) -> bool:
        return self.den.is_constant() and self.den.constant_value() == 1

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = RationalFunction.constant(self.nvars, other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        if self.den.terms == other.den.terms:
            return self.num == other.num
        return self.num * other.den == other.num * self.den

    __hash__ = None

    # -- arithmetic -----------------------------------------------------

    def __add__(self, other: "RationalFunction") -> "RationalFunction":
        if self.num.is_zero():
            return other
        if other.num.is_zero():
            return self
        if self.den.terms == other.den.terms:
            # unchanged denominator: skip renormalization (equality and
            # zero tests never rely on the canonical form)
            num = self.num + other.num
            if num.terms:
                return RationalFunction(num, self.den, _normalized=True)
            return RationalFunction(num, self.den)
        return RationalFunction(self.num * other.den + other.num * self.den,
                                self.den * other.den)

    def __sub__(self, other: "RationalFunction") -> "RationalFunction":
        if other.num.is_zero():
            return self
        if self.den.terms == other.den.terms:
            num = self.num - other.num
            if num.terms:
                return RationalFunction(num, self.den, _normalized=True)
            return RationalFunction(num, self.den)
        return RationalFunction(self.num * other.den - other.num * self.den,
                                self.den * other.den)

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.num, self.den, _normalized=True)

    def __mul__(self, other: "RationalFunction") -> "RationalFunction":
        if self.num.is_zero() or other.num.is_zero():
            return RationalFunction(MultiPolynomial.zero(self.nvars),
                                    MultiPolynomial.constant(self.nvars, 1),
                                    _normalized=True)
        if self.den_is_one() and other.den_is_one():
            return RationalFunction(self.num * other.num, self.den, _normalized=True)
        return RationalFunction(self.num * other.num, self.den * other.den)

    def __truediv__(self, other: "RationalFunction") -> "RationalFunction":
        if other.num.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def scale(self, c) -> "RationalFunction":
        c = _coerce(c if isinstance(c, (int, Fraction)) else Fraction(c))
        if not c:
            return RationalFunction.constant(self.nvars, 0)
        if isinstance(c, int):
            # integer scaling preserves joint primitivity up to content in
            # the numerator, which cross-multiplying equality never needs
            return RationalFunction(self.num.scale(c), self.den, _normalized=True)
        # non-integral scalars are pushed into the denominator so that
        # coefficients stay integers (ints are much faster than Fractions)
        return RationalFunction(self.num.scale(c.numerator),
                                self.den.scale(c.denominator))

    def derivative(self, var: int) -> "RationalFunction":
        if self.den_is_one():
            return RationalFunction(self.num.derivative(var), self.den, _normalized=True)
        dden = self.den.derivative(var)
        if dden.is_zero():
            return RationalFunction(self.num.derivative(var), self.den)
        return RationalFunction(self.num.derivative(var) * self.den - self.num * dden,
                                self.den * self.den)

    def evaluate(self, point) -> Fraction:
        d = self.den.evaluate(point)
        if not d:
            raise ZeroDivisionError("denominator vanishes at evaluation point")
        return self.num.evaluate(point) / d

    def __repr__(self) -> str:
        if self.den_is_one():
            return repr(self.num)
        return f"({self.num!r}) / ({self.den!r})"
