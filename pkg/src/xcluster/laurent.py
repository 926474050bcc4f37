"""Exact sparse Laurent polynomials, rational functions and truncated series.

Coefficients are Python integers (truncated series also accept
``fractions.Fraction`` so that logarithms and exponentials stay exact).
Exponents are integer tuples of a fixed rank and are ordered
lexicographically whenever a canonical order is needed.
"""
from __future__ import annotations

import json
from fractions import Fraction

from gmpy2 import mpq

_MPQ = type(mpq(1, 2))
from math import factorial
from typing import Iterable, Mapping

Exponent = tuple


def _check_rank(a, b):
    if a.rank != b.rank:
        raise ValueError(f"rank mismatch: {a.rank} != {b.rank}")


def _norm_coef(c):
    # series coefficients are int or gmpy2.mpq (exact and far faster than Fraction)
    if isinstance(c, int):
        return c
    q = mpq(c)
    return int(q) if q.denominator == 1 else q


def _is_rational(c) -> bool:
    return isinstance(c, (int, Fraction, _MPQ))


def _vec_add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _vec_sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


class LaurentPoly:
    """Immutable sparse Laurent polynomial with integer coefficients."""

    __slots__ = ("rank", "_terms", "_hash")

    def __init__(self, rank: int, terms: Mapping[Iterable[int], int] | None = None):
        self.rank = rank
        clean = {}
        for exp, c in (terms or {}).items():
            exp = tuple(int(x) for x in exp)
            if len(exp) != rank:
                raise ValueError(f"exponent {exp} does not have rank {rank}")
            if c:
                clean[exp] = clean.get(exp, 0) + int(c)
        self._terms = {e: c for e, c in sorted(clean.items()) if c}
        self._hash = None

    @classmethod
    def _raw(cls, rank, terms):
        obj = cls.__new__(cls)
        obj.rank = rank
        obj._terms = dict(sorted((e, c) for e, c in terms.items() if c))
        obj._hash = None
        return obj

    # constructors
    @classmethod
    def zero(cls, rank: int) -> "LaurentPoly":
        return cls(rank)

    @classmethod
    def one(cls, rank: int) -> "LaurentPoly":
        return cls.monomial((0,) * rank)

    @classmethod
    def constant(cls, rank: int, c: int) -> "LaurentPoly":
        return cls(rank, {(0,) * rank: c})

    @classmethod
    def monomial(cls, exp: Iterable[int], coef: int = 1) -> "LaurentPoly":
        exp = tuple(exp)
        return cls(len(exp), {exp: coef})

    @classmethod
    def variable(cls, rank: int, i: int) -> "LaurentPoly":
        """The monomial z^{e_i}; ``i`` is 0-based."""
        exp = [0] * rank
        exp[i] = 1
        return cls.monomial(exp)

    # accessors
    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coefficient(self, exp) -> int:
        return self._terms.get(tuple(exp), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def leading(self):
        """Lexicographically largest term as ``(exp, coef)``."""
        exp = max(self._terms)
        return exp, self._terms[exp]

    def min_exponent(self) -> tuple:
        """Componentwise minimum of the exponents (zero vector for 0)."""
        if not self._terms:
            return (0,) * self.rank
        return tuple(min(col) for col in zip(*self._terms))

    def __len__(self):
        return len(self._terms)

    # arithmetic
    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            _check_rank(self, other)
            return other
        if isinstance(other, int):
            return LaurentPoly.constant(self.rank, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly._raw(self.rank, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw(self.rank, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = _vec_add(e1, e2)
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly._raw(self.rank, out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            if not self.is_monomial():
                raise ValueError("negative power of a non-monomial Laurent polynomial")
            (exp, c), = self._terms.items()
            if c not in (1, -1):
                raise ValueError("negative power of a non-unit monomial")
            return LaurentPoly.monomial(tuple(-x * (-e) for x in exp), c ** (-e))
        result = LaurentPoly.one(self.rank)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def shift(self, exp) -> "LaurentPoly":
        """Multiply by the monomial z^exp."""
        return LaurentPoly._raw(self.rank, {_vec_add(e, exp): c for e, c in self._terms.items()})

    def exact_divide(self, other: "LaurentPoly") -> "LaurentPoly | None":
        """Return q with self == q * other, or None if no such Laurent polynomial exists."""
        _check_rank(self, other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return self
        # clear monomial factors so both sides are honest polynomials
        gshift = other.min_exponent()
        g = other.shift(tuple(-x for x in gshift))
        fshift = self.min_exponent()
        f = dict(self.shift(tuple(-x for x in fshift))._terms)
        gexp, gcoef = g.leading()
        gterms = list(g._terms.items())
        quot: dict = {}
        while f:
            fexp = max(f)
            fcoef = f[fexp]
            qexp = _vec_sub(fexp, gexp)
            if min(qexp) < 0 or fcoef % gcoef:
                return None
            qc = fcoef // gcoef
            quot[qexp] = quot.get(qexp, 0) + qc
            for e, c in gterms:
                key = _vec_add(qexp, e)
                v = f.get(key, 0) - qc * c
                if v:
                    f[key] = v
                else:
                    f.pop(key, None)
        q = LaurentPoly._raw(self.rank, quot)
        return q.shift(_vec_sub(fshift, gshift))

    # comparison
    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(self.rank, other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.rank == other.rank and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.rank, tuple(self._terms.items())))
        return self._hash

    # evaluation / substitution
    def substitute(self, images: Mapping[int, "RationalFn"]) -> "RationalFn":
        """Replace z_i (0-based index) by ``images[i]``; variables not listed stay put."""
        rank = None
        for img in images.values():
            rank = img.rank
            break
        if rank is None:
            rank = self.rank
        out = RationalFn.from_poly(LaurentPoly.zero(rank))
        cache: dict = {}

        def image(i):
            if i in images:
                return images[i]
            if rank != self.rank:
                raise ValueError(f"no image given for variable {i}")
            return RationalFn.from_poly(LaurentPoly.variable(rank, i))

        for exp, c in self._terms.items():
            term = RationalFn.from_poly(LaurentPoly.constant(rank, c))
            for i, a in enumerate(exp):
                if a:
                    key = (i, a)
                    if key not in cache:
                        cache[key] = image(i) ** a
                    term = term * cache[key]
            out = out + term
        return out

    def evaluate(self, point) -> Fraction:
        total = Fraction(0)
        for exp, c in self._terms.items():
            v = Fraction(c)
            for x, a in zip(point, exp):
                v *= Fraction(x) ** a
            total += v
        return total

    # serialization
    def to_json(self) -> dict:
        return {
            "rank": self.rank,
            "terms": [{"exp": list(e), "coef": str(c)} for e, c in self._terms.items()],
        }

    @classmethod
    def from_json(cls, data) -> "LaurentPoly":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(data["rank"], {tuple(t["exp"]): int(t["coef"]) for t in data["terms"]})

    def __repr__(self):
        return f"LaurentPoly({format_poly(self)})"

    def __str__(self):
        return format_poly(self)


def format_poly(p: LaurentPoly, names=None) -> str:
    if p.is_zero():
        return "0"
    names = names or [f"z{i + 1}" for i in range(p.rank)]
    parts = []
    for exp, c in sorted(p.items(), key=lambda t: (sum(t[0]), t[0])):
        mono = "*".join(
            names[i] if a == 1 else f"{names[i]}^{a}" for i, a in enumerate(exp) if a
        )
        if not mono:
            parts.append(str(c))
        elif c == 1:
            parts.append(mono)
        elif c == -1:
            parts.append("-" + mono)
        else:
            parts.append(f"{c}*{mono}")
    return " + ".join(parts).replace("+ -", "- ")


def _normalize_factor(f: LaurentPoly):
    """Split f = sign * z^shift * g with g a monomial-free polynomial, positive leading coefficient."""
    shift = f.min_exponent()
    g = f.shift(tuple(-x for x in shift))
    sign = 1
    if g.leading()[1] < 0:
        g = -g
        sign = -1
    return sign, shift, g


class RationalFn:
    """Quotient ``num / prod(factor ** mult)`` with syntactic cancellation.

    Denominator factors are kept as separate normalized polynomials. Every
    factor is a monomial-free polynomial with positive leading coefficient,
    so equal factors are recognised by plain equality. Equality of two
    rational functions is decided by cross multiplication, so it never
    depends on how much cancellation happened.
    """

    __slots__ = ("num", "factors")

    def __init__(self, num: LaurentPoly, factors: Mapping[LaurentPoly, int] | None = None):
        num_out = num
        fac: dict = {}
        for f, m in (factors or {}).items():
            if m == 0:
                continue
            if m < 0:
                num_out = num_out * f ** (-m)
                continue
            if f.is_zero():
                raise ZeroDivisionError("zero factor in denominator")
            sign, shift, g = _normalize_factor(f)
            num_out = num_out.shift(tuple(-m * x for x in shift))
            if sign < 0 and m % 2:
                num_out = -num_out
            if g == LaurentPoly.one(g.rank):
                continue
            fac[g] = fac.get(g, 0) + m
        # cancel factors that divide the numerator
        if num_out.is_zero():
            fac = {}
        else:
            for g in list(fac):
                while fac[g] > 0:
                    q = num_out.exact_divide(g)
                    if q is None:
                        break
                    num_out = q
                    fac[g] -= 1
                if fac[g] == 0:
                    del fac[g]
        self.num = num_out
        self.factors = dict(sorted(fac.items(), key=lambda t: (len(t[0]), tuple(t[0].items()))))

    @property
    def rank(self) -> int:
        return self.num.rank

    @classmethod
    def from_poly(cls, p: LaurentPoly) -> "RationalFn":
        return cls(p)

    @classmethod
    def monomial(cls, exp, coef: int = 1) -> "RationalFn":
        return cls(LaurentPoly.monomial(exp, coef))

    @classmethod
    def quotient(cls, num: LaurentPoly, den: LaurentPoly) -> "RationalFn":
        return cls(num, {den: 1})

    def denominator(self) -> LaurentPoly:
        out = LaurentPoly.one(self.rank)
        for f, m in self.factors.items():
            out = out * f ** m
        return out

    def numerator(self) -> LaurentPoly:
        return self.num

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return not self.factors

    def _coerce(self, other):
        if isinstance(other, RationalFn):
            _check_rank(self, other)
            return other
        if isinstance(other, LaurentPoly):
            return RationalFn(other)
        if isinstance(other, int):
            return RationalFn(LaurentPoly.constant(self.rank, other))
        return NotImplemented

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        fac = dict(self.factors)
        for f, m in other.factors.items():
            fac[f] = fac.get(f, 0) + m
        return RationalFn(self.num * other.num, fac)

    __rmul__ = __mul__

    def inverse(self) -> "RationalFn":
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero rational function")
        return RationalFn(self.denominator(), {self.num: 1})

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        common = dict(self.factors)
        for f, m in other.factors.items():
            common[f] = max(common.get(f, 0), m)

        def lift(x):
            out = x.num
            for f, m in common.items():
                extra = m - x.factors.get(f, 0)
                if extra:
                    out = out * f ** extra
            return out

        return RationalFn(lift(self) + lift(other), common)

    __radd__ = __add__

    def __neg__(self):
        return RationalFn(-self.num, self.factors)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        if self.num.is_monomial():
            (exp, c), = self.num.items()
            num = LaurentPoly.monomial(tuple(x * e for x in exp), c ** e)
        else:
            num = self.num ** e
        return RationalFn(num, {f: m * e for f, m in self.factors.items()})

    def __eq__(self, other):
        other = self._coerce(other) if not isinstance(other, RationalFn) else other
        if other is NotImplemented:
            return NotImplemented
        if self.rank != other.rank:
            return False
        if self.factors == other.factors:
            return self.num == other.num
        return self.num * other.denominator() == other.num * self.denominator()

    def __hash__(self):
        return hash((self.num, tuple(self.factors.items())))

    def substitute(self, images: Mapping[int, "RationalFn"]) -> "RationalFn":
        out = self.num.substitute(images)
        for f, m in self.factors.items():
            img = f.substitute(images)
            if img.is_zero():
                raise ZeroDivisionError("denominator vanishes after substitution")
            out = out / img ** m
        return out

    def evaluate(self, point) -> Fraction:
        den = self.denominator().evaluate(point)
        if den == 0:
            raise ZeroDivisionError("denominator vanishes at point")
        return self.num.evaluate(point) / den

    def to_json(self) -> dict:
        return {
            "num": self.num.to_json(),
            "den": [{"factor": f.to_json(), "mult": m} for f, m in self.factors.items()],
        }

    @classmethod
    def from_json(cls, data) -> "RationalFn":
        return cls(
            LaurentPoly.from_json(data["num"]),
            {LaurentPoly.from_json(d["factor"]): d["mult"] for d in data["den"]},
        )

    def __repr__(self):
        return f"RationalFn({self})"

    def __str__(self):
        if not self.factors:
            return format_poly(self.num)
        den = " * ".join(
            f"({format_poly(f)})" + (f"^{m}" if m != 1 else "") for f, m in self.factors.items()
        )
        return f"({format_poly(self.num)}) / {den}"


def degree(exp) -> int:
    """The grading d(n) = sum of coordinates."""
    return sum(exp)


class TruncSeries:
    """Power series in z^n, n in N+, truncated to degree d(n) <= cutoff.

    Stored exponents always have nonnegative coordinates and degree at most
    ``cutoff``.  Coefficients may be integers or Fractions.
    """

    __slots__ = ("rank", "cutoff", "_terms")

    def __init__(self, rank: int, cutoff: int, terms: Mapping | None = None):
        if cutoff < 0:
            raise ValueError("cutoff must be nonnegative")
        self.rank = rank
        self.cutoff = cutoff
        clean = {}
        for exp, c in (terms or {}).items():
            exp = tuple(int(x) for x in exp)
            if len(exp) != rank:
                raise ValueError(f"exponent {exp} does not have rank {rank}")
            if min(exp, default=0) < 0:
                raise ValueError(f"series exponent {exp} is not in N+")
            if sum(exp) > cutoff or not c:
                continue
            clean[exp] = _norm_coef(clean.get(exp, 0) + c)
        self._terms = {e: c for e, c in clean.items() if c}

    @classmethod
    def _raw(cls, rank, cutoff, terms):
        obj = cls.__new__(cls)
        obj.rank = rank
        obj.cutoff = cutoff
        obj._terms = {e: _norm_coef(c) for e, c in terms.items() if c}
        return obj

    @classmethod
    def one(cls, rank: int, cutoff: int) -> "TruncSeries":
        return cls._raw(rank, cutoff, {(0,) * rank: 1})

    @classmethod
    def zero(cls, rank: int, cutoff: int) -> "TruncSeries":
        return cls._raw(rank, cutoff, {})

    @classmethod
    def from_poly(cls, p: LaurentPoly, cutoff: int) -> "TruncSeries":
        return cls(p.rank, cutoff, p.terms)

    @classmethod
    def binomial(cls, exp, cutoff: int, coef=1) -> "TruncSeries":
        """1 + coef * z^exp."""
        exp = tuple(exp)
        return cls(len(exp), cutoff, {(0,) * len(exp): 1, exp: coef})

    def to_poly(self) -> LaurentPoly:
        for c in self._terms.values():
            if not isinstance(c, int):
                raise ValueError("series has non-integer coefficients")
        return LaurentPoly(self.rank, self._terms)

    @property
    def terms(self) -> dict:
        return dict(sorted(self._terms.items()))

    def items(self):
        return self._terms.items()

    def coefficient(self, exp):
        return self._terms.get(tuple(exp), 0)

    def constant_term(self):
        return self._terms.get((0,) * self.rank, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def is_one(self) -> bool:
        return self._terms == {(0,) * self.rank: 1}

    def valuation(self) -> int:
        """Smallest degree present (cutoff + 1 for the zero series)."""
        return min((sum(e) for e in self._terms), default=self.cutoff + 1)

    def truncate(self, cutoff: int) -> "TruncSeries":
        return TruncSeries._raw(
            self.rank, cutoff, {e: c for e, c in self._terms.items() if sum(e) <= cutoff}
        )

    def _coerce(self, other):
        if isinstance(other, TruncSeries):
            _check_rank(self, other)
            if other.cutoff != self.cutoff:
                raise ValueError("cutoff mismatch")
            return other
        if _is_rational(other):
            return TruncSeries._raw(self.rank, self.cutoff, {(0,) * self.rank: other})
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return TruncSeries._raw(self.rank, self.cutoff, out)

    __radd__ = __add__

    def __neg__(self):
        return TruncSeries._raw(self.rank, self.cutoff, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "TruncSeries":
        return TruncSeries._raw(self.rank, self.cutoff, {e: c * v for e, v in self._terms.items()})

    def _by_degree(self):
        buckets: dict = {}
        for e, c in self._terms.items():
            buckets.setdefault(sum(e), []).append((e, c))
        return buckets

    def __mul__(self, other):
        if _is_rational(other):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        k = self.cutoff
        right = other._by_degree()
        out: dict = {}
        for e1, c1 in self._terms.items():
            d1 = sum(e1)
            for d2, bucket in right.items():
                if d1 + d2 > k:
                    continue
                for e2, c2 in bucket:
                    e = _vec_add(e1, e2)
                    out[e] = out.get(e, 0) + c1 * c2
        return TruncSeries._raw(self.rank, k, out)

    __rmul__ = __mul__

    def _require_unit(self):
        if self.constant_term() != 1:
            raise ValueError("series must have constant term 1")

    def inverse(self) -> "TruncSeries":
        """Multiplicative inverse via the truncated geometric series."""
        self._require_unit()
        tail = self - 1
        result = TruncSeries.one(self.rank, self.cutoff)
        power = TruncSeries.one(self.rank, self.cutoff)
        for i in range(1, self.cutoff + 1):
            power = power * tail
            if power.is_zero():
                break
            result = result + (power if i % 2 == 0 else -power)
        return result

    def __pow__(self, e: int) -> "TruncSeries":
        if e < 0:
            return self.inverse() ** (-e)
        result = TruncSeries.one(self.rank, self.cutoff)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def exp(self) -> "TruncSeries":
        """exp of a series without constant term."""
        if self.constant_term():
            raise ValueError("exp needs zero constant term")
        result = TruncSeries.one(self.rank, self.cutoff)
        power = TruncSeries.one(self.rank, self.cutoff)
        for i in range(1, self.cutoff + 1):
            power = power * self
            if power.is_zero():
                break
            result = result + power.scale(mpq(1, factorial(i)))
        return result

    def log(self) -> "TruncSeries":
        """log of a series with constant term 1."""
        self._require_unit()
        tail = self - 1
        result = TruncSeries.zero(self.rank, self.cutoff)
        power = TruncSeries.one(self.rank, self.cutoff)
        for i in range(1, self.cutoff + 1):
            power = power * tail
            if power.is_zero():
                break
            result = result + power.scale(mpq((-1) ** (i + 1), i))
        return result

    def rational_power(self, e) -> "TruncSeries":
        """self ** e for rational e, constant term 1."""
        if isinstance(e, int) or (_is_rational(e) and mpq(e).denominator == 1):
            return self ** int(e)
        return self.log().scale(mpq(e)).exp()

    def substitute(self, images: Mapping[int, "TruncSeries"]) -> "TruncSeries":
        """Ring homomorphism z_i -> images[i]; every image must vanish at 0 or be a unit monomial image."""
        some = next(iter(images.values()))
        rank, k = some.rank, some.cutoff
        out: dict = {}
        cache: dict = {}

        def power(i, a):
            key = (i, a)
            if key not in cache:
                cache[key] = images[i] ** a
            return cache[key]

        for exp, c in self._terms.items():
            term = TruncSeries._raw(rank, k, {(0,) * rank: c})
            for i, a in enumerate(exp):
                if a:
                    term = term * power(i, a)
            for e, v in term._terms.items():
                out[e] = out.get(e, 0) + v
        return TruncSeries._raw(rank, k, out)

    def __eq__(self, other):
        if _is_rational(other):
            other = TruncSeries._raw(self.rank, self.cutoff, {(0,) * self.rank: other})
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return (self.rank, self.cutoff, self._terms) == (other.rank, other.cutoff, other._terms)

    def __hash__(self):
        return hash((self.rank, self.cutoff, tuple(sorted(self._terms.items()))))

    def to_json(self) -> dict:
        return {
            "rank": self.rank,
            "cutoff": self.cutoff,
            "terms": [{"exp": list(e), "coef": str(c)} for e, c in sorted(self._terms.items())],
        }

    @classmethod
    def from_json(cls, data) -> "TruncSeries":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(
            data["rank"],
            data["cutoff"],
            {tuple(t["exp"]): _norm_coef(Fraction(t["coef"])) for t in data["terms"]},
        )

    def __repr__(self):
        body = " + ".join(f"{c}*z^{list(e)}" for e, c in sorted(self._terms.items())) or "0"
        return f"TruncSeries(k={self.cutoff}: {body})"


def series_pow(f: TruncSeries, e: int) -> TruncSeries:
    """f ** e truncated at f.cutoff; f must have constant term 1."""
    f._require_unit()
    return f ** e


def poly_arith(a: LaurentPoly, b: LaurentPoly, op: str) -> LaurentPoly:
    ops = {"add": lambda: a + b, "sub": lambda: a - b, "mul": lambda: a * b}
    if op not in ops:
        raise ValueError(f"unknown operation {op!r}")
    _check_rank(a, b)
    return ops[op]()


def monomial_substitute(f: RationalFn, images: Mapping[int, RationalFn]) -> RationalFn:
    return f.substitute(images)
