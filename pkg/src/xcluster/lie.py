"""The graded Lie algebra g = span{z^n : n in N+} and its truncated group.

Elements of the pro-unipotent group are stored through their logarithm, a
``TruncSeries`` without constant term.  Products use the Baker-Campbell-
Hausdorff series, truncated by the grading d(n) = sum(n).

Every element acts on the monomials z^x of a lattice L through two linear maps
``phi: N -> L`` and ``pi: L -> M``; the derivation attached to z^n is
z^x -> <n, pi(x)> z^{x + phi(n)}.  With ``pi(phi(n)) = p*(n) = {n, .}`` these
derivations satisfy [z^n, z^n'] = {n', n} z^{n + n'}, which is the bracket
used below.  Group multiplication ``a * b`` is composition of automorphisms,
``b`` applied first to the monomial and ``a`` to the result.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial
from operator import add, mul
from typing import Sequence

from gmpy2 import mpq

from .laurent import TruncSeries


@lru_cache(maxsize=None)
def _bch_word_coefficients(order: int) -> dict:
    """Coefficients c_w of log(exp(X) exp(Y)) in the free algebra, words of length <= order.

    Words are tuples over {0, 1} (0 = X, 1 = Y).
    """
    # exp(X) exp(Y) - 1 as a dict word -> coefficient
    w_minus_one: dict = {}
    for a in range(order + 1):
        for b in range(order + 1 - a):
            if a + b == 0:
                continue
            w_minus_one[(0,) * a + (1,) * b] = mpq(1, factorial(a) * factorial(b))
    result: dict = {}
    power = {(): mpq(1)}
    for m in range(1, order + 1):
        nxt: dict = {}
        for u, cu in power.items():
            for v, cv in w_minus_one.items():
                if len(u) + len(v) <= order:
                    nxt[u + v] = nxt.get(u + v, 0) + cu * cv
        power = {w: c for w, c in nxt.items() if c}
        sign = mpq((-1) ** (m + 1), m)
        for w, c in power.items():
            result[w] = result.get(w, 0) + sign * c
    return {w: c for w, c in result.items() if c}


@lru_cache(maxsize=None)
def _bch_dynkin_weights(order: int) -> dict:
    """Weights c_w / |w|: the Lie part of the series is sum of weight * left-normed bracket."""
    return {w: c / len(w) for w, c in _bch_word_coefficients(order).items()}


class LieAlgebra:
    """Bracket [z^a, z^b] = {b, a} z^{a+b} for an integer skew form, truncated at ``cutoff``."""

    def __init__(self, form: Sequence[Sequence[int]], cutoff: int):
        self.form = tuple(tuple(int(v) for v in row) for row in form)
        self.rank = len(self.form)
        self.cutoff = cutoff
        self._pstar_cache: dict = {}

    def truncated(self, cutoff: int) -> "LieAlgebra":
        """Same bracket with a different cutoff, sharing the p* cache."""
        other = LieAlgebra.__new__(LieAlgebra)
        other.form, other.rank, other.cutoff = self.form, self.rank, cutoff
        other._pstar_cache = self._pstar_cache
        return other

    def pairing(self, a, b) -> int:
        """{a, b} in this algebra's form."""
        f = self.form
        return sum(x * f[i][j] * y for i, x in enumerate(a) if x for j, y in enumerate(b) if y)

    def pstar(self, n) -> tuple:
        """p*(n) = {n, .} as a vector in M."""
        n = tuple(n)
        hit = self._pstar_cache.get(n)
        if hit is None:
            f = self.form
            hit = tuple(sum(n[i] * f[i][j] for i in range(self.rank) if n[i]) for j in range(self.rank))
            self._pstar_cache[n] = hit
        return hit

    def zero(self) -> TruncSeries:
        return TruncSeries.zero(self.rank, self.cutoff)

    def element(self, terms) -> TruncSeries:
        return TruncSeries(self.rank, self.cutoff, terms)

    def bracket(self, a: TruncSeries, b: TruncSeries) -> TruncSeries:
        k = self.cutoff
        pstar = self.pstar
        right = [(eb, cb, sum(eb), pstar(eb)) for eb, cb in b.items()]
        out: dict = {}
        for ea, ca in a.items():
            room = k - sum(ea)
            if room <= 0:
                continue
            for eb, cb, db, pb in right:
                if db > room:
                    continue
                # {b, a} = <a, p*(b)>
                w = sum(map(mul, ea, pb))
                if w:
                    e = tuple(map(add, ea, eb))
                    out[e] = out.get(e, 0) + w * ca * cb
        return TruncSeries._raw(self.rank, k, out)

    def bch(self, x: TruncSeries, y: TruncSeries) -> TruncSeries:
        """log(exp(x) exp(y)) truncated at the cutoff."""
        if x.is_zero():
            return y
        if y.is_zero():
            return x
        k = self.cutoff
        vx, vy = x.valuation(), y.valuation()
        minval = min(vx, vy)
        max_letters = k // minval if minval else k
        weights = _bch_dynkin_weights(max_letters)
        prefixes = _prefix_set(max_letters)
        letters = (x, y)
        vals = (vx, vy)
        total: dict = {}
        # depth-first over left-normed brackets; prefix value cached on the stack
        stack = [((0,), x), ((1,), y)]
        while stack:
            word, value = stack.pop()
            c = weights.get(word)
            if c:
                for e, v in value.items():
                    total[e] = total.get(e, 0) + c * v
            if len(word) == max_letters:
                continue
            low = value.valuation()
            for letter in (0, 1):
                if low + vals[letter] > k:
                    continue
                nxt = word + (letter,)
                if nxt not in prefixes:
                    continue
                val = self.bracket(value, letters[letter])
                if not val.is_zero():
                    stack.append((nxt, val))
        return TruncSeries._raw(self.rank, k, total)

    def product(self, *elements: TruncSeries) -> TruncSeries:
        """log of exp(e_1) exp(e_2) ... exp(e_r)."""
        out = self.zero()
        for e in elements:
            out = self.bch(out, e)
        return out

    def inverse(self, x: TruncSeries) -> TruncSeries:
        return -x

    def conjugate(self, g: TruncSeries, x: TruncSeries) -> TruncSeries:
        """log(exp(g) exp(x) exp(-g))."""
        return self.product(g, x, -g)

    def factorize(self, x: TruncSeries, signs) -> tuple:
        """Split exp(x) = exp(plus) exp(zero) exp(minus).

        ``signs(n)`` returns +1, 0 or -1 for every exponent n; the three parts are
        supported on exponents of the respective sign.  Uniqueness holds because
        each sign class spans a Lie subalgebra and g is their direct sum.
        """
        k = self.cutoff
        parts = [self.zero(), self.zero(), self.zero()]  # plus, zero, minus
        by_degree: dict = {}
        for e, c in x.items():
            by_degree.setdefault(sum(e), {})[e] = c
        for j in range(1, k + 1):
            if j == 1:
                current = self.zero()
            else:
                level = self.truncated(j)
                current = level.product(*(p.truncate(j) for p in parts))
            residual: dict = dict(by_degree.get(j, {}))
            for e, c in current.items():
                if sum(e) == j:
                    residual[e] = residual.get(e, 0) - c
            if not any(residual.values()):
                continue
            adds = [{}, {}, {}]
            for e, c in residual.items():
                if c:
                    s = signs(e)
                    adds[1 - s][e] = c
            for idx in range(3):
                if adds[idx]:
                    parts[idx] = parts[idx] + self.element(adds[idx])
        return tuple(parts)

    # actions -------------------------------------------------------------
    def act_on_monomial(self, x: TruncSeries, m) -> TruncSeries:
        """The series H with exp(x)(z^(m,0)) = z^(m,0) * H, for m in M.

        H lives in z^{phi(n)}, n in N+, written with exponents in N.
        """
        # derivation on z^(m,0) * z^phi(n): coefficient <n', m + p*(n)>
        result = TruncSeries.one(self.rank, self.cutoff)
        term = TruncSeries.one(self.rank, self.cutoff)
        pst = {}
        for j in range(1, self.cutoff + 1):
            nxt: dict = {}
            for e, c in term.items():
                if e not in pst:
                    pst[e] = tuple(mi + pi for mi, pi in zip(m, self.pstar(e)))
                shifted = pst[e]
                de = sum(e)
                for n2, c2 in x.items():
                    if de + sum(n2) > self.cutoff:
                        continue
                    w = sum(a * b for a, b in zip(n2, shifted))
                    if w:
                        key = tuple(a + b for a, b in zip(e, n2))
                        nxt[key] = nxt.get(key, 0) + c * c2 * w
            term = TruncSeries._raw(self.rank, self.cutoff, {e: mpq(c) / j for e, c in nxt.items()})
            if term.is_zero():
                break
            result = result + term
        return result


@lru_cache(maxsize=None)
def _prefix_set(order: int) -> frozenset:
    words = _bch_word_coefficients(order)
    return frozenset(w[:i] for w in words for i in range(1, len(w) + 1))


def line_element(n0, log_func: TruncSeries, weight: int = 1) -> TruncSeries:
    """Lie element of a wall z^x -> z^x f^{weight <n0, x>} with log f = log_func.

    ``log_func`` must be supported on multiples l*n0; the result is
    sum_l weight * a_l / l * z^{l n0}.
    """
    n0 = tuple(n0)
    out = {}
    for e, c in log_func.items():
        ratios = {Fraction(a, b) for a, b in zip(e, n0) if b}
        if len(ratios) != 1 or any(a and not b for a, b in zip(e, n0)):
            raise ValueError(f"exponent {e} is not a multiple of {n0}")
        l = ratios.pop()
        if l.denominator != 1 or l <= 0:
            raise ValueError(f"exponent {e} is not a positive multiple of {n0}")
        out[e] = Fraction(weight) * c / int(l)
    return TruncSeries(log_func.rank, log_func.cutoff, out)


def line_function(n0, element: TruncSeries, weight: int = 1) -> TruncSeries:
    """Inverse of ``line_element``: the series f with log f = sum l * c_l / weight z^{l n0}."""
    n0 = tuple(n0)
    out = {}
    for e, c in element.items():
        l = next(Fraction(a, b) for a, b in zip(e, n0) if b)
        out[e] = c * int(l) / Fraction(weight)
    return TruncSeries(element.rank, element.cutoff, out).exp()
