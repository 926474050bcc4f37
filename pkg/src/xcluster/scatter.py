"""Order-truncated cluster scattering diagrams.

A consistent diagram is stored as the group element ``g`` it defines: the
path-ordered product from the positive chamber C+ to the negative chamber C-.
At a point m, ``g`` factors uniquely as g_+ g_0 g_- according to the sign of
<n, m> on the exponents; g_0 is the wall-crossing of the walls through m and
g_- is the path-ordered product from C+ to m.  Explicit walls are recovered
from this element on demand (ranks 2 and 3), and conversely path-ordered
products can be taken wall by wall, which gives two independent routes to
every path product.

Lie-algebra conventions are those of :mod:`xcluster.lie`; the form used as
the bracket is ``GHKK_FORM_SIGN * skew`` so that the chambers of the
diagram are the g-vector cones of :mod:`xcluster.seed`.
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import Iterable, Sequence

from .laurent import RationalFn, TruncSeries, monomial_substitute
from .lie import LieAlgebra, line_element, line_function
from .seed import (
    GHKK_FORM_SIGN,
    MutationState,
    Seed,
    is_signed_permutation,
    mutate,
)

MAX_CUTOFF = 10
MAX_WALLS = 10_000


class ResourceCapError(RuntimeError):
    """Raised when a completion would exceed the configured caps."""

    def __init__(self, message: str, partial_order: int):
        super().__init__(f"{message} (completed through order {partial_order})")
        self.partial_order = partial_order


class NonGenericPathError(ValueError):
    """A path touches a wall boundary, a joint, or starts on a wall."""


# --------------------------------------------------------------------------
# small exact vector helpers


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def primitive(v) -> tuple:
    g = 0
    for x in v:
        g = gcd(g, int(x))
    if g == 0:
        raise ValueError("zero vector has no primitive direction")
    return tuple(int(x) // g for x in v)


def _cross(a, b) -> tuple:
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


def _solve(columns: Sequence[Sequence], target: Sequence) -> list | None:
    """Exact least-squares-free solve of sum lambda_j columns[j] = target.

    Returns None when the target is not in the span.  Columns must be
    linearly independent.
    """
    rows = len(target)
    ncol = len(columns)
    aug = [[Fraction(columns[j][i]) for j in range(ncol)] + [Fraction(target[i])] for i in range(rows)]
    pivots = []
    r = 0
    for c in range(ncol):
        p = next((i for i in range(r, rows) if aug[i][c] != 0), None)
        if p is None:
            raise ValueError("cone generators are linearly dependent")
        aug[r], aug[p] = aug[p], aug[r]
        piv = aug[r][c]
        aug[r] = [x / piv for x in aug[r]]
        for i in range(rows):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
    for i in range(r, rows):
        if aug[i][ncol] != 0:
            return None
    return [aug[i][ncol] for i in range(ncol)]


def _compositions(rank: int, total: int):
    """All exponent vectors of the given degree, lexicographically descending."""
    if rank == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(rank - 1, total - first):
            yield (first,) + rest


def _restrict(x: TruncSeries, bound) -> TruncSeries:
    """Image of x in the quotient by exponents not below ``bound``."""
    return TruncSeries._raw(
        x.rank, x.cutoff, {e: c for e, c in x.items() if all(a <= b for a, b in zip(e, bound))}
    )


def dilog_element(n0, weight: int, cutoff: int) -> TruncSeries:
    """Lie element of the wall function (1 + z^{n0}) with multiplier ``weight``.

    Its exponential is exp(-weight * Li2(-z^{n0})).
    """
    n0 = tuple(n0)
    rank = len(n0)
    d = sum(n0)
    terms = {}
    ell = 1
    while ell * d <= cutoff:
        terms[tuple(ell * x for x in n0)] = Fraction(weight * (-1) ** (ell + 1), ell * ell)
        ell += 1
    return TruncSeries(rank, cutoff, terms)


def seed_form(seed: Seed) -> tuple:
    """Skew form used as the Lie bracket for a seed."""
    return tuple(tuple(GHKK_FORM_SIGN * v for v in row) for row in seed.skew)


# --------------------------------------------------------------------------
# walls


@dataclass(frozen=True)
class Wall:
    """A wall: a cone in n0^perp with a function in z^{n0}.

    Crossing from <n0, .> > 0 to <n0, .> < 0 acts by
    z^x -> z^x * func^(weight * <n0, pi(x)>).  The support is the whole
    hyperplane when ``hyperplane`` is set, otherwise the simplicial cone
    spanned by ``generators`` (rank - 1 independent vectors in n0^perp).
    """

    n0: tuple
    func: TruncSeries
    generators: tuple = ()
    hyperplane: bool = False
    weight: int = 1
    incoming: bool = False

    def __post_init__(self):
        object.__setattr__(self, "n0", tuple(int(x) for x in self.n0))
        object.__setattr__(self, "generators", tuple(tuple(g) for g in self.generators))
        if primitive(self.n0) != self.n0 or min(self.n0) < 0:
            raise ValueError(f"wall direction {self.n0} is not primitive in N+")
        for g in self.generators:
            if _dot(self.n0, g) != 0:
                raise ValueError(f"generator {g} is not in the wall hyperplane")
        if not self.hyperplane and len(self.generators) != len(self.n0) - 1:
            raise ValueError("a wall needs rank - 1 generators or the hyperplane flag")
        if self.func.constant_term() != 1:
            raise ValueError("wall function must have constant term 1")
        for e, _ in self.func.items():
            if any(e) and primitive(e) != self.n0:
                raise ValueError(f"wall function exponent {e} is not a multiple of {self.n0}")

    @property
    def rank(self) -> int:
        return len(self.n0)

    def element(self, cutoff: int | None = None) -> TruncSeries:
        """Lie element (logarithm) of the wall-crossing, truncated at ``cutoff``."""
        f = self.func if cutoff is None else self.func.truncate(cutoff)
        return line_element(self.n0, f.log(), self.weight)

    def locate(self, m) -> str:
        """'interior', 'boundary' or 'outside' for a point m."""
        if _dot(self.n0, m) != 0:
            return "outside"
        if self.hyperplane:
            return "interior"
        coeffs = _solve(self.generators, m)
        if coeffs is None:
            return "outside"
        if any(c < 0 for c in coeffs):
            return "outside"
        if any(c == 0 for c in coeffs):
            return "boundary"
        return "interior"

    def to_json(self) -> dict:
        return {
            "n0": list(self.n0),
            "generators": [[str(x) for x in g] for g in self.generators],
            "hyperplane": self.hyperplane,
            "weight": self.weight,
            "incoming": self.incoming,
            "func": self.func.to_json(),
        }

    @classmethod
    def from_json(cls, data) -> "Wall":
        return cls(
            n0=tuple(data["n0"]),
            func=TruncSeries.from_json(data["func"]),
            generators=tuple(tuple(Fraction(x) for x in g) for g in data["generators"]),
            hyperplane=data["hyperplane"],
            weight=data["weight"],
            incoming=data["incoming"],
        )


# --------------------------------------------------------------------------
# diagrams


@dataclass(frozen=True)
class Diagram:
    """A scattering diagram truncated at order ``cutoff``.

    ``walls`` lists explicit walls.  ``element`` is set for diagrams known to
    be consistent and holds log of the path-ordered product C+ -> C-.  For
    such diagrams of rank above 3 only the incoming walls are materialized
    (``explicit`` is False) and path products come from ``element``.
    """

    form: tuple
    cutoff: int
    walls: tuple
    multipliers: tuple = ()
    element: TruncSeries | None = None
    explicit: bool = True

    @property
    def rank(self) -> int:
        return len(self.form)

    @property
    def algebra(self) -> LieAlgebra:
        return LieAlgebra(self.form, self.cutoff)

    @property
    def incoming_walls(self) -> tuple:
        return tuple(w for w in self.walls if w.incoming)

    @property
    def outgoing_walls(self) -> tuple:
        return tuple(w for w in self.walls if not w.incoming)

    def to_json(self) -> dict:
        return {
            "form": [list(r) for r in self.form],
            "cutoff": self.cutoff,
            "multipliers": list(self.multipliers),
            "explicit": self.explicit,
            "walls": [w.to_json() for w in self.walls],
            "element": None if self.element is None else self.element.to_json(),
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=1)

    @classmethod
    def from_json(cls, data) -> "Diagram":
        el = data.get("element")
        return cls(
            form=tuple(tuple(r) for r in data["form"]),
            cutoff=data["cutoff"],
            walls=tuple(Wall.from_json(w) for w in data["walls"]),
            multipliers=tuple(data.get("multipliers", ())),
            element=None if el is None else TruncSeries.from_json(el),
            explicit=data.get("explicit", True),
        )


def initial_diagram(seed: Seed, k: int) -> Diagram:
    """The incoming walls e_i^perp with exp(-d_i Li2(-z^{e_i}))."""
    if k < 1:
        raise ValueError("order must be at least 1")
    walls = []
    for i in range(seed.n):
        e = tuple(int(j == i) for j in range(seed.n))
        walls.append(
            Wall(n0=e, func=TruncSeries.binomial(e, k), hyperplane=True, weight=seed.d[i], incoming=True)
        )
    return Diagram(form=seed_form(seed), cutoff=k, walls=tuple(walls), multipliers=tuple(seed.d))


# --------------------------------------------------------------------------
# automorphisms and wall crossing


@dataclass(frozen=True)
class Automorphism:
    """exp(log) in the truncated group, applicable to test monomials."""

    algebra: LieAlgebra
    log: TruncSeries

    def __mul__(self, other: "Automorphism") -> "Automorphism":
        return Automorphism(self.algebra, self.algebra.bch(self.log, other.log))

    def inverse(self) -> "Automorphism":
        return Automorphism(self.algebra, -self.log)

    def is_identity(self) -> bool:
        return self.log.is_zero()

    def act_a(self, m) -> TruncSeries:
        """Factor H with z^(m,0) -> z^(m,0) * H on the principal-coefficient torus."""
        return self.algebra.act_on_monomial(self.log, m)

    def act_x(self, n) -> TruncSeries:
        """Factor H with z^n -> z^n * H on the X torus (pi = p*)."""
        return self.algebra.act_on_monomial(self.log, self.algebra.pstar(n))

    def __eq__(self, other):
        return isinstance(other, Automorphism) and self.log == other.log

    def __hash__(self):
        return hash(self.log)


def cross_wall(f, wall: Wall, direction_sign: int, form=None, action: str = "x"):
    """Apply the crossing of ``wall`` to a test function.

    ``direction_sign`` is the sign of <n0, gamma'> at the crossing.  ``f`` is a
    RationalFn (exact, X action on z^{e_i}, needs ``form``) or a TruncSeries
    exponent-free factor for the A action (returns the factor of z^m).
    """
    if direction_sign not in (1, -1):
        raise NonGenericPathError("crossing must be transversal")
    power_sign = -direction_sign
    if isinstance(f, RationalFn):
        if form is None:
            raise ValueError("the X action needs the skew form")
        rank = wall.rank
        func_poly = wall.func.to_poly()
        images = {}
        for i in range(rank):
            e = [0] * rank
            e[i] = 1
            # <n0, p*(e_i)> = {e_i, n0}
            pair = sum(form[i][j] * wall.n0[j] for j in range(rank))
            exponent = power_sign * wall.weight * pair
            image = RationalFn.monomial(tuple(e))
            if exponent:
                image = image * RationalFn.from_poly(func_poly) ** exponent
            images[i] = image
        return monomial_substitute(f, images)
    if isinstance(f, tuple):
        # f is an exponent m in M (A action); returns the factor series
        m = f
        pair = _dot(wall.n0, m) * wall.weight * power_sign
        return series_power(wall.func, pair)
    raise TypeError("cross_wall expects a RationalFn or an exponent tuple")


def series_power(func: TruncSeries, e: int) -> TruncSeries:
    return func ** e


# --------------------------------------------------------------------------
# factorization at a point


def _point_signs(m):
    def signs(e):
        return _sign(_dot(e, m))

    return signs


def _lex_signs(base, perturbations):
    def signs(e):
        s = _sign(_dot(e, base))
        if s:
            return s
        for v in perturbations:
            s = _sign(_dot(e, v))
            if s:
                return s
        return 0

    return signs


def _perp_basis(n) -> list:
    i = next(j for j, x in enumerate(n) if x)
    return [tuple(n[j] if t == i else (-n[i] if t == j else 0) for t in range(len(n))) for j in range(len(n)) if j != i]


def minus_part(diag: Diagram, m) -> TruncSeries:
    """log of g_-(m), the path product from C+ to a point m off the walls.

    m may lie on hyperplanes n^perp that carry no wall; the factorization is
    then taken at an infinitesimal perturbation of m, which does not change
    the result because g_-(m) is locally constant off the walls.
    """
    if diag.element is None:
        raise ValueError("diagram carries no consistent element")
    algebra = diag.algebra
    if any(_dot(e, m) == 0 for e, _ in diag.element.items()):
        if not algebra.factorize(diag.element, _point_signs(m))[1].is_zero():
            raise NonGenericPathError(f"point {tuple(m)} lies on a wall")
        rank = len(m)
        basis = [tuple(int(i == j) for j in range(rank)) for i in range(rank)]
        return algebra.factorize(diag.element, _lex_signs(m, basis))[2]
    return algebra.factorize(diag.element, _point_signs(m))[2]


def wall_element_at(diag: Diagram, m) -> TruncSeries:
    """log g_0(m): the combined crossing of all walls through m."""
    if diag.element is None:
        raise ValueError("diagram carries no consistent element")
    return diag.algebra.factorize(diag.element, _point_signs(m))[1]


def permute_diagram(diag: Diagram, perm: Sequence[int]) -> Diagram:
    """Image of a diagram under the coordinate permutation e_i -> e_{perm(i)} (1-based).

    The form must be invariant under the permutation, as for a seed
    automorphism; otherwise ``ValueError`` is raised.
    """
    rank = diag.rank
    p = [int(x) - 1 for x in perm]
    if sorted(p) != list(range(rank)):
        raise ValueError(f"{tuple(perm)} is not a permutation of 1..{rank}")
    if any(diag.form[p[i]][p[j]] != diag.form[i][j] for i in range(rank) for j in range(rank)):
        raise ValueError("permutation does not preserve the form")

    def move(v):
        out = [0] * rank
        for i, x in enumerate(v):
            out[p[i]] = x
        return tuple(out)

    def move_series(f: TruncSeries) -> TruncSeries:
        return TruncSeries(f.rank, f.cutoff, {move(e): c for e, c in f.items()})

    walls = tuple(
        Wall(move(w.n0), move_series(w.func), tuple(move(g) for g in w.generators), w.hyperplane, w.weight, w.incoming)
        for w in diag.walls
    )
    mult = move(diag.multipliers) if diag.multipliers else diag.multipliers
    element = move_series(diag.element) if diag.element is not None else None
    return Diagram(diag.form, diag.cutoff, walls, mult, element, diag.explicit)


# --------------------------------------------------------------------------
# completion


def _incoming_targets(diag: Diagram) -> dict:
    targets: dict = {}
    for w in diag.walls:
        if not w.hyperplane:
            raise ValueError("completion requires all input walls to be full hyperplanes")
        for e, c in w.element(diag.cutoff).items():
            targets[e] = targets.get(e, 0) + c
    return targets


def complete(diag: Diagram, k: int | None = None, max_walls: int = MAX_WALLS) -> Diagram:
    """Consistent completion of a diagram of incoming hyperplane walls, mod order k.

    The element g is built one degree at a time.  Degree-j terms are central
    modulo degree j + 1, so for each n of degree j the z^n coefficient of
    log g is corrected until the wall element at a generic point of n^perp
    next to p*(n) carries exactly the incoming contribution there.  Outgoing
    walls never contain p*(n0), so this pins down the unique completion.
    """
    k = diag.cutoff if k is None else k
    if k > MAX_CUTOFF:
        raise ResourceCapError(f"order {k} exceeds the cap {MAX_CUTOFF}", 0)
    base = Diagram(diag.form, k, diag.walls, diag.multipliers)
    targets = _incoming_targets(base)
    rank = base.rank
    algebra = LieAlgebra(base.form, k)
    element = algebra.zero()
    for j in range(1, k + 1):
        low = LieAlgebra(base.form, j)
        updates = {}
        for n in _compositions(rank, j):
            restricted = _restrict(element, n)
            pstar = algebra.pstar(n)
            if restricted.is_zero():
                current = 0
            else:
                signs = _lex_signs(pstar, _perp_basis(n))
                prev = LieAlgebra(base.form, j - 1)
                plus, zero, minus = prev.factorize(restricted.truncate(j - 1), signs)
                prod = low.product(plus.truncate(j), zero.truncate(j), minus.truncate(j))
                current = -prod.coefficient(n)
            delta = targets.get(n, 0) - current
            if delta:
                updates[n] = delta
        if updates:
            element = element + TruncSeries(rank, k, updates)
        if len(element.terms) > max_walls:
            raise ResourceCapError("support of the diagram exceeds the wall cap", j)
    explicit = rank <= 3
    walls = tuple(base.walls)
    if explicit:
        walls = walls + materialize_walls(base.form, element, base.walls)
    return Diagram(base.form, k, walls, base.multipliers, element, explicit)


# --------------------------------------------------------------------------
# explicit walls from the element


def _angle_key(v):
    """Sort key for the polar angle of a 2d rational vector."""
    x, y = v
    half = 0 if (y > 0 or (y == 0 and x > 0)) else 1
    return half, v


def _sort_by_angle(vectors):
    import functools

    def cmp(a, b):
        ha, hb = _angle_key(a)[0], _angle_key(b)[0]
        if ha != hb:
            return ha - hb
        cross = a[0] * b[1] - a[1] * b[0]
        return -1 if cross > 0 else (1 if cross < 0 else 0)

    return sorted(vectors, key=functools.cmp_to_key(cmp))


def _plane_frame(n0):
    """Integer basis (u, v) of n0^perp in rank 3 with orientation u x v ~ n0."""
    basis = _perp_basis(n0)
    u, v = basis[0], basis[1]
    if _dot(_cross(u, v), n0) < 0:
        v = tuple(-x for x in v)
    return u, v


def _line_component(x: TruncSeries, n0) -> TruncSeries:
    return TruncSeries._raw(x.rank, x.cutoff, {e: c for e, c in x.items() if primitive(e) == tuple(n0)})


def materialize_walls(form, element: TruncSeries, incoming: Iterable[Wall] = ()) -> tuple:
    """Explicit outgoing walls of the consistent diagram ``element`` (rank 2 or 3)."""
    rank = len(form)
    if rank not in (2, 3):
        raise ValueError("explicit walls are only materialized in rank 2 and 3")
    k = element.cutoff
    incoming_logs: dict = {}
    for w in incoming:
        el = w.element(k)
        incoming_logs[w.n0] = incoming_logs.get(w.n0, TruncSeries.zero(rank, k)) + el
    # a wall direction need not occur in log g itself, so scan every primitive vector
    directions = sorted(
        {primitive(e) for j in range(1, k + 1) for e in _compositions(rank, j)}
    )
    walls = []
    for n0 in directions:
        top = max(l for l in range(1, k + 1) if l * sum(n0) <= k)
        bound = tuple(top * x for x in n0)
        local = _restrict(element, bound)
        algebra = LieAlgebra(form, k)
        others = sorted({primitive(e) for e, _ in local.items()} - {n0})
        inc = incoming_logs.get(n0, TruncSeries.zero(rank, k))
        if rank == 2:
            ray = (n0[1], -n0[0])
            rays = [ray, (-ray[0], -ray[1])]
            cells = [((r,), r) for r in rays]
        else:
            u, v = _plane_frame(n0)
            lines = set()
            for o in others:
                r = _cross(n0, o)
                if any(r):
                    r = primitive(r)
                    lines.add(r)
                    lines.add(tuple(-x for x in r))
            if not lines:
                lines = {u, tuple(-x for x in u)}
            # express in the frame: u, v orthogonal is not guaranteed, but angle
            # order only needs an orientation-preserving linear chart
            chart = {}
            for r in lines:
                sol = _solve([u, v], r)
                chart[(sol[0], sol[1])] = r
            ordered = [chart[c] for c in _sort_by_angle(list(chart))]
            cells = []
            count = len(ordered)
            for idx in range(count):
                a, b = ordered[idx], ordered[(idx + 1) % count]
                sa, sb = _solve([u, v], a), _solve([u, v], b)
                cross2 = sa[0] * sb[1] - sa[1] * sb[0]
                if cross2 > 0:
                    cells.append(((a, b), tuple(x + y for x, y in zip(a, b))))
                else:
                    # sector of angle >= pi: split through a perpendicular
                    mid = _solve([u, v], a)
                    perp2 = (-mid[1], mid[0])
                    mvec = tuple(perp2[0] * p + perp2[1] * q for p, q in zip(u, v))
                    mvec = primitive(tuple(int(x * _lcm_den(mvec)) for x in mvec))
                    cells.append(((a, mvec), tuple(x + y for x, y in zip(a, mvec))))
                    cells.append(((mvec, b), tuple(x + y for x, y in zip(mvec, b))))
        pieces = []
        for gens, point in cells:
            zero = algebra.factorize(local, _point_signs(point))[1]
            comp = _line_component(zero, n0) - _line_component(inc, n0)
            pieces.append((gens, comp))
        pieces = _merge_pieces(pieces, rank)
        for gens, comp in pieces:
            if comp.is_zero():
                continue
            func = line_function(n0, comp)
            walls.append(Wall(n0=n0, func=func, generators=gens, weight=1, incoming=False))
    return tuple(walls)


def _lcm_den(vec) -> int:
    out = 1
    for x in vec:
        d = Fraction(x).denominator
        out = out * d // gcd(out, d)
    return out


def _merge_pieces(pieces, rank):
    """Merge consecutive sectors carrying equal functions while they stay convex."""
    if rank == 2 or len(pieces) < 2:
        return pieces
    merged = [list(pieces[0])]
    for gens, comp in pieces[1:]:
        last = merged[-1]
        if last[1] == comp and last[0][1] == gens[0]:
            a, b = last[0][0], gens[1]
            # stay strictly convex: a and b must not be opposite or reflex
            cr = _cross(a, b)
            mid = last[0][1]
            if any(cr) and _dot(_cross(a, mid), cr) > 0 and _dot(_cross(mid, b), cr) > 0:
                last[0] = (a, b)
                continue
        merged.append([gens, comp])
    return [(tuple(g), c) for g, c in merged]


# --------------------------------------------------------------------------
# path-ordered products


def _crossings(diag: Diagram, a, b):
    """Wall crossings of the segment a -> b as (t, wall, direction_sign)."""
    out = []
    for w in diag.walls:
        pa, pb = _dot(w.n0, a), _dot(w.n0, b)
        if pa == 0 or pb == 0:
            if w.locate(a if pa == 0 else b) != "outside":
                raise NonGenericPathError(f"segment endpoint lies on a wall with direction {w.n0}")
            continue
        if _sign(pa) == _sign(pb):
            continue
        t = Fraction(pa, pa - pb) if not isinstance(pa, Fraction) else pa / (pa - pb)
        point = tuple(Fraction(x) + t * (Fraction(y) - Fraction(x)) for x, y in zip(a, b))
        where = w.locate(point)
        if where == "boundary":
            raise NonGenericPathError(f"segment meets the boundary of a wall with direction {w.n0}")
        if where == "interior":
            out.append((t, w, _sign(pb - pa)))
    out.sort(key=lambda item: item[0])
    # simultaneous crossings must lie on one line of directions
    for (t1, w1, _), (t2, w2, _) in zip(out, out[1:]):
        if t1 == t2 and w1.n0 != w2.n0:
            raise NonGenericPathError("segment passes through a joint")
    return out


def path_ordered_product(diag: Diagram, path: Sequence, method: str = "auto") -> Automorphism:
    """Path-ordered product along the polygonal path through the given points.

    ``method`` selects the wall-by-wall product ('walls'), the factorization
    of the consistent element ('element') or the former when walls are
    explicit ('auto').
    """
    if len(path) < 2:
        raise ValueError("a path needs at least two points")
    algebra = diag.algebra
    if method == "auto":
        method = "walls" if diag.explicit else "element"
    if method == "element":
        start = minus_part(diag, path[0])
        end = minus_part(diag, path[-1])
        return Automorphism(algebra, algebra.bch(end, -start))
    if method != "walls":
        raise ValueError(f"unknown method {method}")
    total = algebra.zero()
    for a, b in zip(path, path[1:]):
        for _, w, direction in _crossings(diag, a, b):
            step = w.element(diag.cutoff)
            if direction > 0:
                step = -step
            total = algebra.bch(step, total)
    return Automorphism(algebra, total)


def loop_products(diag: Diagram) -> list:
    """Loop product around every joint of an explicit rank 2 or 3 diagram.

    Returns a list of (joint ray, Automorphism); consistency means all are
    the identity.  In rank 2 the single joint is the origin.
    """
    algebra = diag.algebra
    if diag.rank == 2:
        return [((0, 0), _loop_2d(algebra, diag.walls, None))]
    if diag.rank != 3:
        raise ValueError("joint loops are implemented for rank 2 and 3")
    candidates = set()
    for w in diag.walls:
        for g in w.generators:
            candidates.add(primitive(tuple(int(x * _lcm_den(g)) for x in g)))
    for w1, w2 in combinations(diag.walls, 2):
        r = _cross(w1.n0, w2.n0)
        if any(r):
            r = primitive(r)
            candidates.add(r)
            candidates.add(tuple(-x for x in r))
    result = []
    for ray in sorted(candidates):
        through = [w for w in diag.walls if w.locate(ray) != "outside"]
        if len({w.n0 for w in through}) < 2:
            continue
        result.append((ray, _loop_2d(algebra, through, ray)))
    return result


def _loop_2d(algebra, walls, ray):
    """Counterclockwise loop product around the origin (rank 2) or a ray (rank 3)."""
    events = []
    for w in walls:
        if ray is None:
            direction = (w.n0[1], -w.n0[0])
            local = []
            if w.hyperplane:
                local = [direction, (-direction[0], -direction[1])]
            else:
                g = w.generators[0]
                local = [direction if _dot(direction, g) > 0 else (-direction[0], -direction[1])]
            for d2 in local:
                tangent = (-d2[1], d2[0])
                events.append((d2, _sign(_dot(w.n0, tangent)), w))
        else:
            wdir = _cross(w.n0, ray)
            options = [wdir, tuple(-x for x in wdir)]
            if not w.hyperplane and ray_is_generator(w, ray):
                other = next(g for g in w.generators if primitive(_scaled(g)) != ray)
                options = [o for o in options if _dot(o, other) > 0]
            u = _perp_basis(ray)[0]
            v = _cross(ray, u)
            for o in options:
                coords = (_dot(o, u), _dot(o, v))
                tangent = _cross(ray, o)
                events.append((coords, _sign(_dot(w.n0, tangent)), w))
    order = _sort_by_angle([e[0] for e in events])
    rank_of = {}
    for idx, c in enumerate(order):
        rank_of.setdefault(c, idx)
    events.sort(key=lambda ev: rank_of[ev[0]])
    total = algebra.zero()
    for _, direction, w in events:
        step = w.element(algebra.cutoff)
        if direction > 0:
            step = -step
        total = algebra.bch(step, total)
    return Automorphism(algebra, total)


def _scaled(g):
    return tuple(int(x * _lcm_den(g)) for x in g)


def ray_is_generator(w: Wall, ray) -> bool:
    return any(primitive(_scaled(g)) == tuple(ray) for g in w.generators)


def is_consistent(diag: Diagram) -> bool:
    return all(a.is_identity() for _, a in loop_products(diag))


# --------------------------------------------------------------------------
# mutation-sequence products and chambers


def mutation_product(seed: Seed, word: Sequence[int], k: int) -> TruncSeries:
    """log of the product of wall crossings met along a mutation sequence.

    Step j crosses the wall between consecutive chambers, whose direction is
    the c-vector of the mutated index; green steps cross it from its positive
    side.  Later crossings compose on the left.
    """
    algebra = LieAlgebra(seed_form(seed), k)
    state = MutationState.initial(seed)
    total = algebra.zero()
    for idx in word:
        col = tuple(state.cmat[r][idx - 1] for r in range(seed.n))
        sign = 1 if any(x > 0 for x in col) else -1
        n0 = tuple(sign * x for x in col)
        step = dilog_element(primitive(n0), seed.d[idx - 1], k) if primitive(n0) == n0 else None
        if step is None:
            raise ValueError(f"c-vector {col} is not primitive")
        total = algebra.bch(sign * step, total)
        state = mutate(state, idx)
    return total


@dataclass(frozen=True)
class Chamber:
    """A cluster chamber: the cone over the columns of ``gmat``."""

    gmat: tuple
    word: tuple = field(default=(), compare=False)
    negative_side: bool = field(default=False, compare=False)

    @property
    def rays(self) -> frozenset:
        return frozenset(tuple(self.gmat[r][c] for r in range(len(self.gmat))) for c in range(len(self.gmat)))

    @property
    def is_negative(self) -> bool:
        return is_signed_permutation(self.gmat, -1)

    def interior_point(self) -> tuple:
        n = len(self.gmat)
        return tuple(sum(self.gmat[r][c] for c in range(n)) for r in range(n))

    def contains(self, m, strict: bool = True) -> bool:
        cols = [tuple(self.gmat[r][c] for r in range(len(self.gmat))) for c in range(len(self.gmat))]
        coeffs = _solve(cols, m)
        if coeffs is None:
            return False
        return all(c > 0 for c in coeffs) if strict else all(c >= 0 for c in coeffs)

    def key(self) -> frozenset:
        return self.rays


def enumerate_chambers(seed: Seed, depth: int, negative: bool = False) -> list:
    """Cluster chambers reachable by at most ``depth`` mutations, deduplicated by cone.

    With ``negative`` the chambers of the negative cluster complex are listed
    (cones -C for the chambers C of the opposite seed).
    """
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    base = seed
    if negative:
        base = Seed(tuple(tuple(-v for v in row) for row in seed.skew), seed.d, seed.labels)
    start = MutationState.initial(base)
    seen = {}
    frontier = [start]

    def record(state):
        gm = state.gmat
        if negative:
            gm = tuple(tuple(-v for v in row) for row in gm)
        ch = Chamber(gm, tuple(state.word), negative)
        key = ch.key()
        if key in seen:
            return False
        seen[key] = ch
        return True

    record(start)
    for _ in range(depth):
        nxt = []
        for st in frontier:
            for k0 in range(1, base.n + 1):
                if st.word and st.word[-1] == k0:
                    continue
                new = mutate(st, k0)
                if record(new):
                    nxt.append(new)
        frontier = nxt
    return list(seen.values())


# --------------------------------------------------------------------------
# equivalence


def _random_point(rng, rank, scale=12):
    return tuple(Fraction(rng.randint(-scale * 7, scale * 7), 7) for _ in range(rank))


def _generic_for(diag: Diagram, m) -> bool:
    normals = [w.n0 for w in diag.walls]
    if diag.element is not None:
        normals += [e for e, _ in diag.element.items()]
    return all(_dot(n, m) != 0 for n in normals)


def equivalent(d1: Diagram, d2: Diagram, k: int | None = None, trials: int = 20, seed: int = 0,
               max_retries: int = 200) -> bool:
    """Compare path-ordered products on random generic straight paths mod order k."""
    if d1.rank != d2.rank or d1.form != d2.form:
        raise ValueError("diagrams live on different lattices")
    k = min(d1.cutoff, d2.cutoff) if k is None else k
    rng = random.Random(seed)
    done = 0
    retries = 0
    while done < trials:
        a, b = _random_point(rng, d1.rank), _random_point(rng, d1.rank)
        if not (_generic_for(d1, a) and _generic_for(d1, b) and _generic_for(d2, a) and _generic_for(d2, b)):
            retries += 1
        else:
            try:
                p1 = path_ordered_product(d1, [a, b]).log.truncate(k)
                p2 = path_ordered_product(d2, [a, b]).log.truncate(k)
            except NonGenericPathError:
                retries += 1
            else:
                if p1 != p2:
                    return False
                done += 1
                continue
        if retries > max_retries:
            raise NonGenericPathError("could not sample enough generic paths")
    return True


# --------------------------------------------------------------------------
# pictures


def to_svg(diag: Diagram, size: int = 400) -> str:
    """Rank-2 picture: walls drawn as rays labelled with their functions."""
    if diag.rank != 2:
        raise ValueError("SVG output is only available for rank 2 diagrams")
    half = size / 2
    scale = half * 0.9
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">',
        f'<rect width="{size}" height="{size}" fill="white"/>',
    ]
    for w in diag.walls:
        d = (w.n0[1], -w.n0[0])
        dirs = [d, (-d[0], -d[1])] if w.hyperplane else [
            d if _dot(d, w.generators[0]) > 0 else (-d[0], -d[1])
        ]
        label = _series_label(w.func, w.weight)
        for dx, dy in dirs:
            norm = (dx * dx + dy * dy) ** 0.5
            x2 = half + scale * dx / norm
            y2 = half - scale * dy / norm
            color = "black" if w.incoming else "firebrick"
            lines.append(f'<line x1="{half}" y1="{half}" x2="{x2:.2f}" y2="{y2:.2f}" stroke="{color}" stroke-width="1.5"/>')
            lines.append(f'<text x="{x2:.2f}" y="{y2:.2f}" font-size="10">{label}</text>')
    lines.append("</svg>")
    return "\n".join(lines)


def _series_label(func: TruncSeries, weight: int) -> str:
    parts = []
    for e, c in sorted(func.items()):
        mono = "*".join(f"z{i + 1}^{x}" if x > 1 else f"z{i + 1}" for i, x in enumerate(e) if x)
        parts.append(f"{c}{'*' + mono if mono else ''}" if c != 1 or not mono else mono)
    text = " + ".join(parts)
    return f"({text})^{weight}" if weight != 1 else text
