"""Seeds, matrix mutation, c-/g-matrices, X-pullbacks and tropical maps.

Conventions
-----------
* Mutation of exchange, c- and g-matrices follows Fomin-Zelevinsky, which is
  also what SAGE's ``ClusterSeed`` does.  The exchange matrix of a seed is
  ``eps[i][j] = skew[i][j] * d[j]``; it is minus the GHKK matrix
  ``{e_i, e_j}_GHKK d_j``.  With this choice the g-vector cones are exactly
  the chambers of the scattering diagram whose incoming walls carry the
  multipliers d_i, also when the d_i differ.
* Public indices are 1-based.  Words are applied left to right, so the
  composite written ``mu_1 o mu_3 o mu_2 o mu_1`` is the list ``[1, 3, 2, 1]``.
* The GHKK sign convention for the skew form is the negative of the one used
  here (``GHKK_FORM_SIGN``); it is needed wherever the skew form is used as a
  Lie bracket or as the map ``n -> {n, .}``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .laurent import LaurentPoly, RationalFn

# {,}_GHKK = GHKK_FORM_SIGN * {,} (replace eps by -eps to pass to GHKK).
GHKK_FORM_SIGN = -1

Matrix = tuple  # tuple of row tuples


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def _pos(x):
    return x if x > 0 else 0


def to_matrix(rows) -> Matrix:
    return tuple(tuple(int(v) for v in row) for row in rows)


def identity(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def transpose(a: Matrix) -> Matrix:
    return tuple(zip(*a))


def matmul(a, b) -> Matrix:
    bt = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


def determinant(a) -> int:
    """Exact determinant by fraction-free Bareiss elimination."""
    m = [list(r) for r in a]
    n = len(m)
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k]), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1] if n else 1


def inverse(a) -> tuple:
    """Exact inverse over the rationals (Gauss-Jordan); entries are int when integral."""
    n = len(a)
    m = [[Fraction(v) for v in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(a)]
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        m[c], m[piv] = m[piv], m[c]
        p = m[c][c]
        m[c] = [v / p for v in m[c]]
        for r in range(n):
            if r != c and m[r][c] != 0:
                f = m[r][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return tuple(
        tuple(int(v) if v.denominator == 1 else v for v in row[n:]) for row in m
    )


def is_signed_permutation(a, sign: int) -> bool:
    """True iff ``a`` equals ``sign`` times a permutation matrix."""
    n = len(a)
    want = sorted([sign] + [0] * (n - 1))
    return all(sorted(r) == want for r in a) and all(sorted(c) == want for c in zip(*a))


def matrix_mutation(eps: Matrix, k: int) -> Matrix:
    """Fomin-Zelevinsky matrix mutation at the 0-based index k."""
    n = len(eps)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == k or j == k:
                row.append(-eps[i][j])
            else:
                row.append(eps[i][j] + _sign(eps[i][k]) * _pos(eps[i][k] * eps[k][j]))
        out.append(tuple(row))
    return tuple(out)


@dataclass(frozen=True)
class Seed:
    """Skew form ``skew[i][j] = {e_i, e_j}`` with multipliers ``d``."""

    skew: Matrix
    d: tuple = None
    labels: tuple = None

    def __post_init__(self):
        skew = to_matrix(self.skew)
        n = len(skew)
        if any(len(r) != n for r in skew):
            raise ValueError("skew form must be square")
        for i in range(n):
            for j in range(n):
                if skew[i][j] != -skew[j][i]:
                    raise ValueError(f"skew form is not antisymmetric at ({i + 1},{j + 1})")
        d = tuple(int(x) for x in (self.d if self.d is not None else (1,) * n))
        if len(d) != n or any(x <= 0 for x in d):
            raise ValueError("multipliers d must be positive, one per index")
        labels = tuple(self.labels) if self.labels is not None else tuple(str(i + 1) for i in range(n))
        if len(labels) != n:
            raise ValueError("one label per index required")
        object.__setattr__(self, "skew", skew)
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "labels", labels)

    @property
    def n(self) -> int:
        return len(self.skew)

    @property
    def eps(self) -> Matrix:
        """Exchange matrix eps_ij = {e_i, e_j} d_j."""
        return tuple(tuple(self.skew[i][j] * self.d[j] for j in range(self.n)) for i in range(self.n))

    @property
    def dual_eps(self) -> Matrix:
        """Exchange matrix d_i {e_i, e_j} of the Langlands dual seed (equals -eps^T)."""
        return tuple(tuple(self.d[i] * self.skew[i][j] for j in range(self.n)) for i in range(self.n))

    @classmethod
    def from_exchange(cls, eps, d=None, labels=None) -> "Seed":
        eps = to_matrix(eps)
        n = len(eps)
        d = tuple(d) if d is not None else (1,) * n
        skew = []
        for i in range(n):
            row = []
            for j in range(n):
                if eps[i][j] % d[j]:
                    raise ValueError("exchange matrix is not divisible by the multipliers")
                row.append(eps[i][j] // d[j])
            skew.append(row)
        return cls(skew, d, labels)

    def pairing(self, n1: Sequence[int], n2: Sequence[int]) -> int:
        """{n1, n2} for lattice vectors written in the seed basis."""
        return sum(a * self.skew[i][j] * b for i, a in enumerate(n1) if a for j, b in enumerate(n2) if b)

    def to_json(self) -> dict:
        return {"n": self.n, "skew": [list(r) for r in self.skew], "d": list(self.d), "labels": list(self.labels)}

    @classmethod
    def from_json(cls, data) -> "Seed":
        if isinstance(data, str):
            data = json.loads(data)
        seed = cls(data["skew"], data.get("d"), data.get("labels"))
        if "n" in data and data["n"] != seed.n:
            raise ValueError("field n does not match the skew form")
        return seed


def _check_index(n: int, k: int) -> int:
    if not 1 <= k <= n:
        raise IndexError(f"mutation index {k} out of range 1..{n}")
    return k - 1


@dataclass(frozen=True)
class MutationState:
    """A vertex of the mutation tree: current exchange, c- and g-matrices.

    Columns of ``cmat``/``gmat`` are the c-/g-vectors, written in the initial
    basis.  ``word`` is informational (1-based) and is ignored by ``==``.
    """

    seed: Seed
    eps: Matrix
    cmat: Matrix
    gmat: Matrix
    word: tuple = field(default=(), compare=False)

    @classmethod
    def initial(cls, seed: Seed) -> "MutationState":
        return cls(seed, seed.eps, identity(seed.n), identity(seed.n), ())

    @property
    def n(self) -> int:
        return self.seed.n

    def current_seed(self) -> Seed:
        return Seed.from_exchange(self.eps, self.seed.d)

    def to_json(self) -> dict:
        return {
            "seed": self.seed.to_json(),
            "eps": [list(r) for r in self.eps],
            "cmat": [list(r) for r in self.cmat],
            "gmat": [list(r) for r in self.gmat],
            "word": list(self.word),
        }


def c_vector_sign(cmat: Matrix, k: int) -> int:
    """Tropical sign of the k-th c-vector (0-based); +1 for the zero column."""
    col = [row[k] for row in cmat]
    if any(v > 0 for v in col):
        return 1
    if any(v < 0 for v in col):
        return -1
    return 1


def mutate(state: MutationState, k: int) -> MutationState:
    """Mutate at the 1-based index k."""
    n = state.n
    k0 = _check_index(n, k)
    eps, cmat, gmat = state.eps, state.cmat, state.gmat
    sgn = c_vector_sign(cmat, k0)
    # g-vectors: g'_k = -g_k + sum_j [-sgn * eps_jk]_+ g_j
    new_g = [list(r) for r in gmat]
    for i in range(n):
        new_g[i][k0] = -gmat[i][k0] + sum(gmat[i][j] * _pos(-sgn * eps[j][k0]) for j in range(n))
    # c-vectors: bottom block of the extended exchange matrix
    new_c = [list(r) for r in cmat]
    for i in range(n):
        cik = cmat[i][k0]
        for j in range(n):
            if j == k0:
                new_c[i][j] = -cmat[i][j]
            else:
                new_c[i][j] = cmat[i][j] + _sign(cik) * _pos(cik * eps[k0][j])
    return MutationState(
        state.seed,
        matrix_mutation(eps, k0),
        to_matrix(new_c),
        to_matrix(new_g),
        state.word + (k,),
    )


def apply_word(state: MutationState, word: Iterable[int]) -> MutationState:
    for k in word:
        state = mutate(state, k)
    return state


def gmat_from_cmat(cmat: Matrix, d: Sequence[int]) -> Matrix:
    """g-matrix from the c-matrix by tropical duality D^-1 G^T D C = I."""
    n = len(cmat)
    cinv = inverse(cmat)
    # G[i][j] = d_j * (C^-1)[j][i] / d_i
    return to_matrix(
        [[Fraction(d[j] * cinv[j][i], d[i]) for j in range(n)] for i in range(n)]
    )


@dataclass(frozen=True)
class SeedIso:
    """Seed isomorphism e'_i -> e_{perm(i)}; ``perm`` lists 1-based images."""

    perm: tuple

    def __post_init__(self):
        perm = tuple(int(x) for x in self.perm)
        if sorted(perm) != list(range(1, len(perm) + 1)):
            raise ValueError(f"{perm} is not a permutation of 1..{len(perm)}")
        object.__setattr__(self, "perm", perm)

    @classmethod
    def identity(cls, n: int) -> "SeedIso":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> "SeedIso":
        perm = list(range(1, n + 1))
        for cyc in cycles:
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                perm[a - 1] = b
        return cls(tuple(perm))

    def __len__(self):
        return len(self.perm)

    def inverse(self) -> "SeedIso":
        inv = [0] * len(self.perm)
        for i, p in enumerate(self.perm):
            inv[p - 1] = i + 1
        return SeedIso(tuple(inv))

    def compose(self, other: "SeedIso") -> "SeedIso":
        """self o other (apply other first)."""
        return SeedIso(tuple(self.perm[p - 1] for p in other.perm))

    def permute_square(self, a: Matrix) -> Matrix:
        """b[perm(i)][perm(j)] = a[i][j]."""
        n = len(a)
        out = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                out[self.perm[i] - 1][self.perm[j] - 1] = a[i][j]
        return to_matrix(out)

    def permute_columns(self, a: Matrix) -> Matrix:
        """b[:, perm(j)] = a[:, j]."""
        n = len(a)
        out = [[0] * n for _ in range(n)]
        for r in range(n):
            for j in range(n):
                out[r][self.perm[j] - 1] = a[r][j]
        return to_matrix(out)


def seed_iso_apply(state: MutationState, iso: SeedIso, target: Matrix | None = None) -> MutationState:
    """Relabel the current seed along ``iso``.

    If ``target`` (an exchange matrix) is given, the relabelled exchange matrix
    must equal it; otherwise ``ValueError`` is raised.
    """
    if len(iso) != state.n:
        raise ValueError("permutation size does not match the seed")
    eps = iso.permute_square(state.eps)
    if target is not None and eps != to_matrix(target):
        raise ValueError("permutation does not carry the skew form onto the target seed")
    return MutationState(
        state.seed, eps, iso.permute_columns(state.cmat), iso.permute_columns(state.gmat), state.word
    )


def x_pullback(seed: Seed, k: int) -> dict:
    """Pullback of the X-mutation at the 1-based index k.

    Returns ``{i: image of z^{e'_i}}`` (0-based keys) in the coordinates of
    ``seed``:  z^{e'_k} -> z^{-e_k} and, for i != k,
    z^{e'_i} -> z^{e_i} z^{[eps_ki]_+ e_k} (1 + z^{e_k})^{-eps_ki}.
    """
    n = seed.n
    k0 = _check_index(n, k)
    eps = seed.eps
    zk = LaurentPoly.variable(n, k0)
    one_plus = RationalFn(1 + zk)
    images = {}
    for i in range(n):
        if i == k0:
            exp = [0] * n
            exp[k0] = -1
            images[i] = RationalFn.monomial(exp)
            continue
        b = eps[k0][i]
        exp = [0] * n
        exp[i] = 1
        exp[k0] = _pos(b)
        images[i] = RationalFn.monomial(exp) * one_plus ** (-b)
    return images


def pullback_word(seed: Seed, word: Sequence[int], iso: SeedIso | None = None) -> dict:
    """Pullback of ``iso o mu_word`` as ``{i: image of z^{e_i}}`` (0-based keys).

    The images are written in the coordinates of ``seed``; ``iso`` identifies
    the final seed with ``seed`` (e'_j -> e_{perm(j)}).
    """
    n = seed.n
    seeds = [seed]
    for k in word:
        seeds.append(Seed.from_exchange(matrix_mutation(seeds[-1].eps, k - 1), seed.d))
    iso = iso or SeedIso.identity(n)
    inv = iso.inverse()
    # z^{e_i} on the target is z^{e'_{perm^-1(i)}} on the final seed
    current = {i: RationalFn.monomial([int(j == inv.perm[i] - 1) for j in range(n)]) for i in range(n)}
    for step in reversed(range(len(word))):
        images = x_pullback(seeds[step], word[step])
        current = {i: f.substitute(images) for i, f in current.items()}
    return current


@dataclass(frozen=True)
class PLMap:
    """Composite tropical map of a mutation word (1-based) on a seed."""

    seed: Seed
    word: tuple


def tropical_step(eps: Matrix, d: Sequence[int], k0: int, x: Sequence) -> tuple:
    """One elementary PL factor, read in seed-relative coordinates.

    ``x[i] = <e_i, m>`` for the current seed.  On H_{e_k,+} the map is
    m -> m + <d_k e_k, m> {e_k, .}_GHKK and it is the identity on H_{e_k,-};
    the result is re-expressed in the dual basis of the mutated seed, which
    makes every factor an involution.
    """
    xk = x[k0]
    out = list(x)
    for i in range(len(x)):
        # d_k {e_k, e_i} in the seed's sign convention is -eps[i][k]
        b = -eps[i][k0]
        if i == k0:
            out[i] = -xk
        elif xk >= 0:
            out[i] = x[i] + _pos(-b) * xk
        else:
            out[i] = x[i] + _pos(b) * xk
    return tuple(out)


def tropical_apply(plmap: PLMap, point: Sequence) -> tuple:
    """Apply T_v to ``point`` (coordinates in the dual basis of the start seed)."""
    eps = plmap.seed.eps
    x = tuple(Fraction(v) for v in point)
    for k in plmap.word:
        k0 = _check_index(plmap.seed.n, k)
        x = tropical_step(eps, plmap.seed.d, k0, x)
        eps = matrix_mutation(eps, k0)
    return tuple(int(v) if v.denominator == 1 else v for v in x)
