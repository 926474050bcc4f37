"""Looijenga-pair data for the D_n and E_n toric models and their Weyl words.

The toric model blows up points on the three boundary lines of P^2; the
exceptional curves on boundary line j form index block j.  Index blocks are
consecutive: D_n has block sizes (2, 2, n-2), E_n has (2, 3, n-3).  The
model A1 (one point per line, block sizes (1, 1, 1)) is the three-cycle seed
whose only root is l - E1 - E2 - E3.  The seed
pairs block 1 -> block 2 by -1, block 1 -> block 3 by +1 and block 2 -> block 3
by -1, with zero pairing inside a block.

The kernel K of the skew form is identified with D^perp through the linear map

    v  ->  s(v) l - sum_i v_i E_i,

where s(v) is the common value of the three block sums of v.  It sends the
cyclic sum e_a + e_b + e_c to l - E_a - E_b - E_c and e_i - e_j to E_j - E_i,
which is the root E_i - E_j up to sign (both define the same reflection).

A Weyl word is a mutation word together with a closing seed isomorphism.  Its
action on K is read off from the c-matrix after the isomorphism is applied:
the j-th column is the image of e_j.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Sequence

from .seed import (
    MutationState,
    Seed,
    SeedIso,
    apply_word,
    seed_iso_apply,
)

_BLOCK_PATTERN = {(0, 1): -1, (0, 2): 1, (1, 2): -1}


# --------------------------------------------------------------------------
# Picard lattice
# --------------------------------------------------------------------------
@dataclass(frozen=True)
class PicardVector:
    """l_coef * l + sum_i e_coefs[i] * E_{i+1}."""

    l_coef: int
    e_coefs: tuple

    def __post_init__(self):
        object.__setattr__(self, "l_coef", int(self.l_coef))
        object.__setattr__(self, "e_coefs", tuple(int(c) for c in self.e_coefs))

    @property
    def m(self) -> int:
        return len(self.e_coefs)

    @classmethod
    def parse(cls, text: str, m: int) -> "PicardVector":
        """Parse strings such as ``"2l-E1-E2-E3-E4-E6-E7"`` or ``"6l-3E1-2E3+E10"``."""
        cleaned = text.replace(" ", "")
        if not cleaned:
            raise ValueError("empty root literal")
        l_coef = 0
        e_coefs = [0] * m
        pos = 0
        token = re.compile(r"([+-]?)(\d*)(l|E(\d+))")
        while pos < len(cleaned):
            hit = token.match(cleaned, pos)
            if hit is None or (pos > 0 and not hit.group(1)):
                raise ValueError(f"cannot parse {text!r} at position {pos}")
            sign = -1 if hit.group(1) == "-" else 1
            coef = sign * (int(hit.group(2)) if hit.group(2) else 1)
            if hit.group(3) == "l":
                l_coef += coef
            else:
                idx = int(hit.group(4))
                if not 1 <= idx <= m:
                    raise ValueError(f"E{idx} out of range 1..{m}")
                e_coefs[idx - 1] += coef
            pos = hit.end()
        return cls(l_coef, tuple(e_coefs))

    @classmethod
    def exceptional(cls, i: int, m: int) -> "PicardVector":
        return cls(0, tuple(int(j == i - 1) for j in range(m)))

    def __str__(self) -> str:
        parts = []
        for coef, name in [(self.l_coef, "l")] + [(c, f"E{i + 1}") for i, c in enumerate(self.e_coefs)]:
            if not coef:
                continue
            sign = "-" if coef < 0 else "+"
            mag = "" if abs(coef) == 1 else str(abs(coef))
            parts.append(f"{sign}{mag}{name}")
        if not parts:
            return "0"
        text = "".join(parts)
        return text[1:] if text[0] == "+" else text

    def __add__(self, other: "PicardVector") -> "PicardVector":
        return PicardVector(self.l_coef + other.l_coef, tuple(a + b for a, b in zip(self.e_coefs, other.e_coefs)))

    def __sub__(self, other: "PicardVector") -> "PicardVector":
        return self + (-other)

    def __neg__(self) -> "PicardVector":
        return PicardVector(-self.l_coef, tuple(-c for c in self.e_coefs))

    def __rmul__(self, k: int) -> "PicardVector":
        return PicardVector(k * self.l_coef, tuple(k * c for c in self.e_coefs))

    def dot(self, other: "PicardVector") -> int:
        """Intersection pairing: l.l = 1, E_i.E_j = -delta_ij, l.E_i = 0."""
        return self.l_coef * other.l_coef - sum(a * b for a, b in zip(self.e_coefs, other.e_coefs))


# --------------------------------------------------------------------------
# models
# --------------------------------------------------------------------------
@dataclass(frozen=True)
class ModelType:
    family: str
    n: int

    def __post_init__(self):
        if self.family == "A":
            if self.n != 1:
                raise ValueError("only A1 is available in the A family")
        elif self.family == "D":
            if self.n < 4:
                raise ValueError("D_n needs n >= 4")
        elif self.family == "E":
            if self.n not in (6, 7, 8):
                raise ValueError("E_n needs n in {6, 7, 8}")
        else:
            raise ValueError(f"unknown family {self.family!r}")

    @classmethod
    def parse(cls, name: str) -> "ModelType":
        hit = re.fullmatch(r"\s*([AaDdEe])_?(\d+)\s*", name)
        if hit is None:
            raise ValueError(f"model name {name!r} should look like D4 or E8")
        return cls(hit.group(1).upper(), int(hit.group(2)))

    @property
    def name(self) -> str:
        return f"{self.family}{self.n}"

    @property
    def size(self) -> int:
        """Number of exceptional curves, which is also the seed rank."""
        return sum(self.block_sizes)

    @property
    def block_sizes(self) -> tuple:
        if self.family == "A":
            return (1, 1, 1)
        return (2, 2, self.n - 2) if self.family == "D" else (2, 3, self.n - 3)

    @property
    def blocks(self) -> tuple:
        """1-based index blocks, one per boundary line."""
        out, start = [], 1
        for size in self.block_sizes:
            out.append(tuple(range(start, start + size)))
            start += size
        return tuple(out)

    def block_of(self, i: int) -> int:
        return next(b for b, members in enumerate(self.blocks) if i in members)

    def boundary_classes(self) -> tuple:
        """Strict transforms l - sum_{i in block} E_i of the three lines."""
        return tuple(
            PicardVector(1, tuple(-int(i + 1 in members) for i in range(self.size))) for members in self.blocks
        )

    def root(self, text: str) -> PicardVector:
        alpha = PicardVector.parse(text, self.size)
        check_root(alpha, self)
        return alpha


SHIPPED_MODELS = ("D4", "D5", "D6", "E6", "E7", "E8")


def block_seed(sizes: Sequence[int]) -> Seed:
    """Block-cyclic skew-symmetric seed with the given consecutive block sizes."""
    owner = [b for b, size in enumerate(sizes) for _ in range(size)]

    def entry(a: int, b: int) -> int:
        if a == b:
            return 0
        if (a, b) in _BLOCK_PATTERN:
            return _BLOCK_PATTERN[(a, b)]
        return -_BLOCK_PATTERN[(b, a)]

    return Seed(tuple(tuple(entry(a, b) for b in owner) for a in owner))


def build_seed(model: ModelType | str) -> Seed:
    model = _as_model(model)
    return block_seed(model.block_sizes)


def _as_model(model) -> ModelType:
    return ModelType.parse(model) if isinstance(model, str) else model


# --------------------------------------------------------------------------
# kernel and roots
# --------------------------------------------------------------------------
def check_root(alpha: PicardVector, model: ModelType) -> None:
    if alpha.m != model.size:
        raise ValueError(f"{alpha} has {alpha.m} exceptional coefficients, model needs {model.size}")
    if alpha.dot(alpha) != -2:
        raise ValueError(f"{alpha} has self-intersection {alpha.dot(alpha)}, not -2")
    for j, boundary in enumerate(model.boundary_classes()):
        if alpha.dot(boundary) != 0:
            raise ValueError(f"{alpha} meets boundary component {j + 1}")


def kernel_basis(seed: Seed) -> tuple:
    """Integer basis of the kernel of the skew form.

    Indices whose rows agree are grouped; the basis is e_i - e_{i'} for
    consecutive members of a group, followed by a basis of the remaining
    kernel of the reduced form (one representative per group).  For the
    block seeds this gives e_i - e_{i+1} inside blocks and the cyclic sum of
    the first index of each block, i.e. |I| - 2 vectors.
    """
    n = seed.n
    groups: list = []
    for i in range(n):
        for g in groups:
            if seed.skew[g[0]] == seed.skew[i]:
                g.append(i)
                break
        else:
            groups.append([i])
    basis = []
    for g in groups:
        for a, b in zip(g, g[1:]):
            v = [0] * n
            v[a], v[b] = 1, -1
            basis.append(tuple(v))
    reps = [g[0] for g in groups]
    reduced = [[seed.skew[r][g[0]] for g in groups] for r in reps]
    for vec in _integer_nullspace(reduced):
        v = [0] * n
        for coef, r in zip(vec, reps):
            v[r] = coef
        basis.append(tuple(v))
    return tuple(basis)


def _integer_nullspace(rows) -> list:
    import sympy

    if not rows:
        return []
    out = []
    for vec in sympy.Matrix(rows).nullspace():
        den = sympy.ilcm(*[sympy.fraction(x)[1] for x in vec])
        ints = [int(x * den) for x in vec]
        from math import gcd

        g = 0
        for x in ints:
            g = gcd(g, abs(x))
        ints = [x // g for x in ints]
        # prefer a positive leading entry
        lead = next(x for x in ints if x)
        if lead < 0:
            ints = [-x for x in ints]
        out.append(ints)
    return out


def in_kernel(seed: Seed, v: Sequence[int]) -> bool:
    return all(seed.pairing(v, [int(i == j) for j in range(seed.n)]) == 0 for i in range(seed.n))


def root_of_kernel(v: Sequence[int], model: ModelType | str) -> PicardVector:
    """Image of a kernel vector in D^perp (see the module docstring)."""
    model = _as_model(model)
    v = tuple(int(x) for x in v)
    if len(v) != model.size:
        raise ValueError("vector length does not match the model")
    sums = {sum(v[i - 1] for i in members) for members in model.blocks}
    if len(sums) != 1 or not in_kernel(build_seed(model), v):
        raise ValueError(f"{v} is not in the kernel of the skew form")
    return PicardVector(sums.pop(), tuple(-x for x in v))


def kernel_of_root(alpha: PicardVector, model: ModelType | str) -> tuple:
    """Inverse of ``root_of_kernel``."""
    model = _as_model(model)
    v = tuple(-c for c in alpha.e_coefs)
    if root_of_kernel(v, model) != alpha:
        raise ValueError(f"{alpha} does not come from the kernel")
    return v


def reflect(alpha: PicardVector, beta: PicardVector) -> PicardVector:
    """r_alpha(beta) = beta + <alpha, beta> alpha for a (-2)-class alpha."""
    if alpha.dot(alpha) != -2:
        raise ValueError(f"{alpha} is not a root")
    return beta + alpha.dot(beta) * alpha


def compose_reflections(roots: Sequence[PicardVector], beta: PicardVector) -> PicardVector:
    """(r_1 o r_2 o ... o r_k)(beta): the last root acts first."""
    for alpha in reversed(list(roots)):
        beta = reflect(alpha, beta)
    return beta


# --------------------------------------------------------------------------
# Weyl words
# --------------------------------------------------------------------------
@dataclass(frozen=True)
class WeylWord:
    """Mutation word (1-based) closed by a seed isomorphism back to the start seed.

    ``root_factorization`` lists roots r_1, ..., r_k; the word is meant to
    realise r_1 o ... o r_k, whose last factor acts first on D^perp.
    """

    mutations: tuple
    iso: SeedIso
    root_factorization: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "mutations", tuple(int(k) for k in self.mutations))
        object.__setattr__(self, "root_factorization", tuple(self.root_factorization))

    def to_json(self) -> dict:
        return {
            "mutations": list(self.mutations),
            "iso": list(self.iso.perm),
            "roots": [str(r) for r in self.root_factorization],
        }


def compose(words: Sequence[WeylWord]) -> WeylWord:
    """Run the words one after the other, each relabelled through the earlier isomorphisms.

    The result realises the product of the factorizations in the given order,
    and applying it equals applying the words in sequence with ``apply_weyl``.
    """
    if not words:
        raise ValueError("nothing to compose")
    mutations: list = []
    iso = SeedIso.identity(len(words[0].iso))
    roots: list = []
    for w in words:
        inv = iso.inverse()
        mutations.extend(inv.perm[k - 1] for k in w.mutations)
        iso = w.iso.compose(iso)
        roots.extend(w.root_factorization)
    return WeylWord(tuple(mutations), iso, tuple(roots))


def permute_root(alpha: PicardVector, iso: SeedIso) -> PicardVector:
    """Relabel exceptional classes along a seed isomorphism: E_i -> E_{perm(i)}."""
    coefs = [0] * alpha.m
    for i, c in enumerate(alpha.e_coefs):
        coefs[iso.perm[i] - 1] = c
    return PicardVector(alpha.l_coef, tuple(coefs))


def concat(words: Sequence[WeylWord], iso: SeedIso | None = None) -> WeylWord:
    """Literal concatenation of mutation words, closed by a single isomorphism.

    This is how the shipped words are written: pieces run back to back
    without relabelling.  When a piece closes with a seed automorphism, the
    later pieces are read in relabelled coordinates, so their roots are
    carried along the accumulated isomorphism.  The closing isomorphism
    defaults to the product of the pieces' isomorphisms.
    """
    n = len(words[0].iso)
    mutations: list = []
    roots: list = []
    acc = SeedIso.identity(n)
    for w in words:
        mutations.extend(w.mutations)
        roots.extend(permute_root(r, acc) for r in w.root_factorization)
        acc = w.iso.compose(acc)
    return WeylWord(tuple(mutations), iso or acc, tuple(roots))


def apply_weyl(state: MutationState, word: WeylWord) -> MutationState:
    """Mutate along the word, then relabel by its isomorphism.

    Raises ``ValueError`` if the relabelled exchange matrix differs from the
    one the state started with.
    """
    after = apply_word(state, word.mutations)
    return seed_iso_apply(after, word.iso, target=state.eps)


def kernel_action(seed: Seed, word: WeylWord) -> tuple:
    """Matrix A whose column j is the image of e_j under the word (its c-matrix)."""
    return apply_weyl(MutationState.initial(seed), word).cmat


def induced_reflection_action(seed: Seed, word: WeylWord, model: ModelType) -> dict:
    """{str(root of v): str(root of A v)} over the kernel basis, for reports."""
    action = kernel_action(seed, word)
    out = {}
    for v in kernel_basis(seed):
        image = tuple(sum(action[i][j] * v[j] for j in range(seed.n)) for i in range(seed.n))
        out[str(root_of_kernel(v, model))] = str(root_of_kernel(image, model))
    return out


def validate_weyl_word(
    word: WeylWord, roots: Sequence[PicardVector] | None = None, model: ModelType | str | None = None
) -> bool:
    """True iff the word acts on K as the composite reflection of ``roots``.

    ``roots`` defaults to the word's own factorization.  Raises ``ValueError``
    when the word does not close up to the start seed.
    """
    model = _as_model(model)
    roots = tuple(word.root_factorization if roots is None else roots)
    for alpha in roots:
        check_root(alpha, model)
    seed = build_seed(model)
    action = kernel_action(seed, word)
    for v in kernel_basis(seed):
        image = tuple(sum(action[i][j] * v[j] for j in range(seed.n)) for i in range(seed.n))
        try:
            got = root_of_kernel(image, model)
        except ValueError:
            return False
        if got != compose_reflections(roots, root_of_kernel(v, model)):
            return False
    return True


def reflection_word(alpha: PicardVector | str, model: ModelType | str) -> WeylWord:
    """Cluster word for a reflection in a root of simple shape.

    * E_i - E_j in one block: no mutations, closed by the transposition (i j).
    * l - E_a - E_b - E_c, one index per block (a in block 1, b in block 2,
      c in block 3): the word [a, c, b, a] closed by the transposition (b c).
    * 2l - E_c1 - E_c2 - E_p - E_q - E_r - E_s with c1, c2 the block-1 indices:
      the twelve-step word [c1, p, q, r, s, c1, c2, p, q, r, s, c2] closed by (c1 c2).

    Every word is checked with ``validate_weyl_word`` before it is returned.
    """
    model = _as_model(model)
    if isinstance(alpha, str):
        alpha = PicardVector.parse(alpha, model.size)
    check_root(alpha, model)
    support = [i + 1 for i, c in enumerate(alpha.e_coefs) if c]
    coefs = sorted(c for c in alpha.e_coefs if c)
    blocks = sorted(model.block_of(i) for i in support)
    m = model.size
    if alpha.l_coef == 0 and coefs == [-1, 1] and blocks[0] == blocks[1]:
        word = WeylWord((), SeedIso.from_cycles(m, [support]), (alpha,))
    elif alpha.l_coef == 1 and coefs == [-1] * 3 and blocks == [0, 1, 2]:
        a, b, c = sorted(support, key=model.block_of)
        word = WeylWord((a, c, b, a), SeedIso.from_cycles(m, [(b, c)]), (alpha,))
    elif alpha.l_coef == 2 and coefs == [-1] * 6 and set(model.blocks[0]) <= set(support):
        c1, c2 = model.blocks[0]
        rest = [i for i in support if i not in (c1, c2)]
        word = WeylWord(_twelve(c1, c2, *rest), SeedIso.from_cycles(m, [(c1, c2)]), (alpha,))
    else:
        raise ValueError(f"{alpha} is not of a supported simple shape; factorize it first")
    if not validate_weyl_word(word, model=model):
        raise AssertionError(f"template word for {alpha} failed validation")
    return word


def _twelve(c1: int, c2: int, p: int, q: int, r: int, s: int) -> tuple:
    return (c1, p, q, r, s, c1, c2, p, q, r, s, c2)


def _piece(model: ModelType, mutations: Sequence[int], roots: Sequence[str], iso: SeedIso | None = None) -> WeylWord:
    """A literal sub-word with the roots it realises."""
    m = model.size
    return WeylWord(
        tuple(mutations), iso or SeedIso.identity(m), tuple(PicardVector.parse(r, m) for r in roots)
    )


def _two_l(*indices: int) -> str:
    return "2l" + "".join(f"-E{i}" for i in sorted(indices))


# The 2l-roots of the E_n words.  Each is realised by one twelve-step line
# [1, p, q, r, s, 1, 2, p, q, r, s, 2] closed by the swap (1 2); entries are
# (p, q, r, s) in the order used by the shipped SAGE sequences.
_E_TWELVE = {
    6: ((3, 6, 4, 7), (3, 6, 5, 8), (4, 7, 5, 8)),
    7: ((3, 4, 6, 7), (3, 5, 6, 8), (4, 5, 6, 9), (3, 4, 8, 9), (3, 5, 7, 9), (4, 5, 7, 8)),
    8: ((3, 4, 7, 8), (4, 5, 7, 9), (3, 5, 7, 10), (3, 4, 9, 10), (4, 5, 8, 10), (3, 5, 8, 9)),
}

# The four lines of r_alpha on E_8, as (first 4-step word, middle (p, q, r, s),
# last 4-step word, root realised).  Each line also closes with (1 2).
_E8_ALPHA_LINES = (
    ((1, 5, 8, 1), (3, 4, 6, 7), (2, 5, 8, 2), "3l-2E1-E2-E3-E4-E5-E6-E7-E8"),
    ((2, 5, 10, 2), (3, 4, 6, 9), (1, 5, 10, 1), "3l-E1-2E2-E3-E4-E5-E6-E9-E10"),
    ((2, 5, 8, 2), (3, 4, 6, 7), (1, 5, 8, 1), "3l-E1-2E2-E3-E4-E5-E6-E7-E8"),
    ((1, 5, 10, 1), (3, 4, 6, 9), (2, 5, 10, 2), "3l-2E1-E2-E3-E4-E5-E6-E9-E10"),
)

E8_ALPHA = "6l-3E1-3E2-2E3-2E4-2E5-2E6-E7-E8-E9-E10"


def weyl_pieces(model: ModelType | str) -> tuple:
    """The sub-words the word of w is concatenated from, each a valid Weyl word on its own.

    D_n pieces are the six-step words [i, 1, 3, 2, 4, i] for w_i; they are
    only meaningful inside W_n and carry the identity as a placeholder
    isomorphism.
    """
    model = _as_model(model)
    m = model.size
    swap = SeedIso.from_cycles(m, [(1, 2)])
    if model.family == "A":
        return (reflection_word("l-E1-E2-E3", model),)
    if model.family == "D":
        return tuple(
            _piece(model, (i, 1, 3, 2, 4, i), (f"l-E1-E3-E{i}", f"l-E2-E4-E{i}")) for i in range(5, m + 1)
        )
    pieces = []
    if model.n == 8:
        for first, middle, last, root in _E8_ALPHA_LINES:
            pieces.append(_piece(model, first + _twelve(1, 2, *middle) + last, (root,), swap))
    for pqrs in _E_TWELVE[model.n]:
        pieces.append(_piece(model, _twelve(1, 2, *pqrs), (_two_l(1, 2, *pqrs),), swap))
    return tuple(pieces)


def weyl_w(model: ModelType | str) -> WeylWord:
    """The distinguished Weyl element w as a mutation word plus isomorphism.

    * D_n: W_n = [i,1,3,2,4,i] for i = 5..n+2, closed by the identity for
      even n and by (1 3)(2 4) for odd n; w = w_5 o ... o w_{n+2} with
      w_i = r_{l-E1-E3-Ei} o r_{l-E2-E4-Ei}.
    * E_6: r_a1 o r_a2 o r_a3; E_7: r_a1 o ... o r_a6; E_8: r_alpha o r_b1 o ... o r_b6
      where the E_8 factor for alpha is r_g1 o r_d1 o r_g2 o r_d2 with
      g_e = 3l - E1 - ... - E8 - E_e and d_e = 3l - E1 - ... - E6 - E9 - E10 - E_e.
      That product sends alpha to -alpha but is not the reflection r_alpha
      itself; the returned factorization records what the word realises.

    The pieces are concatenated literally (see ``concat``).
    """
    model = _as_model(model)
    m = model.size
    pieces = weyl_pieces(model)
    if model.family == "A":
        return pieces[0]
    if model.family == "D":
        iso = SeedIso.identity(m) if model.n % 2 == 0 else SeedIso.from_cycles(m, [(1, 3), (2, 4)])
        return concat(pieces, iso)
    return concat(pieces)


def alpha_word(model: ModelType | str, index: int) -> WeylWord:
    """Word for r_{alpha_l}, alpha_l = 2l - E1 - E2 - E3 - E4 - E_a - E_b with a = 2l + 3, b = 2l + 4.

    The mutations are those of w_a o w_b.  Read literally they realise
    r_{alpha_l} o r_{E_a - E_b}; the closing transposition (a b) removes the
    second factor.  Only D models with an even number of block-3 indices are
    meant, but any D_n with 2l + 4 <= n + 2 is accepted.
    """
    model = _as_model(model)
    a, b = 2 * index + 3, 2 * index + 4
    if model.family != "D" or index < 1 or b > model.size:
        raise ValueError(f"alpha_{index} is not defined on {model.name}")
    root = model.root(f"2l-E1-E2-E3-E4-E{a}-E{b}")
    word = WeylWord((a, 1, 3, 2, 4, a, b, 1, 3, 2, 4, b), SeedIso.from_cycles(model.size, [(a, b)]), (root,))
    if not validate_weyl_word(word, model=model):
        raise AssertionError(f"word for alpha_{index} failed validation")
    return word


def remark_suffix(n: int) -> tuple:
    """Alternating tail that turns W_n into a DT word on D_n."""
    if n % 2:
        return (1, 2) + (3, 4, 1, 2) * ((n - 5) // 2) if n >= 5 else ()
    return (3, 4, 1, 2) * ((n - 4) // 2)


# Shorter DT word for E_6 shipped with the SAGE sequences (1-based).
E6_SHORT_DT = (1, 3, 6, 4, 7, 5, 8, 1, 2, 3, 6, 4, 7, 5, 8, 2, 1, 3, 6, 4, 7, 5, 8, 2)


def dt_word(model: ModelType | str, variant: str = "short") -> tuple:
    """Mutation word (1-based) whose final g-matrix is minus a permutation matrix.

    D_n: W_n followed by ``remark_suffix(n)``.  E_6: the shorter shipped word
    (``variant="short"``) or w followed by [1, 2] (``variant="long"``).
    E_7 and E_8: the word of w.
    """
    model = _as_model(model)
    w = weyl_w(model).mutations
    if model.family == "A":
        return w
    if model.family == "D":
        return w + remark_suffix(model.n)
    if model.n == 6:
        if variant == "short":
            return E6_SHORT_DT
        if variant == "long":
            return w + (1, 2)
        raise ValueError("variant must be 'short' or 'long'")
    return w
