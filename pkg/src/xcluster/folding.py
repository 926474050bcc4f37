"""Folding a seed by a permutation group of its index set.

A group Pi acting on the indices may be used for folding when
{e_i, e_j} = {e_{p i}, e_{p' j}} for all i, j and all group elements p, p'.
Since the group is generated by its generators, it is enough to test this for
the identity and the generators on either side, which is what
``validate_pi`` does.  The folded seed has one index per orbit, the skew form
{e_a, e_b} = {e_i, e_j} for any i in a, j in b, and multipliers
d_a = |a| * d_i.

Orbits are numbered by their smallest member; that member is the canonical
section of q.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as cartesian
from typing import Iterable, Sequence

from .laurent import TruncSeries
from .scatter import (
    Chamber,
    Diagram,
    NonGenericPathError,
    complete,
    initial_diagram,
    is_consistent,
    materialize_walls,
    path_ordered_product,
    primitive,
    seed_form,
)
from .seed import (
    MutationState,
    Seed,
    SeedIso,
    apply_word,
    mutate,
    x_pullback,
)


class FoldingError(ValueError):
    """The folding condition fails; ``witness`` is (i, j, p1, p2), 1-based."""

    def __init__(self, message: str, witness: tuple | None = None):
        super().__init__(message)
        self.witness = witness


# --------------------------------------------------------------------------
# the group
# --------------------------------------------------------------------------
@dataclass(frozen=True)
class PiAction:
    """Permutation group given by generators (1-based image tuples) and its orbits."""

    n: int
    generators: tuple
    orbits: tuple

    @property
    def orbit_index(self) -> tuple:
        """0-based orbit number of each 0-based index."""
        owner = [0] * self.n
        for a, orbit in enumerate(self.orbits):
            for i in orbit:
                owner[i - 1] = a
        return tuple(owner)

    def orbit_of(self, k: int) -> tuple:
        return self.orbits[self.orbit_index[k - 1]]

    def to_json(self) -> dict:
        return {"n": self.n, "generators": [list(g) for g in self.generators], "orbits": [list(o) for o in self.orbits]}


def _orbits(n: int, generators: Sequence[tuple]) -> tuple:
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for g in generators:
        for i in range(n):
            a, b = find(i), find(g[i] - 1)
            if a != b:
                parent[max(a, b)] = min(a, b)
    groups: dict = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i + 1)
    return tuple(sorted(tuple(g) for g in groups.values()))


def permutation_from_cycles(n: int, cycles: Iterable[Sequence[int]]) -> tuple:
    return SeedIso.from_cycles(n, cycles).perm


def parse_orbits(text: str) -> list:
    """``"1 2|3 4|5 6"`` -> [[1, 2], [3, 4], [5, 6]]."""
    out = []
    for part in text.split("|"):
        members = [int(tok) for tok in part.replace(",", " ").split()]
        if members:
            out.append(members)
    return out


def generators_for_orbits(n: int, orbits: Iterable[Sequence[int]]) -> tuple:
    """Adjacent transpositions generating the full symmetric group of each orbit."""
    gens = []
    for orbit in orbits:
        members = sorted(orbit)
        for a, b in zip(members, members[1:]):
            gens.append(permutation_from_cycles(n, [(a, b)]))
    return tuple(gens)


def _condition_witness(skew, d, generators) -> tuple | None:
    n = len(skew)
    ident = tuple(range(1, n + 1))
    perms = (ident,) + tuple(generators)
    for p1, p2 in cartesian(perms, repeat=2):
        for i in range(n):
            for j in range(n):
                if skew[i][j] != skew[p1[i] - 1][p2[j] - 1]:
                    return (i + 1, j + 1, p1, p2)
    for p in generators:
        for i in range(n):
            if d[i] != d[p[i] - 1]:
                return (i + 1, i + 1, p, ident)
    return None


def validate_pi(seed: Seed, generators: Iterable[Sequence[int]]) -> PiAction:
    """Check the folding condition for ``generators`` and return the action.

    Generators are 1-based image tuples.  Multipliers must be constant on
    orbits as well, so that the folded multipliers are well defined.
    """
    n = seed.n
    gens = tuple(tuple(int(x) for x in g) for g in generators)
    for g in gens:
        if sorted(g) != list(range(1, n + 1)):
            raise ValueError(f"{g} is not a permutation of 1..{n}")
    witness = _condition_witness(seed.skew, seed.d, gens)
    if witness is not None:
        i, j, p1, p2 = witness
        raise FoldingError(f"folding condition fails for i={i}, j={j} under {p1} x {p2}", witness)
    return PiAction(n, gens, _orbits(n, gens))


def satisfies_condition(seed: Seed, pi: PiAction) -> bool:
    return _condition_witness(seed.skew, seed.d, pi.generators) is None


def model_pi(model) -> PiAction:
    """Full block-symmetry group of a Looijenga model: one orbit per block."""
    from .looijenga import _as_model, build_seed

    model = _as_model(model)
    seed = build_seed(model)
    return validate_pi(seed, generators_for_orbits(seed.n, model.blocks))


# --------------------------------------------------------------------------
# folded seed and quotient maps
# --------------------------------------------------------------------------
@dataclass(frozen=True)
class FoldedSeed:
    """The quotient seed together with the group it came from."""

    seed: Seed
    parent: Seed
    pi: PiAction

    @property
    def q_index(self) -> tuple:
        """q on basis vectors: 0-based orbit of each 0-based index."""
        return self.pi.orbit_index

    def to_json(self) -> dict:
        return {
            "seed": self.seed.to_json(),
            "eps": [list(r) for r in self.seed.eps],
            "dual_eps": [list(r) for r in self.seed.dual_eps],
            "parent": self.parent.to_json(),
            "pi": self.pi.to_json(),
        }


def fold_seed(seed: Seed, pi: PiAction) -> FoldedSeed:
    if not satisfies_condition(seed, pi):
        raise FoldingError("seed does not satisfy the folding condition for this group")
    reps = [orbit[0] - 1 for orbit in pi.orbits]
    skew = tuple(tuple(seed.skew[a][b] for b in reps) for a in reps)
    d = tuple(len(orbit) * seed.d[r] for orbit, r in zip(pi.orbits, reps))
    labels = tuple("{" + ",".join(seed.labels[i - 1] for i in orbit) + "}" for orbit in pi.orbits)
    return FoldedSeed(Seed(skew, d, labels), seed, pi)


@dataclass(frozen=True)
class QuotientMaps:
    """q: N -> Nbar, its transpose q*: Mbar -> M and s*: M -> Mbar (rational).

    Matrices act on column vectors of coordinates.
    """

    q: tuple
    qstar: tuple
    sstar: tuple
    section: tuple

    @classmethod
    def of(cls, folded: FoldedSeed) -> "QuotientMaps":
        pi = folded.pi
        nbar, n = len(pi.orbits), pi.n
        owner = pi.orbit_index
        q = tuple(tuple(int(owner[i] == a) for i in range(n)) for a in range(nbar))
        qstar = tuple(tuple(q[a][i] for a in range(nbar)) for i in range(n))
        sstar = tuple(
            tuple(Fraction(int(owner[i] == a), folded.seed.d[a]) for i in range(n)) for a in range(nbar)
        )
        section = tuple(orbit[0] for orbit in pi.orbits)
        return cls(q, qstar, sstar, section)

    @staticmethod
    def _apply(matrix, v) -> tuple:
        return tuple(sum(row[j] * v[j] for j in range(len(v))) for row in matrix)

    def apply_q(self, n_vec) -> tuple:
        return self._apply(self.q, n_vec)

    def apply_qstar(self, m_bar) -> tuple:
        return self._apply(self.qstar, m_bar)

    def apply_sstar(self, m) -> tuple:
        return self._apply(self.sstar, m)

    def apply_section(self, n_bar) -> tuple:
        out = [0] * len(self.qstar)
        for a, c in enumerate(n_bar):
            out[self.section[a] - 1] = c
        return tuple(out)

    def invariants_hold(self, n_vec, m_bar) -> bool:
        """q o section = id, q* injective (rows of q partition I) and pairing compatibility."""
        nbar = len(self.q)
        unit = [tuple(int(a == b) for b in range(nbar)) for a in range(nbar)]
        if any(self.apply_q(self.apply_section(u)) != u for u in unit):
            return False
        if any(sum(row) != 1 for row in self.qstar):
            return False
        lhs = sum(x * y for x, y in zip(n_vec, self.apply_qstar(m_bar)))
        rhs = sum(x * y for x, y in zip(self.apply_q(n_vec), m_bar))
        return lhs == rhs

    def descend(self, m) -> tuple:
        """The m_bar with q*(m_bar) = m; raises if m is not Pi-invariant."""
        m_bar = [None] * len(self.q)
        for i, row in enumerate(self.qstar):
            a = row.index(1)
            if m_bar[a] is None:
                m_bar[a] = m[i]
            elif m_bar[a] != m[i]:
                raise FoldingError(f"vector {tuple(m)} is not constant on orbits")
        return tuple(m_bar)


# --------------------------------------------------------------------------
# Pi-constrained mutation and chambers
# --------------------------------------------------------------------------
def pi_mutate(state: MutationState, pi: PiAction, orbit) -> MutationState:
    """Mutate at every member of the orbit (given by any member or as a collection), ascending."""
    members = pi.orbit_of(orbit) if isinstance(orbit, int) else tuple(sorted(orbit))
    if members not in pi.orbits:
        raise ValueError(f"{members} is not an orbit of the group")
    if not satisfies_condition(state.current_seed(), pi):
        raise FoldingError("current seed does not satisfy the folding condition")
    for k in members:
        state = mutate(state, k)
    return state


def pi_word(pi: PiAction, orbit_word: Iterable[int]) -> tuple:
    """Unfolded word of a word in folded indices (1-based orbit numbers)."""
    out = []
    for a in orbit_word:
        out.extend(pi.orbits[a - 1])
    return tuple(out)


def folded_word(pi: PiAction, word: Sequence[int]) -> tuple | None:
    """Split ``word`` into complete orbits; None if it is not Pi-constrained."""
    out, pos = [], 0
    owner = pi.orbit_index
    while pos < len(word):
        a = owner[word[pos] - 1]
        size = len(pi.orbits[a])
        block = word[pos : pos + size]
        if sorted(block) != list(pi.orbits[a]):
            return None
        out.append(a + 1)
        pos += size
    return tuple(out)


def _columns(gmat) -> list:
    n = len(gmat)
    return [tuple(gmat[r][c] for r in range(n)) for c in range(n)]


def _column_permutation(gmat, p) -> tuple | None:
    """sigma with p . g_c = g_{sigma(c)}, or None if p does not preserve the column set."""
    cols = _columns(gmat)
    where = {col: c for c, col in enumerate(cols)}
    out = []
    for col in cols:
        image = tuple(col[p[r] - 1] for r in range(len(col)))
        if image not in where:
            return None
        out.append(where[image])
    return tuple(out)


def is_pi_invariant(state: MutationState, pi: PiAction, labelled: bool = False) -> bool:
    """Whether every generator maps the chamber to itself.

    By default the test is on the cone: permuting coordinates by p must permute
    the g-vectors.  With ``labelled`` the g-vector of index k must go to the
    one of index p(k), which depends on how the seed was relabelled.
    """
    gmat = state.gmat
    for p in pi.generators:
        sigma = _column_permutation(gmat, p)
        if sigma is None:
            return False
        if labelled and any(sigma[c] != p[c] - 1 for c in range(len(sigma))):
            return False
    return True


def column_orbits(state: MutationState, pi: PiAction) -> tuple:
    """Orbits of the group on the g-vectors of a Pi-invariant chamber (0-based columns)."""
    sigmas = []
    for p in pi.generators:
        sigma = _column_permutation(state.gmat, p)
        if sigma is None:
            raise FoldingError("chamber is not Pi-invariant")
        sigmas.append(tuple(c + 1 for c in sigma))
    return tuple(tuple(c - 1 for c in orbit) for orbit in _orbits(state.n, sigmas))


def fold_chamber(state: MutationState, pi: PiAction, maps: QuotientMaps, folded: FoldedSeed | None = None) -> Chamber:
    """Folded chamber of a Pi-invariant chamber.

    The chamber meets q*(Mbar) in the cone spanned by the sums of its
    g-vectors over orbits of the group; each sum is brought down to Mbar and
    made primitive.  If the state's word splits into whole orbits and
    ``folded`` is given, the result is compared with the g-matrix of the
    folded word.
    """
    orbits = column_orbits(state, pi)
    if len(orbits) != len(pi.orbits):
        raise FoldingError("chamber does not meet q*(Mbar) in full dimension")
    cols = _columns(state.gmat)
    columns = []
    for orbit in orbits:
        total = tuple(sum(cols[c][r] for c in orbit) for r in range(state.n))
        columns.append(primitive(maps.descend(total)))
    nbar = len(columns)
    gmat = tuple(tuple(columns[c][r] for c in range(nbar)) for r in range(nbar))
    fw = folded_word(pi, state.word)
    chamber = Chamber(gmat, fw or (), negative_side=False)
    if folded is not None and fw is not None:
        reference = apply_word(MutationState.initial(folded.seed), fw)
        if Chamber(reference.gmat).key() != chamber.key():
            raise AssertionError(f"folded chamber disagrees with the folded word {fw}")
    return chamber


# --------------------------------------------------------------------------
# diagrams
# --------------------------------------------------------------------------
def push_forward(element: TruncSeries, maps: QuotientMaps, cutoff: int) -> TruncSeries:
    """q~: z^n -> z^{q(n)} on Lie elements."""
    out: dict = {}
    for e, c in element.items():
        image = maps.apply_q(e)
        if sum(image) <= cutoff:
            out[image] = out.get(image, 0) + c
    return TruncSeries(len(maps.q), cutoff, out)


def fold_diagram(diag: Diagram, pi: PiAction, maps: QuotientMaps, k: int | None = None,
                 folded: FoldedSeed | None = None) -> Diagram:
    """Quotient of a consistent diagram.

    The consistent element is pushed forward along q~, which is a Lie algebra
    map because the skew form is constant on orbit pairs.  The incoming walls
    of the result are those of the folded seed; outgoing walls are rebuilt
    from the pushed element when the folded rank is at most three, and the
    result is then checked for consistency.
    """
    if diag.element is None:
        raise ValueError("fold_diagram needs a completed diagram")
    k = diag.cutoff if k is None else k
    if folded is None:
        parent = Seed(tuple(tuple(-v for v in row) for row in diag.form), diag.multipliers or None)
        folded = fold_seed(parent, pi)
    form = seed_form(folded.seed)
    _check_form(diag.form, form, maps)
    element = push_forward(diag.element.truncate(k), maps, k)
    base = initial_diagram(folded.seed, k)
    explicit = base.rank <= 3
    walls = tuple(base.walls)
    if explicit:
        walls = walls + materialize_walls(form, element, base.walls)
    out = Diagram(form, k, walls, base.multipliers, element, explicit)
    if explicit and not is_consistent(out):
        raise FoldingError("folded diagram is not consistent")
    return out


def _check_form(form, folded_form, maps: QuotientMaps) -> None:
    n = len(form)
    owner = [row.index(1) for row in maps.qstar]
    for i in range(n):
        for j in range(n):
            if form[i][j] != folded_form[owner[i]][owner[j]]:
                raise FoldingError("diagram form is not constant on orbit pairs")


# --------------------------------------------------------------------------
# atlas
# --------------------------------------------------------------------------
@dataclass(frozen=True)
class AtlasNode:
    subfan: int
    chamber: Chamber
    state: MutationState = field(compare=False)


@dataclass(frozen=True)
class AtlasEdge:
    source: int
    target: int
    kind: str  # "cluster" or "noncluster"
    transition: object  # dict of RationalFn, or a TruncSeries (log of the automorphism)
    mutation: int | None = None


@dataclass
class AtlasGraph:
    nodes: list
    edges: list
    cutoff: int

    def subfan_nodes(self, subfan: int) -> list:
        return [i for i, node in enumerate(self.nodes) if node.subfan == subfan]

    def shared_chambers(self) -> list:
        """Chamber keys that occur in more than one subfan."""
        seen: dict = {}
        for node in self.nodes:
            seen.setdefault(node.chamber.key(), set()).add(node.subfan)
        return [key for key, fans in seen.items() if len(fans) > 1]

    def to_json(self) -> dict:
        def payload(edge):
            if edge.kind == "cluster":
                return {str(i + 1): str(f) for i, f in sorted(edge.transition.items())}
            return {"log": edge.transition.to_json(), "order": self.cutoff}

        return {
            "nodes": [
                {"id": i, "subfan": node.subfan, "gmat": [list(r) for r in node.chamber.gmat],
                 "word": list(node.chamber.word), "negative_side": node.chamber.negative_side}
                for i, node in enumerate(self.nodes)
            ],
            "edges": [
                {"source": e.source, "target": e.target, "type": e.kind, "mutation": e.mutation,
                 "transition": payload(e)}
                for e in self.edges
            ],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)


def positive_root(folded: FoldedSeed) -> Chamber:
    n = folded.seed.n
    return Chamber(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)), (), False)


def negative_root(folded: FoldedSeed) -> Chamber:
    n = folded.seed.n
    return Chamber(tuple(tuple(-int(i == j) for j in range(n)) for i in range(n)), (), True)


def _root_state(folded: FoldedSeed, root: Chamber) -> MutationState:
    seed = folded.seed
    if root.negative_side:
        seed = Seed(tuple(tuple(-v for v in row) for row in seed.skew), seed.d, seed.labels)
    state = apply_word(MutationState.initial(seed), root.word)
    if _chamber_of(state, root.negative_side).key() != root.key():
        raise ValueError("root chamber is not reached by its word")
    return state


def _chamber_of(state: MutationState, negative: bool) -> Chamber:
    gm = state.gmat
    if negative:
        gm = tuple(tuple(-v for v in row) for row in gm)
    return Chamber(gm, tuple(state.word), negative)


def build_atlas(folded: FoldedSeed, subfan_roots: Sequence[Chamber], k: int, depth: int = 2,
                diagram: Diagram | None = None) -> AtlasGraph:
    """Chart graph over the subfans grown from ``subfan_roots``.

    Each subfan is explored to ``depth`` mutations from its root.  Edges
    inside a subfan carry the exact X-mutation pullback.  One edge joins the
    roots of every pair of subfans; it carries the log of the path-ordered
    product between their interior points, truncated at order k.  Roots are
    folded-lattice chambers whose word is a mutation word of the folded seed
    (of its negative when ``negative_side`` is set).
    """
    nodes: list = []
    edges: list = []
    roots_idx = []
    for fan, root in enumerate(subfan_roots):
        start = _root_state(folded, root)
        index = {}

        def add(state):
            ch = _chamber_of(state, root.negative_side)
            key = ch.key()
            if key in index:
                return index[key], False
            nodes.append(AtlasNode(fan, ch, state))
            index[key] = len(nodes) - 1
            return index[key], True

        first, _ = add(start)
        roots_idx.append(first)
        frontier = [start]
        for _ in range(depth):
            nxt = []
            for st in frontier:
                src = index[_chamber_of(st, root.negative_side).key()]
                for kk in range(1, folded.seed.n + 1):
                    new = mutate(st, kk)
                    dst, fresh = add(new)
                    if fresh or not any(e.source == dst and e.target == src for e in edges):
                        if not any(e.source == src and e.target == dst for e in edges):
                            edges.append(AtlasEdge(src, dst, "cluster", x_pullback(st.current_seed(), kk), kk))
                    if fresh:
                        nxt.append(new)
            frontier = nxt
    if len(roots_idx) > 1:
        if diagram is None:
            diagram = complete(initial_diagram(folded.seed, k), k)
        for a in range(len(roots_idx)):
            for b in range(a + 1, len(roots_idx)):
                edges.append(AtlasEdge(roots_idx[a], roots_idx[b], "noncluster",
                                       cross_transition(diagram, subfan_roots[a], subfan_roots[b])))
    return AtlasGraph(nodes, edges, k)


def cross_transition(diagram: Diagram, source: Chamber, target: Chamber) -> TruncSeries:
    """log of the wall-crossing automorphism from ``source`` to ``target``."""
    try:
        auto = path_ordered_product(diagram, [source.interior_point(), target.interior_point()], method="element")
    except NonGenericPathError as exc:  # pragma: no cover - interior points avoid walls
        raise FoldingError(f"interior points are not generic: {exc}") from exc
    return auto.log
