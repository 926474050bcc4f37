"""Verification campaigns over the shipped models and the subfan scanner.

Each campaign returns a ``Report``: a list of named checks with the expected
and computed values.  A check whose ``passed`` is None is informational and
never fails a report; the conjecture scanner only produces such checks.
"""
from __future__ import annotations

import json
import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product as cartesian

from .folding import (
    QuotientMaps,
    fold_chamber,
    fold_diagram,
    fold_seed,
    generators_for_orbits,
    is_pi_invariant,
    model_pi,
    pi_mutate,
    validate_pi,
)
from .looijenga import (
    ModelType,
    _as_model,
    alpha_word,
    apply_weyl,
    build_seed,
    compose,
    dt_word,
    kernel_action,
    kernel_basis,
    reflection_word,
    remark_suffix,
    weyl_w,
)
from .scatter import (
    Chamber,
    complete,
    enumerate_chambers,
    equivalent,
    initial_diagram,
    permute_diagram,
)
from .seed import MutationState, apply_word, is_signed_permutation


# --------------------------------------------------------------------------
# reports
# --------------------------------------------------------------------------
def _plain(value):
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, (frozenset, set)):
        return sorted((_plain(v) for v in value), key=str)
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    return value


@dataclass
class Check:
    name: str
    expected: object
    computed: object
    passed: bool | None

    def to_json(self) -> dict:
        return {"name": self.name, "expected": _plain(self.expected), "computed": _plain(self.computed),
                "passed": self.passed}


@dataclass
class Report:
    campaign: str
    model: str
    checks: list = field(default_factory=list)
    timings: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed is not False for c in self.checks)

    def add(self, name: str, expected, computed, passed: bool | None = None) -> Check:
        if passed is None and expected is not None:
            passed = expected == computed
        check = Check(name, expected, computed, passed)
        self.checks.append(check)
        return check

    def note(self, name: str, computed) -> Check:
        check = Check(name, None, computed, None)
        self.checks.append(check)
        return check

    @contextmanager
    def timed(self, label: str):
        start = time.perf_counter()
        try:
            yield
        finally:
            self.timings[label] = round(time.perf_counter() - start, 4)

    def failures(self) -> list:
        return [c for c in self.checks if c.passed is False]

    def to_json(self) -> dict:
        return {"campaign": self.campaign, "model": self.model, "passed": self.passed,
                "checks": [c.to_json() for c in self.checks], "timings": dict(self.timings)}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)

    def to_text(self) -> str:
        lines = [f"{self.campaign} [{self.model}]: {'PASS' if self.passed else 'FAIL'}"]
        for c in self.checks:
            tag = {True: "PASS", False: "FAIL", None: "INFO"}[c.passed]
            lines.append(f"  {tag} {c.name}: {_short(c.computed)}")
            if c.passed is False:
                lines.append(f"       expected {_short(c.expected)}")
        for label, seconds in self.timings.items():
            lines.append(f"  time {label}: {seconds}s")
        return "\n".join(lines)


def _short(value, limit: int = 160) -> str:
    text = json.dumps(_plain(value))
    return text if len(text) <= limit else text[: limit - 3] + "..."


def _neg_perm(state: MutationState) -> bool:
    return is_signed_permutation(state.gmat, -1)


# --------------------------------------------------------------------------
# DT words
# --------------------------------------------------------------------------
def verify_dt(model: ModelType | str) -> Report:
    """The DT word of the model ends in the chamber C^- (g-matrix = -permutation)."""
    model = _as_model(model)
    seed = build_seed(model)
    start = MutationState.initial(seed)
    report = Report("verify-dt", model.name)
    n = seed.n
    w = weyl_w(model).mutations
    if model.family == "D":
        with report.timed("W_n"):
            after_w = apply_word(start, w)
        upper = tuple(row[:4] for row in after_w.cmat[:4])
        block = tuple(
            tuple(upper[i][j] if i < 4 and j < 4 else -int(i == j) if i >= 4 and j >= 4 else 0 for j in range(n))
            for i in range(n)
        )
        report.add("c-matrix after W_n has block form [[M,0],[0,-I]]", block, after_w.cmat)
        if model.n == 4:
            expected = ((0, -1, 0, 0), (-1, 0, 0, 0), (0, 0, 0, -1), (0, 0, -1, 0))
            report.add("M_4 = -P((1 2)(3 4))", expected, upper)
        report.add("W_n alone reaches C^-", model.n == 4, _neg_perm(after_w))
        suffix = remark_suffix(model.n)
        for cut in range(0, len(suffix) + 1, 2):
            if cut == len(suffix):
                continue
            report.note(f"W_n + suffix[:{cut}] reaches C^-", _neg_perm(apply_word(after_w, suffix[:cut])))
        with report.timed("dt word"):
            final = apply_word(after_w, suffix)
        report.add(f"W_n + suffix {list(suffix)} reaches C^-", True, _neg_perm(final))
        report.note("final g-matrix", final.gmat)
        return report
    if model.n == 6:
        for variant in ("short", "long"):
            word = dt_word(model, variant)
            with report.timed(f"{variant} word"):
                final = apply_word(start, word)
            report.add(f"{variant} word ({len(word)} steps) reaches C^-", True, _neg_perm(final))
        long_word = dt_word(model, "long")
        report.add("long word minus final [1,2] is the word of w", list(w), list(long_word[:-2]))
        report.add("word of w alone reaches C^-", False, _neg_perm(apply_word(start, long_word[:-2])))
        return report
    word = dt_word(model)
    with report.timed("dt word"):
        final = apply_word(start, word)
    report.note("word length", len(word))
    report.add(f"word ({len(word)} steps) reaches C^-", True, _neg_perm(final))
    report.note("final g-matrix", final.gmat)
    return report


# --------------------------------------------------------------------------
# Weyl group on the scattering diagram
# --------------------------------------------------------------------------
def simple_generators(model: ModelType | str) -> list:
    """(label, WeylWord) for E_i - E_{i+1} inside blocks and l - E_a - E_b - E_c on block heads."""
    model = _as_model(model)
    out = []
    for members in model.blocks:
        for a, b in zip(members, members[1:]):
            text = f"E{a}-E{b}"
            out.append((text, reflection_word(text, model)))
    heads = [members[0] for members in model.blocks]
    text = "l-" + "-".join(f"E{i}" for i in heads)
    out.append((text, reflection_word(text, model)))
    return out


def _chamber_after(seed, word) -> Chamber:
    return Chamber(apply_weyl(MutationState.initial(seed), word).gmat, word.mutations)


def verify_weyl_scatter(model: ModelType | str, k: int = 5, trials: int = 30, rng_seed: int = 0,
                        faithful_length: int = 2) -> Report:
    """Weyl generators act on the diagram and on the cluster complex."""
    model = _as_model(model)
    seed = build_seed(model)
    report = Report("verify-weyl-scatter", model.name)
    gens = simple_generators(model)
    transpositions = [(label, w) for label, w in gens if not w.mutations]
    with report.timed(f"complete k={k}"):
        diagram = complete(initial_diagram(seed, k), k)
    for label, word in transpositions:
        with report.timed(f"swap {label}"):
            moved = permute_diagram(diagram, word.iso.perm)
            same = equivalent(diagram, moved, k, trials=trials, seed=rng_seed)
        report.add(f"r_({label}) maps the diagram to an equivalent one", True, same)
    depth = max(len(w.mutations) for _, w in gens)
    with report.timed("chamber enumeration"):
        reachable = {c.key() for c in enumerate_chambers(seed, depth)}
    for label, word in gens:
        if not word.mutations:
            continue
        image = _chamber_after(seed, word)
        report.add(f"r_({label}) C+ is a chamber of the cluster complex", True, image.key() in reachable)
        if model.family == "A":
            delta = ((0, 0, -1), (0, -1, 0), (-1, 0, 0))
            report.add("delta C+ is the chamber of [1,3,2,1]", Chamber(delta).key(), image.key())
    # faithfulness on short products
    elements: dict = {}
    with report.timed("faithfulness"):
        for length in range(1, faithful_length + 1):
            for combo in cartesian(range(len(gens)), repeat=length):
                word = compose([gens[i][1] for i in combo])
                action = kernel_action(seed, word)
                ident = tuple(tuple(sum(action[r][c] * v[c] for c in range(seed.n)) for r in range(seed.n))
                              for v in kernel_basis(seed))
                elements.setdefault(ident, _chamber_after(seed, word).gmat)
    # labelled g-matrices: pure relabellings fix the cone but not the seed
    images = list(elements.values())
    report.add("distinct short Weyl elements give distinct labelled chambers", len(images), len(set(images)))
    w = weyl_w(model)
    twice = apply_weyl(apply_weyl(MutationState.initial(seed), w), w)
    report.add("w is an involution on chambers", Chamber(MutationState.initial(seed).gmat).key(),
               Chamber(twice.gmat).key())
    return report


# --------------------------------------------------------------------------
# the folded model
# --------------------------------------------------------------------------
def displayed_fold_matrix(model: ModelType | str) -> tuple:
    """Folded exchange matrix in row form: [[0,-2,2],[2,0,-2],[-(n-2),n-2,0]] or the E analogue."""
    model = _as_model(model)
    if model.family == "D":
        a, b = 2, model.n - 2
    else:
        a, b = 3, model.n - 3
    return ((0, -2, 2), (a, 0, -a), (-b, b, 0))


def verify_fold_theorem(model: ModelType | str, k: int | None = None, depth: int = 8,
                        trials: int = 50, rng_seed: int = 0) -> Report:
    """The w-image folds into the negative subfan, which sits opposite the positive one."""
    model = _as_model(model)
    seed = build_seed(model)
    pi = model_pi(model)
    folded = fold_seed(seed, pi)
    maps = QuotientMaps.of(folded)
    report = Report("verify-fold", model.name)
    shown = displayed_fold_matrix(model)
    report.add("folded matrix d_a {e_a, e_b}", shown, folded.seed.dual_eps)
    report.add("folded exchange matrix is minus its transpose", tuple(tuple(-v for v in col) for col in zip(*shown)),
               folded.seed.eps)
    w = weyl_w(model)
    image = apply_weyl(MutationState.initial(seed), w)
    report.add("w C+ is Pi-invariant", True, is_pi_invariant(image, pi))
    folded_image = fold_chamber(image, pi, maps)
    report.note("folded w C+", folded_image.gmat)
    with report.timed(f"enumeration depth {depth}"):
        positive = enumerate_chambers(folded.seed, depth)
        negative = enumerate_chambers(folded.seed, depth, negative=True)
    report.note("chambers enumerated (positive, negative)", (len(positive), len(negative)))
    report.add("folded w C+ lies in the negative subfan", True, folded_image.key() in {c.key() for c in negative})
    normal = (1,) * folded.seed.n
    pos_ok = all(sum(a * b for a, b in zip(normal, r)) > 0 for c in positive for r in c.rays)
    neg_ok = all(sum(a * b for a, b in zip(normal, r)) < 0 for c in negative for r in c.rays)
    report.add("positive subfan rays on the positive side", True, pos_ok)
    report.add("negative subfan rays on the negative side", True, neg_ok)
    twice = apply_weyl(image, w)
    report.add("w^2 fixes the folded C+", Chamber(MutationState.initial(folded.seed).gmat).key(),
               fold_chamber(twice, pi, maps).key())
    if k:
        with report.timed(f"fold diagram k={k}"):
            diagram = complete(initial_diagram(seed, k), k)
            pushed = fold_diagram(diagram, pi, maps, k, folded)
            direct = complete(initial_diagram(folded.seed, k), k)
            same = equivalent(pushed, direct, k, trials=trials, seed=rng_seed)
        report.add("folded diagram equals the diagram of the folded seed", True, same)
    return report


# --------------------------------------------------------------------------
# subfan scan
# --------------------------------------------------------------------------
def scan_pi(m: int):
    """Pairs {1,2}, {3,4}, ..., {2m+1, 2m+2} on D_{2m}."""
    model = ModelType("D", 2 * m)
    seed = build_seed(model)
    orbits = [(2 * i + 1, 2 * i + 2) for i in range(m + 1)]
    return model, seed, validate_pi(seed, generators_for_orbits(seed.n, orbits))


def _pi_subfan(start: MutationState, pi, depth: int) -> dict:
    seen = {Chamber(start.gmat).key(): start}
    frontier = [(start, None)]
    for _ in range(depth):
        nxt = []
        for state, last in frontier:
            for a, orbit in enumerate(pi.orbits):
                if a == last:
                    continue
                new = pi_mutate(state, pi, orbit)
                key = Chamber(new.gmat).key()
                if key not in seen:
                    seen[key] = new
                    nxt.append((new, a))
        frontier = nxt
    return seen


def conjecture_scan(m: int, depth: int) -> Report:
    """Subfans grown from s_varpi for every subset varpi of {1..m-1}; report only.

    The region is <e1 + e3 + e_j, g> >= 0 for j = 5, 7, ..., 2m + 1 on every
    ray of a chamber.
    """
    if m < 2:
        raise ValueError("m must be at least 2")
    model, seed, pi = scan_pi(m)
    report = Report("scan-conjecture", f"{model.name} (m={m}, depth={depth})")
    functionals = []
    for j in range(5, 2 * m + 2, 2):
        v = [0] * seed.n
        v[0] = v[2] = v[j - 1] = 1
        functionals.append(tuple(v))

    def satisfies(key) -> bool:
        return all(sum(a * b for a, b in zip(f, r)) >= 0 for f in functionals for r in key)

    fans: dict = {}
    roots: dict = {}
    with report.timed("enumeration"):
        for size in range(m):
            for subset in combinations(range(1, m), size):
                state = MutationState.initial(seed)
                if subset:
                    state = apply_weyl(state, compose([alpha_word(model, l) for l in subset]))
                roots[subset] = Chamber(state.gmat).key()
                report.note(f"s_{list(subset)} chamber is Pi-invariant", is_pi_invariant(state, pi))
                fans[subset] = _pi_subfan(state, pi, depth)
    base = fans[()]
    report.note("base subfan size", len(base))
    report.note("(i) base subfan chambers all in region", all(satisfies(key) for key in base))
    for subset, fan in fans.items():
        if subset:
            report.note(f"(ii) C+ of s_{list(subset)} violates region", not satisfies(roots[subset]))
            report.note(f"subfan s_{list(subset)} size / in region",
                        (len(fan), sum(1 for key in fan if satisfies(key))))
    folded = fold_seed(seed, pi)
    maps = QuotientMaps.of(folded)
    folded_fans = {
        subset: {fold_chamber(state, pi, maps).key() for state in fan.values()} for subset, fan in fans.items()
    }
    counts = {"chambers": 0, "rays": 0, "folded chambers": 0, "folded rays": 0}
    for a, b in combinations(fans, 2):
        counts["chambers"] += len(set(fans[a]) & set(fans[b]))
        counts["rays"] += len({r for key in fans[a] for r in key} & {r for key in fans[b] for r in key})
        counts["folded chambers"] += len(folded_fans[a] & folded_fans[b])
        common = {r for key in folded_fans[a] for r in key} & {r for key in folded_fans[b] for r in key}
        counts["folded rays"] += len(common)
        if common:
            report.note(f"(iii) folded rays shared by s_{list(a)} and s_{list(b)}", sorted(common))
    for label, count in counts.items():
        report.note(f"(iii) {label} shared between subfans", count)
    return report


def run_all(models=("D4", "D5", "D6", "E6", "E7", "E8")) -> list:
    return [verify_dt(m) for m in models]
