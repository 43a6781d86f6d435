"""Genetic algorithm for the double coset search problem.

Each generation is built from a fixed slot schedule: crossovers, then
substitutions, deletions, insertions, roulette selections and random
chromosomes, in the counts given by the parameter set. Every child is
pseudo-reduced and scored by traceback, whose recommendation steers the
mutation applied if that child later becomes an asexual parent.
"""
from __future__ import annotations

import bisect
import logging
import time
from dataclasses import dataclass, field
from typing import Optional

from .dcsp import Chromosome, DcspInstance, in_subgroup, is_solution
from .decisions import RandomSource
from .traceback import CHI, RIGHT, ZETA, Recommendation, evaluate
from .words import pseudo_normal_form

log = logging.getLogger(__name__)

MAX_RETRIES = 16

OPERATORS = ("crossover", "substitution", "deletion", "insertion", "selection", "random")


@dataclass(frozen=True)
class ParameterSet:
    p: int
    counts: tuple

    def __post_init__(self):
        counts = tuple(int(c) for c in self.counts)
        object.__setattr__(self, "counts", counts)
        if len(counts) != 6 or any(c < 0 for c in counts):
            raise ValueError(f"need six non-negative counts, got {counts}")
        if self.p < 2:
            raise ValueError("population size must be at least 2")
        if sum(counts) != self.p:
            raise ValueError(f"counts sum to {sum(counts)}, population size is {self.p}")
        if counts[4] < 1:
            raise ValueError("at least one selection slot is required (it carries the elite)")
        if counts[0] and self.p < 3:
            raise ValueError("tournament selection for crossover needs p >= 3")

    @classmethod
    def parse(cls, text: str, p: Optional[int] = None) -> "ParameterSet":
        """Parse ``"5,33,4,128,30,0"``; ``p`` defaults to the sum."""
        try:
            counts = tuple(int(t) for t in text.split(","))
        except ValueError:
            raise ValueError(f"bad parameter set {text!r}") from None
        return cls(sum(counts) if p is None else p, counts)

    def __str__(self):
        return ",".join(str(c) for c in self.counts)


DEFAULT_PARAMS = ParameterSet(200, (5, 33, 4, 128, 30, 0))


@dataclass(frozen=True)
class GaConfig:
    sigma: int = 20_000
    initial_length: int = 1
    seed: int = 0
    substitution: str = "random"  # or "recommended"

    def __post_init__(self):
        if self.sigma < 1:
            raise ValueError("sigma must be >= 1")
        if self.initial_length < 1:
            raise ValueError("initial length must be >= 1")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")
        if self.substitution not in ("random", "recommended"):
            raise ValueError(f"unknown substitution mode {self.substitution!r}")


@dataclass(frozen=True)
class Member:
    chromosome: Chromosome
    cost: int
    recommendation: Recommendation


@dataclass
class RunResult:
    solution: Optional[Chromosome]
    generations: int
    elapsed: float
    best_cost_trace: list = field(default_factory=list)

    @property
    def success(self) -> bool:
        return self.solution is not None

    @property
    def final_cost(self) -> Optional[int]:
        return self.best_cost_trace[-1] if self.best_cost_trace else None


# -- selection -------------------------------------------------------------

def roulette_indices(costs, n_s: int, ds) -> list:
    """Roulette wheel on an ascending cost list, with the mass sequence reversed."""
    p = len(costs)
    total = sum(costs)
    out = [0]
    if total == 0:
        out.extend(ds.choose_index(p) for _ in range(n_s - 1))
        return out[:n_s]
    shares = [c / total for c in reversed(costs)]
    cumulative = []
    acc = 0.0
    for s in shares:
        acc += s
        cumulative.append(acc)
    for _ in range(n_s - 1):
        r = ds.uniform()
        out.append(min(bisect.bisect_left(cumulative, r), p - 1))
    return out[:n_s]


def roulette_select(pop, n_s: int, ds) -> list:
    return [pop[k].chromosome for k in roulette_indices([m.cost for m in pop], n_s, ds)]


def _distinct_indices(bound: int, k: int, ds) -> list:
    picks = []
    for drawn in range(k):
        r = ds.choose_index(bound - drawn)
        for taken in sorted(picks):
            if r >= taken:
                r += 1
        picks.append(r)
    return picks


def tournament_select(pop, ds) -> tuple:
    """Two least-cost of three distinct random members; draw order breaks ties."""
    picks = _distinct_indices(len(pop), 3, ds)
    best = sorted(picks, key=lambda k: pop[k].cost)  # stable: ties keep draw order
    return pop[best[0]].chromosome, pop[best[1]].chromosome


# -- reproduction ----------------------------------------------------------

def segment_index(i: int, j: int, length: int) -> int:
    """Position of the segment ``[i, j)`` in the enumeration used by crossover."""
    return sum(length + 1 - r for r in range(i)) + (j - i)


def _segment(word, ds) -> tuple:
    n = len(word)
    k = ds.choose_index((n + 1) * (n + 2) // 2)
    i = 0
    while k > n - i:
        k -= n - i + 1
        i += 1
    return tuple(word[i:i + k])


def crossover(c1: Chromosome, c2: Chromosome, ds) -> Chromosome:
    side = CHI if ds.choose_bool() else ZETA
    child = _segment(c1.side(side), ds) + _segment(c2.side(side), ds)
    return c1.replace(side, child)


def _alphabet(inst: DcspInstance, side: str) -> tuple:
    return inst.spec.letters(inst.y_set if side == CHI else inst.z_set)


def _cancels(g: int, word, at: int) -> bool:
    """Would ``g`` cancel a neighbour if it sat between word[at-1] and word[at]?"""
    return (at > 0 and word[at - 1] == -g) or (at < len(word) and word[at] == -g)


def _non_cancelling(inst, side, word, at, ds, first=None) -> int:
    g = first
    gens = _alphabet(inst, side)
    for _ in range(MAX_RETRIES):
        if g is not None and not _cancels(g, word, at):
            return g
        g = ds.choose_element(gens)
    return g


def mutate_insert(c: Chromosome, rec: Recommendation, ds, inst: DcspInstance) -> Chromosome:
    word = c.side(rec.side)
    pos = rec.position(c)
    if pos is None:
        at = 0
    else:
        at = pos + 1 if rec.direction == RIGHT else pos
    g = _non_cancelling(inst, rec.side, word, at, ds, first=rec.g)
    return c.replace(rec.side, word[:at] + (g,) + word[at:])


def mutate_substitute(c: Chromosome, rec: Recommendation, ds, inst: DcspInstance,
                      use_recommended: bool = False) -> Chromosome:
    word = c.side(rec.side)
    pos = rec.position(c)
    if pos is None or not word:
        return c
    rest = word[:pos] + word[pos + 1:]
    g = _non_cancelling(inst, rec.side, rest, pos, ds, first=rec.g if use_recommended else None)
    return c.replace(rec.side, rest[:pos] + (g,) + rest[pos:])


def mutate_delete(c: Chromosome, rec: Recommendation) -> Chromosome:
    word = c.side(rec.side)
    pos = rec.position(c)
    if pos is None or not word:
        return c
    return c.replace(rec.side, word[:pos] + word[pos + 1:])


def random_chromosome(inst: DcspInstance, length: int, ds) -> Chromosome:
    """Unreduced uniform words of exactly ``length`` letters on each side."""
    ys, zs = _alphabet(inst, CHI), _alphabet(inst, ZETA)
    chi = tuple(ds.choose_element(ys) for _ in range(length))
    zeta = tuple(ds.choose_element(zs) for _ in range(length))
    return Chromosome(chi, zeta)


# -- population ------------------------------------------------------------

def pseudo_reduce(inst: DcspInstance, c: Chromosome) -> Chromosome:
    return Chromosome(pseudo_normal_form(c.chi, inst.spec), pseudo_normal_form(c.zeta, inst.spec))


def evaluate_population(chromosomes, inst: DcspInstance, ds) -> list:
    """Pseudo-reduce, score by traceback and sort ascending by cost (stable)."""
    members = []
    for c in chromosomes:
        c = pseudo_reduce(inst, c)
        cost, rec = evaluate(inst, c, ds)
        members.append(Member(c, cost, rec))
    members.sort(key=lambda m: m.cost)
    return members


def breed(pop, inst: DcspInstance, params: ParameterSet, ds,
          initial_length: int = 1, substitution: str = "random") -> list:
    """Children of one generation, unevaluated, in slot-schedule order."""
    n_cross, n_sub, n_del, n_ins, n_sel, n_rand = params.counts
    p = len(pop)
    children = []
    for _ in range(n_cross):
        c1, c2 = tournament_select(pop, ds)
        children.append(crossover(c1, c2, ds))
    for _ in range(n_sub):
        m = pop[ds.choose_index(p)]
        children.append(mutate_substitute(m.chromosome, m.recommendation, ds, inst,
                                          use_recommended=substitution == "recommended"))
    for _ in range(n_del):
        m = pop[ds.choose_index(p)]
        children.append(mutate_delete(m.chromosome, m.recommendation))
    for _ in range(n_ins):
        m = pop[ds.choose_index(p)]
        children.append(mutate_insert(m.chromosome, m.recommendation, ds, inst))
    if n_sel:
        children.extend(roulette_select(pop, n_sel, ds))
    for _ in range(n_rand):
        children.append(random_chromosome(inst, initial_length, ds))
    return children


def next_generation(pop, inst: DcspInstance, params: ParameterSet, ds,
                    initial_length: int = 1, substitution: str = "random") -> list:
    children = breed(pop, inst, params, ds, initial_length, substitution)
    return evaluate_population(children, inst, ds)


def run(inst: DcspInstance, params: ParameterSet = DEFAULT_PARAMS,
        config: GaConfig = GaConfig(), callback=None) -> RunResult:
    """Run the GA until a zero-cost chromosome appears or sigma generations pass.

    ``callback(generation, population)`` is called after each evaluation.
    """
    if not isinstance(inst, DcspInstance):
        raise TypeError("inst must be a DcspInstance")
    ds = RandomSource(config.seed)
    start = time.perf_counter()
    initial = [random_chromosome(inst, config.initial_length, ds) for _ in range(params.p)]
    pop = evaluate_population(initial, inst, ds)
    trace = []
    i = 0
    while i < config.sigma:
        trace.append(pop[0].cost)
        if callback is not None:
            callback(i, pop)
        if pop[0].cost == 0:
            best = pop[0].chromosome
            assert is_solution(inst, best)
            return RunResult(best, i, time.perf_counter() - start, trace)
        if i % 100 == 0:
            log.debug("generation %d best cost %d", i, pop[0].cost)
        pop = next_generation(pop, inst, params, ds, config.initial_length, config.substitution)
        i += 1
    return RunResult(None, i, time.perf_counter() - start, trace)


def check_population(pop, inst: DcspInstance) -> None:
    """Raise AssertionError if any member leaves its subgroup."""
    for m in pop:
        c = m.chromosome
        if not (in_subgroup(c.chi, inst.y_set) and in_subgroup(c.zeta, inst.z_set)):
            raise AssertionError(f"membership violated by {c}")
