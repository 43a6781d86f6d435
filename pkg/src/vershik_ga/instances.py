"""Random DCSP instances built from random-walk words."""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional

from .dcsp import Chromosome, DcspInstance, generator_subset
from .words import GroupSpec, Word, normal_form, random_word, reduced_length


def problem_p_subgroups(n: int) -> tuple:
    """Y = {1..m-1}, Z = {m+2..n} for n = 2m, m > 1."""
    if n % 2 or n < 4:
        raise ValueError(f"problem (P) needs an even rank >= 4, got {n}")
    m = n // 2
    return frozenset(range(1, m)), frozenset(range(m + 2, n + 1))


@dataclass(frozen=True)
class InstanceSpec:
    n: int
    l_a: int
    l_x: int
    l_y: int
    seed: int = 0
    y_set: Optional[frozenset] = None  # None: problem (P) layout
    z_set: Optional[frozenset] = None

    def __post_init__(self):
        if min(self.l_a, self.l_x, self.l_y) < 0:
            raise ValueError("lengths must be non-negative")
        if (self.y_set is None) != (self.z_set is None):
            raise ValueError("give both Y and Z, or neither for problem (P)")
        if self.y_set is None:
            problem_p_subgroups(self.n)

    def subgroups(self) -> tuple:
        if self.y_set is None:
            return problem_p_subgroups(self.n)
        spec = GroupSpec(self.n)
        return generator_subset(self.y_set, spec), generator_subset(self.z_set, spec)


@dataclass(frozen=True)
class GeneratedInstance:
    instance: DcspInstance
    witness_x: Word
    witness_y: Word

    @property
    def witness(self) -> Chromosome:
        return Chromosome(self.witness_x, self.witness_y)

    @property
    def s(self) -> float:
        """Mean reduced length of the two witness words."""
        spec = self.instance.spec
        return (reduced_length(self.witness_x, spec) + reduced_length(self.witness_y, spec)) / 2


def generate(spec: InstanceSpec) -> GeneratedInstance:
    group = GroupSpec(spec.n)
    y_set, z_set = spec.subgroups()
    rng = random.Random(spec.seed)
    a = random_word(spec.l_a, range(1, spec.n + 1), group, rng)
    x = random_word(spec.l_x, y_set, group, rng)
    y = random_word(spec.l_y, z_set, group, rng)
    b = normal_form(x + a + y, group)
    return GeneratedInstance(DcspInstance(group, y_set, z_set, a, b), x, y)


def rank_sweep_spec(n: int, seed: int, max_a: int = 750, max_xy: int = 150) -> InstanceSpec:
    """Lengths drawn uniformly from [1, max], as in the increasing-rank runs."""
    rng = random.Random(f"lengths-{seed}")
    return InstanceSpec(n, rng.randint(1, max_a), rng.randint(1, max_xy),
                        rng.randint(1, max_xy), seed=seed)
