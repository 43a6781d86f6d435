"""Double coset search instances, the cost function and the instance file."""
from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Optional, Sequence

import numpy as np

from .words import (GroupSpec, Word, as_array, format_word, invert, normal_form, parse_word,
                    reduced_length)


class InstanceFormatError(ValueError):
    """Malformed instance file. ``line`` is 1-based, or None for whole-file errors."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def generator_subset(indices: Iterable[int], spec: GroupSpec) -> frozenset:
    s = frozenset(indices)
    if not s:
        raise ValueError("generator subset must be non-empty")
    bad = [i for i in s if not isinstance(i, int) or not 1 <= i <= spec.rank]
    if bad:
        raise ValueError(f"generator indices {sorted(bad)} outside rank {spec.rank}")
    return s


def in_subgroup(w: Sequence[int], subset: Iterable[int]) -> bool:
    subset = subset if isinstance(subset, (set, frozenset)) else set(subset)
    return all(abs(v) in subset for v in w)


@dataclass(frozen=True)
class DcspInstance:
    """Find x in V(Y), y in V(Z) with b = x a y.

    ``b`` is normalized on construction; ``a`` is kept as given.
    """

    spec: GroupSpec
    y_set: frozenset
    z_set: frozenset
    a: Word
    b: Word
    b_inv: Word = field(init=False, repr=False, compare=False)
    a_array: np.ndarray = field(init=False, repr=False, compare=False)
    b_inv_array: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "y_set", generator_subset(self.y_set, self.spec))
        object.__setattr__(self, "z_set", generator_subset(self.z_set, self.spec))
        object.__setattr__(self, "a", self.spec.validate(self.a))
        b = normal_form(self.spec.validate(self.b), self.spec)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "b_inv", invert(b))
        object.__setattr__(self, "a_array", as_array(self.a))
        object.__setattr__(self, "b_inv_array", as_array(self.b_inv))

    @property
    def rank(self) -> int:
        return self.spec.rank


@dataclass(frozen=True)
class Chromosome:
    chi: Word
    zeta: Word

    def side(self, name: str) -> Word:
        return self.chi if name == "chi" else self.zeta

    def replace(self, name: str, word: Sequence[int]) -> "Chromosome":
        word = tuple(word)
        return Chromosome(word, self.zeta) if name == "chi" else Chromosome(self.chi, word)


def expression(inst: DcspInstance, c: Chromosome) -> Word:
    """E = chi a zeta b^-1."""
    return tuple(c.chi) + inst.a + tuple(c.zeta) + inst.b_inv


def expression_array(inst: DcspInstance, c: Chromosome) -> np.ndarray:
    return np.concatenate((as_array(c.chi, inst.spec), inst.a_array,
                           as_array(c.zeta, inst.spec), inst.b_inv_array))


def cost(inst: DcspInstance, c: Chromosome) -> int:
    """Reduced length of chi a zeta b^-1; zero exactly when (chi, zeta) solves."""
    return reduced_length(expression_array(inst, c), inst.spec)


def is_solution(inst: DcspInstance, c: Chromosome) -> bool:
    if not (in_subgroup(c.chi, inst.y_set) and in_subgroup(c.zeta, inst.z_set)):
        return False
    try:
        return cost(inst, c) == 0
    except ValueError:
        return False


# -- instance file ---------------------------------------------------------

_KEYS = ("n", "Y", "Z", "a", "b", "x", "y")


def parse_instance(text: str) -> tuple:
    """Parse an instance file. Returns ``(instance, witness)``.

    ``witness`` is a Chromosome when both ``x:`` and ``y:`` are present, else
    None.
    """
    fields = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition(":")
        key = key.strip()
        if not sep:
            raise InstanceFormatError(f"expected 'key: value', got {raw.strip()!r}", lineno)
        if key not in _KEYS:
            raise InstanceFormatError(f"unknown key {key!r}", lineno)
        if key in fields:
            raise InstanceFormatError(f"duplicate key {key!r}", lineno)
        fields[key] = (lineno, value.strip())

    for key in ("n", "Y", "Z", "a", "b"):
        if key not in fields:
            raise InstanceFormatError(f"missing key {key!r}")

    lineno, value = fields["n"]
    try:
        spec = GroupSpec(int(value))
    except ValueError as exc:
        raise InstanceFormatError(f"bad rank: {exc}", lineno) from None

    def subset(key):
        lineno, value = fields[key]
        try:
            return generator_subset((int(t) for t in value.split()), spec)
        except ValueError as exc:
            raise InstanceFormatError(str(exc), lineno) from None

    def word(key):
        lineno, value = fields[key]
        try:
            return parse_word(value, spec)
        except ValueError as exc:
            raise InstanceFormatError(str(exc), lineno) from None

    inst = DcspInstance(spec, subset("Y"), subset("Z"), word("a"), word("b"))
    witness = None
    if "x" in fields or "y" in fields:
        if not ("x" in fields and "y" in fields):
            raise InstanceFormatError("witness needs both 'x' and 'y'")
        witness = Chromosome(word("x"), word("y"))
    return inst, witness


def format_instance(inst: DcspInstance, witness: Optional[Chromosome] = None,
                    comment: Optional[str] = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines += [
        f"n: {inst.rank}",
        "Y: " + " ".join(str(i) for i in sorted(inst.y_set)),
        "Z: " + " ".join(str(i) for i in sorted(inst.z_set)),
        "a: " + format_word(inst.a),
        "b: " + format_word(inst.b),
    ]
    if witness is not None:
        lines += ["x: " + format_word(witness.chi), "y: " + format_word(witness.zeta)]
    return "\n".join(lines) + "\n"


def load_instance(path) -> tuple:
    return parse_instance(Path(path).read_text())


def save_instance(path, inst: DcspInstance, witness: Optional[Chromosome] = None,
                  comment: Optional[str] = None) -> None:
    Path(path).write_text(format_instance(inst, witness, comment))
