import random

import pytest

from conftest import EX_A, EX_B, EX_CHI, random_word_letters
from vershik_ga.dcsp import (Chromosome, DcspInstance, InstanceFormatError, cost, format_instance,
                             in_subgroup, is_solution, parse_instance)
from vershik_ga.instances import InstanceSpec, generate
from vershik_ga.words import GroupSpec, invert, normal_form, pseudo_normal_form

SAMPLE = """\
# sample instance
n: 10
Y: 1 2 3 4
Z: 7 8 9 10
a: 2 2 3 4 5 -4 7 -6 9 10
b: 2 2 4 5 -4 3 7 -6 10 9
"""


class TestCost:
    def test_worked_example(self, worked_instance, worked_chromosome):
        assert cost(worked_instance, worked_chromosome) == 26

    def test_after_recommended_insertion(self, worked_instance):
        assert cost(worked_instance, Chromosome(EX_CHI, (5, 2, 3, -7, -6, 10))) == 25

    def test_a_equals_b(self):
        spec = GroupSpec(6)
        a = (1, 3, -2, 5)
        inst = DcspInstance(spec, {1}, {6}, a, a)
        assert cost(inst, Chromosome((), ())) == 0

    def test_empty_chromosome(self, worked_instance):
        expected = len(normal_form(EX_A + invert(normal_form(EX_B, worked_instance.spec)),
                                   worked_instance.spec))
        assert cost(worked_instance, Chromosome((), ())) == expected

    def test_out_of_rank(self, worked_instance):
        with pytest.raises(ValueError):
            cost(worked_instance, Chromosome((11,), ()))

    def test_pseudo_reduction_invariance(self):
        rng = random.Random(4)
        g = generate(InstanceSpec(10, 40, 6, 6, seed=4))
        spec = g.instance.spec
        for _ in range(100):
            chi = tuple(rng.randint(1, 4) * rng.choice((1, -1)) for _ in range(rng.randint(0, 12)))
            zeta = tuple(rng.randint(7, 10) * rng.choice((1, -1)) for _ in range(rng.randint(0, 12)))
            c = Chromosome(chi, zeta)
            reduced = Chromosome(pseudo_normal_form(chi, spec), pseudo_normal_form(zeta, spec))
            assert cost(g.instance, c) == cost(g.instance, reduced) >= 0


class TestIsSolution:
    def test_witness(self):
        for seed in range(5):
            g = generate(InstanceSpec(10, 30, 5, 5, seed=seed))
            assert is_solution(g.instance, g.witness)

    def test_empty_pair_on_distinct_words(self, worked_instance):
        assert not is_solution(worked_instance, Chromosome((), ()))

    def test_membership_checked_first(self):
        # (x2, x2^-1) has zero cost here but x2 is not in Y
        spec = GroupSpec(10)
        inst = DcspInstance(spec, {1, 3}, {2, 7}, (5,), (5,))
        c = Chromosome((2,), (-2,))
        assert cost(inst, c) == 0
        assert not is_solution(inst, c)


class TestInSubgroup:
    def test_cases(self):
        assert in_subgroup((), {1})
        assert in_subgroup((3, -2), {1, 2, 3, 4})
        assert not in_subgroup((5,), {1, 2, 3, 4})


class TestInstance:
    def test_b_normalized(self):
        spec = GroupSpec(4)
        inst = DcspInstance(spec, {1}, {4}, (3, 1), (3, 1))
        assert inst.b == (1, 3) and inst.a == (3, 1)

    @pytest.mark.parametrize("y_set", [(), (0,), (11,)])
    def test_bad_subsets(self, y_set):
        with pytest.raises(ValueError):
            DcspInstance(GroupSpec(10), y_set, {7}, (), ())


class TestInstanceFile:
    def test_parse(self):
        inst, witness = parse_instance(SAMPLE)
        assert inst.rank == 10
        assert inst.y_set == {1, 2, 3, 4} and inst.z_set == {7, 8, 9, 10}
        assert inst.a == EX_A
        assert witness is None

    def test_round_trip_with_witness(self):
        g = generate(InstanceSpec(10, 20, 4, 4, seed=9))
        text = format_instance(g.instance, g.witness, comment="demo")
        inst, witness = parse_instance(text)
        assert inst == g.instance
        assert witness == g.witness

    def test_key_order_free(self):
        lines = SAMPLE.splitlines()
        inst, _ = parse_instance("\n".join(reversed(lines)))
        assert inst.rank == 10

    @pytest.mark.parametrize("text,line", [
        (SAMPLE + "c: 1\n", 7),
        (SAMPLE.replace("a: 2 2", "a: 0 2"), 5),
        (SAMPLE.replace("b: 2 2", "b: 12 2"), 6),
        (SAMPLE.replace("Y: 1", "Y: 11"), 3),
        (SAMPLE.replace("n: 10", "n: ten"), 2),
        (SAMPLE + "x: 1\n", None),
        (SAMPLE + "garbage\n", 7),
        ("N: 10\n" + SAMPLE, 1),
    ])
    def test_errors_name_line(self, text, line):
        with pytest.raises(InstanceFormatError) as err:
            parse_instance(text)
        assert err.value.line == line

    def test_missing_key(self):
        with pytest.raises(InstanceFormatError, match="missing key 'b'"):
            parse_instance(SAMPLE.replace("b: 2 2 4 5 -4 3 7 -6 10 9\n", ""))
