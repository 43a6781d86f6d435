"""Score one chromosome by traceback and apply the recommended insertion."""
# %%
from vershik_ga.dcsp import Chromosome, DcspInstance, cost
from vershik_ga.decisions import ScriptedSource
from vershik_ga.ga import mutate_insert
from vershik_ga.traceback import format_trace, trace
from vershik_ga.words import GroupSpec

spec = GroupSpec(10)
full = range(1, 11)
inst = DcspInstance(spec, full, full, (2, 2, 3, 4, 5, -4, 7, -6, 9, 10),
                    (2, 2, 4, 5, -4, 3, 7, -6, 10, 9))
c = Chromosome((3, -2, -3, 5, 7), (5, 2, 3, -7, 10))

# %% pin the random choices: fifth block, look right, take x6 from the floor
report = trace(inst, c, ScriptedSource([4, True, 6]))
print(format_trace(report))
print("delta", report.delta, "candidates", report.candidates)

# %%
child = mutate_insert(c, report.recommendation, ScriptedSource([]), inst)
print("zeta", c.zeta, "->", child.zeta)
print("cost", cost(inst, c), "->", cost(inst, child))
