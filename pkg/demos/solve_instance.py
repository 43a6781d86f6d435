"""Generate a problem (P) instance on V_10 and solve it with the GA."""
# %%
from vershik_ga.dcsp import is_solution
from vershik_ga.ga import DEFAULT_PARAMS, GaConfig, run
from vershik_ga.instances import InstanceSpec, generate
from vershik_ga.words import format_word, normal_form

gen = generate(InstanceSpec(10, 128, 16, 16, seed=0))
inst = gen.instance
print("Y", sorted(inst.y_set), "Z", sorted(inst.z_set))
print("hidden x", format_word(normal_form(gen.witness_x, inst.spec)))
print("hidden y", format_word(normal_form(gen.witness_y, inst.spec)))

# %%
result = run(inst, DEFAULT_PARAMS, GaConfig(sigma=2000, seed=0))
print("solved" if result.success else "timeout", "after", result.generations, "generations",
      f"({result.elapsed:.1f}s)")
if result.success:
    print("x", format_word(result.solution.chi))
    print("y", format_word(result.solution.zeta))
    print("verified", is_solution(inst, result.solution))

# %% generations at which the best cost dropped
trace = result.best_cost_trace
print([(i, c) for i, c in enumerate(trace) if i == 0 or c < trace[i - 1]])
