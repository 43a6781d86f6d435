"""Normal forms, pseudo-normal forms and roof/floor sets of words in V_n."""
# %%
from vershik_ga.words import (GroupSpec, floor, format_word, normal_form, parse_word,
                              pseudo_normal_form, roof, run_length)

spec = GroupSpec(8)
u = parse_word("6 8 -1 2 -8 -2 6 4 5", spec)
print("u            ", format_word(u))
print("pseudo-normal", format_word(pseudo_normal_form(u, spec)))
print("normal form  ", format_word(normal_form(u, spec)))

# %% run-length encoding of the normal form: (index, exponent) pairs
print(run_length(normal_form(u, spec)))

# %% letters that can be cancelled from the right (roof) or the left (floor)
v = parse_word("-1 2 6 -5 4 1", GroupSpec(10))
print("roof ", sorted(roof(v, GroupSpec(10))))
print("floor", sorted(floor(v, GroupSpec(10))))
