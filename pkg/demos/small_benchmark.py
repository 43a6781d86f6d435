"""A seeded benchmark over a few instances, summarised by s interval."""
# %%
from vershik_ga import bench

suite = bench.parse_suite("""
sigma 2000
group s
instance gen n=10 la=64 lx=8 ly=8 id=short repeat 3 seed 0
instance gen n=10 la=128 lx=16 ly=16 id=long repeat 3 seed 0
""")
records = bench.run_suite(suite, progress=lambda r: print(r.instance_id, r.seed, r.generations))

# %%
print(bench.format_summary(bench.summarize(records, "s")))
print(bench.format_summary(bench.summarize(records, "instance")))

# %% the raw records round-trip through CSV
text = bench.records_to_csv(records)
assert bench.records_from_csv(text) == records
print(text)
