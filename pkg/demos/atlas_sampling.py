"""
Covering checks on random points
================================

Draw reproducible random points, tally how their coordinates split, and run
the partition and transfer checks over the whole sample.
"""

import time
from collections import Counter

from sper_atlas import classify, partition_check, random_sample, theorem_check, valid_charts, verify_prop31

sample = random_sample(300, seed=7)

sizes = Counter()
for pt in sample:
    cls = classify(pt)
    for name in "IFGP":
        sizes[name] += len(getattr(cls, name))
print("coordinate classes over the sample:", dict(sizes))

###############################################################################
# Every point lies in exactly one triple set, and in exactly the predicted
# pair sets.
start = time.perf_counter()
report = partition_check(sample)
print(f"partition: {report.violations} violations in {time.perf_counter() - start:.1f}s")
print(report.to_dict()["header"])

###############################################################################
# Run the valuation and transfer checks for every valid chart of every point.
clause7 = Counter()
failures = 0
for pt in sample:
    for T in valid_charts(classify(pt)):
        rep = verify_prop31(pt, T)
        failures += len(rep.failures)
        clause7[rep.status_of("7")] += 1
        failures += len(theorem_check(pt, T).failures)
print("failures:", failures)
print("clause 7 outcomes:", dict(clause7))
