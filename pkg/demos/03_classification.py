# The classification: which (P, Q, R) give strong-divisibility sequences,
# checked against brute force on a whole box.

from collections import Counter

from sdseq import Params, SearchBox, classify, detect_period, expected_period, gen_sequence, sweep

for p in (Params(1, -1, 1), Params(0, -1, 5), Params(-1, 0, 1), Params(-1, 1, 1), Params(0, -1, 0), Params(2, 3, 1)):
    c = classify(p)
    print(p, c.strong_divisible, c.names, "period" if expected_period(c) else "", expected_period(c) or "")

# All-ones sequence from a triple with R != P: it is U(1, 0) in disguise
print(Params(5, 4, 1), classify(Params(5, 4, 1)).names, gen_sequence(Params(5, 4, 1), 6).values)

report = sweep(SearchBox(10, 10, 10, depth=60))
print(f"{report.tested} triples, {len(report.survivors)} survivors, mismatches: {list(report.mismatches)}")
print(Counter(name for _, c in report.survivors for name in c.names))

# Every survivor with R != P is eventually periodic
for p, c in report.survivors:
    if p.R != p.P and not c.has("LucasCoprime"):
        info = detect_period(gen_sequence(p, 60).values)
        print(p, c.names, (info.preperiod, info.period))
        break
