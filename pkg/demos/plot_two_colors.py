"""
===================================
A crossing that uses only one color
===================================

Color every pseudoline red or blue.  Unless all of them pass through one
point, some crossing has all its pseudolines in one color.  The search
reuses the triangle walk from the ordinary-point demo, with the middle
test asking "one color?" instead of "exactly two?".
"""

# %%
# Random colorings
# ----------------

from ordinary import GenSpec, find_monochromatic, generate
from ordinary.oracle import classify, enumerate_2d

ps = generate(GenSpec("bichromatic", 10, seed=8, max_bundle_size=3))
res = find_monochromatic(ps)
print(res.color, res.point, res.witnesses)
assert {ps[i].color for i in res.witnesses} == {res.color}

# %%
# Biased arrangements
# -------------------
#
# The ``biased`` generator builds arrangements where only one color has any
# monochromatic crossing, so a search that happened to guess the color
# would be caught out.  The oracle confirms the bias before the search runs.

for bias in ("red", "blue"):
    for seed in range(5):
        ps = generate(GenSpec("biased", 12, seed=seed, color_bias=bias))
        cls = classify(enumerate_2d(ps), [p.color for p in ps])
        assert cls.biased and cls.monochromatic[bias]
        res = find_monochromatic(ps)
        print(f"bias {bias:4} seed {seed}: found {res.color} at {res.point} after {len(res.trace)} steps")

# %%
# Many searches stop before the walk starts: an extreme crossing on the
# base, or the apex of the first triangle, is often one color already.
# The per-color counts for the last arrangement show why.

print({c: len(pts) for c, pts in cls.monochromatic.items()})

# %%
# A longer walk
# -------------
#
# Lines with small integer coefficients meet three or more at a time quite
# often, and that is what forces the walk past its first step.  Here we
# sample such arrangements until one needs at least two steps.

import random

from ordinary import AllConcurrent, canonical_line, embed_lines

rng = random.Random(5)
while True:
    n, lines = rng.randint(4, 10), []
    while len(lines) < n:
        l = canonical_line(rng.randint(-3, 3), rng.randint(1, 3), rng.randint(-3, 3),
                           rng.choice(["red", "blue"]), len(lines))
        if all(not l.is_parallel(m) for m in lines):
            lines.append(l)
    if len({l.color for l in lines}) < 2:
        continue
    ps, _ = embed_lines(lines)
    try:
        res = find_monochromatic(ps)
    except AllConcurrent:
        continue
    if len(res.trace) >= 2:
        break

for s in res.trace:
    print(f"step {s.step}: expect {s.expected_color}, test {s.middle_pt} on {s.base}/{s.middle}, divider {s.divider}")
print("answer", res.color, res.point, res.witnesses)
