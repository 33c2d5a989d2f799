"""
=================================
Shrinking triangles on pseudolines
=================================

Pseudolines here are x-monotone polylines that cross each other exactly
once.  Without straightness the planar sort-and-scan no longer applies,
so the search instead keeps a triangle bounded by three pseudolines and
repeatedly cuts it down until the middle crossing on its base is ordinary.
Each step is recorded, which makes the search easy to follow.
"""

# %%
# A small wiring diagram
# ----------------------
#
# ``wiring_diagram`` permutes wires by adjacent swaps.  ``max_bundle_size``
# lets several wires swap at one point, which makes non-ordinary crossings.

from ordinary import GenSpec, find_ordinary_pseudoline, generate
from ordinary.oracle import classify, enumerate_2d, incidences

ps = generate(GenSpec("wiring_diagram", 12, seed=17, max_bundle_size=6))
cls = classify(enumerate_2d(ps))
print(f"{len(ps)} wires, {len(cls.degrees)} crossings, {cls.ordinary_count} ordinary")

point, witnesses, trace = find_ordinary_pseudoline(ps)
print("ordinary crossing", point, "of wires", witnesses)
assert incidences(ps, point) == sorted(witnesses)

# %%
# The trace
# ---------
#
# At every step the triangle has an apex and a base.  ``middle`` is the
# pseudoline from the apex to the point tested on the base; if that point
# is not ordinary another pseudoline through it, the divider, replaces one
# side.  No divider is used twice.

for s in trace:
    print(f"step {s.step}: base {s.base}, sides {s.left_side}/{s.right_side}, "
          f"middle {s.middle} at {s.middle_pt}, divider {s.divider}")
print("trace length", len(trace), "<= n =", len(ps))

# %%
# Straight lines work too
# -----------------------
#
# ``embed_lines`` turns a line arrangement into straight pseudolines,
# shearing first if any line is vertical.  Straight arrangements tend to
# finish in very few steps.

from ordinary import embed_lines
from ordinary.pseudolines import unshear

from ordinary import canonical_line

lines = [canonical_line(1, 0, 0, id=0), canonical_line(0, 1, 0, id=1),
         canonical_line(1, -1, 0, id=2), canonical_line(1, 1, 3, id=3)]
straight, shear = embed_lines(lines)
point, witnesses, trace = find_ordinary_pseudoline(straight)
print("shear", shear, "sheared point", point, "original point", unshear(point, shear))

# %%
# A picture of the first arrangement, with the answer circled.

from ordinary.render import render_svg

point, _, _ = find_ordinary_pseudoline(ps)
with open("pseudoline_triangles.svg", "w") as f:
    f.write(render_svg(ps, highlight=point))
