"""
=======================================
An ordinary point in a line arrangement
=======================================

Any finite set of lines in the plane that are neither all parallel nor all
through one point has a crossing where exactly two of them meet.  This demo
builds a few arrangements, asks for such a point and checks the answer
against a brute-force enumeration of every crossing.
"""

# %%
# A hand-made arrangement
# -----------------------
#
# Lines are ``a*x + b*y = c`` with rational coefficients.  Strings such as
# ``"3/2"`` are read exactly.

from fractions import Fraction

from ordinary import canonical_line, find_ordinary_point_2d, parse_scalar
from ordinary.oracle import enumerate_2d, incidences

lines = [
    canonical_line(0, 1, 0, id=0),   # y = 0
    canonical_line(1, 0, 0, id=1),   # x = 0
    canonical_line(1, -1, 0, id=2),  # y = x
    canonical_line(1, 1, 2, id=3),   # x + y = 2
    canonical_line(1, 0, parse_scalar("3/2"), id=4),
]

res = find_ordinary_point_2d(lines)
print("point     ", res.point)
print("witnesses ", res.witnesses)
print("found by  ", res.provenance)

# %%
# The oracle lists every crossing together with the lines on it.  The
# point returned above should be on exactly two.

imap = enumerate_2d(lines)
for p, on in imap.entries:
    print(f"({p[0]}, {p[1]})".ljust(14), on)
assert incidences(lines, res.point) == sorted(res.witnesses)

# %%
# Generated arrangements
# ----------------------
#
# The generators are seeded, so these are the same on every run.  A near
# pencil has all lines but one through the origin; a grid has two parallel
# families.

from ordinary import GenSpec, generate

for kind in ("near_pencil", "grid", "pencil_plus", "random"):
    arr = generate(GenSpec(kind, 12, seed=5, max_bundle_size=4))
    r = find_ordinary_point_2d(arr)
    ok = len(incidences(arr, r.point)) == 2
    print(f"{kind:12} {r.provenance:16} {str(r.point[0]):>8} {str(r.point[1]):>8}  checked={ok}")

# %%
# A picture
# ---------
#
# ``render_svg`` draws the lines and circles the chosen point.  Open the
# file in a browser.

from ordinary.render import render_svg

arr = generate(GenSpec("pencil_plus", 9, seed=2, parallel_family_count=2))
r = find_ordinary_point_2d(arr)
with open("planar_ordinary_point.svg", "w") as f:
    f.write(render_svg(arr, highlight=r.point))
print("wrote planar_ordinary_point.svg, point", r.point)
