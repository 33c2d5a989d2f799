"""
==========================================
Ordinary points among hyperplanes in R^d
==========================================

In ``d`` dimensions the analogue of an ordinary crossing is a point lying
on exactly ``d`` of the hyperplanes.  The search fixes a 2-flat ``M`` cut
out by ``d - 2`` of the hyperplanes, traces every other hyperplane on it
as a line, and runs the planar search on those lines.
"""

# %%
# Three planes through the origin plus a fourth
# ---------------------------------------------

from ordinary import canonical_hyperplane, find_ordinary_point_nd
from ordinary.geometry import format_scalar
from ordinary.oracle import classify, enumerate_nd, incidences

hs = [
    canonical_hyperplane([1, 0, 0], 0, id=0),
    canonical_hyperplane([0, 1, 0], 0, id=1),
    canonical_hyperplane([0, 0, 1], 0, id=2),
    canonical_hyperplane([1, 1, 1], 1, id=3),
]
res = find_ordinary_point_nd(hs)


def show(p):
    return "(" + ", ".join(format_scalar(x) for x in p) + ")"


print(show(res.point), res.witnesses, res.provenance)
print("incident:", incidences(hs, res.point))

# %%
# Every vertex of this arrangement is ordinary, which the oracle confirms.

cls = classify(enumerate_nd(hs), d=3)
print("vertices:", len(cls.degrees), "ordinary:", cls.ordinary_count)

# %%
# When the first choice of ``M`` is a bad one
# -------------------------------------------
#
# If some remaining hyperplane is parallel to ``M`` the search swaps one of
# the hyperplanes defining ``M`` for a parallel translate and starts over.
# Random arrangements rarely need that.  A pencil, where most hyperplanes
# share a point and a few translates sit off to the side, always does.
# The provenance field records which route was taken.

from collections import Counter

from ordinary import GenSpec, generate

for kind in ("random", "pencil_plus"):
    routes = Counter()
    for seed in range(20):
        arr = generate(GenSpec(kind, 14, d=3, seed=seed, parallel_family_count=1 + seed % 3))
        r = find_ordinary_point_nd(arr)
        assert len(incidences(arr, r.point)) == 3
        routes[r.provenance] += 1
    print(kind.ljust(12), dict(routes))

# %%
# Hyperplanes that miss ``M``
# ---------------------------
#
# From ``d = 4`` on, a hyperplane can be parallel to ``M`` without being
# parallel to any hyperplane that defines it.  Its trace is empty and it is
# simply skipped.

arr = generate(GenSpec("random", 12, d=4, seed=3, empty_traces=2))
r = find_ordinary_point_nd(arr)
print("skipped traces:", r.skipped_traces, "point:", show(r.point))

# %%
# No vertex at all
# ----------------
#
# When the normals do not span ``R^d`` the hyperplanes meet in lines or
# nothing, never in a single point.  The search says so instead of failing.

flat = [canonical_hyperplane([1, k, 0], k, id=k) for k in range(4)]
print(find_ordinary_point_nd(flat))
