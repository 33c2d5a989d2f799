"""Seeded arrangement generators with degeneracies built in by construction.

Randomness comes from :class:`SplitMix64` so that a :class:`GenSpec` maps to
the same arrangement on every platform and Python version.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd
from typing import Optional

from .errors import SpecInfeasible
from .flats import HyperplaneD, canonical_hyperplane
from .geometry import BLUE, COLORS, RED, AffineMap2, Line2, Point2, canonical_line
from .oracle import check_hypotheses_nd, classify, enumerate_2d, rank
from .pseudolines import Pseudoline, segment_cap

KINDS = ("random", "grid", "near_pencil", "pencil_plus", "wiring_diagram", "bichromatic", "biased")

# Hypothesis checks above this many d-subsets are skipped.
HYPOTHESIS_CHECK_BUDGET = 200_000

_MASK = (1 << 64) - 1


class SplitMix64:
    """SplitMix64: add the golden-ratio increment to a 64-bit state, then
    mix with two xor-shift-multiply rounds."""

    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in ``[lo, hi]`` by rejection sampling."""
        span = hi - lo + 1
        if span <= 0:
            raise ValueError("empty range")
        limit = (1 << 64) - (1 << 64) % span
        while True:
            v = self.next_u64()
            if v < limit:
                return lo + v % span

    def chance(self, num: int, den: int) -> bool:
        return self.randint(0, den - 1) < num

    def choice(self, seq):
        return seq[self.randint(0, len(seq) - 1)]

    def shuffle(self, items: list) -> None:
        for i in range(len(items) - 1, 0, -1):
            j = self.randint(0, i)
            items[i], items[j] = items[j], items[i]


@dataclass(frozen=True)
class GenSpec:
    """What to generate.

    ``max_bundle_size`` caps how many elements are forced through one point;
    ``parallel_family_count`` means "number of directions" for random lines,
    "lines parallel to the base" for ``pencil_plus`` and "extra parallel
    translates" for hyperplanes.  ``color_bias`` names the one color allowed
    monochromatic points in ``biased`` output.  ``pseudo`` asks for line
    kinds to come out as straight pseudolines (no vertical or parallel
    pairs).  ``max_segments`` sets the per-pseudoline segment cap of wiring
    diagrams; when unset, diagrams that outgrow the default cap carry their
    own larger one.  ``empty_traces`` adds hyperplanes that miss the 2-flat used by
    the hyperplane search (d >= 4).
    """

    kind: str
    n: int
    d: int = 2
    seed: int = 0
    max_bundle_size: int = 2
    parallel_family_count: int = 0
    color_bias: Optional[str] = None
    pseudo: bool = False
    empty_traces: int = 0
    lattice: int = 64
    max_segments: Optional[int] = None


def generate(spec: GenSpec):
    """Build the arrangement described by ``spec``.

    Returns a list of :class:`Line2`, :class:`HyperplaneD` or
    :class:`Pseudoline` depending on the kind, ``d`` and ``pseudo``.
    """
    if spec.kind not in KINDS:
        raise SpecInfeasible(f"unknown kind {spec.kind!r}")
    rng = SplitMix64(spec.seed)
    if spec.kind == "wiring_diagram":
        return _wiring(spec, rng)
    if spec.kind in ("bichromatic", "biased"):
        return _colored(spec, rng)
    if spec.d >= 3:
        if spec.kind == "random":
            return _random_hyperplanes(spec, rng)
        if spec.kind == "pencil_plus":
            return _pencil_hyperplanes(spec, rng)
        raise SpecInfeasible(f"kind {spec.kind!r} has no hyperplane version")
    if spec.kind == "grid":
        lines = _grid(spec)
    elif spec.kind == "near_pencil":
        lines = _near_pencil(spec)
    elif spec.kind == "pencil_plus":
        lines = _pencil_plus(spec, rng)
    else:
        lines = _random_lines(spec, rng)
    if spec.pseudo:
        return _as_pseudolines(lines)
    return lines


def _as_pseudolines(lines):
    if len({l.direction_key for l in lines}) != len(lines) or any(l.b == 0 for l in lines):
        raise SpecInfeasible("parallel or vertical lines cannot be straight pseudolines")
    return [Pseudoline.from_line(l) for l in lines]


def _renumber(lines):
    return [l.with_meta(l.color, i) for i, l in enumerate(lines)]


def _grid(spec: GenSpec) -> list[Line2]:
    if spec.n < 2:
        raise SpecInfeasible("a grid needs two lines")
    k = (spec.n + 1) // 2
    lines = [canonical_line(1, 0, i) for i in range(k)]
    lines += [canonical_line(0, 1, j) for j in range(spec.n - k)]
    return _renumber(lines)


def _near_pencil(spec: GenSpec) -> list[Line2]:
    if spec.n < 3:
        raise SpecInfeasible("a near pencil needs three lines")
    lines = []
    for i in range(spec.n - 1):
        s = i // 2 + 1
        slope = s if i % 2 == 0 else -s
        lines.append(canonical_line(slope, -1, 0))  # y = slope * x
    lines.append(canonical_line(0, 1, 1))
    return _renumber(lines)


def _direction(rng: SplitMix64, bound: int, pseudo: bool) -> tuple[int, int]:
    while True:
        a = rng.randint(-bound, bound)
        b = rng.randint(-bound, bound)
        if (a, b) == (0, 0) or (pseudo and b == 0):
            continue
        g = gcd(a, b)
        a, b = a // g, b // g
        if a < 0 or (a == 0 and b < 0):
            a, b = -a, -b
        return a, b


def _not_degenerate(lines) -> bool:
    dirs = {l.direction_key for l in lines}
    if len(dirs) < 2:
        return False
    if len(dirs) == 2:
        return True
    l0 = lines[0]
    other = next(l for l in lines if not l.is_parallel(l0))
    det = l0.a * other.b - other.a * l0.b
    px = Fraction(l0.c * other.b - other.c * l0.b, det)
    py = Fraction(l0.a * other.c - other.a * l0.c, det)
    return any(l.a * px + l.b * py != l.c for l in lines)


def _random_lines(spec: GenSpec, rng: SplitMix64) -> list[Line2]:
    n, bound = spec.n, spec.lattice
    if n < 2:
        raise SpecInfeasible("need at least two lines")
    families = spec.parallel_family_count
    if families == 1:
        raise SpecInfeasible("a single direction makes every line parallel")
    if spec.pseudo and families:
        raise SpecInfeasible("pseudolines cannot come in parallel families")
    for _ in range(100):
        used_dirs: set[tuple[int, int]] = set()
        dirs = []
        while len(dirs) < families:
            dv = _direction(rng, 8, spec.pseudo)
            if dv not in used_dirs:
                used_dirs.add(dv)
                dirs.append(dv)

        def pick_dir():
            if dirs:
                return dirs[len(keys) % len(dirs)] if len(keys) < len(dirs) else rng.choice(dirs)
            while True:
                dv = _direction(rng, bound, spec.pseudo)
                if not spec.pseudo or dv not in used_dirs:
                    used_dirs.add(dv)
                    return dv

        keys: dict[tuple[int, int, int], Line2] = {}
        bundle = spec.max_bundle_size
        while len(keys) < n:
            if bundle >= 3 and n - len(keys) >= 3 and rng.chance(1, 2):
                # a concurrent bundle through a random lattice point
                px, py = rng.randint(-bound, bound), rng.randint(-bound, bound)
                size = rng.randint(3, min(bundle, n - len(keys)))
                for _ in range(size):
                    a, b = pick_dir()
                    l = canonical_line(a, b, a * px + b * py)
                    keys.setdefault(l.key, l)
            else:
                a, b = pick_dir()
                l = canonical_line(a, b, rng.randint(-bound * bound, bound * bound))
                keys.setdefault(l.key, l)
        lines = list(keys.values())[:n]
        rng.shuffle(lines)
        if _not_degenerate(lines):
            return _renumber(lines)
    raise SpecInfeasible("could not draw a non-degenerate random arrangement")


def _random_affine(rng: SplitMix64) -> AffineMap2:
    while True:
        m = [rng.randint(-3, 3) for _ in range(4)]
        if m[0] * m[3] - m[1] * m[2] != 0:
            return AffineMap2(*(Fraction(v) for v in m), Fraction(rng.randint(-5, 5)), Fraction(rng.randint(-5, 5)))


def _pencil_plus(spec: GenSpec, rng: SplitMix64) -> list[Line2]:
    """Base line first, every crossing on it shared by at least two other
    lines, plus lines parallel to the base.

    The first parallel line runs through the lowest crossing above the base
    and the second through the closest one below, so that whichever side
    the search treats as "above", the lowest crossing carries a parallel.
    """
    n = spec.n
    n_par = spec.parallel_family_count
    rest = n - 1 - n_par
    max_b = max(2, spec.max_bundle_size)
    if rest < 4:
        raise SpecInfeasible("pencil_plus needs at least four non-parallel lines besides the base")
    if spec.pseudo and n_par:
        raise SpecInfeasible("pseudolines cannot be parallel to the base")
    sizes = []
    while rest > 0:
        s = rng.randint(2, max_b)
        if rest - s == 1 or s > rest:
            s = rest if rest <= max_b else 2
        sizes.append(s)
        rest -= s
    for _ in range(100):
        xs = set()
        while len(xs) < len(sizes):
            xs.add(rng.randint(-4 * n, 4 * n))
        xs = sorted(xs)
        rng.shuffle(xs)
        lines = [canonical_line(0, 1, 0)]
        seen = {lines[0].key}
        taken = set()  # pseudolines need pairwise distinct directions
        ok = True
        for x, s in zip(xs, sizes):
            slopes = set()
            while len(slopes) < s:
                a, b = _direction(rng, 12, False)
                if a != 0 and (a, b) not in taken:
                    slopes.add((a, b))
                    if spec.pseudo:
                        taken.add((a, b))
            for a, b in sorted(slopes):
                l = canonical_line(a, b, a * x)
                ok &= l.key not in seen
                seen.add(l.key)
                lines.append(l)
        if not ok:
            continue
        above, below = _closest_crossings(lines[1:])
        heights = []
        for target in (above, below)[: n_par]:
            if target is not None:
                heights.append(target)
        while len(heights) < n_par:
            h = Fraction(rng.randint(-4 * n, 4 * n), rng.randint(1, 3))
            if h != 0 and h not in heights:
                heights.append(h)
        if len(set(heights)) != len(heights):
            continue
        lines += [canonical_line(0, 1, h) for h in heights]
        body = lines[1:]
        rng.shuffle(body)
        while True:
            frame = _random_affine(rng)
            mapped = [frame.apply_line(l) for l in [lines[0], *body]]
            if not spec.pseudo or all(l.b != 0 for l in mapped):
                break
        return _renumber(mapped)
    raise SpecInfeasible("could not place pencil_plus bundles")


def _closest_crossings(lines):
    above = below = None
    for i in range(len(lines)):
        for j in range(i + 1, len(lines)):
            l1, l2 = lines[i], lines[j]
            det = l1.a * l2.b - l2.a * l1.b
            if det == 0:
                continue
            y = Fraction(l1.a * l2.c - l2.a * l1.c, det)
            if y > 0 and (above is None or y < above):
                above = y
            elif y < 0 and (below is None or y > below):
                below = y
    return above, below


def _random_normal(rng: SplitMix64, d: int, bound: int, lead_zero: bool = False) -> tuple[int, ...]:
    while True:
        v = [rng.randint(-bound, bound) for _ in range(d)]
        if lead_zero:
            v[0] = 0
        else:
            v[0] = rng.randint(1, bound)
        if any(v):
            h = canonical_hyperplane(v, 0)
            return h.normal


def _check_nd(hs) -> bool:
    if comb(len(hs), hs[0].dim) > HYPOTHESIS_CHECK_BUDGET:
        return True
    return check_hypotheses_nd(hs).ok


def _lex_basis(normals) -> list[tuple[int, ...]]:
    """Greedy independent selection in lexicographic order (full elimination)."""
    chosen: list[tuple[int, ...]] = []
    for v in sorted(set(normals)):
        if rank(chosen + [v]) > len(chosen):
            chosen.append(v)
    return chosen


def _random_hyperplanes(spec: GenSpec, rng: SplitMix64) -> list[HyperplaneD]:
    d, n, bound = spec.d, spec.n, spec.lattice
    traps = spec.empty_traces
    if traps and d < 4:
        raise SpecInfeasible("empty traces need d >= 4")
    if n < d + traps:
        raise SpecInfeasible("too few hyperplanes")
    for _ in range(200):
        hs: dict[tuple, HyperplaneD] = {}
        out: list[HyperplaneD] = []

        def add(normal, offset):
            h = canonical_hyperplane(normal, offset)
            if (h.normal, h.offset) not in hs:
                hs[(h.normal, h.offset)] = h
                out.append(h)

        if traps:
            # d-2 normals with a zero first entry sort before every other
            # normal, so they become the 2-flat's constituents; positive
            # combinations of them then miss that flat
            basis = []
            while len(basis) < d - 2:
                v = _random_normal(rng, d, 6, lead_zero=True)
                if rank(basis + [v]) > len(basis):
                    basis.append(v)
            offsets = [rng.randint(-bound, bound) for _ in basis]
            for v, o in zip(basis, offsets):
                add(v, o)
            while len(out) < d - 2 + traps:
                mu = [rng.randint(0, 3) for _ in basis]
                if sum(1 for m in mu if m) < 2:
                    continue
                normal = [sum(m * v[i] for m, v in zip(mu, basis)) for i in range(d)]
                on_flat = sum(m * o for m, o in zip(mu, offsets))
                off = on_flat + rng.choice([-1, 1]) * rng.randint(1, bound)
                add(normal, off)
        extra = spec.parallel_family_count
        while len(out) < n - extra:
            add(_random_normal(rng, d, bound), rng.randint(-bound * bound, bound * bound))
        while len(out) < n:
            src = rng.choice(out)
            add(src.normal, src.offset + rng.randint(1, bound))
        body = out if not traps else out[: d - 2] + _shuffled(rng, out[d - 2:])
        if not traps:
            rng.shuffle(body)
        hs_list = [HyperplaneD(h.normal, h.offset, i) for i, h in enumerate(body)]
        if _check_nd(hs_list):
            return hs_list
    raise SpecInfeasible("could not draw hyperplanes satisfying the hypotheses")


def _shuffled(rng, items):
    items = list(items)
    rng.shuffle(items)
    return items


def _general_position_normals(rng: SplitMix64, d: int, count: int) -> list[tuple[int, ...]]:
    """``count`` normals, every ``d`` of them independent.

    Points ``(1, t, ..., t^(d-1))`` on the moment curve have that property
    (their determinants are Vandermonde), and an invertible integer matrix
    keeps it while hiding the structure.
    """
    while True:
        mix = [[rng.randint(-2, 2) for _ in range(d)] for _ in range(d)]
        if rank(mix) == d:
            break
    ts: set[int] = set()
    while len(ts) < count:
        ts.add(rng.randint(-count - d, count + d))
    out = []
    for t in sorted(ts):
        v = [t ** k for k in range(d)]
        out.append(canonical_hyperplane([sum(m * x for m, x in zip(row, v)) for row in mix], 0).normal)
    return out


def _pencil_hyperplanes(spec: GenSpec, rng: SplitMix64) -> list[HyperplaneD]:
    """All but a few hyperplanes through one point; the rest are parallel
    translates of the families that will cut the 2-flat, so the traces form
    a pencil and the search must move to a translate of the flat."""
    d, n, bound = spec.d, spec.n, spec.lattice
    extra = max(1, spec.parallel_family_count)
    through = n - extra
    if through < d + 1:
        raise SpecInfeasible("need at least d+1 hyperplanes through the common point")
    for _ in range(200):
        p = [Fraction(rng.randint(-bound, bound)) for _ in range(d)]
        normals = _general_position_normals(rng, d, through)
        rng.shuffle(normals)
        out = [canonical_hyperplane(v, sum(a * b for a, b in zip(v, p))) for v in normals]
        heads = _lex_basis(normals)[: d - 2]
        for k in range(extra):
            v = heads[k % len(heads)]
            o = sum(a * b for a, b in zip(v, p)) + rng.choice([-1, 1]) * rng.randint(1, bound)
            out.append(canonical_hyperplane(v, o))
        if len({(h.normal, h.offset) for h in out}) != len(out):
            continue
        hs = [HyperplaneD(h.normal, h.offset, i) for i, h in enumerate(out)]
        if _check_nd(hs):
            return hs
    raise SpecInfeasible("could not build a pencil of hyperplanes")


def _wiring(spec: GenSpec, rng: SplitMix64, colors=None) -> list[Pseudoline]:
    """Wiring diagram from a random sequence of block reversals.

    Wires sit at integer levels; column ``t`` spans ``x in [t, t+1]``.  A
    block of adjacent wires that have not yet crossed each other reverses
    inside one column, all of them meeting at the block's centre, so every
    pair crosses exactly once and blocks of three or more give multiple
    crossings.
    """
    n = spec.n
    if n < 3:
        raise SpecInfeasible("need at least three wires")
    max_block = min(max(2, spec.max_bundle_size), n - 1)  # one block of all n is a pencil
    order = list(range(n))  # order[level] = wire
    target = order[::-1]
    levels = [[(0, w)] for w in range(n)]  # per wire: (column, level) breakpoints
    t = 0
    while order != target:
        moved = False
        i = 0
        nxt = list(order)
        while i < n - 1:
            run = 1
            while i + run < n and order[i + run - 1] < order[i + run]:
                run += 1
            if run >= 2 and (rng.chance(2, 3) or (not moved and i + run >= n)):
                size = rng.randint(2, min(run, max_block))
                nxt[i:i + size] = order[i:i + size][::-1]
                moved = True
                i += size
            else:
                i += 1
        if not moved:
            continue
        pos_old = {w: l for l, w in enumerate(order)}
        for lvl_new, w in enumerate(nxt):
            lo = pos_old[w]
            if lo != lvl_new:
                if levels[w][-1] != (t, lo):
                    levels[w].append((t, lo))
                levels[w].append((t + 1, lvl_new))
        order = nxt
        t += 1
    paths = [_merge_collinear(levels[w], t) for w in range(n)]
    cap = spec.max_segments
    needed = max(len(pts) + 1 for pts in paths)
    if cap is None and needed > segment_cap():
        # large diagrams outgrow the default cap; say so on each pseudoline
        cap = needed
    out = []
    for w, pts in enumerate(paths):
        color = colors[w] if colors else None
        out.append(Pseudoline(
            tuple(Point2(Fraction(x), Fraction(y)) for x, y in pts),
            Fraction(0), Fraction(0), color, w, cap,
        ))
    return out


def _merge_collinear(pts, t_end):
    pts = list(pts)
    if pts[-1][0] != t_end:
        pts.append((t_end, pts[-1][1]))
    out = [pts[0]]
    for k in range(1, len(pts) - 1):
        (x0, y0), (x1, y1), (x2, y2) = out[-1], pts[k], pts[k + 1]
        if (y1 - y0) * (x2 - x1) != (y2 - y1) * (x1 - x0):
            out.append(pts[k])
    out.append(pts[-1])
    return out


def _colored(spec: GenSpec, rng: SplitMix64) -> list[Pseudoline]:
    if spec.kind == "biased":
        return _biased(spec, rng)
    n = spec.n
    for _ in range(100):
        colors = [rng.choice(COLORS) for _ in range(n)]
        if len(set(colors)) < 2:
            continue
        if spec.pseudo or spec.max_segments is None and n > 24:
            base = GenSpec("random", n, seed=rng.next_u64(), max_bundle_size=max(3, spec.max_bundle_size),
                           pseudo=True, lattice=spec.lattice)
            ps = generate(base)
            return [p.with_color(c) for p, c in zip(ps, colors)]
        return _wiring(spec, rng, colors)
    raise SpecInfeasible("could not color the arrangement")


def _biased(spec: GenSpec, rng: SplitMix64) -> list[Pseudoline]:
    """Straight pseudolines whose only monochromatic crossings carry
    ``color_bias``.

    The other color forms a pencil through a point ``z`` that also lies on a
    line of the favoured color, so no crossing is purely of the other color.
    """
    n = spec.n
    fav = spec.color_bias or RED
    if fav not in COLORS:
        raise SpecInfeasible(f"unknown color {fav!r}")
    other = BLUE if fav == RED else RED
    if n < 4:
        raise SpecInfeasible("a biased arrangement needs four lines")
    bound = spec.lattice
    for _ in range(100):
        k_other = rng.randint(1, max(1, (n - 1) // 2))
        k_fav = n - k_other
        zx, zy = rng.randint(-bound, bound), rng.randint(-bound, bound)
        slopes: set[Fraction] = set()

        def slope():
            while True:
                s = Fraction(rng.randint(-4 * n, 4 * n), rng.randint(1, 4))
                if s not in slopes:
                    slopes.add(s)
                    return s

        ps = []
        for _ in range(k_other):
            s = slope()
            ps.append((s, zy - s * zx, other))
        s = slope()
        ps.append((s, zy - s * zx, fav))  # the favoured line through z
        while len(ps) < n:
            s = slope()
            c = Fraction(rng.randint(-bound * 4, bound * 4), rng.randint(1, 3))
            if s * zx + c != zy:
                ps.append((s, c, fav))
        rng.shuffle(ps)
        out = [Pseudoline.straight(s, c, col, i) for i, (s, c, col) in enumerate(ps)]
        cls = classify(enumerate_2d(out), [p.color for p in out])
        if cls.monochromatic.get(fav) and not cls.monochromatic.get(other):
            return out
    raise SpecInfeasible("could not build a biased arrangement")
