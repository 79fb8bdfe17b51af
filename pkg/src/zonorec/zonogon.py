"""Lattice model of a zonogon and its rhombus tilings.

A spec fixes positive side multiplicities ``a = (a_1, ..., a_n)`` and n exact
planar direction vectors with strictly increasing angles in (0, pi).  The
lattice box ``Pi = prod {0..a_i}`` projects onto the zonogon ``P`` via
``I -> sum_i I_i * v_i``; a tiling is a set of unit rhombi (base point plus an
unordered direction pair) whose projection decomposes P.

Everything here is exact: direction vectors are integer (or Fraction) pairs,
so all geometric predicates (left/right, higher/lower, incidence) are integer
arithmetic.
"""

from __future__ import annotations

import random
from fractions import Fraction
from functools import cached_property
from itertools import combinations, product
from math import gcd

Point = tuple[int, ...]
Vec2 = tuple  # planar vector, integer or Fraction entries
Edge = tuple  # (base, d): the segment base -> base + e_d
Rhombus = tuple  # (base, (j, k)) with j < k


class TilingError(ValueError):
    pass


class LiftError(ValueError):
    pass


class RetryBudgetExceeded(RuntimeError):
    pass


def unit(n: int, d: int) -> Point:
    return tuple(1 if i == d else 0 for i in range(n))


def shift(p: Point, d: int, step: int = 1) -> Point:
    return tuple(c + step if i == d else c for i, c in enumerate(p))


def shift2(p: Point, d1: int, d2: int, step: int = 1) -> Point:
    return tuple(
        c + step * ((i == d1) + (i == d2)) for i, c in enumerate(p)
    )


def cross(u: Vec2, v: Vec2):
    return u[0] * v[1] - u[1] * v[0]


def default_directions(n: int) -> tuple[Vec2, ...]:
    """Integer direction vectors with strictly increasing angles in (0, pi).

    Uses the tangent-half-angle substitution t = i/(n+1-i): the vector
    (q^2 - p^2, 2pq) for t = p/q points at angle 2*atan(t), which sweeps
    (0, pi) monotonically as t runs through (0, inf).
    """
    vecs = []
    for i in range(1, n + 1):
        t = Fraction(i, n + 1 - i)
        p, q = t.numerator, t.denominator
        x, y = q * q - p * p, 2 * p * q
        g = gcd(abs(x), y)
        vecs.append((x // g, y // g))
    return tuple(vecs)


class ZonogonSpec:
    """Side multiplicities plus exact planar directions for the zonogon."""

    def __init__(self, a, vectors=None):
        a = tuple(int(x) for x in a)
        if len(a) < 3:
            raise ValueError("need n >= 3 directions")
        if any(x < 1 for x in a):
            raise ValueError("side multiplicities must be >= 1")
        self.a = a
        self.n = len(a)
        self.vectors = tuple(tuple(v) for v in (vectors or default_directions(self.n)))
        if len(self.vectors) != self.n:
            raise ValueError("need one direction vector per multiplicity")
        for v in self.vectors:
            if v[1] <= 0:
                raise ValueError("direction vectors must point into the upper half plane")
        for (i, u), (j, v) in combinations(enumerate(self.vectors), 2):
            if cross(u, v) <= 0:
                raise ValueError(f"angles not strictly increasing at directions {i},{j}")

    def __eq__(self, other):
        return (
            isinstance(other, ZonogonSpec)
            and self.a == other.a
            and self.vectors == other.vectors
        )

    def __hash__(self):
        return hash((self.a, self.vectors))

    def __repr__(self):
        return f"ZonogonSpec({list(self.a)})"

    def contains(self, p: Point) -> bool:
        return len(p) == self.n and all(0 <= c <= m for c, m in zip(p, self.a))

    def project(self, p: Point) -> Vec2:
        x = sum(c * v[0] for c, v in zip(p, self.vectors))
        y = sum(c * v[1] for c, v in zip(p, self.vectors))
        return (x, y)

    def height(self, p: Point):
        return sum(c * v[1] for c, v in zip(p, self.vectors))

    def lattice_points(self):
        return (tuple(p) for p in product(*(range(m + 1) for m in self.a)))

    @property
    def rhombus_count(self) -> int:
        return sum(self.a[i] * self.a[j] for i, j in combinations(range(self.n), 2))

    @property
    def vertex_count(self) -> int:
        return self.rhombus_count + sum(self.a) + 1

    @cached_property
    def boundary_cycle(self) -> tuple[Point, ...]:
        """Boundary vertices of P in counterclockwise order, starting at 0."""
        pts = []
        p = (0,) * self.n
        for d in range(self.n):
            for _ in range(self.a[d]):
                pts.append(p)
                p = shift(p, d, 1)
        for d in range(self.n):
            for _ in range(self.a[d]):
                pts.append(p)
                p = shift(p, d, -1)
        return tuple(pts)

    @cached_property
    def boundary_vertices(self) -> frozenset:
        return frozenset(self.boundary_cycle)

    def is_boundary_edge(self, e: Edge) -> bool:
        base, d = e
        right = all(base[w] == self.a[w] for w in range(d)) and all(
            base[w] == 0 for w in range(d + 1, self.n)
        )
        left = all(base[w] == 0 for w in range(d)) and all(
            base[w] == self.a[w] for w in range(d + 1, self.n)
        )
        return right or left

    def cubes(self):
        """All (base, (j,k,l)) unit 3-cubes contained in the box."""
        for dirs in combinations(range(self.n), 3):
            ranges = [
                range(m) if i in dirs else range(m + 1)
                for i, m in enumerate(self.a)
            ]
            for base in product(*ranges):
                yield tuple(base), dirs


def rhombus_corners(rh: Rhombus) -> tuple[Point, Point, Point, Point]:
    base, (j, k) = rh
    return (base, shift(base, j), shift(base, k), shift2(base, j, k))


def rhombus_edges(rh: Rhombus) -> tuple[Edge, Edge, Edge, Edge]:
    base, (j, k) = rh
    return ((base, j), (base, k), (shift(base, j), k), (shift(base, k), j))


class Tiling:
    """A rhombus tiling, stored as a frozenset of (base, (j,k)) rhombi."""

    def __init__(self, spec: ZonogonSpec, rhombi):
        self.spec = spec
        self.rhombi = frozenset(
            (tuple(base), (min(d), max(d))) for base, d in rhombi
        )

    def __eq__(self, other):
        return (
            isinstance(other, Tiling)
            and self.spec == other.spec
            and self.rhombi == other.rhombi
        )

    def __hash__(self):
        return hash((self.spec, self.rhombi))

    def __repr__(self):
        return f"Tiling({self.spec!r}, {len(self.rhombi)} rhombi)"

    def canonical_rhombi(self) -> list[Rhombus]:
        return sorted(self.rhombi)

    @cached_property
    def vertices(self) -> frozenset:
        out = set()
        for rh in self.rhombi:
            out.update(rhombus_corners(rh))
        return frozenset(out)

    @cached_property
    def edge_rhombi(self) -> dict:
        out: dict = {}
        for rh in self.rhombi:
            for e in rhombus_edges(rh):
                out.setdefault(e, []).append(rh)
        return out

    @cached_property
    def vertex_dirs(self) -> dict:
        """vertex -> (sorted up direction indices, sorted down direction indices)."""
        ups: dict = {}
        downs: dict = {}
        for base, d in self.edge_rhombi:
            ups.setdefault(base, set()).add(d)
            downs.setdefault(shift(base, d), set()).add(d)
        out = {}
        for v in self.vertices:
            out[v] = (tuple(sorted(ups.get(v, ()))), tuple(sorted(downs.get(v, ()))))
        return out

    def edges_at(self, v: Point):
        return self.vertex_dirs[v]

    def neighbors(self, v: Point) -> list[Point]:
        up, down = self.vertex_dirs[v]
        return [shift(v, d) for d in up] + [shift(v, d, -1) for d in down]

    def is_internal(self, v: Point) -> bool:
        return v not in self.spec.boundary_vertices

    def has_edge(self, e: Edge) -> bool:
        return e in self.edge_rhombi

    def rhombi_at(self, v: Point) -> list[Rhombus]:
        return [rh for rh in self.rhombi if v in rhombus_corners(rh)]


def phi(t: Tiling) -> int:
    """Sum of coordinate sums over the vertex set; drops by 1 per downward flip."""
    return sum(sum(v) for v in t.vertices)


class TilingReport:
    def __init__(self, violations):
        self.violations = list(violations)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __repr__(self):
        return "ok" if self.ok else f"violations: {self.violations}"


def _interiors_overlap(spec: ZonogonSpec, r1: Rhombus, r2: Rhombus) -> bool:
    # exact separating-axis test for two parallelograms
    p1 = [spec.project(c) for c in rhombus_corners(r1)]
    p2 = [spec.project(c) for c in rhombus_corners(r2)]
    axes = []
    for rh in (r1, r2):
        for d in rh[1]:
            vx, vy = spec.vectors[d]
            axes.append((-vy, vx))
    for ax in axes:
        d1 = [x * ax[0] + y * ax[1] for x, y in p1]
        d2 = [x * ax[0] + y * ax[1] for x, y in p2]
        if max(d1) <= min(d2) or max(d2) <= min(d1):
            return False
    return True


def zonogon_area2(spec: ZonogonSpec):
    """Twice the area of P (exact)."""
    return sum(
        spec.a[i] * spec.a[j] * abs(cross(spec.vectors[i], spec.vectors[j]))
        for i, j in combinations(range(spec.n), 2)
    )


def validate_tiling(t: Tiling) -> TilingReport:
    """Check the local tiling conditions; report the first witnesses found."""
    spec = t.spec
    violations = []

    for rh in t.canonical_rhombi():
        if not all(spec.contains(c) for c in rhombus_corners(rh)):
            violations.append(f"rhombus outside box: {rh}")
            return TilingReport(violations)

    expected_f = spec.rhombus_count
    if len(t.rhombi) != expected_f:
        violations.append(f"rhombus count {len(t.rhombi)} != {expected_f}")

    expected_v = spec.vertex_count
    if len(t.vertices) != expected_v:
        violations.append(f"vertex count {len(t.vertices)} != {expected_v}")

    for e in sorted(t.edge_rhombi):
        k = len(t.edge_rhombi[e])
        boundary = spec.is_boundary_edge(e)
        if boundary and k != 1:
            violations.append(f"boundary edge {e} bounds {k} rhombi, expected 1")
            break
        if not boundary and k != 2:
            violations.append(f"internal edge {e} bounds {k} rhombi, expected 2")
            break

    area = sum(
        abs(cross(spec.vectors[j], spec.vectors[k])) for _, (j, k) in t.rhombi
    )
    if area != zonogon_area2(spec):
        violations.append(f"covered area {area} != zonogon area {zonogon_area2(spec)}")

    if not violations:
        rhombi = t.canonical_rhombi()
        for r1, r2 in combinations(rhombi, 2):
            if _interiors_overlap(spec, r1, r2):
                violations.append(f"overlapping rhombi: {r1}, {r2}")
                break

    return TilingReport(violations)


def project(spec: ZonogonSpec, obj):
    """Project a lattice point, or all vertices of a tiling, to the plane."""
    if isinstance(obj, Tiling):
        return {v: spec.project(v) for v in obj.vertices}
    return spec.project(obj)


# ---------------------------------------------------------------------------
# canonical constructions


def t_min(spec: ZonogonSpec) -> Tiling:
    """The unique tiling with no downward flip, built greedily from the top.

    Maintains the boundary cycle of the untiled region; the topmost cycle
    vertex always has one ascending and one descending cycle edge, and the
    angle between them is filled with a single rhombus.  Backtracking pairs
    of cycle steps are cancelled as the region degenerates.
    """
    pts = list(spec.boundary_cycle)
    rhombi = []

    def cancel(pts):
        changed = True
        while changed and len(pts) >= 2:
            changed = False
            m = len(pts)
            for i in range(m):
                if pts[(i - 1) % m] == pts[(i + 1) % m]:
                    j = (i + 1) % m
                    for idx in sorted((i, j), reverse=True):
                        pts.pop(idx)
                    changed = True
                    break
        return pts

    while len(pts) >= 3:
        m = len(pts)
        top = max(range(m), key=lambda i: (spec.height(pts[i]), tuple(-c for c in pts[i])))
        p = pts[top]
        prev, nxt = pts[(top - 1) % m], pts[(top + 1) % m]
        dj = [d for d in range(spec.n) if p[d] == prev[d] + 1]
        dk = [d for d in range(spec.n) if p[d] == nxt[d] + 1]
        if len(dj) != 1 or len(dk) != 1 or dj[0] <= dk[0]:
            raise TilingError(f"degenerate frontier at {p}")
        j, k = dj[0], dk[0]
        base = shift2(p, j, k, -1)
        rhombi.append((base, (k, j)))
        pts[top] = base
        pts = cancel(pts)

    if len(rhombi) != spec.rhombus_count:
        raise TilingError("greedy fill did not cover the zonogon")
    return Tiling(spec, rhombi)


def t_min_vertices(spec: ZonogonSpec) -> frozenset:
    """Closed-form vertex set of t_min.

    Zero, the single-coordinate points (0,..,0,m,0,..,0) with 0 < m <= a_r,
    and for r < s all (0,..,0,b,a_{r+1},..,a_{s-1},b',0,..,0) with
    0 < b <= a_r, 0 < b' <= a_s.
    """
    n, a = spec.n, spec.a
    out = {(0,) * n}
    for r in range(n):
        for m in range(1, a[r] + 1):
            p = [0] * n
            p[r] = m
            out.add(tuple(p))
    for r in range(n):
        for s in range(r + 1, n):
            for b in range(1, a[r] + 1):
                for b2 in range(1, a[s] + 1):
                    p = [0] * n
                    p[r] = b
                    p[s] = b2
                    for w in range(r + 1, s):
                        p[w] = a[w]
                    out.add(tuple(p))
    return frozenset(out)


# line arrangements: a line is (direction r, index m, offset q) meaning
# {x : <x, v_r> = q}; regions of the arrangement are tiling vertices and
# crossings are rhombi.


def _solve_crossing(spec, r, qr, s, qs):
    vr, vs = spec.vectors[r], spec.vectors[s]
    det = cross(vr, vs)
    x = Fraction(qr * vs[1] - qs * vr[1], det)
    y = Fraction(qs * vr[0] - qr * vs[0], det)
    return (x, y)


def _has_triple_point(spec, lines_by_dir):
    dirs = [d for d in range(spec.n)]
    for r, s, u in combinations(dirs, 3):
        for qr in lines_by_dir[r]:
            for qs in lines_by_dir[s]:
                p = _solve_crossing(spec, r, qr, s, qs)
                vu = spec.vectors[u]
                val = p[0] * vu[0] + p[1] * vu[1]
                if val in lines_by_dir[u]:
                    return True
    return False


def _arrangement_tiling(spec: ZonogonSpec, lines_by_dir) -> Tiling:
    rhombi = []
    for r, s in combinations(range(spec.n), 2):
        for qr in lines_by_dir[r]:
            for qs in lines_by_dir[s]:
                p = _solve_crossing(spec, r, qr, s, qs)
                base = []
                for w in range(spec.n):
                    vw = spec.vectors[w]
                    val = p[0] * vw[0] + p[1] * vw[1]
                    base.append(sum(1 for q in lines_by_dir[w] if q < val))
                rhombi.append((tuple(base), (r, s)))
    return Tiling(spec, rhombi)


def _sample_offsets(rng, count_neg, count_pos, scale=Fraction(1)):
    """count_neg negative and count_pos positive offsets, sorted, distinct."""
    vals = set()
    while len(vals) < count_neg + count_pos:
        vals.add(Fraction(rng.randint(1, 10**6), rng.randint(1, 997)))
    vals = sorted(vals)
    neg = [-v * scale for v in reversed(vals[:count_neg])]
    pos = [v * scale for v in vals[count_neg:]]
    return neg + pos


def tiling_through_vertex(spec: ZonogonSpec, p: Point, seed=0, max_tries=64) -> Tiling:
    """Some valid tiling having p among its vertices (generic line arrangement)."""
    if not spec.contains(p):
        raise ValueError(f"{p} outside the box")
    rng = random.Random(f"{seed}|{spec.a}|{p}")
    for _ in range(max_tries):
        lines = {}
        for r in range(spec.n):
            lines[r] = _sample_offsets(rng, p[r], spec.a[r] - p[r])
        if _has_triple_point(spec, lines):
            continue
        t = _arrangement_tiling(spec, lines)
        if p not in t.vertices:
            raise TilingError(f"arrangement missed {p}")
        return t
    raise RetryBudgetExceeded("could not sample a generic arrangement")


def reflect_tiling(t: Tiling) -> Tiling:
    """Image of the tiling under the central symmetry I -> A - I."""
    a = t.spec.a
    out = []
    for base, (j, k) in t.rhombi:
        nb = tuple(a[w] - base[w] - (w == j) - (w == k) for w in range(t.spec.n))
        out.append((nb, (j, k)))
    return Tiling(t.spec, out)


def cube_bottom_faces(base: Point, dirs) -> tuple[Rhombus, ...]:
    j, k, l = dirs
    return (
        (base, (j, k)),
        (base, (k, l)),
        (shift(base, k), (j, l)),
    )


def cube_top_faces(base: Point, dirs) -> tuple[Rhombus, ...]:
    j, k, l = dirs
    return (
        (base, (j, l)),
        (shift(base, j), (k, l)),
        (shift(base, l), (j, k)),
    )


def tiling_with_cube_faces(spec: ZonogonSpec, base: Point, dirs, side: str,
                           seed=0, max_tries=64) -> Tiling:
    """A tiling containing the three bottom (or top) faces of a unit 3-cube.

    Bottom faces are the three facets through base + e_k (middle direction);
    top faces the three through base + e_j + e_l.  Construction: shrink the
    three arrangement lines tight around the anchor vertex until they cut a
    triangle no other line meets.  The top case is the bottom case of the
    centrally reflected cube.
    """
    j, k, l = dirs
    if not (0 <= j < k < l < spec.n):
        raise ValueError("directions must satisfy j < k < l")
    top_corner = tuple(base[w] + (w in dirs) for w in range(spec.n))
    if not (spec.contains(base) and spec.contains(top_corner)):
        raise ValueError("cube not contained in the box")
    if side not in ("bottom", "top"):
        raise ValueError("side must be 'bottom' or 'top'")

    if side == "top":
        rbase = tuple(spec.a[w] - base[w] - (w in dirs) for w in range(spec.n))
        return reflect_tiling(
            tiling_with_cube_faces(spec, rbase, dirs, "bottom", seed=seed,
                                   max_tries=max_tries)
        )

    anchor = shift(base, k)  # region of the origin must be this vertex
    rng = random.Random(f"cube|{seed}|{spec.a}|{base}|{dirs}")
    scale = Fraction(1, 2)
    for _ in range(max_tries):
        lines = {}
        special = {}
        for r in range(spec.n):
            lines[r] = _sample_offsets(rng, anchor[r], spec.a[r] - anchor[r])
        # indices of the three lines cut close to the origin (1-based m):
        # direction j at m = base_j + 1 (positive side), k at m = base_k + 1
        # (negative side), l at m = base_l + 1 (positive side)
        for r, m in ((j, base[j] + 1), (k, base[k] + 1), (l, base[l] + 1)):
            special[r] = m - 1  # list index
        shrink = scale
        ok = False
        for _ in range(40):
            cand = {r: list(qs) for r, qs in lines.items()}
            for r, idx in special.items():
                cand[r][idx] = lines[r][idx] * shrink
            if not _has_triple_point(spec, cand) and _triangle_is_clear(
                spec, cand, (j, special[j]), (k, special[k]), (l, special[l])
            ):
                lines = cand
                ok = True
                break
            shrink /= 2
        if not ok:
            continue
        t = _arrangement_tiling(spec, lines)
        faces = cube_bottom_faces(base, dirs)
        if all(f in t.rhombi for f in faces):
            return t
    raise RetryBudgetExceeded("could not isolate the cube triangle")


def _triangle_is_clear(spec, lines_by_dir, lj, lk, ll) -> bool:
    """No fourth line meets the closed triangle cut by the three given lines."""
    picked = [(lj[0], lines_by_dir[lj[0]][lj[1]]),
              (lk[0], lines_by_dir[lk[0]][lk[1]]),
              (ll[0], lines_by_dir[ll[0]][ll[1]])]
    corners = []
    for (r, qr), (s, qs) in combinations(picked, 2):
        corners.append(_solve_crossing(spec, r, qr, s, qs))
    for w in range(spec.n):
        vw = spec.vectors[w]
        for i, q in enumerate(lines_by_dir[w]):
            if (w, i) in ((lj[0], lj[1]), (lk[0], lk[1]), (ll[0], ll[1])):
                continue
            vals = [c[0] * vw[0] + c[1] * vw[1] - q for c in corners]
            if not (all(v > 0 for v in vals) or all(v < 0 for v in vals)):
                return False
    return True


# ---------------------------------------------------------------------------
# lifting planar rhombus decompositions back to the lattice


def lift_decomposition(spec: ZonogonSpec, planar_rhombi) -> Tiling:
    """Reconstruct the lattice tiling from exact planar rhombi.

    Each input rhombus is four planar corner points (in any order).  Edge
    vectors are matched against the spec directions, then lattice positions
    are assigned by path integration from the image of the origin.
    """
    vecs = spec.vectors
    labelled = []  # (corner, dir j, dir k) with corner + v_j + v_k the far corner
    for corners in planar_rhombi:
        pts = [tuple(Fraction(c) for c in pt) for pt in corners]
        if len(pts) != 4:
            raise LiftError(f"rhombus needs 4 corners, got {len(pts)}")
        base = min(pts)
        rest = [p for p in pts if p != base]
        found = None
        for i in range(3):
            u = tuple(rest[i][c] - base[c] for c in range(2))
            v = tuple(rest[(i + 1) % 3][c] - base[c] for c in range(2))
            w = tuple(rest[(i + 2) % 3][c] - base[c] for c in range(2))
            if (u[0] + v[0], u[1] + v[1]) == w:
                found = (u, v)
                break
        if found is None:
            raise LiftError(f"corners {pts} do not form a parallelogram")
        dirs = []
        origin = list(base)
        for u in found:
            match = None
            for d, vd in enumerate(vecs):
                if u == vd:
                    match = (d, 1)
                    break
                if u == (-vd[0], -vd[1]):
                    match = (d, -1)
                    break
            if match is None:
                raise LiftError(f"unmatched edge direction {u}")
            d, sign = match
            if sign < 0:
                origin[0] += u[0]
                origin[1] += u[1]
            dirs.append(d)
        if dirs[0] == dirs[1]:
            raise LiftError(f"degenerate rhombus directions at {base}")
        labelled.append((tuple(origin), min(dirs), max(dirs)))

    # planar graph with edges labelled by +-e_d
    adjacency: dict = {}
    for corner, j, k in labelled:
        vj, vk = vecs[j], vecs[k]
        c = corner
        cj = (c[0] + vj[0], c[1] + vj[1])
        ck = (c[0] + vk[0], c[1] + vk[1])
        cjk = (cj[0] + vk[0], cj[1] + vk[1])
        for p, q, d in ((c, cj, j), (c, ck, k), (ck, cjk, j), (cj, cjk, k)):
            adjacency.setdefault(p, []).append((q, d, 1))
            adjacency.setdefault(q, []).append((p, d, -1))

    start = (Fraction(0), Fraction(0))
    if start not in adjacency:
        raise LiftError("not covering P: image of the origin is not a vertex")
    lattice = {start: (0,) * spec.n}
    stack = [start]
    while stack:
        p = stack.pop()
        for q, d, sign in adjacency[p]:
            lp = shift(lattice[p], d, sign)
            if q in lattice:
                if lattice[q] != lp:
                    raise LiftError(f"inconsistent lift at planar point {q}")
            else:
                lattice[q] = lp
                stack.append(q)
    if len(lattice) != len(adjacency):
        raise LiftError("not covering P: decomposition is disconnected")

    rhombi = []
    for corner, j, k in labelled:
        base = lattice[corner]
        if not spec.contains(base):
            raise LiftError(f"not covering P: lifted base {base} outside the box")
        rhombi.append((base, (j, k)))
    t = Tiling(spec, rhombi)
    report = validate_tiling(t)
    if not report.ok:
        raise LiftError(f"not covering P: {report.violations[0]}")
    return t
