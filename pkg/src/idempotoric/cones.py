"""Rational polyhedral cones from integer generators.

A cone is built by the double description method run twice: once on the
generators to get the facet inequalities (extreme rays of the dual cone),
once on those inequalities to get the extreme rays and lineality space of
the cone itself.  All arithmetic is exact; rays and facet normals are kept
as primitive integer vectors.

Faces are identified with the subsets of generator indices they contain.
``enumerate_faces`` lists every face; ``is_face`` decides a single subset
independently, by exact rational Fourier-Motzkin elimination, and returns
an integer witness functional.  The two must agree, and the test suite
leans on that.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import InputError, InternalCheckError
from .lattices import IntegerMatrix, Sublattice, kernel_lattice, rank, saturate

__all__ = [
    "Cone",
    "Face",
    "FacePoset",
    "cone_from_generators",
    "enumerate_faces",
    "face_meet",
    "is_face",
    "solve_affine",
]

Vector = tuple[int, ...]


def _dot(a, b) -> int:
    return sum(x * y for x, y in zip(a, b))


def _primitive(vec) -> Vector:
    g = 0
    for t in vec:
        g = gcd(g, t)
    if g > 1:
        return tuple(t // g for t in vec)
    return tuple(vec)


def _check_vector(v, dim) -> Vector:
    out = []
    for x in v:
        if isinstance(x, bool) or not isinstance(x, int):
            raise InputError(f"vector entries must be plain ints, got {x!r}")
        out.append(x)
    if len(out) != dim:
        raise InputError(f"vector length {len(out)} does not match dimension {dim}")
    return tuple(out)


# --------------------------------------------------------------------------
# exact affine feasibility (Fourier-Motzkin with witness recovery)
# --------------------------------------------------------------------------


def solve_affine(num_vars, equalities, inequalities):
    """Exact rational feasibility with a witness.

    ``equalities`` are pairs ``(coeffs, rhs)`` meaning ``coeffs @ x == rhs``
    and ``inequalities`` mean ``coeffs @ x >= rhs``.  Returns a tuple of
    Fractions satisfying everything, or None when the system is infeasible.
    Equalities are removed by exact Gauss-Jordan substitution, the rest by
    Fourier-Motzkin elimination; the witness is rebuilt by walking the
    eliminated variables backwards.
    """
    # -- equality reduction ------------------------------------------------
    pivots: list[tuple[int, list[Fraction], Fraction]] = []
    for coeffs, rhs in equalities:
        a = [Fraction(t) for t in coeffs]
        if len(a) != num_vars:
            raise InputError("equality row has the wrong width")
        b = Fraction(rhs)
        for pc, prow, prhs in pivots:
            c = a[pc]
            if c:
                a = [s - c * t for s, t in zip(a, prow)]
                b -= c * prhs
        j = next((idx for idx, t in enumerate(a) if t), None)
        if j is None:
            if b != 0:
                return None
            continue
        inv = a[j]
        a = [t / inv for t in a]
        b /= inv
        for k, (pc, prow, prhs) in enumerate(pivots):
            c = prow[j]
            if c:
                pivots[k] = (pc, [s - c * t for s, t in zip(prow, a)], prhs - c * b)
        pivots.append((j, a, b))
    pivot_map = {pc: (prow, prhs) for pc, prow, prhs in pivots}
    free = [v for v in range(num_vars) if v not in pivot_map]
    nfree = len(free)

    # -- substitute equalities into the inequalities, scale rows to ints ----
    infeasible = False

    def normalized(coeffs, rhs):
        nonlocal infeasible
        den = 1
        for q in list(coeffs) + [rhs]:
            den = den * q.denominator // gcd(den, q.denominator)
        ints = [int(q * den) for q in coeffs]
        r = int(rhs * den)
        g = 0
        for t in ints:
            g = gcd(g, t)
        g = gcd(g, r)
        if g > 1:
            ints = [t // g for t in ints]
            r //= g
        if not any(ints):
            if r > 0:
                infeasible = True
            return None
        return tuple(ints), r

    rows = set()
    for coeffs, rhs in inequalities:
        a = [Fraction(t) for t in coeffs]
        if len(a) != num_vars:
            raise InputError("inequality row has the wrong width")
        b = Fraction(rhs)
        for pc, (prow, prhs) in pivot_map.items():
            c = a[pc]
            if c:
                a = [s - c * t for s, t in zip(a, prow)]
                b -= c * prhs
        norm = normalized([a[v] for v in free], b)
        if infeasible:
            return None
        if norm is not None:
            rows.add(norm)

    # -- Fourier-Motzkin ----------------------------------------------------
    stages = []
    active = list(range(nfree))
    while active:

        def cost(p):
            npos = sum(1 for c, _ in rows if c[p] > 0)
            nneg = sum(1 for c, _ in rows if c[p] < 0)
            return (npos * nneg, p)

        var = min(active, key=cost)
        active.remove(var)
        stages.append((var, tuple(sorted(rows))))
        pos, neg, keep = [], [], set()
        for c, r in rows:
            if c[var] > 0:
                pos.append((c, r))
            elif c[var] < 0:
                neg.append((c, r))
            else:
                keep.add((c, r))
        for pc, pr in pos:
            for nc, nr in neg:
                alpha, beta = -nc[var], pc[var]
                comb = [alpha * x + beta * y for x, y in zip(pc, nc)]
                rhs = alpha * pr + beta * nr
                norm = normalized([Fraction(t) for t in comb], Fraction(rhs))
                if infeasible:
                    return None
                if norm is not None:
                    keep.add(norm)
        rows = keep

    # -- witness recovery ---------------------------------------------------
    values: list[Fraction | None] = [None] * nfree
    for var, snapshot in reversed(stages):
        lo = hi = None
        for c, r in snapshot:
            if not c[var]:
                continue
            rest = sum(
                (c[p] * values[p] for p in range(nfree) if p != var and c[p]),
                Fraction(0),
            )
            bound = Fraction(r - rest, c[var])
            if c[var] > 0:
                lo = bound if lo is None else max(lo, bound)
            else:
                hi = bound if hi is None else min(hi, bound)
        if lo is not None and hi is not None and lo > hi:
            raise InternalCheckError("elimination left an empty interval")
        if (lo is None or lo <= 0) and (hi is None or hi >= 0):
            values[var] = Fraction(0)
        elif lo is not None and lo > 0:
            values[var] = lo
        else:
            values[var] = hi
    solution = [Fraction(0)] * num_vars
    for p, v in enumerate(free):
        solution[v] = values[p] if values[p] is not None else Fraction(0)
    for pc, (prow, prhs) in pivot_map.items():
        solution[pc] = prhs - sum(
            (prow[v] * solution[v] for v in range(num_vars) if v != pc and prow[v]),
            Fraction(0),
        )

    # -- certify ------------------------------------------------------------
    for coeffs, rhs in equalities:
        if sum(Fraction(c) * x for c, x in zip(coeffs, solution)) != Fraction(rhs):
            raise InternalCheckError("witness violates an equality")
    for coeffs, rhs in inequalities:
        if sum(Fraction(c) * x for c, x in zip(coeffs, solution)) < Fraction(rhs):
            raise InternalCheckError("witness violates an inequality")
    return tuple(solution)


# --------------------------------------------------------------------------
# double description
# --------------------------------------------------------------------------


def _dd_rays(dim, ineqs, eqs):
    """V-description of {x : e @ x == 0 for e in eqs, a @ x >= 0 for a in ineqs}.

    Returns (rays, lineality_rows), both lists of primitive integer tuples.
    Rays carry bitmasks of the inequalities they satisfy with equality; the
    standard combinatorial adjacency test keeps the ray list minimal at
    every step.
    """
    if eqs:
        mat = IntegerMatrix.from_rows(eqs, cols=dim)
        lin = [list(r) for r in kernel_lattice(mat.transpose()).basis.entries]
    else:
        lin = [[int(i == j) for j in range(dim)] for i in range(dim)]
    rays: list[tuple[Vector, int]] = []
    for idx, a in enumerate(ineqs):
        bit = 1 << idx
        hit = next((i for i, l in enumerate(lin) if _dot(a, l)), None)
        if hit is not None:
            # the constraint cuts the lineality space: one basis vector
            # becomes a ray, the rest get projected into the hyperplane
            l0 = lin.pop(hit)
            if _dot(a, l0) < 0:
                l0 = [-t for t in l0]
            al0 = _dot(a, l0)
            lin = [
                list(_primitive([al0 * x - _dot(a, l) * y for x, y in zip(l, l0)]))
                for l in lin
            ]
            new_rays = []
            for vec, tight in rays:
                adj = _primitive([al0 * x - _dot(a, vec) * y for x, y in zip(vec, l0)])
                if not any(adj):
                    raise InternalCheckError("ray collapsed onto the lineality space")
                new_rays.append((adj, tight | bit))
            new_rays.append((_primitive(l0), bit - 1))
            rays = new_rays
            continue
        pos, neg, zero = [], [], []
        for vec, tight in rays:
            d = _dot(a, vec)
            if d > 0:
                pos.append((vec, tight, d))
            elif d < 0:
                neg.append((vec, tight, d))
            else:
                zero.append((vec, tight))
        new_rays = [(v, t) for v, t, _ in pos] + [(v, t | bit) for v, t in zero]
        for pvec, pt, pd in pos:
            for nvec, nt, nd in neg:
                common = pt & nt
                adjacent = True
                for ovec, ot in rays:
                    if ovec == pvec or ovec == nvec:
                        continue
                    if ot & common == common:
                        adjacent = False
                        break
                if not adjacent:
                    continue
                combo = _primitive([pd * x - nd * y for x, y in zip(nvec, pvec)])
                new_rays.append((combo, common | bit))
        if len({v for v, _ in new_rays}) != len(new_rays):
            raise InternalCheckError("duplicate ray generated")
        rays = new_rays
    out_rays = [tuple(v) for v, _ in rays]
    out_lin = [tuple(l) for l in lin]
    for v in out_rays:
        if any(_dot(e, v) for e in eqs) or any(_dot(a, v) < 0 for a in ineqs):
            raise InternalCheckError("double description ray violates a constraint")
    for l in out_lin:
        if any(_dot(e, l) for e in eqs) or any(_dot(a, l) for a in ineqs):
            raise InternalCheckError("lineality vector violates a constraint")
    return out_rays, out_lin


# --------------------------------------------------------------------------
# cones and faces
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class Cone:
    """A rational polyhedral cone with both descriptions attached.

    ``facets`` holds primitive integer normals of the facet-defining valid
    inequalities; it is empty exactly when the cone is a linear subspace.
    ``lineality`` is the saturated lattice spanning ``cone ∩ -cone``.
    """

    ambient_dim: int
    generators: tuple[Vector, ...]
    extreme_rays: tuple[Vector, ...]
    facets: tuple[Vector, ...]
    lineality: Sublattice
    dim: int


@dataclass(frozen=True)
class Face:
    """A face, identified by the sorted generator indices lying on it.

    ``witness`` is an integer functional vanishing on the face's generators
    and strictly positive on all others (the zero functional for the cone
    itself).
    """

    index_set: tuple[int, ...]
    dim: int
    witness: Vector


@dataclass(frozen=True)
class FacePoset:
    """All faces, sorted by (dim, index_set), with Hasse covers.

    The order is inclusion of index sets; meets exist (intersection of
    index sets) and ``bottom``/``top`` point at the unique extremes.
    """

    faces: tuple[Face, ...]
    hasse_edges: tuple[tuple[int, int], ...]
    bottom: int
    top: int

    def index_of(self, index_set) -> int:
        key = tuple(sorted(index_set))
        for i, f in enumerate(self.faces):
            if f.index_set == key:
                return i
        raise InputError(f"no face with index set {key}")


def cone_from_generators(ambient_dim, generators) -> Cone:
    """Build the cone spanned by integer generator vectors.

    Duplicate and zero generators are allowed; zero generators lie on every
    face.  Raises InputError on a dimension mismatch.
    """
    if not isinstance(ambient_dim, int) or ambient_dim < 0:
        raise InputError("ambient dimension must be a nonnegative int")
    gens = tuple(_check_vector(g, ambient_dim) for g in generators)
    dual_rays, dual_lin = _dd_rays(ambient_dim, list(gens), [])
    facets = tuple(sorted(_primitive(r) for r in dual_rays))
    rays, lin = _dd_rays(ambient_dim, list(facets), list(dual_lin))
    extreme = tuple(sorted(_primitive(r) for r in rays))
    lineality = saturate(Sublattice.span(ambient_dim, lin))
    dim = rank(IntegerMatrix.from_rows(gens, cols=ambient_dim))
    for w in facets:
        if any(_dot(w, g) < 0 for g in gens):
            raise InternalCheckError("facet inequality cut off a generator")
    span_rows = list(extreme) + list(lineality.basis.entries)
    if rank(IntegerMatrix.from_rows(span_rows, cols=ambient_dim)) != dim:
        raise InternalCheckError("ray plus lineality span has the wrong rank")
    if bool(facets) == (dim == lineality.rank):
        raise InternalCheckError("facet list inconsistent with lineality")
    return Cone(ambient_dim, gens, extreme, facets, lineality, dim)


def enumerate_faces(cone: Cone) -> FacePoset:
    """Every face of the cone, as a graded poset.

    Faces are the intersections of facet incidence sets (plus the cone
    itself); each face's dimension is the rank of the generators on it, and
    the witness functional is the sum of the facet normals through it.
    """
    r = len(cone.generators)
    top = frozenset(range(r))
    incidences = [
        frozenset(i for i, g in enumerate(cone.generators) if _dot(w, g) == 0)
        for w in cone.facets
    ]
    found = {top}
    work = [top]
    for inc in incidences:
        if inc not in found:
            found.add(inc)
            work.append(inc)
    while work:
        s = work.pop()
        for t in list(found):
            meet = s & t
            if meet not in found:
                found.add(meet)
                work.append(meet)
    faces = []
    for s in found:
        rows = [cone.generators[i] for i in sorted(s)]
        dim = rank(IntegerMatrix.from_rows(rows, cols=cone.ambient_dim))
        wit = [0] * cone.ambient_dim
        for inc, w in zip(incidences, cone.facets):
            if s <= inc:
                wit = [a + b for a, b in zip(wit, w)]
        faces.append(Face(tuple(sorted(s)), dim, tuple(wit)))
    faces.sort(key=lambda f: (f.dim, f.index_set))
    # the unique smallest face is the lineality space, carrying exactly the
    # generators that lie in it
    sets = [set(f.index_set) for f in faces]
    bottom = min(range(len(faces)), key=lambda i: len(sets[i]))
    expected_bottom = {
        i
        for i, g in enumerate(cone.generators)
        if all(_dot(w, g) == 0 for w in cone.facets)
    }
    if sets[bottom] != expected_bottom:
        raise InternalCheckError("bottom face does not match the lineality span")
    top_at = next(i for i, s in enumerate(sets) if len(s) == r)
    edges = []
    for i in range(len(faces)):
        for j in range(len(faces)):
            if i == j or not sets[i] < sets[j]:
                continue
            if any(sets[i] < sets[k] < sets[j] for k in range(len(faces))):
                continue
            if faces[j].dim != faces[i].dim + 1:
                raise InternalCheckError("face poset is not graded by dimension")
            edges.append((i, j))
    edges.sort()
    return FacePoset(tuple(faces), tuple(edges), bottom, top_at)


def is_face(cone: Cone, index_set) -> Vector | None:
    """Decide one candidate index set, independently of enumerate_faces.

    Feasibility of {w : w @ g_i == 0 on the set, w @ g_j >= 1 off it} is
    settled by exact Fourier-Motzkin elimination.  On success returns a
    primitive integer witness functional (the zero functional for the full
    set); on failure returns None.
    """
    r = len(cone.generators)
    chosen = set()
    for i in index_set:
        if isinstance(i, bool) or not isinstance(i, int) or not 0 <= i < r:
            raise InputError(f"generator index {i!r} out of range")
        chosen.add(i)
    eqs = [(cone.generators[i], 0) for i in sorted(chosen)]
    ineqs = [(cone.generators[j], 1) for j in range(r) if j not in chosen]
    sol = solve_affine(cone.ambient_dim, eqs, ineqs)
    if sol is None:
        return None
    den = 1
    for q in sol:
        den = den * q.denominator // gcd(den, q.denominator)
    w = _primitive([int(q * den) for q in sol])
    for i in range(r):
        val = _dot(w, cone.generators[i])
        if (val != 0) if i in chosen else (val <= 0):
            raise InternalCheckError("scaled witness lost its sign pattern")
    return w


def face_meet(poset: FacePoset, i: int, j: int) -> int:
    """Index of the meet (largest common face) of two faces."""
    n = len(poset.faces)
    if not (0 <= i < n and 0 <= j < n):
        raise InputError("face index out of range")
    meet = set(poset.faces[i].index_set) & set(poset.faces[j].index_set)
    return poset.index_of(tuple(sorted(meet)))
