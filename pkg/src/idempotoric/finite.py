"""Finite semigroups as explicit multiplication tables.

Everything here is brute force on purpose: this layer is the desk-scale
oracle against which the geometric layers' structure claims are checked.
Tables are validated associative on construction; the enumeration
functions generate every associative (or commutative) table of a given
size by backtracking with incremental associativity pruning.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError, InternalCheckError

__all__ = [
    "FiniteSemigroup",
    "GreensClasses",
    "IndexPeriod",
    "PeirceSets",
    "all_associative_tables",
    "all_commutative_tables",
    "check_smallest_criterion",
    "direct_product",
    "greens_classes",
    "idempotent_elements",
    "idempotent_power",
    "index_period",
    "is_minimum_idempotent",
    "left_zero",
    "peirce_sets",
    "right_zero",
    "smallest_idempotent_commutative",
    "standard_catalogue",
    "validate_table",
    "zmod_times",
]


@dataclass(frozen=True)
class FiniteSemigroup:
    """A validated multiplication table: table[x][y] = x·y."""

    size: int
    table: tuple[tuple[int, ...], ...]
    commutative: bool


@dataclass(frozen=True)
class IndexPeriod:
    """Eventual cycle data of one element's powers: the powers
    x^1..x^(index+period-1) are pairwise distinct and
    x^index = x^(index+period)."""

    element: int
    index: int
    period: int


@dataclass(frozen=True)
class GreensClasses:
    """Partitions by equality of principal ideals (identity adjoined):
    left ideal for L, right for R, two-sided for J, and H = L ∧ R."""

    l_classes: tuple[tuple[int, ...], ...]
    r_classes: tuple[tuple[int, ...], ...]
    j_classes: tuple[tuple[int, ...], ...]
    h_classes: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class PeirceSets:
    """How an idempotent e acts on each element, side by side.

    Field names read (left action, right action): ``unit`` means e fixes
    the element from that side (ex = x resp. xe = x), ``zero`` means e
    absorbs it (ex = e resp. xe = e).  So unit_zero = {x : ex = x, xe = e}
    and zero_unit = {x : ex = e, xe = x}.
    """

    unit_unit: tuple[int, ...]
    unit_zero: tuple[int, ...]
    zero_unit: tuple[int, ...]
    zero_zero: tuple[int, ...]


def validate_table(table) -> FiniteSemigroup:
    """Check squareness, entry range, and associativity (all n³ triples).

    A non-associative table is rejected with a violating triple named.
    """
    rows = [tuple(r) for r in table]
    n = len(rows)
    if n == 0:
        raise InputError("multiplication table must be nonempty")
    for r in rows:
        if len(r) != n:
            raise InputError("multiplication table must be square")
        for x in r:
            if isinstance(x, bool) or not isinstance(x, int) or not 0 <= x < n:
                raise InputError(f"table entry {x!r} outside 0..{n - 1}")
    t = tuple(rows)
    for a in range(n):
        for b in range(n):
            ab = t[a][b]
            for c in range(n):
                if t[ab][c] != t[a][t[b][c]]:
                    raise InputError(
                        f"table is not associative at ({a}, {b}, {c}): "
                        f"({a}·{b})·{c} = {t[ab][c]} but {a}·({b}·{c}) = {t[a][t[b][c]]}"
                    )
    comm = all(t[a][b] == t[b][a] for a in range(n) for b in range(a))
    return FiniteSemigroup(n, t, comm)


def _check_element(s: FiniteSemigroup, x) -> int:
    if isinstance(x, bool) or not isinstance(x, int) or not 0 <= x < s.size:
        raise InputError(f"element {x!r} outside 0..{s.size - 1}")
    return x


def idempotent_elements(s: FiniteSemigroup) -> tuple[int, ...]:
    """All x with x·x = x, sorted.  Never empty in a finite semigroup."""
    out = tuple(x for x in range(s.size) if s.table[x][x] == x)
    if not out:
        raise InternalCheckError("finite semigroup without an idempotent")
    return out


def smallest_idempotent_commutative(s: FiniteSemigroup) -> int:
    """Product of all idempotents of a commutative table — the minimum of
    the idempotent order e ≤ f ⇔ ef = e.  Checked against every idempotent."""
    if not s.commutative:
        raise InputError("smallest idempotent via products needs commutativity")
    ids = idempotent_elements(s)
    acc = ids[0]
    for e in ids[1:]:
        acc = s.table[acc][e]
    for e in ids:
        if s.table[acc][e] != acc:
            raise InternalCheckError("idempotent product is not absorbing")
    return acc


def index_period(s: FiniteSemigroup, x: int) -> IndexPeriod:
    """Index and period of x: where the power sequence enters its cycle."""
    x = _check_element(s, x)
    seen: dict[int, int] = {}
    y = x
    k = 1
    while y not in seen:
        seen[y] = k
        y = s.table[y][x]
        k += 1
    i = seen[y]
    return IndexPeriod(x, i, k - i)


def idempotent_power(s: FiniteSemigroup, x: int) -> int:
    """The unique idempotent among the powers of x.

    x^k with k the sole multiple of the period inside one full cycle
    [index, index + period); the result is verified to square to itself.
    """
    ip = index_period(s, x)
    k = -(-ip.index // ip.period) * ip.period
    y = x
    for _ in range(k - 1):
        y = s.table[y][x]
    if s.table[y][y] != y:
        raise InternalCheckError("cycle arithmetic produced a non-idempotent power")
    return y


def greens_classes(s: FiniteSemigroup) -> GreensClasses:
    """L, R, J, H by exhaustive principal-ideal generation.

    The adjoined identity is implicit: each ideal contains its generator.
    """
    n = s.size
    t = s.table
    left = []
    right = []
    two = []
    for x in range(n):
        lx = {x} | {t[a][x] for a in range(n)}
        rx = {x} | {t[x][a] for a in range(n)}
        jx = lx | rx | {t[a][t[x][b]] for a in range(n) for b in range(n)}
        left.append(frozenset(lx))
        right.append(frozenset(rx))
        two.append(frozenset(jx))

    def partition(key):
        groups: dict = {}
        for x in range(n):
            groups.setdefault(key(x), []).append(x)
        return tuple(sorted(tuple(g) for g in groups.values()))

    return GreensClasses(
        partition(lambda x: left[x]),
        partition(lambda x: right[x]),
        partition(lambda x: two[x]),
        partition(lambda x: (left[x], right[x])),
    )


def peirce_sets(s: FiniteSemigroup, e: int) -> PeirceSets:
    """Split S by how the idempotent e acts from each side.

    Postconditions checked: all four sets are closed under the product,
    unit_zero multiplies as the second projection and zero_unit as the
    first (hence both consist of idempotents).
    """
    e = _check_element(s, e)
    t = s.table
    if t[e][e] != e:
        raise InputError(f"element {e} is not idempotent")
    uu, uz, zu, zz = [], [], [], []
    for x in range(s.size):
        lhs, rhs = t[e][x], t[x][e]
        if lhs == x and rhs == x:
            uu.append(x)
        if lhs == x and rhs == e:
            uz.append(x)
        if lhs == e and rhs == x:
            zu.append(x)
        if lhs == e and rhs == e:
            zz.append(x)
    for part in (uu, uz, zu, zz):
        members = set(part)
        for x in part:
            for y in part:
                if t[x][y] not in members:
                    raise InternalCheckError("Peirce set not closed under product")
    for x in uz:
        if t[x][x] != x:
            raise InternalCheckError("unit_zero member is not idempotent")
        for y in uz:
            if t[x][y] != y:
                raise InternalCheckError("unit_zero product is not second projection")
    for x in zu:
        if t[x][x] != x:
            raise InternalCheckError("zero_unit member is not idempotent")
        for y in zu:
            if t[x][y] != x:
                raise InternalCheckError("zero_unit product is not first projection")
    return PeirceSets(tuple(uu), tuple(uz), tuple(zu), tuple(zz))


def _is_group(s: FiniteSemigroup, elems) -> bool:
    t = s.table
    members = set(elems)
    for x in elems:
        for y in elems:
            if t[x][y] not in members:
                return False
    unit = next(
        (u for u in elems if all(t[u][v] == v and t[v][u] == v for v in elems)),
        None,
    )
    if unit is None:
        return False
    return all(
        any(t[v][w] == unit and t[w][v] == unit for w in elems) for v in elems
    )


def is_minimum_idempotent(s: FiniteSemigroup, e: int) -> bool:
    """Whether e ≤ f (that is ef = fe = e) for every idempotent f."""
    e = _check_element(s, e)
    if s.table[e][e] != e:
        raise InputError(f"element {e} is not idempotent")
    return all(
        s.table[e][f] == e and s.table[f][e] == e for f in idempotent_elements(s)
    )


def check_smallest_criterion(s: FiniteSemigroup, e: int) -> bool:
    """(e is central) and (eS is a group) — and that is equivalent to e
    being the minimum idempotent, which is re-verified on every call.

    Why the equivalence holds in any finite semigroup: the minimal
    two-sided ideal (kernel) is completely simple; if it is the group eS
    with e central, e absorbs every idempotent, and conversely a minimum
    idempotent forces the kernel to be the single group eSe = eS.
    """
    e = _check_element(s, e)
    t = s.table
    if t[e][e] != e:
        raise InputError(f"element {e} is not idempotent")
    central = all(t[e][x] == t[x][e] for x in range(s.size))
    result = central and _is_group(s, sorted({t[e][x] for x in range(s.size)} | {e}))
    if result != is_minimum_idempotent(s, e):
        raise InternalCheckError("criterion disagrees with the idempotent order")
    return result


# --------------------------------------------------------------------------
# builders and catalogues
# --------------------------------------------------------------------------


def _check_size(n) -> int:
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise InputError("size must be an int >= 1")
    return n


def left_zero(n: int) -> FiniteSemigroup:
    n = _check_size(n)
    return validate_table([[i] * n for i in range(n)])


def right_zero(n: int) -> FiniteSemigroup:
    n = _check_size(n)
    return validate_table([list(range(n)) for _ in range(n)])


def zmod_times(n: int) -> FiniteSemigroup:
    n = _check_size(n)
    return validate_table([[(i * j) % n for j in range(n)] for i in range(n)])


def direct_product(s: FiniteSemigroup, u: FiniteSemigroup) -> FiniteSemigroup:
    m = u.size
    table = [
        [s.table[a][c] * m + u.table[b][d] for c in range(s.size) for d in range(m)]
        for a in range(s.size)
        for b in range(m)
    ]
    return validate_table(table)


def _fill_tables(n: int, cells, assign):
    """Backtracking core shared by the two enumerators.

    ``assign(t, cell, v)`` writes v (and any mirrored cell) into t and
    returns the positions written.  After each write, every associativity
    triple whose four lookups are all defined is rechecked; -1 marks an
    empty cell.
    """
    t = [[-1] * n for _ in range(n)]

    def consistent() -> bool:
        for a in range(n):
            ta = t[a]
            for b in range(n):
                ab = ta[b]
                if ab < 0:
                    continue
                tb = t[b]
                tab = t[ab]
                for c in range(n):
                    bc = tb[c]
                    if bc < 0:
                        continue
                    x = tab[c]
                    y = ta[bc]
                    if x >= 0 and y >= 0 and x != y:
                        return False
        return True

    def rec(k: int):
        if k == len(cells):
            yield validate_table([row[:] for row in t])
            return
        cell = cells[k]
        for v in range(n):
            written = assign(t, cell, v)
            if consistent():
                yield from rec(k + 1)
            for i, j in written:
                t[i][j] = -1

    yield from rec(0)


def all_associative_tables(n: int):
    """Every associative multiplication table on {0..n-1}, one semigroup
    per table (no symmetry reduction), in lexicographic table order."""
    n = _check_size(n)
    cells = [(i, j) for i in range(n) for j in range(n)]

    def assign(t, cell, v):
        i, j = cell
        t[i][j] = v
        return ((i, j),)

    yield from _fill_tables(n, cells, assign)


def all_commutative_tables(n: int):
    """Every commutative associative table on {0..n-1}: only the upper
    triangle is searched, the mirror cell is written alongside."""
    n = _check_size(n)
    cells = [(i, j) for i in range(n) for j in range(i, n)]

    def assign(t, cell, v):
        i, j = cell
        t[i][j] = v
        if i != j:
            t[j][i] = v
            return ((i, j), (j, i))
        return ((i, j),)

    yield from _fill_tables(n, cells, assign)


def standard_catalogue() -> list[tuple[str, FiniteSemigroup]]:
    """The fixed test bed: every associative table of size ≤ 4, modular
    multiplication up to 30, the left/right-zero families, and a few
    direct products."""
    cat: list[tuple[str, FiniteSemigroup]] = []
    for n in (1, 2, 3, 4):
        for i, s in enumerate(all_associative_tables(n)):
            cat.append((f"size{n}_table{i}", s))
    for n in range(1, 31):
        cat.append((f"zmod{n}_times", zmod_times(n)))
    for n in range(2, 6):
        cat.append((f"left_zero_{n}", left_zero(n)))
        cat.append((f"right_zero_{n}", right_zero(n)))
    cat.append(("z2_times_z3", direct_product(zmod_times(2), zmod_times(3))))
    cat.append(("z4_times_z6", direct_product(zmod_times(4), zmod_times(6))))
    cat.append(("left2_times_right3", direct_product(left_zero(2), right_zero(3))))
    cat.append(("left3_times_z5", direct_product(left_zero(3), zmod_times(5))))
    return cat
