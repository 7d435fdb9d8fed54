"""Isomorphism testing, canonical forms, and exhaustive enumeration.

Isomorphisms are relabelings fixing 0 (the constant must map to itself).
The canonical form of an algebra is the lexicographically least flattened
table over all such relabelings, so two algebras are isomorphic exactly
when their canonical forms coincide; this brute-force definition is the
right tool at enumeration scale, where (n-1)! stays tiny.

Enumeration builds the catalog level by level: every algebra of order n
contains a subalgebra of order n-1, so each isomorphism class of order n
shows up as a one-element extension of some canonical representative of
order n-1.  The extension's new row and column are filled cell by cell in
row-major order with incremental axiom checks, completed tables get a
final full validation, and classes are deduplicated via canonical forms.
Levels are cached, so census and uniqueness checks reuse the same run.
"""

from __future__ import annotations

import warnings
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations

from .construct import m_chain
from .core import BckAlgebra, CayleyTable, validate

DEFAULT_ENUM_BUDGET = 6
_CANONICAL_ORDER_LIMIT = 10

Flat = tuple[int, ...]


def relabel(table: CayleyTable, perm: tuple[int, ...]) -> CayleyTable:
    """Apply a 0-fixing permutation to arguments and values of a table."""
    n = table.order
    if len(perm) != n or sorted(perm) != list(range(n)):
        raise ValueError(f"not a permutation of 0..{n - 1}: {perm}")
    if perm[0] != 0:
        raise ValueError("relabelings must fix element 0")
    rows = [[0] * n for _ in range(n)]
    old = table.rows
    for x in range(n):
        for y in range(n):
            rows[perm[x]][perm[y]] = perm[old[x][y]]
    return CayleyTable(tuple(tuple(row) for row in rows))


_PERM_CACHE: dict[int, tuple[tuple[Flat, Flat], ...]] = {}


def _perms_fixing_zero(n: int) -> tuple[tuple[Flat, Flat], ...]:
    """All (sigma, rows-of-sigma-inverse) pairs with sigma(0) = 0."""
    cached = _PERM_CACHE.get(n)
    if cached is None:
        pairs = []
        for tail in permutations(range(1, n)):
            sigma = (0,) + tail
            inverse = [0] * n
            for i, image in enumerate(sigma):
                inverse[image] = i
            inv_rows = tuple(i * n for i in inverse)
            pairs.append((sigma, inv_rows + tuple(inverse)))
        cached = _PERM_CACHE[n] = tuple(pairs)
    return cached


def _canonical_flat(flat: Flat, n: int) -> Flat:
    """Lexicographic minimum of the flattened table over 0-fixing relabelings."""
    best = flat
    for sigma, inv in _perms_fixing_zero(n):
        # inv packs n row offsets followed by the inverse permutation
        cand = tuple(
            sigma[flat[inv[i] + inv[n + j]]] for i in range(n) for j in range(n)
        )
        if cand < best:
            best = cand
    return best


def canonical_form(algebra: BckAlgebra) -> CayleyTable:
    """The canonical table of the algebra's isomorphism class.

    Cost grows factorially with the order; use :func:`find_isomorphism`
    for pairwise tests on larger algebras.
    """
    n = algebra.order
    if n > _CANONICAL_ORDER_LIMIT:
        raise ValueError(
            f"canonical_form is factorial in the order (limit "
            f"{_CANONICAL_ORDER_LIMIT}); use find_isomorphism for pairwise tests"
        )
    flat = _canonical_flat(algebra.table.flat(), n)
    rows = tuple(tuple(flat[x * n : (x + 1) * n]) for x in range(n))
    return CayleyTable(rows)


def _signatures(table: CayleyTable) -> list[tuple[int, int, int]]:
    """Per-element relabel-invariant keys: up-set size, down-set size, fixers."""
    t = table.rows
    n = table.order
    sigs = []
    for x in range(n):
        upset = sum(1 for y in range(n) if t[x][y] == 0)
        downset = sum(1 for y in range(n) if t[y][x] == 0)
        fixed = sum(1 for y in range(n) if t[x][y] == x)
        sigs.append((upset, downset, fixed))
    return sigs


def find_isomorphism(a: BckAlgebra, b: BckAlgebra) -> tuple[int, ...] | None:
    """A 0-fixing permutation relabeling a onto b exactly, or None.

    Quick invariant comparisons (order, commuting report, per-element
    signature multisets) reject most non-isomorphic pairs before the
    backtracking search starts.
    """
    n = a.order
    if n != b.order:
        return None
    if a.commuting_report() != b.commuting_report():
        return None
    sig_a = _signatures(a.table)
    sig_b = _signatures(b.table)
    if sorted(sig_a) != sorted(sig_b):
        return None

    ta = a.table.rows
    tb = b.table.rows
    candidates = {
        x: [u for u in range(n) if sig_b[u] == sig_a[x]] for x in range(1, n)
    }
    # assign rare elements first to fail fast
    order = sorted(range(1, n), key=lambda x: (len(candidates[x]), x))
    sigma = [-1] * n
    sigma[0] = 0
    inverse = [-1] * n
    inverse[0] = 0
    assigned = [0]

    def consistent(x: int, u: int) -> bool:
        for y in assigned:
            for s, t in ((x, y), (y, x)):
                v = ta[s][t]
                w = tb[sigma[s]][sigma[t]]
                if sigma[v] >= 0:
                    if sigma[v] != w:
                        return False
                elif inverse[w] >= 0:
                    return False
        for s in assigned:
            for t in assigned:
                if ta[s][t] == x and tb[sigma[s]][sigma[t]] != u:
                    return False
        return True

    def search(k: int) -> bool:
        if k == len(order):
            return True
        x = order[k]
        for u in candidates[x]:
            if inverse[u] >= 0:
                continue
            sigma[x] = u
            inverse[u] = x
            assigned.append(x)
            if consistent(x, u) and search(k + 1):
                return True
            assigned.pop()
            sigma[x] = -1
            inverse[u] = -1
        return False

    if search(0):
        return tuple(sigma)
    return None


def is_isomorphic(a: BckAlgebra, b: BckAlgebra) -> bool:
    return find_isomorphism(a, b) is not None


# --- enumeration -----------------------------------------------------------


def _flat_valid(t: list[list[int]], n: int) -> bool:
    """Full axiom check on a completed working table (no witness needed)."""
    for x in range(n):
        for y in range(x + 1, n):
            if t[x][y] == 0 and t[y][x] == 0:
                return False
    for x in range(n):
        tx = t[x]
        for y in range(n):
            if t[tx[tx[y]]][y] != 0:
                return False
    for x in range(n):
        tx = t[x]
        for y in range(n):
            ta = t[tx[y]]
            for z in range(n):
                if t[ta[tx[z]]][t[z][y]] != 0:
                    return False
    return True


def _partial_ok(t: list[list[int]], n: int, x: int, y: int) -> bool:
    """Check axiom instances touching cell (x, y) that are fully determined.

    Unknown cells hold -1; instances that still involve one are skipped
    (the completed table gets a full validation later).  Sound pruning:
    only definite violations reject a branch.
    """
    v = t[x][y]
    if v == 0 and x != y and t[y][x] == 0:
        return False  # BCK5
    if t[v][x] > 0:
        return False  # x*y <= x must hold
    c = t[v][y]
    if c >= 0 and t[c][v] > 0:
        return False  # (x*y)*y <= x*y must hold
    for q in range(n):
        r = t[x][q]
        if r >= 0:
            s = t[x][r]
            if s >= 0 and t[s][q] > 0:
                return False  # BCK2 at (x, q)
        r = t[q][y]
        if r >= 0:
            s = t[q][r]
            if s >= 0 and t[s][y] > 0:
                return False  # BCK2 at (q, y)
    for z in range(n):
        a = t[x][y]
        b = t[x][z]
        d = t[z][y]
        if b >= 0 and d >= 0:
            c = t[a][b]
            if c >= 0 and t[c][d] > 0:
                return False  # BCK1 at (x, y, z)
        a = t[x][z]
        d = t[y][z]
        if a >= 0 and d >= 0:
            c = t[a][t[x][y]]
            if c >= 0 and t[c][d] > 0:
                return False  # BCK1 at (x, z, y)
        a = t[z][y]
        b = t[z][x]
        if a >= 0 and b >= 0:
            c = t[a][b]
            if c >= 0 and t[c][t[x][y]] > 0:
                return False  # BCK1 at (z, y, x)
    return True


def _extensions(base: Flat, m: int) -> list[Flat]:
    """All valid labeled order-(m+1) tables whose leading block is ``base``.

    The fresh element e = m gets row and column filled in row-major order:
    first the column cells (x, e), then the row cells (e, y).  Column
    values must satisfy x*e <= x within the base (or be e itself), and row
    values w must satisfy w*e = 0 against the already-chosen column, which
    keeps the branching narrow.
    """
    n = m + 1
    e = m
    t = [[-1] * n for _ in range(n)]
    for i in range(m):
        for j in range(m):
            t[i][j] = base[i * m + j]
    t[0][e] = 0
    t[e][0] = e
    t[e][e] = 0
    if m == 1:
        flat = tuple(v for row in t for v in row)
        return [flat] if _flat_valid(t, n) else []

    col_candidates = {
        x: [u for u in range(m) if base[u * m + x] == 0] + [e]
        for x in range(1, m)
    }
    cells = [(x, e) for x in range(1, m)] + [(e, y) for y in range(1, m)]
    found: list[Flat] = []

    def fill(k: int) -> None:
        if k == len(cells):
            if _flat_valid(t, n):
                found.append(tuple(v for row in t for v in row))
            return
        x, y = cells[k]
        if y == e:
            values = col_candidates[x]
        else:
            values = [u for u in range(m) if t[u][e] == 0] + [e]
        for v in values:
            t[x][y] = v
            if _partial_ok(t, n, x, y):
                fill(k + 1)
        t[x][y] = -1

    fill(0)
    return found


def _extend_and_canonicalize(args: tuple[tuple[Flat, ...], int]) -> set[Flat]:
    bases, m = args
    out: set[Flat] = set()
    for base in bases:
        for flat in _extensions(base, m):
            out.add(_canonical_flat(flat, m + 1))
    return out


_LEVEL_CACHE: dict[int, tuple[Flat, ...]] = {1: ((0,),)}


def _level(n: int, jobs: int = 1) -> tuple[Flat, ...]:
    """Canonical flats of all isomorphism classes of order n, sorted."""
    cached = _LEVEL_CACHE.get(n)
    if cached is not None:
        return cached
    bases = _level(n - 1, jobs)
    if jobs > 1 and len(bases) >= 2 * jobs:
        chunks = [
            (bases[i::jobs], n - 1) for i in range(jobs)
        ]
        merged: set[Flat] = set()
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part in pool.map(_extend_and_canonicalize, chunks):
                merged |= part
    else:
        merged = _extend_and_canonicalize((bases, n - 1))
    result = tuple(sorted(merged))
    _LEVEL_CACHE[n] = result
    return result


def enumerate_algebras(
    n: int, budget: int | None = None, jobs: int = 1
) -> list[BckAlgebra]:
    """One validated representative per isomorphism class of order n.

    Representatives are canonical forms in lexicographic order, computed
    deterministically regardless of ``jobs``.  Orders above the budget
    (default 6) raise; raise the budget explicitly to go higher, with the
    caveat that runtimes beyond 6 are unvalidated.
    """
    if n < 1:
        raise ValueError("order must be at least 1")
    limit = DEFAULT_ENUM_BUDGET if budget is None else budget
    if n > limit:
        raise ValueError(
            f"order {n} exceeds the enumeration budget {limit}; pass "
            f"budget={n} to allow it (runtime above "
            f"{DEFAULT_ENUM_BUDGET} is unvalidated)"
        )
    if n > DEFAULT_ENUM_BUDGET:
        warnings.warn(
            f"enumerating order {n}: runtime above order "
            f"{DEFAULT_ENUM_BUDGET} is unvalidated",
            stacklevel=2,
        )
    algebras = []
    for flat in _level(n, jobs):
        rows = tuple(tuple(flat[x * n : (x + 1) * n]) for x in range(n))
        algebras.append(validate(CayleyTable(rows)))
    return algebras


def degree_census(n: int, budget: int | None = None, jobs: int = 1) -> dict[Fraction, int]:
    """Map each commuting degree to its isomorphism-class count at order n."""
    counts: Counter[Fraction] = Counter()
    for algebra in enumerate_algebras(n, budget=budget, jobs=jobs):
        counts[algebra.commuting_degree()] += 1
    return dict(counts)


@dataclass(frozen=True)
class UniqueMinimumReport:
    """Evidence that exactly one order-n class attains the minimum degree."""

    order: int
    degree: Fraction
    class_count: int
    representative: BckAlgebra
    witness: tuple[int, ...]


def verify_unique_minimum(n: int, budget: int | None = None) -> UniqueMinimumReport:
    """Check the minimum commuting degree (3n-2)/n^2 is attained exactly once.

    Finds the classes at the minimum among all order-n algebras and
    produces the permutation witnessing that the single representative is
    the chain algebra.  Raises if the count differs from one or no witness
    exists, since either outcome would falsify the uniqueness claim.
    """
    degree = Fraction(3 * n - 2, n * n)
    hits = [
        a
        for a in enumerate_algebras(n, budget=budget)
        if a.commuting_degree() == degree
    ]
    if len(hits) != 1:
        raise RuntimeError(
            f"expected a unique order-{n} class at degree {degree}, found "
            f"{len(hits)}"
        )
    representative = hits[0]
    witness = find_isomorphism(representative, m_chain(n))
    if witness is None:
        raise RuntimeError(
            f"order-{n} minimum-degree representative is not isomorphic to "
            f"the chain algebra"
        )
    return UniqueMinimumReport(n, degree, 1, representative, witness)


def subalgebra(algebra: BckAlgebra, elements: tuple[int, ...]) -> BckAlgebra:
    """Restrict to a closed subset containing 0, relabeling order-preservingly."""
    subset = sorted(set(elements))
    if not subset or subset[0] != 0:
        raise ValueError("a subalgebra must contain element 0")
    index = {v: i for i, v in enumerate(subset)}
    t = algebra.table.rows
    rows = []
    for x in subset:
        row = []
        for y in subset:
            v = t[x][y]
            if v not in index:
                raise ValueError(f"subset not closed: {x}*{y} = {v}")
            row.append(index[v])
        rows.append(tuple(row))
    return validate(CayleyTable(tuple(rows)))


def find_maximal_subalgebra(algebra: BckAlgebra) -> tuple[int, ...]:
    """A closed subset of size n-1 containing 0, dropping the highest label possible.

    Every BCK-algebra of order n >= 2 has one; failure to find one would
    falsify that fact, so it raises loudly instead of returning quietly.
    """
    n = algebra.order
    if n < 2:
        raise ValueError("order must be at least 2")
    t = algebra.table.rows
    for removed in range(n - 1, 0, -1):
        keep = [x for x in range(n) if x != removed]
        if all(t[x][y] != removed for x in keep for y in keep):
            return tuple(keep)
    raise RuntimeError(
        f"no subalgebra of order {n - 1} found; this contradicts the "
        f"maximal-subalgebra fact for BCK-algebras"
    )
