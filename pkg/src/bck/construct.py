"""Constructions that generate new BCK-algebras from old ones.

Two constructions drive everything here:

* the union ``A | B`` glues algebras at their shared 0 and makes elements
  of different components incomparable (x*y = x across components);
* the top extension ``A + T`` adjoins a new greatest element T with
  x*T = 0 and T*x = T.

Both shift the commuting-pair count by a fixed amount (add 2n+1 for a
union with the order-2 algebra, add 3 for a top extension), which is what
lets the family generator cover every achievable commuting degree at each
order, and the synthesizer hit any target rational exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import (
    PI,
    TC,
    TWO,
    BckAlgebra,
    CayleyTable,
    CommutingReport,
    standard_algebras,
    validate,
)

LEAF_NAMES = ("2", "PI", "TC")
OP_EXTEND = "+T"
OP_UNION2 = "+2"

_PRETTY = {OP_EXTEND: "⊕⊤", OP_UNION2: "⊔2"}  # ⊕⊤ / ⊔2


class ExprParseError(ValueError):
    """A construction-expression string does not match the grammar."""


@dataclass(frozen=True)
class ConstructionExpr:
    """Expression tree recording how an algebra was built.

    Leaves are the standard algebras ``2``, ``PI``, ``TC``; internal nodes
    are the unary constructors ``+T`` (top extension) and ``+2`` (union
    with the order-2 algebra).  Text form follows the grammar

        expr := "2" | "PI" | "TC" | "(" expr "+T" ")" | "(" expr "+2" ")"

    with whitespace insignificant.
    """

    head: str
    base: ConstructionExpr | None = None

    def __post_init__(self) -> None:
        if self.head in LEAF_NAMES:
            if self.base is not None:
                raise ValueError(f"leaf {self.head!r} cannot have a base")
        elif self.head in (OP_EXTEND, OP_UNION2):
            if self.base is None:
                raise ValueError(f"operator {self.head!r} requires a base")
        else:
            raise ValueError(f"unknown expression head {self.head!r}")

    @staticmethod
    def leaf(name: str) -> ConstructionExpr:
        return ConstructionExpr(name)

    def extend_top(self) -> ConstructionExpr:
        return ConstructionExpr(OP_EXTEND, self)

    def union2(self) -> ConstructionExpr:
        return ConstructionExpr(OP_UNION2, self)

    @property
    def order(self) -> int:
        """Order of the algebra the expression evaluates to."""
        if self.base is None:
            return 2 if self.head == "2" else 3
        return self.base.order + 1

    def evaluate(self) -> BckAlgebra:
        if self.base is None:
            return standard_algebras()[self.head]
        inner = self.base.evaluate()
        if self.head == OP_EXTEND:
            return extend_top(inner)
        return union(inner, TWO)

    def steps(self) -> list[BckAlgebra]:
        """Algebras along the construction, leaf first."""
        if self.base is None:
            return [self.evaluate()]
        chain = self.base.steps()
        inner = chain[-1]
        if self.head == OP_EXTEND:
            chain.append(extend_top(inner))
        else:
            chain.append(union(inner, TWO))
        return chain

    def __str__(self) -> str:
        if self.base is None:
            return self.head
        inner = str(self.base)
        if self.base.base is not None:
            inner = f"({inner})"
        return f"{inner}{self.head}"

    def pretty(self) -> str:
        """Unicode rendering, e.g. ``(PI⊕⊤)⊔2``."""
        if self.base is None:
            return self.head
        inner = self.base.pretty()
        if self.base.base is not None:
            inner = f"({inner})"
        return f"{inner}{_PRETTY[self.head]}"


def _tokenize(text: str) -> list[str]:
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch in "()":
            tokens.append(ch)
            i += 1
        elif text.startswith(OP_EXTEND, i) or text.startswith(OP_UNION2, i):
            tokens.append(text[i : i + 2])
            i += 2
        elif text.startswith("PI", i):
            tokens.append("PI")
            i += 2
        elif text.startswith("TC", i):
            tokens.append("TC")
            i += 2
        elif ch == "2":
            tokens.append("2")
            i += 1
        else:
            raise ExprParseError(f"unexpected character {ch!r} at position {i}")
    return tokens


def parse_expr(text: str) -> ConstructionExpr:
    """Parse a construction expression.

    Accepts the parenthesized grammar as well as an unparenthesized
    trailing operator (the style used for printing, e.g. ``(PI+T)+2``);
    the Unicode forms ⊕⊤ / ⊔2 are also recognized.
    """
    normalized = text.replace("⊕⊤", OP_EXTEND).replace(
        "⊔2", OP_UNION2
    )
    tokens = _tokenize(normalized)
    pos = 0

    def parse_node() -> ConstructionExpr:
        nonlocal pos
        if pos >= len(tokens):
            raise ExprParseError("unexpected end of input")
        tok = tokens[pos]
        if tok in LEAF_NAMES:
            pos += 1
            expr = ConstructionExpr.leaf(tok)
        elif tok == "(":
            pos += 1
            expr = parse_node()
            if pos >= len(tokens) or tokens[pos] != ")":
                found = tokens[pos] if pos < len(tokens) else "end of input"
                raise ExprParseError(f"expected ')', found {found!r}")
            pos += 1
        else:
            raise ExprParseError(f"unexpected token {tok!r}")
        while pos < len(tokens) and tokens[pos] in (OP_EXTEND, OP_UNION2):
            expr = ConstructionExpr(tokens[pos], expr)
            pos += 1
        return expr

    expr = parse_node()
    if pos != len(tokens):
        raise ExprParseError(f"trailing tokens after expression: {tokens[pos:]}")
    return expr


def union(*parts: BckAlgebra) -> BckAlgebra:
    """Glue algebras at their shared 0; x*y = x across distinct components.

    Labeling is deterministic: the first part keeps its labels and each
    later part's nonzero elements are appended in order, so the result
    has order 1 + sum(order_i - 1).
    """
    if not parts:
        raise ValueError("union requires at least one algebra")
    n = 1 + sum(p.order - 1 for p in parts)
    # global label -> (component index, local element); 0 belongs to all
    owner: list[tuple[int, int]] = [(-1, 0)]
    for idx, part in enumerate(parts):
        for local in range(1, part.order):
            owner.append((idx, local))
    rows = []
    for a in range(n):
        pa, la = owner[a]
        row = []
        for b in range(n):
            pb, lb = owner[b]
            if a == 0:
                row.append(0)
            elif b == 0:
                row.append(a)
            elif pa == pb:
                local = parts[pa].op(la, lb)
                row.append(0 if local == 0 else a - la + local)
            else:
                row.append(a)
        rows.append(tuple(row))
    return validate(CayleyTable(tuple(rows)))


def extend_top(algebra: BckAlgebra) -> BckAlgebra:
    """Adjoin a new greatest element with x*T = 0, T*T = 0, T*x = T.

    The new top gets the next fresh index; old labels are preserved, so
    the original algebra sits inside as the subalgebra on labels 0..n-1.
    The result is always bounded and, for base order >= 2, non-commutative.
    """
    n = algebra.order
    rows = [row + (0,) for row in algebra.table.rows]
    rows.append(tuple([n] * n + [0]))
    return validate(CayleyTable(tuple(rows)))


def predict_union2_degree(report: CommutingReport) -> Fraction:
    """Degree of A|2 from A's report alone: (k+2n+1)/(n+1)^2."""
    n = report.order
    return Fraction(report.pair_count + 2 * n + 1, (n + 1) ** 2)


def predict_extend_degree(report: CommutingReport) -> Fraction:
    """Degree of A+T from A's report alone: (k+3)/(n+1)^2."""
    n = report.order
    return Fraction(report.pair_count + 3, (n + 1) ** 2)


def m_chain(n: int) -> BckAlgebra:
    """The order-n chain with x*y = x if y < x else 0.

    Equals the iterated top extension of the order-2 algebra and realizes
    the minimum commuting degree (3n-2)/n^2 among order-n algebras.
    """
    if n < 2:
        raise ValueError("m_chain requires order >= 2")
    rows = tuple(
        tuple(x if y < x else 0 for y in range(n)) for x in range(n)
    )
    return validate(CayleyTable(rows))


def b_star(n: int) -> BckAlgebra:
    """The iterated union of PI with order-2 algebras.

    Realizes the maximum non-commutative degree (n^2-2)/n^2; the poset is
    a star of n-2 atoms with one extra element above the first atom.
    """
    if n < 3:
        raise ValueError("b_star requires order >= 3")
    algebra = PI
    for _ in range(n - 3):
        algebra = union(algebra, TWO)
    return algebra


def triangular(m: int) -> int:
    return m * (m + 1) // 2


def cd_numerators(n: int) -> list[int]:
    """Unreduced numerators of all achievable non-commutative degrees at order n."""
    if n < 3:
        raise ValueError("commuting-degree sets start at order 3")
    return list(range(3 * n - 2, n * n - 1, 2))


def cd_set(n: int) -> list[Fraction]:
    """All achievable non-commutative degrees at order n, increasing, reduced."""
    nn = n * n
    return [Fraction(k, nn) for k in cd_numerators(n)]


@dataclass(frozen=True)
class FamilyEntry:
    expression: ConstructionExpr
    algebra: BckAlgebra
    report: CommutingReport


@dataclass(frozen=True)
class FamilyLevel:
    """All achievable degrees at one order, each realized by a construction.

    Entries are in increasing degree order; entry j (1-based) has
    unreduced numerator 3n-2+2(j-1).
    """

    order: int
    entries: tuple[FamilyEntry, ...]

    def __len__(self) -> int:
        return len(self.entries)


def _entry(expression: ConstructionExpr, algebra: BckAlgebra) -> FamilyEntry:
    return FamilyEntry(expression, algebra, algebra.commuting_report())


def _base_level_3() -> FamilyLevel:
    return FamilyLevel(3, (_entry(ConstructionExpr.leaf("PI"), PI),))


def _base_level_4() -> FamilyLevel:
    pi_expr = ConstructionExpr.leaf("PI")
    tc_expr = ConstructionExpr.leaf("TC")
    entries = (
        _entry(pi_expr.extend_top(), extend_top(PI)),
        _entry(tc_expr.extend_top(), extend_top(TC)),
        _entry(pi_expr.union2(), union(PI, TWO)),
    )
    return FamilyLevel(4, entries)


def _next_level(level: FamilyLevel) -> FamilyLevel:
    """One induction step: extend everything, union the last m-1 entries.

    With t entries at order m, entries 1..t of the next level are the
    predecessors under +T and entries t+1..t+(m-1) are predecessors
    t-(m-2)..t under +2; the degrees come out in increasing order again.
    """
    m = level.order
    t = len(level.entries)
    extended = [
        _entry(e.expression.extend_top(), extend_top(e.algebra))
        for e in level.entries
    ]
    unioned = [
        _entry(e.expression.union2(), union(e.algebra, TWO))
        for e in level.entries[t - (m - 1) :]
    ]
    return FamilyLevel(m + 1, tuple(extended + unioned))


def family(n: int) -> FamilyLevel:
    """Constructions realizing every achievable degree at order n, in order."""
    if n < 3:
        raise ValueError("family levels start at order 3")
    if n == 3:
        return _base_level_3()
    level = _base_level_4()
    while level.order < n:
        level = _next_level(level)
    return level


def trace_family_index(n: int, j: int) -> ConstructionExpr:
    """The expression at 1-based index j of family(n), without building the level.

    Walks the level schedule backward: at a level built from t = T(m-2)
    predecessors, index i came from predecessor i via +T when i <= t, else
    from predecessor t-(m-1)+(i-t) via +2.  Terminates at the order-4 base
    [PI+T, TC+T, PI+2] or the order-3 singleton [PI].
    """
    if n < 3:
        raise ValueError("family levels start at order 3")
    if not 1 <= j <= triangular(n - 2):
        raise ValueError(f"index {j} out of range for order {n}")
    ops: list[str] = []
    level = n
    while level > 4:
        m = level - 1
        t = triangular(m - 2)
        if j <= t:
            ops.append(OP_EXTEND)
        else:
            ops.append(OP_UNION2)
            j -= m - 1  # predecessor t-(m-1)+(j-t)
        level -= 1
    if level == 3:
        expr = ConstructionExpr.leaf("PI")
    else:
        base4 = {
            1: ConstructionExpr.leaf("PI").extend_top(),
            2: ConstructionExpr.leaf("TC").extend_top(),
            3: ConstructionExpr.leaf("PI").union2(),
        }
        expr = base4[j]
    for op in reversed(ops):
        expr = ConstructionExpr(op, expr)
    return expr


@dataclass(frozen=True)
class SynthesisResult:
    """Outcome of synthesizing an algebra with a prescribed commuting degree.

    ``noncommuting_pairs`` is the number of unordered element pairs that
    fail to commute, the quantity solved for when choosing the order (the
    degree numerator is order**2 minus twice this).
    """

    target: Fraction
    expression: ConstructionExpr
    algebra: BckAlgebra
    order: int
    noncommuting_pairs: int
    index: int | None
    escalated: bool


def synthesize(p: int, q: int) -> SynthesisResult:
    """Build an algebra whose commuting degree is exactly p/q.

    The fraction is reduced first.  Degree 1 is realized by TC.  Otherwise
    the order is the smallest n in {2q, 4q, 6q, ...} for which the needed
    pair count k = n^2(q-p)/(2q) lands in [1, T(n-2)]; n = 2q always works
    for reduced p >= 2, while p = 1 escalates to n = 4q.
    """
    if p <= 0 or q <= 0:
        raise ValueError("degree must be a positive rational")
    target = Fraction(p, q)
    if target > 1:
        raise ValueError("commuting degrees cannot exceed 1")
    if target == 1:
        return SynthesisResult(target, ConstructionExpr.leaf("TC"), TC, 3, 0, None, False)
    p, q = target.numerator, target.denominator
    multiple = 1
    while True:
        n = 2 * q * multiple
        k = 2 * multiple * multiple * q * (q - p)
        if 1 <= k <= triangular(n - 2):
            break
        multiple += 1
    j = triangular(n - 2) - k + 1
    expression = trace_family_index(n, j)
    algebra = expression.evaluate()
    return SynthesisResult(target, expression, algebra, n, k, j, multiple > 1)
