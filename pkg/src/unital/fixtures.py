"""Bundled fixture corpus and the semigroup-delooping generators.

Every fixture is small enough for all downstream audits to enumerate
exhaustively (at most 3 objects and 8 morphisms).
"""

from __future__ import annotations

from itertools import product
from typing import Iterator, Sequence

from .dsl import CatDocument, CatEntry, FunctorDecl
from .errors import InvalidStructure
from .fincat import CategoryBuilder, FinCategory, Functor
from .tensor import SemiMonCat, TensorStructure


def _thin_mtab(cat: FinCategory, otab) -> tuple[tuple[int, ...], ...]:
    # in a thin category f(x)g is the unique arrow between the tensored endpoints
    rows = []
    for f in cat.morphisms:
        row = []
        for g in cat.morphisms:
            d = otab[cat.dom[f]][cat.dom[g]]
            c = otab[cat.cod[f]][cat.cod[g]]
            (h,) = cat.hom(d, c)
            row.append(h)
        rows.append(tuple(row))
    return tuple(rows)


def fix_term() -> SemiMonCat:
    """One object, identity only, T(x)T = T."""
    b = CategoryBuilder()
    b.add_object("T")
    cat = b.build()
    return SemiMonCat(cat, TensorStructure(((0,),), ((0,),)))


def fix_ind2() -> SemiMonCat:
    """Indiscrete two objects; tensor is the join with Q absorbing."""
    b = CategoryBuilder()
    p = b.add_object("P")
    q = b.add_object("Q")
    pq = b.add_morphism("pq", p, q)
    qp = b.add_morphism("qp", q, p)
    b.set_comp(qp, pq, b._identity[p])
    b.set_comp(pq, qp, b._identity[q])
    cat = b.build()
    otab = ((p, q), (q, q))
    return SemiMonCat(cat, TensorStructure(otab, _thin_mtab(cat, otab)))


def fix_poset2() -> SemiMonCat:
    """The poset 1 >= 0 with tensor min."""
    b = CategoryBuilder()
    o0 = b.add_object("0")
    o1 = b.add_object("1")
    b.add_morphism("w", o1, o0)
    cat = b.build()
    otab = ((0, 0), (0, 1))
    return SemiMonCat(cat, TensorStructure(otab, _thin_mtab(cat, otab)))


def fix_z2eh() -> SemiMonCat:
    """One object with morphism group Z/2 and tensor equal to composition."""
    b = CategoryBuilder()
    e = b.add_object("E")
    s = b.add_morphism("s", e, e)
    b.set_comp(s, s, b._identity[e])
    cat = b.build()
    mtab = tuple(tuple(cat.comp[f][g] for g in cat.morphisms) for f in cat.morphisms)
    return SemiMonCat(cat, TensorStructure(((0,),), mtab))


def fix_xor2() -> SemiMonCat:
    """Discrete {0,1} with tensor addition mod 2."""
    return gen_delooping([[0, 1], [1, 0]], names=("0", "1"))


def fix_min2_disc() -> SemiMonCat:
    """Discrete {0,1} with tensor min; 0 is a non-cancellable idempotent."""
    return gen_delooping([[0, 0], [0, 1]], names=("0", "1"))


def corpus() -> dict[str, SemiMonCat]:
    """The named fixtures, in canonical order."""
    return {
        "FIX-TERM": fix_term(),
        "FIX-IND2": fix_ind2(),
        "FIX-POSET2": fix_poset2(),
        "FIX-Z2EH": fix_z2eh(),
        "FIX-XOR2": fix_xor2(),
        "FIX-MIN2-DISC": fix_min2_disc(),
    }


def is_associative_table(table: Sequence[Sequence[int]]) -> bool:
    n = len(table)
    rng = range(n)
    return all(
        table[table[a][b]][c] == table[a][table[b][c]]
        for a in rng for b in rng for c in rng
    )


def gen_delooping(table: Sequence[Sequence[int]], names: Sequence[str] | None = None) -> SemiMonCat:
    """View a finite semigroup as a discrete strict semi-monoidal category.

    Elements become objects, the multiplication becomes the object tensor,
    and the morphism tensor is the induced map on identities.  Rejects
    non-associative tables.
    """
    n = len(table)
    if any(len(row) != n for row in table):
        raise InvalidStructure("multiplication table is not square")
    if any(not (0 <= v < n) for row in table for v in row):
        raise InvalidStructure("multiplication table entry out of range")
    if not is_associative_table(table):
        raise InvalidStructure("multiplication table is not associative")
    if names is None:
        names = tuple(str(i) for i in range(n))
    b = CategoryBuilder()
    for name in names:
        b.add_object(name)
    cat = b.build()
    otab = tuple(tuple(row) for row in table)
    mtab = tuple(
        tuple(cat.identity[otab[a][bb]] for bb in range(n)) for a in range(n)
    )
    return SemiMonCat(cat, TensorStructure(otab, mtab))


def two_sided_identities(table: Sequence[Sequence[int]]) -> list[int]:
    """Direct table scan for elements e with e*x = x = x*e for all x."""
    n = len(table)
    return [
        e for e in range(n)
        if all(table[e][x] == x and table[x][e] == x for x in range(n))
    ]


def enumerate_semigroups(n: int, budget=None) -> Iterator[tuple[tuple[int, ...], ...]]:
    """All associative tables on n elements, in lexicographic order.

    Backtracking search: the table is filled cell by cell (row-major) and a
    branch is pruned as soon as some fully determined triple breaks
    associativity.  The plain filter over all n**(n*n) tables is the
    independent oracle used by the tests.
    """
    if n not in (1, 2, 3):
        raise InvalidStructure("only orders 1..3 are supported (cost guard)")
    cells = [(i, j) for i in range(n) for j in range(n)]
    table = [[-1] * n for _ in range(n)]

    def triples_ok() -> bool:
        for a in range(n):
            for b in range(n):
                ab = table[a][b]
                if ab < 0:
                    continue
                for c in range(n):
                    bc = table[b][c]
                    if bc < 0:
                        continue
                    left = table[ab][c]
                    right = table[a][bc]
                    if left >= 0 and right >= 0 and left != right:
                        return False
        return True

    def fill(k: int):
        if k == len(cells):
            yield tuple(tuple(row) for row in table)
            return
        i, j = cells[k]
        for v in range(n):
            if budget is not None:
                budget.spend()
            table[i][j] = v
            if triples_ok():
                yield from fill(k + 1)
            table[i][j] = -1

    yield from fill(0)
