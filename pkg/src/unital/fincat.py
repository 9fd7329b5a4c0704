"""Finite categories with total composition tables.

Objects and morphisms are dense small-integer ids; every hom-set carries
the canonical order inherited from morphism ids, and all "choose one"
steps elsewhere in the package pick the least id.  All structures are
immutable after construction and every operation here is a pure function,
so concurrent evaluation is safe.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import InvalidStructure

NO_COMP = -1


@dataclass(frozen=True)
class Violation:
    """One broken law, with the witnessing ids."""

    kind: str
    subject: tuple
    message: str

    def as_dict(self):
        return {"kind": self.kind, "subject": list(self.subject), "message": self.message}


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def as_dict(self):
        return {"ok": self.ok, "violations": [v.as_dict() for v in self.violations]}


@dataclass(frozen=True)
class FinCategory:
    """A finite category presented by total tables.

    ``comp[g][f]`` holds g-after-f whenever ``cod(f) == dom(g)`` and
    NO_COMP otherwise.  ``identity[x]`` is the identity morphism of x.
    """

    obj_names: tuple[str, ...]
    mor_names: tuple[str, ...]
    dom: tuple[int, ...]
    cod: tuple[int, ...]
    identity: tuple[int, ...]
    comp: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        homs: dict[tuple[int, int], list[int]] = {}
        for f in range(len(self.mor_names)):
            homs.setdefault((self.dom[f], self.cod[f]), []).append(f)
        object.__setattr__(self, "_hom", {k: tuple(v) for k, v in homs.items()})

    @property
    def objects(self) -> range:
        return range(len(self.obj_names))

    @property
    def morphisms(self) -> range:
        return range(len(self.mor_names))

    def hom(self, x: int, y: int) -> tuple[int, ...]:
        return self._hom.get((x, y), ())

    def composable(self, g: int, f: int) -> bool:
        return self.dom[g] == self.cod[f]

    def compose(self, g: int, f: int) -> int:
        """g after f; raises when the pair is not composable or the table has a hole."""
        if not self.composable(g, f):
            raise InvalidStructure(
                f"morphisms {self.mor_names[g]} and {self.mor_names[f]} are not composable"
            )
        h = self.comp[g][f]
        if h == NO_COMP:
            raise InvalidStructure(
                f"composition table has no entry for ({self.mor_names[g]}, {self.mor_names[f]})"
            )
        return h

    def is_identity(self, f: int) -> bool:
        return self.dom[f] == self.cod[f] and self.identity[self.dom[f]] == f


class CategoryBuilder:
    """Assembles a FinCategory; adding an object creates its identity.

    Composites with an identity are filled in automatically unless given
    explicitly, so callers only supply the genuinely informative rows.
    """

    def __init__(self):
        self._obj_names: list[str] = []
        self._mor_names: list[str] = []
        self._dom: list[int] = []
        self._cod: list[int] = []
        self._identity: list[int] = []
        self._comp: dict[tuple[int, int], int] = {}

    def add_object(self, name: str, identity_name: str | None = None) -> int:
        x = len(self._obj_names)
        self._obj_names.append(name)
        m = len(self._mor_names)
        self._mor_names.append(identity_name if identity_name is not None else f"id_{name}")
        self._dom.append(x)
        self._cod.append(x)
        self._identity.append(m)
        return x

    def add_morphism(self, name: str, dom: int, cod: int) -> int:
        m = len(self._mor_names)
        self._mor_names.append(name)
        self._dom.append(dom)
        self._cod.append(cod)
        return m

    def set_comp(self, g: int, f: int, h: int) -> None:
        self._comp[(g, f)] = h

    def build(self) -> FinCategory:
        n = len(self._mor_names)
        table = [[NO_COMP] * n for _ in range(n)]
        for g in range(n):
            for f in range(n):
                if self._dom[g] != self._cod[f]:
                    continue
                if (g, f) in self._comp:
                    table[g][f] = self._comp[(g, f)]
                elif self._identity[self._dom[f]] == f and self._dom[f] == self._cod[f]:
                    table[g][f] = g
                elif self._identity[self._cod[g]] == g and self._dom[g] == self._cod[g]:
                    table[g][f] = f
        return FinCategory(
            tuple(self._obj_names),
            tuple(self._mor_names),
            tuple(self._dom),
            tuple(self._cod),
            tuple(self._identity),
            tuple(tuple(row) for row in table),
        )


def validate_category(c: FinCategory) -> ValidationReport:
    """List every broken totality, typing, identity, or associativity instance."""
    out: list[Violation] = []
    for x in c.objects:
        i = c.identity[x]
        if c.dom[i] != x or c.cod[i] != x:
            out.append(Violation(
                "identity-typing", (x, i),
                f"identity of {c.obj_names[x]} is {c.mor_names[i]} with wrong endpoints"))
    for g in c.morphisms:
        for f in c.morphisms:
            h = c.comp[g][f]
            if c.composable(g, f):
                if h == NO_COMP:
                    out.append(Violation(
                        "composition-missing", (g, f),
                        f"no composite for ({c.mor_names[g]}, {c.mor_names[f]})"))
                elif c.dom[h] != c.dom[f] or c.cod[h] != c.cod[g]:
                    out.append(Violation(
                        "composition-typing", (g, f, h),
                        f"{c.mor_names[g]} o {c.mor_names[f]} = {c.mor_names[h]} "
                        f"has wrong endpoints"))
            elif h != NO_COMP:
                out.append(Violation(
                    "composition-spurious", (g, f),
                    f"composite recorded for non-composable "
                    f"({c.mor_names[g]}, {c.mor_names[f]})"))
    for f in c.morphisms:
        li = c.identity[c.cod[f]]
        ri = c.identity[c.dom[f]]
        if c.comp[f][ri] not in (NO_COMP, f):
            out.append(Violation(
                "identity-law", (f, ri),
                f"{c.mor_names[f]} o {c.mor_names[ri]} != {c.mor_names[f]}"))
        if c.comp[li][f] not in (NO_COMP, f):
            out.append(Violation(
                "identity-law", (li, f),
                f"{c.mor_names[li]} o {c.mor_names[f]} != {c.mor_names[f]}"))
    for h in c.morphisms:
        for g in c.morphisms:
            if not c.composable(h, g):
                continue
            hg = c.comp[h][g]
            for f in c.morphisms:
                if not c.composable(g, f):
                    continue
                gf = c.comp[g][f]
                if hg == NO_COMP or gf == NO_COMP:
                    continue
                left = c.comp[h][gf]
                right = c.comp[hg][f]
                if left == NO_COMP or right == NO_COMP:
                    continue
                if left != right:
                    out.append(Violation(
                        "associativity", (h, g, f),
                        f"({c.mor_names[h]} o {c.mor_names[g]}) o {c.mor_names[f]} "
                        f"!= {c.mor_names[h]} o ({c.mor_names[g]} o {c.mor_names[f]})"))
    return ValidationReport(tuple(out))


def is_iso(c: FinCategory, f: int) -> int | None:
    """Return the (least-id) two-sided inverse of f, or None."""
    x, y = c.dom[f], c.cod[f]
    for g in c.hom(y, x):
        if c.comp[g][f] == c.identity[x] and c.comp[f][g] == c.identity[y]:
            return g
    return None


def is_mono(c: FinCategory, f: int) -> bool:
    x = c.dom[f]
    for w in c.objects:
        arrows = c.hom(w, x)
        for g in arrows:
            for h in arrows:
                if g < h and c.comp[f][g] == c.comp[f][h]:
                    return False
    return True


def is_epi(c: FinCategory, f: int) -> bool:
    y = c.cod[f]
    for w in c.objects:
        arrows = c.hom(y, w)
        for g in arrows:
            for h in arrows:
                if g < h and c.comp[g][f] == c.comp[h][f]:
                    return False
    return True


def is_contractible(c: FinCategory) -> bool:
    """Nonempty, with exactly one morphism between every ordered pair of objects."""
    if not c.obj_names:
        return False
    return all(len(c.hom(x, y)) == 1 for x in c.objects for y in c.objects)


@dataclass(frozen=True)
class Functor:
    source: FinCategory
    target: FinCategory
    omap: tuple[int, ...]
    mmap: tuple[int, ...]

    def on_obj(self, x: int) -> int:
        return self.omap[x]

    def on_mor(self, f: int) -> int:
        return self.mmap[f]


def validate_functor(fun: Functor) -> ValidationReport:
    c, d = fun.source, fun.target
    out: list[Violation] = []
    if len(fun.omap) != len(c.obj_names) or len(fun.mmap) != len(c.mor_names):
        out.append(Violation("functor-shape", (), "object/morphism map has wrong length"))
        return ValidationReport(tuple(out))
    for f in c.morphisms:
        ff = fun.mmap[f]
        if d.dom[ff] != fun.omap[c.dom[f]] or d.cod[ff] != fun.omap[c.cod[f]]:
            out.append(Violation(
                "functor-typing", (f,),
                f"image of {c.mor_names[f]} has wrong endpoints"))
    for x in c.objects:
        if fun.mmap[c.identity[x]] != d.identity[fun.omap[x]]:
            out.append(Violation(
                "functor-identity", (x,),
                f"identity of {c.obj_names[x]} not preserved"))
    for g in c.morphisms:
        for f in c.morphisms:
            if not c.composable(g, f):
                continue
            h = c.comp[g][f]
            if h == NO_COMP:
                continue
            if fun.mmap[h] != d.comp[fun.mmap[g]][fun.mmap[f]]:
                out.append(Violation(
                    "functor-composition", (g, f),
                    f"composite of ({c.mor_names[g]}, {c.mor_names[f]}) not preserved"))
    return ValidationReport(tuple(out))


def identity_functor(c: FinCategory) -> Functor:
    return Functor(c, c, tuple(c.objects), tuple(c.morphisms))


def constant_functor(c: FinCategory, d: FinCategory, obj: int) -> Functor:
    return Functor(c, d, (obj,) * len(c.obj_names), (d.identity[obj],) * len(c.mor_names))


def compose_functors(outer: Functor, inner: Functor) -> Functor:
    if inner.target is not outer.source and inner.target != outer.source:
        raise InvalidStructure("functors are not composable")
    return Functor(
        inner.source,
        outer.target,
        tuple(outer.omap[x] for x in inner.omap),
        tuple(outer.mmap[f] for f in inner.mmap),
    )


def is_fully_faithful(fun: Functor) -> bool:
    """Each hom map injective with equal cardinality; inverse maps never built."""
    c, d = fun.source, fun.target
    for x in c.objects:
        for y in c.objects:
            src = c.hom(x, y)
            tgt = d.hom(fun.omap[x], fun.omap[y])
            if len(src) != len(tgt):
                return False
            images = {fun.mmap[f] for f in src}
            if len(images) != len(src):
                return False
    return True


@dataclass(frozen=True)
class NatTransformation:
    """Components live in the shared target of two parallel functors."""

    f: Functor
    g: Functor
    components: tuple[int, ...]


def validate_nat(t: NatTransformation) -> ValidationReport:
    """Empty report iff every component is well typed and every square commutes."""
    c = t.f.source
    d = t.f.target
    out: list[Violation] = []
    if t.g.source != c or t.g.target != d:
        out.append(Violation("nat-shape", (), "functors do not share source and target"))
        return ValidationReport(tuple(out))
    for x in c.objects:
        comp = t.components[x]
        if d.dom[comp] != t.f.omap[x] or d.cod[comp] != t.g.omap[x]:
            out.append(Violation(
                "nat-typing", (x, comp),
                f"component at {c.obj_names[x]} has wrong endpoints"))
    if out:
        return ValidationReport(tuple(out))
    for m in c.morphisms:
        x, y = c.dom[m], c.cod[m]
        left = d.comp[t.components[y]][t.f.mmap[m]]
        right = d.comp[t.g.mmap[m]][t.components[x]]
        if left != right:
            out.append(Violation(
                "nat-square", (m,),
                f"naturality square at {c.mor_names[m]} does not commute"))
    return ValidationReport(tuple(out))


def enumerate_functors(c: FinCategory, d: FinCategory, budget=None) -> tuple[Functor, ...]:
    """All functors c -> d, exhaustively, in canonical (omap, mmap) order."""
    res: list[Functor] = []
    nonid = [f for f in c.morphisms if not c.is_identity(f)]
    for omap in product(d.objects, repeat=len(c.obj_names)):
        base = [0] * len(c.mor_names)
        for x in c.objects:
            base[c.identity[x]] = d.identity[omap[x]]
        cand_sets = [d.hom(omap[c.dom[f]], omap[c.cod[f]]) for f in nonid]
        if any(not cs for cs in cand_sets):
            continue
        for choice in product(*cand_sets):
            if budget is not None:
                budget.spend()
            mmap = list(base)
            for f, m in zip(nonid, choice):
                mmap[f] = m
            fun = Functor(c, d, tuple(omap), tuple(mmap))
            if validate_functor(fun).ok:
                res.append(fun)
    return tuple(res)


def enumerate_nat_transformations(f: Functor, g: Functor, budget=None) -> tuple[NatTransformation, ...]:
    """All natural transformations f => g, in canonical component order."""
    c, d = f.source, f.target
    cand_sets = [d.hom(f.omap[x], g.omap[x]) for x in c.objects]
    if any(not cs for cs in cand_sets):
        return ()
    res = []
    for comps in product(*cand_sets):
        if budget is not None:
            budget.spend()
        t = NatTransformation(f, g, tuple(comps))
        if validate_nat(t).ok:
            res.append(t)
    return tuple(res)
