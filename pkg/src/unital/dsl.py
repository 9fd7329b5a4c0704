"""Line-oriented input language for categories, tensors, units, and functors.

Grammar ('#' starts a comment, blank lines are ignored)::

    category NAME
    objects a b c
    hom f : a -> b
    compose g f = h          # g after f; required for all non-identity pairs
    tensor a b = c           # required for all object pairs
    tensorm f g = h          # f (x) g; identity-identity rows may be omitted
    unit I alpha f           # declares a unit candidate (I, f)
    monoid M mu eta
    functor NAME : C -> D
    obj X = Y
    mor f = g                # identity rows are derived and may be omitted
    phi2 X Y = m             # if present, required for all object pairs
    phi0 = m
    end

Identities are auto-named ``id_<object>``.  Identifiers resolve within
the current category; a functor block resolves its left-hand names in the
source and right-hand names in the target.  Every parse error carries a
line and column.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import UnitalError
from .fincat import CategoryBuilder, FinCategory, Functor, NO_COMP
from .tensor import SemiMonCat, TensorStructure

_KEYWORDS = {
    "category", "objects", "hom", "compose", "tensor", "tensorm", "unit",
    "monoid", "functor", "obj", "mor", "phi2", "phi0", "end", "alpha",
    ":", "->", "=", "#",
}


class ParseError(UnitalError):
    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"line {line}, column {col}: {message}")
        self.line = line
        self.col = col


@dataclass(frozen=True)
class UnitDecl:
    obj: int
    alpha: int


@dataclass(frozen=True)
class MonoidDecl:
    obj: int
    mu: int
    eta: int


@dataclass(frozen=True)
class FunctorDecl:
    name: str
    source: str
    target: str
    functor: Functor
    phi2: tuple[tuple[int, ...], ...] | None
    phi0: int | None


@dataclass(frozen=True)
class CatEntry:
    name: str
    cat: FinCategory
    smc: SemiMonCat | None          # None when the category has no tensor
    units: tuple[UnitDecl, ...]
    monoids: tuple[MonoidDecl, ...]


@dataclass
class CatDocument:
    categories: dict[str, CatEntry] = field(default_factory=dict)
    functors: dict[str, FunctorDecl] = field(default_factory=dict)

    def sole_category(self) -> CatEntry:
        if len(self.categories) != 1:
            raise UnitalError("document has several categories; name one")
        return next(iter(self.categories.values()))


def _tokenize(line: str) -> list[tuple[str, int]]:
    if "#" in line:
        line = line[:line.index("#")]
    toks = []
    col = 0
    n = len(line)
    while col < n:
        if line[col].isspace():
            col += 1
            continue
        start = col
        while col < n and not line[col].isspace():
            col += 1
        toks.append((line[start:col], start + 1))
    return toks


def _exact(toks, n, line):
    if len(toks) > n:
        tok, col = toks[n]
        raise ParseError(f"unexpected trailing token '{tok}'", line, col)


class _CatScope:
    """Accumulates one category block until the next block starts."""

    def __init__(self, name: str, line: int):
        self.name = name
        self.line = line
        self.obj_ids: dict[str, int] = {}
        self.mor_ids: dict[str, int] = {}
        self.builder = CategoryBuilder()
        self.compose_rows: dict[tuple[int, int], tuple[int, int, int]] = {}
        self.tensor_rows: dict[tuple[int, int], tuple[int, int, int]] = {}
        self.tensorm_rows: dict[tuple[int, int], tuple[int, int, int]] = {}
        self.units: list[UnitDecl] = []
        self.monoids: list[MonoidDecl] = []

    def obj(self, name: str, line: int, col: int) -> int:
        if name not in self.obj_ids:
            raise ParseError(f"unresolved object '{name}'", line, col)
        return self.obj_ids[name]

    def mor(self, name: str, line: int, col: int) -> int:
        if name not in self.mor_ids:
            raise ParseError(f"unresolved morphism '{name}'", line, col)
        return self.mor_ids[name]


def _expect(toks, idx, literal, line):
    if idx >= len(toks):
        last_col = toks[-1][1] + len(toks[-1][0]) if toks else 1
        raise ParseError(f"expected '{literal}'", line, last_col)
    tok, col = toks[idx]
    if tok != literal:
        raise ParseError(f"expected '{literal}', found '{tok}'", line, col)


def _name(toks, idx, line, kind="name"):
    if idx >= len(toks):
        last_col = toks[-1][1] + len(toks[-1][0]) if toks else 1
        raise ParseError(f"expected {kind}", line, last_col)
    tok, col = toks[idx]
    if tok in _KEYWORDS:
        raise ParseError(f"'{tok}' is reserved and cannot be a {kind}", line, col)
    return tok, col


def _finish_category(scope: _CatScope, doc: CatDocument) -> None:
    cat = scope.builder.build()
    # every non-identity composable pair needs an explicit row
    for g in cat.morphisms:
        for f in cat.morphisms:
            if not cat.composable(g, f):
                continue
            if cat.is_identity(g) or cat.is_identity(f):
                continue
            if (g, f) not in scope.compose_rows:
                raise ParseError(
                    f"missing compose row for ({cat.mor_names[g]}, {cat.mor_names[f]}) "
                    f"in category {scope.name}", scope.line, 1)
    smc = None
    if scope.tensor_rows or scope.tensorm_rows:
        n = len(cat.obj_names)
        otab = [[-1] * n for _ in range(n)]
        for (a, b), (v, line, col) in scope.tensor_rows.items():
            otab[a][b] = v
        for a in range(n):
            for b in range(n):
                if otab[a][b] < 0:
                    raise ParseError(
                        f"missing tensor row for ({cat.obj_names[a]}, "
                        f"{cat.obj_names[b]}) in category {scope.name}",
                        scope.line, 1)
        m = len(cat.mor_names)
        mtab = [[-1] * m for _ in range(m)]
        for (f, g), (v, line, col) in scope.tensorm_rows.items():
            mtab[f][g] = v
        for f in range(m):
            for g in range(m):
                if mtab[f][g] >= 0:
                    continue
                if cat.is_identity(f) and cat.is_identity(g):
                    mtab[f][g] = cat.identity[otab[cat.dom[f]][cat.dom[g]]]
                else:
                    raise ParseError(
                        f"missing tensorm row for ({cat.mor_names[f]}, "
                        f"{cat.mor_names[g]}) in category {scope.name}",
                        scope.line, 1)
        smc = SemiMonCat(cat, TensorStructure(
            tuple(tuple(r) for r in otab), tuple(tuple(r) for r in mtab)))
    doc.categories[scope.name] = CatEntry(
        scope.name, cat, smc, tuple(scope.units), tuple(scope.monoids))


class _FunScope:
    def __init__(self, name, src_entry, dst_entry, line):
        self.name = name
        self.src = src_entry
        self.dst = dst_entry
        self.line = line
        self.omap: dict[int, int] = {}
        self.mmap: dict[int, int] = {}
        self.phi2: dict[tuple[int, int], int] = {}
        self.phi0: int | None = None


def _finish_functor(scope: _FunScope, doc: CatDocument) -> None:
    src, dst = scope.src.cat, scope.dst.cat
    for x in src.objects:
        if x not in scope.omap:
            raise ParseError(
                f"missing obj row for {src.obj_names[x]} in functor {scope.name}",
                scope.line, 1)
    omap = tuple(scope.omap[x] for x in src.objects)
    mmap = []
    for f in src.morphisms:
        if f in scope.mmap:
            mmap.append(scope.mmap[f])
        elif src.is_identity(f):
            mmap.append(dst.identity[omap[src.dom[f]]])
        else:
            raise ParseError(
                f"missing mor row for {src.mor_names[f]} in functor {scope.name}",
                scope.line, 1)
    phi2 = None
    if scope.phi2:
        if scope.src.smc is None or scope.dst.smc is None:
            raise ParseError(
                f"functor {scope.name} declares phi2 but a category has no tensor",
                scope.line, 1)
        n = len(src.obj_names)
        rows = []
        for x in range(n):
            row = []
            for y in range(n):
                if (x, y) not in scope.phi2:
                    raise ParseError(
                        f"missing phi2 row for ({src.obj_names[x]}, "
                        f"{src.obj_names[y]}) in functor {scope.name}",
                        scope.line, 1)
                row.append(scope.phi2[(x, y)])
            rows.append(tuple(row))
        phi2 = tuple(rows)
    doc.functors[scope.name] = FunctorDecl(
        scope.name, scope.src.name, scope.dst.name,
        Functor(src, dst, omap, tuple(mmap)), phi2, scope.phi0)


def parse_text(text: str) -> CatDocument:
    doc = CatDocument()
    cat_scope: _CatScope | None = None
    fun_scope: _FunScope | None = None

    def close_category():
        nonlocal cat_scope
        if cat_scope is not None:
            _finish_category(cat_scope, doc)
            cat_scope = None

    for lineno, raw in enumerate(text.splitlines(), start=1):
        toks = _tokenize(raw)
        if not toks:
            continue
        head, head_col = toks[0]

        if fun_scope is not None:
            src, dst = fun_scope.src, fun_scope.dst
            if head == "obj":
                _exact(toks, 4, lineno)
                name, col = _name(toks, 1, lineno, "object")
                x = _resolve_obj(src, name, lineno, col)
                _expect(toks, 2, "=", lineno)
                name2, col2 = _name(toks, 3, lineno, "object")
                y = _resolve_obj(dst, name2, lineno, col2)
                if x in fun_scope.omap:
                    raise ParseError(f"duplicate obj row for '{name}'", lineno, col)
                fun_scope.omap[x] = y
            elif head == "mor":
                _exact(toks, 4, lineno)
                name, col = _name(toks, 1, lineno, "morphism")
                f = _resolve_mor(src, name, lineno, col)
                _expect(toks, 2, "=", lineno)
                name2, col2 = _name(toks, 3, lineno, "morphism")
                g = _resolve_mor(dst, name2, lineno, col2)
                if f in fun_scope.mmap:
                    raise ParseError(f"duplicate mor row for '{name}'", lineno, col)
                fun_scope.mmap[f] = g
            elif head == "phi2":
                _exact(toks, 5, lineno)
                n1, c1 = _name(toks, 1, lineno, "object")
                n2, c2 = _name(toks, 2, lineno, "object")
                x = _resolve_obj(src, n1, lineno, c1)
                y = _resolve_obj(src, n2, lineno, c2)
                _expect(toks, 3, "=", lineno)
                n3, c3 = _name(toks, 4, lineno, "morphism")
                m = _resolve_mor(dst, n3, lineno, c3)
                if (x, y) in fun_scope.phi2:
                    raise ParseError(f"duplicate phi2 row for ({n1}, {n2})", lineno, c1)
                _check_phi2_type(fun_scope, x, y, m, lineno, c3)
                fun_scope.phi2[(x, y)] = m
            elif head == "phi0":
                _exact(toks, 3, lineno)
                _expect(toks, 1, "=", lineno)
                n1, c1 = _name(toks, 2, lineno, "morphism")
                if fun_scope.phi0 is not None:
                    raise ParseError("duplicate phi0 row", lineno, c1)
                fun_scope.phi0 = _resolve_mor(dst, n1, lineno, c1)
            elif head == "end":
                _exact(toks, 1, lineno)
                _finish_functor(fun_scope, doc)
                fun_scope = None
            else:
                raise ParseError(f"unexpected '{head}' inside functor block",
                                 lineno, head_col)
            continue

        if head == "category":
            close_category()
            _exact(toks, 2, lineno)
            name, col = _name(toks, 1, lineno, "category name")
            if name in doc.categories:
                raise ParseError(f"duplicate category '{name}'", lineno, col)
            cat_scope = _CatScope(name, lineno)
        elif head == "functor":
            close_category()
            _exact(toks, 6, lineno)
            name, col = _name(toks, 1, lineno, "functor name")
            if name in doc.functors:
                raise ParseError(f"duplicate functor '{name}'", lineno, col)
            _expect(toks, 2, ":", lineno)
            src_name, scol = _name(toks, 3, lineno, "category name")
            _expect(toks, 4, "->", lineno)
            dst_name, dcol = _name(toks, 5, lineno, "category name")
            if src_name not in doc.categories:
                raise ParseError(f"unresolved category '{src_name}'", lineno, scol)
            if dst_name not in doc.categories:
                raise ParseError(f"unresolved category '{dst_name}'", lineno, dcol)
            fun_scope = _FunScope(name, doc.categories[src_name],
                                  doc.categories[dst_name], lineno)
        elif head in ("objects", "hom", "compose", "tensor", "tensorm", "unit",
                      "monoid"):
            if cat_scope is None:
                raise ParseError(f"'{head}' outside a category block", lineno, head_col)
            _category_line(cat_scope, head, toks, lineno)
        elif head == "end":
            raise ParseError("'end' outside a functor block", lineno, head_col)
        else:
            raise ParseError(f"unknown directive '{head}'", lineno, head_col)

    if fun_scope is not None:
        raise ParseError(f"functor {fun_scope.name} not closed with 'end'",
                         fun_scope.line, 1)
    close_category()
    if not doc.categories:
        raise ParseError("no category", 1, 1)
    return doc


def _resolve_obj(entry, name, line, col) -> int:
    cat = entry.cat if isinstance(entry, CatEntry) else entry
    try:
        return cat.obj_names.index(name)
    except ValueError:
        raise ParseError(f"unresolved object '{name}'", line, col) from None


def _resolve_mor(entry, name, line, col) -> int:
    cat = entry.cat if isinstance(entry, CatEntry) else entry
    try:
        return cat.mor_names.index(name)
    except ValueError:
        raise ParseError(f"unresolved morphism '{name}'", line, col) from None


def _check_phi2_type(scope: _FunScope, x, y, m, line, col):
    if scope.src.smc is None or scope.dst.smc is None:
        raise ParseError("phi2 requires tensors on both categories", line, col)
    if any(o not in scope.omap for o in (x, y)):
        raise ParseError("phi2 row precedes the obj rows it needs", line, col)
    src_smc, dst_smc = scope.src.smc, scope.dst.smc
    dc = scope.dst.cat
    want_dom = dst_smc.obj_tensor(scope.omap[x], scope.omap[y])
    xy = src_smc.obj_tensor(x, y)
    if xy not in scope.omap:
        raise ParseError("phi2 row precedes the obj rows it needs", line, col)
    want_cod = scope.omap[xy]
    if dc.dom[m] != want_dom or dc.cod[m] != want_cod:
        raise ParseError(
            f"phi2 component '{dc.mor_names[m]}' is not in the required hom-set",
            line, col)


def _category_line(scope: _CatScope, head: str, toks, lineno: int) -> None:
    if head == "objects":
        if len(toks) < 2:
            raise ParseError("objects line needs at least one name", lineno, 1)
        for tok, col in toks[1:]:
            if tok in _KEYWORDS:
                raise ParseError(f"'{tok}' is reserved and cannot be a name", lineno, col)
            if tok in scope.obj_ids:
                raise ParseError(f"duplicate object '{tok}'", lineno, col)
            x = scope.builder.add_object(tok)
            scope.obj_ids[tok] = x
            scope.mor_ids[f"id_{tok}"] = scope.builder._identity[x]
    elif head == "hom":
        _exact(toks, 6, lineno)
        name, col = _name(toks, 1, lineno, "morphism")
        if name in scope.mor_ids:
            raise ParseError(f"duplicate morphism '{name}'", lineno, col)
        _expect(toks, 2, ":", lineno)
        dn, dcol = _name(toks, 3, lineno, "object")
        _expect(toks, 4, "->", lineno)
        cn, ccol = _name(toks, 5, lineno, "object")
        d = scope.obj(dn, lineno, dcol)
        c = scope.obj(cn, lineno, ccol)
        scope.mor_ids[name] = scope.builder.add_morphism(name, d, c)
    elif head == "compose":
        _exact(toks, 5, lineno)
        gn, gcol = _name(toks, 1, lineno, "morphism")
        fn, fcol = _name(toks, 2, lineno, "morphism")
        _expect(toks, 3, "=", lineno)
        hn, hcol = _name(toks, 4, lineno, "morphism")
        g = scope.mor(gn, lineno, gcol)
        f = scope.mor(fn, lineno, fcol)
        h = scope.mor(hn, lineno, hcol)
        if (g, f) in scope.compose_rows:
            raise ParseError(f"duplicate compose row for ({gn}, {fn})", lineno, gcol)
        if scope.builder._dom[g] != scope.builder._cod[f]:
            raise ParseError(f"({gn}, {fn}) is not a composable pair", lineno, gcol)
        scope.compose_rows[(g, f)] = (h, lineno, gcol)
        scope.builder.set_comp(g, f, h)
    elif head == "tensor":
        _exact(toks, 5, lineno)
        an, acol = _name(toks, 1, lineno, "object")
        bn, bcol = _name(toks, 2, lineno, "object")
        _expect(toks, 3, "=", lineno)
        cn, ccol = _name(toks, 4, lineno, "object")
        a = scope.obj(an, lineno, acol)
        b = scope.obj(bn, lineno, bcol)
        v = scope.obj(cn, lineno, ccol)
        if (a, b) in scope.tensor_rows:
            raise ParseError(f"duplicate tensor row for ({an}, {bn})", lineno, acol)
        scope.tensor_rows[(a, b)] = (v, lineno, acol)
    elif head == "tensorm":
        _exact(toks, 5, lineno)
        fn, fcol = _name(toks, 1, lineno, "morphism")
        gn, gcol = _name(toks, 2, lineno, "morphism")
        _expect(toks, 3, "=", lineno)
        hn, hcol = _name(toks, 4, lineno, "morphism")
        f = scope.mor(fn, lineno, fcol)
        g = scope.mor(gn, lineno, gcol)
        h = scope.mor(hn, lineno, hcol)
        if (f, g) in scope.tensorm_rows:
            raise ParseError(f"duplicate tensorm row for ({fn}, {gn})", lineno, fcol)
        scope.tensorm_rows[(f, g)] = (h, lineno, fcol)
    elif head == "unit":
        _exact(toks, 4, lineno)
        on, ocol = _name(toks, 1, lineno, "object")
        _expect(toks, 2, "alpha", lineno)
        an, acol = _name(toks, 3, lineno, "morphism")
        i = scope.obj(on, lineno, ocol)
        a = scope.mor(an, lineno, acol)
        decl = UnitDecl(i, a)
        if decl in scope.units:
            raise ParseError(f"duplicate unit declaration ({on}, {an})", lineno, ocol)
        targ = scope.tensor_rows.get((i, i))
        if targ is None:
            raise ParseError("unit declared before its tensor row", lineno, ocol)
        if scope.builder._dom[a] != targ[0] or scope.builder._cod[a] != i:
            raise ParseError(
                f"'{an}' is not in the hom-set required for a unit on '{on}'",
                lineno, acol)
        scope.units.append(decl)
    elif head == "monoid":
        _exact(toks, 4, lineno)
        mn, mcol = _name(toks, 1, lineno, "object")
        mun, mucol = _name(toks, 2, lineno, "morphism")
        en, ecol = _name(toks, 3, lineno, "morphism")
        m = scope.obj(mn, lineno, mcol)
        mu = scope.mor(mun, lineno, mucol)
        eta = scope.mor(en, lineno, ecol)
        decl = MonoidDecl(m, mu, eta)
        if decl in scope.monoids:
            raise ParseError(f"duplicate monoid declaration", lineno, mcol)
        targ = scope.tensor_rows.get((m, m))
        if targ is None:
            raise ParseError("monoid declared before its tensor row", lineno, mcol)
        if scope.builder._dom[mu] != targ[0] or scope.builder._cod[mu] != m:
            raise ParseError(
                f"'{mun}' is not in the hom-set required for a multiplication on "
                f"'{mn}'", lineno, mucol)
        scope.monoids.append(decl)


def parse_path(path) -> CatDocument:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_text(fh.read())


def emit_category(entry: CatEntry) -> str:
    cat = entry.cat
    lines = [f"category {entry.name}"]
    lines.append("objects " + " ".join(cat.obj_names))
    for f in cat.morphisms:
        if cat.is_identity(f):
            continue
        lines.append(
            f"hom {cat.mor_names[f]} : {cat.obj_names[cat.dom[f]]} -> "
            f"{cat.obj_names[cat.cod[f]]}")
    for g in cat.morphisms:
        for f in cat.morphisms:
            if not cat.composable(g, f) or cat.is_identity(g) or cat.is_identity(f):
                continue
            h = cat.comp[g][f]
            if h != NO_COMP:
                lines.append(
                    f"compose {cat.mor_names[g]} {cat.mor_names[f]} = {cat.mor_names[h]}")
    if entry.smc is not None:
        otab, mtab = entry.smc.tensor.otab, entry.smc.tensor.mtab
        for a in cat.objects:
            for b in cat.objects:
                lines.append(
                    f"tensor {cat.obj_names[a]} {cat.obj_names[b]} = "
                    f"{cat.obj_names[otab[a][b]]}")
        for f in cat.morphisms:
            for g in cat.morphisms:
                if cat.is_identity(f) and cat.is_identity(g):
                    continue
                lines.append(
                    f"tensorm {cat.mor_names[f]} {cat.mor_names[g]} = "
                    f"{cat.mor_names[mtab[f][g]]}")
    for u in entry.units:
        lines.append(f"unit {cat.obj_names[u.obj]} alpha {cat.mor_names[u.alpha]}")
    for m in entry.monoids:
        lines.append(
            f"monoid {cat.obj_names[m.obj]} {cat.mor_names[m.mu]} {cat.mor_names[m.eta]}")
    return "\n".join(lines) + "\n"


def emit_functor(decl: FunctorDecl, src: CatEntry, dst: CatEntry) -> str:
    sc, dc = src.cat, dst.cat
    lines = [f"functor {decl.name} : {decl.source} -> {decl.target}"]
    for x in sc.objects:
        lines.append(f"obj {sc.obj_names[x]} = {dc.obj_names[decl.functor.omap[x]]}")
    for f in sc.morphisms:
        if sc.is_identity(f):
            continue
        lines.append(f"mor {sc.mor_names[f]} = {dc.mor_names[decl.functor.mmap[f]]}")
    if decl.phi2 is not None:
        for x in sc.objects:
            for y in sc.objects:
                lines.append(
                    f"phi2 {sc.obj_names[x]} {sc.obj_names[y]} = "
                    f"{dc.mor_names[decl.phi2[x][y]]}")
    if decl.phi0 is not None:
        lines.append(f"phi0 = {dc.mor_names[decl.phi0]}")
    lines.append("end")
    return "\n".join(lines) + "\n"


def emit_document(doc: CatDocument) -> str:
    parts = [emit_category(entry) for entry in doc.categories.values()]
    for decl in doc.functors.values():
        parts.append(emit_functor(
            decl, doc.categories[decl.source], doc.categories[decl.target]))
    return "\n".join(parts)
