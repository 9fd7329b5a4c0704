"""Strict associative tensor structure on a finite category.

Tables are fully materialized: ``otab[a][b]`` on objects and
``mtab[f][g]`` (f is the left factor) on morphisms.  Strictness is
asserted by validation, never repaired.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidStructure
from .fincat import (
    FinCategory,
    Functor,
    ValidationReport,
    Violation,
    is_fully_faithful,
)


@dataclass(frozen=True)
class TensorStructure:
    otab: tuple[tuple[int, ...], ...]
    mtab: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class SemiMonCat:
    cat: FinCategory
    tensor: TensorStructure

    def obj_tensor(self, a: int, b: int) -> int:
        return self.tensor.otab[a][b]

    def mor_tensor(self, f: int, g: int) -> int:
        return self.tensor.mtab[f][g]


def validate_tensor(s: SemiMonCat) -> ValidationReport:
    """Check typing, identities, interchange, and strict associativity of the tables."""
    c = s.cat
    otab, mtab = s.tensor.otab, s.tensor.mtab
    out: list[Violation] = []
    n_obj, n_mor = len(c.obj_names), len(c.mor_names)
    if len(otab) != n_obj or any(len(r) != n_obj for r in otab):
        out.append(Violation("tensor-shape", (), "object table has wrong shape"))
    if len(mtab) != n_mor or any(len(r) != n_mor for r in mtab):
        out.append(Violation("tensor-shape", (), "morphism table has wrong shape"))
    if out:
        return ValidationReport(tuple(out))

    for f in c.morphisms:
        for g in c.morphisms:
            h = mtab[f][g]
            if c.dom[h] != otab[c.dom[f]][c.dom[g]] or c.cod[h] != otab[c.cod[f]][c.cod[g]]:
                out.append(Violation(
                    "tensor-typing", (f, g),
                    f"{c.mor_names[f]} (x) {c.mor_names[g]} has wrong endpoints"))
    for a in c.objects:
        for b in c.objects:
            if mtab[c.identity[a]][c.identity[b]] != c.identity[otab[a][b]]:
                out.append(Violation(
                    "tensor-identity", (a, b),
                    f"id (x) id at ({c.obj_names[a]}, {c.obj_names[b]}) is not an identity"))
    # interchange: (g o g') (x) (f o f') = (g (x) f) o (g' (x) f')
    for g in c.morphisms:
        for g2 in c.morphisms:
            if not c.composable(g, g2):
                continue
            gg = c.comp[g][g2]
            for f in c.morphisms:
                for f2 in c.morphisms:
                    if not c.composable(f, f2):
                        continue
                    ff = c.comp[f][f2]
                    lhs = mtab[gg][ff]
                    rhs = c.comp[mtab[g][f]][mtab[g2][f2]]
                    if lhs != rhs:
                        out.append(Violation(
                            "tensor-interchange", (g, g2, f, f2),
                            f"interchange fails on (({c.mor_names[g]},{c.mor_names[g2]}),"
                            f"({c.mor_names[f]},{c.mor_names[f2]}))"))
    for a in c.objects:
        for b in c.objects:
            for d in c.objects:
                if otab[otab[a][b]][d] != otab[a][otab[b][d]]:
                    out.append(Violation(
                        "tensor-associativity", (a, b, d),
                        f"object tensor not associative on "
                        f"({c.obj_names[a]},{c.obj_names[b]},{c.obj_names[d]})"))
    for f in c.morphisms:
        for g in c.morphisms:
            for h in c.morphisms:
                if mtab[mtab[f][g]][h] != mtab[f][mtab[g][h]]:
                    out.append(Violation(
                        "tensor-associativity", (f, g, h),
                        f"morphism tensor not associative on "
                        f"({c.mor_names[f]},{c.mor_names[g]},{c.mor_names[h]})"))
    return ValidationReport(tuple(out))


def left_tensor_functor(s: SemiMonCat, i: int) -> Functor:
    """X |-> I(x)X on objects, f |-> id_I (x) f on morphisms."""
    c = s.cat
    omap = tuple(s.obj_tensor(i, x) for x in c.objects)
    mmap = tuple(s.mor_tensor(c.identity[i], f) for f in c.morphisms)
    return Functor(c, c, omap, mmap)


def right_tensor_functor(s: SemiMonCat, i: int) -> Functor:
    c = s.cat
    omap = tuple(s.obj_tensor(x, i) for x in c.objects)
    mmap = tuple(s.mor_tensor(f, c.identity[i]) for f in c.morphisms)
    return Functor(c, c, omap, mmap)


def is_cancellable(s: SemiMonCat, i: int) -> bool:
    """Tensoring by i on both sides is fully faithful."""
    return is_fully_faithful(left_tensor_functor(s, i)) and is_fully_faithful(
        right_tensor_functor(s, i)
    )


def is_tensor_cancellable(s: SemiMonCat, psi: int) -> bool:
    """Both hom maps f |-> psi(x)f and f |-> f(x)psi are bijections.

    Only defined between cancellable endpoints; other inputs are rejected.
    """
    c = s.cat
    a, b = c.dom[psi], c.cod[psi]
    if not (is_cancellable(s, a) and is_cancellable(s, b)):
        raise InvalidStructure(
            f"endpoints of {c.mor_names[psi]} are not both cancellable objects"
        )
    for x in c.objects:
        for y in c.objects:
            src = c.hom(x, y)
            left_tgt = c.hom(s.obj_tensor(a, x), s.obj_tensor(b, y))
            left_img = {s.mor_tensor(psi, f) for f in src}
            if len(left_img) != len(src) or len(src) != len(left_tgt):
                return False
            right_tgt = c.hom(s.obj_tensor(x, a), s.obj_tensor(y, b))
            right_img = {s.mor_tensor(f, psi) for f in src}
            if len(right_img) != len(src) or len(src) != len(right_tgt):
                return False
    return True
