"""Fair monoidal categories: a contractible category of units taken whole.

A fair presentation is a gentle strict multiplicative inclusion of a
contractible semi-monoidal category.  Instead of choosing one unit, the
whole contractible family is carried along; this module realises the
round trip to and from ordinary unit-bearing categories and the
corresponding translation of functors and monoids.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidStructure, TheoremViolation
from .fincat import (
    Functor,
    ValidationReport,
    Violation,
    is_contractible,
    validate_functor,
)
from .monfun import (
    MultiplicativeFunctor,
    check_saavedra_compat_strong,
    lift_to_unit_categories,
    saavedra_monoid_check,
    validate_multiplicative,
)
from .tensor import SemiMonCat, is_cancellable
from .units import (
    SaavedraUnit,
    UnitCategory,
    canonical_unit_morphism,
    is_saavedra_unit,
    is_unit_morphism,
    unit_category,
)


@dataclass(frozen=True)
class FairPresentation:
    units: SemiMonCat
    base: SemiMonCat
    inc: Functor


@dataclass(frozen=True)
class FairFunctor:
    src: FairPresentation
    dst: FairPresentation
    phi_u: MultiplicativeFunctor
    phi_c: MultiplicativeFunctor


def is_gentle_functor(inc: Functor, target: SemiMonCat) -> bool:
    """Both induced tensor pairings out of the product are fully faithful.

    The source needs no tensor of its own; only the hom maps
    (psi, f) |-> inc(psi) (x) f and (f, psi) |-> f (x) inc(psi) matter.
    """
    u, c = inc.source, target.cat
    for a in u.objects:
        for b in u.objects:
            for x in c.objects:
                for y in c.objects:
                    src_count = len(u.hom(a, b)) * len(c.hom(x, y))
                    left_tgt = c.hom(target.obj_tensor(inc.omap[a], x),
                                     target.obj_tensor(inc.omap[b], y))
                    left_img = {
                        target.mor_tensor(inc.mmap[p], f)
                        for p in u.hom(a, b) for f in c.hom(x, y)}
                    if len(left_img) != src_count or src_count != len(left_tgt):
                        return False
                    right_tgt = c.hom(target.obj_tensor(x, inc.omap[a]),
                                      target.obj_tensor(y, inc.omap[b]))
                    right_img = {
                        target.mor_tensor(f, inc.mmap[p])
                        for p in u.hom(a, b) for f in c.hom(x, y)}
                    if len(right_img) != src_count or src_count != len(right_tgt):
                        return False
    return True


def gentle_iff_cancellable_audit(inc: Functor, target: SemiMonCat) -> bool:
    """With a contractible source, gentleness is cancellability of any image.

    Asserts the equivalence against the least object and that the verdict
    is constant over every object of the source.
    """
    if not is_contractible(inc.source):
        raise InvalidStructure("audit needs a contractible source")
    gentle = is_gentle_functor(inc, target)
    verdicts = [is_cancellable(target, inc.omap[a]) for a in inc.source.objects]
    if len(set(verdicts)) > 1:
        raise TheoremViolation(
            "cancellability differs between images of a contractible source",
            witness={"verdicts": verdicts})
    if gentle != verdicts[0]:
        raise TheoremViolation(
            "gentleness and cancellability disagree",
            witness={"gentle": gentle, "cancellable": verdicts[0]})
    return gentle


def _strict_multiplicative(inc: Functor, u: SemiMonCat, c: SemiMonCat) -> bool:
    for a in u.cat.objects:
        for b in u.cat.objects:
            if inc.omap[u.obj_tensor(a, b)] != c.obj_tensor(inc.omap[a], inc.omap[b]):
                return False
    for f in u.cat.morphisms:
        for g in u.cat.morphisms:
            if inc.mmap[u.mor_tensor(f, g)] != c.mor_tensor(inc.mmap[f], inc.mmap[g]):
                return False
    return True


def validate_fair(p: FairPresentation) -> ValidationReport:
    out: list[Violation] = []
    if not validate_functor(p.inc).ok:
        out.append(Violation("fair-inclusion", (), "inclusion is not a functor"))
        return ValidationReport(tuple(out))
    if not is_contractible(p.units.cat):
        out.append(Violation("fair-contractible", (), "unit part is not contractible"))
    if not _strict_multiplicative(p.inc, p.units, p.base):
        out.append(Violation("fair-strict", (), "inclusion is not strictly multiplicative"))
    if not is_gentle_functor(p.inc, p.base):
        out.append(Violation("fair-gentle", (), "inclusion is not gentle"))
    return ValidationReport(tuple(out))


def to_fair(s: SemiMonCat) -> tuple[FairPresentation, UnitCategory]:
    """Package the whole category of units as the fair form of s."""
    uc = unit_category(s)
    if uc.empty:
        raise InvalidStructure("category has no unit; nothing to present fairly")
    p = FairPresentation(uc.smc, s, uc.forget)
    rep = validate_fair(p)
    if not rep.ok:
        raise TheoremViolation("category of units does not present fairly",
                               witness=rep.as_dict())
    return p, uc


def from_fair(p: FairPresentation, choice: int | None = None) -> SaavedraUnit:
    """Choose an object of the unit part (least id by default) and read off
    its multiplication through the inclusion; any choice is as good."""
    rep = validate_fair(p)
    if not rep.ok:
        raise InvalidStructure("invalid fair presentation")
    if not p.units.cat.obj_names:
        raise InvalidStructure("unit part is empty")
    i = 0 if choice is None else choice
    ii = p.units.obj_tensor(i, i)
    (m,) = p.units.cat.hom(ii, i)
    unit = SaavedraUnit(p.inc.omap[i], p.inc.mmap[m])
    if not is_saavedra_unit(p.base, unit):
        raise TheoremViolation("chosen object does not induce a unit",
                               witness={"choice": i})
    return unit


def embed_units(p: FairPresentation) -> dict:
    """The comparison of the unit part into the full category of units.

    Every object of the unit part lands on a genuine unit and every arrow
    on a unit morphism; the embedding may hit a proper subfamily.
    """
    uc = unit_category(p.base)
    mapping = []
    for i in p.units.cat.objects:
        unit = from_fair(p, choice=i)
        if unit not in uc.units:
            raise TheoremViolation("unit-part object misses the category of units",
                                   witness={"object": i})
        mapping.append(uc.unit_index(unit))
    for m in p.units.cat.morphisms:
        a, b = p.units.cat.dom[m], p.units.cat.cod[m]
        psi = p.inc.mmap[m]
        if not is_unit_morphism(p.base, uc.units[mapping[a]], uc.units[mapping[b]], psi):
            raise TheoremViolation("unit-part arrow is not a unit morphism",
                                   witness={"arrow": m})
    return {
        "object_images": mapping,
        "surjective": sorted(set(mapping)) == list(range(len(uc.units))),
        "total_units": len(uc.units),
    }


def fair_functor_from_monoidal(phi: MultiplicativeFunctor) -> FairFunctor:
    """Lift a strongly compatible functor to its fair form."""
    lift = lift_to_unit_categories(phi)
    p_src = FairPresentation(lift.uc_src.smc, phi.source, lift.uc_src.forget)
    p_dst = FairPresentation(lift.uc_dst.smc, phi.target, lift.uc_dst.forget)
    ff = FairFunctor(p_src, p_dst, lift.functor, phi)
    rep = validate_fair_functor(ff)
    if not rep.ok:
        raise TheoremViolation("lifted functor does not form a fair functor",
                               witness=rep.as_dict())
    return ff


def validate_fair_functor(ff: FairFunctor) -> ValidationReport:
    """The square commutes as strong multiplicative functors."""
    out: list[Violation] = []
    for p in (ff.src, ff.dst):
        rep = validate_fair(p)
        if not rep.ok:
            out.append(Violation("fair-part", (), "presentation invalid"))
            return ValidationReport(tuple(out))
    for phi in (ff.phi_u, ff.phi_c):
        if not validate_multiplicative(phi).ok or not phi.is_strong:
            out.append(Violation("fair-functor", (), "component not strong multiplicative"))
            return ValidationReport(tuple(out))
    u = ff.src.units.cat
    for a in u.objects:
        if ff.dst.inc.omap[ff.phi_u.functor.omap[a]] != ff.phi_c.functor.omap[ff.src.inc.omap[a]]:
            out.append(Violation("fair-square", (a,), "square fails on objects"))
    for m in u.morphisms:
        if ff.dst.inc.mmap[ff.phi_u.functor.mmap[m]] != ff.phi_c.functor.mmap[ff.src.inc.mmap[m]]:
            out.append(Violation("fair-square", (m,), "square fails on morphisms"))
    for a in u.objects:
        for b in u.objects:
            lhs = ff.dst.inc.mmap[ff.phi_u.phi2[a][b]]
            rhs = ff.phi_c.phi2[ff.src.inc.omap[a]][ff.src.inc.omap[b]]
            if lhs != rhs:
                out.append(Violation("fair-square", (a, b), "square fails on comparison data"))
    return ValidationReport(tuple(out))


def monoidal_from_fair_functor(ff: FairFunctor) -> tuple[int, SaavedraUnit, SaavedraUnit]:
    """Extract the unit comparison from a fair functor.

    phi0 is the image of the unique connecting arrow from the designated
    unit of the target to the image of the designated source unit.
    """
    rep = validate_fair_functor(ff)
    if not rep.ok:
        raise InvalidStructure("invalid fair functor")
    u_src = from_fair(ff.src)
    u_tgt = from_fair(ff.dst)
    img = ff.phi_u.functor.omap[0]
    (connecting,) = ff.dst.units.cat.hom(0, img)
    phi0 = ff.dst.inc.mmap[connecting]
    if not check_saavedra_compat_strong(ff.phi_c, u_src, u_tgt, phi0):
        raise TheoremViolation("fair functor yields no strong compatibility",
                               witness={"phi0": phi0})
    return phi0, u_src, u_tgt


def fair_monoid_check(p: FairPresentation, m: int, mu: int, eta: int,
                      choice: int | None = None) -> bool:
    """A monoid seen fairly: a gentle homomorphism from an included unit."""
    unit = from_fair(p, choice=choice)
    return saavedra_monoid_check(p.base, unit, m, mu, eta)


def choice_independence_audit(p: FairPresentation) -> bool:
    """All choices of unit object are connected by canonical unit morphisms."""
    units = [from_fair(p, choice=i) for i in p.units.cat.objects]
    for u in units:
        for v in units:
            canonical_unit_morphism(p.base, u, v)
    return True
