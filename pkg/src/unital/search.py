"""Bounded hunt for a lax compatibility holding on one side only.

Whether a lax functor can be compatible with the left constraints but not
the right ones is open; this scan can only ever report a witness or "no
counterexample within bounds", never a universal claim.
"""

from __future__ import annotations

from .budget import CandidateBudget
from .fixtures import corpus, enumerate_semigroups, gen_delooping
from .monfun import check_lr_left, check_lr_right, enumerate_multiplicative
from .units import enumerate_saavedra_units


def _candidate_categories(max_objects: int, max_morphisms: int):
    cats = []
    for name, smc in corpus().items():
        cats.append((name, smc))
    for n in range(1, min(max_objects, 3) + 1):
        for idx, table in enumerate(enumerate_semigroups(n)):
            cats.append((f"DELOOP-{n}-{idx}", gen_delooping(table)))
    return [
        (name, smc) for name, smc in cats
        if len(smc.cat.obj_names) <= max_objects
        and len(smc.cat.mor_names) <= max_morphisms
    ]


def bounded_search(max_objects: int = 2, max_morphisms: int = 4,
                   budget: CandidateBudget | None = None) -> dict:
    """Scan small categories for a one-sided lax triangle compatibility."""
    if budget is None:
        budget = CandidateBudget()
    cats = _candidate_categories(max_objects, max_morphisms)
    witnesses = []
    scanned = 0
    for a_name, a in cats:
        units_a = enumerate_saavedra_units(a)
        if not units_a:
            continue
        for b_name, b in cats:
            units_b = enumerate_saavedra_units(b)
            if not units_b:
                continue
            for phi in enumerate_multiplicative(a, b, budget=budget):
                dc = b.cat
                for u in units_a:
                    for v in units_b:
                        for phi0 in dc.hom(v.obj, phi.functor.omap[u.obj]):
                            budget.spend()
                            scanned += 1
                            left = check_lr_left(phi, u, v, phi0)
                            right = check_lr_right(phi, u, v, phi0)
                            if left != right:
                                witnesses.append({
                                    "source": a_name,
                                    "target": b_name,
                                    "phi0": dc.mor_names[phi0],
                                    "left": left,
                                    "right": right,
                                    "strong_phi2": phi.is_strong,
                                })
    return {
        "bounds": {"max_objects": max_objects, "max_morphisms": max_morphisms},
        "categories": [name for name, _ in cats],
        "scanned": scanned,
        "witnesses": witnesses,
        "conclusion": ("witness found" if witnesses
                       else "no counterexample within bounds"),
    }
