"""Shared test fixtures, perturbation utilities and small oracles."""

from __future__ import annotations

import random
from dataclasses import replace
from itertools import product

from twogrp import (
    FinGroupoid,
    GFunctor,
    MonStructure,
    StructuredFunctor,
    build_strict_2ring,
    canonical_zero_iso,
    ring_zmod,
)
from twogrp.functors import check_fsum_naturality, fsum_family
from twogrp.groupoid import validate_functor
from twogrp.monoidal import basic_unitor

SEED = 20250811


# ---------------------------------------------------------------------------
# small groupoids and structures
# ---------------------------------------------------------------------------


def cyclic_one_object(m: int) -> FinGroupoid:
    """One object "*" with endomorphisms Z/m composing by addition."""
    mors = [(str(k), "*", "*") for k in range(m)]
    compose = {(str(g), str(f)): str((g + f) % m) for g in range(m) for f in range(m)}
    identity = {"*": "0"}
    inverse = {str(k): str((-k) % m) for k in range(m)}
    return FinGroupoid.build(["*"], mors, compose, identity, inverse)


def discrete(objects: list[str]) -> FinGroupoid:
    mors = [(f"0|{x}", x, x) for x in objects]
    identity = {x: f"0|{x}" for x in objects}
    compose = {(i, i): i for i in identity.values()}
    inverse = {i: i for i in identity.values()}
    return FinGroupoid.build(objects, mors, compose, identity, inverse)


def pair_groupoid_z2() -> FinGroupoid:
    """Connected groupoid on objects a, b: every hom-set has two morphisms
    labelled by Z/2, composition adds labels.  The smallest carrier on which
    a family component flip can genuinely break a naturality square."""
    objs = ["a", "b"]
    mors = []
    compose = {}
    for s in objs:
        for d in objs:
            for k in (0, 1):
                mors.append((f"{k}|{s}{d}", s, d))
    for s in objs:
        for mid in objs:
            for d in objs:
                for k1 in (0, 1):
                    for k2 in (0, 1):
                        compose[(f"{k1}|{mid}{d}", f"{k2}|{s}{mid}")] = f"{(k1 + k2) % 2}|{s}{d}"
    identity = {o: f"0|{o}{o}" for o in objs}
    inverse = {f"{k}|{s}{d}": f"{k}|{d}{s}" for s in objs for d in objs for k in (0, 1)}
    return FinGroupoid.build(objs, mors, compose, identity, inverse)


def one_object_2group(m: int) -> MonStructure:
    """The one-object strict 2-group with endomorphism labels Z/m."""
    from twogrp.monoidal import assoc_family, comm_family, lunit_family, runit_family

    gpd = cyclic_one_object(m)
    sum_obj = {("*", "*"): "*"}
    sum_mor = {(str(i), str(j)): str((i + j) % m) for i in range(m) for j in range(m)}
    a = assoc_family({("*", "*", "*"): "0"})
    c = comm_family({("*", "*"): "0"})
    l = lunit_family({("*",): "0"}, "*", "0")
    r = runit_family({("*",): "0"}, "*", "0")
    return MonStructure(gpd, sum_obj, sum_mor, "*", a, c, l, r)


def strict_cyclic_2group(m: int) -> MonStructure:
    """Discrete strict 2-group on Z/m (the additive half of the strict ring)."""
    return build_strict_2ring(ring_zmod(m)).add


def max_monoid_structure() -> MonStructure:
    """Discrete symmetric structure with sum = max on {0,1,2}: valid and
    strict, but objects 1 and 2 have no weak inverse."""
    from twogrp.monoidal import assoc_family, comm_family, lunit_family, runit_family

    objs = ["0", "1", "2"]
    gpd = discrete(objs)
    sum_obj = {(x, y): max(x, y) for x in objs for y in objs}
    ident = gpd.identity
    sum_mor = {
        (ident[x], ident[y]): ident[sum_obj[(x, y)]] for x in objs for y in objs
    }
    a = assoc_family({(x, y, z): ident[max(x, y, z)] for x in objs for y in objs for z in objs})
    c = comm_family({(x, y): ident[max(x, y)] for x in objs for y in objs})
    l = lunit_family({(x,): ident[x] for x in objs}, "0", ident["0"])
    r = runit_family({(x,): ident[x] for x in objs}, "0", ident["0"])
    return MonStructure(gpd, sum_obj, sum_mor, "0", a, c, l, r)


def constant_zero_endofunctor(m: MonStructure) -> StructuredFunctor:
    """The endomorphism sending everything to the unit."""
    gpd = m.carrier
    unit_id = gpd.identity[m.unit]
    base = GFunctor(gpd, gpd, {x: m.unit for x in gpd.objects}, {f: unit_id for f in gpd.morphisms})
    comps = {(x, y): basic_unitor(m) for x in gpd.objects for y in gpd.objects}
    return StructuredFunctor(base, fsum_family(comps), unit_id)


def with_canonical_zero(fun: StructuredFunctor, src: MonStructure, tgt: MonStructure) -> StructuredFunctor:
    return fun.with_zero(canonical_zero_iso(fun, src, tgt))


# ---------------------------------------------------------------------------
# perturbation utilities
# ---------------------------------------------------------------------------


def perturb_family(fam, index: tuple[str, ...], new_mor: str):
    comps = dict(fam.components)
    comps[index] = new_mor
    return replace(fam, components=comps, _cache={})


def parallel_morphisms(gpd: FinGroupoid, mid: str) -> list[str]:
    """Other morphisms with the same endpoints, canonical order."""
    m = gpd.morphisms[mid]
    return [o for o in gpd.hom(m.src, m.dst) if o != mid]


def random_flip(gpd: FinGroupoid, fam, rng: random.Random):
    """Replace one component by a different morphism: a parallel one when the
    carrier has any, otherwise a different object's identity (which breaks
    the component's endpoints; checkers must still report, not crash)."""
    idx = rng.choice(sorted(fam.components))
    old = fam.components[idx]
    alts = parallel_morphisms(gpd, old)
    if alts:
        new = rng.choice(alts)
    else:
        others = [i for i in gpd.identity.values() if i != old]
        new = rng.choice(others)
    return perturb_family(fam, idx, new), idx


# ---------------------------------------------------------------------------
# exhaustive endofunctor enumeration (small carriers only)
# ---------------------------------------------------------------------------


def all_structured_endofunctors(m: MonStructure) -> list[StructuredFunctor]:
    """Every (F, F_+) pair on a small structure: all object maps, all
    endpoint-compatible morphism maps that are functorial, all
    endpoint-compatible monoidality families that are natural."""
    gpd = m.carrier
    objs = gpd.objects_sorted
    mors = gpd.morphisms_sorted
    out = []
    for obj_choice in product(objs, repeat=len(objs)):
        obj_map = dict(zip(objs, obj_choice))
        candidates = []
        for f in mors:
            mf = gpd.morphisms[f]
            cands = gpd.hom(obj_map[mf.src], obj_map[mf.dst])
            if not cands:
                break
            candidates.append(cands)
        else:
            for mor_choice in product(*candidates):
                base = GFunctor(gpd, gpd, obj_map, dict(zip(mors, mor_choice)))
                if not validate_functor(base).ok:
                    continue
                fsum_cands = []
                pairs = list(product(objs, repeat=2))
                for x, y in pairs:
                    cands = gpd.hom(
                        m.sum_obj[(obj_map[x], obj_map[y])], obj_map[m.sum_obj[(x, y)]]
                    )
                    if not cands:
                        break
                    fsum_cands.append(cands)
                else:
                    for comp_choice in product(*fsum_cands):
                        fun = StructuredFunctor(base, fsum_family(dict(zip(pairs, comp_choice))))
                        if check_fsum_naturality(fun, m, m).ok:
                            out.append(fun)
    return out
