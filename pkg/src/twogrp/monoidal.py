"""Symmetric monoidal structure on a finite groupoid.

A structure is the carrier groupoid plus a sum bifunctor table, a unit
object, and the associator / commutator / unitor families.  ``validate_sm``
runs the pentagon, triangle, hexagon and symmetry axioms with witness
reporting; a structure without a commutator is "monoidal only" and the last
two axioms report not-applicable.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import product

from . import expr as ex
from .diagram import check_diagram, strict_profile
from .errors import MissingFamily, NoInverse, UnitorMismatch
from .groupoid import (
    FinGroupoid,
    NatFamily,
    check_naturality,
    compose_path,
    validate_family,
    validate_groupoid,
)
from .report import CheckResult, Report, Status, Witness

# endpoint expressions shared by every sum-like structure
_V0, _V1, _V2 = ex.var(0), ex.var(1), ex.var(2)
ASSOC_SRC = ex.op("+", _V0, ex.op("+", _V1, _V2))
ASSOC_TGT = ex.op("+", ex.op("+", _V0, _V1), _V2)
COMM_SRC = ex.op("+", _V0, _V1)
COMM_TGT = ex.op("+", _V1, _V0)


def assoc_family(components: dict) -> NatFamily:
    """x+(y+z) -> (x+y)+z, indexed by (x, y, z)."""
    return NatFamily(3, components, ASSOC_SRC, ASSOC_TGT)


def comm_family(components: dict) -> NatFamily:
    """x+y -> y+x, indexed by (x, y)."""
    return NatFamily(2, components, COMM_SRC, COMM_TGT)


def lunit_family(components: dict, unit: str, unit_id: str) -> NatFamily:
    """0+x -> x, indexed by (x,)."""
    return NatFamily(1, components, ex.op("+", ex.const(unit, unit_id), _V0), _V0)


def runit_family(components: dict, unit: str, unit_id: str) -> NatFamily:
    """x+0 -> x, indexed by (x,)."""
    return NatFamily(1, components, ex.op("+", _V0, ex.const(unit, unit_id)), _V0)


class SumStructure:
    """Method mixin shared by the monoidal and AC structure types (both carry
    ``carrier``, ``sum_obj``, ``sum_mor``, ``unit`` and a ``_cache``)."""

    def env(self) -> ex.Env:
        return {"+": (self.sum_obj, self.sum_mor)}

    def add(self, x: str, y: str) -> str:
        return self.sum_obj[(x, y)]

    def madd(self, f: str, g: str) -> str:
        return self.sum_mor[(f, g)]

    def id_table_args(self) -> tuple[dict, dict, dict, str]:
        return (self.sum_obj, self.sum_mor, self._cache, "sum_id_pres")


@dataclass
class MonStructure(SumStructure):
    """Sum bifunctor, unit and the a/c/l/r families on a finite groupoid.

    ``comm=None`` marks a plain monoidal structure (used for the
    multiplicative half of a 2-ring).
    """

    carrier: FinGroupoid
    sum_obj: dict[tuple[str, str], str]
    sum_mor: dict[tuple[str, str], str]
    unit: str
    assoc: NatFamily
    comm: NatFamily | None
    lunit: NatFamily
    runit: NatFamily
    _cache: dict = field(default_factory=dict, compare=False, repr=False)

    def families(self) -> dict[str, NatFamily]:
        fams = {"a": self.assoc, "l": self.lunit, "r": self.runit}
        if self.comm is not None:
            fams["c"] = self.comm
        return fams


@dataclass(frozen=True)
class WeakInverseCert:
    """An object, a weak inverse for it, and the witnessing isomorphism
    eta: 0 -> inverse + x."""

    obj: str
    inverse: str
    eta: str


def _check_bifunctor(m: MonStructure, report: Report) -> None:
    gpd = m.carrier
    started = time.perf_counter()
    witness = None
    n = 0
    for (x, y), z in sorted(m.sum_obj.items()):
        n += 1
        if z not in set(gpd.objects):
            witness = Witness((x, y), note="sum sends pair outside the carrier")
            break
        if m.sum_mor.get((gpd.identity[x], gpd.identity[y])) != gpd.identity[z]:
            witness = Witness((x, y), note="sum of identities is not the identity of the sum")
            break
    if witness is None:
        for x, y in product(gpd.objects_sorted, repeat=2):
            if (x, y) not in m.sum_obj:
                witness = Witness((x, y), note="sum object table not total")
                break
    if witness is None:
        mors = gpd.morphisms_sorted
        for f in mors:
            if witness:
                break
            for g in mors:
                if (f, g) not in m.sum_mor:
                    witness = Witness((f, g), note="sum morphism table not total")
                    break
    if witness is None:
        for (f, g), h in sorted(m.sum_mor.items()):
            n += 1
            mf, mg = gpd.morphisms[f], gpd.morphisms[g]
            if gpd.src(h) != m.sum_obj[(mf.src, mg.src)] or gpd.dst(h) != m.sum_obj[(mf.dst, mg.dst)]:
                witness = Witness((f, g), left=h, note="sum morphism has wrong endpoints")
                break
    if witness is None:
        # functoriality: (g o f) + (g' o f') == (g + g') o (f + f')
        comp = gpd.compose
        pairs = sorted(comp)
        for (g, f) in pairs:
            for (g2, f2) in pairs:
                n += 1
                lhs = m.sum_mor[(comp[(g, f)], comp[(g2, f2)])]
                rhs = comp.get((m.sum_mor[(g, g2)], m.sum_mor[(f, f2)]))
                if lhs != rhs:
                    witness = Witness((g, f, g2, f2), left=lhs, right=rhs)
                    break
            if witness:
                break
    status = Status.FAIL if witness is not None else Status.PASS
    report.add(CheckResult("bifunctor", status, witness, n, "exhaustive", time.perf_counter() - started))


def _check_families(m: MonStructure, report: Report) -> None:
    env = m.env()
    for name, fam in m.families().items():
        report.extend(validate_family(m.carrier, fam, env, label=name))


def pentagon_legs(m: MonStructure):
    a, so, ident, sm = m.assoc.components, m.sum_obj, m.carrier.identity, m.sum_mor

    def legs(idx):
        x, y, z, t = idx
        zt = so[(z, t)]
        xy = so[(x, y)]
        yz = so[(y, z)]
        left = [a[(xy, z, t)], a[(x, y, zt)]]
        right = [
            sm[(a[(x, y, z)], ident[t])],
            a[(x, yz, t)],
            sm[(ident[x], a[(y, z, t)])],
        ]
        return left, right

    return legs


def triangle_legs(m: MonStructure):
    a, l, r = m.assoc.components, m.lunit.components, m.runit.components
    ident, sm, unit = m.carrier.identity, m.sum_mor, m.unit

    def legs(idx):
        x, y = idx
        left = [sm[(r[(x,)], ident[y])], a[(x, unit, y)]]
        right = [sm[(ident[x], l[(y,)])]]
        return left, right

    return legs


def hexagon_legs(m: MonStructure):
    a, c = m.assoc.components, m.comm.components
    so, ident, sm = m.sum_obj, m.carrier.identity, m.sum_mor

    def legs(idx):
        x, y, z = idx
        left = [a[(z, x, y)], c[(so[(x, y)], z)], a[(x, y, z)]]
        right = [sm[(c[(x, z)], ident[y])], a[(x, z, y)], sm[(ident[x], c[(y, z)])]]
        return left, right

    return legs


def symmetry_legs(m: MonStructure):
    c, so, ident = m.comm.components, m.sum_obj, m.carrier.identity

    def legs(idx):
        x, y = idx
        return [c[(y, x)], c[(x, y)]], [ident[so[(x, y)]]]

    return legs


def validate_sm(
    m: MonStructure,
    *,
    check_data: bool = True,
    check_carrier: bool = False,
    sample: int | None = None,
    seed: int = 0,
    workers: int = 1,
    allow_strict_skip: bool = True,
) -> Report:
    """Run the symmetric monoidal axiom suite (pentagon, triangle, hexagon,
    symmetry) plus, by default, the bifunctor and family endpoint checks.

    Hexagon and symmetry report not-applicable when the commutator is
    absent.  ``sample`` draws a fixed-seed random subset of each axiom's
    object-tuple space instead of iterating it exhaustively.
    """
    if m.assoc is None or m.lunit is None or m.runit is None:
        raise MissingFamily("a, l, r are required for the monoidal axiom suite")
    report = Report()
    if check_carrier:
        report.extend(validate_groupoid(m.carrier), prefix="carrier:")
    if check_data:
        _check_bifunctor(m, report)
        _check_families(m, report)
        if not report.ok:
            return report

    gpd = m.carrier
    objs = gpd.objects_sorted
    tables = [m.id_table_args()]
    env = m.env()

    def run(law, arity, legs_fn, fams):
        skip = allow_strict_skip and strict_profile(gpd, [(f, env) for f in fams], tables)
        report.add(
            check_diagram(
                law, gpd, objs, arity, legs_fn,
                sample=sample, seed=seed, workers=workers, strict_skip=skip,
            )
        )

    run("SC1", 4, pentagon_legs(m), [m.assoc])
    run("SC2", 2, triangle_legs(m), [m.assoc, m.lunit, m.runit])
    if m.comm is None:
        report.add(CheckResult("SC3", Status.NOT_APPLICABLE, None, 0, "skipped"))
        report.add(CheckResult("SC4", Status.NOT_APPLICABLE, None, 0, "skipped"))
    else:
        run("SC3", 3, hexagon_legs(m), [m.assoc, m.comm])
        run("SC4", 2, symmetry_legs(m), [m.comm])
    return report


def check_structure_naturality(m, *, sample: int | None = None, seed: int = 0) -> Report:
    """Naturality squares for every family a structure carries (works for
    both the symmetric and the AC presentation)."""
    report = Report()
    env = m.env()
    for name, fam in m.families().items():
        lhs = ex.mor_action(fam.src_expr, env)
        rhs = ex.mor_action(fam.tgt_expr, env)
        report.extend(
            check_naturality(
                fam, lhs, rhs, domain=m.carrier, sample=sample, seed=seed, label=f"naturality({name})"
            )
        )
    return report


check_sm_naturality = check_structure_naturality


def basic_unitor(m: MonStructure) -> str:
    """The coinciding unitor component at the unit: 0+0 -> 0.

    Raises :class:`UnitorMismatch` when the left and right components at the
    unit differ, which signals a structure violating the unit coherence.
    """
    l0 = m.lunit.at(m.unit)
    r0 = m.runit.at(m.unit)
    if l0 != r0:
        raise UnitorMismatch(f"l and r disagree at the unit: {l0!r} != {r0!r}")
    return l0


def weak_inverse_candidates(m: MonStructure, x: str) -> list[WeakInverseCert]:
    """All certificates (inverse, eta) for ``x``, in canonical order."""
    gpd = m.carrier
    out = []
    for cand in gpd.objects_sorted:
        for eta in gpd.hom(m.unit, m.add(cand, x)):
            out.append(WeakInverseCert(x, cand, eta))
    return out


def find_weak_inverse(m: MonStructure, x: str) -> WeakInverseCert:
    """First weak inverse certificate for ``x`` in canonical order.

    Raises :class:`NoInverse` when no object sums with ``x`` into something
    isomorphic to the unit.
    """
    gpd = m.carrier
    for cand in gpd.objects_sorted:
        hom = gpd.hom(m.unit, m.add(cand, x))
        if hom:
            return WeakInverseCert(x, cand, hom[0])
    raise NoInverse(x)


def validate_2group(
    m: MonStructure,
    *,
    sample: int | None = None,
    seed: int = 0,
    workers: int = 1,
    allow_strict_skip: bool = True,
) -> Report:
    """Carrier groupoid laws + symmetric monoidal axioms + a weak inverse for
    every object.  Certificates are recorded under
    ``report.artifacts["weak_inverses"]``."""
    report = Report()
    report.extend(validate_groupoid(m.carrier), prefix="carrier:")
    if not report.ok:
        return report
    report.extend(
        validate_sm(m, sample=sample, seed=seed, workers=workers, allow_strict_skip=allow_strict_skip)
    )
    started = time.perf_counter()
    certs = []
    witness = None
    for x in m.carrier.objects_sorted:
        try:
            certs.append(find_weak_inverse(m, x))
        except NoInverse:
            witness = Witness((x,), note="no weak inverse")
            break
    status = Status.FAIL if witness is not None else Status.PASS
    report.add(
        CheckResult("weak-inverses", status, witness, len(m.carrier.objects), "exhaustive",
                    time.perf_counter() - started)
    )
    report.artifacts["weak_inverses"] = certs
    return report


def eta_roundtrip_is_identity(m: MonStructure, cert: WeakInverseCert) -> bool:
    """eta^-1 o eta == id(0); holds in any groupoid, kept as a cross-check."""
    gpd = m.carrier
    return compose_path(gpd, [gpd.inv(cert.eta), cert.eta]) == gpd.identity[m.unit]
