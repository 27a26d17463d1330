"""Carrier-level checks: groupoid laws, functors, families, path composition."""

import random

import pytest

from twogrp import (
    EndpointMismatch,
    FinGroupoid,
    GFunctor,
    MalformedTable,
    DomainMismatch,
    build_dual_numbers_2group,
    build_mult_endofunctor,
    build_super_line_2group,
    check_naturality,
    compose_path,
    identity_functor,
    validate_functor,
    validate_groupoid,
)
from twogrp.functors import check_fsum_naturality
from twogrp.monoidal import check_structure_naturality

from helpers import SEED, cyclic_one_object, discrete, pair_groupoid_z2, perturb_family


def test_discrete_groupoid_passes():
    assert validate_groupoid(discrete(["a", "b", "c"])).ok


def test_cyclic_groupoid_passes_exhaustively():
    # independent oracle: addition mod 4 is a group, so all laws must hold
    rep = validate_groupoid(cyclic_one_object(4))
    assert rep.ok
    assert rep["associativity"].instances == 4 ** 3


def test_perturbed_compose_fails_associativity():
    gpd = cyclic_one_object(4)
    compose = dict(gpd.compose)
    compose[("1", "1")] = "3"  # oracle says 1+1=2
    bad = FinGroupoid.build(["*"], [(str(k), "*", "*") for k in range(4)],
                            compose, dict(gpd.identity), dict(gpd.inverse))
    rep = validate_groupoid(bad)
    assert not rep.ok
    fail = rep["associativity"]
    assert fail.witness is not None
    h, g, f = fail.witness.index
    # verify the witness against the raw tables
    assert bad.compose[(h, bad.compose[(g, f)])] != bad.compose[(bad.compose[(h, g)], f)]


def test_unknown_morphism_in_compose_is_malformed():
    gpd = cyclic_one_object(2)
    compose = dict(gpd.compose)
    compose[("0", "1")] = "7"
    bad = FinGroupoid.build(["*"], [("0", "*", "*"), ("1", "*", "*")],
                            compose, dict(gpd.identity), dict(gpd.inverse))
    with pytest.raises(MalformedTable):
        validate_groupoid(bad)


# -- compose_path -----------------------------------------------------------


def test_compose_path_singleton():
    gpd = cyclic_one_object(4)
    assert compose_path(gpd, ["3"]) == "3"


def test_compose_path_inverse_law():
    gpd = cyclic_one_object(4)
    # [inverse(f), f] composes to the identity of src(f)
    f = "3"
    assert compose_path(gpd, [gpd.inv(f), f]) == gpd.identity["*"]


def test_compose_path_five_chain_matches_addition_oracle():
    gpd = cyclic_one_object(4)
    chain = ["1", "2", "3", "0", "2"]
    assert sum(int(k) for k in chain) % 4 == 0  # the oracle
    assert compose_path(gpd, chain) == "0"


def test_compose_path_rejects_empty_and_reports_position():
    gpd = discrete(["a", "b"])
    with pytest.raises(ValueError):
        compose_path(gpd, [])
    with pytest.raises(EndpointMismatch) as exc:
        compose_path(gpd, ["0|a", "0|b"])
    assert exc.value.position == 0


def test_compose_path_invariant_under_reassociation():
    gpd = cyclic_one_object(6)
    rng = random.Random(SEED)
    for _ in range(50):
        chain = [str(rng.randrange(6)) for _ in range(rng.randrange(2, 8))]
        whole = compose_path(gpd, chain)
        cut = rng.randrange(1, len(chain))
        split = compose_path(gpd, [compose_path(gpd, chain[:cut]), compose_path(gpd, chain[cut:])])
        assert whole == split


# -- functors ---------------------------------------------------------------


def test_identity_functor_passes():
    gpd = build_super_line_2group().carrier
    assert validate_functor(identity_functor(gpd)).ok


def test_multiplication_functor_passes():
    # functoriality is label linearity: a(n + n') = an + an' mod m
    fun = build_mult_endofunctor(5, 1, 2)
    assert validate_functor(fun.base).ok


def test_perturbed_mor_map_fails_with_witness():
    fun = build_mult_endofunctor(5, 1, 2)
    mor_map = dict(fun.base.mor_map)
    mor_map["1|1+0e"] = "2|1+2e"  # correct value is 1|1+2e
    bad = GFunctor(fun.base.source, fun.base.target, dict(fun.base.obj_map), mor_map)
    rep = validate_functor(bad)
    assert not rep.ok
    assert any(c.witness is not None for c in rep.failures())


def test_partial_map_raises_domain_mismatch():
    gpd = discrete(["a", "b"])
    fun = GFunctor(gpd, gpd, {"a": "a"}, {})
    with pytest.raises(DomainMismatch):
        validate_functor(fun)


# -- naturality -------------------------------------------------------------


def test_identity_unitor_naturality_in_strict_structure():
    m = build_dual_numbers_2group(3, "sm")
    rep = check_structure_naturality(m)
    assert rep.ok


def test_fsum_family_naturality_exhaustive():
    structure = build_dual_numbers_2group(5)
    fun = build_mult_endofunctor(5, 1, 2, structure)
    rep = check_fsum_naturality(fun, structure, structure)
    assert rep.ok
    assert rep.checks[0].instances == 125 ** 2


def test_component_flip_cannot_break_naturality_on_endo_only_carrier():
    # on an endomorphism-only carrier with abelian labels the component sits
    # on both sides of every square, so a flip leaves naturality intact (it
    # breaks the coherence axioms instead; see the functor tests)
    structure = build_dual_numbers_2group(3)
    fun = build_mult_endofunctor(3, 1, 2, structure)
    assert fun.fsum.components[("1+0e", "1+0e")] == "1|2+1e"
    bad_fsum = perturb_family(fun.fsum, ("1+0e", "1+0e"), "0|2+1e")
    bad = type(fun)(fun.base, bad_fsum)
    assert check_fsum_naturality(bad, structure, structure).ok


def test_component_flip_breaks_naturality_on_connected_carrier():
    from twogrp import NatFamily
    from twogrp import expr as ex

    gpd = pair_groupoid_z2()
    fam = NatFamily(1, {(o,): gpd.identity[o] for o in gpd.objects}, ex.var(0), ex.var(0))
    ident_action = lambda fs: fs[0]
    assert check_naturality(fam, ident_action, ident_action, domain=gpd).ok
    flipped = perturb_family(fam, ("b",), "1|bb")
    rep = check_naturality(flipped, ident_action, ident_action, domain=gpd)
    assert not rep.ok
    wit = rep.failures()[0].witness
    assert wit is not None
    # the failing test morphism must cross between the two objects
    f = wit.index[0]
    assert gpd.src(f) != gpd.dst(f)


def test_check_naturality_sampled_mode_is_deterministic():
    m = build_dual_numbers_2group(3, "sm")
    env = m.env()
    from twogrp import expr as ex

    fam = m.assoc
    lhs = ex.mor_action(fam.src_expr, env)
    rhs = ex.mor_action(fam.tgt_expr, env)
    r1 = check_naturality(fam, lhs, rhs, domain=m.carrier, sample=500, seed=7)
    r2 = check_naturality(fam, lhs, rhs, domain=m.carrier, sample=500, seed=7)
    assert r1.checks[0].instances == r2.checks[0].instances == 500
    assert r1.checks[0].mode == "sampled(n=500,seed=7)"
