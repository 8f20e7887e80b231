"""Monoid layer: re-coordinatization, idempotent posets, the envelope."""

import pytest

from idempotoric.errors import InputError
from idempotoric.monoids import (
    Idempotent,
    WeightMonoid,
    canonical_form,
    idempotent_product,
    idempotents,
    largest_idempotent,
    maximal_chain_length,
    monoid_from_generators,
    smallest_idempotent,
    toric_envelope,
)

from conftest import random_cone_inputs


def quadrant_monoid():
    return monoid_from_generators([(1, 0), (0, 1), (1, 1)])


# -- re-coordinatization -----------------------------------------------------


def test_scaled_generators_land_in_lattice_coordinates():
    w = monoid_from_generators([(2, 0), (0, 2), (2, 2)])
    assert w.ambient_rank == 2
    assert w.generators == ((1, 0), (0, 1), (1, 1))


def test_unimodular_generators_unchanged():
    w = monoid_from_generators([(1, 0), (0, 1)])
    assert w.ambient_rank == 2
    assert w.generators == ((1, 0), (0, 1))


def test_zero_generator_gives_trivial_monoid():
    w = monoid_from_generators([(0, 0)])
    assert w.ambient_rank == 0
    assert w.generators == ((),)


def test_skewed_lattice_coordinates():
    # lattice generated by (2,1) and (0,3); coordinates must be exact
    w = monoid_from_generators([(2, 1), (0, 3), (2, 4)])
    assert w.ambient_rank == 2
    cols = len(w.generators[0])
    assert cols == 2
    assert w.generators[2] == tuple(
        a + b for a, b in zip(w.generators[0], w.generators[1])
    )


def test_labels_recorded_and_validated():
    w = monoid_from_generators([(1, 0), (0, 1)], labels=("t1", "t2"))
    assert w.labels == ("t1", "t2")
    with pytest.raises(InputError):
        monoid_from_generators([(1, 0)], labels=("t1", "t2"))


def test_empty_generator_list_rejected():
    with pytest.raises(InputError):
        monoid_from_generators([])


def test_ragged_generators_rejected():
    with pytest.raises(InputError):
        monoid_from_generators([(1, 0), (1,)])


# -- idempotent posets -------------------------------------------------------


def test_quadrant_poset_frozen():
    p = idempotents(quadrant_monoid())
    assert [e.index_set for e in p.elements] == [(), (1,), (2,), (1, 2, 3)]
    assert [e.face_dim for e in p.elements] == [0, 1, 1, 2]
    assert p.smallest == 0
    assert p.largest == 3
    assert maximal_chain_length(p) == 2


def test_group_case_single_idempotent():
    p = idempotents(monoid_from_generators([(1,), (-1,)]))
    assert len(p.elements) == 1
    assert p.elements[0].index_set == (1, 2)
    assert p.smallest == p.largest
    assert maximal_chain_length(p) == 0


def test_trivial_monoid_single_idempotent():
    p = idempotents(monoid_from_generators([(0, 0)]))
    assert len(p.elements) == 1
    assert p.elements[0].index_set == (1,)
    assert smallest_idempotent(p) == largest_idempotent(p)


def test_interior_generator_cone_chain():
    p = idempotents(monoid_from_generators([(1, 0), (0, 1), (2, -2)]))
    assert len(p.elements) == 4
    assert (3,) in [e.index_set for e in p.elements]
    assert maximal_chain_length(p) == 2


def test_product_is_meet():
    p = idempotents(quadrant_monoid())
    by_set = {e.index_set: e for e in p.elements}
    assert idempotent_product(p, by_set[(1,)], by_set[(2,)]) == by_set[()]
    top = largest_idempotent(p)
    for e in p.elements:
        assert idempotent_product(p, e, top) == e
        assert idempotent_product(p, e, e) == e


def test_product_rejects_foreign_idempotent():
    p = idempotents(quadrant_monoid())
    with pytest.raises(InputError):
        idempotent_product(p, p.elements[0], Idempotent((7,), 1))


def test_smallest_is_product_of_everything():
    p = idempotents(quadrant_monoid())
    assert smallest_idempotent(p).index_set == ()
    assert largest_idempotent(p).index_set == (1, 2, 3)
    acc = p.elements[p.largest]
    for e in p.elements:
        acc = idempotent_product(p, acc, e)
    assert acc == smallest_idempotent(p)


def test_zero_generator_lies_in_every_idempotent():
    p = idempotents(monoid_from_generators([(0, 0), (1, 0)]))
    for e in p.elements:
        assert 1 in e.index_set


# -- toric envelope ----------------------------------------------------------


def test_envelope_of_group_is_a_point():
    rep = toric_envelope(monoid_from_generators([(1,), (-1,)]))
    assert rep.quotient_rank == 0
    assert rep.envelope_dim == 0
    assert rep.unit_lattice.basis.entries == ((1,),)
    assert rep.projected_generators == ((), ())
    assert len(rep.envelope_idempotent_poset.elements) == 1


def test_envelope_of_pointed_cone_is_itself():
    w = quadrant_monoid()
    rep = toric_envelope(w)
    assert rep.quotient_rank == 2
    assert rep.envelope_dim == 2
    assert rep.unit_lattice.rank == 0
    assert rep.projected_generators == w.generators
    assert rep.envelope_idempotent_poset == idempotents(w)


def test_envelope_projects_out_lineality_line():
    rep = toric_envelope(monoid_from_generators([(1, 0), (-1, 0), (0, 1)]))
    assert rep.unit_lattice.basis.entries == ((1, 0),)
    assert rep.quotient_rank == 1
    assert rep.projected_generators == ((0,), (0,), (1,))
    assert len(rep.envelope_idempotent_poset.elements) == 2
    assert rep.envelope_dim == 1


def test_envelope_matches_chain_length_and_poset_shape():
    for dim, gens in random_cone_inputs(seed=606, count=40, max_dim=4, max_gens=6):
        w = monoid_from_generators(gens or [(0,) * dim])
        p = idempotents(w)
        rep = toric_envelope(w)
        assert rep.envelope_dim == maximal_chain_length(p)
        assert rep.envelope_dim == w.ambient_rank - rep.unit_lattice.rank
        env = rep.envelope_idempotent_poset
        assert [e.index_set for e in env.elements] == [e.index_set for e in p.elements]
        assert env.hasse_edges == p.hasse_edges
        k = rep.unit_lattice.rank
        for a, b in zip(env.elements, p.elements):
            assert a.face_dim == b.face_dim - k


# -- canonical form ----------------------------------------------------------


def test_canonical_form_scale_invariant():
    a = canonical_form(monoid_from_generators([(2, 0), (0, 2), (2, 2)]))
    b = canonical_form(monoid_from_generators([(6, 0), (0, 6), (6, 6)]))
    assert a == b
    assert a != canonical_form(monoid_from_generators([(1, 0), (0, 1)]))


def test_canonical_form_ignores_repeats_and_order():
    a = canonical_form(monoid_from_generators([(1, 0), (0, 1), (1, 0)]))
    b = canonical_form(monoid_from_generators([(0, 1), (1, 0)]))
    assert a == b


def test_direct_construction_validated_at_use():
    bad = WeightMonoid(2, ((1, 0),), None)
    with pytest.raises(InputError):
        idempotents(bad)
