"""Finitely generated commutative monoids inside a lattice.

A monoid is stored as (lattice, generator images): the lattice is always
re-coordinatized to ZZ^ambient_rank so that the generators span it with
full rank.  Idempotents of the associated algebraic monoid correspond to
faces of the cone the generators span; the poset operations here are thin
1-based wrappers over the face lattice, plus the envelope construction
that projects the ambient lattice along the unit part.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cones import cone_from_generators, enumerate_faces
from .errors import InputError, InternalCheckError
from .lattices import (
    IntegerMatrix,
    Sublattice,
    lattice_member,
    rank,
    row_times_matrix,
    saturate,
    smith_normal_form,
)

__all__ = [
    "Idempotent",
    "IdempotentPoset",
    "ToricEnvelopeReport",
    "WeightMonoid",
    "canonical_form",
    "idempotent_product",
    "idempotents",
    "largest_idempotent",
    "maximal_chain_length",
    "monoid_from_generators",
    "smallest_idempotent",
    "toric_envelope",
]


@dataclass(frozen=True)
class WeightMonoid:
    """Generators of a commutative monoid, written in coordinates on the
    lattice they generate (so the generators always have full rank)."""

    ambient_rank: int
    generators: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...] | None = None


@dataclass(frozen=True)
class Idempotent:
    """An idempotent, named by the 1-based indices of the generators it
    fixes; equivalently a face of the generator cone."""

    index_set: tuple[int, ...]
    face_dim: int


@dataclass(frozen=True)
class IdempotentPoset:
    """All idempotents ordered by index-set inclusion, with cover edges.

    ``smallest``/``largest`` index into ``elements``; the smallest element
    is the unit-group idempotent (lineality face), the largest fixes every
    generator.
    """

    elements: tuple[Idempotent, ...]
    hasse_edges: tuple[tuple[int, int], ...]
    smallest: int
    largest: int


@dataclass(frozen=True)
class ToricEnvelopeReport:
    """The smallest irreducible closed subsemigroup containing all the
    idempotents, described by projecting the lattice along the saturated
    unit sublattice."""

    envelope_dim: int
    unit_lattice: Sublattice
    quotient_rank: int
    projected_generators: tuple[tuple[int, ...], ...]
    envelope_idempotent_poset: IdempotentPoset


def monoid_from_generators(raw, labels=None) -> WeightMonoid:
    """Build a WeightMonoid from integer vectors in any ambient space.

    The lattice generated by the vectors is computed exactly; each vector
    is re-expressed in the canonical Hermite basis of that lattice, so the
    result's ambient_rank equals the rank actually spanned.  All-zero
    input is allowed and yields the rank-0 trivial monoid.
    """
    vecs = [tuple(v) for v in raw]
    if not vecs:
        raise InputError("need at least one generator vector")
    width = len(vecs[0])
    for v in vecs:
        for x in v:
            if isinstance(x, bool) or not isinstance(x, int):
                raise InputError(f"generator entries must be plain ints, got {x!r}")
        if len(v) != width:
            raise InputError("generators must share one ambient dimension")
    lam = Sublattice.span(width, vecs)
    gens = []
    for v in vecs:
        coords = lattice_member(lam, v)
        if coords is None:
            raise InternalCheckError("generator escaped its own span")
        gens.append(coords)
    if labels is not None:
        labels = tuple(str(x) for x in labels)
        if len(labels) != len(gens):
            raise InputError("one label per generator required")
    return WeightMonoid(lam.rank, tuple(gens), labels)


def _validate(w: WeightMonoid) -> None:
    for g in w.generators:
        if len(g) != w.ambient_rank:
            raise InputError("generator width does not match ambient_rank")
    mat = IntegerMatrix.from_rows(w.generators, cols=w.ambient_rank)
    if rank(mat) != w.ambient_rank:
        raise InputError(
            "generators do not span the lattice; build via monoid_from_generators"
        )


def _cone_and_poset(w: WeightMonoid):
    _validate(w)
    cone = cone_from_generators(w.ambient_rank, w.generators)
    faces = enumerate_faces(cone)
    elements = tuple(
        Idempotent(tuple(i + 1 for i in f.index_set), f.dim) for f in faces.faces
    )
    return cone, IdempotentPoset(elements, faces.hasse_edges, faces.bottom, faces.top)


def idempotents(w: WeightMonoid) -> IdempotentPoset:
    """The idempotent poset: one element per face of the generator cone,
    ordered by inclusion of (1-based) generator index sets."""
    return _cone_and_poset(w)[1]


def idempotent_product(p: IdempotentPoset, e: Idempotent, f: Idempotent) -> Idempotent:
    """Product of two idempotents: the meet, i.e. index-set intersection."""
    if e not in p.elements or f not in p.elements:
        raise InputError("both idempotents must belong to the poset")
    key = tuple(sorted(set(e.index_set) & set(f.index_set)))
    for el in p.elements:
        if el.index_set == key:
            return el
    raise InternalCheckError("idempotent poset is not closed under meets")


def smallest_idempotent(p: IdempotentPoset) -> Idempotent:
    """Product of all idempotents; checked against the recorded minimum."""
    acc = p.elements[p.largest]
    for e in p.elements:
        acc = idempotent_product(p, acc, e)
    if acc != p.elements[p.smallest]:
        raise InternalCheckError("product of all idempotents missed the minimum")
    return acc


def largest_idempotent(p: IdempotentPoset) -> Idempotent:
    top = p.elements[p.largest]
    cover = set(top.index_set)
    for e in p.elements:
        if not set(e.index_set) <= cover:
            raise InternalCheckError("recorded maximum does not dominate the poset")
    return top


def maximal_chain_length(p: IdempotentPoset) -> int:
    """Common length of every maximal chain from smallest to largest.

    The face poset is graded by dimension, so each cover edge must step by
    exactly one; anything else is an enumeration bug, reported hard.
    """
    for lo, hi in p.hasse_edges:
        if p.elements[hi].face_dim != p.elements[lo].face_dim + 1:
            raise InternalCheckError("idempotent poset is not graded")
    return p.elements[p.largest].face_dim - p.elements[p.smallest].face_dim


def canonical_form(w: WeightMonoid):
    """Hashable form invariant under generator order, repetition, and the
    re-coordinatization monoid_from_generators applies.

    Repeats are dropped: lists of eigenvalue exponent vectors may collide
    after a power map even when the inputs were distinct, and the generated
    monoid cannot tell.
    """
    return (w.ambient_rank, tuple(sorted(set(w.generators))))


def toric_envelope(w: WeightMonoid) -> ToricEnvelopeReport:
    """Project along the saturated sublattice spanned by unit generators.

    The generators lying on the lineality face span the unit part; its
    saturation Λ₀ is split off by a Smith normal form change of basis, and
    the images of all generators in Λ/Λ₀ define the envelope monoid.  The
    envelope's idempotent poset must coincide with the original one
    index-set for index-set, with every face dimension dropping by
    rank(Λ₀); both facts are checked.
    """
    cone, poset = _cone_and_poset(w)
    unit_gens = [
        g
        for g in w.generators
        if all(sum(a * b for a, b in zip(f, g)) == 0 for f in cone.facets)
    ]
    lam0 = saturate(Sublattice.span(w.ambient_rank, unit_gens))
    if lam0 != cone.lineality:
        raise InternalCheckError("unit generators do not span the lineality space")
    k = lam0.rank
    s, _, v = smith_normal_form(lam0.basis)
    for i in range(k):
        if s.entries[i][i] != 1:
            raise InternalCheckError("saturated unit lattice is not a direct summand")
    projected = tuple(tuple(row_times_matrix(g, v)[k:]) for g in w.generators)
    env = WeightMonoid(w.ambient_rank - k, projected, w.labels)
    env_cone, env_poset = _cone_and_poset(env)
    if env_cone.lineality.rank != 0:
        raise InternalCheckError("envelope cone is not pointed")
    if [e.index_set for e in env_poset.elements] != [
        e.index_set for e in poset.elements
    ]:
        raise InternalCheckError("envelope faces do not match the original faces")
    if (
        env_poset.hasse_edges != poset.hasse_edges
        or env_poset.smallest != poset.smallest
        or env_poset.largest != poset.largest
    ):
        raise InternalCheckError("envelope poset shape drifted from the original")
    for a, b in zip(env_poset.elements, poset.elements):
        if a.face_dim != b.face_dim - k:
            raise InternalCheckError("envelope face dimensions did not drop by rank")
    dim = w.ambient_rank - k
    if dim != maximal_chain_length(poset):
        raise InternalCheckError("envelope dimension disagrees with chain length")
    return ToricEnvelopeReport(dim, lam0, dim, projected, env_poset)
