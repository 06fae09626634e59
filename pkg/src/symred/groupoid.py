"""The symplectic groupoid T*G = G x g* in left trivialization.

Tangent vectors at (g, xi) are pairs (u, zeta) in g x g*, and the canonical
symplectic form is

    Omega((u1, z1), (u2, z2)) = -z2(u1) + z1(u2) - xi([u1, u2]),

which depends on the base only through xi.  Source and target are
s(g, xi) = Ad*_g xi and t(g, xi) = xi, with differentials
ds(u, zeta) = Ad*_g(ad*_u xi + zeta) and dt(u, zeta) = zeta.

Fibers of the stabilizer subgroupoids are computed from their defining
linear conditions and certified isotropic by evaluating Omega pairwise;
at the identity they are cross-checked against the independent
intersection ds^{-1}(TS) ∩ dt^{-1}(TS) ∩ (TS)^Omega.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from . import linalg as la
from . import poisson
from .errors import (
    BaseNotInSubgroupoid,
    DimensionMismatch,
    EtaNotInAnnihilator,
    KindNotInvariant,
    NotASubalgebra,
)
from .lie import GroupElement, LieAlgebra
from .linalg import Vector

INVARIANT_KINDS = {"coadjoint-orbit", "decomposition-class", "casimir-level-set"}


@dataclass(frozen=True)
class CotangentPoint:
    """(g, xi) with g omitted when only the xi-dependence matters."""

    xi: Vector
    g: Optional[GroupElement] = None


@dataclass(frozen=True)
class CotangentTangent:
    u: Vector
    zeta: Vector

    def flatten(self) -> Vector:
        return tuple(self.u) + tuple(self.zeta)


def tangent_from_flat(v: Vector) -> CotangentTangent:
    n = len(v) // 2
    return CotangentTangent(tuple(v[:n]), tuple(v[n:]))


@dataclass(frozen=True)
class GroupoidTangentFiber:
    base: CotangentPoint
    basis: tuple[CotangentTangent, ...]
    source_kind: str
    isotropic: bool

    @property
    def rank(self) -> int:
        return len(self.basis)

    def flat_basis(self) -> list[Vector]:
        return [t.flatten() for t in self.basis]


def omega_eval(alg: LieAlgebra, xi: Vector, t1: CotangentTangent, t2: CotangentTangent) -> Fraction:
    """-z2(u1) + z1(u2) - xi([u1, u2])."""
    n = alg.dim
    for part in (xi, t1.u, t1.zeta, t2.u, t2.zeta):
        if len(part) != n:
            raise DimensionMismatch(f"expected length {n}, got {len(part)}")
    return (
        -la.dot(t2.zeta, t1.u)
        + la.dot(t1.zeta, t2.u)
        - la.dot(xi, alg.bracket(t1.u, t2.u))
    )


def omega_gram(alg: LieAlgebra, xi: Vector, vectors: Sequence[Vector]) -> list[Vector]:
    """Gram matrix of Omega on flattened tangent vectors."""
    ts = [tangent_from_flat(v) for v in vectors]
    return [tuple(omega_eval(alg, xi, a, b) for b in ts) for a in ts]


def omega_rank(alg: LieAlgebra, xi: Vector) -> int:
    basis = [la.unit(2 * alg.dim, i) for i in range(2 * alg.dim)]
    return la.rank(omega_gram(alg, xi, basis))


def _pairwise_isotropic(alg: LieAlgebra, xi: Vector, tangents: Sequence[CotangentTangent]) -> bool:
    return all(
        omega_eval(alg, xi, tangents[i], tangents[j]) == 0
        for i in range(len(tangents))
        for j in range(i + 1, len(tangents))
    )


def source_target_differentials(alg: LieAlgebra, p: CotangentPoint, t: CotangentTangent):
    """(ds, dt) of the source Ad*_g xi and target xi at p along t."""
    ds = la.add(alg.ad_star(t.u, p.xi), t.zeta)
    if p.g is not None:
        ds = alg.coadjoint_group_action(p.g, ds)
    return ds, tuple(t.zeta)


def mw_fiber(alg: LieAlgebra, h_sub: Sequence[Vector], xi: Vector, eta: Vector) -> GroupoidTangentFiber:
    """Tangent fiber h_xi x h° of the Marsden-Weinstein data H_xi x (xi + h°)."""
    h_basis = la.span_basis(h_sub)
    for a in h_basis:
        for b in h_basis:
            if not la.in_span(alg.bracket(a, b), h_basis):
                raise NotASubalgebra("h is not closed under the bracket")
    if any(la.dot(eta, b) != 0 for b in h_basis):
        raise EtaNotInAnnihilator("eta must annihilate h")
    # h_xi = {x in h : (ad*_x xi) | h = 0}
    rows = []
    for b in h_basis:
        rows.append(tuple(la.dot(alg.ad_star(x, xi), b) for x in h_basis))
    coeffs = la.nullspace(rows) if rows else []
    h_xi = []
    for c in coeffs:
        v = la.zeros(alg.dim)
        for ci, b in zip(c, h_basis):
            v = la.add(v, la.scale(ci, b))
        h_xi.append(v)
    if not h_basis:
        h_xi = []
    h_ann = la.annihilator(h_basis, alg.dim)
    point = tuple(la.add(xi, eta))
    tangents = [CotangentTangent(x, la.zeros(alg.dim)) for x in h_xi]
    tangents += [CotangentTangent(la.zeros(alg.dim), z) for z in h_ann]
    iso = _pairwise_isotropic(alg, point, tangents)
    return GroupoidTangentFiber(CotangentPoint(point), tuple(tangents), "marsden-weinstein", iso)


def coadjoint_orbit_fiber(alg: LieAlgebra, p: CotangentPoint) -> GroupoidTangentFiber:
    """Solutions of ad*_u xi = (Ad*_{g^{-1}} - 1) ad*_v xi, as pairs (u, ad*_v xi)."""
    xi = tuple(p.xi)
    g = p.g if p.g is not None else alg.identity_element()
    if alg.coadjoint_group_action(g, xi) != xi:
        raise BaseNotInSubgroupoid("base point must satisfy Ad*_g xi = xi")
    ginv = g.inv()
    n = alg.dim
    rows = []
    cols_u = []
    cols_v = []
    for i in range(n):
        ei = alg.basis_vec(i)
        cols_u.append(alg.ad_star(ei, xi))
        av = alg.ad_star(ei, xi)
        cols_v.append(la.sub(alg.coadjoint_group_action(ginv, av), av))
    # condition: ad*_u xi - (Ad*_{g^-1} - 1) ad*_v xi = 0, unknowns (u, v)
    for j in range(n):
        rows.append(
            tuple(cols_u[i][j] for i in range(n)) + tuple(-cols_v[i][j] for i in range(n))
        )
    sols = la.nullspace(rows)
    flats = []
    for sol in sols:
        u = tuple(sol[:n])
        v = tuple(sol[n:])
        flats.append(tuple(u) + tuple(alg.ad_star(v, xi)))
    basis = la.span_basis(flats)
    tangents = [tangent_from_flat(v) for v in basis]
    iso = _pairwise_isotropic(alg, xi, tangents)
    return GroupoidTangentFiber(p, tuple(tangents), "coadjoint-orbit", iso)


def chamber_face_fiber(alg: LieAlgebra, face, xi: Vector) -> GroupoidTangentFiber:
    """Tangent fiber [k_S, k_S] x T_xi S of the implosion subgroupoid."""
    k_part = face.root_subsystem_algebra(xi)
    tangents = [CotangentTangent(x, la.zeros(alg.dim)) for x in k_part]
    tangents += [CotangentTangent(la.zeros(alg.dim), z) for z in face.tangent_basis(xi)]
    iso = _pairwise_isotropic(alg, tuple(xi), tangents)
    return GroupoidTangentFiber(CotangentPoint(tuple(xi)), tuple(tangents), "chamber-face", iso)


def fiber_by_intersection(alg: LieAlgebra, s_model, xi: Vector) -> list[Vector]:
    """ds^{-1}(T S) ∩ dt^{-1}(T S) ∩ (T S)^Omega at the identity bisection.

    Independent of the closed-form fiber constructions; used as the
    two-route certificate.
    """
    xi = tuple(xi)
    tangent = s_model.tangent_basis(xi)
    ann = la.annihilator(tangent, alg.dim)
    rows = []
    n = alg.dim
    # dt(u, zeta) = zeta in T S
    for w in ann:
        rows.append(la.zeros(n) + tuple(w))
    # ds(u, zeta) = ad*_u xi + zeta in T S
    for w in ann:
        row_u = []
        for i in range(n):
            row_u.append(la.dot(alg.ad_star(alg.basis_vec(i), xi), w))
        rows.append(tuple(row_u) + tuple(w))
    # (u, zeta) Omega-orthogonal to 0 x T S: Omega((u,zeta),(0,t)) = t(u)
    for t in tangent:
        rows.append(tuple(t) + la.zeros(n))
    return la.nullspace(rows)


def lie_functor_check(fiber: GroupoidTangentFiber, expected: poisson.AlgebroidFiber) -> bool:
    """ker-dt part of the fiber, negated, must span the algebroid fiber."""
    flats = fiber.flat_basis()
    if not flats:
        return expected.rank == 0
    n = len(flats[0]) // 2
    ker_dt = la.intersect_spans(flats, [la.unit(2 * n, i) for i in range(n)])
    us = [tuple(-v[i] for i in range(n)) for v in ker_dt]
    return la.span_equal(us, list(expected.basis))


def identity_section_lagrangian_check(alg: LieAlgebra, xi: Vector) -> bool:
    """{0} x g* is Omega-isotropic of half dimension, for every xi."""
    n = alg.dim
    tangents = [CotangentTangent(la.zeros(n), la.unit(n, j)) for j in range(n)]
    return _pairwise_isotropic(alg, tuple(xi), tangents) and 2 * n == omega_rank(alg, xi)


def normality_infinitesimal_check(alg: LieAlgebra, s_model, g: GroupElement, xi: Vector) -> bool:
    """Ad_g(h_xi) = h_{Ad*_g xi} as subspaces, for invariant kinds."""
    if s_model.kind not in INVARIANT_KINDS:
        raise KindNotInvariant(f"kind {s_model.kind} is not invariant")
    p = poisson.kks_model(alg)
    h1, _ = poisson.stabilizer_subalgebra(p, s_model, xi)
    xi2 = alg.coadjoint_group_action(g, tuple(xi))
    model2 = s_model
    if s_model.kind == "coadjoint-orbit" and not s_model.contains(xi2):
        model2 = s_model.with_witness(g * s_model.witness_of[tuple(xi)])
    h2, _ = poisson.stabilizer_subalgebra(p, model2, xi2)
    conj = [alg.adjoint_group_action(g, x) for x in h1]
    return la.span_equal(conj, h2)
