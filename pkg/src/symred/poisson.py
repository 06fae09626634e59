"""Pointwise Poisson linear algebra on g* and constant-bivector spaces.

A :class:`PoissonPointModel` evaluates the bivector sigma_xi : T*X -> TX as
an exact matrix at a rational base point; submanifold models supply an
exact basis of their tangent space at each declared sample point.  The
stabilizer fiber at xi is

    L_xi = { eta in T*X : eta in (T_xi S)°  and  sigma_xi(eta) in T_xi S },

which for the Lie-Poisson structure on g* reads
{ x in g : x in (T_xi S)°, ad*_x xi in T_xi S }.

Constant-rank, stability, Poisson-transversality and coisotropy checks are
finite-sample witnesses: exact at every queried point, silent about the
rest of the submanifold.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from . import linalg as la
from .errors import DimensionMismatch, NotOnModel, NotStable
from .lie import GroupElement, LieAlgebra, Sl2Triple, direct_power, embed_factor, is_ad_semisimple
from .linalg import Matrix, Q, Vector


@dataclass(frozen=True)
class PoissonPointModel:
    """Bivector evaluation on a fixed-dimensional space."""

    ambient_dim: int
    kind: str  # "kks" or "constant"
    algebra: Optional[LieAlgebra] = None
    sigma: Optional[Matrix] = None

    def bivector_at(self, xi: Vector) -> Matrix:
        """Matrix B with (sigma_xi eta)_j = sum_i B[j][i] eta_i."""
        if len(xi) != self.ambient_dim:
            raise DimensionMismatch("point has wrong dimension")
        if self.kind == "constant":
            return self.sigma
        alg = self.algebra
        rows = []
        for j in range(alg.dim):
            row = []
            for i in range(alg.dim):
                acc = Q(0)
                for k, c in alg.table[i][j]:
                    acc += c * xi[k]
                row.append(acc)
            rows.append(tuple(row))
        return tuple(rows)

    def apply(self, xi: Vector, eta: Vector) -> Vector:
        return la.mat_vec(self.bivector_at(xi), eta)


def kks_model(algebra: LieAlgebra) -> PoissonPointModel:
    """Lie-Poisson structure on g*: sigma_xi(x) = -ad*_x xi."""
    return PoissonPointModel(algebra.dim, "kks", algebra=algebra)


def constant_model(sigma: Matrix) -> PoissonPointModel:
    return PoissonPointModel(len(sigma), "constant", sigma=la.mat(sigma))


def symplectic_model(omega: Matrix) -> PoissonPointModel:
    """Constant model with sigma inverse to v -> omega(v, .)."""
    q = la.mat(omega)
    flat = tuple(tuple(q[i][j] for i in range(len(q))) for j in range(len(q)))
    return constant_model(la.inverse(flat))


def trivial_model(dim: int) -> PoissonPointModel:
    zero = tuple(tuple(Q(0) for _ in range(dim)) for _ in range(dim))
    return constant_model(zero)


# -- submanifold models ------------------------------------------------------


class SubmanifoldModel:
    """A submanifold kind plus exact tangent bases at rational points."""

    kind = "abstract"
    trusted = False  # True when membership is taken on the caller's word

    def __init__(self, ambient_dim: int, sample_points: Sequence[Vector]):
        self.ambient_dim = ambient_dim
        self.sample_points = tuple(tuple(p) for p in sample_points)

    def contains(self, xi: Vector) -> bool:
        raise NotImplementedError

    def tangent_basis(self, xi: Vector) -> list[Vector]:
        if not self.contains(xi):
            raise NotOnModel(f"point not on {self.kind} model")
        return self._tangent(xi)

    def _tangent(self, xi: Vector) -> list[Vector]:
        raise NotImplementedError


class Singleton(SubmanifoldModel):
    kind = "singleton"

    def __init__(self, point: Vector):
        super().__init__(len(point), [point])
        self.point = tuple(point)

    def contains(self, xi):
        return tuple(xi) == self.point

    def _tangent(self, xi):
        return []


class AffineSubspace(SubmanifoldModel):
    """base + span(directions); used for xi + h° and explicit faces."""

    kind = "affine"

    def __init__(self, base: Vector, directions: Sequence[Vector], sample_points=None):
        self.base = tuple(base)
        self.directions = la.span_basis(directions)
        pts = list(sample_points) if sample_points else [self.base]
        super().__init__(len(base), pts)
        for p in self.sample_points:
            if not self.contains(p):
                raise NotOnModel("declared sample point is off the affine model")

    def contains(self, xi):
        return la.in_span(la.sub(tuple(xi), self.base), self.directions)

    def _tangent(self, xi):
        return list(self.directions)


class CoadjointOrbit(SubmanifoldModel):
    """Orbit of a seed under Ad*, with witnessed sample points."""

    kind = "coadjoint-orbit"

    def __init__(self, algebra: LieAlgebra, seed: Vector, witnesses: Sequence[GroupElement] = ()):
        self.algebra = algebra
        self.seed = tuple(seed)
        pts = [self.seed]
        self.witness_of = {self.seed: algebra.identity_element()}
        for g in witnesses:
            p = algebra.coadjoint_group_action(g, self.seed)
            if p not in self.witness_of:
                self.witness_of[p] = g
                pts.append(p)
        super().__init__(algebra.dim, pts)

    def with_witness(self, g: GroupElement) -> "CoadjointOrbit":
        new = [self.witness_of[p] for p in self.sample_points if p != self.seed]
        return CoadjointOrbit(self.algebra, self.seed, new + [g])

    def contains(self, xi):
        return tuple(xi) in self.witness_of

    def _tangent(self, xi):
        alg = self.algebra
        gens = [alg.ad_star(alg.basis_vec(i), tuple(xi)) for i in range(alg.dim)]
        return la.span_basis(gens)


class SlodowySlice(SubmanifoldModel):
    """e + g_f inside g ≅ g* via the Killing form."""

    kind = "slodowy-slice"

    def __init__(self, algebra: LieAlgebra, triple: Sl2Triple, parameters: Sequence[Sequence] = ()):
        self.algebra = algebra
        self.triple = triple
        self.gf = la.span_basis(algebra.centralizer(triple.f))
        pts = [self.point_from(params) for params in (parameters or [[0] * len(self.gf)])]
        super().__init__(algebra.dim, pts)

    def point_from(self, params: Sequence) -> Vector:
        x = self.triple.e
        for c, b in zip(params, self.gf, strict=True):
            x = la.add(x, la.scale(c, b))
        return self.algebra.flat(x)

    def contains(self, xi):
        x = self.algebra.sharp(tuple(xi))
        return la.in_span(la.sub(x, self.triple.e), self.gf)

    def _tangent(self, xi):
        return [self.algebra.flat(b) for b in self.gf]


class DiagonalSlodowy(SubmanifoldModel):
    """Diagonally embedded slice in (g*)^n; ambient algebra is g^n."""

    kind = "diagonal-slodowy"

    def __init__(self, algebra: LieAlgebra, triple: Sl2Triple, n: int, parameters: Sequence[Sequence] = ()):
        self.factor = algebra
        self.n = n
        self.product = direct_power(algebra, n)
        self.slice = SlodowySlice(algebra, triple, parameters)
        pts = [self.embed(p) for p in self.slice.sample_points]
        super().__init__(self.product.dim, pts)

    def embed(self, xi_factor: Vector) -> Vector:
        out = la.zeros(self.product.dim)
        for k in range(self.n):
            out = la.add(out, embed_factor(self.product.dim, self.factor.dim, k, xi_factor))
        return out

    def contains(self, xi):
        d = self.factor.dim
        first = tuple(xi[:d])
        if not self.slice.contains(first):
            return False
        return all(tuple(xi[k * d : (k + 1) * d]) == first for k in range(self.n))

    def _tangent(self, xi):
        d = self.factor.dim
        first = tuple(xi[:d])
        return [self.embed(t) for t in self.slice.tangent_basis(first)]


class DecompositionClass(SubmanifoldModel):
    """Semisimple decomposition class in g ≅ g*, fixed centralizer dimension."""

    kind = "decomposition-class"

    def __init__(self, algebra: LieAlgebra, centralizer_dim: int, sample_vecs: Sequence[Vector]):
        self.algebra = algebra
        self.centralizer_dim = centralizer_dim
        pts = [algebra.flat(x) for x in sample_vecs]
        super().__init__(algebra.dim, pts)
        for p in self.sample_points:
            if not self.contains(p):
                raise NotOnModel("sample is not in the declared decomposition class")

    def contains(self, xi):
        x = self.algebra.sharp(tuple(xi))
        if len(self.algebra.centralizer(x)) != self.centralizer_dim:
            return False
        return is_ad_semisimple(self.algebra, x)

    def _tangent(self, xi):
        # T_x D = z(g_x) + [g, x], pushed to covectors by the Killing form
        alg = self.algebra
        x = alg.sharp(tuple(xi))
        gx = alg.centralizer(x)
        coeff_rows = []
        for b in gx:
            brackets = [alg.bracket(y, b) for y in gx]
            for j in range(alg.dim):
                coeff_rows.append(tuple(br[j] for br in brackets))
        center = []
        for sol in la.nullspace(coeff_rows):
            v = la.zeros(alg.dim)
            for c, y in zip(sol, gx):
                v = la.add(v, la.scale(c, y))
            center.append(v)
        bracket_img = [alg.bracket(alg.basis_vec(i), x) for i in range(alg.dim)]
        gens = [alg.flat(v) for v in center] + [alg.flat(v) for v in bracket_img]
        return la.span_basis(gens)


class CasimirLevelSet(SubmanifoldModel):
    """{ xi : kappa*(xi, xi) = c } for rational c != 0."""

    kind = "casimir-level-set"

    def __init__(self, algebra: LieAlgebra, level, sample_points: Sequence[Vector]):
        self.algebra = algebra
        self.level = la.frac(level)
        if self.level == 0:
            raise NotOnModel("level must be nonzero")
        super().__init__(algebra.dim, sample_points)
        for p in self.sample_points:
            if not self.contains(p):
                raise NotOnModel("sample point is off the Casimir level set")

    def contains(self, xi):
        xi = tuple(xi)
        return la.dot(xi, self.algebra.sharp(xi)) == self.level

    def _tangent(self, xi):
        # T_xi S = { eta : eta(xi^sharp) = 0 }
        return la.nullspace([self.algebra.sharp(tuple(xi))])


class WeylChamberFace(SubmanifoldModel):
    """Face of the fundamental chamber in t* ⊆ g*, cut out by simple coroots.

    A point annihilates exactly the simple coroots indexed by `subset` and
    takes positive rational values on the remaining ones.
    """

    kind = "weyl-chamber-face"

    def __init__(self, algebra: LieAlgebra, subset: Sequence[int], sample_points: Sequence[Vector]):
        self.algebra = algebra
        self.subset = frozenset(subset)
        super().__init__(algebra.dim, sample_points)
        for p in self.sample_points:
            if not self.contains(p):
                raise NotOnModel("sample point is off the declared face")

    def contains(self, xi):
        alg = self.algebra
        rs = alg.root_data
        xi = tuple(xi)
        # must vanish on every root vector (xi in the embedded t*)
        for i in range(alg.rank, alg.dim):
            if xi[i] != 0:
                return False
        for i in range(alg.rank):
            v = xi[i]
            if i in self.subset:
                if v != 0:
                    return False
            elif v <= 0:
                return False
        # exactness: a positive root pairs to zero iff it stays in <subset>
        for beta in rs.positive:
            coeffs = rs.coroot_coeffs(beta)
            val = sum(coeffs[i] * xi[i] for i in range(alg.rank))
            inside = all(beta[i] == 0 for i in range(alg.rank) if i not in self.subset)
            if inside != (val == 0):
                return False
        return True

    def _tangent(self, xi):
        basis = []
        for i in range(self.algebra.rank):
            if i not in self.subset:
                basis.append(la.unit(self.ambient_dim, i))
        return basis

    def root_subsystem_algebra(self, xi: Vector) -> list[Vector]:
        """g_Psi = span(coroots of Psi) + root spaces of Psi = {alpha : alpha(y)=0}."""
        alg = self.algebra
        rs = alg.root_data
        xi = tuple(xi)
        gens = []
        for beta in rs.positive:
            coeffs = rs.coroot_coeffs(beta)
            if sum(coeffs[i] * xi[i] for i in range(alg.rank)) == 0:
                coroot = la.zeros(alg.dim)
                for i in range(alg.rank):
                    coroot = la.add(coroot, la.scale(coeffs[i], alg.basis_vec(i)))
                gens.append(coroot)
                gens.append(alg.root_vector(beta))
                gens.append(alg.root_vector(tuple(-b for b in beta)))
        return la.span_basis(gens)


class PolyhedralFace(SubmanifoldModel):
    """Open face of a rational polyhedron in t* with the zero Poisson structure."""

    kind = "polyhedral-face"

    def __init__(self, base: Vector, directions: Sequence[Vector], sample_points=None):
        self.base = tuple(base)
        self.directions = la.span_basis(directions)
        super().__init__(len(base), sample_points or [self.base])
        for p in self.sample_points:
            if not self.contains(p):
                raise NotOnModel("sample point is off the face")

    def contains(self, xi):
        return la.in_span(la.sub(tuple(xi), self.base), self.directions)

    def _tangent(self, xi):
        return list(self.directions)


class Explicit(SubmanifoldModel):
    """Caller-supplied tangent constructor; membership is trusted."""

    kind = "explicit"
    trusted = True

    def __init__(self, ambient_dim: int, tangent_fn: Callable[[Vector], Sequence[Vector]], sample_points: Sequence[Vector]):
        self.tangent_fn = tangent_fn
        super().__init__(ambient_dim, sample_points)

    def contains(self, xi):
        return True

    def _tangent(self, xi):
        return [tuple(v) for v in self.tangent_fn(tuple(xi))]


# -- fibers and checks -------------------------------------------------------


@dataclass(frozen=True)
class AlgebroidFiber:
    """Exact basis of the stabilizer fiber at a point."""

    base_point: Vector
    basis: tuple[Vector, ...]
    rank: int
    contained_in_centralizer: bool


def tangent_basis(model: SubmanifoldModel, xi: Vector) -> list[Vector]:
    return model.tangent_basis(xi)


def algebroid_fiber(p: PoissonPointModel, s: SubmanifoldModel, xi: Vector) -> AlgebroidFiber:
    """Nullspace of {pair with T_xi S = 0} ∧ {sigma_xi(eta) in T_xi S}."""
    xi = tuple(xi)
    tangent = s.tangent_basis(xi)
    sigma = p.bivector_at(xi)
    rows = [tuple(t) for t in tangent]
    ann = la.annihilator(tangent, p.ambient_dim)
    for w in ann:
        rows.append(la.mat_vec(la.transpose(sigma), w))
    basis = la.nullspace(rows) if rows else list(la.identity(p.ambient_dim))
    in_ker = all(la.is_zero(la.mat_vec(sigma, b)) for b in basis)
    return AlgebroidFiber(xi, tuple(basis), len(basis), in_ker)


def pre_poisson_sample_check(p: PoissonPointModel, s: SubmanifoldModel) -> dict:
    """Fiber rank at every sample point; a finite-sample witness only."""
    ranks = [algebroid_fiber(p, s, xi).rank for xi in s.sample_points]
    return {"constant_rank": len(set(ranks)) == 1, "ranks": ranks}


def stable_check(p: PoissonPointModel, s: SubmanifoldModel) -> list[bool]:
    """Per sample point: every fiber vector lies in ker sigma_xi."""
    return [algebroid_fiber(p, s, xi).contained_in_centralizer for xi in s.sample_points]


def stabilizer_subalgebra(p: PoissonPointModel, s: SubmanifoldModel, xi: Vector):
    """h_xi = (T_xi S)° ∩ g_xi, with bracket-closure certificate."""
    if p.kind != "kks":
        raise NotStable("stabilizer subalgebras live on g* models")
    xi = tuple(xi)
    fiber = algebroid_fiber(p, s, xi)
    if not fiber.contained_in_centralizer:
        raise NotStable("model is not stable at this point")
    alg = p.algebra
    ann = la.annihilator(s.tangent_basis(xi), p.ambient_dim)
    cent = alg.centralizer_dual(xi)
    h = la.intersect_spans(ann, cent)
    closed = all(
        la.in_span(alg.bracket(a, b), h) for a in h for b in h
    )
    if not la.span_equal(h, list(fiber.basis)):
        raise NotStable("fiber does not match (T S)° ∩ g_xi")
    return h, closed


def poisson_transversal_check(p: PoissonPointModel, s: SubmanifoldModel, xi: Vector) -> bool:
    """T_xi S ∩ sigma((T_xi S)°) = 0 and dimensions sum to the ambient."""
    xi = tuple(xi)
    tangent = s.tangent_basis(xi)
    sigma = p.bivector_at(xi)
    ann = la.annihilator(tangent, p.ambient_dim)
    image = la.span_basis([la.mat_vec(sigma, w) for w in ann])
    if la.intersect_spans(tangent, image):
        return False
    return la.rank(list(tangent) + list(image)) == p.ambient_dim


def coisotropic_check(omega: Matrix, w: Sequence[Vector]) -> bool:
    """True iff the omega-orthogonal of span(w) is contained in span(w)."""
    q = la.mat(omega)
    if la.det(q) == 0:
        raise DimensionMismatch("omega must be nondegenerate")
    rows = [la.mat_vec(q, wv) for wv in w]  # v -> omega(v, w) up to sign
    orth = la.nullspace(rows) if rows else list(la.identity(len(q)))
    return la.span_contains(list(w), orth)


def moment_transversality_check(image_basis: Sequence[Vector], s: SubmanifoldModel, xi: Vector) -> bool:
    """rank(T_xi S + image d mu) = ambient dimension."""
    tangent = s.tangent_basis(tuple(xi))
    return la.rank(list(tangent) + list(image_basis)) == s.ambient_dim
