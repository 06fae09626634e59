"""Named check suites reproducing the worked reduction examples.

Each scenario builds its models at fixed rational sample points (plus
seeded random extras), runs every check exactly, and returns a
:class:`ScenarioReport`.  A check's ``anchor`` names the identity it
certifies.  Status ``sampled-pass`` marks finite-sample witnesses of
properties quantified over a whole submanifold (constant rank); every
other check is a complete verification of a pointwise identity.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional, Sequence

from . import linalg as la
from . import poisson, reduction
from . import groupoid as gpd
from .errors import ConfigError, UnsupportedType
from .groupoid import CotangentPoint
from .lie import LieAlgebra, build_chevalley, embed_factor, principal_sl2
from .linalg import Q, Vector


@dataclass(frozen=True)
class Check:
    name: str
    anchor: str
    status: str  # "pass" | "fail" | "sampled-pass"
    data: dict = field(default_factory=dict)


@dataclass
class ScenarioReport:
    scenario_name: str
    params: dict
    checks: list[Check] = field(default_factory=list)

    @property
    def all_passed(self) -> bool:
        return all(c.status != "fail" for c in self.checks)

    def add(self, name: str, anchor: str, ok: bool, data: Optional[dict] = None, sampled: bool = False):
        status = ("sampled-pass" if sampled else "pass") if ok else "fail"
        self.checks.append(Check(name, anchor, status, data or {}))

    def check_data(self, name: str) -> dict:
        for c in self.checks:
            if c.name == name:
                return c.data
        raise KeyError(name)


def _jsonable(value):
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, bool) or isinstance(value, int) or isinstance(value, str):
        return value
    if isinstance(value, float):
        raise TypeError("floats must not appear in reports")
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return str(value)


def report_to_dict(report: ScenarioReport) -> dict:
    return {
        "scenario_name": report.scenario_name,
        "params": _jsonable(report.params),
        "all_passed": report.all_passed,
        "checks": [
            {
                "name": c.name,
                "anchor": c.anchor,
                "status": c.status,
                "data": _jsonable(c.data),
            }
            for c in report.checks
        ],
    }


def _rand_nonzero(rng: random.Random) -> Fraction:
    while True:
        v = la.random_fraction(rng, 4, 3)
        if v != 0:
            return v


def _expected_override(params: dict, key: str, default: int) -> int:
    value = params.get(key, default)
    if not isinstance(value, int):
        raise ConfigError(f"{key} must be an integer")
    return value


# -- moore-tachikawa ---------------------------------------------------------


def slodowy_moore_tachikawa(params: dict, rng: random.Random, sample_count: int) -> ScenarioReport:
    cartan_type = params.get("cartan_type", "A")
    rank = params.get("rank", 1)
    n = params.get("n", 2)
    if cartan_type != "A" or not (1 <= rank <= 3):
        raise UnsupportedType("slice scenarios need type A of rank <= 3")
    if not (1 <= n <= 4):
        raise UnsupportedType("n must be between 1 and 4")
    alg = build_chevalley("A", rank)
    ell = alg.rank
    triple = principal_sl2(alg)
    report = ScenarioReport("slodowy_moore_tachikawa", dict(params, cartan_type=cartan_type, rank=rank, n=n))

    fixed = [[0] * ell, [1] + [0] * (ell - 1), [-2] + [1] * (ell - 1)]
    extra = [[_rand_nonzero(rng) for _ in range(ell)] for _ in range(max(0, sample_count - 3))]
    dia = poisson.DiagonalSlodowy(alg, triple, n, parameters=fixed + extra)
    prod = dia.product
    pm = poisson.kks_model(prod)
    report.add("sample_points", "rational nilpotent-slice coordinates of the sampled points", True,
               {"slice_parameters": [[la.frac(c) for c in p] for p in fixed + extra]})

    trans_ok = True
    for pt in dia.slice.sample_points:
        x = alg.sharp(pt)
        gf = dia.slice.gf
        bracket_img = [alg.bracket(alg.basis_vec(i), x) for i in range(alg.dim)]
        total = la.rank(list(gf) + bracket_img)
        trans_ok &= total == alg.dim and la.rank(gf) + la.rank(bracket_img) == alg.dim
    report.add("slice_transversality", "g = g_f + [g, x] (direct sum)", trans_ok,
               {"points": len(dia.slice.sample_points)})

    fiber_route_ok = True
    rank_ok = True
    ranks = []
    for pt in dia.sample_points:
        fiber = poisson.algebroid_fiber(pm, dia, pt)
        x = alg.sharp(tuple(pt[: alg.dim]))
        gx = alg.centralizer(x)
        oracle = []
        for k in range(n - 1):
            for z in gx:
                oracle.append(
                    la.add(
                        embed_factor(prod.dim, alg.dim, k, z),
                        embed_factor(prod.dim, alg.dim, k + 1, la.neg(z)),
                    )
                )
        fiber_route_ok &= la.span_equal(list(fiber.basis), oracle)
        ranks.append(fiber.rank)
        rank_ok &= fiber.rank == (n - 1) * ell
    report.add("diagonal_fiber_two_route",
               "fiber of L over the diagonal slice = {(y_i) in (g_x)^n : sum y_i = 0}",
               fiber_route_ok, {"ranks": ranks})
    report.add("fiber_rank", "rk L = (n-1) * rank(g)", rank_ok,
               {"ranks": ranks, "expected": (n - 1) * ell})

    pp = poisson.pre_poisson_sample_check(pm, dia)
    report.add("pre_poisson_sampled", "sigma^{-1}(TS) ∩ TS° has constant rank over S",
               pp["constant_rank"], {"ranks": pp["ranks"]}, sampled=True)
    report.add("stable", "L_S ⊆ ker sigma", all(poisson.stable_check(pm, dia)))

    expected_dim = _expected_override(params, "expected_reduced_dim", n * alg.dim + ell - (n - 1) * ell)
    dims_ok = True
    kernel_ok = True
    nondeg_ok = True
    got_dim = None
    for pt in dia.sample_points:
        agree, model = reduction.kernel_identity_check(prod, dia, CotangentPoint(pt))
        kernel_ok &= agree and reduction.reduced_form_well_defined(prod, model)
        nondeg_ok &= model.nondegenerate() and model.antisymmetric()
        got_dim = model.quotient_dim
        dims_ok &= model.quotient_dim == expected_dim
        dims_ok &= reduction.dimension_formula_check(prod, dia, CotangentPoint(pt), model)
    report.add("kernel_two_route", "T_p(H·p) = T_pN ∩ tau(T_pN°)", kernel_ok)
    report.add("reduced_form_nondegenerate", "pi* omega_red = i* Omega, omega_red symplectic", nondeg_ok)
    report.add("reduced_dim", "dim M_red = n dim g + rank - (n-1) rank", dims_ok,
               {"reduced_dim": got_dim, "expected": expected_dim})

    # N_n = N x_c ... x_c N is coisotropic in N^n
    cois_ok = True
    for pt_s in dia.slice.sample_points:
        base = [tuple(la.unit(alg.dim, i)) + la.zeros(alg.dim) for i in range(alg.dim)]
        base += [la.zeros(alg.dim) + tuple(t) for t in dia.slice.tangent_basis(pt_s)]
        gram_n = gpd.omega_gram(alg, pt_s, base)
        block_dim = len(base)
        big = [[Q(0)] * (n * block_dim) for _ in range(n * block_dim)]
        for k in range(n):
            for i in range(block_dim):
                for j in range(block_dim):
                    big[k * block_dim + i][k * block_dim + j] = gram_n[i][j]
        big = tuple(tuple(r) for r in big)
        w = []
        for k in range(n):
            for i in range(alg.dim):
                w.append(la.unit(n * block_dim, k * block_dim + i))
        for j in range(block_dim - alg.dim):
            v = la.zeros(n * block_dim)
            for k in range(n):
                v = la.add(v, la.unit(n * block_dim, k * block_dim + alg.dim + j))
            w.append(v)
        cois_ok &= poisson.coisotropic_check(big, w)
    report.add("fibred_product_coisotropic", "N x_c ... x_c N is coisotropic in N^n", cois_ok)
    return report


# -- decomposition classes ---------------------------------------------------


def _sl2_structure_certificate(alg: LieAlgebra, m_basis: Sequence[Vector]) -> Optional[dict]:
    """Exhibit an (e, h, f) basis of the 3-dim subalgebra span(m_basis)."""
    cartan = [alg.basis_vec(i) for i in range(alg.rank)]
    inter = la.intersect_spans(list(m_basis), cartan)
    if len(inter) != 1:
        return None
    h0 = inter[0]
    m_cols = la.transpose(list(m_basis))
    imgs = [la.solve(m_cols, alg.bracket(h0, b)) for b in m_basis]
    if any(v is None for v in imgs):
        return None
    admat = la.transpose(imgs)  # ad_{h0} restricted to m, 3x3
    # char(x) = x^3 - c x with c = lambda^2
    c = -(admat[0][0] * admat[1][1] + admat[0][0] * admat[2][2] + admat[1][1] * admat[2][2]
          - admat[0][1] * admat[1][0] - admat[0][2] * admat[2][0] - admat[1][2] * admat[2][1])
    if c <= 0:
        return None
    num, den = c.numerator, c.denominator
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn != num or rd * rd != den:
        return None
    lam = Q(rn, rd)
    h = la.scale(Q(2) / lam, h0)

    def eigvec(val):
        rows = []
        for j in range(3):
            rows.append(tuple((Q(2) / lam) * admat[j][k] - (val if j == k else Q(0)) for k in range(3)))
        ker = la.nullspace(rows)
        if len(ker) != 1:
            return None
        v = la.zeros(alg.dim)
        for ci, b in zip(ker[0], m_basis):
            v = la.add(v, la.scale(ci, b))
        return v
    e = eigvec(Q(2))
    f = eigvec(Q(-2))
    if e is None or f is None:
        return None
    br = alg.bracket(e, f)
    sol = la.solve(la.transpose([h]), br)
    if sol is None or sol[0] == 0:
        return None
    f = la.scale(Q(1) / sol[0], f)
    from .lie import Sl2Triple

    triple = Sl2Triple(e, h, f)
    if not triple.verify(alg):
        return None
    return {"found_triple": True}


def decomposition_class_sl3(params: dict, rng: random.Random, sample_count: int) -> ScenarioReport:
    alg = build_chevalley("A", 2)
    pm = poisson.kks_model(alg)
    report = ScenarioReport("decomposition_class_sl3", dict(params))

    def diag(a, perm=(0, 1, 2)):
        vals = [a, a, -2 * a]
        m = [[Q(0)] * 3 for _ in range(3)]
        for i in range(3):
            m[i][i] = Q(vals[perm[i]])
        return alg.from_matrix(tuple(tuple(r) for r in m))

    samples = [diag(1), diag(2), diag(-3), diag(1, perm=(0, 2, 1))]
    dec = poisson.DecompositionClass(alg, 4, samples)
    report.add("sample_points", "equal-pair diagonal parameters, one relabeled", True,
               {"parameters": [1, 2, -3, "1 (permuted)"]})

    tangents_ok = True
    ann_ok = True
    sl2_ok = True
    stable_ok = all(poisson.stable_check(pm, dec))
    closed_ok = True
    for pt in dec.sample_points:
        tangent = dec.tangent_basis(pt)
        tangents_ok &= len(tangent) == 5
        fiber = poisson.algebroid_fiber(pm, dec, pt)
        x = alg.sharp(pt)
        gx = alg.centralizer(x)
        derived = la.span_basis([alg.bracket(a, b) for a in gx for b in gx])
        ann_ok &= fiber.rank == 3 and la.span_equal(list(fiber.basis), derived)
        cert = _sl2_structure_certificate(alg, list(fiber.basis))
        sl2_ok &= cert is not None
        h, closed = poisson.stabilizer_subalgebra(pm, dec, pt)
        closed_ok &= closed
    report.add("tangent_space", "T_x D = z(g_{x_s}) + [g, x] of codimension 3", tangents_ok,
               {"dim_D": 5, "codim": 3})
    report.add("annihilator_two_route", "(T_x D)^perp = [g_{x_s}, g_{x_s}]_{x_n}", ann_ok,
               {"dim": 3})
    report.add("h_is_sl2", "[g_x, g_x] has an exact (e, h, f) basis", sl2_ok)
    report.add("stable", "L_S ⊆ ker sigma", stable_ok)
    report.add("h_bracket_closed", "h_xi = (T_xi S)° ∩ g_xi is a subalgebra", closed_ok)

    expected_dim = _expected_override(params, "expected_reduced_dim", 10)
    dims_ok = True
    kernel_ok = True
    got = None
    for pt in dec.sample_points:
        agree, model = reduction.kernel_identity_check(alg, dec, CotangentPoint(pt))
        kernel_ok &= agree and model.nondegenerate() and reduction.reduced_form_well_defined(alg, model)
        got = model.quotient_dim
        dims_ok &= model.quotient_dim == expected_dim
        dims_ok &= reduction.dimension_formula_check(alg, dec, CotangentPoint(pt), model)
    report.add("kernel_two_route", "T_p(H·p) = T_pN ∩ tau(T_pN°)", kernel_ok)
    report.add("reduced_dim", "dim M_red = 2 dim G - 6", dims_ok,
               {"reduced_dim": got, "expected": expected_dim})

    pairs_ok = True
    n_pairs = max(20, 5 * sample_count)
    for pt in dec.sample_points:
        fiber = poisson.algebroid_fiber(pm, dec, pt)
        mperp = la.nullspace([alg.flat(mb) for mb in fiber.basis])
        pairs = []
        for _ in range(n_pairs // len(dec.sample_points) + 1):
            z1 = la.zeros(alg.dim)
            z2 = la.zeros(alg.dim)
            for b in mperp:
                z1 = la.add(z1, la.scale(la.random_fraction(rng), b))
                z2 = la.add(z2, la.scale(la.random_fraction(rng), b))
            pairs.append(((la.random_vector(rng, alg.dim), z1), (la.random_vector(rng, alg.dim), z2)))
        pairs_ok &= reduction.decomposition_form_check(alg, dec, pt, pairs)
    report.add("reduced_form_formula",
               "omega_red = -<u1,z2> + <u2,z1> - <x,[u1,u2]>", pairs_ok,
               {"pairs": n_pairs})

    pp = poisson.pre_poisson_sample_check(pm, dec)
    report.add("pre_poisson_sampled", "sigma^{-1}(TS) ∩ TS° has constant rank over S",
               pp["constant_rank"], {"ranks": pp["ranks"]}, sampled=True)
    return report


# -- implosion faces ---------------------------------------------------------


def implosion_faces_A2(params: dict, rng: random.Random, sample_count: int) -> ScenarioReport:
    alg = build_chevalley("A", 2)
    pm = poisson.kks_model(alg)
    report = ScenarioReport("implosion_faces_A2", dict(params))
    expected = {(): 0, (0,): 3, (1,): 3, (0, 1): 8}
    dims = {}
    for subset, exp_dim in expected.items():
        pts = []
        for trial in range(max(2, sample_count - 1)):
            coords = [Q(0)] * alg.dim
            for i in range(alg.rank):
                if i not in subset:
                    coords[i] = Q(trial + 1 + i) if trial < 2 else abs(_rand_nonzero(rng)) + 1
            pts.append(tuple(coords))
        pts = list(dict.fromkeys(pts))
        face = poisson.WeylChamberFace(alg, subset, pts)
        fiber_ok = True
        functor_ok = True
        iso_ok = True
        got = None
        for pt in face.sample_points:
            fiber = poisson.algebroid_fiber(pm, face, pt)
            gpsi = face.root_subsystem_algebra(pt)
            fiber_ok &= la.span_equal(list(fiber.basis), gpsi) and fiber.rank == exp_dim
            got = fiber.rank
            gfib = gpd.chamber_face_fiber(alg, face, pt)
            iso_ok &= gfib.isotropic
            functor_ok &= gpd.lie_functor_check(gfib, fiber)
        name = "face_" + ("interior" if not subset else "_".join(f"a{i+1}" for i in subset))
        dims[name] = got
        report.add(name + "_fiber", "(L_{S_sigma})_xi = g_Psi, Psi = {alpha : alpha(y) = 0}",
                   fiber_ok, {"dim": got, "expected": exp_dim})
        report.add(name + "_groupoid", "[K_S, K_S] x S is isotropic; Lie functor (x, xi) -> (-x, xi)",
                   iso_ok and functor_ok)
        dims_ok = True
        for pt in face.sample_points:
            agree, model = reduction.kernel_identity_check(alg, face, CotangentPoint(pt))
            dims_ok &= agree and reduction.dimension_formula_check(alg, face, CotangentPoint(pt), model)
        report.add(name + "_dimension", "dim M_red = dim g + dim S - rk L_S", dims_ok)
    report.add("face_dims", "fiber dimensions over the face lattice",
               list(dims.values()) == [0, 3, 3, 8], dims)
    return report


# -- the C^4 pre-Poisson example --------------------------------------------


def c4_prepoisson_remark(params: dict, rng: random.Random, sample_count: int) -> ScenarioReport:
    report = ScenarioReport("c4_prepoisson_remark", dict(params))
    omega = la.mat([[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]])
    pmodel = poisson.symplectic_model(omega)

    def tangent(p):
        x = p[0]
        return [la.vec([1, 0, 2 * x, 0]), la.vec([0, 0, 0, 1])]

    ts = [Q(1), Q(2), Q(-1)]
    for _ in range(max(0, sample_count - 3)):
        ts.append(_rand_nonzero(rng))
    pts = [la.vec([t, 0, t * t, 0]) for t in ts]
    model = poisson.Explicit(4, tangent, pts)
    # explicit models trust the caller's membership; here the samples
    # satisfy x^2 = u != 0, y = 0 by construction
    report.add("membership_mode", "samples lie on the quadric by construction",
               all(pt[0] * pt[0] == pt[2] and pt[0] != 0 and pt[1] == 0 and pt[3] == 0 for pt in pts),
               {"trusted_tangent_constructor": model.trusted, "parameters": list(ts)})

    span_ok = True
    ann_ok = True
    omega_perp_ok = True
    fiber_ok = True
    for pt in pts:
        x = pt[0]
        tb = model.tangent_basis(pt)
        span_ok &= la.span_equal(tb, [la.vec([1, 0, 2 * x, 0]), la.vec([0, 0, 0, 1])])
        ann = la.annihilator(tb, 4)
        ann_ok &= la.span_equal(ann, [la.vec([-2 * x, 0, 1, 0]), la.vec([0, 1, 0, 0])])
        rows = [la.mat_vec(omega, t) for t in tb]
        ts_perp = la.nullspace(rows)
        omega_perp_ok &= la.span_equal(ts_perp, [la.vec([0, 2 * x, 0, -1]), la.vec([1, 0, 0, 0])])
        fiber = poisson.algebroid_fiber(pmodel, model, pt)
        fiber_ok &= fiber.rank == 0
    report.add("tangent_span", "TS = span{d/dx + 2x d/du, d/dv}", span_ok)
    report.add("annihilator_span", "TS° = span{du - 2x dx, dy}", ann_ok)
    report.add("omega_orthogonal_span", "TS^omega = span{2x d/dy - d/dv, d/dx}", omega_perp_ok)
    report.add("trivial_stabilizer", "L_S = omega(TS) ∩ TS° = 0", fiber_ok)
    pp = poisson.pre_poisson_sample_check(pmodel, model)
    report.add("pre_poisson_sampled", "sigma^{-1}(TS) ∩ TS° has constant rank over S",
               pp["constant_rank"], {"ranks": pp["ranks"]}, sampled=True)

    # self-reduction along S: kernel of the restricted form is zero
    red_ok = True
    for pt in pts:
        tb = model.tangent_basis(pt)
        gram = [[la.dot(a, la.mat_vec(omega, b)) for b in tb] for a in tb]
        kernel = la.nullspace(gram)
        red_ok &= len(kernel) == 0 and len(tb) - len(kernel) == 2
    report.add("reduced_dim", "dim M_red = dim S - rk L_S = 2", red_ok, {"reduced_dim": 2})
    return report


# -- casimir level sets ------------------------------------------------------


def casimir_sphere(params: dict, rng: random.Random, sample_count: int) -> ScenarioReport:
    algebra_name = params.get("algebra", "A1")
    if algebra_name not in ("A1", "A2"):
        raise UnsupportedType("casimir scenario supports A1 and A2")
    rank = int(algebra_name[1])
    alg = build_chevalley("A", rank)
    report = ScenarioReport("casimir_sphere", dict(params, algebra=algebra_name))
    if algebra_name == "A1":
        base = alg.flat(alg.basis_vec(0))  # h^flat, level 8
        default_level = alg.killing_form(alg.basis_vec(0), alg.basis_vec(0))
    else:
        x = alg.from_matrix(la.mat([[1, 0, 0], [0, 0, 0], [0, 0, -1]]))
        base = alg.flat(x)
        default_level = alg.killing_form(x, x)
    level = la.frac(params.get("level", default_level))
    ratio = level / default_level
    rn, rd = math.isqrt(ratio.numerator), math.isqrt(ratio.denominator)
    if ratio <= 0 or rn * rn != ratio.numerator or rd * rd != ratio.denominator:
        raise ConfigError("level must be the default times a rational square")
    base = la.scale(Q(rn, rd), base)
    es, hs, fs = alg.simple_vectors()
    translates = [alg.unipotent(es[0], 1), alg.unipotent(fs[0], Q(1, 2))]
    for i in range(max(0, sample_count - 3)):
        translates.append(alg.unipotent(es[i % alg.rank], _rand_nonzero(rng)))
    pts = [base] + [alg.coadjoint_group_action(g, base) for g in translates]
    model = poisson.CasimirLevelSet(alg, level, pts)
    pm = poisson.kks_model(alg)
    report.add("sample_points", "base point plus exact unipotent translates (level preserved)", True,
               {"level": level, "points": len(model.sample_points)})

    fiber_ok = True
    stable_ok = True
    for pt in model.sample_points:
        fiber = poisson.algebroid_fiber(pm, model, pt)
        sharp = alg.sharp(pt)
        fiber_ok &= fiber.rank == 1 and la.span_equal(list(fiber.basis), [sharp])
        stable_ok &= la.is_zero(alg.ad_star(sharp, pt))
    report.add("fiber_is_dual_ray", "(T_xi S)° = R xi_*", fiber_ok, {"dim": 1})
    report.add("stable", "ad*_{xi_sharp} xi = 0", stable_ok)

    dims_ok = True
    got = None
    for pt in model.sample_points:
        agree, model_red = reduction.kernel_identity_check(alg, model, CotangentPoint(pt))
        got = model_red.quotient_dim
        dims_ok &= agree and model_red.quotient_dim == alg.dim + (alg.dim - 1) - 1
        dims_ok &= reduction.dimension_formula_check(alg, model, CotangentPoint(pt), model_red)
    report.add("reduced_dim", "dim M_red = dim g + (dim g - 1) - 1", dims_ok,
               {"reduced_dim": got})
    pp = poisson.pre_poisson_sample_check(pm, model)
    report.add("pre_poisson_sampled", "sigma^{-1}(TS) ∩ TS° has constant rank over S",
               pp["constant_rank"], {"ranks": pp["ranks"]}, sampled=True)
    return report


# -- polyhedral faces for torus actions --------------------------------------


def polyhedral_face_torus(params: dict, rng: random.Random, sample_count: int) -> ScenarioReport:
    dim_t = params.get("dim_t", 3)
    if not isinstance(dim_t, int) or dim_t < 1:
        raise ConfigError("dim_t must be a positive integer")
    directions = params.get("face_directions")
    report = ScenarioReport("polyhedral_face_torus", dict(params, dim_t=dim_t))
    cases = []
    if directions is not None:
        cases.append(("given", [la.vec(d) for d in directions]))
    else:
        cases.append(("full", [la.unit(dim_t, i) for i in range(dim_t)]))
        cases.append(("codim1", [la.unit(dim_t, i) for i in range(dim_t - 1)]))
        cases.append(("point", []))
    pmodel = poisson.trivial_model(dim_t)
    for label, dirs in cases:
        base = la.zeros(dim_t)
        pts = [base]
        for _ in range(max(0, sample_count - 1)):
            v = base
            for d in dirs:
                v = la.add(v, la.scale(la.random_fraction(rng), d))
            pts.append(v)
        face = poisson.PolyhedralFace(base, dirs, pts)
        ok = True
        got = None
        for pt in face.sample_points:
            fiber = poisson.algebroid_fiber(pmodel, face, pt)
            ann = la.annihilator(face.tangent_basis(pt), dim_t)
            ok &= la.span_equal(list(fiber.basis), ann)
            got = fiber.rank
        report.add(f"face_{label}_fiber", "L_F = (T_xi F)° (Lie algebra of the cutting torus T_F)",
                   ok, {"dim": got, "codim": dim_t - len(dirs)})
        report.add(f"face_{label}_dimension", "dim M_red = dim t + dim F - rk L_F",
                   got == dim_t - len(dirs),
                   {"reduced_dim": dim_t + len(dirs) - got})
    return report


# -- registry ----------------------------------------------------------------


@dataclass(frozen=True)
class ScenarioSpec:
    name: str
    fn: Callable[[dict, random.Random, int], ScenarioReport]
    description: str
    identities: tuple[str, ...]
    param_schema: str


REGISTRY: dict[str, ScenarioSpec] = {
    s.name: s
    for s in [
        ScenarioSpec(
            "slodowy_moore_tachikawa",
            slodowy_moore_tachikawa,
            "principal slice, diagonal fibers with sum-zero centralizer tuples, reduced dimensions",
            ("g = g_f + [g, x]", "L over Delta_n S = {(y_i) in (g_x)^n : sum y_i = 0}",
             "dim M_red = n dim g + rank - (n-1) rank"),
            "{cartan_type: 'A', rank: 1..3, n: 1..4, expected_reduced_dim?: int}",
        ),
        ScenarioSpec(
            "decomposition_class_sl3",
            decomposition_class_sl3,
            "subregular semisimple classes in sl3: tangents, sl2 annihilators, explicit reduced form",
            ("T_x D = z(g_{x_s}) + [g, x]", "(T_x D)^perp = [g_{x_s}, g_{x_s}]_{x_n}",
             "omega_red = -<u1,z2> + <u2,z1> - <x,[u1,u2]>", "dim M_red = 2 dim G - 6"),
            "{expected_reduced_dim?: int}",
        ),
        ScenarioSpec(
            "implosion_faces_A2",
            implosion_faces_A2,
            "all four chamber faces of A2: stabilizer fibers equal the root-subsystem algebras",
            ("(L_{S_sigma})_xi = g_Psi", "[K_S, K_S] x S is isotropic"),
            "{}",
        ),
        ScenarioSpec(
            "c4_prepoisson_remark",
            c4_prepoisson_remark,
            "the quadric x^2 = u != 0, y = 0 in a 4-dim symplectic space: trivial stabilizer",
            ("L_S = omega(TS) ∩ TS° = 0", "TS^omega = span{2x d/dy - d/dv, d/dx}"),
            "{}",
        ),
        ScenarioSpec(
            "casimir_sphere",
            casimir_sphere,
            "Casimir level sets {<xi, xi> = c}: fiber is the dual ray, stable, reduced dimension",
            ("(T_xi S)° = R xi_*", "dim M_red = dim g + (dim g - 1) - 1"),
            "{algebra: 'A1'|'A2', level?: rational}",
        ),
        ScenarioSpec(
            "polyhedral_face_torus",
            polyhedral_face_torus,
            "faces of rational polyhedra under the trivial Poisson structure: cutting tori",
            ("L_F = (T_xi F)°",),
            "{dim_t: int, face_directions?: [[rational, ...], ...]}",
        ),
    ]
}


def run_scenario(name: str, params: dict, seed: int, sample_count: int) -> ScenarioReport:
    if name not in REGISTRY:
        raise ConfigError(f"unknown scenario: {name}")
    rng = random.Random(f"{seed}:{name}:{sorted(params.items())!r}")
    return REGISTRY[name].fn(params, rng, sample_count)
