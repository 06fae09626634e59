from fractions import Fraction as Q

import pytest

from symred import lie, poisson, shifted
from symred import linalg as la
from symred.errors import NotACandidate
from conftest import subregular_point


def test_build_complex_valid_candidates(sl2, kks2):
    zero = la.zeros(3)
    s0 = poisson.Singleton(zero)
    fiber = poisson.algebroid_fiber(kks2, s0, zero)
    cmap = shifted.build_complex(kks2, s0, zero, list(fiber.basis))
    assert cmap.verify_commutation()
    cmap0 = shifted.build_complex(kks2, s0, zero, [])
    assert cmap0.verify_commutation()
    # at the origin sigma vanishes, so any subspace is a candidate
    e = sl2.root_vector((1,))
    cmap_e = shifted.build_complex(kks2, s0, zero, [e])
    assert cmap_e.verify_commutation()


def test_build_complex_rejects_non_candidates(sl2, kks2):
    hb = sl2.flat(sl2.basis_vec(0))
    s1 = poisson.Singleton(hb)
    e = sl2.root_vector((1,))
    with pytest.raises(NotACandidate):
        shifted.build_complex(kks2, s1, hb, [e])  # sigma(e) leaves TS = 0
    orb = poisson.CoadjointOrbit(sl2, hb)
    with pytest.raises(NotACandidate):
        # e pairs nontrivially with the orbit tangent directions
        shifted.build_complex(kks2, orb, hb, [e])


def test_verdicts_at_origin(sl2, kks2):
    zero = la.zeros(3)
    s0 = poisson.Singleton(zero)
    fiber = poisson.algebroid_fiber(kks2, s0, zero)
    v = shifted.criterion_for_candidate(kks2, s0, zero, list(fiber.basis))
    assert v.lagrangian and v.phi_iso and v.psi_iso and v.ker_phi_dim == 0
    v0 = shifted.criterion_for_candidate(kks2, s0, zero, [])
    assert not v0.lagrangian and v0.ker_phi_dim == 3
    e = sl2.root_vector((1,))
    v1 = shifted.criterion_for_candidate(kks2, s0, zero, [e])
    assert not v1.lagrangian and v1.ker_phi_dim == 2


def test_constant_symplectic_ambient():
    p = poisson.symplectic_model([[0, 1], [-1, 0]])
    amb = poisson.AffineSubspace(la.zeros(2), list(la.identity(2)))
    v = shifted.criterion_for_candidate(p, amb, la.zeros(2), [])
    assert v.lagrangian and v.ker_phi_dim == 0


def candidate_library(sl2, sl3, kks2, kks3):
    """(model, bivector model, point, fiber) across the scenario kinds."""
    e, h, f = sl2.root_vector((1,)), sl2.basis_vec(0), sl2.root_vector((-1,))
    hb = sl2.flat(h)
    tri = lie.principal_sl2(sl2)
    out = []
    for p, model in [
        (kks2, poisson.Singleton(hb)),
        (kks2, poisson.SlodowySlice(sl2, tri, parameters=[[0], [1]])),
        (kks2, poisson.CoadjointOrbit(sl2, hb, [sl2.unipotent(e, 1)])),
        (kks2, poisson.CasimirLevelSet(sl2, 8, [hb])),
        (kks3, poisson.DecompositionClass(sl3, 4, [subregular_point(sl3)])),
        (kks3, poisson.WeylChamberFace(sl3, (1,), [tuple([Q(1), Q(0)] + [Q(0)] * 6)])),
    ]:
        for pt in model.sample_points:
            out.append((p, model, pt, poisson.algebroid_fiber(p, model, pt)))
    return out


def test_criterion_equivalence_over_library(sl2, sl3, kks2, kks3):
    pairs = 0
    for p, model, pt, fiber in candidate_library(sl2, sl3, kks2, kks3):
        v = shifted.criterion_for_candidate(p, model, pt, list(fiber.basis))
        assert v.lagrangian and v.ker_phi_dim == 0
        pairs += 1
        if fiber.rank > 0:
            v_small = shifted.criterion_for_candidate(p, model, pt, list(fiber.basis)[:-1])
            assert not v_small.lagrangian
            assert v_small.ker_phi_dim == 1
            pairs += 1
    assert pairs >= 10


def test_enlarged_candidates_rejected(sl2, kks2):
    """A candidate violating the containments never reaches the verdict."""
    hb = sl2.flat(sl2.basis_vec(0))
    orb = poisson.CoadjointOrbit(sl2, hb)
    fiber = poisson.algebroid_fiber(kks2, orb, hb)
    enlargement = list(fiber.basis) + [sl2.root_vector((1,))]
    with pytest.raises(NotACandidate):
        shifted.build_complex(kks2, orb, hb, enlargement)


def test_ker_phi_dimension_formula(sl2, sl3, kks2, kks3):
    for p, model, pt, fiber in candidate_library(sl2, sl3, kks2, kks3):
        for cut in range(fiber.rank + 1):
            v = shifted.criterion_for_candidate(p, model, pt, list(fiber.basis)[:cut])
            assert v.ker_phi_dim == fiber.rank - cut
