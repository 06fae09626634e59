"""Exact finite-dimensional Lie algebras over the rationals.

Split semisimple algebras are built on a Chevalley basis {h_1..h_l} ∪ {e_β}:

* type A reads its structure constants off the standard trace-zero matrix
  realization (h_i = E_ii - E_{i+1,i+1}, root vectors E_ij), which also
  provides the stored matrix representation;
* types B, C, D and G2 fix signs by the classical extraspecial-pair
  convention: N_{α,β} = +(p+1) on every extraspecial pair of positive
  roots, all remaining constants being forced by antisymmetry,
  N_{-α,-β} = -N_{α,β}, and the Jacobi identity.

Every constructed table is exhaustively certified (antisymmetry, Cartan
action, coroot brackets, |N| = p+1) and the test suite re-verifies the
Jacobi identity for all basis triples of every supported type.

Basis order: Cartan h_1..h_l, then e_β over positive roots by increasing
(height, coordinates), then the corresponding negative root vectors.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

from . import linalg as la
from .errors import DimensionMismatch, NoMatrixRep, SolveFailure, UnsupportedType
from .linalg import Matrix, Q, Vector

Root = tuple[int, ...]

SUPPORTED = {
    ("A", 1), ("A", 2), ("A", 3), ("A", 4),
    ("B", 2), ("B", 3), ("B", 4),
    ("C", 2), ("C", 3), ("C", 4),
    ("D", 4),
    ("G2", 2),
}


def _cartan_and_lengths(cartan_type: str, rank: int):
    """Cartan matrix C[i][j] = <alpha_i, alpha_j^vee> and half-lengths d_i."""
    if (cartan_type, rank) not in SUPPORTED:
        raise UnsupportedType(f"unsupported type {cartan_type}{rank}")
    n = rank
    c = [[0] * n for _ in range(n)]
    for i in range(n):
        c[i][i] = 2
    for i in range(n - 1):
        c[i][i + 1] = c[i + 1][i] = -1
    d = [Q(1)] * n
    if cartan_type == "B":
        c[n - 2][n - 1] = -2  # alpha_{n-1} is short
        d[n - 1] = Q(1, 2)
    elif cartan_type == "C":
        c[n - 1][n - 2] = -2  # alpha_{n-1} is long
        d[n - 1] = Q(2)
    elif cartan_type == "D":
        # rank 4: central node is alpha_2 (0-based index 1)
        for i in range(n):
            for j in range(n):
                if i != j:
                    c[i][j] = 0
        for a, b in ((0, 1), (1, 2), (1, 3)):
            c[a][b] = c[b][a] = -1
    elif cartan_type == "G2":
        c[0][1], c[1][0] = -1, -3  # alpha_1 short, alpha_2 long
        d[0] = Q(1, 3)
    return tuple(tuple(row) for row in c), tuple(d)


class RootSystem:
    """Roots of a split semisimple algebra in simple-root coordinates."""

    def __init__(self, cartan_type: str, rank: int):
        self.cartan_type = cartan_type
        self.rank = rank
        self.cartan, self.d = _cartan_and_lengths(cartan_type, rank)
        self.roots = self._enumerate()
        self.root_set = set(self.roots)
        self.positive = sorted(
            (r for r in self.roots if self._is_positive(r)), key=self._order_key
        )
        self.pos_index = {r: i for i, r in enumerate(self.positive)}

    # -- basic geometry -------------------------------------------------

    def pairing(self, beta: Root, j: int) -> int:
        """<beta, alpha_j^vee> = beta(h_j)."""
        return sum(beta[i] * self.cartan[i][j] for i in range(self.rank))

    def reflect(self, beta: Root, j: int) -> Root:
        c = self.pairing(beta, j)
        out = list(beta)
        out[j] -= c
        return tuple(out)

    def _enumerate(self) -> list[Root]:
        simple = [tuple(1 if j == i else 0 for j in range(self.rank)) for i in range(self.rank)]
        seen = set(simple)
        frontier = list(simple)
        while frontier:
            nxt = []
            for beta in frontier:
                for j in range(self.rank):
                    r = self.reflect(beta, j)
                    if r not in seen:
                        seen.add(r)
                        nxt.append(r)
            frontier = nxt
        return sorted(seen)

    @staticmethod
    def _is_positive(beta: Root) -> bool:
        return any(x > 0 for x in beta) and all(x >= 0 for x in beta)

    @staticmethod
    def height(beta: Root) -> int:
        return sum(beta)

    def _order_key(self, beta: Root):
        return (self.height(beta), beta)

    def inner(self, beta: Root, gamma: Root) -> Fraction:
        return sum(
            Q(beta[i] * gamma[j]) * self.cartan[i][j] * self.d[j]
            for i in range(self.rank)
            for j in range(self.rank)
        )

    def norm2(self, beta: Root) -> Fraction:
        return self.inner(beta, beta)

    def p_string(self, alpha: Root, beta: Root) -> int:
        """Largest p with beta - p*alpha a root."""
        p = 0
        cur = tuple(b - a for a, b in zip(alpha, beta))
        while cur in self.root_set:
            p += 1
            cur = tuple(c - a for a, c in zip(alpha, cur))
        return p

    def coroot_coeffs(self, gamma: Root) -> tuple[Fraction, ...]:
        """gamma^vee = sum_i c_i alpha_i^vee; all c_i are integers."""
        dg = self.norm2(gamma) / 2
        coeffs = tuple(Q(gamma[i]) * self.d[i] / dg for i in range(self.rank))
        assert all(c.denominator == 1 for c in coeffs)
        return coeffs

    def extraspecial(self, gamma: Root) -> tuple[Root, Root]:
        """Minimal positive alpha with alpha, gamma-alpha both positive roots."""
        for a in self.positive:
            b = tuple(g - x for x, g in zip(a, gamma))
            if b in self.root_set and self._is_positive(b):
                return a, b
        raise SolveFailure(f"no special pair for {gamma}")


class _SignBuilder:
    """Structure constants N_{a,b} via the extraspecial-pair convention."""

    def __init__(self, rs: RootSystem):
        self.rs = rs
        self.memo: dict[tuple[Root, Root], Fraction] = {}

    @staticmethod
    def _add(a: Root, b: Root) -> Root:
        return tuple(x + y for x, y in zip(a, b))

    @staticmethod
    def _neg(a: Root) -> Root:
        return tuple(-x for x in a)

    def n(self, a: Root, b: Root) -> Fraction:
        key = (a, b)
        if key in self.memo:
            return self.memo[key]
        rs = self.rs
        s = self._add(a, b)
        assert s in rs.root_set
        pos_a, pos_b = rs._is_positive(a), rs._is_positive(b)
        if pos_a and pos_b:
            if rs._order_key(a) > rs._order_key(b):
                val = -self.n(b, a)
            else:
                x, y = rs.extraspecial(s)
                if (a, b) == (x, y):
                    val = Q(rs.p_string(x, y) + 1)
                else:
                    acc = Q(0)
                    ya = self._add(y, self._neg(a))
                    if ya in rs.root_set:
                        acc += self.n(y, self._neg(a)) * self.n(x, self._neg(b)) / rs.norm2(ya)
                    xa = self._add(x, self._neg(a))
                    if xa in rs.root_set:
                        acc += self.n(self._neg(a), x) * self.n(y, self._neg(b)) / rs.norm2(xa)
                    val = rs.norm2(s) * acc / self.n(x, y)
        elif not pos_a and not pos_b:
            val = -self.n(self._neg(a), self._neg(b))
        elif not pos_a:
            val = -self.n(b, a)
        else:
            # a positive, b negative; use N_{a,b}/(c,c) = N_{b,c}/(a,a) = N_{c,a}/(b,b)
            c = self._neg(s)
            if rs._is_positive(s):
                val = rs.norm2(c) / rs.norm2(a) * self.n(b, c)
            else:
                val = rs.norm2(c) / rs.norm2(b) * self.n(c, a)
        self.memo[key] = val
        return val


@dataclass(frozen=True)
class Sl2Triple:
    """A triple (e, h, f) with [e,f] = h, [h,e] = 2e, [h,f] = -2f."""

    e: Vector
    h: Vector
    f: Vector

    def verify(self, algebra: "LieAlgebra") -> bool:
        return (
            algebra.bracket(self.e, self.f) == self.h
            and algebra.bracket(self.h, self.e) == la.scale(2, self.e)
            and algebra.bracket(self.h, self.f) == la.scale(-2, self.f)
        )


@dataclass(frozen=True)
class GroupElement:
    """Invertible matrix in the stored representation, with a display name."""

    matrix: Matrix
    provenance: str = ""

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        prov = f"{self.provenance}*{other.provenance}" if self.provenance or other.provenance else ""
        return GroupElement(la.mat_mul(self.matrix, other.matrix), prov)

    def inv(self) -> "GroupElement":
        return GroupElement(la.inverse(self.matrix), f"({self.provenance})^-1")


class LieAlgebra:
    """Structure constants, Killing form, and optional matrix realization."""

    def __init__(
        self,
        basis_labels: Sequence[str],
        table: Sequence[Sequence[Sequence[tuple[int, Fraction]]]],
        rank: int,
        root_data: Optional[RootSystem] = None,
        matrix_rep: Optional[Sequence[Matrix]] = None,
        name: str = "",
    ):
        self.dim = len(basis_labels)
        self.basis_labels = tuple(basis_labels)
        self.table = tuple(tuple(tuple(entry) for entry in row) for row in table)
        self.rank = rank
        self.root_data = root_data
        self.matrix_rep = tuple(matrix_rep) if matrix_rep is not None else None
        self.name = name or "g"
        self._index = {lbl: i for i, lbl in enumerate(self.basis_labels)}
        self._extract_cache = None
        self._lookup = tuple(
            tuple(dict(entry) for entry in row) for row in self.table
        )
        self._check_antisymmetry()
        self.killing = self._compute_killing()
        self._killing_inv = None
        if la.det(self.killing) != 0:
            self._killing_inv = la.inverse(self.killing)

    # -- construction helpers -------------------------------------------

    def _check_antisymmetry(self):
        for i in range(self.dim):
            for j in range(i, self.dim):
                lhs = self._lookup[i][j]
                rhs = self._lookup[j][i]
                assert all(rhs.get(k, Q(0)) == -c for k, c in lhs.items())
                assert all(lhs.get(k, Q(0)) == -c for k, c in rhs.items())

    def _compute_killing(self) -> Matrix:
        n = self.dim
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = Q(0)
                for m in range(n):
                    for k, c in self.table[j][m]:
                        acc += c * self._lookup[i][k].get(m, Q(0))
                row.append(acc)
            rows.append(tuple(row))
        return tuple(rows)

    # -- basic operations ------------------------------------------------

    def index(self, label: str) -> int:
        return self._index[label]

    def basis_vec(self, i: int) -> Vector:
        return la.unit(self.dim, i)

    def zero(self) -> Vector:
        return la.zeros(self.dim)

    def _check_dim(self, *vectors: Vector):
        for v in vectors:
            if len(v) != self.dim:
                raise DimensionMismatch(f"expected length {self.dim}, got {len(v)}")

    def bracket(self, x: Vector, y: Vector) -> Vector:
        self._check_dim(x, y)
        out = [Q(0)] * self.dim
        for i, xi in enumerate(x):
            if xi == 0:
                continue
            row = self.table[i]
            for j, yj in enumerate(y):
                if yj == 0:
                    continue
                f = xi * yj
                for k, c in row[j]:
                    out[k] += f * c
        return tuple(out)

    def ad_matrix(self, x: Vector) -> Matrix:
        """Matrix of y -> [x, y] on basis coordinates."""
        self._check_dim(x)
        cols = [self.bracket(x, self.basis_vec(j)) for j in range(self.dim)]
        return la.transpose(cols)

    def ad_star(self, x: Vector, xi: Vector) -> Vector:
        """ad*_x xi = -xi([x, .])."""
        self._check_dim(x, xi)
        out = []
        for j in range(self.dim):
            acc = Q(0)
            for i, xv in enumerate(x):
                if xv == 0:
                    continue
                for k, c in self.table[i][j]:
                    acc += xv * c * xi[k]
            out.append(-acc)
        return tuple(out)

    def pair(self, xi: Vector, x: Vector) -> Fraction:
        return la.dot(xi, x)

    def killing_form(self, x: Vector, y: Vector) -> Fraction:
        return la.dot(x, la.mat_vec(self.killing, y))

    def flat(self, x: Vector) -> Vector:
        """x -> kappa(x, .), a covector."""
        return la.mat_vec(self.killing, x)

    def sharp(self, xi: Vector) -> Vector:
        if self._killing_inv is None:
            raise SolveFailure("Killing form is degenerate")
        return la.mat_vec(self._killing_inv, xi)

    def centralizer(self, x: Vector) -> list[Vector]:
        """Basis of {y : [x, y] = 0}."""
        return la.nullspace(self.ad_matrix(x))

    def centralizer_dual(self, xi: Vector) -> list[Vector]:
        """Basis of g_xi = {x : ad*_x xi = 0}."""
        self._check_dim(xi)
        rows = []
        for j in range(self.dim):
            row = []
            for i in range(self.dim):
                acc = Q(0)
                for k, c in self.table[i][j]:
                    acc += c * xi[k]
                row.append(acc)
            rows.append(tuple(row))
        # row j, column i holds xi([e_i, e_j]); x in the nullspace iff ad*_x xi = 0
        return la.nullspace(rows)

    def structure_constant(self, i: int, j: int, k: int) -> Fraction:
        return self._lookup[i][j].get(k, Q(0))

    def structure_constants(self):
        """Dense dim x dim x dim array c_{ij}^k; the table is the sparse form."""
        n = self.dim
        return tuple(
            tuple(tuple(self._lookup[i][j].get(k, Q(0)) for k in range(n)) for j in range(n))
            for i in range(n)
        )

    # -- root-system conveniences -----------------------------------------

    def _require_roots(self) -> RootSystem:
        if self.root_data is None:
            raise UnsupportedType("no root data on this algebra")
        return self.root_data

    def root_vector_index(self, beta: Root) -> int:
        rs = self._require_roots()
        if rs._is_positive(beta):
            return self.rank + rs.pos_index[beta]
        return self.rank + len(rs.positive) + rs.pos_index[tuple(-b for b in beta)]

    def root_vector(self, beta: Root) -> Vector:
        return self.basis_vec(self.root_vector_index(beta))

    def simple_vectors(self) -> tuple[list[Vector], list[Vector], list[Vector]]:
        rs = self._require_roots()
        es, hs, fs = [], [], []
        for i in range(self.rank):
            simple = tuple(1 if j == i else 0 for j in range(self.rank))
            es.append(self.root_vector(simple))
            hs.append(self.basis_vec(i))
            fs.append(self.root_vector(tuple(-x for x in simple)))
        return es, hs, fs

    # -- verification -----------------------------------------------------

    def verify_jacobi(self) -> bool:
        n = self.dim
        basis = [self.basis_vec(i) for i in range(n)]
        pair_brackets = [[self.bracket(basis[i], basis[j]) for j in range(n)] for i in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(j + 1, n):
                    s = la.add(
                        la.add(
                            self.bracket(pair_brackets[i][j], basis[k]),
                            self.bracket(pair_brackets[j][k], basis[i]),
                        ),
                        self.bracket(pair_brackets[k][i], basis[j]),
                    )
                    if not la.is_zero(s):
                        return False
        return True

    def verify_killing_invariance(self) -> bool:
        n = self.dim
        basis = [self.basis_vec(i) for i in range(n)]
        for i in range(n):
            for j in range(n):
                bij = self.bracket(basis[i], basis[j])
                for k in range(n):
                    lhs = self.killing_form(bij, basis[k])
                    rhs = self.killing_form(basis[j], self.bracket(basis[i], basis[k]))
                    if lhs + rhs != 0:
                        return False
        return True

    def verify_matrix_rep(self) -> bool:
        if self.matrix_rep is None:
            raise NoMatrixRep("no matrix realization stored")
        for i in range(self.dim):
            for j in range(self.dim):
                comm = la.mat_mul(self.matrix_rep[i], self.matrix_rep[j])
                comm = tuple(
                    la.sub(r1, r2)
                    for r1, r2 in zip(comm, la.mat_mul(self.matrix_rep[j], self.matrix_rep[i]))
                )
                expect = self._matrix_combo(self.bracket(self.basis_vec(i), self.basis_vec(j)))
                if comm != expect:
                    return False
        return True

    # -- matrix representation helpers -------------------------------------

    def _matrix_combo(self, x: Vector) -> Matrix:
        reps = self._require_rep()
        size = len(reps[0])
        out = [[Q(0)] * size for _ in range(size)]
        for i, c in enumerate(x):
            if c == 0:
                continue
            for r in range(size):
                for s in range(size):
                    out[r][s] += c * reps[i][r][s]
        return tuple(tuple(row) for row in out)

    def _require_rep(self):
        if self.matrix_rep is None:
            raise NoMatrixRep(f"type {self.name} carries no matrix realization")
        return self.matrix_rep

    def to_matrix(self, x: Vector) -> Matrix:
        return self._matrix_combo(x)

    def _extractor(self):
        """Cached left inverse of coords -> flattened matrix."""
        if getattr(self, "_extract_cache", None) is None:
            reps = self._require_rep()
            size = len(reps[0])
            cols = [
                tuple(rep[r][s] for r in range(size) for s in range(size)) for rep in reps
            ]
            r_mat = la.transpose(cols)  # size^2 x dim
            gram = la.mat_mul(cols, r_mat)  # dim x dim, invertible
            self._extract_cache = (la.mat_mul(la.inverse(gram), cols), r_mat)
        return self._extract_cache

    def from_matrix(self, m: Matrix) -> Vector:
        """Coordinates of a matrix in the stored realization."""
        extractor, r_mat = self._extractor()
        size = len(self._require_rep()[0])
        flat = tuple(m[r][s] for r in range(size) for s in range(size))
        sol = tuple(la.mat_vec(extractor, flat))
        if la.mat_vec(r_mat, sol) != flat:
            raise SolveFailure("matrix does not lie in the represented algebra")
        return sol

    def group_element(self, matrix, provenance: str = "", check: bool = True) -> GroupElement:
        m = la.mat(matrix)
        self._require_rep()
        if la.det(m) == 0:
            raise SolveFailure("group element must be invertible")
        g = GroupElement(m, provenance)
        if check:
            minv = la.inverse(m)
            imgs = [
                self.from_matrix(la.mat_mul(la.mat_mul(m, self.matrix_rep[i]), minv))
                for i in range(self.dim)
            ]
            for i in range(self.dim):
                for j in range(self.dim):
                    lhs = self.bracket(imgs[i], imgs[j])
                    rhs = self.zero()
                    for k, c in self.table[i][j]:
                        rhs = la.add(rhs, la.scale(c, imgs[k]))
                    if lhs != rhs:
                        raise SolveFailure("conjugation does not preserve the bracket")
        return g

    def identity_element(self) -> GroupElement:
        size = len(self._require_rep()[0])
        return GroupElement(la.identity(size), "1")

    def unipotent(self, x: Vector, t=1) -> GroupElement:
        """exp(t x) for x with nilpotent representation matrix; exact."""
        t = la.frac(t)
        m = self._matrix_combo(x)
        size = len(m)
        total = la.identity(size)
        term = la.identity(size)
        for k in range(1, size + 1):
            term = la.mat_mul(term, m)
            term = tuple(tuple(v * t / k for v in row) for row in term)
            total = tuple(la.add(r1, r2) for r1, r2 in zip(total, term))
            if all(la.is_zero(row) for row in term):
                break
        else:
            raise SolveFailure("representation matrix is not nilpotent")
        return self.group_element(total, f"exp({t}x)", check=False)

    def torus_element(self, diag) -> GroupElement:
        entries = [la.frac(x) for x in diag]
        size = len(self._require_rep()[0])
        if len(entries) != size:
            raise DimensionMismatch("diagonal length must match representation size")
        m = tuple(
            tuple(entries[r] if r == s else Q(0) for s in range(size)) for r in range(size)
        )
        return self.group_element(m, "diag", check=False)

    def adjoint_group_action(self, g: GroupElement, x: Vector) -> Vector:
        """Ad_g x by conjugation in the stored representation."""
        self._check_dim(x)
        m = self._matrix_combo(x)
        conj = la.mat_mul(la.mat_mul(g.matrix, m), la.inverse(g.matrix))
        return self.from_matrix(conj)

    def coadjoint_group_action(self, g: GroupElement, xi: Vector) -> Vector:
        """Ad*_g xi = xi ∘ Ad_{g^{-1}}."""
        self._check_dim(xi)
        reps = self._require_rep()
        ginv = la.inverse(g.matrix)
        out = []
        for j in range(self.dim):
            back = la.mat_mul(la.mat_mul(ginv, reps[j]), g.matrix)
            out.append(la.dot(xi, self.from_matrix(back)))
        return tuple(out)


# -- constructors ----------------------------------------------------------


def _labels(rs: RootSystem) -> list[str]:
    labels = [f"h{i+1}" for i in range(rs.rank)]
    labels += ["e(" + ",".join(map(str, b)) + ")" for b in rs.positive]
    labels += ["f(" + ",".join(map(str, b)) + ")" for b in rs.positive]
    return labels


def _table_from_roots(rs: RootSystem):
    """Structure constants for non-A types via the sign recursion."""
    rank = rs.rank
    npos = len(rs.positive)
    dim = rank + 2 * npos
    signs = _SignBuilder(rs)

    def root_of(idx: int) -> Root:
        if idx < rank + npos:
            return rs.positive[idx - rank]
        return tuple(-x for x in rs.positive[idx - rank - npos])

    def idx_of(beta: Root) -> int:
        if rs._is_positive(beta):
            return rank + rs.pos_index[beta]
        return rank + npos + rs.pos_index[tuple(-x for x in beta)]

    table = [[[] for _ in range(dim)] for _ in range(dim)]

    def set_entry(i, j, entries):
        table[i][j] = [(k, c) for k, c in entries if c != 0]
        table[j][i] = [(k, -c) for k, c in entries if c != 0]

    for a in range(rank, dim):
        beta = root_of(a)
        for i in range(rank):
            # [h_i, e_beta] = <beta, alpha_i^vee> e_beta
            c = Q(rs.pairing(beta, i))
            set_entry(i, a, [(a, c)])
    for a in range(rank, dim):
        for b in range(a + 1, dim):
            alpha, beta = root_of(a), root_of(b)
            s = tuple(x + y for x, y in zip(alpha, beta))
            if all(x == 0 for x in s):
                # a indexes the positive root of the pair, so this is
                # [e_alpha, e_-alpha] = alpha^vee
                coeffs = rs.coroot_coeffs(alpha)
                set_entry(a, b, [(i, coeffs[i]) for i in range(rank)])
            elif s in rs.root_set:
                set_entry(a, b, [(idx_of(s), signs.n(alpha, beta))])
    return table


def _table_from_sl_matrices(rank: int):
    """Structure constants and representation for type A from sl(rank+1)."""
    rs = RootSystem("A", rank)
    size = rank + 1
    npos = len(rs.positive)
    dim = rank + 2 * npos

    def e_mat(r, s):
        return tuple(
            tuple(Q(1) if (i, j) == (r, s) else Q(0) for j in range(size)) for i in range(size)
        )

    def root_to_pos(beta: Root):
        # beta = alpha_i + ... + alpha_j corresponds to E_{i, j+1}
        i = beta.index(1)
        j = len(beta) - 1 - tuple(reversed(beta)).index(1)
        return i, j + 1

    reps: list[Matrix] = []
    for i in range(rank):
        m = [[Q(0)] * size for _ in range(size)]
        m[i][i], m[i + 1][i + 1] = Q(1), Q(-1)
        reps.append(tuple(tuple(r) for r in m))
    for beta in rs.positive:
        r, s = root_to_pos(beta)
        reps.append(e_mat(r, s))
    for beta in rs.positive:
        r, s = root_to_pos(beta)
        reps.append(e_mat(s, r))

    def extract(m: Matrix) -> list[Fraction]:
        coords = [Q(0)] * dim
        acc = Q(0)
        for k in range(rank):
            acc += m[k][k]
            coords[k] = acc
        for t, beta in enumerate(rs.positive):
            r, s = root_to_pos(beta)
            coords[rank + t] = m[r][s]
            coords[rank + npos + t] = m[s][r]
        return coords

    table = [[[] for _ in range(dim)] for _ in range(dim)]
    for i in range(dim):
        for j in range(dim):
            comm = la.mat_mul(reps[i], reps[j])
            comm = tuple(la.sub(r1, r2) for r1, r2 in zip(comm, la.mat_mul(reps[j], reps[i])))
            coords = extract(comm)
            table[i][j] = [(k, c) for k, c in enumerate(coords) if c != 0]
    return table, reps, rs


@lru_cache(maxsize=None)
def build_chevalley(cartan_type: str, rank: int) -> LieAlgebra:
    """Split semisimple Lie algebra of the given type on a Chevalley basis."""
    if (cartan_type, rank) not in SUPPORTED:
        raise UnsupportedType(f"unsupported type {cartan_type}{rank}")
    if cartan_type == "A":
        table, reps, rs = _table_from_sl_matrices(rank)
        alg = LieAlgebra(_labels(rs), table, rank, rs, reps, name=f"A{rank}")
    else:
        rs = RootSystem(cartan_type, rank)
        table = _table_from_roots(rs)
        alg = LieAlgebra(_labels(rs), table, rank, rs, None, name=f"{cartan_type}{rank}")
    _certify_chevalley(alg)
    return alg


def _certify_chevalley(alg: LieAlgebra):
    """Cheap construction-time certificate: Cartan action, coroots, |N| = p+1."""
    rs = alg.root_data
    assert len(rs.roots) == alg.dim - alg.rank
    for beta in rs.roots:
        e_b = alg.root_vector(beta)
        for i in range(alg.rank):
            got = alg.bracket(alg.basis_vec(i), e_b)
            assert got == la.scale(rs.pairing(beta, i), e_b)
        # [e_beta, e_-beta] = beta^vee in the h basis
        opp = alg.root_vector(tuple(-x for x in beta))
        got = alg.bracket(e_b, opp)
        coeffs = rs.coroot_coeffs(beta)
        want = [Q(0)] * alg.dim
        for i in range(alg.rank):
            want[i] = coeffs[i]
        assert got == tuple(want)
    for a in rs.roots:
        for b in rs.roots:
            s = tuple(x + y for x, y in zip(a, b))
            if s in rs.root_set:
                n = alg.bracket(alg.root_vector(a), alg.root_vector(b))
                coeff = n[alg.root_vector_index(s)]
                assert abs(coeff) == rs.p_string(a, b) + 1


def principal_sl2(alg: LieAlgebra) -> Sl2Triple:
    """Principal triple: e = sum of simple root vectors, alpha_i(h) = 2."""
    rs = alg._require_roots()
    es, hs, fs = alg.simple_vectors()
    # Solve sum_j c_j <alpha_i, alpha_j^vee> = 2 for all i.
    rows = [tuple(Q(rs.cartan[i][j]) for j in range(alg.rank)) for i in range(alg.rank)]
    target = tuple(Q(2) for _ in range(alg.rank))
    coeffs = la.solve(rows, target)
    if coeffs is None:
        raise SolveFailure("Cartan matrix is singular")
    e = la.zeros(alg.dim)
    h = la.zeros(alg.dim)
    for i in range(alg.rank):
        e = la.add(e, es[i])
        h = la.add(h, la.scale(coeffs[i], hs[i]))
    # [e, f] = h with f = sum_i d_i f_i forces d_i = c_i.
    f = la.zeros(alg.dim)
    for i in range(alg.rank):
        f = la.add(f, la.scale(coeffs[i], fs[i]))
    triple = Sl2Triple(e, h, f)
    if not triple.verify(alg):
        raise SolveFailure("principal triple relations failed")
    for v in (triple.e, triple.h, triple.f):
        if len(alg.centralizer(v)) != alg.rank:
            raise SolveFailure("principal triple member is not regular")
    return triple


def direct_power(alg: LieAlgebra, n: int) -> LieAlgebra:
    """Product algebra g^n with block-diagonal data."""
    dim = alg.dim
    labels = [f"g{k+1}.{lbl}" for k in range(n) for lbl in alg.basis_labels]
    table = [[[] for _ in range(n * dim)] for _ in range(n * dim)]
    for k in range(n):
        off = k * dim
        for i in range(dim):
            for j in range(dim):
                table[off + i][off + j] = [(off + m, c) for m, c in alg.table[i][j]]
    reps = None
    if alg.matrix_rep is not None:
        size = len(alg.matrix_rep[0])
        reps = []
        for k in range(n):
            for m in alg.matrix_rep:
                big = [[Q(0)] * (n * size) for _ in range(n * size)]
                for r in range(size):
                    for s in range(size):
                        big[k * size + r][k * size + s] = m[r][s]
                reps.append(tuple(tuple(row) for row in big))
    return LieAlgebra(labels, table, alg.rank * n, None, reps, name=f"{alg.name}^{n}")


def embed_factor(product_dim: int, factor_dim: int, k: int, x: Vector) -> Vector:
    out = [Q(0)] * product_dim
    for i, c in enumerate(x):
        out[k * factor_dim + i] = c
    return tuple(out)


def project_factor(factor_dim: int, k: int, x: Vector) -> Vector:
    return tuple(x[k * factor_dim : (k + 1) * factor_dim])


# -- polynomial helpers for exact semisimplicity ---------------------------


def _poly_trim(p: list[Fraction]) -> list[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_divmod(a: list[Fraction], b: list[Fraction]):
    a = list(a)
    q = [Q(0)] * max(0, len(a) - len(b) + 1)
    inv = Q(1) / b[-1]
    while len(a) >= len(b) and _poly_trim(a):
        d = len(a) - len(b)
        c = a[-1] * inv
        q[d] = c
        for i, bc in enumerate(b):
            a[i + d] -= c * bc
        _poly_trim(a)
    return q, a


def _poly_gcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a, b = list(a), list(b)
    while _poly_trim(b):
        _, r = _poly_divmod(a, b)
        a, b = b, r
    if a:
        lead = a[-1]
        a = [c / lead for c in a]
    return a


def minimal_polynomial(m: Matrix) -> list[Fraction]:
    """Monic minimal polynomial (coefficients low to high) of a matrix."""
    n = len(m)
    result = [Q(1)]
    for start in range(n):
        v = la.unit(n, start)
        krylov = [v]
        while True:
            v = la.mat_vec(m, v)
            rows = krylov + [v]
            sols = la.nullspace(la.transpose(rows))
            if sols:
                s = sols[0]
                lead = s[-1]
                local = [c / lead for c in s]
                break
            krylov.append(v)
        # lcm(result, local) = result * local / gcd
        g = _poly_gcd(list(result), list(local))
        q, r = _poly_divmod(list(local), g)
        assert not _poly_trim(list(r))
        prod = [Q(0)] * (len(result) + len(q) - 1)
        for i, a in enumerate(result):
            for j, b in enumerate(q):
                prod[i + j] += a * b
        result = _poly_trim(prod)
        lead = result[-1]
        result = [c / lead for c in result]
    return result


def is_ad_semisimple(alg: LieAlgebra, x: Vector) -> bool:
    """True iff ad_x has squarefree minimal polynomial (exact test)."""
    p = minimal_polynomial(alg.ad_matrix(x))
    dp = _poly_trim([c * i for i, c in enumerate(p)][1:])
    if not dp:
        return False
    return len(_poly_gcd(list(p), dp)) == 1
