"""Quiver representations, morphisms, and the structural constructions on them.

Left modules are covariant representations: an arrow a: i -> j acts by a
matrix M_a mapping the vertex-i space to the vertex-j space, and every
relation of the algebra evaluates to the zero matrix. The zero module (all
dimensions 0) is a valid representation and participates in every predicate.

Also home to the algebra-structure constructors that produce representations:
indecomposable projectives, the minimal injective cogenerator D(A), the
duality into the opposite algebra, annihilator ideals, and the projectives of
quotient algebras viewed inside the ambient module category.
"""

from __future__ import annotations

import itertools
import random
from functools import lru_cache
from typing import Iterable, Optional, Sequence

from .algebra import Algebra, Ideal
from .config import Budgets, DEFAULT_BUDGETS
from .errors import CapabilityError, InputError
from .linalg import GF, Matrix, block_diag, hstack, subspace_sum, vstack


class Representation:
    """dim vector + one matrix per arrow (rows = target dim, cols = source dim)."""

    __slots__ = ("algebra", "dims", "mats", "_hash")

    def __init__(self, algebra: Algebra, dims: Sequence[int],
                 mats: Sequence[Matrix], validate: bool = True):
        self.algebra = algebra
        self.dims = tuple(dims)
        self.mats = tuple(mats)
        self._hash = hash((id(algebra), self.dims, self.mats))
        if validate:
            self._validate()

    def _validate(self) -> None:
        A = self.algebra
        q = A.quiver
        if len(self.dims) != q.n_vertices or any(d < 0 for d in self.dims):
            raise InputError("dimension vector does not match the quiver")
        if len(self.mats) != q.n_arrows:
            raise InputError("expected one matrix per arrow")
        for k, m in enumerate(self.mats):
            s, t = q.arrow_endpoints(k)
            if m.field != A.field:
                raise InputError(f"arrow {q.arrows[k][0]!r} matrix over wrong field")
            if (m.rows, m.cols) != (self.dims[t], self.dims[s]):
                raise InputError(
                    f"arrow {q.arrows[k][0]!r} matrix must be "
                    f"{self.dims[t]}x{self.dims[s]}, got {m.rows}x{m.cols}")
        for (rs, rt), terms in A._rel_internal:
            acc = Matrix.zeros(A.field, self.dims[rt], self.dims[rs])
            for coeff, idx in terms:
                acc = acc + self.path_matrix_by_arrows(idx).scale(coeff)
            if not acc.is_zero():
                raise InputError("relation does not vanish on the representation")

    def __eq__(self, other) -> bool:
        return (isinstance(other, Representation)
                and self.algebra is other.algebra
                and self.dims == other.dims
                and self.mats == other.mats)

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Representation(dims={self.dims})"

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    def is_zero(self) -> bool:
        return self.total_dim == 0

    def path_matrix_by_arrows(self, arrows: Sequence[int]) -> Matrix:
        """Composite action of a literal arrow sequence (application order)."""
        A = self.algebra
        if not arrows:
            raise InputError("path_matrix_by_arrows needs a nonempty path")
        m = self.mats[arrows[0]]
        for k in arrows[1:]:
            m = self.mats[k] @ m
        return m

    def basis_path_action(self, pos: int) -> Matrix:
        """Action of the residue basis path `pos`: a map from its source
        vertex space to its target vertex space."""
        A = self.algebra
        src, arrows = A.basis_path(pos)
        if not arrows:
            return Matrix.identity(A.field, self.dims[src])
        return self.path_matrix_by_arrows(arrows)


def zero_representation(A: Algebra) -> Representation:
    q = A.quiver
    mats = []
    for k in range(q.n_arrows):
        s, t = q.arrow_endpoints(k)
        mats.append(Matrix.zeros(A.field, 0, 0))
    return Representation(A, (0,) * q.n_vertices, mats, validate=False)


def simple_representation(A: Algebra, vertex: int) -> Representation:
    q = A.quiver
    dims = tuple(1 if i == vertex else 0 for i in range(q.n_vertices))
    mats = []
    for k in range(q.n_arrows):
        s, t = q.arrow_endpoints(k)
        mats.append(Matrix.zeros(A.field, dims[t], dims[s]))
    return Representation(A, dims, mats, validate=False)


class Morphism:
    """Vertex-indexed family of matrices intertwining the arrow actions."""

    __slots__ = ("source", "target", "components", "_hash")

    def __init__(self, source: Representation, target: Representation,
                 components: Sequence[Matrix], validate: bool = True):
        if source.algebra is not target.algebra:
            raise InputError("morphism endpoints over different algebras")
        self.source = source
        self.target = target
        self.components = tuple(components)
        self._hash = hash((source, target, self.components))
        if validate:
            self._validate()

    def _validate(self) -> None:
        A = self.source.algebra
        q = A.quiver
        if len(self.components) != q.n_vertices:
            raise InputError("expected one component per vertex")
        for i, c in enumerate(self.components):
            if (c.rows, c.cols) != (self.target.dims[i], self.source.dims[i]):
                raise InputError(f"component {i} has wrong shape")
        for k in range(q.n_arrows):
            s, t = q.arrow_endpoints(k)
            lhs = self.target.mats[k] @ self.components[s]
            rhs = self.components[t] @ self.source.mats[k]
            if lhs != rhs:
                raise InputError(f"component family fails to intertwine arrow {q.arrows[k][0]!r}")

    def __eq__(self, other) -> bool:
        return (isinstance(other, Morphism)
                and self.source == other.source
                and self.target == other.target
                and self.components == other.components)

    def __hash__(self) -> int:
        return self._hash

    def compose(self, inner: "Morphism") -> "Morphism":
        """self o inner (apply `inner` first)."""
        if inner.target != self.source:
            raise InputError("composition endpoint mismatch")
        comps = [a @ b for a, b in zip(self.components, inner.components)]
        return Morphism(inner.source, self.target, comps, validate=False)

    def __add__(self, other: "Morphism") -> "Morphism":
        if self.source != other.source or self.target != other.target:
            raise InputError("morphism addition endpoint mismatch")
        return Morphism(self.source, self.target,
                        [a + b for a, b in zip(self.components, other.components)],
                        validate=False)

    def scale(self, c) -> "Morphism":
        return Morphism(self.source, self.target,
                        [m.scale(c) for m in self.components], validate=False)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.components)

    def is_mono(self) -> bool:
        return all(c.rank() == c.cols for c in self.components)

    def is_epi(self) -> bool:
        return all(c.rank() == c.rows for c in self.components)

    def is_iso(self) -> bool:
        return all(c.rows == c.cols and c.rank() == c.rows for c in self.components)

    def coordinates(self) -> tuple:
        """Flattened entries in vertex order; the coordinate system used for
        all rank computations on Hom spaces."""
        return tuple(x for c in self.components for x in c.entries)


def identity_morphism(M: Representation) -> Morphism:
    f = M.algebra.field
    return Morphism(M, M, [Matrix.identity(f, d) for d in M.dims], validate=False)


def zero_morphism(M: Representation, N: Representation) -> Morphism:
    f = M.algebra.field
    return Morphism(M, N, [Matrix.zeros(f, dn, dm) for dm, dn in zip(M.dims, N.dims)],
                    validate=False)


# -- Hom spaces --------------------------------------------------------------


@lru_cache(maxsize=None)
def hom_basis(M: Representation, N: Representation) -> tuple[Morphism, ...]:
    """Basis of Hom(M, N), solved from the intertwining linear system."""
    if M.algebra is not N.algebra:
        raise InputError("Hom of representations over different algebras")
    A = M.algebra
    f = A.field
    q = A.quiver
    offsets = []
    total = 0
    for i in range(q.n_vertices):
        offsets.append(total)
        total += N.dims[i] * M.dims[i]
    if total == 0:
        return ()
    rows = []
    z = f.zero()
    for k in range(q.n_arrows):
        s, t = q.arrow_endpoints(k)
        Na, Ma = N.mats[k], M.mats[k]
        # equation block: N_a phi_s - phi_t M_a = 0, entry (r, c)
        for r in range(N.dims[t]):
            for c in range(M.dims[s]):
                row = [z] * total
                for kk in range(N.dims[s]):
                    row[offsets[s] + kk * M.dims[s] + c] = \
                        f.add(row[offsets[s] + kk * M.dims[s] + c], Na.entry(r, kk))
                for ll in range(M.dims[t]):
                    idx = offsets[t] + r * M.dims[t] + ll
                    row[idx] = f.sub(row[idx], Ma.entry(ll, c))
                rows.append(row)
    if rows:
        ker = Matrix.from_rows(f, rows).kernel_basis()
    else:
        ker = Matrix.identity(f, total)
    out = []
    for j in range(ker.cols):
        comps = []
        vec = ker.col(j)
        for i in range(q.n_vertices):
            n, m = N.dims[i], M.dims[i]
            ents = tuple(vec[offsets[i] + r * m + c] for r in range(n) for c in range(m))
            comps.append(Matrix(f, n, m, ents))
        out.append(Morphism(M, N, comps, validate=False))
    return tuple(out)


def hom_dim(M: Representation, N: Representation) -> int:
    return len(hom_basis(M, N))


def morphism_from_coefficients(M: Representation, N: Representation,
                               coeffs: Sequence) -> Morphism:
    basis = hom_basis(M, N)
    if len(coeffs) != len(basis):
        raise InputError("coefficient count does not match dim Hom")
    out = zero_morphism(M, N)
    for c, b in zip(coeffs, basis):
        out = out + b.scale(c)
    return out


# -- kernel / image / cokernel ----------------------------------------------


def kernel(f: Morphism) -> tuple[Representation, Morphism]:
    """(K, iota) with iota: K -> source a mono onto the vertexwise kernels."""
    A = f.source.algebra
    q = A.quiver
    bases = [c.kernel_basis() for c in f.components]
    dims = [b.cols for b in bases]
    mats = []
    for k in range(q.n_arrows):
        s, t = q.arrow_endpoints(k)
        rhs = f.source.mats[k] @ bases[s]
        sol = bases[t].solve_right(rhs)
        assert sol is not None, "kernel not arrow-stable (bug)"
        mats.append(sol)
    K = Representation(A, dims, mats, validate=False)
    return K, Morphism(K, f.source, bases, validate=False)


def image(f: Morphism) -> tuple[Representation, Morphism, Morphism]:
    """(I, iota, pi): iota: I -> target mono, pi: source -> I epi, iota o pi = f."""
    A = f.source.algebra
    q = A.quiver
    bases = [c.column_space_basis() for c in f.components]
    dims = [b.cols for b in bases]
    mats = []
    for k in range(q.n_arrows):
        s, t = q.arrow_endpoints(k)
        sol = bases[t].solve_right(f.target.mats[k] @ bases[s])
        assert sol is not None, "image not arrow-stable (bug)"
        mats.append(sol)
    I = Representation(A, dims, mats, validate=False)
    iota = Morphism(I, f.target, bases, validate=False)
    pis = []
    for b, c in zip(bases, f.components):
        sol = b.solve_right(c)
        assert sol is not None
        pis.append(sol)
    pi = Morphism(f.source, I, pis, validate=False)
    return I, iota, pi


def cokernel(f: Morphism) -> tuple[Representation, Morphism]:
    """(C, pi) with pi: target -> C the canonical epi with kernel im f."""
    A = f.source.algebra
    fld = A.field
    q = A.quiver
    projs = [c.left_kernel_basis() for c in f.components]
    dims = [p.rows for p in projs]
    sections = []
    for p in projs:
        s = p.solve_right(Matrix.identity(fld, p.rows))
        assert s is not None
        sections.append(s)
    mats = []
    for k in range(q.n_arrows):
        s, t = q.arrow_endpoints(k)
        mats.append(projs[t] @ f.target.mats[k] @ sections[s])
    C = Representation(A, dims, mats, validate=False)
    return C, Morphism(f.target, C, projs, validate=False)


def is_exact_sequence(f: Morphism, g: Morphism) -> bool:
    """Exactness of 0 -> A -f-> B -g-> C -> 0."""
    if f.target != g.source:
        return False
    if not f.is_mono() or not g.is_epi():
        return False
    if not g.compose(f).is_zero():
        return False
    return all(cf.rank() == cg.kernel_basis().cols
               for cf, cg in zip(f.components, g.components))


# -- sums, evaluation, pushout ------------------------------------------------


def direct_sum(A: Algebra, parts: Sequence[Representation]) -> Representation:
    if not parts:
        return zero_representation(A)
    q = A.quiver
    dims = [sum(p.dims[i] for p in parts) for i in range(q.n_vertices)]
    mats = [block_diag(A.field, [p.mats[k] for p in parts]) for k in range(q.n_arrows)]
    return Representation(A, dims, mats, validate=False)


def summand_inclusion(A: Algebra, parts: Sequence[Representation], k: int,
                      total: Optional[Representation] = None) -> Morphism:
    if total is None:
        total = direct_sum(A, parts)
    f = A.field
    comps = []
    for i in range(A.quiver.n_vertices):
        off = sum(p.dims[i] for p in parts[:k])
        d = parts[k].dims[i]
        rows = []
        for r in range(total.dims[i]):
            rows.append([f.one() if (off <= r < off + d and r - off == c) else f.zero()
                         for c in range(d)])
        comps.append(Matrix.from_rows(f, rows) if rows else Matrix(f, 0, d, ()))
    return Morphism(parts[k], total, comps, validate=False)


def summand_projection(A: Algebra, parts: Sequence[Representation], k: int,
                       total: Optional[Representation] = None) -> Morphism:
    if total is None:
        total = direct_sum(A, parts)
    f = A.field
    comps = []
    for i in range(A.quiver.n_vertices):
        off = sum(p.dims[i] for p in parts[:k])
        d = parts[k].dims[i]
        rows = []
        for r in range(d):
            rows.append([f.one() if c == off + r else f.zero()
                         for c in range(total.dims[i])])
        comps.append(Matrix.from_rows(f, rows) if rows else Matrix(f, 0, total.dims[i], ()))
    return Morphism(total, parts[k], comps, validate=False)


def stacked_morphism(parts: Sequence[Morphism]) -> Morphism:
    """Stack morphisms N -> T_k into N -> T_1 (+) ... (+) T_m."""
    if not parts:
        raise InputError("stacked_morphism needs at least one part")
    A = parts[0].source.algebra
    N = parts[0].source
    if any(p.source != N for p in parts):
        raise InputError("stacked morphisms must share their source")
    tgt = direct_sum(A, [p.target for p in parts])
    comps = [vstack([p.components[i] for p in parts])
             for i in range(A.quiver.n_vertices)]
    return Morphism(N, tgt, comps, validate=False)


def evaluation_map(N: Representation, M: Representation) -> Morphism:
    """The map N -> M^d whose blocks are a basis of Hom(N, M); N lies in
    Cogen M exactly when this map is a mono."""
    if N.algebra is not M.algebra:
        raise InputError("evaluation over different algebras")
    basis = hom_basis(N, M)
    if not basis:
        return zero_morphism(N, zero_representation(N.algebra))
    return stacked_morphism(list(basis))


def pushout(f: Morphism, g: Morphism) -> tuple[Representation, Morphism, Morphism]:
    """Pushout of B <-f- A -g-> C: returns (P, B -> P, C -> P)."""
    if f.source != g.source:
        raise InputError("pushout legs must share their source")
    A = f.source.algebra
    B, C = f.target, g.target
    total = direct_sum(A, [B, C])
    comps = [vstack([fb, gc.scale(A.field.neg(A.field.one()))])
             for fb, gc in zip(f.components, g.components)]
    h = Morphism(f.source, total, comps, validate=False)
    P, pi = cokernel(h)
    incB = pi.compose(summand_inclusion(A, [B, C], 0, total))
    incC = pi.compose(summand_inclusion(A, [B, C], 1, total))
    return P, incB, incC


# -- mono / epi existence ------------------------------------------------------


def _gf_coefficient_tuples(p: int, d: int):
    return itertools.product(range(p), repeat=d)


def _rational_coefficient_tuples(d: int, trials: int):
    """Deterministic pseudorandom integer vectors from a widening grid."""
    rng = random.Random(0xC0711 + d)
    seen = 0
    radius = 1
    emitted = set()
    while seen < trials:
        vec = tuple(rng.randint(-radius, radius) for _ in range(d))
        if vec in emitted or not any(vec):
            radius += 1
            continue
        emitted.add(vec)
        seen += 1
        yield vec


def find_hom_with(Y: Representation, X: Representation, predicate,
                  budgets: Budgets = DEFAULT_BUDGETS) -> Optional[Morphism]:
    """Search Hom(Y, X) for an element satisfying `predicate`.

    Over GF(p) the search is exhaustive within the mono_enum budget; over the
    rationals it is a deterministic sample, so a miss is only probabilistic
    evidence of absence.
    """
    basis = hom_basis(Y, X)
    d = len(basis)
    zero = zero_morphism(Y, X)
    if d == 0:
        return zero if predicate(zero) else None
    fld = Y.algebra.field
    if isinstance(fld, GF):
        if fld.p ** d > budgets.mono_enum:
            raise CapabilityError(
                f"Hom search space {fld.p}^{d} exceeds budget {budgets.mono_enum}")
        for coeffs in _gf_coefficient_tuples(fld.p, d):
            cand = morphism_from_coefficients(Y, X, coeffs)
            if predicate(cand):
                return cand
        return None
    if predicate(zero):
        return zero
    for coeffs in _rational_coefficient_tuples(d, budgets.rational_trials):
        cand = morphism_from_coefficients(Y, X, coeffs)
        if predicate(cand):
            return cand
    return None


def exists_mono(Y: Representation, X: Representation,
                budgets: Budgets = DEFAULT_BUDGETS) -> bool:
    """Whether some element of Hom(Y, X) is injective. Exhaustive over GF(p);
    a False over the rationals is probabilistic (documented contract)."""
    if any(dy > dx for dy, dx in zip(Y.dims, X.dims)):
        return False
    return find_hom_with(Y, X, Morphism.is_mono, budgets) is not None


def exists_epi(X: Representation, Y: Representation,
               budgets: Budgets = DEFAULT_BUDGETS) -> bool:
    """Whether some element of Hom(X, Y) is surjective; same contract as
    exists_mono."""
    if any(dy > dx for dx, dy in zip(X.dims, Y.dims)):
        return False
    return find_hom_with(X, Y, Morphism.is_epi, budgets) is not None


def find_isomorphism(M: Representation, N: Representation,
                     budgets: Budgets = DEFAULT_BUDGETS) -> Optional[Morphism]:
    if M.dims != N.dims:
        return None
    return find_hom_with(M, N, Morphism.is_iso, budgets)


# -- subrepresentations, radical, top -----------------------------------------


def subrepresentation_spanned_by(M: Representation,
                                 vectors: Sequence[Matrix]) -> tuple[Representation, Morphism]:
    """Smallest subrepresentation containing the given vertexwise column spans
    (one matrix of columns per vertex); returns (S, inclusion)."""
    A = M.algebra
    fld = A.field
    q = A.quiver
    spans = [vectors[i].column_space_basis() for i in range(q.n_vertices)]
    changed = True
    while changed:
        changed = False
        new = list(spans)
        for k in range(q.n_arrows):
            s, t = q.arrow_endpoints(k)
            if spans[s].cols == 0:
                continue
            pushed = M.mats[k] @ spans[s]
            combined = subspace_sum(fld, M.dims[t], [new[t], pushed])
            if combined.cols != new[t].cols:
                new[t] = combined
                changed = True
        spans = new
    bases = [s.column_space_basis() for s in spans]
    dims = [b.cols for b in bases]
    mats = []
    for k in range(q.n_arrows):
        s, t = q.arrow_endpoints(k)
        sol = bases[t].solve_right(M.mats[k] @ bases[s])
        assert sol is not None
        mats.append(sol)
    S = Representation(A, dims, mats, validate=False)
    return S, Morphism(S, M, bases, validate=False)


def radical(M: Representation) -> tuple[Representation, Morphism]:
    """rad M = sum of the images of all arrow actions, as a subrepresentation."""
    A = M.algebra
    q = A.quiver
    spans = []
    for i in range(q.n_vertices):
        incoming = [M.mats[k] for k in range(q.n_arrows)
                    if q.arrow_endpoints(k)[1] == i]
        spans.append(subspace_sum(A.field, M.dims[i], incoming))
    return subrepresentation_spanned_by(M, spans)


def top_generators(M: Representation) -> list[Matrix]:
    """One column matrix per vertex whose columns lift a basis of M / rad M
    (greedy completion of the radical by standard basis vectors)."""
    A = M.algebra
    fld = A.field
    _, incl = radical(M)
    out = []
    for i in range(A.quiver.n_vertices):
        base = incl.components[i]
        cols = []
        cur = base
        for j in range(M.dims[i]):
            e = Matrix.from_cols(fld, [[fld.one() if r == j else fld.zero()
                                        for r in range(M.dims[i])]])
            cand = hstack([cur, e])
            if cand.rank() > cur.rank():
                cols.append(e)
                cur = cand
        out.append(hstack(cols) if cols else Matrix(fld, M.dims[i], 0, ()))
    return out


# -- projectives, injectives, duality ------------------------------------------


@lru_cache(maxsize=None)
def indecomposable_projectives(A: Algebra) -> tuple[Representation, ...]:
    """P_i = A e_i as a representation: vertex-j space spanned by the residue
    basis paths i -> j, arrows acting by reduced concatenation."""
    out = []
    fld = A.field
    for i in range(A.quiver.n_vertices):
        positions = [pos for pos in range(A.dim) if A.basis_source(pos) == i]
        by_vertex: dict[int, list[int]] = {}
        for pos in positions:
            by_vertex.setdefault(A.basis_target(pos), []).append(pos)
        index = {}
        dims = []
        for j in range(A.quiver.n_vertices):
            plist = by_vertex.get(j, [])
            for r, pos in enumerate(plist):
                index[pos] = r
            dims.append(len(plist))
        mats = []
        for k in range(A.quiver.n_arrows):
            s, t = A.quiver.arrow_endpoints(k)
            cols = []
            for pos in by_vertex.get(s, []):
                vec = [fld.zero()] * dims[t]
                red = A._append_arrow({pos: fld.one()}, k)
                for bpos, c in red.items():
                    vec[index[bpos]] = c
                cols.append(vec)
            mats.append(Matrix.from_cols(fld, cols) if cols
                        else Matrix(fld, dims[t], 0, ()))
        out.append(Representation(A, dims, mats))
    return tuple(out)


def morphism_from_projective(A: Algebra, i: int, M: Representation,
                             generator_column: Matrix) -> Morphism:
    """The unique morphism P_i -> M sending the generator e_i to the given
    column vector in M's vertex-i space; columns are path actions on it."""
    fld = A.field
    proj = indecomposable_projectives(A)[i]
    by_vertex: dict[int, list[int]] = {}
    for pos in range(A.dim):
        if A.basis_source(pos) == i:
            by_vertex.setdefault(A.basis_target(pos), []).append(pos)
    comps = []
    for j in range(A.quiver.n_vertices):
        cols = []
        for pos in by_vertex.get(j, []):
            act = M.basis_path_action(pos) @ generator_column
            cols.append([act.entry(r, 0) for r in range(act.rows)])
        comps.append(Matrix.from_cols(fld, cols) if cols
                     else Matrix(fld, M.dims[j], 0, ()))
    return Morphism(proj, M, comps, validate=False)


def dual(M: Representation) -> Representation:
    """Contravariant duality into the opposite algebra: transposed matrices.
    Applying it twice returns a representation over the original algebra that
    equals M on the nose."""
    A = M.algebra
    op = A.opposite()
    mats = [m.transpose() for m in M.mats]
    return Representation(op, M.dims, mats, validate=False)


def dual_morphism(f: Morphism) -> Morphism:
    return Morphism(dual(f.target), dual(f.source),
                    [c.transpose() for c in f.components], validate=False)


@lru_cache(maxsize=None)
def indecomposable_injectives(A: Algebra) -> tuple[Representation, ...]:
    """I_i = D(e_i A), the injective envelope of the simple at vertex i."""
    op_projs = indecomposable_projectives(A.opposite())
    return tuple(dual(p) for p in op_projs)


@lru_cache(maxsize=None)
def injective_cogenerator(A: Algebra) -> Representation:
    """Q = D(A) = (+)_i D(e_i A), the minimal injective cogenerator."""
    return direct_sum(A, list(indecomposable_injectives(A)))


# -- annihilators and quotient algebras ----------------------------------------


def annihilator(A: Algebra, M: Representation) -> Ideal:
    """Basis of {r in A : r.M = 0}; M is faithful iff the ideal is zero."""
    fld = A.field
    z = fld.zero()
    rows = []
    # one equation per (source vertex i, target vertex j, matrix entry)
    groups: dict[tuple[int, int], list[int]] = {}
    for pos in range(A.dim):
        groups.setdefault((A.basis_source(pos), A.basis_target(pos)), []).append(pos)
    for (i, j), poss in groups.items():
        acts = {pos: M.basis_path_action(pos) for pos in poss}
        for r in range(M.dims[j]):
            for c in range(M.dims[i]):
                row = [z] * A.dim
                for pos in poss:
                    row[pos] = acts[pos].entry(r, c)
                rows.append(row)
    if not rows:
        return Ideal(A, [A.basis_element(k) for k in range(A.dim)])
    ker = Matrix.from_rows(fld, rows).kernel_basis()
    vectors = [tuple(ker.col(j)) for j in range(ker.cols)]
    return Ideal(A, vectors)


def ideal_annihilates(I: Ideal, M: Representation) -> bool:
    A = I.algebra
    z = A.field.zero()
    for vec in I.basis:
        groups: dict[tuple[int, int], Matrix] = {}
        for pos, c in enumerate(vec):
            if c == z:
                continue
            key = (A.basis_source(pos), A.basis_target(pos))
            act = M.basis_path_action(pos).scale(c)
            groups[key] = groups.get(key, Matrix.zeros(A.field, act.rows, act.cols)) + act
        if any(not m.is_zero() for m in groups.values()):
            return False
    return True


def quotient_projectives(A: Algebra, I: Ideal) -> tuple[tuple[Representation, Morphism], ...]:
    """Projectives of A/I viewed inside A-mod: for each vertex the pair
    (P_i / I.P_i, quotient map P_i -> P_i / I.P_i)."""
    fld = A.field
    projs = indecomposable_projectives(A)
    out = []
    for i in range(A.quiver.n_vertices):
        P = projs[i]
        by_vertex: dict[int, list[int]] = {}
        for pos in range(A.dim):
            if A.basis_source(pos) == i:
                by_vertex.setdefault(A.basis_target(pos), []).append(pos)
        spans = []
        for j in range(A.quiver.n_vertices):
            plist = by_vertex.get(j, [])
            cols = []
            for vec in I.basis:
                col = [vec[pos] for pos in plist]
                if any(x != fld.zero() for x in col):
                    cols.append(col)
            spans.append(Matrix.from_cols(fld, cols) if cols
                         else Matrix(fld, P.dims[j], 0, ()))
        sub, incl = subrepresentation_spanned_by(P, spans)
        quot, pi = cokernel(incl)
        out.append((quot, pi))
    return tuple(out)
