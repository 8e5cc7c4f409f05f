"""Quivers with admissible relations and their finite path-basis algebras.

A presentation consists of a quiver, a list of relations (linear combinations
of parallel paths of length >= 2, written in application order: the stored
sequence (a, b) is the composite "first a, then b"), a ground field, and a
nilpotency bound N at which all paths must vanish modulo the relations.

Building the algebra enumerates all paths of length <= N, row-reduces the
span of the two-sided products of the relations, checks that every path of
length exactly N reduces to zero (the presentation is rejected otherwise),
and keeps the non-pivot paths of length < N as the residue-path basis.
Multiplication re-expands in this basis by appending arrows one at a time
and reducing after each step.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence

from .errors import CapabilityError, InputError
from .linalg import FieldLike, Matrix

# A path is (source vertex index, tuple of arrow indices in application order).
Path = tuple[int, tuple[int, ...]]


@dataclass(frozen=True)
class Quiver:
    vertices: tuple[str, ...]
    arrows: tuple[tuple[str, str, str], ...]  # (name, source, target)

    def __post_init__(self) -> None:
        if len(set(self.vertices)) != len(self.vertices):
            raise InputError("duplicate vertex names")
        names = [a[0] for a in self.arrows]
        if len(set(names)) != len(names):
            raise InputError("duplicate arrow names")
        vs = set(self.vertices)
        for name, s, t in self.arrows:
            if s not in vs or t not in vs:
                raise InputError(f"arrow {name!r} has undeclared endpoint")

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def n_arrows(self) -> int:
        return len(self.arrows)

    def vertex_index(self, name: str) -> int:
        try:
            return self.vertices.index(name)
        except ValueError:
            raise InputError(f"unknown vertex {name!r}") from None

    def arrow_index(self, name: str) -> int:
        for k, a in enumerate(self.arrows):
            if a[0] == name:
                return k
        raise InputError(f"unknown arrow {name!r}")

    def arrow_endpoints(self, k: int) -> tuple[int, int]:
        _, s, t = self.arrows[k]
        return self.vertex_index(s), self.vertex_index(t)


@dataclass(frozen=True)
class Relation:
    """Sum of (coefficient, path) terms; paths are parallel arrow-name
    sequences of length >= 2 in application order."""

    terms: tuple[tuple[object, tuple[str, ...]], ...]

    def display(self) -> str:
        def path_str(arrows: tuple[str, ...]) -> str:
            return ".".join(reversed(arrows))
        return " + ".join(f"{c}*{path_str(p)}" for c, p in self.terms)


def _path_key(quiver: Quiver, p: Path) -> tuple:
    return (len(p[1]), p[0], p[1])


class Algebra:
    """Finite-dimensional algebra presented by a quiver with relations.

    Immutable after construction; identity-based equality. The residue-path
    basis is exposed through `basis_paths`, and elements are coefficient
    tuples over that basis.
    """

    def __init__(self, quiver: Quiver, relations: Sequence[Relation],
                 field: FieldLike, bound: int):
        if bound < 1:
            raise InputError("nilpotency bound must be >= 1")
        self.quiver = quiver
        self.field = field
        self.bound = bound
        self.relations = tuple(relations)
        self._opposite: Optional["Algebra"] = None
        self._arrow_src = []
        self._arrow_tgt = []
        for k in range(quiver.n_arrows):
            s, t = quiver.arrow_endpoints(k)
            self._arrow_src.append(s)
            self._arrow_tgt.append(t)
        self._validate_relations()
        self._enumerate_paths()
        self._reduce_ideal()
        self._index_basis()

    # -- construction ------------------------------------------------------

    def _validate_relations(self) -> None:
        q = self.quiver
        self._rel_internal = []
        for rel in self.relations:
            if not rel.terms:
                raise InputError("empty relation")
            endpoints = None
            terms = []
            for coeff, arrows in rel.terms:
                if len(arrows) < 2:
                    raise InputError(f"relation path {arrows!r} shorter than 2")
                idx = tuple(q.arrow_index(a) for a in arrows)
                for u, v in zip(idx, idx[1:]):
                    if self._arrow_tgt[u] != self._arrow_src[v]:
                        raise InputError(f"non-composable relation path {arrows!r}")
                ends = (self._arrow_src[idx[0]], self._arrow_tgt[idx[-1]])
                if endpoints is None:
                    endpoints = ends
                elif endpoints != ends:
                    raise InputError(f"relation terms not parallel: {rel.display()}")
                terms.append((self.field.coerce(coeff), idx))
            self._rel_internal.append((endpoints, terms))

    def _enumerate_paths(self) -> None:
        q = self.quiver
        paths: list[Path] = [(i, ()) for i in range(q.n_vertices)]
        frontier = list(paths)
        for _ in range(self.bound):
            nxt = []
            for p in frontier:
                tgt = self.path_target(p)
                for k in range(q.n_arrows):
                    if self._arrow_src[k] == tgt:
                        nxt.append((p[0], p[1] + (k,)))
            paths.extend(nxt)
            frontier = nxt
        paths.sort(key=lambda p: _path_key(q, p))
        self._paths = paths
        self._path_id = {p: i for i, p in enumerate(paths)}

    def path_target(self, p: Path) -> int:
        return self._arrow_tgt[p[1][-1]] if p[1] else p[0]

    def _reduce_ideal(self) -> None:
        f = self.field
        z = f.zero()
        npaths = len(self._paths)
        gens: list[list] = []
        for (rs, rt), terms in self._rel_internal:
            min_len = min(len(idx) for _, idx in terms)
            for s in self._paths:
                if self.path_target(s) != rs:
                    continue
                for qq in self._paths:
                    if qq[0] != rt:
                        continue
                    if len(s[1]) + min_len + len(qq[1]) > self.bound:
                        continue
                    vec = [z] * npaths
                    for coeff, idx in terms:
                        total = s[1] + idx + qq[1]
                        if len(total) > self.bound:
                            continue
                        pid = self._path_id[(s[0], total)]
                        vec[pid] = f.add(vec[pid], coeff)
                    if any(x != z for x in vec):
                        gens.append(vec)
        if gens:
            gmat = Matrix.from_rows(f, gens)
            R, piv = gmat.rref()
            self._ideal_rows = [R.row(i) for i in range(len(piv))]
            self._ideal_pivots = list(piv)
        else:
            self._ideal_rows = []
            self._ideal_pivots = []

    def _reduce_unit_vector(self, pid: int) -> dict[int, object]:
        """Residue of the single path `pid` as {path id: coeff} on non-pivots."""
        f = self.field
        z = f.zero()
        out: dict[int, object] = {pid: f.one()}
        # eliminate pivot coordinates using the reduced rows
        for row, pc in zip(self._ideal_rows, self._ideal_pivots):
            c = out.get(pc)
            if c is None or c == z:
                continue
            del out[pc]
            for j, x in enumerate(row):
                if j == pc or x == z:
                    continue
                nv = f.sub(out.get(j, z), f.mul(c, x))
                if nv == z:
                    out.pop(j, None)
                else:
                    out[j] = nv
        return out

    def _index_basis(self) -> None:
        f = self.field
        pivset = set(self._ideal_pivots)
        # admissibility at the bound: every path of length N must reduce to zero
        for pid, p in enumerate(self._paths):
            if len(p[1]) == self.bound and pid not in pivset:
                raise CapabilityError(
                    f"presentation not admissible at bound {self.bound}: "
                    f"path {self.path_display(p)} is nonzero modulo the relations")
        basis = [pid for pid, p in enumerate(self._paths)
                 if pid not in pivset and len(p[1]) < self.bound]
        self.basis_path_ids = tuple(basis)
        self.dim = len(basis)
        self._basis_pos = {pid: k for k, pid in enumerate(basis)}
        self._reduction: dict[int, dict[int, object]] = {}
        for pid in range(len(self._paths)):
            red = self._reduce_unit_vector(pid)
            self._reduction[pid] = {self._basis_pos[j]: c for j, c in red.items()}
        self._e_pos = {}
        for i in range(self.quiver.n_vertices):
            self._e_pos[i] = self._basis_pos[self._path_id[(i, ())]]
        self._arrow_pos = {}
        for k in range(self.quiver.n_arrows):
            pid = self._path_id[(self._arrow_src[k], (k,))]
            self._arrow_pos[k] = self._basis_pos[pid]

    # -- basis bookkeeping ---------------------------------------------------

    def basis_path(self, pos: int) -> Path:
        return self._paths[self.basis_path_ids[pos]]

    def basis_source(self, pos: int) -> int:
        return self.basis_path(pos)[0]

    def basis_target(self, pos: int) -> int:
        return self.path_target(self.basis_path(pos))

    def basis_length(self, pos: int) -> int:
        return len(self.basis_path(pos)[1])

    def vertex_idempotent_pos(self, i: int) -> int:
        return self._e_pos[i]

    def path_display(self, p: Path) -> str:
        if not p[1]:
            return f"e_{self.quiver.vertices[p[0]]}"
        return ".".join(self.quiver.arrows[k][0] for k in reversed(p[1]))

    def basis_display(self, pos: int) -> str:
        return self.path_display(self.basis_path(pos))

    # -- element arithmetic (elements are dense tuples over the basis) --------

    def zero_element(self) -> tuple:
        return (self.field.zero(),) * self.dim

    def unit_element(self) -> tuple:
        z = self.field.zero()
        vec = [z] * self.dim
        for pos in self._e_pos.values():
            vec[pos] = self.field.one()
        return tuple(vec)

    def basis_element(self, pos: int) -> tuple:
        z = self.field.zero()
        vec = [z] * self.dim
        vec[pos] = self.field.one()
        return tuple(vec)

    def _append_arrow(self, vec: dict[int, object], arrow: int) -> dict[int, object]:
        """Left-multiply by an arrow: each residue path p becomes arrow∘p."""
        f = self.field
        z = f.zero()
        out: dict[int, object] = {}
        for pos, c in vec.items():
            p = self.basis_path(pos)
            if self.path_target(p) != self._arrow_src[arrow]:
                continue
            red = self._reduction[self._path_id[(p[0], p[1] + (arrow,))]]
            for bpos, c2 in red.items():
                nv = f.add(out.get(bpos, z), f.mul(c, c2))
                if nv == z:
                    out.pop(bpos, None)
                else:
                    out[bpos] = nv
        return out

    @lru_cache(maxsize=None)
    def _mult_basis(self, upos: int, vpos: int) -> tuple:
        """Product (basis u) * (basis v) = "apply v, then u" as a dense tuple."""
        f = self.field
        z = f.zero()
        u = self.basis_path(upos)
        v = self.basis_path(vpos)
        if u[0] != self.path_target(v):
            return self.zero_element()
        vec: dict[int, object] = {vpos: f.one()}
        for arrow in u[1]:
            vec = self._append_arrow(vec, arrow)
            if not vec:
                return self.zero_element()
        out = [z] * self.dim
        for pos, c in vec.items():
            out[pos] = c
        return tuple(out)

    def mult(self, x: Sequence, y: Sequence) -> tuple:
        """Product of two elements given as coefficient tuples over the basis."""
        f = self.field
        z = f.zero()
        acc = [z] * self.dim
        for i, xi in enumerate(x):
            if xi == z:
                continue
            for j, yj in enumerate(y):
                if yj == z:
                    continue
                prod = self._mult_basis(i, j)
                c = f.mul(xi, yj)
                for k, pk in enumerate(prod):
                    if pk != z:
                        acc[k] = f.add(acc[k], f.mul(c, pk))
        return tuple(acc)

    # -- derived presentations -------------------------------------------------

    def opposite(self) -> "Algebra":
        """The opposite algebra (reversed arrows); an involution on objects."""
        if self._opposite is None:
            q = self.quiver
            rev = Quiver(q.vertices, tuple((n, t, s) for n, s, t in q.arrows))
            rels = tuple(
                Relation(tuple((c, tuple(reversed(arrows))) for c, arrows in rel.terms))
                for rel in self.relations)
            opp = Algebra(rev, rels, self.field, self.bound)
            opp._opposite = self
            self._opposite = opp
        return self._opposite

    def element_display(self, vec: Sequence) -> str:
        f = self.field
        z = f.zero()
        parts = [f"{f.fmt(c)}*{self.basis_display(i)}"
                 for i, c in enumerate(vec) if c != z]
        return " + ".join(parts) if parts else "0"


def build_algebra(quiver: Quiver, relations: Sequence[Relation],
                  field: FieldLike, bound: int) -> Algebra:
    """Construct the path-basis algebra, rejecting non-admissible presentations."""
    return Algebra(quiver, relations, field, bound)


class Ideal:
    """Two-sided ideal given by a basis of coefficient vectors; closure under
    multiplication by every basis path is verified on construction."""

    def __init__(self, algebra: Algebra, vectors: Sequence[Sequence], _verify: bool = True):
        self.algebra = algebra
        f = algebra.field
        rows = [tuple(f.coerce(x) for x in v) for v in vectors]
        rows = [r for r in rows if any(x != f.zero() for x in r)]
        if rows:
            R, piv = Matrix.from_rows(f, rows).rref()
            self.basis = tuple(R.row(i) for i in range(len(piv)))
            self._pivots = piv
        else:
            self.basis = ()
            self._pivots = ()
        if _verify:
            self._verify_closure()

    def _verify_closure(self) -> None:
        A = self.algebra
        for v in self.basis:
            for pos in range(A.dim):
                b = A.basis_element(pos)
                for prod in (A.mult(b, v), A.mult(v, b)):
                    if not self.contains(prod):
                        raise InputError(
                            f"ideal basis not closed under multiplication by "
                            f"{A.basis_display(pos)}")

    def contains(self, vec: Sequence) -> bool:
        f = self.algebra.field
        z = f.zero()
        v = list(vec)
        for row, pc in zip(self.basis, self._pivots):
            c = v[pc]
            if c == z:
                continue
            for j, x in enumerate(row):
                if x != z:
                    v[j] = f.sub(v[j], f.mul(c, x))
        return all(x == z for x in v)

    def is_zero(self) -> bool:
        return not self.basis

    def key(self) -> tuple:
        """Canonical hashable signature (the reduced basis rows)."""
        return self.basis

    def display(self) -> str:
        if not self.basis:
            return "0"
        return ", ".join(self.algebra.element_display(v) for v in self.basis)
