"""Lie superalgebras given by structure constants on a homogeneous basis."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import product
from typing import Dict, List, Mapping, NamedTuple, Optional, Sequence, Tuple

from .core import (
    RATIONAL,
    Field,
    GradedSubspace,
    HostMismatch,
    SuperDim,
    _axpy,
    complement,
    echelonize,
    nullspace,
)

__all__ = [
    "StructureError",
    "NotAnIdeal",
    "LieSuperalgebra",
    "HomSpec",
    "Violation",
    "ValidationReport",
    "abelian",
    "validate",
    "bracket",
    "bracket_span",
    "center",
    "derived",
    "lower_central_series",
    "nilpotency_class",
    "super_nilindex",
    "is_ideal",
    "quotient",
    "verify_hom",
    "verify_iso",
    "direct_sum",
]

Table = Dict[Tuple[int, int], Dict[int, object]]


class StructureError(ValueError):
    """Malformed structure data (bad indices, conflicting mirror entries, ...)."""


class NotAnIdeal(ValueError):
    pass


def _sign(a: int, b: int) -> int:
    return -1 if a and b else 1


@dataclass(frozen=True, eq=False)
class LieSuperalgebra:
    """Basis names and parities plus a full sparse bracket table.

    ``table[i, j]`` maps basis index ``k`` to the coefficient of ``e_k`` in
    ``[e_i, e_j]``.  The table is taken as-is: nothing is symmetrised, so a
    table that breaks super skew-symmetry is representable (and is what
    :func:`validate` reports on).  Use :meth:`from_brackets` to fill in
    mirror entries automatically.
    """

    names: Tuple[str, ...]
    parities: Tuple[int, ...]
    table: Table
    field: Field = RATIONAL

    def __post_init__(self):
        if len(self.names) != len(self.parities):
            raise StructureError("names and parities differ in length")
        if any(p not in (0, 1) for p in self.parities):
            raise StructureError("parities must be 0 or 1")
        n = len(self.names)
        for (i, j), val in self.table.items():
            if not (0 <= i < n and 0 <= j < n) or any(not 0 <= k < n for k in val):
                raise StructureError(f"bracket index out of range at ({i}, {j})")

    @classmethod
    def from_brackets(cls, names: Sequence[str], parities: Sequence[int],
                      brackets: Mapping[Tuple[int, int], Mapping[int, object]],
                      field: Field = RATIONAL) -> "LieSuperalgebra":
        """Build the full table from one entry per unordered pair.

        Missing mirrors are derived via [y,x] = -(-1)^{|x||y|}[x,y]; an
        explicitly given mirror that disagrees raises :class:`StructureError`.
        """
        parities = tuple(int(p) for p in parities)
        n = len(parities)
        clean: Table = {}
        for (i, j), val in brackets.items():
            if not (0 <= i < n and 0 <= j < n):
                raise StructureError(f"bracket index out of range at ({i}, {j})")
            v = {}
            for k, c in val.items():
                if not 0 <= k < n:
                    raise StructureError(f"bracket value index {k} out of range at ({i}, {j})")
                c = field(c)
                if c:
                    v[k] = c
            clean[i, j] = v
        table: Table = {}
        for (i, j), v in clean.items():
            s = _sign(parities[i], parities[j])
            mirror = {k: -s * c for k, c in v.items()}
            if (j, i) in clean and i != j and clean[j, i] != mirror:
                raise StructureError(
                    f"conflicting entries for [{names[i]},{names[j]}] and its mirror")
            if v:
                table[i, j] = v
                if i != j and mirror:
                    table[j, i] = mirror
        return cls(tuple(names), parities, table, field)

    @property
    def dim(self) -> int:
        return len(self.names)

    def sdim(self) -> SuperDim:
        odd = sum(self.parities)
        return SuperDim(self.dim - odd, odd)

    def unit(self, i: int) -> tuple:
        v = [self.field.zero] * self.dim
        v[i] = self.field.one
        return tuple(v)

    def vector(self, coeffs: Mapping[int, object]) -> tuple:
        v = [self.field.zero] * self.dim
        for k, c in coeffs.items():
            v[k] = self.field(c)
        return tuple(v)

    def full(self) -> GradedSubspace:
        return GradedSubspace.full(self.parities, self.field)

    def zero_subspace(self) -> GradedSubspace:
        return GradedSubspace.zero_of(self.parities, self.field)

    def span(self, vectors) -> GradedSubspace:
        return echelonize(vectors, self.parities, self.field)

    def index(self, name: str) -> int:
        return self.names.index(name)

    def br(self, i: int, j: int) -> Dict[int, object]:
        return self.table.get((i, j), {})

    def canonical_brackets(self) -> Dict[Tuple[int, int], Dict[int, object]]:
        """Entries with i <= j, the form used for serialisation."""
        return {k: v for k, v in sorted(self.table.items()) if k[0] <= k[1] and v}

    def __repr__(self):
        return f"LieSuperalgebra(sdim={self.sdim()}, field={self.field})"


def abelian(s: int, t: int, field: Field = RATIONAL) -> LieSuperalgebra:
    names = [f"e{i}" for i in range(s)] + [f"o{j}" for j in range(t)]
    return LieSuperalgebra(tuple(names), (0,) * s + (1,) * t, {}, field)


@dataclass(frozen=True, eq=False)
class HomSpec:
    """Even linear map ``source -> target``; ``matrix[r][c]`` is row r, column c.

    Column ``c`` holds the image of the ``c``-th source basis vector.
    ``section`` optionally holds a right inverse (used for quotient maps).
    """

    source: LieSuperalgebra
    target: LieSuperalgebra
    matrix: Tuple[tuple, ...]
    section: Optional[Tuple[tuple, ...]] = dc_field(default=None)

    def __post_init__(self):
        if len(self.matrix) != self.target.dim or any(len(r) != self.source.dim for r in self.matrix):
            raise HostMismatch("matrix shape does not match source/target dimensions")

    def apply(self, v: Sequence) -> tuple:
        if len(v) != self.source.dim:
            raise HostMismatch("vector does not live in the source algebra")
        nz = [(j, c) for j, c in enumerate(v) if c]
        zero = self.target.field.zero
        return tuple(sum((row[j] * c for j, c in nz), zero) for row in self.matrix)

    def column(self, j: int) -> tuple:
        return tuple(row[j] for row in self.matrix)

    def is_even(self) -> bool:
        sp, tp = self.source.parities, self.target.parities
        return all(not row[j] or sp[j] == tp[r]
                   for r, row in enumerate(self.matrix) for j in range(len(sp)))

    def rank(self) -> int:
        return len(self.image().basis)

    def image(self) -> GradedSubspace:
        return self.target.span(self.column(j) for j in range(self.source.dim))

    def kernel(self) -> GradedSubspace:
        eqs = [{j: c for j, c in enumerate(row) if c} for row in self.matrix]
        sp = self.source.parities
        vecs = []
        for par in (0, 1):
            cols = [j for j in range(self.source.dim) if sp[j] == par]
            vecs += nullspace(eqs, self.source.dim, self.source.field, cols)
        return self.source.span(vecs)

    def compose(self, other: "HomSpec") -> "HomSpec":
        """``self ∘ other``."""
        cols = [self.apply(other.column(j)) for j in range(other.source.dim)]
        rows = tuple(tuple(col[r] for col in cols) for r in range(self.target.dim))
        return HomSpec(other.source, self.target, rows)


# ---------------------------------------------------------------------------
# bracket and validation


def _bracket_sparse(L: LieSuperalgebra, u: dict, v: dict) -> dict:
    out: dict = {}
    for i, a in u.items():
        for j, b in v.items():
            val = L.table.get((i, j))
            if val:
                _axpy(out, a * b, val)
    return out


def bracket(L: LieSuperalgebra, u: Sequence, v: Sequence) -> tuple:
    """Bilinear extension of the structure constants."""
    if len(u) != L.dim or len(v) != L.dim:
        raise HostMismatch("vector does not live in this algebra")
    out = _bracket_sparse(L, {i: c for i, c in enumerate(u) if c},
                          {j: c for j, c in enumerate(v) if c})
    return L.vector(out)


class Violation(NamedTuple):
    kind: str  # "parity", "skew" or "jacobi"
    indices: Tuple[int, ...]
    detail: str


@dataclass
class ValidationReport:
    violations: List[Violation]

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.ok

    def lines(self, L: Optional[LieSuperalgebra] = None) -> List[str]:
        out = []
        for v in self.violations:
            names = [L.names[i] for i in v.indices] if L else [str(i) for i in v.indices]
            out.append(f"{v.kind} violation at ({', '.join(names)}): {v.detail}")
        return out


def _fmt(L: LieSuperalgebra, vec: dict) -> str:
    if not vec:
        return "0"
    return " + ".join(f"{c}*{L.names[k]}" for k, c in sorted(vec.items()))


def validate(L: LieSuperalgebra, limit: Optional[int] = None) -> ValidationReport:
    """Check parity compatibility, super skew-symmetry and the super Jacobi identity.

    Violations are returned as data; ``limit`` stops after that many.
    """
    par = L.parities
    n = L.dim
    bad: List[Violation] = []

    def full():
        return limit is not None and len(bad) >= limit

    for (i, j), val in sorted(L.table.items()):
        want = (par[i] + par[j]) % 2
        if any(par[k] != want for k in val):
            bad.append(Violation("parity", (i, j), f"[{L.names[i]},{L.names[j]}] = {_fmt(L, val)}"
                                 f" has components of parity {1 - want}"))
            if full():
                return ValidationReport(bad)
    for i in range(n):
        for j in range(i, n):
            a = L.br(i, j)
            b = L.br(j, i)
            s = _sign(par[i], par[j])
            diff = dict(a)
            _axpy(diff, s, b)
            if diff:
                bad.append(Violation("skew", (i, j),
                                     f"[{L.names[i]},{L.names[j]}] = {_fmt(L, a)} but "
                                     f"[{L.names[j]},{L.names[i]}] = {_fmt(L, b)}"))
                if full():
                    return ValidationReport(bad)
    one = L.field.one
    for x, y, z in product(range(n), repeat=3):
        px, py, pz = par[x], par[y], par[z]
        acc: dict = {}
        _axpy(acc, _sign(px, pz) * one, _bracket_sparse(L, {x: one}, L.br(y, z)))
        _axpy(acc, _sign(px, py) * one, _bracket_sparse(L, {y: one}, L.br(z, x)))
        _axpy(acc, _sign(py, pz) * one, _bracket_sparse(L, {z: one}, L.br(x, y)))
        if acc:
            bad.append(Violation("jacobi", (x, y, z), f"cyclic sum = {_fmt(L, acc)}"))
            if full():
                return ValidationReport(bad)
    return ValidationReport(bad)


# ---------------------------------------------------------------------------
# structural invariants


def _check_sub(L: LieSuperalgebra, X: GradedSubspace):
    if X.parities != L.parities or X.field != L.field:
        raise HostMismatch("subspace does not live in this algebra")


def bracket_span(L: LieSuperalgebra, X: GradedSubspace, Y: GradedSubspace) -> GradedSubspace:
    """Span of [x, y] over basis vectors x of X and y of Y."""
    _check_sub(L, X)
    _check_sub(L, Y)
    ys = [{j: c for j, c in enumerate(y) if c} for y in Y.basis]
    vecs = []
    for x in X.basis:
        xs = {i: c for i, c in enumerate(x) if c}
        for y in ys:
            b = _bracket_sparse(L, xs, y)
            if b:
                vecs.append(L.vector(b))
    return L.span(vecs)


def center(L: LieSuperalgebra) -> GradedSubspace:
    # rows: coefficient of e_k in [e_i, e_j] as a linear form in the unknown coordinates i
    eqs: Dict[Tuple[int, int], dict] = {}
    for (i, j), val in L.table.items():
        for k, c in val.items():
            eqs.setdefault((j, k), {})[i] = c
    vecs = []
    for par in (0, 1):
        cols = [i for i in range(L.dim) if L.parities[i] == par]
        vecs += nullspace(eqs.values(), L.dim, L.field, cols)
    return L.span(vecs)


def derived(L: LieSuperalgebra) -> GradedSubspace:
    return L.span(L.vector(v) for v in L.table.values() if v)


def lower_central_series(L: LieSuperalgebra) -> List[GradedSubspace]:
    """[γ1 = L, γ2 = [L, L], ...] ending at the first term that no longer shrinks."""
    full = L.full()
    series = [full]
    for _ in range(L.dim + 1):
        nxt = bracket_span(L, full, series[-1])
        if nxt == series[-1]:
            break
        series.append(nxt)
    return series


def nilpotency_class(L: LieSuperalgebra) -> Optional[int]:
    """Smallest c with γ_{c+1} = 0, or None if L is not nilpotent."""
    series = lower_central_series(L)
    if not series[-1].is_zero():
        return None
    return next(k for k, g in enumerate(series) if g.is_zero())


def super_nilindex(L: LieSuperalgebra) -> Optional[Tuple[int, int]]:
    """Numbers of lower-central terms with nonzero even / odd part."""
    series = lower_central_series(L)
    if not series[-1].is_zero():
        return None
    return (sum(1 for g in series if g.even_basis), sum(1 for g in series if g.odd_basis))


def is_ideal(L: LieSuperalgebra, S: GradedSubspace) -> bool:
    return bracket_span(L, S, L.full()) <= S


def quotient(L: LieSuperalgebra, I: GradedSubspace) -> Tuple[LieSuperalgebra, HomSpec]:
    """L/I on the complement coordinates of I, with basis q0, q1, ...

    The returned projection carries a ``section`` sending q_a back to the
    coordinate vector it came from.
    """
    _check_sub(L, I)
    if not is_ideal(L, I):
        raise NotAnIdeal("subspace is not an ideal")
    keep = sorted(i for b in complement(I).basis for i, c in enumerate(b) if c)
    pos = {k: a for a, k in enumerate(keep)}

    def project(v: Sequence) -> Dict[int, object]:
        r = I.reduce(v)
        return {pos[k]: c for k, c in enumerate(r) if c}

    table: Table = {}
    for a, ka in enumerate(keep):
        for b, kb in enumerate(keep):
            val = L.br(ka, kb)
            if val:
                pv = project(L.vector(val))
                if pv:
                    table[a, b] = pv
    Q = LieSuperalgebra(tuple(f"q{a}" for a in range(len(keep))),
                        tuple(L.parities[k] for k in keep), table, L.field)
    zero = L.field.zero
    cols = [project(L.unit(i)) for i in range(L.dim)]
    matrix = tuple(tuple(cols[i].get(a, zero) for i in range(L.dim)) for a in range(Q.dim))
    section = tuple(tuple(L.field.one if keep[a] == r else zero for a in range(Q.dim))
                    for r in range(L.dim))
    return Q, HomSpec(L, Q, matrix, section)


def verify_hom(h: HomSpec) -> bool:
    """Even map with h([e_i, e_j]) = [h(e_i), h(e_j)] for all basis pairs."""
    S, T = h.source, h.target
    if S.field != T.field or not h.is_even():
        return False
    imgs = [{r: c for r, c in enumerate(h.column(j)) if c} for j in range(S.dim)]
    for i in range(S.dim):
        for j in range(S.dim):
            lhs = h.apply(S.vector(S.br(i, j)))
            rhs = T.vector(_bracket_sparse(T, imgs[i], imgs[j]))
            if lhs != rhs:
                return False
    return True


def verify_iso(h: HomSpec) -> bool:
    return h.source.dim == h.target.dim and verify_hom(h) and h.rank() == h.target.dim


def direct_sum(L1: LieSuperalgebra, L2: LieSuperalgebra) -> LieSuperalgebra:
    if L1.field != L2.field:
        raise StructureError("direct sum of algebras over different fields")
    n = L1.dim
    table: Table = dict(L1.table)
    for (i, j), val in L2.table.items():
        table[i + n, j + n] = {k + n: c for k, c in val.items()}
    return LieSuperalgebra(L1.names + L2.names, L1.parities + L2.parities, table, L1.field)
