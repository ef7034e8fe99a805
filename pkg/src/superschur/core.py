"""Exact scalars, superdimensions and parity-split linear algebra.

Everything here is exact: rationals are :class:`fractions.Fraction`, prime
field elements are :class:`Mod`.  Subspaces of a graded coordinate space are
stored in canonical reduced row echelon form, one block per parity, so two
equal subspaces always compare equal.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Dict, Hashable, Iterable, List, Optional, Sequence, Tuple

__all__ = [
    "ParityError",
    "HostMismatch",
    "Field",
    "Mod",
    "RATIONAL",
    "SuperDim",
    "superdim_leq",
    "Echelon",
    "nullspace",
    "GradedSubspace",
    "echelonize",
    "subspace_sum",
    "subspace_intersect",
    "subspace_contains",
    "complement",
]


class ParityError(ValueError):
    """A vector mixes even and odd coordinates where a homogeneous one is needed."""


class HostMismatch(ValueError):
    """Two subspaces (or a subspace and a vector) live in different coordinate spaces."""


# ---------------------------------------------------------------------------
# scalars


class Mod:
    """Element of the prime field GF(p)."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _lift(self, other):
        if isinstance(other, Mod):
            if other.p != self.p:
                raise ValueError(f"mixing GF({self.p}) and GF({other.p})")
            return other.v
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            return other.numerator * pow(other.denominator, -1, self.p)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return Mod(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return Mod(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return Mod(o - self.v, self.p)

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return Mod(self.v * o, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        if o % self.p == 0:
            raise ZeroDivisionError(f"division by zero in GF({self.p})")
        return Mod(self.v * pow(o, -1, self.p), self.p)

    def __rtruediv__(self, other):
        return Mod(self._lift(other), self.p) / self

    def __neg__(self):
        return Mod(-self.v, self.p)

    def __pos__(self):
        return self

    def __bool__(self):
        return self.v != 0

    def __eq__(self, other):
        if isinstance(other, Mod):
            return self.p == other.p and self.v == other.v
        if isinstance(other, (int, Fraction)):
            try:
                return self.v == self._lift(other) % self.p
            except ValueError:
                return False
        return NotImplemented

    def __hash__(self):
        return hash((self.v, self.p))

    def __repr__(self):
        return f"Mod({self.v}, {self.p})"

    def __str__(self):
        return str(self.v)


@dataclass(frozen=True)
class Field:
    """Ground field descriptor: the rationals (``prime=None``) or GF(p), p >= 5."""

    prime: Optional[int] = None

    def __post_init__(self):
        p = self.prime
        if p is None:
            return
        if p < 5 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
            raise ValueError(f"prime field needs a prime p >= 5, got {p}")

    @property
    def characteristic(self) -> int:
        return self.prime or 0

    def __call__(self, x):
        """Coerce an int, Fraction or scalar string into this field."""
        if isinstance(x, str):
            return self.parse(x)
        if self.prime is None:
            if isinstance(x, Mod):
                raise TypeError("cannot coerce a prime-field element to a rational")
            return Fraction(x)
        if isinstance(x, Mod):
            if x.p != self.prime:
                raise ValueError(f"GF({x.p}) element in GF({self.prime})")
            return x
        x = Fraction(x)
        if x.denominator % self.prime == 0:
            raise ZeroDivisionError(f"{x} has no image in GF({self.prime})")
        return Mod(x.numerator * pow(x.denominator, -1, self.prime), self.prime)

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def parse(self, s: str):
        """Parse a canonical scalar literal: ``"n"`` or a reduced ``"n/d"`` with d > 1.

        Anything that does not print back identically (``"2/4"``, ``"3/1"``,
        ``"+1"``, ``"0.5"``) is rejected with :class:`ValueError`.
        """
        if not isinstance(s, str):
            raise ValueError(f"scalar must be a string, got {s!r}")
        num, slash, den = s.partition("/")
        try:
            n = int(num)
            d = int(den) if slash else 1
        except ValueError:
            raise ValueError(f"not a fraction literal: {s!r}") from None
        if d <= 0:
            raise ValueError(f"denominator must be positive: {s!r}")
        q = Fraction(n, d)
        if str(q) != s:
            raise ValueError(f"non-canonical scalar {s!r} (expected {str(q)!r})")
        return self(q)

    def format(self, x) -> str:
        return str(self(x))

    def __str__(self):
        return "QQ" if self.prime is None else f"GF({self.prime})"


RATIONAL = Field()


# ---------------------------------------------------------------------------
# superdimensions


@dataclass(frozen=True, order=False)
class SuperDim:
    """Pair (even dimension, odd dimension), partially ordered componentwise."""

    even: int
    odd: int

    def total(self) -> int:
        return self.even + self.odd

    def leq(self, other: "SuperDim") -> bool:
        return self.even <= other.even and self.odd <= other.odd

    def __add__(self, other: "SuperDim") -> "SuperDim":
        return SuperDim(self.even + other.even, self.odd + other.odd)

    def __sub__(self, other: "SuperDim") -> "SuperDim":
        return SuperDim(self.even - other.even, self.odd - other.odd)

    def __iter__(self):
        return iter((self.even, self.odd))

    def __str__(self):
        return f"({self.even}|{self.odd})"


def superdim_leq(a: SuperDim, b: SuperDim) -> bool:
    return a.leq(b)


# ---------------------------------------------------------------------------
# sparse elimination


def _axpy(y: dict, a, x: dict) -> None:
    """y += a*x for sparse dict vectors, dropping zeros."""
    for k, c in x.items():
        v = y.get(k)
        v = a * c if v is None else v + a * c
        if v:
            y[k] = v
        else:
            y.pop(k, None)


class Echelon:
    """Reduced row echelon basis maintained under insertion.

    Rows are sparse dicts over sortable column keys.  Each row is 1 at its
    pivot (its smallest key) and 0 at every other pivot.  With ``track=True``
    every row also remembers how it is combined from the inserted vectors,
    so :meth:`express` can write a vector in terms of the inserted ones.
    """

    def __init__(self, field: Field = RATIONAL, track: bool = False):
        self.field = field
        self.rows: Dict[Hashable, dict] = {}
        self.track = track
        self.combos: Dict[Hashable, dict] = {}

    def __len__(self):
        return len(self.rows)

    def _reduce(self, vec: dict):
        v = {k: c for k, c in vec.items() if c}
        combo: dict = {}
        for p in [k for k in v if k in self.rows]:
            c = v.get(p)
            if not c:
                continue
            _axpy(v, -c, self.rows[p])
            if self.track:
                _axpy(combo, -c, self.combos[p])
        return v, combo

    def residual(self, vec: dict) -> dict:
        return self._reduce(vec)[0]

    def contains(self, vec: dict) -> bool:
        return not self._reduce(vec)[0]

    def insert(self, vec: dict, label: Hashable = None) -> bool:
        """Add ``vec``; return True if it was independent of the current rows."""
        r, combo = self._reduce(vec)
        if not r:
            return False
        p = min(r)
        inv = self.field.one / r[p]
        r = {k: c * inv for k, c in r.items()}
        if self.track:
            combo[label] = combo.get(label, self.field.zero) + self.field.one
            combo = {k: c * inv for k, c in combo.items() if c}
        for q, row in self.rows.items():
            c = row.get(p)
            if c:
                _axpy(row, -c, r)
                if self.track:
                    _axpy(self.combos[q], -c, combo)
        self.rows[p] = r
        if self.track:
            self.combos[p] = combo
        return True

    def express(self, vec: dict) -> dict:
        """Coefficients over inserted labels summing to ``vec``; ValueError if outside."""
        if not self.track:
            raise RuntimeError("Echelon built without tracking")
        out: dict = {}
        v = {k: c for k, c in vec.items() if c}
        for p in [k for k in v if k in self.rows]:
            c = v.get(p)
            if c:
                _axpy(v, -c, self.rows[p])
                _axpy(out, c, self.combos[p])
        if v:
            raise ValueError("vector is not in the span")
        return out

    def pivots(self) -> List[Hashable]:
        return sorted(self.rows)


def nullspace(equations: Iterable[dict], ncols: int, field: Field = RATIONAL,
              columns: Optional[Sequence[int]] = None) -> List[tuple]:
    """Basis of {x : eq . x = 0 for all eq}, as dense tuples of length ``ncols``.

    ``columns`` restricts the unknowns to those coordinates (the rest are
    fixed at zero); equations are sparse dicts keyed by column index.
    """
    cols = list(range(ncols)) if columns is None else sorted(columns)
    colset = set(cols)
    ech = Echelon(field)
    for eq in equations:
        eq = {k: c for k, c in eq.items() if k in colset and c}
        if eq:
            ech.insert(eq)
    zero = field.zero
    out = []
    for f in cols:
        if f in ech.rows:
            continue
        v = [zero] * ncols
        v[f] = field.one
        for p, row in ech.rows.items():
            c = row.get(f)
            if c:
                v[p] = -c
        out.append(tuple(v))
    return out


# ---------------------------------------------------------------------------
# graded subspaces


def _sparse(v: Sequence) -> dict:
    return {i: c for i, c in enumerate(v) if c}


@dataclass(frozen=True)
class GradedSubspace:
    """Subspace of a graded coordinate space, split by parity.

    ``parities[i]`` is the parity of coordinate ``i``.  Both bases are in
    reduced row echelon form with increasing pivots, which makes the
    representation canonical.
    """

    parities: Tuple[int, ...]
    field: Field
    even_basis: Tuple[tuple, ...]
    odd_basis: Tuple[tuple, ...]

    @property
    def host_dim(self) -> SuperDim:
        odd = sum(self.parities)
        return SuperDim(len(self.parities) - odd, odd)

    @property
    def ambient(self) -> int:
        return len(self.parities)

    def sdim(self) -> SuperDim:
        return SuperDim(len(self.even_basis), len(self.odd_basis))

    def dim(self) -> int:
        return len(self.even_basis) + len(self.odd_basis)

    @property
    def basis(self) -> Tuple[tuple, ...]:
        return self.even_basis + self.odd_basis

    def basis_of(self, parity: int) -> Tuple[tuple, ...]:
        return self.odd_basis if parity else self.even_basis

    @cached_property
    def pivots(self) -> Tuple[int, ...]:
        return tuple(sorted(next(i for i, c in enumerate(v) if c) for v in self.basis))

    def is_zero(self) -> bool:
        return not self.even_basis and not self.odd_basis

    def is_full(self) -> bool:
        return self.dim() == self.ambient

    def reduce(self, v: Sequence) -> tuple:
        """Residue of ``v`` after clearing every pivot coordinate of this subspace."""
        self._check_vec(v)
        w = list(v)
        for b in self.basis:
            p = next(i for i, c in enumerate(b) if c)
            c = w[p]
            if c:
                for i, bi in enumerate(b):
                    if bi:
                        w[i] -= c * bi
        return tuple(w)

    def contains(self, v: Sequence) -> bool:
        return not any(self.reduce(v))

    def __contains__(self, v):
        return self.contains(v)

    def _check_vec(self, v):
        if len(v) != self.ambient:
            raise HostMismatch(f"vector of length {len(v)} in a space of dimension {self.ambient}")

    def _check_host(self, other: "GradedSubspace"):
        if self.parities != other.parities or self.field != other.field:
            raise HostMismatch("subspaces live in different coordinate spaces")

    def __le__(self, other: "GradedSubspace") -> bool:
        self._check_host(other)
        return all(other.contains(b) for b in self.basis)

    def __add__(self, other: "GradedSubspace") -> "GradedSubspace":
        return subspace_sum(self, other)

    def __and__(self, other: "GradedSubspace") -> "GradedSubspace":
        return subspace_intersect(self, other)

    @classmethod
    def zero_of(cls, parities: Sequence[int], field: Field = RATIONAL) -> "GradedSubspace":
        return cls(tuple(parities), field, (), ())

    @classmethod
    def full(cls, parities: Sequence[int], field: Field = RATIONAL) -> "GradedSubspace":
        parities = tuple(parities)
        n = len(parities)
        e = [_unit(n, i, field) for i in range(n)]
        return cls(parities, field,
                   tuple(e[i] for i in range(n) if parities[i] == 0),
                   tuple(e[i] for i in range(n) if parities[i] == 1))

    def __repr__(self):
        return f"GradedSubspace(sdim={self.sdim()}, host={self.host_dim})"


def _unit(n: int, i: int, field: Field) -> tuple:
    v = [field.zero] * n
    v[i] = field.one
    return tuple(v)


def vector_parity(v: Sequence, parities: Sequence[int]) -> Optional[int]:
    """Parity of a homogeneous vector, None for zero; ParityError if mixed."""
    seen = {parities[i] for i, c in enumerate(v) if c}
    if len(seen) > 1:
        raise ParityError("vector has both even and odd components")
    return seen.pop() if seen else None


def echelonize(vectors: Iterable[Sequence], parities: Sequence[int],
               field: Field = RATIONAL) -> GradedSubspace:
    """Canonical graded subspace spanned by parity-homogeneous ``vectors``."""
    parities = tuple(parities)
    n = len(parities)
    blocks = (Echelon(field), Echelon(field))
    for v in vectors:
        if len(v) != n:
            raise HostMismatch(f"vector of length {len(v)} in a space of dimension {n}")
        v = tuple(field(c) for c in v)
        par = vector_parity(v, parities)
        if par is not None:
            blocks[par].insert(_sparse(v))
    return _from_blocks(parities, field, blocks)


def _from_blocks(parities, field, blocks) -> GradedSubspace:
    n = len(parities)
    zero = field.zero
    out = []
    for ech in blocks:
        rows = []
        for p in sorted(ech.rows):
            v = [zero] * n
            for k, c in ech.rows[p].items():
                v[k] = c
            rows.append(tuple(v))
        out.append(tuple(rows))
    return GradedSubspace(tuple(parities), field, out[0], out[1])


def subspace_sum(x: GradedSubspace, y: GradedSubspace) -> GradedSubspace:
    x._check_host(y)
    return echelonize(x.basis + y.basis, x.parities, x.field)


def subspace_intersect(x: GradedSubspace, y: GradedSubspace) -> GradedSubspace:
    """Intersection by Zassenhaus' trick, one parity block at a time."""
    x._check_host(y)
    found = []
    for par in (0, 1):
        ech = Echelon(x.field)
        for b in x.basis_of(par):
            row = {(0, i): c for i, c in enumerate(b) if c}
            row.update({(1, i): c for i, c in enumerate(b) if c})
            ech.insert(row)
        for b in y.basis_of(par):
            ech.insert({(0, i): c for i, c in enumerate(b) if c})
        for p, row in ech.rows.items():
            if p[0] == 1:
                v = [x.field.zero] * x.ambient
                for (side, i), c in row.items():
                    v[i] = c
                found.append(v)
    return echelonize(found, x.parities, x.field)


def subspace_contains(x: GradedSubspace, v: Sequence) -> bool:
    return x.contains(v)


def complement(x: GradedSubspace) -> GradedSubspace:
    """Span of the coordinate vectors at the non-pivot positions of ``x``."""
    piv = set(x.pivots)
    n = x.ambient
    free = [i for i in range(n) if i not in piv]
    return GradedSubspace(
        x.parities, x.field,
        tuple(_unit(n, i, x.field) for i in free if x.parities[i] == 0),
        tuple(_unit(n, i, x.field) for i in free if x.parities[i] == 1),
    )
