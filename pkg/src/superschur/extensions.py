"""Central and stem extensions, stem denominators and stem deformations."""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional

from .algebra import (
    HomSpec,
    LieSuperalgebra,
    bracket_span,
    center,
    derived,
    direct_sum,
    is_ideal,
    quotient,
    validate,
    verify_hom,
)
from .cohomology import multiplier_sdim
from .core import Echelon, GradedSubspace, HostMismatch

__all__ = [
    "PreconditionError",
    "ExtensionSpec",
    "ExtensionReport",
    "verify_extension",
    "is_central",
    "is_stem",
    "is_stem_denominator",
    "stem_denominator",
    "stem_deformation",
    "is_maximal_stem",
    "identity_extension",
    "trivial_extension",
]


class PreconditionError(ValueError):
    """An operation was called on data outside its domain (not a false verdict)."""


@dataclass(frozen=True, eq=False)
class ExtensionSpec:
    """0 -> kernel -> total -> base -> 0, with ``projection: total -> base``."""

    total: LieSuperalgebra
    kernel: GradedSubspace
    base: LieSuperalgebra
    projection: HomSpec

    def __post_init__(self):
        if self.kernel.parities != self.total.parities:
            raise HostMismatch("kernel does not live in the total algebra")
        if (self.projection.source.dim, self.projection.target.dim) != (self.total.dim, self.base.dim):
            raise HostMismatch("projection does not map total -> base")


@dataclass
class ExtensionReport:
    problems: List[str]

    @property
    def ok(self) -> bool:
        return not self.problems

    def __bool__(self):
        return self.ok


def verify_extension(e: ExtensionSpec) -> ExtensionReport:
    """Exactness of 0 -> A -> B -> L -> 0, plus the axioms on B and L."""
    problems = []
    for label, alg in (("total", e.total), ("base", e.base)):
        report = validate(alg, limit=1)
        if not report.ok:
            problems.append(f"{label} algebra is not a Lie superalgebra: {report.lines(alg)[0]}")
    if not is_ideal(e.total, e.kernel):
        problems.append("kernel is not an ideal of the total algebra")
    h = HomSpec(e.total, e.base, e.projection.matrix)
    if not verify_hom(h):
        problems.append("projection is not a Lie superalgebra homomorphism")
    else:
        if h.rank() != e.base.dim:
            problems.append("projection is not surjective")
        if h.kernel() != e.kernel:
            problems.append("kernel is not the null space of the projection")
    return ExtensionReport(problems)


def is_central(e: ExtensionSpec) -> bool:
    return e.kernel <= center(e.total)


def is_stem(e: ExtensionSpec) -> bool:
    return is_central(e) and e.kernel <= derived(e.total)


def _parts(e: ExtensionSpec):
    B = e.total
    A = e.kernel
    AB = bracket_span(B, A, B.full())
    D = A & derived(B)
    return A, AB, D


def is_stem_denominator(e: ExtensionSpec, X: GradedSubspace) -> bool:
    """A = A∩[B,B] + X and [B,B]∩X = [A,B], given [A,B] ⊆ X ⊆ A."""
    A, AB, D = _parts(e)
    if not (AB <= X and X <= A):
        raise PreconditionError("candidate denominator must satisfy [A,B] ⊆ X ⊆ A")
    return (D + X) == A and (X & derived(e.total)) == AB


def _relative_complement(D: GradedSubspace, candidates) -> List[tuple]:
    """Vectors from ``candidates`` completing a basis of D, chosen greedily in order."""
    picked = []
    blocks = (Echelon(D.field), Echelon(D.field))
    for par in (0, 1):
        for b in D.basis_of(par):
            blocks[par].insert({i: c for i, c in enumerate(b) if c})
    for v in candidates:
        nz = {i: c for i, c in enumerate(v) if c}
        if not nz:
            continue
        par = D.parities[next(iter(nz))]
        if blocks[par].insert(nz):
            picked.append(v)
    return picked


def stem_denominator(e: ExtensionSpec, within: Optional[GradedSubspace] = None) -> GradedSubspace:
    """X = [A,B] + (complement of A∩[B,B] inside A, or inside A∩within).

    With ``within`` the complement is drawn from ``A ∩ within``; if that
    cannot reach all of A the constraint is unsatisfiable and
    :class:`PreconditionError` is raised.
    """
    A, AB, D = _parts(e)
    pool = A
    if within is not None:
        if not AB <= within:
            raise PreconditionError("constraint subspace must contain [A,B]")
        pool = A & within
    Y = _relative_complement(D, pool.basis)
    X = AB + e.total.span(Y)
    if (D + X) != A:
        raise PreconditionError("no stem denominator exists inside the constraint subspace")
    return X


def stem_deformation(e: ExtensionSpec, X: GradedSubspace) -> ExtensionSpec:
    """(B/X, A/X, L, induced projection)."""
    if not is_stem_denominator(e, X):
        raise PreconditionError("not a stem denominator")
    Q, proj = quotient(e.total, X)
    kernel = Q.span(proj.apply(a) for a in e.kernel.basis)
    induced = HomSpec(Q, e.base, e.projection.compose(
        HomSpec(Q, e.total, proj.section)).matrix)
    return ExtensionSpec(Q, kernel, e.base, induced)


def is_maximal_stem(e: ExtensionSpec) -> bool:
    """Stem and the kernel has the superdimension of the multiplier of the base.

    Returns False (rather than raising) for a non-stem extension.
    """
    return is_stem(e) and e.kernel.sdim() == multiplier_sdim(e.base)


def identity_extension(L: LieSuperalgebra) -> ExtensionSpec:
    one, zero = L.field.one, L.field.zero
    eye = tuple(tuple(one if r == c else zero for c in range(L.dim)) for r in range(L.dim))
    return ExtensionSpec(L, L.zero_subspace(), L, HomSpec(L, L, eye))


def trivial_extension(A: LieSuperalgebra, L: LieSuperalgebra) -> ExtensionSpec:
    """0 -> A -> A ⊕ L -> L -> 0."""
    B = direct_sum(A, L)
    one, zero = L.field.one, L.field.zero
    kernel = B.span(B.unit(i) for i in range(A.dim))
    matrix = tuple(tuple(one if c == A.dim + r else zero for c in range(B.dim))
                   for r in range(L.dim))
    return ExtensionSpec(B, kernel, L, HomSpec(B, L, matrix))
