"""Free nilpotent Lie superalgebras, presentations and Hopf-type multipliers.

The free Lie superalgebra on homogeneous generators is realised inside the
free associative superalgebra (words in the generators) as the span of
iterated supercommutators; truncating at word length ``c`` gives the free
nilpotent algebra of class ``c``.  Each basis vector of degree k >= 2 is a
right-normed bracket [g, b] of a generator g and a basis vector b of degree
k - 1, chosen greedily in a fixed order, so a presentation map is just
``pi([g, b]) = [pi(g), pi(b)]``.

This module is an oracle independent of :mod:`superschur.cohomology`: it
only uses brackets and subspace arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .algebra import (
    HomSpec,
    LieSuperalgebra,
    bracket,
    bracket_span,
    derived,
    nilpotency_class,
    quotient,
)
from .core import (
    RATIONAL,
    Echelon,
    Field,
    GradedSubspace,
    SuperDim,
    _axpy,
    complement,
    vector_parity,
)
from .extensions import ExtensionSpec, stem_deformation, stem_denominator

__all__ = [
    "PresentationError",
    "ClassBoundError",
    "FreeNilpotent",
    "Presentation",
    "HopfResult",
    "free_nilpotent",
    "default_generators",
    "presentation",
    "hopf",
    "hopf_multiplier",
    "cover_from_free",
]


class PresentationError(ValueError):
    """The proposed generator images do not give a presentation."""


class ClassBoundError(ValueError):
    """The truncation class is too small for the requested computation."""


@dataclass(frozen=True, eq=False)
class FreeNilpotent:
    generator_parities: Tuple[int, ...]
    class_bound: int
    algebra: LieSuperalgebra
    degrees: Tuple[int, ...]
    # None for a generator, (g, b) for the basis vector [e_g, e_b]
    words: Tuple[Optional[Tuple[int, int]], ...]

    def degree_sdims(self) -> List[SuperDim]:
        out = []
        for k in range(1, self.class_bound + 1):
            idx = [i for i, d in enumerate(self.degrees) if d == k]
            odd = sum(self.algebra.parities[i] for i in idx)
            out.append(SuperDim(len(idx) - odd, odd))
        return out

    def span_of_degrees(self, lo: int) -> GradedSubspace:
        """Span of the basis vectors of degree >= lo."""
        F = self.algebra
        return F.span(F.unit(i) for i, d in enumerate(self.degrees) if d >= lo)

    @property
    def generators(self) -> GradedSubspace:
        F = self.algebra
        return F.span(F.unit(i) for i, d in enumerate(self.degrees) if d == 1)


def _supercommutator(x: dict, y: dict, px: int, py: int) -> dict:
    out: dict = {}
    s = -1 if px and py else 1
    for u, a in x.items():
        for v, b in y.items():
            _axpy(out, a * b, {u + v: 1})
            _axpy(out, -s * a * b, {v + u: 1})
    return out


def _name(words, names, i):
    g, b = words[i]
    return f"[{names[g]},{names[b]}]"


def free_nilpotent(parities: Sequence[int], c: int, field: Field = RATIONAL) -> FreeNilpotent:
    """F/γ_{c+1}F for the free Lie superalgebra F on generators of the given parities."""
    parities = tuple(int(p) for p in parities)
    if not parities:
        raise ValueError("need at least one generator")
    if c < 1:
        raise ValueError("class bound must be >= 1")
    if field.prime is not None and c >= field.prime:
        # Lie elements of degree >= p need not embed in the tensor algebra faithfully
        raise ValueError(f"class bound {c} must be below the characteristic {field.prime}")
    one = field.one
    tensors: List[dict] = [{(g,): one} for g in range(len(parities))]
    pars = list(parities)
    degs = [1] * len(parities)
    words: List[Optional[Tuple[int, int]]] = [None] * len(parities)
    names = [f"g{g}" for g in range(len(parities))]
    layers: Dict[int, Echelon] = {}
    prev = list(range(len(parities)))
    for k in range(2, c + 1):
        ech = Echelon(field, track=True)
        cur = []
        for g in range(len(parities)):
            for b in prev:
                t = _supercommutator(tensors[g], tensors[b], pars[g], pars[b])
                label = len(tensors)
                if ech.insert(t, label):
                    tensors.append(t)
                    pars.append((pars[g] + pars[b]) % 2)
                    degs.append(k)
                    words.append((g, b))
                    names.append(_name(words, names, label))
                    cur.append(label)
        layers[k] = ech
        prev = cur
    brackets = {}
    n = len(tensors)
    for i in range(n):
        for j in range(i, n):
            k = degs[i] + degs[j]
            if k > c:
                continue
            t = _supercommutator(tensors[i], tensors[j], pars[i], pars[j])
            if t:
                brackets[i, j] = layers[k].express(t)
    alg = LieSuperalgebra.from_brackets(names, pars, brackets, field)
    return FreeNilpotent(parities, c, alg, tuple(degs), tuple(words))


@dataclass(frozen=True, eq=False)
class Presentation:
    free: FreeNilpotent
    target: LieSuperalgebra
    generator_images: Tuple[tuple, ...]
    projection: HomSpec
    kernel: GradedSubspace


def default_generators(L: LieSuperalgebra) -> List[tuple]:
    """Coordinate vectors spanning a complement of [L, L]."""
    return list(complement(derived(L)).basis)


def presentation(L: LieSuperalgebra, images: Sequence[Sequence], c: int) -> Presentation:
    """0 -> R -> F -> L -> 0 with F free nilpotent of class ``c`` on ``len(images)`` generators."""
    cls = nilpotency_class(L)
    if cls is None or cls > c:
        raise PresentationError(f"L is not nilpotent of class <= {c}")
    images = [tuple(L.field(x) for x in v) for v in images]
    parities = []
    for v in images:
        par = vector_parity(v, L.parities)
        if par is None:
            raise PresentationError("generator images must be nonzero homogeneous vectors")
        parities.append(par)
    free = free_nilpotent(parities, c, L.field)
    F = free.algebra
    cols: List[tuple] = []
    for i, w in enumerate(free.words):
        cols.append(images[i] if w is None else bracket(L, cols[w[0]], cols[w[1]]))
    matrix = tuple(tuple(col[r] for col in cols) for r in range(L.dim))
    pi = HomSpec(F, L, matrix)
    if pi.rank() != L.dim:
        raise PresentationError("generator images do not generate L")
    return Presentation(free, L, tuple(images), pi, pi.kernel())


def _ideal_closure(F: LieSuperalgebra, S: GradedSubspace, gens: GradedSubspace) -> GradedSubspace:
    while True:
        nxt = S + bracket_span(F, S, gens)
        if nxt == S:
            return S
        S = nxt


@dataclass(frozen=True)
class HopfResult:
    class_bound: int
    r_cap_ff: SuperDim
    r_f: SuperDim
    r_r: Optional[SuperDim]

    @property
    def rf(self) -> SuperDim:
        """sdim (R ∩ [F,F]) / [R,F]."""
        return self.r_cap_ff - self.r_f

    @property
    def rr(self) -> Optional[SuperDim]:
        """sdim (R ∩ [F,F]) / [R,R] inside the truncated free algebra."""
        return None if self.r_r is None else self.r_cap_ff - self.r_r


def _hopf_at(L: LieSuperalgebra, images, c: int, with_rr: bool) -> HopfResult:
    pres = presentation(L, images, c)
    F = pres.free.algebra
    R = pres.kernel
    RF = _ideal_closure(F, bracket_span(F, R, pres.free.generators), pres.free.generators)
    RcapFF = R & pres.free.span_of_degrees(2)
    RR = bracket_span(F, R, R).sdim() if with_rr else None
    return HopfResult(c, RcapFF.sdim(), RF.sdim(), RR)


def _resolve(L: LieSuperalgebra, c: Optional[int], images):
    cls = nilpotency_class(L)
    if cls is None:
        raise PresentationError("L is not nilpotent")
    if c is None:
        c = cls + 1
    if c < cls + 1:
        raise ClassBoundError(f"class bound {c} too small: L has class {cls}, need >= {cls + 1}")
    if images is None:
        images = default_generators(L)
    return c, images


def hopf(L: LieSuperalgebra, c: Optional[int] = None, images=None,
         with_rr: bool = True, check_stability: bool = True) -> HopfResult:
    """Both Hopf-type quotients for L at class bound ``c`` (default: class(L) + 1).

    With ``check_stability`` the computation is repeated at ``c + 1`` and a
    :class:`ClassBoundError` is raised if the [R,F] answer moves.
    """
    c, images = _resolve(L, c, images)
    res = _hopf_at(L, images, c, with_rr)
    if check_stability:
        again = _hopf_at(L, images, c + 1, False)
        if again.rf != res.rf:
            raise ClassBoundError(f"multiplier changes between class {c} and {c + 1}: "
                                  f"{res.rf} vs {again.rf}")
    return res


def hopf_multiplier(L: LieSuperalgebra, c: Optional[int] = None, denominator: str = "RF",
                    images=None, check_stability: bool = True) -> SuperDim:
    """sdim (R ∩ [F,F]) / [R,F]  (``"RF"``) or  / [R,R]  (``"RR"``)."""
    denominator = denominator.upper()
    if denominator not in ("RF", "RR"):
        raise ValueError("denominator must be 'RF' or 'RR'")
    res = hopf(L, c, images, with_rr=denominator == "RR", check_stability=check_stability)
    return res.rf if denominator == "RF" else res.rr


def cover_from_free(L: LieSuperalgebra, c: Optional[int] = None, images=None) -> ExtensionSpec:
    """Stem deformation of 0 -> R/[R,F] -> F/[R,F] -> L -> 0: a maximal stem extension."""
    c, images = _resolve(L, c, images)
    pres = presentation(L, images, c)
    F = pres.free.algebra
    gens = pres.free.generators
    RF = _ideal_closure(F, bracket_span(F, pres.kernel, gens), gens)
    B, proj = quotient(F, RF)
    A = B.span(proj.apply(r) for r in pres.kernel.basis)
    induced = pres.projection.compose(HomSpec(B, F, proj.section))
    ext = ExtensionSpec(B, A, L, HomSpec(B, L, induced.matrix))
    return stem_deformation(ext, stem_denominator(ext))
