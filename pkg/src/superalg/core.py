"""Graded algebra data model and invariant computations.

A `SuperAlgebra` is a Z2-graded vector space with an ordered homogeneous basis
(even labels first, then odd) and a sparse structure-constant table
``[b_i, b_j] = sum_k c_ij^k b_k`` whose coefficients are polynomials in the
algebra's free parameters.  Grading is validated at construction: a product of
parities (p, q) may only produce components of parity p+q mod 2.

Identity checking (`check_leibniz`, `check_lie`) runs symbolically over the
parameters; every rank-based computation (series, annihilators, Jordan data)
requires an instantiated algebra, i.e. one whose parameter list is empty.

Products are right-normed throughout: the lower central series is
``L^1 = L, L^{k+1} = [L^k, L]`` and the right multiplication operator is
``R_x(y) = (-1)^{pq} [y, x]`` for x of parity p and y of parity q.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import (DegenerateSamplingError, InputError,
                     InternalInconsistencyError, NotNilpotentError)
from .exactmath import (Polynomial, RatMatrix, format_rational, invert,
                        nilpotent_jordan_type, parse_coefficient,
                        row_space_basis, sparse_kernel)

EVEN = 0
ODD = 1

Coefficient = Polynomial
StructureMap = dict[tuple[int, int], tuple[tuple[int, Polynomial], ...]]


class SuperAlgebra:
    """Immutable graded algebra given by basis labels and structure constants."""

    def __init__(self, name: str, even_basis: Sequence[str], odd_basis: Sequence[str],
                 parameters: Sequence[str],
                 structure: Mapping[tuple[int, int], Iterable[tuple[int, Polynomial]]]):
        self.name = name
        self.even_basis = tuple(even_basis)
        self.odd_basis = tuple(odd_basis)
        self.parameters = tuple(parameters)
        if not self.even_basis:
            raise InputError("the even part must contain at least one basis vector")
        labels = self.even_basis + self.odd_basis
        if len(set(labels)) != len(labels):
            raise InputError("duplicate basis labels")
        self.labels = labels
        self.n_even = len(self.even_basis)
        self.n_odd = len(self.odd_basis)
        self.dim = self.n_even + self.n_odd
        self._index = {lab: i for i, lab in enumerate(labels)}

        table: StructureMap = {}
        for (i, j), terms in structure.items():
            if not (0 <= i < self.dim and 0 <= j < self.dim):
                raise InputError(f"basis index out of range in product ({i},{j})")
            clean = []
            expected = (self.parity(i) + self.parity(j)) % 2
            for k, coeff in terms:
                if coeff.variables != self.parameters:
                    coeff = coeff.rebase(self.parameters)
                if coeff.is_zero():
                    continue
                if self.parity(k) != expected:
                    raise InputError(
                        f"grading violation in product [{labels[i]}, {labels[j]}]: "
                        f"component {labels[k]} has parity {self.parity(k)}, "
                        f"expected {expected}")
                clean.append((k, coeff))
            if clean:
                clean.sort(key=lambda t: t[0])
                table[(i, j)] = tuple(clean)
        self.structure = table
        self._constant: dict[tuple[int, int], tuple[tuple[int, Fraction], ...]] | None = None

    # -- basic queries -------------------------------------------------------

    def parity(self, i: int) -> int:
        return EVEN if i < self.n_even else ODD

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise InputError(f"unknown basis label {label!r}") from None

    def label(self, i: int) -> str:
        return self.labels[i]

    def is_instantiated(self) -> bool:
        return not self.parameters

    def product_terms(self, i: int, j: int) -> tuple[tuple[int, Polynomial], ...]:
        return self.structure.get((i, j), ())

    def constant_structure(self) -> dict[tuple[int, int], tuple[tuple[int, Fraction], ...]]:
        """Structure constants as plain rationals; requires instantiation."""
        if self.parameters:
            raise InputError(
                f"algebra {self.name!r} has free parameters "
                f"({', '.join(self.parameters)}); instantiate them first")
        if self._constant is None:
            self._constant = {
                key: tuple((k, c.as_constant()) for k, c in terms)
                for key, terms in self.structure.items()
            }
        return self._constant

    def instantiate(self, values: Mapping[str, Fraction | int | str]) -> SuperAlgebra:
        """Substitute parameter values; unlisted parameters stay free."""
        assignment: dict[str, Fraction] = {}
        for name, raw in values.items():
            if name not in self.parameters:
                raise InputError(f"unknown parameter {name!r} for {self.name!r}")
            assignment[name] = Fraction(raw)
        structure = {
            key: tuple((k, c.substitute(assignment)) for k, c in terms)
            for key, terms in self.structure.items()
        }
        remaining = tuple(p for p in self.parameters if p not in assignment)
        return SuperAlgebra(self.name, self.even_basis, self.odd_basis, remaining, structure)

    def even_part(self) -> SuperAlgebra:
        """The even component as a stand-alone (purely even) algebra."""
        structure = {
            (i, j): terms for (i, j), terms in self.structure.items()
            if i < self.n_even and j < self.n_even
        }
        return SuperAlgebra(f"{self.name}|even", self.even_basis, (),
                            self.parameters, structure)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SuperAlgebra):
            return NotImplemented
        return (self.even_basis == other.even_basis
                and self.odd_basis == other.odd_basis
                and self.parameters == other.parameters
                and self.structure == other.structure)

    def __repr__(self) -> str:
        return (f"SuperAlgebra({self.name!r}, dims=({self.n_even}|{self.n_odd}), "
                f"parameters={list(self.parameters)})")


def make_superalgebra(name: str, even_basis: Sequence[str], odd_basis: Sequence[str],
                      parameters: Sequence[str],
                      products: Mapping[tuple[str, str], Iterable[tuple[str, object]]],
                      ) -> SuperAlgebra:
    """Build a SuperAlgebra from label-keyed products with mixed coefficient types."""
    parameters = tuple(parameters)
    labels = tuple(even_basis) + tuple(odd_basis)
    index = {lab: i for i, lab in enumerate(labels)}
    structure: dict[tuple[int, int], list[tuple[int, Polynomial]]] = {}
    for (left, right), terms in products.items():
        if left not in index or right not in index:
            raise InputError(f"unknown basis label in product [{left}, {right}]")
        cell = structure.setdefault((index[left], index[right]), [])
        for target, coeff in terms:
            if target not in index:
                raise InputError(
                    f"unknown component {target!r} in product [{left}, {right}]")
            if isinstance(coeff, Polynomial):
                poly = coeff
            elif isinstance(coeff, str):
                poly = parse_coefficient(coeff, parameters)
            else:
                poly = Polynomial.const(Fraction(coeff), parameters)
            cell.append((index[target], poly))
    merged: dict[tuple[int, int], list[tuple[int, Polynomial]]] = {}
    for key, cell in structure.items():
        acc: dict[int, Polynomial] = {}
        for k, poly in cell:
            acc[k] = acc[k] + poly if k in acc else poly
        merged[key] = [(k, p) for k, p in sorted(acc.items()) if not p.is_zero()]
    return SuperAlgebra(name, even_basis, odd_basis, parameters, merged)


# ---------------------------------------------------------------------------
# Vectors and products
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GradedVector:
    """Coordinates of an element in basis order (even block then odd block)."""

    coords: tuple[Fraction, ...]

    @classmethod
    def from_coords(cls, coords: Sequence[Fraction | int]) -> GradedVector:
        return cls(tuple(Fraction(c) for c in coords))

    @classmethod
    def basis(cls, algebra: SuperAlgebra, label: str) -> GradedVector:
        coords = [Fraction(0)] * algebra.dim
        coords[algebra.index(label)] = Fraction(1)
        return cls(tuple(coords))

    def is_zero(self) -> bool:
        return not any(self.coords)

    def parity_of(self, algebra: SuperAlgebra) -> int | None:
        """Parity if homogeneous (zero counts as even), else None."""
        even = any(self.coords[:algebra.n_even])
        odd = any(self.coords[algebra.n_even:])
        if even and odd:
            return None
        return ODD if odd else EVEN

    def add(self, other: GradedVector) -> GradedVector:
        return GradedVector(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def scale(self, c: Fraction | int) -> GradedVector:
        c = Fraction(c)
        return GradedVector(tuple(c * x for x in self.coords))


def product(algebra: SuperAlgebra, x: GradedVector, y: GradedVector) -> GradedVector:
    """Bilinear extension of the structure constants (instantiated algebras only)."""
    table = algebra.constant_structure()
    out = [Fraction(0)] * algebra.dim
    for i, xi in enumerate(x.coords):
        if not xi:
            continue
        for j, yj in enumerate(y.coords):
            if not yj:
                continue
            terms = table.get((i, j))
            if terms:
                f = xi * yj
                for k, c in terms:
                    out[k] += f * c
    return GradedVector(tuple(out))


def right_mul_matrix(algebra: SuperAlgebra, x: GradedVector) -> RatMatrix:
    """Matrix of R_x(y) = (-1)^{pq} [y, x] on the whole space, x homogeneous."""
    px = x.parity_of(algebra)
    if px is None:
        raise InputError("right multiplication needs a homogeneous element")
    table = algebra.constant_structure()
    cols = []
    for j in range(algebra.dim):
        sign = -1 if (px and algebra.parity(j)) else 1
        col = [Fraction(0)] * algebra.dim
        for i, xi in enumerate(x.coords):
            if not xi:
                continue
            for k, c in table.get((j, i), ()):
                col[k] += sign * xi * c
        cols.append(col)
    return RatMatrix(algebra.dim, algebra.dim,
                     tuple(tuple(cols[j][l] for j in range(algebra.dim))
                           for l in range(algebra.dim)))


def right_mul_blocks(algebra: SuperAlgebra, even_coords: Sequence[Fraction],
                     ) -> tuple[RatMatrix, RatMatrix]:
    """Even and odd blocks of R_x for an even element given by even coordinates."""
    table = algebra.constant_structure()
    n0, n1 = algebra.n_even, algebra.n_odd
    even_block = [[Fraction(0)] * n0 for _ in range(n0)]
    odd_block = [[Fraction(0)] * n1 for _ in range(n1)]
    for i, xi in enumerate(even_coords):
        if not xi:
            continue
        for j in range(n0):
            for k, c in table.get((j, i), ()):
                even_block[k][j] += xi * c
        for j in range(n1):
            for k, c in table.get((n0 + j, i), ()):
                odd_block[k - n0][j] += xi * c
    return (RatMatrix(n0, n0, tuple(tuple(r) for r in even_block)),
            RatMatrix(n1, n1, tuple(tuple(r) for r in odd_block)))


# ---------------------------------------------------------------------------
# Identity checking
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Residual:
    """A nonzero deviation from an identity, localized to basis elements.

    `identity` is one of "leibniz", "antisymmetry", "jacobi"; `where` holds
    the offending basis labels (a pair for antisymmetry, a triple otherwise),
    `component` the basis label whose coefficient fails, and `value` the
    nonzero polynomial deviation.
    """

    identity: str
    where: tuple[str, ...]
    component: str
    value: Polynomial

    def __str__(self) -> str:
        spot = ", ".join(self.where)
        return f"{self.identity} residual at ({spot}) on {self.component}: {self.value}"


def _acc_terms(acc: dict[int, dict], k: int, t1: dict, t2: dict, sign: int) -> None:
    """acc[k] += sign * t1 * t2 where t1, t2 are raw polynomial term dicts."""
    bucket = acc.setdefault(k, {})
    for e1, c1 in t1.items():
        for e2, c2 in t2.items():
            exp = tuple(a + b for a, b in zip(e1, e2))
            new = bucket.get(exp, 0) + sign * c1 * c2
            if new:
                bucket[exp] = new
            else:
                bucket.pop(exp, None)


def check_leibniz(algebra: SuperAlgebra) -> list[Residual]:
    """All residuals of [x,[y,z]] - [[x,y],z] + (-1)^{pq}[[x,z],y] on basis triples.

    Works symbolically: the list is empty iff the identity holds identically
    in the parameters.  Residuals appear in lexicographic basis order of the
    triple (x, y, z).
    """
    S = algebra.structure
    dim = algebra.dim
    parity = algebra.parity
    residuals: list[Residual] = []
    for i in range(dim):
        for j in range(dim):
            s_ij = S.get((i, j))
            for k in range(dim):
                s_jk = S.get((j, k))
                s_ik = S.get((i, k))
                if not (s_jk or s_ij or s_ik):
                    continue
                sign = -1 if (parity(j) and parity(k)) else 1
                acc: dict[int, dict] = {}
                if s_jk:
                    for t, c1 in s_jk:
                        s_it = S.get((i, t))
                        if s_it:
                            for l, c2 in s_it:
                                _acc_terms(acc, l, c1.terms, c2.terms, 1)
                if s_ij:
                    for t, c1 in s_ij:
                        s_tk = S.get((t, k))
                        if s_tk:
                            for l, c2 in s_tk:
                                _acc_terms(acc, l, c1.terms, c2.terms, -1)
                if s_ik:
                    for t, c1 in s_ik:
                        s_tj = S.get((t, j))
                        if s_tj:
                            for l, c2 in s_tj:
                                _acc_terms(acc, l, c1.terms, c2.terms, sign)
                for l in sorted(acc):
                    terms = acc[l]
                    if terms:
                        residuals.append(Residual(
                            "leibniz",
                            (algebra.label(i), algebra.label(j), algebra.label(k)),
                            algebra.label(l),
                            Polynomial(algebra.parameters, terms)))
    return residuals


def check_lie(algebra: SuperAlgebra) -> list[Residual]:
    """Residuals of graded antisymmetry and of the graded Jacobi identity."""
    S = algebra.structure
    dim = algebra.dim
    parity = algebra.parity
    residuals: list[Residual] = []
    for i in range(dim):
        for j in range(i, dim):
            sign = -1 if (parity(i) and parity(j)) else 1
            acc: dict[int, dict] = {}
            for t, c in S.get((i, j), ()):
                _acc_terms(acc, t, c.terms, {(0,) * len(algebra.parameters): Fraction(1)}, 1)
            for t, c in S.get((j, i), ()):
                _acc_terms(acc, t, c.terms, {(0,) * len(algebra.parameters): Fraction(1)}, sign)
            for l in sorted(acc):
                if acc[l]:
                    residuals.append(Residual(
                        "antisymmetry", (algebra.label(i), algebra.label(j)),
                        algebra.label(l), Polynomial(algebra.parameters, acc[l])))
    for i in range(dim):
        for j in range(dim):
            for k in range(dim):
                pi, pj, pk = parity(i), parity(j), parity(k)
                s1 = -1 if (pi and pk) else 1
                s2 = -1 if (pi and pj) else 1
                s3 = -1 if (pj and pk) else 1
                acc = {}
                got = False
                for (a, b, c_sign) in ((i, (j, k), s1), (j, (k, i), s2), (k, (i, j), s3)):
                    inner = S.get(b)
                    if not inner:
                        continue
                    for t, c1 in inner:
                        outer = S.get((a, t))
                        if outer:
                            got = True
                            for l, c2 in outer:
                                _acc_terms(acc, l, c1.terms, c2.terms, c_sign)
                if not got:
                    continue
                for l in sorted(acc):
                    if acc[l]:
                        residuals.append(Residual(
                            "jacobi",
                            (algebra.label(i), algebra.label(j), algebra.label(k)),
                            algebra.label(l), Polynomial(algebra.parameters, acc[l])))
    return residuals


# ---------------------------------------------------------------------------
# Graded subspaces, series, annihilator
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GradedSubspace:
    """A graded subspace: rref-canonical row bases of the even and odd parts.

    Rows of `even` have length n_even (coordinates within the even block);
    rows of `odd` have length n_odd.  The rref canonical form makes equality
    of subspaces literal equality of the dataclass.
    """

    even: RatMatrix
    odd: RatMatrix

    @classmethod
    def from_parity_vectors(cls, algebra: SuperAlgebra,
                            even_vectors: Iterable[Sequence[Fraction]],
                            odd_vectors: Iterable[Sequence[Fraction]]) -> GradedSubspace:
        ev = list(even_vectors)
        od = list(odd_vectors)
        even = row_space_basis(RatMatrix.from_rows(ev)) if ev \
            else RatMatrix.zeros(0, algebra.n_even)
        odd = row_space_basis(RatMatrix.from_rows(od)) if od \
            else RatMatrix.zeros(0, algebra.n_odd)
        return cls(even, odd)

    @classmethod
    def full(cls, algebra: SuperAlgebra) -> GradedSubspace:
        return cls(RatMatrix.identity(algebra.n_even), RatMatrix.identity(algebra.n_odd))

    @classmethod
    def zero_subspace(cls, algebra: SuperAlgebra) -> GradedSubspace:
        return cls(RatMatrix.zeros(0, algebra.n_even), RatMatrix.zeros(0, algebra.n_odd))

    def dims(self) -> tuple[int, int]:
        return (self.even.rows, self.odd.rows)

    def is_zero(self) -> bool:
        return self.even.rows == 0 and self.odd.rows == 0

    def part(self, parity: int) -> RatMatrix:
        return self.even if parity == EVEN else self.odd

    def contains_part_vector(self, parity: int, coords: Sequence[Fraction]) -> bool:
        part = self.part(parity)
        vec = list(coords)
        for r in range(part.rows):
            pivot = next((c for c in range(part.cols) if part.entries[r][c]), None)
            if pivot is None or not vec[pivot]:
                continue
            f = vec[pivot] / part.entries[r][pivot]
            vec = [a - f * b for a, b in zip(vec, part.entries[r])]
        return not any(vec)

    def contains_vector(self, algebra: SuperAlgebra, v: GradedVector) -> bool:
        n0 = algebra.n_even
        return (self.contains_part_vector(EVEN, v.coords[:n0])
                and self.contains_part_vector(ODD, v.coords[n0:]))

    def contains_subspace(self, other: GradedSubspace) -> bool:
        return (all(self.contains_part_vector(EVEN, row) for row in other.even.entries)
                and all(self.contains_part_vector(ODD, row) for row in other.odd.entries))

    def homogeneous_rows(self) -> list[tuple[int, tuple[Fraction, ...]]]:
        rows = [(EVEN, row) for row in self.even.entries]
        rows += [(ODD, row) for row in self.odd.entries]
        return rows


def subspace_product(algebra: SuperAlgebra, u: GradedSubspace,
                     v: GradedSubspace) -> GradedSubspace:
    """Span of [a, b] over basis vectors a of u and b of v, in canonical form."""
    table = algebra.constant_structure()
    n0 = algebra.n_even
    even_out: list[list[Fraction]] = []
    odd_out: list[list[Fraction]] = []
    for pu, row_u in u.homogeneous_rows():
        offset_u = 0 if pu == EVEN else n0
        for pv, row_v in v.homogeneous_rows():
            offset_v = 0 if pv == EVEN else n0
            target = (pu + pv) % 2
            size = n0 if target == EVEN else algebra.n_odd
            shift = 0 if target == EVEN else n0
            out = [Fraction(0)] * size
            nonzero = False
            for i, a in enumerate(row_u):
                if not a:
                    continue
                for j, b in enumerate(row_v):
                    if not b:
                        continue
                    terms = table.get((offset_u + i, offset_v + j))
                    if terms:
                        f = a * b
                        for k, c in terms:
                            out[k - shift] += f * c
                            nonzero = True
            if nonzero and any(out):
                (even_out if target == EVEN else odd_out).append(out)
    return GradedSubspace.from_parity_vectors(algebra, even_out, odd_out)


def lower_central_series(algebra: SuperAlgebra) -> list[GradedSubspace]:
    """L^1 = L, L^{k+1} = [L^k, L], computed until the first repeat or zero."""
    full = GradedSubspace.full(algebra)
    series = [full]
    while True:
        nxt = subspace_product(algebra, series[-1], full)
        if nxt == series[-1]:
            break
        series.append(nxt)
        if nxt.is_zero():
            break
    return series


def derived_series(algebra: SuperAlgebra) -> list[GradedSubspace]:
    """L^(1) = L, L^(k+1) = [L^(k), L^(k)], until the first repeat or zero."""
    series = [GradedSubspace.full(algebra)]
    while True:
        nxt = subspace_product(algebra, series[-1], series[-1])
        if nxt == series[-1]:
            break
        series.append(nxt)
        if nxt.is_zero():
            break
    return series


def is_nilpotent(algebra: SuperAlgebra) -> bool:
    return lower_central_series(algebra)[-1].is_zero()


def nilindex(algebra: SuperAlgebra) -> int | None:
    """Smallest s with L^s = 0, or None when the algebra is not nilpotent."""
    series = lower_central_series(algebra)
    return len(series) if series[-1].is_zero() else None


def is_solvable(algebra: SuperAlgebra) -> bool:
    """Termination of the derived series, cross-checked against the even part."""
    whole = derived_series(algebra)[-1].is_zero()
    even_only = derived_series(algebra.even_part())[-1].is_zero()
    if whole != even_only:
        raise InternalInconsistencyError(
            f"solvability of {algebra.name!r} disagrees with its even part "
            f"(full: {whole}, even: {even_only})")
    return whole


def right_annihilator(algebra: SuperAlgebra) -> GradedSubspace:
    """Exact solution set of [b_i, z] = 0 for every basis vector b_i."""
    table = algebra.constant_structure()
    n0, n1 = algebra.n_even, algebra.n_odd
    parts: list[list[tuple[Fraction, ...]]] = []
    for parity, size, offset in ((EVEN, n0, 0), (ODD, n1, n0)):
        if size == 0:
            parts.append([])
            continue
        rows: dict[tuple[int, int], dict[int, Fraction]] = {}
        for i in range(algebra.dim):
            for j in range(size):
                for k, c in table.get((i, offset + j), ()):
                    rows.setdefault((i, k), {})[j] = c
        kernel = sparse_kernel(rows.values(), size)
        parts.append(kernel)
    return GradedSubspace.from_parity_vectors(algebra, parts[0], parts[1])


# ---------------------------------------------------------------------------
# Characteristic sequence
# ---------------------------------------------------------------------------

def even_square(algebra: SuperAlgebra) -> RatMatrix:
    """rref basis of [L0, L0] inside the even block."""
    table = algebra.constant_structure()
    n0 = algebra.n_even
    vectors = []
    for i in range(n0):
        for j in range(n0):
            terms = table.get((i, j))
            if terms:
                row = [Fraction(0)] * n0
                for k, c in terms:
                    row[k] = c
                vectors.append(row)
    if not vectors:
        return RatMatrix.zeros(0, n0)
    return row_space_basis(RatMatrix.from_rows(vectors))


def char_sequence(algebra: SuperAlgebra, samples: int = 64, seed: int = 0,
                  bound: int = 5) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Characteristic sequence: componentwise maxima of Jordan types of R_x.

    x ranges over a sample of L0 \\ L0^2 that always includes every even basis
    vector outside L0^2 plus `samples` seeded integer-coordinate vectors with
    entries in [-bound, bound].  The even and odd maxima are taken
    independently (each in lexicographic partition order).  The result is a
    sampled maximum, not a certified one.
    """
    if not is_nilpotent(algebra):
        raise NotNilpotentError(
            f"characteristic sequence needs a nilpotent algebra, got {algebra.name!r}")
    n0 = algebra.n_even
    square = even_square(algebra)
    probe = GradedSubspace(square, RatMatrix.zeros(0, algebra.n_odd))

    def admissible(coords: Sequence[Fraction]) -> bool:
        return any(coords) and not probe.contains_part_vector(EVEN, coords)

    candidates: list[tuple[Fraction, ...]] = []
    for i in range(n0):
        coords = tuple(Fraction(1 if j == i else 0) for j in range(n0))
        if admissible(coords):
            candidates.append(coords)
    if not candidates:
        raise DegenerateSamplingError(
            f"every even basis vector of {algebra.name!r} lies in L0^2")
    rng = random.Random(seed)
    attempts = 0
    while len(candidates) < n0 + samples and attempts < 50 * (samples + 1):
        attempts += 1
        coords = tuple(Fraction(rng.randint(-bound, bound)) for _ in range(n0))
        if admissible(coords):
            candidates.append(coords)

    best_even: tuple[int, ...] | None = None
    best_odd: tuple[int, ...] | None = None
    for coords in candidates:
        even_block, odd_block = right_mul_blocks(algebra, coords)
        jt_even = nilpotent_jordan_type(even_block)
        jt_odd = nilpotent_jordan_type(odd_block)
        if jt_even is None or jt_odd is None:
            raise InternalInconsistencyError(
                "right multiplication non-nilpotent on a nilpotent algebra")
        if best_even is None or jt_even > best_even:
            best_even = jt_even
        if best_odd is None or jt_odd > best_odd:
            best_odd = jt_odd
    assert best_even is not None and best_odd is not None
    return best_even, best_odd


# ---------------------------------------------------------------------------
# Fingerprints
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Fingerprint:
    """Isomorphism-invariant summary used to tell algebras apart.

    charseq is None for non-nilpotent algebras; when present it is a sampled
    maximum (see char_sequence).  Equality of fingerprints never proves
    isomorphism; inequality disproves it.
    """

    dims: tuple[int, int]
    lower_central: tuple[tuple[int, int], ...]
    derived: tuple[tuple[int, int], ...]
    nilindex: int | None
    solvable: bool
    annihilator: tuple[int, int]
    derivation_dims: tuple[int, int]
    charseq: tuple[tuple[int, ...], tuple[int, ...]] | None

    def as_dict(self) -> dict:
        return {
            "dims": list(self.dims),
            "lower_central": [list(t) for t in self.lower_central],
            "derived": [list(t) for t in self.derived],
            "nilindex": self.nilindex,
            "solvable": self.solvable,
            "annihilator": list(self.annihilator),
            "derivation_dims": list(self.derivation_dims),
            "charseq": None if self.charseq is None
            else [list(self.charseq[0]), list(self.charseq[1])],
            "charseq_note": None if self.charseq is None else "sampled max",
        }


def fingerprint(algebra: SuperAlgebra, samples: int = 64, seed: int = 0,
                bound: int = 5) -> Fingerprint:
    from .derivations import derivation_space  # local import to avoid a cycle

    lcs = lower_central_series(algebra)
    ds = derived_series(algebra)
    nil = len(lcs) if lcs[-1].is_zero() else None
    ann = right_annihilator(algebra)
    even_dim = derivation_space(algebra, EVEN).dim
    odd_dim = derivation_space(algebra, ODD).dim
    cs = char_sequence(algebra, samples, seed, bound) if nil is not None else None
    return Fingerprint(
        dims=(algebra.n_even, algebra.n_odd),
        lower_central=tuple(t.dims() for t in lcs),
        derived=tuple(t.dims() for t in ds),
        nilindex=nil,
        solvable=is_solvable(algebra),
        annihilator=ann.dims(),
        derivation_dims=(even_dim, odd_dim),
        charseq=cs,
    )


# ---------------------------------------------------------------------------
# Change of basis
# ---------------------------------------------------------------------------

def change_basis(algebra: SuperAlgebra, p_even: RatMatrix, p_odd: RatMatrix) -> SuperAlgebra:
    """Structure constants in the basis f_a = sum_i P[i,a] b_i (parity-preserving)."""
    if p_even.rows != algebra.n_even or p_odd.rows != algebra.n_odd:
        raise InputError("change-of-basis blocks must match the part dimensions")
    q_even = invert(p_even)
    q_odd = invert(p_odd)
    n0 = algebra.n_even

    def col(parity_matrix: RatMatrix, offset: int, a: int) -> list[tuple[int, Fraction]]:
        return [(offset + i, parity_matrix.entries[i][a])
                for i in range(parity_matrix.rows) if parity_matrix.entries[i][a]]

    new_cols = [col(p_even, 0, a) for a in range(algebra.n_even)] + \
               [col(p_odd, n0, a) for a in range(algebra.n_odd)]
    structure: dict[tuple[int, int], list[tuple[int, Polynomial]]] = {}
    for a in range(algebra.dim):
        for b in range(algebra.dim):
            acc: dict[int, Polynomial] = {}
            for i, pi in new_cols[a]:
                for j, pj in new_cols[b]:
                    for k, c in algebra.product_terms(i, j):
                        scaled = c * (pi * pj)
                        acc[k] = acc[k] + scaled if k in acc else scaled
            if not acc:
                continue
            out: dict[int, Polynomial] = {}
            for k, coeff in acc.items():
                if coeff.is_zero():
                    continue
                if k < n0:
                    back, offset = q_even, 0
                    krel = k
                else:
                    back, offset = q_odd, n0
                    krel = k - n0
                for t in range(back.rows):
                    w = back.entries[t][krel]
                    if w:
                        scaled = coeff * w
                        key = offset + t
                        out[key] = out[key] + scaled if key in out else scaled
            cell = [(k, p) for k, p in sorted(out.items()) if not p.is_zero()]
            if cell:
                structure[(a, b)] = cell
    return SuperAlgebra(f"{algebra.name}~", algebra.even_basis, algebra.odd_basis,
                        algebra.parameters, structure)


# ---------------------------------------------------------------------------
# Superalgebra Description File (SDF)
# ---------------------------------------------------------------------------

def sdf_dump(algebra: SuperAlgebra) -> dict:
    """Canonical JSON-ready form; omitted products are zero."""
    products = []
    for (i, j) in sorted(algebra.structure):
        terms = algebra.structure[(i, j)]
        products.append({
            "left": algebra.label(i),
            "right": algebra.label(j),
            "value": [[algebra.label(k), str(c) if not c.is_constant()
                       else format_rational(c.as_constant())] for k, c in terms],
        })
    return {
        "name": algebra.name,
        "even_basis": list(algebra.even_basis),
        "odd_basis": list(algebra.odd_basis),
        "parameters": list(algebra.parameters),
        "products": products,
    }


def sdf_dumps(algebra: SuperAlgebra) -> str:
    return json.dumps(sdf_dump(algebra), indent=2) + "\n"


def sdf_load(data: dict) -> SuperAlgebra:
    """Parse an SDF dict; grading violations are rejected naming the product."""
    try:
        name = data["name"]
        even = list(data["even_basis"])
        odd = list(data["odd_basis"])
        parameters = tuple(data.get("parameters", []))
        raw_products = data["products"]
    except (KeyError, TypeError) as exc:
        raise InputError(f"malformed SDF: missing field {exc}") from None
    products: dict[tuple[str, str], list[tuple[str, object]]] = {}
    for entry in raw_products:
        try:
            left, right, value = entry["left"], entry["right"], entry["value"]
        except (KeyError, TypeError):
            raise InputError(f"malformed SDF product entry: {entry!r}") from None
        if (left, right) in products:
            raise InputError(f"duplicate product [{left}, {right}] in SDF")
        products[(left, right)] = [(lab, coeff) for lab, coeff in value]
    return make_superalgebra(name, even, odd, parameters, products)


def sdf_loads(text: str) -> SuperAlgebra:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"not valid JSON: {exc}") from None
    return sdf_load(data)
