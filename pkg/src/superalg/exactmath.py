"""Exact rational arithmetic, sparse multivariate polynomials, exact linear algebra.

Coefficients are `fractions.Fraction` throughout: every result in this package
is exact, there is no floating-point mode.  A polynomial is a sparse map from
exponent tuples to rational coefficients over a fixed, ordered tuple of
variable names (the canonical order is fixed by whoever constructs the
polynomial; algebras use lexicographic parameter order).

The linear algebra is deliberately small and dependency-free: reduced row
echelon form with strictly increasing pivot columns (a canonical form, so row
spaces compare by equality), kernel bases read off the rref, and Jordan-type
extraction for nilpotent matrices from the rank sequence of powers.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import InputError

Exponent = tuple[int, ...]
Terms = dict[Exponent, Fraction]


def parse_rational(text: str) -> Fraction:
    """Parse "p" or "p/q" into an exact rational."""
    s = text.strip()
    if not re.fullmatch(r"[+-]?\d+(/\d+)?", s):
        raise InputError(f"not a rational literal: {text!r}")
    return Fraction(s)


def format_rational(x: Fraction) -> str:
    """Render a rational as "p" (q = 1) or "p/q"."""
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


# ---------------------------------------------------------------------------
# Polynomials
# ---------------------------------------------------------------------------

class Polynomial:
    """Sparse multivariate polynomial over the rationals.

    `variables` is the fixed, ordered tuple of names; `terms` maps exponent
    tuples (one entry per variable) to nonzero coefficients.  Zero is the
    empty term map.  Instances are immutable; all operators return new
    polynomials in canonical form (no stored zero coefficients).
    """

    __slots__ = ("variables", "terms")

    def __init__(self, variables: Sequence[str], terms: Mapping[Exponent, Fraction] | None = None):
        object.__setattr__(self, "variables", tuple(variables))
        clean: Terms = {}
        if terms:
            nvars = len(self.variables)
            for exp, coeff in terms.items():
                if len(exp) != nvars:
                    raise InputError(
                        f"exponent {exp} has length {len(exp)}, expected {nvars}")
                c = Fraction(coeff)
                if c:
                    clean[tuple(exp)] = c
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):  # pragma: no cover - guard only
        raise AttributeError("Polynomial is immutable")

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, variables: Sequence[str] = ()) -> Polynomial:
        return cls(variables, {})

    @classmethod
    def const(cls, value: Fraction | int, variables: Sequence[str] = ()) -> Polynomial:
        c = Fraction(value)
        if not c:
            return cls(variables, {})
        return cls(variables, {(0,) * len(tuple(variables)): c})

    @classmethod
    def var(cls, name: str, variables: Sequence[str]) -> Polynomial:
        variables = tuple(variables)
        if name not in variables:
            raise InputError(f"unknown variable {name!r}")
        exp = [0] * len(variables)
        exp[variables.index(name)] = 1
        return cls(variables, {tuple(exp): Fraction(1)})

    # -- queries ------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(exp) for exp in self.terms)

    def as_constant(self) -> Fraction:
        """The value of a constant polynomial (raises if any variable occurs)."""
        if not self.terms:
            return Fraction(0)
        if not self.is_constant():
            raise InputError(f"polynomial {self} is not constant")
        return next(iter(self.terms.values()))

    def used_variables(self) -> tuple[str, ...]:
        used = set()
        for exp in self.terms:
            for name, e in zip(self.variables, exp):
                if e:
                    used.add(name)
        return tuple(n for n in self.variables if n in used)

    def total_degree(self) -> int:
        return max((sum(exp) for exp in self.terms), default=0)

    # -- arithmetic ----------------------------------------------------------

    def _coerce(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            if other.variables != self.variables:
                raise InputError("polynomials over different variable tuples")
            return other
        return Polynomial.const(Fraction(other), self.variables)

    def __add__(self, other) -> Polynomial:
        other = self._coerce(other)
        out = dict(self.terms)
        for exp, c in other.terms.items():
            out[exp] = out.get(exp, Fraction(0)) + c
        return Polynomial(self.variables, out)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> Polynomial:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> Polynomial:
        return self._coerce(other) - self

    def __mul__(self, other) -> Polynomial:
        if not isinstance(other, Polynomial):
            c = Fraction(other)
            if not c:
                return Polynomial(self.variables, {})
            return Polynomial(self.variables, {e: k * c for e, k in self.terms.items()})
        other = self._coerce(other)
        out: Terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                out[exp] = out.get(exp, Fraction(0)) + c1 * c2
        return Polynomial(self.variables, out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.variables == other.variables and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.is_constant() and self.as_constant() == other
        return NotImplemented

    def __hash__(self):
        return hash((self.variables, frozenset(self.terms.items())))

    # -- evaluation ----------------------------------------------------------

    def evaluate(self, assignment: Mapping[str, Fraction]) -> Fraction:
        """Exact value at a full assignment; every variable must be covered."""
        missing = [v for v in self.used_variables() if v not in assignment]
        if missing:
            raise InputError(f"assignment missing variables: {', '.join(missing)}")
        total = Fraction(0)
        for exp, coeff in self.terms.items():
            term = coeff
            for name, e in zip(self.variables, exp):
                if e:
                    term *= Fraction(assignment[name]) ** e
            total += term
        return total

    def substitute(self, values: Mapping[str, Fraction]) -> Polynomial:
        """Substitute some variables; the result ranges over the remaining ones."""
        remaining = tuple(v for v in self.variables if v not in values)
        keep_idx = [i for i, v in enumerate(self.variables) if v not in values]
        out: Terms = {}
        for exp, coeff in self.terms.items():
            c = coeff
            for i, v in enumerate(self.variables):
                if v in values and exp[i]:
                    c *= Fraction(values[v]) ** exp[i]
            new_exp = tuple(exp[i] for i in keep_idx)
            if c:
                out[new_exp] = out.get(new_exp, Fraction(0)) + c
        return Polynomial(remaining, out)

    def rebase(self, variables: Sequence[str]) -> Polynomial:
        """Re-express over a superset variable tuple (used when merging tables)."""
        variables = tuple(variables)
        pos = {v: i for i, v in enumerate(variables)}
        for v in self.used_variables():
            if v not in pos:
                raise InputError(f"variable {v!r} absent from target tuple")
        out: Terms = {}
        for exp, coeff in self.terms.items():
            new = [0] * len(variables)
            for name, e in zip(self.variables, exp):
                if e:
                    new[pos[name]] = e
            key = tuple(new)
            out[key] = out.get(key, Fraction(0)) + coeff
        return Polynomial(variables, out)

    # -- rendering -----------------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces: list[str] = []
        for exp in sorted(self.terms, key=lambda e: (-sum(e), tuple(-x for x in e))):
            coeff = self.terms[exp]
            factors = [
                name if e == 1 else f"{name}^{e}"
                for name, e in zip(self.variables, exp) if e
            ]
            if not factors:
                body = format_rational(abs(coeff))
            elif abs(coeff) == 1:
                body = "*".join(factors)
            else:
                body = "*".join([format_rational(abs(coeff))] + factors)
            sign = "-" if coeff < 0 else "+"
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"Polynomial({str(self)!r})"


_TOKEN = re.compile(r"\s*(\d+/\d+|\d+|[A-Za-z_][A-Za-z_0-9]*|\^|\*|\+|-|\(|\))")


def parse_coefficient(text: str, variables: Sequence[str]) -> Polynomial:
    """Parse a coefficient expression such as "2*alpha4 - 1/2" or "-beta5^2".

    Grammar: sums/differences of products of rational literals and declared
    variable names with optional integer powers; parentheses allowed.  Names
    outside `variables` are rejected.
    """
    variables = tuple(variables)
    tokens: list[str] = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip():
                raise InputError(f"bad coefficient syntax at {text[pos:]!r}")
            break
        tokens.append(m.group(1))
        pos = m.end()
    tokens.append("$")
    idx = 0

    def peek() -> str:
        return tokens[idx]

    def take() -> str:
        nonlocal idx
        tok = tokens[idx]
        idx += 1
        return tok

    def parse_expr() -> Polynomial:
        node = parse_term()
        while peek() in "+-":
            op = take()
            rhs = parse_term()
            node = node + rhs if op == "+" else node - rhs
        return node

    def parse_term() -> Polynomial:
        node = parse_factor()
        while peek() == "*":
            take()
            node = node * parse_factor()
        return node

    def parse_factor() -> Polynomial:
        tok = take()
        if tok == "-":
            return -parse_factor()
        if tok == "+":
            return parse_factor()
        if tok == "(":
            node = parse_expr()
            if take() != ")":
                raise InputError(f"unbalanced parentheses in {text!r}")
            return parse_power_suffix(node)
        if re.fullmatch(r"\d+(/\d+)?", tok):
            return parse_power_suffix(Polynomial.const(Fraction(tok), variables))
        if re.fullmatch(r"[A-Za-z_][A-Za-z_0-9]*", tok):
            if tok not in variables:
                raise InputError(f"undeclared parameter {tok!r} in coefficient {text!r}")
            return parse_power_suffix(Polynomial.var(tok, variables))
        raise InputError(f"unexpected token {tok!r} in coefficient {text!r}")

    def parse_power_suffix(base: Polynomial) -> Polynomial:
        if peek() == "^":
            take()
            etok = take()
            if not re.fullmatch(r"\d+", etok):
                raise InputError(f"bad exponent {etok!r} in coefficient {text!r}")
            out = Polynomial.const(1, variables)
            for _ in range(int(etok)):
                out = out * base
            return out
        return base

    result = parse_expr()
    if take() != "$":
        raise InputError(f"trailing tokens in coefficient {text!r}")
    return result


def poly_eval(p: Polynomial, assignment: Mapping[str, Fraction]) -> Fraction:
    """Exact value of `p` at `assignment` (must cover all used variables)."""
    return p.evaluate(assignment)


# ---------------------------------------------------------------------------
# Exact matrices
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RatMatrix:
    """Immutable dense matrix over the rationals."""

    rows: int
    cols: int
    entries: tuple[tuple[Fraction, ...], ...]

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[Fraction | int]]) -> RatMatrix:
        data = tuple(tuple(Fraction(x) for x in row) for row in rows)
        if not data:
            return cls(0, 0, ())
        width = len(data[0])
        if any(len(r) != width for r in data):
            raise InputError("ragged rows in matrix literal")
        return cls(len(data), width, data)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> RatMatrix:
        zero = Fraction(0)
        return cls(rows, cols, tuple(tuple(zero for _ in range(cols)) for _ in range(rows)))

    @classmethod
    def identity(cls, n: int) -> RatMatrix:
        return cls(n, n, tuple(
            tuple(Fraction(1 if i == j else 0) for j in range(n)) for i in range(n)))

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        i, j = key
        return self.entries[i][j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i]

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(r[j] for r in self.entries)

    def transpose(self) -> RatMatrix:
        return RatMatrix(self.cols, self.rows,
                         tuple(zip(*self.entries)) if self.entries else ())

    def __add__(self, other: RatMatrix) -> RatMatrix:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise InputError("matrix shape mismatch in addition")
        return RatMatrix(self.rows, self.cols, tuple(
            tuple(a + b for a, b in zip(r1, r2))
            for r1, r2 in zip(self.entries, other.entries)))

    def __sub__(self, other: RatMatrix) -> RatMatrix:
        return self + other.scale(Fraction(-1))

    def scale(self, c: Fraction | int) -> RatMatrix:
        c = Fraction(c)
        return RatMatrix(self.rows, self.cols,
                         tuple(tuple(c * x for x in row) for row in self.entries))

    def __matmul__(self, other: RatMatrix) -> RatMatrix:
        if self.cols != other.rows:
            raise InputError("matrix shape mismatch in product")
        cols = other.transpose().entries
        return RatMatrix(self.rows, other.cols, tuple(
            tuple(sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in cols)
            for row in self.entries))

    def apply(self, vec: Sequence[Fraction]) -> tuple[Fraction, ...]:
        if len(vec) != self.cols:
            raise InputError("vector length mismatch")
        return tuple(sum((a * b for a, b in zip(row, vec)), Fraction(0))
                     for row in self.entries)

    def is_zero(self) -> bool:
        return all(not x for row in self.entries for x in row)

    def is_upper_triangular(self) -> bool:
        return all(not self.entries[i][j]
                   for i in range(self.rows) for j in range(min(i, self.cols)))

    def is_lower_triangular(self) -> bool:
        return all(not self.entries[i][j]
                   for i in range(self.rows) for j in range(i + 1, self.cols))

    def diagonal(self) -> tuple[Fraction, ...]:
        return tuple(self.entries[i][i] for i in range(min(self.rows, self.cols)))

    def stack(self, other: RatMatrix) -> RatMatrix:
        if other.rows == 0:
            return self
        if self.rows == 0:
            return other
        if self.cols != other.cols:
            raise InputError("matrix width mismatch in stack")
        return RatMatrix(self.rows + other.rows, self.cols, self.entries + other.entries)

    def __str__(self) -> str:
        return "\n".join("[" + "  ".join(format_rational(x) for x in row) + "]"
                         for row in self.entries)


def rref(m: RatMatrix) -> tuple[RatMatrix, tuple[int, ...]]:
    """Reduced row echelon form and its (strictly increasing) pivot columns."""
    work = [list(row) for row in m.entries]
    pivots: list[int] = []
    r = 0
    for c in range(m.cols):
        pivot_row = next((i for i in range(r, m.rows) if work[i][c]), None)
        if pivot_row is None:
            continue
        work[r], work[pivot_row] = work[pivot_row], work[r]
        inv = 1 / work[r][c]
        work[r] = [x * inv for x in work[r]]
        for i in range(m.rows):
            if i != r and work[i][c]:
                f = work[i][c]
                work[i] = [a - f * b for a, b in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
        if r == m.rows:
            break
    out = RatMatrix(m.rows, m.cols, tuple(tuple(row) for row in work))
    return out, tuple(pivots)


def rank(m: RatMatrix) -> int:
    return len(rref(m)[1])


def kernel_from_rref(reduced: RatMatrix, pivots: tuple[int, ...]) -> list[tuple[Fraction, ...]]:
    pivot_set = set(pivots)
    free_cols = [c for c in range(reduced.cols) if c not in pivot_set]
    basis = []
    for free in free_cols:
        vec = [Fraction(0)] * reduced.cols
        vec[free] = Fraction(1)
        for r, pc in enumerate(pivots):
            vec[pc] = -reduced.entries[r][free]
        basis.append(tuple(vec))
    return basis


def rref_rank_kernel(m: RatMatrix) -> tuple[RatMatrix, int, list[tuple[Fraction, ...]]]:
    """Canonical rref, rank, and a kernel basis with rank + dim ker = cols."""
    reduced, pivots = rref(m)
    return reduced, len(pivots), kernel_from_rref(reduced, pivots)


def row_space_basis(m: RatMatrix) -> RatMatrix:
    """Nonzero rows of the rref: the canonical basis of the row space."""
    reduced, pivots = rref(m)
    return RatMatrix(len(pivots), m.cols, reduced.entries[:len(pivots)])


# -- sparse echelon solver ---------------------------------------------------
#
# The derivation and annihilator systems are large but extremely sparse, so
# a dense rref would waste almost all of its work on zero entries.  Rows are
# dicts col -> coeff; reduction keeps one pivot row per pivot column.

SparseRow = dict[int, Fraction]


def sparse_kernel(rows: Iterable[SparseRow], ncols: int) -> list[tuple[Fraction, ...]]:
    """Kernel basis of a sparse linear system, identical to the dense result."""
    pivot_rows: dict[int, SparseRow] = {}
    for row in rows:
        row = dict(row)
        while row:
            c = min(row)
            if c in pivot_rows:
                factor = row[c]
                for cc, v in pivot_rows[c].items():
                    new = row.get(cc, Fraction(0)) - factor * v
                    if new:
                        row[cc] = new
                    else:
                        row.pop(cc, None)
            else:
                inv = 1 / row[c]
                pivot_rows[c] = {cc: v * inv for cc, v in row.items()}
                break
    # Back-substitute to full reduction so the kernel basis is canonical.
    for c in sorted(pivot_rows, reverse=True):
        prow = pivot_rows[c]
        for c2 in sorted(pivot_rows):
            if c2 >= c:
                break
            target = pivot_rows[c2]
            f = target.get(c)
            if f:
                for cc, v in prow.items():
                    new = target.get(cc, Fraction(0)) - f * v
                    if new:
                        target[cc] = new
                    else:
                        target.pop(cc, None)
    pivots = sorted(pivot_rows)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = [Fraction(0)] * ncols
        vec[free] = Fraction(1)
        for pc in pivots:
            coeff = pivot_rows[pc].get(free)
            if coeff:
                vec[pc] = -coeff
        basis.append(tuple(vec))
    return basis


def invert(m: RatMatrix) -> RatMatrix:
    """Exact inverse of a square matrix; raises InputError when singular."""
    if m.rows != m.cols:
        raise InputError("only square matrices can be inverted")
    n = m.rows
    augmented = RatMatrix(n, 2 * n, tuple(
        row + tuple(Fraction(1 if i == j else 0) for j in range(n))
        for i, row in enumerate(m.entries)))
    reduced, pivots = rref(augmented)
    if tuple(pivots) != tuple(range(n)):
        raise InputError("matrix is singular")
    return RatMatrix(n, n, tuple(row[n:] for row in reduced.entries))


# ---------------------------------------------------------------------------
# Nilpotent Jordan type
# ---------------------------------------------------------------------------

def nilpotent_jordan_type(m: RatMatrix) -> tuple[int, ...] | None:
    """Descending Jordan block sizes of a nilpotent matrix, else None.

    Uses the rank sequence of powers: the number of blocks of size >= k is
    rank(m^(k-1)) - rank(m^k).  Returns None when m^dim != 0.
    """
    if m.rows != m.cols:
        raise InputError("Jordan type needs a square matrix")
    dim = m.rows
    if dim == 0:
        return ()
    ranks = [dim]
    power = m
    for _ in range(dim):
        r = rank(power)
        ranks.append(r)
        if r == 0:
            break
        power = power @ m
    if ranks[-1] != 0:
        return None
    blocks_ge = [ranks[k - 1] - ranks[k] for k in range(1, len(ranks))]
    parts: list[int] = []
    for size in range(len(blocks_ge), 0, -1):
        exact = blocks_ge[size - 1] - (blocks_ge[size] if size < len(blocks_ge) else 0)
        parts.extend([size] * exact)
    return tuple(sorted(parts, reverse=True))
