"""Exact linear and multilinear algebra over Q and GF(p).

Scalars are elements of a sympy ground domain (``QQ`` or ``GF(p)``) and are
only ever combined with scalars of the same domain. Vectors are plain tuples
of scalars; matrices and rank-3 tensors are immutable dense containers.

Row reduction goes through ``sympy.polys.matrices.DomainMatrix``. A reduced
row echelon form is unique, so solutions and kernel bases built from it are
deterministic.
"""

from __future__ import annotations

import re
from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Any, Union

from sympy.polys.domains import GF, QQ
from sympy.polys.matrices import DomainMatrix

from constants import MAX_PRIME
from errors import FieldMismatch, InvalidField, NoSolution, ShapeMismatch, Singular
from models import FieldKind

Scalar = Any
Vector = tuple[Scalar, ...]
ScalarLike = Union[int, Fraction, str, Scalar]

_FRACTION = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


def is_prime(n: int) -> bool:
    """Trial-division primality test."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


# =============================================================================
# FIELDS
# =============================================================================


@dataclass(frozen=True)
class FieldSpec:
    """The ground field: Q or GF(p).

    Examples
    --------
    >>> FieldSpec.parse("gf:5").format(FieldSpec.parse("gf:5").scalar(-1))
    '4'
    """

    kind: FieldKind
    p: int | None = None

    def __post_init__(self) -> None:
        if self.kind is FieldKind.RATIONALS:
            if self.p is not None:
                raise InvalidField("the rational field takes no modulus")
            return
        if self.p is None or not is_prime(self.p) or self.p > MAX_PRIME:
            raise InvalidField(f"GF(p) needs a prime p <= 2^31, got {self.p}")

    @classmethod
    def rationals(cls) -> FieldSpec:
        return cls(FieldKind.RATIONALS)

    @classmethod
    def prime(cls, p: int) -> FieldSpec:
        return cls(FieldKind.PRIME, p)

    @classmethod
    def parse(cls, text: str) -> FieldSpec:
        """Parse ``Q``/``QQ``/``rationals`` or ``gf:P``/``GF(P)``."""
        t = text.strip()
        if t.lower() in ("q", "qq", "rationals"):
            return cls.rationals()
        m = re.fullmatch(r"(?i)gf(?::|\()\s*(\d+)\s*\)?", t)
        if m is None:
            raise InvalidField(f"unrecognized field {text!r}")
        return cls.prime(int(m.group(1)))

    @property
    def name(self) -> str:
        return "Q" if self.kind is FieldKind.RATIONALS else f"gf:{self.p}"

    @property
    def is_finite(self) -> bool:
        return self.kind is FieldKind.PRIME

    @cached_property
    def domain(self) -> Any:
        return QQ if self.kind is FieldKind.RATIONALS else GF(self.p)

    @cached_property
    def zero(self) -> Scalar:
        return self.domain.zero

    @cached_property
    def one(self) -> Scalar:
        return self.domain.one

    def scalar(self, value: ScalarLike) -> Scalar:
        """Convert an int, Fraction, ``"a/b"`` string or domain element."""
        if isinstance(value, str):
            m = _FRACTION.match(value)
            if m is None:
                raise ValueError(f"not an exact scalar: {value!r}")
            num = int(m.group(1))
            den = int(m.group(2)) if m.group(2) else 1
            return self._ratio(num, den)
        if isinstance(value, bool):
            raise TypeError("booleans are not scalars")
        if isinstance(value, int):
            return self.domain.convert(value)
        if isinstance(value, Fraction):
            return self._ratio(value.numerator, value.denominator)
        return value

    def _ratio(self, num: int, den: int) -> Scalar:
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if self.kind is FieldKind.RATIONALS:
            return self.domain(num, den)
        if den % self.p == 0:  # type: ignore[operator]
            raise ZeroDivisionError(f"{den} is not invertible in GF({self.p})")
        return self.domain.convert(num) / self.domain.convert(den)

    def to_fraction(self, x: Scalar) -> Fraction:
        """Canonical Python value: reduced Fraction, or residue in [0, p)."""
        r = self.domain.to_sympy(x)
        if self.kind is FieldKind.PRIME:
            return Fraction(int(r) % self.p)  # type: ignore[operator]
        return Fraction(int(r.p), int(r.q))

    def format(self, x: Scalar) -> str:
        f = self.to_fraction(x)
        return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"

    def key(self, x: Scalar) -> tuple[int, int]:
        """Total order key used for lexicographic comparisons."""
        f = self.to_fraction(x)
        return (f.numerator, f.denominator)

    def elements(self) -> list[Scalar]:
        """All elements of GF(p) in residue order."""
        if not self.is_finite:
            raise InvalidField("only finite fields can be enumerated")
        return [self.domain.convert(i) for i in range(self.p)]  # type: ignore[arg-type]

    def check_same(self, other: FieldSpec) -> None:
        if self != other:
            raise FieldMismatch(f"{self.name} vs {other.name}")


# =============================================================================
# VECTORS
# =============================================================================


def zero_vector(field: FieldSpec, n: int) -> Vector:
    return (field.zero,) * n


def basis_vector(field: FieldSpec, n: int, i: int) -> Vector:
    v = [field.zero] * n
    v[i] = field.one
    return tuple(v)


def vec_add(u: Vector, v: Vector) -> Vector:
    if len(u) != len(v):
        raise ShapeMismatch(f"vector lengths {len(u)} and {len(v)}")
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u: Vector, v: Vector) -> Vector:
    if len(u) != len(v):
        raise ShapeMismatch(f"vector lengths {len(u)} and {len(v)}")
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(c: Scalar, u: Vector) -> Vector:
    return tuple(c * a for a in u)


def vec_sum(field: FieldSpec, n: int, vectors: Iterable[Vector]) -> Vector:
    acc = [field.zero] * n
    for v in vectors:
        for i, a in enumerate(v):
            if a:
                acc[i] += a
    return tuple(acc)


def support(u: Vector) -> list[int]:
    return [i for i, a in enumerate(u) if a]


def is_zero_vector(u: Vector) -> bool:
    return not any(u)


def outer(u: Vector, v: Vector) -> Vector:
    """Kronecker product; index ``i * len(v) + j``."""
    return tuple(a * b for a in u for b in v)


def unflatten(index: int, dims: Sequence[int]) -> tuple[int, ...]:
    out = []
    for d in reversed(dims):
        out.append(index % d)
        index //= d
    return tuple(reversed(out))


def flatten(indices: Sequence[int], dims: Sequence[int]) -> int:
    flat = 0
    for i, d in zip(indices, dims):
        flat = flat * d + i
    return flat


# =============================================================================
# MATRICES
# =============================================================================


@dataclass(frozen=True)
class Matrix:
    """Dense matrix, row-major."""

    field: FieldSpec
    rows: int
    cols: int
    entries: tuple[Scalar, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ShapeMismatch("negative matrix dimension")
        if len(self.entries) != self.rows * self.cols:
            raise ShapeMismatch(
                f"{len(self.entries)} entries for a {self.rows}x{self.cols} matrix"
            )

    @classmethod
    def from_rows(cls, field: FieldSpec, rows: Sequence[Sequence[ScalarLike]]) -> Matrix:
        n_rows = len(rows)
        n_cols = len(rows[0]) if rows else 0
        if any(len(r) != n_cols for r in rows):
            raise ShapeMismatch("ragged rows")
        return cls(field, n_rows, n_cols, tuple(field.scalar(x) for r in rows for x in r))

    @classmethod
    def from_columns(cls, field: FieldSpec, n_rows: int, columns: Sequence[Vector]) -> Matrix:
        if any(len(c) != n_rows for c in columns):
            raise ShapeMismatch("column length mismatch")
        return cls(
            field,
            n_rows,
            len(columns),
            tuple(columns[j][i] for i in range(n_rows) for j in range(len(columns))),
        )

    @classmethod
    def from_function(
        cls, field: FieldSpec, rows: int, cols: int, fn: Callable[[int, int], Scalar]
    ) -> Matrix:
        return cls(field, rows, cols, tuple(fn(i, j) for i in range(rows) for j in range(cols)))

    @classmethod
    def zeros(cls, field: FieldSpec, rows: int, cols: int) -> Matrix:
        return cls(field, rows, cols, (field.zero,) * (rows * cols))

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> Matrix:
        return cls.diagonal(field, [field.one] * n)

    @classmethod
    def diagonal(cls, field: FieldSpec, diag: Sequence[ScalarLike]) -> Matrix:
        n = len(diag)
        d = [field.scalar(x) for x in diag]
        return cls.from_function(field, n, n, lambda i, j: d[i] if i == j else field.zero)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def entry(self, i: int, j: int) -> Scalar:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Vector:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def column(self, j: int) -> Vector:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def rows_list(self) -> list[list[Scalar]]:
        return [list(self.row(i)) for i in range(self.rows)]

    @cached_property
    def _columns(self) -> tuple[Vector, ...]:
        return tuple(self.column(j) for j in range(self.cols))

    def apply(self, v: Vector) -> Vector:
        """Matrix-vector product."""
        if len(v) != self.cols:
            raise ShapeMismatch(f"vector of length {len(v)} for {self.rows}x{self.cols}")
        acc = [self.field.zero] * self.rows
        for j, c in enumerate(v):
            if c:
                for i, a in enumerate(self._columns[j]):
                    if a:
                        acc[i] += c * a
        return tuple(acc)

    def __matmul__(self, other: Matrix) -> Matrix:
        self.field.check_same(other.field)
        if self.cols != other.rows:
            raise ShapeMismatch(f"{self.shape} @ {other.shape}")
        cols = [self.apply(other.column(j)) for j in range(other.cols)]
        return Matrix.from_columns(self.field, self.rows, cols)

    def __add__(self, other: Matrix) -> Matrix:
        self.field.check_same(other.field)
        if self.shape != other.shape:
            raise ShapeMismatch(f"{self.shape} + {other.shape}")
        return Matrix(self.field, self.rows, self.cols, vec_add(self.entries, other.entries))

    def __sub__(self, other: Matrix) -> Matrix:
        self.field.check_same(other.field)
        if self.shape != other.shape:
            raise ShapeMismatch(f"{self.shape} - {other.shape}")
        return Matrix(self.field, self.rows, self.cols, vec_sub(self.entries, other.entries))

    def scaled(self, c: Scalar) -> Matrix:
        return Matrix(self.field, self.rows, self.cols, vec_scale(c, self.entries))

    def transpose(self) -> Matrix:
        return Matrix.from_function(self.field, self.cols, self.rows, lambda i, j: self.entry(j, i))

    def kron(self, other: Matrix) -> Matrix:
        self.field.check_same(other.field)
        return Matrix.from_function(
            self.field,
            self.rows * other.rows,
            self.cols * other.cols,
            lambda i, j: self.entry(i // other.rows, j // other.cols)
            * other.entry(i % other.rows, j % other.cols),
        )

    def is_zero(self) -> bool:
        return is_zero_vector(self.entries)

    def is_identity(self) -> bool:
        return self.is_square and self == Matrix.identity(self.field, self.rows)

    def rank(self) -> int:
        return len(_rref(self)[1])

    def inverse(self) -> Matrix:
        return matrix_inverse(self)

    def power(self, k: int) -> Matrix:
        if not self.is_square:
            raise ShapeMismatch("power of a non-square matrix")
        base = self if k >= 0 else matrix_inverse(self)
        result = Matrix.identity(self.field, self.rows)
        for _ in range(abs(k)):
            result = result @ base
        return result

    def to_domain_matrix(self) -> DomainMatrix:
        return DomainMatrix(self.rows_list(), self.shape, self.field.domain)

    @classmethod
    def from_domain_matrix(cls, field: FieldSpec, dm: DomainMatrix) -> Matrix:
        rows, cols = dm.shape
        return cls(field, rows, cols, tuple(x for r in dm.to_list() for x in r))


def hstack(*matrices: Matrix) -> Matrix:
    first = matrices[0]
    for m in matrices[1:]:
        first.field.check_same(m.field)
        if m.rows != first.rows:
            raise ShapeMismatch("hstack row mismatch")
    columns = [c for m in matrices for c in (m.column(j) for j in range(m.cols))]
    return Matrix.from_columns(first.field, first.rows, columns)


def _rref(a: Matrix) -> tuple[Matrix, tuple[int, ...]]:
    if a.rows == 0 or a.cols == 0:
        return a, ()
    reduced, pivots = a.to_domain_matrix().rref()
    return Matrix.from_domain_matrix(a.field, reduced), tuple(pivots)


# =============================================================================
# LINEAR SYSTEMS
# =============================================================================


@dataclass(frozen=True)
class LinearSolution:
    """Particular solution (free variables set to zero) plus kernel basis."""

    solution: Matrix
    kernel_basis: tuple[Matrix, ...]

    def kernel_vectors(self) -> list[Vector]:
        return [k.column(0) for k in self.kernel_basis]


def solve_linear(a: Matrix, b: Matrix) -> LinearSolution:
    """Solve ``A X = B`` exactly.

    Raises:
        FieldMismatch: A and B are over different fields.
        ShapeMismatch: row counts disagree.
        NoSolution: the system is inconsistent.
    """
    a.field.check_same(b.field)
    if a.rows != b.rows:
        raise ShapeMismatch(f"A has {a.rows} rows, b has {b.rows}")
    field, n, k = a.field, a.cols, b.cols
    reduced, pivots = _rref(hstack(a, b))
    if any(p >= n for p in pivots):
        raise NoSolution("inconsistent linear system")
    solution = [[field.zero] * k for _ in range(n)]
    for r, pc in enumerate(pivots):
        for c in range(k):
            solution[pc][c] = reduced.entry(r, n + c)
    pivot_set = set(pivots)
    kernel = []
    for free in range(n):
        if free in pivot_set:
            continue
        v = [field.zero] * n
        v[free] = field.one
        for r, pc in enumerate(pivots):
            v[pc] = -reduced.entry(r, free)
        kernel.append(Matrix.from_columns(field, n, [tuple(v)]))
    return LinearSolution(Matrix(field, n, k, tuple(x for row in solution for x in row)), tuple(kernel))


def solve_vector(a: Matrix, b: Vector) -> tuple[Vector, list[Vector]]:
    """Vector form of :func:`solve_linear`."""
    sol = solve_linear(a, Matrix.from_columns(a.field, a.rows, [b]))
    return sol.solution.column(0), sol.kernel_vectors()


def kernel(a: Matrix) -> list[Vector]:
    """Kernel basis of ``a`` in reduced echelon order."""
    return solve_vector(a, zero_vector(a.field, a.rows))[1]


def matrix_inverse(a: Matrix) -> Matrix:
    """Exact two-sided inverse.

    Raises:
        ShapeMismatch: ``a`` is not square.
        Singular: ``a`` is rank deficient.
    """
    if not a.is_square:
        raise ShapeMismatch(f"inverse of a {a.rows}x{a.cols} matrix")
    n = a.rows
    reduced, pivots = _rref(hstack(a, Matrix.identity(a.field, n)))
    if tuple(pivots[:n]) != tuple(range(n)):
        raise Singular(f"matrix of rank {sum(1 for p in pivots if p < n)} < {n}")
    return Matrix.from_function(a.field, n, n, lambda i, j: reduced.entry(i, n + j))


# =============================================================================
# RANK-3 TENSORS
# =============================================================================


@dataclass(frozen=True)
class Tensor3:
    """Rank-3 array ``t[i][j][k]`` of scalars, stored row-major.

    As a product ``e_i · e_j = Σ_k t[i][j][k] e_k``; as a comultiplication
    ``Δ(e_i) = Σ_{j,k} t[i][j][k] e_j ⊗ e_k``.
    """

    field: FieldSpec
    dims: tuple[int, int, int]
    entries: tuple[Scalar, ...]

    def __post_init__(self) -> None:
        d1, d2, d3 = self.dims
        if len(self.entries) != d1 * d2 * d3:
            raise ShapeMismatch(f"{len(self.entries)} entries for dims {self.dims}")

    @classmethod
    def from_function(
        cls,
        field: FieldSpec,
        dims: tuple[int, int, int],
        fn: Callable[[int, int, int], Scalar],
    ) -> Tensor3:
        d1, d2, d3 = dims
        return cls(
            field,
            dims,
            tuple(fn(i, j, k) for i in range(d1) for j in range(d2) for k in range(d3)),
        )

    @classmethod
    def from_bilinear(
        cls,
        field: FieldSpec,
        dims: tuple[int, int, int],
        fn: Callable[[int, int], Vector],
    ) -> Tensor3:
        """Build ``t[i][j][:] = fn(i, j)``."""
        d1, d2, d3 = dims
        values: list[Scalar] = []
        for i in range(d1):
            for j in range(d2):
                v = fn(i, j)
                if len(v) != d3:
                    raise ShapeMismatch(f"value of length {len(v)}, expected {d3}")
                values.extend(v)
        return cls(field, dims, tuple(values))

    @classmethod
    def from_images(
        cls, field: FieldSpec, dims: tuple[int, int, int], fn: Callable[[int], Vector]
    ) -> Tensor3:
        """Build ``t[i][:][:] = fn(i)`` from flattened (d2*d3) images."""
        d1, d2, d3 = dims
        values: list[Scalar] = []
        for i in range(d1):
            v = fn(i)
            if len(v) != d2 * d3:
                raise ShapeMismatch(f"image of length {len(v)}, expected {d2 * d3}")
            values.extend(v)
        return cls(field, dims, tuple(values))

    @classmethod
    def zeros(cls, field: FieldSpec, dims: tuple[int, int, int]) -> Tensor3:
        return cls(field, dims, (field.zero,) * (dims[0] * dims[1] * dims[2]))

    def _index(self, i: int, j: int, k: int) -> int:
        _, d2, d3 = self.dims
        return (i * d2 + j) * d3 + k

    def entry(self, i: int, j: int, k: int) -> Scalar:
        return self.entries[self._index(i, j, k)]

    def with_entry(self, i: int, j: int, k: int, value: Scalar) -> Tensor3:
        entries = list(self.entries)
        entries[self._index(i, j, k)] = value
        return Tensor3(self.field, self.dims, tuple(entries))

    def fiber(self, i: int, j: int) -> Vector:
        d3 = self.dims[2]
        start = self._index(i, j, 0)
        return self.entries[start : start + d3]

    def image(self, i: int) -> Vector:
        """Flattened slice ``t[i][:][:]``."""
        _, d2, d3 = self.dims
        start = i * d2 * d3
        return self.entries[start : start + d2 * d3]

    @cached_property
    def _fibers(self) -> dict[tuple[int, int], tuple[tuple[int, Scalar], ...]]:
        d1, d2, d3 = self.dims
        out = {}
        for i in range(d1):
            for j in range(d2):
                nz = tuple((k, c) for k, c in enumerate(self.fiber(i, j)) if c)
                if nz:
                    out[(i, j)] = nz
        return out

    @cached_property
    def _terms(self) -> tuple[tuple[tuple[int, int, Scalar], ...], ...]:
        fibers = self._fibers
        return tuple(
            tuple(
                (j, k, c)
                for j in range(self.dims[1])
                for k, c in fibers.get((i, j), ())
            )
            for i in range(self.dims[0])
        )

    def terms(self, i: int) -> tuple[tuple[int, int, Scalar], ...]:
        """Nonzero ``(j, k, t[i][j][k])`` triples for fixed ``i``."""
        return self._terms[i]

    def bilinear(self, u: Vector, v: Vector) -> Vector:
        """``Σ_{i,j} u_i v_j t[i][j][:]``."""
        d1, d2, d3 = self.dims
        if len(u) != d1 or len(v) != d2:
            raise ShapeMismatch(f"bilinear({len(u)}, {len(v)}) on dims {self.dims}")
        acc = [self.field.zero] * d3
        su = [(i, a) for i, a in enumerate(u) if a]
        sv = [(j, b) for j, b in enumerate(v) if b]
        fibers = self._fibers
        for i, a in su:
            for j, b in sv:
                fib = fibers.get((i, j))
                if fib:
                    ab = a * b
                    for k, c in fib:
                        acc[k] += ab * c
        return tuple(acc)

    def linear(self, u: Vector) -> Vector:
        """``Σ_i u_i t[i][:][:]`` flattened (length d2*d3)."""
        d1, d2, d3 = self.dims
        if len(u) != d1:
            raise ShapeMismatch(f"linear({len(u)}) on dims {self.dims}")
        acc = [self.field.zero] * (d2 * d3)
        for i, a in enumerate(u):
            if a:
                for j, k, c in self.terms(i):
                    acc[j * d3 + k] += a * c
        return tuple(acc)

    def contract(self, axis: int, operand: Matrix | Vector) -> Tensor3 | Matrix:
        """Contract along ``axis`` (0, 1 or 2).

        A Matrix operand of shape (n, d_axis) maps that axis linearly and
        returns a Tensor3; a vector of length d_axis sums it out and returns
        the remaining two axes as a Matrix.
        """
        if axis not in (0, 1, 2):
            raise ShapeMismatch(f"no axis {axis}")
        d = self.dims[axis]
        if isinstance(operand, Matrix):
            self.field.check_same(operand.field)
            if operand.cols != d:
                raise ShapeMismatch(f"matrix {operand.shape} on axis of size {d}")
            dims = list(self.dims)
            dims[axis] = operand.rows

            def fn(i: int, j: int, k: int) -> Scalar:
                idx = [i, j, k]
                acc = self.field.zero
                for s in range(d):
                    m = operand.entry(idx[axis], s)
                    if m:
                        src = list(idx)
                        src[axis] = s
                        acc += m * self.entry(*src)
                return acc

            return Tensor3.from_function(self.field, tuple(dims), fn)  # type: ignore[arg-type]
        if len(operand) != d:
            raise ShapeMismatch(f"vector of length {len(operand)} on axis of size {d}")
        rest = [a for a in range(3) if a != axis]
        r, c = self.dims[rest[0]], self.dims[rest[1]]

        def gn(x: int, y: int) -> Scalar:
            acc = self.field.zero
            for s, w in enumerate(operand):
                if w:
                    idx = [0, 0, 0]
                    idx[axis], idx[rest[0]], idx[rest[1]] = s, x, y
                    acc += w * self.entry(*idx)
            return acc

        return Matrix.from_function(self.field, r, c, gn)
