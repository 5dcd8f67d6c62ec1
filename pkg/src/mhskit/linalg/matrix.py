"""
Matrix Module

Exact matrices over Q(i). Entries are GaussianRational values held in a numpy
object array, so slicing, transposition and products are numpy's while every
scalar operation stays exact. Matrices act on column vectors.
"""

import logging
from typing import Any, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from mhskit.errors import StructureError
from mhskit.linalg.scalars import ONE, ZERO, GaussianRational, format_scalar, parse_scalar

logger = logging.getLogger(__name__)

_to_scalar = np.frompyfunc(GaussianRational.of, 1, 1)
_conjugate = np.frompyfunc(lambda x: x.conjugate(), 1, 1)


def _object_array(data: Any, shape: Optional[Tuple[int, int]] = None) -> np.ndarray:
    if isinstance(data, np.ndarray) and data.dtype == object and data.ndim == 2:
        array = data
    else:
        try:
            array = np.array(data, dtype=object)
        except ValueError as e:
            raise StructureError(f"Ragged matrix data: {e}")
    if array.size == 0:
        if shape is None:
            rows = array.shape[0] if array.ndim >= 1 else 0
            cols = array.shape[1] if array.ndim == 2 else 0
            shape = (rows, cols)
        return np.empty(shape, dtype=object)
    if array.ndim != 2:
        raise StructureError(f"Matrix data must be two-dimensional, got {array.ndim} dimensions")
    if shape is not None and array.shape != tuple(shape):
        raise StructureError(f"Expected shape {shape}, got {array.shape}")
    return _to_scalar(array).astype(object)


def _rref_rows(rows: List[List[GaussianRational]], ncols: int,
               pivot_limit: Optional[int] = None) -> Tuple[List[List[GaussianRational]], List[int]]:
    """Gauss-Jordan elimination on a list of rows; returns the nonzero rows and pivot columns."""
    m = [list(row) for row in rows]
    limit = ncols if pivot_limit is None else pivot_limit
    pivots: List[int] = []
    r = 0
    for c in range(limit):
        if r == len(m):
            break
        pivot = next((i for i in range(r, len(m)) if m[i][c]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inverse = ONE / m[r][c]
        m[r] = [x * inverse for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                factor = m[i][c]
                m[i] = [a - factor * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m, pivots


class Matrix:
    """
    An immutable rows x cols matrix with GaussianRational entries.

    Zero-row and zero-column matrices are allowed; they appear as bases of the
    zero subspace and as maps out of zero-dimensional graded pieces.
    """

    __slots__ = ("_data",)

    def __init__(self, data: Any, shape: Optional[Tuple[int, int]] = None):
        if isinstance(data, Matrix):
            self._data = data._data
        else:
            self._data = _object_array(data, shape)

    @classmethod
    def _wrap(cls, array: np.ndarray) -> "Matrix":
        matrix = cls.__new__(cls)
        matrix._data = array
        return matrix

    # --- constructors -------------------------------------------------------

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        array = np.empty((rows, cols), dtype=object)
        array.fill(ZERO)
        return cls._wrap(array)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        matrix = cls.zeros(n, n)._data
        for i in range(n):
            matrix[i, i] = ONE
        return cls._wrap(matrix)

    @classmethod
    def diag(cls, values: Sequence[Any]) -> "Matrix":
        matrix = cls.zeros(len(values), len(values))._data
        for i, value in enumerate(values):
            matrix[i, i] = GaussianRational.of(value)
        return cls._wrap(matrix)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Any]], cols: int) -> "Matrix":
        """Build from a possibly empty list of rows of known length."""
        if not rows:
            return cls.zeros(0, cols)
        return cls(rows, shape=(len(rows), cols))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[Any]], dim: int) -> "Matrix":
        """Build a dim x len(columns) matrix whose columns are the given vectors."""
        if not columns:
            return cls.zeros(dim, 0)
        return cls(columns, shape=(len(columns), dim)).T

    @classmethod
    def column_vector(cls, values: Sequence[Any]) -> "Matrix":
        return cls([[v] for v in values], shape=(len(values), 1))

    @classmethod
    def from_strings(cls, rows: Sequence[Sequence[str]], cols: Optional[int] = None) -> "Matrix":
        """Parse a row-major array of scalar strings."""
        parsed = [[parse_scalar(entry) for entry in row] for row in rows]
        if not parsed:
            return cls.zeros(0, cols or 0)
        return cls(parsed)

    @classmethod
    def from_vector(cls, values: Sequence[Any], rows: int, cols: int) -> "Matrix":
        """Inverse of vectorize: fill a rows x cols matrix in row-major order."""
        if len(values) != rows * cols:
            raise StructureError(f"Cannot reshape {len(values)} entries to {rows}x{cols}")
        array = np.empty((rows, cols), dtype=object)
        for index, value in enumerate(values):
            array[index // cols, index % cols] = GaussianRational.of(value)
        return cls._wrap(array)

    @classmethod
    def hstack(cls, blocks: Sequence["Matrix"]) -> "Matrix":
        return cls._wrap(np.hstack([b._data for b in blocks]).astype(object))

    @classmethod
    def vstack(cls, blocks: Sequence["Matrix"]) -> "Matrix":
        return cls._wrap(np.vstack([b._data for b in blocks]).astype(object))

    @classmethod
    def block_diag(cls, blocks: Sequence["Matrix"]) -> "Matrix":
        rows = sum(b.rows for b in blocks)
        cols = sum(b.cols for b in blocks)
        result = cls.zeros(rows, cols)._data
        r = c = 0
        for block in blocks:
            result[r:r + block.rows, c:c + block.cols] = block._data
            r += block.rows
            c += block.cols
        return cls._wrap(result)

    # --- access -------------------------------------------------------------

    @property
    def shape(self) -> Tuple[int, int]:
        return self._data.shape

    @property
    def rows(self) -> int:
        return self._data.shape[0]

    @property
    def cols(self) -> int:
        return self._data.shape[1]

    @property
    def array(self) -> np.ndarray:
        """A copy of the underlying object array."""
        return self._data.copy()

    @property
    def T(self) -> "Matrix":
        return Matrix._wrap(self._data.T.copy())

    @property
    def H(self) -> "Matrix":
        """Conjugate transpose."""
        return self.conjugate().T

    def __getitem__(self, key):
        value = self._data[key]
        if isinstance(value, np.ndarray):
            if value.ndim == 1:
                # keep two dimensions: a single row or column slice
                row_key = key[0] if isinstance(key, tuple) else key
                if isinstance(row_key, (int, np.integer)):
                    value = value.reshape(1, -1)
                else:
                    value = value.reshape(-1, 1)
            return Matrix._wrap(value.copy())
        return value

    def row(self, i: int) -> List[GaussianRational]:
        return list(self._data[i, :])

    def column(self, j: int) -> List[GaussianRational]:
        return list(self._data[:, j])

    def row_list(self) -> List[List[GaussianRational]]:
        return [list(row) for row in self._data]

    def vectorize(self) -> List[GaussianRational]:
        """Row-major list of entries; index i*cols + j holds entry (i, j)."""
        return list(self._data.reshape(-1))

    def with_entry(self, i: int, j: int, value: Any) -> "Matrix":
        array = self._data.copy()
        array[i, j] = GaussianRational.of(value)
        return Matrix._wrap(array)

    # --- arithmetic ---------------------------------------------------------

    def _check_same_shape(self, other: "Matrix", operation: str) -> None:
        if self.shape != other.shape:
            raise StructureError(f"Cannot {operation} matrices of shapes {self.shape} and {other.shape}")

    def __add__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check_same_shape(other, "add")
        return Matrix._wrap(self._data + other._data)

    def __sub__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check_same_shape(other, "subtract")
        return Matrix._wrap(self._data - other._data)

    def __neg__(self) -> "Matrix":
        return Matrix._wrap(-self._data)

    def __mul__(self, scalar: Any) -> "Matrix":
        if isinstance(scalar, Matrix):
            return NotImplemented
        scalar = GaussianRational.of(scalar)
        return Matrix._wrap(_times(self._data, scalar))

    __rmul__ = __mul__

    def __truediv__(self, scalar: Any) -> "Matrix":
        scalar = GaussianRational.of(scalar)
        return self * (ONE / scalar)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.cols != other.rows:
            raise StructureError(f"Cannot multiply {self.shape} by {other.shape}")
        if self.cols == 0 or self.rows == 0 or other.cols == 0:
            return Matrix.zeros(self.rows, other.cols)
        return Matrix._wrap(_to_scalar(np.dot(self._data, other._data)).astype(object))

    def __pow__(self, exponent: int) -> "Matrix":
        if self.rows != self.cols:
            raise StructureError("Only square matrices have powers")
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result, base = Matrix.identity(self.rows), self
        while exponent:
            if exponent & 1:
                result = result @ base
            base = base @ base
            exponent >>= 1
        return result

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and all(
            a == b for a, b in zip(self._data.flat, other._data.flat))

    def __hash__(self) -> int:
        return hash((self.shape, tuple(self._data.flat)))

    def __repr__(self) -> str:
        return f"Matrix({self.to_strings()})"

    def conjugate(self) -> "Matrix":
        if self._data.size == 0:
            return Matrix._wrap(self._data.copy())
        return Matrix._wrap(_conjugate(self._data).astype(object))

    def real_part(self) -> "Matrix":
        return Matrix._wrap(_map(self._data, lambda x: GaussianRational(x.re, 0)))

    def imag_part(self) -> "Matrix":
        return Matrix._wrap(_map(self._data, lambda x: GaussianRational(x.im, 0)))

    def trace(self) -> GaussianRational:
        return sum((self._data[i, i] for i in range(min(self.shape))), ZERO)

    def kron(self, other: "Matrix") -> "Matrix":
        """Kronecker product; entry (i*p + k, j*q + l) is self[i, j] * other[k, l]."""
        p, q = other.shape
        result = Matrix.zeros(self.rows * p, self.cols * q)._data
        for i in range(self.rows):
            for j in range(self.cols):
                a = self._data[i, j]
                if a:
                    result[i * p:(i + 1) * p, j * q:(j + 1) * q] = _times(other._data, a)
        return Matrix._wrap(result)

    # --- predicates ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not any(self._data.flat)

    def is_real(self) -> bool:
        return all(x.im == 0 for x in self._data.flat)

    def is_integer(self) -> bool:
        return all(x.is_integer() for x in self._data.flat)

    def is_square(self) -> bool:
        return self.rows == self.cols

    # --- elimination --------------------------------------------------------

    def rref(self) -> Tuple["Matrix", List[int]]:
        """
        Reduced row-echelon form.

        Returns:
            The nonzero rows of the reduced form (a rank x cols matrix) and the pivot columns
        """
        rows, pivots = _rref_rows(self.row_list(), self.cols)
        return Matrix.from_rows(rows[:len(pivots)], self.cols), pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def nullspace(self) -> "Matrix":
        """A cols x k matrix whose columns form a basis of {x : self @ x = 0}."""
        reduced, pivots = self.rref()
        free = [c for c in range(self.cols) if c not in pivots]
        basis = []
        for f in free:
            vector = [ZERO] * self.cols
            vector[f] = ONE
            for i, p in enumerate(pivots):
                vector[p] = -reduced._data[i, f]
            basis.append(vector)
        return Matrix.from_columns(basis, self.cols)

    def left_nullspace(self) -> "Matrix":
        """A k x rows matrix whose rows y satisfy y @ self = 0."""
        return self.T.nullspace().T

    def solve(self, rhs: "Matrix") -> Optional["Matrix"]:
        """
        One solution X of self @ X = rhs, or None when the system is inconsistent.

        Free variables are set to zero, so the answer is canonical.
        """
        if rhs.rows != self.rows:
            raise StructureError(f"Right-hand side has {rhs.rows} rows, expected {self.rows}")
        n = self.cols
        augmented = [list(a) + list(b) for a, b in zip(self._data, rhs._data)]
        rows, pivots = _rref_rows(augmented, n + rhs.cols, pivot_limit=n)
        for row in rows[len(pivots):]:
            if any(row[n:]):
                return None
        solution = Matrix.zeros(n, rhs.cols)._data
        for i, p in enumerate(pivots):
            solution[p, :] = rows[i][n:]
        return Matrix._wrap(solution)

    def inverse(self) -> "Matrix":
        if not self.is_square():
            raise StructureError(f"Cannot invert a {self.shape} matrix")
        solution = self.solve(Matrix.identity(self.rows))
        if solution is None or self.rank() < self.rows:
            raise StructureError("Matrix is singular")
        return solution

    def det(self) -> GaussianRational:
        if not self.is_square():
            raise StructureError(f"No determinant for a {self.shape} matrix")
        m = self.row_list()
        n = len(m)
        result = ONE
        for c in range(n):
            pivot = next((i for i in range(c, n) if m[i][c]), None)
            if pivot is None:
                return ZERO
            if pivot != c:
                m[c], m[pivot] = m[pivot], m[c]
                result = -result
            result = result * m[c][c]
            for i in range(c + 1, n):
                if m[i][c]:
                    factor = m[i][c] / m[c][c]
                    m[i] = [a - factor * b for a, b in zip(m[i], m[c])]
        return result

    def leading_minors(self) -> List[GaussianRational]:
        return [self[:k, :k].det() for k in range(1, self.rows + 1)]

    # --- exponential and logarithm -------------------------------------------

    def is_nilpotent(self) -> bool:
        return self.is_square() and (self ** self.rows).is_zero()

    def exp_nilpotent(self) -> "Matrix":
        """exp(X) for nilpotent X, a finite sum."""
        if not self.is_nilpotent():
            raise StructureError("exp_nilpotent needs a nilpotent matrix")
        result = Matrix.identity(self.rows)
        term = Matrix.identity(self.rows)
        for k in range(1, self.rows + 1):
            term = (term @ self) / k
            if term.is_zero():
                break
            result = result + term
        return result

    def log_unipotent(self) -> "Matrix":
        """log(U) for unipotent U, the finite series in U - 1."""
        if not self.is_square():
            raise StructureError("log_unipotent needs a square matrix")
        x = self - Matrix.identity(self.rows)
        if not x.is_nilpotent():
            raise StructureError("log_unipotent needs a unipotent matrix")
        result = Matrix.zeros(self.rows, self.rows)
        power = Matrix.identity(self.rows)
        for k in range(1, self.rows + 1):
            power = power @ x
            if power.is_zero():
                break
            sign = 1 if k % 2 else -1
            result = result + power * GaussianRational(sign) / k
        return result

    # --- conversion ---------------------------------------------------------

    def to_complex(self) -> np.ndarray:
        if self._data.size == 0:
            return np.zeros(self.shape, dtype=complex)
        return np.array([[complex(x) for x in row] for row in self._data], dtype=complex)

    def to_strings(self) -> List[List[str]]:
        return [[format_scalar(x) for x in row] for row in self._data]


def bracket(a: Matrix, b: Matrix) -> Matrix:
    """The commutator [a, b] = ab - ba."""
    return a @ b - b @ a


def _times(array: np.ndarray, scalar: GaussianRational) -> np.ndarray:
    if array.size == 0:
        return array.copy()
    return _map(array, lambda x: x * scalar)


def _map(array: np.ndarray, function) -> np.ndarray:
    if array.size == 0:
        return array.copy()
    return np.frompyfunc(function, 1, 1)(array).astype(object)


def stack_rows(vectors: Iterable[Sequence[Any]], dim: int) -> Matrix:
    return Matrix.from_rows([list(v) for v in vectors], dim)
