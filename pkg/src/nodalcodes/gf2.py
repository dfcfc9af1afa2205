"""Machine-word-packed GF(2) linear algebra.

Vectors are stored as arbitrary-precision integers (bit i = coordinate i)
exposed as 64-bit words; bits beyond the declared length are kept zero by
construction, so Hamming weight is a plain popcount.  All values are
immutable after construction and all operations are pure functions.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

WORD_BITS = 64


class DimensionTooLarge(Exception):
    """Raised when a full codeword enumeration would blow up."""


class BinaryVector:
    """An immutable GF(2) vector of fixed length.

    Attributes:
        length: Number of coordinates.
        bits: Integer whose binary digits are the coordinates (bit i is
            coordinate i); bits at positions >= length are zero.
    """

    __slots__ = ("length", "bits")

    def __init__(self, length: int, bits: int = 0):
        if length < 0:
            raise ValueError("negative length")
        object.__setattr__(self, "length", length)
        object.__setattr__(self, "bits", bits & ((1 << length) - 1))

    def __setattr__(self, name, value):  # pragma: no cover - immutability guard
        raise AttributeError("BinaryVector is immutable")

    @classmethod
    def from_support(cls, length: int, support: Iterable[int]) -> "BinaryVector":
        bits = 0
        for i in support:
            if not 0 <= i < length:
                raise IndexError(f"coordinate {i} out of range 0..{length - 1}")
            bits |= 1 << i
        return cls(length, bits)

    @classmethod
    def from_bits(cls, entries: Sequence[int]) -> "BinaryVector":
        bits = 0
        for i, e in enumerate(entries):
            if e & 1:
                bits |= 1 << i
        return cls(len(entries), bits)

    @classmethod
    def parse(cls, text: str) -> "BinaryVector":
        text = text.strip()
        if not set(text) <= {"0", "1"}:
            raise ValueError(f"invalid row {text!r}")
        return cls.from_bits([int(c) for c in text])

    @property
    def words(self) -> tuple[int, ...]:
        """The 64-bit packed blocks, least significant first."""
        nwords = (self.length + WORD_BITS - 1) // WORD_BITS
        mask = (1 << WORD_BITS) - 1
        return tuple((self.bits >> (WORD_BITS * i)) & mask for i in range(nwords))

    def weight(self) -> int:
        return self.bits.bit_count()

    def get(self, i: int) -> int:
        if not 0 <= i < self.length:
            raise IndexError(i)
        return (self.bits >> i) & 1

    def support(self) -> list[int]:
        return [i for i in range(self.length) if (self.bits >> i) & 1]

    def __xor__(self, other: "BinaryVector") -> "BinaryVector":
        if self.length != other.length:
            raise ValueError("length mismatch")
        return BinaryVector(self.length, self.bits ^ other.bits)

    def __and__(self, other: "BinaryVector") -> "BinaryVector":
        if self.length != other.length:
            raise ValueError("length mismatch")
        return BinaryVector(self.length, self.bits & other.bits)

    def is_zero(self) -> bool:
        return self.bits == 0

    def restrict(self, keep: Sequence[int]) -> "BinaryVector":
        """The vector of coordinates `keep`, in the given order."""
        bits = 0
        for j, i in enumerate(keep):
            if (self.bits >> i) & 1:
                bits |= 1 << j
        return BinaryVector(len(keep), bits)

    def permute(self, perm: Sequence[int]) -> "BinaryVector":
        """Apply a coordinate permutation: result[perm[i]] = self[i]."""
        bits = 0
        for i in range(self.length):
            if (self.bits >> i) & 1:
                bits |= 1 << perm[i]
        return BinaryVector(self.length, bits)

    def concat(self, other: "BinaryVector") -> "BinaryVector":
        return BinaryVector(
            self.length + other.length, self.bits | (other.bits << self.length)
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BinaryVector)
            and self.length == other.length
            and self.bits == other.bits
        )

    def __hash__(self) -> int:
        return hash((self.length, self.bits))

    def __str__(self) -> str:
        return "".join("1" if (self.bits >> i) & 1 else "0" for i in range(self.length))

    def __repr__(self) -> str:
        return f"BinaryVector({str(self)!r})"


class BinaryMatrix:
    """An immutable ordered list of equal-length BinaryVectors."""

    __slots__ = ("rows", "ncols")

    def __init__(self, rows: Sequence[BinaryVector], ncols: int | None = None):
        rows = tuple(rows)
        if rows:
            ncols_seen = {r.length for r in rows}
            if len(ncols_seen) != 1:
                raise ValueError("rows of unequal length")
            (seen,) = ncols_seen
            if ncols is not None and ncols != seen:
                raise ValueError("declared ncols disagrees with rows")
            ncols = seen
        elif ncols is None:
            ncols = 0
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "ncols", ncols)

    def __setattr__(self, name, value):  # pragma: no cover - immutability guard
        raise AttributeError("BinaryMatrix is immutable")

    @classmethod
    def from_bits(cls, bit_rows: Sequence[Sequence[int]]) -> "BinaryMatrix":
        return cls([BinaryVector.from_bits(r) for r in bit_rows])

    @classmethod
    def parse(cls, text: str, ncols: int | None = None) -> "BinaryMatrix":
        """Parse the text format: '0'/'1' rows; blank lines and '#' comments ignored."""
        rows = []
        for line in text.splitlines():
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            rows.append(BinaryVector.parse(line))
        return cls(rows, ncols)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def transpose(self) -> "BinaryMatrix":
        cols = []
        for j in range(self.ncols):
            bits = 0
            for i, r in enumerate(self.rows):
                if (r.bits >> j) & 1:
                    bits |= 1 << i
            cols.append(BinaryVector(self.nrows, bits))
        return BinaryMatrix(cols, self.nrows)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BinaryMatrix)
            and self.ncols == other.ncols
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((self.ncols, self.rows))

    def __str__(self) -> str:
        return "\n".join(str(r) for r in self.rows)

    def __repr__(self) -> str:
        return f"BinaryMatrix({self.nrows}x{self.ncols})"


def _reduce(bit_rows: list[int]) -> tuple[list[int], list[int]]:
    """Row-reduce integer bit-rows; returns (rref rows, pivot columns ascending)."""
    basis: list[int] = []  # rref rows, pivot columns ascending
    pivots: list[int] = []
    for row in bit_rows:
        for b, p in zip(basis, pivots):
            if (row >> p) & 1:
                row ^= b
        if row == 0:
            continue
        # Pivot of a new row is its lowest set bit so that rref pivot
        # columns come out ascending.
        p = (row & -row).bit_length() - 1
        # insert keeping pivots sorted
        idx = 0
        while idx < len(pivots) and pivots[idx] < p:
            idx += 1
        basis.insert(idx, row)
        pivots.insert(idx, p)
        # back-substitute to clear pivot column elsewhere
        for i in range(len(basis)):
            if i != idx and (basis[i] >> p) & 1:
                basis[i] ^= row
    return basis, pivots


def rank(m: BinaryMatrix) -> int:
    """GF(2) rank; does not mutate the input."""
    basis, _ = _reduce([r.bits for r in m.rows])
    return len(basis)


def rref(m: BinaryMatrix) -> BinaryMatrix:
    """Reduced row-echelon form with pivot columns ascending (canonical)."""
    basis, _ = _reduce([r.bits for r in m.rows])
    return BinaryMatrix([BinaryVector(m.ncols, b) for b in basis], m.ncols)


def kernel(m: BinaryMatrix) -> BinaryMatrix:
    """A basis of the right null space {v : every row r has <r, v> = 0}.

    Computed by reducing the transpose with an identity augmentation.
    """
    n = m.ncols
    rows = m.rows
    # v is in the kernel iff for each row r, parity(r & v) = 0.
    # Reduce the n "column vectors with tags": each coordinate j contributes
    # the column (r_i[j])_i augmented with e_j; kernel vectors are the tags
    # of zero columns after elimination.
    basis: dict[int, tuple[int, int]] = {}  # pivot -> (column bits, tag bits)
    out = []
    for j in range(n):
        col = 0
        for i, r in enumerate(rows):
            if (r.bits >> j) & 1:
                col |= 1 << i
        tag = 1 << j
        while col:
            p = (col & -col).bit_length() - 1
            if p in basis:
                bcol, btag = basis[p]
                col ^= bcol
                tag ^= btag
            else:
                basis[p] = (col, tag)
                break
        else:
            out.append(BinaryVector(n, tag))
    return BinaryMatrix(out, n)


def span_contains(m: BinaryMatrix, v: BinaryVector) -> bool:
    if v.length != m.ncols:
        raise ValueError("length mismatch")
    basis, pivots = _reduce([r.bits for r in m.rows])
    x = v.bits
    for b, p in zip(basis, pivots):
        if (x >> p) & 1:
            x ^= b
    return x == 0


def solve_in_span(m: BinaryMatrix, v: BinaryVector) -> BinaryVector | None:
    """A coefficient vector c with sum_i c_i row_i = v, or None."""
    n = m.ncols
    mask = (1 << n) - 1
    basis: dict[int, int] = {}  # pivot -> augmented row
    for i, r in enumerate(m.rows):
        cur = r.bits | (1 << (n + i))
        while cur & mask:
            p = ((cur & mask) & -(cur & mask)).bit_length() - 1
            if p in basis:
                cur ^= basis[p]
            else:
                basis[p] = cur
                break
    x = v.bits
    coeff = 0
    while x:
        p = (x & -x).bit_length() - 1
        if p not in basis:
            return None
        x ^= basis[p] & mask
        coeff ^= basis[p] >> n
    return BinaryVector(m.nrows, coeff)


MAX_ENUM_RANK = 30


def enumerate_codewords(m: BinaryMatrix) -> Iterator[BinaryVector]:
    """Yield each of the 2^rank distinct row-span vectors once, Gray-code order."""
    basis, _ = _reduce([r.bits for r in m.rows])
    k = len(basis)
    if k > MAX_ENUM_RANK:
        raise DimensionTooLarge(f"rank {k} exceeds enumeration bound {MAX_ENUM_RANK}")
    cur = 0
    yield BinaryVector(m.ncols, 0)
    for i in range(1, 1 << k):
        # Gray code: flip the basis vector indexed by the lowest set bit of i.
        j = (i & -i).bit_length() - 1
        cur ^= basis[j]
        yield BinaryVector(m.ncols, cur)


def enumerate_span_bits(bit_rows: Sequence[int]) -> Iterator[int]:
    """Gray-code span enumeration on raw integer rows (performance path)."""
    basis, _ = _reduce(list(bit_rows))
    k = len(basis)
    if k > MAX_ENUM_RANK:
        raise DimensionTooLarge(f"rank {k} exceeds enumeration bound {MAX_ENUM_RANK}")
    cur = 0
    yield 0
    for i in range(1, 1 << k):
        cur ^= basis[(i & -i).bit_length() - 1]
        yield cur
