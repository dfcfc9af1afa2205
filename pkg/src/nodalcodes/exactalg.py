"""Exact arithmetic: number fields Q[t]/(m(t)), sparse multivariate
polynomials over them, finite fields F_p and F_25, and line restrictions.

Two number fields are shipped: Q(tau) with tau^2 = tau + 1 (tau the golden
ratio, sqrt(5) = 2 tau - 1) and the degree-4 field Q[t]/(t^4 - 10 t^2 + 5).
Rationals are the degree-1 case.  All arithmetic is exact; there are no
floating-point numbers anywhere in this module.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import comb
from typing import Iterable, Sequence


class DivisionByZero(ZeroDivisionError):
    pass


class NumberField:
    """Q[t]/(m(t)) for a monic integer polynomial m, represented on the
    power basis 1, t, ..., t^(deg-1)."""

    def __init__(self, min_poly: Sequence[int], name: str = "t"):
        # min_poly = [c0, c1, ..., c_{d-1}, 1] monic
        if min_poly[-1] != 1:
            raise ValueError("minimal polynomial must be monic")
        self.min_poly = tuple(min_poly)
        self.degree = len(min_poly) - 1
        self.name = name
        # Reduction table: t^(deg + i) expressed on the power basis.
        d = self.degree
        table = []
        cur = [Fraction(-c) for c in min_poly[:-1]]  # t^d
        table.append(list(cur))
        for _ in range(d - 2 if d >= 2 else 0):
            nxt = [Fraction(0)] * d
            # multiply cur by t
            for i, c in enumerate(cur):
                if i + 1 < d:
                    nxt[i + 1] += c
                else:
                    for j in range(d):
                        nxt[j] += c * table[0][j]
            table.append(nxt)
            cur = nxt
        self._red = table  # t^(d+i) for i = 0..d-2

    def __call__(self, coeffs) -> "FieldElement":
        if isinstance(coeffs, FieldElement):
            if coeffs.field is not self:
                raise ValueError("field mismatch")
            return coeffs
        if isinstance(coeffs, (int, Fraction)):
            vec = [Fraction(coeffs)] + [Fraction(0)] * (self.degree - 1)
            return FieldElement(self, vec)
        vec = [Fraction(c) for c in coeffs]
        vec += [Fraction(0)] * (self.degree - len(vec))
        return FieldElement(self, vec)

    @property
    def zero(self) -> "FieldElement":
        return self(0)

    @property
    def one(self) -> "FieldElement":
        return self(1)

    @property
    def gen(self) -> "FieldElement":
        if self.degree < 2:
            raise ValueError("the rational field has no generator")
        return self([0, 1])

    def __repr__(self):
        return f"NumberField({self.min_poly})"


class FieldElement:
    """An element of a NumberField: rational coefficients on the power basis."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: NumberField, coeffs: list[Fraction]):
        self.field = field
        self.coeffs = tuple(coeffs)

    def _coerce(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.field is not self.field:
                raise ValueError("field mismatch")
            return other
        return self.field(other)

    def __add__(self, other):
        if not isinstance(other, (FieldElement, int, Fraction)):
            return NotImplemented
        o = self._coerce(other)
        return FieldElement(self.field, [a + b for a, b in zip(self.coeffs, o.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field, [-a for a in self.coeffs])

    def __sub__(self, other):
        if not isinstance(other, (FieldElement, int, Fraction)):
            return NotImplemented
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, (FieldElement, int, Fraction)):
            return NotImplemented
        o = self._coerce(other)
        d = self.field.degree
        prod = [Fraction(0)] * (2 * d - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(o.coeffs):
                if b:
                    prod[i + j] += a * b
        out = prod[:d]
        red = self.field._red
        for i in range(d, 2 * d - 1):
            c = prod[i]
            if c:
                for j in range(d):
                    out[j] += c * red[i - d][j]
        return FieldElement(self.field, out)

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        if self.is_zero():
            raise DivisionByZero("inverse of zero")
        d = self.field.degree
        if d == 1:
            return FieldElement(self.field, [1 / self.coeffs[0]])
        # Solve self * x = 1 as a linear system on the power basis.
        cols = []
        basis = [self.field([Fraction(1) if i == j else Fraction(0) for i in range(d)]) for j in range(d)]
        for b in basis:
            cols.append((self * b).coeffs)
        # Gaussian elimination on the d x d system.
        aug = [[cols[j][i] for j in range(d)] + [Fraction(1) if i == 0 else Fraction(0)] for i in range(d)]
        for col in range(d):
            piv = next((r for r in range(col, d) if aug[r][col]), None)
            if piv is None:
                raise DivisionByZero("element is a zero divisor (reducible modulus?)")
            aug[col], aug[piv] = aug[piv], aug[col]
            inv = 1 / aug[col][col]
            aug[col] = [v * inv for v in aug[col]]
            for r in range(d):
                if r != col and aug[r][col]:
                    f = aug[r][col]
                    aug[r] = [v - f * w for v, w in zip(aug[r], aug[col])]
        return FieldElement(self.field, [aug[i][d] for i in range(d)])

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, n: int) -> "FieldElement":
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.field(other)
        return (
            isinstance(other, FieldElement)
            and other.field is self.field
            and other.coeffs == self.coeffs
        )

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return not self.is_zero()

    def serialize(self) -> str:
        return "[" + ", ".join(f"{c.numerator}/{c.denominator}" for c in self.coeffs) + "]"

    def __repr__(self):
        name = self.field.name
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append(f"{c}*{name}")
            else:
                parts.append(f"{c}*{name}^{i}")
        return " + ".join(parts) if parts else "0"


QQ = NumberField([0, 1], name="t")  # degree 1: plain rationals
GOLDEN = NumberField([-1, -1, 1], name="tau")  # tau^2 = tau + 1
QUARTIC = NumberField([5, 0, -10, 0, 1], name="s")  # s^4 - 10 s^2 + 5 = 0


def golden() -> FieldElement:
    """tau = (1 + sqrt 5)/2, the root of t^2 = t + 1."""
    return GOLDEN.gen


def sqrt5() -> FieldElement:
    """sqrt(5) = 2 tau - 1 in the golden field."""
    return GOLDEN([-1, 2])


# ---------------------------------------------------------------------------
# Sparse multivariate polynomials
# ---------------------------------------------------------------------------


class MultiPoly:
    """Sparse multivariate polynomial over a NumberField.

    Terms map exponent tuples to nonzero FieldElements; canonical term
    order is graded lexicographic.
    """

    __slots__ = ("field", "nvars", "terms")

    def __init__(self, field: NumberField, nvars: int, terms: dict[tuple, FieldElement] | None = None):
        self.field = field
        self.nvars = nvars
        clean = {}
        if terms:
            for e, c in terms.items():
                c = field(c)
                if not c.is_zero():
                    clean[tuple(e)] = c
        self.terms = clean

    @classmethod
    def variable(cls, field: NumberField, nvars: int, i: int) -> "MultiPoly":
        e = [0] * nvars
        e[i] = 1
        return cls(field, nvars, {tuple(e): field.one})

    @classmethod
    def constant(cls, field: NumberField, nvars: int, c) -> "MultiPoly":
        return cls(field, nvars, {(0,) * nvars: field(c)})

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            return other
        return MultiPoly.constant(self.field, self.nvars, other)

    def __add__(self, other):
        o = self._coerce(other)
        out = dict(self.terms)
        for e, c in o.terms.items():
            cur = out.get(e)
            out[e] = c if cur is None else cur + c
        return MultiPoly(self.field, self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.field, self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        out: dict[tuple, FieldElement] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                p = c1 * c2
                cur = out.get(e)
                out[e] = p if cur is None else cur + p
        return MultiPoly(self.field, self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        result = MultiPoly.constant(self.field, self.nvars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        o = self._coerce(other)
        return self.nvars == o.nvars and self.terms == o.terms

    def __hash__(self):
        return hash((self.nvars, tuple(sorted(self.terms.items()))))

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def evaluate(self, point: Sequence) -> FieldElement:
        pt = [self.field(p) for p in point]
        total = self.field.zero
        # cache powers per variable
        maxdeg = [0] * self.nvars
        for e in self.terms:
            for i, d in enumerate(e):
                maxdeg[i] = max(maxdeg[i], d)
        powers = []
        for i in range(self.nvars):
            row = [self.field.one]
            for _ in range(maxdeg[i]):
                row.append(row[-1] * pt[i])
            powers.append(row)
        for e, c in self.terms.items():
            v = c
            for i, d in enumerate(e):
                if d:
                    v = v * powers[i][d]
            total = total + v
        return total

    def partial(self, i: int) -> "MultiPoly":
        out = {}
        for e, c in self.terms.items():
            if e[i] == 0:
                continue
            ne = list(e)
            ne[i] -= 1
            out[tuple(ne)] = c * e[i]
        return MultiPoly(self.field, self.nvars, out)

    def gradient(self) -> list["MultiPoly"]:
        return [self.partial(i) for i in range(self.nvars)]

    def hessian_matrix_at(self, point: Sequence) -> list[list[FieldElement]]:
        grads = self.gradient()
        return [[grads[i].partial(j).evaluate(point) for j in range(self.nvars)] for i in range(self.nvars)]

    def substitute(self, images: Sequence["MultiPoly"]) -> "MultiPoly":
        """Ring map x_i -> images[i] (all images share one variable count)."""
        nv = images[0].nvars
        total = MultiPoly(self.field, nv)
        for e, c in self.terms.items():
            term = MultiPoly.constant(self.field, nv, c)
            for i, d in enumerate(e):
                if d:
                    term = term * images[i] ** d
            total = total + term
        return total

    def content_normalized(self) -> "MultiPoly":
        """Divide by the coefficient of the graded-lex leading term."""
        if self.is_zero():
            return self
        lead = max(self.terms, key=lambda e: (sum(e), e))
        inv = self.terms[lead].inverse()
        return MultiPoly(self.field, self.nvars, {e: c * inv for e, c in self.terms.items()})

    def is_scalar_multiple_of(self, other: "MultiPoly"):
        """The constant c with self = c * other, or None."""
        if other.is_zero():
            return self.field.zero if self.is_zero() else None
        if set(self.terms) != set(other.terms):
            return None
        lead = next(iter(other.terms))
        c = self.terms[lead] * other.terms[lead].inverse()
        for e, co in other.terms.items():
            if self.terms[e] != c * co:
                return None
        return c

    def __repr__(self):
        items = sorted(self.terms.items(), key=lambda ec: (-sum(ec[0]), tuple(-x for x in ec[0])))
        parts = []
        for e, c in items[:12]:
            mono = "*".join(f"x{i}^{d}" for i, d in enumerate(e) if d) or "1"
            parts.append(f"({c})*{mono}")
        s = " + ".join(parts)
        if len(items) > 12:
            s += f" + ... ({len(items)} terms)"
        return s or "0"


def poly_sqrt(p: MultiPoly) -> MultiPoly | None:
    """A polynomial h with h^2 = p, or None.

    Requires the graded-lex leading coefficient of p to be 1 (normalize
    first); works by repeatedly cancelling the leading term of p - h^2.
    """
    if p.is_zero():
        return MultiPoly(p.field, p.nvars)

    def lead(q: MultiPoly) -> tuple:
        return max(q.terms, key=lambda e: (sum(e), e))

    e0 = lead(p)
    if p.terms[e0] != 1 or any(d % 2 for d in e0):
        return None
    half = tuple(d // 2 for d in e0)
    h = MultiPoly(p.field, p.nvars, {half: p.field.one})
    two_inv = p.field(Fraction(1, 2))
    for _ in range(len(p.terms) + 1):
        r = p - h * h
        if r.is_zero():
            return h
        er = lead(r)
        te = tuple(a - b for a, b in zip(er, half))
        if any(d < 0 for d in te):
            return None
        h = h + MultiPoly(p.field, p.nvars, {te: r.terms[er] * two_inv})
    return None


def matrix_kernel_over_field(
    rows: Sequence[Sequence[FieldElement]], field: NumberField
) -> list[list[FieldElement]]:
    """Basis of the right kernel of a matrix with FieldElement entries."""
    work = [list(r) for r in rows]
    ncols = len(work[0]) if work else 0
    pivots = []
    row = 0
    for col in range(ncols):
        piv = next((r for r in range(row, len(work)) if not work[r][col].is_zero()), None)
        if piv is None:
            continue
        work[row], work[piv] = work[piv], work[row]
        inv = work[row][col].inverse()
        work[row] = [v * inv for v in work[row]]
        for r in range(len(work)):
            if r != row and not work[r][col].is_zero():
                f = work[r][col]
                work[r] = [v - f * w for v, w in zip(work[r], work[row])]
        pivots.append(col)
        row += 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [field.zero] * ncols
        vec[fc] = field.one
        for r, pc in enumerate(pivots):
            vec[pc] = -work[r][fc]
        basis.append(vec)
    return basis


def matrix_inverse_over_field(
    rows: Sequence[Sequence[FieldElement]], field: NumberField
) -> list[list[FieldElement]]:
    """Inverse of a square matrix with FieldElement entries."""
    n = len(rows)
    aug = [list(r) + [field.one if i == j else field.zero for j in range(n)]
           for i, r in enumerate(rows)]
    for col in range(n):
        piv = next((r for r in range(col, n) if not aug[r][col].is_zero()), None)
        if piv is None:
            raise DivisionByZero("singular matrix")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = aug[col][col].inverse()
        aug[col] = [v * inv for v in aug[col]]
        for r in range(n):
            if r != col and not aug[r][col].is_zero():
                f = aug[r][col]
                aug[r] = [v - f * w for v, w in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def restrict_to_line(F: MultiPoly, P: Sequence, Q: Sequence) -> list[FieldElement]:
    """Coefficients [c_0..c_d] of F(sP + tQ) = sum c_j s^(d-j) t^j.

    The endpoints sit at (1:0) -> P and (0:1) -> Q; a zero list signals that
    the line lies on the surface.
    """
    field = F.field
    Pv = [field(p) for p in P]
    Qv = [field(q) for q in Q]
    d = F.degree()
    if d < 0:
        return []
    # For each variable i, (s P_i + t Q_i)^m has binomial coefficients.
    out = [field.zero for _ in range(d + 1)]
    for e, c in F.terms.items():
        # product over i of (s P_i + t Q_i)^{e_i}: convolve binomial rows.
        conv = [field.one]  # coefficients in t of a form of degree sum-so-far
        for i, m in enumerate(e):
            if m == 0:
                continue
            row = []
            for j in range(m + 1):
                row.append(field(comb(m, j)) * Pv[i] ** (m - j) * Qv[i] ** j)
            new = [field.zero] * (len(conv) + m)
            for a, ca in enumerate(conv):
                if ca.is_zero():
                    continue
                for b, cb in enumerate(row):
                    new[a + b] = new[a + b] + ca * cb
            conv = new
        for j, cc in enumerate(conv):
            out[j] = out[j] + c * cc
    if all(c.is_zero() for c in out):
        return []
    return out


class ZeroForm(Exception):
    """A restriction that vanishes identically (line on the surface)."""


def _poly_gcd(a: list[FieldElement], b: list[FieldElement], field: NumberField) -> list[FieldElement]:
    """Monic gcd of univariate polynomials with FieldElement coefficients."""

    def trim(p):
        while p and p[-1].is_zero():
            p.pop()
        return p

    a, b = trim(list(a)), trim(list(b))
    while b:
        # a mod b
        a = list(a)
        inv = b[-1].inverse()
        while len(a) >= len(b):
            f = a[-1] * inv
            shift = len(a) - len(b)
            for i, c in enumerate(b):
                a[shift + i] = a[shift + i] - f * c
            trim(a)
            if not a:
                break
        a, b = b, a
    if a:
        inv = a[-1].inverse()
        a = [c * inv for c in a]
    return a


def multiplicity_profile(coeffs: list[FieldElement]) -> dict:
    """Root-multiplicity data of a binary form given by restrict_to_line.

    Returns endpoint multiplicities (orders of vanishing at (1:0) and (0:1))
    and, for the residual factor, whether it is squarefree (detected by gcd
    with its derivative over the coefficient field's closure).
    """
    if not coeffs or all(c.is_zero() for c in coeffs):
        raise ZeroForm("identically zero restriction")
    field = coeffs[0].field
    d = len(coeffs) - 1
    # order at t=0 (the point P at (1:0)): lowest j with c_j != 0
    mult_p = next(j for j in range(d + 1) if not coeffs[j].is_zero())
    mult_q = next(j for j in range(d + 1) if not coeffs[d - j].is_zero())
    residual = coeffs[mult_p : d + 1 - mult_q]  # poly in t of the leftover roots
    deg_res = len(residual) - 1
    res_squarefree = True
    if deg_res >= 2:
        deriv = [residual[i] * i for i in range(1, len(residual))]
        g = _poly_gcd(residual, deriv, field)
        res_squarefree = len(g) <= 1
    return {
        "mult_p": mult_p,
        "mult_q": mult_q,
        "residual_degree": deg_res,
        "residual_squarefree": res_squarefree,
    }


# ---------------------------------------------------------------------------
# Finite fields F_p and F_{p^2} with u^2 = c, and projective spaces
# ---------------------------------------------------------------------------


class FiniteField:
    """F_p, or F_{p^2} = F_p[u]/(u^2 - c) for a non-residue c."""

    def __init__(self, p: int, c: int | None = None):
        self.p = p
        self.c = c
        self.order = p if c is None else p * p

    def elements(self):
        if self.c is None:
            return [(a,) for a in range(self.p)]
        return [(a, b) for a in range(self.p) for b in range(self.p)]

    @property
    def zero(self):
        return (0,) if self.c is None else (0, 0)

    @property
    def one(self):
        return (1,) if self.c is None else (1, 0)

    def add(self, x, y):
        if self.c is None:
            return ((x[0] + y[0]) % self.p,)
        return ((x[0] + y[0]) % self.p, (x[1] + y[1]) % self.p)

    def neg(self, x):
        if self.c is None:
            return ((-x[0]) % self.p,)
        return ((-x[0]) % self.p, (-x[1]) % self.p)

    def sub(self, x, y):
        return self.add(x, self.neg(y))

    def mul(self, x, y):
        if self.c is None:
            return ((x[0] * y[0]) % self.p,)
        a, b = x
        d, e = y
        return ((a * d + self.c * b * e) % self.p, (a * e + b * d) % self.p)

    def inv(self, x):
        if x == self.zero:
            raise DivisionByZero("finite field inverse of zero")
        if self.c is None:
            return (pow(x[0], self.p - 2, self.p),)
        a, b = x
        norm = (a * a - self.c * b * b) % self.p
        ninv = pow(norm, self.p - 2, self.p)
        return ((a * ninv) % self.p, (-b * ninv) % self.p)

    def embed(self, n: int):
        if self.c is None:
            return (n % self.p,)
        return (n % self.p, 0)

    def frobenius(self, x):
        """x -> x^p (identity on F_p, conjugation u -> -u on F_{p^2})."""
        if self.c is None:
            return x
        return (x[0], (-x[1]) % self.p)


F2 = FiniteField(2)
F3 = FiniteField(3)
F5 = FiniteField(5)
F25 = FiniteField(5, c=2)  # F5[u], u^2 = 2 (2 is a non-residue mod 5)


def pg_points(k: int, field: FiniteField) -> list[tuple]:
    """Points of PG(k-1, q), normalized so the first nonzero entry is 1,
    listed in lexicographic order of the normalized coordinate vectors."""
    pts = []
    elems = field.elements()
    for vec in itertools.product(elems, repeat=k):
        if all(v == field.zero for v in vec):
            continue
        first = next(v for v in vec if v != field.zero)
        if first != field.one:
            continue
        pts.append(vec)
    pts.sort()
    return pts


def pg_normalize(vec: Sequence, field: FiniteField) -> tuple:
    first = next((v for v in vec if v != field.zero), None)
    if first is None:
        raise ValueError("zero vector has no projective class")
    inv = field.inv(first)
    return tuple(field.mul(inv, v) for v in vec)


def matrix_rank_over_field(rows: Iterable[Sequence[FieldElement]]) -> int:
    """Exact rank of a matrix with FieldElement entries (Gaussian elimination)."""
    work = [list(r) for r in rows]
    if not work:
        return 0
    ncols = len(work[0])
    rank = 0
    row = 0
    for col in range(ncols):
        piv = next((r for r in range(row, len(work)) if not work[r][col].is_zero()), None)
        if piv is None:
            continue
        work[row], work[piv] = work[piv], work[row]
        inv = work[row][col].inverse()
        work[row] = [v * inv for v in work[row]]
        for r in range(len(work)):
            if r != row and not work[r][col].is_zero():
                f = work[r][col]
                work[r] = [v - f * w for v, w in zip(work[r], work[row])]
        row += 1
        rank += 1
        if row == len(work):
            break
    return rank
