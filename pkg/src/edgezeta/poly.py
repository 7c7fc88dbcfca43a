"""Exact integer polynomials and determinants.

All arithmetic is over Python integers; ``fractions.Fraction`` serves as the
rational type.  Nothing here touches floating point.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

Number = Union[int, Fraction]

DEFAULT_SCALE_CAP = 12


class ScaleCapExceeded(ValueError):
    """A symbolic computation was requested beyond its configured size cap."""


class UniPoly:
    """Dense univariate polynomial in ``u`` with integer coefficients.

    ``coeffs[k]`` is the coefficient of ``u**k``.  Trailing zeros are stripped,
    so the zero polynomial has no coefficients and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()) -> None:
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[int, ...] = tuple(cs)

    @classmethod
    def constant(cls, c: int) -> UniPoly:
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> UniPoly:
        return cls([0] * k + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __getitem__(self, k: int) -> int:
        return self.coefficient(k)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = UniPoly.constant(other)
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"UniPoly({list(self.coeffs)})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if k == 0 else ("u" if k == 1 else f"u^{k}")
            if mono and abs(c) == 1:
                term = mono
            else:
                term = f"{abs(c)}{'*' if mono else ''}{mono}"
            parts.append(("- " if c < 0 else "+ ") + term)
        s = " ".join(parts)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]

    @staticmethod
    def _lift(x: UniPoly | int) -> UniPoly:
        return x if isinstance(x, UniPoly) else UniPoly.constant(x)

    def __add__(self, other: UniPoly | int) -> UniPoly:
        o = self._lift(other).coeffs
        n = max(len(self.coeffs), len(o))
        return UniPoly(self.coefficient(k) + (o[k] if k < len(o) else 0) for k in range(n))

    __radd__ = __add__

    def __neg__(self) -> UniPoly:
        return UniPoly(-c for c in self.coeffs)

    def __sub__(self, other: UniPoly | int) -> UniPoly:
        return self + (-self._lift(other))

    def __rsub__(self, other: int) -> UniPoly:
        return self._lift(other) - self

    def __mul__(self, other: UniPoly | int) -> UniPoly:
        a, b = self.coeffs, self._lift(other).coeffs
        if not a or not b:
            return UniPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> UniPoly:
        if e < 0:
            raise ValueError("negative power")
        result, base = UniPoly.constant(1), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __call__(self, x: Number) -> Number:
        acc: Number = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def truncate(self, L: int) -> UniPoly:
        """Terms of degree at most ``L``."""
        return UniPoly(self.coeffs[: L + 1])

    def exact_quotient(self, other: UniPoly) -> UniPoly:
        """Quotient of an exact division in Z[u]; raises if ``other`` does not divide."""
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = [Fraction(c) for c in self.coeffs]
        d = other.degree
        lead = other.coeffs[-1]
        q = [Fraction(0)] * max(len(rem) - d, 0)
        for k in range(len(rem) - 1 - d, -1, -1):
            c = rem[k + d] / lead
            q[k] = c
            if c:
                for i, oc in enumerate(other.coeffs):
                    rem[k + i] -= c * oc
        if any(rem):
            raise ArithmeticError("polynomial division is not exact")
        if any(c.denominator != 1 for c in q):
            raise ArithmeticError("quotient has non-integral coefficients")
        return UniPoly(c.numerator for c in q)

    def divide_linear(self, a: int, b: int) -> tuple[UniPoly, Fraction]:
        """Divide by ``b*u - a`` over the rationals; returns (quotient, remainder).

        The quotient is returned exactly only when the remainder is zero (then
        it has integer coefficients by Gauss's lemma, since ``b*u - a`` is
        primitive for coprime a, b).
        """
        # Synthetic division by (u - a/b), then rescale by 1/b.
        r = Fraction(a, b)
        n = len(self.coeffs)
        if n == 0:
            return UniPoly(), Fraction(0)
        q = [Fraction(0)] * (n - 1)
        acc = Fraction(self.coeffs[-1])
        for k in range(n - 2, -1, -1):
            q[k] = acc
            acc = acc * r + self.coeffs[k]
        rem = acc
        if rem != 0:
            return UniPoly(), rem
        out = []
        for c in q:
            c = c / b
            if c.denominator != 1:
                raise ArithmeticError("non-integral quotient after exact division")
            out.append(c.numerator)
        return UniPoly(out), Fraction(0)


class MultiPoly:
    """Sparse multivariate integer polynomial over ``nvars`` variables.

    ``terms`` maps exponent tuples (length ``nvars``) to nonzero coefficients.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[tuple[int, ...], int] | None = None) -> None:
        self.nvars = nvars
        clean: dict[tuple[int, ...], int] = {}
        for exp, c in (terms or {}).items():
            if len(exp) != nvars:
                raise ValueError("exponent vector length does not match nvars")
            if c:
                clean[tuple(exp)] = int(c)
        self.terms = clean

    @classmethod
    def constant(cls, nvars: int, c: int) -> MultiPoly:
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, nvars: int, i: int, c: int = 1) -> MultiPoly:
        exp = [0] * nvars
        exp[i] = 1
        return cls(nvars, {tuple(exp): c})

    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = MultiPoly.constant(self.nvars, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        return f"MultiPoly({self.nvars}, {dict(sorted(self.terms.items()))})"

    def _lift(self, x: MultiPoly | int) -> MultiPoly:
        if isinstance(x, MultiPoly):
            if x.nvars != self.nvars:
                raise ValueError("variable count mismatch")
            return x
        return MultiPoly.constant(self.nvars, x)

    def __add__(self, other: MultiPoly | int) -> MultiPoly:
        out = dict(self.terms)
        for e, c in self._lift(other).terms.items():
            out[e] = out.get(e, 0) + c
        return MultiPoly(self.nvars, out)

    __radd__ = __add__

    def __neg__(self) -> MultiPoly:
        return MultiPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: MultiPoly | int) -> MultiPoly:
        return self + (-self._lift(other))

    def __rsub__(self, other: int) -> MultiPoly:
        return self._lift(other) - self

    def __mul__(self, other: MultiPoly | int) -> MultiPoly:
        o = self._lift(other)
        out: dict[tuple[int, ...], int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MultiPoly(self.nvars, out)

    __rmul__ = __mul__

    def truncate(self, max_degree: int) -> MultiPoly:
        return MultiPoly(self.nvars, {e: c for e, c in self.terms.items() if sum(e) <= max_degree})

    def mul_truncated(self, other: MultiPoly, max_degree: int) -> MultiPoly:
        out: dict[tuple[int, ...], int] = {}
        for e1, c1 in self.terms.items():
            d1 = sum(e1)
            for e2, c2 in other.terms.items():
                if d1 + sum(e2) > max_degree:
                    continue
                e = tuple(x + y for x, y in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MultiPoly(self.nvars, out)

    def substitute_zero(self, variables: Iterable[int]) -> MultiPoly:
        """Set the listed variables to 0."""
        zs = set(variables)
        return MultiPoly(
            self.nvars,
            {e: c for e, c in self.terms.items() if not any(e[i] for i in zs)},
        )

    def specialize(self) -> UniPoly:
        """Map every variable to the single variable ``u``."""
        out: dict[int, int] = {}
        for e, c in self.terms.items():
            d = sum(e)
            out[d] = out.get(d, 0) + c
        top = max(out, default=-1)
        return UniPoly(out.get(k, 0) for k in range(top + 1))

    def series_inverse(self, max_degree: int) -> MultiPoly:
        """Power-series inverse truncated at total degree ``max_degree``; needs constant term 1."""
        zero = (0,) * self.nvars
        if self.terms.get(zero) != 1:
            raise ValueError("series inverse needs constant term 1")
        rest = MultiPoly(self.nvars, {e: -c for e, c in self.terms.items() if e != zero})
        # 1/(1 - r) = 1 + r + r^2 + ...; r has no constant term so r^k has degree >= k.
        result = MultiPoly.constant(self.nvars, 1)
        power = MultiPoly.constant(self.nvars, 1)
        for _ in range(max_degree):
            power = power.mul_truncated(rest, max_degree)
            if power.is_zero():
                break
            result = result + power
        return result


# ---------------------------------------------------------------------------
# determinants
# ---------------------------------------------------------------------------

def _sparse_rows(M: Sequence[Sequence[int]]) -> list[dict[int, int]]:
    n = len(M)
    rows = []
    for i, row in enumerate(M):
        if len(row) != n:
            raise ValueError("matrix is not square")
        rows.append({j: int(x) for j, x in enumerate(row) if x})
    return rows


def berkowitz_sparse(rows: Sequence[Mapping[int, int]]) -> list[int]:
    """Coefficients of det(I - uM), lowest degree first, for a sparse integer matrix.

    ``rows[i]`` maps column index to the nonzero entry ``M[i][j]``.  This is
    the division-free Samuelson-Berkowitz recurrence over the leading
    principal submatrices.  Coefficients of det(xI - M) listed from the
    leading term down coincide with those of det(I - uM) listed upward.
    """
    n = len(rows)
    unit = all(x == 1 for row in rows for x in row.values())
    col_entries: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for r in range(n):
        for j, x in rows[r].items():
            if j > r:
                col_entries[j].append((r, x))
    p = [1]
    for i in range(n):
        t = [1, -rows[i].get(i, 0)]
        if i:
            w = [0] * i
            for r, x in col_entries[i]:
                w[r] = x
            if unit:
                # 0/1 pattern: dot products are plain sums of picked entries
                Ri = [j for j in rows[i] if j < i]
                block = [[j for j in rows[r] if j < i] for r in range(i)]
                get = w.__getitem__
                for step in range(i):
                    t.append(-sum(map(get, Ri)))
                    if step < i - 1:
                        w = [sum(map(get, b)) for b in block]
                        get = w.__getitem__
            else:
                Rv = [(j, x) for j, x in rows[i].items() if j < i]
                blockv = [[(j, x) for j, x in rows[r].items() if j < i] for r in range(i)]
                for step in range(i):
                    t.append(-sum(x * w[j] for j, x in Rv))
                    if step < i - 1:
                        w = [sum(x * w[j] for j, x in b) for b in blockv]
        # p <- Toeplitz(t) * p, truncated to degree i + 1
        L = len(t)
        q = [0] * (i + 2)
        for k in range(i + 2):
            s = 0
            for j in range(max(0, k - i), min(k, L - 1) + 1):
                s += t[j] * p[k - j]
            q[k] = s
        p = q
    return p


def reverse_charpoly(M: Sequence[Sequence[int]]) -> UniPoly:
    """det(I - uM) for a square integer matrix, exactly."""
    return UniPoly(berkowitz_sparse(_sparse_rows(M)))


def bareiss_det(M: Sequence[Sequence[Number]]) -> Number:
    """Fraction-free Gaussian elimination determinant (exact for ints and Fractions)."""
    A = [list(row) for row in M]
    n = len(A)
    if any(len(r) != n for r in A):
        raise ValueError("matrix is not square")
    if n == 0:
        return 1
    sign = 1
    prev: Number = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if A[r][k] != 0), None)
            if swap is None:
                return 0
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = A[i][j] * A[k][k] - A[i][k] * A[k][j]
                A[i][j] = num // prev if isinstance(num, int) and isinstance(prev, int) else num / prev
            A[i][k] = 0
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def multipoly_det(M: Sequence[Sequence[MultiPoly | int]], cap: int = DEFAULT_SCALE_CAP) -> MultiPoly:
    """Exact symbolic determinant by row expansion memoized on the used-column set.

    Zero entries are skipped, so the cost tracks the sparsity pattern.  The
    state space is 2**n, hence the hard cap.
    """
    n = len(M)
    if n > cap:
        raise ScaleCapExceeded(f"scale cap exceeded: dimension {n} > cap {cap}")
    nvars = next(
        (x.nvars for row in M for x in row if isinstance(x, MultiPoly)), 0
    )
    lifted: list[list[MultiPoly | None]] = []
    for row in M:
        if len(row) != n:
            raise ValueError("matrix is not square")
        out_row: list[MultiPoly | None] = []
        for x in row:
            if isinstance(x, int):
                x = MultiPoly.constant(nvars, x)
            out_row.append(None if x.is_zero() else x)
        lifted.append(out_row)
    if n == 0:
        return MultiPoly.constant(nvars, 1)
    dp: dict[int, MultiPoly] = {0: MultiPoly.constant(nvars, 1)}
    for i in range(n):
        nxt: dict[int, MultiPoly] = {}
        for mask, acc in dp.items():
            for j in range(n):
                entry = lifted[i][j]
                if entry is None or mask >> j & 1:
                    continue
                # inversions: earlier rows already sent to columns above j
                above = bin(mask >> (j + 1)).count("1")
                term = acc * entry
                if above & 1:
                    term = -term
                key = mask | (1 << j)
                nxt[key] = nxt[key] + term if key in nxt else term
        dp = {k: v for k, v in nxt.items() if not v.is_zero()}
        if not dp:
            return MultiPoly(nvars)
    return dp.get((1 << n) - 1, MultiPoly(nvars))


# ---------------------------------------------------------------------------
# roots and series
# ---------------------------------------------------------------------------

def root_multiplicity(p: UniPoly, r: Number) -> int:
    """Largest e such that (den*u - num)**e divides p, for the rational r = num/den."""
    if p.is_zero():
        raise ValueError("root multiplicity of the zero polynomial is undefined")
    r = Fraction(r)
    a, b = r.numerator, r.denominator
    e = 0
    while p.degree >= 1:
        q, rem = p.divide_linear(a, b)
        if rem != 0:
            break
        p = q
        e += 1
    return e


def series_inverse(p: UniPoly, L: int) -> UniPoly:
    """q with p*q = 1 mod u**(L+1); requires p(0) = 1."""
    if p.coefficient(0) != 1:
        raise ValueError("series inverse needs constant term 1")
    c = p.coeffs
    q = [1]
    for k in range(1, L + 1):
        q.append(-sum(c[i] * q[k - i] for i in range(1, min(k, len(c) - 1) + 1)))
    return UniPoly(q)


def product(polys: Iterable[UniPoly]) -> UniPoly:
    acc = UniPoly.constant(1)
    for f in polys:
        acc = acc * f
    return acc
