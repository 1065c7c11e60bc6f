"""Exact dense univariate polynomials over the integers.

The workhorse is repeated multiplication by sparse binomials (1 - q^m),
which expands products like ∏ (1-q^{3j+1})(1-q^{3j+2}) in O(degree) per
factor with plain Python ints as coefficients. Reference multiplication
is schoolbook; division asserts exactness. Degrees reach a few million
and coefficients a few thousand bits, so the hot loops stay on raw lists
and C-level map()/slice operations.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from operator import add, neg, sub
from typing import Iterable, Iterator

__all__ = [
    "InexactDivisionError",
    "IntPolynomial",
    "ProductSpec",
    "mul_sparse_factor",
    "mul_trunc",
    "exact_div",
    "pow_trunc",
    "gaussian_binomial",
    "expand_product",
    "eval_at",
]


class InexactDivisionError(ArithmeticError):
    """Division that was promised to be exact left a remainder."""


def _trimmed(coeffs: list[int]) -> list[int]:
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return coeffs


class IntPolynomial:
    """Immutable dense polynomial with exact integer coefficients.

    Coefficients are stored ascending by exponent with a nonzero leading
    entry; the zero polynomial stores nothing and has degree -1.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()) -> None:
        self._coeffs = tuple(_trimmed(list(coeffs)))

    @classmethod
    def zero(cls) -> "IntPolynomial":
        return cls()

    @classmethod
    def one(cls) -> "IntPolynomial":
        return cls((1,))

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> "IntPolynomial":
        if exponent < 0:
            raise ValueError(f"monomial exponent must be >= 0, got {exponent}")
        return cls([0] * exponent + [coefficient])

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        return len(self._coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __len__(self) -> int:
        return len(self._coeffs)

    def __iter__(self) -> Iterator[int]:
        return iter(self._coeffs)

    def __getitem__(self, exponent: int) -> int:
        """Coefficient at an exponent; 0 outside the stored range."""
        if 0 <= exponent < len(self._coeffs):
            return self._coeffs[exponent]
        return 0

    def __eq__(self, other: object) -> bool:
        if isinstance(other, IntPolynomial):
            return self._coeffs == other._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(map(neg, self._coeffs))

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        return IntPolynomial(list(map(add, a, b)) + list(a[len(b):]))

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other: "IntPolynomial | int") -> "IntPolynomial":
        if isinstance(other, int):
            return IntPolynomial(c * other for c in self._coeffs)
        if isinstance(other, IntPolynomial):
            return mul_trunc(self, other)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "IntPolynomial":
        return pow_trunc(self, e)

    def __call__(self, x: int) -> int:
        return eval_at(self, x)

    def shift(self, m: int) -> "IntPolynomial":
        """Multiply by q^m."""
        if m < 0:
            raise ValueError(f"shift must be >= 0, got {m}")
        if not self._coeffs:
            return self
        return IntPolynomial((0,) * m + self._coeffs)

    def truncate(self, max_degree: int) -> "IntPolynomial":
        """Drop all terms with exponent above max_degree."""
        if max_degree < 0:
            return IntPolynomial()
        return IntPolynomial(self._coeffs[: max_degree + 1])

    def reverse(self) -> "IntPolynomial":
        """Coefficients reversed end to end (q^deg · P(1/q) for nonzero P)."""
        return IntPolynomial(self._coeffs[::-1])

    def is_palindromic(self) -> bool:
        return self._coeffs == self._coeffs[::-1]

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self._coeffs)!r})"

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts: list[str] = []
        for e, c in enumerate(self._coeffs):
            if not c:
                continue
            mag = "" if abs(c) == 1 and e else str(abs(c))
            var = "" if e == 0 else ("q" if e == 1 else f"q^{e}")
            term = mag + ("*" if mag and var else "") + var if (mag or var) else "1"
            parts.append(("-" if c < 0 else "+") + term)
        out = " ".join(parts)
        return out[1:] if out.startswith("+") else out


# ---------------------------------------------------------------------------
# raw-list kernels (internal): no trimming, bound = max number of coefficients

def _sparse_step(p: list[int], m: int, bound: int | None) -> list[int]:
    """p · (1 - q^m) on raw coefficient lists: c_e = p_e - p_{e-m}."""
    n = len(p)
    if not n:
        return []
    full = n + m
    if bound is None or bound >= full:
        if m >= n:
            return p + [0] * (m - n) + list(map(neg, p))
        return p[:m] + list(map(sub, p[m:], p[: n - m])) + list(map(neg, p[n - m :]))
    if bound <= m:
        return p[:bound]
    if m >= n:
        return p + [0] * (m - n) + list(map(neg, p[: bound - m]))
    if bound <= n:
        return p[:m] + list(map(sub, p[m:bound], p[: bound - m]))
    return (
        p[:m]
        + list(map(sub, p[m:], p[: n - m]))
        + list(map(neg, p[n - m : bound - m]))
    )


def _mul_lists(p: list[int], q: list[int], bound: int | None) -> list[int]:
    """Schoolbook product on raw lists, keeping exponents < bound."""
    if not p or not q:
        return []
    full = len(p) + len(q) - 1
    if bound is None or bound > full:
        bound = full
    if len(p) > len(q):
        p, q = q, p
    out = [0] * bound
    for i, a in enumerate(p):
        if i >= bound:
            break
        if not a:
            continue
        hi = min(len(q), bound - i)
        seg = out[i : i + hi]
        if a == 1:
            out[i : i + hi] = list(map(add, seg, q[:hi]))
        elif a == -1:
            out[i : i + hi] = list(map(sub, seg, q[:hi]))
        else:
            out[i : i + hi] = [x + a * y for x, y in zip(seg, q)]
    return out


def _pow_lists(p: list[int], e: int, bound: int | None) -> list[int]:
    result = [1]
    base = p[:]
    while e:
        if e & 1:
            result = _mul_lists(result, base, bound)
        e >>= 1
        if e:
            base = _mul_lists(base, base, bound)
    return result


# ---------------------------------------------------------------------------
# public operations


def mul_sparse_factor(
    P: IntPolynomial, m: int, trunc: int | None = None
) -> IntPolynomial:
    """P · (1 - q^m), optionally truncated to degree trunc."""
    if m < 1:
        raise ValueError(f"sparse factor exponent must be >= 1, got {m}")
    bound = None if trunc is None else trunc + 1
    return IntPolynomial(_sparse_step(list(P.coeffs), m, bound))


def mul_trunc(
    P: IntPolynomial, Q: IntPolynomial, trunc: int | None = None
) -> IntPolynomial:
    """Exact product P·Q, optionally truncated to degree trunc."""
    bound = None if trunc is None else trunc + 1
    return IntPolynomial(_mul_lists(list(P.coeffs), list(Q.coeffs), bound))


def pow_trunc(P: IntPolynomial, e: int, trunc: int | None = None) -> IntPolynomial:
    """P^e by binary powering, optionally truncated to degree trunc."""
    if e < 0:
        raise ValueError(f"exponent must be >= 0, got {e}")
    bound = None if trunc is None else trunc + 1
    return IntPolynomial(_pow_lists(list(P.coeffs), e, bound))


def exact_div(P: IntPolynomial, Q: IntPolynomial) -> IntPolynomial:
    """The R with R·Q = P exactly; anything inexact is an error.

    Long division by the leading coefficient. If the true quotient has
    integer coefficients, every leading step divides exactly, so any
    remainder (intermediate or final) proves P is not a multiple of Q.
    """
    if Q.is_zero:
        raise ZeroDivisionError("polynomial division by zero")
    if P.is_zero:
        return IntPolynomial()
    q = list(Q.coeffs)
    rem = list(P.coeffs)
    dq = len(q) - 1
    lead = q[-1]
    if len(rem) - 1 < dq:
        raise InexactDivisionError(f"degree {len(rem)-1} < divisor degree {dq}")
    quot = [0] * (len(rem) - dq)
    for i in range(len(rem) - 1, dq - 1, -1):
        c = rem[i]
        if not c:
            continue
        f, r = divmod(c, lead)
        if r:
            raise InexactDivisionError(
                f"leading coefficient {c} not divisible by {lead} at exponent {i}"
            )
        quot[i - dq] = f
        off = i - dq
        for j, b in enumerate(q):
            if b:
                rem[off + j] -= f * b
    if any(rem):
        raise InexactDivisionError("nonzero remainder")
    return IntPolynomial(quot)


def eval_at(P: IntPolynomial, x: int) -> int:
    """Exact Horner evaluation of P at an integer."""
    result = 0
    for c in reversed(P.coeffs):
        result = result * x + c
    return result


@lru_cache(maxsize=2)
def _gaussian_row(n: int) -> tuple[IntPolynomial, ...]:
    """Row n of the q-Pascal triangle: ([n;0]_q, ..., [n;n]_q)."""
    row: list[list[int]] = [[1]]
    for r in range(1, n + 1):
        new: list[list[int]] = [[1]]
        for j in range(1, r):
            shifted = [0] * j + row[j]
            prev = row[j - 1]
            if len(prev) < len(shifted):
                prev, shifted = shifted, prev
            new.append(list(map(add, prev, shifted)) + prev[len(shifted):])
        new.append([1])
        row = new
    return tuple(IntPolynomial(entry) for entry in row)


def gaussian_binomial(n: int, k: int) -> IntPolynomial:
    """The q-binomial [n; k]_q via the q-Pascal recurrence.

    [n;k] = [n-1;k-1] + q^k·[n-1;k]; out-of-range k gives the zero
    polynomial. Palindromic of degree k(n-k), with [n;k](1) = C(n,k).
    """
    if n < 0:
        raise ValueError(f"gaussian_binomial needs n >= 0, got {n}")
    if k < 0 or k > n:
        return IntPolynomial()
    return _gaussian_row(n)[k]


@dataclass(frozen=True)
class ProductSpec:
    """Finite product ∏_{j=0..upper_index} ∏_{r∈residues} (1 - q^{modulus·j+r})^multiplicity.

    residues live in [1, modulus); residue 0 is rejected because j = 0
    would contribute the degenerate factor 1 - q^0 = 0. truncation, when
    set, is the largest exponent kept (inclusive).
    """

    modulus: int
    residues: frozenset[int]
    upper_index: int
    multiplicity: int = 1
    truncation: int | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "residues", frozenset(self.residues))
        if self.modulus < 1:
            raise ValueError(f"modulus must be >= 1, got {self.modulus}")
        if not self.residues:
            raise ValueError("residues must be nonempty")
        if any(r < 0 or r >= self.modulus for r in self.residues):
            raise ValueError(
                f"residues must lie in [0, {self.modulus}), got {sorted(self.residues)}"
            )
        if 0 in self.residues:
            raise ValueError("residue 0 yields the degenerate factor 1 - q^0")
        if self.multiplicity < 1:
            raise ValueError(f"multiplicity must be >= 1, got {self.multiplicity}")
        if self.upper_index < 0:
            raise ValueError(f"upper_index must be >= 0, got {self.upper_index}")
        if self.truncation is not None and self.truncation < 0:
            raise ValueError(f"truncation must be >= 0, got {self.truncation}")

    def exponents(self) -> Iterator[int]:
        """Factor exponents in ascending order, multiplicity included."""
        residues = sorted(self.residues)
        for j in range(self.upper_index + 1):
            base = self.modulus * j
            for r in residues:
                for _ in range(self.multiplicity):
                    yield base + r

    @property
    def full_degree(self) -> int:
        """Degree of the untruncated expansion: sum of all factor exponents."""
        residues = sorted(self.residues)
        per_block = len(residues)
        j_sum = self.upper_index * (self.upper_index + 1) // 2
        return self.multiplicity * (
            self.modulus * per_block * j_sum + sum(residues) * (self.upper_index + 1)
        )


def expand_product(spec: ProductSpec) -> IntPolynomial:
    """Expand the product described by spec exactly.

    One sparse-factor pass per factor, ascending exponent order; factors
    whose exponent exceeds the truncation cannot change kept terms and
    are skipped.
    """
    bound = None if spec.truncation is None else spec.truncation + 1
    coeffs = [1]
    for m in spec.exponents():
        if bound is not None and m >= bound:
            break
        coeffs = _sparse_step(coeffs, m, bound)
    return IntPolynomial(coeffs)
