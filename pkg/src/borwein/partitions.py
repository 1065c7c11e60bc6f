"""Partition-theoretic checks for the infinite-product analogs.

The n = ∞ analog of the Borwein product for a prime p is the eta
quotient ∏_{p∤n} (1-q^n) with coefficients a_{p,j}. This module builds
truncated prefixes of it, evaluates Euler's pentagonal series, counts
restricted partitions, implements the two-term partition formula for
a_{p,pk} (Stanley's formula), and checks sign coherence of coefficient
pairs at distance p.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exactmath import is_prime
from .qpoly import IntPolynomial, ProductSpec, expand_product
from .report import ReportDocument, Violation, new_report

__all__ = [
    "RestrictedPartitionSpec",
    "EtaQuotientPrefix",
    "pentagonal_series",
    "eta_quotient_coeffs",
    "restricted_partition_count",
    "restricted_partition_counts",
    "stanley_rhs",
    "verify_stanley",
    "sign_coherence_check",
]


@dataclass(frozen=True)
class RestrictedPartitionSpec:
    """Parts are positive integers whose residue mod `modulus` is allowed.

    forbidden is reduced into [0, modulus) and deduplicated on
    construction; an empty forbidden set gives unrestricted partitions.
    """

    modulus: int
    forbidden: frozenset[int]

    def __post_init__(self) -> None:
        if self.modulus < 1:
            raise ValueError(f"modulus must be >= 1, got {self.modulus}")
        object.__setattr__(
            self, "forbidden", frozenset(r % self.modulus for r in self.forbidden)
        )

    def allows(self, part: int) -> bool:
        return part >= 1 and (part % self.modulus) not in self.forbidden


@dataclass(frozen=True)
class EtaQuotientPrefix:
    """Coefficients a_{p,0..J} of ∏_{n>=1, p∤n} (1-q^n), truncated at J."""

    p: int
    truncation: int
    poly: IntPolynomial

    @property
    def coefficients(self) -> tuple[int, ...]:
        """Exactly truncation+1 entries, trailing zeros included."""
        cs = self.poly.coeffs
        return cs + (0,) * (self.truncation + 1 - len(cs))

    def coefficient(self, j: int) -> int:
        if not 0 <= j <= self.truncation:
            raise IndexError(f"exponent {j} outside truncated range 0..{self.truncation}")
        return self.poly[j]


def pentagonal_series(J: int) -> IntPolynomial:
    """Euler's pentagonal series Σ_{m∈Z} (-1)^m q^{m(3m-1)/2} through degree J."""
    if J < 0:
        raise ValueError(f"pentagonal_series needs J >= 0, got {J}")
    coeffs = [0] * (J + 1)
    coeffs[0] = 1
    m = 1
    while m * (3 * m - 1) // 2 <= J:
        sign = -1 if m & 1 else 1
        coeffs[m * (3 * m - 1) // 2] += sign
        if m * (3 * m + 1) // 2 <= J:
            coeffs[m * (3 * m + 1) // 2] += sign
        m += 1
    return IntPolynomial(coeffs)


def eta_quotient_coeffs(p: int, J: int) -> EtaQuotientPrefix:
    """Truncated expansion of ∏_{n<=J, p∤n} (1-q^n)."""
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    if J < 0:
        raise ValueError(f"truncation must be >= 0, got {J}")
    if J == 0:
        return EtaQuotientPrefix(p=p, truncation=0, poly=IntPolynomial.one())
    spec = ProductSpec(
        modulus=p,
        residues=frozenset(range(1, p)),
        upper_index=J // p,
        truncation=J,
    )
    return EtaQuotientPrefix(p=p, truncation=J, poly=expand_product(spec))


def restricted_partition_counts(
    spec: RestrictedPartitionSpec, kmax: int
) -> tuple[int, ...]:
    """Vector of partition counts 0..kmax in one DP sweep over parts."""
    if kmax < 0:
        return ()
    dp = [0] * (kmax + 1)
    dp[0] = 1
    for part in range(1, kmax + 1):
        if not spec.allows(part):
            continue
        for s in range(part, kmax + 1):
            dp[s] += dp[s - part]
    return tuple(dp)


def restricted_partition_count(k: int, spec: RestrictedPartitionSpec) -> int:
    """Partitions of k into allowed parts; 0 for negative k, 1 for k = 0."""
    if k < 0:
        return 0
    return restricted_partition_counts(spec, k)[k]


def _stanley_pieces(
    p: int,
) -> tuple[RestrictedPartitionSpec, RestrictedPartitionSpec | None, int, int]:
    """(first spec, second spec or None, derived offset, t) for a prime p."""
    if p == 2:
        raise ValueError(
            "p = 2 is unsupported: no odd-residue split of 3p exists for it"
        )
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    m = 3 * p
    first = RestrictedPartitionSpec(
        modulus=m, forbidden=frozenset({0, (3 * p - 1) // 2, (3 * p + 1) // 2})
    )
    if p == 3:
        # no positive t has 3 | 3t+1, so the second subseries is absent
        return first, None, 0, 0
    t = 1 if p % 3 == 2 else 2
    second = RestrictedPartitionSpec(
        modulus=m,
        forbidden=frozenset(
            {
                0,
                ((3 - 2 * t) * p - 1) // 2 % m,
                ((3 + 2 * t) * p + 1) // 2 % m,
            }
        ),
    )
    # minimal exponent of the recentered second pentagonal subseries;
    # equals the often-quoted t(pt+1)/6 only when t = 1
    delta = (p + 1) // 6 if t == 1 else (p - 1) // 6
    return first, second, delta, t


def stanley_rhs(p: int, k: int) -> int:
    """Two-term partition value equal to a_{p,pk}.

    P_{≢0,(3p-1)/2,(3p+1)/2 (mod 3p)}(k) plus, for p > 3, the second
    restricted count at k - Δ with residues ((3∓2t)p∓1)/2 reduced mod 3p.
    Both terms enter positively; the pentagonal signs are absorbed by
    the recentering.
    """
    first, second, delta, _ = _stanley_pieces(p)
    if k < 0:
        return 0
    value = restricted_partition_count(k, first)
    if second is not None:
        value += restricted_partition_count(k - delta, second)
    return value


def verify_stanley(p: int, K: int) -> ReportDocument:
    """Check a_{p,pk} = stanley_rhs(p, k) for all 0 <= k <= K.

    For p ≡ 1 (mod 3) the report also records how the often-quoted
    offset t(pt+1)/6 behaves; its first mismatch is data, not a
    violation, because the derived offset is the validated contract.
    """
    doc = new_report("stanley", {"p": p, "k_max": K})
    first, second, delta, t = _stanley_pieces(p)
    prefix = eta_quotient_coeffs(p, p * K)
    first_counts = restricted_partition_counts(first, K)
    second_counts = (
        restricted_partition_counts(second, K) if second is not None else ()
    )
    mismatches = 0
    for k in range(K + 1):
        rhs = first_counts[k]
        if second is not None and k - delta >= 0:
            rhs += second_counts[k - delta]
        lhs = prefix.coefficient(p * k)
        if lhs != rhs:
            mismatches += 1
            doc.violations.append(
                Violation(
                    kind="partition-formula-mismatch",
                    location={"p": p, "k": k},
                    value=lhs,
                    expected=str(rhs),
                )
            )
    doc.data["offset"] = delta
    doc.data["t"] = t
    if second is not None:
        printed_delta = t * (p * t + 1) // 6
        doc.data["quoted_offset"] = printed_delta
        if printed_delta != delta:
            witness = None
            for k in range(K + 1):
                rhs = first_counts[k]
                shifted = k - printed_delta
                if shifted >= 0:
                    rhs += second_counts[shifted]
                if prefix.coefficient(p * k) != rhs:
                    witness = {"k": k, "lhs": prefix.coefficient(p * k), "rhs": rhs}
                    break
            doc.data["quoted_offset_first_mismatch"] = witness
    return doc.finish()


def sign_coherence_check(p: int, J: int) -> ReportDocument:
    """Check a_{p,j}·a_{p,j+p} >= 0 for all 0 <= j <= J-p."""
    doc = new_report("coherence", {"p": p, "j_max": J})
    prefix = eta_quotient_coeffs(p, J)
    cs = prefix.coefficients
    for j in range(J - p + 1):
        if cs[j] * cs[j + p] < 0:
            doc.violations.append(
                Violation(
                    kind="sign-incoherence",
                    location={"p": p, "exponent": j},
                    value=cs[j] * cs[j + p],
                    expected=">=0",
                )
            )
    doc.data["truncation"] = J
    return doc.finish()
