"""Closed-form quantities for clique statistics in G(n,p).

Everything here is a pure function of exact inputs: p enters as a
rational, so in exact mode all weights, moments and ratios are exact
rationals and identities can be tested as equalities.  Transcendental
quantities (the window center z, the Stirling constant, classification
thresholds) are evaluated with 30 significant digits via mpmath before
rounding to float, and every floor/threshold comparison carries a 1e-9
guard band so values that are exactly integral do not flip on rounding.

The central objects are the s-by-s intersection-type matrices A with all
row and column sums at most r (the family D), their combinatorial weight
F_A, overlap exponent L(A) = sum of C(a_ij, 2), and total term
T_A = F_A * q**L(A) with q = 1/p.  Summing T_A over D gives the exact
second-moment ratio E(X^2)/E(X)^2 for the count X of ordered s-tuples of
pairwise disjoint r-cliques.
"""

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import product
from typing import Iterator

import mpmath

from .errors import AsymptoticRegimeError, DomainError, DTooLargeError
from .scalars import EXACT, LOG, Scalar

_DPS = 30
_GUARD = 1e-9
DEFAULT_D_CAP = 10_000_000


def _as_probability(p) -> Fraction:
    p = Fraction(p)
    if not 0 < p < 1:
        raise DomainError("p must be a rational strictly between 0 and 1")
    return p


@dataclass(frozen=True)
class ModelParams:
    """Shared parameter bundle: n vertices, edge probability p (exact
    rational in (0,1)), resolution epsilon > 0, and part count s >= 1."""

    n: int
    p: Fraction
    epsilon: Fraction
    s: int = 2

    def __post_init__(self):
        if self.n < 2:
            raise DomainError("n must be at least 2")
        object.__setattr__(self, "p", _as_probability(self.p))
        eps = Fraction(self.epsilon)
        if eps <= 0:
            raise DomainError("epsilon must be positive")
        object.__setattr__(self, "epsilon", eps)
        if self.s < 1:
            raise DomainError("s must be at least 1")

    @property
    def q(self) -> Fraction:
        return 1 / self.p


class EntryClass(Enum):
    SHORT = "short"
    INTERMEDIATE = "intermediate"
    LARGE = "large"


@dataclass(frozen=True)
class IntersectionMatrix:
    """s-by-s matrix of non-negative overlap counts with every row sum
    and column sum at most r (membership in the family D)."""

    entries: tuple[tuple[int, ...], ...]
    r: int

    def __post_init__(self):
        s = len(self.entries)
        if s < 1:
            raise DomainError("matrix must be at least 1x1")
        for row in self.entries:
            if len(row) != s:
                raise DomainError("matrix must be square")
            for a in row:
                if not isinstance(a, int) or a < 0:
                    raise DomainError("entries must be non-negative integers")
        if self.r < 0:
            raise DomainError("r must be non-negative")
        if any(sum(row) > self.r for row in self.entries):
            raise DomainError("a row sum exceeds r: matrix not in D")
        if any(sum(col) > self.r for col in zip(*self.entries)):
            raise DomainError("a column sum exceeds r: matrix not in D")

    @property
    def s(self) -> int:
        return len(self.entries)

    def row_sums(self) -> tuple[int, ...]:
        return tuple(sum(row) for row in self.entries)

    def col_sums(self) -> tuple[int, ...]:
        return tuple(sum(col) for col in zip(*self.entries))

    def total(self) -> int:
        return sum(self.row_sums())

    def is_zero(self) -> bool:
        return self.total() == 0

    def bumped(self, i: int, j: int, by: int = 1) -> "IntersectionMatrix":
        """Copy with entry (i, j) increased (0-indexed); revalidates D."""
        rows = [list(row) for row in self.entries]
        rows[i][j] += by
        return IntersectionMatrix(tuple(tuple(row) for row in rows), self.r)

    def permuted_columns(self, perm: tuple[int, ...]) -> "IntersectionMatrix":
        return IntersectionMatrix(
            tuple(tuple(row[perm[j]] for j in range(self.s)) for row in self.entries),
            self.r,
        )


def zero_matrix(s: int, r: int) -> IntersectionMatrix:
    return IntersectionMatrix(tuple(tuple(0 for _ in range(s)) for _ in range(s)), r)


# ---------------------------------------------------------------------
# window center z and derived integers
# ---------------------------------------------------------------------

def _ln_q(p: Fraction) -> mpmath.mpf:
    return mpmath.log(p.denominator) - mpmath.log(p.numerator)


def _z_mpf(n: int, p: Fraction) -> mpmath.mpf:
    if n < 2:
        raise DomainError("z is defined for n >= 2")
    p = _as_probability(p)
    lnq = _ln_q(p)
    logq_n = mpmath.log(n) / lnq
    logq_logq_n = mpmath.log(logq_n) / lnq
    logq_e_half = (1 - mpmath.log(2)) / lnq
    return 2 * logq_n - 2 * logq_logq_n + 2 * logq_e_half + 1


def z_value(n: int, p) -> float:
    """Window center z = 2 log_q n - 2 log_q log_q n + 2 log_q(e/2) + 1,
    with q = 1/p, evaluated at 30 significant digits and returned as
    float."""
    with mpmath.workdps(_DPS):
        return float(_z_mpf(n, Fraction(p)))


def _floor_guarded(x: mpmath.mpf) -> int:
    """floor with a 1e-9 guard band: values within 1e-9 below an integer
    round up to it."""
    f = int(mpmath.floor(x))
    if x - f > 1 - _GUARD:
        f += 1
    return f


def window_bounds(n: int, p, epsilon) -> tuple[int, int]:
    """(floor(z - eps), floor(z + eps)): the concentration window for the
    clique number."""
    eps = Fraction(epsilon)
    if eps <= 0:
        raise DomainError("epsilon must be positive")
    with mpmath.workdps(_DPS):
        z = _z_mpf(n, Fraction(p))
        e = mpmath.mpf(eps.numerator) / eps.denominator
        return _floor_guarded(z - e), _floor_guarded(z + e)


def clique_target_r(n: int, p, epsilon) -> int:
    """floor(z - eps); raises AsymptoticRegimeError when the result is
    below 1 (the target size is not meaningful at this n)."""
    lo, _ = window_bounds(n, p, epsilon)
    if lo < 1:
        raise AsymptoticRegimeError(
            f"floor(z - eps) = {lo} < 1 at n={n}: asymptotic regime not reached"
        )
    return lo


# ---------------------------------------------------------------------
# exact combinatorial counts
# ---------------------------------------------------------------------

def multinomial(a: int, parts) -> int:
    """a! / (prod(parts!) * (a - sum(parts))!) as an exact integer."""
    if a < 0:
        raise DomainError("multinomial total must be non-negative")
    remaining = a
    out = 1
    for b in parts:
        if b < 0:
            raise DomainError("multinomial parts must be non-negative")
        if b > remaining:
            raise DomainError(f"multinomial parts sum beyond total {a}")
        out *= math.comb(remaining, b)
        remaining -= b
    return out


def _log_multinomial(a: int, parts) -> float:
    out = math.lgamma(a + 1)
    rest = a
    for b in parts:
        out -= math.lgamma(b + 1)
        rest -= b
    return out - math.lgamma(rest + 1)


def expected_multicliques(n: int, p, r: int, s: int, mode: str = EXACT) -> Scalar:
    """E of the number of ordered s-tuples of pairwise disjoint
    r-cliques: multinomial(n; r,...,r) * p**(s*C(r,2))."""
    return growth_term(n, p, r, 0, s, mode)


def growth_term(n: int, p, r: int, k: int, m: int, mode: str = EXACT) -> Scalar:
    """r**(-k) * multinomial(n; r,...,r) (m blocks) * p**(m*C(r,2)).

    The m = s, k = 0 case is the expected multi-clique count; general
    (k, m) is the quantity whose divergence drives the tail bounds."""
    p = _as_probability(p)
    if m < 1:
        raise DomainError("m must be at least 1")
    if k < 0:
        raise DomainError("k must be non-negative")
    if r < 0 or m * r > n:
        raise DomainError("need 0 <= m*r <= n")
    if r == 0 and k > 0:
        raise DomainError("r**(-k) undefined at r = 0")
    exponent = m * math.comb(r, 2)
    if mode == EXACT:
        value = Fraction(multinomial(n, [r] * m)) * p**exponent / r**k if k else \
            Fraction(multinomial(n, [r] * m)) * p**exponent
        return Scalar.exact(value)
    if mode != LOG:
        raise DomainError(f"unknown mode {mode!r}")
    log_p = math.log(p.numerator) - math.log(p.denominator)
    log_value = _log_multinomial(n, [r] * m) + exponent * log_p
    if k:
        log_value -= k * math.log(r)
    return Scalar.from_log(log_value)


# ---------------------------------------------------------------------
# the family D and the weights F, L, T
# ---------------------------------------------------------------------

def d_size_estimate(s: int, r: int) -> int:
    """Upper bound on |D|: rows chosen independently with sum <= r."""
    return math.comb(r + s, s) ** s


def enumerate_D(s: int, r: int, cap: int = DEFAULT_D_CAP) -> Iterator[IntersectionMatrix]:
    """Stream every s-by-s matrix with non-negative entries and all row
    and column sums <= r, in row-major lexicographic order.  Raises
    DTooLargeError when the size estimate exceeds `cap`."""
    if s < 1 or r < 0:
        raise DomainError("need s >= 1 and r >= 0")
    if cap and d_size_estimate(s, r) > cap:
        raise DTooLargeError(
            f"|D| estimate {d_size_estimate(s, r)} exceeds cap {cap} for s={s}, r={r}"
        )
    row_rem = [r] * s
    col_rem = [r] * s
    flat = [0] * (s * s)

    def rec(pos: int) -> Iterator[IntersectionMatrix]:
        if pos == s * s:
            yield IntersectionMatrix(
                tuple(tuple(flat[i * s : (i + 1) * s]) for i in range(s)), r
            )
            return
        i, j = divmod(pos, s)
        top = min(row_rem[i], col_rem[j])
        for val in range(top + 1):
            flat[pos] = val
            row_rem[i] -= val
            col_rem[j] -= val
            yield from rec(pos + 1)
            row_rem[i] += val
            col_rem[j] += val
        flat[pos] = 0

    yield from rec(0)


def d_size(s: int, r: int, cap: int = DEFAULT_D_CAP) -> int:
    """Exact |D| by streaming."""
    return sum(1 for _ in enumerate_D(s, r, cap))


def weight_L(A: IntersectionMatrix) -> int:
    """Overlap exponent L(A) = sum over entries of C(a_ij, 2)."""
    return sum(math.comb(a, 2) for row in A.entries for a in row)


def _check_matrix(n: int, r: int, s: int, A: IntersectionMatrix) -> None:
    if A.r != r or A.s != s:
        raise DomainError(f"matrix is {A.s}x{A.s} with bound {A.r}, expected {s}x{s} bound {r}")
    if s < 1 or r < 0 or s * r > n:
        raise DomainError("need s >= 1, r >= 0 and s*r <= n")


def _weight_f_numerator(n: int, r: int, s: int, A: IntersectionMatrix) -> int:
    """Integer numerator of F_A over the common denominator
    multinomial(n; r,...,r); 0 when no pair of disjoint-r-tuples has
    intersection type A."""
    deficits = [r - rs for rs in A.row_sums()]
    if sum(deficits) > n - s * r:
        return 0
    num = multinomial(n - s * r, deficits)
    for col in zip(*A.entries):
        num *= multinomial(r, col)
    return num


def weight_F(n: int, r: int, s: int, A: IntersectionMatrix, mode: str = EXACT) -> Scalar:
    """Fraction of ordered pairs of disjoint r-tuple families whose
    intersection type is A:

        F_A = prod_i multinomial(r; column_i) *
              multinomial(n - s*r; r - rowsum_1, ..., r - rowsum_s) /
              multinomial(n; r, ..., r)

    Zero when the middle multinomial is infeasible."""
    _check_matrix(n, r, s, A)
    if mode == EXACT:
        num = _weight_f_numerator(n, r, s, A)
        if num == 0:
            return Scalar.exact(0)
        return Scalar.exact(Fraction(num, multinomial(n, [r] * s)))
    if mode != LOG:
        raise DomainError(f"unknown mode {mode!r}")
    deficits = [r - rs for rs in A.row_sums()]
    if sum(deficits) > n - s * r:
        return Scalar.zero(LOG)
    log_num = _log_multinomial(n - s * r, deficits)
    for col in zip(*A.entries):
        log_num += _log_multinomial(r, col)
    return Scalar.from_log(log_num - _log_multinomial(n, [r] * s))


def weight_T(n: int, p, r: int, s: int, A: IntersectionMatrix, mode: str = EXACT) -> Scalar:
    """T_A = F_A * q**L(A) with q = 1/p."""
    p = _as_probability(p)
    f = weight_F(n, r, s, A, mode)
    ell = weight_L(A)
    if mode == EXACT:
        return Scalar.exact(f.as_fraction() * (1 / p) ** ell)
    log_q = math.log(p.denominator) - math.log(p.numerator)
    return Scalar.from_log(f.log_value() + ell * log_q)


def sum_F_over_D(n: int, r: int, s: int, mode: str = EXACT, cap: int = DEFAULT_D_CAP) -> Scalar:
    """Sum of F_A over D; exactly 1 in exact mode, because numerator and
    denominator both count pairs of disjoint r-tuple families."""
    if s < 1 or r < 0 or s * r > n:
        raise DomainError("need s >= 1, r >= 0 and s*r <= n")
    if mode == EXACT:
        total = 0
        for A in enumerate_D(s, r, cap):
            total += _weight_f_numerator(n, r, s, A)
        return Scalar.exact(Fraction(total, multinomial(n, [r] * s)))
    acc = Scalar.zero(LOG)
    for A in enumerate_D(s, r, cap):
        acc = acc + weight_F(n, r, s, A, LOG)
    return acc


def second_moment_ratio(n: int, p, r: int, s: int, mode: str = EXACT,
                        cap: int = DEFAULT_D_CAP) -> Scalar:
    """E(X^2)/E(X)^2 for the ordered multi-clique count X, as the exact
    sum of T_A over D.  Always >= 1."""
    p = _as_probability(p)
    if s < 1 or r < 0 or s * r > n:
        raise DomainError("need s >= 1, r >= 0 and s*r <= n")
    if mode == EXACT:
        q = 1 / p
        total = Fraction(0)
        for A in enumerate_D(s, r, cap):
            num = _weight_f_numerator(n, r, s, A)
            if num:
                total += num * q ** weight_L(A)
        return Scalar.exact(total / multinomial(n, [r] * s))
    acc = Scalar.zero(LOG)
    for A in enumerate_D(s, r, cap):
        t = weight_T(n, p, r, s, A, LOG)
        if not t.is_zero:
            acc = acc + t
    return acc


# ---------------------------------------------------------------------
# term-by-term diagnostics
# ---------------------------------------------------------------------

@dataclass(frozen=True)
class TZeroCheck:
    t0: Scalar
    bound: float
    holds: bool


def t_zero_check(n: int, p, r: int, s: int) -> TZeroCheck:
    """T at the zero matrix (exact product form) against the closed lower
    bound (1 - 2*s*r^2/(n - s*r + 1))**(s/2).

    The bound may be negative (then it holds trivially); for odd s and a
    negative base the s/2 power is taken as the odd real extension
    sign(base)*|base|**(s/2)."""
    _as_probability(p)
    if s < 1 or r < 0 or s * r > n:
        raise DomainError("need s >= 1, r >= 0 and s*r <= n")
    t0 = Fraction(1)
    for k in range(s * r):
        t0 *= Fraction(n - k - s * r, n - k)
    base = 1 - Fraction(2 * s * r * r, n - s * r + 1)
    with mpmath.workdps(_DPS):
        base_mpf = mpmath.mpf(base.numerator) / base.denominator
        if base_mpf >= 0:
            bound = base_mpf ** (mpmath.mpf(s) / 2)
        else:
            bound = -((-base_mpf) ** (mpmath.mpf(s) / 2))
        t0_mpf = mpmath.mpf(t0.numerator) / t0.denominator
        holds = bool(bound <= 0 or t0_mpf >= bound)
        return TZeroCheck(Scalar.exact(t0), float(bound), holds)


def _increment_context(n: int, r: int, s: int, A: IntersectionMatrix, i: int, j: int,
                       steps: int) -> tuple[int, int, int, int]:
    """Common validation for the entry-increment ratios; returns
    (a, row_i, col_j, total)."""
    _check_matrix(n, r, s, A)
    if not (0 <= i < s and 0 <= j < s):
        raise DomainError("entry position out of range (0-indexed)")
    a = A.entries[i][j]
    row_i = A.row_sums()[i]
    col_j = A.col_sums()[j]
    if row_i + steps > r or col_j + steps > r:
        raise DomainError(f"adding {steps} at ({i},{j}) leaves D")
    return a, row_i, col_j, A.total()


def increment_ratio(n: int, p, r: int, s: int, A: IntersectionMatrix,
                    i: int, j: int, mode: str = EXACT) -> Scalar:
    """Closed form for T(A + e_ij) / T(A) (0-indexed entry):

        (r - colsum_j)(r - rowsum_i) q**a
        --------------------------------------------
        (a + 1)(n - 2*s*r + total(A) + 1)

    Equals the direct weight quotient exactly whenever both weights are
    nonzero."""
    p = _as_probability(p)
    a, row_i, col_j, tot = _increment_context(n, r, s, A, i, j, 1)
    den_n = n - 2 * s * r + tot + 1
    if den_n <= 0:
        raise DomainError("ratio undefined: both weights vanish at this n")
    if mode == EXACT:
        q = 1 / p
        value = Fraction((r - col_j) * (r - row_i), (a + 1) * den_n) * q**a
        return Scalar.exact(value)
    if mode != LOG:
        raise DomainError(f"unknown mode {mode!r}")
    log_q = math.log(p.denominator) - math.log(p.numerator)
    log_value = (
        math.log(r - col_j) + math.log(r - row_i) + a * log_q
        - math.log(a + 1) - math.log(den_n)
    )
    return Scalar.from_log(log_value)


def convexity_ratio(n: int, p, r: int, s: int, A: IntersectionMatrix,
                    i: int, j: int, mode: str = EXACT) -> Scalar:
    """Closed form for T(B2) * T(A) / T(B1)**2 where B1, B2 add 1 and 2
    to entry (i, j):

        (r - colsum_j - 1)(r - rowsum_i - 1)   a + 1   N + 1
        ------------------------------------ * ----- * ----- * q
        (r - colsum_j)(r - rowsum_i)           a + 2   N + 2

    with N = n - 2*s*r + total(A).  Being > 1 makes log T convex along
    the entry; the factor tends to q as n grows."""
    p = _as_probability(p)
    a, row_i, col_j, tot = _increment_context(n, r, s, A, i, j, 2)
    big_n = n - 2 * s * r + tot
    if big_n + 1 <= 0:
        raise DomainError("ratio undefined: weights vanish at this n")
    if mode == EXACT:
        q = 1 / p
        value = (
            Fraction((r - col_j - 1) * (r - row_i - 1), (r - col_j) * (r - row_i))
            * Fraction(a + 1, a + 2)
            * Fraction(big_n + 1, big_n + 2)
            * q
        )
        return Scalar.exact(value)
    if mode != LOG:
        raise DomainError(f"unknown mode {mode!r}")
    log_q = math.log(p.denominator) - math.log(p.numerator)
    log_value = (
        math.log(r - col_j - 1) + math.log(r - row_i - 1)
        - math.log(r - col_j) - math.log(r - row_i)
        + math.log(a + 1) - math.log(a + 2)
        + math.log(big_n + 1) - math.log(big_n + 2)
        + log_q
    )
    return Scalar.from_log(log_value)


# ---------------------------------------------------------------------
# entry classification and dominance
# ---------------------------------------------------------------------

def lambda_max(s: int, p) -> float:
    """Upper end of the admissible classification-parameter interval:
    1 / (1 + 2*s*e*q)."""
    p = _as_probability(p)
    if s < 1:
        raise DomainError("s must be at least 1")
    with mpmath.workdps(_DPS):
        q = mpmath.mpf(p.denominator) / p.numerator
        return float(1 / (1 + 2 * s * mpmath.e * q))


def classify_entry(a: int, n: int, p, lam: float, r: int) -> EntryClass:
    """Short / intermediate / large classification of an entry value
    against (1 -+ lambda) * log_q n, with a 1e-9 guard band on the
    thresholds.  The three classes partition {0, ..., r}."""
    p = _as_probability(p)
    if not 0 <= a <= r:
        raise DomainError("entry must lie in 0..r")
    if n < 2:
        raise DomainError("n must be at least 2")
    if not 0 < lam < 1:
        # the stricter s-dependent cap lambda_max(s, p) is enforced where
        # it matters, in dominance_check
        raise DomainError("lambda must lie in (0, 1)")
    with mpmath.workdps(_DPS):
        logq_n = mpmath.log(n) / _ln_q(p)
        lo = (1 - mpmath.mpf(lam)) * logq_n
        hi = (1 + mpmath.mpf(lam)) * logq_n
        if a <= lo + _GUARD:
            return EntryClass.SHORT
        if a >= hi - _GUARD:
            return EntryClass.LARGE
        return EntryClass.INTERMEDIATE


@dataclass(frozen=True)
class DominanceReport:
    holds: bool
    worst: IntersectionMatrix | None
    best_diagonal: IntersectionMatrix | None

    def __bool__(self) -> bool:
        return self.holds


def dominance_check(n: int, p, r: int, s: int, lam: float | None = None,
                    mode: str = LOG, cap: int = DEFAULT_D_CAP) -> DominanceReport:
    """Finite-n check that every nonzero T_A is at most the best T over
    diagonal matrices with entries in {0, 1, r} (not all zero).

    lam is validated against (0, lambda_max(s, p)) and defaults to half
    the upper end; the predicate itself does not depend on it.  The
    asymptotic statement guarantees truth only for large n; this reports
    the finite-n fact."""
    p = _as_probability(p)
    if s < 1 or r < 1 or s * r > n:
        raise DomainError("need s >= 1, r >= 1 and s*r <= n")
    lmax = lambda_max(s, p)
    if lam is None:
        lam = lmax / 2
    if not 0 < lam < lmax:
        raise DomainError(f"lambda must lie in (0, {lmax})")

    diag_candidates = set()
    for combo in product((0, 1, r), repeat=s):
        if any(combo):
            diag_candidates.add(combo)
    best: Scalar | None = None
    best_diag = None
    for combo in sorted(diag_candidates):
        A = IntersectionMatrix(
            tuple(tuple(combo[i] if i == j else 0 for j in range(s)) for i in range(s)), r
        )
        t = weight_T(n, p, r, s, A, mode)
        if best is None or best < t:
            best = t
            best_diag = A

    slack = Scalar.one(mode) if mode == EXACT else Scalar.from_log(_GUARD)
    for A in enumerate_D(s, r, cap):
        if A.is_zero():
            continue
        t = weight_T(n, p, r, s, A, mode)
        if t.is_zero:
            continue
        if best.is_zero or (t / best) > slack:
            return DominanceReport(False, A, best_diag)
    return DominanceReport(True, None, best_diag)


# ---------------------------------------------------------------------
# Stirling constant
# ---------------------------------------------------------------------

def stirling_c(n: int, m: int, r: int) -> float:
    """Constant c_n solving C(n, m*r) = c_n (n/(m*r))**(m*r) e**(m*r)
    (m*r)**(-1/2); always positive, bounded away from 0 for large n."""
    if m < 1 or r < 1:
        raise DomainError("need m >= 1 and r >= 1")
    if m * r >= n:
        raise DomainError("need m*r < n")
    mr = m * r
    with mpmath.workdps(_DPS):
        binom = mpmath.mpf(math.comb(n, mr))
        c = binom * (mpmath.mpf(mr) / n) ** mr * mpmath.e ** (-mr) * mpmath.sqrt(mr)
        return float(c)
