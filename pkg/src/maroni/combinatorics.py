"""Partitions, admissible boundary types, and their integer invariants.

The boundary of the compactified Hurwitz space of degree-d, genus-g
simply-branched covers of the line is a union of divisors S_{j,mu} indexed
by a branch-point split j (with S_{j,mu} = S_{b-j,mu}, b = 2g - 2 + 2d) and
a partition mu = (m_1, ..., m_n) of d recording the ramification over the
node.  Every coefficient formula in this package is a function of the
derived integer data collected here:

* n = n(mu), m = m(mu) = lcm(m_1, ..., m_n);
* the gcd table d_{nu,i} = gcd(m_nu, i) (with d_{nu,0} = m_nu) and the
  vector delta_i = d - sum_nu d_{nu,i} for i = 0..m;
* the division (j + d - n)/2 = q(d-1) + r with 0 <= r < d - 1 and the
  degree imbalance c = d - n - 2r across the two end components of the
  fibre chain; the analogous r', c' computed from l = b - j.

A pair (j, mu) is admissible only when j + d - n is even; both c and c'
are stored so the side-independence |c|(|c| - 2(d-1)) = |c'|(|c'| - 2(d-1))
can be asserted rather than assumed.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from math import gcd, lcm

from .errors import DomainError, ParityError


@dataclass(frozen=True)
class HurwitzParams:
    """Global numerical data: degree d >= 3 and genus g = (d-1)k, k >= 1.

    The branch-point count is b = 2g - 2 + 2d = 2(k+1)(d-1).  Degree 2 is
    excluded throughout: the Maroni data is empty there and the joint
    correction formulas divide by d - 2.
    """

    d: int
    g: int

    def __post_init__(self) -> None:
        if self.d < 3:
            raise DomainError(f"degree must be >= 3, got d={self.d}")
        if self.g < 1 or self.g % (self.d - 1) != 0:
            raise DomainError(
                f"genus must satisfy g=(d-1)k with k>=1: got d={self.d}, g={self.g}"
            )

    @property
    def k(self) -> int:
        return self.g // (self.d - 1)

    @property
    def b(self) -> int:
        return 2 * self.g - 2 + 2 * self.d


@dataclass(frozen=True)
class Partition:
    """A partition of d: non-increasing positive parts m_1 >= ... >= m_n."""

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.parts or any(p < 1 for p in self.parts):
            raise DomainError(f"parts must be positive, got {self.parts}")
        if any(a < b for a, b in itertools.pairwise(self.parts)):
            raise DomainError(f"parts must be non-increasing, got {self.parts}")

    @classmethod
    def of(cls, *parts: int) -> "Partition":
        return cls(tuple(sorted(parts, reverse=True)))

    @property
    def d(self) -> int:
        return sum(self.parts)

    @property
    def n(self) -> int:
        return len(self.parts)

    @property
    def m(self) -> int:
        return lcm(*self.parts)

    @property
    def has_unit_part(self) -> bool:
        return self.parts[-1] == 1

    def __str__(self) -> str:
        return "(" + "|".join(str(p) for p in self.parts) + ")"


def parse_partition(text: str) -> Partition:
    """Inverse of ``str(Partition)``: parse "(3|2|1)" (or "3|2|1")."""
    body = text.strip().removeprefix("(").removesuffix(")")
    try:
        parts = tuple(int(p) for p in body.split("|"))
    except ValueError as exc:
        raise DomainError(f"cannot parse partition from {text!r}") from exc
    return Partition(parts)


def enumerate_partitions(d: int) -> list[Partition]:
    """All partitions of d, in reverse-lexicographic order.

    >>> [str(p) for p in enumerate_partitions(3)]
    ['(3)', '(2|1)', '(1|1|1)']
    """
    if d <= 0:
        raise DomainError(f"partition enumeration needs d >= 1, got {d}")

    out: list[Partition] = []

    def extend(prefix: list[int], remaining: int, cap: int) -> None:
        if remaining == 0:
            out.append(Partition(tuple(prefix)))
            return
        for part in range(min(cap, remaining), 0, -1):
            prefix.append(part)
            extend(prefix, remaining - part, part)
            prefix.pop()

    extend([], d, d)
    return out


@dataclass(frozen=True)
class GcdProfile:
    """The table d_{nu,i} and the vector delta_i = d - sum_nu d_{nu,i}.

    Rows are indexed by the parts (nu = 1..n), columns by i = 0..m, with
    the convention d_{nu,0} = m_nu; since m_nu divides m this also gives
    d_{nu,m} = m_nu, so delta_0 = delta_m = 0.  The vector is symmetric,
    delta_i = delta_{m-i}.
    """

    mu: Partition
    d_table: tuple[tuple[int, ...], ...]
    delta: tuple[int, ...]

    @property
    def step_square_sum(self) -> int:
        """sum_{i=1}^m (delta_i - delta_{i-1})^2."""
        return sum(
            (a - b) ** 2 for a, b in zip(self.delta[1:], self.delta[:-1])
        )


@functools.lru_cache(maxsize=None)
def gcd_profile(mu: Partition) -> GcdProfile:
    """Compute the gcd table and delta vector of a partition.

    >>> gcd_profile(Partition((3,))).delta
    (0, 2, 2, 0)
    """
    d, m = mu.d, mu.m
    table = tuple(
        tuple(part if i == 0 else gcd(part, i) for i in range(m + 1))
        for part in mu.parts
    )
    delta = tuple(d - sum(row[i] for row in table) for i in range(m + 1))
    return GcdProfile(mu, table, delta)


@dataclass(frozen=True)
class BoundaryType:
    """An admissible boundary pair (j, mu) together with its derived data.

    The orientation convention puts j branch points on the end component
    R_m of the resolved fibre chain and l = b - j on the other end R_0;
    r and c are computed from j, r' and c' from l.  Construct through
    :func:`make_boundary_type`, which enforces the parity condition.
    """

    params: HurwitzParams
    j: int
    mu: Partition
    q: int
    r: int
    c: int
    rprime: int
    cprime: int

    @property
    def d(self) -> int:
        return self.params.d

    @property
    def n(self) -> int:
        return self.mu.n

    @property
    def m(self) -> int:
        return self.mu.m

    @property
    def l(self) -> int:
        return self.params.b - self.j

    @property
    def a(self) -> int:
        """The shifted imbalance d - 1 + c."""
        return self.params.d - 1 + self.c

    @property
    def delta(self) -> tuple[int, ...]:
        return gcd_profile(self.mu).delta

    @property
    def delta_square_sum(self) -> int:
        return gcd_profile(self.mu).step_square_sum

    @property
    def canonical_j(self) -> int:
        """The representative min(j, b-j) of the unordered pair."""
        return min(self.j, self.l)

    @property
    def is_canonical(self) -> bool:
        return self.j <= self.l

    def flipped(self) -> "BoundaryType":
        """The same unordered boundary type with the two sides swapped."""
        return make_boundary_type(self.params, self.l, self.mu)


def make_boundary_type(params: HurwitzParams, j: int, mu: Partition) -> BoundaryType:
    """Build an admissible boundary type, rejecting parity violations.

    The branch index must satisfy 2 <= j <= b - 2 and j + d - n must be
    even; then (j + d - n)/2 = q(d-1) + r defines q, r and c = d - n - 2r,
    and the same division applied to l = b - j gives r' and c'.
    """
    if mu.d != params.d:
        raise DomainError(f"partition {mu} is not a partition of d={params.d}")
    b, d, n = params.b, params.d, mu.n
    if not 2 <= j <= b - 2:
        raise DomainError(f"branch index j={j} outside 2..{b - 2}")
    if (j + d - n) % 2 != 0:
        raise ParityError(f"j + d - n = {j + d - n} is odd for j={j}, mu={mu}")
    q, r = divmod((j + d - n) // 2, d - 1)
    _, rprime = divmod((b - j + d - n) // 2, d - 1)
    return BoundaryType(
        params=params,
        j=j,
        mu=mu,
        q=q,
        r=r,
        c=d - n - 2 * r,
        rprime=rprime,
        cprime=d - n - 2 * rprime,
    )


def enumerate_boundary_types(params: HurwitzParams) -> list[BoundaryType]:
    """All admissible canonical types: 2 <= j <= b/2, parity-filtered.

    One representative is produced per unordered pair {j, b-j}; the order
    is j ascending, then mu reverse-lexicographic.
    """
    out: list[BoundaryType] = []
    partitions = enumerate_partitions(params.d)
    for j in range(2, params.b // 2 + 1):
        for mu in partitions:
            if (j + params.d - mu.n) % 2 == 0:
                out.append(make_boundary_type(params, j, mu))
    return out
