"""Intersection theory on the resolved fibre chain over a boundary point.

Over a general point of a boundary divisor the fibre of the resolved
line-bundle model is a chain of smooth rational curves R_0, ..., R_m
(m = lcm of the ramification partition): two end components of
self-intersection -1 joined by m - 1 exceptional (-2)-curves, consecutive
components meeting once.  A distinguished section S meets R_m only.

Divisors supported on the chain are represented by their rational
coefficient vectors.  For D = sum e_i R_i the pairing satisfies the
closed form D.D = -sum_{i=1}^m (e_{i-1} - e_i)^2, the full fibre
F = sum R_i is numerically trivial, and the relative dualizing class
theta pairs as theta.D = -e_0 - e_m.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .combinatorics import BoundaryType, gcd_profile
from .errors import DomainError, InvariantError


@dataclass(frozen=True)
class ChainModel:
    """A chain R_0..R_m with R_0^2 = R_m^2 = -1 and interior squares -2."""

    m: int

    def __post_init__(self) -> None:
        if self.m < 1:
            raise DomainError(f"chain length parameter must be >= 1, got {self.m}")

    def pairing(self, i: int, j: int) -> int:
        """The intersection number R_i . R_j."""
        if not (0 <= i <= self.m and 0 <= j <= self.m):
            raise DomainError(f"component index out of range for m={self.m}")
        if i == j:
            return -1 if i in (0, self.m) else -2
        return 1 if abs(i - j) == 1 else 0


@dataclass(frozen=True)
class FibralDivisor:
    """A rational coefficient vector (e_0, ..., e_m) over a ChainModel."""

    chain: ChainModel
    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) != self.chain.m + 1:
            raise DomainError(
                f"expected {self.chain.m + 1} coefficients, got {len(self.coeffs)}"
            )

    def __add__(self, other: "FibralDivisor") -> "FibralDivisor":
        _check_same_chain(self, other)
        return FibralDivisor(
            self.chain, tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __sub__(self, other: "FibralDivisor") -> "FibralDivisor":
        _check_same_chain(self, other)
        return FibralDivisor(
            self.chain, tuple(a - b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __neg__(self) -> "FibralDivisor":
        return FibralDivisor(self.chain, tuple(-a for a in self.coeffs))

    def scaled(self, scalar) -> "FibralDivisor":
        s = Fraction(scalar)
        return FibralDivisor(self.chain, tuple(s * a for a in self.coeffs))

    __rmul__ = scaled


def fibral(chain: ChainModel, coeffs) -> FibralDivisor:
    """Build a divisor from any iterable of ints/Fractions."""
    return FibralDivisor(chain, tuple(Fraction(c) for c in coeffs))


def zero_divisor(chain: ChainModel) -> FibralDivisor:
    return fibral(chain, [0] * (chain.m + 1))


def full_fibre(chain: ChainModel) -> FibralDivisor:
    """F = R_0 + ... + R_m, numerically trivial on the chain."""
    return fibral(chain, [1] * (chain.m + 1))


def component(chain: ChainModel, i: int) -> FibralDivisor:
    return fibral(chain, [1 if t == i else 0 for t in range(chain.m + 1)])


def theta_representative(chain: ChainModel) -> FibralDivisor:
    """The fibre-supported part sum_{i<m} (m-i) R_i of the dualizing class.

    The full representative is this divisor minus twice the section S; the
    section term only matters when pairing against divisors with a nonzero
    R_m coefficient.
    """
    m = chain.m
    return fibral(chain, [m - i for i in range(m)] + [0])


def _check_same_chain(d1: FibralDivisor, d2: FibralDivisor) -> None:
    if d1.chain != d2.chain:
        raise DomainError("divisors live on chains of different lengths")


def intersect(d1: FibralDivisor, d2: FibralDivisor) -> Fraction:
    """Bilinear symmetric pairing from the component intersection matrix."""
    _check_same_chain(d1, d2)
    m = d1.chain.m
    e, f = d1.coeffs, d2.coeffs
    total = Fraction(0)
    for i in range(m + 1):
        row = (-1 if i in (0, m) else -2) * f[i]
        if i > 0:
            row += f[i - 1]
        if i < m:
            row += f[i + 1]
        total += e[i] * row
    return total


def theta_dot(d: FibralDivisor) -> Fraction:
    """Pairing of the relative dualizing class with a fibral divisor.

    Adjunction on the chain gives theta . D = -e_0 - e_m; this equals the
    pairing against -2S + sum_{i<m}(m-i) R_i by S . R_m = 1.
    """
    return -d.coeffs[0] - d.coeffs[-1]


def shift_and_fibre_part(d: FibralDivisor) -> tuple[FibralDivisor, FibralDivisor]:
    """The shift D_sh (maximum coefficient moved to 0) and the fibre part.

    D_sh subtracts max_i e_i from every coefficient; the fibre part is
    (min_i e_i) . F and equals D + (-D)_sh.
    """
    top = max(d.coeffs)
    bottom = min(d.coeffs)
    shifted = FibralDivisor(d.chain, tuple(e - top for e in d.coeffs))
    return shifted, full_fibre(d.chain).scaled(bottom)


@dataclass(frozen=True)
class StandardA:
    """The standard fibre-supported twist divisor A of a boundary type.

    Writing -A = sum_{i<m} alpha_i R_i with alpha_i = ((m-i)c - delta_i)/2,
    every alpha_i is an integer and the restriction degrees A . R_i are
    d - n - r on R_0, r on R_m, and half the second difference of the gcd
    sums on interior components, with total degree 0.  The fibre part of A
    is -(mc/2) F when c > 0 and 0 otherwise.
    """

    bt: BoundaryType
    alpha: tuple[int, ...]
    divisor: FibralDivisor
    degrees: tuple[int, ...]

    @property
    def fibre_part_degree(self) -> Fraction:
        """f_A, the multiplicity of the full fibre in the fibre part of A."""
        m, c = self.bt.m, self.bt.c
        return Fraction(-m * c, 2) if c > 0 else Fraction(0)


def expected_twist_degrees(bt: BoundaryType) -> tuple[int, ...]:
    """Restriction degrees of the normalized bundle on R_0..R_m.

    These are d - n - r on R_0, r on R_m, and on interior components
    (1/2) sum_nu (-d_{nu,i-1} + 2 d_{nu,i} - d_{nu,i+1}); they sum to 0.
    """
    d, n, r, m = bt.d, bt.n, bt.r, bt.m
    table = gcd_profile(bt.mu).d_table
    degs = [d - n - r]
    for i in range(1, m):
        twice = sum(-row[i - 1] + 2 * row[i] - row[i + 1] for row in table)
        if twice % 2 != 0:
            raise InvariantError(f"odd interior degree at i={i} for {bt.mu}")
        degs.append(twice // 2)
    degs.append(r)
    if sum(degs) != 0:
        raise InvariantError(f"twist degrees do not sum to 0 for {bt}")
    return tuple(degs)


def a_standard(bt: BoundaryType) -> StandardA:
    """Construct the standard divisor A with its integrality checks."""
    m, c = bt.m, bt.c
    delta = bt.delta
    chain = ChainModel(m)
    alpha = []
    for i in range(m):
        num = (m - i) * c - delta[i]
        if num % 2 != 0:
            raise InvariantError(
                f"non-integral chain coefficient at i={i} for type {bt}"
            )
        alpha.append(num // 2)
    divisor = fibral(chain, [-a for a in alpha] + [0])
    degrees = tuple(
        int(intersect(divisor, component(chain, i))) for i in range(m + 1)
    )
    if degrees != expected_twist_degrees(bt):
        raise InvariantError(f"restriction degrees of A are off for {bt}")
    return StandardA(bt, tuple(alpha), divisor, degrees)


def we_divisor(bt: BoundaryType) -> tuple[FibralDivisor, Fraction]:
    """The exceptional branch divisor sum delta_i R_i and its square.

    The square is returned in the closed form -sum (delta_i - delta_{i-1})^2,
    which agrees with the matrix pairing.
    """
    chain = ChainModel(bt.m)
    w = fibral(chain, bt.delta)
    return w, Fraction(-bt.delta_square_sum)


@dataclass(frozen=True)
class NormalSurfaceNumbers:
    """Intersection numbers on the normal model over one ramification part.

    For a part of index m_nu, the chain upstairs has Cartier pieces T'_i
    of self-intersection -2 m_nu meeting each other and the marked
    component C in m_nu points; the pullback of C meets the ramification
    divisor in 3(m_nu - 1) + 2 g(C) points.  Twisting by an upstairs
    divisor with coefficients a_0, ..., a_{m-1} (a_m = 0) has square
    -m_nu sum (a_{i-1} - a_i)^2, and its pushforward has square
    -sum (d_{nu,i-1} a_{i-1} - d_{nu,i} a_i)^2.
    """

    tprime_self: int
    c_dot_tprime: int
    tprime_dot_next: int
    c_pullback_dot_ramification: int
    tprime_pullback_dot_ramification: int
    z_self: Fraction
    push_z_self: Fraction
    push_z_dot_branch: Fraction | None


def normal_surface_numbers(
    m_nu: int,
    i: int,
    coeffs,
    genus_c: int,
    *,
    l: int | None = None,
    delta: tuple[int, ...] | None = None,
) -> NormalSurfaceNumbers:
    """Evaluate the normal-model intersection numbers for one part.

    ``coeffs`` are the chain multiplicities a_0..a_{m-1}; the index i must
    satisfy 1 <= i <= m - 1.  When the branch-side data (l, delta) is
    supplied, the pairing of the pushforward with the branch divisor is
    included as well.
    """
    if m_nu < 1:
        raise DomainError(f"ramification index must be >= 1, got {m_nu}")
    a = [Fraction(x) for x in coeffs]
    m = len(a)
    if not 1 <= i <= m - 1:
        raise DomainError(f"chain index i={i} outside 1..{m - 1}")
    a.append(Fraction(0))

    def dnu(t: int) -> int:
        return m_nu if t % m == 0 else gcd(m_nu, t)

    z_self = -m_nu * sum((a[t - 1] - a[t]) ** 2 for t in range(1, m + 1))
    push = [dnu(t) * a[t] for t in range(m + 1)]
    push_self = -sum((push[t - 1] - push[t]) ** 2 for t in range(1, m + 1))
    push_branch = None
    if l is not None and delta is not None:
        push_branch = a[0] * m_nu * l - sum(
            (push[t - 1] - push[t]) * (delta[t - 1] - delta[t])
            for t in range(1, m + 1)
        )
    return NormalSurfaceNumbers(
        tprime_self=-2 * m_nu,
        c_dot_tprime=m_nu,
        tprime_dot_next=m_nu,
        c_pullback_dot_ramification=3 * (m_nu - 1) + 2 * genus_c,
        tprime_pullback_dot_ramification=-dnu(i - 1) + 2 * dnu(i) - dnu(i + 1),
        z_self=z_self,
        push_z_self=push_self,
        push_z_dot_branch=push_branch,
    )
