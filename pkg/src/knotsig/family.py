"""A one-parameter family of genus-1 twist knots with a single known jump.

For a positive twisting parameter m the Seifert matrix

    [[1, 0],
     [1, 2m]]

has Alexander polynomial 2m*t - (4m - 1) + 2m*t**-1, determinant 8m - 1,
and Arf invariant 0.  Its signature profile has exactly one jump, of size
+2, at the angle whose cosine is (4m - 1) / 4m, so the signature integral
is 2*(pi - arccos((4m-1)/4m))/pi exactly.

``params_from_primes`` picks the members whose jump abscissas generate a
multiquadratic field of full degree: for a prime p = 1 mod 4, p >= 5, the
parameter m = (p - 1)**2 / 8 is a positive integer with 8m - 1 = p*(p - 2),
and sqrt((8m-1) ... ) brings in a new square class for every new prime.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .seifert import SeifertMatrix
from .signatures import RhoValue, rho


class NonPositive(ValueError):
    """Raised when a twisting parameter or a count is not positive."""


@dataclass(frozen=True)
class FamilyParams:
    """One admissible family member tied to a prime p = 1 mod 4."""

    index: int  # position in the ascending prime list, 0-based
    prime: int
    m: int
    theta_cos: Fraction

    def __post_init__(self) -> None:
        if 8 * self.m - 1 != self.prime * (self.prime - 2):
            raise ValueError("parameter does not match its prime")
        if self.theta_cos != Fraction(4 * self.m - 1, 4 * self.m):
            raise ValueError("jump abscissa does not match the parameter")


def twist_seifert(m: int) -> SeifertMatrix:
    """Seifert matrix [[1, 0], [1, 2m]] of the m-th family member."""
    if m < 1:
        raise NonPositive("twisting parameter must be a positive integer")
    return SeifertMatrix([[1, 0], [1, 2 * m]])


def twist_jump_cos(m: int) -> Fraction:
    """Cosine (4m - 1)/4m of the unique jump angle."""
    if m < 1:
        raise NonPositive("twisting parameter must be a positive integer")
    return Fraction(4 * m - 1, 4 * m)


def twist_rho(m: int, tol: Fraction = Fraction(1, 10**9)) -> RhoValue:
    """Signature integral of the m-th member, enclosed to width tol."""
    return rho(twist_seifert(m), tol)


def _admissible_primes(count: int) -> list[int]:
    from .fields import is_prime

    out: list[int] = []
    p = 5
    while len(out) < count:
        if p % 4 == 1 and is_prime(p):
            out.append(p)
        p += 2
    return out


def params_from_primes(n: int) -> tuple[FamilyParams, ...]:
    """Family parameters for the first n primes p = 1 mod 4 starting at 5."""
    if n < 1:
        raise NonPositive("need at least one prime")
    out = []
    for j, p in enumerate(_admissible_primes(n), start=1):
        m = (p - 1) ** 2 // 8
        out.append(
            FamilyParams(index=j, prime=p, m=m, theta_cos=Fraction(4 * m - 1, 4 * m))
        )
    return tuple(out)
