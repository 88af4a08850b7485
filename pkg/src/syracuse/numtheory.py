"""Exact modular kernels over the prime-power moduli 3^b.

The multiplicative group mod 3^b is cyclic of order 2*3^(b-1) and 2
generates it, so every residue coprime to 3 has a well-defined discrete
logarithm base 2. That logarithm, plus a pair of exact-quotient
identities for (2^(3^k) +- 1), is all the machinery the first-gap
solvers need.
"""

from dataclasses import dataclass

from .caps import check_bits, checked_pow3
from .errors import LevelMismatch, NotInGroup


def group_order(b: int) -> int:
    """Order of (Z/3^b Z)*: 2*3^(b-1)."""
    if b < 1:
        raise ValueError(f"level must be >= 1, got {b}")
    return 2 * 3 ** (b - 1)


@dataclass(frozen=True)
class Residue:
    """An element of Z/3^b Z tagged with its level b."""

    value: int
    level: int

    def __post_init__(self):
        if self.level < 1:
            raise ValueError(f"level must be >= 1, got {self.level}")
        if not 0 <= self.value < 3**self.level:
            raise ValueError(
                f"value {self.value} out of range [0, 3^{self.level})"
            )

    @property
    def modulus(self) -> int:
        return 3**self.level

    def __mul__(self, other: "Residue") -> "Residue":
        if not isinstance(other, Residue):
            return NotImplemented
        if other.level != self.level:
            raise LevelMismatch(f"levels {self.level} and {other.level} differ")
        return Residue(self.value * other.value % self.modulus, self.level)

    def __str__(self):
        return f"{self.value} mod 3^{self.level}"


@dataclass(frozen=True)
class ExpClass:
    """An exponent class mod 2*3^(b-1): the codomain of dlog2 at level b."""

    value: int
    level: int

    def __post_init__(self):
        if self.level < 1:
            raise ValueError(f"level must be >= 1, got {self.level}")
        if not 0 <= self.value < group_order(self.level):
            raise ValueError(
                f"value {self.value} out of range [0, 2*3^{self.level - 1})"
            )

    @property
    def modulus(self) -> int:
        return group_order(self.level)

    def __str__(self):
        return f"{self.value} mod {self.modulus}"


def pow2_mod(e: int, b: int) -> Residue:
    """2^e reduced mod 3^b; always coprime to 3."""
    if e < 0:
        raise ValueError(f"exponent must be nonnegative, got {e}")
    return Residue(pow(2, e, 3**b), b)


def pow2_mod3(k: int) -> int:
    """2^k mod 3 without any arithmetic: 2 is -1 mod 3."""
    if k < 0:
        raise ValueError(f"exponent must be nonnegative, got {k}")
    return 1 if k % 2 == 0 else 2


def dlog2(x: Residue) -> ExpClass:
    """Discrete logarithm base 2 in (Z/3^b Z)*.

    Splits the order 2*3^(b-1) into its two-part and three-part. The
    parity of the exponent is read off x mod 3 directly. The 3-part is
    recovered digit by digit from y = x^2, which lives in the cyclic
    subgroup of order 3^(b-1) generated by 4: after clearing the low
    digits, raising what remains to the cofactor lands on a power of
    the order-3 element omega, and the matching power is the digit.
    """
    b, m = x.level, x.modulus
    if x.value % 3 == 0:
        raise NotInGroup(f"{x.value} is divisible by 3, not in (Z/3^{b}Z)*")
    parity = 0 if x.value % 3 == 1 else 1
    if b == 1:
        return ExpClass(parity, 1)

    sub = 3 ** (b - 1)
    y = pow(x.value, 2, m)
    omega = pow(4, sub // 3, m)
    omega2 = omega * omega % m
    inv4 = pow(4, -1, m)
    a3 = 0
    cur = y
    power = 1  # 3^i while extracting digit i
    for _ in range(b - 1):
        probe = pow(cur, sub // (3 * power), m)
        if probe == 1:
            digit = 0
        elif probe == omega:
            digit = 1
        elif probe == omega2:
            digit = 2
        else:
            raise AssertionError("dlog probe escaped the order-3 subgroup")
        if digit:
            a3 += digit * power
            cur = cur * pow(inv4, digit * power, m) % m
        power *= 3
    # Recombine: a = a3 (mod 3^(b-1)) with the two-part fixing parity;
    # 3^(b-1) is odd, so adding it once flips parity when needed.
    a = a3 + sub * ((parity - a3) % 2)
    return ExpClass(a, b)


def dlog2_scan(x: Residue) -> ExpClass:
    """Brute-force reference for dlog2: O(3^b), cross-validation only."""
    if x.value % 3 == 0:
        raise NotInGroup(f"{x.value} is divisible by 3, not in (Z/3^{x.level}Z)*")
    m = x.modulus
    acc = 1 % m
    for a in range(group_order(x.level)):
        if acc == x.value:
            return ExpClass(a, x.level)
        acc = acc * 2 % m
    raise AssertionError("2 failed to generate the group")


def _exact_div(num: int, den: int, what: str) -> int:
    q, r = divmod(num, den)
    if r:
        raise AssertionError(f"{what}: division by {den} left remainder {r}")
    return q


def ratio_plus(k: int) -> int:
    """Exact quotient (2^(3^k) + 1) / 3^(k+1); an odd integer = 1 mod 3."""
    e = checked_pow3(k, "ratio_plus")
    check_bits(e + 2, "ratio_plus numerator")
    return _exact_div(2**e + 1, 3 ** (k + 1), "ratio_plus")


def ratio_minus(k: int) -> int:
    """Exact quotient (2^(2*3^k) - 1) / 3^(k+1); an odd integer = 1 mod 3."""
    e = 2 * checked_pow3(k, "ratio_minus")
    check_bits(e + 2, "ratio_minus numerator")
    return _exact_div(2**e - 1, 3 ** (k + 1), "ratio_minus")
