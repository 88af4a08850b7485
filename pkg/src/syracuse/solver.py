"""First-gap solvers: given the tail of a gap tuple, complete it.

The total exponent of an admissible tuple is pinned modulo 2*3^(b-1) by
one discrete logarithm, so "find the unique canonical first gap for
this tail" costs a dlog and a window reduction. Closed forms cover the
all-ones tail (the strictly ascending runs into 1), constant tails, the
alternating (1,2) tail, and two constant-gap target families anchored
at arbitrary odd sources.
"""

from dataclasses import dataclass
from typing import NamedTuple

from .caps import check_bits, checked_pow3
from .errors import InvalidP, PatternLengthMismatch
from .numtheory import ExpClass, Residue, _exact_div, dlog2, group_order
from .tuples import VTuple, _require_source, canonical_v1, decode, to_exponents


@dataclass(frozen=True)
class SolveResult:
    """A completed tuple: raw first-gap class, windowed gap, and its decode."""

    v1_class: ExpClass
    v1_star: int
    vtuple: VTuple
    n: int

    @property
    def a_class(self) -> ExpClass:
        """Class of the total exponent a = v1 + sum(tail) mod 2*3^(b-1)."""
        m = self.v1_class.modulus
        return ExpClass(
            (self.v1_class.value + sum(self.vtuple.v[1:])) % m, self.v1_class.level
        )


def solve_v1(b: int, tail, source: int = 1) -> SolveResult:
    """Unique canonical first gap completing tail (v2..vb) at `source`.

    The weighted power sum S = sum_i 2^(u_i) * 3^(i-1) mod 3^b depends
    on the tail alone, and admissibility forces
    a = dlog2(S) - dlog2(source) mod 2*3^(b-1). Subtracting the tail sum
    gives the first-gap class; the windowed representative always
    decodes.
    """
    if b < 1:
        raise ValueError(f"b must be >= 1, got {b}")
    tail = tuple(tail)
    if len(tail) != b - 1:
        raise ValueError(f"tail must have {b - 1} entries, got {len(tail)}")
    _require_source(source)
    mod = 3**b
    order = group_order(b)
    # Exponent profile of (x, *tail) does not depend on the first gap.
    _, u = to_exponents(VTuple(b, (1,) + tail))
    s = sum(pow(2, u[i], mod) * 3**i for i in range(b)) % mod
    a_cls = (dlog2(Residue(s, b)).value - dlog2(Residue(source % mod, b)).value) % order
    v1_cls = (a_cls - sum(tail)) % order
    v1 = canonical_v1(v1_cls, b, source)
    vt = VTuple(b, (v1,) + tail)
    return SolveResult(ExpClass(v1_cls, b), v1, vt, decode(vt, source))


def ascending_all_ones(b: int) -> SolveResult:
    """The run of b steps into 1 that ascends strictly until the last one.

    Tail all ones forces v1* = 3^(b-1) + 1, already inside the canonical
    window, and the starting integer collapses to the closed form
    (2^(3^(b-1)+b) - 3^b + 2^b) / 3^b, evaluated exactly here.
    """
    if b < 2:
        raise ValueError(f"b must be >= 2, got {b}")
    e = checked_pow3(b - 1, "ascending_all_ones") + b
    check_bits(e + 2, "ascending_all_ones")
    v1 = 3 ** (b - 1) + 1
    n = _exact_div(2**e - 3**b + 2**b, 3**b, "ascending_all_ones")
    vt = VTuple(b, (v1,) + (1,) * (b - 1))
    return SolveResult(ExpClass(v1 % group_order(b), b), v1, vt, n)


def ascending_family(q: int, p: int) -> int:
    """Start of the p-th strictly ascending run of q doubling-type steps to 1.

    n0 = (1 + 2^((2p+1)*3^q)) * 2^(q+1) / 3^(q+1) - 1, exact; p = 0
    recovers ascending_all_ones(q+1).n.
    """
    if q < 1:
        raise ValueError(f"q must be >= 1, got {q}")
    if p < 0:
        raise ValueError(f"p must be nonnegative, got {p}")
    e = (2 * p + 1) * checked_pow3(q, "ascending_family")
    check_bits(e + q + 3, "ascending_family")
    num = (1 + 2**e) << (q + 1)
    return _exact_div(num, 3 ** (q + 1), "ascending_family") - 1


def solve_constant_k(b: int, k: int, source: int = 1) -> ExpClass:
    """Class of the first gap when every later gap equals k.

    Solves source * 2^(v1-k) * (2^k - 3) = 1 (mod 3^b); 2^k - 3 is an
    exact signed integer (negative only for k = 1) reduced into the
    group, and is coprime to 3 for every k.
    """
    if b < 1:
        raise ValueError(f"b must be >= 1, got {b}")
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    _require_source(source)
    mod = 3**b
    base = (pow(2, k, mod) - 3) % mod
    cls = (
        k
        - dlog2(Residue(base * (source % mod) % mod, b)).value
    ) % group_order(b)
    return ExpClass(cls, b)


class Periodic12Result(NamedTuple):
    v1_class: ExpClass
    verified: bool


def periodic_12_check(b: int) -> Periodic12Result:
    """First gap for the alternating tail 1,2,1,2,... plus its closing check.

    Splitting the power sum into two geometric series shows the first
    gap must satisfy 2^v1 = -20 (mod 3^b); `verified` reports that
    congruence on the solved class. The alternation only closes for odd
    b.
    """
    if b % 2 == 0 or b < 3:
        raise PatternLengthMismatch(f"alternating tail needs odd b >= 3, got {b}")
    tail = tuple(1 if i % 2 == 0 else 2 for i in range(b - 1))
    result = solve_v1(b, tail, 1)
    mod = 3**b
    verified = pow(2, result.v1_class.value, mod) == (mod - 20) % mod
    return Periodic12Result(result.v1_class, verified)


class TargetPair(NamedTuple):
    n: int
    m: int


def target_families(b: int, p: int, k: int) -> TargetPair:
    """(n, m) with m reaching n in exactly b steps of constant valuation k.

    k = 1: n = 2p*3^b - 1, m = 2^(b+1)*p - 1 (needs p >= 1).
    k = 2: n = 2p*3^b + 1, m = 2^(2b+1)*p + 1 (p = 0 gives n = m = 1).
    """
    if b < 1:
        raise ValueError(f"b must be >= 1, got {b}")
    if k not in (1, 2):
        raise ValueError(f"k must be 1 or 2, got {k}")
    if p < 0 or (k == 1 and p < 1):
        raise InvalidP(f"p={p} invalid for k={k}: need p >= {1 if k == 1 else 0}")
    check_bits(2 * b + max(p.bit_length(), 1) + 3, "target_families")
    if k == 1:
        return TargetPair(2 * p * 3**b - 1, 2 ** (b + 1) * p - 1)
    return TargetPair(2 * p * 3**b + 1, 2 ** (2 * b + 1) * p + 1)
