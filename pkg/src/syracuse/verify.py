"""Self-verification suite behind `syracuse verify`.

Re-derives the published reference values and the structural invariants
from scratch through the public API. `quick` covers the two reference
tables and the worked dlog example; `full` adds the exhaustive sweeps:
tree cardinality, the first-gap census, the forward round-trip below
10^5, the exact-quotient identities, and the constant-gap families.

Checks resolve callees through the module objects at run time, so a
deliberately broken function is caught rather than bypassed.
"""

import itertools
import time
from dataclasses import dataclass

from . import collatz, numtheory, solver, tree, tuples

# Published reference data for b = 3, source 1: the twelve canonical
# tuples and the starting integers listed for seven of them. The other
# five are recomputed and round-trip checked, never transcribed.
B3_TUPLES = [
    (4, 3, 2), (4, 5, 1), (8, 2, 1), (8, 6, 2), (10, 1, 1), (10, 5, 2),
    (14, 4, 2), (14, 6, 1), (16, 1, 2), (16, 3, 1), (20, 2, 2), (20, 4, 1),
]
B3_PUBLISHED_DECODES = {
    (4, 3, 2): 17,
    (4, 5, 1): 35,
    (8, 2, 1): 75,
    (8, 6, 2): 2417,
    (10, 1, 1): 151,
    (10, 5, 2): 4849,
    (20, 4, 1): 1242755,
}

# All-ones family: published first gaps for b = 2..6 and starting
# integers for b = 2..5; the b = 6 integer is recomputed.
ALL_ONES_V1 = {2: 4, 3: 10, 4: 28, 5: 82, 6: 244}
ALL_ONES_N = {
    2: 3,
    3: 151,
    4: 26512143,
    5: 318400215865581346424671,
}


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str
    elapsed_ms: float


def _canonical_census(b: int, source: int = 1) -> list[tuple[int, ...]]:
    """Brute-force scan: for every canonical tail, every windowed first gap."""
    tails = itertools.product(
        *[range(1, tuples.gap_modulus(b, i) + 1) for i in range(2, b + 1)]
    )
    found = []
    for tail in tails:
        hits = [
            v1
            for v1 in range(4, 2 * 3 ** (b - 1) + 3, 2)
            if tuples.is_admissible(tuples.VTuple(b, (v1,) + tail), source)
        ]
        if len(hits) != 1:
            raise AssertionError(f"tail {tail}: expected one admissible v1, got {hits}")
        found.append((hits[0],) + tail)
    return found


def check_table_b3_census() -> tuple[bool, str]:
    """The twelve canonical b=3 tuples and their published decodes."""
    found = sorted(_canonical_census(3))
    if found != sorted(B3_TUPLES):
        return False, f"census mismatch: {found}"
    for t in B3_TUPLES:
        n = tuples.decode(tuples.VTuple(3, t))
        expected = B3_PUBLISHED_DECODES.get(t)
        if expected is not None and n != expected:
            return False, f"{t} decoded to {n}, published {expected}"
        if tuples.encode(n) != tuples.VTuple(3, t):
            return False, f"{t}: decode {n} does not encode back"
    return True, "12 tuples, published decodes matched, all round-trip"


def check_all_ones_table(b_max: int = 5) -> tuple[bool, str]:
    """All-ones family against the published first gaps and integers."""
    for b in range(2, b_max + 1):
        res = solver.ascending_all_ones(b)
        if res.v1_star != ALL_ONES_V1.get(b, 3 ** (b - 1) + 1):
            return False, f"b={b}: v1*={res.v1_star}"
        if b in ALL_ONES_N and res.n != ALL_ONES_N[b]:
            return False, f"b={b}: n={res.n}"
        traj = collatz.trajectory(res.n)
        ascending = all(
            traj.odd_iterates[i + 1] > traj.odd_iterates[i] for i in range(b - 1)
        )
        if not (traj.reached_one and traj.b == b and ascending):
            return False, f"b={b}: trajectory shape wrong"
    return True, f"b=2..{b_max}: first gaps, integers, and strict ascent all match"


def check_dlog_example() -> tuple[bool, str]:
    """The worked example: dlog2 of 7 at level 2 is 4 mod 6."""
    got = numtheory.dlog2(numtheory.Residue(7, 2))
    if (got.value, got.modulus) != (4, 6):
        return False, f"dlog2(7 mod 9) = {got}"
    if numtheory.pow2_mod(got.value, 2).value != 7:
        return False, "round-trip failed"
    return True, "dlog2(7 mod 9) = 4 mod 6"


def check_tree_cardinality() -> tuple[bool, str]:
    """Enumerated node counts equal the closed-form count for t<=4, s<=2."""
    for t, s in itertools.product(range(1, 5), (1, 2)):
        enum = tree.enumerate_tree(tree.EnumConfig(source=1, t=t, s=s))
        expected = tree.count_formula(t, s)
        if len(enum.nodes) != expected:
            return False, f"(t={t}, s={s}): {len(enum.nodes)} != {expected}"
        if not tree.verify_tree(enum):
            return False, f"(t={t}, s={s}): structure check failed"
    return True, "counts match the closed form for all t<=4, s<=2"


def check_first_gap_census() -> tuple[bool, str]:
    """Unique windowed first gap per tail; totals 2, 12, 216; solver agrees."""
    expected_totals = {2: 2, 3: 12, 4: 216}
    for b, expected in expected_totals.items():
        found = _canonical_census(b)
        if len(found) != expected:
            return False, f"b={b}: {len(found)} tuples, expected {expected}"
        for tup in found:
            res = solver.solve_v1(b, tup[1:])
            if res.v1_star != tup[0]:
                return False, f"b={b} tail {tup[1:]}: solver {res.v1_star} != {tup[0]}"
    return True, "censuses complete and solve_v1 agrees on every instance"


def check_round_trip(limit: int = 10**5) -> tuple[bool, str]:
    """decode(encode(n)) = n for every odd n below the limit."""
    for n in range(1, limit, 2):
        t = tuples.encode(n)
        if tuples.decode(t) != n:
            return False, f"round trip failed at {n}"
        if collatz.trajectory(n).v != t.v:
            return False, f"trajectory gaps disagree at {n}"
    return True, f"all odd n < {limit} round-trip exactly"


def check_exact_quotient_identities() -> tuple[bool, str]:
    """Parity of 2^k mod 3, both exact quotients, and the mod-3 tail pattern."""
    for k in range(1001):
        if numtheory.pow2_mod3(k) != pow(2, k, 3):
            return False, f"pow2_mod3({k})"
    for k in range(11):
        rp, rm = numtheory.ratio_plus(k), numtheory.ratio_minus(k)
        if rp % 3 != 1 or rm % 3 != 1:
            return False, f"k={k}: quotients not 1 mod 3"
        if rm % 3 != (2 ** (3**k) - 1) % 3:
            return False, f"k={k}: minus/plus relation"
    for b in range(2, 9):
        n = solver.ascending_all_ones(b).n
        if n % 3 != (0 if b % 2 == 0 else 1):
            return False, f"all-ones n at b={b}: n mod 3 = {n % 3}"
    return True, "quotient identities and mod-3 patterns hold"


def check_constant_gap_families() -> tuple[bool, str]:
    """Target pairs, the alternating tail, and constant-tail specializations."""
    for b in range(1, 9):
        for k in (1, 2):
            for p in range(1 if k == 1 else 0, 21):
                pair = solver.target_families(b, p, k)
                cur = pair.m
                for _ in range(b):
                    m3 = 3 * cur + 1
                    if collatz.j_val(m3) != k:
                        return False, f"b={b} p={p} k={k}: wrong valuation"
                    cur = collatz.syracuse(cur)
                if cur != pair.n:
                    return False, f"b={b} p={p} k={k}: landed on {cur}"
    for b in (3, 5, 7):
        if not solver.periodic_12_check(b).verified:
            return False, f"alternating tail congruence failed at b={b}"
    for b in range(1, 7):
        order = numtheory.group_order(b)
        if solver.solve_constant_k(b, 1).value != (3 ** (b - 1) + 1) % order:
            return False, f"k=1 class at b={b}"
        if solver.solve_constant_k(b, 2).value != 2 % order:
            return False, f"k=2 class at b={b}"
        v1 = solver.solve_constant_k(b, 3).value
        if (5 * pow(2, (v1 - 3) % order, 3**b)) % 3**b != 1:
            return False, f"k=3 class at b={b}"
    return True, "families, alternating tail, and k=1,2,3 classes all verified"


QUICK_CHECKS = [
    ("table_b3_census", check_table_b3_census),
    ("all_ones_table", check_all_ones_table),
    ("dlog_example", check_dlog_example),
]

FULL_CHECKS = QUICK_CHECKS + [
    ("tree_cardinality", check_tree_cardinality),
    ("first_gap_census", check_first_gap_census),
    ("round_trip", check_round_trip),
    ("exact_quotient_identities", check_exact_quotient_identities),
    ("constant_gap_families", check_constant_gap_families),
]


def verify_suite(level: str = "quick") -> list[CheckResult]:
    """Run the named checks; a raising check counts as failed."""
    if level not in ("quick", "full"):
        raise ValueError(f"level must be 'quick' or 'full', got {level!r}")
    checks = QUICK_CHECKS if level == "quick" else FULL_CHECKS
    results = []
    for name, fn in checks:
        start = time.perf_counter()
        try:
            passed, detail = fn()
        except Exception as exc:  # a broken invariant may surface as a raise
            passed, detail = False, f"{type(exc).__name__}: {exc}"
        elapsed = (time.perf_counter() - start) * 1000.0
        results.append(CheckResult(name, passed, detail, round(elapsed, 3)))
    return results
