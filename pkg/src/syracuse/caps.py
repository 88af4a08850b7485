"""Configurable ceiling on intermediate big-integer sizes.

Operations that can build astronomically large integers check the
projected bit length first and raise :class:`CapExceeded` instead of
silently grinding. The cap is a process-wide setting; the CLI wires it
to ``--seed-cap`` and the ``SYRACUSE_EXP_CAP`` environment variable.
"""

from contextlib import contextmanager

from .errors import CapExceeded

DEFAULT_EXP_CAP = 2**26  # bits

_exp_cap = DEFAULT_EXP_CAP


def exponent_cap() -> int:
    return _exp_cap


def set_exponent_cap(bits: int) -> None:
    global _exp_cap
    if bits < 1:
        raise ValueError(f"exponent cap must be positive, got {bits}")
    _exp_cap = bits


@contextmanager
def capped(bits: int):
    """Temporarily lower (or raise) the cap; restores the old value."""
    global _exp_cap
    old = _exp_cap
    set_exponent_cap(bits)
    try:
        yield
    finally:
        _exp_cap = old


def check_bits(bits: int, what: str = "intermediate") -> None:
    if bits > _exp_cap:
        raise CapExceeded(f"{what} needs {bits} bits, cap is {_exp_cap}")


def checked_pow3(k: int, what: str = "exponent") -> int:
    """3**k, refused early if it would exceed the cap.

    Multiplies up with an early exit so an absurd k never materializes
    a huge power just to be rejected.
    """
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}")
    acc = 1
    for _ in range(k):
        acc *= 3
        if acc > _exp_cap:
            raise CapExceeded(f"{what}: 3^{k} exceeds the {_exp_cap}-bit exponent cap")
    return acc
