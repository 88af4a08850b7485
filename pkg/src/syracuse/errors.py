"""Error taxonomy shared by the library and the CLI.

Every domain failure carries a stable machine-readable ``code`` so the
CLI can report it without string matching.
"""


class SyracuseError(Exception):
    code = "error"


class NotInGroup(SyracuseError):
    """Residue divisible by 3; it has no discrete logarithm base 2."""

    code = "not_in_group"


class LevelMismatch(SyracuseError):
    """Arithmetic attempted between residues of different levels."""

    code = "level_mismatch"


class CapExceeded(SyracuseError):
    """An intermediate integer would exceed the configured exponent cap."""

    code = "cap_exceeded"


class OddInput(SyracuseError):
    """2-adic valuation requested for an odd integer."""

    code = "odd_input"


class NotAdmissible(SyracuseError):
    """The gap tuple does not decode to a positive integer."""

    code = "not_admissible"


class SourceDivisibleBy3(SyracuseError):
    code = "source_divisible_by_3"


class SourceNotOnTrajectory(SyracuseError):
    code = "source_not_on_trajectory"


class CutoffReached(SyracuseError):
    """The iteration budget ran out before the target was reached."""

    code = "cutoff_reached"


class IndexOutOfRange(SyracuseError, IndexError):
    code = "index_out_of_range"


class PatternLengthMismatch(SyracuseError):
    code = "pattern_length_mismatch"


class InvalidP(SyracuseError):
    code = "invalid_p"


class TupleFormatError(SyracuseError, ValueError):
    """Malformed tuple text; ``position`` is the offending character offset."""

    code = "tuple_format_error"

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (position {position})")
        self.position = position
