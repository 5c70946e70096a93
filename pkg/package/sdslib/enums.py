# Copyright SDSLIB CONTRIBUTORS 2024

from enum import Enum, auto, unique


@unique
class EquivMode(Enum):
    """
    Equivalence used to identify cyclic words.

    NECKLACE identifies cyclic shifts, BRACELET also allows reversal,
    CHARMED additionally allows multiplication of indices by any unit modulo the length.
    """

    NECKLACE = 1
    BRACELET = 2
    CHARMED = 3

    @classmethod
    def from_str(cls, s: str) -> "EquivMode":
        """
        Parse a mode name, case insensitive.
        """
        return cls[s.strip().upper()]


@unique
class Side(Enum):
    """
    Which base block a candidate sequence stands for.
    Side A is the larger block r, side B the smaller block s.
    """

    A = 1
    B = 2


@unique
class ExistenceStatus(Enum):
    """
    Outcome of an existence decision.
    """

    EXISTS = auto()
    NOT_EXISTS = auto()
    UNKNOWN = auto()


@unique
class ParamStatus(Enum):
    """
    Known state of a feasible parameter set.
    UNCATALOGUED marks parameter sets decided in earlier literature but not tracked here.
    """

    EXISTS = auto()
    NOT_EXISTS = auto()
    OPEN = auto()
    UNCATALOGUED = auto()


@unique
class WitnessSource(Enum):
    """
    Where a witness came from.
    """

    PUBLISHED = auto()
    SEARCH = auto()


@unique
class StrategyKind(Enum):
    """
    Search strategy for two-block existence decisions.
    """

    DIRECT = auto()
    COMPRESS = auto()
