"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class WmgSynthError(Exception):
    """Base class for all errors raised by wmgsynth."""


class EmptyWord(WmgSynthError):
    pass


class BadLabel(WmgSynthError):
    def __init__(self, position: int, token: str = ""):
        self.position = position
        self.token = token
        super().__init__(f"illegal label {token!r} at position {position}")


class BadProjection(WmgSynthError):
    pass


class BadVector(WmgSynthError):
    pass


class EmptyAlphabet(WmgSynthError):
    pass


class NonPrimeParikh(WmgSynthError):
    def __init__(self, gcd: int):
        self.gcd = gcd
        super().__init__(f"Parikh vector is not prime (gcd {gcd})")


class NonPrimeVector(WmgSynthError):
    def __init__(self, gcd: int):
        self.gcd = gcd
        super().__init__(f"T-vector is not prime (gcd {gcd})")


class NotEnabled(WmgSynthError):
    def __init__(self, transition: str, place: str):
        self.transition = transition
        self.place = place
        super().__init__(f"{transition} is not enabled: place {place} lacks tokens")


class StateBudgetExceeded(WmgSynthError):
    def __init__(self, max_states: int):
        self.max_states = max_states
        super().__init__(f"reachability graph exceeds {max_states} states")


class NonIntegerScaling(WmgSynthError):
    pass


class NotChoiceFree(WmgSynthError):
    pass


class NotReversible(WmgSynthError):
    pass


class NotCircuit(WmgSynthError):
    pass


class NotConservative(WmgSynthError):
    pass


class PreconditionViolated(WmgSynthError):
    def __init__(self, which: str):
        self.which = which
        super().__init__(f"precondition violated: {which}")


class SimulationDiverged(WmgSynthError):
    pass


class AlphabetTooLarge(WmgSynthError):
    def __init__(self, size: int):
        self.size = size
        super().__init__(f"alphabet of {size} letters; CF decision only for <= 3")


class NetFormatError(WmgSynthError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        where = f"line {line}: " if line is not None else ""
        super().__init__(where + message)
