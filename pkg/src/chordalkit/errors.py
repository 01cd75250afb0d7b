"""Exception hierarchy shared by every chordalkit module."""


class ChordalKitError(Exception):
    """Base class for all library errors."""


class UnknownVertex(ChordalKitError, KeyError):
    def __init__(self, label):
        super().__init__(label)
        self.label = label

    def __str__(self):
        return f"unknown vertex {self.label!r}"


class LoopEdge(ChordalKitError, ValueError):
    pass


class NotAPermutation(ChordalKitError, ValueError):
    pass


class NotAPeo(ChordalKitError, ValueError):
    pass


class InvalidSequence(ChordalKitError, ValueError):
    pass


class NotStalled(ChordalKitError, ValueError):
    pass


class TooLarge(ChordalKitError, ValueError):
    pass


class BadSize(ChordalKitError, ValueError):
    pass


class BadProbability(ChordalKitError, ValueError):
    pass


class CyclicInput(ChordalKitError, ValueError):
    pass


class ParseError(ChordalKitError, ValueError):
    """Malformed graph or certificate text; ``lineno`` is 1-based (0 if unknown)."""

    def __init__(self, message, lineno=0):
        super().__init__(message)
        self.message = message
        self.lineno = lineno

    def __str__(self):
        if self.lineno:
            return f"line {self.lineno}: {self.message}"
        return self.message
