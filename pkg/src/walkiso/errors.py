"""Exception hierarchy shared by all walkiso modules."""


class WalkisoError(ValueError):
    """Base class for every error raised on bad input."""


class AsymmetricMatrix(WalkisoError):
    pass


class SelfLoop(WalkisoError):
    pass


class EmptyMatrix(WalkisoError):
    pass


class NotSquare(WalkisoError):
    pass


class LengthMismatch(WalkisoError):
    pass


class InvalidParams(WalkisoError):
    pass


class DimensionMismatch(WalkisoError):
    pass


class IndexOutOfRange(WalkisoError, IndexError):
    pass


class LevelMismatch(WalkisoError):
    pass


class SizeMismatch(WalkisoError):
    pass


class OrderMismatch(WalkisoError):
    pass


class OrderTooLarge(WalkisoError):
    pass


class FormatError(WalkisoError):
    """Raised by the parsers in :mod:`walkiso.formats`."""


class InvalidChar(FormatError):
    pass


class TruncatedBits(FormatError):
    pass


class ExcessBits(FormatError):
    pass


class OversizeOrder(FormatError):
    pass


class MalformedHeader(FormatError):
    pass


class MalformedLine(FormatError):
    pass


class VertexOutOfRange(FormatError):
    pass
