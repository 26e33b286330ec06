"""Exception hierarchy shared by every module."""


class NetFreqError(Exception):
    """Base class for all library errors."""


class SentinelCollision(NetFreqError, ValueError):
    """Input contains the reserved sentinel byte 0x00."""


class OutOfBounds(NetFreqError, IndexError):
    """A text position or suffix-array row lies outside its valid range."""


class OutOfRange(NetFreqError, ValueError):
    """A numeric parameter lies outside the supported range."""


class IndexFormatError(NetFreqError, ValueError):
    """A serialized index is malformed or fails validation."""
