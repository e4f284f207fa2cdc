class ScopedEffectsError(Exception):
    pass


class SignatureError(ScopedEffectsError, ValueError):
    """A node does not match the signature it is built against."""


class UnhandledOperation(ScopedEffectsError, LookupError):
    """An algebra was asked to interpret a tag it does not cover."""


class LevelError(ScopedEffectsError):
    """An indexed algebra produced or received a value at the wrong level."""


class ConfigError(ScopedEffectsError, ValueError):
    pass
