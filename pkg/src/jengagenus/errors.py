"""Exception types shared across the package."""


class JengaError(Exception):
    """Base class for all domain errors raised by this package."""


class BoxDescriptionError(JengaError, ValueError):
    """A box-description file or string violates the .jenga format."""


class MalformedHeader(BoxDescriptionError):
    pass


class BadLineLength(BoxDescriptionError):
    pass


class BadCharacter(BoxDescriptionError):
    pass


class EmptyLevel(BoxDescriptionError):
    pass


class NoLevels(BoxDescriptionError):
    pass


class ParameterError(JengaError, ValueError):
    """Game parameters outside the supported domain (n >= 2, k >= 2, parity...)."""


class SurfaceError(JengaError, ValueError):
    """A surface-level operation was applied to an unsuitable complex."""


class MoveError(JengaError, ValueError):
    """An illegal game move was applied."""


class DeformError(JengaError, ValueError):
    """A deformation operation violated its shape constraints."""
