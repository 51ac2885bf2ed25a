"""Exception types shared across the toolkit."""


class DeidForgeError(Exception):
    """Base class for all toolkit errors."""


class ShapeError(DeidForgeError, ValueError):
    """Tensor/image dimensions violate an operation's contract."""


class ContractError(DeidForgeError, ValueError):
    """A non-shape precondition was violated (e.g. non-scalar loss, missing grad)."""


class DegenerateLandmarksError(DeidForgeError, ValueError):
    """Landmark configuration is collinear/degenerate; no stable affine exists."""


class DegenerateTransformError(DeidForgeError, ValueError):
    """Affine transform is singular and cannot be inverted."""


class DegenerateMaskError(DeidForgeError, ValueError):
    """Mask hull points are collinear; no fillable polygon exists."""


class MissingDonorError(DeidForgeError, KeyError):
    """Requested donor id is not present in the model."""


class InvalidParameterError(DeidForgeError, ValueError):
    """Toy-face parameters fall outside their documented ranges."""


class InvalidConfigError(DeidForgeError, ValueError):
    """Training/pipeline configuration violates its invariants."""


class InvalidDataError(DeidForgeError, ValueError):
    """Input data (face sets, landmark files) violates its invariants."""


class CheckpointError(DeidForgeError, IOError):
    """Base class for checkpoint load failures."""


class CorruptHeaderError(CheckpointError):
    """Checkpoint file does not start with the expected magic bytes."""


class UnknownVersionError(CheckpointError):
    """Checkpoint format version is not supported."""


class TruncatedCheckpointError(CheckpointError):
    """Checkpoint ends mid-record or carries trailing bytes."""
