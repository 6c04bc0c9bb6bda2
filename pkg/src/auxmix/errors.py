"""Exception hierarchy for auxmix.

All library errors derive from AuxmixError so callers can catch one base
class at CLI/harness boundaries while tests assert on specific types.
"""


class AuxmixError(Exception):
    """Base class for all auxmix errors."""


class DatasetError(AuxmixError):
    """Unknown dataset id, missing class, or unavailable data source."""


class ScenarioError(AuxmixError):
    """Invalid scenario construction request (counts, overlap, classes)."""


class ScenarioIOError(AuxmixError):
    """Corrupt, truncated, or version-incompatible scenario files."""


class AugmentError(AuxmixError):
    """Invalid augmentation input (non-square image, bad rotation index)."""


class CheckpointError(AuxmixError):
    """Corrupt checkpoint file or architecture/checkpoint mismatch."""


class NumericalFaultError(AuxmixError):
    """Non-finite values encountered in a forward pass or loss."""


class DivergenceError(AuxmixError):
    """Training loss stayed above the divergence guard for too long."""


class DegeneratePrototypeError(AuxmixError):
    """A class prototype has zero norm; cosine affinity is undefined."""


class HashMismatchError(AuxmixError):
    """Artifact content hashes disagree; refusing to mix inconsistent inputs."""


class ReportError(AuxmixError):
    """Report request over incompatible or missing run artifacts."""
