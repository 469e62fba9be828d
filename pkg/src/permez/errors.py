"""Exception hierarchy, grouped into families that map to CLI exit codes."""


class PermezError(Exception):
    """Base class for all errors raised by this package."""


class ConfigError(PermezError):
    """Invalid user-supplied configuration (bounds, dims, flags)."""


# --- data / transform family ---------------------------------------------

class DataError(PermezError):
    """Problems with the numeric content of input data."""


class NonFiniteInput(DataError):
    """NaN or Inf encountered where finite values are required."""


class DegenerateBlock(DataError):
    """Block contains no nonzero element; use the trivial-block path."""


class SubnormalMinimum(DataError):
    """Smallest nonzero magnitude is at or below the representational
    floor; caller must reclassify sub-floor magnitudes as zeros and
    recompute block statistics."""


class NonRepresentableFactor(DataError):
    """Computed negative-branch factor overflows the 64-bit float range."""


# --- training family ------------------------------------------------------

class TrainingError(PermezError):
    pass


class DivergedTraining(TrainingError):
    """A weight became non-finite during a training step."""


class EmptyDataset(TrainingError):
    pass


class TooFewBlocks(TrainingError):
    """Fewer than the minimum sampled blocks needed for an 8:2 split."""


class SweepExhausted(TrainingError):
    """No hyperparameter candidate satisfied the validation error bound."""


# --- coding family --------------------------------------------------------

class CodingError(PermezError):
    pass


class BalanceFlagNotDequantizable(CodingError):
    """Code 0 flags an unpredictable point and carries no residual."""


class DegenerateAlphabet(CodingError):
    """Fewer than two symbols have nonzero frequency."""


class UnassignedCode(CodingError):
    """A symbol has no codeword in the codebook."""


class TruncatedStream(CodingError):
    """Bit stream ended inside a codeword."""


class InvalidPrefix(CodingError):
    """Bits do not match any codeword (corrupted input)."""


# --- container family -----------------------------------------------------

class ContainerError(PermezError):
    pass


class BadMagic(ContainerError):
    pass


class UnsupportedVersion(ContainerError):
    pass


class Corrupt(ContainerError):
    """Structural inconsistency: lengths, offsets, counts, or padding."""


class BalanceUnderflow(ContainerError):
    """More balance-point flags in the code stream than stored values."""


# --- ingest family --------------------------------------------------------

class IngestError(PermezError):
    pass


class UnsupportedFormatCode(IngestError):
    pass


class TruncatedFile(IngestError):
    pass


class InconsistentTraceLength(IngestError):
    pass


class SizeMismatch(IngestError):
    pass


class DimensionMismatch(IngestError):
    pass
