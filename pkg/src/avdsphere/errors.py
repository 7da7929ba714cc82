"""Exception types shared across the package.

Every failure raised by this package derives from :class:`PipelineError`, so
the CLI can print a stable error name and map it to an exit code: 1 for I/O
trouble, 2 for validation and domain errors.
"""


class PipelineError(Exception):
    exit_code = 2

    @property
    def name(self) -> str:
        return type(self).__name__.removesuffix("Error")


# --- ingest ---

class MissingFileError(PipelineError):
    exit_code = 1


class MalformedRowError(PipelineError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class DuplicateUttIdError(PipelineError):
    def __init__(self, utt_id: str, line: int):
        super().__init__(f"line {line}: duplicate utt_id {utt_id!r}")
        self.utt_id = utt_id
        self.line = line


class RangeViolationError(PipelineError):
    def __init__(self, utt_id: str, field: str, value: float):
        super().__init__(f"{utt_id}: {field}={value!r} outside validation envelope")
        self.utt_id = utt_id
        self.field = field
        self.value = value


class EmptyDatasetError(PipelineError):
    pass


# --- sphere ---

class NoNeutralRecordsError(PipelineError):
    pass


class TooFewSamplesError(PipelineError):
    pass


class DegenerateScaleError(PipelineError):
    pass


class DegenerateRadiusError(PipelineError):
    pass


class UnknownEmotionError(PipelineError):
    def __init__(self, label: str):
        super().__init__(f"unknown emotion label {label!r}")
        self.label = label


class OctantOutOfRangeError(PipelineError):
    pass


class ModelFormatError(PipelineError):
    pass


# --- encoder ---

class LengthMismatchError(PipelineError):
    pass


class DimensionMismatchError(PipelineError):
    pass


# --- adversarial ---

class WindowTooLongError(PipelineError):
    pass


class StartOutOfRangeError(PipelineError):
    pass


class ShapeMismatchError(PipelineError):
    pass


class BatchMismatchError(PipelineError):
    pass


class MalformedMelFileError(PipelineError):
    pass


# --- control ---

class UnknownPresetError(PipelineError):
    pass


class ZeroStyleVectorError(PipelineError):
    pass


class IntensityOutOfRangeError(PipelineError):
    pass
