# Exceptions raised by the pipeline. Library code raises them; main.py and
# Commands/ turn them into console errors and exit codes.


class DocforgeError(Exception):
    """Base class for every error the pipeline raises on purpose."""


class UsageError(DocforgeError):
    """Invalid combination of command-line options."""


class CorpusError(DocforgeError):
    """The documentation corpus could not be acquired."""


class ClassifierError(DocforgeError):
    """Training data or a model file is unusable."""


class ExtractionError(DocforgeError):
    """The pipeline produced nothing to build a specification from."""


class SpecFormatError(DocforgeError):
    """A specification document could not be parsed."""

    def __init__(self, message, line=None, column=None):
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)
        self.line = line
        self.column = column
