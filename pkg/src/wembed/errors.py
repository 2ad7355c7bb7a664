"""Exception types raised across the package.

Every data or model error derives from :class:`WembedError` so callers
(notably the CLI) can distinguish recoverable data problems from bugs.
"""

from __future__ import annotations


class WembedError(Exception):
    """Base class for all package errors."""


# --- corpus / text ingestion ---------------------------------------------

class EmptyVocabulary(WembedError):
    """No token survived the min_count threshold."""


class InvalidUtf8(WembedError):
    """Input bytes are not valid UTF-8."""


class MalformedLine(WembedError):
    def __init__(self, line_number: int, reason: str = "fewer than two fields"):
        super().__init__(f"line {line_number}: {reason}")
        self.line_number = line_number


class SelfRelation(WembedError):
    def __init__(self, line_number: int, entity: str):
        super().__init__(f"line {line_number}: entity {entity!r} related to itself")
        self.line_number = line_number
        self.entity = entity


# --- model queries ---------------------------------------------------------

class OutOfVocabulary(WembedError):
    """A queried token/entity is not in the model, with fuzzy suggestions."""

    def __init__(self, token: str, suggestions: list[str] | None = None):
        self.token = token
        self.suggestions = suggestions or []
        msg = f"token {token!r} not in vocabulary"
        if self.suggestions:
            msg += "; did you mean: " + ", ".join(self.suggestions)
        super().__init__(msg)


class EmptyContext(WembedError):
    """A training step was given no context words."""


# --- glove -----------------------------------------------------------------

class ZeroRowSum(WembedError):
    def __init__(self, token_id: int):
        super().__init__(f"row {token_id} of the co-occurrence matrix sums to zero")
        self.token_id = token_id


class EmptyMatrix(WembedError):
    """Co-occurrence matrix has no nonzero entry."""


# --- poincare ----------------------------------------------------------------

class OutsideBall(WembedError):
    """A point violates the open-ball invariant for its curvature."""


class NonFiniteGradient(WembedError):
    """A gradient passed to the Riemannian update contains NaN or inf."""


class EmptyRelations(WembedError):
    """Relation set has no pairs."""


class TooFewEntities(WembedError):
    """Negative sampling has no candidate entities at all."""


class EmptyCandidates(WembedError):
    """Type prediction was given an empty candidate list."""


# --- evaluation --------------------------------------------------------------

class LengthMismatch(WembedError):
    """Gold and predicted label lists differ in length."""


class EmptyInput(WembedError):
    """Evaluation input is empty."""


class UnseenEntity(WembedError):
    def __init__(self, entity: str):
        super().__init__(f"held-out entity {entity!r} was never embedded")
        self.entity = entity


# --- persistence ---------------------------------------------------------------

class IoFailure(WembedError):
    """Underlying I/O error while reading or writing a model file."""


class InvalidToken(WembedError):
    def __init__(self, token: str):
        super().__init__(f"token {token!r} cannot be serialized (empty or contains whitespace)")
        self.token = token


class HeaderMismatch(WembedError):
    """Declared vocabulary size / dimension disagrees with file contents."""


class ParseError(WembedError):
    def __init__(self, line_number: int, reason: str):
        super().__init__(f"line {line_number}: {reason}")
        self.line_number = line_number
        self.reason = reason


class BallViolation(WembedError):
    def __init__(self, entity: str):
        super().__init__(f"stored point for {entity!r} lies outside the ball")
        self.entity = entity


# --- plotting -------------------------------------------------------------------

class DimensionError(WembedError):
    """Plotting requires a 2-dimensional model; no projection is applied."""
