"""Failure type separating statistical failures from caller errors.

A method that cannot produce an endpoint for *this data* (zero-variance
correlation resample, bias fraction of 0 or 1, no admissible order
statistic, ...) raises :class:`EstimationFailure`. These are data events the
simulation harness records and counts; programming errors (illegal
arguments, arity mismatches) raise plain ``ValueError``.
"""


class EstimationFailure(Exception):
    """A functional or CI method could not produce a value for this data."""

    def __init__(self, reason: str, detail: str = ""):
        self.reason = reason
        super().__init__(detail or reason)
