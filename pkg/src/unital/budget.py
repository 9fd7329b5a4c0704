"""Candidate budgets for the exhaustive audits."""

import os

from .errors import BudgetExceeded

ENV_VAR = "UNITAL_MAX_CANDIDATES"
DEFAULT_LIMIT = 10_000_000


class CandidateBudget:
    """Counts candidate evaluations and aborts once the cap is reached.

    Each audit creates a fresh budget, so the cap is per audit, not per
    process.  The cap comes from UNITAL_MAX_CANDIDATES when set.
    """

    def __init__(self, limit=None):
        if limit is None:
            limit = int(os.environ.get(ENV_VAR, DEFAULT_LIMIT))
        self.limit = limit
        self.used = 0

    def spend(self, n=1):
        self.used += n
        if self.used > self.limit:
            raise BudgetExceeded(
                f"candidate budget exhausted ({self.limit}); raise {ENV_VAR}"
            )
