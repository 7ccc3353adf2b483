"""Shared error types and the table-entry budget."""

# Default cap on materialized table / enumeration entries.  Dense spectrum
# tables, codeword enumerations and explicit graph builds refuse to allocate
# more entries than this; the CLI exposes --budget to override it.
DEFAULT_BUDGET = 2**30


class BudgetError(RuntimeError):
    """A computation would materialize more entries than the budget allows."""


class PchkFormatError(ValueError):
    """A parity-check file violates the gvpchk v1 format."""


class DivisibilityError(ArithmeticError):
    """An eigenvalue average failed exact divisibility.

    This cannot happen for tables produced by the library (the averaged
    character sums are integer eigenvalue sums of a genuine Cayley graph);
    it signals a corrupted table or an implementation bug.
    """


def check_budget(entries: int, budget: int | None, what: str) -> None:
    cap = DEFAULT_BUDGET if budget is None else budget
    if entries > cap:
        raise BudgetError(
            f"{what} needs {entries} table entries, exceeding the budget of {cap}; "
            f"raise the budget to proceed"
        )
