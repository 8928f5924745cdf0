import os

# Search caps for enumeration and path-end feasibility, overridable from the environment
DEFAULT_ENUM_CAP = 8
DEFAULT_ENUM_BUDGET_CAP = 9

DATABASE_URL = os.getenv("GALLAI_DATABASE_URL", "sqlite:///./gallai_census.db")


def enumeration_cap() -> int:
    """
    Largest n the enumerator accepts without the budget flag.
    """
    return int(os.getenv("GALLAI_ENUM_CAP", str(DEFAULT_ENUM_CAP)))


def enumeration_budget_cap() -> int:
    """
    Largest n the enumerator accepts when the caller passes a time budget.
    """
    return int(os.getenv("GALLAI_ENUM_BUDGET_CAP", str(DEFAULT_ENUM_BUDGET_CAP)))


def log_level() -> str:
    return os.getenv("GALLAI_LOG_LEVEL", "WARNING").upper()
