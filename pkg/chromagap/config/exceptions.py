from typing import Optional


class ChromagapError(Exception):
    """Base error for the library and CLI"""
    pass


class ConfigError(ChromagapError):
    """Base configuration error"""
    pass


class ConfigValidationError(ConfigError):
    """Configuration validation error"""
    pass


class InputFormatError(ChromagapError):
    """Malformed input text; carries the offending position when known"""

    def __init__(self, message: str, offset: Optional[int] = None, line: Optional[int] = None):
        self.message = message
        self.offset = offset
        self.line = line
        where = []
        if line is not None:
            where.append(f"line {line}")
        if offset is not None:
            where.append(f"byte {offset}")
        super().__init__(f"{message} ({', '.join(where)})" if where else message)


class GraphFormatError(InputFormatError):
    """Invalid graph input (bad vertex, loop, broken graph6 or edge-list text)"""
    pass


class OrderingFormatError(InputFormatError):
    """Invalid edge ordering"""
    pass


class AssignmentFormatError(InputFormatError):
    """Invalid list assignment text"""
    pass


class InvalidEdgeError(ChromagapError):
    """Edge reference outside the canonical edge list"""
    pass


class AssignmentError(ChromagapError):
    """List assignment unusable for the requested operation"""
    pass


class PreconditionError(ChromagapError):
    """Operation precondition failed"""
    pass


class NotApplicableError(PreconditionError):
    """Inequality precondition failed; reported as not-applicable"""

    def __init__(self, reason: str):
        self.reason = reason
        super().__init__(reason)


class BudgetExceededError(ChromagapError):
    """Enumeration would exceed the configured budget"""

    def __init__(self, what: str, required: int, budget: int):
        self.what = what
        self.required = required
        self.budget = budget
        super().__init__(f"{what}: requires {required} evaluations, budget is {budget}")


class OracleMismatchError(ChromagapError):
    """Two independent algorithms returned different values"""
    pass
