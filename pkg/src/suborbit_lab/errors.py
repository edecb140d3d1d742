"""Exception types raised across the package."""


class SuborbitLabError(Exception):
    """Base class for every error raised by suborbit_lab."""


class ClosureCapExceeded(SuborbitLabError):
    def __init__(self, cap: int):
        super().__init__(
            f"group has more than {cap} elements; pick a smaller instance "
            "or raise the cap (SUBORBIT_LAB_CLOSURE_CAP)"
        )
        self.cap = cap


class NotASubgroup(SuborbitLabError):
    pass


class NotTransitive(SuborbitLabError):
    pass


class NotClosed(SuborbitLabError):
    pass


class BadConstructorInput(SuborbitLabError):
    pass


class OrderTooLarge(SuborbitLabError):
    pass


class PreconditionRatio(SuborbitLabError):
    pass


class NotRegular(SuborbitLabError):
    pass


class NotProper(SuborbitLabError):
    pass


class BadTauInput(SuborbitLabError):
    pass


class NotExtraspecialShape(SuborbitLabError):
    pass


class ParseError(SuborbitLabError):
    def __init__(self, line: int, reason: str):
        super().__init__(f"line {line}: {reason}")
        self.line = line
        self.reason = reason


class ValidationError(SuborbitLabError):
    def __init__(self, name: str, reason: str, line: int | None = None):
        where = f" (line {line})" if line is not None else ""
        super().__init__(f"{name}{where}: {reason}")
        self.name = name
        self.reason = reason
        self.line = line
