"""Exception hierarchy shared by all modules.

The CLI maps :class:`DataError` subclasses to exit code 3 and
:class:`NumericError` subclasses to exit code 4.
"""


class LFuncError(Exception):
    pass


class DataError(LFuncError):
    pass


class NumericError(LFuncError):
    pass


class BoundsError(DataError, ValueError):
    pass


class DomainError(DataError, ValueError):
    pass


class ArityError(DataError, ValueError):
    pass


class IncompleteInputError(DataError, KeyError):
    def __str__(self):
        # KeyError quotes its message otherwise
        return str(self.args[0]) if self.args else ""


class PartialLError(DataError, ValueError):
    """A bad prime was passed where only good primes are meaningful."""


class BadReductionError(DataError, ValueError):
    pass


class WorkBoundError(DataError, ValueError):
    pass


class ParseError(DataError, ValueError):
    def __init__(self, message, line=None, path=None):
        self.line = line
        self.path = path
        where = ""
        if path is not None:
            where += f"{path}:"
        if line is not None:
            where += f"{line}:"
        super().__init__(f"{where} {message}" if where else message)


class ConsistencyError(NumericError):
    pass
