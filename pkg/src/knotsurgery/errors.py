"""Exception hierarchy.

``InputError`` subclasses signal bad user input (CLI exit code 1);
``InternalConsistencyError`` signals a failed self-check (exit code 2).
"""


class InputError(ValueError):
    pass


class BraidSyntaxError(InputError):
    pass


class GeneratorIndexError(InputError):
    pass


class ComponentError(InputError):
    """The braid closes up to a link rather than a knot."""


class DimensionMismatchError(InputError):
    pass


class SchemaError(InputError):
    """Malformed SW data file or knot table."""


class InexactDivisionError(ArithmeticError):
    pass


class InternalConsistencyError(RuntimeError):
    pass
