"""Exception hierarchy. Every error the CLI can report by name lives here."""


class TriexpError(ValueError):
    """Base class for all package errors."""


# series
class EmptySeries(TriexpError):
    pass


class NonIncreasingAbscissa(TriexpError):
    pass


class NonFiniteValue(TriexpError):
    pass


class UnknownFixture(TriexpError):
    pass


# smoothing
class SeriesTooShort(TriexpError):
    pass


# linear algebra
class SingularMatrix(TriexpError):
    pass


class RankDeficient(TriexpError):
    pass


class NoConvergence(TriexpError):
    pass


class ZeroNode(TriexpError):
    pass


# fitting
class InvalidOptions(TriexpError):
    pass


class SingularPredictionSystem(TriexpError):
    pass


class ZeroRoot(TriexpError):
    pass


class RepeatedRoot(TriexpError):
    pass


class NodeMismatch(TriexpError):
    pass


class UnpairedTerm(TriexpError):
    pass


class InvalidModel(TriexpError):
    pass


# metrics
class InvalidSpec(TriexpError):
    pass


# io
class ParseError(TriexpError):
    pass
