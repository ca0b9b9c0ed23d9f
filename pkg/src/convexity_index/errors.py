"""Exception types. All derive from ConvexityError so the CLI can catch one type."""


class ConvexityError(ValueError):
    pass


class EmptySet(ConvexityError):
    pass


class BadInterval(ConvexityError):
    pass


class NonPositiveScale(ConvexityError):
    pass


class EmptyList(ConvexityError):
    pass


class DimensionMismatch(ConvexityError):
    pass


class OutOfRange(ConvexityError):
    pass


class ConstraintViolated(ConvexityError):
    pass


class NotSorted(ConvexityError):
    pass


class Negative(ConvexityError):
    pass


class KTooLarge(ConvexityError):
    pass


class KTooSmall(ConvexityError):
    pass


class InvalidPartition(ConvexityError):
    pass


class AllSingletons(ConvexityError):
    pass


class MissingSubset(ConvexityError):
    pass


class NotMember(ConvexityError):
    pass


class DegenerateM(ConvexityError):
    pass


class NegativeInput(ConvexityError):
    pass


class BadOrdering(ConvexityError):
    pass


class DimensionTooSmall(ConvexityError):
    pass


class BadSpec(ConvexityError):
    pass


class DigitOverflow(ConvexityError):
    pass


class ParseError(ConvexityError):
    pass
