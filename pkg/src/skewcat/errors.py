class SkewcatError(Exception):
    pass


class StructuralError(SkewcatError):
    """Tables are malformed: dangling ids, missing entries, wrong types."""


class CompositionError(StructuralError):
    pass


class SearchOverflow(SkewcatError):
    """An exhaustive search would exceed the configured bound."""


class NotLeftNormal(SkewcatError):
    pass
