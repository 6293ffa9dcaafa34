"""Exception types shared by every module."""


class GeometryError(ValueError):
    """Input violates an exactness or general-position requirement."""


class CapacityError(GeometryError):
    pass


class DuplicatePoint(GeometryError):
    def __init__(self, point):
        self.point = point
        super().__init__(f"duplicate point {tuple(point)}")


class CollinearPoints(GeometryError):
    def __init__(self, p, q, r):
        self.points = (p, q, r)
        super().__init__(
            "collinear points " + ", ".join(str(tuple(t)) for t in self.points))


class CollinearWithAnchor(CollinearPoints):
    """Two targets lie on a common line through the anchor."""


class OverlapError(ValueError):
    pass


class NotAMember(ValueError):
    pass


class OrderMismatch(ValueError):
    pass


class InconsistentCounts(ArithmeticError):
    """Derived counts came out negative or fractional: the input matrix is corrupt."""


class Exhausted(RuntimeError):
    """No admissible candidate exists in the sampled neighbourhood."""


class KernelDegeneracy(Exception):
    """Raised by the kernels with indices into their own point numbering.

    The public wrappers translate it into :class:`CollinearPoints`.
    """

    def __init__(self, a, b, c):
        self.indices = (int(a), int(b), int(c))
        super().__init__(self.indices)
