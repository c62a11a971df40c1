from dataclasses import dataclass

from models.laurent import LaurentSeries
from utils.errors import BadPrecision, NotInA


@dataclass(frozen=True)
class HurwitzParams:
    """The fixed data (a, z) of zeta_inf(s0, s, a, z) together with the target precision N."""

    a: LaurentSeries
    z: int = 0
    prec: int = 16

    def __post_init__(self):
        if self.a.is_zero or self.a.val >= 0:
            raise NotInA(f"|a|_inf must exceed 1, but v_inf(a) = {self.a.val}")
        if self.prec < 1:
            raise BadPrecision(f"target precision must be positive, got {self.prec}")

    @property
    def m(self) -> int:
        """m = -v_inf(a), the degree of a in T."""
        return -self.a.val

    @property
    def q(self) -> int:
        return self.a.field.q

    def to_dict(self):
        """Convert the parameters to a dictionary representation."""
        return {"m": self.m, "z": self.z, "prec": self.prec}
