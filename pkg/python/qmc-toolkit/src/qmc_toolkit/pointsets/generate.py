from .interlace import interlace
from .lattice import lattice_points
from .net import hoplr_net, net_points, plr_to_net
from .sobol import sobol_net
from .types import (
    DigitalNetBase2,
    HigherOrderPLR,
    IidPointSet,
    InterlacedNet,
    Points,
    PointSetDef,
    PointSetError,
    PolynomialLatticeRule,
    Rank1Lattice,
    SobolNet,
)


def to_digital_net(defn: PointSetDef) -> DigitalNetBase2:
    """Generating matrices of any digital construction."""
    match defn:
        case DigitalNetBase2():
            return defn
        case PolynomialLatticeRule():
            return plr_to_net(defn)
        case HigherOrderPLR():
            return hoplr_net(defn)
        case SobolNet():
            return sobol_net(defn.spec, defn.s, defn.k, defn.w)
        case InterlacedNet():
            return interlace(to_digital_net(defn.inner), defn.d, defn.w)
        case _:
            raise PointSetError(f"{defn.kind} point sets are not digital nets")


def point_count(defn: PointSetDef) -> int:
    if isinstance(defn, (Rank1Lattice, IidPointSet)):
        return defn.n
    if isinstance(defn, InterlacedNet):
        return point_count(defn.inner)
    return 1 << defn.k


def generate_points(defn: PointSetDef, start: int = 0, stop: int | None = None) -> Points:
    """Deterministic points ``start`` to ``stop - 1`` of a construction."""
    if isinstance(defn, Rank1Lattice):
        return lattice_points(defn, start, stop)
    if isinstance(defn, IidPointSet):
        raise PointSetError("i.i.d. points only exist per replicate; generate them with a randomization")
    return net_points(to_digital_net(defn), start, stop)


def leading_coordinates(defn: PointSetDef, s: int) -> PointSetDef:
    """The same construction restricted to its first s coordinates."""
    if not 1 <= s <= defn.s:
        raise PointSetError(f"Cannot project {defn.s} coordinates onto the first {s}")
    match defn:
        case Rank1Lattice() | PolynomialLatticeRule() | HigherOrderPLR():
            return defn.model_copy(update={"gen": defn.gen[:s]})
        case DigitalNetBase2():
            return defn.model_copy(update={"matrices": defn.matrices[:s]})
        case SobolNet() | IidPointSet():
            return defn.model_copy(update={"s": s})
        case InterlacedNet():
            inner = leading_coordinates(defn.inner, s * defn.d)
            return defn.model_copy(update={"inner": inner})
    raise PointSetError(f"Unsupported point set {defn!r}")
