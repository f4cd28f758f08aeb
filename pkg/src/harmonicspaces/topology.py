"""Characteristic numbers of the compact models and volume lower bounds.

A compact manifold modeled on a negative-curvature rank-1 symmetric space
satisfies vol(M) >= vol(dual)/chi(dual) (Gauss-Bonnet argument, even
dimensions) and, when the dual has Hirzebruch signature 1,
vol(M) >= eps * vol(dual) with eps = 1 for orientable M and 1/2 otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import UnsupportedModel
from .spaces import Family, SpaceModel, model_volume, positive_dual


def euler_characteristic(model: SpaceModel) -> int:
    """Euler characteristic of a positive-curvature model."""
    if model.curvature_sign != 1:
        raise UnsupportedModel(f"{model} is not a compact positive-curvature model")
    if model.family is Family.SPHERE:
        return 2 if model.dimension % 2 == 0 else 0
    if model.family is Family.OCTONION_PLANE:
        return 3
    return model.projective_index + 1  # CP^k and HP^k alike


def signature(model: SpaceModel) -> int | None:
    """Hirzebruch signature; None when the dimension is not divisible by 4."""
    if model.curvature_sign != 1:
        raise UnsupportedModel(f"{model} is not a compact positive-curvature model")
    if model.dimension % 4 != 0:
        return None
    if model.family is Family.SPHERE:
        return 0
    if model.family is Family.OCTONION_PLANE:
        return 1
    # projective families with m divisible by 4
    return 1 if model.projective_index % 2 == 0 else 0


#: Isometric space-form classification is stronger than the topological
#: cover-multiplicativity bound for odd-index quaternionic spaces.
WOLF_SHARPENING_NOTE = (
    "topological bound {1,2}; the isometric classification of space forms "
    "excludes a free involution on HP^(2k+1), sharpening the order set to {1}"
)


def allowed_group_orders(model: SpaceModel) -> set[int]:
    """Orders of groups that can act freely, from cover multiplicativity of
    the Euler characteristic of the truncated-polynomial cohomology."""
    if model.curvature_sign != 1:
        raise UnsupportedModel(f"{model} is not a compact positive-curvature model")
    if model.family is Family.SPHERE:
        if model.dimension % 2 != 0:
            raise UnsupportedModel("odd spheres admit many space forms; out of scope")
        return {1, 2}
    if model.family is Family.OCTONION_PLANE:
        return {1}
    k = model.projective_index
    return {1} if k % 2 == 0 else {1, 2}


@dataclass(frozen=True)
class TopologyRecord:
    model: SpaceModel
    euler: int
    signature: int | None
    orientable_quotient_orders: frozenset[int]


def topology_record(model: SpaceModel) -> TopologyRecord:
    return TopologyRecord(
        model,
        euler_characteristic(model),
        signature(model),
        frozenset(allowed_group_orders(model)),
    )


@dataclass(frozen=True)
class VolumeBoundReport:
    """Lower volume bounds for compact manifolds modeled on a
    negative-curvature rank-1 symmetric space."""

    negative_model: SpaceModel
    dual: SpaceModel
    dual_volume: float
    euler: int
    signature: int | None
    gb_bound: float | None
    sig_bound: float | None
    epsilon: float
    notes: tuple[str, ...] = ()

    def to_json_dict(self) -> dict:
        return {
            "model": self.negative_model.model_id,
            "dual": self.dual.model_id,
            "dual_volume": self.dual_volume,
            "euler": self.euler,
            "signature": self.signature,
            "gb_bound": self.gb_bound,
            "sig_bound": self.sig_bound,
            "epsilon": self.epsilon,
            "notes": list(self.notes),
        }


#: The Cayley hyperbolic bound is vol(OP2)/chi(OP2) = vol(OP2)/3; an
#: alternatively circulated statement quotes a quaternionic volume in the
#: numerator.  The derivation value is reported and the mismatch flagged.
OP2_STATEMENT_NOTE = (
    "bound_statement_discrepancy: gauss-bonnet derivation gives vol(OP2)/3; "
    "a differently stated form of this bound quotes vol(HP^k)/3 instead"
)


def volume_bound_gauss_bonnet(negative_model: SpaceModel) -> VolumeBoundReport:
    """vol(M) >= vol(dual)/chi(dual) for even-dimensional duals."""
    if negative_model.curvature_sign != -1:
        raise UnsupportedModel(f"{negative_model} is not negatively curved")
    dual = positive_dual(negative_model)
    if dual.dimension % 2 != 0:
        raise UnsupportedModel(
            f"gauss-bonnet bound needs even dimension, {dual} has chi = 0"
        )
    chi = euler_characteristic(dual)
    vol = model_volume(dual)
    notes = []
    if dual.family is Family.OCTONION_PLANE:
        notes.append(OP2_STATEMENT_NOTE)
    return VolumeBoundReport(
        negative_model=negative_model,
        dual=dual,
        dual_volume=vol,
        euler=chi,
        signature=signature(dual),
        gb_bound=vol / chi,
        sig_bound=None,
        epsilon=1.0,
        notes=tuple(notes),
    )


def volume_bound_signature(
    negative_model: SpaceModel, orientable: bool = True
) -> VolumeBoundReport:
    """vol(M) >= eps * vol(dual) when the dual has signature 1."""
    if negative_model.curvature_sign != -1:
        raise UnsupportedModel(f"{negative_model} is not negatively curved")
    dual = positive_dual(negative_model)
    sig = signature(dual)
    if sig != 1:
        raise UnsupportedModel(
            f"signature bound needs sign(dual) = 1; {dual} has {sig!r}"
        )
    eps = 1.0 if orientable else 0.5
    vol = model_volume(dual)
    return VolumeBoundReport(
        negative_model=negative_model,
        dual=dual,
        dual_volume=vol,
        euler=euler_characteristic(dual),
        signature=sig,
        gb_bound=None,
        sig_bound=eps * vol,
        epsilon=eps,
    )


def volume_bounds(negative_model: SpaceModel, orientable: bool = True) -> VolumeBoundReport:
    """Both bounds merged into one report; sig_bound is None when the dual
    signature differs from 1."""
    gb = volume_bound_gauss_bonnet(negative_model)
    notes = list(gb.notes)
    sig_bound = None
    try:
        sig = volume_bound_signature(negative_model, orientable)
        sig_bound = sig.sig_bound
    except UnsupportedModel:
        notes.append("signature bound undefined: dual signature is not 1")
    if (
        negative_model.family is Family.QUATERNION_HYPERBOLIC
        and negative_model.projective_index % 2 == 1
    ):
        notes.append(WOLF_SHARPENING_NOTE)
    return VolumeBoundReport(
        negative_model=negative_model,
        dual=gb.dual,
        dual_volume=gb.dual_volume,
        euler=gb.euler,
        signature=gb.signature,
        gb_bound=gb.gb_bound,
        sig_bound=sig_bound,
        epsilon=1.0 if orientable else 0.5,
        notes=tuple(notes),
    )
