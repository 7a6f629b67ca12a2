"""Exact rational group-algebra verification of the endomorphism identities.

Statements about abelian varieties are replaced by their group-algebra
shadows: eigenspaces become idempotent projectors, norm/pullback composites
become subgroup sums, and "multiplication by an integer" becomes an exact
scalar identity on a projector.  Every verification here is an identity in
a finite-dimensional algebra over the rationals, so tolerances are zero,
literally.  Reports distinguish identities that are *verified* from paper
statements that are merely *represented* (kernel bounds, strictness).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import kernels
from .checks import VerificationReport
from .galois import ClosureModel, subgroup_functional
from .group import GroupTable, Subgroup
from .monodromy import find_klein_monodromy, klein_group

__all__ = [
    "AlgebraElement",
    "EigenProjector",
    "algebra_product",
    "build_projector",
    "verify_phi_identity",
    "verify_composite_alpha",
    "torsion_containment_shadow",
    "TorsionShadow",
    "verify_klein_identities",
]

# Convolutions run over scaled int64 numerators when the accumulated
# magnitudes provably fit; otherwise the exact Fraction loop takes over.
_INT64_SAFE = 2**62


class AlgebraElement:
    """A formal rational linear combination of group elements.

    Coefficients are exact ``Fraction`` values keyed by element index;
    zero coefficients are never stored.  The product is the convolution
    induced by the group multiplication.
    """

    __slots__ = ("group", "coeffs")

    def __init__(self, group: GroupTable, coeffs: dict[int, Fraction]):
        self.group = group
        self.coeffs = {
            i: Fraction(c) for i, c in coeffs.items() if c != 0
        }

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls, group: GroupTable) -> "AlgebraElement":
        return cls(group, {})

    @classmethod
    def unit(cls, group: GroupTable) -> "AlgebraElement":
        return cls(group, {group.index_of_identity: Fraction(1)})

    @classmethod
    def basis(cls, group: GroupTable, index: int) -> "AlgebraElement":
        return cls(group, {index: Fraction(1)})

    @classmethod
    def subgroup_sum(cls, sub: Subgroup) -> "AlgebraElement":
        return cls(sub.parent, {i: Fraction(1) for i in sub.indices()})

    # -- linear structure --------------------------------------------------

    def _match(self, other: "AlgebraElement") -> None:
        if self.group is not other.group:
            raise ValueError("algebra elements over different groups")

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._match(other)
        out = dict(self.coeffs)
        for i, c in other.coeffs.items():
            out[i] = out.get(i, Fraction(0)) + c
        return AlgebraElement(self.group, out)

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + (-other)

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement(self.group, {i: -c for i, c in self.coeffs.items()})

    def scale(self, scalar) -> "AlgebraElement":
        scalar = Fraction(scalar)
        return AlgebraElement(
            self.group, {i: scalar * c for i, c in self.coeffs.items()}
        )

    def __rmul__(self, scalar):
        if isinstance(scalar, (int, Fraction)):
            return self.scale(scalar)
        return NotImplemented

    # -- multiplication ------------------------------------------------------

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._match(other)
        if not self.coeffs or not other.coeffs:
            return AlgebraElement.zero(self.group)
        return self._convolve(other)

    def _convolve(self, other: "AlgebraElement") -> "AlgebraElement":
        # A single-element factor only translates (and scales) the other
        # side's support; skip the kernel machinery.
        mul = self.group.mul
        if len(self.coeffs) == 1:
            ((i, a),) = self.coeffs.items()
            return AlgebraElement(
                self.group, {mul(i, j): a * b for j, b in other.coeffs.items()}
            )
        if len(other.coeffs) == 1:
            ((j, b),) = other.coeffs.items()
            return AlgebraElement(
                self.group, {mul(i, j): a * b for i, a in self.coeffs.items()}
            )
        denom_a = math.lcm(*(c.denominator for c in self.coeffs.values()))
        denom_b = math.lcm(*(c.denominator for c in other.coeffs.values()))
        idx_a = sorted(self.coeffs)
        idx_b = sorted(other.coeffs)
        num_a = [int(self.coeffs[i] * denom_a) for i in idx_a]
        num_b = [int(other.coeffs[i] * denom_b) for i in idx_b]
        bound = (
            max(abs(n) for n in num_a)
            * max(abs(n) for n in num_b)
            * min(len(num_a), len(num_b))
        )
        if bound >= _INT64_SAFE:
            return self._convolve_fractions(other)
        support, nums = kernels.convolve(
            self.group.rows,
            self.group.dense_table,
            np.asarray(idx_a, dtype=np.int64),
            np.asarray(num_a, dtype=np.int64),
            np.asarray(idx_b, dtype=np.int64),
            np.asarray(num_b, dtype=np.int64),
        )
        denom = denom_a * denom_b
        return AlgebraElement(
            self.group,
            {int(i): Fraction(int(n), denom) for i, n in zip(support, nums)},
        )

    def _convolve_fractions(self, other: "AlgebraElement") -> "AlgebraElement":
        mul = self.group.mul
        out: dict[int, Fraction] = {}
        for i, a in self.coeffs.items():
            for j, b in other.coeffs.items():
                k = mul(i, j)
                out[k] = out.get(k, Fraction(0)) + a * b
        return AlgebraElement(self.group, out)

    # -- queries ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def support(self) -> list[int]:
        return sorted(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.group is other.group and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        terms = ", ".join(
            f"{i}: {c}" for i, c in sorted(self.coeffs.items())
        )
        return f"AlgebraElement({{{terms}}})"


def algebra_product(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    """Convolution product; the function form of ``a * b``."""
    if not isinstance(a, AlgebraElement) or not isinstance(b, AlgebraElement):
        raise TypeError("algebra_product expects two algebra elements")
    return a * b


@dataclass(frozen=True)
class EigenProjector:
    """The idempotent cutting out the eigenspace where the chosen index-2
    subgroup acts trivially and the rest of N acts by -1."""

    index: int
    functional: int
    idempotent: AlgebraElement


def _n_character_values(model: ClosureModel, functional: int) -> dict[int, int]:
    return {
        idx: (-1 if (code & functional).bit_count() % 2 else 1)
        for idx, code in model.code_of_index.items()
    }


def build_projector(model: ClosureModel, i: int) -> EigenProjector:
    """Projector e_i for the i-th orbit representative (1-based i <= m).

    Verifies idempotency and both eigen-relations exactly before
    returning; a failure indicates a broken multiplication table.  The
    eigen-relations are checked for every element of N, with the products
    computed in one vectorized batch per element (signs stay exact).
    """
    if not 1 <= i <= model.m:
        raise ValueError(f"i must be in 1..{model.m}, got {i}")
    G = model.G
    f = subgroup_functional(model, model.R[i - 1])
    chi = _n_character_values(model, f)
    half = Fraction(1, 2 ** (model.p - 1))
    e = AlgebraElement(G, {idx: half * sign for idx, sign in chi.items()})

    if e * e != e:
        raise RuntimeError("projector is not idempotent: broken Cayley table")

    rows = G.rows
    support = np.array(sorted(chi), dtype=np.int64)
    signs = np.array([chi[idx] for idx in support], dtype=np.int64)
    support_rows = rows[support]
    for n_idx, n_sign in chi.items():
        # (n*g) images are g's images composed after n's.
        prods = support_rows[:, rows[n_idx]]
        prod_idx = kernels.lookup_rows(rows, prods)
        pos = np.searchsorted(support, prod_idx)
        if not np.array_equal(support[pos], prod_idx):
            raise RuntimeError("N is not closed under left translation")
        if not np.array_equal(signs[pos], n_sign * signs):
            raise RuntimeError(
                "projector eigen-relation failed: broken Cayley table"
            )
    return EigenProjector(index=i, functional=f, idempotent=e)


def _sigma_sum(model: ClosureModel) -> AlgebraElement:
    G = model.G
    return AlgebraElement(
        G,
        {G.power(model.sigma, k): Fraction(1) for k in range(model.p)},
    )


def verify_phi_identity(model: ClosureModel) -> VerificationReport:
    """The diagonal endomorphism identity: for every i the composite of
    the subgroup sum over R_i with the full sigma sum acts on e_i as
    multiplication by 2^(p-2), together with its two proof steps and the
    conjugate-subgroup facts they rest on."""
    G, p = model.G, model.p
    constant = 2 ** (p - 2)
    report = VerificationReport(
        f"endomorphism identity (p={p}, constant={constant})"
    )
    sigma_sum = _sigma_sum(model)
    for i in range(1, model.m + 1):
        proj = build_projector(model, i)
        e = proj.idempotent
        r_sum = AlgebraElement.subgroup_sum(model.R[i - 1])
        phi = r_sum * sigma_sum

        report.check(
            f"phi_{i}_scales_projector_by_{constant}",
            phi * e == constant * e,
        )
        report.check(
            f"subgroup_sum_{i}_scales_projector_by_{constant}",
            r_sum * e == constant * e,
        )
        cross_ok = True
        for k in range(1, p):
            shifted = AlgebraElement.basis(G, G.power(model.sigma, k)) * e
            if not (r_sum * shifted).is_zero():
                cross_ok = False
        report.check(f"cross_terms_{i}_vanish", cross_ok)

        conj_distinct = True
        conj_half = True
        expected_meet = 2 ** (p - 3) if p >= 3 else 0
        for k in range(1, p):
            conj = model.R[i - 1].conjugate_by(G.power(model.sigma, k))
            if conj == model.R[i - 1]:
                conj_distinct = False
            meet = (conj.bitset & model.R[i - 1].bitset).bit_count()
            if meet != expected_meet:
                conj_half = False
        report.check(f"conjugates_of_R{i}_all_distinct", conj_distinct)
        report.check(
            f"conjugates_of_R{i}_meet_in_half",
            conj_half,
            f"expected intersection size {expected_meet}",
        )
    return report


def verify_composite_alpha(
    model: ClosureModel, blocks: str = "all"
) -> VerificationReport:
    """Block decomposition of the full composite: diagonal blocks scale
    their projector by 2^(p-2) and off-diagonal blocks annihilate it.

    ``blocks`` is "all" or "diagonal"; the off-diagonal sweep is O(m^2)
    convolutions and can be restricted for large p.
    """
    if blocks not in ("all", "diagonal"):
        raise ValueError(f"blocks must be 'all' or 'diagonal', got {blocks!r}")
    G, p = model.G, model.p
    constant = 2 ** (p - 2)
    report = VerificationReport(
        f"composite block decomposition (p={p}, blocks={blocks})"
    )
    sigma_sum = _sigma_sum(model)
    projectors = [build_projector(model, i) for i in range(1, model.m + 1)]
    r_sums = [AlgebraElement.subgroup_sum(r) for r in model.R]
    for i, proj in enumerate(projectors, start=1):
        e = proj.idempotent
        for j, r_sum in enumerate(r_sums, start=1):
            if blocks == "diagonal" and i != j:
                continue
            block = r_sum * (sigma_sum * e)
            if i == j:
                report.check(
                    f"diagonal_block_{i}_scales_by_{constant}",
                    block == constant * e,
                )
            else:
                report.check(
                    f"off_diagonal_block_{j}_{i}_vanishes",
                    block.is_zero(),
                )
    return report


@dataclass(frozen=True)
class TorsionShadow:
    """The kernel bounds implied at algebra level, plus explicit flags for
    what is and is not machine-checked."""

    p: int
    lower: int
    upper: int
    bounds_coincide: bool
    premise_verified: bool
    strictness_note: str

    def as_dict(self) -> dict:
        return {
            "kind": "paper statement represented, not a verified identity "
                    "(only the premise scalar identity is verified)",
            "lower_bound": str(self.lower),
            "upper_bound": str(self.upper),
            "bounds_coincide": self.bounds_coincide,
            "premise_verified": self.premise_verified,
            "strictness": self.strictness_note,
        }


def torsion_containment_shadow(
    model: ClosureModel, phi_verified: bool | None = None
) -> TorsionShadow:
    """Record the two-torsion containment bounds (2, 2^(p-2)).

    The upper bound is the verified consequence of the scalar identity on
    the projectors (anything the composite kills is 2^(p-2)-torsion); the
    lower bound and, for p > 3, the strictness of the containment are
    statements about abelian varieties with no finite-group content, and
    are reported as represented, not verified.
    """
    if phi_verified is None:
        phi_verified = verify_phi_identity(model).passed
    upper = 2 ** (model.p - 2)
    if model.p == 3:
        note = "bounds coincide; kernel is exactly the 2-torsion at p=3"
    else:
        note = "strictness of the lower bound is NOT machine-checked"
    return TorsionShadow(
        p=model.p,
        lower=2,
        upper=upper,
        bounds_coincide=(model.p == 3),
        premise_verified=bool(phi_verified),
        strictness_note=note,
    )


def verify_klein_identities(beta_r: int, beta_rs: int) -> VerificationReport:
    """Exact algebra identities for the Klein four-group case."""
    find_klein_monodromy(beta_r, beta_rs)  # validates the split
    table, r, s, rs = klein_group()
    report = VerificationReport(
        f"klein algebra identities (beta_r={beta_r}, beta_rs={beta_rs})"
    )
    unit = AlgebraElement.unit(table)
    br = AlgebraElement.basis(table, r)
    bs = AlgebraElement.basis(table, s)
    brs = AlgebraElement.basis(table, rs)
    quarter = Fraction(1, 4)
    e_r = quarter * ((unit + br) * (unit - bs))
    e_rs = quarter * ((unit + brs) * (unit - bs))

    report.check("one_plus_s_kills_e_r", ((unit + bs) * e_r).is_zero())
    report.check("one_plus_s_kills_e_rs", ((unit + bs) * e_rs).is_zero())
    report.check(
        "one_plus_r_squared_is_twice_itself",
        (unit + br) * (unit + br) == 2 * (unit + br),
    )
    report.check(
        "one_plus_rs_squared_is_twice_itself",
        (unit + brs) * (unit + brs) == 2 * (unit + brs),
    )
    report.check("projector_images_meet_only_in_zero", (e_r * e_rs).is_zero())
    report.check("e_r_idempotent", e_r * e_r == e_r)
    report.check("e_rs_idempotent", e_rs * e_rs == e_rs)
    return report
