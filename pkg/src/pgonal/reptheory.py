"""Exact character theory of the closure group.

Complex irreducibles come out of the standard semidirect-product recipe:
p one-dimensional characters pulled back from the cyclic quotient, plus
one induced degree-p character per conjugation orbit of nontrivial
characters of N.  Values live in the p-th cyclotomic field, represented
exactly as rational coefficient vectors modulo the cyclotomic polynomial;
there is no floating point and no external algebra system.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .checks import VerificationReport
from .covers import GenusTable
from .galois import ClosureModel, _functional_key, subgroup_functional
from .group import GroupTable, Subgroup

__all__ = [
    "CycloNum",
    "NCharacter",
    "Character",
    "characters_of_N",
    "induce_character",
    "one_dim_characters",
    "psi_character",
    "irreducible_characters",
    "verify_irreducible_inventory",
    "isotypic_dimensions",
    "IsotypicDimensions",
]

_Rat = int | Fraction


class CycloNum:
    """An element of Q(zeta_p), zeta a primitive p-th root of unity.

    Stored as the coefficient vector of 1, zeta, ..., zeta^(p-2); the
    relation zeta^(p-1) = -(1 + zeta + ... + zeta^(p-2)) keeps the form
    canonical, so equality is coefficient-wise.  All coefficients are
    exact rationals.
    """

    __slots__ = ("p", "coeffs")

    def __init__(self, p: int, coeffs):
        coeffs = tuple(Fraction(c) for c in coeffs)
        if len(coeffs) != p - 1:
            raise ValueError(f"need {p - 1} coefficients, got {len(coeffs)}")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("CycloNum is immutable")

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, p: int) -> "CycloNum":
        return cls(p, (0,) * (p - 1))

    @classmethod
    def one(cls, p: int) -> "CycloNum":
        return cls.from_rational(p, 1)

    @classmethod
    def from_rational(cls, p: int, value: _Rat) -> "CycloNum":
        return cls(p, (Fraction(value),) + (Fraction(0),) * (p - 2))

    @classmethod
    def root_power(cls, p: int, k: int) -> "CycloNum":
        """zeta^k, reduced to canonical form."""
        k %= p
        vec = [Fraction(0)] * p
        vec[k] = Fraction(1)
        return cls._reduce(p, vec)

    @classmethod
    def _reduce(cls, p: int, vec: list[Fraction]) -> "CycloNum":
        # vec has one slot per exponent 0..p-1; eliminate the top one.
        top = vec[p - 1]
        return cls(p, tuple(vec[i] - top for i in range(p - 1)))

    # -- ring operations --------------------------------------------------

    def _match(self, other: "CycloNum") -> None:
        if self.p != other.p:
            raise ValueError(f"mixed cyclotomic orders {self.p} and {other.p}")

    def __add__(self, other):
        other = self._coerce(other)
        self._match(other)
        return CycloNum(self.p, (a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        other = self._coerce(other)
        self._match(other)
        return CycloNum(self.p, (a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return CycloNum(self.p, (-a for a in self.coeffs))

    def _coerce(self, other) -> "CycloNum":
        if isinstance(other, CycloNum):
            return other
        return CycloNum.from_rational(self.p, other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycloNum(self.p, (other * a for a in self.coeffs))
        self._match(other)
        if other.is_rational():
            return self * other.coeffs[0]
        if self.is_rational():
            return other * self.coeffs[0]
        p = self.p
        vec = [Fraction(0)] * p
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    vec[(i + j) % p] += a * b
        return CycloNum._reduce(p, vec)

    __rmul__ = __mul__

    def conjugate(self) -> "CycloNum":
        """Complex conjugation, zeta -> zeta^(p-1)."""
        p = self.p
        vec = [Fraction(0)] * p
        for k, a in enumerate(self.coeffs):
            vec[(p - k) % p] += a
        return CycloNum._reduce(p, vec)

    # -- queries -----------------------------------------------------------

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def is_integer(self) -> bool:
        return self.is_rational() and self.coeffs[0].denominator == 1

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = CycloNum.from_rational(self.p, other)
        if not isinstance(other, CycloNum):
            return NotImplemented
        return self.p == other.p and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.p, self.coeffs))

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
                continue
            mag = "" if abs(c) == 1 else f"{abs(c)}*"
            sym = "z" if k == 1 else f"z^{k}"
            if not terms:
                sign = "-" if c < 0 else ""
                terms.append(f"{sign}{mag}{sym}")
            else:
                sign = "-" if c < 0 else "+"
                terms.append(f"{sign} {mag}{sym}")
        if not terms:
            return "0"
        return " ".join(terms)

    __repr__ = __str__


@dataclass(frozen=True)
class NCharacter:
    """A (+1/-1)-valued character of N, indexed by a functional on the
    exponent coordinates over the s-generators."""

    model: ClosureModel = field(repr=False)
    functional: int

    def is_trivial(self) -> bool:
        return self.functional == 0

    def value_at_code(self, code: int) -> int:
        return -1 if (code & self.functional).bit_count() % 2 else 1

    def value(self, element_index: int) -> int:
        return self.value_at_code(self.model.code_of_index[element_index])

    def kernel(self) -> Subgroup:
        """Kernel subgroup; N itself for the trivial character."""
        if self.functional == 0:
            return self.model.N
        bits = 0
        for idx, code in self.model.code_of_index.items():
            if self.value_at_code(code) == 1:
                bits |= 1 << idx
        return Subgroup(self.model.G, bits)


def characters_of_N(model: ClosureModel) -> list[NCharacter]:
    """All 2^(p-1) characters of N: the trivial one first, then the
    nontrivial ones in the same order as the maximal-subgroup enumeration
    (the kernel map is a bijection onto that list)."""
    half = 2 ** (model.p - 1)
    nontrivial = sorted(
        range(1, half), key=lambda f: _functional_key(model.p, f)
    )
    return [NCharacter(model, 0)] + [NCharacter(model, f) for f in nontrivial]


@dataclass(frozen=True)
class Character:
    """A class function on the closure group with exact cyclotomic values,
    aligned with ``group.conjugacy_classes()``."""

    group: GroupTable = field(repr=False)
    name: str
    values: tuple[CycloNum, ...]

    @property
    def degree(self) -> int:
        d = self.values[0].rational_value()
        if d.denominator != 1 or d <= 0:
            raise ValueError(f"degree {d} is not a positive integer")
        return int(d)

    def value_at(self, element_index: int) -> CycloNum:
        return self.values[self.group.class_of(element_index)]

    def is_integer_valued(self) -> bool:
        return all(v.is_integer() for v in self.values)

    def inner(self, other: "Character") -> CycloNum:
        """Exact inner product (1/|G|) sum chi(g) * conj(other(g))."""
        if self.group is not other.group:
            raise ValueError("characters of different groups")
        classes = self.group.conjugacy_classes()
        p_any = self.values[0].p
        acc = CycloNum.zero(p_any)
        for cls, a, b in zip(classes, self.values, other.values):
            term = a * b.conjugate()
            if term:
                acc = acc + len(cls) * term
        return acc * Fraction(1, self.group.order)

    def norm(self) -> CycloNum:
        return self.inner(self)

    def __add__(self, other: "Character") -> "Character":
        if self.group is not other.group:
            raise ValueError("characters of different groups")
        vals = tuple(a + b for a, b in zip(self.values, other.values))
        return Character(self.group, f"{self.name}+{other.name}", vals)


def _sigma_exponent(model: ClosureModel, element_index: int) -> int:
    # Image of an element in the cyclic quotient: which block the first
    # block is sent to.
    return int(model.G.rows[element_index][0]) % model.p


def one_dim_characters(model: ClosureModel) -> list[Character]:
    """The p degree-1 characters: trivial on N, value zeta^(j*k) on the
    class whose elements shift blocks by k."""
    classes = model.G.conjugacy_classes()
    exps = [_sigma_exponent(model, cls[0]) for cls in classes]
    out = []
    for j in range(model.p):
        vals = tuple(
            CycloNum.root_power(model.p, (j * k) % model.p) for k in exps
        )
        out.append(Character(model.G, f"rho_{j}", vals))
    return out


def psi_character(model: ClosureModel) -> Character:
    """Sum of the nontrivial degree-1 characters: degree p-1, value p-1
    on N and -1 on every class outside N."""
    one_dims = one_dim_characters(model)
    psi = one_dims[1]
    for chi in one_dims[2:]:
        psi = psi + chi
    return Character(model.G, "psi", psi.values)


def induce_character(model: ClosureModel, chi: NCharacter) -> Character:
    """Character induced from a nontrivial character of N: degree p,
    integer-valued, supported on N."""
    if chi.is_trivial():
        raise ValueError("inducing the trivial character is not irreducible")
    G = model.G
    classes = G.conjugacy_classes()
    sigma_powers = [G.power(model.sigma, k) for k in range(model.p)]
    values = []
    for cls in classes:
        rep = cls[0]
        if not model.N.contains(rep):
            values.append(CycloNum.zero(model.p))
            continue
        total = sum(
            chi.value(G.conjugate(rep, sg)) for sg in sigma_powers
        )
        values.append(CycloNum.from_rational(model.p, total))
    name = f"theta[f={chi.functional:#x}]"
    return Character(G, name, tuple(values))


def irreducible_characters(model: ClosureModel) -> tuple[list[Character], list[Character]]:
    """All complex irreducibles: (degree-1 list, induced degree-p list).

    The induced list is aligned with model.R: entry i is induced from the
    character whose kernel is R[i].
    """
    one_dims = one_dim_characters(model)
    induced = []
    for i, r_sub in enumerate(model.R, start=1):
        f = subgroup_functional(model, r_sub)
        theta = induce_character(model, NCharacter(model, f))
        induced.append(Character(model.G, f"theta_{i}", theta.values))
    return one_dims, induced


def _square_class_counts(G: GroupTable) -> list[int]:
    counts = [0] * len(G.conjugacy_classes())
    for i in range(G.order):
        counts[G.class_of(G.mul(i, i))] += 1
    return counts


def frobenius_schur_indicator(chi: Character) -> CycloNum:
    """(1/|G|) sum over g of chi(g^2), computed exactly."""
    G = chi.group
    counts = _square_class_counts(G)
    p_any = chi.values[0].p
    acc = CycloNum.zero(p_any)
    for count, value in zip(counts, chi.values):
        if count and value:
            acc = acc + count * value
    return acc * Fraction(1, G.order)


def verify_irreducible_inventory(model: ClosureModel) -> VerificationReport:
    """Checks that the constructed characters form the full irreducible
    inventory, with the expected rational assembly."""
    report = VerificationReport(f"irreducible inventory (p={model.p})")
    G = model.G
    one_dims, induced = irreducible_characters(model)
    inventory = one_dims + induced
    classes = G.conjugacy_classes()

    report.check(
        "inventory_is_p_one_dims_plus_m_p_dims",
        len(one_dims) == model.p
        and len(induced) == model.m
        and all(chi.degree == 1 for chi in one_dims)
        and all(chi.degree == model.p for chi in induced),
    )
    report.check(
        "count_equals_class_count",
        len(inventory) == len(classes),
        f"{len(inventory)} irreducibles, {len(classes)} classes",
    )

    one = CycloNum.one(model.p)
    zero = CycloNum.zero(model.p)
    gram_ok = True
    for a in range(len(inventory)):
        for b in range(a, len(inventory)):
            expected = one if a == b else zero
            if inventory[a].inner(inventory[b]) != expected:
                gram_ok = False
    report.check("exact_orthonormality", gram_ok)

    deg_sq = sum(chi.degree**2 for chi in inventory)
    report.check(
        "degree_squares_sum_to_group_order",
        deg_sq == G.order,
        f"{deg_sq} == {G.order}",
    )

    psi = psi_character(model)
    report.check(
        "psi_has_degree_p_minus_1_and_integer_values",
        psi.degree == model.p - 1 and psi.is_integer_valued(),
    )
    report.check(
        "induced_characters_integer_valued",
        all(chi.is_integer_valued() for chi in induced),
    )
    fs_ok = all(
        frobenius_schur_indicator(chi) == one for chi in induced
    )
    report.check("frobenius_schur_indicator_plus_one_for_induced", fs_ok)
    return report


@dataclass(frozen=True)
class IsotypicDimensions:
    """Dimension bookkeeping for the isotypic pieces of the full
    Jacobian, derived from a genus table.

    Multiplicities n are degree/Schur-index with all Schur indices taken
    to be 1 (the indicator check is the supporting evidence; full Schur
    index certification is out of scope and flagged in reports).
    """

    p: int
    dim_trivial: int
    dim_psi: int
    dim_B_theta: tuple[int, ...]
    dim_J_theta: tuple[int, ...]
    total: int
    g_Z: int
    n_psi: int
    n_theta: int
    report: VerificationReport


def isotypic_dimensions(table: GenusTable, p: int) -> IsotypicDimensions:
    """Assign dimensions to the isotypic factors and check they fill the
    full Jacobian dimension exactly."""
    report = VerificationReport(f"isotypic dimensions (p={p}, beta={table.beta})")
    dim_b = table.dim_P
    dim_j = tuple(p * d for d in dim_b)
    total = 0 + table.g_X + sum(dim_j)
    report.check(
        "isotypic_dimensions_sum_to_g_Z",
        total == table.g_Z,
        f"0 + {table.g_X} + {'+'.join(str(d) for d in dim_j) or '0'} == {table.g_Z}",
    )
    return IsotypicDimensions(
        p=p,
        dim_trivial=0,
        dim_psi=table.g_X,
        dim_B_theta=dim_b,
        dim_J_theta=dim_j,
        total=total,
        g_Z=table.g_Z,
        n_psi=1,
        n_theta=p,
        report=report,
    )
