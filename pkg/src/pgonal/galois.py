"""The Galois closure group of an etale double cover of a cyclic p-gonal cover.

For an odd prime p the group is built inside the symmetric group on 2p
points as G = <s1, sigma> with

    sigma = (1,2,...,p)(p+1,...,2p)      (1-based labels)
    s1    = (1,p+1)(2,p+2)

It is an extension of an elementary abelian group N of order 2^(p-1)
(generated by s1 and its sigma-conjugates) by the cyclic group P = <sigma>
of order p.  Elements of N are coordinatized by exponent vectors over the
generators s1..s_{p-1}, encoded as (p-1)-bit integers ("codes"), which
turns the enumeration of index-2 subgroups of N into linear algebra over
the field with two elements.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass, field

from .checks import VerificationReport
from .group import DENSE_TABLE_CAP, DEFAULT_MAX_ORDER, GroupTable, Subgroup, generate
from .perm import Permutation

__all__ = [
    "ClosureModel",
    "build_closure_model",
    "verify_presentation",
    "enumerate_maximal_subgroups",
    "p_orbits_on_subgroups",
    "verify_block_structure",
    "subgroup_functional",
]

DEFAULT_MAX_P = 13


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class ClosureModel:
    """The constructed group with its distinguished subgroups.

    ``s`` holds the indices of s1..sp (sp is the product of the others);
    ``R`` lists one index-2 subgroup of N per conjugation orbit, with
    R[0] = H, the stabilizer inside N of the first block's points.
    ``delta_blocks`` are the p two-point blocks {i, p+i} (0-based).
    """

    p: int
    G: GroupTable
    sigma: int
    s: tuple[int, ...]
    N: Subgroup
    P: Subgroup
    R: tuple[Subgroup, ...]
    delta_blocks: tuple[tuple[int, int], ...]
    code_of_index: dict[int, int] = field(repr=False)
    index_of_code: tuple[int, ...] = field(repr=False)

    @property
    def m(self) -> int:
        return len(self.R)

    @property
    def H(self) -> Subgroup:
        return self.R[0]

    def sigma_power(self, k: int) -> int:
        return self.G.power(self.sigma, k % self.p)


def build_closure_model(
    p: int,
    max_p: int = DEFAULT_MAX_P,
    max_order: int = DEFAULT_MAX_ORDER,
    dense_cap: int = DENSE_TABLE_CAP,
) -> ClosureModel:
    """Construct the closure group for an odd prime p and verify its shape."""
    if p == 2:
        raise ValueError(
            "p = 2 gives the Klein four-group; use the klein pipeline instead"
        )
    if not _is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    if p > max_p:
        raise ValueError(f"p = {p} exceeds the configured maximum {max_p}")

    degree = 2 * p
    sigma_images = [(i + 1) % p for i in range(p)]
    sigma_images += [p + (i + 1) % p for i in range(p)]
    sigma_perm = Permutation(sigma_images)
    s1_images = list(range(degree))
    s1_images[0], s1_images[p] = p, 0
    s1_images[1], s1_images[p + 1] = p + 1, 1
    s1_perm = Permutation(s1_images)

    G = generate([s1_perm, sigma_perm], max_order=max_order, dense_cap=dense_cap)
    sigma = G.index_of(sigma_perm)
    s1 = G.index_of(s1_perm)
    s = [s1]
    for i in range(1, p):
        s.append(G.conjugate(s1, G.power(sigma, i)))

    N = G.subgroup(s[: p - 1])
    P = G.subgroup([sigma])
    half = 2 ** (p - 1)
    assert G.order == p * half and N.order == half and P.order == p
    assert N.bitset & P.bitset == 1 << G.index_of_identity
    assert G.is_normal(N)

    code_of_index: dict[int, int] = {}
    index_of_code = [0] * half
    for idx in N.indices():
        row = G.rows[idx]
        code = 0
        acc = 0
        for i in range(p - 1):
            acc ^= 1 if row[i] == p + i else 0
            code |= acc << i
        code_of_index[idx] = code
        index_of_code[code] = idx
    assert len(set(code_of_index.values())) == half

    model = ClosureModel(
        p=p,
        G=G,
        sigma=sigma,
        s=tuple(s),
        N=N,
        P=P,
        R=(),
        delta_blocks=tuple((i, p + i) for i in range(p)),
        code_of_index=code_of_index,
        index_of_code=tuple(index_of_code),
    )
    subs = enumerate_maximal_subgroups(model)
    orbits = p_orbits_on_subgroups(model, subs)
    h_sub = _h_subgroup(model)
    reps = [h_sub if h_sub in orbit else orbit[0] for orbit in orbits]
    return dataclasses.replace(model, R=tuple(reps))


def _functional_key(p: int, f: int) -> tuple[int, ...]:
    # Lexicographic order on the coefficient tuple over the s-basis.
    return tuple((f >> i) & 1 for i in range(p - 1))


def subgroup_functional(model: ClosureModel, sub: Subgroup) -> int:
    """The nonzero functional on the s-coordinates whose kernel is ``sub``.

    Only meaningful for index-2 subgroups of N.
    """
    f = 0
    for i in range(model.p - 1):
        basis_idx = model.index_of_code[1 << i]
        if not sub.contains(basis_idx):
            f |= 1 << i
    return f


def subgroup_from_functional(model: ClosureModel, f: int) -> Subgroup:
    half = 2 ** (model.p - 1)
    bits = 0
    for code in range(half):
        if (code & f).bit_count() % 2 == 0:
            bits |= 1 << model.index_of_code[code]
    return Subgroup(model.G, bits)


def _h_subgroup(model: ClosureModel) -> Subgroup:
    # H = elements of N fixing both points of the first block; in
    # s-coordinates this is the kernel of the first coordinate.
    return subgroup_from_functional(model, 1)


def enumerate_maximal_subgroups(model: ClosureModel) -> list[Subgroup]:
    """All index-2 subgroups of N, i.e. kernels of the 2^(p-1)-1 nonzero
    functionals on the s-coordinates, in lexicographic functional order."""
    half = 2 ** (model.p - 1)
    fs = sorted(range(1, half), key=lambda f: _functional_key(model.p, f))
    return [subgroup_from_functional(model, f) for f in fs]


def _conjugation_code_maps(model: ClosureModel) -> tuple[list[int], list[int]]:
    """Code-level maps v -> code(sigma^-1 n_v sigma) and its inverse."""
    half = 2 ** (model.p - 1)
    fwd = [0] * half
    for code in range(half):
        idx = model.index_of_code[code]
        fwd[code] = model.code_of_index[model.G.conjugate(idx, model.sigma)]
    bwd = [0] * half
    for code, image in enumerate(fwd):
        bwd[image] = code
    return fwd, bwd


def p_orbits_on_subgroups(
    model: ClosureModel, subs: list[Subgroup]
) -> list[list[Subgroup]]:
    """Orbits of the index-2 subgroups of N under conjugation by sigma.

    Every orbit must have size exactly p (the conjugation action is free
    away from the trivial functional); violations raise.  The orbit of H
    is listed first, the rest in lexicographic order of their minimal
    member; orbit members are listed in lexicographic functional order.
    """
    p = model.p
    _, bwd = _conjugation_code_maps(model)

    def step(f: int) -> int:
        # Functional of the sigma-conjugated kernel.
        out = 0
        for i in range(p - 1):
            if (bwd[1 << i] & f).bit_count() % 2 == 1:
                out |= 1 << i
        return out

    fs = [subgroup_functional(model, sub) for sub in subs]
    seen: set[int] = set()
    orbits_f: list[list[int]] = []
    for f in fs:
        if f in seen:
            continue
        orbit = [f]
        g = step(f)
        while g != f:
            orbit.append(g)
            g = step(g)
        if len(orbit) != p:
            raise RuntimeError(
                f"conjugation orbit of functional {f:#x} has size {len(orbit)}, "
                f"expected {p}"
            )
        seen.update(orbit)
        orbits_f.append(sorted(orbit, key=lambda x: _functional_key(p, x)))

    h_functional = 1
    orbits_f.sort(
        key=lambda orb: (
            h_functional not in orb,
            _functional_key(p, orb[0]),
        )
    )
    return [
        [subgroup_from_functional(model, f) for f in orbit] for orbit in orbits_f
    ]


def verify_presentation(model: ClosureModel) -> VerificationReport:
    """Check the defining relations of the closure group, element by element."""
    G, p = model.G, model.p
    report = VerificationReport(f"presentation relations (p={p})")
    ident = G.index_of_identity

    prod = ident
    for si in model.s:
        prod = G.mul(prod, si)
    report.check("product_of_all_s_is_identity", prod == ident)
    report.check("sigma_has_order_p", G.power(model.sigma, p) == ident
                 and model.sigma != ident)
    report.check("s1_is_an_involution", G.mul(model.s[0], model.s[0]) == ident)
    for j in range(p - 1):
        report.check(
            f"sigma_conjugates_s{j + 1}_to_s{j + 2}",
            G.conjugate(model.s[j], model.sigma) == model.s[j + 1],
        )
    for k in range(1, p):
        report.check(
            f"sigma_power_{k}_conjugates_s1_to_s{k + 1}",
            G.conjugate(model.s[0], G.power(model.sigma, k)) == model.s[k],
        )
    last = ident
    for si in model.s[: p - 1]:
        last = G.mul(last, si)
    report.check("sp_equals_product_of_s1_to_sp_minus_1", last == model.s[p - 1])
    return report


def verify_block_structure(model: ClosureModel) -> VerificationReport:
    """Check that the blocks {i, p+i} behave as the imprimitivity system
    with blockwise stabilizer N, and that the conjugates of H pin down
    the points of their own block."""
    G, p = model.G, model.p
    report = VerificationReport(f"block structure (p={p})")
    block_of = [pt % p for pt in range(2 * p)]

    invariant = True
    for g in range(G.order):
        row = G.rows[g]
        for a, b in model.delta_blocks:
            if block_of[row[a]] != block_of[row[b]]:
                invariant = False
                break
        if not invariant:
            break
    report.check("blocks_form_invariant_partition", invariant)

    stab_ok = True
    for a, b in model.delta_blocks:
        bits = 0
        for g in range(G.order):
            row = G.rows[g]
            if {int(row[a]), int(row[b])} == {a, b}:
                bits |= 1 << g
        if bits != model.N.bitset:
            stab_ok = False
            break
    report.check("each_block_stabilizer_equals_N", stab_ok)

    conjugates = [
        model.H.conjugate_by(G.power(model.sigma, i)) for i in range(p)
    ]
    fixes_ok = True
    for (a, b), h_i in zip(model.delta_blocks, conjugates):
        for h in h_i.indices():
            row = G.rows[h]
            if row[a] != a or row[b] != b:
                fixes_ok = False
    report.check("conjugates_of_H_fix_their_block_pointwise", fixes_ok)

    meet = conjugates[0].bitset
    for h_i in conjugates[1 : p - 1]:
        meet &= h_i.bitset
    report.check(
        "intersection_of_first_p_minus_1_conjugates_trivial",
        meet == 1 << G.index_of_identity,
    )
    return report
