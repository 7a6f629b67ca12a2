"""Branch data: tuples of local monodromies with product one.

For odd p the local monodromy over every branch point is an order-p
element outside N (so the degree-p subcover is totally ramified there and
the double covers above it stay unramified); on the 2p ambient points such
an element is a pair of disjoint p-cycles.  For p = 2 the group is the
Klein four-group and the tuple mixes the two involutions r and rs.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cache
from pathlib import Path

from .checks import VerificationReport
from .galois import ClosureModel
from .group import GroupTable, generate
from .perm import Permutation

__all__ = [
    "MonodromyDatum",
    "find_monodromy",
    "validate_monodromy",
    "find_klein_monodromy",
    "klein_group",
    "order_p_candidates",
]

#: Default cap on the number of branch points (keeps reports bounded).
DEFAULT_BETA_CAP = 12


@dataclass(frozen=True)
class MonodromyDatum:
    """An ordered tuple of local monodromies realizing a branched cover.

    ``entries`` are element indices into ``group``; their ordered product
    is the identity and together they generate the whole group.  For the
    Klein case ``klein_split`` records (beta_r, beta_rs).
    """

    group: GroupTable
    entries: tuple[int, ...]
    p: int
    beta: int
    klein_split: tuple[int, int] | None = None
    model: ClosureModel | None = field(default=None, repr=False, compare=False)

    def permutations(self) -> list[Permutation]:
        return [self.group.perm(i) for i in self.entries]

    def to_json_dict(self) -> dict:
        out: dict = {
            "p": str(self.p),
            "beta": str(self.beta),
            "degree": str(self.group.degree),
            "local_monodromies": [q.cycle_string() for q in self.permutations()],
        }
        if self.klein_split is not None:
            out["beta_r"] = str(self.klein_split[0])
            out["beta_rs"] = str(self.klein_split[1])
        return out

    def save(self, path: str | Path) -> None:
        Path(path).write_text(json.dumps(self.to_json_dict(), indent=2) + "\n")


def datum_from_json_dict(data: dict, model: ClosureModel | None = None) -> MonodromyDatum:
    """Rebuild a datum from its serialized form (round-trip exact).

    For odd p pass the closure model; for p = 2 the Klein group is built
    internally.  Raises ``ValueError`` for elements outside the group.
    """
    p = int(data["p"])
    beta = int(data["beta"])
    degree = int(data["degree"])
    split = None
    if "beta_r" in data:
        split = (int(data["beta_r"]), int(data["beta_rs"]))
    if p == 2:
        table, _, _, _ = klein_group()
    else:
        if model is None:
            raise ValueError("a closure model is required for odd p")
        if model.p != p:
            raise ValueError(f"model is for p={model.p}, datum for p={p}")
        table = model.G
    if table.degree != degree:
        raise ValueError(f"degree mismatch: {table.degree} vs {degree}")
    entries = tuple(
        table.index_of(Permutation.from_cycles(text, degree))
        for text in data["local_monodromies"]
    )
    expected = 2 * beta if p == 2 else beta
    if len(entries) != expected:
        raise ValueError("beta does not match the number of local monodromies")
    return MonodromyDatum(
        group=table, entries=entries, p=p, beta=beta,
        klein_split=split, model=model,
    )


def load_datum(path: str | Path, model: ClosureModel | None = None) -> MonodromyDatum:
    return datum_from_json_dict(json.loads(Path(path).read_text()), model=model)


def order_p_candidates(model: ClosureModel) -> list[int]:
    """Order-p elements outside N, in canonical index order."""
    G = model.G
    return [
        i for i in range(G.order)
        if not model.N.contains(i) and G.element_order(i) == model.p
    ]


def find_monodromy(
    model: ClosureModel,
    beta: int,
    sigma_first: bool = False,
    exclude: tuple[int, ...] | None = None,
    beta_cap: int = DEFAULT_BETA_CAP,
) -> MonodromyDatum:
    """Lexicographically first product-one generating tuple of length beta.

    Deterministic backtracking over the order-p elements outside N in
    canonical index order; the last entry is forced by the product-one
    condition.  ``sigma_first`` pins the first local monodromy to sigma;
    ``exclude`` skips one specific tuple (used to produce a second,
    distinct datum for monodromy-independence checks).
    """
    if beta < 3:
        raise ValueError("beta must be at least 3")
    if beta > beta_cap:
        raise ValueError(f"beta = {beta} exceeds the cap {beta_cap}")
    G = model.G
    cands = order_p_candidates(model)
    cand_set = set(cands)
    excl = tuple(exclude) if exclude is not None else None

    def dfs(prefix: list[int], prod: int) -> tuple[int, ...] | None:
        if len(prefix) == beta - 1:
            last = G.inv(prod)
            if last not in cand_set:
                return None
            full = (*prefix, last)
            if full == excl:
                return None
            if len(G.closure_of(full)) == G.order:
                return full
            return None
        pool = [model.sigma] if (sigma_first and not prefix) else cands
        for c in pool:
            found = dfs(prefix + [c], G.mul(prod, c))
            if found is not None:
                return found
        return None

    entries = dfs([], G.index_of_identity)
    if entries is None:
        raise ValueError(
            f"no valid branch datum for p={model.p}, beta={beta}"
        )
    return MonodromyDatum(
        group=G, entries=entries, p=model.p, beta=beta, model=model,
    )


def validate_monodromy(datum: MonodromyDatum) -> VerificationReport:
    """Check every invariant a branch datum must satisfy."""
    G = datum.group
    report = VerificationReport(f"monodromy datum (p={datum.p}, beta={datum.beta})")
    report.check("beta_at_least_3", datum.beta >= 3, f"beta={datum.beta}")
    # For p = 2 the branched double cover sits over 2*beta values, so the
    # tuple carries 2*beta local monodromies; for odd p it carries beta.
    expected_entries = 2 * datum.beta if datum.p == 2 else datum.beta
    report.check(
        "entry_count_matches_beta",
        len(datum.entries) == expected_entries,
        f"{len(datum.entries)} entries for beta={datum.beta}",
    )

    prod = G.index_of_identity
    for i in datum.entries:
        prod = G.mul(prod, i)
    report.check("ordered_product_is_identity", prod == G.index_of_identity)
    report.check(
        "tuple_generates_whole_group",
        len(G.closure_of(datum.entries)) == G.order,
    )

    if datum.p == 2:
        _validate_klein_entries(datum, report)
        return report

    model = datum.model
    expected_type = (datum.p, datum.p)
    report.check(
        "entries_have_order_p",
        all(G.element_order(i) == datum.p for i in datum.entries),
    )
    report.check(
        "entries_are_double_p_cycles",
        all(G.perm(i).cycle_type() == expected_type for i in datum.entries),
    )
    report.check(
        "entries_are_even_permutations",
        all(G.perm(i).is_even() for i in datum.entries),
    )
    if model is not None:
        report.check(
            "entries_lie_outside_N",
            all(not model.N.contains(i) for i in datum.entries),
        )
        exps = [int(G.rows[i][0]) % datum.p for i in datum.entries]
        report.check(
            "entries_nontrivial_in_cyclic_quotient",
            all(k != 0 for k in exps),
        )
        report.check(
            "quotient_exponents_sum_to_zero",
            sum(exps) % datum.p == 0,
            f"exponents={exps}",
        )
    return report


def _validate_klein_entries(datum: MonodromyDatum, report: VerificationReport) -> None:
    table, r, s, rs = klein_group()
    report.check(
        "entries_avoid_the_etale_involution",
        all(i in (r, rs) for i in datum.entries),
    )
    if datum.klein_split is not None:
        beta_r, beta_rs = datum.klein_split
        n_r = sum(1 for i in datum.entries if i == r)
        n_rs = sum(1 for i in datum.entries if i == rs)
        report.check(
            "entry_counts_match_split",
            (n_r, n_rs) == (2 * beta_r, 2 * beta_rs),
            f"counts=({n_r},{n_rs})",
        )


@cache
def klein_group() -> tuple[GroupTable, int, int, int]:
    """The Klein four-group on 4 points; returns (table, r, s, rs).

    Cached so all callers share one table (subgroups are tied to their
    parent table by identity).
    """
    r = Permutation.from_cycles("(1,2)(3,4)", 4)
    s = Permutation.from_cycles("(1,3)(2,4)", 4)
    table = generate([r, s])
    ri = table.index_of(r)
    si = table.index_of(s)
    return table, ri, si, table.mul(ri, si)


def find_klein_monodromy(beta_r: int, beta_rs: int) -> MonodromyDatum:
    """Branch datum for the Klein four-group cover: 2*beta_r copies of r
    followed by 2*beta_rs copies of rs."""
    beta = beta_r + beta_rs
    if beta < 3:
        raise ValueError("beta = beta_r + beta_rs must be at least 3")
    if beta_r < 1 or beta_rs < 1:
        raise ValueError(
            "degenerate Klein datum: both beta_r and beta_rs must be positive "
            "(otherwise the tuple generates a proper subgroup)"
        )
    table, r, s, rs = klein_group()
    entries = (r,) * (2 * beta_r) + (rs,) * (2 * beta_rs)
    return MonodromyDatum(
        group=table, entries=entries, p=2, beta=beta,
        klein_split=(beta_r, beta_rs),
    )
