"""Command-line front-end: runs the verification pipelines and emits
deterministic text or JSON reports.

Exit codes: 0 all checks pass, 1 a verification failed, 2 usage error,
3 internal error.  JSON output is byte-stable for fixed inputs and
version; every integer is serialized as an exact decimal string.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from . import __version__
from .checks import VerificationReport
from .covers import (
    CoverParams,
    genus_closed_forms,
    genus_table_by_coset_action,
    klein_genus_table,
    t_ramification_profiles,
    verify_dimension_identities,
    verify_etale,
)
from .galois import (
    DEFAULT_MAX_P,
    ClosureModel,
    _is_prime,
    build_closure_model,
    verify_block_structure,
    verify_presentation,
)
from .isogeny import (
    torsion_containment_shadow,
    verify_composite_alpha,
    verify_klein_identities,
    verify_phi_identity,
)
from .monodromy import (
    DEFAULT_BETA_CAP,
    MonodromyDatum,
    find_klein_monodromy,
    find_monodromy,
    load_datum,
    validate_monodromy,
)
from .reptheory import (
    irreducible_characters,
    isotypic_dimensions,
    verify_irreducible_inventory,
)

__all__ = ["main", "run_report", "run_klein", "RunReport"]

EXIT_PASS = 0
EXIT_VERIFICATION_FAILURE = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3

#: Off-diagonal composite blocks grow as m^2; beyond this m the default
#: pipeline checks the diagonal only (forceable with --all-blocks).
ALL_BLOCKS_DEFAULT_LIMIT = 9


class UsageError(ValueError):
    pass


@dataclass
class RunReport:
    """A fully serialized verification run."""

    data: dict
    passed: bool
    first_failure: str | None = None


def _s(x: int) -> str:
    return str(int(x))


def _collect(reports: list[VerificationReport]) -> tuple[bool, str | None]:
    for rep in reports:
        bad = rep.first_failure()
        if bad is not None:
            return False, f"{rep.title}: {bad.name}"
    return True, None


def _genus_dict(table) -> dict:
    return {
        "g_X": _s(table.g_X),
        "g_Yi": [_s(g) for g in table.g_Yi],
        "g_Z": _s(table.g_Z),
        "g_T": _s(table.g_T),
        "dim_P": [_s(d) for d in table.dim_P],
        "dim_JT": _s(table.dim_JT),
    }


def _group_section(model: ClosureModel) -> dict:
    G = model.G
    return {
        "order": _s(G.order),
        "degree": _s(G.degree),
        "generators": {
            "s1": G.perm(model.s[0]).cycle_string(),
            "sigma": G.perm(model.sigma).cycle_string(),
        },
        "n_order": _s(model.N.order),
        "p_order": _s(model.P.order),
        "m": _s(model.m),
    }


def _resolve_datum(model: ClosureModel, beta: int,
                   monodromy_path: str | None) -> tuple[MonodromyDatum, str]:
    if monodromy_path is None:
        return find_monodromy(model, beta), "search"
    try:
        datum = load_datum(monodromy_path, model=model)
    except (OSError, ValueError, KeyError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot load monodromy file: {exc}") from exc
    if datum.beta != beta:
        raise UsageError(
            f"monodromy file has beta={datum.beta}, expected {beta}"
        )
    return datum, "file"


def run_report(
    p: int,
    beta: int,
    monodromy_path: str | None = None,
    max_p: int = DEFAULT_MAX_P,
    beta_cap: int = DEFAULT_BETA_CAP,
    all_blocks: bool = False,
) -> RunReport:
    """The full odd-p pipeline, from group construction to torsion bounds."""
    if p == 2:
        raise UsageError("p = 2 is the Klein case; use the 'klein' subcommand")
    if not _is_prime(p):
        raise UsageError(f"p must be prime, got {p}")
    if p > max_p:
        raise UsageError(f"p = {p} exceeds --max-p {max_p}")
    if not 3 <= beta <= beta_cap:
        raise UsageError(f"beta must be in 3..{beta_cap}, got {beta}")

    model = build_closure_model(p, max_p=max_p)
    pres = verify_presentation(model)
    block = verify_block_structure(model)
    datum, source = _resolve_datum(model, beta, monodromy_path)
    mono = validate_monodromy(datum)

    closed = genus_closed_forms(CoverParams(p, beta), model.m)
    oracle = genus_table_by_coset_action(model, datum)
    genera_match = closed == oracle
    dims = verify_dimension_identities(closed, p)
    inventory = verify_irreducible_inventory(model)
    iso = isotypic_dimensions(closed, p)

    phi = verify_phi_identity(model)
    block_mode = "all" if (all_blocks or model.m <= ALL_BLOCKS_DEFAULT_LIMIT) else "diagonal"
    composite = verify_composite_alpha(model, blocks=block_mode)
    torsion = torsion_containment_shadow(model, phi_verified=phi.passed)

    one_dims, induced = irreducible_characters(model)
    classes = model.G.conjugacy_classes()

    reports = [pres, block, mono, dims, inventory, iso.report, phi, composite]
    sub_ok, first_failure = _collect(reports)
    passed = sub_ok and genera_match
    if passed is False and first_failure is None:
        first_failure = "genus oracle disagrees with the closed forms"

    data = {
        "artifact": "pgonal",
        "version": __version__,
        "command": "report",
        "params": {"p": _s(p), "beta": _s(beta), "monodromy_source": source},
        "group": _group_section(model),
        "presentation": pres.as_dict(),
        "block_structure": block.as_dict(),
        "monodromy": {
            "local_monodromies": [
                q.cycle_string() for q in datum.permutations()
            ],
            "validation": mono.as_dict(),
        },
        "genera": {
            "closed_form": _genus_dict(closed),
            "oracle": _genus_dict(oracle),
            "oracle_matches_closed_form": genera_match,
            "t_ramification_profiles": [
                [_s(length) for length in profile]
                for profile in t_ramification_profiles(model, datum)
            ],
            "etale_Z_over_X": verify_etale(
                datum, model.N, model.G.trivial_subgroup()
            ),
            "X_over_base_ramified": not verify_etale(
                datum, model.G.whole_group(), model.N
            ),
        },
        "dimension_identities": dims.as_dict(),
        "characters": {
            "class_count": _s(len(classes)),
            "class_sizes": [_s(len(c)) for c in classes],
            "degrees": [_s(chi.degree) for chi in one_dims + induced],
            "sum_degree_squares": _s(
                sum(chi.degree**2 for chi in one_dims + induced)
            ),
            "inventory": inventory.as_dict(),
            "schur_index_note": (
                "Schur indices taken to be 1; certified only by the +1 "
                "Frobenius-Schur indicator, not by a full index computation"
            ),
        },
        "isotypic": {
            "dim_trivial": _s(iso.dim_trivial),
            "dim_psi": _s(iso.dim_psi),
            "dim_B_theta": [_s(d) for d in iso.dim_B_theta],
            "dim_J_theta": [_s(d) for d in iso.dim_J_theta],
            "n_psi": _s(iso.n_psi),
            "n_theta": _s(iso.n_theta),
            "report": iso.report.as_dict(),
        },
        "isogeny": {
            "constant": _s(2 ** (p - 2)),
            "blocks_checked": block_mode,
            "identity_component_note": (
                "identities are verified on algebra projectors; identity "
                "components of analytic kernels have no finite-group meaning"
            ),
            "phi": phi.as_dict(),
            "composite": composite.as_dict(),
        },
        "torsion": torsion.as_dict(),
        "verdict": "pass" if passed else "fail",
    }
    if first_failure is not None:
        data["first_failure"] = first_failure
    return RunReport(data=data, passed=passed, first_failure=first_failure)


def run_klein(beta_r: int, beta_rs: int) -> RunReport:
    """The p = 2 pipeline: Klein branch datum, genus table, identities."""
    if beta_r < 1 or beta_rs < 1:
        raise UsageError(
            "degenerate Klein datum: beta_r and beta_rs must both be positive"
        )
    if beta_r + beta_rs < 3:
        raise UsageError("beta_r + beta_rs must be at least 3")

    datum = find_klein_monodromy(beta_r, beta_rs)
    mono = validate_monodromy(datum)
    genera = klein_genus_table(beta_r, beta_rs)
    identities = verify_klein_identities(beta_r, beta_rs)

    reports = [mono, genera.report, identities]
    passed, first_failure = _collect(reports)
    data = {
        "artifact": "pgonal",
        "version": __version__,
        "command": "klein",
        "params": {"beta_r": _s(beta_r), "beta_rs": _s(beta_rs)},
        "group": {
            "order": "4",
            "degree": "4",
            "generators": {"r": "(1,2)(3,4)", "s": "(1,3)(2,4)"},
        },
        "monodromy": {
            "local_monodromies": [
                q.cycle_string() for q in datum.permutations()
            ],
            "validation": mono.as_dict(),
        },
        "genera": {
            "g_Ys": _s(genera.g_Ys),
            "g_Y": _s(genera.g_Y),
            "g_Yr": _s(genera.g_Yr),
            "g_Yrs": _s(genera.g_Yrs),
            "dim_P": _s(genera.dim_P),
            "cross_check": genera.report.as_dict(),
        },
        "identities": identities.as_dict(),
        "verdict": "pass" if passed else "fail",
    }
    if first_failure is not None:
        data["first_failure"] = first_failure
    return RunReport(data=data, passed=passed, first_failure=first_failure)


def run_characters(p: int, max_p: int = DEFAULT_MAX_P,
                   list_elements: bool = False) -> RunReport:
    """Character table only."""
    if p == 2 or not _is_prime(p):
        raise UsageError(f"p must be an odd prime, got {p}")
    if p > max_p:
        raise UsageError(f"p = {p} exceeds --max-p {max_p}")
    model = build_closure_model(p, max_p=max_p)
    inventory = verify_irreducible_inventory(model)
    one_dims, induced = irreducible_characters(model)
    classes = model.G.conjugacy_classes()
    passed, first_failure = _collect([inventory])
    group_section = _group_section(model)
    if list_elements:
        group_section["element_table"] = model.G.as_dict()
    data = {
        "artifact": "pgonal",
        "version": __version__,
        "command": "characters",
        "params": {"p": _s(p)},
        "group": group_section,
        "classes": [
            {
                "representative": model.G.perm(cls[0]).cycle_string(),
                "size": _s(len(cls)),
            }
            for cls in classes
        ],
        "table": [
            {
                "name": chi.name,
                "degree": _s(chi.degree),
                "values": [str(v) for v in chi.values],
            }
            for chi in one_dims + induced
        ],
        "inventory": inventory.as_dict(),
        "verdict": "pass" if passed else "fail",
    }
    if first_failure is not None:
        data["first_failure"] = first_failure
    return RunReport(data=data, passed=passed, first_failure=first_failure)


def run_isogeny(p: int, max_p: int = DEFAULT_MAX_P,
                all_blocks: bool = False) -> RunReport:
    """Endomorphism identity checks only."""
    if p == 2 or not _is_prime(p):
        raise UsageError(f"p must be an odd prime, got {p}")
    if p > max_p:
        raise UsageError(f"p = {p} exceeds --max-p {max_p}")
    model = build_closure_model(p, max_p=max_p)
    phi = verify_phi_identity(model)
    block_mode = "all" if (all_blocks or model.m <= ALL_BLOCKS_DEFAULT_LIMIT) else "diagonal"
    composite = verify_composite_alpha(model, blocks=block_mode)
    torsion = torsion_containment_shadow(model, phi_verified=phi.passed)
    passed, first_failure = _collect([phi, composite])
    data = {
        "artifact": "pgonal",
        "version": __version__,
        "command": "isogeny",
        "params": {"p": _s(p)},
        "group": _group_section(model),
        "isogeny": {
            "constant": _s(2 ** (p - 2)),
            "blocks_checked": block_mode,
            "identity_component_note": (
                "identities are verified on algebra projectors; identity "
                "components of analytic kernels have no finite-group meaning"
            ),
            "phi": phi.as_dict(),
            "composite": composite.as_dict(),
        },
        "torsion": torsion.as_dict(),
        "verdict": "pass" if passed else "fail",
    }
    if first_failure is not None:
        data["first_failure"] = first_failure
    return RunReport(data=data, passed=passed, first_failure=first_failure)


def run_genera(p: int, beta: int, monodromy_path: str | None = None,
               max_p: int = DEFAULT_MAX_P,
               beta_cap: int = DEFAULT_BETA_CAP) -> RunReport:
    """Genus table only, oracle cross-checked against the closed forms."""
    if p == 2 or not _is_prime(p):
        raise UsageError(f"p must be an odd prime, got {p}")
    if p > max_p:
        raise UsageError(f"p = {p} exceeds --max-p {max_p}")
    if not 3 <= beta <= beta_cap:
        raise UsageError(f"beta must be in 3..{beta_cap}, got {beta}")
    model = build_closure_model(p, max_p=max_p)
    datum, source = _resolve_datum(model, beta, monodromy_path)
    mono = validate_monodromy(datum)
    closed = genus_closed_forms(CoverParams(p, beta), model.m)
    oracle = genus_table_by_coset_action(model, datum)
    dims = verify_dimension_identities(closed, p)
    genera_match = closed == oracle
    sub_ok, first_failure = _collect([mono, dims])
    passed = sub_ok and genera_match
    if not genera_match and first_failure is None:
        first_failure = "genus oracle disagrees with the closed forms"
    data = {
        "artifact": "pgonal",
        "version": __version__,
        "command": "genera",
        "params": {"p": _s(p), "beta": _s(beta), "monodromy_source": source},
        "monodromy": {
            "local_monodromies": [
                q.cycle_string() for q in datum.permutations()
            ],
            "validation": mono.as_dict(),
        },
        "genera": {
            "closed_form": _genus_dict(closed),
            "oracle": _genus_dict(oracle),
            "oracle_matches_closed_form": genera_match,
        },
        "dimension_identities": dims.as_dict(),
        "verdict": "pass" if passed else "fail",
    }
    if first_failure is not None:
        data["first_failure"] = first_failure
    return RunReport(data=data, passed=passed, first_failure=first_failure)


# -- rendering -------------------------------------------------------------


def render_json(report: RunReport) -> str:
    return json.dumps(report.data, indent=2) + "\n"


def _render_value(value, indent: int, lines: list[str], label: str) -> None:
    pad = "  " * indent
    if isinstance(value, dict):
        if set(value) >= {"name", "pass"}:
            mark = "ok" if value["pass"] else "FAIL"
            detail = f"  ({value['detail']})" if value.get("detail") else ""
            lines.append(f"{pad}[{mark}] {value['name']}{detail}")
            return
        if label:
            lines.append(f"{pad}{label}:")
        for key, sub in value.items():
            _render_value(sub, indent + (1 if label else 0), lines, key)
        return
    if isinstance(value, list):
        if all(isinstance(v, str) for v in value):
            lines.append(f"{pad}{label}: {' '.join(value) if value else '(none)'}")
            return
        lines.append(f"{pad}{label}:")
        for sub in value:
            _render_value(sub, indent + 1, lines, "")
        return
    lines.append(f"{pad}{label}: {value}")


def render_text(report: RunReport) -> str:
    lines: list[str] = []
    data = report.data
    header = f"{data['artifact']} {data['command']} (version {data['version']})"
    lines.append(header)
    lines.append("=" * len(header))
    for key, value in data.items():
        if key in ("artifact", "version", "command"):
            continue
        if key == "verdict":
            lines.append(f"verdict: {value.upper()}")
            continue
        _render_value(value, 0, lines, key)
    return "\n".join(lines) + "\n"


# -- argument parsing ---------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pgonal",
        description=(
            "Exact verification of the closure group, subcover genera, "
            "character theory, and group-algebra endomorphism identities "
            "of an etale double cover of a cyclic p-gonal cover."
        ),
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(sp, beta: bool = False):
        sp.add_argument("--p", type=int, required=True, help="the odd prime p")
        if beta:
            sp.add_argument("--beta", type=int, required=True,
                            help="number of branch points (>= 3)")
            sp.add_argument("--monodromy", metavar="FILE", default=None,
                            help="JSON branch datum overriding the search")
            sp.add_argument("--max-beta", type=int, default=DEFAULT_BETA_CAP,
                            help="cap on beta (default %(default)s)")
        sp.add_argument("--max-p", type=int, default=DEFAULT_MAX_P,
                        help="cap on p (default %(default)s)")
        sp.add_argument("--format", choices=("text", "json"), default="text")
        sp.add_argument("--output", metavar="FILE", default=None,
                        help="write the report here instead of stdout")

    sp = sub.add_parser("report", help="full verification pipeline for odd p")
    add_common(sp, beta=True)
    sp.add_argument("--all-blocks", action="store_true",
                    help="force the full m^2 composite block sweep")

    sp = sub.add_parser("klein", help="p = 2 pipeline")
    sp.add_argument("--beta-r", type=int, required=True)
    sp.add_argument("--beta-rs", type=int, required=True)
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.add_argument("--output", metavar="FILE", default=None)

    sp = sub.add_parser("characters", help="character table only")
    add_common(sp)
    sp.add_argument("--list-elements", action="store_true",
                    help="include the full element list in cycle notation")

    sp = sub.add_parser("isogeny", help="endomorphism identity checks only")
    add_common(sp)
    sp.add_argument("--all-blocks", action="store_true")

    sp = sub.add_parser("genera", help="genus table only")
    add_common(sp, beta=True)
    return parser


def _dispatch(args: argparse.Namespace) -> RunReport:
    if args.command == "report":
        return run_report(
            args.p, args.beta, monodromy_path=args.monodromy,
            max_p=args.max_p, beta_cap=args.max_beta,
            all_blocks=args.all_blocks,
        )
    if args.command == "klein":
        return run_klein(args.beta_r, args.beta_rs)
    if args.command == "characters":
        return run_characters(args.p, max_p=args.max_p,
                              list_elements=args.list_elements)
    if args.command == "isogeny":
        return run_isogeny(args.p, max_p=args.max_p, all_blocks=args.all_blocks)
    if args.command == "genera":
        return run_genera(
            args.p, args.beta, monodromy_path=args.monodromy,
            max_p=args.max_p, beta_cap=args.max_beta,
        )
    raise UsageError(f"unknown command {args.command!r}")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report = _dispatch(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as exc:  # noqa: BLE001 - the CLI boundary
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL

    text = render_json(report) if args.format == "json" else render_text(report)
    if args.output is not None:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)

    if report.passed:
        return EXIT_PASS
    print(f"verification failed: {report.first_failure}", file=sys.stderr)
    return EXIT_VERIFICATION_FAILURE


if __name__ == "__main__":
    sys.exit(main())
