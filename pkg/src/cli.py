# Builtin Imports
import sys
import json
import argparse
from concurrent.futures import ThreadPoolExecutor

# Third-party imports
from sympy import primefactors
from tabulate import tabulate

# Local Imports
from src.errors import FormataError, InternalInconsistencyError, CatalogIntegrityError
from src.characters.character_table import character_table
from src.core.canonical_series import canonical_series
from src.core.fprime_characters import fprime_ascending
from src.core.reports import Report, subgroup_json
from src.core.theorems import (
    theorem_a_report, theorem_b_report, theorem_c_report, counting_report,
    head_character_equivalence_report, mckay_check, counterexample_report,
    extension_transfer_sweep,
)
from src.formations.descriptors import FormationDescriptor
from src.formations.projectors import projector, residual, verify_projector_properties
from src.groups.perm_group import PermGroup, generate
from src.groups.series import h_composition_series
from src.ingestion.catalog import load_catalog, resolve_group, get_group
from src.logger import configure_logging, get_logger




logger = get_logger("cli")

VERIFY_TARGETS = ("thm-a", "thm-b", "thm-c", "thm54", "counting", "counterexample-2S4", "all")
SWEEP_FORMATIONS = ("nilpotent", "supersolvable", "metanilpotent", "nilpotent-length:2")
COUNTEREXAMPLE_GROUP = "2S4"


# --- Argument parsing ---

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="formata", description="Head characters for saturated formations of small solvable groups")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, group=True):
        if group:
            p.add_argument("group", help="catalog name or path to a group file")
        p.add_argument("--formation", default="nilpotent", help="e.g. nilpotent, supersolvable, p-groups:3, nilpotent-length:2")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("--verbose", action="store_true", help="INFO logging on stderr")

    for name in ("table", "projector", "residual", "series", "headchars"):
        common(sub.add_parser(name))

    verify = sub.add_parser("verify")
    verify.add_argument("target", choices=VERIFY_TARGETS)
    verify.add_argument("group", nargs="?", help="catalog name or group file (not used by 'all' or the counterexample)")
    verify.add_argument("--formation", default="nilpotent")
    verify.add_argument("--normal", help="generators of a normal subgroup, separated by ';'")
    verify.add_argument("--prime", type=int, help="prime for thm-c; every prime divisor when absent")
    verify.add_argument("--jobs", type=int, default=1, help="worker threads for 'verify all'")
    verify.add_argument("--json", action="store_true")
    verify.add_argument("--verbose", action="store_true")

    return parser


# --- Output helpers ---

def _dump(payload) -> str:
    return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False)

def _character_rows(G: PermGroup, characters) -> list:
    table = character_table(G)
    return [[table.index_of(chi), chi.degree] + [str(v) for v in chi.values] for chi in characters]

def _class_header(G: PermGroup) -> list:
    return ["#", "deg"] + [f"{c.representative.order()}:{c.size}" for c in G.conjugacy_classes()]

def _render_reports(reports: list, as_json: bool) -> str:
    if as_json:
        return _dump([r.to_json() for r in reports])
    lines = [r.status_line() for r in reports]
    for r in reports:
        for note in r.notes:
            lines.append(f"  {r.theorem} {r.group}: {note}")
    return "\n".join(lines)

def _projector_report(G: PermGroup, F: FormationDescriptor) -> Report:

    """The projector property checks in the shared report shape."""

    checked = verify_projector_properties(G, F)
    report = Report("projector", checked.group, checked.formation)
    for key, value in sorted(checked.properties.items()):
        if value is None:
            report.notes.append(f"property ({key}) not checked above the exhaustive bound")
            continue
        required = key != "e" or checked.self_normalizing_required
        report.add({"property": key}, value or not required, holds=value, required=required)
    return report


# --- Commands ---

def cmd_table(G: PermGroup, args) -> tuple:
    table = character_table(G)
    if args.json:
        return 0, _dump(table.to_json())
    return 0, tabulate(_character_rows(G, table), headers=_class_header(G))

def cmd_projector(G: PermGroup, F: FormationDescriptor, args) -> tuple:
    H = projector(G, F)
    checked = verify_projector_properties(G, F, H)
    payload = {
        "group": G.name, "formation": F.name, "order": H.order,
        "generators": subgroup_json(H), "properties": checked.properties,
        "partially_verified": checked.partially_verified,
    }
    if args.json:
        return (0 if checked.passed else 1), _dump(payload)
    rows = [[k, "not checked" if v is None else ("ok" if v else "FAIL")] for k, v in sorted(checked.properties.items())]
    text = f"projector of order {H.order}: {', '.join(payload['generators']) or '()'}\n" + tabulate(rows, headers=["property", "status"])
    return (0 if checked.passed else 1), text

def cmd_residual(G: PermGroup, F: FormationDescriptor, args) -> tuple:
    R = residual(G, F)
    payload = {"group": G.name, "formation": F.name, "order": R.order, "generators": subgroup_json(R)}
    if args.json:
        return 0, _dump(payload)
    return 0, f"residual of order {R.order}: {', '.join(payload['generators']) or '()'}"

def cmd_series(G: PermGroup, F: FormationDescriptor, args) -> tuple:
    cs = canonical_series(G, F)
    composition = h_composition_series(G, cs.projector, cs.anchors())
    payload = {
        "group": G.name, "formation": F.name, "m": cs.m,
        "projector": {"order": cs.projector.order, "generators": subgroup_json(cs.projector)},
        "pairs": [
            {"K": subgroup_json(K), "K_order": K.order, "L": subgroup_json(L), "L_order": L.order}
            for K, L in cs.pairs
        ],
        "h_composition_orders": [S.order for S in composition],
    }
    if args.json:
        return 0, _dump(payload)
    rows = [[i, K.order, L.order] for i, (K, L) in enumerate(cs.pairs)]
    text = tabulate(rows, headers=["i", "|K_i|", "|L_i|"]) if rows else "m = 0"
    text += "\nH-composition series orders: " + " < ".join(str(o) for o in payload["h_composition_orders"])
    return 0, text

def cmd_headchars(G: PermGroup, F: FormationDescriptor, args) -> tuple:
    characters = fprime_ascending(G, F)
    table = character_table(G)
    payload = {
        "group": G.name, "formation": F.name, "count": len(characters),
        "characters": [
            {"index": table.index_of(chi), "degree": chi.degree, "values": [v.to_json() for v in chi.values]}
            for chi in characters
        ],
    }
    if args.json:
        return 0, _dump(payload)
    return 0, tabulate(_character_rows(G, characters), headers=_class_header(G))

def _normal_from_words(G: PermGroup, text: str) -> PermGroup:
    words = [w.strip() for w in text.split(";") if w.strip()]
    return generate(G.degree, words)

def single_reports(target: str, G: PermGroup, F: FormationDescriptor, args) -> list:

    """Reports for one verify target on one group."""

    if target == "thm-a":
        N = _normal_from_words(G, args.normal) if args.normal else None
        return [theorem_a_report(G, F, N)]
    if target == "thm-b":
        return [theorem_b_report(G, F)]
    if target == "thm-c":
        primes = [args.prime] if args.prime else primefactors(G.order)
        return [theorem_c_report(G, p) for p in primes]
    if target == "thm54":
        return [head_character_equivalence_report(G, F)]
    if target == "counting":
        return [counting_report(G, F)]
    raise ValueError(target)

def sweep_jobs() -> list:

    """Every (callable, label) the full sweep runs, in catalog order."""

    jobs = []
    for entry in load_catalog():
        G = entry.group
        for name in SWEEP_FORMATIONS:
            F = FormationDescriptor.parse(name)
            jobs.append(lambda G=G, F=F: [_projector_report(G, F)])
            jobs.append(lambda G=G, F=F: [counting_report(G, F)])
            jobs.append(lambda G=G, F=F: [head_character_equivalence_report(G, F)])
            jobs.append(lambda G=G, F=F: [theorem_a_report(G, F)])
            jobs.append(lambda G=G, F=F: [theorem_b_report(G, F)])
            if G.order % 2 == 1 or F.kind == "nilpotent":
                jobs.append(lambda G=G, F=F: [extension_transfer_sweep(G, F)])
        jobs.append(lambda G=G: [theorem_c_report(G, p) for p in primefactors(G.order)])
        jobs.append(lambda G=G: [mckay_check(G)])
    jobs.append(lambda: [counterexample_report(get_group(COUNTEREXAMPLE_GROUP))])
    return jobs

def cmd_verify(args) -> tuple:
    if args.target == "counterexample-2S4":
        reports = [counterexample_report(get_group(COUNTEREXAMPLE_GROUP))]
    elif args.target == "all":
        jobs = sweep_jobs()
        with ThreadPoolExecutor(max_workers=max(1, args.jobs)) as pool:
            batches = list(pool.map(lambda job: job(), jobs))
        reports = [r for batch in batches for r in batch]
    else:
        if not args.group:
            raise argparse.ArgumentTypeError(f"verify {args.target} needs a group")
        G = resolve_group(args.group)
        F = FormationDescriptor.parse(args.formation)
        reports = single_reports(args.target, G, F, args)

    passed = all(r.passed for r in reports)
    logger.info(f"{'✅' if passed else '❌'} {sum(r.passed for r in reports)}/{len(reports)} reports pass")
    return (0 if passed else 1), _render_reports(reports, args.json)


# --- Main Function ---

def run_command(argv: list) -> tuple:

    """
    Runs one command line.

    Args:
        argv (list): Arguments without the program name.

    Returns:
        tuple: (exit code, stdout text). 0 success, 1 verification failure, 2 usage error.
    """

    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return (e.code if isinstance(e.code, int) else 2), ""

    configure_logging("INFO" if args.verbose else None)

    try:
        if args.command == "verify":
            return cmd_verify(args)

        G = resolve_group(args.group)
        if args.command == "table":
            return cmd_table(G, args)

        F = FormationDescriptor.parse(args.formation)
        handler = {
            "projector": cmd_projector,
            "residual": cmd_residual,
            "series": cmd_series,
            "headchars": cmd_headchars,
        }[args.command]
        return handler(G, F, args)

    except (InternalInconsistencyError, CatalogIntegrityError) as e:
        logger.error(f"❌ {e}")
        return 1, ""
    except (FormataError, argparse.ArgumentTypeError) as e:
        logger.error(f"❌ {e}")
        return 2, ""

def main() -> None:
    code, output = run_command(sys.argv[1:])
    if output:
        print(output)
    sys.exit(code)


# Nameguard
if __name__ == "__main__":
    main()
