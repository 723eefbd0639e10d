"""
Argument grammar of the command-line front end.

Verbs and subverbs map one-to-one onto handlers in ``cli.commands``;
free-text parameters (partitions, elements, vectors) are kept as strings
here and validated by ``validation.input_validator`` before dispatch.
"""

import argparse

from config.settings import Settings
from verification.suite import SUITES

VERIFY_SUITES = ["all", *SUITES]


# settings exposed as --flag-name; types and help text come from the Settings fields
SETTINGS_FLAGS = (
    "max_degree",
    "enumeration_max_n",
    "closure_cap",
    "jp_cap",
    "candidate_cap",
    "isomorphism_cap",
    "homomorphism_pair_cap",
    "z2_max_n",
    "quotient_max_blocks",
    "complex_max_n",
    "lie_max_n",
    "unitary_max_n",
    "reconstruction_tol",
    "orthogonality_tol",
    "unitarity_tol",
    "random_unitary_tol",
    "eigen_cluster_gap",
    "random_checks",
)

_FLAG_ALIASES = {"isomorphism_cap": ["--iso-cap"]}


def flag_name(field: str) -> str:
    return "--" + field.replace("_", "-")


def _common() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["table", "json"], default="table", help="Report format")
    common.add_argument("--log-level", dest="log_level", default=None,
                        choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"],
                        help="Diagnostics level on standard error")
    common.add_argument("--log-format", dest="log_format", default=None, choices=["text", "json"],
                        help="Diagnostics format on standard error")
    fields = Settings.model_fields
    for name in SETTINGS_FLAGS:
        field = fields[name]
        common.add_argument(
            flag_name(name), *_FLAG_ALIASES.get(name, []),
            dest=name, type=field.annotation, default=None,
            help=f"{field.description} (default {field.default})",
        )
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(
        prog="parity-groups",
        description="Signed-permutation parity groups, lattice quotients and their verification",
    )
    verbs = parser.add_subparsers(dest="verb", metavar="VERB")
    verbs.required = True

    def sub(group, name: str, help_text: str) -> argparse.ArgumentParser:
        return group.add_parser(name, parents=[common], help=help_text)

    # verify
    verify = verbs.add_parser("verify", help="Run acceptance checks")
    verify_sub = verify.add_subparsers(dest="subverb", metavar="SUITE")
    verify_sub.required = True
    for name in VERIFY_SUITES:
        p = sub(verify_sub, name, f"Run the {name} checks")
        p.add_argument("--max-n", dest="max_n", type=int, default=None, help="Upper bound on degrees")
        p.add_argument("--seed", type=int, default=None, help="Seed for randomised checks")

    # group
    group = verbs.add_parser("group", help="Signed permutations and parity groups")
    group_sub = group.add_subparsers(dest="subverb", metavar="ACTION")
    group_sub.required = True
    for name, help_text in (("order", "Order of a standard group"), ("elements", "List a standard group")):
        p = sub(group_sub, name, help_text)
        p.add_argument("--kind", required=True, help="P, AP, BP or CP")
        p.add_argument("--n", type=int, required=True)
    p = sub(group_sub, "parity", "Parity values of one element")
    p.add_argument("--element", required=True, help="e.g. 'π:[2,1];ε:[+1,-1]'")
    p.add_argument("--parity", type=int, choices=[1, 2, 3], default=None)
    p = sub(group_sub, "generate", "Closure of embedded low-degree copies")
    p.add_argument("--kind", required=True, help="AP3, BP2, CP2 or P2")
    p.add_argument("--n", type=int, required=True)
    p = sub(group_sub, "structure", "Semidirect structure of AP_n or BP_n")
    p.add_argument("--kind", required=True, help="AP or BP")
    p.add_argument("--n", type=int, required=True)
    p = sub(group_sub, "jp", "Order and enumeration of JP for a partition")
    p.add_argument("--partition", required=True)
    p = sub(group_sub, "iso", "Isomorphism test between two standard groups")
    p.add_argument("--kind", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--other-kind", dest="other_kind", required=True)
    p.add_argument("--other-n", dest="other_n", type=int, default=None)

    # quotient
    quotient = verbs.add_parser("quotient", help="Finite quotients Z^n/JZ^n")
    quotient_sub = quotient.add_subparsers(dest="subverb", metavar="ACTION")
    quotient_sub.required = True
    p = sub(quotient_sub, "order", "Order and table of Z^n/JZ^n")
    p.add_argument("--partition", required=True)
    p = sub(quotient_sub, "project", "Class of an integer vector")
    p.add_argument("--partition", required=True)
    p.add_argument("--vector", required=True)

    # chart
    chart = verbs.add_parser("chart", help="Exact charts of R^n/JZ^n")
    chart_sub = chart.add_subparsers(dest="subverb", metavar="ACTION")
    chart_sub.required = True
    for name, help_text in (("eval", "Chart of a point"), ("spherical", "Spherical angles per block")):
        p = sub(chart_sub, name, help_text)
        p.add_argument("--partition", required=True)
        p.add_argument("--vector", required=True)
    p = sub(chart_sub, "equiv", "Compare two points modulo JZ^n")
    p.add_argument("--partition", required=True)
    p.add_argument("--vector", required=True)
    p.add_argument("--other", required=True)

    # lattice
    lattice = verbs.add_parser("lattice", help="Quotient complexes and their rotations")
    lattice_sub = lattice.add_subparsers(dest="subverb", metavar="ACTION")
    lattice_sub.required = True
    for name, help_text in (
        ("complex", "Nodes, circles and incidence"),
        ("rotations", "Discrete rotation group"),
        ("prop1", "Compare the rotation group with the JP action"),
    ):
        p = sub(lattice_sub, name, help_text)
        p.add_argument("--partition", required=True)
        p.add_argument("--seed", type=int, default=None)
    p = sub(lattice_sub, "full", "Automorphisms of L^n/Z^n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=None)

    # lie
    lie = verbs.add_parser("lie", help="Parity Lie algebra generators")
    lie_sub = lie.add_subparsers(dest="subverb", metavar="ACTION")
    lie_sub.required = True
    for name, help_text in (("closure", "Bracket closure basis"), ("generators", "Generator matrices")):
        p = sub(lie_sub, name, help_text)
        p.add_argument("--partition", required=True)
        p.add_argument("--full", action="store_true", help="Use every cross-block pair")
    p = sub(lie_sub, "p", "Generator count next to closure dimensions")
    p.add_argument("--partition", required=True)
    p = sub(lie_sub, "exp", "One-parameter subgroup exp(tX)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--pair", required=True, help="1-based axes j,k")
    p.add_argument("--t", type=float, required=True)
    p.add_argument("--hyperbolic", action="store_true", help="Use the so(1,1) generator")

    # unitary
    unitary = verbs.add_parser("unitary", help="Random unitaries and their O diag O factorisation")
    unitary_sub = unitary.add_subparsers(dest="subverb", metavar="ACTION")
    unitary_sub.required = True
    p = sub(unitary_sub, "random", "Seeded Haar-random unitary")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=None)
    p = sub(unitary_sub, "decompose", "Factor a seeded random unitary")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--tol", type=float, default=None)

    return parser
