"""
Handlers for every verb/subverb pair.

A handler receives the parsed namespace and a fresh Report; it validates its
text parameters, fills ``report.result`` with JSON-native values and adds
the checks that back the result.
"""

import math
from argparse import Namespace
from typing import Any, Callable, Dict, Tuple

import numpy as np

from config.settings import settings
from config.logging_config import get_logger
from groups.engine import (
    STANDARD_KINDS,
    as_group,
    closure,
    embedded_generators,
    full_group,
    structure_check,
)
from groups.isomorphism import isomorphic
from groups.jp import jp_enumerate, jp_group, jp_order, size_preserving_block_perms
from groups.signed_perm import ParityKind, compose, decompose, parity
from lattice.automorphisms import candidate_count, rotation_group
from lattice.complex import build_complex, check_complex, complex_to_json
from lattice.action import full_quotient_automorphisms, verify_prop1
from lie.closure import (
    bracket_closure,
    closure_report,
    generator_set,
    is_bracket_closed,
    one_parameter,
    p_formula,
    so11_generator,
    so2_generator,
)
from lie.unitary import odo_decompose, random_unitary, unitarity_residual
from quotients.abelian import (
    chart,
    chart_equiv,
    difference_in_lattice,
    membership,
    project_node,
    quotient_image_order,
    quotient_table,
    spherical,
)
from validation.error_formatter import error_formatter
from validation.input_validator import input_validator
from verification.report import Report
from verification.suite import SUITES, run_suite

logger = get_logger(__name__)

Handler = Callable[[Namespace, Report], None]

GROUP_KINDS = ["P", *STANDARD_KINDS]
EMBEDDED_KINDS = {"AP3": "AP", "BP2": "BP", "CP2": "CP", "P2": "P"}
# elements are listed in full only up to this order
LISTING_LIMIT = 5000


class UsageError(Exception):
    """Invalid command-line parameters; the message is ready for standard error."""


def _validated(**results: Dict[str, Any]) -> Dict[str, Any]:
    """Values of valid results, or UsageError with every failure formatted."""
    if any(not r["is_valid"] for r in results.values()):
        raise UsageError(error_formatter.format_validation_summary(results))
    return {field: r["value"] for field, r in results.items()}


def _seed(args: Namespace) -> int:
    seed = getattr(args, "seed", None)
    return settings.default_seed if seed is None else seed


def _expected_order(kind: str, n: int) -> int:
    total = 2 ** n * math.factorial(n)
    if kind == "P" or (kind == "AP" and n == 1):
        return total
    return total // 2


def _bits(v) -> str:
    return "".join(str(b) for b in v.bits) or "0"


def _complex_rows(matrix: np.ndarray) -> list:
    return [[[float(z.real), float(z.imag)] for z in row] for row in matrix]


# ----------------------------------------------------------------------
# verify


def cmd_verify(args: Namespace, report: Report) -> None:
    if args.max_n is not None:
        _validated(max_n=input_validator.validate_degree(args.max_n, settings.max_degree, "max-n"))
    checks = run_suite(args.subverb, args.max_n, args.seed)
    report.checks.extend(checks)
    report.result = {"suite": args.subverb, "checks": len(checks), "seed": _seed(args)}


# ----------------------------------------------------------------------
# group


def _kind_and_degree(args: Namespace, choices) -> Tuple[str, int]:
    values = _validated(
        kind=input_validator.validate_choice(args.kind, choices, "kind"),
        n=input_validator.validate_degree(args.n, settings.enumeration_max_n),
    )
    return values["kind"], values["n"]


def cmd_group_order(args: Namespace, report: Report) -> None:
    kind, n = _kind_and_degree(args, GROUP_KINDS)
    group = full_group(kind, n)
    report.result = {"kind": kind, "n": n, "order": group.order}
    report.add(f"|{kind}_{n}| matches 2^n n! count", _expected_order(kind, n), group.order)


def cmd_group_elements(args: Namespace, report: Report) -> None:
    kind, n = _kind_and_degree(args, GROUP_KINDS)
    group = full_group(kind, n)
    report.result = {"kind": kind, "n": n, "order": group.order}
    if group.order <= LISTING_LIMIT:
        report.result["elements"] = group.to_json()
    else:
        report.result["elements"] = None
        logger.warning("%s_%d has %d elements; listing suppressed", kind, n, group.order)
    if group.order ** 2 <= settings.homomorphism_pair_cap:
        report.add("closed under composition and inverse", True, group.is_closed())


def cmd_group_parity(args: Namespace, report: Report) -> None:
    z = _validated(element=input_validator.validate_element(args.element))["element"]
    kinds = [ParityKind(args.parity)] if args.parity else list(ParityKind)
    values = {f"Type{k.value}": parity(z, k) for k in kinds}
    x, y = decompose(z)
    report.result = {
        "element": z.to_text(),
        "parity": values,
        "permutation_part": x.to_text(),
        "sign_part": y.to_text(),
    }
    report.add("z = x y", z.to_text(), compose(x, y).to_text())
    if args.parity is None:
        report.add("Type3 = Type1 * Type2", values["Type3"], values["Type1"] * values["Type2"])


def cmd_group_generate(args: Namespace, report: Report) -> None:
    kind, n = _kind_and_degree(args, EMBEDDED_KINDS)
    generators = embedded_generators(kind, n)
    generated = closure(generators)
    target = EMBEDDED_KINDS[kind]
    report.result = {"kind": kind, "n": n, "generators": len(generators), "order": generated.order}
    report.add(f"<{kind} copies> = {target}_{n}", _expected_order(target, n), generated.order,
               passed=generated == full_group(target, n))


def cmd_group_structure(args: Namespace, report: Report) -> None:
    kind, n = _kind_and_degree(args, ["AP", "BP"])
    _validated(n=input_validator.validate_degree(n, 6))
    result = structure_check(kind, n)
    report.result = result
    for key in ("normal_subgroup", "intersection_trivial", "product_order", "normal_matches", "complement_matches"):
        report.add(key, True, result[key])


def cmd_group_jp(args: Namespace, report: Report) -> None:
    partition = _validated(partition=input_validator.validate_partition(args.partition))["partition"]
    elements = jp_enumerate(partition)
    report.result = {
        "partition": partition.to_text(),
        "blocks": partition.describe(),
        "order": len(elements),
        "block_permutations": [[t + 1 for t in tau] for tau in size_preserving_block_perms(partition)],
    }
    report.add("|JP| matches the product formula", jp_order(partition), len(elements))
    if len(elements) ** 2 <= settings.homomorphism_pair_cap:
        report.add("JP closed under its law", True, jp_group(partition).is_closed())


def cmd_group_iso(args: Namespace, report: Report) -> None:
    kind, n = _kind_and_degree(args, GROUP_KINDS)
    other_n = n if args.other_n is None else args.other_n
    values = _validated(
        other_kind=input_validator.validate_choice(args.other_kind, GROUP_KINDS, "other-kind"),
        other_n=input_validator.validate_degree(other_n, settings.enumeration_max_n, "other-n"),
    )
    g = as_group(full_group(kind, n), f"{kind}{n}")
    h = as_group(full_group(values["other_kind"], values["other_n"]), f"{values['other_kind']}{values['other_n']}")
    mapping = isomorphic(g, h)
    report.result = {
        "groups": [g.name, h.name],
        "orders": [len(g), len(h)],
        "order_histograms": [
            {str(k): v for k, v in sorted(g.order_histogram().items())},
            {str(k): v for k, v in sorted(h.order_histogram().items())},
        ],
        "isomorphic": mapping is not None,
    }


# ----------------------------------------------------------------------
# quotient and chart


def cmd_quotient_order(args: Namespace, report: Report) -> None:
    partition = _validated(partition=input_validator.validate_partition(args.partition))["partition"]
    table = quotient_table(partition)
    report.result = table
    report.add("|Z^n/JZ^n| = 2^m", 2 ** partition.m, quotient_image_order(partition))


def cmd_quotient_project(args: Namespace, report: Report) -> None:
    partition = _validated(partition=input_validator.validate_partition(args.partition))["partition"]
    vector = _validated(vector=input_validator.validate_vector(args.vector, partition.n, integral=True))["vector"]
    x = [int(v) for v in vector]
    image = project_node(x, partition)
    report.result = {
        "partition": partition.to_text(),
        "vector": x,
        "class": _bits(image),
        "in_lattice": membership(x, partition),
    }
    report.add("zero class iff in JZ^n", not any(image.bits), report.result["in_lattice"])


def _partition_and_vector(args: Namespace):
    partition = _validated(partition=input_validator.validate_partition(args.partition))["partition"]
    vector = _validated(vector=input_validator.validate_vector(args.vector, partition.n))["vector"]
    return partition, vector


def cmd_chart_eval(args: Namespace, report: Report) -> None:
    partition, vector = _partition_and_vector(args)
    report.result = {
        "partition": partition.to_text(),
        "vector": [str(v) for v in vector],
        "chart": chart(vector, partition).to_json(),
    }


def cmd_chart_spherical(args: Namespace, report: Report) -> None:
    partition, vector = _partition_and_vector(args)
    point = chart(vector, partition)
    angles = [spherical(point, i) for i in range(partition.m)]
    report.result = {
        "partition": partition.to_text(),
        "vector": [str(v) for v in vector],
        "blocks": [a.to_json() for a in angles],
        "text": [a.describe() for a in angles],
    }


def cmd_chart_equiv(args: Namespace, report: Report) -> None:
    partition, vector = _partition_and_vector(args)
    other = _validated(other=input_validator.validate_vector(args.other, partition.n))["other"]
    equivalent = chart_equiv(vector, other, partition)
    in_lattice = difference_in_lattice(vector, other, partition)
    report.result = {
        "partition": partition.to_text(),
        "equivalent": equivalent,
        "difference_in_lattice": in_lattice,
    }
    report.add("chart equality iff difference in JZ^n", in_lattice, equivalent)


# ----------------------------------------------------------------------
# lattice


def cmd_lattice_complex(args: Namespace, report: Report) -> None:
    partition = _validated(partition=input_validator.validate_partition(args.partition))["partition"]
    qc = build_complex(partition)
    report.result = complex_to_json(qc)
    for key, value in check_complex(qc).items():
        if isinstance(value, bool) and key != "passed":
            report.add(key, True, value)


def cmd_lattice_rotations(args: Namespace, report: Report) -> None:
    partition = _validated(partition=input_validator.validate_partition(args.partition))["partition"]
    qc = build_complex(partition)
    rotations = rotation_group(qc)
    report.result = {
        "partition": partition.to_text(),
        "candidates": candidate_count(partition),
        "order": len(rotations),
        "elements": [a.to_text() for a in rotations] if len(rotations) <= LISTING_LIMIT else None,
    }
    report.add("identity is a rotation", True, any(a.is_identity() for a in rotations))


def cmd_lattice_prop1(args: Namespace, report: Report) -> None:
    partition = _validated(partition=input_validator.validate_partition(args.partition))["partition"]
    result = verify_prop1(partition, args.seed)
    report.result = result.model_dump()
    report.add("JP image = rotation group", True, result.predicate_equals_image)
    report.add("image order * kernel order = |JP|", result.jp_order, result.image_order * result.kernel_order)
    if result.iso_check is not None:
        report.add("JP/kernel isomorphic to rotations", True, result.iso_check)


def cmd_lattice_full(args: Namespace, report: Report) -> None:
    n = _validated(n=input_validator.validate_degree(args.n, settings.complex_max_n))["n"]
    result = full_quotient_automorphisms(n, args.seed)
    report.result = result.model_dump()
    report.add(f"|Aut(L^{n}/Z^{n})| = 2^n n!", result.expected_order, result.order)
    report.add("incidence preserved", True, result.incidence_preserved)
    report.add("signed-permutation map bijective", True, result.signed_map_bijective)
    report.add("signed-permutation map homomorphic", True, result.signed_map_homomorphic)
    if result.iso_check is not None:
        report.add(f"isomorphic to P_{n}", True, result.iso_check)


# ----------------------------------------------------------------------
# lie


def _lie_partition(args: Namespace):
    partition = _validated(partition=input_validator.validate_partition(args.partition))["partition"]
    _validated(partition=input_validator.validate_degree(partition.n, settings.lie_max_n, "partition"))
    return partition


def cmd_lie_closure(args: Namespace, report: Report) -> None:
    partition = _lie_partition(args)
    generators = generator_set(partition, minimal=not args.full)
    if not generators:
        report.result = {"partition": partition.to_text(), "n": partition.n, "dimension": 0, "basis": []}
        return
    lie = bracket_closure(generators)
    report.result = {"partition": partition.to_text(), **lie.to_json()}
    report.add("span closed under brackets", True, is_bracket_closed(lie))


def cmd_lie_generators(args: Namespace, report: Report) -> None:
    partition = _lie_partition(args)
    generators = generator_set(partition, minimal=not args.full)
    report.result = {
        "partition": partition.to_text(),
        "p": p_formula(partition),
        "count": len(generators),
        "generators": [g.to_json() for g in generators],
    }
    if not args.full:
        report.add("minimal generator count = p", p_formula(partition), len(generators))


def cmd_lie_p(args: Namespace, report: Report) -> None:
    partition = _lie_partition(args)
    result = closure_report(partition)
    report.result = result
    report.add("minimal and full generator spans equal", True, result["spans_equal"])


def cmd_lie_exp(args: Namespace, report: Report) -> None:
    values = _validated(n=input_validator.validate_degree(args.n, settings.lie_max_n))
    n = values["n"]
    j, k = _validated(pair=input_validator.validate_pair(args.pair, n))["pair"]
    generator = so11_generator(j, k, n) if args.hyperbolic else so2_generator(j, k, n)
    matrix = one_parameter(generator, args.t)
    form = np.eye(n)
    if args.hyperbolic:
        form[k - 1, k - 1] = -1.0
    residual = float(np.linalg.norm(matrix.T @ form @ matrix - form))
    report.result = {
        "generator": generator.to_json(),
        "t": args.t,
        "matrix": matrix.tolist(),
        "form_residual": residual,
        "det": float(np.linalg.det(matrix)),
    }
    # float error grows with the entries of exp(tX)
    bound = 1e-9 * max(1.0, float(np.linalg.norm(matrix))) ** 2
    report.add("exp(tX) preserves the invariant form", f"<= {bound:.1e}", residual, passed=residual <= bound)
    report.add("det exp(tX) = 1", 1.0, report.result["det"], passed=abs(report.result["det"] - 1.0) <= 1e-9)


# ----------------------------------------------------------------------
# unitary


def cmd_unitary_random(args: Namespace, report: Report) -> None:
    n = _validated(n=input_validator.validate_degree(args.n, settings.unitary_max_n))["n"]
    u = random_unitary(n, _seed(args))
    residual = unitarity_residual(u)
    report.result = {"n": n, "seed": _seed(args), "matrix": _complex_rows(u), "unitarity_residual": residual}
    report.add("U*U = I", f"<= {settings.unitarity_tol:g}", residual, passed=residual <= settings.unitarity_tol)


def cmd_unitary_decompose(args: Namespace, report: Report) -> None:
    n = _validated(n=input_validator.validate_degree(args.n, settings.unitary_max_n))["n"]
    tol = settings.reconstruction_tol if args.tol is None else args.tol
    u = random_unitary(n, _seed(args))
    result = odo_decompose(u, tol)
    report.result = {"n": n, "seed": _seed(args), "u": _complex_rows(u), **result.to_json()}
    report.add("reconstruction error", f"<= {tol:g}", result.reconstruction_error,
               passed=result.reconstruction_error <= tol)
    report.add("orthogonality error", f"<= {settings.orthogonality_tol:g}", result.orthogonality_error,
               passed=result.orthogonality_error <= settings.orthogonality_tol)
    in_branch = bool(np.all((result.thetas > -np.pi / 2) & (result.thetas <= np.pi / 2)))
    report.add("thetas in (-pi/2, pi/2]", True, in_branch)


HANDLERS: Dict[Tuple[str, str], Handler] = {
    **{("verify", name): cmd_verify for name in ("all", *SUITES)},
    ("group", "order"): cmd_group_order,
    ("group", "elements"): cmd_group_elements,
    ("group", "parity"): cmd_group_parity,
    ("group", "generate"): cmd_group_generate,
    ("group", "structure"): cmd_group_structure,
    ("group", "jp"): cmd_group_jp,
    ("group", "iso"): cmd_group_iso,
    ("quotient", "order"): cmd_quotient_order,
    ("quotient", "project"): cmd_quotient_project,
    ("chart", "eval"): cmd_chart_eval,
    ("chart", "spherical"): cmd_chart_spherical,
    ("chart", "equiv"): cmd_chart_equiv,
    ("lattice", "complex"): cmd_lattice_complex,
    ("lattice", "rotations"): cmd_lattice_rotations,
    ("lattice", "prop1"): cmd_lattice_prop1,
    ("lattice", "full"): cmd_lattice_full,
    ("lie", "closure"): cmd_lie_closure,
    ("lie", "generators"): cmd_lie_generators,
    ("lie", "p"): cmd_lie_p,
    ("lie", "exp"): cmd_lie_exp,
    ("unitary", "random"): cmd_unitary_random,
    ("unitary", "decompose"): cmd_unitary_decompose,
}
