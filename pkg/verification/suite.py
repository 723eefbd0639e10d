"""
Acceptance suite: one function per verified claim family.

Each function takes the degree bound ``max_n`` (None keeps the documented
range) and a seed, and returns the list of checks it ran. Every check is
also logged through ``log_check_result``.
"""

import itertools
import math
import random
import time
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional

import numpy as np
import sympy

from config.settings import settings
from config.logging_config import get_logger, log_check_result
from groups.engine import (
    as_group,
    closure,
    embedded_generators,
    full_group,
    kernel,
    standard_subgroup,
    structure_check,
    z2_A_generated_check,
)
from groups.errors import DecompositionError
from groups.isomorphism import isomorphic
from groups.jp import jp_group, jp_identity, jp_inverse
from groups.partition import PartitionSpec, compositions
from groups.signed_perm import (
    ParityKind,
    compose,
    decompose,
    from_matrix,
    inverse,
    iter_Pn,
    parity,
    to_matrix,
)
from lattice.automorphisms import as_finite_group, preserves_incidence, rotation_group, candidate_automorphisms
from lattice.complex import build_complex, check_complex
from lattice.action import full_quotient_automorphisms, verify_prop1
from lie.algebras import (
    AlgebraKind,
    TwoByTwo,
    algebra_det,
    algebra_inverse,
    det_kernel_member,
    hyperbolic_point,
    pythagorean_point,
)
from lie.closure import (
    bracket_closure,
    closure_report,
    generator_set,
    is_bracket_closed,
    p_formula,
    so11_generator,
    so2_generator,
)
from lie.matrices import EchelonSpan, RationalMatrix
from lie.monomial import factor_monomial, random_monomial, reconstruct_monomial
from lie.unitary import odo_decompose, random_unitary, semipolar
from quotients.abelian import (
    chart,
    chart_add,
    chart_equiv,
    difference_in_lattice,
    lattice_az_generated,
    membership,
    quotient_image_order,
    quotient_table,
)

from .report import Check

logger = get_logger(__name__)

CheckList = List[Check]


def _bound(default: int, max_n: Optional[int]) -> int:
    return default if max_n is None else min(default, max_n)


def _record(checks: CheckList, module: str, name: str, expected: Any, actual: Any,
            passed: Optional[bool] = None) -> bool:
    ok = (expected == actual) if passed is None else bool(passed)
    checks.append(Check(name=name, expected=expected, actual=actual, passed=ok))
    log_check_result(module, name, ok, {"expected": expected, "actual": actual})
    return ok


# ----------------------------------------------------------------------
# signed permutations and parity


def verify_parity(max_n: Optional[int] = None, seed: Optional[int] = None) -> CheckList:
    """Homomorphism law for every kind, inverse invariance and decompose, exhaustive."""
    checks: CheckList = []
    kinds = list(ParityKind)
    for n in range(1, _bound(4, max_n) + 1):
        elements = list(iter_Pn(n))
        values = {z: tuple(parity(z, k) for k in kinds) for z in elements}
        violations = 0
        for g, h in itertools.product(elements, repeat=2):
            gh = values[compose(g, h)]
            vg, vh = values[g], values[h]
            violations += sum(1 for i in range(3) if gh[i] != vg[i] * vh[i])
        _record(checks, "parity", f"homomorphism n={n} ({3 * len(elements) ** 2} checks)", 0, violations)

        bad_inverse = sum(1 for z in elements if values[inverse(z)] != values[z])
        _record(checks, "parity", f"inverse invariance n={n}", 0, bad_inverse)

        parts = [decompose(z) for z in elements]
        rebuilt = sum(1 for z, (x, y) in zip(elements, parts) if compose(x, y) != z)
        bijective = len(set(parts)) == len(elements)
        _record(checks, "parity", f"decompose n={n}", True, rebuilt == 0 and bijective)

        round_trip = sum(1 for z in elements if from_matrix(to_matrix(z)) != z)
        _record(checks, "parity", f"matrix round trip n={n}", 0, round_trip)

        conjugate = sum(
            1 for x, y in parts for k in kinds
            if parity(compose(x, y), k) != parity(compose(y, x), k)
        )
        _record(checks, "parity", f"xy and yx share every parity n={n}", 0, conjugate)
    return checks


def verify_kernels(max_n: Optional[int] = None, seed: Optional[int] = None) -> CheckList:
    """Kernel orders, index 2, predicate subgroups equal kernels."""
    checks: CheckList = []
    for n in range(2, _bound(5, max_n) + 1):
        total = 2 ** n * math.factorial(n)
        for name, kind, expected in (
            ("AP", ParityKind.TYPE1, total // 2),
            ("BP", ParityKind.TYPE2, total // 2),
            ("CP", ParityKind.TYPE3, total // 2),
        ):
            ker = kernel(n, kind)
            _record(checks, "kernels", f"|{name}_{n}|", expected, ker.order)
            _record(checks, "kernels", f"{name}_{n} predicate equals kernel", True, standard_subgroup(name, n) == ker)
    checks.extend(verify_jp_laws(max_n, seed))
    return checks


_BP2_LISTING = [[[1, 0], [0, 1]], [[0, 1], [1, 0]], [[-1, 0], [0, -1]], [[0, -1], [-1, 0]]]
_CP2_LISTING = [[[1, 0], [0, 1]], [[0, 1], [-1, 0]], [[-1, 0], [0, -1]], [[0, -1], [1, 0]]]


def verify_listings(max_n: Optional[int] = None, seed: Optional[int] = None) -> CheckList:
    """The four-element groups BP_2 and CP_2 written out as matrices."""
    checks: CheckList = []
    for name, kind, listing in (
        ("BP_2", ParityKind.TYPE2, _BP2_LISTING),
        ("CP_2", ParityKind.TYPE3, _CP2_LISTING),
    ):
        expected = sorted(from_matrix(m).to_text() for m in listing)
        actual = kernel(2, kind).to_json()
        _record(checks, "listings", f"{name} listing", expected, sorted(actual))
    return checks


def verify_generation(max_n: Optional[int] = None, seed: Optional[int] = None) -> CheckList:
    """Embedded low-degree copies generate the kernels; Z2 and lattice analogues."""
    checks: CheckList = []
    for n in range(3, _bound(5, max_n) + 1):
        for small, target in (("CP2", "CP"), ("BP2", "BP"), ("AP3", "AP")):
            generated = closure(embedded_generators(small, n))
            _record(checks, "generation", f"<{small} copies> = {target}_{n}", True,
                    generated == standard_subgroup(target, n))
    for n in range(2, _bound(5, max_n) + 1):
        for kind in ("AP", "BP"):
            report = structure_check(kind, n)
            _record(checks, "generation", f"{kind}_{n} semidirect structure", True, report["passed"])
    for n in range(1, 9):
        report = z2_A_generated_check(n)
        _record(checks, "generation", f"AZ2^{n} spanned by pair vectors", True, report["passed"])
    for n in range(2, 9):
        report = lattice_az_generated(n)
        _record(checks, "generation", f"AZ^{n} generated by AZ^2 copies", 2, report["index"],
                passed=report["passed"])
    return checks


# ----------------------------------------------------------------------
# abelian quotients and charts


def verify_quotients(max_n: Optional[int] = None, seed: Optional[int] = None) -> CheckList:
    checks: CheckList = []
    bound = _bound(6, max_n)
    mismatches = []
    for n in range(1, bound + 1):
        for partition in compositions(n):
            order = quotient_image_order(partition)
            table = quotient_table(partition)
            if order != 2 ** partition.m or table["order"] != 2 ** partition.m:
                mismatches.append(partition.to_text())
    _record(checks, "quotients", f"|Z^n/JZ^n| = 2^m for every partition, n <= {bound}", [], mismatches)

    rng = random.Random(settings.default_seed if seed is None else seed)
    for n in range(1, bound + 1):
        points = list(itertools.product(range(3), repeat=n))
        classes = {tuple(v % 2 for v in x) for x in points}
        if math.comb(len(points), 2) <= settings.homomorphism_pair_cap:
            pairs = itertools.combinations(points, 2)
        else:
            pairs = (rng.sample(points, 2) for _ in range(settings.random_checks))
        separated = all(
            membership([a - b for a, b in zip(x, y)], "B") == (tuple(a % 2 for a in x) == tuple(b % 2 for b in y))
            for x, y in pairs
        )
        _record(checks, "quotients", f"|Z^{n}/BZ^{n}|", 2 ** n, len(classes), passed=len(classes) == 2 ** n and separated)
    return checks


def _random_partition(rng: random.Random, n: int) -> PartitionSpec:
    sizes = []
    remaining = n
    while remaining:
        size = rng.randint(1, remaining)
        sizes.append(size)
        remaining -= size
    return PartitionSpec.from_sizes(sizes)


def _random_rational(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-20, 20), rng.randint(1, 12))


def _random_lattice_vector(rng: random.Random, partition: PartitionSpec) -> List[int]:
    k = [rng.randint(-5, 5) for _ in range(partition.n)]
    for block in partition.blocks:
        if sum(k[a] for a in block) % 2:
            k[block[0]] += 1
    return k


def verify_charts(max_n: Optional[int] = None, seed: Optional[int] = None) -> CheckList:
    """Randomised kernel invariance, additivity and forced positive/negative pairs."""
    checks: CheckList = []
    rng = random.Random(settings.default_seed if seed is None else seed)
    bound = _bound(6, max_n)
    invariance = additivity = positive = negative = torus = 0
    cases = settings.random_checks
    for _ in range(cases):
        n = rng.randint(1, bound)
        partition = _random_partition(rng, n)
        x = [_random_rational(rng) for _ in range(n)]
        y = [_random_rational(rng) for _ in range(n)]
        k = _random_lattice_vector(rng, partition)
        shifted = [a + b for a, b in zip(x, k)]

        invariance += chart(shifted, partition) != chart(x, partition)
        additivity += chart([a + b for a, b in zip(x, y)], partition) != chart_add(chart(x, partition), chart(y, partition))
        positive += not (chart_equiv(x, shifted, partition) and difference_in_lattice(x, shifted, partition))

        # odd block sum or a fractional shift leaves JZ^n
        off = list(k)
        if rng.random() < 0.5:
            off[rng.randrange(n)] += 1
            off_vector = [a + b for a, b in zip(x, off)]
        else:
            j = rng.randrange(n)
            off_vector = [a + b + (Fraction(1, 2) if i == j else 0) for i, (a, b) in enumerate(zip(x, off))]
        negative += chart_equiv(x, off_vector, partition) or difference_in_lattice(x, off_vector, partition)

        singletons = PartitionSpec.singletons(n)
        j = rng.randrange(n)
        two = [a + (2 if i == j else 0) for i, a in enumerate(x)]
        one = [a + (1 if i == j else 0) for i, a in enumerate(x)]
        torus += not (chart_equiv(x, two, singletons) and not chart_equiv(x, one, singletons))

    _record(checks, "charts", f"kernel invariance ({cases} cases)", 0, invariance)
    _record(checks, "charts", f"chart additivity ({cases} cases)", 0, additivity)
    _record(checks, "charts", f"positive pairs equivalent ({cases} cases)", 0, positive)
    _record(checks, "charts", f"negative pairs separated ({cases} cases)", 0, negative)
    _record(checks, "charts", f"singleton chart kernel is BZ^n ({cases} cases)", 0, torus)
    return checks


# ----------------------------------------------------------------------
# quotient complexes


def verify_prop1_suite(max_n: Optional[int] = None, seed: Optional[int] = None) -> CheckList:
    """Rotation groups versus the JP action, and the full quotient L^n/Z^n."""
    checks: CheckList = []
    bound = _bound(4, max_n)
    for n in range(1, bound + 1):
        for partition in compositions(n):
            label = partition.to_text()
            report = verify_prop1(partition, seed)
            _record(checks, "prop1", f"[{label}] JP image = rotation group", True, report.predicate_equals_image)
            _record(
                checks, "prop1", f"[{label}] image * kernel = |JP|",
                report.jp_order, report.image_order * report.kernel_order,
            )
            _record(
                checks, "prop1", f"[{label}] JP/kernel isomorphic to rotations",
                True, report.iso_check, passed=report.iso_check is not False,
            )
            _record(
                checks, "prop1", f"[{label}] orders jp/kernel/rotations",
                "consistent", {"jp": report.jp_order, "kernel": report.kernel_order, "rotations": report.rotation_order},
                passed=report.passed,
            )

    for n in range(1, bound + 1):
        single = rotation_group(build_complex(PartitionSpec.single_block(n)))
        cp = kernel(n, ParityKind.TYPE3)
        iso = isomorphic(as_finite_group(single, f"Rot[{n}]"), as_group(cp, f"CP{n}")) is not None
        _record(checks, "prop1", f"single block {n}: rotations = CP_{n}", len(cp), len(single), passed=iso)

        singles = rotation_group(build_complex(PartitionSpec.singletons(n)))
        bp = kernel(n, ParityKind.TYPE2)
        iso = isomorphic(as_finite_group(singles, f"Rot[1^{n}]"), as_group(bp, f"BP{n}")) is not None
        _record(checks, "prop1", f"singletons {n}: rotations = BP_{n}", len(bp), len(singles), passed=iso)

    trivial = rotation_group(build_complex(PartitionSpec.single_block(1)))
    _record(checks, "prop1", "L^1/2Z rotation group trivial", 1, len(trivial))

    for n in range(1, bound + 1):
        full = full_quotient_automorphisms(n, seed)
        _record(checks, "prop1", f"Aut(L^{n}/Z^{n}) = P_{n}", full.expected_order, full.order, passed=full.passed)

    for n in range(1, _bound(6, max_n) + 1):
        bad = [p.to_text() for p in compositions(n) if not check_complex(build_complex(p))["passed"]]
        _record(checks, "prop1", f"complexes well formed, n={n}", [], bad)

    for n in range(1, min(bound, 3) + 1):
        for partition in compositions(n):
            qc = build_complex(partition)
            ok = all(preserves_incidence(a, qc) for a in candidate_automorphisms(qc))
            _record(checks, "prop1", f"[{partition.to_text()}] candidates preserve incidence", True, ok)
    return checks


def verify_determinant(max_n: Optional[int] = None, seed: Optional[int] = None) -> CheckList:
    """det(to_matrix(z)) = Type3 parity, with sympy as the exact determinant oracle."""
    checks: CheckList = []
    for n in range(1, _bound(4, max_n) + 1):
        mismatches = sum(
            1 for z in iter_Pn(n)
            if sympy.Matrix(to_matrix(z).to_lists()).det() != parity(z, ParityKind.TYPE3)
        )
        _record(checks, "determinant", f"det = Type3 parity, n={n}", 0, mismatches)
    return checks


# ----------------------------------------------------------------------
# Lie algebras


def _hand_span_21() -> EchelonSpan:
    span = EchelonSpan(9)
    for m in (so2_generator(1, 2, 3), so11_generator(1, 3, 3), so11_generator(2, 3, 3)):
        span.add(m.flatten())
    return span


def verify_lie(max_n: Optional[int] = None, seed: Optional[int] = None) -> CheckList:
    checks: CheckList = []
    rng = random.Random(settings.default_seed if seed is None else seed)

    for n in range(2, _bound(5, max_n) + 1):
        basis = bracket_closure(generator_set(PartitionSpec.single_block(n), minimal=True))
        _record(checks, "lie", f"dim closure [{n}]", n * (n - 1) // 2, basis.dimension,
                passed=basis.dimension == n * (n - 1) // 2 and all(b.is_antisymmetric() for b in basis.basis))

    one_one = bracket_closure(generator_set(PartitionSpec.from_sizes([1, 1])))
    _record(checks, "lie", "dim closure [1,1]", 1, one_one.dimension)

    two_one = bracket_closure(generator_set(PartitionSpec.from_sizes([2, 1])))
    hand = _hand_span_21()
    same = two_one.dimension == len(hand) and all(hand.contains(b.flatten()) for b in two_one.basis)
    _record(checks, "lie", "dim closure [2,1] (hand brackets)", 3, two_one.dimension, passed=same)

    for n in range(1, _bound(4, max_n) + 1):
        for partition in compositions(n):
            report = closure_report(partition)
            _record(checks, "lie", f"[{partition.to_text()}] minimal and full spans equal", True, report["spans_equal"])
            hand_p = sum(math.comb(size, 2) for size in partition.sizes) + math.comb(partition.m, 2)
            _record(checks, "lie", f"[{partition.to_text()}] p", hand_p, p_formula(partition))
            if partition.n > 1:
                closed = is_bracket_closed(bracket_closure(generator_set(partition)))
                _record(checks, "lie", f"[{partition.to_text()}] closure is bracket-closed", True, closed)

    gens = generator_set(PartitionSpec.from_sizes([2, 2]), minimal=False)
    reference = bracket_closure(gens).basis
    shuffled_ok = True
    for _ in range(10):
        order = list(gens)
        rng.shuffle(order)
        shuffled_ok &= bracket_closure(order).basis == reference
    _record(checks, "lie", "closure independent of generator order", True, shuffled_ok)

    checks.extend(_verify_algebras(rng))
    return checks


def _random_element(rng: random.Random, kind: AlgebraKind) -> TwoByTwo:
    return TwoByTwo(kind, _random_rational(rng), _random_rational(rng))


def _verify_algebras(rng: random.Random) -> CheckList:
    checks: CheckList = []
    cases = settings.random_checks
    for kind in AlgebraKind:
        failures = 0
        for _ in range(cases):
            a, b = _random_element(rng, kind), _random_element(rng, kind)
            product = a * b
            ma, mb = RationalMatrix(a.matrix()), RationalMatrix(b.matrix())
            failures += RationalMatrix(product.matrix()) != ma @ mb
            failures += RationalMatrix((a + b).matrix()) != ma + mb
            failures += algebra_det(product) != algebra_det(a) * algebra_det(b)
            failures += a * b != b * a
        _record(checks, "lie", f"algebra {kind.value}: closed, commutative, det multiplicative", 0, failures)

    failures = 0
    for _ in range(cases):
        m1, m2 = rng.randint(-9, 9), rng.randint(-9, 9)
        k1, k2 = rng.randint(1, 9), rng.randint(1, 9)
        c1, c2 = pythagorean_point(m1, k1), pythagorean_point(m2, k2)
        failures += not (det_kernel_member(c1 * c2) and det_kernel_member(algebra_inverse(c1)))
        if abs(m1) != k1 and abs(m2) != k2:
            h1, h2 = hyperbolic_point(m1, k1), hyperbolic_point(m2, k2)
            failures += not (det_kernel_member(h1 * h2) and det_kernel_member(algebra_inverse(h1)))
    _record(checks, "lie", "det-one subgroups closed under product and inverse", 0, failures)
    return checks


def verify_monomial(max_n: Optional[int] = None, seed: Optional[int] = None) -> CheckList:
    """Exact P * D reconstruction and generation of P_n by S2 wr S2 copies."""
    checks: CheckList = []
    rng = random.Random(settings.default_seed if seed is None else seed)
    bound = _bound(6, max_n)
    failures = 0
    for case in range(100):
        n = 1 + case % bound
        m = random_monomial(n, rng)
        p, d = factor_monomial(m)
        signs_match = all(
            (1 if m[p.perm[j], j] > 0 else -1) == p.signs[j] for j in range(n)
        )
        failures += not (reconstruct_monomial(p, d) == m and all(x > 0 for x in d) and signs_match)
    _record(checks, "monomial", "factor_monomial reconstructs 100 random matrices", 0, failures)

    for n in range(2, _bound(5, max_n) + 1):
        generated = closure(embedded_generators("P2", n))
        _record(checks, "monomial", f"<P_2 copies> = P_{n}", 2 ** n * math.factorial(n), generated.order,
                passed=generated == full_group("P", n))
    return checks


def verify_prop2(max_n: Optional[int] = None, seed: Optional[int] = None) -> CheckList:
    """O1 diag(e^{i theta}) O2 factorisation of seeded random unitaries."""
    checks: CheckList = []
    seed = settings.default_seed if seed is None else seed
    bound = _bound(8, max_n)
    worst_reconstruction = worst_orthogonality = 0.0
    out_of_branch = 0
    rejected = 0
    for case in range(100):
        n = 1 + case % bound
        u = random_unitary(n, seed + case)
        try:
            result = odo_decompose(u)
        except DecompositionError as e:
            logger.error("unitary %d (n=%d, seed=%d) rejected: %s", case, n, seed + case, e)
            rejected += 1
            continue
        worst_reconstruction = max(worst_reconstruction, result.reconstruction_error)
        worst_orthogonality = max(worst_orthogonality, result.orthogonality_error)
        out_of_branch += int(np.sum((result.thetas <= -np.pi / 2) | (result.thetas > np.pi / 2)))
    _record(checks, "prop2", "decompositions completed (100 unitaries)", 100, 100 - rejected)
    _record(checks, "prop2", "reconstruction error (100 unitaries)", f"<= {settings.reconstruction_tol:g}",
            worst_reconstruction, passed=worst_reconstruction <= settings.reconstruction_tol)
    _record(checks, "prop2", "orthogonality error (100 unitaries)", f"<= {settings.orthogonality_tol:g}",
            worst_orthogonality, passed=worst_orthogonality <= settings.orthogonality_tol)
    _record(checks, "prop2", "thetas in (-pi/2, pi/2]", 0, out_of_branch)

    rng = np.random.Generator(np.random.Philox(seed))
    worst_theta = 0.0
    for n in range(1, bound + 1):
        q, _ = np.linalg.qr(rng.standard_normal((n, n)))
        result = odo_decompose(q)
        worst_theta = max(worst_theta, float(np.max(np.abs(result.thetas))))
    _record(checks, "prop2", "real orthogonal input gives theta = 0", "<= 1e-9", worst_theta,
            passed=worst_theta <= 1e-9)

    identity = odo_decompose(np.eye(bound, dtype=complex))
    ok = np.allclose(identity.o1, np.eye(bound)) and np.allclose(identity.o2, np.eye(bound)) \
        and np.allclose(identity.thetas, 0.0)
    _record(checks, "prop2", "identity gives identity factors", True, bool(ok))

    py_rng = random.Random(seed)
    semipolar_failures = 0
    for _ in range(settings.random_checks):
        z = complex(py_rng.uniform(-3, 3), py_rng.uniform(-3, 3))
        kappa, theta = semipolar(z)
        semipolar_failures += not (0 <= theta < math.pi and abs(kappa * complex(math.cos(theta), math.sin(theta)) - z) < 1e-12)
    _record(checks, "prop2", "semipolar form reconstructs", 0, semipolar_failures)
    return checks


def verify_jp_laws(max_n: Optional[int] = None, seed: Optional[int] = None) -> CheckList:
    """Associativity and inverses in JP on every partition (sampled triples when large)."""
    checks: CheckList = []
    rng = random.Random(settings.default_seed if seed is None else seed)
    for n in range(1, _bound(4, max_n) + 1):
        for partition in compositions(n):
            group = jp_group(partition)
            table = group.cayley_table()
            one = group.index(jp_identity(partition))
            inverse_ok = all(table[i][group.index(jp_inverse(a))] == one for i, a in enumerate(group.elements))
            size = len(group)
            if size ** 3 <= settings.homomorphism_pair_cap:
                triples = itertools.product(range(size), repeat=3)
            else:
                triples = (
                    (rng.randrange(size), rng.randrange(size), rng.randrange(size))
                    for _ in range(settings.homomorphism_pair_cap)
                )
            assoc_ok = all(table[table[a][b]][c] == table[a][table[b][c]] for a, b, c in triples)
            _record(checks, "kernels", f"JP[{partition.to_text()}] group laws", True, inverse_ok and assoc_ok)
    return checks


SUITES: Dict[str, Callable[[Optional[int], Optional[int]], CheckList]] = {
    "parity": verify_parity,
    "kernels": verify_kernels,
    "listings": verify_listings,
    "generation": verify_generation,
    "quotients": verify_quotients,
    "charts": verify_charts,
    "prop1": verify_prop1_suite,
    "determinant": verify_determinant,
    "lie": verify_lie,
    "monomial": verify_monomial,
    "prop2": verify_prop2,
}


def run_suite(name: str, max_n: Optional[int] = None, seed: Optional[int] = None) -> CheckList:
    """Run one named suite, or every suite in registry order for "all"."""
    if name == "all":
        checks: CheckList = []
        for key in SUITES:
            checks.extend(run_suite(key, max_n, seed))
        return checks
    if name not in SUITES:
        raise KeyError(f"Unknown suite {name!r}")
    started = time.perf_counter()
    checks = SUITES[name](max_n, seed)
    logger.info("suite %s: %d checks in %.2fs", name, len(checks), time.perf_counter() - started)
    return checks
