"""Verification suites: published tables, brute-force oracles and involutions."""
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Callable, Dict, List, Optional, Tuple

from ..algebra.coeff import Coefficient, QSeriesTrunc
from ..algebra.comp import (
    compositions,
    conjugate,
    corresponding_composition,
)
from ..algebra.ncsf import (
    Basis,
    NcsfElement,
    alphabet_negate,
    alphabet_q_interval,
    commutative_image,
    from_ribbon,
    mul,
    nu_involution,
    specialize_exp,
    specialize_one,
    to_lambda,
    to_ribbon,
)
from ..combinatorics import parking, pgraph, trees
from ..combinatorics.parking import CLASSIC, ParkingFamily
from ..config import settings
from ..exceptions import NcInvertException, ValidationError
from ..models import CheckResult, VerifyReport
from ..utils import series
from .. import tables
from .inversion_service import (
    InversionService,
    catalan_triangle_c,
    generalized_binomial,
    generalized_exponential,
    kl_one_closed_form,
)

logger = logging.getLogger(__name__)

SUITES = ("paper-tables", "oracles", "involutions")

# The three A = 1 forms of P_n are compared up to this degree regardless of max_degree's default
ABEL_AT_ONE_DEGREE = 10

Failures = List[str]
CheckFunction = Callable[[InversionService, int], Failures]


@dataclass(frozen=True)
class Check:
    name: str
    suite: str
    run: CheckFunction
    description: str


def _expect(failures: Failures, condition: bool, message: str) -> None:
    if not condition:
        failures.append(message)


# paper-tables

def check_char_q_golden(service: InversionService, max_degree: int) -> Failures:
    failures: Failures = []
    for n, terms in enumerate(tables.CHAR_Q_CLASSIC[: max_degree + 1]):
        got = service.characteristic(CLASSIC, n)
        _expect(failures, got == tables.element(terms), f"G_{n}: got {got}")
    return failures


def check_g_series_golden(service: InversionService, max_degree: int) -> Failures:
    failures: Failures = []
    order = min(4, max_degree)
    g = service.solve_g(order)
    for n in range(order + 1):
        expected = tables.element(tables.G_SERIES[n])
        _expect(failures, g[n] == expected, f"g_{n}: got {g[n]}")
        image = {k: v for k, v in commutative_image(g[n]).items()}
        wanted = {k: Coefficient.constant(v) for k, v in tables.COMMUTATIVE_IMAGE[n].items()}
        _expect(failures, image == wanted, f"c_{n}: got {image}")
    return failures


def check_k_series_golden(service: InversionService, max_degree: int) -> Failures:
    failures: Failures = []
    order = min(5, max_degree + 1)
    if max_degree == 0:
        return failures
    k_series = service.solve_k(order)
    for m in range(order + 1):
        expected = tables.element(tables.K_SERIES[m])
        _expect(failures, k_series[m] == expected, f"K x^{m}: got {k_series[m]}")
    return failures


def check_f0_golden(service: InversionService, max_degree: int) -> Failures:
    failures: Failures = []
    order = min(3, max_degree)
    f = service.solve_f0(order)
    for n in range(order + 1):
        expected = tables.element(tables.F0_SERIES[n])
        _expect(failures, f[n] == expected, f"f_{n}: got {f[n]}")
    return failures


def check_bases_golden(service: InversionService, max_degree: int) -> Failures:
    failures: Failures = []
    if max_degree >= 3:
        ribbon = service.ribbon_coefficients(3)
        _expect(failures, ribbon == tables.element(tables.RIBBON_G3, Basis.R), f"R-expansion of G_3: {ribbon}")
        g3 = to_lambda(service.solve_g(3)[3])
        _expect(failures, g3 == tables.element(tables.LAMBDA_G3, Basis.L), f"Λ-expansion of g_3: {g3}")
    if max_degree >= 4:
        g4 = to_lambda(service.solve_g(4)[4])
        _expect(failures, g4 == tables.element(tables.LAMBDA_G4, Basis.L), f"Λ-expansion of g_4: {g4}")
    return failures


def check_abel_golden(service: InversionService, max_degree: int) -> Failures:
    failures: Failures = []
    for n, terms in enumerate(tables.ABEL_POLYNOMIALS[: max_degree + 1]):
        got = service.abel_polynomial(n)
        _expect(failures, got == tables.element(terms), f"P_{n}: got {got}")
    return failures


def check_kl_golden(service: InversionService, max_degree: int) -> Failures:
    failures: Failures = []
    family = ParkingFamily.arithmetic(3, 2)
    for n, text in enumerate(tables.KL_32_Q_POLYNOMIALS[: max_degree + 1]):
        got = specialize_one(service.characteristic(family, n))
        _expect(failures, got == Coefficient.from_sympy(text), f"(3,2) degree {n}: got {got}")
    order = min(3, max_degree)
    result = service.quotient_kl(3, 2, order, q_mode=True)
    for n in range(order + 1):
        raw = specialize_one(result.raw_components[n])
        expected = Coefficient.from_sympy(tables.KL_32_Q_POLYNOMIALS[n]).shift_q(tables.KL_32_PRINTED_PREFACTORS[n])
        _expect(failures, raw == expected, f"(3,2) raw ratio degree {n}: got {raw}")
    for n, value in enumerate(tables.KL_32_VALUES[: max_degree + 1]):
        _expect(failures, kl_one_closed_form(n, 3, 2) == value, f"(3,2) A=1 value at n={n}")
    return failures


def check_tree_golden(service: InversionService, max_degree: int) -> Failures:
    failures: Failures = []
    for parts, b, expected in tables.TREE_COEFFICIENTS:
        if sum(parts) <= max_degree:
            got = trees.delta_b(parts, b)
            _expect(failures, got == expected, f"δ^({b}){parts}: got {got}, expected {expected}")
    return failures


def check_triangles_golden(service: InversionService, max_degree: int) -> Failures:
    failures: Failures = []
    rows = min(7, max_degree)
    if rows == 0:
        return failures
    for b, table in tables.GAMMA_TRIANGLES.items():
        got = trees.gamma_triangle(b, rows)
        _expect(failures, got == table[:rows], f"γ^({b}) rows: got {got}")
    motzkin = trees.motzkin_returns_triangle(rows)
    _expect(failures, motzkin == tables.MOTZKIN_TRIANGLE[: rows + 1], f"Motzkin triangle: got {motzkin}")
    for b, expected in tables.ROW_SUMS.items():
        length = min(len(expected) - 1, max_degree)
        got = trees.row_sum_series(b, length)
        _expect(failures, got == expected[: length + 1], f"row sums b={b}: got {got}")
    return failures


# oracles

def check_solvers_vs_oracle(service: InversionService, max_degree: int) -> Failures:
    failures: Failures = []
    order = min(6, max_degree)
    g = service.solve_g(order)
    h = service.solve_h(order)
    for n in range(order + 1):
        oracle = service.characteristic(CLASSIC, n, keep_q=False)
        _expect(failures, g[n] == oracle, f"g_{n} differs from ch(PF_{n})")
        _expect(failures, h[n] == alphabet_negate(g[n]), f"h_{n} differs from g_{n}(-A)")
    return failures


def check_quotient_g(service: InversionService, max_degree: int) -> Failures:
    failures: Failures = []
    order = min(6, max_degree)
    for r in (1, 2, 3):
        result = service.quotient_g(r, order)
        for n in range(order + 1):
            _expect(
                failures,
                result[n] == service.characteristic(CLASSIC, n),
                f"quotient with r={r} differs from G_{n}",
            )
    return failures


def check_quotient_g_infinite(service: InversionService, max_degree: int) -> Failures:
    failures: Failures = []
    order = min(5, max_degree)
    q_order = 20
    components = service.quotient_g_infinite(order, q_order)
    for n in range(order + 1):
        expected = QSeriesTrunc.from_coefficient(specialize_one(service.characteristic(CLASSIC, n)), q_order)
        _expect(failures, components[n].agrees_with(expected), f"r=∞ quotient differs at degree {n}")
    return failures


def check_shuffle_decomposition(service: InversionService, max_degree: int) -> Failures:
    """S_n([n+r]_q A) = sum over k of G_k q^((k+1)(n-k)) S_(n-k)([n+r-k-1]_q A)."""
    failures: Failures = []
    for r in (1, 2):
        for n in range(1, min(5, max_degree) + 1):
            left = alphabet_q_interval(NcsfElement.generator(n), n + r)
            right = NcsfElement.zero()
            for k in range(n + 1):
                tail = NcsfElement.one() if k == n else alphabet_q_interval(
                    NcsfElement.generator(n - k), n + r - k - 1
                )
                right = right + mul(service.characteristic(CLASSIC, k), tail).shift_q((k + 1) * (n - k))
            _expect(failures, left == right, f"word decomposition fails for n={n}, r={r}")
    return failures


def check_bases_rules(service: InversionService, max_degree: int) -> Failures:
    failures: Failures = []
    order = min(7, max_degree)
    g = service.solve_g(order)
    for n in range(order + 1):
        _expect(failures, nu_involution(g[n]) == g[n], f"ν(g_{n}) != g_{n}")
    for n in range(1, order + 1):
        for parts in compositions(n):
            image = to_lambda(nu_involution(from_ribbon(NcsfElement.monomial(parts, basis=Basis.R))))
            expected = NcsfElement.monomial(conjugate(parts), (-1) ** (len(parts) - 1), Basis.L)
            _expect(failures, image == expected, f"ν(R{list(parts)}) != ±Λ^(I~)")
    for n in range(1, min(6, max_degree) + 1):
        ribbon = to_ribbon(g[n])
        expected = NcsfElement(
            {
                parts: ribbon.coefficient(conjugate(parts)).scale((-1) ** (n - len(parts)))
                for parts in compositions(n)
            },
            Basis.L,
        )
        _expect(failures, to_lambda(g[n]) == expected, f"Λ-expansion rule fails for g_{n}")
    return failures


def check_parking_counts(service: InversionService, max_degree: int) -> Failures:
    failures: Failures = []
    for k, l in ((1, 1), (2, 1), (3, 2)):
        family = ParkingFamily.arithmetic(k, l)
        for n in range(min(4, max_degree) + 1):
            try:
                parking.count_all(family, n)
            except ValidationError as e:
                failures.append(e.message)
    for n in range(min(6, max_degree) + 1):
        enumerator = parking.q_sum_enumerator(n)
        exp_image = specialize_exp(service.characteristic(CLASSIC, n))
        via_char = Coefficient.from_q_polynomial(
            {q: v for (q, x), v in exp_image.terms.items() if x == n}
        ).scale(factorial(n))
        _expect(failures, via_char == enumerator, f"sum enumerator differs at n={n}")
    return failures


def check_kl_quotients(service: InversionService, max_degree: int) -> Failures:
    failures: Failures = []
    order = min(4, max_degree)
    q_order = min(3, max_degree)
    for k, l in ((1, 1), (2, 1), (3, 2)):
        family = ParkingFamily.arithmetic(k, l)
        first = service.quotient_kl(k, l, order)
        second = service.quotient_kl(k, l, order, r=l + 2)
        q_result = service.quotient_kl(k, l, q_order, q_mode=True)
        for n in range(order + 1):
            oracle = service.characteristic(family, n, keep_q=False)
            _expect(failures, first[n] == oracle, f"(k,l)=({k},{l}) q=1 quotient differs at n={n}")
            _expect(failures, second[n] == first[n], f"(k,l)=({k},{l}) depends on r at n={n}")
            _expect(
                failures,
                specialize_one(first[n]) == Coefficient.constant(kl_one_closed_form(n, k, l)),
                f"(k,l)=({k},{l}) A=1 closed form differs at n={n}",
            )
        for n in range(q_order + 1):
            _expect(
                failures,
                q_result[n] == service.characteristic(family, n),
                f"(k,l)=({k},{l}) q-quotient differs at n={n} after normalization",
            )
            _expect(
                failures,
                q_result.normalization[n] == k * comb(n + 1, 2),
                f"(k,l)=({k},{l}) normalization exponent {q_result.normalization[n]} at n={n}",
            )
    return failures


def check_abel(service: InversionService, max_degree: int) -> Failures:
    failures: Failures = []
    solvable = min(max_degree, settings.effective_cap("max_degree"))
    for n in range(min(7, solvable) + 1):
        _expect(failures, service.abel_polynomial(n) == service.abel_via_ndpf(n), f"P_{n} differs from the NDPF sum")
    with settings.raised("max_degree", ABEL_AT_ONE_DEGREE):
        direct_limit = settings.effective_cap("max_degree")
        for n in range(min(ABEL_AT_ONE_DEGREE, max_degree) + 1):
            closed = service.abel_one_closed_form(n)
            _expect(failures, service.abel_one_via_triangle(n) == closed, f"P_{n}(x;1) triangle form differs")
            if n <= direct_limit:
                _expect(failures, service.abel_one_direct(n) == closed, f"P_{n}(x;1) direct form differs")
    for r in (1, 2, 3):
        for n in range(min(5, solvable) + 1):
            _expect(
                failures,
                service.abel_polynomial(n).eval_x(r) == service.shifted_characteristic(r, n),
                f"P_{n}({r};A) differs from ch(PF^({r})_{n})",
            )
    for x, y in ((1, 1), (1, 2), (2, 3)):
        for n in range(min(6, solvable) + 1):
            total = NcsfElement.zero()
            for k in range(n + 1):
                total = total + mul(service.abel_polynomial(k).eval_x(x), service.abel_polynomial(n - k).eval_x(y))
            _expect(failures, total == service.abel_polynomial(n).eval_x(x + y), f"g^{x} g^{y} != g^{x + y} at n={n}")
    return failures


def check_catalan_generating_functions(service: InversionService, max_degree: int) -> Failures:
    failures: Failures = []
    order = min(8, max_degree)
    catalan = generalized_binomial(2, order)
    for x in (1, 2, 3):
        power = series.power(catalan, x)
        for n in range(order + 1):
            value = service.abel_one_closed_form(n).eval_x(x).constant_term()
            _expect(failures, value == power[n], f"P_{n}({x};1) != [z^{n}] C(z)^{x}")
    for n in range(1, min(7, max_degree) + 1):
        counts: Dict[int, int] = {}
        for word in parking.enumerate_nondecreasing(CLASSIC, n):
            c = parking.connected_factor_count(word)
            counts[c] = counts.get(c, 0) + 1
        for k in range(1, n + 1):
            from_gf = series.power(catalan, k)[n - k]
            _expect(failures, catalan_triangle_c(n, k) == counts.get(k, 0), f"c({n},{k}) differs from the NDPF count")
            _expect(failures, catalan_triangle_c(n, k) == from_gf, f"c({n},{k}) differs from 1/(1-tzC(z))")
    return failures


def check_specializations(service: InversionService, max_degree: int) -> Failures:
    failures: Failures = []
    order = min(8, max_degree)
    tree_function = service.exponential_series(order)
    expected = series.exp(series.shift(tree_function))
    _expect(failures, tree_function == expected, "T != exp(tT)")
    for alpha in (1, 2, 3):
        scaled = series.scale_variable(tree_function, alpha)
        generalized = generalized_exponential(alpha, order)
        _expect(failures, series.power(generalized, alpha) == scaled, f"ℰ_{alpha}^{alpha} != ℰ({alpha}t)")

        g_alpha = service.binomial_series(alpha, order)
        fixed = series.power(_one_minus_shift(g_alpha), -alpha)
        _expect(failures, g_alpha == fixed, f"G_{alpha} != (1 - zG_{alpha})^-{alpha}")
        b_series = series.scale_variable(generalized_binomial(-alpha, order), -1)
        _expect(failures, b_series == _one_minus_shift(g_alpha), f"ℬ_-{alpha}(-z) != 1 - zG_{alpha}")
        identity = [
            a - b for a, b in zip(series.power(b_series, 1 + alpha), series.power(b_series, alpha))
        ]
        expected_identity = series.as_series([0, -1], order + 1)
        _expect(failures, identity == expected_identity, f"ℬ_-{alpha}(-z) fails B^(1+α) - B^α = -z")
    for k, l in ((2, 1), (3, 2)):
        power = series.power(generalized_binomial(k, order), l)
        closed = [Fraction(comb(n * k + l, n) * l, n * k + l) for n in range(order + 1)]
        _expect(failures, power == closed, f"ℬ_{k}^{l} coefficients differ")
    return failures


def _one_minus_shift(values: List[Fraction]) -> List[Fraction]:
    """1 - z·values."""
    shifted = series.shift(values)
    return [Fraction(1 if m == 0 else 0) - v for m, v in enumerate(shifted)]


def check_tree_oracles(service: InversionService, max_degree: int) -> Failures:
    failures: Failures = []
    order = min(7, max_degree)
    g = service.solve_g(order)
    lam = service.solve_b_family(1, order)
    for b in (0, 1, 2):
        for n in range(1, order + 1):
            counted = trees.enumerate_trees_by_composition(n, b)
            formula = {parts: trees.delta_b(parts, b) for parts in compositions(n)}
            formula = {k: v for k, v in formula.items() if v}
            _expect(failures, counted == formula, f"tree enumeration differs from δ^({b}) at n={n}")
    for n in range(1, order + 1):
        for parts in compositions(n):
            _expect(failures, g[n].coefficient(parts) == trees.delta_b(parts, 0), f"g coefficient of S{list(parts)}")
            _expect(failures, lam[n].coefficient(parts) == trees.delta_b(parts, 1), f"λ coefficient of d{list(parts)}")
    catalan = tables.ROW_SUMS[0]
    for n in range(1, min(9, max_degree) + 1):
        total = sum(trees.delta_b(parts, 0) for parts in compositions(n))
        _expect(failures, total == comb(2 * n, n) // (n + 1), f"Σ δ_I over I ⊨ {n} is not Catalan")
    schroder = trees.row_sum_series(1, min(9, max_degree))
    for n in range(1, min(9, max_degree) + 1):
        total = sum(trees.delta_b(parts, 1) for parts in compositions(n))
        _expect(failures, total == schroder[n], f"Σ λ_I over I ⊨ {n} is not small Schröder")
    _expect(failures, catalan[: min(6, max_degree) + 1] == trees.row_sum_series(0, min(6, max_degree)), "Catalan row sums")
    return failures


def check_dyck_oracle(service: InversionService, max_degree: int) -> Failures:
    failures: Failures = []
    order = min(8, max_degree)
    f = service.solve_f0(order)
    for n in range(order + 1):
        oracle = trees.dyck_decomposition_oracle(n)
        expected = {key: 1 for key in f[n].keys()}
        _expect(failures, oracle == expected, f"Dyck factorization differs from f_{n}")
        _expect(
            failures,
            all(coeff == 1 for _, coeff in f[n].items()),
            f"f_{n} has a coefficient other than 1",
        )
    return failures


def check_motzkin(service: InversionService, max_degree: int) -> Failures:
    failures: Failures = []
    order = min(7, max_degree)
    for n in range(order + 1):
        paths = list(trees.motzkin_paths(n))
        _expect(failures, len(paths) == tables.MOTZKIN_NUMBERS[n], f"{len(paths)} Motzkin paths of length {n}")
        for path in paths:
            _expect(failures, trees.tree_to_motzkin(trees.motzkin_to_tree(path)) == path, f"bijection fails on {path}")
    rows = min(8, max_degree)
    if rows:
        motzkin = trees.motzkin_returns_triangle(rows)
        gamma = trees.gamma_triangle(-1, rows + 1)
        for n in range(rows + 1):
            bridge = [trees.gamma_entry(-1, k + 1, n + 1) for k in range(1, n + 1)] if n else [1]
            _expect(failures, motzkin[n] == bridge, f"returns triangle row {n} differs from γ^(-1)")
            _expect(failures, motzkin[n] == gamma[n], f"rendered γ^(-1) row {n + 1} differs")
    return failures


# involutions

def check_iota(service: InversionService, max_degree: int) -> Failures:
    failures: Failures = []
    if max_degree >= 1:
        source, target = tables.IOTA_EXAMPLE
        _expect(failures, pgraph.iota(source) == target, f"ι{source} = {pgraph.iota(source)}")
        _expect(failures, pgraph.iota(target) == source, f"ι{target} = {pgraph.iota(target)}")
    for n in range(1, min(8, max_degree) + 1):
        for vertex in pgraph.parking_type_compositions(n):
            image = pgraph.iota(vertex)
            _expect(failures, pgraph.iota(image) == vertex, f"ι is not an involution on {vertex}")
            _expect(
                failures,
                corresponding_composition(image) == conjugate(corresponding_composition(vertex)),
                f"ι{vertex} does not conjugate the composition",
            )
    return failures


def check_gamma_graphs(service: InversionService, max_degree: int) -> Failures:
    failures: Failures = []
    for n in range(1, min(7, max_degree) + 1):
        for parts in compositions(n):
            graph = pgraph.GammaGraph(parts)
            count = graph.graph.number_of_nodes()
            _expect(failures, count == trees.delta_b(parts, 0), f"|Γ{list(parts)}| = {count} != δ_I")
            _expect(failures, graph.sources() == [pgraph.expected_source(parts)], f"sources of Γ{list(parts)}")
            _expect(failures, graph.sinks() == [pgraph.expected_sink(parts)], f"sinks of Γ{list(parts)}")
    return failures


def check_gamma_isomorphisms(service: InversionService, max_degree: int) -> Failures:
    failures: Failures = []
    for n in range(1, min(6, max_degree) + 1):
        for parts in compositions(n):
            certificate = pgraph.check_gamma_isomorphism(parts)
            if not certificate.passed:
                failures.extend(certificate.failures)
    if max_degree >= 7:
        certificate = pgraph.check_gamma_isomorphism((3, 3, 1))
        _expect(failures, certificate.passed and certificate.vertex_count == 12, "Γ(3,3,1) certificate")
    return failures


CHECKS: Tuple[Check, ...] = (
    Check("char_q_golden", "paper-tables", check_char_q_golden, "q-characteristics G_0..G_4"),
    Check("g_series_golden", "paper-tables", check_g_series_golden, "g_0..g_4 and their commutative images"),
    Check("k_series_golden", "paper-tables", check_k_series_golden, "K through x^5"),
    Check("f0_golden", "paper-tables", check_f0_golden, "f_0..f_3"),
    Check("bases_golden", "paper-tables", check_bases_golden, "ribbon and Λ displays"),
    Check("abel_golden", "paper-tables", check_abel_golden, "P_0..P_4"),
    Check("kl_golden", "paper-tables", check_kl_golden, "(3,2) q-series and values"),
    Check("tree_golden", "paper-tables", check_tree_golden, "16 and 34 trees"),
    Check("triangles_golden", "paper-tables", check_triangles_golden, "γ, Motzkin and row-sum tables"),
    Check("solvers_vs_oracle", "oracles", check_solvers_vs_oracle, "g = ch(PF), h = g(-A)"),
    Check("quotient_g", "oracles", check_quotient_g, "quotient formula for r = 1, 2, 3"),
    Check("quotient_g_infinite", "oracles", check_quotient_g_infinite, "r = ∞ quotient at A = 1"),
    Check("shuffle_decomposition", "oracles", check_shuffle_decomposition, "words split by maximal parking subword"),
    Check("bases_rules", "oracles", check_bases_rules, "ν-invariance, ν on ribbons, Λ rule"),
    Check("parking_counts", "oracles", check_parking_counts, "family sizes and sum enumerator"),
    Check("kl_quotients", "oracles", check_kl_quotients, "(k,l) quotients against enumeration"),
    Check("abel", "oracles", check_abel, "Abel polynomials four ways"),
    Check("catalan_generating_functions", "oracles", check_catalan_generating_functions, "C(z)^x and 1/(1-tzC)"),
    Check("specializations", "oracles", check_specializations, "exponential and binomial fixed points"),
    Check("tree_oracles", "oracles", check_tree_oracles, "trees against ballot sums"),
    Check("dyck_oracle", "oracles", check_dyck_oracle, "Dyck code factorization"),
    Check("motzkin", "oracles", check_motzkin, "Motzkin bijection and returns triangle"),
    Check("iota", "involutions", check_iota, "ι on parking-type compositions"),
    Check("gamma_graphs", "involutions", check_gamma_graphs, "vertex counts, sources and sinks"),
    Check("gamma_isomorphisms", "involutions", check_gamma_isomorphisms, "Γ_I ≅ Γ_(I~)"),
)

CHECKS_BY_NAME: Dict[str, Check] = {check.name: check for check in CHECKS}


def _run_check(name: str, max_degree: int, cap: Optional[int]) -> CheckResult:
    """Run one check in a fresh service; also the entry point of worker processes."""
    from ..dependencies import get_inversion_service

    if cap is not None and settings.cap != cap:
        settings.apply_cap_override(cap)
    check = CHECKS_BY_NAME[name]
    service = get_inversion_service()
    start = time.perf_counter()
    try:
        failures = check.run(service, max_degree)
        detail = check.description
    except NcInvertException as e:
        failures = [f"{e.error_code}: {e.message}"]
        detail = "raised"
    elapsed = time.perf_counter() - start
    return CheckResult(
        name=name,
        suite=check.suite,
        passed=not failures,
        seconds=round(elapsed, 6),
        detail=detail,
        failures=failures,
    )


class VerificationService:
    """Runs the verification suites and aggregates their results."""

    def __init__(self, inversion_service: InversionService):
        """
        Initialize verification service.

        Args:
            inversion_service: Service used by checks run in this process
        """
        self.inversion = inversion_service

    @staticmethod
    def select(suite: str) -> List[Check]:
        """
        Checks of a suite, in registry order.

        Raises:
            ValidationError: On an unknown suite name
        """
        if suite == "all":
            return list(CHECKS)
        if suite not in SUITES:
            raise ValidationError(f"Unknown suite {suite!r}; use all, {', '.join(SUITES)}")
        return [check for check in CHECKS if check.suite == suite]

    def run(self, suite: str = "all", max_degree: Optional[int] = None, jobs: Optional[int] = None) -> VerifyReport:
        """
        Run a suite.

        Args:
            suite: all, paper-tables, oracles or involutions
            max_degree: Upper bound applied to every check's ranges
            jobs: Worker processes; 1 runs in this process

        Returns:
            VerifyReport with one CheckResult per check, in registry order
        """
        checks = self.select(suite)
        max_degree = settings.max_degree if max_degree is None else max_degree
        jobs = settings.default_jobs if jobs is None else jobs
        if max_degree < 0:
            raise ValidationError(f"max_degree must be >= 0, got {max_degree}")
        if jobs < 1:
            raise ValidationError(f"jobs must be >= 1, got {jobs}")

        logger.info("=" * 70)
        logger.info(f"🚀 Verify suite={suite} max_degree={max_degree} jobs={jobs}: {len(checks)} checks")
        logger.info("=" * 70)
        start = time.perf_counter()

        if jobs == 1:
            results = [self._run_local(check, max_degree) for check in checks]
        else:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                futures = [pool.submit(_run_check, check.name, max_degree, settings.cap) for check in checks]
                results = [future.result() for future in futures]

        for result in results:
            marker = "✅" if result.passed else "❌"
            logger.info(f"{marker} {result.suite}/{result.name} ({result.seconds:.3f}s)")
            for failure in result.failures:
                logger.warning(f"   {failure}")

        passed = all(result.passed for result in results)
        total = time.perf_counter() - start
        logger.info("=" * 70)
        logger.info(f"{'✅' if passed else '❌'} {sum(r.passed for r in results)}/{len(results)} checks passed")
        logger.info("=" * 70)
        return VerifyReport(
            suite=suite,
            max_degree=max_degree,
            jobs=jobs,
            passed=passed,
            checks=results,
            total_seconds=round(total, 6),
        )

    def _run_local(self, check: Check, max_degree: int) -> CheckResult:
        start = time.perf_counter()
        try:
            failures = check.run(self.inversion, max_degree)
            detail = check.description
        except NcInvertException as e:
            failures = [f"{e.error_code}: {e.message}"]
            detail = "raised"
        elapsed = time.perf_counter() - start
        return CheckResult(
            name=check.name,
            suite=check.suite,
            passed=not failures,
            seconds=round(elapsed, 6),
            detail=detail,
            failures=failures,
        )
