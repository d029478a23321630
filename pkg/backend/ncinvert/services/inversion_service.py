"""Degree-by-degree solvers, quotient formulas and Abel polynomials."""
import logging
from fractions import Fraction
from math import comb, factorial
from typing import Dict, Hashable, List, Optional, Tuple

import sympy

from ..algebra.coeff import (
    X_SYMBOL,
    Coefficient,
    QSeriesTrunc,
    binomial,
    binomial_poly,
    q_pochhammer,
    rising_poly,
)
from ..algebra.ncsf import (
    NcsfElement,
    XSeries,
    generator_image,
    mul,
    specialize_binomial_int,
    specialize_exp,
    specialize_one,
    to_ribbon,
)
from ..combinatorics.parking import (
    CLASSIC,
    ParkingFamily,
    char_q,
    connected_factor_count,
    enumerate_nondecreasing,
)
from ..algebra.comp import packed_evaluation
from ..config import settings
from ..exceptions import CapExceededError, ValidationError
from ..repositories.solution_repository import SolutionRepository, SolverResult

logger = logging.getLogger(__name__)


class _PowerTable:
    """(u^k)_m for a series u whose components are filled in degree by degree."""

    def __init__(self, components: List[NcsfElement]):
        self.components = components
        self._cache: Dict[Tuple[int, int], NcsfElement] = {}

    def get(self, k: int, m: int) -> NcsfElement:
        if m < 0:
            return NcsfElement.zero()
        if k == 0:
            return NcsfElement.one() if m == 0 else NcsfElement.zero()
        if k == 1:
            return self.components[m]
        key = (k, m)
        cached = self._cache.get(key)
        if cached is None:
            cached = NcsfElement.zero()
            for i in range(m + 1):
                left = self.components[i]
                if not left:
                    continue
                right = self.get(k - 1, m - i)
                if right:
                    cached = cached + mul(left, right)
            self._cache[key] = cached
        return cached


def _q_interval_generator(n: int, size: int) -> NcsfElement:
    """S_n([size]_q A), with S_0 the unit."""
    if n == 0:
        return NcsfElement.one()
    return generator_image("q_interval", n, size)


def _multiple_generator(n: int, size: int) -> NcsfElement:
    """S_n(size·A), with S_0 the unit."""
    if n == 0:
        return NcsfElement.one()
    return generator_image("multiple", n, size)


def catalan_triangle_a(n: int, m: int) -> int:
    """a(n, m) = binom(n+m, n)(n-m+1)/(n+1) for 0 <= m <= n."""
    if n < 0 or m < 0 or m > n:
        return 0
    return comb(n + m, n) * (n - m + 1) // (n + 1)


def catalan_triangle_c(n: int, k: int) -> int:
    """Number of nondecreasing parking functions of length n with k connected factors."""
    if n < 1 or k < 1 or k > n:
        return 0
    return catalan_triangle_a(n - 1, n - k)


def kl_one_closed_form(n: int, k: int, l: int) -> Fraction:
    """
    binom(nk+l+n-1, n)·l/(nk+l), the A=1 value of the (k,l) characteristic.

    Computed as l·binom(nk+l+n-1, n-1)/n so that nk+l = 0 is allowed and
    negative k, l give the generalized binomial values.
    """
    if n < 0:
        raise ValidationError(f"n must be >= 0, got {n}")
    if n == 0:
        return Fraction(1)
    return Fraction(l * binomial(n * k + l + n - 1, n - 1), n)


def generalized_binomial(alpha: int, order: int) -> List[Fraction]:
    """ℬ_α(z) = 1 + sum over m >= 1 of binom(mα, m-1)/m z^m, through z^order."""
    return [Fraction(1)] + [
        Fraction(binomial(m * alpha, m - 1), m) for m in range(1, order + 1)
    ]


def generalized_exponential(alpha: int, order: int) -> List[Fraction]:
    """ℰ_α(z) = sum of (nα+1)^(n-1) z^n / n!, through z^order."""
    result = []
    for n in range(order + 1):
        base = Fraction(n * alpha + 1)
        value = Fraction(1) if n <= 1 else base ** (n - 1)
        result.append(value / factorial(n))
    return result


class InversionService:
    """Solves the functional equations degree by degree and evaluates the quotient formulas."""

    def __init__(self, solution_repository: SolutionRepository):
        """
        Initialize inversion service.

        Args:
            solution_repository: Repository keeping solved series between calls
        """
        self.repo = solution_repository

    # Helpers

    def _check_order(self, order: int, minimum: int = 0) -> None:
        if order < minimum:
            raise ValidationError(f"Truncation order must be >= {minimum}, got {order}")
        cap = settings.effective_cap("max_degree")
        if order > cap:
            raise CapExceededError(
                f"Degree {order} exceeds the cap {cap} (max_degree); raise it with --cap or NCINVERT_CAP",
                details={"n": order, "cap": cap, "cap_name": "max_degree"}
            )

    def _solve_recursive(
        self,
        key: Hashable,
        equation: str,
        order: int,
        first: NcsfElement,
        step,
        letter: str = "S",
    ) -> SolverResult:
        """
        Run a grading-triangular recursion, reusing any stored prefix.

        Args:
            key: Repository key
            equation: Equation tag for the result
            order: Truncation order
            first: Degree-0 component
            step: Callable (n, power_table) -> degree-n component
            letter: Generator letter used when rendering
        """
        cached = self.repo.get(key, order)
        if cached is not None:
            return cached

        stored = self.repo.get_any(key)
        components = list(stored.components) if stored is not None else [first]
        if len(components) == 1:
            logger.info(f"🚀 Solving {equation} through degree {order}")
        else:
            logger.info(f"🔄 Extending {equation} from degree {len(components) - 1} to {order}")

        table = _PowerTable(components)
        for n in range(len(components), order + 1):
            component = step(n, table)
            components.append(component)
            logger.debug(f"{equation}: degree {n} has {len(component)} terms")

        result = SolverResult(equation=equation, order=order, components=tuple(components), letter=letter)
        self.repo.save(key, result)
        return result

    # Solvers

    def solve_g(self, order: int) -> SolverResult:
        """
        Solve g = sum of S_n g^n.

        Args:
            order: Truncation order N

        Returns:
            SolverResult with g_0, ..., g_N

        Raises:
            ValidationError: If N < 0
            CapExceededError: If N exceeds max_degree
        """
        self._check_order(order)

        def step(n: int, table: _PowerTable) -> NcsfElement:
            total = NcsfElement.zero()
            for k in range(1, n + 1):
                power = table.get(k, n - k)
                if power:
                    total = total + mul(NcsfElement.generator(k), power)
            return total

        return self._solve_recursive(("g",), "g", order, NcsfElement.one(), step)

    def solve_h(self, order: int) -> SolverResult:
        """Solve 1 = sum over n >= 0 of S_n h^(n+1)."""
        self._check_order(order)

        def step(n: int, table: _PowerTable) -> NcsfElement:
            total = NcsfElement.zero()
            for k in range(1, n + 1):
                power = table.get(k + 1, n - k)
                if power:
                    total = total + mul(NcsfElement.generator(k), power)
            return -total

        return self._solve_recursive(("h",), "h", order, NcsfElement.one(), step)

    def solve_f0(self, order: int) -> SolverResult:
        """Solve f = S_0 + S_1 f + S_2 f^2 + ... with S_0 a letter of degree 0."""
        self._check_order(order)

        def step(n: int, table: _PowerTable) -> NcsfElement:
            total = NcsfElement.zero()
            for k in range(1, n + 1):
                power = table.get(k, n - k)
                if power:
                    total = total + mul(NcsfElement.generator(k), power)
            return total

        return self._solve_recursive(("f0",), "f0", order, NcsfElement.generator(0), step)

    def solve_b_family(self, b: int, order: int) -> SolverResult:
        """
        Solve g = 1 + d_1 g^(b+1) + d_2 g^(b+2) + ...

        Keys record the d-word; the coefficient of d^I is δ^(b)_I.

        Raises:
            ValidationError: If b < -1
        """
        if b < -1:
            raise ValidationError(f"b must be >= -1, got {b}", details={"b": b})
        self._check_order(order)

        def step(n: int, table: _PowerTable) -> NcsfElement:
            total = NcsfElement.zero()
            for i in range(1, n + 1):
                power = table.get(b + i, n - i)
                if power:
                    total = total + mul(NcsfElement.generator(i), power)
            return total

        return self._solve_recursive(("b", b), f"b={b}", order, NcsfElement.one(), step, letter="d")

    def solve_k(self, order: int) -> SolverResult:
        """
        Solve K(x) = qx sum over n >= 0 of S_n K^(n)(x) by fixed-point iteration.

        K^(n)(x) = K(q^(n-1)x) ... K(qx) K(x). Each pass fixes one more power of x.

        Args:
            order: Highest power of x kept (N >= 1)

        Returns:
            SolverResult whose component m is the coefficient of x^m
        """
        self._check_order(order, minimum=1)
        key = ("K",)
        cached = self.repo.get(key, order)
        if cached is not None:
            return cached

        logger.info(f"🚀 Solving K through x^{order}")
        k_series = XSeries([], order)
        for iteration in range(order):
            total = XSeries.one(order)
            product = XSeries.one(order)
            for n in range(1, order):
                product = k_series.subst_x_scale(n - 1) * product
                if all(not e for e in product.entries):
                    break
                total = total + product.left_multiply(NcsfElement.generator(n))
            shifted = [NcsfElement.zero()] + [e.shift_q(1) for e in total.entries[:order]]
            k_series = XSeries(shifted, order)
            logger.debug(f"K: pass {iteration + 1} of {order}")

        result = SolverResult(equation="K", order=order, components=k_series.entries)
        self.repo.save(key, result)
        return result

    def solve(self, equation: str, order: int) -> SolverResult:
        """
        Dispatch on an equation tag: g, h, f0, K or b=B.

        Raises:
            ValidationError: On an unknown tag
        """
        tag = equation.strip()
        if tag == "g":
            return self.solve_g(order)
        if tag == "h":
            return self.solve_h(order)
        if tag == "f0":
            return self.solve_f0(order)
        if tag == "K":
            return self.solve_k(order)
        if tag.startswith("b="):
            try:
                b = int(tag[2:])
            except ValueError:
                raise ValidationError(f"Invalid b-family tag {equation!r}")
            return self.solve_b_family(b, order)
        raise ValidationError(f"Unknown equation {equation!r}; use g, h, f0, K or b=B")

    # Quotient formulas

    def quotient_g(self, r: int, order: int) -> SolverResult:
        """
        G(x) = F^(r)(x/q) F^(r-1)(x)^(-1), F^(r)(x) = sum x^n q^(-binom(n,2)) S_n([n+r]_q A).

        Component n is renormalized by q^binom(n+1,2) so that it equals G_n(q;A).

        Raises:
            ValidationError: If r < 1
        """
        if r < 1:
            raise ValidationError(f"r must be >= 1, got {r}", details={"r": r})
        self._check_order(order)
        key = ("quotient_g", r)
        cached = self.repo.get(key, order)
        if cached is not None:
            return cached

        logger.info(f"🚀 Quotient formula for G with r={r} through degree {order}")
        numerator = XSeries(
            [_q_interval_generator(n, n + r).shift_q(-comb(n, 2) - n) for n in range(order + 1)],
            order,
        )
        denominator = XSeries(
            [_q_interval_generator(n, n + r - 1).shift_q(-comb(n, 2)) for n in range(order + 1)],
            order,
        )
        ratio = numerator * denominator.inverse()
        components = tuple(ratio[n].shift_q(comb(n + 1, 2)) for n in range(order + 1))

        result = SolverResult(equation=f"quotient_g(r={r})", order=order, components=components, params={"r": r})
        self.repo.save(key, result)
        return result

    def quotient_kl(
        self,
        k: int,
        l: int,
        order: int,
        r: Optional[int] = None,
        q_mode: bool = False,
    ) -> SolverResult:
        """
        Quotient formula for the (k,l) characteristics.

        At q = 1: g^(k,l) = F(r,k) F(r-l,k)^(-1) with F(r,k) = sum x^n S_n((nk+r)A).
        In q-mode: F_k^(r)(x) F_k^(r-l)(q^l x)^(-1) with
        F_k^(r)(x) = sum x^n q^(-k binom(n+1,2)) S_n([nk+r]_q A); each component
        is then multiplied by q^e_n, e_n being minus the lowest q-exponent of its
        S_n coefficient.

        Args:
            k: Slope, at least 1
            l: Offset, at least 1
            order: Truncation order
            r: Auxiliary parameter, r > l (defaults to l+1)
            q_mode: Keep the q-statistic

        Returns:
            SolverResult; in q-mode it also carries the raw components, the
            exponents used and the printed candidate exponents

        Raises:
            ValidationError: If k < 1, l < 1 or r <= l
        """
        if k < 1 or l < 1:
            raise ValidationError(f"k and l must be >= 1, got k={k}, l={l}")
        if r is None:
            r = l + 1
        if r <= l:
            raise ValidationError(f"r must exceed l: r={r}, l={l}", details={"r": r, "l": l})
        self._check_order(order)
        key = ("quotient_kl", k, l, r, q_mode)
        cached = self.repo.get(key, order)
        if cached is not None:
            return cached

        tag = f"quotient_kl(k={k}, l={l}, r={r}{', q' if q_mode else ''})"
        logger.info(f"🚀 {tag} through degree {order}")
        params = {"k": k, "l": l, "r": r}

        if not q_mode:
            numerator = XSeries([_multiple_generator(n, n * k + r) for n in range(order + 1)], order)
            denominator = XSeries([_multiple_generator(n, n * k + r - l) for n in range(order + 1)], order)
            ratio = numerator * denominator.inverse()
            result = SolverResult(equation=tag, order=order, components=ratio.entries, params=params)
            self.repo.save(key, result)
            return result

        numerator = XSeries(
            [_q_interval_generator(n, n * k + r).shift_q(-k * comb(n + 1, 2)) for n in range(order + 1)],
            order,
        )
        denominator = XSeries(
            [
                _q_interval_generator(n, n * k + r - l).shift_q(-k * comb(n + 1, 2) + l * n)
                for n in range(order + 1)
            ],
            order,
        )
        raw = numerator * denominator.inverse()

        exponents = [0]
        for n in range(1, order + 1):
            lowest = raw[n].coefficient((n,)).min_q_exponent()
            if lowest is None:
                logger.warning(f"⚠️  {tag}: degree {n} has no S_{n} term, normalization left at 0")
                exponents.append(0)
            else:
                exponents.append(-lowest)
        candidates = [k * comb(n + 1, 2) + n * (n * k + l) for n in range(order + 1)]
        logger.info(f"📊 {tag}: normalization exponents {exponents}")
        logger.info(f"📊 {tag}: printed candidate exponents {candidates}")

        components = tuple(raw[n].shift_q(exponents[n]) for n in range(order + 1))
        result = SolverResult(
            equation=tag,
            order=order,
            components=components,
            normalization=tuple(exponents),
            candidates=tuple(candidates),
            raw_components=raw.entries,
            params=params,
        )
        self.repo.save(key, result)
        return result

    def quotient_g_infinite(self, order: int, q_order: int) -> List[QSeriesTrunc]:
        """
        r = ∞ form of the quotient formula at A = 1.

        F(x) = sum x^n q^(-binom(n,2)) / (q)_n; the x^n coefficient of
        F(x/q) F(x)^(-1), times q^binom(n+1,2), is returned as a q-series
        known below q^q_order.

        Args:
            order: Highest x-degree
            q_order: Truncation order in q

        Returns:
            [G_0(q;1), ..., G_N(q;1)] as truncated q-series
        """
        self._check_order(order)
        if q_order < 1:
            raise ValidationError(f"q_order must be >= 1, got {q_order}")

        internal = q_order + 3 * comb(order + 1, 2)
        while True:
            components = self._infinite_quotient(order, internal)
            if all(c.order >= q_order for c in components):
                return [c.truncate(q_order) for c in components]
            logger.debug(f"quotient_g_infinite: raising internal q-order from {internal}")
            internal *= 2

    def _infinite_quotient(self, order: int, internal: int) -> List[QSeriesTrunc]:
        terms = [q_pochhammer(n, internal).reciprocal().shift(-comb(n, 2)) for n in range(order + 1)]
        shifted = [t.shift(-n) for n, t in enumerate(terms)]

        inverse = [QSeriesTrunc.one(internal)]
        for m in range(1, order + 1):
            total = QSeriesTrunc({}, internal)
            for j in range(1, m + 1):
                total = total + terms[j] * inverse[m - j]
            inverse.append(-total)

        components = []
        for n in range(order + 1):
            total = QSeriesTrunc({}, internal)
            for i in range(n + 1):
                total = total + shifted[i] * inverse[n - i]
            components.append(total.shift(comb(n + 1, 2)))
        return components

    # Characteristics

    def characteristic(self, family: ParkingFamily, n: int, keep_q: bool = True) -> NcsfElement:
        """ch_q of a parking family, or its q = 1 image."""
        element = char_q(family, n)
        return element if keep_q else element.eval_q_one()

    def ribbon_coefficients(self, n: int) -> NcsfElement:
        """c_I(q) for all I ⊨ n, as the R-expansion of G_n(q;A)."""
        return to_ribbon(char_q(CLASSIC, n))

    def shifted_characteristic(self, r: int, n: int) -> NcsfElement:
        """ch(PF^(r)_n) at q = 1."""
        return char_q(ParkingFamily.shifted(r), n).eval_q_one()

    # Abel polynomials

    def abel_polynomial(self, n: int) -> NcsfElement:
        """
        Degree-n term of g^x, via (1+U)^x = sum binom(x, m) U^m with U = g - 1.

        Coefficients are polynomials in x.
        """
        self._check_order(n)
        if n == 0:
            return NcsfElement.one()
        g = self.solve_g(n)
        table = _PowerTable([NcsfElement.zero()] + list(g.components[1:]))
        total = NcsfElement.zero()
        for m in range(1, n + 1):
            power = table.get(m, n)
            if power:
                total = total + power.scale(binomial_poly(m))
        return total

    def abel_via_ndpf(self, n: int) -> NcsfElement:
        """Sum over b in NDPF_n of binom(x+c(b)-1, c(b)) S^pEv(b)."""
        if n == 0:
            return NcsfElement.one()
        terms: Dict[Tuple[int, ...], Coefficient] = {}
        for word in enumerate_nondecreasing(CLASSIC, n):
            key = packed_evaluation(word)
            value = rising_poly(connected_factor_count(word))
            terms[key] = terms[key] + value if key in terms else value
        return NcsfElement(terms)

    def abel_one_direct(self, n: int) -> Coefficient:
        """P_n(x;1) from the noncommutative polynomial."""
        return specialize_one(self.abel_polynomial(n))

    def abel_one_via_triangle(self, n: int) -> Coefficient:
        """P_n(x;1) = sum over k of c(n,k) x(x+1)...(x+k-1)/k!."""
        if n == 0:
            return Coefficient.one()
        total = Coefficient.zero()
        for k in range(1, n + 1):
            total = total + rising_poly(k) * catalan_triangle_c(n, k)
        return total

    def abel_one_closed_form(self, n: int) -> Coefficient:
        """P_n(x;1) = binom(x+2n, n) x / (x+2n), simplified with sympy."""
        if n < 0:
            raise ValidationError(f"n must be >= 0, got {n}")
        x = X_SYMBOL
        expr = sympy.expand_func(sympy.binomial(x + 2 * n, n)) * x / (x + 2 * n)
        return Coefficient.from_sympy(sympy.cancel(expr))

    # Scalar specializations of g

    def exponential_series(self, order: int) -> List[Fraction]:
        """Coefficients of T(t) = sum of the A = t𝔼 images of g_n."""
        g = self.solve_g(order)
        return [specialize_exp(g[n]).coefficient(0, n) for n in range(order + 1)]

    def binomial_series(self, alpha: int, order: int) -> List[Fraction]:
        """Coefficients of the A = zα image of g, integer α."""
        g = self.solve_g(order)
        return [specialize_binomial_int(g[n], alpha).coefficient(0, n) for n in range(order + 1)]
