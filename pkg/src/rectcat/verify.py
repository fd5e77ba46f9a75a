"""Cross-method verification sweeps shared by the CLI and the test suite.

Each check compares an independent pair of routes over a bounded grid and
reports the counterexamples it finds instead of raising, so a single run can
show everything that is broken.  All library calls go through the module
objects, which keeps the checks honest under fault injection in tests.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from . import bizley, christoffel, comparison, decomposition, diagrams, formulas


@dataclass
class CheckResult:
    name: str
    cells: int = 0
    failures: list[str] = field(default_factory=list)

    def check(self, ok: bool, describe: str) -> None:
        self.cells += 1
        if not ok:
            self.failures.append(describe)

    @property
    def passed(self) -> bool:
        return not self.failures


def check_coprime(max_a: int, max_b: int) -> CheckResult:
    res = CheckResult("coprime-formula-vs-oracle")
    for a in range(1, max_a + 1):
        for b in range(1, max_b + 1):
            if gcd(a, b) != 1:
                continue
            want = diagrams.count_rect(a, b)
            got = formulas.coprime_catalan(a, b)
            res.check(got == want, f"coprime({a},{b}) = {got}, oracle {want}")
    return res


def check_fuss(max_a: int, max_b: int) -> CheckResult:
    res = CheckResult("fuss-formula-vs-oracle")
    for a in range(1, max_a + 1):
        for k in range(1, max_b // a + 1):
            want = diagrams.count_rect(a, a * k)
            got = formulas.fuss_catalan(a, k)
            res.check(got == want, f"fuss({a},{k}) = {got}, oracle {want}")
    return res


def check_prime(max_a: int, max_b: int) -> CheckResult:
    res = CheckResult("prime-dispatch-vs-oracle")
    for p in range(2, max_a + 1):
        if not formulas._is_prime(p):
            continue
        for b in range(1, max_b + 1):
            want = diagrams.count_rect(p, b)
            got = formulas.prime_rect(p, b)
            res.check(got == want, f"prime_rect({p},{b}) = {got}, oracle {want}")
    return res


def check_bizley(max_a: int, max_b: int) -> CheckResult:
    res = CheckResult("bizley-vs-oracle")
    for a in range(1, max_a + 1):
        for b in range(1, max_b + 1):
            want = diagrams.count_rect(a, b)
            got = bizley.bizley_count(a, b)
            res.check(got == want, f"bizley({a},{b}) = {got}, oracle {want}")
    return res


def check_catalan_square(max_a: int, max_b: int) -> CheckResult:
    res = CheckResult("catalan-on-squares")
    for n in range(1, min(max_a, max_b, 10) + 1):
        want = diagrams.count_rect(n, n)
        got = formulas.catalan(n)
        res.check(got == want, f"catalan({n}) = {got}, oracle {want}")
    return res


def check_theorem1(fam_k: int, fam_n: int) -> CheckResult:
    res = CheckResult("theorem1-vs-oracle")
    for k in range(1, fam_k + 1):
        for n in range(0, fam_n + 1):
            b = 2 * k * (n + 1) - 2
            if b < 1:
                continue
            want = diagrams.count_rect(2 * k, b)
            got = comparison.theorem1_count(k, n)
            res.check(got == want, f"theorem1({k},{n}) = {got}, oracle {want}")
    return res


def check_theorem2(fam_k: int, fam_n: int) -> CheckResult:
    res = CheckResult("theorem2-vs-oracle")
    for k in range(1, fam_k + 1):
        for n in range(1, fam_n + 1):
            want = diagrams.count_rect(2 * k, 2 * k * n + 2)
            got = comparison.theorem2_count(k, n)
            res.check(got == want, f"theorem2({k},{n}) = {got}, oracle {want}")
    return res


def _term_sum(terms) -> int:
    return sum(
        diagrams.count_rect(*left) * diagrams.count_rect(*right)
        for left, right in terms
    )


def check_rule2(family: str, fam_k: int, fam_n: int) -> CheckResult:
    res = CheckResult(f"rule2-{family}-telescopes")
    for k in range(1, fam_k + 1):
        a = 2 * k
        for n in range(0, fam_n + 1):
            if family == "upper":
                if n == 0 and k >= 2:
                    continue
                b = a * (n + 1) - 2
                if b < 1:
                    continue
                diff = diagrams.count_rect(a, b + 1) - diagrams.count_rect(a, b)
            else:
                b = a * n + 2
                diff = diagrams.count_rect(a, b) - diagrams.count_rect(a, b - 1)
            got = _term_sum(comparison.rule2_terms(a, family, n))
            res.check(
                got == diff,
                f"rule2({a},{family},{n}) terms sum to {got}, width step {diff}",
            )
    return res


def _subdiagrams(a: int, b: int):
    for word in diagrams.enumerate_paths(a, b):
        yield diagrams.word_to_diagram(a, b, word)


def check_split_contract(max_a: int, max_b: int) -> CheckResult:
    res = CheckResult("split-contract-exhaustive")
    for a in range(1, min(max_a, 6) + 1):
        for b in range(1, min(max_b, 8) + 1):
            for mu in _subdiagrams(a, b):
                for r in range(1, len(mu) + 1):
                    beyond = mu[r] if r < len(mu) else 0
                    if mu[r - 1] <= beyond:
                        continue
                    upper, lower = comparison.through_box_split(mu, r)
                    slim = mu[: r - 1] + (mu[r - 1] - 1,) + mu[r:]
                    got = diagrams.count_paths(slim) + diagrams.count_paths(
                        upper
                    ) * diagrams.count_paths(lower)
                    want = diagrams.count_paths(mu)
                    res.check(
                        got == want,
                        f"split of {mu} at row {r}: {got}, oracle {want}",
                    )
    return res


def check_decomposition(max_a: int, max_b: int) -> CheckResult:
    res = CheckResult("decomposition-vs-oracle")
    for a in range(1, min(max_a, 5) + 1):
        for b in range(1, min(max_b, 7) + 1):
            for mu in _subdiagrams(a, b):
                want = diagrams.count_paths(mu)
                got = decomposition.h_value(decomposition.decompose(mu))
                res.check(got == want, f"decompose({mu}) values to {got}, oracle {want}")
    for a in range(1, max_a + 1):
        for b in range(1, max_b + 1):
            mu = diagrams.christoffel_diagram(a, b)
            want = diagrams.count_rect(a, b)
            got = decomposition.h_value(decomposition.decompose(mu))
            res.check(
                got == want,
                f"decompose of the {a}x{b} staircase values to {got}, oracle {want}",
            )
    return res


def check_q_rowsum(max_a: int, max_b: int) -> CheckResult:
    res = CheckResult("q-boxes-vs-row-sum")
    for a in range(1, max_a + 1):
        for b in range(1, max_b + 1):
            want = sum(diagrams.christoffel_diagram(a, b))
            got = christoffel.q_boxes(a, b)
            res.check(got == want, f"q_boxes({a},{b}) = {got}, row sum {want}")
    return res


def check_delta_telescope(max_a: int, max_b: int) -> CheckResult:
    res = CheckResult("delta-rows-vs-q-step")
    for a in range(2, max_a + 1):
        for b in range(a + 1, max_b + 1):
            got = sum(christoffel.delta(a, b, l) for l in range(1, a))
            want = christoffel.q_boxes(a, b) - christoffel.q_boxes(a, b - 1)
            res.check(got == want, f"delta rows for ({a},{b}) sum to {got}, q step {want}")
    return res


def check_delta_families(max_a: int, max_b: int) -> CheckResult:
    res = CheckResult("delta-closed-forms")
    top_k = min(8, max(1, max_a // 2))
    for k in range(1, top_k + 1):
        for n in range(0, 9):
            for l in range(1, 2 * k):
                got = christoffel.delta(2 * k, 2 * k * (n + 1) - 1, l)
                want = christoffel.delta_closed_upper(k, n, l)
                res.check(
                    got == want,
                    f"delta(2*{k},{2 * k * (n + 1) - 1},{l}) = {got}, upper form {want}",
                )
                got = christoffel.delta(2 * k, 2 * k * n + 2, l)
                want = christoffel.delta_closed_lower(k, n, l)
                res.check(
                    got == want,
                    f"delta(2*{k},{2 * k * n + 2},{l}) = {got}, lower form {want}",
                )
    return res


def check_special_r(max_a: int, max_b: int) -> CheckResult:
    res = CheckResult("special-row-guard")
    for a in range(2, max(max_a, max_b, 2) + 1):
        try:
            got = christoffel.special_r(a)
        except ArithmeticError as err:  # guard tripping is the failure mode
            res.check(False, f"special_r({a}) aborted: {err}")
            continue
        res.check(got == a - 1, f"special_r({a}) = {got}")
    return res


def run_identity_checks(max_a: int, max_b: int) -> list[CheckResult]:
    """The staircase box-count and row-profile identity sweeps."""
    return [
        check_q_rowsum(max_a, max_b),
        check_delta_telescope(max_a, max_b),
        check_delta_families(max_a, max_b),
        check_special_r(max_a, max_b),
    ]


def run_verify(max_a: int, max_b: int, fam_k: int, fam_n: int) -> list[CheckResult]:
    """Every sweep: formulas, theorems, splitting, decomposition, identities."""
    return [
        check_coprime(max_a, max_b),
        check_fuss(max_a, max_b),
        check_prime(max_a, max_b),
        check_bizley(max_a, max_b),
        check_catalan_square(max_a, max_b),
        check_theorem1(fam_k, fam_n),
        check_theorem2(fam_k, fam_n),
        check_rule2("upper", fam_k, fam_n),
        check_rule2("lower", fam_k, fam_n),
        check_split_contract(max_a, max_b),
        check_decomposition(max_a, max_b),
        *run_identity_checks(max_a, max_b),
    ]
