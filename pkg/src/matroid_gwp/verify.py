"""Cross-route consistency checks behind the ``verify`` command."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .betti import (
    _betti_sigma_mask,
    all_betti_tables,
    betti_support_shift_check,
    homology_dims_oracle,
    multigraded_sweep,
)
from .codes import (
    ENUMERATION_BUDGET,
    LinearCode,
    brute_force_distribution,
    evaluate_distribution,
    extended_weight_polynomials,
    is_orthogonal,
)
from .matroid import Matroid, dual, elongate, restrict_mask
from .weights import (
    NAIVE_CAP,
    enumerator,
    enumerator_from_tutte,
    enumerator_via_complements,
    gwp_complement_form,
    gwp_direct,
    gwp_elongation_shift,
    gwp_from_betti,
    gwp_naive,
    higher_weights,
    higher_weights_all_routes,
    tutte,
    tutte_from_enumerator,
)

HOCHSTER_CHECK_CAP = 8


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: str  # "PASS", "FAIL" or "SKIP"
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.status != "FAIL"

    def line(self) -> str:
        return f"{self.status} {self.name}" + (f": {self.detail}" if self.detail else "")


def _check(name: str, fn: Callable[[], str | None | bool]) -> CheckResult:
    try:
        out = fn()
    except Exception as exc:  # a crashing check is a failed check
        return CheckResult(name, "FAIL", f"{type(exc).__name__}: {exc}")
    if out is True or out is None:
        return CheckResult(name, "PASS")
    if out is False:
        return CheckResult(name, "FAIL")
    return CheckResult(name, "FAIL", str(out))


def check_gwp_routes(M: Matroid, naive: bool | None = None):
    direct = gwp_direct(M)
    routes = {
        "complement": gwp_complement_form(M),
        "betti": gwp_from_betti(all_betti_tables(M)),
    }
    if naive or (naive is None and M.n <= NAIVE_CAP):
        routes["naive"] = gwp_naive(M)
    bad = [name for name, polys in routes.items() if polys != direct]
    return f"routes disagree with the direct sweep: {bad}" if bad else None


def check_enumerator_routes(M: Matroid):
    return enumerator(M) == enumerator_via_complements(M)


def check_tutte_roundtrip(M: Matroid):
    t = tutte(M)
    W = enumerator(M)
    if tutte_from_enumerator(W, M.n, M.rank) != t:
        return "tutte_from_enumerator(W) != t"
    if enumerator_from_tutte(t, M.n, M.rank) != W:
        return "enumerator_from_tutte(t) != W"
    return None


def check_tutte_evaluations(M: Matroid):
    t = tutte(M)
    n_ind = sum(M.independent_counts)
    got = (t(1, 1), t(2, 1), t(2, 2))
    want = (len(M.bases), n_ind, 2 ** M.n)
    return None if got == want else f"(t(1,1), t(2,1), t(2,2)) = {got}, expected {want}"


def check_tutte_duality(M: Matroid):
    t, td = tutte(M), tutte(dual(M))
    swapped = {(b, a): c for (a, b), c in t.terms.items()}
    return td.terms == swapped


def check_elongation_shift(M: Matroid):
    prev = gwp_direct(M)
    for level in range(1, M.n - M.rank + 1):
        cur = gwp_direct(elongate(M, level))
        if [gwp_elongation_shift(P) for P in prev] != cur:
            return f"shift fails at level {level}"
        prev = cur
    return None


def check_hierarchies(M: Matroid):
    routes = higher_weights_all_routes(M)
    if len(set(routes)) != 1:
        return f"nullity / Betti / degree routes give {routes}"
    return None


def check_elongation_hierarchy(M: Matroid):
    top = M.n - M.rank
    ws = [higher_weights(elongate(M, l)) for l in range(top + 1)]
    for l in range(top):
        if ws[l + 1] != ws[l][1:]:
            return f"d_i(M_{l + 1}) != d_(i+1)(M_{l})"
    return None


def check_hochster(M: Matroid):
    values, index = multigraded_sweep(M)
    for mask in range(1 << M.n):
        dims = homology_dims_oracle(restrict_mask(M, mask))
        size = mask.bit_count()
        for i in range(M.n):
            # beta_{i,sigma} = dim H_{|sigma| - i - 2}(M|sigma)
            oracle = dims[size - i - 2]
            fast = int(values[0, mask]) if index[0, mask] == i else 0
            if oracle != fast or _betti_sigma_mask(M, i, mask) != oracle:
                return f"sigma mask {mask}, i={i}: fast {fast}, oracle {oracle}"
    return None


def matroid_checks(M: Matroid, naive: bool | None = None) -> list[CheckResult]:
    results = [
        _check("gwp-routes", lambda: check_gwp_routes(M, naive)),
        _check("enumerator-routes", lambda: check_enumerator_routes(M)),
        _check("tutte-enumerator-roundtrip", lambda: check_tutte_roundtrip(M)),
        _check("tutte-evaluations", lambda: check_tutte_evaluations(M)),
        _check("tutte-duality", lambda: check_tutte_duality(M)),
        _check("betti-support-shift", lambda: betti_support_shift_check(M)),
        _check("elongation-coefficient-shift", lambda: check_elongation_shift(M)),
        _check("hierarchy-agreement", lambda: check_hierarchies(M)),
        _check("elongation-hierarchy", lambda: check_elongation_hierarchy(M)),
    ]
    if M.n <= HOCHSTER_CHECK_CAP:
        results.append(_check("hochster-oracle", lambda: check_hochster(M)))
    else:
        results.append(CheckResult("hochster-oracle", "SKIP", f"n > {HOCHSTER_CHECK_CAP}"))
    return results


def code_checks(C: LinearCode, exts=(1, 2), threads: int = 1) -> list[CheckResult]:
    results = [
        _check("code-orthogonality", lambda: is_orthogonal(C)),
        _check("generator-matroid-is-dual", lambda: C.matroid_G == dual(C.matroid_H)),
    ]
    polys = extended_weight_polynomials(C)
    q = C.field.order
    for m in exts:
        name = f"brute-force-oracle-m{m}"
        if q ** (C.k * m) > ENUMERATION_BUDGET:
            results.append(CheckResult(name, "SKIP", "over enumeration budget"))
            continue

        def oracle(m=m):
            dist = brute_force_distribution(C, m, threads=threads)
            expected = evaluate_distribution(polys, q ** m)
            if dist.counts != expected:
                return f"brute force {dist.counts} != polynomials {expected}"
            if dist.total != q ** (C.k * m):
                return f"total {dist.total} != {q ** (C.k * m)}"
            if m == 1 and C.k:
                d1 = higher_weights(C.matroid_H)[0]
                if dist.minimum_distance() != d1:
                    return f"minimum distance {dist.minimum_distance()} != d_1 {d1}"
            return None

        results.append(_check(name, oracle))
    return results


def report(results: list[CheckResult]) -> str:
    passed = sum(r.status == "PASS" for r in results)
    failed = sum(r.status == "FAIL" for r in results)
    lines = [r.line() for r in results]
    lines.append(f"{passed} passed, {failed} failed, {len(results) - passed - failed} skipped")
    return "\n".join(lines)
