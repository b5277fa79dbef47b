"""Exhaustive enumeration by genus, verification suites, and probes.

Enumeration walks the standard semigroup tree: the root is the full
semigroup and the children of H are H minus one minimal generator exceeding
the Frobenius number, which visits every numerical semigroup of each genus
exactly once.  An independent gap-set enumerator is kept as the small-genus
oracle.

Suites re-derive the statements they verify from scratch and record
violations; they are expected to come back empty at any genus bound.
Probes record findings without judging them.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import gcd
from multiprocessing import Pool
from typing import Callable, Iterable, Iterator

from .classify import InvariantReport, classify
from .construct import GluingSpec, dual, glue
from .core import NumericalSemigroup, apery_maximals, apery_set, build_semigroup, cm_type, reduced_type
from .errors import OutOfRange, PredictionMismatch, UnknownSuite
from .rohrbach import _search as _extremal_search


def _extremal_value(r: int) -> int:
    # Uncapped twin of rohrbach_number().value for internal sweep bounds;
    # callers short-circuit on the 2r - 1 lower bound first, so this only
    # runs for the rare semigroups that might actually breach the bound.
    return _extremal_search(r)[0]


MAX_GENUS = 40

# Coverage knobs for the gluing sweep; the closed forms are exact, so these
# only bound how much of the infinite gluing space gets sampled.
GLUE_FACTOR_GENUS = 4
GLUE_WEIGHT_CAP = 30
GLUE_CONDUCTOR_CAP = 400


@dataclass
class SweepResult:
    """Outcome of one verification or probe sweep."""

    suite_name: str
    genus_bound: int
    checked: int
    violations: list[tuple[tuple[int, ...], str]] = field(default_factory=list)
    findings: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def _children(H: NumericalSemigroup) -> list[NumericalSemigroup]:
    """Tree children: remove one minimal generator beyond the Frobenius number.

    Removing generator x keeps closure (x is not a sum of two nonzero
    members); the remaining set is generated by the other generators together
    with x + g for each other generator g, plus 2x and 3x.
    """
    out = []
    for x in H.generators:
        if x <= H.frobenius:
            continue
        rest = [g for g in H.generators if g != x]
        gens = rest + [x + g for g in rest] + [2 * x, 3 * x]
        out.append(build_semigroup(gens))
    return out


def _levels(g_max: int) -> Iterator[list[NumericalSemigroup]]:
    level = [build_semigroup([1])]
    yield level
    for _ in range(g_max):
        nxt = []
        for H in level:
            nxt.extend(_children(H))
        nxt.sort(key=lambda H: H.generators)
        yield nxt
        level = nxt


def _expand_chunk(args: tuple[list[tuple[int, ...]], int]) -> dict[int, list[NumericalSemigroup]]:
    roots, g_max = args
    out: dict[int, list[NumericalSemigroup]] = {}
    level = [build_semigroup(g) for g in roots]
    genus = level[0].genus if level else 0
    while level and genus < g_max:
        nxt = []
        for H in level:
            nxt.extend(_children(H))
        genus += 1
        out[genus] = nxt
        level = nxt
    return out


def _chunked(items: list, n: int) -> list[list]:
    if n <= 0:
        n = 1
    size = max(1, -(-len(items) // n))
    return [items[i : i + size] for i in range(0, len(items), size)]


def enumerate_by_genus(
    g_max: int, workers: int = 1
) -> Iterator[NumericalSemigroup]:
    """Yield every numerical semigroup of genus at most ``g_max`` once.

    Deterministic order: by genus, then lexicographically by generators.
    The root (genus 0) is the full semigroup.  With ``workers > 1`` the
    subtrees below a fixed depth are expanded in parallel; the merged output
    is identical to the serial order.
    """
    if not isinstance(g_max, int) or isinstance(g_max, bool) or g_max < 0:
        raise OutOfRange(f"genus bound must be a non-negative integer, got {g_max!r}")
    if g_max > MAX_GENUS:
        raise OutOfRange(f"genus bound {g_max} exceeds the desk-scale limit {MAX_GENUS}")

    if workers <= 1:
        for level in _levels(g_max):
            yield from level
        return

    split = min(5, g_max)
    frontier: list[NumericalSemigroup] = []
    for genus, level in enumerate(_levels(split)):
        yield from level
        if genus == split:
            frontier = level
    if split == g_max or not frontier:
        return

    chunks = _chunked([H.generators for H in frontier], workers * 4)
    with Pool(processes=workers) as pool:
        partials = pool.map(_expand_chunk, [(c, g_max) for c in chunks])
    for genus in range(split + 1, g_max + 1):
        level = []
        for part in partials:
            level.extend(part.get(genus, ()))
        level.sort(key=lambda H: H.generators)
        yield from level


def genus_counts(g_max: int, workers: int = 1) -> list[int]:
    """Semigroup counts per genus 0..g_max."""
    counts = [0] * (g_max + 1)
    for H in enumerate_by_genus(g_max, workers=workers):
        counts[H.genus] += 1
    return counts


def gapset_gap_tuples(genus: int) -> list[tuple[int, ...]]:
    """Independent oracle: all gap sets of the given genus, sorted.

    Enumerates candidate gap sets inside [1, 2*genus - 1] (the Frobenius
    number never exceeds that) and keeps those whose complement is closed
    under addition.  Exponential; intended for small genus only.
    """
    if genus == 0:
        return [()]
    found = []
    for gaps in itertools.combinations(range(1, 2 * genus), genus):
        gapset = set(gaps)
        F = gaps[-1]
        ok = True
        for a in range(1, F):
            if a in gapset:
                continue
            for b in range(a, F - a + 1):
                if b not in gapset and a + b in gapset:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            found.append(gaps)
    return found


# ---------------------------------------------------------------------------
# Per-semigroup suite checks.  Each yields violation strings for one proper
# semigroup; empty output means the statement held.
# ---------------------------------------------------------------------------

def _check_redtype_bound(H: NumericalSemigroup, rep: InvariantReport) -> Iterator[str]:
    if not 1 <= rep.reduced_type <= rep.type:
        yield f"reduced type {rep.reduced_type} outside [1, {rep.type}]"


def _check_nari_vs_length(H: NumericalSemigroup, rep: InvariantReport) -> Iterator[str]:
    pf = rep.pf_set
    t = len(pf)
    pairing = all(pf[i] + pf[t - 2 - i] == rep.conductor - 1 for i in range(t - 1))
    length = 2 * rep.genus == rep.conductor + t - 1
    if pairing != length:
        yield f"pairing test {pairing} but length identity {length}"


def _check_maxred_criteria(H: NumericalSemigroup, rep: InvariantReport) -> Iterator[str]:
    c, e = rep.conductor, rep.multiplicity
    by_count = rep.reduced_type == rep.type
    by_pf = min(rep.pf_set) >= c - e
    ap = apery_set(H, e)
    by_apery = min(apery_maximals(H, e)) >= max(ap) - e + 1
    if not by_count == by_pf == by_apery:
        yield f"criteria disagree: count={by_count} pf={by_pf} apery={by_apery}"


def _check_minmult_pf(H: NumericalSemigroup, rep: InvariantReport) -> Iterator[str]:
    if not rep.minimal_multiplicity:
        return
    g = rep.generators
    expected = tuple(b - g[0] for b in g[1:])
    if rep.pf_set != expected:
        yield f"PF {rep.pf_set} != shifted generators {expected}"
    if rep.max_reduced_type != (g[1] >= rep.conductor):
        yield "maximal reduced type vs second-generator bound"
    if len(g) >= 3 and rep.min_reduced_type != (g[-2] + g[0] - 1 < g[-1]):
        yield "minimal reduced type vs top-generator gap"


def _check_lengthconditions(H: NumericalSemigroup, rep: InvariantReport) -> Iterator[str]:
    colength = rep.conductor - rep.genus
    if colength <= 2 and not rep.max_reduced_type:
        yield f"colength {colength} <= 2 without maximal reduced type"
    if colength == 3 and not rep.minimal_multiplicity and not rep.max_reduced_type:
        yield "colength 3, non-minimal multiplicity, not maximal reduced type"


def _check_ffg_implications(H: NumericalSemigroup, rep: InvariantReport) -> Iterator[str]:
    if not rep.far_flung_gorenstein:
        return
    if rep.reduced_type < 2:
        yield f"reduced type {rep.reduced_type} < 2"
    if rep.type <= 3 and not rep.max_reduced_type:
        yield "type <= 3 without maximal reduced type"
    if rep.type == 4 and not rep.minimal_multiplicity and not rep.max_reduced_type:
        yield "type 4, non-minimal multiplicity, not maximal reduced type"
    if rep.type == 5 and rep.multiplicity >= 9 and not rep.max_reduced_type:
        # This clause is false in general: multiplicity exactly 9 slips
        # through because {0,1,3,4} already sums over 0..8.  First hit is
        # <9,15,16,17,21,28,29> at genus 17; the suite reports it faithfully.
        yield "type 5 with multiplicity >= 9, not maximal reduced type"
    if not rep.max_reduced_type and rep.multiplicity > 2 * (rep.type - 1):
        # Extremal values satisfy n(k) >= 2k - 1, so multiplicities up to
        # 2(type - 1) can never breach the bound; only the rest pay for an
        # exact extremal search.
        bound = _extremal_value(rep.type - 1) + 1
        if rep.multiplicity > bound:
            yield f"multiplicity {rep.multiplicity} > {bound} without maximal reduced type"


def _check_ag_bounds(H: NumericalSemigroup, rep: InvariantReport) -> Iterator[str]:
    if not rep.almost_gorenstein:
        return
    c, e = rep.conductor, rep.multiplicity
    # The pairing argument needs at least one proper pair, so type >= 2.
    if rep.type >= 2 and rep.max_reduced_type and not c <= 2 * e - 1:
        yield f"maximal reduced type but conductor {c} > {2 * e - 1}"
    if not rep.gorenstein and rep.min_reduced_type and not c >= 2 * e + 3:
        yield f"minimal reduced type but conductor {c} < {2 * e + 3}"


def _check_pseudosymm(H: NumericalSemigroup, rep: InvariantReport) -> Iterator[str]:
    if not rep.pseudo_symmetric:
        return
    c, e = rep.conductor, rep.multiplicity
    if rep.max_reduced_type != (c <= 2 * e - 1):
        yield "maximal reduced type vs conductor dichotomy"
    if rep.min_reduced_type != (c > 2 * e - 1):
        yield "minimal reduced type vs conductor dichotomy"


def _check_dual_properties(H: NumericalSemigroup, rep: InvariantReport) -> Iterator[str]:
    B = dual(H)
    if rep.min_reduced_type and not rep.gorenstein:
        if B.multiplicity != rep.multiplicity:
            yield "multiplicity changed under dual despite minimal reduced type"
        if rep.conductor < 2 * rep.multiplicity + 3:
            yield "minimal reduced type with conductor below 2e + 3"
    if rep.min_reduced_type and rep.conductor >= rep.multiplicity + 1:
        if B.multiplicity != rep.multiplicity:
            yield "multiplicity changed under dual despite conductor > multiplicity"
    if rep.gorenstein:
        dropped = B.multiplicity < rep.multiplicity
        if dropped != (rep.generators == (2, 3)):
            yield "Gorenstein multiplicity drop iff the smallest semigroup"
    if not B.is_full and B.multiplicity == rep.multiplicity:
        if reduced_type(B) == 1 and not rep.min_reduced_type:
            yield "dual of minimal reduced type and equal multiplicity, original is not"


PER_H_CHECKS: dict[str, Callable[[NumericalSemigroup, InvariantReport], Iterator[str]]] = {
    "redtype-bound": _check_redtype_bound,
    "nari-vs-length": _check_nari_vs_length,
    "maxred-criteria-agree": _check_maxred_criteria,
    "minmult-pf-formula": _check_minmult_pf,
    "lengthconditions": _check_lengthconditions,
    "ffg-implications": _check_ffg_implications,
    "ag-valuation-bounds": _check_ag_bounds,
    "pseudosymm-crit": _check_pseudosymm,
    "dual-properties": _check_dual_properties,
}

CM_FINITE_EXPECTED = ((3, 4, 5), (3, 5, 7))
REF_AG_EXPECTED = ((3, 7, 11), (3, 8, 13))

ALL_SUITES = tuple(PER_H_CHECKS) + (
    "gluing-formulas",
    "cm-classification",
    "ref-ag-classification",
)


def _suite_cm_classification(
    pairs: list[tuple[NumericalSemigroup, InvariantReport]], g_max: int
) -> SweepResult:
    result = SweepResult("cm-classification", g_max, checked=len(pairs))
    found = []
    for H, rep in pairs:
        if rep.cm_finite and not rep.gorenstein:
            found.append(rep.generators)
            if rep.generators not in CM_FINITE_EXPECTED:
                result.violations.append(
                    (rep.generators, "unexpected non-Gorenstein semigroup with finite CM type")
                )
    for gens in CM_FINITE_EXPECTED:
        if build_semigroup(gens).genus <= g_max and gens not in found:
            result.violations.append((gens, "expected CM-finite semigroup not found"))
    return result


def _ref_ag_families(cap: int = 8) -> Iterator[tuple[int, ...]]:
    for b1 in range(3, cap + 1):
        yield tuple(range(b1, 2 * b1))
    for b1 in range(3, cap + 1):
        yield (b1,) + tuple(range(b1 + 2, 2 * b1)) + (2 * b1 + 1,)
    for b1 in range(4, cap + 1):
        yield (b1, b1 + 1) + tuple(range(b1 + 3, 2 * b1))


def _suite_ref_ag_classification(
    pairs: list[tuple[NumericalSemigroup, InvariantReport]], g_max: int
) -> SweepResult:
    result = SweepResult("ref-ag-classification", g_max, checked=len(pairs))
    found = []
    for H, rep in pairs:
        if rep.almost_gorenstein and not rep.gorenstein and rep.min_reduced_type:
            if rep.ref_finite == "finite":
                found.append(rep.generators)
                if rep.generators not in REF_AG_EXPECTED:
                    result.violations.append(
                        (rep.generators, "unexpected Ref-finite minimal-reduced-type semigroup")
                    )
    for gens in REF_AG_EXPECTED:
        if build_semigroup(gens).genus <= g_max and gens not in found:
            result.violations.append((gens, "expected Ref-finite semigroup not found"))
    for gens in _ref_ag_families():
        H = build_semigroup(gens)
        if H.genus > g_max:
            continue
        result.checked += 1
        rep = classify(H)
        if not (rep.almost_gorenstein and rep.max_reduced_type):
            result.violations.append(
                (rep.generators, "family member not almost Gorenstein of maximal reduced type")
            )
        if rep.ref_finite != "finite":
            result.violations.append(
                (rep.generators, f"family member has ref verdict {rep.ref_finite}")
            )
    return result


def _suite_gluing(
    pairs: list[tuple[NumericalSemigroup, InvariantReport]], g_max: int
) -> SweepResult:
    result = SweepResult("gluing-formulas", g_max, checked=0)
    pool = [H for H, _ in pairs if H.genus <= min(g_max, GLUE_FACTOR_GENUS)]
    for h1 in pool:
        ys = [
            m
            for m in h1.members(GLUE_WEIGHT_CAP + 1)
            if m > 0 and m not in h1.generators
        ]
        for h2 in pool:
            xs = [
                m
                for m in h2.members(GLUE_WEIGHT_CAP + 1)
                if m > 0 and m not in h2.generators
            ]
            for y in ys:
                for x in xs:
                    if gcd(x, y) != 1:
                        continue
                    predicted_c = (
                        x * (h1.conductor - 1) + y * (h2.conductor - 1) + x * y + 1
                    )
                    if predicted_c > GLUE_CONDUCTOR_CAP:
                        continue
                    result.checked += 1
                    tag = (x, y) + h1.generators + (0,) + h2.generators
                    try:
                        glued = glue(GluingSpec(h1, h2, x, y))
                    except PredictionMismatch as exc:
                        result.violations.append((tag, f"closed form failed: {exc}"))
                        continue
                    s = reduced_type(glued)
                    s1, s2 = reduced_type(h1), reduced_type(h2)
                    if s > s1 * s2:
                        result.violations.append((tag, "reduced type exceeds product"))
                    if s1 == 1 and s2 == 1 and s != 1:
                        result.violations.append((tag, "gluing of two minimal reduced types is not minimal"))
                    if s == 1 and not (s1 == 1 or s2 == 1):
                        result.violations.append((tag, "minimal glued reduced type but neither factor minimal"))
                    if s == cm_type(glued):
                        if s1 != cm_type(h1) or s2 != cm_type(h2):
                            result.violations.append((tag, "maximal glued reduced type but a factor is not maximal"))
    return result


def _reports_for(gens_list: list[tuple[int, ...]]) -> list[InvariantReport]:
    return [classify(build_semigroup(g)) for g in gens_list]


def _classified(
    g_max: int, workers: int
) -> list[tuple[NumericalSemigroup, InvariantReport]]:
    sems = [H for H in enumerate_by_genus(g_max) if not H.is_full]
    if workers <= 1 or len(sems) < 64:
        return [(H, classify(H)) for H in sems]
    chunks = _chunked([H.generators for H in sems], workers * 4)
    with Pool(processes=workers) as pool:
        parts = pool.map(_reports_for, chunks)
    reports = [rep for part in parts for rep in part]
    return list(zip(sems, reports))


def run_suites(
    names: Iterable[str], g_max: int, workers: int = 1
) -> list[SweepResult]:
    """Run several suites over one shared enumeration pass."""
    order = list(names)
    for name in order:
        if name not in ALL_SUITES:
            raise UnknownSuite(f"no suite named {name!r}; known: {', '.join(ALL_SUITES)}")
    pairs = _classified(g_max, workers)
    results = []
    for name in order:
        if name == "gluing-formulas":
            results.append(_suite_gluing(pairs, g_max))
        elif name == "cm-classification":
            results.append(_suite_cm_classification(pairs, g_max))
        elif name == "ref-ag-classification":
            results.append(_suite_ref_ag_classification(pairs, g_max))
        else:
            check = PER_H_CHECKS[name]
            result = SweepResult(name, g_max, checked=len(pairs))
            for H, rep in pairs:
                for detail in check(H, rep):
                    result.violations.append((rep.generators, detail))
            results.append(result)
    return results


def run_suite(suite_name: str, g_max: int, workers: int = 1) -> SweepResult:
    """Run one registered verification suite over all semigroups of genus <= g_max."""
    return run_suites([suite_name], g_max, workers=workers)[0]


def probe_open_questions(g_max: int, workers: int = 1) -> SweepResult:
    """Search for counterexamples to the open questions; findings are data.

    Records every far-flung Gorenstein semigroup that misses maximal reduced
    type while either exceeding its embedding dimension in multiplicity or
    meeting the extremal-basis multiplicity bound.
    """
    result = SweepResult("open-question-probe", g_max, checked=0)
    for H, rep in _classified(g_max, workers):
        result.checked += 1
        if not rep.far_flung_gorenstein or rep.max_reduced_type:
            continue
        if rep.multiplicity > rep.embedding_dimension:
            result.findings.append(
                {
                    "generators": list(rep.generators),
                    "question": "multiplicity-above-embedding-dimension",
                    "multiplicity": rep.multiplicity,
                    "embedding_dimension": rep.embedding_dimension,
                    "reduced_type": rep.reduced_type,
                    "type": rep.type,
                }
            )
        bound = _extremal_value(rep.type) - rep.type + 1
        if rep.multiplicity >= bound:
            result.findings.append(
                {
                    "generators": list(rep.generators),
                    "question": "extremal-basis-multiplicity-bound",
                    "multiplicity": rep.multiplicity,
                    "bound": bound,
                    "reduced_type": rep.reduced_type,
                    "type": rep.type,
                }
            )
    return result
