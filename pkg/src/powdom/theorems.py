"""Closed forms and bounds for connected power domination of graph products,
each paired with an exact oracle check.

Every check returns a :class:`TheoremReport`. Instances outside a statement's
hypotheses are ``skipped`` rather than failed, since a conditional says nothing
about them. Checks are grouped into named suites (see :data:`SUITES`) that
:func:`run_suite` expands into concrete instances.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from functools import partial
from typing import Callable, Iterable, Sequence

from . import families as fam
from .corpus import connected_graphs, random_connected_graph
from .errors import DisconnectedInputError, InvalidParameterError, PowdomError, SizeLimitError
from .graph import Graph, is_bipartite, is_connected, universal_vertices
from .products import cartesian, lexicographic, tensor
from .solvers import DEFAULT_HARD_LIMIT, InvariantKind, invariant

CDS, DS, CPDS, PDS = InvariantKind.CDS, InvariantKind.DS, InvariantKind.CPDS, InvariantKind.PDS
ZFS, CZFS = InvariantKind.ZFS, InvariantKind.CZFS

MATCH = "match"
BOUND_HOLDS = "bound-holds"
BOUND_TIGHT = "bound-tight"
VIOLATION = "violation"
SKIPPED = "skipped"
PASSING = frozenset({MATCH, BOUND_HOLDS, BOUND_TIGHT, SKIPPED})


class HypothesisNotMet(PowdomError):
    """Raised by predictors when an instance lies outside a statement's hypotheses."""


@dataclass(frozen=True)
class TheoremReport:
    theorem_id: str
    instance: str
    hypotheses_met: bool
    reason: str | None
    invariant: str
    relation: str
    predicted: int | None
    oracle: int | None
    verdict: str
    note: str | None = None

    def to_dict(self) -> dict:
        return asdict(self)


def _require(cond: bool, reason: str) -> None:
    if not cond:
        raise HypothesisNotMet(reason)


def _name(G: Graph) -> str:
    return G.name or f"graph(n={G.n},m={G.m})"


def is_empty_pair(H: Graph) -> bool:
    """Structural test for the edgeless graph on two vertices."""
    return H.n == 2 and H.m == 0


def is_triangle(G: Graph) -> bool:
    return G.n == 3 and G.m == 3


def _nontrivial_connected(G: Graph, label: str) -> None:
    if G.n < 2:
        raise InvalidParameterError(f"{label} must have at least two vertices")
    if not is_connected(G):
        raise InvalidParameterError(f"{label} must be connected")


# -- lexicographic product ---------------------------------------------------


def lex_cpds_case(G: Graph, H: Graph) -> tuple[int, int]:
    """Return ``(case, value)`` of the three-case formula for ``G ∘ H``.

    ``G`` must be connected; ``H`` may be disconnected or edgeless. Both need
    at least two vertices.
    """
    _nontrivial_connected(G, "G")
    if H.n < 2:
        raise InvalidParameterError("H must have at least two vertices")
    gc = invariant(G, CDS)
    if gc >= 2:
        return 1, gc
    if invariant(G, DS) != 1:
        raise AssertionError("connected domination number 1 without a universal vertex")
    if invariant(H, DS) == 1 or is_empty_pair(H):
        return 2, 1
    if H.n >= 3:
        return 3, 2
    raise AssertionError(f"no case of the formula covers {_name(G)}∘{_name(H)}")


def lex_cpds_formula(G: Graph, H: Graph) -> int:
    return lex_cpds_case(G, H)[1]


# -- Cartesian product -------------------------------------------------------

CPDS_ORDER_BOUND = "cart-cpds-order-bound"
CZF_CDS_BOUND = "cart-czf-cds-bound"
ZF_DS_BOUND = "cart-zf-ds-bound"

_BOUND_TARGET = {CPDS_ORDER_BOUND: CPDS, CZF_CDS_BOUND: CPDS, ZF_DS_BOUND: PDS}


def cartesian_bounds(G: Graph, H: Graph) -> list[tuple[str, int]]:
    """Upper bounds on ``G □ H`` from factor invariants.

    The last entry bounds the power domination number; the first two bound the
    connected power domination number.
    """
    _nontrivial_connected(G, "G")
    _nontrivial_connected(H, "H")
    return [
        (CPDS_ORDER_BOUND, min(invariant(G, CPDS) * H.n, invariant(H, CPDS) * G.n)),
        (CZF_CDS_BOUND, min(invariant(G, CZFS) * invariant(H, CDS), invariant(H, CZFS) * invariant(G, CDS))),
        (ZF_DS_BOUND, min(invariant(G, ZFS) * invariant(H, DS), invariant(H, ZFS) * invariant(G, DS))),
    ]


@dataclass(frozen=True)
class ExactFamily:
    description: str
    m_min: int
    n_min: int
    build: Callable[[int, int], Graph]
    value: Callable[[int, int], int]
    ordered: bool = False

    def check(self, m: int, n: int) -> None:
        _require(m >= self.m_min and n >= self.n_min,
                 f"needs m >= {self.m_min} and n >= {self.n_min}, got m={m}, n={n}")
        if self.ordered:
            _require(m <= n, f"needs m <= n, got m={m}, n={n}")


def _const(c: int) -> Callable[[int, int], int]:
    return lambda m, n: c


def _cart(left: Callable[[int], Graph], right: Callable[[int], Graph]) -> Callable[[int, int], Graph]:
    return lambda m, n: cartesian(left(m), right(n))


CARTESIAN_FAMILIES: dict[str, ExactFamily] = {
    "kmkn": ExactFamily("K_m□K_n", 2, 2, _cart(fam.complete, fam.complete), lambda m, n: m - 1, ordered=True),
    "km-k1n": ExactFamily("K_m□K_1,n", 3, 3, _cart(fam.complete, fam.star), lambda m, n: min(m - 1, n)),
    "k1x-k1y": ExactFamily("K_1,x□K_1,y", 3, 3, _cart(fam.star, fam.star), lambda m, n: m, ordered=True),
    "table-cm-kn": ExactFamily("C_m□K_n", 3, 3, _cart(fam.cycle, fam.complete), _const(2)),
    "table-cm-wn": ExactFamily("C_m□W_n", 3, 4, _cart(fam.cycle, fam.wheel), _const(2)),
    "table-cm-k1n": ExactFamily("C_m□K_1,n", 3, 3, _cart(fam.cycle, fam.star), _const(2)),
    "table-cm-fn": ExactFamily("C_m□F_n", 3, 3, _cart(fam.cycle, fam.fan), _const(2)),
    "table-wm-wn": ExactFamily("W_m□W_n", 4, 4, _cart(fam.wheel, fam.wheel), _const(3)),
    "table-wm-k1n": ExactFamily("W_m□K_1,n", 4, 4, _cart(fam.wheel, fam.star), _const(3)),
    "table-wm-kn": ExactFamily("W_m□K_n", 4, 4, _cart(fam.wheel, fam.complete), _const(3)),
    "table-fm-fn": ExactFamily("F_m□F_n", 3, 3, _cart(fam.fan, fam.fan), _const(2)),
    "table-fm-kn": ExactFamily("F_m□K_n", 3, 3, _cart(fam.fan, fam.complete), _const(2)),
    "table-fm-k1n": ExactFamily("F_m□K_1,n", 3, 3, _cart(fam.fan, fam.star), _const(2)),
    "table-fm-wn": ExactFamily("F_m□W_n", 3, 4, _cart(fam.fan, fam.wheel), _const(2)),
}

# Table rows whose printed ranges were emended (second parameter bounds n, star is K_1,n).
EMENDED_ROWS = {
    "table-cm-wn": "printed range 'm >= 3 and m >= 4' read as m >= 3, n >= 4",
    "table-cm-k1n": "printed factor K_1,m read as K_1,n",
    "table-wm-k1n": "printed factor K_1,m read as K_1,n",
}


def cartesian_exact(family_id: str, m: int, n: int) -> int:
    """Closed-form ``γ_{P,c}`` of a Cartesian product family; raises :class:`HypothesisNotMet` out of range."""
    try:
        family = CARTESIAN_FAMILIES[family_id]
    except KeyError:
        raise InvalidParameterError(f"unknown Cartesian family {family_id!r}") from None
    family.check(m, n)
    return family.value(m, n)


# -- tensor product ----------------------------------------------------------


def _two_universal_nonbipartite(G: Graph, label: str) -> None:
    _require(not is_bipartite(G), f"{label} is bipartite")
    _require(len(universal_vertices(G)) >= 2, f"{label} has fewer than two universal vertices")


def _ascending_parts(sizes: Sequence[int], label: str, min_parts: int = 3) -> None:
    _require(len(sizes) >= min_parts, f"{label} needs at least {min_parts} parts")
    _require(list(sizes) == sorted(sizes), f"{label} part sizes must be ascending")


def _tensor_two_universal(G: Graph, H: Graph) -> int:
    _two_universal_nonbipartite(G, "G")
    _two_universal_nonbipartite(H, "H")
    return 2


def _tensor_kmkn(m: int, n: int) -> int:
    _require(m >= 3 and n >= 3, f"needs m, n >= 3, got {m}, {n}")
    return 2


def _tensor_k11(extra_g: Sequence[int], extra_h: Sequence[int]) -> int:
    _require(len(extra_g) >= 1 and len(extra_h) >= 1, "needs at least one extra part on each side")
    return 2


def _tensor_gkxy_reduction(G: Graph, x: int, y: int) -> int:
    _require(is_connected(G) and not is_bipartite(G), "G must be connected and non-bipartite")
    _require(2 <= x <= y, f"needs 2 <= x <= y, got {x}, {y}")
    return invariant(tensor(G, fam.complete(2)), CDS)


def _tensor_gkxy(G: Graph, x: int, y: int) -> int:
    _two_universal_nonbipartite(G, "G")
    _require(1 <= x <= y, f"needs 1 <= x <= y, got {x}, {y}")
    if x == y == 1:
        return 1 if is_triangle(G) else 2
    return 3 if x == 1 else 4


def _tensor_g_multipartite(G: Graph, sizes: Sequence[int]) -> int:
    _require(len(universal_vertices(G)) >= 2, "G has fewer than two universal vertices")
    _ascending_parts(sizes, "multipartite factor")
    return 2 if sizes[0] == sizes[1] == 1 else 3


def _tensor_multi_multi(ns: Sequence[int], ms: Sequence[int]) -> int:
    _ascending_parts(ns, "left factor")
    _ascending_parts(ms, "right factor")
    return 2 if ns[0] == ns[1] == 1 and ms[0] == ms[1] == 1 else 3


def _build_gkxy(G: Graph, x: int, y: int) -> Graph:
    return tensor(G, fam.complete_bipartite(x, y))


TENSOR_CASES: dict[str, tuple[Callable[..., int], Callable[..., Graph]]] = {
    "two-universal": (_tensor_two_universal, tensor),
    "kmkn": (_tensor_kmkn, lambda m, n: tensor(fam.complete(m), fam.complete(n))),
    "k11-multipartite": (
        _tensor_k11,
        lambda a, b: tensor(fam.complete_multipartite([1, 1, *a]), fam.complete_multipartite([1, 1, *b])),
    ),
    "g-kxy-reduction": (_tensor_gkxy_reduction, _build_gkxy),
    "g-kxy": (_tensor_gkxy, _build_gkxy),
    "g-multipartite": (_tensor_g_multipartite, lambda G, s: tensor(G, fam.complete_multipartite(s))),
    "multipartite-multipartite": (
        _tensor_multi_multi,
        lambda ns, ms: tensor(fam.complete_multipartite(ns), fam.complete_multipartite(ms)),
    ),
}


def tensor_exact(case_id: str, *args) -> int:
    """Predicted ``γ_{P,c}`` of a tensor product case; raises :class:`HypothesisNotMet` out of range."""
    try:
        predict, _ = TENSOR_CASES[case_id]
    except KeyError:
        raise InvalidParameterError(f"unknown tensor case {case_id!r}") from None
    return predict(*args)


# -- report assembly ---------------------------------------------------------


def _verdict(relation: str, predicted: int, oracle: int, expect_tight: bool) -> str:
    if relation == "==":
        return MATCH if oracle == predicted else VIOLATION
    if relation == ">=":
        return MATCH if oracle >= predicted else VIOLATION
    if oracle > predicted:
        return VIOLATION
    if expect_tight:
        return BOUND_TIGHT if oracle == predicted else VIOLATION
    return BOUND_HOLDS


def _report(theorem_id: str, instance: str, kind: InvariantKind, relation: str,
            predict: Callable[[], int], build: Callable[[], Graph], *,
            expect_tight: bool = False, note: str | None = None,
            hard_limit: int = DEFAULT_HARD_LIMIT) -> TheoremReport:
    skeleton = dict(theorem_id=theorem_id, instance=instance, invariant=kind.value, relation=relation, note=note)
    try:
        predicted = predict()
    except HypothesisNotMet as exc:
        return TheoremReport(**skeleton, hypotheses_met=False, reason=str(exc), predicted=None,
                             oracle=None, verdict=SKIPPED)
    except SizeLimitError as exc:
        return TheoremReport(**skeleton, hypotheses_met=True, reason=f"prediction: {exc}",
                             predicted=None, oracle=None, verdict=SKIPPED)
    try:
        oracle = invariant(build(), kind, hard_limit)
    except (SizeLimitError, DisconnectedInputError) as exc:
        return TheoremReport(**skeleton, hypotheses_met=True, reason=str(exc), predicted=predicted,
                             oracle=None, verdict=SKIPPED)
    return TheoremReport(**skeleton, hypotheses_met=True, reason=None, predicted=predicted,
                         oracle=oracle, verdict=_verdict(relation, predicted, oracle, expect_tight))


def check_lex(G: Graph, H: Graph, hard_limit: int = DEFAULT_HARD_LIMIT) -> TheoremReport:
    case = lex_cpds_case(G, H)[0]
    return _report("lex-cpds-formula", f"{_name(G)}∘{_name(H)}", CPDS, "==",
                   lambda: lex_cpds_formula(G, H), lambda: lexicographic(G, H),
                   note=f"case {case}", hard_limit=hard_limit)


def check_cartesian_exact(family_id: str, m: int, n: int, hard_limit: int = DEFAULT_HARD_LIMIT) -> TheoremReport:
    family = CARTESIAN_FAMILIES[family_id]
    return _report(f"cart-{family_id}" if not family_id.startswith("table") else family_id,
                   f"{family.description} m={m} n={n}", CPDS, "==",
                   lambda: cartesian_exact(family_id, m, n), lambda: family.build(m, n),
                   note=EMENDED_ROWS.get(family_id), hard_limit=hard_limit)


def check_cartesian_bound(bound_id: str, G: Graph, H: Graph, expect_tight: bool = False,
                          hard_limit: int = DEFAULT_HARD_LIMIT) -> TheoremReport:
    def predict() -> int:
        return dict(cartesian_bounds(G, H))[bound_id]

    return _report(bound_id, f"{_name(G)}□{_name(H)}", _BOUND_TARGET[bound_id], "<=",
                   predict, lambda: cartesian(G, H), expect_tight=expect_tight, hard_limit=hard_limit)


_COROLLARY_FAMILIES = {
    "P": (fam.path, 1, 2, 1),
    "C": (fam.cycle, 2, 3, 3),
    "W": (fam.wheel, 3, 4, 3),
    "F": (fam.fan, 2, 3, 3),
}


def corollary_bound(family: str, G: Graph, n: int) -> int:
    """``factor * γ_c(G)`` bound on ``G □ X_n`` for ``X`` in P, C, W, F."""
    _, factor, n_min, g_min = _COROLLARY_FAMILIES[family]
    _nontrivial_connected(G, "G")
    _require(n >= n_min, f"{family}_n needs n >= {n_min}, got {n}")
    _require(G.n >= g_min, f"G needs at least {g_min} vertices")
    return factor * invariant(G, CDS)


def check_corollary(family: str, G: Graph, n: int, hard_limit: int = DEFAULT_HARD_LIMIT) -> TheoremReport:
    build = _COROLLARY_FAMILIES[family][0]
    tight = bool(universal_vertices(G))
    return _report(f"cart-{family.lower()}n-bound", f"{_name(G)}□{family}{n}", CPDS, "<=",
                   lambda: corollary_bound(family, G, n), lambda: cartesian(G, build(n)),
                   expect_tight=tight, note="tightness expected (G has a universal vertex)" if tight else None,
                   hard_limit=hard_limit)


def cartesian_characterization(G: Graph, H: Graph, hard_limit: int = DEFAULT_HARD_LIMIT) -> TheoremReport:
    """Check ``Z_c(H) = 2  <=>  γ_{P,c}(G □ H) = 2`` for ``γ(G) = 1`` and orders >= 4."""
    instance = f"{_name(G)}□{_name(H)}"
    skeleton = dict(theorem_id="cart-czf2-characterization", instance=instance, invariant=CPDS.value,
                    relation="iff")
    reason = None
    if G.n < 4 or H.n < 4:
        reason = "both factors need at least four vertices"
    elif not (is_connected(G) and is_connected(H)):
        reason = "both factors must be connected"
    elif invariant(G, DS) != 1:
        reason = "G has no universal vertex"
    if reason is not None:
        return TheoremReport(**skeleton, hypotheses_met=False, reason=reason, predicted=None, oracle=None,
                             verdict=SKIPPED)
    zc_is_two = invariant(H, CZFS) == 2
    try:
        oracle = invariant(cartesian(G, H), CPDS, hard_limit)
    except SizeLimitError as exc:
        return TheoremReport(**skeleton, hypotheses_met=True, reason=str(exc), predicted=None, oracle=None,
                             verdict=SKIPPED)
    verdict = MATCH if zc_is_two == (oracle == 2) else VIOLATION
    return TheoremReport(**skeleton, hypotheses_met=True, reason=None, predicted=2 if zc_is_two else None,
                         oracle=oracle, verdict=verdict,
                         note=f"Z_c(H)={invariant(H, CZFS)}; predicted value is 2 iff Z_c(H)=2")


def cartesian_lex_path(G: Graph, n: int, m: int, hard_limit: int = DEFAULT_HARD_LIMIT) -> TheoremReport:
    """Check ``γ_{P,c}((G ∘ E_n) □ P_m) = 2`` for ``γ(G) = 1`` and ``n, m >= 2``."""

    def predict() -> int:
        _require(G.n >= 2 and is_connected(G), "G must be connected and non-trivial")
        _require(invariant(G, DS) == 1, "G has no universal vertex")
        _require(n >= 2 and m >= 2, f"needs n, m >= 2, got n={n}, m={m}")
        return 2

    return _report("cart-lex-path", f"({_name(G)}∘E{n})□P{m}", CPDS, "==", predict,
                   lambda: cartesian(lexicographic(G, fam.empty(n)), fam.path(m)), hard_limit=hard_limit)


def check_tensor(case_id: str, *args, kind: InvariantKind = CPDS,
                 hard_limit: int = DEFAULT_HARD_LIMIT) -> TheoremReport:
    predict, build = TENSOR_CASES[case_id]
    instance = f"{case_id}({', '.join(_describe(a) for a in args)})"
    theorem = f"tensor-{case_id}" + ("" if kind is CPDS else f"-{kind.value}")
    return _report(theorem, instance, kind, "==", lambda: predict(*args), lambda: build(*args),
                   hard_limit=hard_limit)


def check_tensor_k2_necessity(G: Graph, H: Graph, hard_limit: int = DEFAULT_HARD_LIMIT) -> TheoremReport:
    """Value 1 forces a ``K_2`` factor: for non-``K_2`` factors the oracle must be >= 2."""

    def predict() -> int:
        _require(not (G.n == 2 and G.m == 1) and not (H.n == 2 and H.m == 1), "a factor is K_2")
        return 2

    return _report("tensor-k2-necessity", f"{_name(G)}×{_name(H)}", CPDS, ">=", predict,
                   lambda: tensor(G, H), hard_limit=hard_limit)


def _describe(arg) -> str:
    if isinstance(arg, Graph):
        return _name(arg)
    if isinstance(arg, (list, tuple)):
        return "[" + ",".join(map(str, arg)) + "]"
    return str(arg)


# -- suites ------------------------------------------------------------------

Job = Callable[[], TheoremReport]


@dataclass(frozen=True)
class SuiteConfig:
    max_size: int
    seeds: int
    hard_limit: int = DEFAULT_HARD_LIMIT


def _universal_corpus(max_order: int) -> list[Graph]:
    """Connected graphs with a universal vertex, at least three vertices."""
    named = [fam.complete(3), fam.star(3), fam.complete(4), fam.fan(3), fam.wheel(4),
             fam.complete_multipartite([1, 1, 2]), fam.star(4), fam.complete(5)]
    return [g for g in named if g.n <= max_order]


def _suite_kmkn(cfg: SuiteConfig) -> Iterable[Job]:
    for m in range(2, cfg.max_size + 1):
        for n in range(m, cfg.max_size + 1):
            yield partial(check_cartesian_exact, "kmkn", m, n, cfg.hard_limit)


def _suite_km_k1n(cfg: SuiteConfig) -> Iterable[Job]:
    for m in range(3, cfg.max_size + 1):
        for n in range(3, min(cfg.max_size, 4) + 1):
            yield partial(check_cartesian_exact, "km-k1n", m, n, cfg.hard_limit)


def _suite_k1x_k1y(cfg: SuiteConfig) -> Iterable[Job]:
    for x in range(3, cfg.max_size + 1):
        for y in range(x, cfg.max_size + 1):
            yield partial(check_cartesian_exact, "k1x-k1y", x, y, cfg.hard_limit)


def _suite_table(cfg: SuiteConfig) -> Iterable[Job]:
    """Each tabulated row from its smallest in-range instance up to ``max_size``."""
    for family_id, family in CARTESIAN_FAMILIES.items():
        if not family_id.startswith("table"):
            continue
        for m in range(family.m_min, max(family.m_min, cfg.max_size) + 1):
            for n in range(family.n_min, max(family.n_min, cfg.max_size) + 1):
                yield partial(check_cartesian_exact, family_id, m, n, cfg.hard_limit)


LEX_G = (fam.path(4), fam.cycle(4), fam.cycle(5), fam.star(3))
LEX_H = (fam.complete(2), fam.empty(2), fam.path(3), fam.cycle(4), fam.complete(3))


def _suite_lex(cfg: SuiteConfig) -> Iterable[Job]:
    for G in LEX_G:
        for H in LEX_H:
            yield partial(check_lex, G, H, cfg.hard_limit)


def _suite_lex_extended(cfg: SuiteConfig) -> Iterable[Job]:
    gs = [G for n in range(2, cfg.max_size + 1) for G in connected_graphs(n)]
    hs = [fam.empty(2), fam.empty(3)] + [H for n in range(2, min(cfg.max_size, 4) + 1) for H in connected_graphs(n)]
    for G in gs:
        for H in hs:
            yield partial(check_lex, G, H, cfg.hard_limit)


def _random_pairs(cfg: SuiteConfig) -> list[tuple[Graph, Graph]]:
    pairs = []
    for seed in range(cfg.seeds):
        rng = random.Random(seed)
        G = random_connected_graph(rng.randint(2, cfg.max_size), rng)
        H = random_connected_graph(rng.randint(2, cfg.max_size), rng)
        pairs.append((G.relabeled(f"R{seed}a"), H.relabeled(f"R{seed}b")))
    return pairs


def _bound_suite(bound_id: str) -> Callable[[SuiteConfig], Iterable[Job]]:
    def suite(cfg: SuiteConfig) -> Iterable[Job]:
        for G, H in _random_pairs(cfg):
            yield partial(check_cartesian_bound, bound_id, G, H, False, cfg.hard_limit)
    return suite


TIGHT_PARTNERS = (fam.path(2), fam.path(3), fam.cycle(3), fam.cycle(4), fam.wheel(4), fam.fan(3))


def _suite_czf_tight(cfg: SuiteConfig) -> Iterable[Job]:
    for G in _universal_corpus(cfg.max_size):
        for H in TIGHT_PARTNERS:
            yield partial(check_cartesian_bound, CZF_CDS_BOUND, G, H, True, cfg.hard_limit)


def _suite_corollaries(cfg: SuiteConfig) -> Iterable[Job]:
    gs = [G for n in range(3, min(cfg.max_size, 4) + 1) for G in connected_graphs(n)]
    for family, (_, _, n_min, _) in _COROLLARY_FAMILIES.items():
        for G in gs:
            for n in range(n_min, n_min + 2):
                yield partial(check_corollary, family, G, n, cfg.hard_limit)


def _suite_characterization(cfg: SuiteConfig) -> Iterable[Job]:
    gs = [G for G in _universal_corpus(cfg.max_size) if G.n >= 4]
    hs = [H for n in range(4, cfg.max_size + 1) for H in connected_graphs(n)]
    hs += [fam.cycle(4), fam.cycle(5), fam.complete(4), fam.wheel(4), fam.fan(3), fam.path(4)]
    for G in gs:
        for H in hs:
            if H.n <= cfg.max_size:
                yield partial(cartesian_characterization, G, H, cfg.hard_limit)


def _suite_lex_path(cfg: SuiteConfig) -> Iterable[Job]:
    for G in (fam.complete(2), fam.complete(3), fam.star(3), fam.path(3)):
        for n in range(2, 4):
            for m in range(2, 4):
                if G.n * n * m <= 6 * cfg.max_size:
                    yield partial(cartesian_lex_path, G, n, m, cfg.hard_limit)


TENSOR_ACCEPTANCE = (
    ("kmkn", 3, 3), ("kmkn", 3, 4), ("kmkn", 4, 3), ("kmkn", 4, 4),
    ("g-kxy", fam.complete(4), 1, 2),
    ("g-kxy", fam.complete(4), 2, 2),
    ("g-kxy", fam.cycle(3), 1, 1),
    ("k11-multipartite", (2,), (2,)),
    ("g-multipartite", fam.complete(4), (1, 2, 2)),
    ("multipartite-multipartite", (1, 1, 2), (1, 2, 2)),
)


def _suite_tensor(cfg: SuiteConfig) -> Iterable[Job]:
    for case in TENSOR_ACCEPTANCE:
        yield partial(check_tensor, *case, hard_limit=cfg.hard_limit)
    for m, n in ((3, 3), (3, 4), (4, 4)):
        yield partial(check_tensor, "kmkn", m, n, kind=PDS, hard_limit=cfg.hard_limit)
    yield partial(check_tensor, "k11-multipartite", (2,), (2,), kind=PDS, hard_limit=cfg.hard_limit)


TWO_UNIVERSAL = (fam.complete(3), fam.complete(4), fam.complete_multipartite([1, 1, 2]),
                 fam.complete_multipartite([1, 1, 3]), fam.complete_multipartite([1, 1, 1, 2]),
                 fam.complete(5))


def _suite_tensor_universal(cfg: SuiteConfig) -> Iterable[Job]:
    corpus = [G for G in TWO_UNIVERSAL if G.n <= cfg.max_size]
    for G in corpus:
        for H in corpus:
            yield partial(check_tensor, "two-universal", G, H, hard_limit=cfg.hard_limit)
    for G in corpus:
        for x, y in ((1, 1), (1, 2), (1, 3), (2, 2), (2, 3)):
            yield partial(check_tensor, "g-kxy", G, x, y, hard_limit=cfg.hard_limit)
        for sizes in ((1, 1, 1), (1, 1, 2), (1, 2, 2), (2, 2, 2), (1, 1, 1, 2)):
            yield partial(check_tensor, "g-multipartite", G, sizes, hard_limit=cfg.hard_limit)


def _suite_tensor_multipartite(cfg: SuiteConfig) -> Iterable[Job]:
    parts = [(1, 1, 1), (1, 1, 2), (1, 2, 2), (2, 2, 2), (1, 1, 1, 1), (1, 1, 1, 2)]
    for ns in parts:
        for ms in parts:
            yield partial(check_tensor, "multipartite-multipartite", ns, ms, hard_limit=cfg.hard_limit)
    for a in ((1,), (2,), (1, 2)):
        for b in ((1,), (2,)):
            yield partial(check_tensor, "k11-multipartite", a, b, hard_limit=cfg.hard_limit)
            yield partial(check_tensor, "k11-multipartite", a, b, kind=PDS, hard_limit=cfg.hard_limit)


def _suite_tensor_reduction(cfg: SuiteConfig) -> Iterable[Job]:
    gs = [G for n in range(3, cfg.max_size + 1) for G in connected_graphs(n) if not is_bipartite(G)]
    for G in gs:
        for x, y in ((2, 2), (2, 3), (3, 3)):
            yield partial(check_tensor, "g-kxy-reduction", G, x, y, hard_limit=cfg.hard_limit)


def _suite_tensor_necessity(cfg: SuiteConfig) -> Iterable[Job]:
    gs = [G for n in range(2, min(cfg.max_size, 4) + 1) for G in connected_graphs(n)]
    for i, G in enumerate(gs):
        for H in gs[i:]:
            if is_connected(tensor(G, H)):
                yield partial(check_tensor_k2_necessity, G, H, cfg.hard_limit)


@dataclass(frozen=True)
class Suite:
    jobs: Callable[[SuiteConfig], Iterable[Job]]
    max_size: int
    description: str


SUITES: dict[str, Suite] = {
    "cartesian-kmkn": Suite(_suite_kmkn, 5, "K_m□K_n = m-1, 2 <= m <= n <= max-size"),
    "cartesian-km-k1n": Suite(_suite_km_k1n, 5, "K_m□K_1,n = min(m-1, n)"),
    "cartesian-k1x-k1y": Suite(_suite_k1x_k1y, 4, "K_1,x□K_1,y = x"),
    "cartesian-table": Suite(_suite_table, 4, "tabulated wheel/fan/cycle products"),
    "cartesian-corollaries": Suite(_suite_corollaries, 4, "G□P_n, G□C_n, G□W_n, G□F_n bounds"),
    "cartesian-characterization": Suite(_suite_characterization, 5, "Z_c(H)=2 iff value 2, γ(G)=1"),
    "cartesian-lex-path": Suite(_suite_lex_path, 5, "(G∘E_n)□P_m = 2, γ(G)=1"),
    "lex-theorem1": Suite(_suite_lex, 5, "three-case lexicographic formula, curated corpus"),
    "lex-extended": Suite(_suite_lex_extended, 4, "lexicographic formula over all small connected G"),
    "bounds-thm2": Suite(_bound_suite(CPDS_ORDER_BOUND), 5, "min{γ_Pc(G)|H|, γ_Pc(H)|G|}, random pairs"),
    "bounds-thm3": Suite(_bound_suite(CZF_CDS_BOUND), 5, "min{Z_c(G)γ_c(H), Z_c(H)γ_c(G)}, random pairs"),
    "bounds-pds": Suite(_bound_suite(ZF_DS_BOUND), 5, "γ_P(G□H) <= min{Z(G)γ(H), Z(H)γ(G)}, random pairs"),
    "bounds-thm3-tight": Suite(_suite_czf_tight, 5, "equality for universal-vertex G with P/C/W/F"),
    "tensor-exact": Suite(_suite_tensor, 5, "closed-form tensor values"),
    "tensor-universal": Suite(_suite_tensor_universal, 5, "two-universal-vertex factors"),
    "tensor-multipartite": Suite(_suite_tensor_multipartite, 5, "multipartite × multipartite"),
    "tensor-reduction": Suite(_suite_tensor_reduction, 5, "γ_Pc(G×K_x,y) = γ_c(G×K_2), non-bipartite G"),
    "tensor-k2-necessity": Suite(_suite_tensor_necessity, 4, "value 1 needs a K_2 factor"),
}


def _call(job: Job) -> TheoremReport:
    return job()


def run_suite(suite_id: str, max_size: int | None = None, seeds: int = 50, *,
              threads: int = 1, hard_limit: int = DEFAULT_HARD_LIMIT) -> list[TheoremReport]:
    """Expand ``suite_id`` (or ``"all"``) into instances and check each one.

    Reports come back in generation order, which is fixed per suite, so the
    output is identical for any ``threads``.
    """
    ids = list(SUITES) if suite_id == "all" else [suite_id]
    jobs: list[Job] = []
    for sid in ids:
        try:
            suite = SUITES[sid]
        except KeyError:
            raise InvalidParameterError(f"unknown suite {sid!r}") from None
        cfg = SuiteConfig(max_size or suite.max_size, seeds, hard_limit)
        jobs.extend(suite.jobs(cfg))
    if threads > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(_call, jobs, chunksize=1))
    return [job() for job in jobs]


def has_violation(reports: Iterable[TheoremReport]) -> bool:
    return any(r.verdict == VIOLATION for r in reports)
