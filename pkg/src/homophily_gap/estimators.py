"""Estimator-style wrappers around the functional core.

These follow the scikit-learn conventions (constructor stores
hyper-parameters verbatim, ``fit`` computes and exposes trailing-underscore
attributes, ``get_params``/``set_params``/``clone`` work) so graph
analyses can sit inside existing pipeline tooling.  The underlying
computation lives in :mod:`homophily_gap.metrics`,
:mod:`homophily_gap.prune`, and :mod:`homophily_gap.generate`.
"""

from __future__ import annotations

from sklearn.base import BaseEstimator, TransformerMixin

from homophily_gap.generate import ConfigModelSpec, derived_rng, double_configuration_model
from homophily_gap.graph import BLUE, RED, NodeColor, TypedGraph
from homophily_gap.metrics import (
    EXACT,
    balance_check,
    first_order_homophily,
    gap_report,
    verify_gap_theorem,
)
from homophily_gap.prune import prune_bichromatic

__all__ = [
    "check_typed_graph",
    "HomophilyGapAnalyzer",
    "BichromaticPruner",
    "DoubleConfigurationModel",
]


def check_typed_graph(X, *, allow_empty: bool = True) -> TypedGraph:
    """Validate an estimator input and return it as a TypedGraph."""
    if not isinstance(X, TypedGraph):
        raise TypeError(
            f"expected a TypedGraph, got {type(X).__name__}; build one with "
            "homophily_gap.build_graph or homophily_gap.load_graph"
        )
    if not allow_empty and X.n == 0:
        raise ValueError("graph has no nodes")
    return X


def _required_colors(required: str) -> frozenset[NodeColor]:
    table = {
        "both": frozenset({RED, BLUE}),
        "red": frozenset({RED}),
        "blue": frozenset({BLUE}),
    }
    if required not in table:
        raise ValueError(f"required must be one of {sorted(table)}, got {required!r}")
    return table[required]


class HomophilyGapAnalyzer(BaseEstimator):
    """Compute first/second-order homophily statistics for a typed graph.

    Parameters
    ----------
    backend:
        "exact" for rational arithmetic, "float" for binary64.
    singular_policy:
        "strict" fails when a seed node lacks a neighbor of the target
        color; "relaxed" skips such nodes and counts them.
    check_theorem:
        When true, ``fit`` also asserts the positive-gap theorem on the
        input and records the number of checks performed.

    Attributes after ``fit``: ``profile_`` (per-node homophily),
    ``report_`` (all means and gaps), ``balance_`` (cross-edge identity),
    ``theorem_checks_`` (when requested).
    """

    def __init__(
        self,
        backend: str = EXACT,
        singular_policy: str = "strict",
        check_theorem: bool = False,
    ):
        self.backend = backend
        self.singular_policy = singular_policy
        self.check_theorem = check_theorem

    def fit(self, X, y=None):
        graph = check_typed_graph(X)
        self.profile_ = first_order_homophily(graph)
        self.report_ = gap_report(
            graph,
            self.profile_,
            backend=self.backend,
            singular_policy=self.singular_policy,
        )
        self.balance_ = balance_check(graph, self.profile_)
        if self.check_theorem:
            self.theorem_checks_ = verify_gap_theorem(graph, self.profile_)
        return self

    def transform(self, X):
        """Return the fitted report for pipeline-style chaining."""
        if not hasattr(self, "report_"):
            raise RuntimeError("call fit before transform")
        return self.report_


class BichromaticPruner(BaseEstimator, TransformerMixin):
    """Iteratively remove nodes lacking a neighbor of each required color.

    ``transform`` returns the pruned TypedGraph and records ``passes_``,
    ``removed_node_ids_``, and ``retained_fraction_`` from the most
    recent input.
    """

    def __init__(self, required: str = "both"):
        self.required = required

    def fit(self, X, y=None):
        check_typed_graph(X)
        _required_colors(self.required)  # validate eagerly
        return self

    def transform(self, X) -> TypedGraph:
        graph = check_typed_graph(X)
        result = prune_bichromatic(graph, _required_colors(self.required))
        self.passes_ = result.passes
        self.removed_node_ids_ = result.removed_node_ids
        self.retained_fraction_ = result.retained_fraction
        return result.graph


class DoubleConfigurationModel(BaseEstimator):
    """Sampler for typed random graphs with declared degrees and homophily.

    Mirrors ConfigModelSpec's fields as hyper-parameters.  ``sample``
    draws one graph per call; successive calls advance an internal
    counter so each draw gets its own derived stream, and the whole
    sequence is reproducible from ``random_state``.
    """

    def __init__(
        self,
        n: int = 100,
        k: int = 50,
        d: int = 4,
        lambda_r: float = 0.5,
        sigma_r: float = 0.1,
        lambda_b: float = 0.5,
        sigma_b: float = 0.1,
        c: int | None = None,
        max_rewire_attempts: int = 50,
        random_state: int | None = None,
    ):
        self.n = n
        self.k = k
        self.d = d
        self.lambda_r = lambda_r
        self.sigma_r = sigma_r
        self.lambda_b = lambda_b
        self.sigma_b = sigma_b
        self.c = c
        self.max_rewire_attempts = max_rewire_attempts
        self.random_state = random_state

    def _spec(self) -> ConfigModelSpec:
        return ConfigModelSpec(
            n=self.n,
            k=self.k,
            d=self.d,
            lambda_r=self.lambda_r,
            sigma_r=self.sigma_r,
            lambda_b=self.lambda_b,
            sigma_b=self.sigma_b,
            c=self.c,
            max_rewire_attempts=self.max_rewire_attempts,
        )

    def fit(self, X=None, y=None):
        """Validate the parameter set without sampling."""
        self._spec().validate()
        self.spec_ = self._spec()
        return self

    def sample(self):
        if self.random_state is None:
            raise ValueError("random_state must be set before sampling")
        draw = getattr(self, "_draw_count", 0)
        self._draw_count = draw + 1
        rng = derived_rng(self.random_state, draw)
        graph, report = double_configuration_model(self._spec(), rng=rng)
        self.last_report_ = report
        return graph
