"""
Global configuration and parameters
"""
import os
from typing import Any, Dict


class Config:
    # Oracle parameters
    ORACLE_BUDGET = 2 ** 22  # max search-space size for brute force

    # Exhaustive packing-condition and vertex-certificate checks after every step
    CHECK_INVARIANTS = True

    # Sampling
    DEFAULT_SEED = 0

    # Logging
    LOG_LEVEL = "WARNING"
    LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")
    LOG_FORMAT = "%(asctime)s %(name)s %(levelname)s: %(message)s"

    # Finite geometry generators
    SUPPORTED_PRIME_POWERS = (2, 3, 4, 5, 7, 8, 9)

    # Suite output
    REPORT_DIR = "reports"

    @classmethod
    def from_env(cls) -> "Config":
        """
        Build a config whose budget and log level honour the environment

        Returns:
            Config instance with HYPERMATCH_* overrides applied
        """
        config = cls()
        budget = os.environ.get("HYPERMATCH_ORACLE_BUDGET")
        if budget:
            config.ORACLE_BUDGET = int(budget)
        level = os.environ.get("HYPERMATCH_LOG_LEVEL")
        if level and level.upper() in cls.LOG_LEVELS:
            config.LOG_LEVEL = level.upper()
        return config


class SuiteConfig:
    """Parameters for the random verification suites"""

    @staticmethod
    def lp_relative_suite() -> Dict[str, Any]:
        """General k-hypergraph b-matching, LP-relative check"""
        return {
            'count': 200,
            'k_values': (2, 3, 4),
            'max_vertices': 8,
            'max_edges': 10,
            'b_range': (1, 3),
            'c_range': (1, 2),
            'bipartite': False,
        }

    @staticmethod
    def bipartite_suite() -> Dict[str, Any]:
        """Same ranges as the general suite, with a bipartite witness"""
        params = SuiteConfig.lp_relative_suite()
        params['bipartite'] = True
        return params

    @staticmethod
    def demand_suite() -> Dict[str, Any]:
        """Demand matching under no-clipping"""
        return {
            'count': 200,
            'k_max': 3,
            'max_vertices': 8,
            'max_edges': 10,
            'b_range': (1, 6),
        }

    @staticmethod
    def bounded_color_suite() -> Dict[str, Any]:
        """Colored graphs reduced to 3-hypergraphs"""
        return {
            'count': 100,
            'max_vertices': 7,
            'max_edges': 9,
            'max_colors': 3,
            'budget_range': (1, 3),
            'b_range': (1, 2),
        }

    @staticmethod
    def auction_suite() -> Dict[str, Any]:
        """Small explicit-bid auctions with bundles of at most two items"""
        return {
            'count': 50,
            'max_bidders': 4,
            'max_items': 5,
            'max_bundle': 2,
            'max_bids_per_bidder': 3,
        }


def get_suite_config(name: str) -> Dict[str, Any]:
    """
    Get configuration for a named suite

    Args:
        name: 'lp-relative', 'bipartite', 'demand', 'bounded-color' or 'auction'

    Returns:
        Suite parameter dictionary
    """
    suites = {
        'lp-relative': SuiteConfig.lp_relative_suite,
        'bipartite': SuiteConfig.bipartite_suite,
        'demand': SuiteConfig.demand_suite,
        'bounded-color': SuiteConfig.bounded_color_suite,
        'auction': SuiteConfig.auction_suite,
    }
    if name not in suites:
        raise ValueError(f"Unknown suite: {name}")
    return suites[name]()
