"""
Row logging for verification suites
"""
import json
from datetime import datetime
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Optional

import pandas as pd

from hypermatch.shared.communication import format_rational

COLUMNS = [
    'instance', 'kind', 'k', 'bipartite', 'lp_value', 'best_value',
    'ilp_value', 'ratio', 'bound', 'term_count', 'passed',
]


class SuiteLogger:
    """
    Collects one row per solved instance for post-processing

    Rational columns are stored as exact "p/q" strings.
    """

    def __init__(self, experiment_name: str, log_dir: Optional[str] = None):
        self.experiment_name = experiment_name
        self.log_dir = Path(log_dir) if log_dir is not None else None
        timestamp = datetime.now().strftime("%Y%m%d_%H%M%S")
        self.stem = f"{experiment_name}_{timestamp}"
        self.rows: List[Dict[str, Any]] = []
        self.events: List[Dict[str, Any]] = []
        self._worst: Optional[Fraction] = None

    @staticmethod
    def _text(value) -> Optional[str]:
        return None if value is None else format_rational(value)

    def log_row(self, instance: int, kind: str, k: int, bipartite: bool,
                lp_value: Fraction, best_value: Fraction, ratio: Optional[Fraction],
                bound: Fraction, term_count: int = 0, ilp_value: Optional[Fraction] = None,
                passed: bool = True):
        """Record one instance outcome"""
        self.rows.append({
            'instance': instance,
            'kind': kind,
            'k': k,
            'bipartite': bipartite,
            'lp_value': self._text(lp_value),
            'best_value': self._text(best_value),
            'ilp_value': self._text(ilp_value),
            'ratio': self._text(ratio),
            'bound': self._text(bound),
            'term_count': term_count,
            'passed': passed,
        })
        if ratio is not None and (self._worst is None or ratio > self._worst):
            self._worst = ratio

    def log_event(self, instance: int, event_type: str, description: str):
        """Log discrete events such as a raised invariant violation"""
        self.events.append({'instance': instance, 'type': event_type, 'description': description})

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(self.rows, columns=COLUMNS)

    def summary(self) -> Dict[str, Any]:
        frame = self.to_frame()
        failures = int((~frame['passed'].astype(bool)).sum()) if len(frame) else 0
        return {
            'suite': self.experiment_name,
            'runs': len(frame),
            'failures': failures + len(self.events),
            'worst_ratio': self._text(self._worst),
        }

    def save(self, config: Dict[str, Any]) -> Optional[Path]:
        """Write the CSV table and a JSON metadata sidecar; no-op without a log_dir"""
        if self.log_dir is None:
            return None
        self.log_dir.mkdir(parents=True, exist_ok=True)
        table = self.log_dir / f"{self.stem}.csv"
        self.to_frame().to_csv(table, index=False)
        metadata_file = self.log_dir / f"{self.stem}_metadata.json"
        with open(metadata_file, 'w') as f:
            json.dump({
                'experiment': self.experiment_name,
                'config': {key: list(v) if isinstance(v, tuple) else v for key, v in config.items()},
                'events': self.events,
                'summary': self.summary(),
            }, f, indent=2)
        return table
