import json
import logging
import os
from datetime import datetime
from typing import Any, Dict, List, Optional

logger = logging.getLogger(__name__)

DEFAULT_RESULTS_DIR = "verify_results"


class StorageHandler:
    """Verification reports kept as timestamped JSON files in one directory."""

    def __init__(self, storage_dir: str = DEFAULT_RESULTS_DIR):
        self.storage_dir = storage_dir
        os.makedirs(self.storage_dir, exist_ok=True)

    def save_report(self, report: Dict[str, Any], max_n: int) -> Optional[str]:
        """Save a report's JSON payload; returns the file name."""
        if not report:
            return None

        timestamp = datetime.now().strftime("%Y%m%d_%H%M%S")
        filename = f"verify_{timestamp}_n{max_n}.json"
        filepath = os.path.join(self.storage_dir, filename)

        suites = report.get('suites', [])
        with open(filepath, 'w') as f:
            json.dump({
                'metadata': {
                    'run_date': datetime.now().isoformat(),
                    'max_n': max_n,
                    'total_suites': len(suites),
                    'failing_suites': [s['name'] for s in suites if not s.get('ok', False)],
                },
                'report': report
            }, f, indent=2)
        logger.info(f"Saved verification report to {filepath}")
        return filename

    def get_report(self, filename: str) -> Optional[Dict[str, Any]]:
        try:
            filepath = os.path.join(self.storage_dir, filename)
            with open(filepath, 'r') as f:
                return json.load(f)
        except (OSError, json.JSONDecodeError) as e:
            logger.error(f"Error loading report {filename}: {str(e)}")
            return None

    def list_reports(self) -> List[str]:
        if not os.path.exists(self.storage_dir):
            return []
        return sorted(f for f in os.listdir(self.storage_dir) if f.startswith('verify_') and f.endswith('.json'))
