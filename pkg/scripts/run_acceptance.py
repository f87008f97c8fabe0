"""Print the acceptance lines without pytest: ``python scripts/run_acceptance.py [1 3 ...]``."""
import runpy
import sys
from pathlib import Path

tests = Path(__file__).resolve().parent.parent / "tests"
sys.path.insert(0, str(tests))
runpy.run_path(str(tests / "test_acceptance.py"), run_name="__main__")
