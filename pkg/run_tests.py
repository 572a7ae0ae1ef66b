"""
Test runner for TriEnclose

    python run_tests.py              # everything under tests/
    python run_tests.py solvers      # only tests/solvers
"""

import os
import sys
import unittest

# Add the project root to the Python path
ROOT = os.path.abspath(os.path.dirname(__file__))
sys.path.insert(0, ROOT)

# Celery tasks run eagerly in tests; an empty value also keeps a .env
# broker URL from being picked up
os.environ["CELERY_BROKER_URL"] = ""


def run_tests(subdir=None):
    """Discover and run the tests under tests/ (or one of its packages)"""
    start = os.path.join(ROOT, 'tests', subdir or '')
    loader = unittest.TestLoader()
    suite = loader.discover(start, pattern='test_*.py', top_level_dir=ROOT)

    runner = unittest.TextTestRunner(verbosity=2)
    result = runner.run(suite)

    # Return exit code based on test result
    return 0 if result.wasSuccessful() else 1

if __name__ == '__main__':
    exit_code = run_tests(sys.argv[1] if len(sys.argv) > 1 else None)
    sys.exit(exit_code)
