#!/usr/bin/env python3
"""
Verification Runner
This script runs every verification suite with the configured defaults and prints one combined report.
"""

import sys
import time

from config import ORACLE_LIMITS, SUITE_DEFAULTS
from equimot import print_report, setup_logging
from errors import EquimotError
from verification_suites import SUITES, summarize


def run_verification():
    print("Equivariant Motivic Zeta Verification")
    print("=" * 50)

    # Display configuration
    print("Configuration:")
    print(f"  Cross-multiplication groups: {SUITE_DEFAULTS['cross_groups']}")
    print(f"  A^1 scenarios (q, r): {SUITE_DEFAULTS['a1_scenarios']}, n <= {SUITE_DEFAULTS['a1_nmax']}")
    print(f"  P^1 scenarios (q, r): {SUITE_DEFAULTS['p1_scenarios']}, n <= {SUITE_DEFAULTS['p1_nmax']}")
    curve = SUITE_DEFAULTS['weil_curve']
    print(f"  Weil harness: y^2 = x^3 + {curve['a']}x + {curve['b']} over F_{curve['p']}")
    print(f"  Enumeration bound: {ORACLE_LIMITS['max_enumeration']} points")
    print()

    setup_logging(verbose=True)
    failed = 0
    try:
        for name, suite in SUITES.items():
            start = time.time()
            df = suite(fallback=True) if name == "p1" else suite()
            print_report(name, df)
            print(f"⏱️  {time.time() - start:.1f}s")
            print()
            failed += summarize(df)["failed"]

    except KeyboardInterrupt:
        print("\nOperation cancelled by user.")
        sys.exit(1)
    except EquimotError as e:
        print(f"\nError occurred: {str(e)}")
        sys.exit(2)

    if failed:
        print(f"❌ {failed} checks failed")
        sys.exit(1)
    print("✅ All verification suites passed")


if __name__ == "__main__":
    run_verification()
