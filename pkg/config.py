"""
Configuration file for the equivariant motivic zeta engine

Modify these settings to change oracle bounds, suite scenarios and logging.
"""

# Brute-force oracle bounds
ORACLE_LIMITS = {
    # Largest number of points any enumeration oracle may visit
    "max_enumeration": 10**7,

    # Rows decoded per numpy block while enumerating
    "chunk_size": 1 << 18,

    # Prime fields are limited to p < 2^31
    "max_prime": 2**31
}

# Verification suite defaults
SUITE_DEFAULTS = {
    # Groups checked by the cross-multiplication suite
    "cross_groups": [[1], [2], [3], [4], [2, 2], [6]],

    # Groups whose character multisets of size <= 3 feed zeta_affine_space
    "affine_space_groups": [[2], [3]],
    "affine_space_max_chars": 3,

    # Curve witness consistency: genus values and groups
    "curve_genera": [0, 1, 2],
    "curve_groups": [[1], [2], [3], [2, 2]],

    # (q, r) pairs for the affine line oracle
    "a1_scenarios": [(5, 2), (5, 4), (7, 3), (7, 6), (13, 4)],
    "a1_nmax": 5,

    # (q, r) pairs for the projective line oracle
    "p1_scenarios": [(5, 2), (5, 4), (13, 3), (13, 4), (13, 6)],
    "p1_nmax": 8,

    # Genus-1 Weil harness: y^2 = x^3 + a x + b over F_p
    "weil_curve": {"p": 5, "a": 1, "b": 1},
    "weil_nmax": 8
}

# Randomized property test settings
PROPERTY_TEST_CONFIG = {
    "ring_cases": 1000,
    "realization_cases": 500,
    "series_cases": 200,
    "coefficient_range": (-9, 9),
    "max_monomials": 4,
    "max_symbols": 3
}

# Logging Configuration
LOGGING_CONFIG = {
    "level": "WARNING",
    "format": "%(asctime)s - %(levelname)s - %(message)s",

    # Set to a file name (e.g. "equimot.log") to also log to a file
    "log_file": None
}

# Process exit codes of the command line front end
EXIT_CODES = {
    "ok": 0,
    "failed": 1,
    "usage": 2,
    "resource": 3
}

# Output Configuration
OUTPUT_CONFIG = {
    "json_indent": None,
    "pretty_series_terms": 12,
    "banner_width": 50
}
