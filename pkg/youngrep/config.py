# config.py
"""
Cấu hình - giới hạn, giá trị mặc định và dữ liệu cố định của S_4
"""

import functools
from pathlib import Path

import yaml

# =========================================
# ENUMERATION LIMITS
# =========================================

# Largest n for which all of S_n is enumerated (10! ~ 3.6M elements)
ENUMERATION_LIMIT = 10

# Oracle (brute-force tabloid model) limits
ORACLE_MAX_N = 8
ORACLE_MAX_DIM = 200

# The fixed "paper" basis listing only exists for S_4
PAPER_DEGREE = 4

# =========================================
# CLI DEFAULTS
# =========================================

DEFAULT_ORDER = "rowlex"
DEFAULT_FORMAT = "text"

# Exit codes
EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_PARSE_ERROR = 2
EXIT_LIMIT = 3

# =========================================
# VERIFICATION
# =========================================

# Homomorphism spot checks for n > 4
RANDOM_PAIRS = 1000
RANDOM_SEED = 20240417

# Exhaustive-check ceilings used by the verify suite
EXHAUSTIVE_HOMOMORPHISM_MAX_N = 4
CLASS_CONSTANCY_MAX_N = 5

# =========================================
# LOGGING
# =========================================

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"
LOG_LEVEL = "WARNING"

# =========================================
# FIXTURES
# =========================================

PAPER_FIXTURES_FILE = Path(__file__).with_name("paper_s4.yaml")


@functools.lru_cache(maxsize=1)
def load_paper_fixtures() -> dict:
    """Đọc dữ liệu S_4 (basis listings, displayed matrices, word table, characters)"""
    with open(PAPER_FIXTURES_FILE, encoding="utf-8") as fh:
        return yaml.safe_load(fh)
