# main.py
"""
MAIN - Điểm vào dòng lệnh: python -m youngrep.main <lệnh> ...
"""

import sys

from youngrep.cli import main

if __name__ == "__main__":
    sys.exit(main())
