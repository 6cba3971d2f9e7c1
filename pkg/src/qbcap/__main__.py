"""Allow ``python -m qbcap``."""

import sys

from qbcap.cli import main

sys.exit(main())
