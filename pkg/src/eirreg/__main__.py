"""Allow `python -m eirreg`."""

import sys

from .cli import main

sys.exit(main())
