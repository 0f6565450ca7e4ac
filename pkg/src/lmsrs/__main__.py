"""Run the `lmsrs` command with `python -m lmsrs`."""

import sys

from lmsrs.cli.commands import main

sys.exit(main())
