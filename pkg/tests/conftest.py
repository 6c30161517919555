"""Shared test configuration: turn on internal self-checks for every run."""

import os

os.environ.setdefault("TRIGIDEAL_SELFCHECK", "1")
