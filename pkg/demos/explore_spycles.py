"""
Sweeping spycles
================

Spycles glue legs and cycles at one center. Sweep the single-cycle ones
against complements of cycles and write the table as CSV to stdout.
"""

import sys

from fsgraphs.explore import sweep, write_csv

write_csv(sweep("spycle1", "comp(cycle)", 4, 7), sys.stdout)
