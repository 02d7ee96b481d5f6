"""
Surveying every connected order on seven elements
=================================================

Runs the positivity, palindromicity and unimodality checks over all prime
orders and writes a CSV to the current directory.
"""

import sys
from pathlib import Path

from chromqsym.verify import survey, write_csv

n = 7
verdicts, census = survey(n)
summary = census.to_json()
for key in ("total", "class1", "class2_only", "not_e_positive", "not_unimodal_conjecture"):
    print(f"{key:24s} {summary[key]}")
print("census ok:", census.ok)

out = Path(f"survey_n{n}.csv")
write_csv(verdicts, out)
print("wrote", out, file=sys.stderr)
