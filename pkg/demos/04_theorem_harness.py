"""Machine-checking the degree-average theorems over a corpus.

Each catalog entry pairs a hypothesis (an exact inequality on a degree
average) with a structural conclusion (normal p-complement or
solvability).  A run reports, per group and prime, whether the entry is
consistent, vacuous, or violated; attained thresholds raise sharpness
flags.  The bundled corpus must produce zero violations.
"""

from chartab import (check_central_product, check_group, construct,
                     fuzz_lemmas, parse_corpus, sharpness_scan, verify_corpus)
from chartab.cli import default_corpus_text

# One group up close: A4 sits exactly at the 3/2 boundary for p = 2.
report = check_group(construct("A(4)"), name="A(4)")
for rec in report.primes:
    for v in rec.verdicts:
        flag = "  <- attains the bound" if v.sharp else ""
        print(f"A(4) p={rec.p}: {v.entry_id:9s} acd={v.acd}  {v.verdict}{flag}")
print()

# The full bundled corpus (this takes a few seconds).
entries, warnings = parse_corpus(default_corpus_text())
summary = verify_corpus(entries)
print(f"corpus: {len(summary.reports)} groups, "
      f"{len(summary.violations)} violations, "
      f"{len(summary.sharpness_witnesses)} sharpness flags")
for group, entry, p in summary.sharpness_witnesses[:10]:
    print(f"  e.g. {group} attains {entry} at p={p}")
print()

# Counting-lemma fuzzing on random subgroups.
lemma_report = fuzz_lemmas(construct("S(5)"), trials=50, seed=7, name="S(5)")
print(f"S(5) fuzz: {lemma_report.subgroups_tested} subgroups, "
      f"{lemma_report.checks} checks, {len(lemma_report.violations)} violations")
print()

# The central-product degree-count identities on SL(2,5) o C4.
cp = check_central_product()
for inst in cp.instances:
    print(inst["group"], "n_d =", inst["n_d"])
print()

# Where do the bounds become unimprovable?  Scan for the minimum average
# among groups that fail each conclusion.
best, witnesses = sharpness_scan(entries, 2, "solvability")
print("minimal acd_2' among nonsolvable corpus groups:", best, "at", witnesses)
best, witnesses = sharpness_scan(entries, 3, "pnilpotency")
print("minimal acd_3' among groups without a normal 3-complement:",
      best, "at", witnesses[:4], "...")
