#!/usr/bin/env python3
"""Running the claim harness: decidable theorem instances at small scale.

Four claims ship with the package: all P4-sparse (s,1) obstructions are
cographs; P4-sparse (s,k) obstructions never exceed (s+1)(k+1) vertices;
disconnected minimal polar obstructions are P3 plus a monopolar obstruction
that is not itself a minimal polar one; and spiders with a nonempty head
never obstruct (1,k)-polarity minimally.
"""

from polaritylab import verify_claim

for claim in ("sparse_cog", "bound", "disc_polar", "spider_not_obs"):
    n_max = 9 if claim in ("bound", "disc_polar") else 8
    report = verify_claim(claim, n_max)
    print(f"{claim} at n<={report.n_max}: {'pass' if report.passed else 'FAIL'}")
    for key, value in sorted(report.details.items()):
        print(f"  {key}: {value}")
    for bad in report.counterexamples:
        print(f"  counterexample: {bad}")
    print()
