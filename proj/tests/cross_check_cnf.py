#!/usr/bin/env python3
"""Cross-check the exported KS CNF with an external SAT solver (PySAT).

usage: cross_check_cnf.py KSCHECK SET EXPECTED

EXPECTED is "sat" or "unsat". Exits 77 when PySAT is not installed so ctest
can mark the test skipped.
"""
import os
import subprocess
import sys
import tempfile

try:
    from pysat.formula import CNF
    from pysat.solvers import Minisat22
except ImportError:
    print("pysat not available; skipping")
    sys.exit(77)


def main():
    kscheck, name, expected = sys.argv[1:4]
    with tempfile.TemporaryDirectory() as tmp:
        path = os.path.join(tmp, name + ".cnf")
        subprocess.run([kscheck, "verify", name, "--cnf", path], check=True, stdout=subprocess.DEVNULL)
        cnf = CNF(from_file=path)
    with Minisat22(bootstrap_with=cnf.clauses) as solver:
        sat = solver.solve()
    verdict = "sat" if sat else "unsat"
    print(f"{name}: {len(cnf.clauses)} clauses over {cnf.nv} variables, external solver says {verdict}")
    sys.exit(0 if verdict == expected else 1)


if __name__ == "__main__":
    main()
