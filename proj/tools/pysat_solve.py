#!/usr/bin/env python3
"""DIMACS front end for python-sat: prints `s` and `v` lines."""
import sys

from pysat.formula import CNF
from pysat.solvers import Cadical153


def main() -> int:
    if len(sys.argv) != 2:
        print("usage: pysat_solve.py <file.cnf>", file=sys.stderr)
        return 1
    cnf = CNF(from_file=sys.argv[1])
    with Cadical153(bootstrap_with=cnf.clauses) as s:
        if not s.solve():
            print("s UNSATISFIABLE")
            return 20
        model = s.get_model() or []
        print("s SATISFIABLE")
        for i in range(0, len(model), 10):
            print("v " + " ".join(str(x) for x in model[i:i + 10]))
        print("v 0")
        return 10


if __name__ == "__main__":
    sys.exit(main())
