"""Smoke tests for the python bindings: every exported operation is exercised
once against a value that is known exactly."""

import json
import sys

import _degenlocus as dg


def check(cond, label):
    if not cond:
        print("FAIL:", label)
        sys.exit(1)
    print("ok:", label)


def main():
    check(dg.sdisc([["1", "0", "0"], ["0", "2", "0"], ["0", "0", "3"]], "full", 1) == "6",
          "sdisc of diag(1,2,3) at k=1")
    check(dg.sdisc([["1", "0", "0"], ["0", "2", "0"], ["0", "0", "3"]], "full", 0) == "4",
          "sdisc of diag(1,2,3) at k=0")
    check(dg.sdisc_from_eigenvalues(["1", "2", "3"], 0) == "4", "spectral subdiscriminant")

    check(dg.min_poly_degree([["1", "0"], ["0", "1"]], "full") == 1, "minimal polynomial of I")

    sample = json.loads(dg.sample_degenerate("her", 3, [2, 1], ["1", "2"], 11))
    check(sample["space"] == "her" and sample["n"] == 3, "sample layout")
    check(dg.min_poly_degree(sample["entries"], "her") == 2, "sample has two eigenvalues")
    check(dg.sdisc(sample["entries"], "her", 0) == "0", "sample discriminant vanishes")
    again = json.loads(dg.sample_degenerate("her", 3, [2, 1], ["1", "2"], 11))
    check(sample == again, "sampling is deterministic in the seed")

    check(dg.weyl_dim(3, 0) == 10, "weyl_dim(3,0)")
    check(dg.weyl_dim(4, 1) == 45, "weyl_dim(4,1)")

    check(dg.hilbert_series("full", 5) == [1, 9, 45, 145, 370, 811], "full Hilbert series")
    check(dg.hilbert_series("sym", 4) == [1, 6, 21, 49, 94], "sym Hilbert series")
    check(dg.quotient_dimensions("sym", 3, seed=5) == [1, 6, 21, 49], "certified quotient dims")

    cert = dg.sos_certificate_summary(2)
    check(cert["verified"] and cert["count"] == 5 and cert["bound"] == 6, "n=2 certificate")

    cov = json.loads(dg.covariant_c([["1", "0", "0"], ["0", "2", "0"], ["0", "0", "3"]], "full"))
    check(cov["terms"] == {"1,1,1": "2"}, "diagonal covariant is a single monomial")

    check(dg.monomial_kernel_check(8), "monomial algebra check")
    check(dg.relations_check(seed=3, samples=10), "relations on degenerate samples")

    try:
        dg.sdisc([["1", "i"], ["i", "1"]], "her", 0)
        print("FAIL: non-hermitian input accepted")
        sys.exit(1)
    except ValueError:
        print("ok: non-hermitian input rejected")

    print("all python smoke tests passed")


if __name__ == "__main__":
    main()
