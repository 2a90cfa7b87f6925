"""Recover the operator for C(N,N) from its Toeplitz series and inspect it.

    python3 demos/guess_and_check.py 3
"""
import sys

from pvfuchs.catalog import fixture
from pvfuchs.correlations import correlation_diag
from pvfuchs.diffops import fuchsian_analysis, indicial_exponents
from pvfuchs.odeguess import GuessSpec, guess_ode


def main(N=2):
    spec = GuessSpec.gform(N + 1)
    need = spec.unknowns + spec.safety_margin + 25 + N
    y = correlation_diag(N, order=need)
    print(f"C({N},{N}) = {y.truncate(N / 2 + 3)!r}")

    L = guess_ode(y, spec, extra=20)
    print(f"\nguessed operator of order {L.order}:")
    for i, p in enumerate(L.cleared()):
        print(f"  D^{i}: {p}")
    print("equals catalog fixture:", L == fixture(f"L{N}{N}").value.canonical())

    rep = fuchsian_analysis(L)
    print("\nsingular points:", [str(p) for p in rep.singular_points])
    print("apparent points:", rep.apparent_points or "none")
    for point in (0, 1, "infinity"):
        ex = indicial_exponents(L, point).exponents
        print(f"  exponents at {point}: {', '.join(str(e) for e in ex)}")


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 2)
