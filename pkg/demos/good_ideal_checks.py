"""Run the stability and goodness tests on three hand-picked instances.

I is stable over Q when I^2 = QI, and good when additionally Q : I = I.
The three instances show all outcomes: good, stable-but-not-good, and
not even stable (with a witness monomial).
"""

from reesag import Monomial, MonomialIdeal, good_report, maximal_power


def pure_powers(dim, k):
    return MonomialIdeal(dim, (Monomial.variable(dim, j, k) for j in range(dim)))


def show(title, ideal, reduction):
    print(title)
    report = good_report(ideal, reduction)
    print(f"  I = {ideal}")
    print(f"  Q = {reduction}")
    print(f"  I^2 = QI: {report.stable}")
    print(f"  Q:I = {report.colon_result}")
    print(f"  Q:I = I: {report.colon_closed}")
    print(f"  good: {report.good}")
    if report.witness is not None:
        where = "I^2 outside QI" if not report.stable else "Q:I outside I"
        print(f"  witness ({where}): {report.witness}")
    print()


def main():
    show("m^2 with Q = (x^2, y^2, z^2) in three variables: good",
         maximal_power(3, 2), pure_powers(3, 2))

    show("m^3 with Q = (x^3, y^3) in two variables: stable but the colon grows",
         maximal_power(2, 3), pure_powers(2, 3))

    show("m^3 with Q = (x^3, y^3, z^3, w^3) in four variables: not even stable",
         maximal_power(4, 3), pure_powers(4, 3))

    print("The d = 2 colon is m^(ell-1) for every ell:")
    for ell in range(2, 8):
        report = good_report(maximal_power(2, ell), pure_powers(2, ell))
        assert report.colon_result == maximal_power(2, ell - 1)
        print(f"  ell = {ell}: Q:I = m^{ell - 1} with {report.colon_result.num_gens()} generators")


if __name__ == "__main__":
    main()
