"""Scan the ground-state dipole polarizability across nuclear charges.

The scaled combination Z^4 * alpha_1 is charge-independent for a
nonrelativistic atom (21/128 in 2D, 9/2 in 3D); relativity pulls it down,
gently at hydrogen and steeply toward the critical charge.
"""

from diracpol import AtomSpec, critical_charge, nonrel_limit, polarizability_planar, polarizability_spatial


def main() -> None:
    print("planar (2D) atoms")
    print(f"  nonrelativistic scaled limit: {nonrel_limit('planar'):.7f} a0^3")
    print(f"  critical charge:              {critical_charge('planar'):.4f}")
    print(f"  {'Z':>3} {'Z^4*alpha_1':>18} {'ratio to NR':>12} {'series terms':>13}")
    for z in (1, 10, 26, 40, 55, 68):
        result = polarizability_planar(AtomSpec(z, "planar"))
        ratio = result.scaled_Z4 / nonrel_limit("planar")
        print(
            f"  {z:>3} {result.scaled_Z4:>18.15f} {ratio:>12.6f} "
            f"{result.diagnostics.terms_used:>13}"
        )

    print()
    print("spatial (3D) atoms")
    print(f"  nonrelativistic scaled limit: {nonrel_limit('spatial'):.1f} a0^3")
    print(f"  critical charge:              {critical_charge('spatial'):.4f}")
    print(f"  {'Z':>3} {'Z^4*alpha_1':>18} {'ratio to NR':>12}")
    for z in (1, 40, 80, 110, 130):
        result = polarizability_spatial(AtomSpec(z, "spatial"))
        print(
            f"  {z:>3} {result.scaled_Z4:>18.12f} "
            f"{result.scaled_Z4 / nonrel_limit('spatial'):>12.6f}"
        )

    print()
    print("Near the planar critical charge the binding exponent collapses")
    print("and the scaled polarizability heads to zero:")
    z_crit = critical_charge("planar")
    for fraction in (0.9, 0.99, 0.999):
        z = fraction * z_crit
        result = polarizability_planar(AtomSpec(z, "planar"))
        print(f"  Z = {z:8.4f} ({fraction:.1%} of critical): {result.scaled_Z4:.6e}")


if __name__ == "__main__":
    main()
