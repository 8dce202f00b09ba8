"""
Closed-form constructions of extremal curves
============================================

Three recipes produce curves meeting the Weil bound without any search:
from a prescribed kernel subspace, from the family x^p + ax, and from
an ordinary polynomial over F_p whose palindromic square prescribes a
head.  Every recipe cross-checks itself against eigenvalues and counts.

The command-line equivalents:

    aswcurves construct --family recipe      --field F16 --space 1,2 --t 0
    aswcurves construct --family hermitian   --field F16:p=4 --a 0
    aswcurves construct --family palindromic --field F16 --poly 1,1
"""

from aswcurves.curves import (
    extremal_from_subspace,
    format_curve_spec,
    hermitian_twist,
    palindromic_family,
)
from aswcurves.gf2field import Fp2Subspace, make_field

F16 = make_field(4)

# Prescribe the adjoint kernel {0, 1} inside F_16 and pick the
# parameter t = 0: the recipe certifies an extremal curve around it.
space = Fp2Subspace.from_vectors(F16, [1])
recipe = extremal_from_subspace(space, 0, 4)
print(f"recipe curve: {format_curve_spec(recipe.curve)}")
print(f"  parameter {recipe.parameter:#x}, maximal: {recipe.is_maximal}")
print(f"  eigenvalues {recipe.lpoly.format_roots()}")

# A two-dimensional kernel gives a bigger curve, still settled exactly.
plane = Fp2Subspace.from_vectors(F16, [1, 2])
recipe2 = extremal_from_subspace(plane, 0, 4)
print(f"plane recipe: {format_curve_spec(recipe2.curve)} "
      f"maximal: {recipe2.is_maximal}")

# The family x^p + ax over F_q splits on the trace of a down to
# F_{p^2}: zero trace means extremal, nonzero pins the eigenvalue pair.
K = make_field(4, None, 2)  # F_16 viewed with p = 4
for a in (0, 2, 3):
    rep = hermitian_twist(K, a, 4)
    if rep.is_extremal:
        print(f"a={a}: extremal, maximal={rep.is_maximal}, "
              f"count {rep.lpoly.point_count(1)}")
    else:
        print(f"a={a}: trace {rep.relative_trace:#x} != 0, "
              f"eigenvalues {rep.lpoly.format_roots()[:2]}")

# An ordinary polynomial f over F_p with f(1) = 0 and simple roots
# prescribes a head through its palindromic square, and names the
# fields whose twist family contains extremal members.
fam = palindromic_family(F16, 4, (1, 1))  # f = 1 + x
print(f"palindromic head: {format_curve_spec(fam.head)}")
print(f"  order {fam.order}, tower height {fam.power}, pivot {fam.pivot:#x}")
print(f"  maximal twists {fam.classification.maximal_twists}")
print(f"  minimal twists {fam.classification.minimal_twists}")
