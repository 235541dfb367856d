#!/usr/bin/env python3
"""Complexes, fundamental groups, universal covers, local coefficients.

The projective plane is small enough to watch every step: its edge-path
group completes to the order-two group, the double cover is a sphere, and
sign-twisted coefficients see the torsion that plain homology puts in
degree one.
"""

import os

from eqhom.complexes import (LocalSystem, build_cover, fundamental_group,
                             homology, load_complex_file, local_cohomology,
                             local_homology, render_homology)
from eqhom.groups import augmentation_ideal_rep, regular_rep, todd_coxeter

FIX = os.path.join(os.path.dirname(__file__), os.pardir, "fixtures")

rp2 = load_complex_file(os.path.join(FIX, "rp2.cplx"))
print("the 6-vertex projective plane has cells", rp2.counts())
print(render_homology(homology(rp2)))

print()
pres = fundamental_group(rp2)
print("edge-path presentation:", len(pres.generators), "generators,",
      len(pres.relators), "relators")
model = todd_coxeter(pres, 100)
print("coset enumeration gives a group of order", model.order)

cover = build_cover(rp2)
print()
print("universal cover cells:", cover.cover_complex().counts())
print("cover homology (a sphere):")
print(render_homology(homology(cover.cover_complex())))
print("boundary over the group ring squares to zero:",
      cover.ring_boundary_squares_to_zero())
print("deck action free:", cover.deck_action_is_free())

print()
ideal = augmentation_ideal_rep(model)
system = LocalSystem.from_rep(cover, ideal, label="I")
print("homology with coefficients in the augmentation ideal (sign action):")
print(render_homology(local_homology(cover, system)))
print("and its cohomology:")
print(render_homology(local_cohomology(cover, system), prefix="H^"))

print()
reg = LocalSystem.from_rep(cover, regular_rep(model), label="Zpi")
print("group-ring coefficients reproduce the cover (an exact identity):")
print(render_homology(local_homology(cover, reg)))
