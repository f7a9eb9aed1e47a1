"""Toolkit for horseshoe parameter exploration in the complex Henon family.

Subpackages:

* ``symbolic``: exact combinatorics of shift spaces (transition graphs,
  cyclic words, sliding block codes, coding lifts, permutation reports).
* ``onedim``: quadratic-map numerics (escape radii, parameter regions,
  the 3-box system, Green's function and its loop integral).
* ``henon``: Henon orbit solving, multipliers, codings, real-type
  classification.
* ``continuation``: periodic-orbit continuation along parameter paths,
  loop monodromy, involution and coding-constancy reports.
* ``scanner``: parameter-plane classification and image rendering.
* ``service``: HTTP service exposing scans, codes and loop monodromy.
"""

__version__ = "0.1.0"
