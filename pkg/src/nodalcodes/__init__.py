"""Exact computational engine for binary codes of nodal surfaces.

Subpackages cover packed GF(2) linear algebra (gf2), linear and
bicoloured codes (codes), the finite Radon transform (pgradon), exact
number-field and polynomial arithmetic (exactalg), named code families
(families), enumeration and extension search (search), K3 candidacy and
lattice arithmetic (k3lattice), the 65-node sextic geometry (barth), the
distance-regular graph on 65 vertices (dorohall), and evaluation-map
rank checks (unobstructed).  A FastAPI service (service) and a CLI (cli)
expose the same reports.
"""

__version__ = "0.1.0"
