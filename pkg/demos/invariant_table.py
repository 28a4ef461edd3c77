"""Print the invariant table for the smallest member of every catalogued family.

The v and r columns come from counting roots outside parabolic subalgebras;
n and v_cpt are catalogue data (n is re-derived from highest weights where a
classifier exists); r0 and s_lower are computed bounds beyond the table.

    python demos/invariant_table.py
"""

from liebounds.catalogue import default_catalogue
from liebounds.cli import render, table_rows

cat = default_catalogue()
print(render(table_rows(cat), "md"))

# a few families over a range, where the piecewise rows show up
print(render(table_rows(cat, ["SU", "Sp_pq"], (2, 3), (2, 4)), "md"))
print(render(table_rows(cat, ["SOstar"], (4, 8)), "md"))
