"""Why Sp(m,n) only reaches v(G) - 2.

For Sp(m,n) the bound is min(4m+4n-7, n(n+1)) while v(G) = 4m+4n-5. At
Sp(6,6) the refined bound at Pi_Q = {2..n} stops two short of v(G); once m
grows, the n(n+1) term from a parabolic dropping the last simple root takes
over and the gap widens. This prints the minimizing parabolics and the
bound that wins at each.

    python demos/sp_slack.py
"""

from liebounds import describe, s_lower, v_of_group

for spec in ["Sp(6,6)", "Sp(7,6)", "Sp(8,6)"]:
    d = describe(spec)
    rep = s_lower(d)
    print(f"{spec}: v = {v_of_group(d)}, s_lower = {rep.s_lower}")
    for e in rep.entries:
        if e.pi_Q in rep.argmin:
            parts = [f"r0={e.r0_bound}"] + [f"|Pi-D|*n(D) for D={d_}: {v}" for d_, v in e.superrigidity_bounds]
            if e.refined_bound is not None:
                parts.append(f"refined={e.refined_bound}")
            print(f"  Pi_Q={e.pi_Q}: " + ", ".join(parts))
    print()
